use std::collections::HashSet;

use super::interval::{independent_partitions, PartitionScope, INTERVAL_K_MAX_VERTICES};
use super::{Certificate, RecognitionError, RecognitionVerdict, Witness};
use crate::constructions::{find_umbrella_ordering, solve_difference_constraints, UmbrellaOrdering};
use crate::graph::{Graph, GraphError, PartiteStructure};
use crate::representations::{IntervalKRep, Q};

fn check_size(op: &'static str, g: &Graph) -> Result<(), RecognitionError> {
    if g.n() > INTERVAL_K_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            op,
            n: g.n(),
            max: INTERVAL_K_MAX_VERTICES,
        }
        .into());
    }
    Ok(())
}

fn class_count(class: &[usize]) -> usize {
    class.iter().max().map_or(1, |&c| c + 1)
}

/// Orders in which left endpoints of a proper representation could appear.
///
/// In a proper representation left and right endpoints come in the same
/// order, so the later neighbours of position `i` are exactly positions
/// `i+1..=t_i` with `t_i` non-decreasing. Placing `w` is refused when the
/// neighbourhoods of the vertices up to its last placed cross-class
/// non-neighbour reach beyond what is already placed.
struct OrderSearch<'a> {
    g: &'a Graph,
    cross_non: Vec<u64>,
    order: Vec<usize>,
    /// `reach[i]`: union of the neighbourhoods of `order[0..=i]`.
    reach: Vec<u64>,
    dead: HashSet<(u64, Vec<u64>)>,
    memo: bool,
}

impl<'a> OrderSearch<'a> {
    fn new(g: &'a Graph, class: &[usize], memo: bool) -> Self {
        let n = g.n();
        let cross_non = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| u != v && class[u] != class[v] && !g.has_edge(u, v))
                    .fold(0, |m, u| m | 1 << u)
            })
            .collect();
        OrderSearch {
            g,
            cross_non,
            order: Vec::new(),
            reach: Vec::new(),
            dead: HashSet::new(),
            memo,
        }
    }

    fn placed(&self) -> u64 {
        self.order.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// The neighbourhood union that must already be placed before `w`.
    fn demand(&self, w: usize) -> u64 {
        self.order
            .iter()
            .rposition(|&u| self.cross_non[w] >> u & 1 == 1)
            .map_or(0, |m| self.reach[m])
    }

    fn key(&self, placed: u64) -> (u64, Vec<u64>) {
        let rest = (0..self.g.n()).filter(|&w| placed >> w & 1 == 0);
        (placed, rest.map(|w| self.demand(w)).collect())
    }

    /// Depth-first over valid orders; `accept` sees each complete order and
    /// stops the search by returning true.
    fn run(&mut self, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.n();
        if self.order.len() == n {
            return accept(&self.order);
        }
        let placed = self.placed();
        let key = if self.memo { Some(self.key(placed)) } else { None };
        if key.as_ref().is_some_and(|k| self.dead.contains(k)) {
            return false;
        }
        for w in 0..n {
            if placed >> w & 1 == 1 || self.demand(w) & !placed != 0 {
                continue;
            }
            let prev = self.reach.last().copied().unwrap_or(0);
            self.order.push(w);
            self.reach.push(prev | self.g.row(w));
            let found = self.run(accept);
            self.order.pop();
            self.reach.pop();
            if found {
                return true;
            }
        }
        if let Some(k) = key {
            self.dead.insert(k);
        }
        false
    }
}

/// Proper intervals from a valid order: `L = i`, `R = t_i + 1/2 + i/(4n)`.
fn proper_rep(g: &Graph, order: &[usize], class: &[usize]) -> Result<IntervalKRep, RecognitionError> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let mut iv = vec![(Q::from(0), Q::from(0)); n];
    let mut t = 0;
    for (i, &v) in order.iter().enumerate() {
        let far = g.neighbors(v).iter().map(|u| pos[u]).max().unwrap_or(0);
        t = t.max(i).max(far);
        let i = i as i64;
        let right = Q::from(t as i64) + Q::new(1, 2) + Q::new(i, 4 * n as i64);
        iv[v] = (Q::from(i), right);
    }
    Ok(IntervalKRep::new(class_count(class), iv, class.to_vec())?)
}

/// Proper interval k-graph oracle over vertex orders and maximal partitions.
pub fn is_proper_interval_k_graph(g: &Graph, k: Option<usize>) -> Result<RecognitionVerdict, RecognitionError> {
    check_size("is_proper_interval_k_graph", g)?;
    let n = g.n();
    let bound = k.unwrap_or(n).min(n).max(1);
    let partitions = independent_partitions(g, bound, PartitionScope::Maximal);
    for class in &partitions {
        let mut search = OrderSearch::new(g, class, true);
        let mut found = None;
        search.run(&mut |o| {
            found = Some(o.to_vec());
            true
        });
        if let Some(order) = found {
            let rep = proper_rep(g, &order, class)?;
            debug_assert!(rep.realizes(g) && rep.is_proper());
            return Ok(RecognitionVerdict::member(Witness::Intervals(rep)));
        }
    }
    Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
        "orders for {} partitions into at most {bound} independent classes",
        partitions.len()
    ))))
}

/// Unit interval k-graph oracle. For each candidate left-endpoint order,
/// solves the difference constraints of unit intervals: consecutive lefts
/// at least `e` apart, cross-class neighbours within distance 1,
/// cross-class non-neighbours more than `1 + e` apart, `e = 1/(2n+2)`.
pub fn is_unit_interval_k_graph(g: &Graph, k: Option<usize>) -> Result<RecognitionVerdict, RecognitionError> {
    check_size("is_unit_interval_k_graph", g)?;
    let n = g.n();
    let bound = k.unwrap_or(n).min(n).max(1);
    let partitions = independent_partitions(g, bound, PartitionScope::Maximal);
    let e = Q::new(1, 2 * n as i64 + 2);
    let one = Q::from(1);
    for class in &partitions {
        let mut found = None;
        OrderSearch::new(g, class, false).run(&mut |order| {
            let mut cons = Vec::new();
            for (i, &u) in order.iter().enumerate() {
                if let Some(&next) = order.get(i + 1) {
                    cons.push((u, next, -e));
                }
                for &v in &order[i + 1..] {
                    if g.has_edge(u, v) {
                        cons.push((v, u, one));
                    } else if class[u] != class[v] {
                        cons.push((u, v, -one - e));
                    }
                }
            }
            found = solve_difference_constraints(n, &cons);
            found.is_some()
        });
        if let Some(left) = found {
            let base = left.iter().copied().min().unwrap_or_default();
            let iv = left.iter().map(|&l| (l - base, l - base + one)).collect();
            let rep = IntervalKRep::new(class_count(class), iv, class.clone())?;
            debug_assert!(rep.realizes(g) && rep.is_unit());
            return Ok(RecognitionVerdict::member(Witness::Intervals(rep)));
        }
    }
    Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
        "unit placements for {} partitions into at most {bound} independent classes",
        partitions.len()
    ))))
}

/// A valid vertex ordering for some maximal partition into at most `k`
/// independent classes.
pub fn find_umbrella_ordering_any(g: &Graph, k: Option<usize>) -> Result<Option<UmbrellaOrdering>, RecognitionError> {
    check_size("find_umbrella_ordering_any", g)?;
    let n = g.n();
    let bound = k.unwrap_or(n).min(n).max(1);
    for class in independent_partitions(g, bound, PartitionScope::Maximal) {
        let partite = PartiteStructure::from_assignment(&class);
        if let Some(ord) = find_umbrella_ordering(g, &partite)? {
            return Ok(Some(ord));
        }
    }
    Ok(None)
}
