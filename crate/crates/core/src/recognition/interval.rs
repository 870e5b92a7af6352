use std::collections::HashSet;

use super::{Certificate, RecognitionError, RecognitionVerdict, Witness};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::representations::{IntervalKRep, Q};

pub const INTERVAL_GRAPH_MAX_VERTICES: usize = 20;
pub const INTERVAL_K_MAX_VERTICES: usize = 10;
const FILL_IN_MAX_PAIRS: usize = 22;

/// Which independent partitions an interval k-graph oracle tries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionScope {
    /// Only partitions in which no two classes could be merged. Merging
    /// classes drops cross-class constraints, so these suffice.
    Maximal,
    /// Every partition into independent classes.
    All,
}

fn check_size(op: &'static str, g: &Graph, max: usize) -> Result<(), RecognitionError> {
    if g.n() > max {
        return Err(GraphError::TooLarge { op, n: g.n(), max }.into());
    }
    Ok(())
}

/// Maximal cliques by Bron–Kerbosch with pivoting, sorted by bitmask.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    }
    out.sort_by_key(|c| c.0);
    out
}

fn bron_kerbosch(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| (g.neighbors(u).intersection(p).len(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        let mut r2 = r;
        r2.insert(v);
        bron_kerbosch(g, r2, p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Interval graph test: some order of the maximal cliques has every
/// vertex's cliques consecutive. The witness gives each vertex its own
/// class and the span of its cliques.
pub fn is_interval_graph(g: &Graph) -> Result<RecognitionVerdict, RecognitionError> {
    check_size("is_interval_graph", g, INTERVAL_GRAPH_MAX_VERTICES)?;
    let n = g.n();
    let cliques = maximal_cliques(g);
    if cliques.len() > n {
        return Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
            "{} maximal cliques on {n} vertices, so not chordal",
            cliques.len()
        ))));
    }
    let Some(order) = consecutive_clique_order(&cliques) else {
        return Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
            "no consecutive order of {} maximal cliques",
            cliques.len()
        ))));
    };
    let mut span = vec![(usize::MAX, 0); n];
    for (pos, &c) in order.iter().enumerate() {
        for v in cliques[c] {
            span[v].0 = span[v].0.min(pos);
            span[v].1 = pos;
        }
    }
    let intervals = span
        .iter()
        .map(|&(a, b)| (Q::from(a as i64), Q::from(b as i64)))
        .collect();
    let rep = IntervalKRep::new(n.max(1), intervals, (0..n).collect())?;
    debug_assert!(rep.realizes(g));
    Ok(RecognitionVerdict::member(Witness::Intervals(rep)))
}

fn consecutive_clique_order(cliques: &[VertexSet]) -> Option<Vec<usize>> {
    fn extend(
        cliques: &[VertexSet],
        placed: u64,
        opened: VertexSet,
        order: &mut Vec<usize>,
        dead: &mut HashSet<(u64, usize)>,
    ) -> bool {
        if order.len() == cliques.len() {
            return true;
        }
        let last = *order.last().unwrap_or(&usize::MAX);
        if dead.contains(&(placed, last)) {
            return false;
        }
        let closed = match order.last() {
            Some(&l) => opened.difference(cliques[l]),
            None => VertexSet::EMPTY,
        };
        for c in 0..cliques.len() {
            if placed >> c & 1 == 1 || !cliques[c].intersection(closed).is_empty() {
                continue;
            }
            order.push(c);
            if extend(cliques, placed | 1 << c, opened.union(cliques[c]), order, dead) {
                return true;
            }
            order.pop();
        }
        dead.insert((placed, last));
        false
    }
    if cliques.len() > 63 {
        return None;
    }
    let mut order = Vec::new();
    extend(cliques, 0, VertexSet::EMPTY, &mut order, &mut HashSet::new()).then_some(order)
}

/// Partitions of the vertices into at most `max_classes` independent sets,
/// as class assignments in restricted-growth order.
pub fn independent_partitions(g: &Graph, max_classes: usize, scope: PartitionScope) -> Vec<Vec<usize>> {
    fn grow(
        g: &Graph,
        v: usize,
        max: usize,
        assign: &mut Vec<usize>,
        masks: &mut Vec<u64>,
        scope: PartitionScope,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == g.n() {
            let mergeable = scope == PartitionScope::Maximal
                && (0..masks.len()).any(|a| {
                    (a + 1..masks.len()).any(|b| masks[a] & neighbourhood(g, masks[b]) == 0)
                });
            if !mergeable {
                out.push(assign.clone());
            }
            return;
        }
        for c in 0..masks.len() {
            if g.row(v) & masks[c] == 0 {
                masks[c] |= 1 << v;
                assign.push(c);
                grow(g, v + 1, max, assign, masks, scope, out);
                assign.pop();
                masks[c] &= !(1 << v);
            }
        }
        if masks.len() < max {
            masks.push(1 << v);
            assign.push(masks.len() - 1);
            grow(g, v + 1, max, assign, masks, scope, out);
            assign.pop();
            masks.pop();
        }
    }
    let mut out = Vec::new();
    grow(g, 0, max_classes, &mut Vec::new(), &mut Vec::new(), scope, &mut out);
    out
}

fn neighbourhood(g: &Graph, mask: u64) -> u64 {
    VertexSet(mask).iter().fold(0, |acc, v| acc | g.row(v))
}

/// Interval k-graph oracle; `k = None` places no bound on the classes.
pub fn is_interval_k_graph(g: &Graph, k: Option<usize>) -> Result<RecognitionVerdict, RecognitionError> {
    is_interval_k_graph_scoped(g, k, PartitionScope::Maximal)
}

/// For each partition, searches the order of the 2n interval endpoints
/// directly: an interval may open only while every open cross-class
/// interval is a neighbour and no neighbour has closed, and may close only
/// once all its neighbours have opened.
pub fn is_interval_k_graph_scoped(
    g: &Graph,
    k: Option<usize>,
    scope: PartitionScope,
) -> Result<RecognitionVerdict, RecognitionError> {
    check_size("is_interval_k_graph", g, INTERVAL_K_MAX_VERTICES)?;
    let n = g.n();
    if n == 0 {
        let rep = IntervalKRep::new(1, vec![], vec![])?;
        return Ok(RecognitionVerdict::member(Witness::Intervals(rep)));
    }
    let bound = k.unwrap_or(n).min(n);
    let partitions = independent_partitions(g, bound, scope);
    for class in &partitions {
        if let Some(events) = endpoint_order(g, class) {
            let k_used = class.iter().max().map_or(1, |&c| c + 1);
            let mut iv = vec![(Q::from(0), Q::from(0)); n];
            for (t, &(v, open)) in events.iter().enumerate() {
                if open {
                    iv[v].0 = Q::from(t as i64);
                } else {
                    iv[v].1 = Q::from(t as i64);
                }
            }
            let rep = IntervalKRep::new(k_used, iv, class.clone())?;
            debug_assert!(rep.realizes(g));
            return Ok(RecognitionVerdict::member(Witness::Intervals(rep)));
        }
    }
    Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
        "{} partitions into at most {bound} independent classes",
        partitions.len()
    ))))
}

/// Endpoint events `(vertex, is_left)` realizing `g` under `class`.
pub(crate) fn endpoint_order(g: &Graph, class: &[usize]) -> Option<Vec<(usize, bool)>> {
    let n = g.n();
    let full = VertexSet::full(n).0;
    let cross_non: Vec<u64> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| u != v && class[u] != class[v] && !g.has_edge(u, v))
                .fold(0, |m, u| m | 1 << u)
        })
        .collect();
    fn search(
        g: &Graph,
        cross_non: &[u64],
        full: u64,
        opened: u64,
        closed: u64,
        events: &mut Vec<(usize, bool)>,
        dead: &mut HashSet<(u64, u64)>,
    ) -> bool {
        if closed == full {
            return true;
        }
        if dead.contains(&(opened, closed)) {
            return false;
        }
        let open_now = opened & !closed;
        for v in 0..g.n() {
            let bit = 1u64 << v;
            let step = if opened & bit == 0 {
                (cross_non[v] & open_now == 0 && g.row(v) & closed == 0).then_some((opened | bit, closed, true))
            } else if closed & bit == 0 {
                (g.row(v) & !opened == 0).then_some((opened, closed | bit, false))
            } else {
                None
            };
            if let Some((o, c, is_open)) = step {
                events.push((v, is_open));
                if search(g, cross_non, full, o, c, events, dead) {
                    return true;
                }
                events.pop();
            }
        }
        dead.insert((opened, closed));
        false
    }
    let mut events = Vec::with_capacity(2 * n);
    search(g, &cross_non, full, 0, 0, &mut events, &mut HashSet::new()).then_some(events)
}

/// The slower reference oracle: for each partition, add same-class edges
/// in every possible way and ask whether the result is an interval graph.
pub fn interval_k_by_fill_in(g: &Graph, k: Option<usize>, scope: PartitionScope) -> Result<RecognitionVerdict, RecognitionError> {
    check_size("interval_k_by_fill_in", g, INTERVAL_K_MAX_VERTICES)?;
    let n = g.n();
    if n == 0 {
        return is_interval_k_graph(g, k);
    }
    let bound = k.unwrap_or(n).min(n);
    let partitions = independent_partitions(g, bound, scope);
    for class in &partitions {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| class[u] == class[v])
            .collect();
        if pairs.len() > FILL_IN_MAX_PAIRS {
            return Err(RecognitionError::Precondition(format!(
                "fill-in over {} same-class pairs exceeds {FILL_IN_MAX_PAIRS}",
                pairs.len()
            )));
        }
        for mask in 0u64..1 << pairs.len() {
            let mut h = g.clone();
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    h.add_edge(u, v);
                }
            }
            if let Some(Witness::Intervals(r)) = is_interval_graph(&h)?.witness() {
                let k_used = class.iter().max().map_or(1, |&c| c + 1);
                let rep = IntervalKRep::new(k_used, r.intervals().to_vec(), class.clone())?;
                debug_assert!(rep.realizes(g));
                return Ok(RecognitionVerdict::member(Witness::Intervals(rep)));
            }
        }
    }
    Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
        "fill-ins of {} partitions into at most {bound} independent classes",
        partitions.len()
    ))))
}

/// Probe interval graph test: some independent set of nonprobes can
/// receive extra edges among themselves to give an interval graph. Larger
/// nonprobe sets only allow more edges, so maximal independent sets
/// suffice. The witness is the interval graph's representation with the
/// nonprobes in class 0 and every probe in a class of its own.
pub fn is_probe_interval_graph(g: &Graph) -> Result<RecognitionVerdict, RecognitionError> {
    check_size("is_probe_interval_graph", g, INTERVAL_K_MAX_VERTICES)?;
    let n = g.n();
    let mut tried = 0;
    for nonprobes in maximal_cliques(&g.complement()) {
        tried += 1;
        let members = nonprobes.to_vec();
        let pairs: Vec<(usize, usize)> = members
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
            .collect();
        if pairs.len() > FILL_IN_MAX_PAIRS {
            return Err(RecognitionError::Precondition(format!(
                "fill-in over {} nonprobe pairs exceeds {FILL_IN_MAX_PAIRS}",
                pairs.len()
            )));
        }
        for mask in 0u64..1 << pairs.len() {
            let mut h = g.clone();
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    h.add_edge(u, v);
                }
            }
            if let Some(r) = is_interval_graph(&h)?.rep() {
                let mut next = 1;
                let class = (0..n)
                    .map(|v| {
                        if nonprobes.contains(v) {
                            0
                        } else {
                            next += 1;
                            next - 1
                        }
                    })
                    .collect();
                let rep = IntervalKRep::new(next, r.intervals().to_vec(), class)?;
                debug_assert!(rep.realizes(g));
                return Ok(RecognitionVerdict::member(Witness::Intervals(rep)));
            }
        }
    }
    Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
        "fill-ins of {tried} maximal nonprobe sets"
    ))))
}
