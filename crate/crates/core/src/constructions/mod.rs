//! Executable versions of the constructive proofs: vertex orderings, unit
//! and permutation models of bipartite graphs, orientations and curves from
//! class-proper representations, and the order-to-intervals pipeline.

mod diff;
mod orient;
mod poset;

use thiserror::Error;

use crate::graph::{Graph, GraphError, PartiteStructure, VertexSet};
use crate::order::OrderError;
use crate::representations::{Discrepancy, IntervalKRep, PermutationRep, RepError, Q};

pub use orient::{function_rep_from_class_proper, orientation_from_class_proper};
pub use poset::{
    build_class_proper_rep, chain_labeling, cover_violation, elimination_ordering,
    intervals_from_labeled_poset, is_chain_labeling, is_elimination_ordering, mu,
    repair_chain_cover, BuildOutcome, ClassProperBuild, DEFAULT_ORIENTATION_LIMIT,
};

pub(crate) use diff::solve_difference_constraints;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("ordering violated at positions ({i}, {j}, {k})")]
    InvalidOrdering { i: usize, j: usize, k: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("interval of {0} properly contains that of {1} in the same class")]
    NotClassProper(usize, usize),
    #[error("interval of {0} properly contains that of {1}")]
    NotProper(usize, usize),
    #[error("expected {expected} classes, found {found}")]
    WrongK { expected: usize, found: usize },
    #[error("representation disagrees with the graph at {0:?}")]
    NotRealized(Discrepancy),
    #[error("labeling fails at step {0}")]
    InvalidLabeling(usize),
    #[error("chain cover not compliant at step {0}")]
    NonCompliantCover(usize),
    #[error("{0}")]
    Infeasible(String),
    /// A configuration the proof rules out was reached.
    #[error("proof check failed ({case}): {detail}")]
    ProofCheck { case: &'static str, detail: String },
}

/// A vertex order and a partition into independent classes such that, for
/// positions `i < j < k` with `v_i v_k` an edge, `v_j` is adjacent to every
/// one of `v_i`, `v_k` lying in a class other than its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmbrellaOrdering {
    pub order: Vec<usize>,
    pub partite: PartiteStructure,
}

impl UmbrellaOrdering {
    pub fn new(g: &Graph, order: Vec<usize>, partite: PartiteStructure) -> Result<Self, ConstructionError> {
        partite.validate(g)?;
        check_permutation(&order, g.n())?;
        if let Some((i, j, k)) = ordering_violation(g, &order, &partite.assignment(g.n())) {
            return Err(ConstructionError::InvalidOrdering { i, j, k });
        }
        Ok(UmbrellaOrdering { order, partite })
    }
}

fn check_permutation(order: &[usize], n: usize) -> Result<(), ConstructionError> {
    let seen: VertexSet = order.iter().copied().filter(|&v| v < n).collect();
    if order.len() != n || seen.len() != n {
        return Err(OrderError::InvalidLabeling(format!("{order:?} is not a permutation of 0..{n}")).into());
    }
    Ok(())
}

/// First violating position triple `(i, j, k)`, scanning by `k`, then `i`,
/// then `j`.
pub fn ordering_violation(g: &Graph, order: &[usize], class: &[usize]) -> Option<(usize, usize, usize)> {
    (0..order.len()).find_map(|k| new_violation(g, order, class, k))
}

/// Violations whose last position is `k`.
fn new_violation(g: &Graph, order: &[usize], class: &[usize], k: usize) -> Option<(usize, usize, usize)> {
    let vk = order[k];
    for i in 0..k {
        let vi = order[i];
        if !g.has_edge(vi, vk) {
            continue;
        }
        for (j, &vj) in order.iter().enumerate().take(k).skip(i + 1) {
            let bad = [vi, vk]
                .iter()
                .any(|&e| class[e] != class[vj] && !g.has_edge(vj, e));
            if bad {
                return Some((i, j, k));
            }
        }
    }
    None
}

/// The lexicographically least valid order for `partite`, if any.
pub fn find_umbrella_ordering(g: &Graph, partite: &PartiteStructure) -> Result<Option<UmbrellaOrdering>, ConstructionError> {
    partite.validate(g)?;
    let class = partite.assignment(g.n());
    let mut order = Vec::with_capacity(g.n());
    Ok(extend_ordering(g, &class, &mut order, 0).then(|| UmbrellaOrdering {
        order,
        partite: partite.clone(),
    }))
}

fn extend_ordering(g: &Graph, class: &[usize], order: &mut Vec<usize>, used: u64) -> bool {
    if order.len() == g.n() {
        return true;
    }
    for v in 0..g.n() {
        if used >> v & 1 == 1 {
            continue;
        }
        order.push(v);
        if new_violation(g, order, class, order.len() - 1).is_none()
            && extend_ordering(g, class, order, used | 1 << v)
        {
            return true;
        }
        order.pop();
    }
    false
}

/// Unit intervals `[L(v), L(v) + 1]` for a bipartite graph from a valid
/// ordering.
///
/// Left endpoints increase along the ordering within each class; across
/// classes the ordering decides which of two non-adjacent vertices lies to
/// the left. The positions solve a system of difference constraints with a
/// margin `e = 1/(2n+2)` (adjacent: `|L(u) - L(v)| <= 1 - e`; non-adjacent
/// across classes: `>= 1 + e`; consecutive in a class: `>= e`), after which a
/// shift by multiples of `e/(2n+1)^2` along the ordering makes all endpoints
/// distinct.
pub fn unit_bigraph_from_ordering(g: &Graph, ord: &UmbrellaOrdering) -> Result<IntervalKRep, ConstructionError> {
    let n = g.n();
    if !g.is_bipartite() || ord.partite.k() > 2 {
        return Err(ConstructionError::NotBipartite);
    }
    let checked = UmbrellaOrdering::new(g, ord.order.clone(), ord.partite.clone())?;
    let class = checked.partite.assignment(n);
    let mut pos = vec![0; n];
    for (p, &v) in checked.order.iter().enumerate() {
        pos[v] = p;
    }
    let e = Q::new(1, 2 * n as i64 + 2);
    let one = Q::from(1);
    // (a, b, w): L(a) - L(b) <= w
    let mut cons = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || pos[u] > pos[v] {
                continue;
            }
            if g.has_edge(u, v) {
                cons.push((u, v, one - e));
                cons.push((v, u, one - e));
            } else if class[u] != class[v] {
                cons.push((u, v, -one - e));
            }
        }
    }
    for c in 0..checked.partite.k().max(1) {
        let members: Vec<usize> = checked.order.iter().copied().filter(|&v| class[v] == c).collect();
        for w in members.windows(2) {
            cons.push((w[0], w[1], -e));
        }
    }
    let left = solve_difference_constraints(n, &cons).ok_or_else(|| {
        ConstructionError::Infeasible(format!("no unit placement respects the ordering {:?}", checked.order))
    })?;
    let shift = e / Q::from((2 * n as i64 + 1).pow(2));
    let base = left.iter().copied().min().unwrap_or_default();
    let intervals = (0..n)
        .map(|v| {
            let l = left[v] - base + shift * Q::from(pos[v] as i64);
            (l, l + one)
        })
        .collect();
    let rep = IntervalKRep::new(2, intervals, class)?;
    if let Some(d) = rep.discrepancy(g)? {
        return Err(ConstructionError::NotRealized(d));
    }
    Ok(rep)
}

/// Segments between two channels from a class-proper 2-class
/// representation: class 0 runs from `l(v)` to `r(v)`, class 1 from `r(v)`
/// to `l(v)`. Endpoints are made distinct first when needed.
pub fn permutation_from_class_proper_2(rep: &IntervalKRep) -> Result<PermutationRep, ConstructionError> {
    if rep.k() != 2 {
        return Err(ConstructionError::WrongK {
            expected: 2,
            found: rep.k(),
        });
    }
    if let Some((u, v)) = rep.class_proper_violation() {
        return Err(ConstructionError::NotClassProper(u, v));
    }
    let rep = if rep.has_distinct_endpoints() {
        rep.clone()
    } else {
        rep.perturbed_distinct()
    };
    let (p1, p2) = (0..rep.n())
        .map(|v| {
            let (l, r) = rep.interval(v);
            if rep.class(v) == 0 {
                (l, r)
            } else {
                (r, l)
            }
        })
        .unzip();
    Ok(PermutationRep::new(p1, p2)?)
}

/// Vertices sorted by their first-channel position; the result is checked
/// against the graph the segments realize.
pub fn ordering_from_permutation(rep: &PermutationRep, partite: &PartiteStructure) -> Result<UmbrellaOrdering, ConstructionError> {
    let mut order: Vec<usize> = (0..rep.n()).collect();
    order.sort_by_key(|&v| rep.p1[v]);
    UmbrellaOrdering::new(&rep.graph(), order, partite.clone())
}

/// Vertices sorted by left endpoint (ties by index) of a proper
/// representation, with the representation's classes as the partition.
pub fn ordering_from_proper_rep(rep: &IntervalKRep) -> Result<UmbrellaOrdering, ConstructionError> {
    if let Some((u, v)) = rep.proper_violation() {
        return Err(ConstructionError::NotProper(u, v));
    }
    let mut order: Vec<usize> = (0..rep.n()).collect();
    order.sort_by_key(|&v| (rep.left(v), v));
    let g = rep.graph();
    let partite = PartiteStructure::from_assignment(rep.classes());
    UmbrellaOrdering::new(&g, order, partite)
}

/// The first and last vertices of a valid ordering, with a shortest path
/// between them whose closed neighbourhood covers every vertex.
pub fn dominating_pair(g: &Graph, ord: &UmbrellaOrdering) -> Result<((usize, usize), Vec<usize>), ConstructionError> {
    if !g.is_connected() || g.n() == 0 {
        return Err(ConstructionError::Disconnected);
    }
    let checked = UmbrellaOrdering::new(g, ord.order.clone(), ord.partite.clone())?;
    let (s, t) = (checked.order[0], *checked.order.last().expect("non-empty"));
    let path = g
        .shortest_path(s, t, g.vertices())
        .ok_or(ConstructionError::Disconnected)?;
    let covered = path
        .iter()
        .fold(VertexSet::EMPTY, |acc, &v| acc.union(g.closed_neighbors(v)));
    if covered != g.vertices() {
        return Err(ConstructionError::ProofCheck {
            case: "dominating pair",
            detail: format!("path {path:?} misses {:?}", g.vertices().difference(covered)),
        });
    }
    Ok(((s, t), path))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip(g: &Graph) -> PartiteStructure {
        g.bipartition().unwrap()
    }

    #[test]
    fn p4_ordering() {
        let g = Graph::path(4);
        let ord = find_umbrella_ordering(&g, &bip(&g)).unwrap().unwrap();
        assert_eq!(ord.order, vec![0, 1, 2, 3]);
        let rep = unit_bigraph_from_ordering(&g, &ord).unwrap();
        assert!(rep.is_unit() && rep.realizes(&g) && rep.has_distinct_endpoints());
        let ((s, t), path) = dominating_pair(&g, &ord).unwrap();
        assert_eq!((s, t), (0, 3));
        assert_eq!(path, vec![0, 1, 2, 3]);
    }

    #[test]
    fn c6_has_no_ordering() {
        let g = Graph::cycle(6);
        assert!(find_umbrella_ordering(&g, &bip(&g)).unwrap().is_none());
        // every one of the 720 orders fails
        let class = bip(&g).assignment(6);
        let mut perm: Vec<usize> = (0..6).collect();
        let mut count = 0;
        permute(&mut perm, 0, &mut |p| {
            count += 1;
            assert!(ordering_violation(&g, p, &class).is_some());
        });
        assert_eq!(count, 720);
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn k2_models() {
        let g = Graph::path(2);
        let ord = find_umbrella_ordering(&g, &bip(&g)).unwrap().unwrap();
        assert_eq!(ord.order, vec![0, 1]);
        let rep = unit_bigraph_from_ordering(&g, &ord).unwrap();
        assert!(rep.is_unit() && rep.realizes(&g));
        let hand = IntervalKRep::new(2, vec![(Q::new(0, 1), Q::new(1, 1)), (Q::new(1, 2), Q::new(3, 2))], vec![0, 1]).unwrap();
        let perm = permutation_from_class_proper_2(&hand).unwrap();
        assert_eq!(perm.p1, vec![Q::new(0, 1), Q::new(3, 2)]);
        assert_eq!(perm.p2, vec![Q::new(1, 1), Q::new(1, 2)]);
        assert!(perm.realizes(&g).unwrap());
        assert_eq!(ordering_from_permutation(&perm, &bip(&g)).unwrap().order, vec![0, 1]);
        assert_eq!(ordering_from_proper_rep(&hand).unwrap().order, vec![0, 1]);
        assert_eq!(dominating_pair(&g, &ord).unwrap().0, (0, 1));
    }

    #[test]
    fn two_k2() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let partite = PartiteStructure::from_assignment(&[0, 1, 0, 1]);
        let ord = UmbrellaOrdering::new(&g, vec![0, 1, 2, 3], partite).unwrap();
        let rep = unit_bigraph_from_ordering(&g, &ord).unwrap();
        assert!(rep.realizes(&g));
        assert!(rep.left(2) > rep.right(0).max(rep.right(1)));
        assert!(dominating_pair(&g, &ord).is_err());
    }

    #[test]
    fn globally_increasing_lefts_can_be_impossible() {
        // path z-u-w-x listed as (u, z, x, w): valid, yet L(u) < L(z) <
        // L(x) < L(w) would put w and u more than a unit apart
        let (u, w, x, z) = (0, 1, 2, 3);
        let g = Graph::from_edges(4, &[(u, w), (u, z), (x, w)]).unwrap();
        let partite = PartiteStructure::from_assignment(&[0, 1, 0, 1]);
        let ord = UmbrellaOrdering::new(&g, vec![u, z, x, w], partite).unwrap();
        let rep = unit_bigraph_from_ordering(&g, &ord).unwrap();
        assert!(rep.realizes(&g) && rep.is_unit());
        assert!(rep.left(u) < rep.left(x) && rep.left(z) < rep.left(w));
    }

    #[test]
    fn star_pair() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ord = find_umbrella_ordering(&g, &bip(&g)).unwrap().unwrap();
        let ((s, t), path) = dominating_pair(&g, &ord).unwrap();
        assert!(path.contains(&0));
        assert_ne!(s, t);
    }

    #[test]
    fn round_trip_through_permutation() {
        let g = Graph::path(3);
        let rep = IntervalKRep::new(
            2,
            vec![(Q::from(0), Q::from(1)), (Q::new(1, 2), Q::new(5, 2)), (Q::from(2), Q::from(3))],
            vec![0, 1, 0],
        )
        .unwrap();
        let perm = permutation_from_class_proper_2(&rep).unwrap();
        assert!(perm.realizes(&g).unwrap());
        let ord = ordering_from_permutation(&perm, &bip(&g)).unwrap();
        let unit = unit_bigraph_from_ordering(&g, &ord).unwrap();
        assert!(unit.realizes(&g) && unit.is_unit());
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Graph::path(3);
        let p = bip(&g);
        assert!(UmbrellaOrdering::new(&g, vec![0, 2, 1], p.clone()).is_ok());
        let p4 = Graph::path(4);
        assert!(matches!(
            UmbrellaOrdering::new(&p4, vec![0, 3, 1, 2], bip(&p4)),
            Err(ConstructionError::InvalidOrdering { .. })
        ));
        let three = IntervalKRep::from_ints(3, &[(0, 1, 0), (0, 1, 1), (0, 1, 2)]).unwrap();
        assert!(matches!(permutation_from_class_proper_2(&three), Err(ConstructionError::WrongK { .. })));
        let nested = IntervalKRep::from_ints(2, &[(0, 3, 0), (1, 2, 0)]).unwrap();
        assert!(permutation_from_class_proper_2(&nested).is_err());
        assert!(ordering_from_proper_rep(&IntervalKRep::from_ints(2, &[(0, 3, 0), (1, 2, 1)]).unwrap()).is_err());
    }
}
