use std::collections::HashSet;
use std::ops::ControlFlow;

use super::ConstructionError;
use crate::comparability::{for_each_transitive_orientation, Orientation};
use crate::graph::{is_complete_multipartite, Graph, GraphError, VertexSet};
use crate::order::{ChainCover, Labeling, Poset};
use crate::representations::{IntervalKRep, Q};

/// Default cap on transitive orientations tried by
/// [`build_class_proper_rep`].
pub const DEFAULT_ORIENTATION_LIMIT: usize = 1_000_000;

const ELIMINATION_MAX_VERTICES: usize = 12;

fn too_large(op: &'static str, n: usize, max: usize) -> ConstructionError {
    ConstructionError::Graph(GraphError::TooLarge { op, n, max })
}

fn neighbourhood_ok(g: &Graph, v: usize, remaining: VertexSet) -> bool {
    let s = g.closed_neighbors(v).intersection(remaining);
    let (h, _) = g.induced(s).expect("subset of the vertex set");
    is_complete_multipartite(&h).is_some()
}

/// Each `v_i` has a complete multipartite closed neighbourhood once
/// `v_1..v_{i-1}` are deleted.
pub fn is_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut remaining = g.vertices();
    for &v in order {
        if !remaining.contains(v) || !neighbourhood_ok(g, v, remaining) {
            return false;
        }
        remaining.remove(v);
    }
    remaining.is_empty()
}

/// The lexicographically least elimination ordering, by backtracking with
/// memoized dead ends (n <= 12).
pub fn elimination_ordering(g: &Graph) -> Result<Option<Vec<usize>>, ConstructionError> {
    if g.n() > ELIMINATION_MAX_VERTICES {
        return Err(too_large("elimination_ordering", g.n(), ELIMINATION_MAX_VERTICES));
    }
    let mut order = Vec::new();
    let mut dead = HashSet::new();
    let ok = eliminate(g.vertices(), &mut order, &mut dead, &|v, rem| neighbourhood_ok(g, v, rem));
    Ok(ok.then_some(order))
}

fn eliminate(
    remaining: VertexSet,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
    step_ok: &dyn Fn(usize, VertexSet) -> bool,
) -> bool {
    if remaining.is_empty() {
        return true;
    }
    if dead.contains(&remaining.0) {
        return false;
    }
    for v in remaining {
        if !step_ok(v, remaining) {
            continue;
        }
        order.push(v);
        let mut rest = remaining;
        rest.remove(v);
        if eliminate(rest, order, dead, step_ok) {
            return true;
        }
        order.pop();
    }
    dead.insert(remaining.0);
    false
}

fn chain_step_ok(p: &Poset, x: usize, remaining: VertexSet) -> bool {
    p.is_minimal_in(x, remaining)
        && p
            .decompose_into_chains(p.incomparables(x).intersection(remaining))
            .is_some()
}

/// First zero-based step at which `lab` fails: `v_i` not minimal in the
/// remaining suborder, or its incomparables there admit no decomposition
/// into chains. `None` for a valid labeling.
pub fn is_chain_labeling(p: &Poset, lab: &Labeling) -> Option<usize> {
    if lab.order.len() != p.n() {
        return Some(0);
    }
    let mut remaining = p.elements();
    for (i, &x) in lab.order.iter().enumerate() {
        if !remaining.contains(x) || !chain_step_ok(p, x, remaining) {
            return Some(i);
        }
        remaining.remove(x);
    }
    None
}

/// The lexicographically least labeling with every `v_i` minimal in the
/// remaining suborder and its incomparables there decomposable into chains.
pub fn chain_labeling(p: &Poset) -> Result<Option<Labeling>, ConstructionError> {
    if p.n() > ELIMINATION_MAX_VERTICES {
        return Err(too_large("chain_labeling", p.n(), ELIMINATION_MAX_VERTICES));
    }
    let mut order = Vec::new();
    let mut dead = HashSet::new();
    let ok = eliminate(p.elements(), &mut order, &mut dead, &|x, rem| chain_step_ok(p, x, rem));
    Ok(ok.then_some(Labeling { order }))
}

/// Decomposition of the incomparables of `v_i` among `v_i..v_n`.
fn step_chains(p: &Poset, lab: &Labeling, i: usize) -> Option<Vec<Vec<usize>>> {
    let remaining: VertexSet = lab.order[i..].iter().copied().collect();
    p.decompose_into_chains(p.incomparables(lab.order[i]).intersection(remaining))
}

/// First step `i` at which a chain of the decomposition of the remaining
/// incomparables of `v_i` meets two cover chains.
pub fn cover_violation(p: &Poset, lab: &Labeling, cover: &ChainCover) -> Option<usize> {
    let class = cover.assignment(p.n());
    (0..p.n()).find(|&i| match step_chains(p, lab, i) {
        Some(chains) => chains
            .iter()
            .any(|c| c.iter().any(|&x| class[x] != class[c[0]])),
        None => true,
    })
}

/// Splices cover chains until every chain of every step's decomposition
/// lies in one cover chain.
///
/// At the least violating step `i`, take the first pair `x < y` along an
/// offending decomposition chain that changes cover chain; with `x = x_j`
/// in `X` and `y = y_l` in `Y`, replace `X`, `Y` by
/// `x_1..x_j y_l..` and `y_1..y_{l-1} x_{j+1}..`. Each configuration the
/// argument excludes is checked and reported as a
/// [`ConstructionError::ProofCheck`] naming the case.
pub fn repair_chain_cover(p: &Poset, lab: &Labeling, cover: &ChainCover) -> Result<ChainCover, ConstructionError> {
    cover.validate(p)?;
    if let Some(i) = is_chain_labeling(p, lab) {
        return Err(ConstructionError::InvalidLabeling(i));
    }
    let mut cover = cover.clone();
    let n = p.n();
    let mut budget = n * n * n + 8;
    while let Some(i) = cover_violation(p, lab, &cover) {
        if budget == 0 {
            return Err(ConstructionError::ProofCheck {
                case: "termination",
                detail: format!("no progress at step {i}"),
            });
        }
        budget -= 1;
        let vi = lab.order[i];
        let class = cover.assignment(n);
        let chains = step_chains(p, lab, i).expect("labeling checked");
        let (x, y) = chains
            .iter()
            .find_map(|c| {
                c.windows(2)
                    .find(|w| class[w[0]] != class[w[1]])
                    .map(|w| (w[0], w[1]))
            })
            .expect("violation located");
        let (cx, cy) = (class[x], class[y]);
        let xs = cover.chains[cx].clone();
        let ys = cover.chains[cy].clone();
        let j = xs.iter().position(|&e| e == x).expect("x in its chain");
        let l = ys.iter().position(|&e| e == y).expect("y in its chain");
        if let Some(&next) = xs.get(j + 1) {
            if !(p.lt(vi, next) || p.lt(y, next)) {
                return Err(ConstructionError::ProofCheck {
                    case: "successor of x",
                    detail: format!("step {i}: {next} above neither {vi} nor {y}"),
                });
            }
        }
        if let (Some(&prev), Some(&next)) = (l.checked_sub(1).and_then(|t| ys.get(t)), xs.get(j + 1)) {
            if !p.lt(prev, next) {
                return Err(ConstructionError::ProofCheck {
                    case: "predecessor of y",
                    detail: format!("step {i}: {prev} not below {next}"),
                });
            }
        }
        let new_x: Vec<usize> = xs[..=j].iter().chain(&ys[l..]).copied().collect();
        let new_y: Vec<usize> = ys[..l].iter().chain(&xs[j + 1..]).copied().collect();
        cover.chains[cx] = new_x;
        cover.chains[cy] = new_y;
        cover.chains.retain(|c| !c.is_empty());
        cover.validate(p)?;
        if let Some(r) = cover_violation(p, lab, &cover).filter(|&r| r < i) {
            let pair_in = |a: usize, b: usize| {
                step_chains(p, lab, r)
                    .into_iter()
                    .flatten()
                    .any(|c| c.windows(2).any(|w| w == [a, b]))
            };
            let case = if xs.get(j + 1).is_some_and(|&nx| pair_in(x, nx)) {
                "Case 1"
            } else if l > 0 && pair_in(ys[l - 1], y) {
                "Case 2"
            } else {
                "earlier step"
            };
            return Err(ConstructionError::ProofCheck {
                case,
                detail: format!("splice at step {i} broke step {r}"),
            });
        }
    }
    Ok(cover)
}

/// `mu[i]` (1-based, per position) is the least position `j` with
/// `v_j || v_i`, counting `j = i`.
pub fn mu(p: &Poset, lab: &Labeling) -> Vec<usize> {
    let n = p.n();
    (0..n)
        .map(|i| {
            let vi = lab.order[i];
            (0..n)
                .find(|&j| j == i || !p.comparable(vi, lab.order[j]))
                .expect("j = i qualifies")
                + 1
        })
        .collect()
}

/// Interval `[mu(i) - (1 - i/n), i]` for `v_i`, class = its chain in the
/// compliant `cover`.
pub fn intervals_from_labeled_poset(p: &Poset, lab: &Labeling, cover: &ChainCover) -> Result<IntervalKRep, ConstructionError> {
    cover.validate(p)?;
    if let Some(i) = is_chain_labeling(p, lab) {
        return Err(ConstructionError::InvalidLabeling(i));
    }
    if let Some(i) = cover_violation(p, lab, cover) {
        return Err(ConstructionError::NonCompliantCover(i));
    }
    let n = p.n();
    let m = mu(p, lab);
    let class = cover.assignment(n);
    let mut intervals = vec![(Q::from(0), Q::from(0)); n];
    for (pos, &v) in lab.order.iter().enumerate() {
        let i = pos as i64 + 1;
        let left = Q::from(m[pos] as i64) - (Q::from(1) - Q::new(i, n as i64));
        intervals[v] = (left, Q::from(i));
    }
    let rep = IntervalKRep::new(cover.len().max(1), intervals, class)?;
    Ok(match p.labels() {
        Some(l) => rep.with_labels(l.iter().cloned()),
        None => rep,
    })
}

/// Everything the pipeline produced on success.
#[derive(Clone, Debug)]
pub struct ClassProperBuild {
    pub rep: IntervalKRep,
    pub orientation: Orientation,
    pub poset: Poset,
    pub labeling: Labeling,
    pub initial_cover: ChainCover,
    pub cover: ChainCover,
    /// 1-based index of the orientation that worked.
    pub orientation_index: usize,
}

#[derive(Clone, Debug)]
pub enum BuildOutcome {
    Built(Box<ClassProperBuild>),
    /// Every transitive orientation of the complement was tried.
    Exhausted { orientations: usize },
    /// Stopped at the orientation cap.
    Truncated { orientations: usize },
}

impl BuildOutcome {
    pub fn built(&self) -> Option<&ClassProperBuild> {
        match self {
            BuildOutcome::Built(b) => Some(b),
            _ => None,
        }
    }
}

/// Tries the transitive orientations of the complement in enumeration
/// order; the first whose order has a labeling as above yields intervals
/// from its repaired minimum chain cover, which must realize `g` and be
/// class-proper.
pub fn build_class_proper_rep(g: &Graph, limit: usize) -> Result<BuildOutcome, ConstructionError> {
    let mut tried = 0;
    let mut result: Option<Result<BuildOutcome, ConstructionError>> = None;
    let h = g.complement();
    let _ = for_each_transitive_orientation(&h, |o| {
        if tried == limit {
            result = Some(Ok(BuildOutcome::Truncated { orientations: tried }));
            return ControlFlow::Break(());
        }
        tried += 1;
        let poset = o.to_poset();
        match attempt(g, o, poset, tried) {
            Ok(None) => ControlFlow::Continue(()),
            Ok(Some(b)) => {
                result = Some(Ok(BuildOutcome::Built(Box::new(b))));
                ControlFlow::Break(())
            }
            Err(e) => {
                result = Some(Err(e));
                ControlFlow::Break(())
            }
        }
    });
    result.unwrap_or(Ok(BuildOutcome::Exhausted { orientations: tried }))
}

fn attempt(g: &Graph, o: &Orientation, poset: Poset, index: usize) -> Result<Option<ClassProperBuild>, ConstructionError> {
    let Some(labeling) = chain_labeling(&poset)? else {
        return Ok(None);
    };
    let initial_cover = poset.minimum_chain_cover();
    let cover = repair_chain_cover(&poset, &labeling, &initial_cover)?;
    let mut rep = intervals_from_labeled_poset(&poset, &labeling, &cover)?;
    if let Some(l) = g.labels() {
        rep = rep.with_labels(l.iter().cloned());
    }
    if let Some(d) = rep.discrepancy(g)? {
        return Err(ConstructionError::ProofCheck {
            case: "realization",
            detail: format!("intervals disagree with the graph at {d:?}"),
        });
    }
    if let Some((u, v)) = rep.class_proper_violation() {
        return Err(ConstructionError::ProofCheck {
            case: "class-properness",
            detail: format!("interval of {u} properly contains that of {v}"),
        });
    }
    if cover.len() != initial_cover.len() {
        return Err(ConstructionError::ProofCheck {
            case: "cover size",
            detail: format!("repair changed {} chains to {}", initial_cover.len(), cover.len()),
        });
    }
    Ok(Some(ClassProperBuild {
        rep,
        orientation: o.clone(),
        poset,
        labeling,
        initial_cover,
        cover,
        orientation_index: index,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::enumerate_posets;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a, b)
    }

    #[test]
    fn mu_examples() {
        let anti = Poset::antichain(2);
        let lab = Labeling::identity(2);
        let cover = anti.minimum_chain_cover();
        let rep = intervals_from_labeled_poset(&anti, &lab, &cover).unwrap();
        assert_eq!(rep.intervals(), &[(q(1, 2), q(1, 1)), (q(1, 1), q(2, 1))]);
        assert!(rep.realizes(&Graph::path(2)));

        // v1 || v2, v2 || v3, v1 < v3
        let p = Poset::from_pairs(3, &[(0, 2)]).unwrap();
        let lab = Labeling::identity(3);
        assert_eq!(is_chain_labeling(&p, &lab), None);
        let cover = ChainCover {
            chains: vec![vec![0, 2], vec![1]],
        };
        let rep = intervals_from_labeled_poset(&p, &lab, &cover).unwrap();
        assert_eq!(rep.intervals(), &[(q(1, 3), q(1, 1)), (q(2, 3), q(2, 1)), (q(2, 1), q(3, 1))]);
        assert!(rep.realizes(&Graph::path(3)));
        assert!(rep.is_class_proper());

        let chain = Poset::chain(2);
        let rep = intervals_from_labeled_poset(&chain, &Labeling::identity(2), &chain.minimum_chain_cover()).unwrap();
        assert_eq!(rep.intervals(), &[(q(1, 2), q(1, 1)), (q(2, 1), q(2, 1))]);
        assert!(rep.realizes(&Graph::new(2)));
    }

    #[test]
    fn labelings() {
        assert_eq!(chain_labeling(&Poset::chain(4)).unwrap().unwrap(), Labeling::identity(4));
        assert!(chain_labeling(&Poset::crown3()).unwrap().is_none());
        let p = Poset::from_pairs(3, &[(0, 2)]).unwrap();
        assert_eq!(chain_labeling(&p).unwrap().unwrap().order, vec![0, 1, 2]);
    }

    #[test]
    fn elimination() {
        assert!(elimination_ordering(&Graph::cycle(6).complement()).unwrap().is_none());
        let k222 = Graph::cycle(6).complement().complement().complement();
        assert_eq!(k222, Graph::cycle(6).complement());
        let multi = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert!(is_complete_multipartite(&multi).is_some());
        assert!(is_elimination_ordering(&multi, &[4, 3, 2, 1, 0]));
        assert!(is_elimination_ordering(&multi, &[0, 1, 2, 3, 4]));
    }

    #[test]
    fn compliant_cover_unchanged() {
        let p = Poset::chain(3);
        let lab = Labeling::identity(3);
        let cover = p.minimum_chain_cover();
        assert_eq!(repair_chain_cover(&p, &lab, &cover).unwrap(), cover);
        let anti = Poset::antichain(3);
        let cover = anti.minimum_chain_cover();
        assert_eq!(repair_chain_cover(&anti, &Labeling::identity(3), &cover).unwrap(), cover);
    }

    #[test]
    fn pipeline_small() {
        let b = build_class_proper_rep(&Graph::path(3), 100).unwrap();
        let built = b.built().unwrap();
        assert_eq!(built.rep.k(), 2);
        assert!(built.rep.realizes(&Graph::path(3)));
        assert!(matches!(
            build_class_proper_rep(&Graph::cycle(6).complement(), 1000).unwrap(),
            BuildOutcome::Exhausted { .. }
        ));
        assert!(matches!(
            build_class_proper_rep(&Graph::cycle(6).complement(), 1).unwrap(),
            BuildOutcome::Truncated { orientations: 1 }
        ));
    }

    #[test]
    fn theorem_round_trip_small_posets() {
        for n in 1..=6 {
            for p in enumerate_posets(n).unwrap() {
                let Some(lab) = chain_labeling(&p).unwrap() else {
                    continue;
                };
                let cover = repair_chain_cover(&p, &lab, &p.minimum_chain_cover()).unwrap();
                assert_eq!(cover.len(), p.width());
                let rep = intervals_from_labeled_poset(&p, &lab, &cover).unwrap();
                assert!(rep.realizes(&p.incomparability_graph()));
                assert!(rep.is_class_proper());
            }
        }
    }
}
