use super::ConstructionError;
use crate::comparability::Orientation;
use crate::graph::Graph;
use crate::representations::{FunctionRep, IntervalKRep};

fn distinct_class_proper(rep: &IntervalKRep) -> Result<IntervalKRep, ConstructionError> {
    if let Some((u, v)) = rep.class_proper_violation() {
        return Err(ConstructionError::NotClassProper(u, v));
    }
    Ok(if rep.has_distinct_endpoints() {
        rep.clone()
    } else {
        rep.perturbed_distinct()
    })
}

/// Orients each non-edge `ab` of `g` as `a -> b` when `r(a) < l(b)`, or when
/// `a`, `b` share a class and `r(a) < r(b)`. The result is checked to be a
/// transitive orientation of the complement.
pub fn orientation_from_class_proper(rep: &IntervalKRep, g: &Graph) -> Result<Orientation, ConstructionError> {
    if let Some(d) = rep.discrepancy(g)? {
        return Err(ConstructionError::NotRealized(d));
    }
    let rep = distinct_class_proper(rep)?;
    let h = g.complement();
    let mut arcs = Vec::new();
    for (a, b) in h.edges() {
        let before = |a: usize, b: usize| {
            rep.right(a) < rep.left(b) || (rep.class(a) == rep.class(b) && rep.right(a) < rep.right(b))
        };
        match (before(a, b), before(b, a)) {
            (true, false) => arcs.push((a, b)),
            (false, true) => arcs.push((b, a)),
            _ => {
                return Err(ConstructionError::ProofCheck {
                    case: "orientation rule",
                    detail: format!("non-edge {a}{b} gets no unique direction"),
                })
            }
        }
    }
    let o = Orientation::from_arcs(g.n(), &arcs);
    if !o.is_transitive_on(&h) {
        return Err(ConstructionError::ProofCheck {
            case: "orientation rule",
            detail: "orientation of the complement is not transitive".into(),
        });
    }
    Ok(o)
}

/// Curves over `k' + 1` levels, `k' = max(k, 3)`. The curve of a vertex in
/// class `i` (numbered from 1) sits at `l(v)` except at its bump levels,
/// where it reaches `r(v)`: level `i + 1` for `i <= k' - 2`, levels `0` and
/// `k'` for `i = k' - 1`, level `1` for `i = k'`.
pub fn function_rep_from_class_proper(rep: &IntervalKRep) -> Result<FunctionRep, ConstructionError> {
    let rep = distinct_class_proper(rep)?;
    let k = rep.k().max(3);
    let xs = (0..rep.n())
        .map(|v| {
            let (l, r) = rep.interval(v);
            let i = rep.class(v) + 1;
            let bumps: &[usize] = if i <= k - 2 {
                &[i + 1]
            } else if i == k - 1 {
                &[0, k]
            } else {
                &[1]
            };
            (0..=k).map(|t| if bumps.contains(&t) { r } else { l }).collect()
        })
        .collect();
    Ok(FunctionRep::new(k, xs)?)
}
