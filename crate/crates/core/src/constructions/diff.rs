use crate::representations::Q;

/// Solves `x[a] - x[b] <= w` for every `(a, b, w)` by Bellman-Ford from a
/// virtual source joined to every variable with weight 0. `None` when the
/// system has a negative cycle.
pub(crate) fn solve_difference_constraints(n: usize, cons: &[(usize, usize, Q)]) -> Option<Vec<Q>> {
    let mut x = vec![Q::from(0); n];
    for _ in 0..=n {
        let mut changed = false;
        for &(a, b, w) in cons {
            let bound = x[b] + w;
            if bound < x[a] {
                x[a] = bound;
                changed = true;
            }
        }
        if !changed {
            return Some(x);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_and_infeasible() {
        let x = solve_difference_constraints(2, &[(0, 1, Q::from(-1)), (1, 0, Q::from(3))]).unwrap();
        assert!(x[0] - x[1] <= Q::from(-1) && x[1] - x[0] <= Q::from(3));
        assert!(solve_difference_constraints(2, &[(0, 1, Q::from(-1)), (1, 0, Q::from(0))]).is_none());
        assert_eq!(solve_difference_constraints(0, &[]), Some(vec![]));
    }
}
