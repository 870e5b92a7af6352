use std::collections::BTreeMap;

use super::canon::canonical_graph;
use super::{Graph, GraphError};

/// Largest vertex count for built-in enumeration. Larger inputs are
/// expected as external graph6 streams.
pub const ENUMERATE_MAX_VERTICES: usize = 8;

/// One representative per isomorphism class of graphs on `n` vertices,
/// in canonical form, sorted by graph6 string, keeping those accepted by
/// `filter`.
///
/// Classes are grown by vertex augmentation: every graph on `n` vertices
/// is some graph on `n - 1` vertices plus a new vertex joined to a subset.
pub fn enumerate_graphs(
    n: usize,
    filter: Option<&(dyn Fn(&Graph) -> bool + Sync)>,
) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall {
            op: "enumerate_graphs",
            n,
            min: 1,
        });
    }
    if n > ENUMERATE_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            op: "enumerate_graphs",
            n,
            max: ENUMERATE_MAX_VERTICES,
        });
    }
    let mut level = vec![Graph::new(1)];
    for m in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..1 << (m - 1) {
                let mut rows: Vec<u64> = g.rows().to_vec();
                for (v, row) in rows.iter_mut().enumerate() {
                    *row |= (mask >> v & 1) << (m - 1);
                }
                rows.push(mask);
                let c = canonical_graph(&Graph::from_rows_unchecked(rows));
                next.entry(c.to_graph6()).or_insert(c);
            }
        }
        level = next.into_values().collect();
    }
    Ok(match filter {
        Some(f) => level.into_iter().filter(|g| f(g)).collect(),
        None => level,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, None).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn filter_and_bounds() {
        let connected = enumerate_graphs(4, Some(&|g: &Graph| g.is_connected())).unwrap();
        assert_eq!(connected.len(), 6);
        assert!(enumerate_graphs(0, None).is_err());
        assert!(enumerate_graphs(9, None).is_err());
    }

    #[test]
    fn output_sorted_and_canonical() {
        let gs = enumerate_graphs(5, None).unwrap();
        let strings: Vec<String> = gs.iter().map(Graph::to_graph6).collect();
        let mut sorted = strings.clone();
        sorted.sort();
        assert_eq!(strings, sorted);
        for g in &gs {
            assert_eq!(super::super::canonical_form(g).unwrap(), g.to_graph6());
        }
    }
}
