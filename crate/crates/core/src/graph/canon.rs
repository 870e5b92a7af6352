//! Canonical labelling by exhaustive, prefix-pruned permutation search.
//!
//! Vertices are first split into cells by colour refinement (an
//! isomorphism-invariant ordered partition). The canonical labelling is the
//! cell-respecting permutation whose relabelled adjacency bit string, read
//! column by column in graph6 order, is lexicographically least. Partial
//! strings that already exceed the best one are abandoned.

use super::{Graph, GraphError};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_MAX_VERTICES: usize = 10;

/// A string equal for two graphs iff they are isomorphic: the graph6
/// encoding of the canonically relabelled graph.
pub fn canonical_form(g: &Graph) -> Result<String, GraphError> {
    if g.n() > CANONICAL_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            op: "canonical_form",
            n: g.n(),
            max: CANONICAL_MAX_VERTICES,
        });
    }
    Ok(canonical_graph(g).to_graph6())
}

pub(crate) fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_labeling(g.rows(), false);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let mut c = g.permuted(&perm);
    c.labels = None;
    c
}

/// Canonical order of the vertices of the relation given by `rows`
/// (`rows[i]` bit `j` set iff `i -> j`): entry `p` is the vertex placed at
/// position `p`. Set `directed` for relations that are not symmetric.
pub fn canonical_labeling(rows: &[u64], directed: bool) -> Vec<usize> {
    let n = rows.len();
    if n == 0 {
        return Vec::new();
    }
    let cols = transpose(rows);
    let color = refine(rows, &cols);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| (color[v], v));
    let color_at: Vec<u32> = by_color.iter().map(|&v| color[v]).collect();

    let mut search = Search {
        rows,
        directed,
        color: &color,
        color_at: &color_at,
        cur: vec![0; n],
        perm: vec![0; n],
        best: Vec::new(),
        best_perm: Vec::new(),
    };
    search.dfs(0, 0);
    search.best_perm
}

fn transpose(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let mut cols = vec![0u64; n];
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..n {
            if r >> j & 1 == 1 {
                cols[j] |= 1 << i;
            }
        }
    }
    cols
}

/// Colour refinement to a stable partition. Colours are ranks of sorted
/// signatures, so they are invariant under relabelling.
fn refine(rows: &[u64], cols: &[u64]) -> Vec<u32> {
    let n = rows.len();
    let mut color: Vec<u32> = vec![0; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut out: Vec<u32> = bits(rows[v]).map(|w| color[w]).collect();
                let mut inc: Vec<u32> = bits(cols[v]).map(|w| color[w]).collect();
                out.sort_unstable();
                inc.sort_unstable();
                (color[v], out, inc)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present") as u32)
            .collect();
        color = next;
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

fn bits(x: u64) -> impl Iterator<Item = usize> {
    super::VertexIter(x)
}

struct Search<'a> {
    rows: &'a [u64],
    directed: bool,
    color: &'a [u32],
    color_at: &'a [u32],
    cur: Vec<u64>,
    perm: Vec<usize>,
    best: Vec<u64>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    fn column(&self, p: usize, v: usize) -> u64 {
        let mut col = 0u64;
        for &u in &self.perm[..p] {
            col = col << 1 | (self.rows[u] >> v & 1);
            if self.directed {
                col = col << 1 | (self.rows[v] >> u & 1);
            }
        }
        col
    }

    fn dfs(&mut self, p: usize, used: u64) {
        let n = self.rows.len();
        if p == n {
            if self.best.is_empty() || self.cur < self.best {
                self.best.clone_from(&self.cur);
                self.best_perm.clone_from(&self.perm);
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 || self.color[v] != self.color_at[p] {
                continue;
            }
            self.cur[p] = self.column(p, v);
            if !self.best.is_empty() && self.cur[..=p] > self.best[..=p] {
                continue;
            }
            self.perm[p] = v;
            self.dfs(p + 1, used | 1 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        g.permuted(&perm)
    }

    #[test]
    fn cycle_forms() {
        let c6 = Graph::cycle(6);
        let f = canonical_form(&c6).unwrap();
        for seed in 1..20 {
            assert_eq!(canonical_form(&shuffled(&c6, seed)).unwrap(), f);
        }
        let two_k3 = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&two_k3).unwrap(), f);
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // brute force over all 2^6 labelled graphs
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut forms = BTreeSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            forms.insert(canonical_form(&Graph::from_edges(4, &edges).unwrap()).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn too_large() {
        assert!(canonical_form(&Graph::new(11)).is_err());
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(n in 1usize..9, edges in any::<u64>(), seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if edges >> (k % 64) & 1 == 1 { g.add_edge(i, j); }
                    k += 1;
                }
            }
            let h = shuffled(&g, seed);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            // the canonical representative is isomorphic to the input
            prop_assert_eq!(canonical_graph(&g).degree_sequence(), g.degree_sequence());
        }

        #[test]
        fn separates_degree_sequences(a in any::<u32>(), b in any::<u32>()) {
            let build = |m: u32| {
                let mut g = Graph::new(6);
                let mut k = 0;
                for j in 1..6 { for i in 0..j { if m >> k & 1 == 1 { g.add_edge(i, j); } k += 1; } }
                g
            };
            let (g, h) = (build(a), build(b));
            if g.degree_sequence() != h.degree_sequence() {
                prop_assert_ne!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            }
        }
    }
}
