//! Finite simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so neighbourhood
//! queries, set intersections and induced-subgraph checks are single word
//! operations. Graph values are immutable once built and cheap to clone.

mod canon;
mod enumerate;
mod graph6;
mod search;

use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, CANONICAL_MAX_VERTICES};
pub use enumerate::{enumerate_graphs, ENUMERATE_MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6};
pub use search::{
    chromatic_number, find_induced, find_long_induced_cycle, is_complete_multipartite,
    is_weakly_chordal, weakly_chordal_violation, LongHole,
};

/// Largest vertex count representable with single-word adjacency rows.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6 decode error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("{op} supports at most {max} vertices, got {n}")]
    TooLarge { op: &'static str, n: usize, max: usize },
    #[error("{op} needs at least {min} vertices, got {n}")]
    TooSmall { op: &'static str, n: usize, min: usize },
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices stored as a bit vector.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A finite simple graph. Equality and hashing ignore display labels.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::from_edges`] for
    /// checked construction.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![0; n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if row >> i & 1 == 1 {
                return Err(GraphError::SelfLoop(i));
            }
            for j in VertexSet(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(Graph {
            n,
            adj: rows,
            labels: None,
        })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = low_mask(n) & !(1 << u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, otherwise its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Panics on out-of-range endpoints or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n)
            .map(|u| !self.adj[u] & mask & !(1u64 << u))
            .collect();
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Subgraph induced on `s`, reindexed `0..|s|` in increasing vertex
    /// order. The second component maps new indices back to old ones.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        let map = s.to_vec();
        let mut g = Graph::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(map.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((g, map))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); self.n];
            for v in 0..self.n {
                l[perm[v]] = labels[v].clone();
            }
            g.labels = Some(l);
        }
        g
    }

    /// Removes `v`, keeping the remaining vertices in order.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced(keep).expect("subset of V").0
    }

    /// Connected components, each as a vertex set, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, self.vertices());
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `allowed` (`s` must be allowed).
    pub fn reach(&self, s: usize, allowed: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            let fresh = VertexSet(next & allowed.0 & !comp.0);
            comp = comp.union(fresh);
            frontier = fresh;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()).len() == self.n
    }

    /// Shortest path from `s` to `t` using only vertices in `allowed`
    /// (both endpoints must be allowed). Ties are broken toward lower indices.
    pub fn shortest_path(&self, s: usize, t: usize, allowed: VertexSet) -> Option<Vec<usize>> {
        if !allowed.contains(s) || !allowed.contains(t) {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in VertexSet(self.adj[v] & allowed.0) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// A proper 2-colouring with the least vertex of each component in
    /// class 0, or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<PartiteStructure> {
        let mut side = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if side[w] == usize::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let mut classes = vec![VertexSet::EMPTY; 2];
        for (v, &c) in side.iter().enumerate() {
            classes[c].insert(v);
        }
        if classes[1].is_empty() {
            classes.pop();
        }
        Some(PartiteStructure { classes })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn to_graph6(&self) -> String {
        write_graph6(self)
    }

    /// Graphviz rendering; labels are emitted verbatim.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v} [label=\"{}\"];\n", self.label(v)));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// A partition of the vertex set into independent classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartiteStructure {
    pub classes: Vec<VertexSet>,
}

impl PartiteStructure {
    pub fn new(classes: Vec<VertexSet>) -> Self {
        PartiteStructure { classes }
    }

    /// From a per-vertex class index.
    pub fn from_assignment(assignment: &[usize]) -> Self {
        let k = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![VertexSet::EMPTY; k];
        for (v, &c) in assignment.iter().enumerate() {
            classes[c].insert(v);
        }
        PartiteStructure { classes }
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(v))
    }

    /// Per-vertex class index for a graph on `n` vertices.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        (0..n)
            .map(|v| self.class_of(v).unwrap_or(usize::MAX))
            .collect()
    }

    /// Checks that the classes are disjoint independent sets covering `V(g)`.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let mut seen = VertexSet::EMPTY;
        for (i, &c) in self.classes.iter().enumerate() {
            if !c.is_subset(g.vertices()) {
                return Err(GraphError::InvalidPartition(format!(
                    "class {i} contains a vertex outside 0..{}",
                    g.n()
                )));
            }
            if !seen.intersection(c).is_empty() {
                return Err(GraphError::InvalidPartition(format!(
                    "class {i} overlaps an earlier class"
                )));
            }
            for v in c {
                if !g.neighbors(v).intersection(c).is_empty() {
                    return Err(GraphError::InvalidPartition(format!(
                        "class {i} is not independent (vertex {v})"
                    )));
                }
            }
            seen = seen.union(c);
        }
        if seen != g.vertices() {
            return Err(GraphError::InvalidPartition(format!(
                "classes miss vertices {:?}",
                g.vertices().difference(seen)
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_c6() {
        let c6bar = Graph::cycle(6).complement();
        let mut expected = Graph::new(6);
        for (u, v) in [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 3), (1, 4), (2, 5)] {
            expected.add_edge(u, v);
        }
        assert_eq!(c6bar, expected);
        assert_eq!(Graph::complete(6).complement(), Graph::new(6));
        assert_eq!(c6bar.complement(), Graph::cycle(6));
    }

    #[test]
    fn induced_subgraphs() {
        let c6 = Graph::cycle(6);
        let (p3, map) = c6.induced([0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(c6.induced(c6.vertices()).unwrap().0, c6);
        let (k3, _) = c6.complement().induced([0, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert!(matches!(
            c6.induced(VertexSet::singleton(9)),
            Err(GraphError::VertexOutOfRange { v: 9, n: 6 })
        ));
    }

    #[test]
    fn from_rows_rejects_asymmetry_and_loops() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn partition_validation() {
        let c4 = Graph::cycle(4);
        let good = PartiteStructure::from_assignment(&[0, 1, 0, 1]);
        assert!(good.validate(&c4).is_ok());
        let bad = PartiteStructure::from_assignment(&[0, 0, 1, 1]);
        assert!(bad.validate(&c4).is_err());
        assert_eq!(c4.bipartition().unwrap(), good);
        assert!(Graph::cycle(5).bipartition().is_none());
    }
}
