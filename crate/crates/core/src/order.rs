//! Strict partial orders, chain covers and labelings.
//!
//! A [`Poset`] stores its relation fully closed, as bit rows for both
//! directions, so `x < y` and "comparable with anything in S" are word
//! operations. Two chain notions coexist here and are never conflated:
//! [`Poset::minimum_chain_cover`] is a Dilworth cover (chains may be
//! comparable to each other), while [`Poset::decompose_into_chains`] is the
//! strict decomposition with no comparabilities between different chains.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{canonical_labeling, low_mask, Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("relation contains a cycle through {0:?}")]
    Cycle(Vec<usize>),
    #[error("element {x} out of range for an order on {n} elements")]
    OutOfRange { x: usize, n: usize },
    #[error("element {0} listed twice")]
    Duplicate(usize),
    #[error("relation is not a strict order: {0}")]
    NotStrictOrder(String),
    #[error("{n} elements exceed the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("invalid chain cover: {0}")]
    InvalidCover(String),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
}

/// A strict partial order on `0..n`.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    lt: Vec<u64>,
    gt: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.lt == other.lt
    }
}

impl Eq for Poset {}

impl Poset {
    pub fn antichain(n: usize) -> Self {
        Poset::from_closed_rows(vec![0; n])
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset::from_closed_rows((0..n).map(|i| low_mask(n) & !low_mask(i + 1)).collect())
    }

    /// The 3-crown: minima a1, a2, a3 (elements 0..3) and maxima b1, b2, b3
    /// (elements 3..6) with `a_i < b_j` iff `i != j`.
    pub fn crown3() -> Self {
        let mut pairs = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    pairs.push((i, 3 + j));
                }
            }
        }
        Poset::from_pairs(6, &pairs)
            .expect("crown is acyclic")
            .with_labels(["a1", "a2", "a3", "b1", "b2", "b3"])
    }

    /// Transitive closure of `pairs` (`(i, j)` meaning `i < j`).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        if n > MAX_VERTICES {
            return Err(OrderError::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut rows = vec![0u64; n];
        for &(i, j) in pairs {
            for x in [i, j] {
                if x >= n {
                    return Err(OrderError::OutOfRange { x, n });
                }
            }
            rows[i] |= 1 << j;
        }
        let direct = rows.clone();
        for k in 0..n {
            for i in 0..n {
                if rows[i] >> k & 1 == 1 {
                    rows[i] |= rows[k];
                }
            }
        }
        if let Some(x) = (0..n).find(|&i| rows[i] >> i & 1 == 1) {
            return Err(OrderError::Cycle(witness_cycle(&direct, x)));
        }
        Ok(Poset::from_closed_rows(rows))
    }

    /// From a relation that must already be irreflexive and transitive.
    pub fn from_relation(rows: Vec<u64>) -> Result<Self, OrderError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(OrderError::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        for i in 0..n {
            if rows[i] & !low_mask(n) != 0 {
                let x = (rows[i] & !low_mask(n)).trailing_zeros() as usize;
                return Err(OrderError::OutOfRange { x, n });
            }
            if rows[i] >> i & 1 == 1 {
                return Err(OrderError::NotStrictOrder(format!("{i} < {i}")));
            }
            for j in VertexSet(rows[i]) {
                if rows[j] & !rows[i] != 0 {
                    let k = (rows[j] & !rows[i]).trailing_zeros();
                    return Err(OrderError::NotStrictOrder(format!(
                        "{i} < {j} < {k} but not {i} < {k}"
                    )));
                }
            }
        }
        Ok(Poset::from_closed_rows(rows))
    }

    pub(crate) fn from_closed_rows(lt: Vec<u64>) -> Self {
        let n = lt.len();
        let mut gt = vec![0u64; n];
        for (i, &row) in lt.iter().enumerate() {
            for j in VertexSet(row) {
                gt[j] |= 1 << i;
            }
        }
        Poset {
            n,
            lt,
            gt,
            labels: None,
        }
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `x < y`.
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.lt[x] >> y & 1 == 1
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        (self.lt[x] | self.gt[x]) >> y & 1 == 1
    }

    /// Elements above `x`.
    pub fn above(&self, x: usize) -> VertexSet {
        VertexSet(self.lt[x])
    }

    /// Elements below `x`.
    pub fn below(&self, x: usize) -> VertexSet {
        VertexSet(self.gt[x])
    }

    pub fn rows(&self) -> &[u64] {
        &self.lt
    }

    pub fn elements(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// All `y != x` incomparable with `x`.
    pub fn incomparables(&self, x: usize) -> VertexSet {
        VertexSet(low_mask(self.n) & !(self.lt[x] | self.gt[x]) & !(1 << x))
    }

    /// `x` has nothing below it inside `within`.
    pub fn is_minimal_in(&self, x: usize, within: VertexSet) -> bool {
        self.gt[x] & within.0 == 0
    }

    pub fn comparability_graph(&self) -> Graph {
        let rows = (0..self.n).map(|i| self.lt[i] | self.gt[i]).collect();
        self.labelled_graph(Graph::from_rows_unchecked(rows))
    }

    /// Edges join distinct incomparable elements; no loops.
    pub fn incomparability_graph(&self) -> Graph {
        let rows = (0..self.n).map(|i| self.incomparables(i).0).collect();
        self.labelled_graph(Graph::from_rows_unchecked(rows))
    }

    fn labelled_graph(&self, g: Graph) -> Graph {
        match &self.labels {
            Some(l) => g.with_labels(l.iter().cloned()),
            None => g,
        }
    }

    /// The suborder on the elements not listed in `removed`, with the map
    /// from new indices to old ones.
    pub fn restrict(&self, removed: &[usize]) -> Result<(Poset, Vec<usize>), OrderError> {
        let mut gone = VertexSet::EMPTY;
        for &x in removed {
            if x >= self.n {
                return Err(OrderError::OutOfRange { x, n: self.n });
            }
            if gone.contains(x) {
                return Err(OrderError::Duplicate(x));
            }
            gone.insert(x);
        }
        Ok(self.restrict_to(self.elements().difference(gone)))
    }

    /// The suborder induced on `keep`, with the map from new indices to old.
    pub fn restrict_to(&self, keep: VertexSet) -> (Poset, Vec<usize>) {
        let map = keep.to_vec();
        let rows = map
            .iter()
            .map(|&x| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &y)| self.lt(x, y))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        let mut p = Poset::from_closed_rows(rows);
        if let Some(l) = &self.labels {
            p.labels = Some(map.iter().map(|&x| l[x].clone()).collect());
        }
        (p, map)
    }

    /// Partition of `s` into chains with no comparabilities between
    /// different chains, if one exists. Each chain is listed bottom to top;
    /// chains are ordered by least element index.
    pub fn decompose_into_chains(&self, s: VertexSet) -> Option<Vec<Vec<usize>>> {
        let mut rest = s;
        let mut chains = Vec::new();
        while let Some(x) = rest.first() {
            let mut comp = VertexSet::singleton(x);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut reach = 0u64;
                for y in frontier {
                    reach |= self.lt[y] | self.gt[y];
                }
                let fresh = VertexSet(reach & s.0 & !comp.0);
                comp = comp.union(fresh);
                frontier = fresh;
            }
            for y in comp {
                let others = comp.difference(VertexSet::singleton(y));
                if !others.is_subset(VertexSet(self.lt[y] | self.gt[y])) {
                    return None;
                }
            }
            let mut chain = comp.to_vec();
            chain.sort_by_key(|&y| (self.gt[y] & comp.0).count_ones());
            chains.push(chain);
            rest = rest.difference(comp);
        }
        Some(chains)
    }

    /// A chain cover of size equal to the width, from a maximum matching in
    /// the bipartite "x < y" graph (Dilworth via Konig). Augmenting paths are
    /// tried in increasing index order, so the cover is deterministic.
    pub fn minimum_chain_cover(&self) -> ChainCover {
        let n = self.n;
        let mut match_left = vec![usize::MAX; n];
        let mut match_right = vec![usize::MAX; n];
        for i in 0..n {
            let mut visited = 0u64;
            self.augment(i, &mut visited, &mut match_left, &mut match_right);
        }
        let mut chains = Vec::new();
        for start in 0..n {
            if match_right[start] != usize::MAX {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while match_left[cur] != usize::MAX {
                cur = match_left[cur];
                chain.push(cur);
            }
            chains.push(chain);
        }
        ChainCover { chains }
    }

    fn augment(&self, i: usize, visited: &mut u64, ml: &mut [usize], mr: &mut [usize]) -> bool {
        for j in VertexSet(self.lt[i]) {
            if *visited >> j & 1 == 1 {
                continue;
            }
            *visited |= 1 << j;
            if mr[j] == usize::MAX || self.augment(mr[j], visited, ml, mr) {
                mr[j] = i;
                ml[i] = j;
                return true;
            }
        }
        false
    }

    pub fn width(&self) -> usize {
        self.minimum_chain_cover().len()
    }

    /// Cover relations `(x, y)`: `x < y` with nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in VertexSet(self.lt[x]) {
                if self.lt[x] & self.gt[y] == 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn dual(&self) -> Poset {
        let mut p = Poset::from_closed_rows(self.gt.clone());
        p.labels = self.labels.clone();
        p
    }

    /// Relabels so that old element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        let mut rows = vec![0u64; self.n];
        for x in 0..self.n {
            for y in VertexSet(self.lt[x]) {
                rows[perm[x]] |= 1 << perm[y];
            }
        }
        let mut p = Poset::from_closed_rows(rows);
        if let Some(l) = &self.labels {
            let mut nl = vec![String::new(); self.n];
            for x in 0..self.n {
                nl[perm[x]] = l[x].clone();
            }
            p.labels = Some(nl);
        }
        p
    }

    /// A string equal for two posets iff they are isomorphic (n <= 10).
    pub fn canonical_form(&self) -> Result<String, OrderError> {
        if self.n > crate::graph::CANONICAL_MAX_VERTICES {
            return Err(OrderError::TooLarge {
                n: self.n,
                max: crate::graph::CANONICAL_MAX_VERTICES,
            });
        }
        Ok(self.canonical().key())
    }

    fn canonical(&self) -> Poset {
        let order = canonical_labeling(&self.lt, true);
        let mut perm = vec![0; self.n];
        for (pos, &x) in order.iter().enumerate() {
            perm[x] = pos;
        }
        let mut p = self.permuted(&perm);
        p.labels = None;
        p
    }

    fn key(&self) -> String {
        let mut s = format!("{}:", self.n);
        for r in &self.lt {
            let _ = write!(s, "{r:x},");
        }
        s
    }

    /// Text form: the element count, then one `i < j` line per cover pair.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (x, y) in self.hasse_edges() {
            let _ = writeln!(s, "{x} < {y}");
        }
        s
    }

    /// Parses the text form; `#` starts a comment and the closure of the
    /// listed pairs is taken.
    pub fn parse(text: &str) -> Result<Poset, OrderError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, first) = lines.next().ok_or(OrderError::Parse {
            line: 1,
            reason: "missing element count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| OrderError::Parse {
            line,
            reason: format!("expected element count, found {first:?}"),
        })?;
        let mut pairs = Vec::new();
        for (line, l) in lines {
            let (a, b) = l.split_once('<').ok_or(OrderError::Parse {
                line,
                reason: format!("expected `i < j`, found {l:?}"),
            })?;
            let parse = |t: &str| {
                t.trim().parse::<usize>().map_err(|_| OrderError::Parse {
                    line,
                    reason: format!("bad element {t:?}"),
                })
            };
            pairs.push((parse(a)?, parse(b)?));
        }
        Poset::from_pairs(n, &pairs)
    }

    /// Graphviz rendering of the Hasse diagram, minima at the bottom.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph P {\n  rankdir=BT;\n  node [shape=circle];\n");
        for x in 0..self.n {
            let _ = writeln!(s, "  {x} [label=\"{}\"];", self.label(x));
        }
        for (x, y) in self.hasse_edges() {
            let _ = writeln!(s, "  {x} -> {y} [arrowhead=none];");
        }
        s.push_str("}\n");
        s
    }
}

/// Finds a cycle through `x` in the unclosed relation.
fn witness_cycle(direct: &[u64], x: usize) -> Vec<usize> {
    let n = direct.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for w in VertexSet(direct[v]) {
            if w == x {
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != x {
                    cur = parent[cur];
                    cycle.push(cur);
                }
                cycle.reverse();
                return cycle;
            }
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    vec![x]
}

/// One representative per isomorphism class of posets on `n` elements
/// (1 <= n <= 8), grown by adding a new maximal element above a down-set.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>, OrderError> {
    if n == 0 || n > 8 {
        return Err(OrderError::TooLarge { n, max: 8 });
    }
    let mut level = vec![Poset::antichain(1)];
    for m in 2..=n {
        let mut next: BTreeMap<String, Poset> = BTreeMap::new();
        for p in &level {
            for mask in 0u64..1 << (m - 1) {
                let down_closed = VertexSet(mask).iter().all(|x| p.gt[x] & !mask == 0);
                if !down_closed {
                    continue;
                }
                let mut rows = p.lt.clone();
                for x in VertexSet(mask) {
                    rows[x] |= 1 << (m - 1);
                }
                rows.push(0);
                let c = Poset::from_closed_rows(rows).canonical();
                next.entry(c.key()).or_insert(c);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Every chain cover of minimum size, chains bottom to top and listed by
/// least element index.
pub fn minimum_chain_covers(p: &Poset) -> Vec<ChainCover> {
    fn grow(p: &Poset, x: usize, width: usize, chains: &mut Vec<Vec<usize>>, out: &mut Vec<ChainCover>) {
        if x == p.n() {
            let mut chains = chains.clone();
            for c in &mut chains {
                c.sort_by_key(|&y| p.below(y).len());
            }
            out.push(ChainCover { chains });
            return;
        }
        for c in 0..chains.len() {
            if chains[c].iter().all(|&y| p.comparable(x, y)) {
                chains[c].push(x);
                grow(p, x + 1, width, chains, out);
                chains[c].pop();
            }
        }
        if chains.len() < width {
            chains.push(vec![x]);
            grow(p, x + 1, width, chains, out);
            chains.pop();
        }
    }
    let mut out = Vec::new();
    grow(p, 0, p.width(), &mut Vec::new(), &mut out);
    out
}

/// A partition of the elements into chains, each listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainCover {
    pub chains: Vec<Vec<usize>>,
}

impl ChainCover {
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Chain index of every element.
    pub fn assignment(&self, n: usize) -> Vec<usize> {
        let mut a = vec![usize::MAX; n];
        for (c, chain) in self.chains.iter().enumerate() {
            for &x in chain {
                a[x] = c;
            }
        }
        a
    }

    pub fn validate(&self, p: &Poset) -> Result<(), OrderError> {
        let mut seen = VertexSet::EMPTY;
        for (c, chain) in self.chains.iter().enumerate() {
            for &x in chain {
                if x >= p.n() {
                    return Err(OrderError::OutOfRange { x, n: p.n() });
                }
                if seen.contains(x) {
                    return Err(OrderError::Duplicate(x));
                }
                seen.insert(x);
            }
            if let Some(w) = chain.windows(2).find(|w| !p.lt(w[0], w[1])) {
                return Err(OrderError::InvalidCover(format!(
                    "chain {c}: {} is not below {}",
                    w[0], w[1]
                )));
            }
        }
        if seen != p.elements() {
            return Err(OrderError::InvalidCover(format!(
                "elements {:?} not covered",
                p.elements().difference(seen)
            )));
        }
        Ok(())
    }
}

/// A listing `v_1, ..., v_n` of the elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    pub order: Vec<usize>,
}

impl Labeling {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self, OrderError> {
        if order.len() != n {
            return Err(OrderError::InvalidLabeling(format!(
                "{} entries for {n} elements",
                order.len()
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &x in &order {
            if x >= n {
                return Err(OrderError::OutOfRange { x, n });
            }
            if seen.contains(x) {
                return Err(OrderError::Duplicate(x));
            }
            seen.insert(x);
        }
        Ok(Labeling { order })
    }

    pub fn identity(n: usize) -> Self {
        Labeling {
            order: (0..n).collect(),
        }
    }

    /// Zero-based position of every element.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &x) in self.order.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_minimum_covers() {
        assert_eq!(minimum_chain_covers(&Poset::antichain(3)).len(), 1);
        assert_eq!(minimum_chain_covers(&Poset::chain(4)).len(), 1);
        // 0 < 2, 1 < 2, 0 < 3: only {0 3, 1 2}
        let p = Poset::from_pairs(4, &[(0, 2), (1, 2), (0, 3)]).unwrap();
        let covers = minimum_chain_covers(&p);
        assert_eq!(covers, vec![ChainCover { chains: vec![vec![0, 3], vec![1, 2]] }]);
        // two 2-chains, fully crossed: 0,1 < 2,3
        let q = Poset::from_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(minimum_chain_covers(&q).len(), 2);
        for c in &covers {
            c.validate(&p).unwrap();
        }
    }
    use crate::graph::is_complete_multipartite;
    use proptest::prelude::*;

    fn brute_width(p: &Poset) -> usize {
        (0u64..1 << p.n())
            .filter(|&m| VertexSet(m).iter().all(|x| p.comparable_set(x) & m == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    impl Poset {
        fn comparable_set(&self, x: usize) -> u64 {
            self.lt[x] | self.gt[x]
        }
    }

    #[test]
    fn closure_and_cycles() {
        let p = Poset::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p, Poset::chain(3));
        match Poset::from_pairs(2, &[(0, 1), (1, 0)]) {
            Err(OrderError::Cycle(c)) => assert_eq!(c, vec![0, 1]),
            other => panic!("{other:?}"),
        }
        assert!(Poset::from_relation(vec![0b10, 0b100, 0]).is_err());
    }

    #[test]
    fn crown() {
        let c = Poset::crown3();
        assert_eq!(brute_width(&c), 3);
        assert_eq!(c.width(), 3);
        let inc = c.incomparability_graph();
        let c6bar = Graph::cycle(6).complement();
        // a_i ~ a_j, b_i ~ b_j, a_i ~ b_i
        let mut expected = Graph::new(6);
        for (u, v) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)] {
            expected.add_edge(u, v);
        }
        assert_eq!(inc, expected);
        assert_eq!(
            crate::graph::canonical_form(&inc).unwrap(),
            crate::graph::canonical_form(&c6bar).unwrap()
        );
        assert_eq!(c.incomparables(0).to_vec(), vec![1, 2, 3]);
        assert_eq!(c.hasse_edges().len(), 6);
        let (r, map) = c.restrict(&[0]).unwrap();
        assert_eq!(r.n(), 5);
        assert_eq!(map, vec![1, 2, 3, 4, 5]);
        assert_eq!(brute_width(&r), 3);
        assert_eq!(r.width(), 3);
    }

    #[test]
    fn chain_and_antichain() {
        assert_eq!(Poset::chain(4).incomparability_graph(), Graph::new(4));
        assert_eq!(Poset::antichain(4).incomparability_graph(), Graph::complete(4));
        assert!(Poset::chain(4).incomparables(2).is_empty());
        assert_eq!(Poset::antichain(4).incomparables(1).to_vec(), vec![0, 2, 3]);
        assert_eq!(Poset::chain(3).hasse_edges(), vec![(0, 1), (1, 2)]);
        assert!(Poset::antichain(3).hasse_edges().is_empty());
        assert_eq!(Poset::antichain(3).minimum_chain_cover().chains, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(Poset::chain(5).minimum_chain_cover().chains, vec![vec![0, 1, 2, 3, 4]]);
        let p = Poset::chain(4);
        assert_eq!(p.restrict(&[]).unwrap().0, p);
        assert_eq!(p.restrict(&[0, 1, 3]).unwrap().0.n(), 1);
        assert!(matches!(p.restrict(&[1, 1]), Err(OrderError::Duplicate(1))));
        assert!(matches!(p.restrict(&[7]), Err(OrderError::OutOfRange { .. })));
    }

    #[test]
    fn crown_cover_is_valid() {
        let c = Poset::crown3();
        let cover = c.minimum_chain_cover();
        cover.validate(&c).unwrap();
        assert_eq!(cover.len(), 3);
    }

    #[test]
    fn strict_decomposition() {
        let chain = Poset::chain(3);
        assert_eq!(chain.decompose_into_chains(chain.elements()).unwrap(), vec![vec![0, 1, 2]]);
        let anti = Poset::antichain(3);
        assert_eq!(anti.decompose_into_chains(anti.elements()).unwrap().len(), 3);
        let c = Poset::crown3();
        // a1 < b2, a1 < b3, b2 || b3
        let s: VertexSet = [0, 4, 5].into_iter().collect();
        assert!(c.decompose_into_chains(s).is_none());
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63, 318]);
    }

    #[test]
    fn text_round_trip() {
        let c = Poset::crown3();
        let back = Poset::parse(&c.to_text()).unwrap();
        assert_eq!(back, c);
        let p = Poset::parse("# comment\n3\n0 < 1  # first\n1<2\n").unwrap();
        assert_eq!(p, Poset::chain(3));
        assert!(matches!(Poset::parse("3\n0 - 1\n"), Err(OrderError::Parse { line: 2, .. })));
        assert!(Poset::parse("").is_err());
    }

    #[test]
    fn dilworth_on_all_small_posets() {
        for n in 1..=6 {
            for p in enumerate_posets(n).unwrap() {
                let cover = p.minimum_chain_cover();
                cover.validate(&p).unwrap();
                assert_eq!(cover.len(), brute_width(&p), "{}", p.key());
            }
        }
    }

    #[test]
    fn strict_decomposition_matches_multipartite() {
        for n in 1..=5 {
            for p in enumerate_posets(n).unwrap() {
                let g = p.incomparability_graph();
                for m in 0u64..1 << n {
                    let s = VertexSet(m);
                    let (sub, map) = g.induced(s).unwrap();
                    let chains = p.decompose_into_chains(s);
                    let parts = is_complete_multipartite(&sub);
                    assert_eq!(chains.is_some(), parts.is_some());
                    if let (Some(chains), Some(parts)) = (chains, parts) {
                        let mut a: Vec<Vec<usize>> = chains
                            .into_iter()
                            .map(|mut c| {
                                c.sort();
                                c
                            })
                            .collect();
                        a.sort();
                        let mut b: Vec<Vec<usize>> = parts
                            .classes
                            .iter()
                            .map(|c| c.iter().map(|i| map[i]).collect())
                            .collect();
                        b.sort();
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn restrict_commutes_with_incomparability() {
        for p in enumerate_posets(5).unwrap() {
            for m in 0u64..32 {
                let keep = VertexSet(m);
                let (r, _) = p.restrict_to(keep);
                let (sub, _) = p.incomparability_graph().induced(keep).unwrap();
                assert_eq!(r.incomparability_graph(), sub);
            }
        }
    }

    proptest! {
        #[test]
        fn incomparability_is_complement_of_comparability(n in 1usize..9, pairs in proptest::collection::vec((0usize..8, 0usize..8), 0..16)) {
            let pairs: Vec<_> = pairs.into_iter().filter(|&(a, b)| a < n && b < n && a < b).collect();
            let p = Poset::from_pairs(n, &pairs).unwrap();
            prop_assert_eq!(p.incomparability_graph(), p.comparability_graph().complement());
            prop_assert!(Poset::from_relation(p.rows().to_vec()).is_ok());
        }
    }
}
