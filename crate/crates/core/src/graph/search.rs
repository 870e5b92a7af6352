use super::{low_mask, Graph, GraphError, PartiteStructure, VertexSet};

const CHROMATIC_MAX_VERTICES: usize = 16;
const WEAKLY_CHORDAL_MAX_VERTICES: usize = 12;

/// Exact chromatic number by iterative k-colourability with backtracking.
pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    if g.n() > CHROMATIC_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            op: "chromatic_number",
            n: g.n(),
            max: CHROMATIC_MAX_VERTICES,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = if g.edge_count() > 0 { 2 } else { 1 };
    for k in lower..=g.n() {
        let mut colors = vec![usize::MAX; g.n()];
        if color_from(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

fn color_from(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(idx) else {
        return true;
    };
    // a fresh colour is interchangeable with any other fresh colour
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().any(|w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if color_from(g, order, idx + 1, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// The partition into independent classes with every cross-class pair
/// adjacent, if one exists. Classes are ordered by least vertex.
///
/// Such a partition exists iff "equal or non-adjacent" is an equivalence
/// relation on the vertices, and then it is the set of equivalence classes.
pub fn is_complete_multipartite(g: &Graph) -> Option<PartiteStructure> {
    let all = g.vertices().0;
    let class = |v: usize| (!g.row(v) & all) | 1 << v;
    let mut classes = Vec::new();
    let mut seen = 0u64;
    for v in 0..g.n() {
        let c = class(v);
        if VertexSet(c).iter().any(|u| class(u) != c) {
            return None;
        }
        if seen >> v & 1 == 0 {
            classes.push(VertexSet(c));
            seen |= c;
        }
    }
    Some(PartiteStructure { classes })
}

/// An injective map from pattern vertices into `g` under which the pattern
/// equals the induced subgraph on the image; the lexicographically least
/// such map is returned.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(pattern.n());
    extend_embedding(g, pattern, &mut map, 0).then_some(map)
}

fn extend_embedding(g: &Graph, p: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
    let i = map.len();
    if i == p.n() {
        return true;
    }
    let mut want_adj = 0u64;
    let mut want_non = 0u64;
    for (j, &w) in map.iter().enumerate() {
        if p.has_edge(i, j) {
            want_adj |= 1 << w;
        } else {
            want_non |= 1 << w;
        }
    }
    let candidates = g.vertices().0 & !used;
    for w in VertexSet(candidates) {
        let row = g.row(w);
        if row & want_adj != want_adj || row & want_non != 0 || g.degree(w) < p.degree(i) {
            continue;
        }
        map.push(w);
        if extend_embedding(g, p, map, used | 1 << w) {
            return true;
        }
        map.pop();
    }
    false
}

/// An induced cycle of length >= 5 found in a graph or its complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongHole {
    pub in_complement: bool,
    pub cycle: Vec<usize>,
}

/// An induced cycle on at least `min_len` (>= 4) vertices, as a vertex
/// sequence starting at its least vertex.
pub fn find_long_induced_cycle(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    assert!(min_len >= 4, "cycles shorter than 4 are always induced triangles");
    for s in 0..g.n() {
        let mut path = vec![s];
        if grow_hole(g, s, min_len, &mut path) {
            return Some(path);
        }
    }
    None
}

/// Extends an induced path starting at `s`, using only vertices above `s`.
fn grow_hole(g: &Graph, s: usize, min_len: usize, path: &mut Vec<usize>) -> bool {
    let last = *path.last().expect("non-empty");
    let on_path: u64 = path.iter().fold(0, |acc, &v| acc | 1 << v);
    let interior = on_path & !(1 << last) & !(1 << s);
    let above = !low_mask(s + 1);
    for w in VertexSet(g.row(last) & above & !on_path) {
        let row = g.row(w);
        if row & interior != 0 {
            continue;
        }
        let closes = path.len() > 1 && row >> s & 1 == 1;
        if closes {
            if path.len() + 1 >= min_len {
                path.push(w);
                return true;
            }
            continue;
        }
        path.push(w);
        if grow_hole(g, s, min_len, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// `None` when the graph is weakly chordal, otherwise a long induced cycle
/// in the graph (checked first) or in its complement.
pub fn weakly_chordal_violation(g: &Graph) -> Result<Option<LongHole>, GraphError> {
    if g.n() > WEAKLY_CHORDAL_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            op: "is_weakly_chordal",
            n: g.n(),
            max: WEAKLY_CHORDAL_MAX_VERTICES,
        });
    }
    if let Some(cycle) = find_long_induced_cycle(g, 5) {
        return Ok(Some(LongHole {
            in_complement: false,
            cycle,
        }));
    }
    Ok(find_long_induced_cycle(&g.complement(), 5).map(|cycle| LongHole {
        in_complement: true,
        cycle,
    }))
}

pub fn is_weakly_chordal(g: &Graph) -> Result<bool, GraphError> {
    Ok(weakly_chordal_violation(g)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::cycle(6).complement()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::new(5)).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6)).unwrap(), 2);
        assert!(chromatic_number(&Graph::new(17)).is_err());
    }

    #[test]
    fn c6bar_three_colouring() {
        // colour classes are the edges of C6, the non-edges of its complement
        let g = Graph::cycle(6).complement();
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            assert!(!g.has_edge(u, v));
        }
        assert!(g.has_edge(0, 2) && g.has_edge(2, 4) && g.has_edge(0, 4));
    }

    #[test]
    fn complete_multipartite() {
        let c4 = is_complete_multipartite(&Graph::cycle(4)).unwrap();
        assert_eq!(c4.classes, vec![VertexSet(0b0101), VertexSet(0b1010)]);
        let p3 = is_complete_multipartite(&Graph::path(3)).unwrap();
        assert_eq!(p3.classes, vec![VertexSet(0b101), VertexSet(0b010)]);
        assert!(is_complete_multipartite(&Graph::path(4)).is_none());
        assert_eq!(is_complete_multipartite(&Graph::complete(3)).unwrap().k(), 3);
    }

    fn nonadjacency_is_equivalence(g: &Graph) -> bool {
        let rel = |u: usize, v: usize| u == v || !g.has_edge(u, v);
        let n = g.n();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c)))
        })
    }

    #[test]
    fn multipartite_matches_triple_scan() {
        for n in 1..=5 {
            for g in crate::graph::enumerate_graphs(n, None).unwrap() {
                let found = is_complete_multipartite(&g);
                assert_eq!(found.is_some(), nonadjacency_is_equivalence(&g), "{}", g.to_graph6());
                if let Some(p) = found {
                    p.validate(&g).unwrap();
                }
            }
        }
    }

    #[test]
    fn induced_search() {
        let c6bar = Graph::cycle(6).complement();
        let emb = find_induced(&c6bar, &c6bar).unwrap();
        assert_eq!(emb, vec![0, 1, 2, 3, 4, 5]);
        assert!(find_induced(&Graph::complete(6), &c6bar).is_none());
        let emb = find_induced(&Graph::cycle(6), &Graph::path(4)).unwrap();
        let image: VertexSet = emb.iter().copied().collect();
        let (sub, map) = Graph::cycle(6).induced(image).unwrap();
        let back: Vec<usize> = emb.iter().map(|w| map.iter().position(|x| x == w).unwrap()).collect();
        let mut relabel = vec![0; 4];
        for (i, &b) in back.iter().enumerate() {
            relabel[b] = i;
        }
        assert_eq!(sub.permuted(&relabel), Graph::path(4));
    }

    #[test]
    fn weak_chordality() {
        let hole = weakly_chordal_violation(&Graph::cycle(6)).unwrap().unwrap();
        assert!(!hole.in_complement);
        assert_eq!(hole.cycle.len(), 6);
        assert!(is_weakly_chordal(&Graph::path(4)).unwrap());
        let c5 = weakly_chordal_violation(&Graph::cycle(5)).unwrap().unwrap();
        assert_eq!(c5.cycle.len(), 5);
        assert!(!is_weakly_chordal(&Graph::cycle(7).complement()).unwrap());
        assert!(is_weakly_chordal(&Graph::cycle(4)).unwrap());
        // the complement of P5 is the house
        assert!(is_weakly_chordal(&Graph::path(5)).unwrap());
    }
}
