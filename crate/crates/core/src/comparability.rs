//! Transitive orientations, cocomparability and odd asteroids.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::order::Poset;

/// An orientation of every edge of a host graph: `out[u]` bit `v` set iff
/// the edge `uv` is directed `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    out: Vec<u64>,
}

impl Orientation {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut out = vec![0u64; n];
        for &(u, v) in arcs {
            out[u] |= 1 << v;
        }
        Orientation { out }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    /// Arcs `(u, v)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| VertexSet(self.out[u]).iter().map(move |v| (u, v)))
            .collect()
    }

    /// Every edge of `g` oriented exactly once and nothing else.
    pub fn covers(&self, g: &Graph) -> bool {
        self.n() == g.n()
            && (0..g.n()).all(|u| {
                let back = (0..g.n()).fold(0u64, |acc, w| acc | (self.out[w] >> u & 1) << w);
                self.out[u] & back == 0 && self.out[u] | back == g.row(u)
            })
    }

    /// Triple scan: `u -> v -> w` always comes with `u -> w`.
    pub fn is_transitive_on(&self, g: &Graph) -> bool {
        if !self.covers(g) {
            return false;
        }
        (0..self.n()).all(|u| {
            VertexSet(self.out[u])
                .iter()
                .all(|v| self.out[v] & !self.out[u] == 0)
        })
    }

    /// The strict order whose comparability graph is the host graph. Only
    /// meaningful for transitive orientations.
    pub fn to_poset(&self) -> Poset {
        Poset::from_closed_rows(self.out.clone())
    }

    pub fn reversed(&self) -> Orientation {
        let n = self.n();
        let mut out = vec![0u64; n];
        for (u, v) in self.arcs() {
            out[v] |= 1 << u;
        }
        Orientation { out }
    }
}

#[derive(Clone)]
struct State {
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl State {
    fn decided(&self, u: usize) -> u64 {
        self.out[u] | self.inn[u]
    }

    /// Sets `a -> b` and closes under forcing and transitivity; `false` on
    /// contradiction.
    fn force(&mut self, g: &Graph, a: usize, b: usize) -> bool {
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            if self.inn[a] >> b & 1 == 1 {
                return false;
            }
            if self.out[a] >> b & 1 == 1 {
                continue;
            }
            self.out[a] |= 1 << b;
            self.inn[b] |= 1 << a;
            // a -> b with b' adjacent to a but not to b: a -> b' too
            for b2 in VertexSet(g.row(a) & !g.row(b) & !(1 << b)) {
                stack.push((a, b2));
            }
            // a' adjacent to b but not to a: a' -> b
            for a2 in VertexSet(g.row(b) & !g.row(a) & !(1 << a)) {
                stack.push((a2, b));
            }
            for w in VertexSet(self.out[b]) {
                if !g.has_edge(a, w) {
                    return false;
                }
                stack.push((a, w));
            }
            for w in VertexSet(self.inn[a]) {
                if !g.has_edge(w, b) {
                    return false;
                }
                stack.push((w, b));
            }
        }
        true
    }
}

/// Outcome of a bounded orientation enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationList {
    pub orientations: Vec<Orientation>,
    /// More orientations exist beyond the limit.
    pub truncated: bool,
}

/// Calls `visit` on every transitive orientation of `g`, in a fixed order
/// (the lowest undecided edge `uv`, `u < v`, is tried as `u -> v` first),
/// until it returns `Break`. Returns `Break` iff stopped early.
pub fn for_each_transitive_orientation(
    g: &Graph,
    mut visit: impl FnMut(&Orientation) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = g.n();
    let state = State {
        out: vec![0; n],
        inn: vec![0; n],
    };
    branch(g, state, &mut visit)
}

fn branch(
    g: &Graph,
    state: State,
    visit: &mut impl FnMut(&Orientation) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let open = (0..g.n()).find_map(|u| {
        let free = g.row(u) & !state.decided(u) & !crate::graph::low_mask(u + 1);
        (free != 0).then(|| (u, free.trailing_zeros() as usize))
    });
    let Some((u, v)) = open else {
        let o = Orientation { out: state.out };
        debug_assert!(o.is_transitive_on(g));
        return visit(&o);
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut s = state.clone();
        if s.force(g, a, b) {
            branch(g, s, visit)?;
        }
    }
    ControlFlow::Continue(())
}

/// The first transitive orientation in enumeration order, if any.
pub fn find_transitive_orientation(g: &Graph) -> Option<Orientation> {
    let mut found = None;
    let _ = for_each_transitive_orientation(g, |o| {
        found = Some(o.clone());
        ControlFlow::Break(())
    });
    found
}

/// Up to `limit` transitive orientations, with a flag if more exist.
pub fn all_transitive_orientations(g: &Graph, limit: usize) -> OrientationList {
    let mut orientations = Vec::new();
    let mut truncated = false;
    let _ = for_each_transitive_orientation(g, |o| {
        if orientations.len() == limit {
            truncated = true;
            return ControlFlow::Break(());
        }
        orientations.push(o.clone());
        ControlFlow::Continue(())
    });
    OrientationList {
        orientations,
        truncated,
    }
}

/// A poset whose incomparability graph is `g`, if one exists.
pub fn is_cocomparability(g: &Graph) -> Option<Poset> {
    let p = find_transitive_orientation(&g.complement())?.to_poset();
    Some(match g.labels() {
        Some(l) => p.with_labels(l.iter().cloned()),
        None => p,
    })
}

/// Vertices `v_0..v_{2m}` with a path `P_i` from `v_i` to `v_{i+1}` for
/// every `i`, such that `P_{i+m}` avoids `v_i` and all its neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsteroidCertificate {
    pub vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl AsteroidCertificate {
    pub fn odd_len(&self) -> usize {
        self.vertices.len()
    }

    pub fn to_json(&self, g: &Graph) -> String {
        #[derive(Serialize)]
        struct Out {
            length: usize,
            vertices: Vec<String>,
            paths: Vec<Vec<String>>,
        }
        let names = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
        let out = Out {
            length: self.odd_len(),
            vertices: names(&self.vertices),
            paths: self.paths.iter().map(|p| names(p)).collect(),
        };
        serde_json::to_string_pretty(&out).expect("plain data serializes")
    }
}

/// Searches odd lengths 3, 5, ... up to `max_len` for an odd asteroid,
/// returning the first tuple (least vertex first, then lexicographic) of
/// the smallest length that has one.
pub fn find_odd_asteroid(g: &Graph, max_len: usize) -> Option<AsteroidCertificate> {
    let n = g.n();
    // comp[w][v]: component of v in g - N[w], or u8::MAX when v is in N[w]
    let comp: Vec<Vec<u8>> = (0..n)
        .map(|w| {
            let allowed = g.vertices().difference(g.closed_neighbors(w));
            let mut c = vec![u8::MAX; n];
            let mut id = 0;
            for v in allowed {
                if c[v] == u8::MAX {
                    for x in g.reach(v, allowed) {
                        c[x] = id;
                    }
                    id += 1;
                }
            }
            c
        })
        .collect();
    let mut len = 3;
    while len <= max_len.min(n) {
        let mut tuple = Vec::with_capacity(len);
        if extend_tuple(&comp, n, len, &mut tuple, 0) {
            let m = len / 2;
            let paths = (0..len)
                .map(|j| {
                    let w = tuple[(j + len - m) % len];
                    let allowed = g.vertices().difference(g.closed_neighbors(w));
                    g.shortest_path(tuple[j], tuple[(j + 1) % len], allowed)
                        .expect("component check guarantees a path")
                })
                .collect();
            return Some(AsteroidCertificate {
                vertices: tuple,
                paths,
            });
        }
        len += 2;
    }
    None
}

/// The certificate for the given odd tuple, with shortest paths, if the
/// tuple carries an odd asteroid.
pub fn asteroid_on(g: &Graph, tuple: &[usize]) -> Option<AsteroidCertificate> {
    let len = tuple.len();
    if len < 3 || len.is_multiple_of(2) || tuple.iter().any(|&v| v >= g.n()) {
        return None;
    }
    let m = len / 2;
    let paths = (0..len)
        .map(|j| {
            let w = tuple[(j + len - m) % len];
            let allowed = g.vertices().difference(g.closed_neighbors(w));
            g.shortest_path(tuple[j], tuple[(j + 1) % len], allowed)
        })
        .collect::<Option<Vec<_>>>()?;
    let cert = AsteroidCertificate {
        vertices: tuple.to_vec(),
        paths,
    };
    verify_asteroid(g, &cert).then_some(cert)
}

/// Constraint for path `j`: `v_j` and `v_{j+1}` in one component of
/// `g - N[v_{j-m}]`.
fn extend_tuple(comp: &[Vec<u8>], n: usize, len: usize, t: &mut Vec<usize>, used: u64) -> bool {
    let m = len / 2;
    let ok = |t: &[usize], j: usize| {
        let (a, b, w) = (t[j], t[(j + 1) % len], t[(j + len - m) % len]);
        let c = &comp[w];
        c[a] != u8::MAX && c[a] == c[b]
    };
    let placed = t.len();
    if placed == len {
        return true;
    }
    let lo = if placed == 0 { 0 } else { t[0] + 1 };
    for v in lo..n {
        if used >> v & 1 == 1 {
            continue;
        }
        t.push(v);
        let p = t.len();
        // constraints whose three indices all lie in 0..p
        let fine = (0..len).all(|j| {
            let idx = [j, (j + 1) % len, (j + len - m) % len];
            if idx.iter().any(|&i| i >= p) || !idx.contains(&(p - 1)) {
                return true;
            }
            ok(t, j)
        });
        if fine && extend_tuple(comp, n, len, t, used | 1 << v) {
            return true;
        }
        t.pop();
    }
    false
}

/// Independent re-check of every certificate condition. The vertex `v_i`
/// itself is also required to be off `P_{i+m}`.
pub fn verify_asteroid(g: &Graph, cert: &AsteroidCertificate) -> bool {
    let len = cert.vertices.len();
    if len < 3 || len.is_multiple_of(2) || cert.paths.len() != len {
        return false;
    }
    let n = g.n();
    if cert.vertices.iter().any(|&v| v >= n) {
        return false;
    }
    let distinct: VertexSet = cert.vertices.iter().copied().collect();
    if distinct.len() != len {
        return false;
    }
    let m = len / 2;
    (0..len).all(|i| {
        let path = &cert.paths[i];
        let (s, t) = (cert.vertices[i], cert.vertices[(i + 1) % len]);
        let is_path = path.first() == Some(&s)
            && path.last() == Some(&t)
            && path.iter().all(|&x| x < n)
            && path.windows(2).all(|w| g.has_edge(w[0], w[1]));
        let w = cert.vertices[(i + len - m) % len];
        let blocked = g.closed_neighbors(w);
        is_path && path.iter().all(|&x| !blocked.contains(x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_orientations(g: &Graph) -> usize {
        let edges = g.edges();
        (0u64..1 << edges.len())
            .filter(|&m| {
                let arcs: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if m >> i & 1 == 1 { (v, u) } else { (u, v) })
                    .collect();
                Orientation::from_arcs(g.n(), &arcs).is_transitive_on(g)
            })
            .count()
    }

    #[test]
    fn small_orientation_counts() {
        assert_eq!(all_transitive_orientations(&Graph::new(3), 10).orientations.len(), 1);
        assert_eq!(all_transitive_orientations(&Graph::path(2), 10).orientations.len(), 2);
        assert_eq!(all_transitive_orientations(&Graph::path(3), 10).orientations.len(), 2);
        assert_eq!(all_transitive_orientations(&Graph::complete(3), 10).orientations.len(), 6);
        assert!(find_transitive_orientation(&Graph::cycle(5)).is_none());
        assert_eq!(brute_orientations(&Graph::cycle(5)), 0);
        let list = all_transitive_orientations(&Graph::complete(4), 5);
        assert_eq!(list.orientations.len(), 5);
        assert!(list.truncated);
        assert!(!all_transitive_orientations(&Graph::complete(3), 6).truncated);
    }

    #[test]
    fn p4_complement() {
        // a-b-c-d; complement edges ac, ad, bd
        let g = Graph::path(4).complement();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (1, 3)]);
        let o = Orientation::from_arcs(4, &[(0, 2), (0, 3), (1, 3)]);
        assert!(o.is_transitive_on(&g));
        let all = all_transitive_orientations(&g, 100).orientations;
        assert!(all.contains(&o));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=5 {
            for g in crate::graph::enumerate_graphs(n, None).unwrap() {
                let list = all_transitive_orientations(&g, usize::MAX);
                assert_eq!(list.orientations.len(), brute_orientations(&g), "{}", g.to_graph6());
                let mut sorted = list.orientations.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), list.orientations.len());
                for o in &list.orientations {
                    assert!(o.is_transitive_on(&g));
                }
            }
        }
    }

    #[test]
    fn cocomparability_witnesses() {
        let c6bar = Graph::cycle(6).complement();
        let p = is_cocomparability(&c6bar).unwrap();
        assert_eq!(p.incomparability_graph(), c6bar);
        assert_eq!(p.canonical_form().unwrap(), Poset::crown3().canonical_form().unwrap());
        assert!(is_cocomparability(&Graph::cycle(5)).is_none());
        let edgeless = is_cocomparability(&Graph::new(4)).unwrap();
        assert_eq!(edgeless.width(), 1);
    }

    #[test]
    fn c5_asteroid() {
        let g = Graph::cycle(5);
        let cert = find_odd_asteroid(&g, 5).unwrap();
        assert_eq!(cert.odd_len(), 5);
        assert!(verify_asteroid(&g, &cert));
        let hand = AsteroidCertificate {
            vertices: (0..5).collect(),
            paths: (0..5).map(|j| vec![j, (j + 1) % 5]).collect(),
        };
        assert!(verify_asteroid(&g, &hand));
        // P_0 rerouted the long way passes through neighbours of v_3
        let mut bad = hand.clone();
        bad.paths[0] = vec![0, 4, 3, 2, 1];
        assert!(!verify_asteroid(&g, &bad));
        let mut repeated = hand.clone();
        repeated.vertices[1] = 0;
        assert!(!verify_asteroid(&g, &repeated));
    }

    #[test]
    fn no_asteroids() {
        assert!(find_odd_asteroid(&Graph::cycle(6).complement(), 5).is_none());
        assert!(find_odd_asteroid(&Graph::complete(4), 3).is_none());
        assert!(find_odd_asteroid(&Graph::path(6), 5).is_none());
        let at = find_odd_asteroid(&Graph::cycle(6), 5).unwrap();
        assert_eq!(at.odd_len(), 3);
        assert_eq!(at.vertices, vec![0, 2, 4]);
    }

    #[test]
    fn gallai_small() {
        for n in 1..=6 {
            for g in crate::graph::enumerate_graphs(n, None).unwrap() {
                let max = if n % 2 == 1 { n } else { n - 1 };
                let oriented = find_transitive_orientation(&g.complement()).is_some();
                let ast = find_odd_asteroid(&g, max);
                if let Some(c) = &ast {
                    assert!(verify_asteroid(&g, c));
                }
                assert_eq!(oriented, ast.is_none(), "{}", g.to_graph6());
            }
        }
    }

    #[test]
    fn certificate_json() {
        let g = Graph::cycle(5).with_labels(["a", "b", "c", "d", "e"]);
        let cert = find_odd_asteroid(&g, 5).unwrap();
        let v: serde_json::Value = serde_json::from_str(&cert.to_json(&g)).unwrap();
        assert_eq!(v["length"], 5);
        assert_eq!(v["vertices"][0], "a");
    }
}
