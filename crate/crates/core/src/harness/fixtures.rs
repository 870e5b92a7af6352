//! Hand-encoded graphs and orders from the figures, each with the claims
//! made about it. A failed claim means the encoding is wrong: re-read the
//! figure before touching the checks.

use super::{sweep, Outcome, SubjectOutcome, SweepReport};
use crate::comparability::{asteroid_on, find_odd_asteroid, is_cocomparability, verify_asteroid};
use crate::constructions::{
    build_class_proper_rep, cover_violation, intervals_from_labeled_poset, is_chain_labeling,
    is_elimination_ordering, mu, ordering_violation, repair_chain_cover, chain_labeling, BuildOutcome,
    DEFAULT_ORIENTATION_LIMIT,
};
use crate::graph::{canonical_form, chromatic_number, is_weakly_chordal, Graph, VertexSet};
use crate::order::{minimum_chain_covers, ChainCover, Labeling, Poset};
use crate::par::Exec;
use crate::recognition::{
    c6bar, find_2p3bar, find_c6bar, is_interval_k_graph, is_probe_interval_graph, is_proper_interval_k_graph,
    is_unit_interval_k_graph, two_p3bar,
};
use crate::representations::{IntervalKRep, Q};

#[derive(Clone, Debug)]
pub enum FixtureObject {
    Graph(Graph),
    Poset(Poset),
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub object: FixtureObject,
}

/// Graph on single-character labels; `edges` lists label pairs.
fn named_graph(labels: &str, edges: &str) -> Graph {
    let names: Vec<char> = labels.chars().collect();
    let idx = |c: char| names.iter().position(|&x| x == c).expect("edge uses a declared label");
    let pairs: Vec<(usize, usize)> = edges
        .split_whitespace()
        .map(|e| {
            let mut cs = e.chars();
            (idx(cs.next().unwrap()), idx(cs.next().unwrap()))
        })
        .collect();
    Graph::from_edges(names.len(), &pairs)
        .expect("fixture edges are valid")
        .with_labels(names.iter().map(|c| c.to_string()))
}

/// Order on single-character labels; `relations` lists `x<y` items.
fn named_poset(labels: &str, relations: &str) -> Poset {
    let names: Vec<char> = labels.chars().collect();
    let idx = |c: char| names.iter().position(|&x| x == c).expect("relation uses a declared label");
    let pairs: Vec<(usize, usize)> = relations
        .split_whitespace()
        .map(|r| {
            let cs: Vec<char> = r.chars().collect();
            (idx(cs[0]), idx(cs[2]))
        })
        .collect();
    Poset::from_pairs(names.len(), &pairs)
        .expect("fixture relations are valid")
        .with_labels(names.iter().map(|c| c.to_string()))
}

pub fn fixtures() -> Vec<Fixture> {
    let graph = |name, description, g| Fixture {
        name,
        description,
        object: FixtureObject::Graph(g),
    };
    let poset = |name, description, p| Fixture {
        name,
        description,
        object: FixtureObject::Poset(p),
    };
    vec![
        graph(
            "T2",
            "interval 2-graph with an asteroidal triple",
            named_graph("ouavbwc", "ou ua ov vb ow wc"),
        ),
        graph(
            "G",
            "interval 3-graph with a 5-asteroid",
            named_graph("qcaxbpr", "qp qr ca cb cr ax ap xp xr bp br pr"),
        ),
        graph(
            "M",
            "cocomparability interval 3-graph, not probe interval",
            named_graph("axpybq", "ax ap ay xp xq py pb yb yq bq"),
        ),
        graph("C6bar", "complement of the 6-cycle", c6bar()),
        graph(
            "F",
            "obstruction for proper interval k-graphs",
            named_graph("12345678", "13 23 24 34 36 56 57 67 68"),
        ),
        poset("crown3", "3-crown", Poset::crown3()),
        poset(
            "script-M",
            "order with three minimum chain covers",
            named_poset("12345", "1<4 1<5 2<4 3<5"),
        ),
        graph("2P3bar", "complement of two disjoint 3-paths", two_p3bar()),
    ]
}

/// The poset drawn next to M: a transitive orientation of its complement.
fn m_poset() -> Poset {
    named_poset("axpybq", "a<b a<q x<y x<b p<q")
}

fn v(g: &Graph, label: &str) -> usize {
    g.vertex(label).expect("fixture label")
}

/// Some path from `s` to `t` whose closed neighbourhood is everything.
fn has_dominating_path(g: &Graph, s: usize, t: usize) -> bool {
    fn go(g: &Graph, path: &mut Vec<usize>, on: VertexSet, t: usize) -> bool {
        let last = *path.last().expect("non-empty");
        if last == t {
            let cover = path.iter().fold(VertexSet::EMPTY, |m, &u| m.union(g.closed_neighbors(u)));
            return cover == g.vertices();
        }
        for w in g.neighbors(last).difference(on) {
            path.push(w);
            let mut on2 = on;
            on2.insert(w);
            if go(g, path, on2, t) {
                return true;
            }
            path.pop();
        }
        false
    }
    go(g, &mut vec![s], VertexSet::singleton(s), t)
}

fn member(r: Result<crate::recognition::RecognitionVerdict, crate::recognition::RecognitionError>) -> Option<bool> {
    r.ok().map(|v| v.is_member())
}

fn class_proper_k(g: &Graph) -> Option<usize> {
    is_cocomparability(g)?;
    match build_class_proper_rep(g, DEFAULT_ORIENTATION_LIMIT) {
        Ok(BuildOutcome::Built(b)) if b.rep.realizes(g) && b.rep.is_class_proper() => Some(b.rep.k()),
        _ => None,
    }
}

fn claims_t2(g: &Graph) -> Vec<(&'static str, bool)> {
    let abc = [v(g, "a"), v(g, "b"), v(g, "c")];
    vec![
        ("asteroidal triple on a, b, c", asteroid_on(g, &abc).is_some_and(|a| verify_asteroid(g, &a))),
        ("interval 2-graph", member(is_interval_k_graph(g, Some(2))) == Some(true)),
        ("not cocomparability", is_cocomparability(g).is_none()),
        ("not class-proper", class_proper_k(g).is_none()),
    ]
}

fn claims_g(g: &Graph) -> Vec<(&'static str, bool)> {
    let tuple: Vec<usize> = ["q", "x", "a", "c", "b"].iter().map(|l| v(g, l)).collect();
    vec![
        ("5-asteroid on q, x, a, c, b", asteroid_on(g, &tuple).is_some_and(|a| verify_asteroid(g, &a))),
        ("no asteroidal triple", find_odd_asteroid(g, 3).is_none()),
        ("interval 3-graph", member(is_interval_k_graph(g, Some(3))) == Some(true)),
        ("not an interval 2-graph", member(is_interval_k_graph(g, Some(2))) == Some(false)),
        ("not cocomparability", is_cocomparability(g).is_none()),
        ("not class-proper", class_proper_k(g).is_none()),
    ]
}

fn claims_m(g: &Graph) -> Vec<(&'static str, bool)> {
    let p = m_poset();
    let n = g.n();
    let order: Vec<usize> = ["a", "x", "p", "y", "b", "q"].iter().map(|l| v(g, l)).collect();
    let lab = Labeling::new(order.clone(), n).expect("permutation");
    let (a, x, pp, y) = (v(g, "a"), v(g, "x"), v(g, "p"), v(g, "y"));
    let inc_a: VertexSet = [x, y, pp].into_iter().collect();
    let mut rest = p.elements();
    rest.remove(a);
    let seconds: Vec<usize> = rest
        .iter()
        .filter(|&z| p.is_minimal_in(z, rest) && p.decompose_into_chains(p.incomparables(z).intersection(rest)).is_some())
        .collect();
    vec![
        ("cocomparability", is_cocomparability(g).is_some()),
        ("order is an orientation of the complement", p.incomparability_graph() == *g),
        ("3-chromatic", chromatic_number(g).ok() == Some(3)),
        ("class-proper interval 3-graph", class_proper_k(g).is_some_and(|k| k <= 3)),
        ("not probe interval", member(is_probe_interval_graph(g)) == Some(false)),
        ("elimination order a, x, p, y, b, q", is_elimination_ordering(g, &order)),
        ("a, x, p, y, b, q is a valid labeling", is_chain_labeling(&p, &lab).is_none()),
        (
            "a is minimal, incomparable to the chains x<y and p",
            p.is_minimal_in(a, p.elements())
                && p.incomparables(a) == inc_a
                && p.lt(x, y)
                && p.decompose_into_chains(inc_a).is_some_and(|c| c.len() == 2),
        ),
        ("x is the only valid second element", seconds == vec![x]),
    ]
}

fn claims_c6bar(g: &Graph) -> Vec<(&'static str, bool)> {
    vec![
        ("cocomparability", is_cocomparability(g).is_some()),
        ("not weakly chordal", is_weakly_chordal(g).ok() == Some(false)),
        ("not an interval k-graph", member(is_interval_k_graph(g, None)) == Some(false)),
    ]
}

fn claims_f(g: &Graph) -> Vec<(&'static str, bool)> {
    let identity: Vec<usize> = (0..g.n()).collect();
    let class: Vec<usize> = ["1278", "35", "46"]
        .iter()
        .enumerate()
        .flat_map(|(c, s)| s.chars().map(move |l| (c, l)))
        .fold(vec![0; g.n()], |mut acc, (c, l)| {
            acc[v(g, &l.to_string())] = c;
            acc
        });
    let f3 = g.without_vertex(v(g, "3"));
    vec![
        ("not a proper interval k-graph", member(is_proper_interval_k_graph(g, None)) == Some(false)),
        ("not a unit interval k-graph", member(is_unit_interval_k_graph(g, None)) == Some(false)),
        ("labeled order is a valid ordering", ordering_violation(g, &identity, &class).is_none()),
        ("2 and 5 are a dominating pair", has_dominating_path(g, v(g, "2"), v(g, "5"))),
        ("cocomparability", is_cocomparability(g).is_some()),
        ("3-chromatic", chromatic_number(g).ok() == Some(3)),
        ("class-proper interval 3-graph", class_proper_k(g).is_some_and(|k| k <= 3)),
        ("F - 3 is an interval 3-graph", member(is_interval_k_graph(&f3, Some(3))) == Some(true)),
        ("F - 3 is cocomparability", is_cocomparability(&f3).is_some()),
    ]
}

fn claims_crown(p: &Poset) -> Vec<(&'static str, bool)> {
    let g = p.incomparability_graph();
    vec![
        (
            "incomparability graph is the C6-complement",
            canonical_form(&g).ok() == canonical_form(&c6bar()).ok(),
        ),
        ("no valid labeling", matches!(chain_labeling(p), Ok(None))),
        ("incomparability graph is not an interval k-graph", member(is_interval_k_graph(&g, None)) == Some(false)),
    ]
}

/// Intervals from the formula for a given cover, without any repair.
fn naive_intervals(p: &Poset, lab: &Labeling, cover: &ChainCover) -> Option<IntervalKRep> {
    let n = p.n();
    let m = mu(p, lab);
    let pos = lab.positions();
    let class = cover.assignment(n);
    let iv = (0..n)
        .map(|x| {
            let i = pos[x] as i64 + 1;
            let left = Q::from(m[x] as i64) - (Q::from(1) - Q::new(i, n as i64));
            (left, Q::from(i))
        })
        .collect();
    IntervalKRep::new(cover.len(), iv, class).ok()
}

fn claims_script_m(p: &Poset) -> Vec<(&'static str, bool)> {
    let n = p.n();
    let lab = Labeling::identity(n);
    let covers = minimum_chain_covers(p);
    let bad: Vec<&ChainCover> = covers.iter().filter(|c| cover_violation(p, &lab, c).is_some()).collect();
    let expected_bad = ChainCover {
        chains: vec![vec![0, 4], vec![1, 3], vec![2]],
    };
    let g = p.incomparability_graph();
    let v3_wrong = bad.first().and_then(|c| naive_intervals(p, &lab, c)).is_some_and(|rep| {
        let h = rep.graph();
        p.lt(2, 4) && (0..n).filter(|&u| u != 2).all(|u| h.has_edge(2, u))
    });
    let repaired = bad.first().and_then(|c| repair_chain_cover(p, &lab, c).ok());
    let repaired_ok = repaired.is_some_and(|c| {
        cover_violation(p, &lab, &c).is_none()
            && intervals_from_labeled_poset(p, &lab, &c).is_ok_and(|rep| rep.realizes(&g) && rep.is_class_proper())
    });
    vec![
        ("identity labeling is valid", is_chain_labeling(p, &lab).is_none()),
        ("three minimum chain covers", covers.len() == 3),
        ("exactly one cover is not compliant", bad.len() == 1),
        ("the bad cover is 15, 24, 3", bad.first().is_some_and(|c| **c == expected_bad)),
        ("bad cover makes 3 adjacent to everything although 3 < 5", v3_wrong),
        ("repair yields a realizing class-proper cover", repaired_ok),
    ]
}

fn claims_2p3bar(g: &Graph) -> Vec<(&'static str, bool)> {
    vec![
        ("cocomparability", is_cocomparability(g).is_some()),
        ("contains itself, no C6-complement", find_2p3bar(g).is_some() && find_c6bar(g).is_none()),
        ("not an interval k-graph", member(is_interval_k_graph(g, None)) == Some(false)),
    ]
}

/// One check per claim, named by the claim.
pub fn check_fixture(f: &Fixture) -> SubjectOutcome {
    let claims = match (&f.object, f.name) {
        (FixtureObject::Graph(g), "T2") => claims_t2(g),
        (FixtureObject::Graph(g), "G") => claims_g(g),
        (FixtureObject::Graph(g), "M") => claims_m(g),
        (FixtureObject::Graph(g), "C6bar") => claims_c6bar(g),
        (FixtureObject::Graph(g), "F") => claims_f(g),
        (FixtureObject::Poset(p), "crown3") => claims_crown(p),
        (FixtureObject::Poset(p), "script-M") => claims_script_m(p),
        (FixtureObject::Graph(g), "2P3bar") => claims_2p3bar(g),
        _ => Vec::new(),
    };
    let mut out = SubjectOutcome::new(f.name);
    for (claim, holds) in claims {
        out.push(
            claim,
            Outcome::from_bool(holds, || {
                format!("{}: claim fails; re-read the figure and fix the encoding", f.description)
            }),
        );
    }
    out
}

pub fn fixture_report(exec: Exec) -> SweepReport {
    sweep("fixtures", None, &fixtures(), exec, check_fixture)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_has_claims() {
        for f in fixtures() {
            let o = check_fixture(&f);
            assert!(o.results.len() >= 3, "{}", f.name);
        }
    }

    #[test]
    fn t2_shape() {
        let FixtureObject::Graph(g) = &fixtures()[0].object else { panic!() };
        assert_eq!(g.n(), 7);
        assert_eq!(g.degree(v(g, "o")), 3);
        assert_eq!(g.label(0), "o");
    }

    #[test]
    fn all_claims_hold() {
        let r = fixture_report(Exec::serial());
        assert!(r.all_passed(), "{}", r.to_text(true));
    }
}
