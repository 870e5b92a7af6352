use super::{sweep, Outcome, SubjectOutcome, SweepReport};
use crate::comparability::is_cocomparability;
use crate::graph::{Graph, VertexSet};
use crate::par::Exec;
use crate::recognition::{
    c6bar, find_2p3bar, find_c6bar, is_interval_k_graph, is_interval_k_graph_scoped, two_p3bar, PartitionScope,
    INTERVAL_K_MAX_VERTICES,
};

const CHECK: &str = "forbidden-subgraph-conjecture";

/// The induced subgraph on `embedding`, in embedding order, equals `pattern`.
fn embeds(g: &Graph, pattern: &Graph, embedding: &[usize]) -> bool {
    let s: VertexSet = embedding.iter().copied().collect();
    embedding.len() == pattern.n()
        && s.len() == pattern.n()
        && (0..pattern.n()).all(|i| (0..i).all(|j| g.has_edge(embedding[i], embedding[j]) == pattern.has_edge(i, j)))
}

fn check_one(g: &Graph) -> SubjectOutcome {
    let mut out = SubjectOutcome::new(g.to_graph6());
    if g.n() > INTERVAL_K_MAX_VERTICES {
        out.push(CHECK, Outcome::Incomplete(format!("{} vertices exceed the oracle bound", g.n())));
        return out;
    }
    if is_cocomparability(g).is_none() {
        return out;
    }
    out.classes.push("cocomparability");
    let c6 = find_c6bar(g);
    let p3 = find_2p3bar(g);
    out.class_if("contains-c6bar", c6.is_some());
    out.class_if("contains-2p3bar", p3.is_some());
    let free = c6.is_none() && p3.is_none();
    out.class_if("forbidden-free", free);
    let verdict = match is_interval_k_graph(g, None) {
        Ok(v) => v,
        Err(e) => {
            out.push(CHECK, e.into());
            return out;
        }
    };
    out.class_if("interval-k", verdict.is_member());
    let outcome = match (verdict.rep(), free) {
        (Some(_), true) | (None, false) => Outcome::Pass,
        (Some(rep), false) => {
            let (pattern, name, emb) = match (c6, p3) {
                (Some(e), _) => (c6bar(), "C6-complement", e),
                (None, Some(e)) => (two_p3bar(), "2P3-complement", e),
                (None, None) => unreachable!("not forbidden-free"),
            };
            let verified = rep.realizes(g) && embeds(g, &pattern, &emb);
            Outcome::Fail(format!(
                "interval k-graph containing an induced {name} on {emb:?}; intervals {}; re-verified: {verified}",
                rep.to_text()
            ))
        }
        (None, true) => {
            let recheck = is_interval_k_graph_scoped(g, None, PartitionScope::All).map(|v| !v.is_member());
            let cert = verdict.certificate().map(ToString::to_string).unwrap_or_default();
            Outcome::Fail(format!(
                "no induced C6-complement or 2P3-complement, yet not an interval k-graph ({cert}); \
                 all-partition re-check agrees: {}",
                recheck.unwrap_or(false)
            ))
        }
    };
    out.push(CHECK, outcome);
    out
}

/// Over the cocomparability graphs among `graphs`, compares interval k-graph
/// membership (any k) with having neither forbidden pattern induced. Each
/// disagreement is a counterexample, reported with its witness.
pub fn conjecture_check(graphs: &[Graph], n: Option<usize>, exec: Exec) -> SweepReport {
    sweep("conjecture", n, graphs, exec, check_one)
}
