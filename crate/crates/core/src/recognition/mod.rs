//! Brute-force recognition oracles and forbidden-subgraph recognizers.
//!
//! Every verdict carries either a witness representation that passes the
//! matching validator, or a certificate of failure.

mod interval;
mod proper;

use thiserror::Error;

use crate::comparability::{find_odd_asteroid, is_cocomparability, AsteroidCertificate};
use crate::constructions::{build_class_proper_rep, BuildOutcome, ConstructionError};
use crate::graph::{chromatic_number, find_induced, Graph, GraphError};
use crate::order::Poset;
use crate::representations::{IntervalKRep, RepError};

pub use interval::{
    independent_partitions, interval_k_by_fill_in, is_interval_graph, is_interval_k_graph,
    is_interval_k_graph_scoped, is_probe_interval_graph, maximal_cliques, PartitionScope, INTERVAL_GRAPH_MAX_VERTICES,
    INTERVAL_K_MAX_VERTICES,
};
pub use proper::{find_umbrella_ordering_any, is_proper_interval_k_graph, is_unit_interval_k_graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("orientation cap of {0} reached")]
    Truncated(usize),
    #[error("theorem check failed on {graph6}: {detail}")]
    TheoremViolation { graph6: String, detail: String },
}

#[derive(Clone, Debug)]
pub enum Witness {
    Intervals(IntervalKRep),
    /// A cocomparability witness together with intervals.
    Order { poset: Poset, rep: IntervalKRep },
}

impl Witness {
    pub fn rep(&self) -> &IntervalKRep {
        match self {
            Witness::Intervals(rep) | Witness::Order { rep, .. } => rep,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Certificate {
    /// The search space was exhausted.
    Exhausted(String),
    /// An induced copy of a forbidden pattern, as the pattern's vertex
    /// images.
    Forbidden { pattern: &'static str, embedding: Vec<usize> },
    NotCocomparability(Option<AsteroidCertificate>),
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::Exhausted(s) => write!(f, "exhausted {s}"),
            Certificate::Forbidden { pattern, embedding } => write!(f, "induced {pattern} on {embedding:?}"),
            Certificate::NotCocomparability(Some(a)) => {
                write!(f, "odd asteroid on {:?}", a.vertices)
            }
            Certificate::NotCocomparability(None) => write!(f, "complement not transitively orientable"),
        }
    }
}

/// Exactly one of witness and certificate is present.
#[derive(Clone, Debug)]
pub struct RecognitionVerdict {
    witness: Option<Witness>,
    certificate: Option<Certificate>,
}

impl RecognitionVerdict {
    pub fn member(w: Witness) -> Self {
        RecognitionVerdict {
            witness: Some(w),
            certificate: None,
        }
    }

    pub fn non_member(c: Certificate) -> Self {
        RecognitionVerdict {
            witness: None,
            certificate: Some(c),
        }
    }

    pub fn is_member(&self) -> bool {
        self.witness.is_some()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn rep(&self) -> Option<&IntervalKRep> {
        self.witness.as_ref().map(Witness::rep)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        self.certificate.as_ref()
    }
}

/// Complement of the 6-cycle: triangles 024, 135 and the matching 03, 14, 25.
pub fn c6bar() -> Graph {
    Graph::from_edges(6, &[(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 3), (1, 4), (2, 5)])
        .expect("valid pattern")
}

/// Complement of two disjoint paths a-b-c, d-e-f (vertices 0..6).
pub fn two_p3bar() -> Graph {
    let mut edges = vec![(0, 2), (3, 5)];
    edges.extend((0..3).flat_map(|u| (3..6).map(move |v| (u, v))));
    Graph::from_edges(6, &edges).expect("valid pattern")
}

pub fn find_c6bar(g: &Graph) -> Option<Vec<usize>> {
    find_induced(g, &c6bar())
}

pub fn find_2p3bar(g: &Graph) -> Option<Vec<usize>> {
    find_induced(g, &two_p3bar())
}

/// Runs the order-to-intervals pipeline; `k` bounds the classes.
pub fn is_class_proper_interval_k_graph(g: &Graph, k: Option<usize>, limit: usize) -> Result<RecognitionVerdict, RecognitionError> {
    let Some(poset) = is_cocomparability(g) else {
        return Ok(RecognitionVerdict::non_member(Certificate::NotCocomparability(
            find_odd_asteroid(g, g.n()),
        )));
    };
    match build_class_proper_rep(g, limit)? {
        BuildOutcome::Built(b) if k.is_none_or(|k| b.rep.k() <= k) => Ok(RecognitionVerdict::member(Witness::Order {
            poset: b.poset,
            rep: b.rep,
        })),
        BuildOutcome::Built(b) => Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
            "class-proper representations need {} classes",
            b.rep.k()
        )))),
        BuildOutcome::Exhausted { orientations } => {
            drop(poset);
            Ok(RecognitionVerdict::non_member(Certificate::Exhausted(format!(
                "{orientations} transitive orientations of the complement"
            ))))
        }
        BuildOutcome::Truncated { orientations } => Err(RecognitionError::Truncated(orientations)),
    }
}

/// For 3-chromatic cocomparability graphs: a member iff there is no induced
/// complement of the 6-cycle. Members get their witness from the pipeline,
/// whose failure is reported as a theorem violation.
pub fn recognize_by_c6bar(g: &Graph, limit: usize) -> Result<RecognitionVerdict, RecognitionError> {
    let chi = chromatic_number(g)?;
    if chi != 3 {
        return Err(RecognitionError::Precondition(format!("chromatic number is {chi}, not 3")));
    }
    if is_cocomparability(g).is_none() {
        return Err(RecognitionError::Precondition("not a cocomparability graph".into()));
    }
    if let Some(embedding) = find_c6bar(g) {
        return Ok(RecognitionVerdict::non_member(Certificate::Forbidden {
            pattern: "C6-complement",
            embedding,
        }));
    }
    match build_class_proper_rep(g, limit)? {
        BuildOutcome::Built(b) => Ok(RecognitionVerdict::member(Witness::Order {
            poset: b.poset,
            rep: b.rep,
        })),
        BuildOutcome::Exhausted { orientations } => Err(RecognitionError::TheoremViolation {
            graph6: g.to_graph6(),
            detail: format!("no induced C6-complement, yet none of {orientations} orientations yields a representation"),
        }),
        BuildOutcome::Truncated { orientations } => Err(RecognitionError::Truncated(orientations)),
    }
}

/// Cocomparability and interval k-graph (any k) together.
pub fn is_cocomparability_interval_k(g: &Graph) -> Result<RecognitionVerdict, RecognitionError> {
    let Some(poset) = is_cocomparability(g) else {
        return Ok(RecognitionVerdict::non_member(Certificate::NotCocomparability(
            find_odd_asteroid(g, g.n()),
        )));
    };
    let v = is_interval_k_graph(g, None)?;
    Ok(match v.witness {
        Some(w) => RecognitionVerdict::member(Witness::Order {
            poset,
            rep: w.rep().clone(),
        }),
        None => v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::DEFAULT_ORIENTATION_LIMIT;

    #[test]
    fn patterns() {
        assert_eq!(c6bar(), Graph::cycle(6).complement());
        assert!(find_c6bar(&c6bar()).is_some());
        assert!(find_2p3bar(&two_p3bar()).is_some());
        assert!(find_c6bar(&Graph::complete(6)).is_none());
        assert!(find_2p3bar(&c6bar()).is_none());
        assert_eq!(two_p3bar().complement().edge_count(), 4);
    }

    #[test]
    fn c6bar_recognizer_small() {
        assert!(!recognize_by_c6bar(&c6bar(), DEFAULT_ORIENTATION_LIMIT).unwrap().is_member());
        let v = recognize_by_c6bar(&Graph::complete(3), DEFAULT_ORIENTATION_LIMIT).unwrap();
        let rep = v.rep().unwrap();
        assert_eq!(rep.k(), 3);
        assert!(rep.realizes(&Graph::complete(3)));
        assert!(matches!(
            recognize_by_c6bar(&Graph::path(3), DEFAULT_ORIENTATION_LIMIT),
            Err(RecognitionError::Precondition(_))
        ));
        assert!(matches!(
            recognize_by_c6bar(&Graph::cycle(5), DEFAULT_ORIENTATION_LIMIT),
            Err(RecognitionError::Precondition(_))
        ));
    }

    #[test]
    fn cocomparability_interval() {
        assert!(!is_cocomparability_interval_k(&c6bar()).unwrap().is_member());
        let c5 = is_cocomparability_interval_k(&Graph::cycle(5)).unwrap();
        assert!(matches!(c5.certificate(), Some(Certificate::NotCocomparability(Some(_)))));
        assert!(is_cocomparability_interval_k(&Graph::path(4)).unwrap().is_member());
        assert!(!is_interval_k_graph(&two_p3bar(), None).unwrap().is_member());
    }
}
