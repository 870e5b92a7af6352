//! Interval k-representations, two-channel segment (permutation)
//! representations and piecewise-linear function representations, with
//! exact validators.

mod render;

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::graph::Graph;

pub use render::{render_curves, render_hasse, render_intervals, RenderFormat};

/// Exact endpoint type.
pub type Q = Rational64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("representation has {rep} vertices but the graph has {graph}")]
    VertexCount { rep: usize, graph: usize },
    #[error("vertex {0}: left endpoint exceeds right endpoint")]
    InvertedInterval(usize),
    #[error("vertex {v}: class {class} not below k = {k}")]
    ClassOutOfRange { v: usize, class: usize, k: usize },
    #[error("a representation needs at least one class")]
    NoClasses,
    #[error("vertices {u} and {v} share position on channel {channel}")]
    DuplicatePosition { channel: usize, u: usize, v: usize },
    #[error("vertex {v}: curve has {found} breakpoints, expected {expected}")]
    CurveLength { v: usize, found: usize, expected: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{0}")]
    Precondition(String),
}

/// First pair on which a representation and a graph disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub u: usize,
    pub v: usize,
    /// `true`: the graph has `uv` but the representation does not produce
    /// it; `false`: the other way round.
    pub missing_edge: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalKRep {
    k: usize,
    intervals: Vec<(Q, Q)>,
    classes: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl IntervalKRep {
    pub fn new(k: usize, intervals: Vec<(Q, Q)>, classes: Vec<usize>) -> Result<Self, RepError> {
        if k == 0 {
            return Err(RepError::NoClasses);
        }
        if intervals.len() != classes.len() {
            return Err(RepError::VertexCount {
                rep: intervals.len(),
                graph: classes.len(),
            });
        }
        for (v, (&(l, r), &class)) in intervals.iter().zip(&classes).enumerate() {
            if l > r {
                return Err(RepError::InvertedInterval(v));
            }
            if class >= k {
                return Err(RepError::ClassOutOfRange { v, class, k });
            }
        }
        Ok(IntervalKRep {
            k,
            intervals,
            classes,
            labels: None,
        })
    }

    /// Integer endpoints, for tests and fixtures.
    pub fn from_ints(k: usize, spec: &[(i64, i64, usize)]) -> Result<Self, RepError> {
        IntervalKRep::new(
            k,
            spec.iter().map(|&(l, r, _)| (Q::from(l), Q::from(r))).collect(),
            spec.iter().map(|&(_, _, c)| c).collect(),
        )
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn interval(&self, v: usize) -> (Q, Q) {
        self.intervals[v]
    }

    pub fn left(&self, v: usize) -> Q {
        self.intervals[v].0
    }

    pub fn right(&self, v: usize) -> Q {
        self.intervals[v].1
    }

    pub fn class(&self, v: usize) -> usize {
        self.classes[v]
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn intervals(&self) -> &[(Q, Q)] {
        &self.intervals
    }

    /// Closed intervals: touching at a point counts.
    pub fn intersects(&self, u: usize, v: usize) -> bool {
        let (a, b) = self.intervals[u];
        let (c, d) = self.intervals[v];
        a.max(c) <= b.min(d)
    }

    /// Whether `u` and `v` are joined in the represented graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.classes[u] != self.classes[v] && self.intersects(u, v)
    }

    /// The graph this representation realizes.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `None` when the representation realizes `g` exactly, otherwise the
    /// first disagreeing pair in lexicographic order.
    pub fn discrepancy(&self, g: &Graph) -> Result<Option<Discrepancy>, RepError> {
        if g.n() != self.n() {
            return Err(RepError::VertexCount {
                rep: self.n(),
                graph: g.n(),
            });
        }
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                let want = g.has_edge(u, v);
                if want != self.adjacent(u, v) {
                    return Ok(Some(Discrepancy {
                        u,
                        v,
                        missing_edge: want,
                    }));
                }
            }
        }
        Ok(None)
    }

    pub fn realizes(&self, g: &Graph) -> bool {
        matches!(self.discrepancy(g), Ok(None))
    }

    /// `[l(u), r(u)]` is a strict superset of `[l(v), r(v)]`.
    pub fn properly_contains(&self, u: usize, v: usize) -> bool {
        let (a, b) = self.intervals[u];
        let (c, d) = self.intervals[v];
        a <= c && d <= b && (a, b) != (c, d)
    }

    /// A same-class pair `(u, v)` with `I_u` properly containing `I_v`.
    pub fn class_proper_violation(&self) -> Option<(usize, usize)> {
        self.containment(|u, v| self.classes[u] == self.classes[v])
    }

    pub fn is_class_proper(&self) -> bool {
        self.class_proper_violation().is_none()
    }

    /// Any pair with proper containment.
    pub fn proper_violation(&self) -> Option<(usize, usize)> {
        self.containment(|_, _| true)
    }

    pub fn is_proper(&self) -> bool {
        self.proper_violation().is_none()
    }

    fn containment(&self, relevant: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .find(|&(u, v)| u != v && relevant(u, v) && self.properly_contains(u, v))
    }

    /// All intervals have the same length.
    pub fn is_unit(&self) -> bool {
        let mut lengths = self.intervals.iter().map(|&(l, r)| r - l);
        match lengths.next() {
            Some(first) => lengths.all(|x| x == first),
            None => true,
        }
    }

    pub fn has_distinct_endpoints(&self) -> bool {
        let mut all: Vec<Q> = self.intervals.iter().flat_map(|&(l, r)| [l, r]).collect();
        all.sort();
        all.windows(2).all(|w| w[0] != w[1])
    }

    /// Same classes, endpoints replaced by their ranks (`0..2n`) in a total
    /// order that keeps every strict relation between endpoints and breaks
    /// ties so that intersections, proper containments and non-containments
    /// all survive: at a shared value lefts precede rights, equal lefts go
    /// longest-first, equal rights go latest-left-first, remaining ties by
    /// vertex index.
    pub fn perturbed_distinct(&self) -> IntervalKRep {
        #[derive(PartialEq, Eq)]
        struct Event {
            value: Q,
            is_right: bool,
            other: Q,
            v: usize,
        }
        let key = |e: &Event| (e.value, e.is_right, std::cmp::Reverse(e.other), e.v);
        let mut events: Vec<Event> = Vec::with_capacity(2 * self.n());
        for (v, &(l, r)) in self.intervals.iter().enumerate() {
            events.push(Event {
                value: l,
                is_right: false,
                other: r,
                v,
            });
            events.push(Event {
                value: r,
                is_right: true,
                other: l,
                v,
            });
        }
        events.sort_by_key(|a| key(a));
        let mut intervals = vec![(Q::zero(), Q::zero()); self.n()];
        for (rank, e) in events.iter().enumerate() {
            let x = Q::from(rank as i64);
            if e.is_right {
                intervals[e.v].1 = x;
            } else {
                intervals[e.v].0 = x;
            }
        }
        IntervalKRep {
            k: self.k,
            intervals,
            classes: self.classes.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Text form: `k n`, then `label class l_num/l_den r_num/r_den` per
    /// vertex.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.k, self.n());
        for v in 0..self.n() {
            let (l, r) = self.intervals[v];
            let _ = writeln!(
                s,
                "{} {} {}/{} {}/{}",
                self.label(v),
                self.classes[v],
                l.numer(),
                l.denom(),
                r.numer(),
                r.denom()
            );
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, RepError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let bad = |line: usize, reason: String| RepError::Parse { line, reason };
        let (hl, header) = lines
            .next()
            .ok_or_else(|| bad(1, "missing `k n` header".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(hl, format!("bad count {t:?}"))))
            .collect::<Result<_, _>>()?;
        let [k, n] = nums[..] else {
            return Err(bad(hl, "header must be `k n`".into()));
        };
        let mut labels = Vec::with_capacity(n);
        let mut intervals = Vec::with_capacity(n);
        let mut classes = Vec::with_capacity(n);
        for (line, l) in lines {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let [label, class, lo, hi] = fields[..] else {
                return Err(bad(line, "expected `label class l r`".into()));
            };
            let q = |t: &str| {
                t.parse::<Q>()
                    .map_err(|_| bad(line, format!("bad rational {t:?}")))
            };
            labels.push(label.to_string());
            classes.push(
                class
                    .parse()
                    .map_err(|_| bad(line, format!("bad class {class:?}")))?,
            );
            intervals.push((q(lo)?, q(hi)?));
        }
        if intervals.len() != n {
            return Err(bad(0, format!("header says {n} vertices, found {}", intervals.len())));
        }
        Ok(IntervalKRep::new(k, intervals, classes)?.with_labels(labels))
    }

    /// Same intervals with every endpoint mapped by `x -> a x + b` (`a > 0`).
    pub fn affine(&self, a: Q, b: Q) -> IntervalKRep {
        assert!(a.is_positive());
        let mut out = self.clone();
        for iv in &mut out.intervals {
            *iv = (a * iv.0 + b, a * iv.1 + b);
        }
        out
    }

    /// Class `c` renamed to `perm[c]`.
    pub fn relabel_classes(&self, perm: &[usize]) -> IntervalKRep {
        let mut out = self.clone();
        for c in &mut out.classes {
            *c = perm[*c];
        }
        out
    }
}

/// Segments between two parallel channels: vertex `v` runs from
/// `p1[v]` on the first channel to `p2[v]` on the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationRep {
    pub p1: Vec<Q>,
    pub p2: Vec<Q>,
}

impl PermutationRep {
    pub fn new(p1: Vec<Q>, p2: Vec<Q>) -> Result<Self, RepError> {
        if p1.len() != p2.len() {
            return Err(RepError::VertexCount {
                rep: p1.len(),
                graph: p2.len(),
            });
        }
        let rep = PermutationRep { p1, p2 };
        rep.check_distinct()?;
        Ok(rep)
    }

    pub fn n(&self) -> usize {
        self.p1.len()
    }

    fn check_distinct(&self) -> Result<(), RepError> {
        for (channel, ps) in [(1, &self.p1), (2, &self.p2)] {
            for u in 0..ps.len() {
                for v in u + 1..ps.len() {
                    if ps[u] == ps[v] {
                        return Err(RepError::DuplicatePosition { channel, u, v });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn crosses(&self, u: usize, v: usize) -> bool {
        let a = self.p1[u] - self.p1[v];
        let b = self.p2[u] - self.p2[v];
        (a * b).is_negative()
    }

    pub fn graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.crosses(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn realizes(&self, g: &Graph) -> Result<bool, RepError> {
        if g.n() != self.n() {
            return Err(RepError::VertexCount {
                rep: self.n(),
                graph: g.n(),
            });
        }
        self.check_distinct()?;
        Ok(self.graph() == *g)
    }
}

/// Curves over levels `0..=k` (heights `0..=k`), linear between levels:
/// `xs[v][t]` is where the curve of `v` meets level `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionRep {
    k: usize,
    xs: Vec<Vec<Q>>,
}

impl FunctionRep {
    pub fn new(k: usize, xs: Vec<Vec<Q>>) -> Result<Self, RepError> {
        if k == 0 {
            return Err(RepError::NoClasses);
        }
        for (v, x) in xs.iter().enumerate() {
            if x.len() != k + 1 {
                return Err(RepError::CurveLength {
                    v,
                    found: x.len(),
                    expected: k + 1,
                });
            }
        }
        Ok(FunctionRep { k, xs })
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn curve(&self, v: usize) -> &[Q] {
        &self.xs[v]
    }

    /// Piecewise-linear curves meet iff the difference is zero at some
    /// level or changes sign between consecutive levels.
    pub fn curves_meet(&self, u: usize, v: usize) -> bool {
        self.order(u, v).is_none()
    }

    /// `Less` when the curve of `u` lies strictly left of that of `v` at
    /// every height, `Greater` for the reverse, `None` when they meet.
    pub fn order(&self, u: usize, v: usize) -> Option<Ordering> {
        let mut seen = None;
        for (a, b) in self.xs[u].iter().zip(&self.xs[v]) {
            let o = a.cmp(b);
            if o == Ordering::Equal || seen.is_some_and(|s| s != o) {
                return None;
            }
            seen = Some(o);
        }
        seen
    }

    pub fn graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.curves_meet(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn realizes(&self, g: &Graph) -> Result<bool, RepError> {
        if g.n() != self.n() {
            return Err(RepError::VertexCount {
                rep: self.n(),
                graph: g.n(),
            });
        }
        Ok(self.graph() == *g)
    }
}
