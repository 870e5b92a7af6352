use std::cell::{OnceCell, RefCell};
use std::cmp::Ordering;

use super::{sweep, Outcome, SubjectOutcome, SweepReport};
use crate::comparability::{find_odd_asteroid, find_transitive_orientation, is_cocomparability, verify_asteroid};
use crate::constructions::{
    build_class_proper_rep, cover_violation, dominating_pair, function_rep_from_class_proper, is_chain_labeling,
    is_elimination_ordering, orientation_from_class_proper, ordering_from_permutation, ordering_from_proper_rep,
    permutation_from_class_proper_2, unit_bigraph_from_ordering, BuildOutcome, ConstructionError,
    UmbrellaOrdering, DEFAULT_ORIENTATION_LIMIT,
};
use crate::graph::{chromatic_number, enumerate_graphs, is_weakly_chordal, Graph, GraphError, PartiteStructure};
use crate::order::{Labeling, OrderError, Poset};
use crate::par::Exec;
use crate::recognition::{
    find_2p3bar, find_c6bar, find_umbrella_ordering_any, is_class_proper_interval_k_graph, is_interval_k_graph,
    is_interval_k_graph_scoped, is_proper_interval_k_graph, is_unit_interval_k_graph, recognize_by_c6bar,
    PartitionScope, RecognitionError, RecognitionVerdict, INTERVAL_K_MAX_VERTICES,
};
use crate::representations::{IntervalKRep, RepError};

/// Per-graph cross-checks, run in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Orientable complement iff no odd asteroid.
    Gallai,
    /// Interval k-graphs are weakly chordal.
    WeaklyChordal,
    /// For bipartite graphs: unit, proper, ordering, class-proper,
    /// permutation and AT-free all agree, and the constructions validate.
    Bipartite,
    /// Proper graphs get a valid ordering; connected ones a dominating pair
    /// at its ends.
    DominatingPair,
    /// Orientation rule and curves on every class-proper representation.
    OrientationRule,
    /// Right-endpoint order is an elimination ordering and a valid labeling.
    EliminationOrder,
    /// The order-to-intervals pipeline on cocomparability graphs.
    OrderToIntervals,
    /// The C6-complement recognizer against the pipeline on 3-chromatic
    /// cocomparability graphs.
    ForbiddenC6bar,
    /// Oracles agree where containments force them to.
    Oracles,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Gallai,
        Check::WeaklyChordal,
        Check::Bipartite,
        Check::DominatingPair,
        Check::OrientationRule,
        Check::EliminationOrder,
        Check::OrderToIntervals,
        Check::ForbiddenC6bar,
        Check::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Gallai => "gallai",
            Check::WeaklyChordal => "weakly-chordal",
            Check::Bipartite => "bipartite-equivalence",
            Check::DominatingPair => "dominating-pair",
            Check::OrientationRule => "orientation-rule",
            Check::EliminationOrder => "elimination-order",
            Check::OrderToIntervals => "order-to-intervals",
            Check::ForbiddenC6bar => "c6bar-recognizer",
            Check::Oracles => "oracle-consistency",
        }
    }

    pub fn parse(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub checks: Vec<Check>,
    pub orientation_limit: usize,
    /// Largest n at which the interval-k oracle is re-run over all
    /// partitions, not only maximal ones.
    pub scope_check_max_vertices: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            checks: Check::ALL.to_vec(),
            orientation_limit: DEFAULT_ORIENTATION_LIMIT,
            scope_check_max_vertices: 7,
        }
    }
}

impl SuiteOptions {
    pub fn only(checks: &[Check]) -> Self {
        SuiteOptions {
            checks: checks.to_vec(),
            ..Default::default()
        }
    }
}

impl From<RecognitionError> for Outcome {
    fn from(e: RecognitionError) -> Self {
        match e {
            RecognitionError::Truncated(_) => Outcome::Incomplete(e.to_string()),
            e => Outcome::Fail(e.to_string()),
        }
    }
}

macro_rules! fail_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Outcome {
            fn from(e: $t) -> Self {
                Outcome::Fail(e.to_string())
            }
        }
    )*};
}
fail_from!(ConstructionError, RepError, GraphError, OrderError);

type Step = Result<Outcome, Outcome>;

fn require(ok: bool, detail: impl FnOnce() -> String) -> Result<(), Outcome> {
    if ok {
        Ok(())
    } else {
        Err(Outcome::Fail(detail()))
    }
}

/// Lazily computed facts about one graph, shared between checks.
struct Ctx<'a> {
    g: &'a Graph,
    opts: &'a SuiteOptions,
    cocomp: OnceCell<Option<Poset>>,
    interval_k: OnceCell<Result<RecognitionVerdict, RecognitionError>>,
    proper: OnceCell<Result<RecognitionVerdict, RecognitionError>>,
    build: OnceCell<Result<BuildOutcome, ConstructionError>>,
    chi: OnceCell<Result<usize, GraphError>>,
    /// Class-proper representations produced by earlier checks.
    reps: RefCell<Vec<(&'static str, IntervalKRep)>>,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, opts: &'a SuiteOptions) -> Self {
        Ctx {
            g,
            opts,
            cocomp: OnceCell::new(),
            interval_k: OnceCell::new(),
            proper: OnceCell::new(),
            build: OnceCell::new(),
            chi: OnceCell::new(),
            reps: RefCell::new(Vec::new()),
        }
    }

    fn cocomp(&self) -> Option<&Poset> {
        self.cocomp.get_or_init(|| is_cocomparability(self.g)).as_ref()
    }

    fn interval_k(&self) -> Result<&RecognitionVerdict, Outcome> {
        let v = self.interval_k.get_or_init(|| is_interval_k_graph(self.g, None));
        v.as_ref().map_err(|e| e.clone().into())
    }

    fn proper(&self) -> Result<&RecognitionVerdict, Outcome> {
        let v = self.proper.get_or_init(|| is_proper_interval_k_graph(self.g, None));
        v.as_ref().map_err(|e| e.clone().into())
    }

    /// `None` for graphs that are not cocomparability graphs.
    fn build(&self) -> Result<Option<&BuildOutcome>, Outcome> {
        if self.cocomp().is_none() {
            return Ok(None);
        }
        let b = self
            .build
            .get_or_init(|| build_class_proper_rep(self.g, self.opts.orientation_limit));
        b.as_ref().map(Some).map_err(|e| e.clone().into())
    }

    fn chi(&self) -> Result<usize, Outcome> {
        let c = self.chi.get_or_init(|| chromatic_number(self.g));
        c.clone().map_err(Outcome::from)
    }

    fn keep_rep(&self, source: &'static str, rep: &IntervalKRep) {
        if rep.is_class_proper() {
            self.reps.borrow_mut().push((source, rep.clone()));
        }
    }

    /// Every class-proper representation seen so far, plus those of the
    /// proper oracle and the pipeline.
    fn class_proper_reps(&self) -> Result<Vec<(&'static str, IntervalKRep)>, Outcome> {
        if let Some(rep) = self.proper()?.rep() {
            self.keep_rep("proper oracle", rep);
        }
        if let Some(b) = self.build()?.and_then(BuildOutcome::built) {
            self.keep_rep("pipeline", &b.rep);
        }
        Ok(self.reps.borrow().clone())
    }
}

fn gallai(cx: &Ctx) -> Step {
    let g = cx.g;
    let asteroid = find_odd_asteroid(g, g.n());
    match (cx.cocomp(), asteroid) {
        (Some(p), None) => {
            require(p.incomparability_graph() == *g, || "orientation does not reproduce the graph".into())?;
            Ok(Outcome::Pass)
        }
        (None, Some(a)) => {
            require(verify_asteroid(g, &a), || format!("asteroid on {:?} fails verification", a.vertices))?;
            Ok(Outcome::Pass)
        }
        (Some(_), Some(a)) => Err(Outcome::Fail(format!(
            "complement orientable, yet odd asteroid on {:?}",
            a.vertices
        ))),
        (None, None) => Err(Outcome::Fail("complement not orientable and no odd asteroid".into())),
    }
}

fn weakly_chordal(cx: &Ctx) -> Step {
    let v = cx.interval_k()?;
    let Some(rep) = v.rep() else { return Ok(Outcome::Skip) };
    require(rep.realizes(cx.g), || "interval-k witness does not realize the graph".into())?;
    require(is_weakly_chordal(cx.g)?, || "interval k-graph that is not weakly chordal".into())?;
    Ok(Outcome::Pass)
}

/// A class-proper 2-representation through the permutation model back to a
/// unit representation.
fn permutation_chain(g: &Graph, rep: &IntervalKRep) -> Result<(), Outcome> {
    let rep2 = if rep.k() == 2 {
        rep.clone()
    } else {
        IntervalKRep::new(2, rep.intervals().to_vec(), rep.classes().to_vec())?
    };
    let perm = permutation_from_class_proper_2(&rep2)?;
    require(perm.realizes(g)?, || "permutation model does not realize the graph".into())?;
    let partite = PartiteStructure::from_assignment(rep2.classes());
    let ord = ordering_from_permutation(&perm, &partite)?;
    let unit = unit_bigraph_from_ordering(g, &ord)?;
    require(unit.realizes(g) && unit.is_unit(), || {
        "unit model from the permutation ordering is invalid".into()
    })
}

fn bipartite(cx: &Ctx) -> Step {
    let g = cx.g;
    if !g.is_bipartite() {
        return Ok(Outcome::Skip);
    }
    let unit = is_unit_interval_k_graph(g, Some(2))?;
    if let Some(rep) = unit.rep() {
        require(rep.realizes(g) && rep.is_unit() && rep.k() <= 2, || "unit witness invalid".into())?;
        cx.keep_rep("unit oracle", rep);
    }
    let proper = is_proper_interval_k_graph(g, Some(2))?;
    if let Some(rep) = proper.rep() {
        require(rep.realizes(g) && rep.is_proper() && rep.k() <= 2, || "proper witness invalid".into())?;
        cx.keep_rep("proper oracle k=2", rep);
    }
    let ordering = find_umbrella_ordering_any(g, Some(2))?;
    if let Some(ord) = &ordering {
        let rep = unit_bigraph_from_ordering(g, ord)?;
        require(rep.realizes(g) && rep.is_unit(), || "unit model from the ordering is invalid".into())?;
        cx.keep_rep("ordering construction", &rep);
    }
    let class_proper = is_class_proper_interval_k_graph(g, Some(2), cx.opts.orientation_limit)?;
    if let Some(rep) = class_proper.rep() {
        require(rep.realizes(g) && rep.is_class_proper(), || "class-proper witness invalid".into())?;
        permutation_chain(g, rep)?;
    }
    let permutation = cx.cocomp().is_some() && find_transitive_orientation(g).is_some();
    let at_free = find_odd_asteroid(g, 3).is_none();
    let verdicts = [
        unit.is_member(),
        proper.is_member(),
        ordering.is_some(),
        class_proper.is_member(),
        permutation,
        at_free,
    ];
    require(verdicts.iter().all(|&v| v == verdicts[0]), || {
        format!(
            "unit={} proper={} ordering={} class-proper={} permutation={} at-free={}",
            verdicts[0], verdicts[1], verdicts[2], verdicts[3], verdicts[4], verdicts[5]
        )
    })?;
    Ok(Outcome::Pass)
}

fn check_dominating(g: &Graph, ord: &UmbrellaOrdering, source: &str) -> Result<(), Outcome> {
    if !g.is_connected() {
        return Ok(());
    }
    let ((s, t), _) = dominating_pair(g, ord).map_err(|e| Outcome::Fail(format!("{source}: {e}")))?;
    require(s == ord.order[0] && Some(&t) == ord.order.last(), || {
        format!("{source}: dominating pair ({s}, {t}) is not the ends of the ordering")
    })
}

fn dominating(cx: &Ctx) -> Step {
    let g = cx.g;
    let mut applied = false;
    if let Some(rep) = cx.proper()?.rep() {
        let ord = ordering_from_proper_rep(rep)?;
        check_dominating(g, &ord, "ordering from proper intervals")?;
        applied = true;
    }
    if let Some(ord) = find_umbrella_ordering_any(g, None)? {
        check_dominating(g, &ord, "searched ordering")?;
        applied = true;
    } else {
        require(!applied, || "proper, yet the ordering search finds nothing".into())?;
    }
    Ok(if applied { Outcome::Pass } else { Outcome::Skip })
}

fn orientation_rule(cx: &Ctx) -> Step {
    let g = cx.g;
    let reps = cx.class_proper_reps()?;
    if reps.is_empty() {
        return Ok(Outcome::Skip);
    }
    let h = g.complement();
    for (source, rep) in &reps {
        let o = orientation_from_class_proper(rep, g).map_err(|e| Outcome::Fail(format!("{source}: {e}")))?;
        require(o.is_transitive_on(&h), || format!("{source}: orientation not transitive"))?;
        let f = function_rep_from_class_proper(rep)?;
        require(f.realizes(g)?, || format!("{source}: curves do not realize the graph"))?;
        if let Some((a, b)) = o.arcs().into_iter().find(|&(a, b)| f.order(a, b) != Some(Ordering::Less)) {
            return Err(Outcome::Fail(format!("{source}: curves order {a},{b} against the orientation")));
        }
    }
    Ok(Outcome::Pass)
}

fn elimination_order(cx: &Ctx) -> Step {
    let g = cx.g;
    let reps = cx.class_proper_reps()?;
    if reps.is_empty() {
        return Ok(Outcome::Skip);
    }
    for (source, rep) in &reps {
        let d = if rep.has_distinct_endpoints() { rep.clone() } else { rep.perturbed_distinct() };
        require(d.realizes(g) && d.is_class_proper(), || format!("{source}: perturbation broke the representation"))?;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&u| d.right(u));
        require(is_elimination_ordering(g, &order), || {
            format!("{source}: right-endpoint order {order:?} is not an elimination ordering")
        })?;
        let poset = orientation_from_class_proper(rep, g)?.to_poset();
        let lab = Labeling::new(order.clone(), g.n())?;
        if let Some(step) = is_chain_labeling(&poset, &lab) {
            return Err(Outcome::Fail(format!("{source}: labeling {order:?} fails at step {step}")));
        }
    }
    Ok(Outcome::Pass)
}

fn order_to_intervals(cx: &Ctx, out: &mut SubjectOutcome) -> Step {
    let g = cx.g;
    let Some(build) = cx.build()? else { return Ok(Outcome::Skip) };
    match build {
        BuildOutcome::Built(b) => {
            require(b.rep.realizes(g) && b.rep.is_class_proper(), || "pipeline output invalid".into())?;
            require(is_chain_labeling(&b.poset, &b.labeling).is_none(), || "pipeline labeling invalid".into())?;
            require(cover_violation(&b.poset, &b.labeling, &b.cover).is_none(), || {
                "repaired cover not compliant".into()
            })?;
            require(b.poset.incomparability_graph() == *g, || "pipeline order does not match".into())?;
            out.class_if("pipeline-first-orientation", b.orientation_index == 1);
            out.class_if("cover-repaired", b.cover != b.initial_cover);
            Ok(Outcome::Pass)
        }
        BuildOutcome::Exhausted { .. } => Ok(Outcome::Pass),
        BuildOutcome::Truncated { orientations } => {
            Err(Outcome::Incomplete(format!("stopped after {orientations} orientations")))
        }
    }
}

fn forbidden_c6bar(cx: &Ctx) -> Step {
    let g = cx.g;
    if cx.chi()? != 3 || cx.cocomp().is_none() {
        return Ok(Outcome::Skip);
    }
    let verdict = recognize_by_c6bar(g, cx.opts.orientation_limit)?;
    let built = cx.build()?.and_then(BuildOutcome::built);
    if let Some(b) = built {
        require(b.rep.k() <= 3, || format!("pipeline used {} classes", b.rep.k()))?;
    }
    require(verdict.is_member() == built.is_some(), || {
        format!(
            "recognizer says {}, pipeline says {}",
            verdict.is_member(),
            built.is_some()
        )
    })?;
    Ok(Outcome::Pass)
}

fn oracles(cx: &Ctx) -> Step {
    let g = cx.g;
    let ik = cx.interval_k()?;
    if let Some(rep) = ik.rep() {
        require(rep.realizes(g), || "interval-k witness invalid".into())?;
    }
    let proper = cx.proper()?;
    if let Some(rep) = proper.rep() {
        require(rep.realizes(g) && rep.is_proper(), || "proper witness invalid".into())?;
        require(ik.is_member(), || "proper but not an interval k-graph".into())?;
    }
    let unit = is_unit_interval_k_graph(g, None)?;
    require(unit.is_member() == proper.is_member(), || {
        format!("unit={} proper={}", unit.is_member(), proper.is_member())
    })?;
    if let Some(build) = cx.build()? {
        let built = build.built().is_some();
        require(!built || ik.is_member(), || "class-proper but not an interval k-graph".into())?;
        if proper.is_member() && !built {
            return Err(match build {
                BuildOutcome::Truncated { .. } => Outcome::Incomplete("pipeline truncated".into()),
                _ => Outcome::Fail("proper, yet the pipeline finds no representation".into()),
            });
        }
    } else {
        require(!proper.is_member(), || "proper but not cocomparability".into())?;
    }
    if g.n() <= cx.opts.scope_check_max_vertices {
        let all = is_interval_k_graph_scoped(g, None, PartitionScope::All)?;
        require(all.is_member() == ik.is_member(), || "maximal and full partition scopes disagree".into())?;
    }
    Ok(Outcome::Pass)
}

/// Runs the selected checks on one graph.
pub fn check_graph(g: &Graph, opts: &SuiteOptions) -> SubjectOutcome {
    let mut out = SubjectOutcome::new(g.to_graph6());
    let mut checks = opts.checks.clone();
    checks.sort();
    checks.dedup();
    if g.n() > INTERVAL_K_MAX_VERTICES {
        for c in checks {
            out.push(c.name(), Outcome::Incomplete(format!("{} vertices exceed the oracle bound", g.n())));
        }
        return out;
    }
    let cx = Ctx::new(g, opts);
    for c in checks {
        let step = match c {
            Check::Gallai => gallai(&cx),
            Check::WeaklyChordal => weakly_chordal(&cx),
            Check::Bipartite => bipartite(&cx),
            Check::DominatingPair => dominating(&cx),
            Check::OrientationRule => orientation_rule(&cx),
            Check::EliminationOrder => elimination_order(&cx),
            Check::OrderToIntervals => order_to_intervals(&cx, &mut out),
            Check::ForbiddenC6bar => forbidden_c6bar(&cx),
            Check::Oracles => oracles(&cx),
        };
        out.push(c.name(), step.unwrap_or_else(|o| o));
    }
    out.class_if("connected", g.is_connected());
    out.class_if("bipartite", g.is_bipartite());
    out.class_if("cocomparability", cx.cocomp().is_some());
    out.class_if("contains-c6bar", find_c6bar(g).is_some());
    out.class_if("contains-2p3bar", find_2p3bar(g).is_some());
    if let Some(Ok(v)) = cx.interval_k.get() {
        out.class_if("interval-k", v.is_member());
    }
    if let Some(Ok(v)) = cx.proper.get() {
        out.class_if("proper", v.is_member());
    }
    if let Some(Ok(b)) = cx.build.get() {
        out.class_if("class-proper", b.built().is_some());
    }
    if let Some(Ok(chi)) = cx.chi.get() {
        out.class_if("3-chromatic-cocomparability", *chi == 3 && cx.cocomp().is_some());
    }
    out
}

pub fn run_suite(name: &str, n: Option<usize>, graphs: &[Graph], opts: &SuiteOptions, exec: Exec) -> SweepReport {
    sweep(name, n, graphs, exec, |g| check_graph(g, opts))
}

/// All selected checks over every graph on `n` vertices.
pub fn theorem_suite(n: usize, opts: &SuiteOptions, exec: Exec) -> Result<SweepReport, GraphError> {
    let graphs = enumerate_graphs(n, None)?;
    Ok(run_suite("theorem-suite", Some(n), &graphs, opts, exec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::{c6bar, two_p3bar};

    #[test]
    fn small_suites_pass() {
        for n in 1..=5 {
            let r = theorem_suite(n, &SuiteOptions::default(), Exec::serial()).unwrap();
            assert!(r.all_passed(), "{}", r.to_text(true));
        }
        let r = theorem_suite(4, &SuiteOptions::default(), Exec::serial()).unwrap();
        assert_eq!(r.subjects, 11);
        assert_eq!(r.tally("gallai").passed, 11);
        let r1 = theorem_suite(1, &SuiteOptions::default(), Exec::serial()).unwrap();
        assert_eq!(r1.subjects, 1);
    }

    #[test]
    fn obstructions_classify() {
        let opts = SuiteOptions::default();
        let c6 = check_graph(&c6bar(), &opts);
        assert!(c6.classes.contains(&"cocomparability"));
        assert!(!c6.classes.contains(&"interval-k"));
        assert!(c6.results.iter().all(|(_, o)| !matches!(o, Outcome::Fail(_))), "{c6:?}");
        let p3 = check_graph(&two_p3bar(), &opts);
        assert!(p3.classes.contains(&"cocomparability") && p3.classes.contains(&"contains-2p3bar"));
        assert!(!p3.classes.contains(&"interval-k"));
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::parse(c.name()), Some(c));
        }
        assert_eq!(Check::parse("nope"), None);
    }
}
