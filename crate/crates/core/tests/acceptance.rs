//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false`.

use std::collections::HashSet;
use std::time::Instant;

use ikg::comparability::is_cocomparability;
use ikg::constructions::{chain_labeling, intervals_from_labeled_poset, repair_chain_cover};
use ikg::graph::{canonical_form, chromatic_number, enumerate_graphs, Graph};
use ikg::harness::{conjecture_check, fixture_report, run_suite, Check, SuiteOptions, SweepReport, Tally};
use ikg::order::{enumerate_posets, Labeling, Poset};
use ikg::par::Exec;
use ikg::representations::Q;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn clean(t: Tally) -> bool {
    t.failed == 0 && t.incomplete == 0
}

fn findings(r: &SweepReport) -> String {
    r.discrepancies
        .iter()
        .chain(&r.incomplete)
        .take(5)
        .map(|d| format!("{} [{}] {}", d.subject, d.check, d.detail))
        .collect::<Vec<_>>()
        .join("; ")
}

fn all_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| enumerate_graphs(n, None).unwrap()).collect()
}

/// Orbits of the symmetric group on labeled graphs, by Burnside: the
/// average over permutations of 2^(cycles induced on vertex pairs).
fn burnside_graph_count(n: usize) -> u64 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let all = perms(n);
    let mut total: u128 = 0;
    for p in &all {
        let mut seen = HashSet::new();
        let mut cycles = 0;
        for u in 0..n {
            for v in u + 1..n {
                if seen.contains(&(u, v)) {
                    continue;
                }
                cycles += 1;
                let (mut a, mut b) = (u, v);
                loop {
                    seen.insert((a.min(b), a.max(b)));
                    a = p[a];
                    b = p[b];
                    if (a.min(b), a.max(b)) == (u, v) {
                        break;
                    }
                }
            }
        }
        total += 1u128 << cycles;
    }
    (total / all.len() as u128) as u64
}

/// Distinct canonical forms over every labeled graph on `n` vertices.
fn labeled_canonical_count(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut forms = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        forms.insert(canonical_form(&Graph::from_edges(n, &edges).unwrap()).unwrap());
    }
    forms.len()
}

fn gallai(seven: &[Graph]) -> Verdict {
    let orbits = burnside_graph_count(7);
    let labeled = labeled_canonical_count(7);
    let r = run_suite("gallai", Some(7), seven, &SuiteOptions::only(&[Check::Gallai]), Exec::serial());
    let t = r.tally("gallai");
    let counts = seven.len() == 1044 && orbits == 1044 && labeled == 1044;
    verdict(
        counts && clean(t) && t.passed == 1044,
        format!(
            "augmentation {} / orbit count {orbits} / labeled canonical forms {labeled}; {} agree, {} cocomparability {}",
            seven.len(),
            t.passed,
            r.count("cocomparability"),
            findings(&r)
        ),
    )
}

fn weakly_chordal(upto7: &[Graph]) -> Verdict {
    let r = run_suite("weak", None, upto7, &SuiteOptions::only(&[Check::WeaklyChordal]), Exec::serial());
    let t = r.tally("weakly-chordal");
    verdict(
        clean(t) && t.passed == r.count("interval-k") && t.passed > 0,
        format!("{} interval k-graphs with n <= 7, all weakly chordal {}", t.passed, findings(&r)),
    )
}

fn bipartite(eight: &[Graph], upto7: &[Graph]) -> (Verdict, SweepReport) {
    let graphs: Vec<Graph> = upto7.iter().chain(eight).filter(|g| g.is_bipartite()).cloned().collect();
    let opts = SuiteOptions::only(&[Check::Bipartite, Check::OrientationRule]);
    let r = run_suite("bipartite", None, &graphs, &opts, Exec::serial());
    let t = r.tally("bipartite-equivalence");
    let v = verdict(
        clean(t) && t.passed as usize == graphs.len(),
        format!("{} bipartite graphs with n <= 8, six statements agree {}", t.passed, findings(&r)),
    );
    (v, r)
}

fn orientation_rule(upto7: &[Graph], others: &[&SweepReport]) -> Verdict {
    let opts = SuiteOptions::only(&[Check::Bipartite, Check::OrientationRule, Check::EliminationOrder]);
    let r = run_suite("orientation", None, upto7, &opts, Exec::serial());
    let mut total = Tally::default();
    for rep in others.iter().copied().chain([&r]) {
        let t = rep.tally("orientation-rule");
        total.passed += t.passed;
        total.failed += t.failed;
        total.incomplete += t.incomplete;
    }
    let elim = r.tally("elimination-order");
    verdict(
        clean(total) && clean(elim) && total.passed > 0,
        format!(
            "{} graphs with class-proper representations: orientation transitive, curves agree; elimination order on {} {}",
            total.passed,
            elim.passed,
            findings(&r)
        ),
    )
}

fn round_trip() -> Verdict {
    let q = |a, b| Q::new(a, b);
    let mut bad = Vec::new();
    let mut labeled = 0;
    let mut total = 0;
    for n in 1..=7 {
        for p in enumerate_posets(n).unwrap() {
            total += 1;
            let Some(lab) = chain_labeling(&p).unwrap() else { continue };
            labeled += 1;
            let ok = repair_chain_cover(&p, &lab, &p.minimum_chain_cover())
                .and_then(|c| intervals_from_labeled_poset(&p, &lab, &c))
                .is_ok_and(|rep| rep.realizes(&p.incomparability_graph()) && rep.is_class_proper());
            if !ok {
                bad.push(p.to_text().replace('\n', " "));
            }
        }
    }
    let mu_rep = |p: &Poset, chains: Vec<Vec<usize>>| {
        let cover = ikg::ChainCover { chains };
        intervals_from_labeled_poset(p, &Labeling::identity(p.n()), &cover).map(|r| r.intervals().to_vec())
    };
    let anti = mu_rep(&Poset::antichain(2), vec![vec![0], vec![1]]);
    let mixed = mu_rep(&Poset::from_pairs(3, &[(0, 2)]).unwrap(), vec![vec![0, 2], vec![1]]);
    let chain = mu_rep(&Poset::chain(2), vec![vec![0, 1]]);
    let examples = anti == Ok(vec![(q(1, 2), q(1, 1)), (q(1, 1), q(2, 1))])
        && mixed == Ok(vec![(q(1, 3), q(1, 1)), (q(2, 3), q(2, 1)), (q(2, 1), q(3, 1))])
        && chain == Ok(vec![(q(1, 2), q(1, 1)), (q(2, 1), q(2, 1))]);
    verdict(
        bad.is_empty() && examples && total == 2045 + 318 + 63 + 16 + 5 + 2 + 1,
        format!(
            "{labeled} of {total} posets with n <= 7 have a labeling, {} fail the round trip; hand examples match: {examples} {}",
            bad.len(),
            bad.iter().take(3).cloned().collect::<Vec<_>>().join(", ")
        ),
    )
}

fn c6bar_recognizer(upto8: &[Graph]) -> Verdict {
    let graphs: Vec<Graph> = upto8
        .iter()
        .filter(|g| chromatic_number(g).unwrap() == 3 && is_cocomparability(g).is_some())
        .cloned()
        .collect();
    let opts = SuiteOptions::only(&[Check::ForbiddenC6bar, Check::OrientationRule]);
    let r = run_suite("c6bar", None, &graphs, &opts, Exec::serial());
    let t = r.tally("c6bar-recognizer");
    let offending: Vec<&str> = r.discrepancies.iter().map(|d| d.subject.as_str()).collect();
    verdict(
        clean(t) && clean(r.tally("orientation-rule")) && t.passed as usize == graphs.len(),
        format!(
            "{} 3-chromatic cocomparability graphs with n <= 8, {} class-proper; offending: {offending:?}",
            graphs.len(),
            r.count("class-proper")
        ),
    )
}

fn conjecture(upto7: &[Graph]) -> Verdict {
    let r = conjecture_check(upto7, Some(7), Exec::serial());
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("conjecture-n7.jsonl");
    let written = std::fs::write(&path, r.to_json_lines(true)).is_ok();
    let reverified = r
        .discrepancies
        .iter()
        .all(|d| d.detail.contains("re-verified: true") || d.detail.contains("agrees: true"));
    verdict(
        written && r.incomplete.is_empty() && reverified,
        format!(
            "{} cocomparability graphs with n <= 7: {} interval k-graphs, {} forbidden-free, {} counterexamples; report at {}",
            r.count("cocomparability"),
            r.count("interval-k"),
            r.count("forbidden-free"),
            r.discrepancies.len(),
            path.display()
        ),
    )
}

fn fixtures() -> Verdict {
    let r = fixture_report(Exec::serial());
    let claims: u64 = r.checks.values().map(|t| t.passed + t.failed + t.incomplete).sum();
    verdict(r.all_passed(), format!("{} fixtures, {claims} claims {}", r.subjects, findings(&r)))
}

fn determinism(upto7: &[Graph]) -> Verdict {
    let six = enumerate_graphs(6, None).unwrap();
    let opts = SuiteOptions::default();
    let runs = |exec: Exec| {
        let mut s = run_suite("theorem-suite", Some(6), &six, &opts, exec).to_json_lines(true);
        s += &conjecture_check(upto7, Some(7), exec).to_json_lines(true);
        s
    };
    let a = runs(Exec::serial());
    let b = runs(Exec::parallel(8));
    let c = runs(Exec::serial());
    verdict(a == b && a == c, format!("{} bytes, serial twice and 8 jobs identical", a.len()))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed().as_secs_f64())
}

fn show(name: &str, (v, secs): (Verdict, f64)) -> bool {
    let status = if v.pass { "PASS" } else { "FAIL" };
    println!("{status} {name}: {} ({secs:.1}s)", v.detail);
    v.pass
}

fn main() {
    let started = Instant::now();
    let upto7 = all_graphs(7);
    let seven = enumerate_graphs(7, None).unwrap();
    let eight = enumerate_graphs(8, None).unwrap();
    let upto8: Vec<Graph> = upto7.iter().chain(&eight).cloned().collect();

    let mut results = Vec::new();
    results.push(show("1 gallai equivalence", timed(|| gallai(&seven))));
    results.push(show("2 weak chordality", timed(|| weakly_chordal(&upto7))));
    let ((v3, r3), t3) = timed(|| bipartite(&eight, &upto7));
    results.push(show("3 bipartite equivalence", (v3, t3)));
    results.push(show("4 orientation rule", timed(|| orientation_rule(&upto7, &[&r3]))));
    results.push(show("5 order-to-intervals round trip", timed(round_trip)));
    results.push(show("6 c6bar recognizer", timed(|| c6bar_recognizer(&upto8))));
    results.push(show("7 conjecture sweep", timed(|| conjecture(&upto7))));
    results.push(show("8 figure fixtures", timed(fixtures)));
    results.push(show("9 determinism", timed(|| determinism(&upto7))));

    let passed = results.iter().filter(|&&p| p).count();
    println!(
        "{passed}/{} criteria passed in {:.1}s",
        results.len(),
        started.elapsed().as_secs_f64()
    );
    if passed != results.len() {
        std::process::exit(1);
    }
}
