use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ikg::comparability::{find_odd_asteroid, find_transitive_orientation, is_cocomparability};
use ikg::constructions::{
    build_class_proper_rep, chain_labeling, function_rep_from_class_proper, intervals_from_labeled_poset,
    repair_chain_cover, BuildOutcome, DEFAULT_ORIENTATION_LIMIT,
};
use ikg::graph::{enumerate_graphs, is_weakly_chordal, parse_graph6};
use ikg::harness::{
    conjecture_check, fixture_report, fixtures, run_suite, theorem_suite, Check, FixtureObject, SuiteOptions,
    SweepReport,
};
use ikg::par::Exec;
use ikg::recognition::{
    is_class_proper_interval_k_graph, is_cocomparability_interval_k, is_interval_graph, is_interval_k_graph,
    is_probe_interval_graph, is_proper_interval_k_graph, is_unit_interval_k_graph, recognize_by_c6bar,
    RecognitionVerdict,
};
use ikg::representations::{render_curves, render_hasse, render_intervals, IntervalKRep, RenderFormat};
use ikg::{Graph, Poset};

#[derive(Parser)]
#[command(name = "ikg", version, about = "Interval k-graphs, interval k-orders and their verification sweeps")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Byte-stable reports: no timings.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Cap on transitive orientations tried per graph.
    #[arg(long, global = true, default_value_t = DEFAULT_ORIENTATION_LIMIT)]
    limit_orientations: usize,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Write SVG (and DOT) renderings into this directory.
    #[arg(long, global = true)]
    emit_svg: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Poset,
}

#[allow(clippy::enum_variant_names)]
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    Interval,
    IntervalK,
    Proper,
    Unit,
    ClassProper,
    Cocomparability,
    CocomparabilityIntervalK,
    Probe,
    /// 3-chromatic cocomparability graphs only.
    C6barFree,
    WeaklyChordal,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide class membership, printing a witness or a certificate.
    Recognize {
        #[arg(long, value_enum, default_value_t = Class::IntervalK)]
        class: Class,
        #[arg(long)]
        k: Option<usize>,
        /// graph6 strings; none or `-` reads stdin.
        inputs: Vec<String>,
    },
    /// Class-proper intervals from a graph (through its orders) or an order.
    Construct {
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// graph6 strings, or for posets files / `;`-separated text.
        inputs: Vec<String>,
    },
    /// Transitive orientation of a graph or of its complement.
    Orient {
        #[arg(long)]
        complement: bool,
        inputs: Vec<String>,
    },
    /// Smallest odd asteroid, as JSON.
    Asteroid {
        #[arg(long)]
        max_len: Option<usize>,
        inputs: Vec<String>,
    },
    /// graph6 of every graph on `n` vertices, optionally filtered by class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: Option<Class>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Forbidden-subgraph conjecture over all graphs with 1..=n vertices,
    /// or over graph6 inputs.
    Conjecture {
        #[arg(long)]
        n: Option<usize>,
        inputs: Vec<String>,
    },
    /// Theorem cross-checks over every graph on `n` vertices, or over
    /// graph6 inputs.
    Suite {
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated check names; default all.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        inputs: Vec<String>,
    },
    /// ASCII intervals on stdout, SVG/DOT files with --emit-svg.
    Render {
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        inputs: Vec<String>,
    },
    /// Check every figure fixture against its claims.
    Fixtures,
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn graph_inputs(inputs: &[String]) -> Result<Vec<Graph>> {
    let text = if inputs.is_empty() || inputs == ["-"] {
        read_stdin()?
    } else {
        inputs.join("\n")
    };
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph6(l).with_context(|| format!("bad graph6 {l:?}")))
        .collect()
}

fn poset_inputs(inputs: &[String]) -> Result<Vec<Poset>> {
    if inputs.is_empty() || inputs == ["-"] {
        return Ok(vec![Poset::parse(&read_stdin()?)?]);
    }
    inputs
        .iter()
        .map(|s| {
            let text = if Path::new(s).is_file() {
                fs::read_to_string(s)?
            } else {
                s.replace(';', "\n")
            };
            Poset::parse(&text).with_context(|| format!("bad poset {s:?}"))
        })
        .collect()
}

fn recognize(g: &Graph, class: Class, k: Option<usize>, limit: usize) -> Result<RecognitionVerdict> {
    Ok(match class {
        Class::Interval => is_interval_graph(g)?,
        Class::IntervalK => is_interval_k_graph(g, k)?,
        Class::Proper => is_proper_interval_k_graph(g, k)?,
        Class::Unit => is_unit_interval_k_graph(g, k)?,
        Class::ClassProper => is_class_proper_interval_k_graph(g, k, limit)?,
        Class::CocomparabilityIntervalK => is_cocomparability_interval_k(g)?,
        Class::Probe => is_probe_interval_graph(g)?,
        Class::C6barFree => recognize_by_c6bar(g, limit)?,
        Class::Cocomparability | Class::WeaklyChordal => unreachable!("decided without a verdict"),
    })
}

/// Membership, plus a witness or certificate line.
fn decide(g: &Graph, class: Class, k: Option<usize>, limit: usize) -> Result<(bool, Option<IntervalKRep>, String)> {
    match class {
        Class::Cocomparability => Ok(match is_cocomparability(g) {
            Some(p) => (true, None, format!("order: {}", p.to_text().trim().replace('\n', "; "))),
            None => {
                let a = find_odd_asteroid(g, g.n());
                (false, None, format!("odd asteroid on {:?}", a.map(|a| a.vertices).unwrap_or_default()))
            }
        }),
        Class::WeaklyChordal => {
            let ok = is_weakly_chordal(g)?;
            Ok((ok, None, String::new()))
        }
        _ => {
            let v = recognize(g, class, k, limit)?;
            let detail = match (v.rep(), v.certificate()) {
                (Some(rep), _) => format!("intervals: {}", rep.to_text().trim().replace('\n', "; ")),
                (None, Some(c)) => c.to_string(),
                (None, None) => String::new(),
            };
            Ok((v.is_member(), v.rep().cloned(), detail))
        }
    }
}

fn emit(dir: &Option<PathBuf>, name: &str, contents: &str) -> Result<()> {
    if let Some(dir) = dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(name), contents).with_context(|| format!("writing {name}"))?;
    }
    Ok(())
}

fn emit_rep(dir: &Option<PathBuf>, stem: &str, rep: &IntervalKRep) -> Result<()> {
    if dir.is_none() {
        return Ok(());
    }
    emit(dir, &format!("{stem}-intervals.svg"), &render_intervals(rep, RenderFormat::Svg))?;
    if rep.is_class_proper() {
        let curves = function_rep_from_class_proper(rep)?;
        emit(dir, &format!("{stem}-curves.svg"), &render_curves(&curves))?;
    }
    Ok(())
}

fn print_report(cli: &Cli, r: &SweepReport) -> ExitCode {
    let text = match cli.output {
        Output::Text => r.to_text(cli.deterministic),
        Output::Jsonl => r.to_json_lines(cli.deterministic),
    };
    print!("{text}");
    ExitCode::from(r.exit_code() as u8)
}

fn exec(cli: &Cli) -> Exec {
    if cli.jobs == 1 {
        Exec::serial()
    } else {
        Exec::parallel(cli.jobs)
    }
}

fn construct_graph(cli: &Cli, out: &mut impl Write, i: usize, g: &Graph) -> Result<()> {
    let s6 = g.to_graph6();
    if is_cocomparability(g).is_none() {
        writeln!(out, "{s6}: not a cocomparability graph")?;
        return Ok(());
    }
    match build_class_proper_rep(g, cli.limit_orientations)? {
        BuildOutcome::Built(b) => {
            let cover: Vec<_> = b.cover.chains.clone();
            if cli.output == Output::Jsonl {
                let rec = json!({
                    "graph6": s6,
                    "order": b.poset.to_text(),
                    "labeling": b.labeling.order,
                    "initial_cover": b.initial_cover.chains,
                    "cover": cover,
                    "intervals": b.rep.to_text(),
                    "orientation_index": b.orientation_index,
                });
                writeln!(out, "{rec}")?;
            } else {
                writeln!(out, "{s6}: class-proper interval {}-graph", b.rep.k())?;
                writeln!(out, "  order: {}", b.poset.to_text().trim().replace('\n', "; "))?;
                writeln!(out, "  labeling: {:?}", b.labeling.order)?;
                writeln!(out, "  cover: {:?} (from {:?})", cover, b.initial_cover.chains)?;
                write!(out, "{}", render_intervals(&b.rep, RenderFormat::Ascii))?;
            }
            emit_rep(&cli.emit_svg, &format!("g{i}"), &b.rep)?;
        }
        BuildOutcome::Exhausted { orientations } => {
            writeln!(out, "{s6}: none of {orientations} orientations has a valid labeling")?;
        }
        BuildOutcome::Truncated { orientations } => {
            bail!("{s6}: stopped after {orientations} orientations");
        }
    }
    Ok(())
}

fn construct_poset(cli: &Cli, out: &mut impl Write, i: usize, p: &Poset) -> Result<()> {
    let Some(lab) = chain_labeling(p)? else {
        writeln!(out, "order {i}: no valid labeling")?;
        return Ok(());
    };
    let cover = repair_chain_cover(p, &lab, &p.minimum_chain_cover())?;
    let rep = intervals_from_labeled_poset(p, &lab, &cover)?;
    if !rep.realizes(&p.incomparability_graph()) {
        bail!("order {i}: intervals do not realize the incomparability graph");
    }
    if cli.output == Output::Jsonl {
        let rec = json!({"order": i, "labeling": lab.order, "cover": cover.chains, "intervals": rep.to_text()});
        writeln!(out, "{rec}")?;
    } else {
        writeln!(out, "order {i}: labeling {:?}, cover {:?}", lab.order, cover.chains)?;
        write!(out, "{}", render_intervals(&rep, RenderFormat::Ascii))?;
    }
    emit_rep(&cli.emit_svg, &format!("p{i}"), &rep)?;
    emit(&cli.emit_svg, &format!("p{i}-hasse.dot"), &render_hasse(p))
}

/// A representation worth drawing: class-proper if there is one, else any.
fn best_rep(g: &Graph, limit: usize) -> Result<Option<IntervalKRep>> {
    if is_cocomparability(g).is_some() {
        if let BuildOutcome::Built(b) = build_class_proper_rep(g, limit)? {
            return Ok(Some(b.rep));
        }
    }
    Ok(is_interval_k_graph(g, None)?.rep().cloned())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let limit = cli.limit_orientations;
    match &cli.cmd {
        Cmd::Recognize { class, k, inputs } => {
            for (i, g) in graph_inputs(inputs)?.iter().enumerate() {
                let (member, rep, detail) = decide(g, *class, *k, limit)?;
                let name = class.to_possible_value().expect("named").get_name().to_string();
                if cli.output == Output::Jsonl {
                    let rec = json!({"graph6": g.to_graph6(), "class": name, "k": k, "member": member, "detail": detail});
                    writeln!(out, "{rec}")?;
                } else {
                    let verdict = if member { "member" } else { "non-member" };
                    writeln!(out, "{} {name}: {verdict}", g.to_graph6())?;
                    if !detail.is_empty() {
                        writeln!(out, "  {detail}")?;
                    }
                }
                if let Some(rep) = rep {
                    emit_rep(&cli.emit_svg, &format!("g{i}"), &rep)?;
                }
            }
        }
        Cmd::Construct { format, inputs } => match format {
            Format::Graph6 => {
                for (i, g) in graph_inputs(inputs)?.iter().enumerate() {
                    construct_graph(cli, &mut out, i, g)?;
                }
            }
            Format::Poset => {
                for (i, p) in poset_inputs(inputs)?.iter().enumerate() {
                    construct_poset(cli, &mut out, i, p)?;
                }
            }
        },
        Cmd::Orient { complement, inputs } => {
            for g in graph_inputs(inputs)? {
                let target = if *complement { g.complement() } else { g.clone() };
                match find_transitive_orientation(&target) {
                    Some(o) => {
                        let arcs: Vec<String> = o.arcs().iter().map(|(u, v)| format!("{u}->{v}")).collect();
                        writeln!(out, "{}: {}", g.to_graph6(), arcs.join(" "))?;
                    }
                    None => {
                        let a = find_odd_asteroid(&target.complement(), target.n());
                        let why = a.map(|a| format!(" (odd asteroid on {:?})", a.vertices)).unwrap_or_default();
                        writeln!(out, "{}: not transitively orientable{why}", g.to_graph6())?;
                    }
                }
            }
        }
        Cmd::Asteroid { max_len, inputs } => {
            for g in graph_inputs(inputs)? {
                match find_odd_asteroid(&g, max_len.unwrap_or(g.n())) {
                    Some(a) => writeln!(out, "{}", serde_json::to_string(&serde_json::from_str::<serde_json::Value>(&a.to_json(&g))?)?)?,
                    None => writeln!(out, "null")?,
                }
            }
        }
        Cmd::Enumerate { n, class, k } => {
            for g in enumerate_graphs(*n, None)? {
                let keep = match class {
                    None => true,
                    Some(c) => decide(&g, *c, *k, limit).map(|d| d.0).unwrap_or(false),
                };
                if keep {
                    writeln!(out, "{}", g.to_graph6())?;
                }
            }
        }
        Cmd::Conjecture { n, inputs } => {
            let graphs = match n {
                Some(n) => (1..=*n).map(|m| enumerate_graphs(m, None)).collect::<Result<Vec<_>, _>>()?.concat(),
                None => graph_inputs(inputs)?,
            };
            return Ok(print_report(cli, &conjecture_check(&graphs, *n, exec(cli))));
        }
        Cmd::Suite { n, checks, inputs } => {
            let mut opts = SuiteOptions {
                orientation_limit: limit,
                ..Default::default()
            };
            if !checks.is_empty() {
                opts.checks = checks
                    .iter()
                    .map(|c| Check::parse(c).with_context(|| format!("unknown check {c:?}")))
                    .collect::<Result<_>>()?;
            }
            let report = match n {
                Some(n) => theorem_suite(*n, &opts, exec(cli))?,
                None => run_suite("theorem-suite", None, &graph_inputs(inputs)?, &opts, exec(cli)),
            };
            return Ok(print_report(cli, &report));
        }
        Cmd::Render { format, inputs } => match format {
            Format::Graph6 => {
                for (i, g) in graph_inputs(inputs)?.iter().enumerate() {
                    emit(&cli.emit_svg, &format!("g{i}.dot"), &g.to_dot())?;
                    match best_rep(g, limit)? {
                        Some(rep) => {
                            write!(out, "{}", render_intervals(&rep, RenderFormat::Ascii))?;
                            emit_rep(&cli.emit_svg, &format!("g{i}"), &rep)?;
                        }
                        None => writeln!(out, "{}: not an interval k-graph", g.to_graph6())?,
                    }
                }
            }
            Format::Poset => {
                for (i, p) in poset_inputs(inputs)?.iter().enumerate() {
                    let dot = render_hasse(p);
                    write!(out, "{dot}")?;
                    emit(&cli.emit_svg, &format!("p{i}-hasse.dot"), &dot)?;
                }
            }
        },
        Cmd::Fixtures => {
            if cli.emit_svg.is_some() {
                for f in fixtures() {
                    match &f.object {
                        FixtureObject::Graph(g) => {
                            emit(&cli.emit_svg, &format!("{}.dot", f.name), &g.to_dot())?;
                            if let Some(rep) = best_rep(g, limit)? {
                                let names: Vec<String> = (0..g.n()).map(|v| g.label(v)).collect();
                                emit_rep(&cli.emit_svg, f.name, &rep.with_labels(names))?;
                            }
                        }
                        FixtureObject::Poset(p) => emit(&cli.emit_svg, &format!("{}-hasse.dot", f.name), &render_hasse(p))?,
                    }
                }
            }
            return Ok(print_report(cli, &fixture_report(exec(cli))));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("ikg: {e:#}");
            ExitCode::FAILURE
        }
    }
}
