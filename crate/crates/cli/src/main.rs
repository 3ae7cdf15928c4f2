//! `blockeq` command-line tool.
//!
//! Exit codes: 0 success, 1 internal error, 2 infeasible or violation,
//! 3 budget exhausted, 4 bad input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use blockeq::bounds::conjecture_bounds;
use blockeq::coloring::{check, decide_equitable, spectrum_with_budget, Coloring, Decision, Verdict};
use blockeq::generators::{fig2_family, star_of_cliques};
use blockeq::graph::{line_graph, parse_graph, parse_hypergraph, to_edge_list, Format, Graph};
use blockeq::small_alpha::{
    chi_eq_star, color_alpha_min_1, color_alpha_min_2, recognize_alpha_min_1, recognize_alpha_min_2,
};
use blockeq::structured::{color_b3le3, generate_blnk, recognize_blnk, BlnkParams};
use blockeq::verifier::{canonical_code, verify_conjecture, verify_spectrum, VerifyOptions};
use blockeq::wellcovered::{self, color_well_covered, decompose, WCDecomposition};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "blockeq", version, about = "Equitable coloring of block graphs")]
struct Cli {
    /// More log output on stderr (repeatable).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file; `-` or absent reads stdin.
    input: Option<PathBuf>,
    /// Input format; guessed from the content when absent.
    #[arg(long)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Clique number, independence parameters and the gap-one bracket.
    Bounds(Input),
    /// Equitable coloring by a constructive method or the exact oracle.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Class::Auto)]
        class: Class,
        /// Number of colors; each class has its own default.
        #[arg(short)]
        k: Option<usize>,
        /// Designated degree-2 vertex for `b3le3`.
        #[arg(long)]
        vertex: Option<usize>,
        /// Seconds per exact-oracle decision.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Decide equitable k-colorability exactly.
    Exact {
        #[command(flatten)]
        input: Input,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Feasibility of every k up to `--kmax`, with gaps and threshold.
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// Defaults to the number of vertices.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check the bracket on every connected block graph up to `--nmax` vertices.
    Verify {
        #[arg(long)]
        nmax: usize,
        /// Also compute spectra up to chi_eq + SLACK (default 3).
        #[arg(long, num_args = 0..=1, default_missing_value = "3")]
        spectrum: Option<usize>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 10.0)]
        budget: f64,
        /// JSONL file for the per-graph records.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectrum sweep over enumerated block graphs; reports gaps.
    SpectrumSweep {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 3)]
        slack: usize,
        /// Only well-covered graphs.
        #[arg(long)]
        well_covered: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = 10.0)]
        budget: f64,
    },
    /// Write a graph from a named family as an edge list.
    Generate {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Line graph of a hypergraph file, as an edge list.
    LineGraph { input: Option<PathBuf> },
    /// Graphviz rendering with vertices filled by color.
    ExportDot {
        #[command(flatten)]
        input: Input,
        /// Coloring JSON (`{"k":..,"classes":[..]}`, or a `color` report);
        /// computed with `--class auto` when absent.
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Levels of K_n with k-1 pendant cliques per simplicial vertex.
    Blnk { n: usize, k: usize, l: usize },
    /// A recipe JSON `{base, ops: [{host, s, pendants}]}`.
    Wellcovered { recipe: PathBuf },
    /// K_k with k+1 pendant K_{k+1} at each vertex.
    Fig2 { k: usize },
    /// Cliques of the given sizes sharing one vertex.
    Star { sizes: Vec<usize> },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Class {
    Auto,
    Wellcovered,
    Blnk,
    B3le3,
    Alpha1,
    Alpha2,
    Exact,
}

impl Class {
    fn name(self) -> &'static str {
        match self {
            Class::Auto => "auto",
            Class::Wellcovered => "wellcovered",
            Class::Blnk => "blnk",
            Class::B3le3 => "b3le3",
            Class::Alpha1 => "alpha1",
            Class::Alpha2 => "alpha2",
            Class::Exact => "exact",
        }
    }
}

#[derive(Debug)]
struct CliError {
    code: u8,
    kind: &'static str,
    message: String,
}

impl CliError {
    fn input(message: impl ToString) -> Self {
        CliError { code: 4, kind: "input", message: message.to_string() }
    }

    fn internal(message: impl ToString) -> Self {
        CliError { code: 1, kind: "internal", message: message.to_string() }
    }
}

type Res<T> = Result<T, CliError>;

fn read_text(path: Option<&Path>) -> Res<String> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::input(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Res<String> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s).map_err(|e| CliError::input(format!("stdin: {e}")))?;
    Ok(s)
}

fn guess_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('p') || l.starts_with('c') => Format::Dimacs,
        _ => Format::EdgeList,
    }
}

fn load(input: &Input) -> Res<Graph> {
    let text = read_text(input.input.as_deref())?;
    let format = input.format.unwrap_or_else(|| guess_format(&text));
    parse_graph(&text, format).map_err(CliError::input)
}

fn budget(secs: Option<f64>) -> Res<Option<Duration>> {
    secs.map(|s| Duration::try_from_secs_f64(s).map_err(|e| CliError::input(format!("budget: {e}")))).transpose()
}

fn emit(value: &Value) -> Res<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(CliError::internal)?;
    writeln!(out).map_err(CliError::internal)
}

fn write_output(path: Option<&Path>, text: &str) -> Res<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::input(format!("{}: {e}", p.display()))),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(CliError::internal),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Res<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            Ok(rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build().map_err(CliError::internal)?.install(f))
        }
    }
}

/// A checked coloring plus what produced it.
struct Colored {
    class: Class,
    reason: String,
    coloring: Coloring,
    extra: Value,
}

fn class_error(class: Class, message: impl ToString) -> CliError {
    CliError { code: 4, kind: "class", message: format!("{}: {}", class.name(), message.to_string()) }
}

fn fixed_k(class: Class, natural: usize, k: Option<usize>) -> Res<()> {
    match k {
        Some(k) if k != natural => Err(class_error(class, format!("colors with exactly k = {natural}, not {k}"))),
        _ => Ok(()),
    }
}

fn try_class(
    g: &Graph,
    class: Class,
    k: Option<usize>,
    vertex: Option<usize>,
    budget: Option<Duration>,
) -> Res<Colored> {
    match class {
        Class::Blnk => {
            let p = recognize_blnk(g).ok_or_else(|| class_error(class, "graph is not a B_l(n,k)"))?;
            fixed_k(class, p.n, k)?;
            let coloring = blockeq::structured::color_from_center(g, p.n).map_err(|e| class_error(class, e))?;
            Ok(Colored {
                class,
                reason: format!("isomorphic to B_{}({}, {})", p.l, p.n, p.k),
                coloring,
                extra: json!({ "params": p }),
            })
        }
        Class::B3le3 => {
            fixed_k(class, 4, k)?;
            let (coloring, t) = color_b3le3(g, vertex).map_err(|e| class_error(class, e))?;
            Ok(Colored {
                class,
                reason: "all blocks are triangles, every cut vertex in at most 3".into(),
                coloring,
                extra: json!({ "ttype": t }),
            })
        }
        Class::Alpha1 => {
            let s = recognize_alpha_min_1(g).ok_or_else(|| class_error(class, "no universal vertex"))?;
            fixed_k(class, chi_eq_star(&s), k)?;
            Ok(Colored {
                class,
                reason: format!("star of cliques {} at vertex {}", s.notation(), s.center),
                coloring: color_alpha_min_1(&s),
                extra: json!({ "structure": s, "notation": s.notation() }),
            })
        }
        Class::Alpha2 => {
            let st = recognize_alpha_min_2(g).ok_or_else(|| class_error(class, "not an extended star of cliques"))?;
            let lower = blockeq::small_alpha::alpha_min_2_lower_bound(&st);
            let coloring = color_alpha_min_2(g, &st, k.unwrap_or(lower)).map_err(|e| class_error(class, e))?;
            Ok(Colored {
                class,
                reason: format!("{} around vertex {}", st.notation(), st.x()),
                extra: json!({ "structure": st, "notation": st.notation() }),
                coloring,
            })
        }
        Class::Wellcovered => {
            let d = decompose(g)
                .map_err(|e| class_error(class, e))?
                .ok_or_else(|| class_error(class, "not well-covered"))?;
            let k = k.unwrap_or_else(|| d.recipe.omega());
            let coloring = color_well_covered(g, k).map_err(|e| class_error(class, e))?;
            Ok(Colored {
                class,
                reason: format!("well-covered, {} attachment steps", d.recipe.ops.len()),
                coloring,
                extra: json!({ "recipe": d.recipe }),
            })
        }
        Class::Exact => {
            let (k, coloring) = match k {
                Some(k) => match decide_equitable(g, k, budget) {
                    Decision::Feasible(c) => (k, c),
                    Decision::Infeasible => {
                        return Err(CliError {
                            code: 2,
                            kind: "infeasible",
                            message: format!("no equitable {k}-coloring"),
                        })
                    }
                    Decision::Unknown => return Err(unknown(k)),
                },
                None => blockeq::coloring::chi_equitable_with_budget(g, budget).map_err(unknown)?,
            };
            Ok(Colored { class, reason: "exact search".into(), coloring, extra: json!({ "k": k }) })
        }
        Class::Auto => unreachable!("auto is resolved by the caller"),
    }
}

fn unknown(k: usize) -> CliError {
    CliError { code: 3, kind: "unknown", message: format!("budget exhausted deciding k = {k}") }
}

/// Tries the constructive classes in a fixed order and falls back to the
/// exact oracle.
fn auto_color(g: &Graph, k: Option<usize>, vertex: Option<usize>, budget: Option<Duration>) -> Res<Colored> {
    let order = [Class::Blnk, Class::B3le3, Class::Alpha1, Class::Alpha2, Class::Wellcovered];
    for class in order {
        match try_class(g, class, k, vertex, budget) {
            Ok(c) => {
                log::info!("auto: matched {} ({})", class.name(), c.reason);
                return Ok(c);
            }
            Err(e) => log::info!("auto: {}", e.message),
        }
    }
    log::info!("auto: falling back to the exact oracle");
    try_class(g, Class::Exact, k, vertex, budget)
}

fn color_graph(
    g: &Graph,
    class: Class,
    k: Option<usize>,
    vertex: Option<usize>,
    budget: Option<Duration>,
) -> Res<Colored> {
    let colored = match class {
        Class::Auto => auto_color(g, k, vertex, budget)?,
        c => try_class(g, c, k, vertex, budget)?,
    };
    match check(g, &colored.coloring).map_err(CliError::internal)? {
        Verdict::ValidEquitable => Ok(colored),
        v => Err(CliError::internal(format!("{} produced a coloring that fails the checker: {v:?}", class.name()))),
    }
}

fn cmd_bounds(input: &Input) -> Res<u8> {
    let g = load(input)?;
    let mut report = conjecture_bounds(&g).map_err(CliError::input)?;
    report.code = canonical_code(&g).ok().map(|c| c.to_string());
    emit(&serde_json::to_value(&report).map_err(CliError::internal)?)?;
    Ok(0)
}

fn cmd_color(input: &Input, class: Class, k: Option<usize>, vertex: Option<usize>, secs: Option<f64>) -> Res<u8> {
    let g = load(input)?;
    let c = color_graph(&g, class, k, vertex, budget(secs)?)?;
    let mut out = json!({
        "class": c.class.name(),
        "reason": c.reason,
        "k": c.coloring.k(),
        "class_sizes": c.coloring.class_sizes(),
        "verdict": Verdict::ValidEquitable,
        "coloring": c.coloring,
    });
    if let (Value::Object(o), Value::Object(extra)) = (&mut out, c.extra) {
        o.extend(extra.into_iter().filter(|(key, _)| key != "k"));
    }
    emit(&out)?;
    Ok(0)
}

fn cmd_exact(input: &Input, k: usize, secs: Option<f64>) -> Res<u8> {
    let g = load(input)?;
    let (decision, code, coloring) = match decide_equitable(&g, k, budget(secs)?) {
        Decision::Feasible(c) => ("feasible", 0, Some(c)),
        Decision::Infeasible => ("infeasible", 2, None),
        Decision::Unknown => ("unknown", 3, None),
    };
    let mut out = json!({ "k": k, "decision": decision });
    if let Some(c) = coloring {
        if check(&g, &c).map_err(CliError::internal)? != Verdict::ValidEquitable {
            return Err(CliError::internal("oracle returned a coloring that fails the checker"));
        }
        out["class_sizes"] = json!(c.class_sizes());
        out["coloring"] = json!(c);
    }
    emit(&out)?;
    Ok(code)
}

fn cmd_spectrum(input: &Input, kmax: Option<usize>, secs: Option<f64>, jobs: Option<usize>) -> Res<u8> {
    let g = load(input)?;
    let kmax = kmax.unwrap_or(g.n()).max(1);
    let b = budget(secs)?;
    let s = with_jobs(jobs, || spectrum_with_budget(&g, kmax, b))?;
    emit(&serde_json::to_value(&s).map_err(CliError::internal)?)?;
    Ok(if s.unknown.is_empty() { 0 } else { 3 })
}

fn cmd_verify(nmax: usize, spectrum: Option<usize>, jobs: Option<usize>, secs: f64, out: Option<&Path>) -> Res<u8> {
    if nmax == 0 {
        return Err(CliError::input("--nmax must be at least 1"));
    }
    let opts = VerifyOptions { budget: budget(Some(secs))?, spectrum_slack: spectrum, jobs };
    let report = verify_conjecture(nmax, &opts);
    if let Some(path) = out {
        let mut text = String::new();
        for r in &report.records {
            text.push_str(&serde_json::to_string(r).map_err(CliError::internal)?);
            text.push('\n');
        }
        write_output(Some(path), &text)?;
    }
    let total = report.total();
    let gaps: Vec<&str> = report
        .records
        .iter()
        .filter(|r| r.spectrum_gaps.as_ref().is_some_and(|g| !g.is_empty()))
        .map(|r| r.code.as_str())
        .collect();
    emit(&json!({
        "nmax": nmax,
        "per_n": report.summary,
        "total": total,
        "spectrum_gaps": spectrum.map(|_| gaps),
        "violation": report.violation,
    }))?;
    Ok(if total.violations > 0 {
        2
    } else if total.unknown > 0 {
        3
    } else {
        0
    })
}

fn cmd_spectrum_sweep(nmax: usize, slack: usize, wc: bool, jobs: Option<usize>, secs: f64) -> Res<u8> {
    let opts = VerifyOptions { budget: budget(Some(secs))?, spectrum_slack: Some(slack), jobs };
    let report = verify_spectrum(nmax, slack, &opts, |g| !wc || blockeq::bounds::is_well_covered(g).unwrap_or(false));
    let gaps: Vec<_> = report.with_gaps().collect();
    emit(&json!({
        "nmax": nmax,
        "slack": slack,
        "graphs_checked": report.graphs_checked,
        "with_gaps": gaps,
        "unknown": report.entries.iter().filter(|e| !e.unknown.is_empty()).count(),
    }))?;
    Ok(0)
}

fn cmd_generate(family: &Family, out: Option<&Path>) -> Res<u8> {
    let g = match family {
        Family::Blnk { n, k, l } => generate_blnk(BlnkParams::new(*n, *k, *l).map_err(CliError::input)?),
        Family::Wellcovered { recipe } => {
            let text = read_text(Some(recipe))?;
            let r: WCDecomposition =
                serde_json::from_str(&text).map_err(|e| CliError::input(format!("recipe: {e}")))?;
            wellcovered::generate(&r).map_err(CliError::input)?
        }
        Family::Fig2 { k } => {
            if *k < 1 {
                return Err(CliError::input("k must be at least 1"));
            }
            fig2_family(*k).0
        }
        Family::Star { sizes } => {
            if sizes.iter().any(|&s| s < 2) {
                return Err(CliError::input("clique sizes must be at least 2"));
            }
            star_of_cliques(sizes)
        }
    };
    write_output(out, &to_edge_list(&g))?;
    Ok(0)
}

fn cmd_line_graph(input: Option<&Path>) -> Res<u8> {
    let h = parse_hypergraph(&read_text(input)?).map_err(CliError::input)?;
    write_output(None, &to_edge_list(&line_graph(&h)))?;
    Ok(0)
}

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
    "#008080", "#e6beff",
];

fn dot(g: &Graph, c: &Coloring) -> String {
    let mut s = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..g.n() {
        let color = c.color(v);
        s.push_str(&format!(
            "  {v} [label=\"{v}:{color}\", fillcolor=\"{}\"];\n",
            PALETTE[(color - 1) % PALETTE.len()]
        ));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

fn cmd_export_dot(input: &Input, coloring: Option<&Path>) -> Res<u8> {
    let g = load(input)?;
    let c = match coloring {
        Some(p) => {
            let v: Value =
                serde_json::from_str(&read_text(Some(p))?).map_err(|e| CliError::input(format!("coloring: {e}")))?;
            let inner = v.get("coloring").cloned().unwrap_or(v);
            let c: Coloring = serde_json::from_value(inner).map_err(|e| CliError::input(format!("coloring: {e}")))?;
            if let Verdict::Improper { u, v } = check(&g, &c).map_err(CliError::input)? {
                return Err(CliError::input(format!("coloring is improper on edge {u}-{v}")));
            }
            c
        }
        None => color_graph(&g, Class::Auto, None, None, None)?.coloring,
    };
    write_output(None, &dot(&g, &c))?;
    Ok(0)
}

fn run(cli: &Cli) -> Res<u8> {
    match &cli.command {
        Command::Bounds(input) => cmd_bounds(input),
        Command::Color { input, class, k, vertex, budget } => cmd_color(input, *class, *k, *vertex, *budget),
        Command::Exact { input, k, budget } => cmd_exact(input, *k, *budget),
        Command::Spectrum { input, kmax, budget, jobs } => cmd_spectrum(input, *kmax, *budget, *jobs),
        Command::Verify { nmax, spectrum, jobs, budget, out } => {
            cmd_verify(*nmax, *spectrum, *jobs, *budget, out.as_deref())
        }
        Command::SpectrumSweep { nmax, slack, well_covered, jobs, budget } => {
            cmd_spectrum_sweep(*nmax, *slack, *well_covered, *jobs, *budget)
        }
        Command::Generate { family, out } => cmd_generate(family, out.as_deref()),
        Command::LineGraph { input } => cmd_line_graph(input.as_deref()),
        Command::ExportDot { input, coloring } => cmd_export_dot(input, coloring.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let body = json!({ "error": e.kind, "message": e.message });
            eprintln!("{body}");
            ExitCode::from(e.code)
        }
    }
}
