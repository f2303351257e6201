use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use r2dom::generators::{GenKind, GenSpec};
use r2dom::io::{self as gio, Format};
use r2dom::md::decompose;
use r2dom::oracle::{brute_gamma_r2, OracleError};
use r2dom::recognize::{classify_graph, ClassLabel, FixedZoo, GraphClass, WlsOp, ZooKind};
use r2dom::solver::{solve_tree, solve_with, SolveError, SolveOptions, TraceEntry};
use r2dom::verify::{self, RunReport};
use r2dom::Graph;

const USAGE: u8 = 1;
const UNSUPPORTED: u8 = 2;
const MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "r2dom", version, about = "Roman {2}-domination via modular decomposition")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    EdgeList,
    Dimacs,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file, or '-' for stdin.
    path: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the value, class and (optionally) a minimum function.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Print the minimum function.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
        /// Largest unsupported prime node handed to exhaustive search.
        #[arg(long, env = "R2DOM_ORACLE_LIMIT", default_value_t = 20)]
        oracle_limit: usize,
    },
    /// Class label and per-prime-node evidence, as JSON.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Modular decomposition tree, as JSON.
    Md {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive search.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, env = "R2DOM_ORACLE_LIMIT", default_value_t = 20)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Generate a seeded instance in edge-list format.
    Gen {
        #[arg(long, value_enum)]
        class: GenClass,
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Spider legs.
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// Thick spider legs instead of thin ones.
        #[arg(long)]
        thick: bool,
        #[arg(long, value_enum, default_value = "r3")]
        op: Op,
        /// Vertices doubled by the R3 operation.
        #[arg(long, default_value_t = 0)]
        t: usize,
        /// Edge probability for arbitrary graphs.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Zoo member: J, J-w, J-vw, K, L, Q, M1..M11, P<k>, C<k>, with an
        /// optional "co-" prefix.
        #[arg(long)]
        zoo: Option<String>,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: OutFormat,
    },
    /// Formula against oracle on generated instances. Exits 3 on any mismatch.
    Verify {
        #[arg(long, value_enum)]
        class: VerifyClass,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Decomposition and solve-phase timings on generated graphs.
    Bench {
        #[arg(long, value_enum, default_value = "cograph")]
        family: BenchFamily,
        #[arg(long, value_delimiter = ',', default_values_t = [25_000usize, 50_000, 100_000])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClass {
    Cograph,
    P4Sparse,
    P4Tidy,
    PartnerLimited,
    Spider,
    QuasiSpider,
    Wls,
    SplitHfree,
    Zoo,
    Arbitrary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    R1,
    R2,
    R3,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    EdgeList,
    Dimacs,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyClass {
    Cograph,
    P4Sparse,
    P4Tidy,
    PartnerLimited,
    Join,
    ZooFixed,
    Split,
    Spider,
    Paths,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamily {
    Cograph,
    ThinSpider,
}

#[derive(Serialize)]
struct SolveJson<'a> {
    gamma_r2: u64,
    class: &'a ClassLabel,
    witness: &'a [u8],
    trace: &'a [TraceEntry],
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    m: u64,
    nodes: usize,
    gamma_r2: u64,
    md_ms: f64,
    solve_ms: f64,
    ops: u64,
}

fn read_graph(input: &Input) -> Result<Graph> {
    let text = if input.path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading stdin")?
    } else {
        std::fs::read_to_string(&input.path).with_context(|| format!("reading {}", input.path.display()))?
    };
    let format = match input.format {
        InputFormat::EdgeList => Format::EdgeList,
        InputFormat::Dimacs => Format::Dimacs,
        InputFormat::Auto => sniff(&text),
    };
    gio::parse(&text, format).with_context(|| format!("parsing {}", input.path.display()))
}

/// DIMACS files open with 'c' comments or the 'p' line; edge lists with
/// digits or '#'.
fn sniff(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with('c') || l.starts_with('p') => Format::Dimacs,
        _ => Format::EdgeList,
    }
}

fn parse_zoo(name: &str) -> Result<ZooKind> {
    if let Some(rest) = name.strip_prefix("co-") {
        return Ok(ZooKind::Complement { of: Box::new(parse_zoo(rest)?) });
    }
    if let Some(t) = FixedZoo::ALL.into_iter().find(|t| t.name() == name) {
        return Ok(ZooKind::Fixed { template: t });
    }
    let k = |s: &str| s.parse::<usize>().ok().filter(|&k| k >= 6);
    match name.split_at(1) {
        ("P", k_str) if k(k_str).is_some() => Ok(ZooKind::Path { k: k(k_str).unwrap() }),
        ("C", k_str) if k(k_str).is_some() => Ok(ZooKind::Cycle { k: k(k_str).unwrap() }),
        _ => bail!("unknown zoo member {name:?}"),
    }
}

fn print_json(out: &mut String, v: &impl Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    Ok(())
}

fn cmd_solve(out: &mut String, input: &Input, witness: bool, json: bool, oracle_limit: usize) -> Result<ExitCode> {
    let g = read_graph(input)?;
    let r = solve_with(&g, &SolveOptions { oracle_limit })?;
    if json {
        print_json(out, &SolveJson { gamma_r2: r.gamma_r2, class: &r.class, witness: r.witness.values(), trace: &r.trace })?;
        return Ok(ExitCode::SUCCESS);
    }
    writeln!(out, "gamma_r2: {}", r.gamma_r2)?;
    writeln!(out, "class: {}", r.class.best.name())?;
    if r.oracle_nodes > 0 {
        writeln!(out, "oracle nodes: {}", r.oracle_nodes)?;
    }
    if r.split_table_mismatches > 0 {
        writeln!(out, "split case-table disagreements: {}", r.split_table_mismatches)?;
    }
    if witness {
        let vals: Vec<String> = r.witness.values().iter().map(u8::to_string).collect();
        writeln!(out, "witness: {}", vals.join(" "))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(out: &mut String, input: &Input, limit: usize, json: bool) -> Result<ExitCode> {
    let g = read_graph(input)?;
    let r = brute_gamma_r2(&g, limit)?;
    if json {
        print_json(out, &serde_json::json!({
            "gamma_r2": r.value,
            "witness": r.witness.values(),
            "nodes_explored": r.nodes_explored,
        }))?;
    } else {
        let vals: Vec<String> = r.witness.values().iter().map(u8::to_string).collect();
        writeln!(out, "gamma_r2: {}", r.value)?;
        writeln!(out, "witness: {}", vals.join(" "))?;
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    out: &mut String,
    class: GenClass,
    n: usize,
    seed: u64,
    r: usize,
    thick: bool,
    op: Op,
    t: usize,
    p: f64,
    zoo: Option<&str>,
    format: OutFormat,
) -> Result<ExitCode> {
    let thin = !thick;
    let kind = match class {
        GenClass::Cograph => GenKind::Cograph,
        GenClass::P4Sparse => GenKind::P4Sparse,
        GenClass::P4Tidy => GenKind::P4Tidy,
        GenClass::PartnerLimited => GenKind::PartnerLimited,
        GenClass::Spider => GenKind::Spider { r, thin },
        GenClass::QuasiSpider => GenKind::QuasiSpider { r, thin },
        GenClass::Wls => {
            let op = match op {
                Op::R1 => WlsOp::R1,
                Op::R2 => WlsOp::R2,
                Op::R3 => WlsOp::R3,
            };
            GenKind::Wls { r, thin, op, t }
        }
        GenClass::SplitHfree => GenKind::SplitHfree,
        GenClass::Zoo => GenKind::Zoo { kind: parse_zoo(zoo.context("--zoo is required for the zoo class")?)? },
        GenClass::Arbitrary => GenKind::Arbitrary { p },
    };
    let g = GenSpec { kind, n, seed }.generate()?;
    let format = match format {
        OutFormat::EdgeList => Format::EdgeList,
        OutFormat::Dimacs => Format::Dimacs,
    };
    out.push_str(&gio::emit(&g, format));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(out: &mut String, class: VerifyClass, n_max: Option<usize>, trials: usize, seed: u64, json: bool) -> Result<ExitCode> {
    let (name, report): (&str, RunReport) = match class {
        VerifyClass::Cograph => ("cograph", verify::verify_class(GraphClass::Cograph, n_max.unwrap_or(14), trials, seed)),
        VerifyClass::P4Sparse => {
            ("p4-sparse", verify::verify_class(GraphClass::P4Sparse, n_max.unwrap_or(14), trials, seed))
        }
        VerifyClass::P4Tidy => ("p4-tidy", verify::verify_class(GraphClass::P4Tidy, n_max.unwrap_or(14), trials, seed)),
        VerifyClass::PartnerLimited => (
            "partner-limited",
            verify::verify_class(GraphClass::PartnerLimited, n_max.unwrap_or(14), trials, seed),
        ),
        VerifyClass::Join => ("join", verify::verify_join(n_max.unwrap_or(6), trials, seed)),
        VerifyClass::ZooFixed => ("zoo-fixed", verify::verify_zoo_fixed()),
        VerifyClass::Split => ("split", verify::verify_split(n_max.unwrap_or(14), trials, seed)),
        VerifyClass::Spider => ("spider", verify::verify_spiders(6, n_max.unwrap_or(20))),
        VerifyClass::Paths => ("paths", verify::verify_paths_cycles(n_max.unwrap_or(16))),
    };
    if json {
        print_json(out, &report)?;
    } else {
        writeln!(out, "{name}: {}/{} match, {} mismatched, {} flagged", report.matched, report.total, report.mismatched, report.flagged)?;
        for rec in report.mismatches() {
            writeln!(out, 
                "  mismatch #{} {} n={} seed={}: formula {:?}, oracle {:?}, witness ok {}{}",
                rec.index,
                rec.label,
                rec.n,
                rec.seed,
                rec.formula,
                rec.oracle,
                rec.witness_ok,
                rec.note.as_deref().map(|s| format!(" ({s})")).unwrap_or_default()
            )?;
        }
    }
    Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(MISMATCH) })
}

fn cmd_bench(out: &mut String, family: BenchFamily, sizes: &[usize], reps: usize, seed: u64, json: bool) -> Result<ExitCode> {
    let mut rows = Vec::new();
    for &n in sizes {
        let kind = match family {
            BenchFamily::Cograph => GenKind::Cograph,
            BenchFamily::ThinSpider => GenKind::Spider { r: n / 2, thin: true },
        };
        let g = GenSpec { kind, n, seed }.generate()?;
        let t = Instant::now();
        let tree = decompose(&g);
        let md_ms = t.elapsed().as_secs_f64() * 1e3;
        let mut solve_ms = f64::MAX;
        let mut last = None;
        for _ in 0..reps.max(1) {
            let t = Instant::now();
            let r = solve_tree(&g, &tree, &SolveOptions::default())?;
            solve_ms = solve_ms.min(t.elapsed().as_secs_f64() * 1e3);
            last = Some(r);
        }
        let r = last.expect("at least one rep");
        rows.push(BenchRow { n, m: g.m(), nodes: tree.len(), gamma_r2: r.gamma_r2, md_ms, solve_ms, ops: r.ops });
    }
    if json {
        print_json(out, &rows)?;
    } else {
        writeln!(out, "{:>9} {:>11} {:>9} {:>9} {:>10} {:>10} {:>10}", "n", "m", "nodes", "gamma", "md ms", "solve ms", "ops/n")?;
        for r in &rows {
            writeln!(out, 
                "{:>9} {:>11} {:>9} {:>9} {:>10.2} {:>10.2} {:>10.2}",
                r.n,
                r.m,
                r.nodes,
                r.gamma_r2,
                r.md_ms,
                r.solve_ms,
                r.ops as f64 / r.n as f64
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli, out: &mut String) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Solve { input, witness, json, oracle_limit } => cmd_solve(out, &input, witness, json, oracle_limit),
        Cmd::Classify { input } => {
            let g = read_graph(&input)?;
            if g.n() == 0 {
                bail!("graph has no vertices");
            }
            print_json(out, &classify_graph(&g))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Md { input } => {
            let g = read_graph(&input)?;
            if g.n() == 0 {
                bail!("graph has no vertices");
            }
            print_json(out, &decompose(&g).to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Oracle { input, limit, json } => cmd_oracle(out, &input, limit, json),
        Cmd::Gen { class, n, seed, r, thick, op, t, p, zoo, format } => {
            cmd_gen(out, class, n, seed, r, thick, op, t, p, zoo.as_deref(), format)
        }
        Cmd::Verify { class, n_max, trials, seed, json } => cmd_verify(out, class, n_max, trials, seed, json),
        Cmd::Bench { family, sizes, reps, seed, json } => cmd_bench(out, family, &sizes, reps, seed, json),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(SolveError::Unsupported { .. }) = err.downcast_ref::<SolveError>() {
        return UNSUPPORTED;
    }
    if let Some(OracleError::TooLarge { .. }) = err.downcast_ref::<OracleError>() {
        return UNSUPPORTED;
    }
    USAGE
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    };
    // a closed pipe (`| head`) is not a failure
    match std::io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => ExitCode::from(USAGE),
        _ => code,
    }
}
