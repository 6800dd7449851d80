use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use sepcodes_core::format::{parse_graph, parse_test_cover, write_graph, write_hypergraph};
use sepcodes_core::reductions::{
    check_gadget_lower_bound, forward_set, pad_collection, reduce, solve_test_cover,
    verify_reduction_iff,
};
use sepcodes_core::separation::{is_s_set, kind_hypergraph, number};
use sepcodes_core::verify::{
    check_bound_theorems, check_complement_duality, check_complement_gaps, check_spiders,
    spider_closed_forms, TheoremReport, Verdict,
};
use sepcodes_core::{Family, Graph, Kind, SeparationKind, VertexSet};

/// Exact separating sets and identification codes on graphs.
#[derive(Parser)]
#[command(name = "sepcodes", version)]
struct Cli {
    /// Largest universe the exact solver accepts.
    #[arg(long, global = true, env = "SEPCODES_GUARD", default_value_t = 40)]
    guard: usize,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Include wall-clock times (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum set of one kind, or of all kinds.
    Compute(ComputeArgs),
    /// Theorem checks on one graph.
    Verify(VerifyArgs),
    /// Write a named family graph.
    Families(FamilyArgs),
    /// Build a reduction graph from a Test-Cover instance.
    Reduce(ReduceArgs),
    /// Print the hypergraph of a kind on a graph.
    Dump(DumpArgs),
    /// Closed-form spider numbers, optionally checked against the solver.
    Spiders(SpiderArgs),
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    graph: PathBuf,
    /// One of L O I F D TD LD LTD OD OTD ID ITD FD FTD, or "all".
    #[arg(long)]
    kind: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Comma-separated subset of 3,4,5,7,lemA,cor2,fig2,order,eq1,eq2,eq4,gap,aug.
    #[arg(long, value_delimiter = ',')]
    theorems: Option<Vec<String>>,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    name: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    testcover: PathBuf,
    #[arg(long)]
    sep: SeparationKind,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Decide both sides exactly (F only with --deep).
    #[arg(long)]
    verify: bool,
    /// Allow the exact F check and lift the guard for it.
    #[arg(long)]
    deep: bool,
}

#[derive(Args)]
struct DumpArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Separation kind or code.
    #[arg(long, alias = "kind")]
    sep: String,
    /// Keep every edge instead of reducing to the clutter.
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpiderArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    check: bool,
}

/// Exit status classes: input problems and negative outcomes.
enum Failure {
    Input(String),
    Negative(Value),
}

type Outcome = Result<Value, Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

const THEOREM_GROUPS: [&str; 13] = [
    "3", "4", "5", "7", "lemA", "cor2", "fig2", "order", "eq1", "eq2", "eq4", "gap", "aug",
];

fn read(path: &Path) -> Result<(String, String), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    Ok((text, digest))
}

fn load_graph(path: &Path) -> Result<(Graph, String), Failure> {
    let (text, digest) = read(path)?;
    let g = parse_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok((g, digest))
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn check_guard(n: usize, guard: usize) -> Result<(), Failure> {
    if n > guard {
        return Err(Failure::Input(format!(
            "graph has {n} vertices, above the solver guard of {guard} (raise with --guard or SEPCODES_GUARD)"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct ItemResult {
    kind: Kind,
    feasible: bool,
    number: Option<usize>,
    witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seconds: Option<f64>,
}

fn compute(cli: &Cli, args: &ComputeArgs) -> Outcome {
    let (g, digest) = load_graph(&args.graph)?;
    check_guard(g.n(), cli.guard)?;
    let kinds: Vec<Kind> = if args.kind.eq_ignore_ascii_case("all") {
        Kind::all().collect()
    } else {
        vec![args.kind.parse().map_err(input)?]
    };
    let adm = g.admissibility();
    let results: Vec<ItemResult> = kinds
        .iter()
        .map(|&kind| {
            let start = Instant::now();
            let r = number(&g, kind);
            ItemResult {
                kind,
                feasible: r.feasible,
                number: r.tau,
                witness: r.witness,
                obstruction: adm.obstruction(kind),
                seconds: cli.timings.then(|| start.elapsed().as_secs_f64()),
            }
        })
        .collect();
    let all_feasible = results.iter().all(|r| r.feasible);
    let report = json!({
        "command": "compute",
        "input_sha256": digest,
        "n": g.n(),
        "results": results,
    });
    if kinds.len() == 1 && !all_feasible {
        Err(Failure::Negative(report))
    } else {
        Ok(report)
    }
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let (g, digest) = load_graph(&args.graph)?;
    check_guard(g.n(), cli.guard)?;
    let groups: Vec<&str> = match &args.theorems {
        None => THEOREM_GROUPS.to_vec(),
        Some(list) => list
            .iter()
            .map(|t| {
                THEOREM_GROUPS
                    .iter()
                    .copied()
                    .find(|g| g.eq_ignore_ascii_case(t.trim()))
                    .ok_or_else(|| Failure::Input(format!("unknown theorem id '{t}'")))
            })
            .collect::<Result<_, _>>()?,
    };
    let wants = |gs: &[&str]| gs.iter().any(|g| groups.contains(g));
    let mut reports: Vec<TheoremReport> = Vec::new();
    if wants(&[
        "3", "4", "5", "fig2", "order", "eq1", "eq2", "eq4", "gap", "aug",
    ]) {
        reports.push(check_bound_theorems(&g));
    }
    if wants(&["7", "lemA"]) {
        reports.push(check_complement_duality(&g));
    }
    if wants(&["cor2"]) {
        reports.push(check_complement_gaps(&g));
    }
    for r in &mut reports {
        r.retain_groups(&groups);
    }
    let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
    let report = json!({
        "command": "verify",
        "input_sha256": digest,
        "theorems": groups,
        "reports": reports,
    });
    if failed {
        Err(Failure::Negative(report))
    } else {
        Ok(report)
    }
}

fn families(args: &FamilyArgs) -> Outcome {
    let g = Family::parse(&args.name, args.k)
        .and_then(Family::build)
        .map_err(input)?;
    let text = write_graph(&g);
    if let Some(out) = &args.out {
        write_out(out, &text)?;
    }
    Ok(json!({
        "command": "families",
        "family": args.name,
        "k": args.k,
        "n": g.n(),
        "m": g.edge_count(),
        "out": args.out.as_ref().map(|p| p.display().to_string()),
        "edges": g.edges(),
    }))
}

fn reduce_cmd(cli: &Cli, args: &ReduceArgs) -> Outcome {
    let (text, digest) = read(&args.testcover)?;
    let inst = parse_test_cover(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.testcover.display())))?;
    let art = reduce(&inst, args.sep).map_err(input)?;
    if let Some(out) = &args.out {
        write_out(out, &write_graph(&art.graph))?;
    }
    let tc = solve_test_cover(&inst).map_err(input)?;
    let tc_tau = tc.tau.expect("valid instance");

    // The explicit set from a minimum test collection, padded to the budget.
    let forward = if tc_tau <= inst.budget() {
        let chosen = pad_collection(&inst, tc.witness.as_ref().expect("feasible"));
        let a = forward_set(&art, &inst, &chosen).map_err(input)?;
        let valid = is_s_set(&art.graph, art.sep, &a);
        let bound = valid && check_gadget_lower_bound(&art, &a).map_err(input)?;
        Some(json!({
            "tests": chosen,
            "set": a,
            "size": a.len(),
            "is_s_set": valid,
            "meets_region_bound": bound,
        }))
    } else {
        None
    };
    let forward_ok = forward
        .as_ref()
        .is_none_or(|f| f["is_s_set"] == json!(true) && f["meets_region_bound"] == json!(true));

    let mut iff = None;
    if args.verify && (args.sep != SeparationKind::F || args.deep) {
        let guard = if args.deep { usize::MAX } else { cli.guard };
        let start = Instant::now();
        let r = verify_reduction_iff(&inst, args.sep, guard).map_err(input)?;
        let mut v = serde_json::to_value(&r).expect("serializable");
        if cli.timings {
            v["seconds"] = json!(start.elapsed().as_secs_f64());
        }
        iff = Some(v);
    }
    let agree = iff.as_ref().is_none_or(|v| v["agree"] == json!(true));
    let report = json!({
        "command": "reduce",
        "input_sha256": digest,
        "artifact": art,
        "test_cover_tau": tc_tau,
        "forward": forward,
        "iff": iff,
        "out": args.out.as_ref().map(|p| p.display().to_string()),
    });
    if forward_ok && agree {
        Ok(report)
    } else {
        Err(Failure::Negative(report))
    }
}

fn dump(args: &DumpArgs) -> Outcome {
    let (g, digest) = load_graph(&args.graph)?;
    let kind: Kind = args.sep.parse().map_err(input)?;
    let mut h = kind_hypergraph(&g, kind);
    if !args.raw {
        h = h.clutter();
    }
    let text = write_hypergraph(&h);
    if let Some(out) = &args.out {
        write_out(out, &text)?;
    }
    Ok(json!({
        "command": "dump",
        "input_sha256": digest,
        "kind": kind,
        "clutter": !args.raw,
        "n": h.n(),
        "edges": h.edge_set(),
        "out": args.out.as_ref().map(|p| p.display().to_string()),
    }))
}

fn spiders(cli: &Cli, args: &SpiderArgs) -> Outcome {
    let table = spider_closed_forms(args.k).map_err(input)?;
    if !args.check {
        return Ok(json!({ "command": "spiders", "table": table }));
    }
    check_guard(2 * args.k, cli.guard)?;
    let report = check_spiders(args.k).map_err(input)?;
    let ok = report.verdict != Verdict::Fail;
    let out = json!({ "command": "spiders", "table": table, "check": report });
    if ok {
        Ok(out)
    } else {
        Err(Failure::Negative(out))
    }
}

/// Flattens a JSON value into `path = value` lines.
fn render_pretty(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                render_pretty(x, &p, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                render_pretty(x, &format!("{path}[{i}]"), out);
            }
        }
        other => {
            let _ = writeln!(out, "{path:<40} {other}");
        }
    }
}

fn emit(cli: &Cli, v: &Value) {
    let mut s = String::new();
    if cli.pretty {
        render_pretty(v, "", &mut s);
    } else {
        let _ = writeln!(s, "{v}");
    }
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match &cli.command {
        Command::Compute(a) => compute(&cli, a),
        Command::Verify(a) => verify(&cli, a),
        Command::Families(a) => families(a),
        Command::Reduce(a) => reduce_cmd(&cli, a),
        Command::Dump(a) => dump(a),
        Command::Spiders(a) => spiders(&cli, a),
    };
    match outcome {
        Ok(v) => {
            emit(&cli, &v);
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(v)) => {
            emit(&cli, &v);
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
