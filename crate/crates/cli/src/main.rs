//! `z3flow`: command-line access to the deciders, reductions, catalog and
//! verification suites.
//!
//! Exit codes: 0 feasible or pass, 1 infeasible or fail, 2 usage or input
//! error, 3 capability error.

mod record;

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use z3flow::connectivity::{
    edge_connectivity, essential_edge_connectivity, independence_number, odd_edge_connectivity,
};
use z3flow::io::{self, Format};
use z3flow::orientation::{
    is_z3_connected, mod3_orientation, z3_connectivity_counterexample, z3_orientation, Z3Boundary,
};
use z3flow::reduction::{
    find_wheel, w_contract, z3_reduce, z3_reduce_full, WContractionSpec, WheelParity, WheelWitness, DEFAULT_SIZE_CAP,
};
use z3flow::verify::{acceptance, decide_nz3f, family_verdict, lemma_sweep, r_table, rtable::KNOWN_R};
use z3flow::{catalog, par, Error, Multigraph, Orientation, VertexId, VertexSet};

use record::{digest, RunRecord};

const DEFAULT_SEED: u64 = 1;

#[derive(Parser)]
#[command(
    name = "z3flow",
    version,
    about = "Mod-3 orientations, Z3-connectivity and Z3-reductions of small multigraphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print a JSON run record instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Input format: auto, edgelist, json or graph6.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_format)]
    format: Format,
    /// Include wall time in the JSON record.
    #[arg(long, global = true)]
    timing: bool,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Edge-connectivity, optionally odd and essential variants and α.
    Connectivity {
        file: PathBuf,
        #[arg(long)]
        odd: bool,
        #[arg(long)]
        essential: bool,
        #[arg(long)]
        alpha: bool,
    },
    /// Decide a mod-3 orientation, Z3-connectivity or a Z3 boundary.
    Decide(DecideArgs),
    /// Z3-reduce by repeatedly contracting Z3-connected subgraphs.
    Reduce {
        file: PathBuf,
        /// Largest subgraph order searched.
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP, conflicts_with = "full")]
        cap: usize,
        /// Search subgraphs of every order.
        #[arg(long)]
        full: bool,
        /// Write the contraction trace as JSON.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Find a wheel subgraph.
    Wheel {
        file: PathBuf,
        #[arg(long, conflicts_with = "even")]
        odd: bool,
        #[arg(long)]
        even: bool,
    },
    /// Contract an odd wheel along a partition of its vertices.
    Wcontract {
        file: PathBuf,
        #[arg(long)]
        center: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        rim: Vec<u32>,
        /// One side of the partition; the other side is the rest of the wheel.
        #[arg(long = "X", value_delimiter = ',', required = true)]
        x: Vec<u32>,
    },
    /// Named graphs and their recorded properties.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("question").required(true)))]
struct DecideArgs {
    file: PathBuf,
    #[arg(long, group = "question")]
    mod3: bool,
    #[arg(long, group = "question")]
    z3conn: bool,
    /// File of boundary values in vertex order: integers or a JSON array.
    #[arg(long, group = "question")]
    boundary: Option<PathBuf>,
    /// Mod-3 orientability decided on the full Z3-reduction.
    #[arg(long, group = "question")]
    nz3f: bool,
    /// Emit the orientation (or the failing boundary).
    #[arg(long)]
    witness: bool,
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Show {
        name: String,
        /// Family parameter, e.g. `catalog show W --param 5`.
        #[arg(long)]
        param: Option<usize>,
        #[arg(long)]
        dot: bool,
    },
    #[command(group(ArgGroup::new("which").required(true)))]
    Verify {
        #[arg(group = "which")]
        name: Option<String>,
        #[arg(long, group = "which")]
        all: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// r(n, Z3) for every order up to `--n`.
    RTable {
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Allow n = 7.
        #[arg(long)]
        long: bool,
    },
    /// Membership in the families F1 and F2.
    Family { file: PathBuf },
    /// Seeded sweep of one lemma.
    Lemma {
        id: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// The acceptance suite.
    All,
}

struct Outcome {
    /// Canonical serialization hashed into the record.
    input: String,
    parameters: Value,
    verdict: Value,
    witness: Option<Value>,
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let global = &cli.global;
    let result = if global.threads == 0 { run(&cli) } else { par::with_threads(global.threads, || run(&cli)) };
    match result {
        Ok((name, out)) => {
            if global.json {
                let params = out.parameters.to_string();
                let rec = RunRecord {
                    command: name,
                    input_digest: digest(if out.input.is_empty() { &params } else { &out.input }),
                    parameters: out.parameters,
                    verdict: out.verdict,
                    witness: out.witness,
                    wall_time_ms: global.timing.then(|| start.elapsed().as_millis()),
                };
                println!("{}", serde_json::to_string_pretty(&rec).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::Capability(_)) { 3 } else { 2 })
        }
    }
}

fn run(cli: &Cli) -> z3flow::Result<(String, Outcome)> {
    let fmt = cli.global.format;
    Ok(match &cli.command {
        Command::Connectivity { file, odd, essential, alpha } => {
            ("connectivity".into(), connectivity(&load(file, fmt)?, *odd, *essential, *alpha)?)
        }
        Command::Decide(args) => ("decide".into(), decide(&load(&args.file, fmt)?, args)?),
        Command::Reduce { file, cap, full, trace } => {
            ("reduce".into(), reduce(&load(file, fmt)?, *cap, *full, trace.as_deref())?)
        }
        Command::Wheel { file, odd, even } => {
            let parity = if *odd {
                WheelParity::Odd
            } else if *even {
                WheelParity::Even
            } else {
                WheelParity::Any
            };
            ("wheel".into(), wheel(&load(file, fmt)?, parity))
        }
        Command::Wcontract { file, center, rim, x } => {
            ("wcontract".into(), wcontract(&load(file, fmt)?, *center, rim, x)?)
        }
        Command::Catalog { command } => ("catalog".into(), catalog_cmd(command)?),
        Command::Verify { command } => ("verify".into(), verify_cmd(command, fmt, cli.global.timing)?),
    })
}

fn read_input(path: &Path) -> z3flow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load(path: &Path, fmt: Format) -> z3flow::Result<Multigraph> {
    io::parse_graph(&read_input(path)?, fmt)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn graph_value(g: &Multigraph) -> Value {
    serde_json::from_str(&io::to_json(g)).expect("valid JSON")
}

fn orientation_value(g: &Multigraph, o: &Orientation) -> Value {
    let arcs: serde_json::Map<String, Value> = o.arcs().map(|(e, t, h)| (e.to_string(), json!([t, h]))).collect();
    json!({ "arcs": arcs, "dot": io::to_dot(g, Some(o)) })
}

fn vertex_list(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn connectivity(g: &Multigraph, odd: bool, essential: bool, alpha: bool) -> z3flow::Result<Outcome> {
    let mut verdict = serde_json::Map::new();
    let mut text = String::new();
    if g.order() >= 2 {
        let c = edge_connectivity(g)?;
        let _ = writeln!(text, "edge connectivity {} (side {})", c.cut_size, vertex_list(&c.witness));
        verdict.insert("edge_connectivity".into(), to_value(&c));
    } else {
        let _ = writeln!(text, "edge connectivity undefined below two vertices");
        verdict.insert("edge_connectivity".into(), Value::Null);
    }
    if odd {
        let c = odd_edge_connectivity(g)?;
        match &c {
            Some(c) => writeln!(text, "odd edge connectivity {} (side {})", c.cut_size, vertex_list(&c.witness)),
            None => writeln!(text, "odd edge connectivity: no odd cut"),
        }
        .ok();
        verdict.insert("odd_edge_connectivity".into(), to_value(&c));
    }
    if essential {
        let c = essential_edge_connectivity(g)?;
        match &c {
            Some(c) => writeln!(text, "essential edge connectivity {} (side {})", c.cut_size, vertex_list(&c.witness)),
            None => writeln!(text, "essential edge connectivity: no essential cut"),
        }
        .ok();
        verdict.insert("essential_edge_connectivity".into(), to_value(&c));
    }
    if alpha {
        let (a, w) = independence_number(g)?;
        let _ = writeln!(text, "independence number {a} (set {})", vertex_list(&w));
        verdict.insert("independence_number".into(), json!({ "value": a, "witness": w }));
    }
    Ok(Outcome {
        input: io::to_json(g),
        parameters: json!({ "odd": odd, "essential": essential, "alpha": alpha }),
        verdict: Value::Object(verdict),
        witness: None,
        text,
        ok: true,
    })
}

fn parse_boundary(g: &Multigraph, path: &Path) -> z3flow::Result<Z3Boundary> {
    let text = read_input(path)?;
    let values: Vec<i64> = if text.trim_start().starts_with('[') {
        serde_json::from_str(&text)?
    } else {
        text.split_whitespace()
            .enumerate()
            .map(|(i, t)| {
                t.parse().map_err(|_| Error::Parse {
                    location: format!("token {}", i + 1),
                    message: format!("not an integer: {t}"),
                })
            })
            .collect::<z3flow::Result<_>>()?
    };
    if values.len() != g.order() {
        return Err(Error::Domain(format!("boundary has {} values for {} vertices", values.len(), g.order())));
    }
    Z3Boundary::from_values(g, &values)
}

fn decide(g: &Multigraph, args: &DecideArgs) -> z3flow::Result<Outcome> {
    let mut parameters = json!({ "witness": args.witness });
    let (question, feasible, witness) = if args.mod3 {
        let o = mod3_orientation(g);
        ("mod3", o.is_some(), o.map(|o| orientation_value(g, &o)))
    } else if args.z3conn {
        if args.witness {
            let b = z3_connectivity_counterexample(g)?;
            ("z3conn", b.is_none(), b.map(|b| json!({ "failing_boundary": b })))
        } else {
            ("z3conn", is_z3_connected(g)?, None)
        }
    } else if let Some(path) = &args.boundary {
        let b = parse_boundary(g, path)?;
        parameters["boundary"] = to_value(&b);
        let o = z3_orientation(g, &b)?;
        ("boundary", o.is_some(), o.map(|o| orientation_value(g, &o)))
    } else {
        let d = decide_nz3f(g)?;
        let w = d.witness.as_ref().map(|o| {
            json!({ "reduced": graph_value(&d.reduced), "orientation": orientation_value(&d.reduced, o), "trace": d.trace })
        });
        ("nz3f", d.has_flow, w)
    };
    parameters["question"] = json!(question);
    let witness = if args.witness { witness } else { None };
    let mut text = format!("{}\n", if feasible { "feasible" } else { "infeasible" });
    if let Some(w) = &witness {
        match w.get("dot").or_else(|| w.pointer("/orientation/dot")) {
            Some(Value::String(dot)) => text.push_str(dot),
            _ => {
                let _ = writeln!(text, "{w}");
            }
        }
    }
    Ok(Outcome {
        input: io::to_json(g),
        parameters,
        verdict: json!({ "feasible": feasible }),
        witness,
        text,
        ok: feasible,
    })
}

fn reduce(g: &Multigraph, cap: usize, full: bool, trace_path: Option<&Path>) -> z3flow::Result<Outcome> {
    let (h, trace) = if full { z3_reduce_full(g)? } else { z3_reduce(g, cap)? };
    if let Some(p) = trace_path {
        std::fs::write(p, serde_json::to_string_pretty(&trace)?)?;
    }
    let text = format!(
        "reduced to {} vertices and {} edges after {} contractions; cap binding: {}\n{}",
        h.order(),
        h.size(),
        trace.events.len(),
        trace.cap_binding,
        io::to_edge_list(&h)
    );
    Ok(Outcome {
        input: io::to_json(g),
        parameters: json!({ "cap": if full { Value::Null } else { json!(cap) }, "full": full }),
        verdict: json!({ "reduced": graph_value(&h), "cap_binding": trace.cap_binding, "contractions": trace.events.len() }),
        witness: Some(to_value(&trace)),
        text,
        ok: true,
    })
}

fn wheel(g: &Multigraph, parity: WheelParity) -> Outcome {
    let w = find_wheel(g, parity);
    let text = match &w {
        Some(w) => {
            let rim: Vec<String> = w.rim.iter().map(|v| v.to_string()).collect();
            format!("wheel with centre {} and rim {}\n", w.center, rim.join(","))
        }
        None => "no wheel\n".to_string(),
    };
    Outcome {
        input: io::to_json(g),
        parameters: json!({ "parity": parity }),
        verdict: json!({ "found": w.is_some() }),
        witness: w.as_ref().map(to_value),
        text,
        ok: w.is_some(),
    }
}

fn wcontract(g: &Multigraph, center: u32, rim: &[u32], x: &[u32]) -> z3flow::Result<Outcome> {
    let wheel = WheelWitness::new(g, VertexId(center), rim.iter().map(|&v| VertexId(v)).collect())?;
    let x: VertexSet = x.iter().map(|&v| VertexId(v)).collect();
    let y: VertexSet = wheel.vertex_set().iter().filter(|&v| !x.contains(v)).collect();
    let spec = WContractionSpec { wheel, x, y };
    let (h, trace) = w_contract(g, &spec)?;
    Ok(Outcome {
        input: io::to_json(g),
        parameters: to_value(&spec),
        verdict: json!({ "contracted": graph_value(&h) }),
        witness: Some(to_value(&trace)),
        text: io::to_edge_list(&h),
        ok: true,
    })
}

fn catalog_cmd(command: &CatalogCommand) -> z3flow::Result<Outcome> {
    match command {
        CatalogCommand::List => {
            let names = catalog::list();
            Ok(Outcome {
                input: String::new(),
                parameters: json!({ "action": "list" }),
                verdict: json!(names),
                witness: None,
                text: names.iter().map(|n| format!("{n}\n")).collect(),
                ok: true,
            })
        }
        CatalogCommand::Show { name, param, dot } => {
            let entry = catalog::get(name, *param)?;
            let mut text = format!("{}: {}\n", entry.name, entry.description);
            for c in &entry.claims {
                let _ =
                    writeln!(text, "  {} = {}", to_value(&c.property).as_str().unwrap_or("?"), to_value(&c.expected));
            }
            text.push_str(&if *dot { io::to_dot(&entry.graph, None) } else { io::to_edge_list(&entry.graph) });
            Ok(Outcome {
                input: io::to_json(&entry.graph),
                parameters: json!({ "action": "show", "name": name, "param": param }),
                verdict: to_value(&entry),
                witness: None,
                text,
                ok: true,
            })
        }
        CatalogCommand::Verify { name, all } => {
            let reports = if *all {
                catalog::verify_all()?
            } else {
                vec![catalog::verify_claims(name.as_deref().expect("clap requires a name"))?]
            };
            let ok = reports.iter().all(|r| r.pass);
            let mut text = String::new();
            for r in &reports {
                let _ =
                    writeln!(text, "[{}] {} ({} claims)", if r.pass { "PASS" } else { "FAIL" }, r.name, r.checks.len());
                for c in r.checks.iter().filter(|c| !c.pass) {
                    let _ = writeln!(
                        text,
                        "    {}: expected {}, found {}",
                        to_value(&c.property).as_str().unwrap_or("?"),
                        to_value(&c.expected),
                        to_value(&c.actual)
                    );
                }
            }
            Ok(Outcome {
                input: String::new(),
                parameters: json!({ "action": "verify", "name": name, "all": all }),
                verdict: json!({ "pass": ok, "reports": reports }),
                witness: None,
                text,
                ok,
            })
        }
    }
}

fn verify_cmd(command: &VerifyCommand, fmt: Format, timing: bool) -> z3flow::Result<Outcome> {
    match command {
        VerifyCommand::RTable { n, long } => {
            let rows = r_table(*n, *long)?;
            let ok = rows.iter().all(|r| KNOWN_R.get(r.n - 1) == Some(&r.r));
            let mut text = String::from("n  r(n)  classes  extremal\n");
            for r in &rows {
                let _ = writeln!(text, "{:<2} {:<5} {:<8} {}", r.n, r.r, r.classes_checked, r.extremal.join(" "));
            }
            Ok(Outcome {
                input: String::new(),
                parameters: json!({ "n": n, "long": long }),
                verdict: json!({ "pass": ok, "rows": rows }),
                witness: None,
                text,
                ok,
            })
        }
        VerifyCommand::Family { file } => {
            let g = load(file, fmt)?;
            let v = family_verdict(&g)?;
            let text = format!("in F1: {}\nin F2: {}\n{}\n", v.in_f1, v.in_f2, v.notes.join("\n"));
            Ok(Outcome {
                input: io::to_json(&g),
                parameters: json!({}),
                ok: !v.in_f1 && !v.in_f2,
                verdict: to_value(&v),
                witness: None,
                text,
            })
        }
        VerifyCommand::Lemma { id, samples, seed } => {
            let r = lemma_sweep(id, *samples, *seed)?;
            let text = format!(
                "[{}] {}: {}/{} applicable, {} vacuous, {} violations (seed {})\n",
                if r.pass() { "PASS" } else { "FAIL" },
                r.lemma,
                r.applicable,
                r.samples,
                r.vacuous,
                r.violations,
                r.seed
            );
            Ok(Outcome {
                input: String::new(),
                parameters: json!({ "lemma": id, "samples": samples, "seed": seed }),
                ok: r.pass(),
                verdict: to_value(&r),
                witness: None,
                text,
            })
        }
        VerifyCommand::All => {
            let results = acceptance::run_all();
            let ok = results.iter().all(|r| r.pass);
            let mut text = String::new();
            for r in &results {
                let tag = if r.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "[{tag}] {}. {} ({} ms): {}", r.id, r.title, r.elapsed_ms, r.detail);
            }
            let mut checks = to_value(&results);
            if !timing {
                for c in checks.as_array_mut().expect("array") {
                    c.as_object_mut().expect("object").remove("elapsed_ms");
                }
            }
            Ok(Outcome {
                input: String::new(),
                parameters: json!({ "seed": acceptance::ACCEPTANCE_SEED }),
                verdict: json!({ "pass": ok, "criteria": checks }),
                witness: None,
                text,
                ok,
            })
        }
    }
}
