use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matchext::extend::{
    is_emn_extendable_with, is_k_extendable_with, is_n_factor_critical_with,
    is_nk_extendable_with, EmnMode, Guards,
};
use matchext::graph::io::{parse, to_graph6, Format};
use matchext::harness::{run_ensemble, EnsembleConfig};
use matchext::lab::{
    claim_bounds, evaluate, g0_of_girth, sharpness_construction, TheoremId, TheoremParams,
};
use matchext::matching::{matching_number, max_matching};
use matchext::params::{binding_number_with, toughness_with};
use matchext::structure::{barrier_certificate, gallai_edmonds, is_factor_critical};
use matchext::{Error, Graph, Rational};

const EXIT_VIOLATION: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser)]
#[command(name = "matchext", version, about = "Matching extendability toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Ceiling on configurations examined by one extendability check.
    #[arg(long, global = true)]
    max_configurations: Option<u64>,
    /// Largest order accepted by the exact binding number and toughness scans.
    #[arg(long, global = true)]
    max_parameter_order: Option<usize>,
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for stdin.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Adj,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parameter {
    Binding,
    Toughness,
    Kappa,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters and Gallai–Edmonds decomposition.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Extendability verdict with certificate.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, group = "property")]
        k: Option<usize>,
        #[arg(long, group = "property")]
        nfc: Option<usize>,
        #[arg(long, group = "property", num_args = 2, value_names = ["N", "K"])]
        nk: Option<Vec<usize>>,
        #[arg(long, group = "property", num_args = 2, value_names = ["M", "N"])]
        emn: Option<Vec<usize>>,
        /// Require `M ∪ N` to be a matching in E(m,n) checks.
        #[arg(long)]
        strict_disjoint: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact parameter with witness.
    Param {
        #[command(flatten)]
        input: Input,
        #[arg(value_enum)]
        which: Parameter,
        #[arg(long)]
        json: bool,
    },
    /// Hypothesis report for one of the extension results.
    Thm {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        id: TheoremId,
        #[arg(long)]
        eps: Rational,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        girth: Option<usize>,
        #[arg(long)]
        strict_disjoint: bool,
    },
    /// Proof bounds and order threshold.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        eps: Rational,
    },
    /// Named constructions, written as graph6.
    Construct {
        #[command(subcommand)]
        which: Construction,
    },
    /// Seeded ensemble run from a JSON configuration.
    Ensemble {
        #[arg(long)]
        config: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Construction {
    Sharpness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_text(path: &PathBuf) -> matchext::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn load(input: &Input) -> matchext::Result<Graph> {
    let text = read_text(&input.input)?;
    let format = match input.format {
        InputFormat::Graph6 => Format::Graph6,
        InputFormat::Adj => Format::Adjacency,
    };
    parse(&text, format)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn param_json(r: matchext::Result<matchext::params::ParameterWitness>) -> Value {
    match r {
        Ok(w) => json!({ "value": w.value, "witness": w.witness }),
        Err(e) => json!({ "unavailable": e.to_string() }),
    }
}

fn analyze(g: &Graph, guards: &Guards, as_json: bool) {
    let ge = gallai_edmonds(g);
    let report = json!({
        "graph6": to_graph6(g),
        "order": g.order(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "girth": g.girth(),
        "kappa": g.vertex_connectivity(),
        "matching_number": matching_number(g),
        "maximum_matching": max_matching(g),
        "factor_critical": is_factor_critical(g),
        "binding": param_json(binding_number_with(g, guards)),
        "toughness": param_json(toughness_with(g, guards)),
        "gallai_edmonds": {
            "d": ge.d, "a": ge.a, "c": ge.c,
            "d_components": ge.d_components(g),
            "deficiency": ge.deficiency(g),
        },
        "barrier": barrier_certificate(g).ok().flatten(),
    });
    if as_json {
        print_json(&report);
        return;
    }
    let field = |k: &str| report[k].to_string();
    println!("order {}  edges {}  connected {}", field("order"), field("edges"), field("connected"));
    println!("girth {}  kappa {}", field("girth"), field("kappa"));
    println!("matching number {}  factor-critical {}", field("matching_number"), field("factor_critical"));
    for p in ["binding", "toughness"] {
        let v = &report[p];
        match v.get("value") {
            Some(value) => println!("{p} {}  witness {}", show_rational(value), v["witness"]),
            None => println!("{p} unavailable: {}", v["unavailable"]),
        }
    }
    println!("D {}  A {}  C {}", ge.d, ge.a, ge.c);
}

fn show_rational(v: &Value) -> String {
    serde_json::from_value::<Rational>(v.clone()).map_or_else(|_| v.to_string(), |r| r.to_string())
}

fn run(cli: Cli) -> matchext::Result<u8> {
    let mut guards = Guards::default();
    if let Some(c) = cli.max_configurations {
        guards.max_configurations = c;
    }
    if let Some(o) = cli.max_parameter_order {
        guards.max_parameter_order = o;
    }
    match cli.command {
        Command::Analyze { input, json } => {
            analyze(&load(&input)?, &guards, json);
            Ok(0)
        }
        Command::Extend { input, k, nfc, nk, emn, strict_disjoint, json } => {
            let g = load(&input)?;
            let mode = if strict_disjoint { EmnMode::VertexDisjoint } else { EmnMode::EdgeDisjoint };
            let (label, verdict) = match (k, nfc, nk, emn) {
                (Some(k), ..) => (format!("{k}-extendable"), is_k_extendable_with(&g, k, &guards)?),
                (_, Some(n), ..) => (format!("{n}-factor-critical"), is_n_factor_critical_with(&g, n, &guards)?),
                (_, _, Some(v), _) => (
                    format!("({},{})-extendable", v[0], v[1]),
                    is_nk_extendable_with(&g, v[0], v[1], &guards)?,
                ),
                (_, _, _, Some(v)) => (
                    format!("E({},{})-extendable", v[0], v[1]),
                    is_emn_extendable_with(&g, v[0], v[1], mode, &guards)?,
                ),
                _ => return Err(Error::invalid("choose one of --k, --nfc, --nk, --emn")),
            };
            if json {
                print_json(&json!({ "property": label, "verdict": verdict }));
            } else {
                println!("{label}: {}  ({} configurations)", verdict.holds, verdict.checked_count);
                if let Some(c) = &verdict.certificate {
                    println!("certificate {}", serde_json::to_string(c).expect("serializable"));
                }
            }
            Ok(0)
        }
        Command::Param { input, which, json } => {
            let g = load(&input)?;
            let value = match which {
                Parameter::Binding => {
                    let w = binding_number_with(&g, &guards)?;
                    json!({ "parameter": "binding", "value": w.value, "witness": w.witness })
                }
                Parameter::Toughness => {
                    let w = toughness_with(&g, &guards)?;
                    json!({ "parameter": "toughness", "value": w.value, "witness": w.witness })
                }
                Parameter::Kappa => json!({ "parameter": "kappa", "value": g.vertex_connectivity() }),
            };
            if json {
                print_json(&value);
            } else {
                print!("{}", show_rational(&value["value"]));
                match value.get("witness") {
                    Some(w) if !w.is_null() => println!("  witness {w}"),
                    _ => println!(),
                }
            }
            Ok(0)
        }
        Command::Thm { input, id, eps, k, n, m, girth, strict_disjoint } => {
            let g = load(&input)?;
            let params = TheoremParams {
                k,
                n,
                m,
                girth,
                mode: if strict_disjoint { EmnMode::VertexDisjoint } else { EmnMode::EdgeDisjoint },
            };
            let report = evaluate(id, &g, params, eps, &guards)?;
            print_json(&report);
            Ok(if report.is_violation() { EXIT_VIOLATION } else { 0 })
        }
        Command::Bounds { k, girth, eps } => {
            let g0 = g0_of_girth(girth)?;
            print_json(&claim_bounds(k, g0, eps)?);
            Ok(0)
        }
        Command::Construct { which: Construction::Sharpness { n, t, r, out } } => {
            let line = to_graph6(&sharpness_construction(n, t, r)?) + "\n";
            match out {
                Some(path) => fs::write(path, line)?,
                None => print!("{line}"),
            }
            Ok(0)
        }
        Command::Ensemble { config, out } => {
            let config = EnsembleConfig::from_json(&read_text(&config)?)?;
            let report = run_ensemble(&config)?;
            let text = report.to_json() + "\n";
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            let s = &report.summary;
            eprintln!(
                "{} graphs, {} violations, {} errors, {} guard skips in {:.2?}",
                s.graphs,
                s.violations.len(),
                s.errors.len(),
                s.totals.skipped_guard,
                report.elapsed
            );
            Ok(if !s.violations.is_empty() {
                EXIT_VIOLATION
            } else if !s.errors.is_empty() {
                1
            } else {
                0
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit { .. } => EXIT_GUARD,
                _ => EXIT_INPUT,
            })
        }
    }
}
