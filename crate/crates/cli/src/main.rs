//! `tdc`: exact total dominator chromatic numbers from the command line.

mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tdc_core::baseline::{chromatic_number, total_domination_number};
use tdc_core::coloring::{is_proper, is_td_coloring, td_witness_table};
use tdc_core::explorer::{conjecture_scan, FindingVerdict, ScanPopulation};
use tdc_core::graph6::write_graph6;
use tdc_core::oracle::tdc_brute_force;
use tdc_core::ops::{cartesian_product, neighbourhood_corona, r_gluing, r_gluing_default};
use tdc_core::perturbation::{perturb_with, DegenerateConvention, PerturbationConfig, PerturbationKind};
use tdc_core::solver::{tdc_number_with, SolverConfig, DEFAULT_MAX_N};
use tdc_core::theorems::{run_suite, ClaimFamily, SuiteConfig};
use tdc_core::{Error, Result};

use input::{parse_list, read_coloring, read_graph};

const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_VIOLATED: u8 = 4;
const EXIT_UNDEFINED: u8 = 5;

const GRAPH_HELP: &str = "Graph: a family spec (path:7, cycle:9, complete_bipartite:3:3, friendship:2, \
book:3, star:4, complete:5, complete_minus_edge:5, empty:3), g6:STRING, file:PATH (graph6 or an \
\"n m\" edge list), - for stdin, or a bare graph6 string";

#[derive(Parser)]
#[command(name = "tdc", version, about = "Exact total dominator chromatic numbers of small graphs")]
#[command(after_help = GRAPH_HELP)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest graph order accepted: the exact solver's cap (default 32), or
    /// the scan order for `explore` (default 6).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Time budget per exact solve, in milliseconds.
    #[arg(long, global = true)]
    time_budget: Option<u64>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// How a removal that leaves the TDC-number undefined is counted.
    #[arg(long, global = true, default_value = "undefined_counts_as_changed")]
    convention: DegenerateConvention,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

impl Global {
    fn solver(&self) -> SolverConfig {
        SolverConfig {
            max_n: self.max_n.unwrap_or(DEFAULT_MAX_N),
            time_budget: self.time_budget.map(Duration::from_millis),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, χ, γ_t and the TDC-number with a witness coloring.
    Invariants {
        graph: String,
        /// Also run the set-partition oracle (n <= 8).
        #[arg(long)]
        brute_force: bool,
    },
    /// TDC-stability or TDC-bondage with a witness removal set.
    Perturb {
        graph: String,
        #[arg(long)]
        kind: PerturbationKind,
        /// Largest order accepted for the removal sweep.
        #[arg(long, default_value_t = PerturbationConfig::default().max_n)]
        perturb_max_n: usize,
        /// Largest size accepted for the bondage sweep.
        #[arg(long, default_value_t = PerturbationConfig::default().max_edges)]
        perturb_max_edges: usize,
    },
    /// Build a graph and print it as graph6.
    Build {
        #[command(subcommand)]
        op: BuildOp,
    },
    /// Check claims against exact computation and print a report.
    Verify(VerifyArgs),
    /// Stability of every graph with a vertex of degree one or two.
    Explore {
        /// Scan every graph without isolated vertices, not only connected ones.
        #[arg(long)]
        all_graphs: bool,
        /// Write the findings here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check whether a coloring is a total dominator coloring.
    CheckColoring {
        graph: String,
        /// Inline list such as 0,1,0,1 or a file in the `k` / `v c` format.
        coloring: String,
    },
}

#[derive(Subcommand)]
enum BuildOp {
    /// Neighbourhood corona G1 ⋆ G2.
    Ncorona { g1: String, g2: String },
    /// Glue G1 and G2 along an r-clique.
    Glue {
        g1: String,
        g2: String,
        /// Clique size; the lexicographically first cliques are used unless
        /// given explicitly.
        #[arg(long)]
        r: Option<usize>,
        /// Vertices of G1, comma separated.
        #[arg(long)]
        clique1: Option<String>,
        /// Vertices of G2 in the order they are identified with clique1.
        #[arg(long)]
        clique2: Option<String>,
    },
    Complement { g: String },
    Cartesian { g1: String, g2: String },
    /// Disjoint union.
    Union { g1: String, g2: String },
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated claim families, `all` or `none`.
    #[arg(long, default_value = "all")]
    claims: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Longest path checked against the closed form (default 12).
    #[arg(long)]
    path_max: Option<usize>,
    /// Longest cycle checked against the closed form (default 12).
    #[arg(long)]
    cycle_max: Option<usize>,
    /// Largest order in the oracle and Henning sweeps.
    #[arg(long)]
    sweep_max_n: Option<usize>,
    /// Random operand pairs for the corona bounds (default 30).
    #[arg(long)]
    random_pairs: Option<usize>,
    /// Largest operand order in the gluing sweep (default 5).
    #[arg(long)]
    gluing_max_n: Option<usize>,
    /// Largest order in the complement sweep (default 7).
    #[arg(long)]
    nordhaus_gaddum_max_n: Option<usize>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::BudgetExhausted(_) => EXIT_CAP,
        Error::Undefined(_) => EXIT_UNDEFINED,
        _ => EXIT_PARSE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Invariants { graph, brute_force } => invariants(g, graph, *brute_force),
        Command::Perturb {
            graph,
            kind,
            perturb_max_n,
            perturb_max_edges,
        } => {
            let cfg = PerturbationConfig {
                max_n: *perturb_max_n,
                max_edges: *perturb_max_edges,
                solver: g.solver(),
            };
            let r = perturb_with(&read_graph(graph)?, *kind, g.convention, &cfg)?;
            emit(g.format, &serde_json::to_value(&r).expect("result serializes"), None)?;
            Ok(0)
        }
        Command::Build { op } => {
            println!("{}", write_graph6(&build(op)?));
            Ok(0)
        }
        Command::Verify(args) => verify(g, args),
        Command::Explore { all_graphs, output } => {
            explore(g, g.max_n.unwrap_or(6), *all_graphs, output.as_ref())
        }
        Command::CheckColoring { graph, coloring } => check_coloring(g, graph, coloring),
    }
}

/// Renders an object as one JSON line or as `key: value` lines.
fn render(format: Format, v: &Value) -> String {
    match format {
        Format::Json => format!("{v}\n"),
        Format::Table => {
            let mut out = String::new();
            if let Value::Object(map) = v {
                let width = map.keys().map(String::len).max().unwrap_or(0);
                for (k, val) in map {
                    writeln!(out, "{k:<width$}  {val}").unwrap();
                }
            } else {
                writeln!(out, "{v}").unwrap();
            }
            out
        }
    }
}

fn emit(format: Format, v: &Value, output: Option<&PathBuf>) -> Result<()> {
    write_output(&render(format, v), output)
}

fn write_output(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn value_or_undefined(r: Result<usize>) -> Result<Value> {
    match r {
        Ok(v) => Ok(json!(v)),
        Err(Error::Undefined(_)) => Ok(json!("undefined")),
        Err(e) => Err(e),
    }
}

fn invariants(g: &Global, graph: &str, brute_force: bool) -> Result<u8> {
    let graph = read_graph(graph)?;
    let chi = chromatic_number(&graph)?.value;
    let gamma_t = value_or_undefined(total_domination_number(&graph).map(|t| t.value))?;
    let mut out = json!({
        "n": graph.order(),
        "m": graph.size(),
        "chi": chi,
        "gamma_t": gamma_t,
    });
    match tdc_number_with(&graph, &g.solver()) {
        Ok(r) => {
            out["tdc"] = json!(r.value);
            out["witness"] = json!(r.witness);
            out["stats"] = json!(r.stats);
        }
        Err(Error::Undefined(_)) => {
            out["tdc"] = json!("undefined");
            out["witness"] = json!("undefined");
        }
        Err(e) => return Err(e),
    }
    if brute_force {
        out["brute_force"] = value_or_undefined(tdc_brute_force(&graph))?;
    }
    emit(g.format, &out, None)?;
    Ok(0)
}

fn build(op: &BuildOp) -> Result<tdc_core::Graph> {
    match op {
        BuildOp::Ncorona { g1, g2 } => neighbourhood_corona(&read_graph(g1)?, &read_graph(g2)?),
        BuildOp::Glue {
            g1,
            g2,
            r,
            clique1,
            clique2,
        } => {
            let (a, b) = (read_graph(g1)?, read_graph(g2)?);
            match (clique1, clique2) {
                (Some(c1), Some(c2)) => {
                    let (c1, c2) = (parse_list(c1)?, parse_list(c2)?);
                    if r.is_some_and(|r| r != c1.len()) {
                        return Err(Error::Parse("--r disagrees with the clique size".into()));
                    }
                    r_gluing(&a, &b, &c1, &c2)
                }
                (None, None) => {
                    let r = r.ok_or_else(|| Error::Parse("glue needs --r or both cliques".into()))?;
                    r_gluing_default(&a, &b, r)
                }
                _ => Err(Error::Parse("give both --clique1 and --clique2".into())),
            }
        }
        BuildOp::Complement { g } => Ok(read_graph(g)?.complement()),
        BuildOp::Cartesian { g1, g2 } => cartesian_product(&read_graph(g1)?, &read_graph(g2)?),
        BuildOp::Union { g1, g2 } => Ok(read_graph(g1)?.disjoint_union(&read_graph(g2)?)),
    }
}

fn verify(g: &Global, args: &VerifyArgs) -> Result<u8> {
    let mut cfg = SuiteConfig {
        claims: ClaimFamily::parse_list(&args.claims)?,
        seed: g.seed,
        convention: g.convention,
        solver_max_n: g.max_n.unwrap_or(DEFAULT_MAX_N),
        time_budget_ms: g.time_budget,
        ..SuiteConfig::default()
    };
    let overrides = [
        (args.path_max, &mut cfg.path_max),
        (args.cycle_max, &mut cfg.cycle_max),
        (args.sweep_max_n, &mut cfg.sweep_max_n),
        (args.random_pairs, &mut cfg.random_pairs),
        (args.gluing_max_n, &mut cfg.gluing_max_n),
        (args.nordhaus_gaddum_max_n, &mut cfg.nordhaus_gaddum_max_n),
    ];
    for (arg, field) in overrides {
        if let Some(v) = arg {
            *field = v;
        }
    }
    let report = run_suite(&cfg);
    let text = match g.format {
        Format::Json => report.to_json_lines(),
        Format::Table => report.to_table(),
    };
    write_output(&text, args.output.as_ref())?;
    Ok(if report.unexcused_violations() > 0 { EXIT_VIOLATED } else { 0 })
}

fn explore(g: &Global, max_n: usize, all_graphs: bool, output: Option<&PathBuf>) -> Result<u8> {
    let population = if all_graphs {
        ScanPopulation::NoIsolatedVertex
    } else {
        ScanPopulation::Connected
    };
    let cfg = PerturbationConfig {
        solver: SolverConfig {
            max_n: DEFAULT_MAX_N,
            ..g.solver()
        },
        ..PerturbationConfig::default()
    };
    let findings = conjecture_scan(max_n, g.convention, population, &cfg)?;
    let mut text = String::new();
    match g.format {
        Format::Json => {
            for f in &findings {
                text.push_str(&serde_json::to_string(f).expect("finding serializes"));
                text.push('\n');
            }
        }
        Format::Table => {
            writeln!(text, "{:<12} {:>2} {:>7} {:>4} {:>9}  verdict", "graph6", "n", "min_deg", "tdc", "stability").unwrap();
            for f in &findings {
                let st = f.stability.map_or("none".to_string(), |s| s.to_string());
                let verdict = serde_json::to_value(f.verdict).expect("verdict serializes");
                writeln!(
                    text,
                    "{:<12} {:>2} {:>7} {:>4} {:>9}  {}",
                    f.graph6,
                    f.n,
                    f.min_degree,
                    f.tdc,
                    st,
                    verdict.as_str().unwrap_or_default()
                )
                .unwrap();
            }
            let bad = findings
                .iter()
                .filter(|f| f.verdict == FindingVerdict::Counterexample)
                .count();
            writeln!(text, "\n{} graphs scanned, {bad} counterexamples", findings.len()).unwrap();
        }
    }
    write_output(&text, output)?;
    let found = findings.iter().any(|f| f.verdict == FindingVerdict::Counterexample);
    Ok(if found { EXIT_VIOLATED } else { 0 })
}

fn check_coloring(g: &Global, graph: &str, coloring: &str) -> Result<u8> {
    let graph = read_graph(graph)?;
    let coloring = read_coloring(coloring)?;
    let td = is_td_coloring(&graph, &coloring)?;
    let proper = is_proper(&graph, &coloring)?;
    let table = td_witness_table(&graph, &coloring)?;
    let out = json!({
        "classes": coloring.num_classes(),
        "proper": proper,
        "td_coloring": td,
        "dominated_class": table,
    });
    emit(g.format, &out, None)?;
    Ok(if td { 0 } else { EXIT_VIOLATED })
}
