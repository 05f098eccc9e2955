use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gkm_modular::cohomology::{self, Action, GradedSolutionSpace};
use gkm_modular::coloring::{csf_q, llt};
use gkm_modular::gkm::{build_blowup, build_graph, Side};
use gkm_modular::hessenberg::{find_modular_triples, HessenbergFunction, ModularTriple, TripleParams};
use gkm_modular::symfun::{partitions, q_poly_to_string, Basis, GradedSymmetricFunction, DEGREE_CAP};
use gkm_modular::verify::{run_check, Format, RunConfig, Scope, Theorem};

#[derive(Parser)]
#[command(name = "gkm-modular", version, about = "Hessenberg GKM graphs, their cohomology, and modular laws")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Refuse inputs with larger n (capped at 6 for graphs, 8 for colorings).
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    /// Extra polynomial degrees computed past the expected top degree.
    #[arg(long, global = true, default_value_t = 1)]
    margin: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for cached solution spaces.
    #[arg(long, global = true, env = "GKM_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    X,
    Y,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::X => Side::X,
            SideArg::Y => Side::Y,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    E,
    H,
    P,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Modular triples with the given middle term.
    Triples { h: String },
    /// Chromatic quasisymmetric function.
    Csf {
        h: String,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
    },
    /// Unicellular LLT polynomial.
    Llt {
        h: String,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
    },
    /// Poincaré polynomial of the graph cohomology.
    Betti {
        h: String,
        #[arg(long, value_enum, default_value_t = SideArg::X)]
        side: SideArg,
    },
    /// Graded character (dot on X, dagger on Y) and its Frobenius series.
    Character {
        h: String,
        #[arg(long, value_enum, default_value_t = SideArg::X)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        basis: BasisArg,
    },
    /// Run checks over one function, one triple or all functions of size n.
    Check {
        #[arg(long)]
        thm: String,
        /// Hessenberg function, e.g. 2,3,3; with --d/--d0 or --d-prime picks a triple.
        h: Option<String>,
        #[arg(long, conflicts_with = "h")]
        sweep: Option<usize>,
        #[arg(long, requires = "d0")]
        d: Option<usize>,
        #[arg(long, requires = "d")]
        d0: Option<usize>,
        #[arg(long, conflicts_with = "d")]
        d_prime: Option<usize>,
        /// Also write the report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// The labeled graph, or the signed blow-up of the triple at (d, d0).
    Graph {
        h: String,
        #[arg(long, value_enum, default_value_t = SideArg::X)]
        side: SideArg,
        #[arg(long, requires = "d0")]
        d: Option<usize>,
        #[arg(long, requires = "d")]
        d0: Option<usize>,
    },
}

/// Exit 2 for bad input, 1 for a failed check or computation.
enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<(Value, String, bool), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn compute(e: impl std::fmt::Display) -> Failure {
    Failure::Check(e.to_string())
}

fn parse_h(s: &str, cap: usize) -> Result<HessenbergFunction, Failure> {
    let h: HessenbergFunction = s.parse().map_err(usage)?;
    if h.n() > cap {
        return Err(usage(format!("n = {} exceeds the cap {cap}", h.n())));
    }
    Ok(h)
}

fn select_triple(h: &HessenbergFunction, d: Option<usize>, d0: Option<usize>, d_prime: Option<usize>) -> Result<Option<ModularTriple>, Failure> {
    let t = match (d, d0, d_prime) {
        (Some(d), Some(d0), _) => ModularTriple::kind_c(h, d, d0).map_err(usage)?,
        (_, _, Some(dp)) => ModularTriple::kind_r(h, dp).map_err(usage)?,
        _ => return Ok(None),
    };
    t.map(Some).ok_or_else(|| usage(format!("no modular triple with middle term {h} at those parameters")))
}

fn triple_json(t: &ModularTriple) -> Value {
    let params = match t.params {
        TripleParams::C { d, d0 } => json!({ "d": d, "d0": d0 }),
        TripleParams::R { d_prime } => json!({ "d_prime": d_prime }),
    };
    json!({ "kind": t.kind().to_string(), "params": params, "minus": t.minus.to_string(), "h": t.h.to_string(), "plus": t.plus.to_string() })
}

fn sym_output(f: GradedSymmetricFunction, basis: Basis) -> Outcome {
    let f = f.to_basis(basis).map_err(compute)?;
    Ok((f.to_json(), format!("{f}\n"), true))
}

fn action_for(side: Side) -> Action {
    match side {
        Side::X => Action::Dot,
        Side::Y => Action::Dagger,
    }
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    let config = RunConfig {
        n_cap: g.degree_cap,
        degree_margin: g.margin,
        jobs: g.jobs,
        cache_dir: g.cache_dir.clone(),
        format: match g.format {
            OutFormat::Json => Format::Json,
            OutFormat::Text => Format::Text,
        },
    };
    let cache = config.cache().map_err(usage)?;
    match cli.command {
        Command::Triples { h } => {
            let h = parse_h(&h, config.coloring_cap())?;
            let ts = find_modular_triples(&h).map_err(usage)?;
            let text: String = ts.iter().map(|t| format!("{} ({}) < ({}) < ({})\n", t.kind(), t.minus, t.h, t.plus)).collect();
            Ok((json!(ts.iter().map(triple_json).collect::<Vec<_>>()), text, true))
        }
        Command::Csf { h, basis } => sym_output(csf_q(&parse_h(&h, config.coloring_cap())?).map_err(compute)?, basis.into()),
        Command::Llt { h, basis } => sym_output(llt(&parse_h(&h, config.coloring_cap())?).map_err(compute)?, basis.into()),
        Command::Betti { h, side } => {
            let h = parse_h(&h, config.graph_cap())?;
            let graph = build_graph(&h, side.into()).map_err(usage)?;
            let space = GradedSolutionSpace::compute(&graph, h.dimension(), config.degree_margin, cache.as_ref()).map_err(compute)?;
            let b = cohomology::ordinary_dims_checked(&space).map_err(compute)?;
            let text = format!("{}\n", b.iter().enumerate().map(|(k, d)| format!("{d} q^{k}")).collect::<Vec<_>>().join(" + "));
            Ok((json!({ "h": h.to_string(), "side": Side::from(side).to_string(), "numerator": b }), text, true))
        }
        Command::Character { h, side, basis } => {
            let h = parse_h(&h, config.graph_cap())?;
            let side: Side = side.into();
            let graph = build_graph(&h, side).map_err(usage)?;
            let space = GradedSolutionSpace::compute(&graph, h.dimension(), config.degree_margin, cache.as_ref()).map_err(compute)?;
            let chi = cohomology::graded_character_checked(&space, action_for(side)).map_err(compute)?;
            let frob = chi.frobenius().map_err(compute)?.to_basis(basis.into()).map_err(compute)?;
            let mut text = String::new();
            for lambda in partitions(h.n()) {
                let vals: Vec<_> = (0..=chi.max_degree()).map(|k| chi.value(&lambda, k)).collect();
                text.push_str(&format!("{lambda}: {}\n", q_poly_to_string(&vals)));
            }
            text.push_str(&format!("frobenius: {frob}\n"));
            Ok((json!({ "h": h.to_string(), "side": side.to_string(), "action": action_for(side).to_string(), "character": chi.to_json(), "frobenius": frob.to_json() }), text, true))
        }
        Command::Check { thm, h, sweep, d, d0, d_prime, output } => {
            let thm: Theorem = thm.parse().map_err(usage)?;
            let scope = match (h, sweep) {
                (Some(h), None) => {
                    let hf = parse_h(&h, DEGREE_CAP)?;
                    match select_triple(&hf, d, d0, d_prime)? {
                        Some(t) => Scope::Triple(t),
                        None => Scope::Single(hf),
                    }
                }
                (None, Some(n)) => Scope::Sweep(n),
                _ => return Err(usage("give a Hessenberg function or --sweep n")),
            };
            let report = match run_check(thm, &scope, &config) {
                Ok(r) => r,
                Err(e @ (gkm_modular::verify::VerifyError::Parse(_) | gkm_modular::verify::VerifyError::CapExceeded { .. })) => return Err(usage(e)),
                Err(e) => return Err(compute(e)),
            };
            let value = report.to_json();
            let text = report.to_text();
            if let Some(path) = output {
                let body = match config.format {
                    Format::Json => serde_json::to_string_pretty(&value).unwrap() + "\n",
                    Format::Text => text.clone(),
                };
                std::fs::write(&path, body).map_err(usage)?;
            }
            Ok((value, text, report.passed))
        }
        Command::Graph { h, side, d, d0 } => {
            let h = parse_h(&h, config.graph_cap())?;
            let side: Side = side.into();
            let value = match select_triple(&h, d, d0, None)? {
                Some(t) => build_blowup(&t, side).map_err(usage)?.to_json(),
                None => build_graph(&h, side).map_err(usage)?.to_json(),
            };
            let text = serde_json::to_string(&value).unwrap() + "\n";
            Ok((value, text, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.global.format;
    match run(cli) {
        Ok((value, text, passed)) => {
            match format {
                OutFormat::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
                OutFormat::Text => print!("{text}"),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Check(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
