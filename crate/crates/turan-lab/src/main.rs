use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use turan_lab::constructions::{self, PartitionSpec};
use turan_lab::density::{self, Family};
use turan_lab::exact::{self, SearchConfig};
use turan_lab::hypergraph::UniformHypergraph;
use turan_lab::io::{self, ReportFormat};
use turan_lab::property;
use turan_lab::verify::{self, ClaimStatus, RunParams};
use turan_lab::{parse_ratio, Error, Rat, Result};

#[derive(Parser)]
#[command(
    name = "turan-lab",
    version,
    about = "Exact combinatorics for local Turán-type problems",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error."
)]
struct Cli {
    /// Cap worker threads (overrides TURAN_LAB_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    K,
    L,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::K => Family::K,
            FamilyArg::L => Family::L,
        }
    }
}

#[derive(Args)]
struct FamilyParams {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    a: usize,
    #[arg(long)]
    k: usize,
    /// Explicit part sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a K/L family member or a named catalog hypergraph.
    Construct {
        #[command(flatten)]
        params: FamilyParams,
        /// Optimize part sizes instead of balancing them.
        #[arg(long)]
        optimize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide property (q,p) for a hypergraph file.
    Property {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
    },
    /// Independence number with witness.
    Alpha {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
    },
    /// Clique number with witness.
    Omega {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
    },
    /// Blow up a pattern hypergraph by per-vertex multiplicities.
    Blowup {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long, value_delimiter = ',')]
        mu: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Density report for a K/L family member (optimize, sweep, or given sizes).
    Density {
        #[command(flatten)]
        params: FamilyParams,
        /// Exhaustive sweep over all part-size compositions (small n).
        #[arg(long, conflicts_with = "sizes")]
        sweep: bool,
        /// Seed-and-hill-climb part optimization.
        #[arg(long, conflicts_with_all = ["sweep", "sizes"])]
        optimize: bool,
    },
    /// Exact searches: minimum edges for property (q,p), Turán numbers,
    /// or DIMACS CNF export.
    Exact {
        #[command(subcommand)]
        mode: ExactMode,
    },
    /// Run the hole-removal reduction on a hypergraph file.
    Reduce {
        #[arg(long, value_name = "FILE")]
        r#in: PathBuf,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
        /// Rational like 3/2.
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        ell: usize,
        /// Confirm the shrunken property exhaustively at every step.
        #[arg(long)]
        verify: bool,
    },
    /// Seeded random harness for the multigraph edge bound.
    Multigraph {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Run claim checks from the verification table.
    Verify {
        #[arg(long, conflicts_with = "all")]
        claim: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Run the heavy claims at full acceptance scale.
        #[arg(long)]
        desk_scale: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// List the named catalog or print one entry.
    Catalog {
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ExactMode {
    /// Minimum edge count with property (q,p).
    T {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 60)]
        budget_secs: u64,
        #[arg(long)]
        no_symmetry: bool,
    },
    /// Maximum edges avoiding the named forbidden catalog entries.
    Ex {
        #[arg(long)]
        n: usize,
        /// Catalog names, comma separated (e.g. F5 or "K(4,3)").
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<String>,
        #[arg(long, default_value_t = 10_000_000)]
        budget_nodes: u64,
        #[arg(long, default_value_t = 60)]
        budget_secs: u64,
    },
    /// Write the DIMACS encoding of "property (q,p) with at most m edges".
    Cnf {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

fn emit_hypergraph(h: &UniformHypergraph, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => io::write_hypergraph(h, path),
        None => {
            let json = serde_json::to_string_pretty(&io::HypergraphJson::from(h))
                .map_err(|e| Error::Parse(e.to_string()))?;
            println!("{json}");
            Ok(())
        }
    }
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let json = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    println!("{json}");
    Ok(())
}

fn family_spec(params: &FamilyParams, optimize: bool) -> Result<PartitionSpec> {
    match &params.sizes {
        Some(sizes) => PartitionSpec::new(params.a, params.k, sizes.clone()),
        None if optimize => {
            let (spec, _) = density::optimize_parts(
                params.family.into(),
                params.n,
                params.r,
                params.a,
                params.k,
                200_000,
            )?;
            Ok(spec)
        }
        None => PartitionSpec::balanced(params.n, params.a, params.k),
    }
}

fn build_family(params: &FamilyParams, spec: &PartitionSpec) -> Result<UniformHypergraph> {
    match params.family {
        FamilyArg::K => constructions::build_k(params.n, params.r, spec),
        FamilyArg::L => constructions::build_l(params.n, params.r, spec),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Construct { params, optimize, out } => {
            let spec = family_spec(&params, optimize)?;
            let h = build_family(&params, &spec)?;
            emit_hypergraph(&h, out.as_ref())?;
        }
        Cmd::Property { r#in, q, p } => {
            let h = io::read_hypergraph(&r#in)?;
            emit_json(&property::has_property(&h, q, p)?)?;
        }
        Cmd::Alpha { r#in } => {
            let h = io::read_hypergraph(&r#in)?;
            let (alpha, witness) = h.independence_number();
            emit_json(&serde_json::json!({ "alpha": alpha, "witness": witness.members() }))?;
        }
        Cmd::Omega { r#in } => {
            let h = io::read_hypergraph(&r#in)?;
            let (omega, witness) = h.clique_number();
            emit_json(&serde_json::json!({ "omega": omega, "witness": witness.members() }))?;
        }
        Cmd::Blowup { r#in, mu, out } => {
            let h = io::read_hypergraph(&r#in)?;
            let b = constructions::blowup(&h, &mu)?;
            emit_hypergraph(&b, out.as_ref())?;
        }
        Cmd::Density { params, sweep, optimize } => {
            let family: Family = params.family.into();
            let report = if sweep {
                let (spec, report) =
                    density::sweep_parts(family, params.n, params.r, params.a, params.k)?;
                emit_json(&serde_json::json!({ "sizes": spec.sizes, "report": report }))?;
                report
            } else if optimize {
                let (spec, report) = density::optimize_parts(
                    family, params.n, params.r, params.a, params.k, 200_000,
                )?;
                emit_json(&serde_json::json!({ "sizes": spec.sizes, "report": report }))?;
                report
            } else {
                let spec = family_spec(&params, false)?;
                let edges = match family {
                    Family::K => density::k_edge_count(params.n, params.r, &spec)?,
                    Family::L => density::l_edge_count(params.n, params.r, &spec)?,
                };
                let target =
                    density::limit_target(family, params.r, params.a, params.k);
                let report =
                    density::DensityReport::new(params.n, params.r, edges, target);
                emit_json(&serde_json::json!({ "sizes": spec.sizes, "report": report }))?;
                report
            };
            let _ = report;
        }
        Cmd::Exact { mode } => match mode {
            ExactMode::T { n, r, q, p, budget_nodes, budget_secs, no_symmetry } => {
                let cfg = SearchConfig {
                    node_budget: budget_nodes,
                    time_budget_secs: budget_secs,
                    symmetry_breaking: !no_symmetry,
                };
                let res = exact::exact_t(n, r, q, p, &cfg)?;
                emit_json(&serde_json::json!({
                    "value": res.value,
                    "proved_optimal": res.proved_optimal,
                    "nodes": res.nodes,
                    "witness": io::HypergraphJson::from(&res.witness),
                }))?;
            }
            ExactMode::Ex { n, forbid, budget_nodes, budget_secs } => {
                let family: Vec<UniformHypergraph> = forbid
                    .iter()
                    .map(|name| constructions::catalog(name))
                    .collect::<Result<_>>()?;
                let cfg = SearchConfig {
                    node_budget: budget_nodes,
                    time_budget_secs: budget_secs,
                    symmetry_breaking: true,
                };
                let res = exact::exact_ex(n, &family, &cfg)?;
                emit_json(&serde_json::json!({
                    "value": res.value,
                    "proved_optimal": res.proved_optimal,
                    "nodes": res.nodes,
                    "witness": io::HypergraphJson::from(&res.witness),
                }))?;
            }
            ExactMode::Cnf { n, r, q, p, m, out } => {
                exact::export_cnf(n, r, q, p, m, &out)?;
                eprintln!("wrote {}", out.display());
            }
        },
        Cmd::Reduce { r#in, q, p, gamma, ell, verify } => {
            let h = io::read_hypergraph(&r#in)?;
            let gamma: Rat = parse_ratio(&gamma)?;
            let trace = turan_lab::reduce::run_reduction(&h, q, p, gamma, ell, verify)?;
            emit_json(&trace)?;
        }
        Cmd::Multigraph { seed, trials } => {
            let params = RunParams { seed, trials, desk_scale: true, n: None };
            let report = verify::run_claim("multigraph-random", &params)?;
            emit_json(&report)?;
            if report.status == ClaimStatus::Fail {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Verify { claim, all, n, seed, trials, desk_scale, out, format } => {
            let params = RunParams { n, seed, trials, desk_scale };
            let reports = if all {
                verify::run_all(&params)?
            } else {
                let id = claim.ok_or_else(|| {
                    Error::BadParams("pass --claim <id> or --all".into())
                })?;
                vec![verify::run_claim(&id, &params)?]
            };
            if let Some(path) = &out {
                let fmt = match format {
                    FormatArg::Json => ReportFormat::Json,
                    FormatArg::Csv => ReportFormat::Csv,
                };
                io::write_report(&reports, path, fmt)?;
            }
            match format {
                FormatArg::Json => emit_json(&reports)?,
                FormatArg::Csv => print!("{}", io::report_csv(&reports)),
            }
            if reports.iter().any(|r| r.status == ClaimStatus::Fail) {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Catalog { name, out } => match name {
            Some(name) => {
                let h = constructions::catalog(&name)?;
                emit_hypergraph(&h, out.as_ref())?;
            }
            None => {
                let listing: Vec<_> = constructions::catalog_names()
                    .into_iter()
                    .map(|name| {
                        let h = constructions::catalog(name).expect("fixed names resolve");
                        serde_json::json!({ "name": name, "n": h.n(), "edges": h.edge_count() })
                    })
                    .collect();
                emit_json(&listing)?;
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn thread_cap(cli_threads: Option<usize>) -> Option<usize> {
    cli_threads.or_else(|| {
        std::env::var("TURAN_LAB_THREADS").ok().and_then(|v| v.parse().ok())
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = thread_cap(cli.threads) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
