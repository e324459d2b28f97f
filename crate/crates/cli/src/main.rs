use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use indhom_cli::report::VerifyReport;
use indhom_cli::{cmd_homology, cmd_pages, cmd_search, cmd_verify, load_graph, render, Format};
use indhom_core::lab::SearchSpace;

/// Exact integer homology of r-independence complexes, their marking
/// bicomplex, and the associated spectral sequence.
#[derive(Parser)]
#[command(name = "indhom", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Independence order r (components of marked sets have at most r
    /// vertices).
    #[arg(long = "r", default_value_t = 1)]
    r_ind: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Skip differential-identity verification while building complexes.
    #[arg(long = "no-build-checks", default_value_t = false)]
    no_build_checks: bool,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced integer homology of Ind_r(G), computed directly from the
    /// independence chain complex.
    Homology {
        /// Graph file, or a family spec such as `family:cycle:6`.
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run the spectral sequence to collapse and print every page.
    Pages {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run all structural verifications; exit 0 only if everything passes.
    Verify {
        graph: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Sweep a graph family (or seeded random graphs) for violations of the
    /// column-vanishing property.
    Search {
        #[command(flatten)]
        common: CommonOpts,
        /// Candidate family: paths, cycles, disjoint-k1-cycles, ladders,
        /// cubic.
        #[arg(long, conflicts_with = "random")]
        family: Option<String>,
        /// Largest member for path/cycle/union families.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Largest rung count for the ladder family.
        #[arg(long, default_value_t = 6)]
        max_rungs: usize,
        /// Sweep seeded random graphs instead of a family.
        #[arg(long)]
        random: bool,
        /// Vertex count for random graphs.
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Edge probability for random graphs.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Base seed for random graphs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random graphs to examine.
        #[arg(long, default_value_t = 50)]
        budget: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, indhom_core::Error> {
    match cli.command {
        Command::Homology { graph, common } => with_pool(&common, |common| {
            let g = load_graph(&graph)?;
            let report = cmd_homology(&g, common.r_ind);
            match common.format.into() {
                Format::Text => print!("{}", render::homology_text(&report)),
                Format::Json => println!("{}", to_json(&report)),
                Format::Csv => print!("{}", render::homology_csv(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }),
        Command::Pages { graph, common } => with_pool(&common, |common| {
            let g = load_graph(&graph)?;
            let report = cmd_pages(&g, common.r_ind, !common.no_build_checks)?;
            match common.format.into() {
                Format::Text => print!("{}", render::pages_text(&report)),
                Format::Json => println!("{}", to_json(&report)),
                Format::Csv => print!("{}", render::pages_csv(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }),
        Command::Verify { graph, common } => with_pool(&common, |common| {
            let g = load_graph(&graph)?;
            let report = cmd_verify(&g, common.r_ind)?;
            match common.format.into() {
                Format::Text => print!("{}", render::verify_text(&report)),
                Format::Json => println!("{}", to_json(&report)),
                Format::Csv => print!("{}", render::verify_csv(&report)),
            }
            Ok(exit_for(&report))
        }),
        Command::Search {
            common,
            family,
            max_n,
            max_rungs,
            random,
            n,
            p,
            seed,
            budget,
        } => with_pool(&common, |common| {
            let space = if random {
                SearchSpace::Random {
                    n,
                    p,
                    seed,
                    count: budget,
                }
            } else {
                match family.as_deref() {
                    Some("paths") => SearchSpace::Paths { max_n },
                    Some("cycles") => SearchSpace::Cycles { max_n },
                    Some("disjoint-k1-cycles") => SearchSpace::DisjointK1Cycles { max_n },
                    Some("ladders") => SearchSpace::Ladders { max_rungs },
                    Some("cubic") => SearchSpace::Cubic,
                    Some(other) => {
                        return Err(indhom_core::Error::InvalidParameter(format!(
                            "unknown search family '{other}'"
                        )))
                    }
                    None => {
                        return Err(indhom_core::Error::InvalidParameter(
                            "search needs --family <name> or --random".into(),
                        ))
                    }
                }
            };
            let report = cmd_search(&space, common.r_ind)?;
            match common.format.into() {
                Format::Text => print!("{}", render::search_text(&report)),
                Format::Json => println!("{}", to_json(&report)),
                Format::Csv => print!("{}", render::search_csv(&report)),
            }
            Ok(if report.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }),
    }
}

fn with_pool<F>(common: &CommonOpts, f: F) -> Result<ExitCode, indhom_core::Error>
where
    F: FnOnce(&CommonOpts) -> Result<ExitCode, indhom_core::Error> + Send,
{
    match common.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| indhom_core::Error::InvalidParameter(e.to_string()))?;
            pool.install(|| f(common))
        }
        None => f(common),
    }
}

fn exit_for(report: &VerifyReport) -> ExitCode {
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}
