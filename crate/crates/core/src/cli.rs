//! Command-line front end. Every verb reads a graph (from a file or
//! `--complete <vertices>`), runs one library entry point, and prints either
//! human-readable text or, with `--json`, one line of JSON with stable field
//! names. Exit codes: 0 success, 1 failed comparison or verification,
//! 2 usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::export::{self, CasDialect};
use crate::graph::RootedMultigraph;
use crate::ideal::{monomize, power_ideal};
use crate::involution::alternating_sum;
use crate::parking::{self, ExponentVector};
use crate::rank;
use crate::series::HilbertSeries;
use crate::verify;

#[derive(Parser)]
#[command(
    name = "gparking",
    version,
    about = "Power ideals of rooted multigraphs: monomizations, parking functions, \
             Hilbert series, forest counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file (see README for the format)
    #[arg(
        value_name = "GRAPH",
        required_unless_present = "complete",
        conflicts_with = "complete"
    )]
    graph: Option<PathBuf>,

    /// Use the complete graph on this many vertices (root included) instead of a file
    #[arg(long, value_name = "VERTICES")]
    complete: Option<usize>,
}

impl GraphArgs {
    fn load(&self) -> Result<RootedMultigraph> {
        match (&self.graph, self.complete) {
            (Some(path), None) => crate::io::read_graph_file(path),
            (None, Some(vertices)) => RootedMultigraph::complete(vertices),
            _ => unreachable!("clap enforces exactly one graph source"),
        }
    }
}

#[derive(Args)]
struct KArg {
    /// Exponent shift: generators are (Σ x_i)^(D_I + k)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(0..=1))]
    k: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Count standard monomials of the monomization
    Monomial,
    /// Exact graded ranks of the power ideal
    Rank,
    /// Run both and compare
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    M2,
    Singular,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdealKind {
    Power,
    Monomial,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series and dimension of the quotient
    Hilbert {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        k: KArg,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Worker threads for the rank method
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Emit one line of JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the monomial generators of the monomization
    Monomize {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        k: KArg,
        /// Reduce to the minimal generating set
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate parking functions or test one vector
    Parking {
        #[command(subcommand)]
        action: ParkingAction,
    },
    /// Count spanning forests (undirected graphs only)
    Forests {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also print the distribution of |E| - |F| - activity(F)
        #[arg(long)]
        by_activity: bool,
        #[arg(long)]
        json: bool,
    },
    /// Alternating sum over subset chains (equals the forest count)
    Altsum {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run the full cross-check suite and report per check
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        k: KArg,
        /// Worker threads for the rank computations
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
    /// Emit the ideal as a computer-algebra-system script
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        k: KArg,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long, value_enum, default_value_t = IdealKind::Power)]
        ideal: IdealKind,
    },
}

#[derive(Subcommand)]
enum ParkingAction {
    /// List every parking vector, one per line after a `# n=.. k=.. dim=..` header
    Enumerate {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        k: KArg,
        #[arg(long)]
        json: bool,
    },
    /// Test one comma-separated vector, e.g. `test 1,0 k3.graph`
    Test {
        /// Candidate exponent vector a1,...,an
        vector: String,
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        k: KArg,
        #[arg(long)]
        json: bool,
    },
}

/// Parses and runs one invocation. `args` starts with the program name, as
/// in `std::env::args()`. Output goes to the given writers so tests can
/// capture it; the return value is the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{}", e.render());
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        // A closed stdout (e.g. piping into `head`) means the consumer is
        // done, not that anything went wrong.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Hilbert {
            graph,
            k,
            method,
            threads,
            json,
        } => {
            let g = graph.load()?;
            let monomial = match method {
                Method::Monomial | Method::Both => {
                    Some(parking::hilbert_series(&monomize(&g, k.k)?)?)
                }
                Method::Rank => None,
            };
            let by_rank = match method {
                Method::Rank | Method::Both => Some(rank::hilbert_series_threaded(
                    &power_ideal(&g, k.k)?,
                    (*threads).max(1),
                )),
                Method::Monomial => None,
            };
            let agree = match (&monomial, &by_rank) {
                (Some(a), Some(b)) => Some(a == b),
                _ => None,
            };
            let dim = match (&monomial, &by_rank) {
                (Some(m), None) => Some(m.dimension()),
                (None, Some(r)) => Some(r.dimension()),
                (Some(m), Some(r)) if m == r => Some(m.dimension()),
                _ => None,
            };
            if *json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": g.n(),
                        "k": k.k,
                        "monomial": monomial.as_ref().map(HilbertSeries::coeffs),
                        "rank": by_rank.as_ref().map(HilbertSeries::coeffs),
                        "match": agree,
                        "dim": dim,
                    })
                )?;
            } else {
                if let Some(s) = &monomial {
                    writeln!(out, "{s}")?;
                }
                if let Some(s) = &by_rank {
                    writeln!(out, "{s}")?;
                }
                if let Some(d) = dim {
                    writeln!(out, "dim = {d}")?;
                }
            }
            if agree == Some(false) {
                writeln!(err, "mismatch: monomial and rank methods disagree")?;
                return Ok(1);
            }
            Ok(0)
        }

        Command::Monomize {
            graph,
            k,
            minimal,
            json,
        } => {
            let g = graph.load()?;
            let ideal = monomize(&g, k.k)?;
            let generators = if *minimal {
                ideal.minimal_generators()
            } else {
                ideal.generators().to_vec()
            };
            if *json {
                let items: Vec<_> = generators
                    .iter()
                    .map(|m| {
                        json!({
                            "support": m.support.iter().collect::<Vec<_>>(),
                            "exponents": m.exponents.as_slice(),
                            "monomial": export::monomial_term(&m.exponents),
                        })
                    })
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": g.n(),
                        "k": k.k,
                        "minimal": minimal,
                        "count": items.len(),
                        "generators": items,
                    })
                )?;
            } else {
                for m in &generators {
                    writeln!(
                        out,
                        "{}: {}",
                        m.support,
                        export::monomial_term(&m.exponents)
                    )?;
                }
            }
            Ok(0)
        }

        Command::Parking { action } => match action {
            ParkingAction::Enumerate { graph, k, json } => {
                let g = graph.load()?;
                let vectors = parking::standard_monomials(&monomize(&g, k.k)?)?;
                if *json {
                    let rows: Vec<&[u32]> = vectors.iter().map(ExponentVector::as_slice).collect();
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "n": g.n(),
                            "k": k.k,
                            "dim": vectors.len(),
                            "vectors": rows,
                        })
                    )?;
                } else {
                    write!(out, "{}", parking::format_listing(g.n(), k.k, &vectors))?;
                }
                Ok(0)
            }
            ParkingAction::Test {
                vector,
                graph,
                k,
                json,
            } => {
                let g = graph.load()?;
                let candidate = parse_vector(vector, g.n())?;
                let parking = parking::is_g_parking(&g, &candidate, k.k);
                if *json {
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "n": g.n(),
                            "k": k.k,
                            "vector": candidate.as_slice(),
                            "parking": parking,
                        })
                    )?;
                } else {
                    writeln!(out, "{}", if parking { "parking" } else { "not parking" })?;
                }
                Ok(0)
            }
        },

        Command::Forests {
            graph,
            by_activity,
            json,
        } => {
            let g = graph.load()?;
            let forests = g.enumerate_forests()?;
            let profile = if *by_activity {
                Some(g.activity_profile(&g.edge_instances()?)?)
            } else {
                None
            };
            if *json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "forest_count": forests.len(),
                        "activity_profile": profile,
                    })
                )?;
            } else {
                writeln!(out, "{}", forests.len())?;
                if let Some(p) = profile {
                    writeln!(out, "{}", HilbertSeries::from_coeffs(p))?;
                }
            }
            Ok(0)
        }

        Command::Altsum { graph, json } => {
            let g = graph.load()?;
            let report = alternating_sum(&g);
            if *json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "value": report.value,
                        "chain_count": report.chain_count,
                        "nonzero_chains": report.nonzero_chains,
                    })
                )?;
            } else {
                writeln!(out, "{}", report.value)?;
                writeln!(
                    out,
                    "chains: {} ({} nonzero)",
                    report.chain_count, report.nonzero_chains
                )?;
            }
            Ok(0)
        }

        Command::Verify {
            graph,
            k,
            threads,
            json,
        } => {
            let g = graph.load()?;
            let checks = verify::run_checks(&g, k.k, (*threads).max(1));
            let all_passed = checks.iter().all(|c| c.passed);
            if *json {
                let items: Vec<_> = checks
                    .iter()
                    .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": g.n(),
                        "k": k.k,
                        "passed": all_passed,
                        "checks": items,
                    })
                )?;
            } else {
                for c in &checks {
                    if c.passed {
                        writeln!(out, "ok   {}", c.name)?;
                    } else {
                        writeln!(out, "FAIL {}: {}", c.name, c.detail)?;
                    }
                }
                let failed = checks.iter().filter(|c| !c.passed).count();
                if all_passed {
                    writeln!(out, "all {} checks passed", checks.len())?;
                } else {
                    writeln!(out, "{failed} of {} checks failed", checks.len())?;
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }

        Command::Export {
            graph,
            k,
            format,
            ideal,
        } => {
            let g = graph.load()?;
            let dialect = match format {
                ExportFormat::M2 => CasDialect::Macaulay2,
                ExportFormat::Singular => CasDialect::Singular,
            };
            let script = match ideal {
                IdealKind::Power => export::power_ideal_script(&power_ideal(&g, k.k)?, dialect),
                IdealKind::Monomial => export::monomial_ideal_script(&monomize(&g, k.k)?, dialect),
            };
            write!(out, "{script}")?;
            Ok(0)
        }
    }
}

fn parse_vector(text: &str, n: usize) -> Result<ExponentVector> {
    let values = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidVector {
                    text: text.to_string(),
                    message: format!("{part:?} is not a nonnegative integer"),
                })
        })
        .collect::<Result<Vec<u32>>>()?;
    if values.len() != n {
        return Err(Error::InvalidVector {
            text: text.to_string(),
            message: format!("expected {n} entries, got {}", values.len()),
        });
    }
    Ok(ExponentVector::new(values))
}
