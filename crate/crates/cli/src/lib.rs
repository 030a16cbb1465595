//! Command-line front end: quiver ingestion, the query commands, and the
//! SVG slice emitter. All output is deterministic: stable ordering
//! everywhere, no timestamps, rationals printed exactly.
//!
//! Exit codes: `0` success, `2` unreadable or unparsable input, `3` a
//! precondition violation (zero vectors, mismatched dimensions,
//! representation-infinite input where finiteness is required), `4` an
//! internal consistency failure.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use wallchamber::linalg::Rat;
use wallchamber::stability;
use wallchamber::{chambers, walls, DimVector, Error, Quiver, WallTable, Weight};

pub mod slice;

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser)]
#[command(
    name = "wallchamber",
    about = "Exact wall-and-chamber computations for quiver stability spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct QuiverArg {
    /// Quiver file (`vertices <n>` then `arrow <i> <j>` lines)
    #[arg(short = 'q', long = "quiver", value_name = "FILE")]
    quiver: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Print the wall of a dimension vector with its Schur classification
    Wall {
        #[command(flatten)]
        quiver: QuiverArg,
        /// Dimension vector, e.g. `1,1,0`
        #[arg(short = 'd', long = "dim", value_name = "D", allow_hyphen_values = true)]
        d: String,
        /// Optionally pre-compute all walls up to this total degree
        #[arg(long, value_name = "B")]
        bound: Option<i64>,
    },
    /// Print the Schur-root classification of a dimension vector
    Schur {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(short = 'd', long = "dim", value_name = "D", allow_hyphen_values = true)]
        d: String,
    },
    /// Decide bounded TF equivalence of two stability weights
    Tf {
        #[command(flatten)]
        quiver: QuiverArg,
        /// First weight, exact rationals, e.g. `1/2,-3,0`
        #[arg(long, value_name = "V1", allow_hyphen_values = true)]
        theta: String,
        /// Second weight
        #[arg(long, value_name = "V2", allow_hyphen_values = true)]
        theta2: String,
        /// Sweep all walls of total degree up to this bound
        #[arg(long, value_name = "B")]
        bound: i64,
    },
    /// Enumerate all chambers of a representation-finite quiver
    Chambers {
        #[command(flatten)]
        quiver: QuiverArg,
    },
    /// Check the wall recursion against the Kronecker closed form
    OracleKronecker {
        /// Number of parallel arrows
        #[arg(short = 'm', long, value_name = "M")]
        m: i64,
        /// Check all nonzero dimension vectors of total degree up to B
        #[arg(long, value_name = "B")]
        bound: i64,
    },
    /// Intersect all walls with an affine triangle and emit an SVG picture
    Slice {
        #[command(flatten)]
        quiver: QuiverArg,
        /// Include walls of total degree up to this bound
        #[arg(long, value_name = "B")]
        bound: i64,
        /// Triangle corners as three weight vectors (default for three
        /// vertices: [P1], -[P2], -[P3])
        #[arg(long, value_name = "P", num_args = 3, allow_hyphen_values = true)]
        plane: Option<Vec<String>>,
        /// Output SVG path; a JSON sidecar goes next to it
        #[arg(short = 'o', long = "out", value_name = "OUT.svg")]
        out: PathBuf,
    },
}

enum CliError {
    Input(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Core(e)
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_PARSE,
            CliError::Core(e) => match e {
                Error::QuiverSyntax { .. }
                | Error::LoopArrow { .. }
                | Error::CycleDetected
                | Error::VertexOutOfRange { .. } => EXIT_PARSE,
                Error::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_PRECONDITION,
            },
        }
    }
}

/// Run the CLI on explicit arguments, writing all regular output to `out`.
/// Returns the process exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout (exit 0) and usage
            // errors on stderr (exit 2)
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<(), CliError> {
    match command {
        Command::Wall { quiver, d, bound } => {
            let table = load_table(&quiver.quiver)?;
            let d = parse_dim_vector(&d)?;
            if let Some(b) = bound {
                table.wall_sweep(b)?;
            }
            let wall = table.wall(&d)?;
            let schur = table.classify_schur(&d)?;
            let mut doc = json!({ "d": d.entries() });
            let cone = wall.to_json()?;
            let obj = doc.as_object_mut().expect("object");
            for (k, v) in cone.as_object().expect("object") {
                obj.insert(k.clone(), v.clone());
            }
            obj.insert("schur".into(), schur.to_json());
            emit(out, &doc)
        }
        Command::Schur { quiver, d } => {
            let table = load_table(&quiver.quiver)?;
            let d = parse_dim_vector(&d)?;
            let report = table.classify_schur(&d)?;
            emit(out, &report.to_json())
        }
        Command::Tf { quiver, theta, theta2, bound } => {
            let table = load_table(&quiver.quiver)?;
            let theta = parse_weight(&theta)?;
            let theta2 = parse_weight(&theta2)?;
            let verdict = stability::tf_equivalent_bounded(&table, &theta, &theta2, bound)?;
            emit(out, &verdict.to_json())
        }
        Command::Chambers { quiver } => {
            let table = load_table(&quiver.quiver)?;
            let decomposition = chambers::enumerate_chambers(&table)?;
            let unimodular = chambers::check_unimodular(&decomposition.chambers);
            let coverage = chambers::check_fan_coverage(&decomposition.chambers)?;
            let list: Vec<Value> = decomposition
                .chambers
                .iter()
                .map(|c| {
                    json!({
                        "rays": c.g_matrix,
                        "det": c.det,
                        "cells": c.cells.len(),
                    })
                })
                .collect();
            let doc = json!({
                "chambers": list,
                "summary": {
                    "chambers": decomposition.chambers.len(),
                    "facets_shared": coverage.shared_facets,
                    "unimodular": if unimodular.pass { "pass" } else { "fail" },
                    "coverage": if coverage.pass { "pass" } else { "fail" },
                },
            });
            emit(out, &doc)
        }
        Command::OracleKronecker { m, bound } => {
            if m < 0 {
                return Err(CliError::Core(Error::Invalid(
                    "kronecker multiplicity must be non-negative".into(),
                )));
            }
            let table = WallTable::new(Quiver::kronecker(m as usize));
            let sweep = table.wall_sweep(bound)?;
            let mut failures = 0usize;
            for (d, wall) in &sweep {
                let oracle = walls::kronecker_wall_oracle(m, d)?;
                let ok = wall.set_eq(&oracle)?;
                if !ok {
                    failures += 1;
                }
                writeln!(out, "{} d={}", if ok { "pass" } else { "FAIL" }, d)
                    .map_err(|e| CliError::Input(e.to_string()))?;
            }
            writeln!(
                out,
                "oracle-kronecker m={} bound={}: {}/{} pass",
                m,
                bound,
                sweep.len() - failures,
                sweep.len()
            )
            .map_err(|e| CliError::Input(e.to_string()))?;
            if failures > 0 {
                return Err(CliError::Core(Error::Internal(format!(
                    "{failures} walls disagree with the closed form"
                ))));
            }
            Ok(())
        }
        Command::Slice { quiver, bound, plane, out: out_path } => {
            let table = load_table(&quiver.quiver)?;
            let spec = match plane {
                Some(points) => {
                    let [p0, p1, p2] = points.as_slice() else {
                        return Err(CliError::Input("--plane needs three vectors".into()));
                    };
                    slice::SliceSpec::new(
                        parse_weight(p0)?.coords().to_vec(),
                        parse_weight(p1)?.coords().to_vec(),
                        parse_weight(p2)?.coords().to_vec(),
                    )?
                }
                None => slice::SliceSpec::default_plane(table.quiver().n())?,
            };
            let slices = slice::compute_slices(&table, bound, &spec)?;
            let svg = slice::render_svg(&slices, bound);
            let sidecar = slice::sidecar_json(&slices, &spec, bound);
            std::fs::write(&out_path, svg)
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out_path.display())))?;
            let sidecar_path = out_path.with_extension("json");
            std::fs::write(&sidecar_path, format!("{:#}\n", sidecar))
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", sidecar_path.display())))?;
            writeln!(
                out,
                "wrote {} and {} ({} wall slices, total degree <= {})",
                out_path.display(),
                sidecar_path.display(),
                slices.len(),
                bound
            )
            .map_err(|e| CliError::Input(e.to_string()))?;
            Ok(())
        }
    }
}

fn emit<W: Write>(out: &mut W, doc: &Value) -> Result<(), CliError> {
    writeln!(out, "{doc:#}").map_err(|e| CliError::Input(e.to_string()))
}

fn load_table(path: &Path) -> Result<WallTable, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let quiver = Quiver::parse(&text)?;
    Ok(WallTable::new(quiver))
}

/// Parse `1,0,2` into a dimension vector.
fn parse_dim_vector(text: &str) -> Result<DimVector, CliError> {
    let entries: Vec<i64> = text
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("malformed dimension vector entry `{tok}`")))
        })
        .collect::<Result<_, _>>()?;
    DimVector::new(entries).map_err(CliError::Core)
}

/// Parse `1/2,-3,0` into an exact rational weight.
fn parse_weight(text: &str) -> Result<Weight, CliError> {
    let coords: Vec<Rat> = text
        .split(',')
        .map(|tok| {
            Rat::from_str(tok.trim())
                .map_err(|_| CliError::Input(format!("malformed rational entry `{tok}`")))
        })
        .collect::<Result<_, _>>()?;
    Ok(Weight::new(coords))
}
