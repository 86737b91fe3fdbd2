//! The `periplectic` command line. Parsing and dispatch live here so that
//! the binary is a thin wrapper and the verbs can be tested in-process.
//!
//! Exit codes: 0 success, 1 failed verification or internal error,
//! 2 usage error.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::standard::DEFAULT_BASIS_BOUND;
use crate::algebra::symmetric::mullineux_by_modules;
use crate::algebra::{gram_matrix, gram_rank, standard_basis, standard_dimension};
use crate::blocks::{classify, oracle};
use crate::diagrams::{compose_signed, enumerate::double_factorial_odd, phi, BrauerDiagram};
use crate::error::{Error, Result};
use crate::linalg::{Field, PrimeField, RationalField};
use crate::partitions::{in_lambda, mullineux, p_core, Partition};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "periplectic", version, about = "Exact computations in the periplectic Brauer algebra A_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Block decomposition of Λ_n, by the classifier or the centre oracle.
    Blocks {
        #[arg(short)]
        n: usize,
        /// Characteristic: 0 or an odd prime.
        #[arg(short, default_value_t = 0)]
        p: u64,
        /// Compute from central idempotents instead of the closed form.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification grid; exits 1 if any check fails.
    Verify {
        /// Largest n used by any check.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Multiply two JSON diagrams read from standard input.
    Mult {
        #[arg(long)]
        json: bool,
    },
    /// Apply the anti-involution φ to a JSON diagram (argument or stdin).
    Phi {
        diagram: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// The p-core of a partition such as "(4,4,2,1)".
    Pcore {
        #[arg(short)]
        p: usize,
        partition: Partition,
    },
    /// The Mullineux conjugate of a p-restricted partition.
    Mullineux {
        #[arg(short)]
        p: u32,
        partition: Partition,
        /// Compute by tensoring simple modules with the sign representation.
        #[arg(long)]
        modules: bool,
    },
    /// dim A_n, or dim W_n(λ) with --shape.
    Dim {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        shape: Option<Partition>,
    },
    /// Gram matrix of W_n(λ) and its rank in characteristic p.
    Gram {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        p: u64,
        shape: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Check that the stratified family is a basis with triangular products.
    BasisCheck {
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        p: u64,
    },
}

/// Parses `argv` (program name first), runs the verb and returns the exit
/// code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, input, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Domain(_) | Error::Unsupported(_) | Error::Parse(_) => 2,
        Error::Resource(_) | Error::Internal(_) => 1,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("output failed: {e}"))
}

fn read_diagrams(input: &mut dyn Read) -> Result<Vec<BrauerDiagram>> {
    let mut text = String::new();
    input.read_to_string(&mut text).map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
    serde_json::Deserializer::from_str(&text)
        .into_iter::<BrauerDiagram>()
        .map(|d| d.map_err(|e| Error::Parse(format!("bad diagram JSON: {e}"))))
        .collect()
}

fn dispatch(command: Command, input: &mut dyn Read, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Blocks { n, p, oracle: use_oracle, json } => {
            let blocks = if use_oracle { oracle(n, p)? } else { classify(n, p)? };
            if json {
                writeln!(out, "{}", blocks.to_json()).map_err(io)?;
            } else {
                writeln!(out, "{blocks}").map_err(io)?;
            }
        }
        Command::Verify { max_n, seed, json } => {
            let outcomes = verify::run_all(max_n.unwrap_or(usize::MAX), seed);
            if json {
                let text = serde_json::to_string_pretty(&outcomes).map_err(|e| Error::Internal(e.to_string()))?;
                writeln!(out, "{text}").map_err(io)?;
            } else {
                for o in &outcomes {
                    writeln!(out, "{o}").map_err(io)?;
                }
            }
            if outcomes.iter().any(|o| !o.passed) {
                return Ok(1);
            }
        }
        Command::Mult { json } => {
            let ds = read_diagrams(input)?;
            let [a, b] = ds.as_slice() else {
                return Err(Error::Usage(format!("mult expects two diagrams on standard input, got {}", ds.len())));
            };
            let product = compose_signed(a, b);
            if json {
                writeln!(out, "{}", serde_json::to_string(&product).expect("signed diagrams serialise")).map_err(io)?;
            } else {
                writeln!(out, "{product}").map_err(io)?;
            }
        }
        Command::Phi { diagram, json } => {
            let ds = match diagram {
                Some(text) => read_diagrams(&mut text.as_bytes())?,
                None => read_diagrams(input)?,
            };
            let [d] = ds.as_slice() else {
                return Err(Error::Usage(format!("phi expects one diagram, got {}", ds.len())));
            };
            let image = phi(d);
            if json {
                writeln!(out, "{}", serde_json::to_string(&image).expect("signed diagrams serialise")).map_err(io)?;
            } else {
                writeln!(out, "{image}").map_err(io)?;
            }
        }
        Command::Pcore { p, partition } => {
            if p < 2 {
                return Err(Error::Usage("p must be at least 2".into()));
            }
            writeln!(out, "{}", p_core(&partition, p)).map_err(io)?;
        }
        Command::Mullineux { p, partition, modules } => {
            let m = if modules {
                PrimeField::new(p as u64)?;
                mullineux_by_modules(&partition, p)?
            } else {
                mullineux(&partition, p)?
            };
            writeln!(out, "{m}").map_err(io)?;
        }
        Command::Dim { n, shape } => {
            let d = match shape {
                Some(shape) if in_lambda(n, &shape) => standard_dimension(n, &shape),
                Some(shape) => return Err(Error::Domain(format!("{shape} does not label a standard module of A_{n}"))),
                None => double_factorial_odd(2 * n),
            };
            writeln!(out, "{d}").map_err(io)?;
        }
        Command::Gram { n, p, shape, json } => {
            let g = gram_matrix(n, &shape)?;
            let rank = gram_rank(n, &shape, p)?;
            if json {
                writeln!(out, "{}", json!({"n": n, "p": p, "shape": shape, "matrix": g, "rank": rank})).map_err(io)?;
            } else {
                for row in &g {
                    let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
                    writeln!(out, "{}", cells.join("")).map_err(io)?;
                }
                writeln!(out, "rank {rank} in characteristic {p}").map_err(io)?;
            }
        }
        Command::BasisCheck { n, p } => {
            let basis = standard_basis(n, DEFAULT_BASIS_BOUND)?;
            let violations = match Field::new(p)? {
                Field::Rational => basis.check_triangularity(RationalField)?,
                Field::Prime(q) => basis.check_triangularity(PrimeField::new(q as u64)?)?,
            };
            writeln!(out, "{} elements, {} triangularity violations", basis.len(), violations.len()).map_err(io)?;
            for v in &violations {
                writeln!(out, "  {v}").map_err(io)?;
            }
            if !violations.is_empty() {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
