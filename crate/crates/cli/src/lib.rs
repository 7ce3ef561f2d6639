//! Command-line front end for the `continuum` library.
//!
//! [`run`] takes the argument vector and returns what the process should
//! print and its exit code, so everything is testable without spawning a
//! process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use continuum::bijection::{derivation_trace, MapConfig};
use continuum::binary_streams::{
    canonicalize, classify_stream, dual_of, expansions_of, format_stream, parse_stream, value,
};
use continuum::dyadic::{classify, enumerate_duals, Endpoint, PointClass, Rational};
use continuum::finite_sets::{
    cardinal_add, cardinal_mul, cardinal_pow, covering_set, disjoint_union, make_set, product,
    tagged_union, verify_exponent_law_with_budget, CardinalValue, FiniteSet, LawId, DEFAULT_BUDGET,
};
use continuum::Error;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for malformed command lines.
pub const EXIT_USAGE: i32 = 1;
/// Exit code for domain errors (out of range, parse errors, ...).
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn domain(err: &Error) -> Self {
        CommandResult {
            exit_code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("{}: {err}\n", err.name()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "continuum",
    version,
    about = "Covering sets, binary expansions and the B_X ~ B bijection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the covering-set (N | M), one covering per line.
    Coverings {
        /// Labels of the exponent set N, comma separated.
        #[arg(long = "exp", value_name = "LABELS", allow_hyphen_values = true)]
        exp: String,
        /// Labels of the base set M, comma separated.
        #[arg(long = "base", value_name = "LABELS", allow_hyphen_values = true)]
        base: String,
    },
    /// Check exponent laws by explicit bijection.
    Laws {
        #[arg(long, value_name = "ADD_EXP|MUL_EXP|CURRY|all")]
        check: String,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
        /// Cap on the number of enumerated items per law.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print every binary expansion of a rational in [0,1].
    Expand { rational: String },
    /// Classify a rational in [0,1] as a dual dyadic, an endpoint or other.
    Classify { rational: String },
    /// Operations on a stream literal such as "011(0)".
    Stream {
        #[arg(value_enum)]
        op: StreamOp,
        literal: String,
    },
    /// Apply the bijection B_X -> B or its inverse.
    Map {
        #[arg(value_enum)]
        direction: Direction,
        literal: String,
    },
    /// Replay and check the derivation of B_X ~ B.
    Trace {
        #[arg(long = "mu-max", value_parser = clap::value_parser!(u16).range(1..))]
        mu_max: u16,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Union of two label sets; strict unless --tagged.
    Union {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        tagged: bool,
    },
    /// Cartesian product of two label sets.
    Product {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Finite cardinal arithmetic.
    Cardinal {
        #[arg(value_enum)]
        op: CardinalOp,
        a: u64,
        b: u64,
    },
    /// The first COUNT dual-representation dyadics.
    Duals { count: usize },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StreamOp {
    Value,
    Canon,
    Member,
    Dual,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CardinalOp {
    Add,
    Mul,
    Pow,
}

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let text = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult::ok(text),
                _ => CommandResult {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => CommandResult::ok(out),
        Err(err) => CommandResult::domain(&err),
    }
}

fn labels(list: &str) -> FiniteSet {
    if list.is_empty() {
        FiniteSet::empty()
    } else {
        make_set(list.split(','))
    }
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().fold(String::new(), |mut out, item| {
        out.push_str(&item.to_string());
        out.push('\n');
        out
    })
}

fn execute(command: Command) -> continuum::Result<String> {
    Ok(match command {
        Command::Coverings { exp, base } => {
            lines(covering_set(&labels(&exp), &labels(&base)).iter())
        }
        Command::Laws {
            check,
            a,
            b,
            c,
            budget,
        } => {
            let laws = if check == "all" {
                LawId::ALL.to_vec()
            } else {
                vec![check.parse()?]
            };
            let mut out = String::new();
            for law in laws {
                let w = verify_exponent_law_with_budget(law, a.into(), b.into(), c.into(), budget)?;
                writeln!(
                    out,
                    "{law} a={a} b={b} c={c}: {} <-> {}, bijection validated ({} pairs)",
                    w.left_set.len(),
                    w.right_set.len(),
                    w.size()
                )
                .unwrap();
            }
            out
        }
        Command::Expand { rational } => {
            let q: Rational = rational.parse()?;
            lines(expansions_of(&q)?)
        }
        Command::Classify { rational } => {
            let q: Rational = rational.parse()?;
            match classify(&q)? {
                PointClass::DualDyadic(d) => {
                    format!("DualDyadic nu={} mu={}\n", d.nu(), d.exponent())
                }
                PointClass::Endpoint(Endpoint::Zero) => "Endpoint 0\n".to_owned(),
                PointClass::Endpoint(Endpoint::One) => "Endpoint 1\n".to_owned(),
                PointClass::OtherRational => "OtherRational\n".to_owned(),
            }
        }
        Command::Stream { op, literal } => {
            let e = parse_stream(&literal)?;
            match op {
                StreamOp::Value => format!("{}\n", value(&e)),
                StreamOp::Canon => format!("{}\n", format_stream(&canonicalize(&e))),
                StreamOp::Member => format!("{}\n", classify_stream(&e)),
                StreamOp::Dual => match dual_of(&e) {
                    Some(d) => format!("{d}\n"),
                    None => "none\n".to_owned(),
                },
            }
        }
        Command::Map { direction, literal } => {
            let e = parse_stream(&literal)?;
            let map = MapConfig::default();
            let image = match direction {
                Direction::Forward => map.forward(&e)?,
                Direction::Inverse => map.inverse(&e),
            };
            format!("{image}\n")
        }
        Command::Trace { mu_max, format } => {
            let trace = derivation_trace(usize::from(mu_max));
            match format {
                Format::Json => trace.to_json() + "\n",
                Format::Text => trace.to_text(),
            }
        }
        Command::Union {
            left,
            right,
            tagged,
        } => {
            let (l, r) = (labels(&left), labels(&right));
            let u = if tagged {
                tagged_union(&l, &r)
            } else {
                disjoint_union(&l, &r)?
            };
            format!("{u}\n")
        }
        Command::Product { left, right } => {
            format!("{}\n", product(&labels(&left), &labels(&right)))
        }
        Command::Cardinal { op, a, b } => {
            let (a, b) = (CardinalValue(a), CardinalValue(b));
            let r = match op {
                CardinalOp::Add => cardinal_add(a, b)?,
                CardinalOp::Mul => cardinal_mul(a, b)?,
                CardinalOp::Pow => cardinal_pow(a, b)?,
            };
            format!("{r}\n")
        }
        Command::Duals { count } => lines(enumerate_duals(count)),
    })
}
