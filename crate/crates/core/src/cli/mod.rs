//! Command-line front end.

pub mod parse;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::diffops::Realization;
use crate::error::Result;
use crate::sympspace::{product, Rank};
use crate::uqsp::{enumerate_positive_roots, SuiteKind, SuiteReport};

pub use parse::{parse_element, parse_operator, parse_value, Value};

/// Exit status when some identity failed.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "qsymp",
    version,
    about = "Quantum symplectic space X and the q-differential operator realization of U_q(sp_2n)"
)]
pub struct Cli {
    /// Rank n (at least 2).
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(i64).range(2..))]
    pub n: i64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "QSYMP_JOBS")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites; exit status 0 iff every identity passes.
    Verify {
        /// Degree bound for operator comparisons (largest m for highest-weight).
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// Comma-separated suite names, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suites: Vec<String>,
    },
    /// Apply an operator expression to an element expression.
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long)]
        elem: String,
    },
    /// Multiply two elements and print the normal form.
    Mul {
        #[arg(conflicts_with = "lhs_flag")]
        lhs: Option<String>,
        #[arg(conflicts_with = "rhs_flag")]
        rhs: Option<String>,
        #[arg(long = "lhs")]
        lhs_flag: Option<String>,
        #[arg(long = "rhs")]
        rhs_flag: Option<String>,
    },
    /// List the positive roots in enumeration order.
    Roots,
}

fn suites_from(names: &[String]) -> std::result::Result<Vec<SuiteKind>, String> {
    if names.iter().any(|s| s == "all") {
        return Ok(SuiteKind::ALL.to_vec());
    }
    let mut out = Vec::new();
    for s in names {
        let k: SuiteKind = s.trim().parse().map_err(|_| {
            let known: Vec<&str> = SuiteKind::ALL.iter().map(|k| k.name()).collect();
            format!(
                "unknown suite '{s}' (expected one of: {}, all)",
                known.join(", ")
            )
        })?;
        if !out.contains(&k) {
            out.push(k);
        }
    }
    Ok(out)
}

#[derive(Serialize)]
struct RootRecord {
    label: String,
    weight: Vec<i64>,
}

fn write_reports(
    out: &mut dyn Write,
    reports: &[SuiteReport],
    fmt: OutputFormat,
) -> std::io::Result<()> {
    for r in reports {
        match fmt {
            OutputFormat::Text => write!(out, "{}", r.to_text())?,
            OutputFormat::Structured => write!(out, "{}", r.to_json_lines())?,
        }
    }
    if fmt == OutputFormat::Text {
        let failed: usize = reports.iter().map(|r| r.failed()).sum();
        let total: usize = reports.iter().map(|r| r.records.len()).sum();
        if failed == 0 {
            writeln!(out, "all {total} identities passed")?;
        } else {
            writeln!(out, "{failed} of {total} identities failed")?;
        }
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<i32> {
    let rank = Rank::new(cli.n)?;
    let io =
        |e: std::io::Error| crate::error::QsympError::InvalidOperator(format!("write failed: {e}"));
    match &cli.command {
        Command::Verify { max_degree, suites } => {
            let kinds = match suites_from(suites) {
                Ok(k) => k,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return Ok(EXIT_USAGE);
                }
            };
            let mut reports = Vec::new();
            for k in kinds {
                reports.extend(k.run(rank, *max_degree)?);
            }
            write_reports(out, &reports, cli.output).map_err(io)?;
            Ok(if reports.iter().all(|r| r.all_pass()) {
                0
            } else {
                EXIT_FAILED
            })
        }
        Command::Apply { op, elem } => {
            let r = Realization::new(rank);
            let op = parse_operator(&r, op)?;
            let x = parse_element(&r, elem)?;
            writeln!(out, "{}", op.try_apply(&x)?.render()).map_err(io)?;
            Ok(0)
        }
        Command::Mul {
            lhs,
            rhs,
            lhs_flag,
            rhs_flag,
        } => {
            let (Some(a), Some(b)) = (
                lhs.as_ref().or(lhs_flag.as_ref()),
                rhs.as_ref().or(rhs_flag.as_ref()),
            ) else {
                eprintln!("error: mul needs two elements (positional or --lhs/--rhs)");
                return Ok(EXIT_USAGE);
            };
            let r = Realization::new(rank);
            let a = parse_element(&r, a)?;
            let b = parse_element(&r, b)?;
            writeln!(out, "{}", product(&a, &b)?.render()).map_err(io)?;
            Ok(0)
        }
        Command::Roots => {
            for l in enumerate_positive_roots(rank) {
                let (sign, i) = if l.is_negative() {
                    ('-', l.i())
                } else {
                    ('+', l.i())
                };
                match cli.output {
                    OutputFormat::Text => {
                        writeln!(out, "E({sign},{i},{})  weight {:?}", l.j(), l.weight(rank))
                            .map_err(io)?
                    }
                    OutputFormat::Structured => {
                        let rec = RootRecord {
                            label: l.to_string(),
                            weight: l.weight(rank),
                        };
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(&rec).expect("serializable")
                        )
                        .map_err(io)?
                    }
                }
            }
            Ok(0)
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status. Results go to `out`; diagnostics go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buf = Vec::new();
    let status = pool.install(|| execute(&cli, &mut buf));
    if out.write_all(&buf).and_then(|_| out.flush()).is_err() {
        return EXIT_USAGE;
    }
    match status {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(
            std::iter::once("qsymp").chain(args.iter().copied()),
            &mut buf,
        );
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn golden_apply_and_mul() {
        let cases: [(&[&str], &str); 6] = [
            (
                &["apply", "--n", "2", "--op", "e(1)", "--elem", "x(1)"],
                "x(-1)\n",
            ),
            (
                &["apply", "--n", "2", "--op", "k(1)", "--elem", "x(-1)"],
                "q^2 * x(-1)\n",
            ),
            (
                &["apply", "--n", "2", "--op", "E(+,1,2)", "--elem", "x(1)"],
                "-q^2 * x(-2)\n",
            ),
            (&["mul", "--n", "2", "x(2)", "x(1)"], "q * x(1)x(2)\n"),
            (
                &["mul", "--n", "2", "x(1)", "x(-1)"],
                "q^2 * x(-1)x(1) + (q^3-q) * x(-2)x(2)\n",
            ),
            (&["mul", "--n", "2", "1", "x(1)"], "x(1)\n"),
        ];
        for (args, want) in cases {
            assert_eq!(call(args), (0, want.to_string()), "{args:?}");
        }
        assert_eq!(
            call(&["mul", "--lhs", "x(2)", "--rhs", "x(1)"]).1,
            "q * x(1)x(2)\n"
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["verify", "--n", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--suites", "nope"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["apply", "--op", "e(3)", "--elem", "x(1)"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["mul", "x(1)"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_exit_status() {
        let (code, out) = call(&[
            "verify",
            "--n",
            "2",
            "--max-degree",
            "2",
            "--suites",
            "serre",
        ]);
        assert_eq!(code, 0);
        assert!(out.ends_with("identities passed\n"));
        let (code, out) = call(&[
            "verify",
            "--max-degree",
            "1",
            "--suites",
            "serre,actions",
            "--output",
            "structured",
        ]);
        assert_eq!(code, 0);
        assert!(out.lines().all(|l| l.starts_with("{\"kind\":")));
    }

    #[test]
    fn roots_listing() {
        let (code, out) = call(&["roots", "--n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "E(+,1,1)  weight [2, 0]\nE(+,1,2)  weight [1, 1]\nE(+,2,2)  weight [0, 2]\nE(-,1,2)  weight [-1, 1]\n"
        );
    }
}
