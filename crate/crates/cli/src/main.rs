//! Command-line front end: verification suites, the dimension table,
//! Verlinde numbers and Weyl dimensions.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vg3_core::geometry::GeomError;
use vg3_core::rat::fmt_rat;
use vg3_core::report::{Report, Status};
use vg3_core::verify::{run_suite, Selector, VerifyContext};
use vg3_core::verlinde::{verlinde_exact, verlinde_float, Method, VerlindeParams};
use vg3_core::weyl::weyl_dim_checked;

#[derive(Parser)]
#[command(
    name = "vg3",
    version,
    about = "Exact verification of the genus-3 Verlinde number computation via characteristic classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite (default: all).
    Verify {
        /// Suite selector: all, prop-1.1, prop-1.2, prop-2.1, prop-2.2,
        /// thm-2.3, thm-3.1, prop-3.2, serre, table, verlinde-cross.
        selector: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the a_k, b_k, d_k dimension table.
    Table {
        /// Largest twist to print.
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate the rank-2 Verlinde formula.
    Verlinde(VerlindeArgs),
    /// Dimension of an irreducible so(2n) module by the Weyl formula.
    Dims {
        /// Rank n of the root system D_n.
        #[arg(long)]
        rank: usize,
        /// Comma-separated dominant weight, e.g. 3,1,0,0.
        #[arg(long)]
        weight: String,
    },
}

#[derive(Args)]
struct VerlindeArgs {
    /// Genus of the underlying curve (>= 2).
    #[arg(long)]
    genus: u32,
    /// Level index m (>= 1); the formula gives dim H^0(M, L^{m-1}).
    #[arg(long)]
    level: u32,
    #[arg(long, value_enum, default_value = "exact")]
    method: MethodArg,
    /// For genus 3: also derive the index polynomial geometrically and
    /// assert agreement.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Exact,
    Float,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Exact => Method::Exact,
            MethodArg::Float => Method::Float,
        }
    }
}

const EXIT_OK: u8 = 0;
const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { selector, format } => cmd_verify(selector.as_deref(), format),
        Command::Table { kmax, format } => cmd_table(kmax, format),
        Command::Verlinde(args) => cmd_verlinde(&args),
        Command::Dims { rank, weight } => cmd_dims(rank, &weight),
    };
    ExitCode::from(code)
}

fn internal_error(err: &GeomError) -> u8 {
    eprintln!("error: {err}");
    EXIT_VERIFICATION
}

fn cmd_verify(selector: Option<&str>, format: Format) -> u8 {
    let name = selector.unwrap_or("all");
    let Some(sel) = Selector::parse(name) else {
        eprintln!(
            "error: unknown selector '{name}' (expected one of: {})",
            Selector::ALL.map(Selector::name).join(", ")
        );
        return EXIT_USAGE;
    };
    let report = match run_suite(sel) {
        Ok(r) => r,
        Err(e) => return internal_error(&e),
    };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
        Format::Text => print_report_text(&report),
    }
    if report.has_failures() {
        EXIT_VERIFICATION
    } else {
        EXIT_OK
    }
}

fn print_report_text(report: &Report) {
    let width = report
        .results
        .iter()
        .map(|r| r.id.len())
        .max()
        .unwrap_or(0);
    for r in &report.results {
        let tag = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::ImposedByCitation => "imposed-by-citation",
        };
        println!("{:width$}  {}", r.id, tag);
        if r.status == Status::Fail {
            println!("{:width$}    expected: {}", "", r.expected);
            println!("{:width$}    computed: {}", "", r.computed);
        }
    }
    println!(
        "{} checks: {} pass, {} fail, {} imposed-by-citation",
        report.summary.total,
        report.summary.pass,
        report.summary.fail,
        report.summary.imposed_by_citation
    );
}

fn cmd_table(kmax: u32, format: Format) -> u8 {
    let ctx = match VerifyContext::build() {
        Ok(c) => c,
        Err(e) => return internal_error(&e),
    };
    let rows: Vec<(i64, String, String, String)> = (0..=kmax as i64)
        .map(|k| {
            (
                k,
                fmt_rat(&ctx.a_rr.eval_k(k)),
                fmt_rat(&ctx.b_rr.eval_k(k)),
                fmt_rat(&ctx.d_direct.eval_k(k)),
            )
        })
        .collect();
    match format {
        Format::Json => {
            let json: Vec<_> = rows
                .iter()
                .map(|(k, a, b, d)| {
                    serde_json::json!({ "k": k, "a": a, "b": b, "d": d })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({
                    "a": ctx.a_rr.poly.render("k"),
                    "b": ctx.b_rr.poly.render("k"),
                    "d": ctx.d_direct.poly.render("k"),
                    "rows": json,
                }))
                .expect("table serializes")
            );
        }
        Format::Text => {
            println!("{:>4} {:>16} {:>16} {:>16}", "k", "a_k", "b_k", "d_k");
            for (k, a, b, d) in &rows {
                println!("{k:>4} {a:>16} {b:>16} {d:>16}");
            }
        }
    }
    EXIT_OK
}

fn cmd_verlinde(args: &VerlindeArgs) -> u8 {
    if args.genus < 2 || args.level < 1 {
        eprintln!("error: need --genus >= 2 and --level >= 1");
        return EXIT_USAGE;
    }
    let params = VerlindeParams::new(args.genus, args.level);
    let value = match Method::from(args.method) {
        Method::Exact => match verlinde_exact(params) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFICATION;
            }
        },
        Method::Float => match verlinde_float(params) {
            Ok((v, residual)) => {
                eprintln!("rounding residual: {residual:.3e}");
                v
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_VERIFICATION;
            }
        },
    };
    println!("{value}");

    if args.cross_check {
        if args.genus != 3 {
            eprintln!("error: --cross-check is only available for --genus 3");
            return EXIT_USAGE;
        }
        let ctx = match VerifyContext::build() {
            Ok(c) => c,
            Err(e) => return internal_error(&e),
        };
        let expected = ctx.d_direct.eval_k(args.level as i64 - 1);
        eprintln!(
            "index polynomial value at k = {}: {}",
            args.level - 1,
            fmt_rat(&expected)
        );
        if expected != vg3_core::rat::Rational::from_integer(value.clone()) {
            eprintln!("error: cross-check mismatch");
            return EXIT_VERIFICATION;
        }
        eprintln!("cross-check: agreement");
    }
    EXIT_OK
}

fn cmd_dims(rank: usize, weight: &str) -> u8 {
    let coords: Result<Vec<i64>, _> = weight
        .split(',')
        .map(|part| part.trim().parse::<i64>())
        .collect();
    let Ok(coords) = coords else {
        eprintln!("error: --weight must be a comma-separated list of integers");
        return EXIT_USAGE;
    };
    if rank < 2 {
        eprintln!("error: --rank must be at least 2");
        return EXIT_USAGE;
    }
    match weyl_dim_checked(rank, coords) {
        Ok(dim) => {
            println!("{dim}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
