use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qbern::bernstein::{
    basis_derivative, basis_eval_exact, basis_eval_real, monomial_samples, operator_apply,
    operator_apply_real, BernsteinIndex, OperatorMethod,
};
use qbern::euler::fermionic_convergence;
use qbern::numeric::{format_rational, to_f64};
use qbern::qcore::q_number_real;
use qbern::Rational;
use qbern_cli::args::{parse_grid, parse_monomial, rational_arg, read_samples};
use qbern_cli::table::{emit_table, oracle_table, Cell, Format, Table, TableKind};
use qbern_cli::verify::{default_qs, Suite, SuiteConfig};
use qbern_cli::{run_verify_suite, CliError, CliResult};

/// Exact q-Bernstein, q-Euler and q-Stirling computations.
#[derive(Parser)]
#[command(name = "qb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every registered identity and report violations.
    Verify(VerifyArgs),
    /// Table of q-Euler numbers.
    Euler(EulerArgs),
    /// Evaluate the q-Bernstein basis or print its monomial expansion.
    Bernstein {
        #[command(subcommand)]
        command: BernsteinCommand,
    },
    /// Apply the q-Bernstein operator to t^m or to a samples file.
    Operator(OperatorArgs),
    /// Truncated fermionic sums and their p-adic distance to E_{n,q}.
    Padic(PadicArgs),
    /// Classical or q-Stirling numbers of the second kind.
    Stirling(StirlingArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Vec<Suite>,
    /// Sample values of q (a/b literals). Defaults to 1/2, 2/3, 3/5, 5/4, 3.
    #[arg(long = "q")]
    qs: Vec<String>,
    #[arg(long, default_value_t = 12)]
    nmax: u64,
    #[arg(long, default_value_t = 3)]
    smax: usize,
    #[arg(long, default_value_t = 2)]
    kmax: u64,
    /// Also evaluate the misprinted forms; these are expected to fail.
    #[arg(long)]
    include_printed_counterexamples: bool,
    /// Write the full JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EulerArgs {
    #[arg(long, value_parser = rational_arg)]
    q: Rational,
    #[arg(long, default_value_t = 20)]
    nmax: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Subcommand)]
enum BernsteinCommand {
    /// B_{k,n} at (x, q) in floating point, or exactly at u = [x]_q.
    Eval {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, conflicts_with = "u", requires = "q")]
        x: Option<f64>,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, value_parser = rational_arg)]
        u: Option<Rational>,
        /// Also print the x-derivative (float mode only).
        #[arg(long)]
        derivative: bool,
    },
    /// Coefficients of B_{k,n} as a polynomial in u.
    Upoly {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

#[derive(Args)]
struct OperatorArgs {
    /// Monomial t^m.
    #[arg(long, conflicts_with = "samples", required_unless_present = "samples")]
    f: Option<String>,
    /// CSV of k, f(k/n).
    #[arg(long)]
    samples: Option<PathBuf>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, requires = "grid")]
    q: Option<f64>,
    #[arg(long)]
    grid: Option<String>,
    /// Exact evaluation point u = [x]_q; prints all three methods.
    #[arg(long, value_parser = rational_arg, conflicts_with = "grid")]
    u: Option<Rational>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct PadicArgs {
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long, value_parser = rational_arg, default_value = "4")]
    q: Rational,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 5)]
    levels: u32,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct StirlingArgs {
    #[arg(long)]
    nmax: u64,
    /// q for q-Stirling numbers; classical when omitted.
    #[arg(long, value_parser = rational_arg)]
    q: Option<Rational>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("qb: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn print(s: &str) -> CliResult<u8> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())?;
    Ok(0)
}

fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Verify(args) => verify(args),
        Command::Euler(a) => print(&emit_table(&TableKind::Euler { q: a.q, nmax: a.nmax }, a.format)?),
        Command::Bernstein { command } => bernstein(command),
        Command::Operator(args) => operator(args),
        Command::Padic(a) => {
            let levels = fermionic_convergence(a.n, &a.q, a.p, a.levels)?;
            print(&oracle_table(&levels).render(a.format)?)
        }
        Command::Stirling(a) => print(&emit_table(&TableKind::Stirling { nmax: a.nmax, q: a.q }, a.format)?),
    }
}

/// Printed-form violations echoed to stdout; the JSON report has all of them.
const PRINTED_PREVIEW: usize = 10;

fn verify(args: VerifyArgs) -> CliResult<u8> {
    let qs = if args.qs.is_empty() {
        default_qs()
    } else {
        args.qs
            .iter()
            .map(|s| rational_arg(s).map_err(|e| CliError::Usage(format!("--q: {e}"))))
            .collect::<CliResult<_>>()?
    };
    let config = SuiteConfig {
        suites: args.suite,
        qs,
        nmax: args.nmax,
        smax: args.smax,
        kmax: args.kmax,
        include_printed: args.include_printed_counterexamples,
    };
    let report = run_verify_suite(&config)?;
    if let Some(path) = &args.out {
        let mut json = report.to_json()?;
        json.push('\n');
        std::fs::write(path, json)?;
    }
    let mut out = String::new();
    for e in report.corrected.failures() {
        out.push_str(&format!("FAIL {} {:?}: {} != {}\n", e.identity, e.params, e.lhs, e.rhs));
    }
    let s = report.corrected.summary;
    out.push_str(&format!("corrected: {} checks, {} passed, {} failed\n", s.total, s.passed, s.failed));
    if let Some(printed) = &report.printed {
        for e in printed.failures().take(PRINTED_PREVIEW) {
            out.push_str(&format!("expected-fail {} {:?}: {} != {}\n", e.identity, e.params, e.lhs, e.rhs));
        }
        let s = printed.summary;
        out.push_str(&format!(
            "printed counterexamples: {} checks, {} agree, {} violations\n",
            s.total, s.passed, s.failed
        ));
    }
    print(&out)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn bernstein(command: BernsteinCommand) -> CliResult<u8> {
    match command {
        BernsteinCommand::Eval { k, n, x, q, u, derivative } => {
            let idx = BernsteinIndex::new(k, n);
            match (u, x, q) {
                (Some(u), _, _) => {
                    if derivative {
                        return Err(CliError::Usage("--derivative needs --x and --q".into()));
                    }
                    print(&format!("{}\n", format_rational(&basis_eval_exact(idx, &u))))
                }
                (None, Some(x), Some(q)) => {
                    let mut out = format!("{:e}\n", basis_eval_real(idx, x, q)?);
                    if derivative {
                        out.push_str(&format!("{:e}\n", basis_derivative(idx, x, q)?));
                    }
                    print(&out)
                }
                _ => Err(CliError::Usage("give either --u, or --x with --q".into())),
            }
        }
        BernsteinCommand::Upoly { k, n, format } => print(&emit_table(&TableKind::Bernstein { k, n }, format)?),
    }
}

fn operator(args: OperatorArgs) -> CliResult<u8> {
    let samples = match (&args.f, &args.samples) {
        (Some(f), None) => {
            let m = parse_monomial(f)?;
            let n = args.n.ok_or_else(|| CliError::Usage("--f needs --n".into()))?;
            monomial_samples(m, n)
        }
        (None, Some(path)) => read_samples(path)?,
        _ => return Err(CliError::Usage("give exactly one of --f or --samples".into())),
    };
    let n = samples.len() as u64 - 1;
    if let Some(expected) = args.n {
        if expected != n {
            return Err(CliError::Usage(format!("--n {expected} but {} samples given", samples.len())));
        }
    }
    let table = if let Some(u) = &args.u {
        let mut t = Table::new(vec!["method", "value"]);
        for method in OperatorMethod::ALL {
            let v = operator_apply(n, &samples, u, method)?;
            t.push(vec![Cell::Text(method.name().into()), (&v).into()]);
        }
        t
    } else {
        let (Some(q), Some(grid)) = (args.q, &args.grid) else {
            return Err(CliError::Usage("give --u, or --q with --grid".into()));
        };
        let values: Vec<f64> = samples.iter().map(to_f64).collect();
        let mut t = Table::new(vec!["x", "u", "value"]);
        for x in parse_grid(grid)? {
            t.push(vec![
                Cell::Float(x),
                Cell::Float(q_number_real(x, q)?),
                Cell::Float(operator_apply_real(&values, x, q)?),
            ]);
        }
        t
    };
    print(&table.render(args.format)?)
}
