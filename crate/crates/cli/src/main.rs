use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cbasis_cli::{run, CliError, Format, Mode, RunConfig};

/// Monomial bases of standard C_l^(1)-modules: enumeration, condition
/// checks and a Freudenthal cross-check.
#[derive(Parser)]
#[command(name = "cbasis", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basis of the Feigin–Stoyanovsky subspace W(Λ) with its graded census.
    Basis(Common),
    /// Basis of the shifted subspace W_{-2m}.
    Shifted(Common),
    /// Canonical semi-infinite monomials (a basis of L(Λ)) and their census.
    Semiinf(Common),
    /// Weight multiplicities of L(Λ) from the Freudenthal recursion.
    Char(Common),
    /// Compare the semi-infinite census with the Freudenthal table.
    Verify(Common),
    /// Report difference/initial conditions for a monomial.
    Check(WithMonomial),
    /// Draw a monomial as a path in the strip of glued triangles.
    Render(WithMonomial),
}

#[derive(Args)]
struct Common {
    /// Rank l of C_l.
    #[arg(long)]
    ell: usize,
    /// Highest weight as k_0,...,k_l.
    #[arg(long, default_value = "")]
    lambda: String,
    /// Depth bound N.
    #[arg(long, default_value_t = 0)]
    depth: u32,
    /// Shift index for `shifted` and `check`.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WithMonomial {
    #[command(flatten)]
    common: Common,
    /// Monomial such as "x[1,2](-2) x[1,1](-1)".
    monomial: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let (mode, common, monomial) = match cli.command {
        Command::Basis(c) => (Mode::Basis, c, None),
        Command::Shifted(c) => (Mode::Shifted, c, None),
        Command::Semiinf(c) => (Mode::SemiInf, c, None),
        Command::Char(c) => (Mode::Char, c, None),
        Command::Verify(c) => (Mode::Verify, c, None),
        Command::Check(w) => (Mode::Check, w.common, Some(w.monomial)),
        Command::Render(w) => (Mode::Render, w.common, Some(w.monomial)),
    };
    // render only needs the rank; default to Λ_0
    let lambda = if common.lambda.is_empty() {
        let mut v = vec!["0"; common.ell + 1];
        v[0] = "1";
        v.join(",")
    } else {
        common.lambda.clone()
    };
    let mut config = RunConfig::new(common.ell, &lambda, common.depth, mode)?;
    config.m = common.m;
    config.monomial = monomial;
    config.format = match common.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Text => Format::Text,
    };
    match &common.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            let code = run(&config, &mut w)?;
            w.flush()?;
            Ok(code)
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            let code = run(&config, &mut w)?;
            w.flush()?;
            Ok(code)
        }
    }
}
