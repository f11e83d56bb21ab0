//! Library side of the `cbasis` binary: configuration, the mode dispatcher
//! and the output formats. `main.rs` only parses arguments.

pub mod render;

use std::io::{self, Write};

use serde::Serialize;
use thiserror::Error;

use cbasis_core::conditions::{check_dc_ic_level_k, check_dc_level1, check_ic_shifted};
use cbasis_core::enumerate::{enumerate_level_k, enumerate_semi_infinite, shifted_character};
use cbasis_core::{EpsVector, Freudenthal, GradedCharacter, HighestWeight, LevelOneTarget, Monomial, Rank};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Basis,
    Shifted,
    SemiInf,
    Char,
    Verify,
    Check,
    Render,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ell: Rank,
    pub lambda: HighestWeight,
    pub depth: u32,
    pub mode: Mode,
    pub m: Option<u32>,
    pub format: Format,
    /// The monomial argument of `check` and `render`.
    pub monomial: Option<String>,
}

impl RunConfig {
    /// Validates `lambda` (given as `k_0,…,k_l`) against `ell`.
    pub fn new(ell: usize, lambda: &str, depth: u32, mode: Mode) -> Result<Self, CliError> {
        let ell = Rank::new(ell)?;
        let hw: HighestWeight = lambda.parse()?;
        let lambda = HighestWeight::with_rank(hw.coeffs().to_vec(), ell)?;
        Ok(RunConfig {
            ell,
            lambda,
            depth,
            mode,
            m: None,
            format: Format::default(),
            monomial: None,
        })
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cbasis_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use cbasis_core::Error as E;
        match self {
            CliError::Core(E::NoStabilization { .. } | E::Inconsistent { .. }) => 3,
            CliError::Io(_) => 3,
            _ => 2,
        }
    }
}

#[derive(Serialize)]
struct Entry {
    d: i64,
    mu: Vec<i64>,
    count: u64,
}

#[derive(Serialize)]
struct CensusDoc<'a> {
    ell: usize,
    lambda: &'a [u32],
    depth: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    elements: Vec<String>,
    entries: Vec<Entry>,
}

#[derive(Serialize)]
struct VerifyEntry {
    d: i64,
    mu: Vec<i64>,
    count: u64,
    oracle: u64,
}

#[derive(Serialize)]
struct Mismatch {
    d: i64,
    mu: Vec<i64>,
    count: u64,
    oracle: u64,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    ell: usize,
    lambda: &'a [u32],
    depth: u32,
    #[serde(rename = "match")]
    matches: bool,
    first_mismatch: Option<Mismatch>,
    entries: Vec<VerifyEntry>,
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    ell: usize,
    lambda: &'a [u32],
    m: u32,
    monomial: String,
    dc: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    ic: Option<bool>,
    valid: bool,
    witness: Option<Vec<String>>,
}

/// Runs one configuration, writing everything to `out`. Returns the exit
/// status: 0 on success, 1 when `verify` finds a mismatch.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let hw = &config.lambda;
    match config.mode {
        Mode::Basis | Mode::Shifted => {
            let m = match config.mode {
                Mode::Basis => 0,
                _ => config
                    .m
                    .ok_or_else(|| CliError::Usage("shifted mode needs --m".into()))?,
            };
            let heads = enumerate_level_k(hw, m, config.depth);
            let census = shifted_character(&heads, hw, m)?;
            let listing: Vec<String> = heads.iter().map(Monomial::to_string).collect();
            write_census(config, Some(m), &listing, &census, out)?;
            Ok(0)
        }
        Mode::SemiInf => {
            let basis = enumerate_semi_infinite(hw, config.depth)?;
            let listing: Vec<String> = basis.elements.iter().map(|s| s.to_string()).collect();
            write_census(config, None, &listing, &basis.character, out)?;
            Ok(0)
        }
        Mode::Char => {
            let table = Freudenthal::new(hw).character_table(config.depth)?;
            write_census(config, None, &[], &table, out)?;
            Ok(0)
        }
        Mode::Verify => verify(config, out),
        Mode::Check => check(config, out),
        Mode::Render => {
            let p = parse_monomial(config)?;
            out.write_all(render::render(&p, config.ell).as_bytes())?;
            Ok(0)
        }
    }
}

fn parse_monomial(config: &RunConfig) -> Result<Monomial, CliError> {
    let text = config
        .monomial
        .as_deref()
        .ok_or_else(|| CliError::Usage("a monomial argument is required".into()))?;
    let p: Monomial = text.parse()?;
    if !p.fits(config.ell) {
        return Err(CliError::Usage(format!("{p} uses colors outside rank {}", config.ell.get())));
    }
    Ok(p)
}

fn entries(ch: &GradedCharacter) -> Vec<Entry> {
    ch.iter()
        .map(|(d, mu, count)| Entry {
            d,
            mu: mu.0.clone(),
            count,
        })
        .collect()
}

fn mu_csv(mu: &EpsVector) -> String {
    mu.0.iter().map(i64::to_string).collect::<Vec<_>>().join(";")
}

fn write_census(
    config: &RunConfig,
    m: Option<u32>,
    listing: &[String],
    ch: &GradedCharacter,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match config.format {
        Format::Json => {
            let doc = CensusDoc {
                ell: config.ell.get(),
                lambda: config.lambda.coeffs(),
                depth: config.depth,
                m,
                elements: listing.to_vec(),
                entries: entries(ch),
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "d,mu,count")?;
            for (d, mu, count) in ch.iter() {
                writeln!(out, "{d},{},{count}", mu_csv(mu))?;
            }
        }
        Format::Text => {
            for line in listing {
                writeln!(out, "{line}")?;
            }
            if !listing.is_empty() {
                writeln!(out)?;
            }
            for (d, mu, count) in ch.iter() {
                writeln!(out, "d={d} mu={mu} count={count}")?;
            }
            let census: Vec<String> = ch.depth_census().values().map(u64::to_string).collect();
            writeln!(out, "depth census: {}", census.join(","))?;
        }
    }
    Ok(())
}

fn verify(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let hw = &config.lambda;
    let (basis, table) = rayon::join(
        || enumerate_semi_infinite(hw, config.depth),
        || Freudenthal::new(hw).character_table(config.depth),
    );
    let basis = basis?.character;
    let table = table?;
    let mut keys: Vec<(i64, EpsVector)> = basis
        .iter()
        .chain(table.iter())
        .map(|(d, mu, _)| (d, mu.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<VerifyEntry> = keys
        .into_iter()
        .map(|(d, mu)| VerifyEntry {
            d,
            count: basis.get(d, &mu),
            oracle: table.get(d, &mu),
            mu: mu.0,
        })
        .collect();
    let first = basis.first_mismatch(&table).map(|(d, mu, count, oracle)| Mismatch {
        d,
        mu: mu.0,
        count,
        oracle,
    });
    let ok = first.is_none();
    match config.format {
        Format::Json => {
            let doc = VerifyDoc {
                ell: config.ell.get(),
                lambda: hw.coeffs(),
                depth: config.depth,
                matches: ok,
                first_mismatch: first,
                entries: rows,
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "d,mu,count,oracle")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.d, mu_csv(&EpsVector(r.mu.clone())), r.count, r.oracle)?;
            }
        }
        Format::Text => {
            writeln!(out, "{:>3}  {:<16} {:>8} {:>8}", "d", "mu", "basis", "oracle")?;
            for r in &rows {
                let flag = if r.count == r.oracle { "" } else { "  <-" };
                let mu = EpsVector(r.mu.clone()).to_string();
                writeln!(out, "{:>3}  {:<16} {:>8} {:>8}{flag}", r.d, mu, r.count, r.oracle)?;
            }
            match &first {
                None => writeln!(out, "OK: characters agree up to depth {}", config.depth)?,
                Some(m) => writeln!(
                    out,
                    "MISMATCH: first at d={} mu={}: basis {} vs oracle {}",
                    m.d,
                    EpsVector(m.mu.clone()),
                    m.count,
                    m.oracle
                )?,
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn check(config: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = parse_monomial(config)?;
    let hw = &config.lambda;
    let m = config.m.unwrap_or(0);
    let dc = check_dc_level1(&p);
    let ic = (hw.level() == 1).then(|| check_ic_shifted(&p, LevelOneTarget(hw.slots()[0]), m));
    let witness = check_dc_ic_level_k(&p, hw, m);
    let parts = witness.as_ref().map(|f| {
        f.parts(&p)
            .iter()
            .zip(&f.slots)
            .map(|(part, r)| format!("Λ_{r}: {part}"))
            .collect::<Vec<_>>()
    });
    match config.format {
        Format::Json => {
            let doc = CheckDoc {
                ell: config.ell.get(),
                lambda: hw.coeffs(),
                m,
                monomial: p.to_string(),
                dc,
                ic,
                valid: witness.is_some(),
                witness: parts,
            };
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv | Format::Text => {
            let yes = |b: bool| if b { "yes" } else { "no" };
            writeln!(out, "monomial: {p}")?;
            writeln!(out, "difference conditions (level 1): {}", yes(dc))?;
            if let Some(ic) = ic {
                let verdict = if ic { "yes" } else { "no (initial condition violated)" };
                writeln!(out, "initial conditions: {verdict}")?;
            }
            match parts {
                Some(parts) => writeln!(out, "basis monomial for Λ = {hw}, m = {m}: yes; {}", parts.join(" | "))?,
                None => writeln!(out, "basis monomial for Λ = {hw}, m = {m}: no")?,
            }
        }
    }
    Ok(0)
}
