mod error;
mod scan;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use altbraid::conjecture::{leading_coeffs_formula, COEFF_THRESHOLDS};
use altbraid::{
    alexander, check_conjecture, seifert_oracle_m1, signature_closed_form, BlockBraid, BraidWord,
    Sign,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use error::CliError;
use scan::ScanParams;

/// Alexander polynomials, signatures and trapezoid checks for braid closures.
#[derive(Parser, Debug)]
#[command(name = "altbraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial of the closure of a braid word.
    Alexander {
        /// Word such as "s1^3 s2^-2 s3"; an empty word is the identity.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Strand count.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Signature of a block braid closure.
    Signature {
        #[command(flatten)]
        block: BlockArgs,
        /// Use the Seifert matrix instead of the closed form (one block only).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Alexander polynomial, signature and trapezoid verdict of a block braid.
    Check {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        json: bool,
    },
    /// Sweep block braids over a grid of magnitudes and write CSV.
    Scan {
        /// Strand count.
        #[arg(long)]
        n: usize,
        /// Block counts: "2" or an inclusive range "1..3".
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<usize>,
        /// Largest magnitude; every entry runs over 1..=max.
        #[arg(long)]
        max: u64,
        #[arg(long, default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        /// Output file, or "-" for standard output.
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Worker threads; 0 uses all cores. Output does not depend on it.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Leading coefficients of the Alexander polynomial for large magnitudes.
    Coeffs {
        /// Strand count (at least 3).
        #[arg(long)]
        n: u64,
        /// Block count.
        #[arg(long)]
        m: u64,
        /// Smallest magnitude in the braid; drops coefficients it does not cover.
        #[arg(long)]
        min_entry: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct BlockArgs {
    /// Strand count.
    #[arg(long)]
    n: usize,
    /// Magnitudes: "," within a block, ";" between blocks, e.g. "3,2,5;1,1,2".
    #[arg(long)]
    blocks: String,
    /// "+" or "-".
    #[arg(long, default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
    sign: Sign,
}

impl BlockArgs {
    fn braid(&self) -> Result<BlockBraid, CliError> {
        Ok(BlockBraid::parse(self.n, &self.blocks, self.sign)?)
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    Sign::parse(s).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("expected a block count or range like 1..3, got {s:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    n: usize,
    sign: String,
    blocks: &'a [Vec<u64>],
    #[serde(flatten)]
    report: &'a altbraid::ConjectureReport,
    conjecture_holds: bool,
}

#[derive(Serialize)]
struct CoeffsOutput {
    n: u64,
    m: u64,
    min_entry: Option<u64>,
    /// Integers, or decimal strings beyond 64 bits; `null` where the
    /// magnitude threshold is not met.
    coeffs: Vec<serde_json::Value>,
    thresholds: [u64; 4],
}

fn coeff_json(c: &Option<BigInt>) -> serde_json::Value {
    match c {
        None => serde_json::Value::Null,
        Some(v) => match i64::try_from(v) {
            Ok(x) => x.into(),
            Err(_) => v.to_string().into(),
        },
    }
}

fn emit_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Alexander { word, n, json } => {
            let w = BraidWord::parse(n, &word)?;
            let r = alexander(&w)?;
            if json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "{}", r.poly_t.display_in('t'))?;
            }
        }
        Command::Signature {
            block,
            oracle,
            json,
        } => {
            let b = block.braid()?;
            let r = if oracle {
                seifert_oracle_m1(&b)?
            } else {
                signature_closed_form(&b)
            };
            if json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "{}", r.value)?;
            }
        }
        Command::Check { block, json } => {
            let b = block.braid()?;
            let r = check_conjecture(&b)?;
            let holds = r.trapezoid_bound_holds();
            if json {
                let o = CheckOutput {
                    n: b.strands(),
                    sign: b.sign().to_string(),
                    blocks: b.magnitudes(),
                    report: &r,
                    conjecture_holds: holds,
                };
                emit_json(out, &o)?;
            } else {
                write_check(out, &b, &r, holds)?;
            }
        }
        Command::Scan {
            n,
            m,
            max,
            sign,
            out: path,
            threads,
        } => {
            let params = ScanParams {
                strands: n,
                blocks: m,
                max,
                sign,
                threads,
            };
            if path.as_os_str() == "-" {
                scan::run(&params, &mut *out)?;
            } else {
                params.validate()?;
                let f = File::create(&path).map_err(|e| {
                    CliError::User(format!("cannot create {}: {e}", path.display()))
                })?;
                scan::run(&params, BufWriter::new(f))?;
            }
        }
        Command::Coeffs {
            n,
            m,
            min_entry,
            json,
        } => {
            let mut r = leading_coeffs_formula(n, m)?;
            if let Some(k) = min_entry {
                r = r.restrict_to_min_entry(k);
            }
            if json {
                let o = CoeffsOutput {
                    n,
                    m,
                    min_entry,
                    coeffs: r.a.iter().map(coeff_json).collect(),
                    thresholds: COEFF_THRESHOLDS,
                };
                emit_json(out, &o)?;
            } else {
                for (k, c) in r.a.iter().enumerate() {
                    match c {
                        Some(v) => writeln!(out, "a{k} = {v}")?,
                        None => writeln!(
                            out,
                            "a{k} = (needs every entry > {})",
                            COEFF_THRESHOLDS[k]
                        )?,
                    }
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn write_check(
    out: &mut impl Write,
    b: &BlockBraid,
    r: &altbraid::ConjectureReport,
    holds: bool,
) -> Result<(), CliError> {
    writeln!(out, "braid        n={} sign={} blocks={}", b.strands(), b.sign(), b.blocks_string())?;
    writeln!(out, "components   {}", r.components)?;
    writeln!(out, "sigma        {}", r.sigma)?;
    writeln!(out, "Delta(s)     {}", r.alexander.poly_s)?;
    writeln!(out, "degree       {}", r.alexander.degree)?;
    match &r.shape {
        Some(s) => {
            writeln!(out, "symmetric    {}", s.is_symmetric)?;
            writeln!(out, "trapezoidal  {}", s.is_trapezoidal)?;
            match s.stable_length {
                Some(l) => writeln!(out, "stable len   {l}")?,
                None => writeln!(out, "stable len   -")?,
            }
            writeln!(out, "log-concave  {}", s.is_log_concave)?;
        }
        None => writeln!(out, "shape        - (split closure)")?,
    }
    let scope = if r.is_knot() { "knot" } else { "link" };
    writeln!(
        out,
        "verdict      {} ({scope})",
        if holds { "trapezoidal, l <= |sigma|" } else { "FAILS" }
    )?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("altbraid: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
