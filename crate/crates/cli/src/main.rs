//! Command-line front end for the blockedit library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or validation
//! error, 3 malformed input.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use blockedit::channel::{apply_pattern, random_pattern, ErrorPattern};
use blockedit::code::encode;
use blockedit::decode::decode;
use blockedit::verify::{
    bounds_report, check_decoder_exhaustive_jobs, max_code_search, scaling_table, stress,
};
use blockedit::{BitString, CodeParams, Error, Family};

#[derive(Parser)]
#[command(name = "blockedit", version, about = "Per-block deletion/insertion detecting codes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Args, Clone)]
struct CodeArgs {
    /// Code family: del, ins1, ins2 or mix1.
    #[arg(long)]
    family: Family,
    /// Deletions per block (del only; ignored with a warning otherwise).
    #[arg(long)]
    delta: Option<usize>,
    /// Block length.
    #[arg(long)]
    ell: usize,
    /// Codeword length.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a message into a codeword.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Message bits.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        message: Option<String>,
        #[arg(long)]
        input: Option<String>,
    },
    /// Decode per-block counts from a received string.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        received: Option<String>,
        #[arg(long)]
        input: Option<String>,
    },
    /// Apply an error pattern to a codeword.
    Corrupt {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        codeword: Option<String>,
        #[arg(long)]
        input: Option<String>,
        /// Pattern such as `1=del@3,2=ins@0:1`.
        #[arg(long, conflicts_with = "random", required_unless_present = "random")]
        pattern: Option<String>,
        /// Draw a pattern from --seed instead.
        #[arg(long, requires = "seed")]
        random: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Exhaustively check the decoder against the attribution oracle.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Shift probe site S of the decoder by O positions, for mutation testing.
        #[arg(long, hide = true, num_args = 2, value_names = ["SITE", "OFFSET"], allow_hyphen_values = true)]
        mutate: Option<Vec<isize>>,
    },
    /// Converse redundancy bounds for deletion-detecting codes.
    Bounds {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
    },
    /// Exact maximum code size by exhaustive search (tiny n only).
    Maxcode {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        block_decodable: bool,
    },
    /// Seeded random trials at large n, plus a decode-time scaling table.
    Stress {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Skip the scaling table.
        #[arg(long)]
        no_scaling: bool,
    },
}

// Writes to stdout, ignoring a closed pipe (e.g. output piped into head).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

/// Failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedReceived(_) | Error::Parse(_) => 3,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

type CliResult = Result<u8, Fail>;

fn params(code: &CodeArgs) -> Result<CodeParams, Fail> {
    let delta = if code.family.has_fixed_budget() {
        if code.delta.is_some() {
            eprintln!("warning: --delta is ignored for family {}", code.family);
        }
        0
    } else {
        code.delta
            .ok_or_else(|| Fail(2, format!("--delta is required for family {}", code.family)))?
    };
    Ok(CodeParams::new(code.family, delta, code.ell, code.n)?)
}

/// Parses one 0/1 string; anything else is malformed input.
fn parse_bits(text: &str) -> Result<BitString, Fail> {
    let t = text.trim();
    if t.is_empty() || !t.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Fail(3, format!("not a 0/1 string: {t:?}")));
    }
    Ok(t.parse().expect("checked 0/1"))
}

/// Reads bit strings from a file: one per line, '#' lines and blank lines
/// skipped.
fn read_bits_file(path: &str) -> Result<Vec<BitString>, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail(2, format!("{path}: {e}")))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_bits)
        .collect()
}

fn inputs(inline: &Option<String>, file: &Option<String>) -> Result<Vec<BitString>, Fail> {
    match (inline, file) {
        (Some(s), _) => Ok(vec![parse_bits(s)?]),
        (None, Some(path)) => read_bits_file(path),
        (None, None) => Err(Fail(2, "no input given".into())),
    }
}

fn print_json(value: &serde_json::Value) {
    outln!("{}", serde_json::to_string_pretty(value).expect("json"));
}

fn run(cli: Cli) -> CliResult {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Encode {
            code,
            message,
            input,
        } => {
            let p = params(&code)?;
            for msg in inputs(&message, &input)? {
                let x = encode(&p, &msg)?;
                if json {
                    print_json(&json!({"params": p, "message": msg, "codeword": x}));
                } else {
                    outln!("{x}");
                }
            }
            Ok(0)
        }
        Command::Decode {
            code,
            received,
            input,
        } => {
            let p = params(&code)?;
            for y in inputs(&received, &input)? {
                let v = decode(&p, &y)?;
                if json {
                    print_json(&json!({
                        "params": p,
                        "received": y,
                        "deletions": v.deletions(),
                        "insertions": v.insertions(),
                    }));
                } else {
                    outln!("{v}");
                }
            }
            Ok(0)
        }
        Command::Corrupt {
            code,
            codeword,
            input,
            pattern,
            random,
            seed,
        } => {
            let p = params(&code)?;
            for (k, x) in inputs(&codeword, &input)?.into_iter().enumerate() {
                let pat = match (&pattern, random) {
                    (Some(text), _) => ErrorPattern::parse(&p, text)?,
                    (None, true) => {
                        random_pattern(&p, seed.expect("clap requires --seed") + k as u64)
                    }
                    (None, false) => return Err(Fail(2, "need --pattern or --random".into())),
                };
                let y = apply_pattern(&p, &x, &pat)?;
                if json {
                    print_json(&json!({
                        "params": p,
                        "codeword": x,
                        "pattern": pat.to_string(),
                        "received": y,
                    }));
                } else {
                    outln!("{y}");
                    if random {
                        outln!("pattern {pat}");
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            code,
            jobs,
            mutate,
        } => {
            let p = params(&code)?;
            let report = match mutate.as_deref() {
                Some(&[site, offset]) => {
                    let shift = blockedit::decode::ProbeShift {
                        site: usize::try_from(site)
                            .map_err(|_| Fail(2, "probe site must be >= 0".into()))?,
                        offset,
                    };
                    check_decoder_exhaustive_jobs(
                        &p,
                        |y| blockedit::decode::decode_shifted(&p, y, shift),
                        jobs,
                    )?
                }
                _ => check_decoder_exhaustive_jobs(&p, |y| decode(&p, y), jobs)?,
            };
            if json {
                outln!("{}", report.to_json());
            } else {
                out!("{report}");
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Bounds { delta, ell, n } => {
            let r = bounds_report(delta, ell, n)?;
            let b = r.bounds.expect("bounds report carries bounds");
            if json {
                outln!("{}", r.to_json());
            } else {
                outln!("bound1 {:.5} bits, cap {}", b.bound1, b.size_cap(b.bound1));
                let note = if b.thm2_applies { "" } else { " (needs n/ell >= 3)" };
                outln!(
                    "thm2 {:.5} bits, cap {}{note}",
                    b.bound_thm2,
                    b.size_cap(b.bound_thm2)
                );
                outln!(
                    "thm3 {:.5} bits, cap {} (block-by-block decodable)",
                    b.bound_thm3,
                    b.size_cap(b.bound_thm3)
                );
                outln!("epsilon {:.5}", b.epsilon);
                outln!(
                    "construction redundancy {} bits, size {}",
                    b.construction_redundancy,
                    1u64 << (n - b.construction_redundancy)
                );
            }
            Ok(0)
        }
        Command::Maxcode {
            ell,
            n,
            delta,
            block_decodable,
        } => {
            let r = max_code_search(ell, n, delta, block_decodable)?;
            if json {
                outln!("{}", r.to_json());
            } else {
                out!("{r}");
            }
            Ok(if r.passed { 0 } else { 1 })
        }
        Command::Stress {
            code,
            trials,
            seed,
            no_scaling,
        } => {
            let p = params(&code)?;
            let r = stress(&p, seed, trials)?;
            let table = if no_scaling {
                Vec::new()
            } else {
                let ns: Vec<usize> = [4, 2, 1]
                    .iter()
                    .map(|d| p.n() / d)
                    .filter(|n| n % p.ell() == 0 && *n >= 2 * p.ell())
                    .collect();
                scaling_table(p.family(), p.delta(), p.ell(), &ns, seed, 20)?
            };
            if json {
                print_json(&json!({"stress": r, "scaling": table}));
            } else {
                outln!(
                    "{p}: {} trials, {} mismatches, {:.3e} bits/s",
                    r.trials, r.mismatches, r.throughput
                );
                if let Some(m) = &r.first_mismatch {
                    outln!("first mismatch: trial {} pattern {} ({})", m.trial, m.pattern, m.detail);
                }
                if !table.is_empty() {
                    outln!("{:>10} {:>14} {:>8}", "n", "decode (us)", "ratio");
                    for row in &table {
                        let ratio = row.ratio.map_or("-".to_string(), |x| format!("{x:.2}"));
                        outln!("{:>10} {:>14.2} {:>8}", row.n, row.seconds * 1e6, ratio);
                    }
                }
            }
            Ok(if r.mismatches == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
