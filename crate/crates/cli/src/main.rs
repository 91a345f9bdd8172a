use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use tvar_core::classify::{self, FloorBound, H1Total, Status};
use tvar_core::io::{self as tio, Format};
use tvar_core::{section_ring, toric, Error, PolyhedralDivisor, Properness};

#[derive(Parser)]
#[command(name = "tvar", version, about = "Singularity criteria for polyhedral divisors on curves")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report.
    Classify {
        /// Assert that the variety has only isolated singularities.
        #[arg(long)]
        isolated: bool,
        /// Classify every `*.json` file in a directory.
        #[arg(long, conflicts_with = "input")]
        batch: Option<PathBuf>,
        /// Input document, `-` for stdin.
        #[arg(required_unless_present = "batch")]
        input: Option<PathBuf>,
    },
    /// Properness of the divisor.
    Proper { input: PathBuf },
    /// Rational singularities.
    Rational { input: PathBuf },
    /// Cohen-Macaulay property.
    Cm {
        #[arg(long)]
        isolated: bool,
        input: PathBuf,
    },
    /// Gorenstein criterion (rank one, projective base).
    Gorenstein { input: PathBuf },
    /// Elliptic and minimal elliptic singularities.
    Elliptic { input: PathBuf },
    /// Dimensions of H^1 of the floor divisors.
    H1 {
        #[arg(long)]
        m_max: Option<u64>,
        input: PathBuf,
    },
    /// Floor-degree profile.
    Profile {
        #[arg(long)]
        m_max: u64,
        input: PathBuf,
    },
    /// Toric cone of a divisor on affine space.
    Toric { input: PathBuf },
    /// Hilbert function, generators and relations of the section ring.
    Ring {
        #[arg(long)]
        max_degree: u64,
        input: PathBuf,
    },
}

const EXIT_OTHER: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_UNKNOWN: u8 = 4;

/// A run that failed with an exit code and message, or produced an outcome.
type Ran = Result<Outcome, (u8, String)>;

/// A rendered result and its exit status.
struct Outcome {
    value: Value,
    code: u8,
}

impl Outcome {
    fn ok(value: Value) -> Outcome {
        Outcome { value, code: 0 }
    }

    fn flag(value: Value, status: Status) -> Outcome {
        let code = if status == Status::Unknown { EXIT_UNKNOWN } else { 0 };
        Outcome { value, code }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Overflow => EXIT_OTHER,
        _ => EXIT_INVALID,
    }
}

fn read_input(path: &Path) -> Result<String, (u8, String)> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map(|_| text).map_err(|e| (EXIT_OTHER, format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<PolyhedralDivisor, (u8, String)> {
    let text = read_input(path)?;
    let err = |e: Error| (exit_code(&e), e.to_string());
    tio::parse_input(&text).map_err(err)?.to_divisor().map_err(err)
}

fn classify_one(path: &Path, isolated: bool) -> Result<Outcome, (u8, String)> {
    let d = load(path)?;
    let r = classify::classify_report(&d, isolated).map_err(|e| (exit_code(&e), e.to_string()))?;
    let code = match r.proper {
        Properness::NotProper { .. } => EXIT_INVALID,
        _ if r.has_unknown() => EXIT_UNKNOWN,
        _ => 0,
    };
    Ok(Outcome { value: tio::report_json(&r), code })
}

fn run(cmd: &Command) -> Result<Outcome, (u8, String)> {
    let err = |e: Error| (exit_code(&e), e.to_string());
    match cmd {
        Command::Classify { isolated, batch: Some(dir), .. } => {
            let mut files: Vec<PathBuf> = fs::read_dir(dir)
                .map_err(|e| (EXIT_OTHER, format!("cannot read {}: {e}", dir.display())))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            files.sort();
            let results: Vec<(String, Ran)> = files
                .par_iter()
                .map(|p| (p.file_name().unwrap_or_default().to_string_lossy().into_owned(), classify_one(p, *isolated)))
                .collect();
            let mut out = serde_json::Map::new();
            let mut code = 0;
            for (name, r) in results {
                match r {
                    Ok(o) => {
                        code = code.max(o.code);
                        out.insert(name, o.value);
                    }
                    Err((c, msg)) => {
                        code = code.max(c);
                        out.insert(name, json!({"error": msg}));
                    }
                }
            }
            Ok(Outcome { value: Value::Object(out), code })
        }
        Command::Classify { isolated, input, .. } => {
            classify_one(input.as_deref().expect("clap requires an input"), *isolated)
        }
        Command::Proper { input } => {
            let p = load(input)?.is_proper();
            let code = match p {
                Properness::Proper => 0,
                Properness::NotProper { .. } => EXIT_INVALID,
                Properness::Unknown { .. } => EXIT_UNKNOWN,
            };
            Ok(Outcome { value: tio::properness_json(&p), code })
        }
        Command::Rational { input } => {
            let v = classify::rational_singularities(&load(input)?).map_err(err)?;
            Ok(Outcome::flag(tio::verdict_json(&v), v.status))
        }
        Command::Cm { isolated, input } => {
            let v = classify::cohen_macaulay(&load(input)?, *isolated).map_err(err)?;
            Ok(Outcome::flag(tio::verdict_json(&v), v.status))
        }
        Command::Gorenstein { input } => {
            let (data, v) = classify::gorenstein(&load(input)?).map_err(err)?;
            Ok(Outcome::flag(tio::gorenstein_json(Some(&data), &v), v.status))
        }
        Command::Elliptic { input } => {
            let e = classify::elliptic_singularity(&load(input)?).map_err(err)?;
            let mut v = tio::verdict_json(&e.verdict);
            v["minimal"] = json!(e.minimal.as_str());
            v["bound"] = json!(e.bound);
            let status = if e.minimal == Status::Unknown { Status::Unknown } else { e.verdict.status };
            Ok(Outcome::flag(v, status))
        }
        Command::H1 { m_max, input } => {
            let h = classify::h1_report(&load(input)?, *m_max).map_err(err)?;
            let status = if h.total == H1Total::Unknown { Status::Unknown } else { Status::Yes };
            Ok(Outcome::flag(tio::h1_json(&h), status))
        }
        Command::Profile { m_max, input } => {
            let d = load(input)?;
            let p = classify::floor_degree_profile(&d, *m_max).map_err(err)?;
            let mut v = tio::profile_json(&p);
            if d.base().is_projective() {
                let bound = match classify::decide_floor_bound(&d, -1).map_err(err)? {
                    FloorBound::HoldsEverywhere => json!("holds"),
                    FloorBound::Witness(m) => json!({"witness_m": tio::witness_value(&m)}),
                };
                v["at_least_minus_one"] = bound;
            }
            Ok(Outcome::ok(v))
        }
        Command::Toric { input } => {
            let c = toric::toric_cone(&load(input)?).map_err(err)?;
            let kind = toric::cone_diagnostics(&c.cone);
            Ok(Outcome::ok(tio::toric_json(&c, &kind)))
        }
        Command::Ring { max_degree, input } => {
            let d = load(input)?;
            let hilbert = section_ring::hilbert_series(&d, *max_degree).map_err(err)?;
            let pres = section_ring::relations(&d, *max_degree).map_err(err)?;
            Ok(Outcome::ok(tio::ring_json(&hilbert, &pres)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Text => Format::Text,
    };
    match run(&cli.command) {
        Ok(o) => {
            let mut text = tio::emit(&o.value, format);
            if format == Format::Json {
                text.push('\n');
            }
            // a closed pipe downstream is not an error worth reporting
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(o.code)
        }
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
