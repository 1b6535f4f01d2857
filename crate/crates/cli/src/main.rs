//! Command-line front end: involutions and statistics on multisegments,
//! the FLOTW correspondence, Mullineux, the crystal commutor, graph export
//! and the exhaustive selfcheck.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 on a failed selfcheck.

use clap::{Parser, Subcommand, ValueEnum};
use multiseg::correspondence::{check_admissible, enumerate_admissible, reconstruct};
use multiseg::fock::f_v;
use multiseg::graph::{generate_fock, generate_infinity};
use multiseg::infinity::{eps_star_vector, eps_vector, sharp, star, tau, weight};
use multiseg::involution::{commutor, mullineux, HighestWeightVertex};
use multiseg::json::{CommutorVertexJson, MultiPartitionJson, MultisegmentJson};
use multiseg::parse::{parse_multicharge, parse_multipartition, parse_multisegment};
use multiseg::selfcheck::run_all;
use multiseg::{CrystalContext, Error, MultiPartition, Multisegment};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "multiseg",
    about = "Crystal combinatorics of aperiodic multisegments in affine type A",
    version
)]
struct Cli {
    /// The quantum parameter e ≥ 2. Required unless JSON input carries it.
    #[arg(long, global = true)]
    e: Option<i64>,

    /// Read the main argument as one JSON object from standard input and
    /// write JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kashiwara involution ψ* (path replay through the hat operators).
    Star { multisegment: Option<String> },
    /// Zelevinsky involution τψ = ♯(ρψ); equals ψ*.
    Tau { multisegment: Option<String> },
    /// Segment reversal ρψ.
    Rho { multisegment: Option<String> },
    /// Two-fold symmetry ψ♯ (path replay with negated residues).
    Sharp { multisegment: Option<String> },
    /// The vector ε_i(ψ) for i = 0..e−1.
    Eps { multisegment: Option<String> },
    /// The vector ε*_i(ψ) for i = 0..e−1.
    Epsstar { multisegment: Option<String> },
    /// The classical weight coordinates wt_i(ψ) for i = 0..e−1.
    Wt { multisegment: Option<String> },
    /// Embed a FLOTW multipartition: f_v(λ).
    Fv {
        #[arg(allow_hyphen_values = true)]
        multipartition: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
    },
    /// Reconstruct the FLOTW preimage: f_v⁻¹(ψ).
    Fvinv {
        multisegment: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
    },
    /// All admissible multicharges for ψ up to a level bound.
    Charges {
        multisegment: Option<String>,
        #[arg(long)]
        max_level: usize,
    },
    /// Generalized Mullineux involution m_l^v(λ).
    Mullineux {
        #[arg(allow_hyphen_values = true)]
        multipartition: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
    },
    /// Crystal commutor σ_{v,v′}(∅⊗λ); prints the swapped vertex as JSON.
    Commutor {
        #[arg(long, allow_hyphen_values = true)]
        left: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        right: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Export a crystal graph up to a rank bound.
    Graph {
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long)]
        rank: usize,
        /// Multicharge (required for --kind fock).
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run every invariant suite and print a pass/fail table.
    Selfcheck {
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Infty,
    Fock,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    SelfcheckFailed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("invalid JSON input: {e}"))
    }
}

fn main() -> ExitCode {
    // Route clap usage errors through exit code 1; code 2 is reserved for
    // a failed selfcheck.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::SelfcheckFailed) => ExitCode::from(2),
    }
}

fn require_e(e: Option<i64>) -> Result<CrystalContext, CliError> {
    let e = e.ok_or_else(|| CliError::Input("--e is required".into()))?;
    Ok(CrystalContext::new(e)?)
}

fn stdin_json<T: serde::de::DeserializeOwned>() -> Result<T, CliError> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::Input(format!("failed to read stdin: {e}")))?;
    Ok(serde_json::from_str(&buf)?)
}

/// A multisegment argument: quoted text, or JSON on stdin (which carries e
/// and must agree with --e when both are given).
fn read_multisegment(
    cli_e: Option<i64>,
    json: bool,
    text: Option<&str>,
) -> Result<(CrystalContext, Multisegment), CliError> {
    if json {
        let parsed: MultisegmentJson = stdin_json()?;
        let (ctx, ms) = parsed.decode()?;
        if let Some(e) = cli_e {
            if e != ctx.e() as i64 {
                return Err(CliError::Input(format!(
                    "--e {e} disagrees with \"e\": {} in the JSON input",
                    ctx.e()
                )));
            }
        }
        Ok((ctx, ms))
    } else {
        let ctx = require_e(cli_e)?;
        let text =
            text.ok_or_else(|| CliError::Input("expected a multisegment argument".into()))?;
        let ms = parse_multisegment(text, &ctx)?;
        Ok((ctx, ms))
    }
}

fn read_multipartition(json: bool, text: Option<&str>) -> Result<MultiPartition, CliError> {
    if json {
        let parsed: MultiPartitionJson = stdin_json()?;
        Ok(parsed.decode()?)
    } else {
        let text =
            text.ok_or_else(|| CliError::Input("expected a multipartition argument".into()))?;
        Ok(parse_multipartition(text)?)
    }
}

fn emit_multisegment(ctx: &CrystalContext, json: bool, ms: &Multisegment) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&MultisegmentJson::encode(ctx, ms)).expect("serializable")
        );
    } else {
        println!("{ms}");
    }
}

fn emit_multipartition(json: bool, mp: &MultiPartition) {
    if json {
        println!(
            "{}",
            serde_json::to_string(&MultiPartitionJson::encode(mp)).expect("serializable")
        );
    } else {
        println!("{mp}");
    }
}

fn vector_line(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn require_aperiodic(ctx: &CrystalContext, ms: &Multisegment) -> Result<(), CliError> {
    if !ms.is_aperiodic(ctx) {
        return Err(CliError::Input(format!(
            "{ms} is not aperiodic (not a crystal vertex)"
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Star { multisegment } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            require_aperiodic(&ctx, &ms)?;
            emit_multisegment(&ctx, cli.json, &star(&ctx, &ms));
        }
        Command::Tau { multisegment } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            require_aperiodic(&ctx, &ms)?;
            emit_multisegment(&ctx, cli.json, &tau(&ctx, &ms));
        }
        Command::Rho { multisegment } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            emit_multisegment(&ctx, cli.json, &ms.rho(&ctx));
        }
        Command::Sharp { multisegment } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            require_aperiodic(&ctx, &ms)?;
            emit_multisegment(&ctx, cli.json, &sharp(&ctx, &ms));
        }
        Command::Eps { multisegment } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            println!("{}", vector_line(&eps_vector(&ctx, &ms)));
        }
        Command::Epsstar { multisegment } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            println!("{}", vector_line(&eps_star_vector(&ctx, &ms)));
        }
        Command::Wt { multisegment } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            println!("{}", weight(&ctx, &ms));
        }
        Command::Fv {
            multipartition,
            charge,
        } => {
            let ctx = require_e(cli.e)?;
            let mp = read_multipartition(cli.json, multipartition.as_deref())?;
            let v = parse_multicharge(charge, &ctx)?;
            let image = f_v(&ctx, &v, &mp)?;
            emit_multisegment(&ctx, cli.json, &image);
        }
        Command::Fvinv {
            multisegment,
            charge,
        } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            let v = parse_multicharge(charge, &ctx)?;
            check_admissible(&ctx, &v, &ms)?;
            let mp = reconstruct(&ctx, &ms, &v)?;
            emit_multipartition(cli.json, &mp);
        }
        Command::Charges {
            multisegment,
            max_level,
        } => {
            let (ctx, ms) = read_multisegment(cli.e, cli.json, multisegment.as_deref())?;
            require_aperiodic(&ctx, &ms)?;
            for v in enumerate_admissible(&ctx, &ms, *max_level) {
                println!("{v}");
            }
        }
        Command::Mullineux {
            multipartition,
            charge,
        } => {
            let ctx = require_e(cli.e)?;
            let mp = read_multipartition(cli.json, multipartition.as_deref())?;
            let v = parse_multicharge(charge, &ctx)?;
            let image = mullineux(&ctx, &v, &mp)?;
            emit_multipartition(cli.json, &image);
        }
        Command::Commutor {
            left,
            right,
            lambda,
        } => {
            let ctx = require_e(cli.e)?;
            let h = if cli.json {
                let parsed: CommutorVertexJson = stdin_json()?;
                parsed.decode(&ctx)?
            } else {
                let left = left
                    .as_deref()
                    .ok_or_else(|| CliError::Input("--left is required".into()))?;
                let right = right
                    .as_deref()
                    .ok_or_else(|| CliError::Input("--right is required".into()))?;
                let lambda = lambda
                    .as_deref()
                    .ok_or_else(|| CliError::Input("--lambda is required".into()))?;
                HighestWeightVertex::new(
                    &ctx,
                    parse_multicharge(left, &ctx)?,
                    parse_multicharge(right, &ctx)?,
                    parse_multipartition(lambda)?,
                )?
            };
            let image = commutor(&ctx, &h);
            println!(
                "{}",
                serde_json::to_string(&CommutorVertexJson::encode(&image)).expect("serializable")
            );
        }
        Command::Graph {
            kind,
            rank,
            charge,
            format,
        } => {
            let ctx = require_e(cli.e)?;
            let (dot, json_out) = match kind {
                GraphKind::Infty => {
                    let g = generate_infinity(&ctx, *rank);
                    (g.to_dot(), g.to_json())
                }
                GraphKind::Fock => {
                    let charge = charge.as_deref().ok_or_else(|| {
                        CliError::Input("--charge is required for fock graphs".into())
                    })?;
                    let v = parse_multicharge(charge, &ctx)?;
                    let g = generate_fock(&ctx, &v, *rank);
                    (g.to_dot(), g.to_json())
                }
            };
            match format {
                GraphFormat::Dot => print!("{dot}"),
                GraphFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string(&json_out).expect("serializable")
                    )
                }
            }
        }
        Command::Selfcheck { rank } => {
            let ctx = require_e(cli.e)?;
            let reports = run_all(&ctx, *rank);
            let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
            let mut all_passed = true;
            for r in &reports {
                let status = if r.passed { "pass" } else { "FAIL" };
                println!("{:width$}  {status}  {}", r.name, r.detail);
                all_passed &= r.passed;
            }
            if !all_passed {
                return Err(CliError::SelfcheckFailed);
            }
        }
    }
    Ok(())
}
