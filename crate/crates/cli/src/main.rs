//! Command-line driver for the sympart library.
//!
//! Exit codes: 0 for positive results, 1 for negative domain outcomes
//! (false predicates, rejections, undetermined verdicts, failed identity
//! campaigns), 2 for malformed input or violated preconditions.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sympart::dual::Membership;
use sympart::sampling;
use sympart::wire::{LocalDoc, PointDoc, PsiDoc};
use sympart::{
    bound_type_i, bound_type_ii, bound_type_iii, bound_type_iv, build_local_data, bv_dual_of,
    check_uunr, classify_type, enumerate_jord_sn, eq424_identity, is_special_symplectic,
    is_symplectic, orbit_partition, qr_primes, sp_collapse, sp_expand, squarefree_class, verdict,
    verify_duality_identity, ArthurParameter, LocalSatakeData, Partition, SquareClass,
    UnitaryDualPoint, VanishingBound, Verdict, VerdictMode,
};

#[derive(Parser)]
#[command(
    name = "sympart",
    version,
    about = "Partition combinatorics of symplectic nilpotent orbits"
)]
struct Cli {
    /// Mirror every result as a JSON object on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symplectic collapse of a partition with even total.
    Collapse { partition: String },
    /// Symplectic expansion of a symplectic partition.
    Expand { partition: String },
    /// Transpose (conjugate) of a partition.
    Transpose { partition: String },
    /// Test whether a partition is symplectic.
    IsSymplectic { partition: String },
    /// Test whether a symplectic partition is special.
    IsSpecial { partition: String },
    /// Barbasch-Vogan dual of an odd-orthogonal partition.
    BvDual { partition: String },
    /// Arthur-parameter operations on a JSON document.
    Arthur {
        #[command(subcommand)]
        command: ArthurCommand,
    },
    /// Unramified-dual classification data operations.
    Dual {
        #[command(subcommand)]
        command: DualCommand,
    },
    /// Vanishing bound for one of the four core types.
    Bound(BoundArgs),
    /// Vanishing verdict for a candidate partition against a bound.
    Verdict {
        #[arg(long)]
        candidate: String,
        #[arg(long)]
        bound: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Run the duality-identity campaign (exhaustive, plus optional random).
    VerifyIdentity {
        /// Exhaustive over all points of ambient rank <= N.
        #[arg(long)]
        n: u32,
        /// Number of additional random points.
        #[arg(long, default_value_t = 0)]
        random: u64,
        /// Seed for the random campaign.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rank bound for random points.
        #[arg(long, default_value_t = 30)]
        max_n: u32,
    },
    /// Check the transpose-of-collapse identity for a shifted size list.
    Eq424 {
        /// Strictly increasing list, odd length >= 5, e.g. "0,1,2,3,4".
        #[arg(long)]
        m_list: String,
    },
    /// Odd primes making every given square class a quadratic residue.
    QrPrimes {
        /// Comma-separated nonzero integers, e.g. "2,3,5".
        #[arg(long)]
        classes: String,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Subcommand)]
enum ArthurCommand {
    /// Validate a parameter document.
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
    /// The partition attached to a parameter.
    Partition {
        #[arg(long)]
        file: PathBuf,
    },
    /// The global vanishing bound of a parameter.
    Bound {
        #[arg(long)]
        file: PathBuf,
    },
    /// Assemble the local unitary-dual point from parameter + Satake data.
    Local {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        local: PathBuf,
    },
}

#[derive(Subcommand)]
enum DualCommand {
    /// List all strongly negative data of rank n.
    EnumerateSn {
        #[arg(long)]
        n: u32,
    },
    /// Membership test for a point document.
    Check {
        #[arg(long)]
        file: PathBuf,
    },
    /// Orbit partition of a point document.
    Orbit {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long = "type", value_enum)]
    kind: TypeArg,
    /// Strictly increasing m-list for type I, e.g. "0,1,2".
    #[arg(long)]
    m_list: Option<String>,
    /// Strictly increasing n-list for type II, e.g. "0,1".
    #[arg(long)]
    n_list: Option<String>,
    /// Point document for types III and IV.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "II", alias = "ii")]
    II,
    #[value(name = "III", alias = "iii")]
    III,
    #[value(name = "IV", alias = "iv")]
    IV,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Dominance,
    Lex,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let json = cli.json;
    match &cli.command {
        Command::Collapse { partition } => {
            let p: Partition = partition.parse()?;
            emit_partition(json, &sp_collapse(&p)?)
        }
        Command::Expand { partition } => {
            let p: Partition = partition.parse()?;
            emit_partition(json, &sp_expand(&p)?)
        }
        Command::Transpose { partition } => {
            let p: Partition = partition.parse()?;
            emit_partition(json, &p.transpose())
        }
        Command::IsSymplectic { partition } => {
            let p: Partition = partition.parse()?;
            emit_bool(json, is_symplectic(&p))
        }
        Command::IsSpecial { partition } => {
            let p: Partition = partition.parse()?;
            emit_bool(json, is_special_symplectic(&p)?)
        }
        Command::BvDual { partition } => {
            let p: Partition = partition.parse()?;
            emit_partition(json, &bv_dual_of(&p)?)
        }
        Command::Arthur { command } => run_arthur(json, command),
        Command::Dual { command } => run_dual(json, command),
        Command::Bound(args) => run_bound(json, args),
        Command::Verdict {
            candidate,
            bound,
            mode,
        } => {
            let candidate: Partition = candidate.parse()?;
            let bound: Partition = bound.parse()?;
            let mode = match mode {
                ModeArg::Dominance => VerdictMode::Dominance,
                ModeArg::Lex => VerdictMode::Lex,
            };
            let outcome = verdict(&candidate, &bound, mode)?;
            if json {
                println!("{}", json!({ "verdict": outcome.to_string() }));
            } else {
                println!("{outcome}");
            }
            Ok(exit_if(outcome != Verdict::NotDetermined))
        }
        Command::VerifyIdentity {
            n,
            random,
            seed,
            max_n,
        } => run_verify_identity(json, *n, *random, *seed, *max_n),
        Command::Eq424 { m_list } => {
            let list = parse_u32_list(m_list)?;
            emit_bool(json, eq424_identity(&list)?)
        }
        Command::QrPrimes {
            classes,
            count,
            limit,
        } => {
            let classes = parse_classes(classes)?;
            let primes = qr_primes(&classes, *count, *limit)?;
            if json {
                println!("{}", json!({ "primes": primes }));
            } else {
                let shown: Vec<String> = primes.iter().map(u64::to_string).collect();
                println!("{}", shown.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_arthur(json: bool, command: &ArthurCommand) -> anyhow::Result<ExitCode> {
    match command {
        ArthurCommand::Validate { file } => {
            let psi = load_psi(file)?;
            match psi.validate() {
                Ok(()) => {
                    if json {
                        println!("{}", json!({ "accept": true }));
                    } else {
                        println!("accept");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(err) => {
                    if json {
                        println!("{}", json!({ "accept": false, "reason": err.to_string() }));
                    } else {
                        println!("reject: {err}");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        ArthurCommand::Partition { file } => {
            let psi = load_psi(file)?;
            emit_partition(json, psi.psi_partition()?.partition())
        }
        ArthurCommand::Bound { file } => {
            let psi = load_psi(file)?;
            emit_partition(json, &psi.fc_bound()?)
        }
        ArthurCommand::Local { file, local } => {
            let psi = load_psi(file)?;
            let local_doc: LocalDoc = serde_json::from_str(&fs::read_to_string(local)?)?;
            let local = LocalSatakeData::try_from(&local_doc)?;
            let point = build_local_data(&psi, &local)?;
            let orbit = orbit_partition(&point);
            let repr = classify_type(&point);
            if json {
                let doc = PointDoc::from(&point);
                println!(
                    "{}",
                    json!({
                        "point": doc,
                        "type": repr.to_string(),
                        "orbit": orbit.parts(),
                    })
                );
            } else {
                println!("type: {repr}");
                println!("orbit: {orbit}");
                print_point(&point);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_point(point: &UnitaryDualPoint) {
    let doc = PointDoc::from(point);
    println!("n: {}", doc.n);
    if doc.e.is_empty() {
        println!("e: (empty)");
    } else {
        for t in &doc.e {
            println!("e: ({}, {}, {})", t.character, t.m, t.alpha);
        }
    }
    println!(
        "strongly negative: lambda0={:?} trivial={:?}",
        doc.negative.strongly_negative.lambda0_sizes, doc.negative.strongly_negative.trivial_sizes
    );
    if doc.negative.gl_blocks.is_empty() {
        println!("gl blocks: (none)");
    } else {
        for b in &doc.negative.gl_blocks {
            println!("gl block: ({}, {})", b.character, b.size);
        }
    }
}

fn run_dual(json: bool, command: &DualCommand) -> anyhow::Result<ExitCode> {
    match command {
        DualCommand::EnumerateSn { n } => {
            let all = enumerate_jord_sn(*n)?;
            if json {
                let items: Vec<serde_json::Value> = all
                    .iter()
                    .map(|d| {
                        json!({
                            "lambda0_sizes": d.lambda0_sizes(),
                            "trivial_sizes": d.trivial_sizes(),
                        })
                    })
                    .collect();
                println!("{}", json!({ "count": all.len(), "data": items }));
            } else {
                for d in &all {
                    println!(
                        "lambda0={:?} trivial={:?}",
                        d.lambda0_sizes(),
                        d.trivial_sizes()
                    );
                }
                println!("count: {}", all.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        DualCommand::Check { file } => {
            let point = load_point(file)?;
            let outcome = check_uunr(&point);
            if json {
                match outcome {
                    Membership::Accept => println!("{}", json!({ "accept": true })),
                    Membership::Reject(c) => {
                        println!("{}", json!({ "accept": false, "condition": c.to_string() }))
                    }
                }
            } else {
                println!("{outcome}");
            }
            Ok(exit_if(outcome.is_accept()))
        }
        DualCommand::Orbit { file } => {
            let point = load_point(file)?;
            emit_partition(json, &orbit_partition(&point))
        }
    }
}

fn run_bound(json: bool, args: &BoundArgs) -> anyhow::Result<ExitCode> {
    let bound: VanishingBound = match args.kind {
        TypeArg::I => {
            let list = required_list(&args.m_list, "--m-list")?;
            bound_type_i(&list)?
        }
        TypeArg::II => {
            let list = required_list(&args.n_list, "--n-list")?;
            bound_type_ii(&list)?
        }
        TypeArg::III => bound_type_iii(&load_point(required_file(&args.file)?)?)?,
        TypeArg::IV => bound_type_iv(&load_point(required_file(&args.file)?)?)?,
    };
    if json {
        println!(
            "{}",
            json!({ "bound": bound.bound.parts(), "source": format!("{:?}", bound.source) })
        );
    } else {
        println!("{}", bound.bound);
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify_identity(
    json: bool,
    n: u32,
    random: u64,
    seed: u64,
    max_n: u32,
) -> anyhow::Result<ExitCode> {
    let mut failures = 0u64;
    let exhaustive = sampling::exhaustive_identity_points(n)?;
    for point in &exhaustive {
        if !verify_duality_identity(point)? {
            failures += 1;
            eprintln!("identity failed on {:?}", PointDoc::from(point));
        }
    }
    let mut rng = sampling::seeded_rng(seed);
    for _ in 0..random {
        let point = sampling::random_identity_point(&mut rng, max_n);
        if !verify_duality_identity(&point)? {
            failures += 1;
            eprintln!("identity failed on {:?}", PointDoc::from(&point));
        }
    }
    if json {
        println!(
            "{}",
            json!({
                "exhaustive_points": exhaustive.len(),
                "random_points": random,
                "failures": failures,
            })
        );
    } else {
        println!(
            "checked {} exhaustive points (rank <= {n}) and {random} random points (rank <= {max_n}): {failures} failures",
            exhaustive.len()
        );
    }
    Ok(exit_if(failures == 0))
}

fn emit_partition(json: bool, p: &Partition) -> anyhow::Result<ExitCode> {
    if json {
        println!(
            "{}",
            json!({ "partition": p.parts(), "display": p.to_string() })
        );
    } else {
        println!("{p}");
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_bool(json: bool, value: bool) -> anyhow::Result<ExitCode> {
    if json {
        println!("{}", json!({ "value": value }));
    } else {
        println!("{value}");
    }
    Ok(exit_if(value))
}

fn exit_if(positive: bool) -> ExitCode {
    if positive {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_psi(file: &PathBuf) -> anyhow::Result<ArthurParameter> {
    let doc: PsiDoc = serde_json::from_str(&fs::read_to_string(file)?)?;
    Ok(ArthurParameter::try_from(&doc)?)
}

fn load_point(file: &PathBuf) -> anyhow::Result<UnitaryDualPoint> {
    let doc: PointDoc = serde_json::from_str(&fs::read_to_string(file)?)?;
    Ok(UnitaryDualPoint::try_from(&doc)?)
}

fn required_file(file: &Option<PathBuf>) -> anyhow::Result<&PathBuf> {
    file.as_ref()
        .ok_or_else(|| anyhow::anyhow!("--file is required for this bound type"))
}

fn required_list(list: &Option<String>, flag: &str) -> anyhow::Result<Vec<u32>> {
    let text = list
        .as_ref()
        .ok_or_else(|| anyhow::anyhow!("{flag} is required for this bound type"))?;
    parse_u32_list(text)
}

fn parse_u32_list(text: &str) -> anyhow::Result<Vec<u32>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|token| {
            u32::from_str(token.trim()).map_err(|_| anyhow::anyhow!("bad entry {token:?}"))
        })
        .collect()
}

fn parse_classes(text: &str) -> anyhow::Result<Vec<SquareClass>> {
    text.split(',')
        .map(|token| {
            let value: i64 = token
                .trim()
                .parse()
                .map_err(|_| anyhow::anyhow!("bad class {token:?}"))?;
            Ok(squarefree_class(value)?)
        })
        .collect()
}
