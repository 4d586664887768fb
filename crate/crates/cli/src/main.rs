//! `fjh`: construct, validate, and analyze fusion rings from the command
//! line, and run the group-side corollary computations.
//!
//! Exit codes: 0 success, 1 validation or input error, 2 not nilpotent,
//! 3 cap exceeded, 4 internal inconsistency.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fjh_core::construct::{
    deligne_product, double_ring_with_seed, morita_factors_bicrossed, pointed_ring,
    rep_ring_with_seed, tambara_yamagami,
};
use fjh_core::grading::universal_grading;
use fjh_core::group::{
    character_table_with_seed, composition_factors_group, is_isomorphic,
    matched_pair_from_factorization, parse_group_spec, parse_perm_group_spec, subgroup_closure,
    zappa_szep, Perm,
};
use fjh_core::ring::{fpdim_with, read_ring, validate, write_ring, DEFAULT_FP_TOLERANCE};
use fjh_core::series::{
    all_composition_series, canonical_composition_series, composition_factors,
    jordan_holder_check, DEFAULT_SERIES_CAP,
};
use fjh_core::Error;

/// Default seed for the character-table class-sum combination; fixed so runs
/// are reproducible without flags.
const DEFAULT_CLI_SEED: u64 = 0x6A5F_1D3C_9B24_E870;
const FP_ITERATION_CAP: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "fjh", version, about = "Fusion ring gradings, nilpotency, and composition series")]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Numeric tolerance for eigenvalue convergence.
    #[arg(long, global = true, default_value_t = DEFAULT_FP_TOLERANCE)]
    tolerance: f64,
    /// Seed for the character-table random combination.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on ring files.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Construct rings from group data and write them to ring files.
    #[command(subcommand)]
    Make(MakeCommand),
    /// Group-side computations.
    #[command(subcommand)]
    Group(GroupCommand),
}

#[derive(Subcommand)]
enum RingCommand {
    /// Check the fusion-ring axioms.
    Validate { ring: PathBuf },
    /// Frobenius-Perron dimensions.
    Fpdim { ring: PathBuf },
    /// Universal grading group and component partition.
    Grading {
        ring: PathBuf,
        /// Also print the Cayley table of the grading group.
        #[arg(long)]
        full: bool,
    },
    /// Composition series (canonical, or all with a Jordan-Hölder verdict).
    Series {
        ring: PathBuf,
        /// Enumerate every composition series and compare factor multisets.
        #[arg(long)]
        all: bool,
        /// Series-count cap for enumeration.
        #[arg(long, default_value_t = DEFAULT_SERIES_CAP)]
        cap: usize,
    },
    /// Composition factor multiset and length.
    Factors { ring: PathBuf },
    /// Compare the composition factors of two rings.
    Compare { left: PathBuf, right: PathBuf },
}

#[derive(Args)]
struct MakeTarget {
    /// Group spec such as `S4`, `C2xC4`, `Q8`, `Dic3`.
    spec: String,
    /// Output ring file.
    #[arg(short, long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum MakeCommand {
    /// Pointed ring of a group.
    Pointed(MakeTarget),
    /// Representation ring of a group.
    Rep(MakeTarget),
    /// Representation ring of the Drinfeld double of a group.
    Double(MakeTarget),
    /// Tambara-Yamagami ring over an abelian group.
    Ty(MakeTarget),
    /// Deligne product of two ring files.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Composition factors of a group.
    Factors { spec: String },
    /// Matched pair from an exact factorization G = F·Γ, and its
    /// Zappa-Szép product. Generators are cycle strings like `(1 2),(1 2 3 4)`.
    ZappaSzep {
        spec: String,
        f_generators: String,
        gamma_generators: String,
    },
    /// Character table.
    Chartable { spec: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or(DEFAULT_CLI_SEED);
    let result = run(&cli, seed);
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotNilpotent { .. } => 2,
        Error::CapExceeded { .. } => 3,
        Error::InternalInconsistency(_) => 4,
        _ => 1,
    }
}

fn run(cli: &Cli, seed: u64) -> fjh_core::Result<ExitCode> {
    match &cli.command {
        Command::Ring(cmd) => run_ring(cmd, cli),
        Command::Make(cmd) => run_make(cmd, cli, seed),
        Command::Group(cmd) => run_group(cmd, cli, seed),
    }
}

fn run_ring(cmd: &RingCommand, cli: &Cli) -> fjh_core::Result<ExitCode> {
    match cmd {
        RingCommand::Validate { ring } => {
            let ring = read_ring(ring)?;
            let report = validate(&ring);
            output::validation(&report, cli.json);
            Ok(if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        RingCommand::Fpdim { ring } => {
            let ring = read_ring(ring)?;
            let data = fpdim_with(&ring, cli.tolerance, FP_ITERATION_CAP)?;
            output::fpdim(&ring, &data, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        RingCommand::Grading { ring, full } => {
            let ring = read_ring(ring)?;
            let grading = universal_grading(&ring)?;
            output::grading(&ring, &grading, *full, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        RingCommand::Series { ring, all, cap } => {
            let ring = read_ring(ring)?;
            if *all {
                let series = all_composition_series(&ring, *cap)?;
                let report = jordan_holder_check(&ring, *cap)?;
                output::all_series(&ring, &series, &report, cli.json);
            } else {
                let record = canonical_composition_series(&ring)?;
                output::series(&ring, &record, cli.json);
            }
            Ok(ExitCode::SUCCESS)
        }
        RingCommand::Factors { ring } => {
            let ring = read_ring(ring)?;
            let factors = composition_factors(&ring)?;
            output::factors(&factors, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        RingCommand::Compare { left, right } => {
            let left_ring = read_ring(left)?;
            let right_ring = read_ring(right)?;
            let lf = composition_factors(&left_ring)?;
            let rf = composition_factors(&right_ring)?;
            output::compare(&lf, &rf, cli.json);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_make(cmd: &MakeCommand, cli: &Cli, seed: u64) -> fjh_core::Result<ExitCode> {
    let (ring, out) = match cmd {
        MakeCommand::Pointed(t) => (pointed_ring(&parse_group_spec(&t.spec)?), &t.out),
        MakeCommand::Rep(t) => (
            rep_ring_with_seed(&parse_group_spec(&t.spec)?, seed)?,
            &t.out,
        ),
        MakeCommand::Double(t) => (
            double_ring_with_seed(&parse_group_spec(&t.spec)?, seed)?,
            &t.out,
        ),
        MakeCommand::Ty(t) => (tambara_yamagami(&parse_group_spec(&t.spec)?)?, &t.out),
        MakeCommand::Product { left, right, out } => {
            let l = read_ring(left)?;
            let r = read_ring(right)?;
            (deligne_product(&l, &r), out)
        }
    };
    write_ring(out, &ring)?;
    if cli.json {
        println!(
            "{}",
            serde_json::json!({
                "schema": "fjh/1",
                "written": out,
                "rank": ring.rank(),
            })
        );
    } else {
        println!("wrote rank-{} ring to {}", ring.rank(), out.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn run_group(cmd: &GroupCommand, cli: &Cli, seed: u64) -> fjh_core::Result<ExitCode> {
    match cmd {
        GroupCommand::Factors { spec } => {
            let group = parse_group_spec(spec)?;
            let factors = composition_factors_group(&group)?;
            output::group_factors(&group, &factors, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        GroupCommand::ZappaSzep {
            spec,
            f_generators,
            gamma_generators,
        } => {
            let pg = parse_perm_group_spec(spec)?;
            let degree = pg.perms[0].degree();
            let locate = |gens: &str| -> fjh_core::Result<Vec<usize>> {
                Perm::parse_generator_list(gens, degree)?
                    .into_iter()
                    .map(|p| {
                        pg.index_of(&p).ok_or_else(|| {
                            Error::Parse(format!(
                                "permutation {} is not an element of {spec}",
                                p.cycle_string()
                            ))
                        })
                    })
                    .collect()
            };
            let f = subgroup_closure(&pg.group, &locate(f_generators)?);
            let gamma = subgroup_closure(&pg.group, &locate(gamma_generators)?);
            let mp = matched_pair_from_factorization(&pg.group, &f, &gamma)?;
            let product = zappa_szep(&mp)?;
            let factors = morita_factors_bicrossed(&mp)?;
            let iso = is_isomorphic(&product, &pg.group);
            output::zappa(&product, iso, &factors, cli.json);
            Ok(ExitCode::SUCCESS)
        }
        GroupCommand::Chartable { spec } => {
            let group = parse_group_spec(spec)?;
            let table = character_table_with_seed(&group, seed)?;
            output::chartable(&group, &table, cli.json);
            Ok(ExitCode::SUCCESS)
        }
    }
}
