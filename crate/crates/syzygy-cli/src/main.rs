//! `syzygy` — homological checks for bound quiver algebras.
//!
//! Exit codes: 0 when the requested verdict was computed, 1 when a
//! verifying mode (`fuzz`, `verify`) found a violation, 2 on input
//! errors (including argument parsing, which clap also maps to 2).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use syzygy_cli::commands::{
    cmd_check, cmd_export, cmd_fuzz, cmd_resolve, CheckArgs, CliError, Condition, FuzzArgs,
    FuzzSuite, ResolveArgs,
};
use syzygy_cli::verify;
use syzygy_core::conditions::{Side, DEFAULT_CAP};
use syzygy_core::resolutions::Direction;

#[derive(Parser)]
#[command(name = "syzygy", version, about = "Homological checks for bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConditionArg {
    Rn,
    Gnk,
    Gorenstein,
    Torsionfree,
    Syzygy,
    Cogenerator,
}

impl From<ConditionArg> for Condition {
    fn from(c: ConditionArg) -> Condition {
        match c {
            ConditionArg::Rn => Condition::Rn,
            ConditionArg::Gnk => Condition::Gnk,
            ConditionArg::Gorenstein => Condition::Gorenstein,
            ConditionArg::Torsionfree => Condition::Torsionfree,
            ConditionArg::Syzygy => Condition::Syzygy,
            ConditionArg::Cogenerator => Condition::Cogenerator,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemma21,
    Prop22,
    Resolving,
}

impl From<SuiteArg> for FuzzSuite {
    fn from(s: SuiteArg) -> FuzzSuite {
        match s {
            SuiteArg::Lemma21 => FuzzSuite::Lemma21,
            SuiteArg::Prop22 => FuzzSuite::Prop22,
            SuiteArg::Resolving => FuzzSuite::Resolving,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a minimal (co)resolution, one tab-separated line per degree.
    Resolve {
        /// `corpus:<name>`, an algebra file, or a module file.
        input: String,
        /// Resolve by injective envelopes.
        #[arg(long, conflicts_with = "projective")]
        injective: bool,
        /// Resolve by projective covers.
        #[arg(long)]
        projective: bool,
        /// Maximum number of terms to compute.
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Which regular module an algebra input stands for.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Decide a homological condition and print a certificate.
    Check {
        #[arg(value_enum)]
        condition: ConditionArg,
        /// `corpus:<name>`, an algebra file, or a module file.
        input: String,
        /// Degree parameter of the condition.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Offset for the flat-dimension bounds of `gnk`.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Side for `gnk`.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Search cap for dimension hunts.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Assert the module is already a syzygy of this depth.
        #[arg(long)]
        provenance: Option<usize>,
    },
    /// Run a randomized property sweep; exit 1 on any violation.
    Fuzz {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Master seed; defaults to $SYZYGY_SEED, then a fixed constant.
        #[arg(long)]
        seed: Option<u64>,
        /// Restrict to one algebra instead of sweeping the corpus.
        #[arg(long)]
        algebra: Option<String>,
        /// Worker threads; results never depend on this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the full acceptance checklist; exit 1 unless everything passes.
    Verify {
        /// Master seed; defaults to $SYZYGY_SEED, then a fixed constant.
        #[arg(long)]
        seed: Option<u64>,
        /// Tamper with one corpus entry first (negative-path testing).
        #[arg(long)]
        corrupt_fact: Option<String>,
    },
    /// Print a corpus algebra in the text format.
    Export {
        /// Corpus name, with or without the `corpus:` prefix.
        name: String,
    },
}

const DEFAULT_SEED: u64 = 0x53595A59;

fn master_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("SYZYGY_SEED") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|_| CliError::Input(format!("SYZYGY_SEED is not a u64: `{text}`"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::Resolve { input, injective, projective, depth, side } => {
            let direction = match (injective, projective) {
                (true, false) => Direction::Injective,
                (false, true) => Direction::Projective,
                _ => return Err(CliError::Input("choose --injective or --projective".into())),
            };
            let out = cmd_resolve(&ResolveArgs { input, direction, depth, side: side.into() })?;
            print!("{out}");
            Ok(0)
        }
        Cmd::Check { condition, input, n, k, side, cap, provenance } => {
            let out = cmd_check(&CheckArgs {
                condition: condition.into(),
                input,
                n,
                k,
                side: side.into(),
                cap,
                provenance,
            })?;
            print!("{out}");
            Ok(0)
        }
        Cmd::Fuzz { suite, trials, seed, algebra, jobs } => {
            let outcome = cmd_fuzz(&FuzzArgs {
                suite: suite.into(),
                trials,
                seed: master_seed(seed)?,
                algebra,
                jobs,
            })?;
            print!("{}", outcome.stdout);
            eprintln!("elapsed_ms\t{}", outcome.elapsed_ms);
            Ok(u8::from(outcome.violations > 0))
        }
        Cmd::Verify { seed, corrupt_fact } => {
            let report = verify::run_all(master_seed(seed)?, corrupt_fact.as_deref())?;
            print!("{}", verify::render(&report));
            for c in &report.criteria {
                eprintln!("# criterion {}: {} ms", c.index, c.elapsed_ms);
            }
            Ok(u8::from(!report.all_pass))
        }
        Cmd::Export { name } => {
            print!("{}", cmd_export(&name)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
