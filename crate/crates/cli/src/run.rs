//! Command dispatch: input loading, verb execution, verification
//! orchestration (with deterministic thread fan-out), and the exit-code
//! taxonomy.

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use clap::Parser;
use rand::rngs::SmallRng;
use rand::SeedableRng;

use chevalley_core::constants::full_table;
use chevalley_core::oracle::{frame_for, k_rel_frame_signs, verify_against_oracle, OracleReport};
use chevalley_core::rootsys::build_root_system;
use chevalley_core::verify::{
    identities_exhaustive, identities_sampled, jacobi_exhaustive_strided, jacobi_sampled,
    splitting_sampled, splitting_suite, strings_suite, BracketTable,
};
use chevalley_core::weyl::enumerate_elements;
use chevalley_core::{CartanMatrix, Error, RootSystem, SignTable, StructureTable};

use crate::args::{Cli, Command, CommonArgs, VerifyArgs};
use crate::formats;
use crate::formats::SuiteRow;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Exhaustive Jacobi is affordable up to this basis size (root count plus
/// rank); above it the sweep samples.
const JACOBI_EXHAUSTIVE_LIMIT: usize = 64;
/// Random basis triples for the sampled Jacobi sweep.
const JACOBI_SAMPLES: usize = 1_000_000;
const JACOBI_SEED: u64 = 0xC0FF_EE00;
/// Splitting and identity suites enumerate the Weyl group up to this many
/// elements (covers every rank ≤ 3 group), and sample beyond it.
const WEYL_ENUMERATION_CAP: usize = 60;
const SPLITTING_SAMPLES: usize = 40;
const SPLITTING_SEED: u64 = 0x5EED_0001;
const IDENTITY_SAMPLES: usize = 20_000;
const IDENTITY_SEED: u64 = 0x5EED_0002;

/// A failed run, already classified for the exit code.
#[derive(Debug)]
pub enum Failure {
    /// The command line or the type name did not parse.
    Parse(String),
    /// The input data was invalid or unusable.
    Input(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Input(_) => EXIT_INPUT,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Input(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownTypeName(_) => Failure::Parse(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Rendered output plus the exit code it should carry.
#[derive(Debug)]
pub struct Outcome {
    pub rendered: String,
    pub exit: i32,
}

/// Full entry point: parse, execute, write, map to an exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land here too; only real parse
            // errors are failures.
            let failed = e.use_stderr();
            let _ = e.print();
            return if failed { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let out_path = cli.command.common().out.clone();
    match execute(&cli.command) {
        Ok(outcome) => {
            if let Some(path) = out_path {
                if let Err(e) = fs::write(&path, &outcome.rendered) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_INPUT;
                }
            } else {
                print!("{}", outcome.rendered);
            }
            outcome.exit
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

/// Executes one parsed command and renders its output.
pub fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    let sys = load_system(cmd.common())?;
    let format = cmd.common().format;
    match cmd {
        Command::Roots(_) => {
            Ok(Outcome { rendered: formats::render_roots(&sys, format), exit: EXIT_OK })
        }
        Command::Basis(_) => {
            let mut signs = SignTable::new(&sys);
            if let Ok(fr) = frame_for(&sys) {
                signs.set_k_rel_frame(k_rel_frame_signs(&sys, &signs, &fr)?);
            }
            Ok(Outcome { rendered: formats::render_basis(&sys, &signs, format), exit: EXIT_OK })
        }
        Command::Table(_) => {
            let signs = SignTable::new(&sys);
            let table = full_table(&sys, &signs)?;
            Ok(Outcome { rendered: formats::render_table(&sys, &table, format), exit: EXIT_OK })
        }
        Command::Verify(v) => run_verify(&sys, v),
    }
}

/// Builds the root system from the positional name or the Cartan file.
pub fn load_system(common: &CommonArgs) -> Result<RootSystem, Failure> {
    let cartan = match (&common.type_name, &common.cartan) {
        (Some(name), None) => CartanMatrix::from_name(name)?,
        (None, Some(path)) => parse_cartan_file(path)?,
        // clap enforces exactly one; reaching here is a wiring bug.
        _ => return Err(Failure::Parse(String::from("expected a type name or --cartan"))),
    };
    Ok(build_root_system(cartan)?)
}

/// Reads a Cartan matrix file: whitespace-separated integers, the rank
/// first, then the rank×rank entries row by row.
fn parse_cartan_file(path: &Path) -> Result<CartanMatrix, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let mut tokens = Vec::new();
    for tok in text.split_whitespace() {
        let v: i64 = tok
            .parse()
            .map_err(|_| Failure::Input(format!("not an integer in Cartan file: {tok:?}")))?;
        tokens.push(v);
    }
    let Some((&first, rest)) = tokens.split_first() else {
        return Err(Failure::Input(String::from("empty Cartan file")));
    };
    if first <= 0 {
        return Err(Failure::Input(format!("rank must be positive, got {first}")));
    }
    let rank = first as usize;
    if rest.len() != rank * rank {
        return Err(Failure::Input(format!(
            "expected {} entries after the rank, found {}",
            rank * rank,
            rest.len()
        )));
    }
    let entries: Vec<Vec<i64>> = rest.chunks(rank).map(<[i64]>::to_vec).collect();
    Ok(CartanMatrix::new(entries)?)
}

fn worker_threads(requested: Option<usize>) -> usize {
    requested
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
        .max(1)
}

/// Runs the requested (or all applicable) suites and renders the report.
/// Exit is 0 only when every checked identity held.
fn run_verify(sys: &RootSystem, v: &VerifyArgs) -> Result<Outcome, Failure> {
    let signs = SignTable::new(sys);
    let run_all = v.run_all();
    let threads = worker_threads(v.threads);

    let need_table = run_all || v.jacobi || v.strings || v.oracle;
    let table = if need_table { Some(full_table(sys, &signs)?) } else { None };
    let table_ref = table.as_ref();

    let mut suites: Vec<SuiteRow> = Vec::new();
    let mut oracle: Option<OracleReport> = None;

    if run_all || v.jacobi {
        let bt = BracketTable::new(sys, table_ref.expect("table built for jacobi"))?;
        suites.push(jacobi_fanout(sys, &bt, threads).into());
    }

    if run_all || v.oracle {
        match frame_for(sys) {
            Ok(fr) => {
                oracle = Some(verify_against_oracle(
                    sys,
                    &signs,
                    table_ref.expect("table built for oracle"),
                    &fr,
                )?);
            }
            // Without an explicit request, types outside the matrix frames
            // simply skip the oracle.
            Err(e) if v.oracle => return Err(Failure::Input(e.to_string())),
            Err(_) => {}
        }
    }

    if run_all || v.splitting {
        if enumerate_elements(sys, WEYL_ENUMERATION_CAP).is_ok() {
            suites.push(splitting_suite(sys, &signs, WEYL_ENUMERATION_CAP)?.into());
            suites.push(identities_exhaustive(sys, &signs, WEYL_ENUMERATION_CAP)?.into());
        } else {
            let mut rng = SmallRng::seed_from_u64(SPLITTING_SEED);
            suites.push(splitting_sampled(sys, &signs, &mut rng, SPLITTING_SAMPLES)?.into());
            let mut rng = SmallRng::seed_from_u64(IDENTITY_SEED);
            suites.push(identities_sampled(sys, &signs, &mut rng, IDENTITY_SAMPLES).into());
        }
    }

    if run_all || v.strings {
        suites.push(strings_suite(sys, &signs, table_ref.expect("table built for strings"))?.into());
    }

    let ok = suites.iter().all(|s| s.failures == 0)
        && oracle.as_ref().is_none_or(OracleReport::is_clean);
    let rendered = formats::render_verify(&suites, oracle.as_ref(), ok, v.common.format);
    Ok(Outcome { rendered, exit: if ok { EXIT_OK } else { EXIT_VERIFY } })
}

/// One deterministic Jacobi sweep, fanned out over `threads` workers:
/// strided exhaustive triples for small bases, split fixed-seed samples for
/// large ones. Checked counts are independent of the thread count.
fn jacobi_fanout(
    sys: &RootSystem,
    bt: &BracketTable,
    threads: usize,
) -> chevalley_core::verify::SuiteReport {
    if bt.basis_size() <= JACOBI_EXHAUSTIVE_LIMIT {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (1..threads)
                .map(|t| scope.spawn(move || jacobi_exhaustive_strided(sys, bt, t, threads)))
                .collect();
            let mut report = jacobi_exhaustive_strided(sys, bt, 0, threads);
            for h in handles {
                report.absorb(h.join().expect("jacobi worker panicked"));
            }
            report
        })
    } else {
        let quota = |t: usize| JACOBI_SAMPLES / threads + usize::from(t < JACOBI_SAMPLES % threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (1..threads)
                .map(|t| {
                    scope.spawn(move || {
                        let mut rng = SmallRng::seed_from_u64(JACOBI_SEED ^ t as u64);
                        jacobi_sampled(sys, bt, &mut rng, quota(t))
                    })
                })
                .collect();
            let mut rng = SmallRng::seed_from_u64(JACOBI_SEED);
            let mut report = jacobi_sampled(sys, bt, &mut rng, quota(0));
            for h in handles {
                report.absorb(h.join().expect("jacobi worker panicked"));
            }
            report
        })
    }
}

/// Applies the verify exit policy to an externally built table: used by
/// tests to confirm that a corrupted table maps to the verification exit
/// code through exactly the production path.
pub fn verify_exit_for_table(sys: &RootSystem, table: &StructureTable) -> Result<i32, Failure> {
    let bt = BracketTable::new(sys, table)?;
    let report = jacobi_fanout(sys, &bt, 1);
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_VERIFY })
}
