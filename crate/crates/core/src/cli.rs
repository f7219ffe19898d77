//! Command-line front end.
//!
//! Exit codes: 0 success, 1 infeasible (a condition fails, no witness, sets
//! differ), 2 unreadable or malformed input, 3 size cap exceeded, 4 internal
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use crate::approx::approximate;
use crate::blowup::{blowup_scores, lcm_denominator, moon_realize, realize_self_converse_rational, symmetrize};
use crate::error::Error;
use crate::oracle::verify_characterization;
use crate::rational::Rational;
use crate::realize::DEFAULT_SYMMETRIC_CAP;
use crate::sequence::{check_condition_i, ScoreSequence};
use crate::tournament::{
    find_self_converse_witness, is_self_converse_witness, scores_of, GeneralisedTournament, VertexBijection,
    DEFAULT_WITNESS_CAP,
};
use crate::wire::{
    parse_sequence, parse_tournament, to_json, ApproximationJson, OracleReportJson, RealizationJson, SequenceJson,
    TournamentJson, WitnessJson,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "selfconverse", version, about = "Score sequences of (self-converse) generalised tournaments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check Conditions I and II for a score sequence.
    Check {
        /// Sequence JSON file, or `-` for standard input.
        input: PathBuf,
        /// Sort unsorted input instead of rejecting it.
        #[arg(long)]
        sort: bool,
    },
    /// Build a generalised tournament with the given scores.
    Realize {
        input: PathBuf,
        /// Realization method. Without it, the blow-up pipeline is used when it
        /// fits under the cap and the symmetrized Moon construction otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Largest blown-up vertex count the self-converse search may use.
        #[arg(long, default_value_t = DEFAULT_SYMMETRIC_CAP)]
        cap: usize,
        /// Write the tournament JSON here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Write the witness JSON here (with --output; default is standard output).
        #[arg(long)]
        witness_output: Option<PathBuf>,
        #[arg(long)]
        sort: bool,
    },
    /// Approximate a sequence by simple rationals within 1/m, keeping Conditions I and II.
    Approximate {
        input: PathBuf,
        #[arg(short = 'm')]
        m: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        sort: bool,
    },
    /// Print the integer blow-up plan for a sequence.
    Blowup {
        input: PathBuf,
        /// Blow-up factor; defaults to the least common denominator.
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long)]
        sort: bool,
    },
    /// Search for an isomorphism from a tournament onto its converse.
    Witness {
        /// Tournament JSON file (a realization document is accepted too).
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
        cap: usize,
    },
    /// Compare brute-force self-converse score sequences with Conditions I and II.
    Oracle {
        #[arg(long = "n")]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Blow-up, self-converse integer realization, cluster averaging.
    Pipeline,
    /// Moon realization followed by symmetrization through the reversal.
    Symmetrize,
    /// Moon realization only; no self-converseness.
    Moon,
}

/// What a command produced: exit code and the text for each stream.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome { code, stdout: String::new(), stderr }
    }

    fn note(mut self, message: impl AsRef<str>) -> Self {
        self.stderr.push_str(message.as_ref());
        self.stderr.push('\n');
        self
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Invalid(_) | Error::DimensionMismatch(_) => EXIT_PARSE,
        Error::ConditionViolation(_) | Error::NonIntegral(_) | Error::EmptyInterval { .. } => EXIT_INFEASIBLE,
        Error::ResourceLimit { .. } => EXIT_CAP,
        Error::SearchExhausted(_) | Error::Internal(_) => EXIT_INTERNAL,
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::fail(exit_code(&e), format!("error: {e}"))
    }
}

type CmdResult = std::result::Result<Outcome, Outcome>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text.trim_end())
            }
        }
    }
}

pub fn execute(command: Command) -> Outcome {
    let result = match command {
        Command::Check { input, sort } => cmd_check(&input, sort),
        Command::Realize { input, method, cap, output, witness_output, sort } => {
            cmd_realize(&input, method, cap, output.as_deref(), witness_output.as_deref(), sort)
        }
        Command::Approximate { input, m, output, sort } => cmd_approximate(&input, m, output.as_deref(), sort),
        Command::Blowup { input, m, output, sort } => cmd_blowup(&input, m, output.as_deref(), sort),
        Command::Witness { input, cap } => cmd_witness(&input, cap),
        Command::Oracle { n } => cmd_oracle(n),
    };
    result.unwrap_or_else(|failure| failure)
}

fn read_input(path: &Path) -> std::result::Result<String, Outcome> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: reading standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: reading {}: {e}", path.display())))?
    };
    if text.trim().is_empty() {
        return Err(Outcome::fail(EXIT_PARSE, "error: empty input"));
    }
    Ok(text)
}

/// Reads a sequence file; with `sort`, also returns a note describing the
/// permutation that was applied.
fn load_sequence(path: &Path, sort: bool) -> std::result::Result<(ScoreSequence, Option<String>), Outcome> {
    let entries = parse_sequence(&read_input(path)?)?;
    if sort {
        let (d, perm) = ScoreSequence::normalized(entries)?;
        let one_based: Vec<usize> = perm.iter().map(|k| k + 1).collect();
        let note = (one_based.iter().enumerate().any(|(i, &k)| i + 1 != k))
            .then(|| format!("note: input sorted; sorted vertex k is input entry {one_based:?}[k]"));
        Ok((d, note))
    } else {
        Ok((ScoreSequence::new(entries)?, None))
    }
}

fn emit(text: String, output: Option<&Path>) -> CmdResult {
    match output {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| Outcome::fail(EXIT_PARSE, format!("error: writing {}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn with_note(outcome: Outcome, note: Option<String>) -> Outcome {
    match note {
        Some(n) => outcome.note(n),
        None => outcome,
    }
}

pub fn cmd_check(input: &Path, sort: bool) -> CmdResult {
    let (d, note) = load_sequence(input, sort)?;
    let report = check_condition_i(&d);
    let mut out = Outcome::ok(to_json(&report));
    if !report.both_hold() {
        out.code = EXIT_INFEASIBLE;
    }
    Ok(with_note(out, note))
}

pub fn cmd_realize(
    input: &Path,
    method: Option<Method>,
    cap: usize,
    output: Option<&Path>,
    witness_output: Option<&Path>,
    sort: bool,
) -> CmdResult {
    let (d, note) = load_sequence(input, sort)?;
    let mut notices = Vec::new();

    let (g, witness) = match method {
        Some(Method::Pipeline) => {
            let (g, rho) = realize_self_converse_rational(&d, cap)?;
            (g, Some(rho))
        }
        Some(Method::Symmetrize) => symmetrized_moon(&d)?,
        Some(Method::Moon) => (moon_realize(&d)?, None),
        None => match realize_self_converse_rational(&d, cap) {
            Ok((g, rho)) => (g, Some(rho)),
            Err(Error::ResourceLimit { size, .. }) => {
                notices.push(format!(
                    "note: blow-up needs {size} vertices, above cap {cap}; used the symmetrized Moon construction instead"
                ));
                symmetrized_moon(&d)?
            }
            Err(e) => return Err(e.into()),
        },
    };

    if scores_of(&g).labeled != d.entries() {
        return Err(Error::Internal("realization has the wrong scores".into()).into());
    }
    if let Some(rho) = &witness {
        if !is_self_converse_witness(&g, rho) {
            return Err(Error::Internal("realization failed its witness check".into()).into());
        }
    }

    let tournament = TournamentJson::from_tournament(&g);
    let witness = witness.as_ref().map(WitnessJson::from_bijection);
    let mut out = match output {
        None => emit(to_json(&RealizationJson { tournament, witness }), None)?,
        Some(path) => {
            emit(to_json(&tournament), Some(path))?;
            match witness {
                Some(w) => emit(to_json(&w), witness_output)?,
                None => Outcome::ok(String::new()),
            }
        }
    };
    for n in notices {
        out = out.note(n);
    }
    Ok(with_note(out, note))
}

fn symmetrized_moon(d: &ScoreSequence) -> std::result::Result<(GeneralisedTournament, Option<VertexBijection>), Error> {
    let g = symmetrize(&moon_realize(d)?)?;
    Ok((g, Some(VertexBijection::reversal(d.len()))))
}

pub fn cmd_approximate(input: &Path, m: u64, output: Option<&Path>, sort: bool) -> CmdResult {
    let (d, note) = load_sequence(input, sort)?;
    let (approx, trace) = approximate(&d, m)?;
    let doc = ApproximationJson { sequence: SequenceJson::from_sequence(&approx), trace };
    Ok(with_note(emit(to_json(&doc), output)?, note))
}

pub fn cmd_blowup(input: &Path, m: Option<usize>, output: Option<&Path>, sort: bool) -> CmdResult {
    let (d, note) = load_sequence(input, sort)?;
    let m = match m {
        Some(m) => m,
        None => {
            let lcm = lcm_denominator(&d);
            lcm.to_usize().ok_or_else(|| {
                Outcome::from(Error::ResourceLimit { what: "blow-up factor", size: lcm.to_string(), cap: usize::MAX })
            })?
        }
    };
    let plan = blowup_scores(&d, m)?;
    Ok(with_note(emit(to_json(&plan), output)?, note))
}

pub fn cmd_witness(input: &Path, cap: usize) -> CmdResult {
    let g = parse_tournament(&read_input(input)?)?;
    match find_self_converse_witness(&g, cap)? {
        Some(rho) => Ok(Outcome::ok(to_json(&WitnessJson::from_bijection(&rho)))),
        None => Ok(Outcome::fail(EXIT_INFEASIBLE, "no witness: tournament is not self-converse")),
    }
}

pub fn cmd_oracle(n: usize) -> CmdResult {
    let report = verify_characterization(n)?;
    let mut out = Outcome::ok(to_json(&OracleReportJson::from(&report)));
    if !report.equal {
        out.code = EXIT_INFEASIBLE;
    }
    Ok(out)
}

/// Convenience for tests and callers that build sequences in code.
pub fn sequence_json(entries: &[&str]) -> String {
    let scores: Vec<Rational> = entries.iter().map(|s| s.parse().expect("valid rational")).collect();
    to_json(&SequenceJson { n: scores.len(), scores })
}
