//! JSON file formats.
//!
//! ```text
//! sequence    {"n": 3, "scores": ["0", "1/2", "5/2"]}
//! tournament  {"n": 2, "weights": [["0", "1/2"], ["1/2", "0"]]}
//! witness     {"image": [2, 1]}                      (1-based)
//! plan        {"n": 2, "m": 2, "targets": [[1, 2], [1, 2]]}
//! ```
//!
//! Rationals are written as canonical `p/q` strings (`p` alone for integers).
//! On input, decimal strings and JSON integers are accepted as well.

use serde::{Deserialize, Serialize};

use crate::approx::ApproximationTrace;
use crate::error::{Error, Result};
use crate::oracle::CharacterizationReport;
use crate::rational::Rational;
use crate::sequence::ScoreSequence;
use crate::tournament::{GeneralisedTournament, VertexBijection};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub n: usize,
    pub scores: Vec<Rational>,
}

impl SequenceJson {
    pub fn from_sequence(d: &ScoreSequence) -> Self {
        SequenceJson { n: d.len(), scores: d.entries().to_vec() }
    }

    /// Entries in file order, after checking the declared length.
    pub fn into_entries(self) -> Result<Vec<Rational>> {
        if self.n != self.scores.len() {
            return Err(Error::DimensionMismatch(format!(
                "declared n = {} but {} scores given",
                self.n,
                self.scores.len()
            )));
        }
        Ok(self.scores)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TournamentJson {
    pub n: usize,
    pub weights: Vec<Vec<Rational>>,
}

impl TournamentJson {
    pub fn from_tournament(g: &GeneralisedTournament) -> Self {
        TournamentJson { n: g.n(), weights: g.rows().map(<[Rational]>::to_vec).collect() }
    }

    pub fn into_tournament(self) -> Result<GeneralisedTournament> {
        if self.n != self.weights.len() {
            return Err(Error::DimensionMismatch(format!(
                "declared n = {} but {} rows given",
                self.n,
                self.weights.len()
            )));
        }
        GeneralisedTournament::new(self.weights)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub image: Vec<usize>,
}

impl WitnessJson {
    pub fn from_bijection(rho: &VertexBijection) -> Self {
        WitnessJson { image: rho.one_based() }
    }

    pub fn into_bijection(self) -> Result<VertexBijection> {
        VertexBijection::from_one_based(&self.image)
    }
}

/// Output of `realize` when everything goes to one document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationJson {
    pub tournament: TournamentJson,
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproximationJson {
    pub sequence: SequenceJson,
    pub trace: ApproximationTrace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReportJson {
    pub n: usize,
    pub equal: bool,
    pub only_in_conditions: Vec<Vec<Rational>>,
    pub only_in_bruteforce: Vec<Vec<Rational>>,
}

impl From<&CharacterizationReport> for OracleReportJson {
    fn from(r: &CharacterizationReport) -> Self {
        let lists = |v: Vec<&ScoreSequence>| v.into_iter().map(|s| s.entries().to_vec()).collect();
        OracleReportJson {
            n: r.n,
            equal: r.equal,
            only_in_conditions: lists(r.only_in_conditions()),
            only_in_bruteforce: lists(r.only_in_bruteforce()),
        }
    }
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

/// Raw score entries of a sequence file, in file order.
pub fn parse_sequence(text: &str) -> Result<Vec<Rational>> {
    parse_json::<SequenceJson>(text, "sequence")?.into_entries()
}

/// Reads a tournament file, or the `tournament` member of a realization
/// document.
pub fn parse_tournament(text: &str) -> Result<GeneralisedTournament> {
    let value: serde_json::Value = parse_json(text, "tournament")?;
    let inner = match value.get("tournament") {
        Some(t) => t.clone(),
        None => value,
    };
    let t: TournamentJson =
        serde_json::from_value(inner).map_err(|e| Error::Parse(format!("tournament: {e}")))?;
    t.into_tournament()
}

pub fn parse_witness(text: &str) -> Result<VertexBijection> {
    parse_json::<WitnessJson>(text, "witness")?.into_bijection()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("wire types always serialize");
    s.push('\n');
    s
}
