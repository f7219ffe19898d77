//! Score sequences of (self-converse) generalised tournaments.
//!
//! The crate decides, with exact rational arithmetic, whether a sequence is
//! the score sequence of a generalised tournament (Condition I) and of a
//! self-converse one (Conditions I and II), and builds explicit realizations:
//!
//! * [`realize`]: 0/1 tournaments for integer sequences, optionally forced to
//!   be self-converse through a given involution.
//! * [`blowup`]: rational sequences are scaled to integers, realized on a
//!   blown-up vertex set and averaged back over clusters.
//! * [`approx`]: rational approximation of sequences that keeps both
//!   conditions intact, followed by exact realization.
//! * [`oracle`]: exhaustive enumeration of small tournaments as ground truth.

pub mod approx;
pub mod blowup;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod rational;
pub mod realize;
pub mod sequence;
pub mod tournament;
pub mod wire;

pub use error::{Error, Result};
pub use rational::Rational;
pub use sequence::{check_condition_i, check_condition_ii, ConditionReport, ScoreSequence};
pub use tournament::{
    converse, find_self_converse_witness, is_self_converse_witness, scores_of, GeneralisedTournament, Scores,
    Tournament, VertexBijection,
};
