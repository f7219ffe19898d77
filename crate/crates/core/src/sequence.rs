//! Score sequences and the two feasibility conditions.
//!
//! Condition I: every subset `J` of scores sums to at least `C(|J|, 2)`, with
//! equality for the full set. For a sorted sequence the smallest `k` scores are
//! the tightest subset of size `k`, so only prefixes need checking.
//!
//! Condition II: `d_i + d_{n+1-i} = n - 1` for every `i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A non-empty, non-decreasing list of non-negative rationals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScoreSequence {
    entries: Vec<Rational>,
}

impl ScoreSequence {
    /// Strict constructor: rejects empty, negative or unsorted input.
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        Self::validate_entries(&entries)?;
        if let Some(k) = entries.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!(
                "scores must be non-decreasing: entry {} ({}) exceeds entry {} ({})",
                k + 1,
                entries[k],
                k + 2,
                entries[k + 1]
            )));
        }
        Ok(ScoreSequence { entries })
    }

    /// Sorts the input and returns the permutation used: `perm[k]` is the
    /// 0-based position in `entries` of the `k`-th smallest score. The sort is
    /// stable, so equal scores keep their input order.
    pub fn normalized(entries: Vec<Rational>) -> Result<(Self, Vec<usize>)> {
        Self::validate_entries(&entries)?;
        let mut perm: Vec<usize> = (0..entries.len()).collect();
        perm.sort_by(|&a, &b| entries[a].cmp(&entries[b]));
        let sorted = perm.iter().map(|&k| entries[k].clone()).collect();
        Ok((ScoreSequence { entries: sorted }, perm))
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Rational::integer(v)).collect())
    }

    fn validate_entries(entries: &[Rational]) -> Result<()> {
        if entries.is_empty() {
            return Err(Error::Invalid("score sequence must have at least one entry".into()));
        }
        if let Some(k) = entries.iter().position(Rational::is_negative) {
            return Err(Error::Invalid(format!(
                "scores must be non-negative: entry {} is {}",
                k + 1,
                entries[k]
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.entries[k]
    }

    /// The entries as integers, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(Rational::to_i64).collect()
    }

    /// `(n - 1) / 2`, the score every vertex has in a regular tournament.
    pub fn midpoint(&self) -> Rational {
        Rational::new(self.len() as i64 - 1, 2)
    }
}

/// Outcome of checking both conditions on a sorted sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// `s_k = d_1 + ... + d_k - C(k, 2)` for `k = 1..n`.
    pub prefix_slacks: Vec<Rational>,
    #[serde(rename = "condition_I")]
    pub condition_i: bool,
    #[serde(rename = "condition_II")]
    pub condition_ii: bool,
    /// 1-based `k` of the first prefix with negative slack, or `n` when the
    /// only failure is a non-zero total.
    pub first_violation: Option<usize>,
}

impl ConditionReport {
    pub fn both_hold(&self) -> bool {
        self.condition_i && self.condition_ii
    }
}

pub fn prefix_slacks(d: &ScoreSequence) -> Vec<Rational> {
    let mut acc = Rational::zero();
    d.entries()
        .iter()
        .enumerate()
        .map(|(k, x)| {
            acc += x;
            &acc - Rational::choose2(k + 1)
        })
        .collect()
}

pub fn check_condition_i(d: &ScoreSequence) -> ConditionReport {
    let slacks = prefix_slacks(d);
    let first_violation = slacks
        .iter()
        .position(Rational::is_negative)
        .or_else(|| (!slacks[slacks.len() - 1].is_zero()).then_some(slacks.len() - 1))
        .map(|k| k + 1);
    ConditionReport {
        prefix_slacks: slacks,
        condition_i: first_violation.is_none(),
        condition_ii: check_condition_ii(d),
        first_violation,
    }
}

pub fn check_condition_ii(d: &ScoreSequence) -> bool {
    let target = Rational::integer(d.len() as i64 - 1);
    let e = d.entries();
    e.iter().zip(e.iter().rev()).all(|(a, b)| a + b == target)
}

/// Condition I restricted to the prefixes `k <= floor(n/2)` plus the total.
/// Equivalent to [`check_condition_i`] whenever Condition II holds.
pub fn check_condition_i_lower_half(d: &ScoreSequence) -> bool {
    let slacks = prefix_slacks(d);
    let half = d.len() / 2;
    slacks[..half].iter().all(|s| !s.is_negative()) && slacks[slacks.len() - 1].is_zero()
}

/// Condition I for integer scores given in any order.
pub(crate) fn integer_condition_i(scores: &[i64]) -> bool {
    let mut sorted = scores.to_vec();
    sorted.sort_unstable();
    let mut acc: i64 = 0;
    for (k, &s) in sorted.iter().enumerate() {
        acc += s;
        let k = k as i64 + 1;
        if acc < k * (k - 1) / 2 {
            return false;
        }
    }
    let n = sorted.len() as i64;
    acc == n * (n - 1) / 2
}
