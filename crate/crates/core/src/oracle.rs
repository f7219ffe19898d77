//! Exhaustive ground truth for small vertex counts.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::sequence::{check_condition_i, ScoreSequence};
use crate::tournament::{find_self_converse_witness, scores_of, Tournament};

/// Largest `n` the enumeration accepts (`2^C(6,2) = 32768` tournaments).
pub const MAX_ENUMERATION_N: usize = 6;

/// Every labeled tournament on `n` vertices, once each.
///
/// Unordered pairs are indexed lexicographically, `(1,2), (1,3), ..., (n-1,n)`,
/// and tournament number `t` orients pair `k` from its lower to its higher
/// label when bit `k` of `t` is set.
pub struct TournamentEnumerator {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for TournamentEnumerator {
    type Item = Tournament;

    fn next(&mut self) -> Option<Tournament> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        Some(tournament_from_mask(self.n, mask))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for TournamentEnumerator {}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    // pairs (a, b), a < b, before (i, j)
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn tournament_from_mask(n: usize, mask: u64) -> Tournament {
    Tournament::from_beats(n, |i, j| mask >> pair_index(n, i, j) & 1 == 1)
}

pub fn enumerate_tournaments(n: usize) -> Result<TournamentEnumerator> {
    if n == 0 {
        return Err(Error::Invalid("need at least one vertex".into()));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::ResourceLimit { what: "enumeration vertex count", size: n.to_string(), cap: MAX_ENUMERATION_N });
    }
    let pairs = n * (n - 1) / 2;
    Ok(TournamentEnumerator { n, next: 0, end: 1u64 << pairs })
}

/// All non-decreasing integer sequences of length `n` satisfying both
/// conditions.
pub fn integer_sequences_satisfying_i_ii(n: usize) -> BTreeSet<ScoreSequence> {
    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    let total = (n * (n - 1) / 2) as i64;
    let mut cur = Vec::with_capacity(n);
    collect_sequences(n, total, 0, &mut cur, &mut |s| {
        let d = ScoreSequence::from_integers(s).expect("generated sequences are sorted and non-negative");
        if check_condition_i(&d).both_hold() {
            out.insert(d);
        }
    });
    out
}

/// Non-decreasing sequences of `n` integers in `[0, n-1]` summing to `total`.
pub(crate) fn collect_sequences(
    n: usize,
    total: i64,
    min: i64,
    cur: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    let left = n - cur.len();
    if left == 0 {
        if total == 0 {
            emit(cur);
        }
        return;
    }
    let max = n as i64 - 1;
    if max * (left as i64) < total {
        return;
    }
    for v in min..=max {
        // the remaining entries are all at least v
        if v * left as i64 > total {
            break;
        }
        cur.push(v);
        collect_sequences(n, total - v, v, cur, emit);
        cur.pop();
    }
}

/// Sorted score sequences of the tournaments on `n` vertices that are
/// isomorphic to their converse.
pub fn bruteforce_self_converse_sequences(n: usize) -> Result<BTreeSet<ScoreSequence>> {
    let mut out = BTreeSet::new();
    for t in enumerate_tournaments(n)? {
        let g = t.as_generalised();
        if find_self_converse_witness(g, n)?.is_some() {
            out.insert(scores_of(g).sorted);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub n: usize,
    pub equal: bool,
    pub by_conditions: BTreeSet<ScoreSequence>,
    pub by_bruteforce: BTreeSet<ScoreSequence>,
}

impl CharacterizationReport {
    pub fn only_in_conditions(&self) -> Vec<&ScoreSequence> {
        self.by_conditions.difference(&self.by_bruteforce).collect()
    }

    pub fn only_in_bruteforce(&self) -> Vec<&ScoreSequence> {
        self.by_bruteforce.difference(&self.by_conditions).collect()
    }
}

/// Compares the condition-based and brute-force sets for `n` vertices.
pub fn verify_characterization(n: usize) -> Result<CharacterizationReport> {
    let by_bruteforce = bruteforce_self_converse_sequences(n)?;
    let by_conditions = integer_sequences_satisfying_i_ii(n);
    Ok(CharacterizationReport { n, equal: by_conditions == by_bruteforce, by_conditions, by_bruteforce })
}
