//! Rational approximation that preserves both feasibility conditions.
//!
//! Scores below the midpoint `(n-1)/2` in the lower half are nudged upward by
//! less than `1/m`, walking downward from the last such index so that the
//! result stays strictly increasing there. The upper half is rebuilt as the
//! mirror image `n - 1 - out_{n+1-i}`, so Condition II holds by construction,
//! and raising lower-half scores only increases the prefix sums that
//! Condition I depends on.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::blowup::realize_self_converse_rational;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::{check_condition_i, ScoreSequence};
use crate::tournament::{GeneralisedTournament, VertexBijection};

/// Audit record of one call to [`approximate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproximationTrace {
    /// 1-based index of the last lower-half score below the midpoint, if any.
    pub n_prime: Option<usize>,
    pub m: u64,
    /// Open interval used for index `k + 1`, for `k = 0..n_prime`.
    pub intervals: Vec<(Rational, Rational)>,
    /// Value picked for index `k + 1`, for `k = 0..n_prime`.
    pub picks: Vec<Rational>,
}

/// The rational with the smallest denominator strictly between `lo` and `hi`
/// (smallest numerator among equal denominators).
///
/// Found by descending the Stern–Brocot tree through the continued fraction
/// expansions of the endpoints.
pub fn choose_rational_in_interval(lo: &Rational, hi: &Rational) -> Result<Rational> {
    if lo >= hi {
        return Err(Error::EmptyInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    Ok(simplest_between(lo.clone(), hi.clone()))
}

fn simplest_between(lo: Rational, hi: Rational) -> Rational {
    // lo < hi throughout; each round peels off one continued-fraction term.
    let mut lo = lo;
    let mut hi = hi;
    // value = a + 1/(b + 1/(... + 1/tail)), accumulated as a stack of terms
    let mut terms: Vec<BigInt> = Vec::new();
    let tail: Rational = loop {
        let floor = lo.floor();
        let next_int = Rational::from_bigint(&floor + 1);
        if next_int < hi {
            break next_int;
        }
        let base = Rational::from_bigint(floor.clone());
        let a = &lo - &base;
        let b = &hi - &base;
        if a.is_zero() {
            // simplest in (0, b) is 1/k with k = floor(1/b) + 1
            let k = b.recip().floor() + 1;
            terms.push(floor);
            break Rational::from_bigint(k);
        }
        terms.push(floor);
        // x in (a, b)  <=>  1/x in (1/b, 1/a)
        lo = b.recip();
        hi = a.recip();
    };
    terms.into_iter().rev().fold(tail, |acc, t| Rational::from_bigint(t) + acc.recip())
}

/// Replaces `d` by a nearby sequence satisfying Conditions I and II whose
/// lower-half entries below the midpoint are simple rationals.
///
/// Every entry moves by less than `1/m`. If no lower-half entry is below the
/// midpoint, all entries equal it and `d` is returned unchanged.
pub fn approximate(d: &ScoreSequence, m: u64) -> Result<(ScoreSequence, ApproximationTrace)> {
    if m == 0 {
        return Err(Error::Invalid("approximation parameter m must be positive".into()));
    }
    let report = check_condition_i(d);
    if !report.both_hold() {
        return Err(Error::ConditionViolation(format!(
            "approximation needs Conditions I and II (I: {}, II: {})",
            report.condition_i, report.condition_ii
        )));
    }

    let n = d.len();
    let mid = d.midpoint();
    let n_prime = (1..=n / 2).rev().find(|&k| *d.get(k - 1) < mid);
    let Some(n_prime) = n_prime else {
        let trace = ApproximationTrace { n_prime: None, m, intervals: Vec::new(), picks: Vec::new() };
        return Ok((d.clone(), trace));
    };

    let step = Rational::one() / Rational::from_bigint(BigInt::from(m));
    let mut out: Vec<Rational> = vec![Rational::zero(); n];
    for slot in out.iter_mut().take(n.div_ceil(2)).skip(n_prime) {
        *slot = mid.clone();
    }

    let mut intervals = vec![(Rational::zero(), Rational::zero()); n_prime];
    let mut ceiling = mid.clone();
    for k in (0..n_prime).rev() {
        let lo = d.get(k).clone();
        let reach = &lo + &step;
        let hi = if reach < ceiling { reach } else { ceiling.clone() };
        let pick = choose_rational_in_interval(&lo, &hi)?;
        intervals[k] = (lo, hi);
        ceiling = pick.clone();
        out[k] = pick;
    }

    let top = Rational::integer(n as i64 - 1);
    for i in n.div_ceil(2)..n {
        out[i] = &top - &out[n - 1 - i];
    }

    let picks = out[..n_prime].to_vec();
    let approx = ScoreSequence::new(out)
        .map_err(|e| Error::Internal(format!("approximation is not a valid sequence: {e}")))?;
    if !check_condition_i(&approx).both_hold() {
        return Err(Error::Internal("approximation broke Condition I or II".into()));
    }
    Ok((approx, ApproximationTrace { n_prime: Some(n_prime), m, intervals, picks }))
}

/// Approximates `d` within `1/m` and realizes the approximation exactly as a
/// self-converse generalised tournament. Returns the tournament, its witness
/// and the approximated sequence.
pub fn realize_real(
    d: &ScoreSequence,
    m: u64,
    cap: usize,
) -> Result<(GeneralisedTournament, VertexBijection, ScoreSequence)> {
    let (approx, _) = approximate(d, m)?;
    let (g, rho) = realize_self_converse_rational(&approx, cap)?;
    Ok((g, rho, approx))
}
