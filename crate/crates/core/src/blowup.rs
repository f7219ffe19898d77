//! Rational score sequences via integer blow-ups.
//!
//! A sequence `d` with common denominator `m` is scaled to an integer score
//! array on `m·n` vertices: vertex `(i, ℓ)` gets `m·d_i` plus its score inside a
//! near-regular cluster of size `m`. An integer tournament realizing that array
//! is shrunk back to `n` vertices by averaging the `m²` arcs between each pair
//! of clusters. When the integer tournament is self-converse through
//! `(i, ℓ) ↦ (n+1-i, m+1-ℓ)`, the averaged one is self-converse through
//! `i ↦ n+1-i`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::realize::{landau_realize_labeled, symmetric_realize};
use crate::sequence::{check_condition_i, check_condition_ii, integer_condition_i, ScoreSequence};
use crate::tournament::{
    is_self_converse_witness, scores_of, GeneralisedTournament, Tournament, VertexBijection,
};

/// Target out-degrees for the blown-up tournament.
///
/// `targets[i][ℓ]` is the score of vertex `(i, ℓ)`, which sits at flat index
/// `i·m + ℓ` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowUpPlan {
    pub n: usize,
    pub m: usize,
    pub targets: Vec<Vec<i64>>,
}

impl BlowUpPlan {
    pub fn vertex_count(&self) -> usize {
        self.n * self.m
    }

    pub fn vertex(&self, cluster: usize, copy: usize) -> usize {
        cluster * self.m + copy
    }

    pub fn flattened(&self) -> Vec<i64> {
        self.targets.iter().flatten().copied().collect()
    }

    /// `(i, ℓ) ↦ (n-1-i, m-1-ℓ)` on flat indices.
    pub fn involution(&self) -> VertexBijection {
        VertexBijection::reversal(self.vertex_count())
    }

    pub fn total_identity_holds(&self) -> bool {
        let big_n = self.vertex_count() as i64;
        self.targets.iter().flatten().sum::<i64>() == big_n * (big_n - 1) / 2
    }

    pub fn pairing_identity_holds(&self) -> bool {
        let top = self.vertex_count() as i64 - 1;
        (0..self.n).all(|i| {
            (0..self.m).all(|l| self.targets[i][l] + self.targets[self.n - 1 - i][self.m - 1 - l] == top)
        })
    }
}

/// Least `m ≥ 1` with `m·d_i` integral for every `i`.
pub fn lcm_denominator(d: &ScoreSequence) -> BigInt {
    d.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Score of copy `copy` inside a near-regular cluster of size `m`.
///
/// Odd `m`: everyone has `(m-1)/2`. Even `m`: the first half has `m/2 - 1`
/// and the second half `m/2`, which sums to `C(m, 2)` as required.
fn cluster_offset(m: usize, copy: usize) -> i64 {
    let m = m as i64;
    if m % 2 == 1 {
        (m - 1) / 2
    } else if (copy as i64) < m / 2 {
        m / 2 - 1
    } else {
        m / 2
    }
}

pub fn blowup_scores(d: &ScoreSequence, m: usize) -> Result<BlowUpPlan> {
    if m == 0 {
        return Err(Error::Invalid("blow-up factor must be positive".into()));
    }
    if !check_condition_i(d).condition_i {
        return Err(Error::ConditionViolation("sequence fails Condition I".into()));
    }
    let scale = BigInt::from(m);
    let mut base = Vec::with_capacity(d.len());
    for (i, x) in d.entries().iter().enumerate() {
        let scaled = x.scale(&scale);
        let v = scaled.to_i64().ok_or_else(|| {
            Error::NonIntegral(format!("{m} * d_{} = {scaled} is not a machine integer", i + 1))
        })?;
        base.push(v);
    }
    let targets: Vec<Vec<i64>> =
        base.iter().map(|&b| (0..m).map(|l| b + cluster_offset(m, l)).collect()).collect();
    let plan = BlowUpPlan { n: d.len(), m, targets };

    if !plan.total_identity_holds() {
        return Err(Error::Internal("blow-up targets do not sum to C(mn, 2)".into()));
    }
    if check_condition_ii(d) && !plan.pairing_identity_holds() {
        return Err(Error::Internal("blow-up targets break the pairing identity".into()));
    }
    if !integer_condition_i(&plan.flattened()) {
        return Err(Error::Internal("blow-up targets fail Condition I".into()));
    }
    Ok(plan)
}

/// Averages a tournament on `m·n` vertices over the clusters of `plan`.
pub fn shrink_down(h: &Tournament, plan: &BlowUpPlan) -> Result<GeneralisedTournament> {
    if h.n() != plan.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "tournament has {} vertices, plan expects {} x {}",
            h.n(),
            plan.n,
            plan.m
        )));
    }
    let m = plan.m;
    let cells = (m * m) as i64;
    Ok(GeneralisedTournament::from_fn(plan.n, |i, j| {
        let mut wins = 0i64;
        for l in 0..m {
            for k in 0..m {
                if h.beats(plan.vertex(i, l), plan.vertex(j, k)) {
                    wins += 1;
                }
            }
        }
        Rational::new(wins, cells)
    }))
}

fn require_both_conditions(d: &ScoreSequence) -> Result<()> {
    let report = check_condition_i(d);
    if !report.condition_i {
        return Err(Error::ConditionViolation(format!(
            "Condition I fails at prefix {}",
            report.first_violation.unwrap_or(d.len())
        )));
    }
    if !report.condition_ii {
        return Err(Error::ConditionViolation("Condition II fails".into()));
    }
    Ok(())
}

fn blowup_factor(d: &ScoreSequence, cap: usize) -> Result<usize> {
    let m = lcm_denominator(d);
    let size = &m * BigInt::from(d.len());
    match (m.to_usize(), size.to_usize()) {
        (Some(m), Some(size)) if size <= cap => Ok(m),
        _ => Err(Error::ResourceLimit { what: "blow-up vertex count", size: size.to_string(), cap }),
    }
}

/// A self-converse generalised tournament with labeled scores exactly `d`,
/// together with the witness `i ↦ n+1-i`.
///
/// `cap` bounds the blown-up vertex count `m·n`.
pub fn realize_self_converse_rational(
    d: &ScoreSequence,
    cap: usize,
) -> Result<(GeneralisedTournament, VertexBijection)> {
    require_both_conditions(d)?;
    let m = blowup_factor(d, cap)?;
    let plan = blowup_scores(d, m)?;
    let h = symmetric_realize(&plan.flattened(), &plan.involution(), cap)?;
    let g = shrink_down(&h, &plan)?;
    let rho = VertexBijection::reversal(d.len());

    if scores_of(&g).labeled != d.entries() {
        return Err(Error::Internal("shrunk tournament has the wrong scores".into()));
    }
    if !is_self_converse_witness(&g, &rho) {
        return Err(Error::Internal("shrunk tournament is not self-converse through the reversal".into()));
    }
    Ok((g, rho))
}

/// Vertex cap for the blown-up tournament built by [`moon_realize`].
pub const DEFAULT_MOON_CAP: usize = 1024;

/// A generalised tournament with labeled scores exactly `d` (Condition I only).
pub fn moon_realize(d: &ScoreSequence) -> Result<GeneralisedTournament> {
    moon_realize_capped(d, DEFAULT_MOON_CAP)
}

pub fn moon_realize_capped(d: &ScoreSequence, cap: usize) -> Result<GeneralisedTournament> {
    let report = check_condition_i(d);
    if !report.condition_i {
        return Err(Error::ConditionViolation(format!(
            "Condition I fails at prefix {}",
            report.first_violation.unwrap_or(d.len())
        )));
    }
    let m = blowup_factor(d, cap)?;
    let plan = blowup_scores(d, m)?;
    let h = landau_realize_labeled(&plan.flattened())?;
    let g = shrink_down(&h, &plan)?;
    if scores_of(&g).labeled != d.entries() {
        return Err(Error::Internal("shrunk tournament has the wrong scores".into()));
    }
    Ok(g)
}

/// `β(i,j) = (α(i,j) + 1 - α(n+1-i, n+1-j)) / 2`.
///
/// The result keeps every labeled score and is self-converse through the
/// reversal. Requires sorted labeled scores satisfying Condition II.
pub fn symmetrize(g: &GeneralisedTournament) -> Result<GeneralisedTournament> {
    let labeled = scores_of(g).labeled;
    let d = ScoreSequence::new(labeled)
        .map_err(|_| Error::ConditionViolation("labeled scores are not sorted".into()))?;
    if !check_condition_ii(&d) {
        return Err(Error::ConditionViolation("labeled scores fail Condition II".into()));
    }
    let n = g.n();
    let one = Rational::one();
    let half = Rational::new(1, 2);
    Ok(GeneralisedTournament::from_fn(n, |i, j| {
        (g.weight(i, j) + &one - g.weight(n - 1 - i, n - 1 - j)) * &half
    }))
}
