//! Realization of integer score sequences by 0/1 tournaments.
//!
//! [`landau_realize`] builds any tournament with the requested labeled
//! out-degrees. [`symmetric_realize`] additionally forces a prescribed
//! involution `ρ` to be an isomorphism onto the converse.
//!
//! Under `ρ`, the arc `u → v` corresponds to `ρ(u) → ρ(v)` in the converse,
//! so self-converseness through `ρ` means `u → v` iff `ρ(v) → ρ(u)`. Unordered
//! pairs therefore fall into orbits `{ {u,v}, {ρ(u),ρ(v)} }` whose orientations
//! are coupled. A pair with `ρ(u) = v` is its own orbit and is unconstrained.

use crate::error::{Error, Result};
use crate::sequence::{integer_condition_i, ScoreSequence};
use crate::tournament::{Tournament, VertexBijection};

/// Default vertex cap for [`symmetric_realize`].
pub const DEFAULT_SYMMETRIC_CAP: usize = 24;

/// Realizes a sorted integer score sequence; vertex `i` gets score `d_i`.
pub fn landau_realize(d: &ScoreSequence) -> Result<Tournament> {
    let scores = d
        .to_integers()
        .ok_or_else(|| Error::NonIntegral(format!("scores {:?} are not all integers", d.entries())))?;
    landau_realize_labeled(&scores)
}

/// Realizes labeled integer out-degrees given in any order.
///
/// Greedy: the remaining vertex with the largest residual score (lowest label
/// on ties) is removed; it loses to the `r - 1 - s` other remaining vertices of
/// largest residual score and beats the rest. Each residual sequence is
/// re-checked against Condition I.
pub fn landau_realize_labeled(scores: &[i64]) -> Result<Tournament> {
    let n = scores.len();
    if n == 0 {
        return Err(Error::Invalid("empty score sequence".into()));
    }
    if !integer_condition_i(scores) {
        return Err(Error::ConditionViolation(format!("{scores:?} fails Condition I")));
    }
    let mut residual = scores.to_vec();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut beats = vec![false; n * n];

    while alive.len() > 1 {
        // highest residual first, then lowest label
        alive.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let top = alive[0];
        let rest = &alive[1..];
        let losses = rest.len() as i64 - residual[top];
        if losses < 0 || residual[top] < 0 {
            return Err(Error::Internal(format!("greedy residual infeasible at vertex {}", top + 1)));
        }
        for (k, &w) in rest.iter().enumerate() {
            if (k as i64) < losses {
                beats[w * n + top] = true;
                residual[w] -= 1;
            } else {
                beats[top * n + w] = true;
            }
        }
        alive.remove(0);
        let remaining: Vec<i64> = alive.iter().map(|&v| residual[v]).collect();
        if !integer_condition_i(&remaining) {
            return Err(Error::Internal(format!("greedy residual {remaining:?} fails Condition I")));
        }
    }

    let t = Tournament::from_beats(n, |i, j| beats[i * n + j]);
    if t.out_degrees().iter().zip(scores).any(|(&a, &b)| a as i64 != b) {
        return Err(Error::Internal("greedy output does not match targets".into()));
    }
    Ok(t)
}

/// One orbit of unordered pairs under `ρ`.
///
/// Choosing `forward` orients `u → v` (and `ρ(v) → ρ(u)` if coupled);
/// otherwise `v → u` (and `ρ(u) → ρ(v)`).
#[derive(Clone, Copy, Debug)]
struct Orbit {
    u: usize,
    v: usize,
    partner: Option<(usize, usize)>,
}

impl Orbit {
    /// Arcs `(tail, head)` produced by the given orientation.
    fn arcs(&self, forward: bool) -> ([(usize, usize); 2], usize) {
        match (self.partner, forward) {
            (None, true) => ([(self.u, self.v), (0, 0)], 1),
            (None, false) => ([(self.v, self.u), (0, 0)], 1),
            (Some((pu, pv)), true) => ([(self.u, self.v), (pv, pu)], 2),
            (Some((pu, pv)), false) => ([(self.v, self.u), (pu, pv)], 2),
        }
    }
}

/// Builds a 0/1 tournament with labeled out-degrees `targets` for which `rho`
/// is an isomorphism onto the converse.
///
/// Preconditions: the sorted targets satisfy Condition I,
/// `targets[v] + targets[ρ(v)] = N - 1`, and `ρ` is an involution with at most
/// one fixed point (whose target is `(N - 1) / 2`).
///
/// The search walks orbits in lexicographic order of their smallest pair,
/// trying "lower label wins" first, so the result is deterministic.
pub fn symmetric_realize(targets: &[i64], rho: &VertexBijection, cap: usize) -> Result<Tournament> {
    let n = targets.len();
    check_symmetric_preconditions(targets, rho)?;
    if n > cap {
        return Err(Error::ResourceLimit { what: "symmetric realization vertex count", size: n.to_string(), cap });
    }

    let orbits = orbits_of(rho);
    let mut state = OrbitSearch {
        n,
        targets,
        orbits: &orbits,
        out: vec![0; n],
        open: vec![n as i64 - 1; n],
        choice: vec![false; orbits.len()],
    };
    if !state.descend(0) {
        return Err(Error::SearchExhausted(format!(
            "no self-converse tournament found for targets {targets:?}"
        )));
    }

    let mut beats = vec![false; n * n];
    for (orbit, &forward) in orbits.iter().zip(&state.choice) {
        let (arcs, len) = orbit.arcs(forward);
        for &(a, b) in &arcs[..len] {
            beats[a * n + b] = true;
        }
    }
    Ok(Tournament::from_beats(n, |i, j| beats[i * n + j]))
}

fn check_symmetric_preconditions(targets: &[i64], rho: &VertexBijection) -> Result<()> {
    let n = targets.len();
    if n == 0 {
        return Err(Error::Invalid("empty score sequence".into()));
    }
    if rho.len() != n {
        return Err(Error::DimensionMismatch(format!("{} targets but bijection on {} vertices", n, rho.len())));
    }
    if !rho.is_involution() {
        return Err(Error::ConditionViolation("witness bijection is not an involution".into()));
    }
    let fixed = rho.fixed_points();
    if fixed.len() > 1 {
        return Err(Error::ConditionViolation(format!(
            "witness involution has {} fixed points, at most one allowed",
            fixed.len()
        )));
    }
    if targets.iter().any(|&c| c < 0) {
        return Err(Error::ConditionViolation("negative target out-degree".into()));
    }
    if !integer_condition_i(targets) {
        return Err(Error::ConditionViolation(format!("{targets:?} fails Condition I")));
    }
    let top = n as i64 - 1;
    if let Some(v) = (0..n).find(|&v| targets[v] + targets[rho.apply(v)] != top) {
        return Err(Error::ConditionViolation(format!(
            "targets of vertex {} and its image {} do not sum to {top}",
            v + 1,
            rho.apply(v) + 1
        )));
    }
    Ok(())
}

fn orbits_of(rho: &VertexBijection) -> Vec<Orbit> {
    let n = rho.len();
    let mut seen = vec![false; n * n];
    let mut orbits = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if seen[u * n + v] {
                continue;
            }
            seen[u * n + v] = true;
            let (pu, pv) = (rho.apply(u), rho.apply(v));
            let (a, b) = (pu.min(pv), pu.max(pv));
            let partner = if (a, b) == (u, v) {
                None
            } else {
                seen[a * n + b] = true;
                Some((pu, pv))
            };
            orbits.push(Orbit { u, v, partner });
        }
    }
    orbits
}

struct OrbitSearch<'a> {
    n: usize,
    targets: &'a [i64],
    orbits: &'a [Orbit],
    out: Vec<i64>,
    /// undecided pairs incident to each vertex
    open: Vec<i64>,
    choice: Vec<bool>,
}

impl OrbitSearch<'_> {
    fn descend(&mut self, k: usize) -> bool {
        if k == self.orbits.len() {
            return self.out.iter().zip(self.targets).all(|(a, b)| a == b);
        }
        for forward in [true, false] {
            let (arcs, len) = self.orbits[k].arcs(forward);
            let arcs = &arcs[..len];
            self.apply(arcs, 1);
            if self.feasible(arcs) {
                self.choice[k] = forward;
                if self.descend(k + 1) {
                    return true;
                }
            }
            self.apply(arcs, -1);
        }
        false
    }

    fn apply(&mut self, arcs: &[(usize, usize)], sign: i64) {
        for &(tail, head) in arcs {
            self.out[tail] += sign;
            self.open[tail] -= sign;
            self.open[head] -= sign;
        }
    }

    /// Every touched vertex must still be able to hit its target exactly.
    fn feasible(&self, arcs: &[(usize, usize)]) -> bool {
        debug_assert!(self.out.len() == self.n);
        arcs.iter().flat_map(|&(a, b)| [a, b]).all(|x| {
            let need = self.targets[x] - self.out[x];
            need >= 0 && need <= self.open[x]
        })
    }
}
