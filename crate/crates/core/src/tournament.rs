//! Generalised tournaments, converses and self-converse witnesses.
//!
//! Vertices are 0-based internally. Wire formats and user-facing output use
//! 1-based labels.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sequence::ScoreSequence;

/// Default size cap for [`find_self_converse_witness`].
pub const DEFAULT_WITNESS_CAP: usize = 10;

/// A complete digraph with weights `α(i,j) ∈ [0,1]`, `α(i,j) + α(j,i) = 1`
/// off the diagonal and `α(i,i) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralisedTournament {
    n: usize,
    weights: Vec<Rational>,
}

impl GeneralisedTournament {
    pub fn new(weights: Vec<Vec<Rational>>) -> Result<Self> {
        let n = weights.len();
        if n == 0 {
            return Err(Error::Invalid("tournament must have at least one vertex".into()));
        }
        if let Some(i) = weights.iter().position(|row| row.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                weights[i].len()
            )));
        }
        let g = GeneralisedTournament { n, weights: weights.into_iter().flatten().collect() };
        g.validate()?;
        Ok(g)
    }

    /// Builds from a weight function on off-diagonal pairs without validation.
    pub(crate) fn from_fn(n: usize, mut weight: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                weights.push(if i == j { Rational::zero() } else { weight(i, j) });
            }
        }
        GeneralisedTournament { n, weights }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let one = Rational::one();
        for i in 0..self.n {
            if !self.weight(i, i).is_zero() {
                return Err(Error::Invalid(format!("diagonal weight at vertex {} is non-zero", i + 1)));
            }
            for j in 0..self.n {
                let w = self.weight(i, j);
                if w.is_negative() || *w > one {
                    return Err(Error::Invalid(format!(
                        "weight ({}, {}) = {w} outside [0, 1]",
                        i + 1,
                        j + 1
                    )));
                }
                if i < j && self.weight(i, j) + self.weight(j, i) != one {
                    return Err(Error::Invalid(format!(
                        "weights ({a}, {b}) and ({b}, {a}) do not sum to 1",
                        a = i + 1,
                        b = j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, i: usize, j: usize) -> &Rational {
        &self.weights[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.weights.chunks(self.n)
    }

    pub fn is_tournament(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero() || *w == 1)
    }
}

/// A generalised tournament whose weights are all 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament(GeneralisedTournament);

impl Tournament {
    pub fn from_generalised(g: GeneralisedTournament) -> Result<Self> {
        if !g.is_tournament() {
            return Err(Error::Invalid("tournament weights must be 0 or 1".into()));
        }
        Ok(Tournament(g))
    }

    /// `beats(i, j)` is true when the arc goes from `i` to `j`. Only the entries
    /// with `i < j` are consulted.
    pub fn from_beats(n: usize, beats: impl Fn(usize, usize) -> bool) -> Self {
        Tournament(GeneralisedTournament::from_fn(n, |i, j| {
            let forward = if i < j { beats(i, j) } else { !beats(j, i) };
            if forward {
                Rational::one()
            } else {
                Rational::zero()
            }
        }))
    }

    /// Builds from a list of 1-based arcs `(u, v)` meaning `u → v`.
    /// Every unordered pair must appear exactly once.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = vec![None; n * n];
        for &(u, v) in arcs {
            if u == 0 || v == 0 || u > n || v > n || u == v {
                return Err(Error::Invalid(format!("bad arc {u} -> {v}")));
            }
            let (a, b) = (u.min(v) - 1, u.max(v) - 1);
            if seen[a * n + b].replace(u < v).is_some() {
                return Err(Error::Invalid(format!("pair {{{u}, {v}}} given twice")));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if seen[a * n + b].is_none() {
                    return Err(Error::Invalid(format!("pair {{{}, {}}} missing", a + 1, b + 1)));
                }
            }
        }
        Ok(Tournament::from_beats(n, |a, b| seen[a * n + b] == Some(true)))
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn beats(&self, i: usize, j: usize) -> bool {
        *self.0.weight(i, j) == 1
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|i| (0..self.n()).filter(|&j| self.beats(i, j)).count()).collect()
    }

    pub fn as_generalised(&self) -> &GeneralisedTournament {
        &self.0
    }

    pub fn into_generalised(self) -> GeneralisedTournament {
        self.0
    }
}

impl AsRef<GeneralisedTournament> for Tournament {
    fn as_ref(&self) -> &GeneralisedTournament {
        &self.0
    }
}

impl AsRef<GeneralisedTournament> for GeneralisedTournament {
    fn as_ref(&self) -> &GeneralisedTournament {
        self
    }
}

/// A permutation of the vertex set; `image[i]` is where vertex `i` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexBijection {
    image: Vec<usize>,
}

impl VertexBijection {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut hit = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut hit[v], true) {
                return Err(Error::Invalid(format!("{image:?} is not a permutation of 0..{n}")));
            }
        }
        Ok(VertexBijection { image })
    }

    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(Error::Invalid("vertex labels are 1-based".into()));
        }
        Self::new(image.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        VertexBijection { image: (0..n).collect() }
    }

    /// `i ↦ n - 1 - i`, the order-reversing involution on sorted labels.
    pub fn reversal(n: usize) -> Self {
        VertexBijection { image: (0..n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.image.iter().map(|v| v + 1).collect()
    }

    pub fn is_involution(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| self.image[v] == i)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.image.iter().enumerate().filter(|(i, v)| i == *v).map(|(i, _)| i).collect()
    }
}

/// Labeled row sums together with their sorted rearrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scores {
    pub labeled: Vec<Rational>,
    pub sorted: ScoreSequence,
}

pub fn scores_of(g: &GeneralisedTournament) -> Scores {
    let labeled: Vec<Rational> = g.rows().map(|row| row.iter().sum()).collect();
    let mut sorted = labeled.clone();
    sorted.sort();
    let sorted = ScoreSequence::new(sorted).expect("row sums of a valid tournament form a score sequence");
    Scores { labeled, sorted }
}

pub fn converse(g: &GeneralisedTournament) -> GeneralisedTournament {
    let one = Rational::one();
    GeneralisedTournament::from_fn(g.n(), |i, j| &one - g.weight(i, j))
}

/// Tests `α(i,j) = 1 - α(ρ(i),ρ(j))` for every ordered pair `i ≠ j`, i.e.
/// whether `ρ` is an isomorphism from `g` onto its converse.
pub fn is_self_converse_witness(g: &GeneralisedTournament, rho: &VertexBijection) -> bool {
    let n = g.n();
    if rho.len() != n {
        return false;
    }
    let one = Rational::one();
    (0..n).all(|i| {
        (0..n).all(|j| i == j || g.weight(i, j) + g.weight(rho.apply(i), rho.apply(j)) == one)
    })
}

/// Searches for an isomorphism from `g` onto its converse.
///
/// Vertices are assigned in label order and candidates tried in increasing
/// label order, so the result is the lexicographically smallest witness. A
/// vertex of score `d` can only map to a vertex of score `n - 1 - d`.
pub fn find_self_converse_witness(
    g: &GeneralisedTournament,
    cap: usize,
) -> Result<Option<VertexBijection>> {
    let n = g.n();
    if n > cap {
        return Err(Error::ResourceLimit { what: "witness search vertex count", size: n.to_string(), cap });
    }
    let scores = scores_of(g).labeled;
    let top = Rational::integer(n as i64 - 1);
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            let want = &top - &scores[u];
            (0..n).filter(|&v| scores[v] == want).collect()
        })
        .collect();

    let mut search = WitnessSearch {
        g,
        candidates: &candidates,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        one: Rational::one(),
    };
    Ok(search.extend(0).then_some(VertexBijection { image: search.image }))
}

struct WitnessSearch<'a> {
    g: &'a GeneralisedTournament,
    candidates: &'a [Vec<usize>],
    image: Vec<usize>,
    used: Vec<bool>,
    one: Rational,
}

impl WitnessSearch<'_> {
    fn extend(&mut self, u: usize) -> bool {
        if u == self.image.len() {
            return true;
        }
        let candidates = self.candidates;
        for &v in &candidates[u] {
            if self.used[v] || !self.consistent(u, v) {
                continue;
            }
            self.image[u] = v;
            self.used[v] = true;
            if self.extend(u + 1) {
                return true;
            }
            self.used[v] = false;
        }
        self.image[u] = usize::MAX;
        false
    }

    fn consistent(&self, u: usize, v: usize) -> bool {
        (0..u).all(|w| {
            let pw = self.image[w];
            self.g.weight(u, w) + self.g.weight(v, pw) == self.one
                && self.g.weight(w, u) + self.g.weight(pw, v) == self.one
        })
    }
}
