#![allow(dead_code)]

use selfconverse::sequence::check_condition_i;
use selfconverse::{Rational, ScoreSequence};

/// Non-decreasing sequences of length `n` with entries in `values`.
pub fn sorted_sequences(n: usize, values: &[Rational]) -> Vec<Vec<Rational>> {
    fn rec(n: usize, start: usize, values: &[Rational], cur: &mut Vec<Rational>, out: &mut Vec<Vec<Rational>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in start..values.len() {
            cur.push(values[k].clone());
            rec(n, k, values, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, values, &mut Vec::new(), &mut out);
    out
}

/// Every sorted sequence of length `n <= max_n` whose entries lie in
/// `[0, n-1]` with denominator in `denominators`, filtered by the predicate.
pub fn rational_grid(max_n: usize, denominators: &[i64], keep: impl Fn(&ScoreSequence) -> bool) -> Vec<ScoreSequence> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let top = n as i64 - 1;
        let mut values: Vec<Rational> = denominators
            .iter()
            .flat_map(|&q| (0..=top * q).map(move |p| Rational::new(p, q)))
            .collect();
        values.sort();
        values.dedup();
        for s in sorted_sequences(n, &values) {
            let d = ScoreSequence::new(s).unwrap();
            if keep(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// Sequences satisfying both conditions on the grid with denominators 1, 2, 3.
pub fn self_converse_grid(max_n: usize) -> Vec<ScoreSequence> {
    rational_grid(max_n, &[1, 2, 3], |d| check_condition_i(d).both_hold())
}

/// Integer sequences satisfying Condition I, straight from the definition.
pub fn landau_sequences(n: usize) -> Vec<ScoreSequence> {
    rational_grid_exact(n, &[1], |d| check_condition_i(d).condition_i)
}

fn rational_grid_exact(n: usize, denominators: &[i64], keep: impl Fn(&ScoreSequence) -> bool) -> Vec<ScoreSequence> {
    rational_grid(n, denominators, keep).into_iter().filter(|d| d.len() == n).collect()
}

/// Sequences satisfying Condition II by construction: the lower half is drawn
/// from the grid below the midpoint and mirrored. Filtered by the predicate.
pub fn mirrored_grid(max_n: usize, denominators: &[i64], keep: impl Fn(&ScoreSequence) -> bool) -> Vec<ScoreSequence> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let top = Rational::integer(n as i64 - 1);
        let mid = Rational::new(n as i64 - 1, 2);
        let mut values: Vec<Rational> = denominators
            .iter()
            .flat_map(|&q| (0..=(n as i64 - 1) * q).map(move |p| Rational::new(p, q)))
            .filter(|v| *v <= mid)
            .collect();
        values.sort();
        values.dedup();
        for half in sorted_sequences(n / 2, &values) {
            let mut entries = half.clone();
            if n % 2 == 1 {
                entries.push(mid.clone());
            }
            entries.extend(half.iter().rev().map(|x| &top - x));
            let d = ScoreSequence::new(entries).unwrap();
            if keep(&d) {
                out.push(d);
            }
        }
    }
    out
}
