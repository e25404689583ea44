//! Recursive descent over lecture hall chains with exact integer bounds.
//!
//! A chain of length `m` for `s_1..s_m` is an integer vector with
//! `0 <= x_1/s_1 <= ... <= x_m/s_m`. Descent fixes the top coordinate first;
//! once `x_{j+1}` is known, `x_j` ranges over `0..=floor(x_{j+1} s_j / s_{j+1})`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Largest admissible value of `x_j` given `x_{j+1}`.
fn below(next: &BigInt, s_j: &BigInt, s_next: &BigInt) -> BigInt {
    (next * s_j).div_floor(s_next)
}

/// All chains over `s` whose top coordinate is at most `top_max`, each
/// returned as a coordinate vector. Unsorted.
pub(crate) fn chains_up_to(s: &[BigInt], top_max: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    if s.is_empty() {
        out.push(Vec::new());
        return out;
    }
    if top_max.is_negative() {
        return out;
    }
    let m = s.len();
    let mut buf = vec![BigInt::zero(); m];
    let mut top = BigInt::zero();
    while &top <= top_max {
        buf[m - 1] = top.clone();
        descend(s, m - 1, &mut buf, &mut out);
        top += 1;
    }
    out
}

/// All chains over `s` that end exactly in `top` (the last coordinate is
/// fixed, lower ones free).
pub(crate) fn chains_ending_at(s: &[BigInt], top: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    if top.is_negative() {
        return out;
    }
    let m = s.len();
    let mut buf = vec![BigInt::zero(); m];
    buf[m - 1] = top.clone();
    descend(s, m - 1, &mut buf, &mut out);
    out
}

fn descend(s: &[BigInt], j: usize, buf: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    if j == 0 {
        out.push(buf.clone());
        return;
    }
    let hi = below(&buf[j], &s[j - 1], &s[j]);
    let mut x = BigInt::zero();
    while x <= hi {
        buf[j - 1] = x.clone();
        descend(s, j - 1, buf, out);
        x += 1;
    }
}

/// Lattice points of the cone over `s` with `x_{n-1} = penultimate` and
/// `x_n = last`; empty when that top pair itself violates the chain.
pub(crate) fn stratum(s: &[BigInt], penultimate: &BigInt, last: &BigInt) -> Vec<Vec<BigInt>> {
    let n = s.len();
    assert!(n >= 2, "strata need dimension at least 2");
    if penultimate.is_negative() || penultimate * &s[n - 1] > last * &s[n - 2] {
        return Vec::new();
    }
    chains_ending_at(&s[..n - 1], penultimate)
        .into_iter()
        .map(|mut v| {
            v.push(last.clone());
            v
        })
        .collect()
}

/// Memoized count of chains over `s` with top coordinate at most `top_max`.
///
/// `S(j, V) = sum_{v=0}^{V} S(j-1, floor(v s_{j-1} / s_j))` with `S(1, V) = V + 1`.
pub(crate) fn count_chains_up_to(s: &[BigInt], top_max: &BigInt) -> BigInt {
    if s.is_empty() {
        return BigInt::one();
    }
    if top_max.is_negative() {
        return BigInt::zero();
    }
    let mut memo = HashMap::new();
    count_rec(s, s.len(), top_max, &mut memo)
}

fn count_rec(
    s: &[BigInt],
    len: usize,
    top_max: &BigInt,
    memo: &mut HashMap<(usize, BigInt), BigInt>,
) -> BigInt {
    if len == 1 {
        return top_max + 1;
    }
    if let Some(hit) = memo.get(&(len, top_max.clone())) {
        return hit.clone();
    }
    let mut total = BigInt::zero();
    let mut v = BigInt::zero();
    while &v <= top_max {
        let cap = below(&v, &s[len - 2], &s[len - 1]);
        total += count_rec(s, len - 1, &cap, memo);
        v += 1;
    }
    memo.insert((len, top_max.clone()), total.clone());
    total
}
