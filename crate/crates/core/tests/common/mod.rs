#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use schur_toeplitz::{Partition, Rational, Scalar, SkewPartition};

pub fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn skew(o: &[usize], i: &[usize]) -> SkewPartition {
    SkewPartition::new(part(o), part(i))
}

/// Numerator in `-6..=6`, denominator in `1..=4`.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    qq(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn random_roots(rng: &mut ChaCha8Rng, w: usize) -> Vec<Rational> {
    (0..w).map(|_| random_rational(rng)).collect()
}

pub fn random_distinct_roots(rng: &mut ChaCha8Rng, w: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(w);
    while out.len() < w {
        let z = random_rational(rng);
        if !out.contains(&z) {
            out.push(z);
        }
    }
    out
}

pub fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let z = random_rational(rng);
        if !z.is_zero() {
            return z;
        }
    }
}

/// All partitions with at most `max_len` parts, each at most `max_part`.
pub fn partitions_in_box(max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).unwrap());
        if left == 0 {
            return;
        }
        for v in 1..=cap {
            cur.push(v);
            rec(v, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(max_part, max_len, &mut cur, &mut out);
    out
}

/// All partitions of weight at most `max_weight` with at most `max_len` parts.
pub fn partitions_up_to_weight(max_weight: usize, max_len: usize) -> Vec<Partition> {
    partitions_in_box(max_weight, max_len)
        .into_iter()
        .filter(|p| p.weight() <= max_weight)
        .collect()
}

pub fn random_partition(rng: &mut ChaCha8Rng, max_part: usize, max_len: usize) -> Partition {
    let len = rng.gen_range(0..=max_len);
    let mut parts: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

/// Cells of a skew diagram with empty rows removed and columns translated so
/// the leftmost cell sits in column zero.
pub fn canonical_cells(sp: &SkewPartition) -> Vec<(usize, usize)> {
    let rows = sp.outer.len().max(sp.inner.len());
    let lam = sp.outer.padded(rows);
    let mu = sp.inner.padded(rows);
    let mut cells = Vec::new();
    let mut r = 0;
    for i in 0..rows {
        if lam[i] > mu[i] {
            cells.extend((mu[i]..lam[i]).map(|j| (r, j)));
            r += 1;
        }
    }
    let shift = cells.iter().map(|c| c.1).min().unwrap_or(0);
    cells.into_iter().map(|(i, j)| (i, j - shift)).collect()
}
