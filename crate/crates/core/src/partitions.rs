//! Partitions, skew shapes, index sets and the rules that turn struck-out
//! rows and columns of a Toeplitz matrix into skew shapes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are
/// stripped on construction, so equality and hashing ignore them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(
                parts.iter().map(|&x| x as i64).collect(),
            ));
        }
        Ok(Self::stripped(parts))
    }

    /// Accepts signed parts, rejecting negatives with a dedicated error.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if let Some(&neg) = parts.iter().find(|&&x| x < 0) {
            return Err(Error::NegativePart(neg));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts.to_vec()));
        }
        Ok(Self::stripped(parts.iter().map(|&x| x as usize).collect()))
    }

    fn stripped(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(value^count)`.
    pub fn rectangle(value: usize, count: usize) -> Self {
        Self::stripped(vec![value; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `ℓ(λ)`, counting nonzero parts only.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Zero-based part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Parts zero-padded (or truncated) to `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i)).collect()
    }

    /// `λ'_k = #{j : λ_j >= k}`.
    pub fn conjugate(&self) -> Self {
        Self((1..=self.first()).map(|k| self.0.iter().take_while(|&&p| p >= k).count()).collect())
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::from_signed(&v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `μ ⊆ λ`.
pub fn is_contained(mu: &Partition, lam: &Partition) -> bool {
    mu.is_contained_in(lam)
}

pub fn conjugate(lam: &Partition) -> Partition {
    lam.conjugate()
}

/// `λ/μ`; pairs with `μ ⊄ λ` are representable and evaluate to zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewPartition {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewPartition {
    pub fn new(outer: Partition, inner: Partition) -> Self {
        Self { outer, inner }
    }

    pub fn straight(outer: Partition) -> Self {
        Self::new(outer, Partition::empty())
    }

    pub fn is_valid(&self) -> bool {
        self.inner.is_contained_in(&self.outer)
    }

    /// Rectangle-complement-and-reverse; see [`flip`].
    pub fn flip(&self) -> Self {
        flip(self)
    }

    /// Number of boxes `|λ| - |μ|` (meaningful for valid shapes).
    pub fn size(&self) -> i64 {
        self.outer.weight() as i64 - self.inner.weight() as i64
    }
}

impl fmt::Display for SkewPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// `(λ/μ)^* = (W^L - rev μ) / (W^L - rev λ)` with `L = ℓ(λ)` (μ zero-padded).
///
/// The rectangle width is `W = λ_1` whenever `μ_1 <= λ_1`. When `μ_1 > λ_1`
/// the pair is already invalid and `W = μ_1` keeps the parts nonnegative; the
/// skew Jacobi–Trudi matrix of the result is the pertranspose of the
/// original for any `W`, so the defect is preserved either way. Likewise `L`
/// grows to `ℓ(μ)` if `μ` is longer than `λ`.
pub fn flip(sp: &SkewPartition) -> SkewPartition {
    let len = sp.outer.len().max(sp.inner.len());
    let width = sp.outer.first().max(sp.inner.first());
    let lam = sp.outer.padded(len);
    let mu = sp.inner.padded(len);
    let alpha: Vec<usize> = (0..len).map(|j| width - mu[len - 1 - j]).collect();
    let beta: Vec<usize> = (0..len).map(|j| width - lam[len - 1 - j]).collect();
    SkewPartition::new(Partition::stripped(alpha), Partition::stripped(beta))
}

/// Strictly increasing tuple inside `{1..n}` (one-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    n: usize,
    entries: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.iter().all(|&x| (1..=n).contains(&x));
        if !increasing || !in_range {
            return Err(Error::InvalidIndexSet { n, entries });
        }
        Ok(Self { n, entries })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, entries: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self { n, entries: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|ρ| = Σ ρ_i`.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Increasing enumeration of `{1..n} \ self`.
    pub fn complement(&self) -> Self {
        let mut it = self.entries.iter().peekable();
        let mut out = Vec::with_capacity(self.n - self.len());
        for x in 1..=self.n {
            if it.peek() == Some(&&x) {
                it.next();
            } else {
                out.push(x);
            }
        }
        Self { n: self.n, entries: out }
    }

    /// The complement via `ξ_j = j + #{k : ρ_k - k < j}`.
    pub fn complement_closed_form(&self) -> Self {
        let d = self.n - self.len();
        let entries = (1..=d)
            .map(|j| {
                j + self
                    .entries
                    .iter()
                    .enumerate()
                    .filter(|&(k, &rho)| rho < j + k + 1)
                    .count()
            })
            .collect();
        Self { n: self.n, entries }
    }

    /// All subsets of `{1..n}` of size `m`, in lexicographic order.
    pub fn all(n: usize, m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m);
        fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSet>) {
            if cur.len() == m {
                out.push(IndexSet { n, entries: cur.clone() });
                return;
            }
            for x in start..=n {
                if n - x + 1 < m - cur.len() {
                    break;
                }
                cur.push(x);
                rec(x + 1, n, m, cur, out);
                cur.pop();
            }
        }
        rec(1, n, m, &mut cur, &mut out);
        out
    }
}

/// Skew shapes of the minor with struck rows `ξ` and struck columns `η`.
///
/// Returns `(λ/μ, α/β)` where, with `d = |ξ|` and `m = n - d`,
/// `λ = (m^p, ξ_d - d, ..., ξ_1 - 1)`, `μ = (η_d - d, ..., η_1 - 1)`,
/// `α = (m^p, m + 1 - η_1, ..., m + d - η_d)`,
/// `β = (m + 1 - ξ_1, ..., m + d - ξ_d)`.
pub fn minor_shapes(
    n: usize,
    p: usize,
    xi: &IndexSet,
    eta: &IndexSet,
) -> Result<(SkewPartition, SkewPartition)> {
    if xi.len() != eta.len() || xi.n() != n || eta.n() != n {
        return Err(Error::ShapeMismatch {
            rows: xi.len(),
            cols: eta.len(),
        });
    }
    let d = xi.len();
    let m = (n - d) as i64;
    let xs: Vec<i64> = xi.entries().iter().map(|&x| x as i64).collect();
    let es: Vec<i64> = eta.entries().iter().map(|&x| x as i64).collect();

    let mut lam = vec![m; p];
    lam.extend((1..=d).rev().map(|j| xs[j - 1] - j as i64));
    let mu: Vec<i64> = (1..=d).rev().map(|j| es[j - 1] - j as i64).collect();

    let mut alpha = vec![m; p];
    alpha.extend((1..=d).map(|j| m + j as i64 - es[j - 1]));
    let beta: Vec<i64> = (1..=d).map(|j| m + j as i64 - xs[j - 1]).collect();

    Ok((
        SkewPartition::new(Partition::from_signed(&lam)?, Partition::from_signed(&mu)?),
        SkewPartition::new(Partition::from_signed(&alpha)?, Partition::from_signed(&beta)?),
    ))
}

/// All `ν` with `λ/ν` a horizontal strip of size `r`, lexicographically
/// decreasing.
pub fn skew_pieri(lam: &Partition, r: usize) -> Vec<Partition> {
    let l = lam.len();
    let target = lam.weight() as i64 - r as i64;
    let mut out = Vec::new();
    if target < 0 {
        return out;
    }
    let mut nu = vec![0usize; l];

    fn rec(
        j: usize,
        lam: &Partition,
        nu: &mut Vec<usize>,
        remaining: i64,
        out: &mut Vec<Partition>,
    ) {
        let l = lam.len();
        if j == l {
            if remaining == 0 {
                out.push(Partition::stripped(nu.clone()));
            }
            return;
        }
        let hi = lam.part(j);
        let lo = lam.part(j + 1);
        let max_rest: i64 = (j + 1..l).map(|i| lam.part(i) as i64).sum();
        let min_rest: i64 = (j + 1..l).map(|i| lam.part(i + 1) as i64).sum();
        for v in (lo..=hi).rev() {
            let rem = remaining - v as i64;
            if rem < min_rest || rem > max_rest {
                continue;
            }
            nu[j] = v;
            rec(j + 1, lam, nu, rem, out);
        }
    }
    rec(0, lam, &mut nu, target, &mut out);
    out
}

/// `s_{(n^p, s)/(r)} = Σ_k s_{(n^{p-1}, n+s-r-k, k)}`,
/// `k = max(0, s-r)..=min(n-r, s)`; returned in the same order as
/// [`skew_pieri`].
pub fn lr_special(n: usize, p: usize, r: usize, s: usize) -> Vec<Partition> {
    assert!(n >= 1 && p >= 1 && (1..=n).contains(&r) && (1..=n).contains(&s));
    let lo = s.saturating_sub(r);
    let hi = (n - r).min(s);
    (lo..=hi)
        .map(|k| {
            let mut parts = vec![n; p - 1];
            parts.push(n + s - r - k);
            parts.push(k);
            Partition::stripped(parts)
        })
        .collect()
}
