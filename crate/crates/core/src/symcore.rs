//! Elementary (`e_r`) and complete homogeneous (`h_r`) symmetric polynomial
//! sequences.
//!
//! `E(-t) H(t) = 1`, so `h` follows from `e` by the convolution recurrence
//! `h_j = sum_{k=1}^{j} (-1)^{k+1} e_k h_{j-k}`. For pairwise distinct roots
//! there is also the closed form
//! `h_r = sum_j z_j^{r+w-1} / prod_{k != j} (z_j - z_k)`,
//! whose cost grows only with `log r`.

use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::toeplitz::LaurentSpec;

/// Two float roots closer than `ROOT_GROUPING_TOL * max(1, max_k |z_k|)` are
/// treated as one repeated root.
pub const ROOT_GROUPING_TOL: f64 = 1e-8;

/// Roots `z_1..z_w`, stored so that equal roots are contiguous.
#[derive(Clone, Debug, PartialEq)]
pub struct RootList<S> {
    roots: Vec<S>,
    multiplicities: Vec<usize>,
}

impl<S: Scalar> RootList<S> {
    /// Groups coinciding roots. On the exact backend "coinciding" means equal;
    /// on the float backend it means within [`ROOT_GROUPING_TOL`] (relative to
    /// the largest root, but never below an absolute `ROOT_GROUPING_TOL`).
    /// Members of a float group are replaced by their mean.
    pub fn new(roots: Vec<S>) -> Self {
        let max_log = roots
            .iter()
            .map(Scalar::log2_abs)
            .fold(0.0f64, f64::max);
        let tol_log = ROOT_GROUPING_TOL.log2() + max_log;
        let coincide = |a: &S, b: &S| {
            if S::EXACT {
                a == b
            } else {
                (a.clone() - b.clone()).log2_abs() <= tol_log
            }
        };

        let mut groups: Vec<Vec<S>> = Vec::new();
        for z in roots {
            match groups.iter_mut().find(|g| coincide(&g[0], &z)) {
                Some(g) => g.push(z),
                None => groups.push(vec![z]),
            }
        }

        let mut out = Vec::new();
        let mut multiplicities = Vec::with_capacity(groups.len());
        for g in groups {
            let m = g.len();
            let rep = if S::EXACT || m == 1 {
                g[0].clone()
            } else {
                g.into_iter().fold(S::zero(), |a, b| a + b) / S::from_i64(m as i64)
            };
            out.extend(std::iter::repeat_n(rep, m));
            multiplicities.push(m);
        }
        Self {
            roots: out,
            multiplicities,
        }
    }

    pub fn roots(&self) -> &[S] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Multiplicities `m_1..m_gamma` in storage order.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Number of distinct roots (`gamma`).
    pub fn distinct_count(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_simple(&self) -> bool {
        self.distinct_count() == self.len()
    }

    /// `(representative, multiplicity)` for each group.
    pub fn groups(&self) -> impl Iterator<Item = (&S, usize)> {
        let mut start = 0;
        self.multiplicities.iter().map(move |&m| {
            let z = &self.roots[start];
            start += m;
            (z, m)
        })
    }

    /// First pair of colliding storage indices, if any.
    pub(crate) fn first_collision(&self) -> Option<(usize, usize)> {
        let mut start = 0;
        for &m in &self.multiplicities {
            if m > 1 {
                return Some((start, start + 1));
            }
            start += m;
        }
        None
    }
}

/// `e_0..e_w`, or a finite prefix of an infinite sequence in series mode.
#[derive(Clone, Debug, PartialEq)]
pub struct ElemSeq<S> {
    coeffs: Vec<S>,
    series: bool,
}

impl<S: Scalar> ElemSeq<S> {
    /// Finite sequence; `e_0` is forced to be one by the caller's contract.
    pub fn finite(coeffs: Vec<S>) -> Result<Self> {
        Self::checked(coeffs, false)
    }

    /// Prefix `e_0..e_K` of an infinite sequence; `e_k` for `k > K` is unknown.
    pub fn series(coeffs: Vec<S>) -> Result<Self> {
        Self::checked(coeffs, true)
    }

    fn checked(coeffs: Vec<S>, series: bool) -> Result<Self> {
        match coeffs.first() {
            Some(e0) if *e0 == S::one() => Ok(Self { coeffs, series }),
            _ => Err(Error::InvalidSymbol("e_0 must equal 1".into())),
        }
    }

    /// Number of variables, `None` in series mode.
    pub fn w(&self) -> Option<usize> {
        (!self.series).then(|| self.coeffs.len() - 1)
    }

    pub fn is_series(&self) -> bool {
        self.series
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Highest known index.
    pub fn known_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, r: i64) -> Result<S> {
        if r < 0 {
            return Ok(S::zero());
        }
        match self.coeffs.get(r as usize) {
            Some(e) => Ok(e.clone()),
            None if self.series => Err(Error::SeriesTruncation {
                needed: r,
                available: self.known_degree(),
            }),
            None => Ok(S::zero()),
        }
    }
}

/// Vieta: `prod_s (1 + z_s t) = sum_r e_r t^r`.
pub fn elem_from_roots<S: Scalar>(roots: &RootList<S>) -> ElemSeq<S> {
    let mut e = vec![S::one()];
    for z in roots.roots() {
        e.push(S::zero());
        for r in (1..e.len()).rev() {
            let v = e[r].clone() + z.clone() * e[r - 1].clone();
            e[r] = v;
        }
    }
    ElemSeq {
        coeffs: e,
        series: false,
    }
}

/// Closed-form `h_r` at pairwise distinct roots.
pub fn h_at_distinct_roots<S: Scalar>(r: i64, roots: &RootList<S>) -> Result<S> {
    if let Some((i, j)) = roots.first_collision() {
        return Err(Error::RepeatedRoots(i, j));
    }
    let weights = distinct_root_weights(roots.roots());
    Ok(h_closed_form(r, roots.roots(), &weights))
}

/// `1 / prod_{k != j} (z_j - z_k)` for each `j`.
fn distinct_root_weights<S: Scalar>(z: &[S]) -> Vec<S> {
    (0..z.len())
        .map(|j| {
            let denom = (0..z.len())
                .filter(|&k| k != j)
                .fold(S::one(), |acc, k| acc * (z[j].clone() - z[k].clone()));
            S::one() / denom
        })
        .collect()
}

fn h_closed_form<S: Scalar>(r: i64, z: &[S], weights: &[S]) -> S {
    if r < 0 {
        return S::zero();
    }
    if z.is_empty() {
        return if r == 0 { S::one() } else { S::zero() };
    }
    let power = (r + z.len() as i64 - 1) as u64;
    z.iter()
        .zip(weights)
        .fold(S::zero(), |acc, (zj, wj)| acc + zj.pow(power) * wj.clone())
}

enum HStrategy<S> {
    Recurrence(ElemSeq<S>),
    DistinctRoots { roots: Vec<S>, weights: Vec<S> },
}

impl<S: Clone> Clone for HStrategy<S> {
    fn clone(&self) -> Self {
        match self {
            Self::Recurrence(e) => Self::Recurrence(e.clone()),
            Self::DistinctRoots { roots, weights } => Self::DistinctRoots {
                roots: roots.clone(),
                weights: weights.clone(),
            },
        }
    }
}

/// Lazily evaluated `h_0, h_1, ...`.
///
/// The recurrence strategy keeps an append-only prefix cache that grows
/// geometrically; concurrent readers may race to extend it, but every
/// extension writes the same values.
pub struct HomSeq<S> {
    strategy: HStrategy<S>,
    cache: RwLock<Vec<S>>,
}

impl<S: Scalar> Clone for HomSeq<S> {
    fn clone(&self) -> Self {
        Self {
            strategy: self.strategy.clone(),
            cache: RwLock::new(self.cache.read().expect("h cache poisoned").clone()),
        }
    }
}

impl<S: Scalar> std::fmt::Debug for HomSeq<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HomSeq")
            .field("closed_form", &self.uses_closed_form())
            .field("cached", &self.cache.read().map(|c| c.len()).unwrap_or(0))
            .finish()
    }
}

impl<S: Scalar> HomSeq<S> {
    /// Recurrence from `e`; works in series mode.
    pub fn from_elem(e: ElemSeq<S>) -> Self {
        Self {
            strategy: HStrategy::Recurrence(e),
            cache: RwLock::new(vec![S::one()]),
        }
    }

    /// Closed form when the roots are simple, recurrence otherwise.
    pub fn from_roots(roots: &RootList<S>) -> Self {
        if roots.is_simple() {
            let weights = distinct_root_weights(roots.roots());
            Self {
                strategy: HStrategy::DistinctRoots {
                    roots: roots.roots().to_vec(),
                    weights,
                },
                cache: RwLock::new(vec![S::one()]),
            }
        } else {
            Self::from_elem(elem_from_roots(roots))
        }
    }

    pub fn uses_closed_form(&self) -> bool {
        matches!(self.strategy, HStrategy::DistinctRoots { .. })
    }

    pub fn get(&self, r: i64) -> Result<S> {
        if r < 0 {
            return Ok(S::zero());
        }
        match &self.strategy {
            HStrategy::DistinctRoots { roots, weights } => Ok(h_closed_form(r, roots, weights)),
            HStrategy::Recurrence(e) => {
                let idx = r as usize;
                if let Some(h) = self.cache.read().expect("h cache poisoned").get(idx) {
                    return Ok(h.clone());
                }
                if e.is_series() && idx > e.known_degree() {
                    return Err(Error::SeriesTruncation {
                        needed: r,
                        available: e.known_degree(),
                    });
                }
                let mut cache = self.cache.write().expect("h cache poisoned");
                let mut target = (idx + 1).max(2 * cache.len());
                if e.is_series() {
                    target = target.min(e.known_degree() + 1);
                }
                extend_by_recurrence(&mut cache, e, target)?;
                Ok(cache[idx].clone())
            }
        }
    }

    /// `h_lo..=h_hi` as a vector.
    pub fn range(&self, lo: i64, hi: i64) -> Result<Vec<S>> {
        (lo..=hi).map(|r| self.get(r)).collect()
    }
}

fn extend_by_recurrence<S: Scalar>(cache: &mut Vec<S>, e: &ElemSeq<S>, target: usize) -> Result<()> {
    let kmax_finite = e.w();
    while cache.len() < target {
        let j = cache.len();
        let kmax = kmax_finite.map_or(j, |w| w.min(j));
        let mut acc = S::zero();
        for k in 1..=kmax {
            let term = e.get(k as i64)? * cache[j - k].clone();
            acc = if k % 2 == 1 { acc + term } else { acc - term };
        }
        cache.push(acc);
    }
    Ok(())
}

/// `h` recurrence driven directly by an `e` sequence, up to `degmax`.
pub fn h_from_e<S: Scalar>(e: &ElemSeq<S>, degmax: usize) -> Result<HomSeq<S>> {
    let h = HomSeq::from_elem(e.clone());
    h.get(degmax as i64)?;
    Ok(h)
}

/// The `h` sequence of a symbol: closed form for distinct roots, recurrence
/// otherwise (coefficients, repeated roots, series mode).
pub fn h_provider<S: Scalar>(spec: &LaurentSpec<S>) -> HomSeq<S> {
    match spec.roots() {
        Some(roots) => HomSeq::from_roots(roots),
        None => HomSeq::from_elem(spec.elem().clone()),
    }
}
