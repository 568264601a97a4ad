//! Banded Toeplitz symbols and the closed forms for their minors,
//! determinants, cofactors and eigenvectors.
//!
//! A symbol `a(t) = Σ_{k=p-w}^{p} a_k t^k = a_p t^{p-w} Π (t - z_j)` has
//! `a_j = (-1)^{p-j} a_p e_{p-j}(z)`, so everything below is driven by the
//! `e`/`h` sequences of the zeros. In series mode the `e` sequence is given
//! directly and root-based formulas are unavailable.

mod adjugate;
mod eigen;
mod minors;

use std::sync::OnceLock;

pub use adjugate::{schur_sum_terms, AdjMethod};
pub use eigen::{EigenRequest, GeometricForm};
pub use minors::{skew_schur_as_minor, DetMethod, MinorRequest, MinorVariant};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::partitions::Partition;
use crate::scalar::Scalar;
use crate::schur::{schur, schur_cauchy_binet};
use crate::symcore::{elem_from_roots, h_provider, ElemSeq, HomSeq, RootList};

/// A banded symbol together with its derived `e` sequence and lazily built
/// `h` sequence.
pub struct LaurentSpec<S: Scalar> {
    p: usize,
    lead: S,
    elem: ElemSeq<S>,
    roots: Option<RootList<S>>,
    h: OnceLock<HomSeq<S>>,
}

impl<S: Scalar> Clone for LaurentSpec<S> {
    fn clone(&self) -> Self {
        Self {
            p: self.p,
            lead: self.lead.clone(),
            elem: self.elem.clone(),
            roots: self.roots.clone(),
            h: self.h.clone(),
        }
    }
}

impl<S: Scalar> std::fmt::Debug for LaurentSpec<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LaurentSpec")
            .field("p", &self.p)
            .field("lead", &self.lead)
            .field("e", &self.elem.coeffs())
            .field("series", &self.elem.is_series())
            .field("roots", &self.roots.as_ref().map(RootList::roots))
            .finish()
    }
}

impl<S: Scalar> LaurentSpec<S> {
    /// From coefficients `a_{p-w}, ..., a_p` (ascending powers).
    pub fn from_coefficients(p: usize, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidSymbol("need at least two coefficients (w >= 1)".into()));
        }
        let lead = coeffs.last().cloned().unwrap();
        if lead.is_zero() {
            return Err(Error::InvalidSymbol("leading coefficient a_p must be nonzero".into()));
        }
        let w = coeffs.len() - 1;
        // e_k = (-1)^k a_{p-k} / a_p, and a_{p-k} sits at index w - k
        let e = (0..=w)
            .map(|k| S::sign(k as i64) * coeffs[w - k].clone() / lead.clone())
            .collect();
        Ok(Self::assemble(p, lead, ElemSeq::finite(e)?, None))
    }

    /// From `p`, `a_p` and the zeros `z_1..z_w`.
    pub fn from_roots(p: usize, lead: S, roots: Vec<S>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::InvalidSymbol("need at least one root (w >= 1)".into()));
        }
        if lead.is_zero() {
            return Err(Error::InvalidSymbol("leading coefficient a_p must be nonzero".into()));
        }
        let roots = RootList::new(roots);
        let e = elem_from_roots(&roots);
        Ok(Self::assemble(p, lead, e, Some(roots)))
    }

    /// Series mode: `a(t) = a_p t^p E(-1/t)` with `e_0 = 1, e_1, ..., e_K` known.
    pub fn from_series(p: usize, lead: S, e: Vec<S>) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::InvalidSymbol("leading coefficient a_p must be nonzero".into()));
        }
        Ok(Self::assemble(p, lead, ElemSeq::series(e)?, None))
    }

    fn assemble(p: usize, lead: S, elem: ElemSeq<S>, roots: Option<RootList<S>>) -> Self {
        Self {
            p,
            lead,
            elem,
            roots,
            h: OnceLock::new(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Band parameter; `None` in series mode.
    pub fn w(&self) -> Option<usize> {
        self.elem.w()
    }

    /// `a_p`.
    pub fn lead(&self) -> &S {
        &self.lead
    }

    pub fn elem(&self) -> &ElemSeq<S> {
        &self.elem
    }

    pub fn roots(&self) -> Option<&RootList<S>> {
        self.roots.as_ref()
    }

    pub fn is_series(&self) -> bool {
        self.elem.is_series()
    }

    /// The `h` sequence of the zeros, built on first use.
    pub fn h(&self) -> &HomSeq<S> {
        self.h.get_or_init(|| h_provider(self))
    }

    /// `s_λ` at the zeros. Float symbols with simple zeros use the Cauchy–Binet
    /// expansion; everything else goes through Jacobi–Trudi.
    pub fn schur_value(&self, lam: &Partition) -> Result<S> {
        if !S::EXACT {
            if let Some(roots) = self.roots().filter(|r| r.is_simple()) {
                return schur_cauchy_binet(lam, roots);
            }
        }
        schur(lam, self.h())
    }

    /// `a_j` for any integer `j`.
    pub fn coefficient(&self, j: i64) -> Result<S> {
        let k = self.p as i64 - j;
        if k < 0 {
            return Ok(S::zero());
        }
        Ok(S::sign(k) * self.lead.clone() * self.elem.get(k)?)
    }

    /// `a_{p-w}, ..., a_p`; `None` in series mode.
    pub fn coefficients(&self) -> Option<Vec<S>> {
        let w = self.w()? as i64;
        let p = self.p as i64;
        Some(
            (p - w..=p)
                .map(|j| self.coefficient(j).expect("finite band"))
                .collect(),
        )
    }

    /// `T_n(a) = [a_{j-k}]`.
    pub fn toeplitz_matrix(&self, n: usize) -> Result<DenseMatrix<S>> {
        // a_{j-k} over the matrix needs e up to p + n - 1
        self.elem.get(self.p as i64 + n as i64 - 1)?;
        let diag: Vec<S> = (0..2 * n.max(1) - 1)
            .map(|t| self.coefficient(t as i64 - (n as i64 - 1)))
            .collect::<Result<_>>()?;
        Ok(DenseMatrix::from_fn(n, n, |j, k| {
            diag[(j as i64 - k as i64 + n as i64 - 1) as usize].clone()
        }))
    }

    /// The symbol `a - x` (only `a_0` changes). Roots are dropped: the zeros of
    /// `a - x` are not derivable from those of `a` without a root finder.
    pub fn shifted(&self, x: &S) -> Result<Self> {
        if let Some(w) = self.w() {
            let lo = (self.p as i64 - w as i64).min(0);
            let mut coeffs: Vec<S> = (lo..=self.p as i64)
                .map(|j| self.coefficient(j))
                .collect::<Result<_>>()?;
            let zero_idx = (-lo) as usize;
            coeffs[zero_idx] = coeffs[zero_idx].clone() - x.clone();
            return Self::from_coefficients(self.p, coeffs);
        }
        let mut e = self.elem.coeffs().to_vec();
        if self.p == 0 {
            let lead = self.lead.clone() - x.clone();
            if lead.is_zero() {
                return Err(Error::InvalidSymbol("a_p - x vanishes".into()));
            }
            let ratio = self.lead.clone() / lead.clone();
            for ek in e.iter_mut().skip(1) {
                *ek = ek.clone() * ratio.clone();
            }
            return Self::from_series(0, lead, e);
        }
        if e.len() <= self.p {
            return Err(Error::SeriesTruncation {
                needed: self.p as i64,
                available: self.elem.known_degree(),
            });
        }
        // a_0 = (-1)^p a_p e_p
        e[self.p] = e[self.p].clone() - S::sign(self.p as i64) * x.clone() / self.lead.clone();
        Self::from_series(self.p, self.lead.clone(), e)
    }
}
