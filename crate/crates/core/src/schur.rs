//! Evaluation of (skew) Schur polynomials: Jacobi–Trudi in `h`, the dual
//! form in `e`, and the (confluent) bialternant quotient at explicit roots.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::partitions::{Partition, SkewPartition};
use crate::scalar::Scalar;
use crate::symcore::{ElemSeq, HomSeq, RootList};

/// `[h_{λ_j - μ_k - j + k}]`, of order `max(ℓ(λ), ℓ(μ))` with both shapes
/// zero-padded. Defined for invalid pairs as well.
pub fn jt_matrix<S: Scalar>(sp: &SkewPartition, h: &HomSeq<S>) -> Result<DenseMatrix<S>> {
    let order = sp.outer.len().max(sp.inner.len());
    let lam = sp.outer.padded(order);
    let mu = sp.inner.padded(order);
    let mut rows = Vec::with_capacity(order);
    for j in 0..order {
        let mut row = Vec::with_capacity(order);
        for k in 0..order {
            let deg = lam[j] as i64 - mu[k] as i64 - j as i64 + k as i64;
            row.push(h.get(deg)?);
        }
        rows.push(row);
    }
    DenseMatrix::from_rows(rows)
}

/// `s_{λ/μ} = det JT(λ/μ)`; zero when `μ ⊄ λ`.
pub fn skew_schur<S: Scalar>(sp: &SkewPartition, h: &HomSeq<S>) -> Result<S> {
    if !sp.is_valid() {
        return Ok(S::zero());
    }
    jt_matrix(sp, h)?.det()
}

/// `s_λ`, a convenience wrapper over [`skew_schur`].
pub fn schur<S: Scalar>(lam: &Partition, h: &HomSeq<S>) -> Result<S> {
    skew_schur(&SkewPartition::straight(lam.clone()), h)
}

/// `s_{λ/μ} = det[e_{λ'_j - μ'_k - j + k}]` of order `λ_1`.
pub fn skew_schur_dual<S: Scalar>(sp: &SkewPartition, e: &ElemSeq<S>) -> Result<S> {
    if !sp.is_valid() {
        return Ok(S::zero());
    }
    let order = sp.outer.first();
    let lam_c = sp.outer.conjugate().padded(order);
    let mu_c = sp.inner.conjugate().padded(order);
    let mut rows = Vec::with_capacity(order);
    for j in 0..order {
        let mut row = Vec::with_capacity(order);
        for k in 0..order {
            let deg = lam_c[j] as i64 - mu_c[k] as i64 - j as i64 + k as i64;
            row.push(e.get(deg)?);
        }
        rows.push(row);
    }
    DenseMatrix::from_rows(rows)?.det()
}

/// `m (m-1) ... (m-q+1)`.
fn falling_factorial<S: Scalar>(m: u64, q: usize) -> S {
    (0..q as u64).fold(S::one(), |acc, i| acc * S::from_i64((m - i) as i64))
}

/// Generalized Vandermonde matrix `[z_k^{exponent_j}]`. Repeated roots get
/// derivative columns `d^q/dt^q t^{e} = e!/(e-q)! t^{e-q}`, `q < multiplicity`.
pub fn confluent_vandermonde<S: Scalar>(exponents: &[u64], roots: &RootList<S>) -> DenseMatrix<S> {
    let w = roots.len();
    let mut cols: Vec<Vec<S>> = Vec::with_capacity(w);
    for (z, mult) in roots.groups() {
        for q in 0..mult {
            cols.push(
                exponents
                    .iter()
                    .map(|&e| {
                        if (q as u64) > e {
                            S::zero()
                        } else {
                            falling_factorial::<S>(e, q) * z.pow(e - q as u64)
                        }
                    })
                    .collect(),
            );
        }
    }
    DenseMatrix::from_fn(exponents.len(), w, |j, k| cols[k][j].clone())
}

/// Row exponents `λ_j + w - j` of `A_λ` (one-based `j`).
pub fn bialternant_exponents(lam: &Partition, w: usize) -> Vec<u64> {
    (0..w).map(|j| (lam.part(j) + w - 1 - j) as u64).collect()
}

/// The (confluent) Vandermonde determinant `V = det A_{(0^w)}`.
pub fn vandermonde_det<S: Scalar>(roots: &RootList<S>) -> Result<S> {
    let w = roots.len();
    let v = confluent_vandermonde(&bialternant_exponents(&Partition::empty(), w), roots).det()?;
    if v.is_zero() || !v.log2_abs().is_finite() {
        return Err(Error::DegenerateDenominator);
    }
    Ok(v)
}

/// `s_λ(z) = det A_λ(z) / det A_{(0^w)}(z)`, with derivative columns for
/// repeated roots. Zero when `ℓ(λ) > w`.
pub fn schur_bialternant<S: Scalar>(lam: &Partition, roots: &RootList<S>) -> Result<S> {
    let w = roots.len();
    if lam.len() > w {
        return Ok(S::zero());
    }
    let denom = vandermonde_det(roots)?;
    let numer = confluent_vandermonde(&bialternant_exponents(lam, w), roots).det()?;
    Ok(numer / denom)
}

/// `s_λ` at simple zeros, expanded by Cauchy–Binet over the rank-one terms of
/// `h_r = Σ_l c_l z_l^{r+w-1}`, `c_l = 1/Π_{k≠l}(z_l - z_k)`:
/// `s_λ = Σ_{|S|=ℓ} Π_{l∈S} c_l · det[z_l^{λ_j-j+w}] · Π_{a<b∈S}(z_b - z_a)`.
///
/// Each summand is a small determinant of natural size, so the result does
/// not inherit the cancellation of the `ℓ x ℓ` Jacobi–Trudi determinant when
/// the zeros have very different moduli.
pub fn schur_cauchy_binet<S: Scalar>(lam: &Partition, roots: &RootList<S>) -> Result<S> {
    if let Some((i, j)) = roots.first_collision() {
        return Err(Error::RepeatedRoots(i, j));
    }
    let z = roots.roots();
    let w = z.len();
    let l = lam.len();
    if l > w {
        return Ok(S::zero());
    }
    if l == 0 {
        return Ok(S::one());
    }
    let weights: Vec<S> = (0..w)
        .map(|a| {
            let denom = (0..w)
                .filter(|&b| b != a)
                .fold(S::one(), |acc, b| acc * (z[a].clone() - z[b].clone()));
            S::one() / denom
        })
        .collect();
    let exps: Vec<u64> = (0..l).map(|j| (lam.part(j) + w - 1 - j) as u64).collect();
    // z_l^{e_j} for every needed (j, l)
    let powers: Vec<Vec<S>> = exps.iter().map(|&e| z.iter().map(|x| x.pow(e)).collect()).collect();

    let mut total = S::zero();
    let mut subset: Vec<usize> = (0..l).collect();
    loop {
        let gv = DenseMatrix::from_fn(l, l, |j, k| powers[j][subset[k]].clone()).det()?;
        let mut term = subset.iter().fold(gv, |acc, &a| acc * weights[a].clone());
        for a in 0..l {
            for b in a + 1..l {
                term = term * (z[subset[b]].clone() - z[subset[a]].clone());
            }
        }
        total = total + term;
        let Some(i) = (0..l).rev().find(|&i| subset[i] < w - l + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..l {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(total)
}
