//! Zeros of a banded symbol by Aberth–Ehrlich iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symcore::RootList;
use crate::toeplitz::LaurentSpec;

pub const MAX_ITERATIONS: usize = 500;
pub const RESIDUAL_TOL: f64 = 1e-12;

/// Extra sweeps after the residual test first passes.
const POLISH_SWEEPS: usize = 3;

/// `P(z)` and `P'(z)` for `P(t) = Σ_k c_k t^{w-k}` (descending powers) by Horner.
fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = c[0];
    let mut dp = Complex64::new(0.0, 0.0);
    for &ck in &c[1..] {
        dp = dp * z + p;
        p = p * z + ck;
    }
    (p, dp)
}

/// `Σ_k |c_k| |z|^{w-k}`, the natural scale of `|P(z)|`.
fn residual_scale(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().fold(0.0, |acc, ck| acc * r + ck.norm())
}

fn converged(c: &[Complex64], z: Complex64) -> bool {
    horner(c, z).0.norm() <= RESIDUAL_TOL * residual_scale(c, z)
}

/// All zeros of the polynomial with descending coefficients `c` (`c[0] != 0`).
pub fn aberth_ehrlich(c: &[Complex64]) -> Result<Vec<Complex64>> {
    let w = c.len().saturating_sub(1);
    if w == 0 {
        return Ok(Vec::new());
    }
    let c: Vec<Complex64> = c.iter().map(|&ck| ck / c[0]).collect();
    if w == 1 {
        return Ok(vec![-c[1]]);
    }
    // Fujiwara-type bound on the moduli sets the radius of the starting circle.
    let radius = (1..=w)
        .map(|k| c[k].norm().powf(1.0 / k as f64))
        .fold(0.0_f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..w)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / w as f64))
        .collect();

    let mut polish_left = None;
    for _ in 0..MAX_ITERATIONS {
        for i in 0..w {
            let (p, dp) = horner(&c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..w)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .filter(|t| t.is_finite())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
            }
        }
        match polish_left {
            Some(0) => return Ok(z),
            Some(k) => polish_left = Some(k - 1),
            None if z.iter().all(|&zi| converged(&c, zi)) => polish_left = Some(POLISH_SWEEPS),
            None => {}
        }
    }
    if z.iter().all(|&zi| converged(&c, zi)) {
        return Ok(z);
    }
    Err(Error::NonConvergence(MAX_ITERATIONS))
}

/// The `w` zeros of `t^{w-p} a(t) / a_p`, grouped by multiplicity.
pub fn find_roots<S: Scalar>(a: &LaurentSpec<S>) -> Result<RootList<S>> {
    if a.is_series() {
        return Err(Error::SeriesModeRootless);
    }
    if S::EXACT {
        return Err(Error::MissingRoots);
    }
    // Π (t - z_j) = Σ_k (-1)^k e_k t^{w-k}
    let c: Vec<Complex64> = a
        .elem()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, ek)| {
            let v = ek.to_complex();
            if k % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    if c.iter().any(|ck| !ck.is_finite()) {
        return Err(Error::InvalidSymbol("coefficients exceed the double range".into()));
    }
    let roots = aberth_ehrlich(&c)?;
    let roots = roots
        .into_iter()
        .map(|z| S::approx_from_complex(z).ok_or(Error::MissingRoots))
        .collect::<Result<Vec<S>>>()?;
    Ok(RootList::new(roots))
}
