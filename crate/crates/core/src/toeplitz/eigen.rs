use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::roots::find_roots;
use crate::scalar::Scalar;
use crate::schur::{bialternant_exponents, confluent_vandermonde, vandermonde_det};
use crate::symcore::{elem_from_roots, RootList};

use super::LaurentSpec;

/// Order `n`, candidate eigenvalue `x`, and optionally the zeros of `a - x`.
#[derive(Clone, Debug)]
pub struct EigenRequest<S: Scalar> {
    pub n: usize,
    pub x: S,
    pub shifted_roots: Option<Vec<S>>,
}

impl<S: Scalar> EigenRequest<S> {
    pub fn new(n: usize, x: S) -> Self {
        Self {
            n,
            x,
            shifted_roots: None,
        }
    }

    pub fn with_roots(mut self, roots: Vec<S>) -> Self {
        self.shifted_roots = Some(roots);
        self
    }
}

/// `v_r = Σ_j C_j z_j^{n-r+w-p}` (derivative columns for repeated zeros).
#[derive(Clone, Debug)]
pub struct GeometricForm<S: Scalar> {
    /// `C_1..C_w`, one per column of the (confluent) Vandermonde matrix.
    pub coefficients: Vec<S>,
    pub v: Vec<S>,
    pub confluent: bool,
    pub roots: RootList<S>,
}

/// Largest relative mismatch tolerated between supplied float zeros and the
/// coefficients of `a - x`.
const FLOAT_ROOT_CHECK: f64 = 1e-6;

fn shape(n: usize, p: usize, r: usize) -> Partition {
    let mut parts = vec![n - 1; p - 1];
    parts.push(n - r);
    Partition::new(parts).expect("weakly decreasing by construction")
}

impl<S: Scalar> LaurentSpec<S> {
    fn check_eigen(&self, req: &EigenRequest<S>) -> Result<()> {
        if self.p == 0 {
            return Err(Error::RequiresPositiveP);
        }
        if req.n == 0 {
            return Err(Error::InvalidIndex { n: 0, r: 1, s: 1 });
        }
        Ok(())
    }

    /// The symbol `a - x`, carrying its zeros when they are supplied or, on
    /// the float backend, computable.
    pub fn shifted_symbol(&self, req: &EigenRequest<S>) -> Result<LaurentSpec<S>> {
        let shifted = self.shifted(&req.x)?;
        if let Some(z) = &req.shifted_roots {
            let with_roots = LaurentSpec::from_roots(shifted.p, shifted.lead.clone(), z.clone())?;
            if !shifted.is_series() {
                check_same_elem(&shifted, &with_roots)?;
            }
            return Ok(with_roots);
        }
        if !S::EXACT && !shifted.is_series() {
            if let Ok(roots) = find_roots(&shifted) {
                return LaurentSpec::from_roots(shifted.p, shifted.lead.clone(), roots.roots().to_vec());
            }
        }
        Ok(shifted)
    }

    /// `v_r = s_{((n-1)^{p-1}, n-r)}` at the zeros of `a - x`.
    ///
    /// `T_n(a) v - x v = (-1)^p a_p s_{(n^p)} e_1`, so `v` is an eigenvector
    /// exactly when `x` is an eigenvalue (and `v` may still vanish).
    pub fn eigenvector(&self, req: &EigenRequest<S>) -> Result<Vec<S>> {
        self.check_eigen(req)?;
        let sym = self.shifted_symbol(req)?;
        let n = req.n;
        if sym.roots().is_none() || S::EXACT {
            sym.h().get((n + self.p) as i64)?;
        }
        (1..=n).map(|r| sym.schur_value(&shape(n, self.p, r))).collect()
    }

    /// `T_n(a) v - x v`.
    pub fn eigen_residual(&self, n: usize, x: &S, v: &[S]) -> Result<Vec<S>> {
        let tv = self.toeplitz_matrix(n)?.mul_vec(v)?;
        Ok(tv
            .into_iter()
            .zip(v)
            .map(|(t, vi)| t - x.clone() * vi.clone())
            .collect())
    }

    /// `C_j = (-1)^{p-1} adj(D)_{j,1} / V` with `D = A_{(n^p)}` at the zeros of
    /// `a - x`, and the reconstruction of `v` from them.
    pub fn geometric_form(&self, req: &EigenRequest<S>) -> Result<GeometricForm<S>> {
        self.check_eigen(req)?;
        if self.is_series() {
            return Err(Error::SeriesModeRootless);
        }
        let sym = self.shifted_symbol(req)?;
        let roots = sym
            .roots()
            .cloned()
            .ok_or(if S::EXACT { Error::MissingRoots } else { Error::NonConvergence(crate::roots::MAX_ITERATIONS) })?;
        let (n, p, w) = (req.n, self.p, roots.len());
        if p > w {
            return Err(Error::MethodUnavailable("geometric form with p > w"));
        }
        let vdm = vandermonde_det(&roots)?;
        let d = confluent_vandermonde(&bialternant_exponents(&Partition::rectangle(n, p), w), &roots);
        let coefficients = (0..w)
            .map(|j| Ok(S::sign((p - 1 + j) as i64) * d.strike(0, j).det()? / vdm.clone()))
            .collect::<Result<Vec<S>>>()?;
        let v = (1..=n)
            .map(|r| {
                let row = confluent_vandermonde(&[(n - r + w - p) as u64], &roots);
                coefficients
                    .iter()
                    .zip(row.row(0))
                    .fold(S::zero(), |acc, (c, b)| acc + c.clone() * b.clone())
            })
            .collect();
        Ok(GeometricForm {
            coefficients,
            v,
            confluent: !roots.is_simple(),
            roots,
        })
    }
}

fn check_same_elem<S: Scalar>(expected: &LaurentSpec<S>, given: &LaurentSpec<S>) -> Result<()> {
    let a = expected.elem().coeffs();
    let b = elem_from_roots(given.roots().expect("built from roots"));
    let b = b.coeffs();
    let mismatch = || Error::InvalidSymbol("supplied roots are not the zeros of a - x".into());
    if a.len() != b.len() {
        return Err(mismatch());
    }
    if S::EXACT {
        return if a == b { Ok(()) } else { Err(mismatch()) };
    }
    let scale = a.iter().map(Scalar::abs_f64).fold(1.0, f64::max);
    for (x, y) in a.iter().zip(b) {
        if (x.clone() - y.clone()).abs_f64() > FLOAT_ROOT_CHECK * scale {
            return Err(mismatch());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, ScaledComplex};

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn symmetric_tridiagonal_example() {
        // t + t^{-1}, n = 2, x = 1: T_2 = [[0,1],[1,0]]
        let a = LaurentSpec::from_coefficients(1, vec![q(1), q(0), q(1)]).unwrap();
        let req = EigenRequest::new(2, q(1));
        let v = a.eigenvector(&req).unwrap();
        assert_eq!(v, vec![q(1), q(1)]);
        assert!(a.eigen_residual(2, &q(1), &v).unwrap().iter().all(|r| r.is_zero()));
        assert_eq!(a.eigenvector(&EigenRequest::new(1, q(0))).unwrap(), vec![q(1)]);
    }

    #[test]
    fn hessenberg_case_is_h_sequence() {
        let a = LaurentSpec::from_coefficients(1, vec![q(2), q(-1), q(5), q(1)]).unwrap();
        let x = Rational::new(3.into(), 7.into());
        let v = a.eigenvector(&EigenRequest::new(5, x.clone())).unwrap();
        let h = a.shifted(&x).unwrap();
        let expect: Vec<Rational> = (1..=5).map(|r| h.h().get(5 - r).unwrap()).collect();
        assert_eq!(v, expect);
    }

    #[test]
    fn exact_geometric_form_with_supplied_roots() {
        // a - x = (t - 1)(t + 1)(t - 2) t^{-1}; x need not be an eigenvalue here
        let z = vec![q(1), q(-1), q(2)];
        let x = q(3);
        let base = LaurentSpec::from_roots(2, q(1), z.clone()).unwrap();
        let coeffs = base.coefficients().unwrap();
        let mut shifted_back = coeffs.clone();
        // a_0 sits at index w - p = 1
        shifted_back[1] = shifted_back[1].clone() + x.clone();
        let a = LaurentSpec::from_coefficients(2, shifted_back).unwrap();
        let req = EigenRequest::new(4, x).with_roots(z);
        let g = a.geometric_form(&req).unwrap();
        assert!(!g.confluent);
        assert_eq!(g.v, a.eigenvector(&req).unwrap());
        let bad = EigenRequest::new(4, q(3)).with_roots(vec![q(1), q(1), q(2)]);
        assert!(a.eigenvector(&bad).is_err());
    }

    #[test]
    fn p_zero_rejected() {
        let a = LaurentSpec::from_coefficients(0, vec![q(1), q(2)]).unwrap();
        assert!(matches!(a.eigenvector(&EigenRequest::new(3, q(0))), Err(Error::RequiresPositiveP)));
    }

    #[test]
    fn float_geometric_matches_schur() {
        let s = |re, im| ScaledComplex::new(re, im);
        let a = LaurentSpec::from_coefficients(2, vec![s(0.5, 0.0), s(1.0, 0.2), s(-2.0, 0.0), s(0.3, 0.1), s(1.0, 0.0)])
            .unwrap();
        let req = EigenRequest::new(12, s(0.7, -0.4));
        let g = a.geometric_form(&req).unwrap();
        let v = a.eigenvector(&req).unwrap();
        for (x, y) in g.v.iter().zip(&v) {
            assert!(crate::scalar::relative_deviation(x, y) < 1e-8);
        }
    }
}
