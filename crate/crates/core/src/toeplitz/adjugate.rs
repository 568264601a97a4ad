use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::partitions::{Partition, SkewPartition};
use crate::scalar::Scalar;
use crate::schur::skew_schur;

use super::{DetMethod, LaurentSpec};

/// Four equivalent closed forms for `adj(T_n(a))_{r,s}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AdjMethod {
    /// `s_{((n-1)^p, s-1)/(r-1)}`
    #[default]
    Skew,
    /// `s_{((n-1)^p, n-r)/(n-s)}`
    SkewFlipped,
    /// Sum of straight Schur polynomials from the skew Pieri rule; `p >= 1`.
    SchurSum,
    /// `p + 1` terms, independent of `n`.
    Trench,
}

impl AdjMethod {
    pub const ALL: [AdjMethod; 4] = [
        AdjMethod::Skew,
        AdjMethod::SkewFlipped,
        AdjMethod::SchurSum,
        AdjMethod::Trench,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AdjMethod::Skew => "skew",
            AdjMethod::SkewFlipped => "skew_flipped",
            AdjMethod::SchurSum => "schur_sum",
            AdjMethod::Trench => "trench",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// The partitions `((n-1)^{p-1}, n+s-r-1-k, k)` for
/// `k = max(0, s-r) ..= min(n-r, s-1)`. Their count is
/// `min(r, s, n+1-r, n+1-s)`.
pub fn schur_sum_terms(n: usize, p: usize, r: usize, s: usize) -> Vec<Partition> {
    assert!(p >= 1 && 1 <= r && r <= n && 1 <= s && s <= n);
    let lo = s.saturating_sub(r);
    let hi = (n - r).min(s - 1);
    (lo..=hi)
        .map(|k| {
            let mut parts = vec![n - 1; p - 1];
            parts.push(n + s - r - 1 - k);
            parts.push(k);
            Partition::new(parts).expect("weakly decreasing by construction")
        })
        .collect()
}

fn rect_then(value: usize, count: usize, tail: &[usize]) -> Partition {
    let mut parts = vec![value; count];
    parts.extend_from_slice(tail);
    Partition::new(parts).expect("weakly decreasing by construction")
}

impl<S: Scalar> LaurentSpec<S> {
    fn check_index(&self, n: usize, r: usize, s: usize) -> Result<()> {
        if n == 0 || r == 0 || s == 0 || r > n || s > n {
            return Err(Error::InvalidIndex { n, r, s });
        }
        Ok(())
    }

    /// `adj(T_n(a))_{r,s}` (one-based indices).
    pub fn adjugate_entry(&self, n: usize, r: usize, s: usize, method: AdjMethod) -> Result<S> {
        self.check_index(n, r, s)?;
        let p = self.p;
        let h = self.h();
        let lead_pow = self.lead.pow(n as u64 - 1);
        if p == 0 {
            if method == AdjMethod::SchurSum {
                return Err(Error::MethodUnavailable("schur_sum with p = 0"));
            }
            // T_n is upper triangular, so is its adjugate
            return Ok(lead_pow * h.get(s as i64 - r as i64)?);
        }
        let prefactor = S::sign((p * (n - 1)) as i64) * lead_pow;
        let value = match method {
            AdjMethod::Skew => {
                let outer = rect_then(n - 1, p, &[s - 1]);
                skew_schur(&SkewPartition::new(outer, rect_then(r - 1, 1, &[])), h)?
            }
            AdjMethod::SkewFlipped => {
                let outer = rect_then(n - 1, p, &[n - r]);
                skew_schur(&SkewPartition::new(outer, rect_then(n - s, 1, &[])), h)?
            }
            AdjMethod::SchurSum => {
                let mut total = S::zero();
                for nu in schur_sum_terms(n, p, r, s) {
                    total = total + self.schur_value(&nu)?;
                }
                total
            }
            AdjMethod::Trench => {
                let mut total = h.get(s as i64 - r as i64 - p as i64)? * self.schur_value(&Partition::rectangle(n, p))?;
                for k in 0..p {
                    let mut parts = vec![n; p - k - 1];
                    parts.extend(std::iter::repeat(n - 1).take(k));
                    parts.push(n - r);
                    let nu = Partition::new(parts).expect("weakly decreasing by construction");
                    let term = h.get(s as i64 + k as i64 - p as i64)? * self.schur_value(&nu)?;
                    total = total - S::sign(k as i64) * term;
                }
                // the Trench form carries (-1)^{pn}, one extra factor (-1)^p
                S::sign(p as i64) * total
            }
        };
        Ok(prefactor * value)
    }

    /// `(T_n(a)^{-1})_{r,s}`.
    pub fn inverse_entry(&self, n: usize, r: usize, s: usize) -> Result<S> {
        self.check_index(n, r, s)?;
        let det = self.nonsingular_determinant(n)?;
        Ok(self.adjugate_entry(n, r, s, AdjMethod::default())? / det)
    }

    fn nonsingular_determinant(&self, n: usize) -> Result<S> {
        let det = self.determinant(n, DetMethod::default())?;
        if det.is_zero() || !det.log2_abs().is_finite() {
            return Err(Error::SingularMatrix);
        }
        Ok(det)
    }

    /// `adj(T_n(a))_{r,1} = a_p^{n-1} (-1)^{p(n-1)} s_{((n-1)^{p-1}, n-r)}`.
    pub fn adj_first_column(&self, n: usize) -> Result<Vec<S>> {
        if n == 0 {
            return Err(Error::InvalidIndex { n, r: 1, s: 1 });
        }
        let p = self.p;
        if p == 0 {
            return (1..=n)
                .map(|r| self.adjugate_entry(n, r, 1, AdjMethod::Skew))
                .collect();
        }
        let prefactor = S::sign((p * (n - 1)) as i64) * self.lead.pow(n as u64 - 1);
        (1..=n)
            .map(|r| Ok(prefactor.clone() * self.schur_value(&rect_then(n - 1, p - 1, &[n - r]))?))
            .collect()
    }

    /// Full adjugate, entries evaluated in parallel and stored row-major.
    pub fn adjugate_matrix(&self, n: usize, method: AdjMethod) -> Result<DenseMatrix<S>> {
        let entries = self.adjugate_entries(n, method)?;
        Ok(DenseMatrix::from_fn(n, n, |i, j| entries[i * n + j].clone()))
    }

    /// Row-major list of all `n^2` adjugate entries.
    pub fn adjugate_entries(&self, n: usize, method: AdjMethod) -> Result<Vec<S>> {
        self.check_index(n, 1, 1)?;
        // warm the h cache up to the largest degree any entry touches
        self.h().get((n + self.p) as i64)?;
        (0..n * n)
            .into_par_iter()
            .map(|idx| self.adjugate_entry(n, idx / n + 1, idx % n + 1, method))
            .collect()
    }

    /// Full inverse, row-major.
    pub fn inverse_matrix(&self, n: usize) -> Result<DenseMatrix<S>> {
        let det = self.nonsingular_determinant(n)?;
        let adj = self.adjugate_entries(n, AdjMethod::default())?;
        Ok(DenseMatrix::from_fn(n, n, |i, j| adj[i * n + j].clone() / det.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn tridiagonal() -> LaurentSpec<Rational> {
        LaurentSpec::from_coefficients(1, vec![q(2), q(-3), q(1)]).unwrap()
    }

    #[test]
    fn two_by_two_examples() {
        let a = tridiagonal();
        for m in AdjMethod::ALL {
            assert_eq!(a.adjugate_entry(2, 1, 1, m).unwrap(), q(-3), "{}", m.name());
        }
        assert_eq!(
            a.adjugate_matrix(2, AdjMethod::Trench).unwrap().to_rows(),
            vec![vec![q(-3), q(-2)], vec![q(-1), q(-3)]]
        );
        assert_eq!(a.inverse_entry(2, 1, 1).unwrap(), Rational::new((-3).into(), 7.into()));
        assert_eq!(a.adj_first_column(2).unwrap(), vec![q(-3), q(-1)]);
        assert_eq!(a.adj_first_column(1).unwrap(), vec![q(1)]);
        assert_eq!(a.inverse_entry(1, 1, 1).unwrap(), Rational::new((-1).into(), 3.into()));
    }

    #[test]
    fn index_errors() {
        let a = tridiagonal();
        assert!(matches!(a.adjugate_entry(3, 0, 1, AdjMethod::Skew), Err(Error::InvalidIndex { .. })));
        assert!(matches!(a.adjugate_entry(3, 1, 4, AdjMethod::Skew), Err(Error::InvalidIndex { .. })));
    }

    #[test]
    fn upper_triangular_case() {
        let a = LaurentSpec::from_coefficients(0, vec![q(1), q(-2), q(3)]).unwrap();
        let n = 4;
        let t = a.toeplitz_matrix(n).unwrap();
        let adj = a.adjugate_matrix(n, AdjMethod::Skew).unwrap();
        let prod = t.mul(&adj).unwrap();
        let det = q(3).pow(4);
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { det.clone() } else { q(0) };
                assert_eq!(*prod.get(i, j), expect);
                if j < i {
                    assert_eq!(*adj.get(i, j), q(0));
                }
            }
        }
        assert!(matches!(
            a.adjugate_entry(n, 1, 1, AdjMethod::SchurSum),
            Err(Error::MethodUnavailable(_))
        ));
        assert_eq!(
            a.adjugate_entry(n, 2, 3, AdjMethod::Trench).unwrap(),
            a.adjugate_entry(n, 2, 3, AdjMethod::SkewFlipped).unwrap()
        );
    }

    #[test]
    fn singular_inverse_rejected() {
        // t + t^{-1} at n = 3 has det 0
        let a = LaurentSpec::from_coefficients(1, vec![q(1), q(0), q(1)]).unwrap();
        assert!(matches!(a.inverse_entry(3, 1, 1), Err(Error::SingularMatrix)));
    }

    #[test]
    fn printed_summand_table() {
        let table = [
            [1, 1, 1, 1, 1],
            [1, 2, 2, 2, 1],
            [1, 2, 3, 2, 1],
            [1, 2, 2, 2, 1],
            [1, 1, 1, 1, 1],
        ];
        for r in 1..=5 {
            for s in 1..=5 {
                assert_eq!(schur_sum_terms(5, 2, r, s).len(), table[r - 1][s - 1]);
            }
        }
    }
}
