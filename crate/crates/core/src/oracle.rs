//! Brute-force reference implementations for the test suites. Nothing here
//! calls the evaluators it is meant to check.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::partitions::SkewPartition;
use crate::scalar::Scalar;
use crate::symcore::RootList;

pub const LAPLACE_LIMIT: usize = 10;
pub const COFACTOR_LIMIT: usize = 8;
pub const SSYT_WEIGHT_LIMIT: usize = 10;
pub const VARIABLE_LIMIT: usize = 4;
pub const DEGREE_LIMIT: i64 = 8;

/// Cofactor expansion along the first row.
pub fn det_laplace<S: Scalar>(m: &DenseMatrix<S>) -> Result<S> {
    if m.as_slice().is_empty() {
        return Ok(S::one());
    }
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > LAPLACE_LIMIT {
        return Err(Error::OrderTooLarge {
            order: m.rows(),
            limit: LAPLACE_LIMIT,
        });
    }
    let cols: Vec<usize> = (0..m.cols()).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace<S: Scalar>(m: &DenseMatrix<S>, row: usize, cols: &[usize]) -> S {
    if cols.is_empty() {
        return S::one();
    }
    let mut total = S::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.clone() * laplace(m, row + 1, &rest);
        total = if k % 2 == 0 { total + term } else { total - term };
    }
    total
}

/// `adj(M)_{r,s} = (-1)^{r+s} det(M without row s and column r)`.
pub fn adj_cofactor<S: Scalar>(m: &DenseMatrix<S>) -> Result<DenseMatrix<S>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n > COFACTOR_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            limit: COFACTOR_LIMIT,
        });
    }
    let mut out = DenseMatrix::zeros(n, n);
    for r in 0..n {
        for s in 0..n {
            let minor = det_laplace(&m.strike(s, r))?;
            out.set(r, s, if (r + s) % 2 == 0 { minor } else { -minor });
        }
    }
    Ok(out)
}

/// Sum over semistandard fillings of `λ/μ` with entries in `1..=w` of the
/// product `Π z_entry`.
pub fn ssyt_skew_schur<S: Scalar>(sp: &SkewPartition, roots: &RootList<S>) -> Result<S> {
    let w = roots.len();
    if sp.outer.weight() > SSYT_WEIGHT_LIMIT || w > VARIABLE_LIMIT {
        return Err(Error::SizeTooLarge(format!(
            "|outer| = {}, w = {w}; limits {SSYT_WEIGHT_LIMIT} and {VARIABLE_LIMIT}",
            sp.outer.weight()
        )));
    }
    if !sp.is_valid() {
        return Ok(S::zero());
    }
    let rows = sp.outer.len();
    let lam = sp.outer.padded(rows);
    let mu = sp.inner.padded(rows);
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|i| (mu[i]..lam[i]).map(move |j| (i, j)))
        .collect();
    let mut fill = vec![vec![0usize; lam.first().copied().unwrap_or(0)]; rows];
    let z = roots.roots();
    let mut total = S::zero();
    fill_cells(&cells, 0, &mu, &mut fill, w, &mut |f| {
        let term = cells.iter().fold(S::one(), |acc, &(i, j)| acc * z[f[i][j] - 1].clone());
        total = total.clone() + term;
    });
    Ok(total)
}

fn fill_cells(
    cells: &[(usize, usize)],
    idx: usize,
    mu: &[usize],
    fill: &mut Vec<Vec<usize>>,
    w: usize,
    visit: &mut dyn FnMut(&Vec<Vec<usize>>),
) {
    if idx == cells.len() {
        visit(fill);
        return;
    }
    let (i, j) = cells[idx];
    let mut lo = 1;
    if j > mu[i] {
        lo = lo.max(fill[i][j - 1]);
    }
    if i > 0 && j >= mu[i - 1] {
        lo = lo.max(fill[i - 1][j] + 1);
    }
    for v in lo..=w {
        fill[i][j] = v;
        fill_cells(cells, idx + 1, mu, fill, w, visit);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    Elementary,
    Homogeneous,
}

/// `e_r` or `h_r` by enumerating index subsets or multisets.
pub fn sym_bruteforce<S: Scalar>(kind: SymKind, r: i64, roots: &RootList<S>) -> Result<S> {
    let w = roots.len();
    if w > VARIABLE_LIMIT || r > DEGREE_LIMIT {
        return Err(Error::SizeTooLarge(format!("w = {w}, r = {r}")));
    }
    if r < 0 {
        return Ok(S::zero());
    }
    let z = roots.roots();
    let mut total = S::zero();
    let mut idx = Vec::with_capacity(r as usize);
    enumerate(kind, r as usize, w, 0, &mut idx, &mut |chosen| {
        let term = chosen.iter().fold(S::one(), |acc, &k| acc * z[k].clone());
        total = total.clone() + term;
    });
    Ok(total)
}

fn enumerate(
    kind: SymKind,
    r: usize,
    w: usize,
    start: usize,
    idx: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if idx.len() == r {
        visit(idx);
        return;
    }
    for k in start..w {
        idx.push(k);
        let next = if kind == SymKind::Elementary { k + 1 } else { k };
        enumerate(kind, r, w, next, idx, visit);
        idx.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::scalar::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn m(rows: &[&[i64]]) -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    fn roots(v: &[i64]) -> RootList<Rational> {
        RootList::new(v.iter().map(|&x| q(x)).collect())
    }

    fn sp(o: &[usize], i: &[usize]) -> SkewPartition {
        SkewPartition::new(Partition::new(o.to_vec()).unwrap(), Partition::new(i.to_vec()).unwrap())
    }

    #[test]
    fn laplace_examples() {
        assert_eq!(det_laplace(&DenseMatrix::<Rational>::zeros(0, 0)).unwrap(), q(1));
        assert_eq!(det_laplace(&m(&[&[-3, 2], &[1, -3]])).unwrap(), q(7));
        assert_eq!(det_laplace(&m(&[&[-3, 2, 0], &[1, -3, 2], &[0, 1, -3]])).unwrap(), q(-15));
        assert!(matches!(
            det_laplace(&DenseMatrix::<Rational>::identity(11)),
            Err(Error::OrderTooLarge { order: 11, limit: 10 })
        ));
    }

    #[test]
    fn cofactor_examples() {
        assert_eq!(adj_cofactor(&DenseMatrix::<Rational>::identity(3)).unwrap(), DenseMatrix::identity(3));
        assert_eq!(adj_cofactor(&m(&[&[-3, 2], &[1, -3]])).unwrap(), m(&[&[-3, -2], &[-1, -3]]));
    }

    #[test]
    fn tableau_examples() {
        let r = roots(&[1, 2]);
        assert_eq!(ssyt_skew_schur(&sp(&[3, 1], &[3, 1]), &r).unwrap(), q(1));
        assert_eq!(ssyt_skew_schur(&sp(&[1], &[]), &r).unwrap(), q(3));
        assert_eq!(ssyt_skew_schur(&sp(&[2, 1], &[]), &r).unwrap(), q(6));
        assert_eq!(ssyt_skew_schur(&sp(&[2, 2], &[3]), &r).unwrap(), q(0));
        // two disconnected cells: h_1^2
        assert_eq!(ssyt_skew_schur(&sp(&[2, 1], &[1]), &r).unwrap(), q(9));
    }

    #[test]
    fn bruteforce_examples() {
        let r = roots(&[1, 2]);
        assert_eq!(sym_bruteforce(SymKind::Homogeneous, 2, &r).unwrap(), q(7));
        assert_eq!(sym_bruteforce(SymKind::Elementary, 3, &r).unwrap(), q(0));
        assert_eq!(sym_bruteforce(SymKind::Elementary, 2, &r).unwrap(), q(2));
        assert_eq!(sym_bruteforce(SymKind::Homogeneous, 0, &r).unwrap(), q(1));
        assert!(sym_bruteforce(SymKind::Homogeneous, 9, &r).is_err());
    }
}
