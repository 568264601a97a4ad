use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::partitions::{minor_shapes, IndexSet, Partition, SkewPartition};
use crate::scalar::Scalar;
use crate::schur::{schur, schur_bialternant, skew_schur};
use crate::symcore::RootList;

use super::LaurentSpec;

/// Which of the two equivalent skew shapes evaluates a minor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MinorVariant {
    /// `(m^p, rev(ξ - id)) / rev(η - id)`
    #[default]
    Expanded,
    /// `(m^p, m + id - η) / (m + id - ξ)`
    Flipped,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DetMethod {
    /// `(-1)^{pn} a_p^n s_{(n^p)}` through the generic Jacobi–Trudi evaluator.
    Schur,
    /// `(-1)^{pn} a_p^n det[h_{n-j+k}]_{p x p}`.
    #[default]
    BaxterSchmidt,
    /// `(-1)^{pn} a_p^n det A_{(n^p)} / V`; needs the zeros.
    Trench,
    /// Elimination on the full `n x n` matrix.
    Dense,
    /// Elimination restricted to the band, `O(n p w)`.
    Banded,
}

impl DetMethod {
    pub const ALL: [DetMethod; 5] = [
        DetMethod::Schur,
        DetMethod::BaxterSchmidt,
        DetMethod::Trench,
        DetMethod::Dense,
        DetMethod::Banded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DetMethod::Schur => "schur",
            DetMethod::BaxterSchmidt => "baxter_schmidt",
            DetMethod::Trench => "trench",
            DetMethod::Dense => "dense",
            DetMethod::Banded => "banded",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }
}

/// Struck rows `ξ` and struck columns `η` of `T_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorRequest {
    n: usize,
    struck_rows: IndexSet,
    struck_cols: IndexSet,
}

impl MinorRequest {
    pub fn new(n: usize, struck_rows: Vec<usize>, struck_cols: Vec<usize>) -> Result<Self> {
        Self::from_sets(IndexSet::new(n, struck_rows)?, IndexSet::new(n, struck_cols)?)
    }

    pub fn from_sets(struck_rows: IndexSet, struck_cols: IndexSet) -> Result<Self> {
        if struck_rows.len() != struck_cols.len() || struck_rows.n() != struck_cols.n() {
            return Err(Error::ShapeMismatch {
                rows: struck_rows.len(),
                cols: struck_cols.len(),
            });
        }
        Ok(Self {
            n: struck_rows.n(),
            struck_rows,
            struck_cols,
        })
    }

    /// From the kept rows `ρ` and kept columns `σ`.
    pub fn from_kept(kept_rows: &IndexSet, kept_cols: &IndexSet) -> Result<Self> {
        Self::from_sets(kept_rows.complement(), kept_cols.complement())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `d`, the number of struck rows.
    pub fn d(&self) -> usize {
        self.struck_rows.len()
    }

    /// `m = n - d`, the order of the minor.
    pub fn m(&self) -> usize {
        self.n - self.d()
    }

    pub fn struck_rows(&self) -> &IndexSet {
        &self.struck_rows
    }

    pub fn struck_cols(&self) -> &IndexSet {
        &self.struck_cols
    }

    pub fn kept_rows(&self) -> IndexSet {
        self.struck_rows.complement()
    }

    pub fn kept_cols(&self) -> IndexSet {
        self.struck_cols.complement()
    }

    /// `(-1)^{pm + |ρ| + |σ|}` as a parity bit (true = negative).
    ///
    /// `|ρ| + |ξ| = |σ| + |η| = n(n+1)/2`, so `|ρ| + |σ|` and `|ξ| + |η|`
    /// differ by an even number and the complements never need building.
    pub fn sign_is_negative(&self, p: usize) -> bool {
        (p * self.m() + self.struck_rows.total() + self.struck_cols.total()) % 2 == 1
    }

    /// `(λ/μ, α/β)` for this request.
    pub fn shapes(&self, p: usize) -> Result<(SkewPartition, SkewPartition)> {
        minor_shapes(self.n, p, &self.struck_rows, &self.struck_cols)
    }
}

impl<S: Scalar> LaurentSpec<S> {
    /// `det T_n(a)_{ρ,σ} = (-1)^{pm+|ρ|+|σ|} a_p^m s_{shape}`.
    pub fn minor(&self, req: &MinorRequest, variant: MinorVariant) -> Result<S> {
        let (expanded, flipped) = req.shapes(self.p)?;
        let shape = match variant {
            MinorVariant::Expanded => expanded,
            MinorVariant::Flipped => flipped,
        };
        let s = skew_schur(&shape, self.h())?;
        let sign = if req.sign_is_negative(self.p) { -S::one() } else { S::one() };
        Ok(sign * self.lead.pow(req.m() as u64) * s)
    }

    /// The struck submatrix of `T_n(a)`, for direct evaluation.
    pub fn minor_matrix(&self, req: &MinorRequest) -> Result<DenseMatrix<S>> {
        let t = self.toeplitz_matrix(req.n())?;
        let rows: Vec<usize> = req.kept_rows().entries().iter().map(|&i| i - 1).collect();
        let cols: Vec<usize> = req.kept_cols().entries().iter().map(|&i| i - 1).collect();
        Ok(t.select(&rows, &cols))
    }

    /// `det T_n(a)`.
    pub fn determinant(&self, n: usize, method: DetMethod) -> Result<S> {
        if n == 0 {
            return Ok(S::one());
        }
        let p = self.p;
        if p == 0 && !matches!(method, DetMethod::Dense | DetMethod::Banded) {
            return Ok(self.lead.pow(n as u64));
        }
        let prefactor = || S::sign((p * n) as i64) * self.lead.pow(n as u64);
        match method {
            DetMethod::Schur => Ok(prefactor() * schur(&Partition::rectangle(n, p), self.h())?),
            DetMethod::BaxterSchmidt => Ok(prefactor() * self.baxter_schmidt_hdet(n)?),
            DetMethod::Trench => {
                let roots = self.roots().ok_or(if self.is_series() {
                    Error::SeriesModeRootless
                } else {
                    Error::MissingRoots
                })?;
                Ok(prefactor() * schur_bialternant(&Partition::rectangle(n, p), roots)?)
            }
            DetMethod::Dense => self.toeplitz_matrix(n)?.det(),
            DetMethod::Banded => self.banded_determinant(n),
        }
    }

    /// `det[h_{n-j+k}]_{j,k=1}^p`.
    ///
    /// On the float backend with simple zeros the determinant is expanded by
    /// Cauchy–Binet over the rank-one terms of `h_r = Σ_l c_l z_l^{r+w-1}`,
    /// which avoids the cancellation an explicit `p x p` elimination suffers
    /// once the zeros have different moduli and `n` is large.
    pub fn baxter_schmidt_hdet(&self, n: usize) -> Result<S> {
        if !S::EXACT {
            if let Some(roots) = self.roots().filter(|r| r.is_simple()) {
                return Ok(baxter_schmidt_factored(n, self.p, roots));
            }
        }
        self.baxter_schmidt_explicit(n)
    }

    /// The `p x p` matrix of `h` values, eliminated directly.
    pub fn baxter_schmidt_explicit(&self, n: usize) -> Result<S> {
        let p = self.p;
        let h = self.h();
        let mut rows = Vec::with_capacity(p);
        for j in 1..=p {
            let row = (1..=p)
                .map(|k| h.get(n as i64 - j as i64 + k as i64))
                .collect::<Result<Vec<S>>>()?;
            rows.push(row);
        }
        DenseMatrix::from_rows(rows)?.det()
    }

    /// Partial-pivoting elimination that only touches the band (plus the
    /// fill-in pivoting creates).
    pub fn banded_determinant(&self, n: usize) -> Result<S> {
        let w = self
            .w()
            .ok_or(Error::MethodUnavailable("banded elimination in series mode"))?;
        let kl = self.p;
        let ku = w.saturating_sub(self.p);
        let width = 2 * kl + ku + 1;
        let coeffs: Vec<S> = (-(ku as i64)..=kl as i64)
            .map(|j| self.coefficient(j))
            .collect::<Result<_>>()?;
        // row i stores absolute columns i - kl ..= i + ku + kl
        let mut band: Vec<Vec<S>> = (0..n)
            .map(|i| {
                (0..width)
                    .map(|t| {
                        let col = i as i64 - kl as i64 + t as i64;
                        let diff = i as i64 - col;
                        if col >= 0 && (col as usize) < n && diff >= -(ku as i64) && diff <= kl as i64 {
                            coeffs[(diff + ku as i64) as usize].clone()
                        } else {
                            S::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let idx = |i: usize, c: usize| c + kl - i;

        let mut det = S::one();
        for k in 0..n {
            let last_row = (k + kl).min(n - 1);
            let last_col = (k + ku + kl).min(n - 1);
            let piv = if S::EXACT {
                (k..=last_row).find(|&i| !band[i][idx(i, k)].is_zero())
            } else {
                (k..=last_row)
                    .filter(|&i| !band[i][idx(i, k)].is_zero())
                    .max_by(|&a, &b| {
                        band[a][idx(a, k)]
                            .log2_abs()
                            .total_cmp(&band[b][idx(b, k)].log2_abs())
                    })
            };
            let Some(piv) = piv else {
                return Ok(S::zero());
            };
            if piv != k {
                for c in k..=last_col {
                    let (a, b) = (idx(k, c), idx(piv, c));
                    let tmp = band[k][a].clone();
                    band[k][a] = band[piv][b].clone();
                    band[piv][b] = tmp;
                }
                det = -det;
            }
            let pivot = band[k][idx(k, k)].clone();
            det = det * pivot.clone();
            for i in k + 1..=last_row {
                let lead = band[i][idx(i, k)].clone();
                if lead.is_zero() {
                    continue;
                }
                let f = lead / pivot.clone();
                for c in k + 1..=last_col {
                    let v = band[i][idx(i, c)].clone() - f.clone() * band[k][idx(k, c)].clone();
                    band[i][idx(i, c)] = v;
                }
                band[i][idx(i, k)] = S::zero();
            }
        }
        Ok(det)
    }
}

/// `det[h_{n-j+k}]_{p x p}` for simple zeros via Cauchy–Binet:
/// `h_{n-j+k} = Σ_l z_l^{p-j} (c_l z_l^{n+w-p}) z_l^{k-1}`, so the
/// determinant is `(-1)^{p(p-1)/2} Σ_{|T|=p} Π_{a<b∈T} (z_a - z_b)^2 Π_{l∈T} c_l z_l^{n+w-p}`
/// with `c_l = 1/Π_{k≠l}(z_l - z_k)`.
pub fn baxter_schmidt_factored<S: Scalar>(n: usize, p: usize, roots: &RootList<S>) -> S {
    let z = roots.roots();
    let w = z.len();
    if p > w {
        return S::zero();
    }
    let exponent = (n + w - p) as u64;
    let scaled: Vec<S> = (0..w)
        .map(|l| {
            let denom = (0..w)
                .filter(|&k| k != l)
                .fold(S::one(), |acc, k| acc * (z[l].clone() - z[k].clone()));
            z[l].pow(exponent) / denom
        })
        .collect();

    let mut total = S::zero();
    let mut subset: Vec<usize> = (0..p).collect();
    loop {
        let mut term = subset.iter().fold(S::one(), |acc, &l| acc * scaled[l].clone());
        for a in 0..p {
            for b in a + 1..p {
                let diff = z[subset[a]].clone() - z[subset[b]].clone();
                term = term * diff.clone() * diff;
            }
        }
        total = total + term;
        // next p-subset of 0..w in lexicographic order
        let Some(i) = (0..p).rev().find(|&i| subset[i] < w - p + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..p {
            subset[j] = subset[j - 1] + 1;
        }
    }
    S::sign((p * (p.saturating_sub(1)) / 2) as i64) * total
}

/// `s_{λ/μ}(z)` as a signed minor of `T_n(a)` with `a = Π (t - z_j) t^{-w}`
/// (`p = 0`, `a_p = 1`), `n = λ_1 + ℓ(λ)`, `ξ = rev λ + id`, `η = rev μ + id`.
/// The minor is evaluated by direct elimination of the struck submatrix.
pub fn skew_schur_as_minor<S: Scalar>(sp: &SkewPartition, roots: &RootList<S>) -> Result<S> {
    let d = sp.outer.len();
    if d == 0 {
        return Ok(if sp.inner.is_empty() { S::one() } else { S::zero() });
    }
    if sp.inner.len() > d {
        return Ok(S::zero());
    }
    let n = sp.outer.first() + d;
    let lam = sp.outer.padded(d);
    let mu = sp.inner.padded(d);
    let xi: Vec<usize> = (1..=d).map(|j| lam[d - j] + j).collect();
    let eta: Vec<usize> = (1..=d).map(|j| mu[d - j] + j).collect();
    let eta = match IndexSet::new(n, eta) {
        Ok(set) => set,
        // μ_1 > λ_1 pushes η out of range; such pairs are invalid anyway
        Err(_) => return Ok(S::zero()),
    };
    let req = MinorRequest::from_sets(IndexSet::new(n, xi)?, eta)?;
    let symbol = LaurentSpec::from_roots(0, S::one(), roots.roots().to_vec())?;
    let value = symbol.minor_matrix(&req)?.det()?;
    let parity = sp.outer.weight() + sp.inner.weight();
    Ok(S::sign(parity as i64) * value)
}
