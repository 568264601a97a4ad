use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

use schur_toeplitz::document::{AnySymbol, Backend, FromLiteral, SymbolDocument};
use schur_toeplitz::partitions::{conjugate as conjugate_partition, skew_pieri as pieri};
use schur_toeplitz::schur::skew_schur;
use schur_toeplitz::{
    AdjMethod, DetMethod, EigenRequest, Error, HomSeq, LaurentSpec, MinorRequest, MinorVariant, Partition,
    Rational, RootList, Scalar, ScaledComplex, SkewPartition,
};

fn to_py(e: Error) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyArithmeticError::new_err(e.to_string())
    }
}

macro_rules! on_backend {
    ($sym:expr, $a:ident => $body:expr) => {
        match $sym {
            AnySymbol::Exact($a) => $body,
            AnySymbol::Float($a) => $body,
        }
    };
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    let mut sorted = parts.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != parts {
        return Err(PyValueError::new_err(format!("{parts:?} is not weakly decreasing")));
    }
    Partition::new(parts).map_err(to_py)
}

fn backend(name: &str) -> PyResult<Backend> {
    Backend::parse(name).ok_or_else(|| PyValueError::new_err(format!("unknown backend {name:?}")))
}

/// A banded Toeplitz symbol built from a JSON symbol document. Values are
/// returned as strings: exact rationals such as "-3/7", or floats/complex
/// numbers such as "1.5e0-2e0i".
#[pyclass(module = "schur_toeplitz_py")]
struct Symbol {
    inner: AnySymbol,
}

#[pymethods]
impl Symbol {
    #[new]
    #[pyo3(signature = (document, backend = "auto"))]
    fn new(document: &str, backend: &str) -> PyResult<Self> {
        let doc = SymbolDocument::from_json(document).map_err(to_py)?;
        let inner = doc.build(self::backend(backend)?, &[]).map_err(to_py)?;
        Ok(Self { inner })
    }

    #[getter]
    fn p(&self) -> usize {
        on_backend!(&self.inner, a => a.p())
    }

    #[getter]
    fn backend(&self) -> &'static str {
        match self.inner {
            AnySymbol::Exact(_) => "exact",
            AnySymbol::Float(_) => "float",
        }
    }

    fn toeplitz(&self, n: usize) -> PyResult<Vec<Vec<String>>> {
        on_backend!(&self.inner, a => {
            let t = a.toeplitz_matrix(n).map_err(to_py)?;
            Ok((0..n).map(|i| (0..n).map(|j| t.get(i, j).render()).collect()).collect())
        })
    }

    #[pyo3(signature = (n, method = "baxter_schmidt"))]
    fn det(&self, n: usize, method: &str) -> PyResult<String> {
        let m = DetMethod::parse(method).ok_or_else(|| PyValueError::new_err(format!("unknown method {method:?}")))?;
        on_backend!(&self.inner, a => a.determinant(n, m).map(|v| v.render()).map_err(to_py))
    }

    #[pyo3(signature = (n, strike_rows, strike_cols, variant = "expanded"))]
    fn minor(&self, n: usize, strike_rows: Vec<usize>, strike_cols: Vec<usize>, variant: &str) -> PyResult<String> {
        let v = match variant {
            "expanded" => MinorVariant::Expanded,
            "flipped" => MinorVariant::Flipped,
            _ => return Err(PyValueError::new_err(format!("unknown variant {variant:?}"))),
        };
        let req = MinorRequest::new(n, strike_rows, strike_cols).map_err(to_py)?;
        on_backend!(&self.inner, a => a.minor(&req, v).map(|x| x.render()).map_err(to_py))
    }

    #[pyo3(signature = (n, r, s, method = "skew"))]
    fn adjugate(&self, n: usize, r: usize, s: usize, method: &str) -> PyResult<String> {
        let m = AdjMethod::parse(method).ok_or_else(|| PyValueError::new_err(format!("unknown method {method:?}")))?;
        on_backend!(&self.inner, a => a.adjugate_entry(n, r, s, m).map(|x| x.render()).map_err(to_py))
    }

    fn inverse(&self, n: usize, r: usize, s: usize) -> PyResult<String> {
        on_backend!(&self.inner, a => a.inverse_entry(n, r, s).map(|x| x.render()).map_err(to_py))
    }

    /// `v` for the candidate eigenvalue `x`; `roots` are the zeros of `a - x`.
    #[pyo3(signature = (n, x, roots = None))]
    fn eigenvector(&self, n: usize, x: &str, roots: Option<Vec<String>>) -> PyResult<Vec<String>> {
        on_backend!(&self.inner, a => eigenvector_on(a, n, x, roots))
    }

    fn __repr__(&self) -> String {
        format!("Symbol(p={}, backend={})", self.p(), self.backend())
    }
}

fn eigenvector_on<S: FromLiteral>(a: &LaurentSpec<S>, n: usize, x: &str, roots: Option<Vec<String>>) -> PyResult<Vec<String>> {
    let mut req = EigenRequest::new(n, S::from_literal(x).map_err(to_py)?);
    if let Some(z) = roots {
        req = req.with_roots(z.iter().map(|t| S::from_literal(t)).collect::<Result<_, _>>().map_err(to_py)?);
    }
    let v = a.eigenvector(&req).map_err(to_py)?;
    Ok(v.iter().map(Scalar::render).collect())
}

fn skew_value<S: FromLiteral>(sp: &SkewPartition, roots: &[String]) -> PyResult<String> {
    let z = roots.iter().map(|t| S::from_literal(t)).collect::<Result<Vec<S>, _>>().map_err(to_py)?;
    skew_schur(sp, &HomSeq::from_roots(&RootList::new(z)))
        .map(|v| v.render())
        .map_err(to_py)
}

/// `s_{outer/inner}` at the given roots.
#[pyfunction]
#[pyo3(signature = (outer, roots, inner = None, backend = "auto"))]
fn schur(outer: Vec<usize>, roots: Vec<String>, inner: Option<Vec<usize>>, backend: &str) -> PyResult<String> {
    let sp = SkewPartition::new(partition(outer)?, partition(inner.unwrap_or_default())?);
    match self::backend(backend)?.resolve(roots.iter().map(String::as_str)) {
        Backend::Float => skew_value::<ScaledComplex>(&sp, &roots),
        _ => skew_value::<Rational>(&sp, &roots),
    }
}

/// Partitions `nu` with `s_{lam/(r)} = sum s_nu`.
#[pyfunction]
fn skew_pieri(lam: Vec<usize>, r: usize) -> PyResult<Vec<Vec<usize>>> {
    Ok(pieri(&partition(lam)?, r).into_iter().map(|nu| nu.parts().to_vec()).collect())
}

#[pyfunction]
fn conjugate(lam: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(conjugate_partition(&partition(lam)?).parts().to_vec())
}

/// The two skew shapes whose Schur polynomials give the minor, as
/// `((outer, inner), (outer, inner))`, and whether the sign is negative.
#[pyfunction]
fn minor_shapes(
    n: usize,
    p: usize,
    strike_rows: Vec<usize>,
    strike_cols: Vec<usize>,
) -> PyResult<((Vec<usize>, Vec<usize>), (Vec<usize>, Vec<usize>), bool)> {
    let req = MinorRequest::new(n, strike_rows, strike_cols).map_err(to_py)?;
    let (e, f) = req.shapes(p).map_err(to_py)?;
    let pair = |sp: &SkewPartition| (sp.outer.parts().to_vec(), sp.inner.parts().to_vec());
    Ok((pair(&e), pair(&f), req.sign_is_negative(p)))
}

#[pymodule]
fn schur_toeplitz_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Symbol>()?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(skew_pieri, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(minor_shapes, m)?)?;
    Ok(())
}
