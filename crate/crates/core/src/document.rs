//! JSON symbol documents and scalar literals.
//!
//! ```json
//! {"coeffs": {"p": 1, "values": ["2", "-3", "1"]}}
//! {"roots":  {"p": 1, "a_p": "1", "z": ["1", "2"]}}
//! {"eseq":   {"p": 1, "a_p": "1", "e": ["1", "3", "2"]}}
//! ```
//!
//! Scalars are strings (`"3"`, `"-2/7"`, `"0.25"`, `"1e-3"`, `"1.5-2i"`) or
//! plain JSON numbers.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar, ScaledComplex};
use crate::toeplitz::LaurentSpec;

/// A scalar literal as it appears in a document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Text(String),
    Int(i64),
    Float(f64),
}

impl Literal {
    pub fn text(&self) -> String {
        match self {
            Literal::Text(s) => s.clone(),
            Literal::Int(v) => v.to_string(),
            Literal::Float(v) => {
                let s = v.to_string();
                // keep decimal floats recognisably decimal
                if s.contains(['.', 'e', 'E', 'n', 'i']) {
                    s
                } else {
                    format!("{s}.0")
                }
            }
        }
    }
}

impl From<&str> for Literal {
    fn from(s: &str) -> Self {
        Literal::Text(s.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffsPayload {
    pub p: usize,
    pub values: Vec<Literal>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsPayload {
    pub p: usize,
    pub a_p: Literal,
    pub z: Vec<Literal>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EseqPayload {
    pub p: usize,
    pub a_p: Literal,
    pub e: Vec<Literal>,
}

/// Exactly one of the three payloads.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeffs: Option<CoeffsPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<RootsPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eseq: Option<EseqPayload>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Backend {
    /// Exact when every literal is rational, float otherwise.
    #[default]
    Auto,
    Exact,
    Float,
}

impl Backend {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "auto" => Some(Backend::Auto),
            "exact" => Some(Backend::Exact),
            "float" => Some(Backend::Float),
            _ => None,
        }
    }

    /// Resolves `Auto` against the literals that will be parsed.
    pub fn resolve<'a>(self, literals: impl IntoIterator<Item = &'a str>) -> Backend {
        match self {
            Backend::Auto => {
                if literals.into_iter().all(|s| parse_rational(s).is_some()) {
                    Backend::Exact
                } else {
                    Backend::Float
                }
            }
            other => other,
        }
    }
}

/// A symbol on whichever backend was selected.
#[derive(Clone, Debug)]
pub enum AnySymbol {
    Exact(LaurentSpec<Rational>),
    Float(LaurentSpec<ScaledComplex>),
}

impl SymbolDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SymbolDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        let count = [doc.coeffs.is_some(), doc.roots.is_some(), doc.eseq.is_some()]
            .iter()
            .filter(|&&b| b)
            .count();
        if count != 1 {
            return Err(Error::Document(format!(
                "expected exactly one of \"coeffs\", \"roots\", \"eseq\"; found {count}"
            )));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    /// Every scalar literal in the document.
    pub fn literals(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(c) = &self.coeffs {
            out.extend(c.values.iter().map(Literal::text));
        }
        if let Some(r) = &self.roots {
            out.push(r.a_p.text());
            out.extend(r.z.iter().map(Literal::text));
        }
        if let Some(e) = &self.eseq {
            out.push(e.a_p.text());
            out.extend(e.e.iter().map(Literal::text));
        }
        out
    }

    pub fn to_spec<S: FromLiteral>(&self) -> Result<LaurentSpec<S>> {
        let parse_all = |v: &[Literal]| v.iter().map(|l| S::from_literal(&l.text())).collect::<Result<Vec<S>>>();
        if let Some(c) = &self.coeffs {
            return LaurentSpec::from_coefficients(c.p, parse_all(&c.values)?);
        }
        if let Some(r) = &self.roots {
            return LaurentSpec::from_roots(r.p, S::from_literal(&r.a_p.text())?, parse_all(&r.z)?);
        }
        if let Some(e) = &self.eseq {
            return LaurentSpec::from_series(e.p, S::from_literal(&e.a_p.text())?, parse_all(&e.e)?);
        }
        Err(Error::Document("empty document".into()))
    }

    /// Builds the symbol, choosing the backend from `backend` and the literals
    /// of the document plus `extra` (e.g. an eigenvalue candidate).
    pub fn build(&self, backend: Backend, extra: &[&str]) -> Result<AnySymbol> {
        let lits = self.literals();
        let resolved = backend.resolve(lits.iter().map(String::as_str).chain(extra.iter().copied()));
        Ok(match resolved {
            Backend::Float => AnySymbol::Float(self.to_spec()?),
            _ => AnySymbol::Exact(self.to_spec()?),
        })
    }
}

/// Scalars that can be read from a literal.
pub trait FromLiteral: Scalar {
    fn from_literal(s: &str) -> Result<Self>;
}

impl FromLiteral for Rational {
    /// Integers, fractions and decimals (converted exactly); complex literals
    /// are rejected.
    fn from_literal(s: &str) -> Result<Self> {
        parse_rational(s)
            .or_else(|| parse_decimal_exact(s))
            .ok_or_else(|| Error::ParseScalar(s.to_string()))
    }
}

impl FromLiteral for ScaledComplex {
    fn from_literal(s: &str) -> Result<Self> {
        parse_complex(s).map(ScaledComplex::from_complex)
    }
}

/// `"n"` or `"n/d"` with integer `n`, nonzero integer `d`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = parse_integer(num)?;
    let den: BigInt = parse_integer(den)?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.trim_start_matches('+').parse().ok()
}

/// `[-]digits[.digits][e[-]digits]` as an exact rational.
fn parse_decimal_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].trim_start_matches('+').parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = Rational::from_integer(digits);
    let factor = Rational::from_integer(num_traits::pow(ten, scale.unsigned_abs() as usize));
    value = if scale >= 0 { value * factor } else { value / factor };
    Some(if neg { -value } else { value })
}

fn parse_real(s: &str) -> Option<f64> {
    let s = s.trim();
    if let Some(q) = parse_rational(s) {
        return Some(crate::scalar::Scalar::to_complex(&q).re);
    }
    if s.is_empty() || s.eq_ignore_ascii_case("nan") || s.to_ascii_lowercase().contains("inf") {
        return None;
    }
    s.parse::<f64>().ok()
}

/// Real or complex literal: `"1.5"`, `"-2/3"`, `"3i"`, `"-i"`, `"1.5-2e-3i"`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let err = || Error::ParseScalar(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return parse_real(&t).map(|x| Complex64::new(x, 0.0)).ok_or_else(err);
    };
    // split at the last sign that is not leading and not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_real(other).ok_or_else(err)?,
    };
    let re = parse_real(re).ok_or_else(err)?;
    let z = Complex64::new(re, im);
    if !z.is_finite() {
        return Err(err());
    }
    Ok(z)
}
