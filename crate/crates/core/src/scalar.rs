//! Field elements used throughout the crate.
//!
//! Two realizations are provided: [`Rational`] (arbitrary precision, exact) and
//! [`ScaledComplex`], a complex double mantissa paired with a separate binary
//! exponent so that quantities such as `h_n(z)` for `n ~ 10^6` never overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

/// Abstract field element.
pub trait Scalar:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// `true` for backends where `==` is mathematical equality.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// `log2 |self|`; `-inf` for zero.
    fn log2_abs(&self) -> f64;

    /// Lossy conversion, may overflow to infinity.
    fn to_complex(&self) -> Complex64;

    /// Inverse of [`Scalar::to_complex`]; `None` on the exact backend, which
    /// cannot hold the output of a numerical root finder.
    fn approx_from_complex(z: Complex64) -> Option<Self>;

    /// Canonical text form: `"n/d"` (or `"n"`) for exact values, `"x+yi"` for floats.
    fn render(&self) -> String;

    /// Determinant of the `n x n` row-major matrix stored in `data`, which is
    /// destroyed in the process.
    fn det_in_place(data: &mut [Self], n: usize) -> Self;

    fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// `(-1)^k`.
    fn sign(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    fn abs_f64(&self) -> f64 {
        self.log2_abs().exp2()
    }
}

// ---------------------------------------------------------------------------
// Exact backend
// ---------------------------------------------------------------------------

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn log2_abs(&self) -> f64 {
        if Zero::is_zero(self) {
            return f64::NEG_INFINITY;
        }
        log2_bigint(self.numer()) - log2_bigint(self.denom())
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }

    fn approx_from_complex(_: Complex64) -> Option<Self> {
        None
    }

    fn render(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    /// Clears denominators row by row, then runs Bareiss elimination over the
    /// integers; every division inside the loop is exact.
    fn det_in_place(data: &mut [Self], n: usize) -> Self {
        if n == 0 {
            return <Rational as One>::one();
        }
        let mut scale = BigInt::one();
        let mut m: Vec<BigInt> = Vec::with_capacity(n * n);
        for row in data.chunks(n) {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            m.extend(row.iter().map(|x| x.numer() * (&lcm / x.denom())));
        }
        let det = bareiss(&mut m, n);
        Rational::new(det, scale)
    }
}

fn log2_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.abs().to_f64().unwrap_or(f64::INFINITY).log2();
    }
    let shift = bits - 64;
    let top: BigInt = x.abs() >> shift;
    top.to_f64().unwrap_or(f64::INFINITY).log2() + shift as f64
}

fn rational_to_f64(x: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    sign * x.log2_abs().exp2()
}

/// Fraction-free Gaussian elimination on an integer matrix.
pub(crate) fn bareiss(m: &mut [BigInt], n: usize) -> BigInt {
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                m.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let lead = m[i * n + k].clone();
            for j in k + 1..n {
                let v = (&pivot * &m[i * n + j] - &lead * &m[k * n + j]) / &prev;
                m[i * n + j] = v;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    sign * m[n * n - 1].clone()
}

// ---------------------------------------------------------------------------
// Float backend
// ---------------------------------------------------------------------------

/// `(re + i·im) · 2^exp`, with `max(|re|, |im|)` kept in `[0.5, 1)` (or all
/// fields zero).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaledComplex {
    re: f64,
    im: f64,
    exp: i64,
}

impl ScaledComplex {
    pub const ZERO: Self = Self {
        re: 0.0,
        im: 0.0,
        exp: 0,
    };

    pub fn new(re: f64, im: f64) -> Self {
        Self::normalized(re, im, 0)
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }

    pub fn from_f64(x: f64) -> Self {
        Self::new(x, 0.0)
    }

    pub fn mantissa(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        Self {
            im: -self.im,
            ..*self
        }
    }

    /// `|self|` as a scaled real.
    pub fn norm(&self) -> Self {
        Self::normalized(self.re.hypot(self.im), 0.0, self.exp)
    }

    fn normalized(re: f64, im: f64, exp: i64) -> Self {
        let m = re.abs().max(im.abs());
        if m == 0.0 {
            return Self::ZERO;
        }
        if !m.is_finite() {
            return Self { re, im, exp };
        }
        let (_, e) = libm::frexp(m);
        Self {
            re: libm::ldexp(re, -e),
            im: libm::ldexp(im, -e),
            exp: exp + e as i64,
        }
    }

    /// Compare magnitudes without leaving the scaled representation.
    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        self.log2_abs()
            .partial_cmp(&other.log2_abs())
            .unwrap_or(Ordering::Equal)
    }
}

fn scale_by_pow2(x: f64, k: i64) -> f64 {
    if k < -1100 {
        0.0
    } else {
        libm::ldexp(x, k as i32)
    }
}

impl Add for ScaledComplex {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if rhs.re == 0.0 && rhs.im == 0.0 {
            return self;
        }
        if self.re == 0.0 && self.im == 0.0 {
            return rhs;
        }
        let (big, small) = if self.exp >= rhs.exp {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let d = small.exp - big.exp;
        Self::normalized(
            big.re + scale_by_pow2(small.re, d),
            big.im + scale_by_pow2(small.im, d),
            big.exp,
        )
    }
}

impl Sub for ScaledComplex {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ScaledComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
            exp: self.exp,
        }
    }
}

impl Mul for ScaledComplex {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::normalized(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
            self.exp + rhs.exp,
        )
    }
}

impl Div for ScaledComplex {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q = Complex64::new(self.re, self.im) / Complex64::new(rhs.re, rhs.im);
        Self::normalized(q.re, q.im, self.exp - rhs.exp)
    }
}

impl fmt::Display for ScaledComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Scalar for ScaledComplex {
    const EXACT: bool = false;

    fn zero() -> Self {
        Self::ZERO
    }

    fn one() -> Self {
        Self::new(1.0, 0.0)
    }

    fn from_i64(v: i64) -> Self {
        Self::new(v as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.re.hypot(self.im).log2() + self.exp as f64
    }

    fn to_complex(&self) -> Complex64 {
        let e = self.exp.clamp(-2000, 2000) as i32;
        Complex64::new(libm::ldexp(self.re, e), libm::ldexp(self.im, e))
    }

    fn approx_from_complex(z: Complex64) -> Option<Self> {
        Some(Self::from_complex(z))
    }

    fn render(&self) -> String {
        let z = self.to_complex();
        if z.re.is_finite() && z.im.is_finite() && !(z.re == 0.0 && z.im == 0.0 && !self.is_zero())
        {
            return format_complex(z.re, z.im);
        }
        // Out of f64 range: print mantissa times a power of two.
        format!("({})*2^{}", format_complex(self.re, self.im), self.exp)
    }

    /// Gaussian elimination with partial pivoting on mantissa magnitude.
    fn det_in_place(data: &mut [Self], n: usize) -> Self {
        let mut det = Self::one();
        for k in 0..n {
            let piv = (k..n)
                .max_by(|&a, &b| data[a * n + k].cmp_abs(&data[b * n + k]))
                .unwrap_or(k);
            if data[piv * n + k].is_zero() {
                return Self::ZERO;
            }
            if piv != k {
                for c in 0..n {
                    data.swap(k * n + c, piv * n + c);
                }
                det = -det;
            }
            let pivot = data[k * n + k];
            det = det * pivot;
            for i in k + 1..n {
                let f = data[i * n + k] / pivot;
                if f.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    data[i * n + j] = data[i * n + j] - f * data[k * n + j];
                }
            }
        }
        det
    }
}

fn format_complex(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re:e}")
    } else if im < 0.0 {
        format!("{re:e}-{:e}i", -im)
    } else {
        format!("{re:e}+{im:e}i")
    }
}

/// Relative distance `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_deviation(a: &ScaledComplex, b: &ScaledComplex) -> f64 {
    let diff = (*a - *b).log2_abs();
    let scale = a.log2_abs().max(b.log2_abs());
    if scale == f64::NEG_INFINITY {
        return 0.0;
    }
    (diff - scale).exp2()
}
