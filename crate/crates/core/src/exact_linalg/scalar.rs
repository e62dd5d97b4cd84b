//! Rational and Gaussian-rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number; numerator and denominator are kept coprime with a positive denominator.
pub type Scalar = BigRational;

/// Integer as a [`Scalar`].
pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// `num / den` as a reduced [`Scalar`]. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse rational literal {0:?}")]
pub struct ParseScalarError(pub String);

/// Parses `"p"` or `"p/q"` with optional sign. Decimal points are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(err());
    }
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(v: &Scalar) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Complex number with rational real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl GaussianScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        GaussianScalar { re, im }
    }

    pub fn real(re: Scalar) -> Self {
        GaussianScalar { re, im: Scalar::zero() }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianScalar { re: int(re), im: int(im) }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sq(&self) -> Scalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        GaussianScalar { re: &self.re * s, im: &self.im * s }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussianScalar { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

impl<'a> Add<&'a GaussianScalar> for &'a GaussianScalar {
    type Output = GaussianScalar;
    fn add(self, o: &GaussianScalar) -> GaussianScalar {
        GaussianScalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianScalar> for &'a GaussianScalar {
    type Output = GaussianScalar;
    fn sub(self, o: &GaussianScalar) -> GaussianScalar {
        GaussianScalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianScalar> for &'a GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, o: &GaussianScalar) -> GaussianScalar {
        GaussianScalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        GaussianScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Add for GaussianScalar {
    type Output = GaussianScalar;
    fn add(self, o: GaussianScalar) -> GaussianScalar {
        &self + &o
    }
}

impl Sub for GaussianScalar {
    type Output = GaussianScalar;
    fn sub(self, o: GaussianScalar) -> GaussianScalar {
        &self - &o
    }
}

impl Mul for GaussianScalar {
    type Output = GaussianScalar;
    fn mul(self, o: GaussianScalar) -> GaussianScalar {
        &self * &o
    }
}

impl Neg for GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        -&self
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_scalar(&self.re)),
            (true, false) => write!(f, "{}i", format_scalar(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{}{}{}i", format_scalar(&self.re), sign, format_scalar(&self.im.abs()))
            }
        }
    }
}
