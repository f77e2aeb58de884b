//! Coefficient backends for the series algebra.
//!
//! Two rings are supported: arbitrary-precision rationals (the exact backend)
//! and complex doubles (the float backend). Every [`Series`](crate::Series)
//! is uniform in its backend; mixing the two is rejected by the type system.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::param::Param;

/// Exact rational coefficients.
pub type Exact = BigRational;
/// Complex double coefficients.
pub type Float = Complex64;

/// Absolute tolerance used when the float backend checks a unit or zero constant term.
pub const UNIT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

/// Exponent for [`Series::pow`](crate::Series::pow).
#[derive(Debug, Clone, PartialEq)]
pub enum Exponent {
    Rational(BigRational),
    Real(f64),
}

impl Exponent {
    pub fn ratio(num: i64, den: i64) -> Self {
        Exponent::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Exponent::Rational(q) => q.to_f64().unwrap_or(f64::NAN),
            Exponent::Real(x) => *x,
        }
    }
}

impl From<&Param> for Exponent {
    fn from(p: &Param) -> Self {
        match p.exact() {
            Some(q) => Exponent::Rational(q.clone()),
            None => Exponent::Real(p.value()),
        }
    }
}

/// Field operations and backend-specific queries needed by the series algebra.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
    fn from_param(p: &Param, name: &'static str) -> Result<Self>;
    fn from_exponent(e: &Exponent) -> Result<Self>;
    /// Complex value; exact values only when the imaginary part vanishes.
    fn from_complex(z: Complex64, what: &'static str) -> Result<Self>;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;
    fn abs_f64(&self) -> f64 {
        self.to_complex().norm()
    }
    fn is_zero_coeff(&self) -> bool;
    fn is_one_coeff(&self) -> bool;
    /// Compares `|self|` with 1; the float backend treats anything within
    /// [`UNIT_TOL`] of the unit circle as on it.
    fn cmp_modulus_one(&self) -> Ordering;
    /// Exact `|self|` when the backend can represent it.
    fn exact_abs(&self) -> Option<BigRational>;
}

impl Coeff for BigRational {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(num.into(), den.into())
    }
    fn from_param(p: &Param, name: &'static str) -> Result<Self> {
        p.exact().cloned().ok_or_else(|| Error::InexactParameter {
            name,
            value: p.to_string(),
        })
    }
    fn from_exponent(e: &Exponent) -> Result<Self> {
        match e {
            Exponent::Rational(q) => Ok(q.clone()),
            Exponent::Real(x) => Err(Error::InexactExponent(x.to_string())),
        }
    }
    fn from_complex(z: Complex64, what: &'static str) -> Result<Self> {
        if z.im != 0.0 {
            return Err(Error::FloatOnly(what));
        }
        crate::param::rational_from_f64(z.re).ok_or(Error::FloatOnly(what))
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn is_one_coeff(&self) -> bool {
        self.is_one()
    }
    fn cmp_modulus_one(&self) -> Ordering {
        self.abs().cmp(&<BigRational as One>::one())
    }
    fn exact_abs(&self) -> Option<BigRational> {
        Some(self.abs())
    }
}

impl Coeff for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_param(p: &Param, _name: &'static str) -> Result<Self> {
        Ok(Complex64::new(p.value(), 0.0))
    }
    fn from_exponent(e: &Exponent) -> Result<Self> {
        Ok(Complex64::new(e.to_f64(), 0.0))
    }
    fn from_complex(z: Complex64, _what: &'static str) -> Result<Self> {
        Ok(z)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn is_zero_coeff(&self) -> bool {
        self.norm() < UNIT_TOL
    }
    fn is_one_coeff(&self) -> bool {
        (self - Complex64::new(1.0, 0.0)).norm() < UNIT_TOL
    }
    fn cmp_modulus_one(&self) -> Ordering {
        let r = self.norm();
        if (r - 1.0).abs() <= UNIT_TOL {
            Ordering::Equal
        } else if r < 1.0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
    fn exact_abs(&self) -> Option<BigRational> {
        None
    }
}
