//! Real class parameters that remember an exact rational value when one exists.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A real parameter such as `A`, `B`, `alpha`, `beta` or `c`.
///
/// Decimal and fractional literals (`3`, `-0.5`, `144/55`) are kept exactly;
/// multiples of pi (`pi/4`, `3pi/8`) are float-only.
#[derive(Debug, Clone)]
pub struct Param {
    exact: Option<BigRational>,
    value: f64,
}

impl Param {
    pub fn exact_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let value = q.to_f64().unwrap_or(f64::NAN);
        Param {
            exact: Some(q),
            value,
        }
    }

    /// Float-only parameter.
    pub fn real(value: f64) -> Self {
        Param { exact: None, value }
    }

    /// Parameter from a double, read back through its shortest decimal form
    /// so that `0.1` becomes exactly `1/10`.
    pub fn from_f64(value: f64) -> Self {
        match rational_from_f64(value) {
            Some(q) => Param {
                exact: Some(q),
                value,
            },
            None => Param::real(value),
        }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn exact(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn is_zero(&self) -> bool {
        match &self.exact {
            Some(q) => q.is_zero(),
            None => self.value == 0.0,
        }
    }
}

impl PartialEq for Param {
    fn eq(&self, other: &Self) -> bool {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a == b,
            _ => self.value == other.value,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "{}", self.value),
        }
    }
}

impl From<i64> for Param {
    fn from(v: i64) -> Self {
        Param::exact_ratio(v, 1)
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.contains("pi") {
            return parse_pi_multiple(t)
                .map(Param::real)
                .ok_or_else(|| Error::Parse(format!("cannot parse parameter '{s}'")));
        }
        parse_rational(t)
            .map(Param::from_rational)
            .ok_or_else(|| Error::Parse(format!("cannot parse parameter '{s}'")))
    }
}

/// Parses `p`, `p/q` or a decimal literal (with optional exponent) exactly.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_rational(num)?;
        let den = parse_rational(den)?;
        if den.is_zero() {
            return None;
        }
        return Some(num / den);
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all.is_empty() {
        BigInt::zero()
    } else {
        all.parse().ok()?
    };
    if neg {
        numer = -numer;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let q = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(q)
}

pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    parse_rational(&format!("{x:e}"))
}

fn parse_pi_multiple(s: &str) -> Option<f64> {
    // forms: pi, -pi, pi/q, p*pi/q, ppi/q
    let (head, den) = match s.split_once('/') {
        Some((h, d)) => (h.trim(), d.trim().parse::<f64>().ok()?),
        None => (s, 1.0),
    };
    let coef = head.strip_suffix("pi")?.trim().trim_end_matches('*').trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().ok()?,
    };
    Some(coef * std::f64::consts::PI / den)
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.exact {
            Some(q) if q.denom().is_one() => match q.numer().to_i64() {
                Some(v) => serializer.serialize_i64(v),
                None => serializer.serialize_str(&q.to_string()),
            },
            Some(q) => serializer.serialize_str(&q.to_string()),
            None => serializer.serialize_f64(self.value),
        }
    }
}

impl<'de> Deserialize<'de> for Param {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(Param::from(v)),
            Raw::Num(v) => Ok(Param::from_f64(v)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
