//! Function classes, their extremal functions and members driven by Schwarz functions.
//!
//! Members are produced constructively from a subordination `p = target(phi)`:
//! starlike-type classes integrate `zf'/f - 1 = target(phi) - 1` into
//! `f = z exp(int_0^z (target(phi(t)) - 1)/t dt)`, while the convexity-type
//! classes `F(c)` and `G(c)` do the same for `1 + zf''/f'` and integrate once more.

mod schwarz;

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coeff::{Backend, Coeff};
use crate::error::{Error, Result};
use crate::param::Param;
use crate::series::Series;

pub use schwarz::{SchwarzFn, SchwarzJson};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ClassKind {
    /// `zf'/f < (1 + A z)/(1 + B z)`.
    #[serde(rename = "janowski")]
    Janowski {
        #[serde(rename = "A")]
        a: Param,
        /// Imaginary part of `A`; float backend only.
        #[serde(rename = "A_imag", default, skip_serializing_if = "Option::is_none")]
        a_imag: Option<Param>,
        #[serde(rename = "B")]
        b: Param,
    },
    /// `Re(e^{-i alpha} zf'/f) > beta cos(alpha)`.
    #[serde(rename = "spiral")]
    Spiral { alpha: Param, beta: Param },
    /// `zf'/f < ((1 + z)/(1 - z))^alpha`.
    #[serde(rename = "strongly_starlike")]
    StronglyStarlike { alpha: Param },
    /// `Re(1 + zf''/f') > 1 - c/2`.
    #[serde(rename = "F")]
    F { c: Param },
    /// `Re(1 + zf''/f') < 1 + c/2`.
    #[serde(rename = "G")]
    G { c: Param },
}

fn default_twist() -> usize {
    1
}

fn is_default_twist(t: &usize) -> bool {
    *t == 1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassSpec {
    #[serde(flatten)]
    pub kind: ClassKind,
    /// n-fold symmetrization index for extremal functions.
    #[serde(default = "default_twist", skip_serializing_if = "is_default_twist")]
    pub twist: usize,
    /// Rotation `phi(z) -> phi(e^{i theta} z)` applied to driving Schwarz functions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
}

impl ClassSpec {
    pub fn new(kind: ClassKind) -> Result<Self> {
        let spec = ClassSpec {
            kind,
            twist: 1,
            theta: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn janowski(a: impl Into<Param>, b: impl Into<Param>) -> Result<Self> {
        Self::new(ClassKind::Janowski {
            a: a.into(),
            a_imag: None,
            b: b.into(),
        })
    }

    pub fn spiral(alpha: Param, beta: Param) -> Result<Self> {
        Self::new(ClassKind::Spiral { alpha, beta })
    }

    pub fn strongly_starlike(alpha: Param) -> Result<Self> {
        Self::new(ClassKind::StronglyStarlike { alpha })
    }

    pub fn f(c: impl Into<Param>) -> Result<Self> {
        Self::new(ClassKind::F { c: c.into() })
    }

    pub fn g(c: impl Into<Param>) -> Result<Self> {
        Self::new(ClassKind::G { c: c.into() })
    }

    pub fn with_twist(mut self, twist: usize) -> Result<Self> {
        self.twist = twist;
        self.validate()?;
        Ok(self)
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = Some(theta);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.twist == 0 {
            return bad("twist must be a positive integer".into());
        }
        match &self.kind {
            ClassKind::Janowski { a, a_imag, b } => {
                let bv = b.value();
                if !(-1.0..=0.0).contains(&bv) {
                    return bad(format!("janowski requires -1 <= B <= 0, got B = {b}"));
                }
                let imag_zero = a_imag.as_ref().is_none_or(Param::is_zero);
                if imag_zero && a == b {
                    return bad("janowski requires A != B".into());
                }
            }
            ClassKind::Spiral { alpha, beta } => {
                if alpha.value().abs() >= FRAC_PI_2 {
                    return bad(format!("spiral requires |alpha| < pi/2, got {alpha}"));
                }
                if !(0.0..1.0).contains(&beta.value()) {
                    return bad(format!("spiral requires 0 <= beta < 1, got {beta}"));
                }
            }
            ClassKind::StronglyStarlike { alpha } => {
                let v = alpha.value();
                if !(v > 0.0 && v <= 1.0) {
                    return bad(format!("strongly_starlike requires 0 < alpha <= 1, got {alpha}"));
                }
            }
            ClassKind::F { c } => {
                let v = c.value();
                if !(v > 0.0 && v <= 3.0) {
                    return bad(format!("F(c) requires 0 < c <= 3, got {c}"));
                }
            }
            ClassKind::G { c } => {
                let v = c.value();
                if !(v > 0.0 && v <= 1.0) {
                    return bad(format!("G(c) requires 0 < c <= 1, got {c}"));
                }
            }
        }
        if let Some(t) = self.theta {
            if !t.is_finite() {
                return bad("theta must be finite".into());
            }
        }
        Ok(())
    }

    /// Whether every parameter admits the exact backend.
    pub fn exact_compatible(&self) -> bool {
        let rotation_ok = self.theta.is_none_or(|t| t == 0.0);
        let params_ok = match &self.kind {
            ClassKind::Janowski { a, a_imag, b } => {
                a.is_exact() && b.is_exact() && a_imag.as_ref().is_none_or(Param::is_zero)
            }
            ClassKind::Spiral { .. } => false,
            ClassKind::StronglyStarlike { alpha } => alpha.is_exact(),
            ClassKind::F { c } | ClassKind::G { c } => c.is_exact(),
        };
        rotation_ok && params_ok
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            ClassKind::Janowski { .. } => "janowski",
            ClassKind::Spiral { .. } => "spiral",
            ClassKind::StronglyStarlike { .. } => "strongly_starlike",
            ClassKind::F { .. } => "F",
            ClassKind::G { .. } => "G",
        }
    }

    /// `key=value` parameter summary used in tables.
    pub fn params_label(&self) -> String {
        let mut s = match &self.kind {
            ClassKind::Janowski { a, a_imag, b } => match a_imag {
                Some(im) if !im.is_zero() => format!("A={a}{:+}i;B={b}", im.value()),
                _ => format!("A={a};B={b}"),
            },
            ClassKind::Spiral { alpha, beta } => format!("alpha={alpha};beta={beta}"),
            ClassKind::StronglyStarlike { alpha } => format!("alpha={alpha}"),
            ClassKind::F { c } | ClassKind::G { c } => format!("c={c}"),
        };
        if self.twist != 1 {
            s.push_str(&format!(";twist={}", self.twist));
        }
        if let Some(t) = self.theta {
            s.push_str(&format!(";theta={t}"));
        }
        s
    }

    fn janowski_a<C: Coeff>(a: &Param, a_imag: &Option<Param>) -> Result<C> {
        match a_imag {
            Some(im) if !im.is_zero() => {
                C::from_complex(Complex64::new(a.value(), im.value()), "complex A")
            }
            _ => C::from_param(a, "A"),
        }
    }

    /// `target(w) - 1` as a series in `w` with zero constant term.
    pub fn subordination_target<C: Coeff>(&self, order: usize) -> Result<Series<C>> {
        match &self.kind {
            ClassKind::Janowski { a, a_imag, b } => {
                let a: C = Self::janowski_a(a, a_imag)?;
                let b: C = C::from_param(b, "B")?;
                // (A - B) w / (1 + B w) = (A - B) sum (-B)^{k-1} w^k
                let lead = a - b.clone();
                let mut p = C::one();
                Ok(Series::from_fn(order, |k| {
                    if k == 0 {
                        return C::zero();
                    }
                    let v = lead.clone() * &p;
                    p = p.clone() * &(-b.clone());
                    v
                }))
            }
            ClassKind::Spiral { alpha, beta } => {
                if C::BACKEND == Backend::Exact {
                    return Err(Error::FloatOnly("spiral-like class"));
                }
                let k = spiral_factor(alpha.value(), beta.value());
                let k: C = C::from_complex(k, "spiral-like class")?;
                Ok(Series::geometric_tail(1, order).scale(&k))
            }
            ClassKind::StronglyStarlike { alpha } => {
                let alpha: C = C::from_param(alpha, "alpha")?;
                let one_plus = Series::from_slice(&[C::one(), C::one()], order);
                let one_minus = Series::from_slice(&[C::one(), -C::one()], order);
                let base = one_plus.div(&one_minus)?;
                let p = base.log_unit()?.scale(&alpha).exp_zero()?;
                Ok(p.add_constant(&(-C::one())))
            }
            ClassKind::F { c } => {
                let c: C = C::from_param(c, "c")?;
                Ok(Series::geometric_tail(1, order).scale(&c))
            }
            ClassKind::G { c } => {
                let c: C = C::from_param(c, "c")?;
                Ok(Series::geometric_tail(1, order).scale(&(-c)))
            }
        }
    }

    fn is_convexity_type(&self) -> bool {
        matches!(self.kind, ClassKind::F { .. } | ClassKind::G { .. })
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.params_label())
    }
}

/// `2 (1 - beta) e^{i alpha} cos(alpha)`.
pub fn spiral_factor(alpha: f64, beta: f64) -> Complex64 {
    Complex64::from_polar(2.0 * (1.0 - beta) * alpha.cos(), alpha)
}

/// `exp(e * log(base))` with a coefficient-valued exponent.
fn pow_coeff<C: Coeff>(base: &Series<C>, e: &C) -> Result<Series<C>> {
    base.log_unit()?.scale(e).exp_zero()
}

/// `1 + b z^n`, truncated.
fn binomial_base<C: Coeff>(b: C, n: usize, order: usize) -> Series<C> {
    Series::monomial(b, n, order).add_constant(&C::one())
}

/// Series of the extremal function of `spec` (with its twist) to order `order`.
pub fn extremal_series<C: Coeff>(spec: &ClassSpec, order: usize) -> Result<Series<C>> {
    spec.validate()?;
    if order == 0 {
        return Err(Error::OrderTooSmall { have: 0, need: 1 });
    }
    let n = spec.twist;
    let m = order - 1;
    let n_c = C::from_i64(n as i64);
    match &spec.kind {
        ClassKind::Janowski { a, a_imag, b } => {
            let a_c: C = ClassSpec::janowski_a(a, a_imag)?;
            let b_c: C = C::from_param(b, "B")?;
            let quotient = if b.is_zero() {
                // z e^{A z^n / n}
                Series::monomial(a_c / n_c, n, m).exp_zero()?
            } else {
                // z (1 + B z^n)^{(A - B)/(n B)}
                let e = (a_c - b_c.clone()) / (n_c * &b_c);
                pow_coeff(&binomial_base(b_c, n, m), &e)?
            };
            Ok(quotient.shift_up())
        }
        ClassKind::Spiral { alpha, beta } => {
            if C::BACKEND == Backend::Exact {
                return Err(Error::FloatOnly("spiral-like class"));
            }
            // z (1 - z^n)^{-K/n}
            let k: C = C::from_complex(spiral_factor(alpha.value(), beta.value()), "spiral")?;
            let e = -(k / n_c);
            Ok(pow_coeff(&binomial_base(-C::one(), n, m), &e)?.shift_up())
        }
        ClassKind::StronglyStarlike { .. } => {
            let phi = SchwarzFn::<C>::monomial(n, order)?;
            member_without_rotation(spec, &phi, order)
        }
        ClassKind::F { c } => {
            let c_c: C = C::from_param(c, "c")?;
            if n == 1 {
                let one = C::one();
                if c_c == one {
                    // -log(1 - z)
                    return Ok(Series::from_fn(order, |k| {
                        if k == 0 {
                            C::zero()
                        } else {
                            C::ratio(1, k as i64)
                        }
                    }));
                }
                // ((1 - z)^{1-c} - 1)/(c - 1)
                let base = Series::from_slice(&[C::one(), -C::one()], order);
                let p = pow_coeff(&base, &(one.clone() - c_c.clone()))?;
                return Ok(p.add_constant(&(-one.clone())).scale(&(one / (c_c - C::one()))));
            }
            // f' = (1 - z^n)^{-c/n}
            let fp = pow_coeff(&binomial_base(-C::one(), n, m), &(-(c_c / n_c)))?;
            Ok(fp.antiderivative())
        }
        ClassKind::G { c } => {
            // f' = (1 - z^n)^{c/n}
            let c_c: C = C::from_param(c, "c")?;
            let fp = pow_coeff(&binomial_base(-C::one(), n, m), &(c_c / n_c))?;
            Ok(fp.antiderivative())
        }
    }
}

fn member_without_rotation<C: Coeff>(
    spec: &ClassSpec,
    phi: &SchwarzFn<C>,
    order: usize,
) -> Result<Series<C>> {
    if order == 0 {
        return Err(Error::OrderTooSmall { have: 0, need: 1 });
    }
    let m = order - 1;
    if phi.order() < m {
        return Err(Error::OrderTooSmall {
            have: phi.order(),
            need: m,
        });
    }
    let phi = phi.series().truncate(m);
    let h1 = spec.subordination_target::<C>(m)?.compose(&phi)?;
    let g = h1.integrate_over_t()?.exp_zero()?;
    if spec.is_convexity_type() {
        Ok(g.antiderivative())
    } else {
        Ok(g.shift_up())
    }
}

/// The class member generated by the Schwarz function `phi`, to order `order`.
///
/// Rotations (`spec.theta`) act on `phi` and require the float backend unless zero.
pub fn member_from_schwarz<C: Coeff>(
    spec: &ClassSpec,
    phi: &SchwarzFn<C>,
    order: usize,
) -> Result<Series<C>> {
    spec.validate()?;
    match spec.theta {
        Some(t) if t != 0.0 => {
            if C::BACKEND == Backend::Exact {
                return Err(Error::FloatOnly("rotated Schwarz functions"));
            }
            let params: Vec<Complex64> = phi.schur_params().iter().map(|l| l.to_complex()).collect();
            let rotated = SchwarzFn::<Complex64>::from_schur(&params, phi.order())?.rotated(t);
            let rparams = rotated
                .schur_params()
                .iter()
                .map(|z| C::from_complex(*z, "rotation"))
                .collect::<Result<Vec<C>>>()?;
            let rphi = SchwarzFn::<C>::from_schur(&rparams, phi.order())?;
            member_without_rotation(spec, &rphi, order)
        }
        _ => member_without_rotation(spec, phi, order),
    }
}
