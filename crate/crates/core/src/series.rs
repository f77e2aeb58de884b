//! Truncated formal power series.
//!
//! A [`Series`] of order `N` stores `a_0..a_N`; all closed operations truncate
//! at `N` and never materialize higher terms. `log_unit` and `exp_zero` use the
//! first-order coefficient recursions `s L' = s'` and `E' = s' E`.

use std::fmt;

use crate::coeff::{Coeff, Exponent};
use crate::error::{Error, Result};

/// Largest supported truncation order.
pub const MAX_ORDER: usize = 4096;
/// Truncation order used by verification runs unless configured otherwise.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series")
            .field("backend", &C::BACKEND)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::OrderTooLarge(order))
    } else {
        Ok(())
    }
}

impl<C: Coeff> Series<C> {
    pub fn new(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        check_order(coeffs.len() - 1)?;
        Ok(Series { coeffs })
    }

    /// Builds a series of the given order, padding or truncating `coeffs`.
    pub fn from_slice(coeffs: &[C], order: usize) -> Self {
        let mut v: Vec<C> = coeffs.iter().take(order + 1).cloned().collect();
        v.resize(order + 1, C::zero());
        Series { coeffs: v }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| C::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `coef * z^k`, truncated.
    pub fn monomial(coef: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = coef;
        }
        s
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// `sum_{k>=1} z^{k*step}` with a coefficient multiplier, i.e. `w/(1-w)` for `w = z^step`.
    pub fn geometric_tail(step: usize, order: usize) -> Self {
        Self::from_fn(order, |k| {
            if k > 0 && k % step == 0 {
                C::one()
            } else {
                C::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_slice(&self.coeffs, order.min(self.order()))
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::from_fn(self.order(), |k| {
            self.coeffs[k].clone() + other.coeffs[k].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self::from_fn(self.order(), |k| {
            self.coeffs[k].clone() - other.coeffs[k].clone()
        }))
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_fn(self.order(), |i| self.coeffs[i].clone() * k)
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |i| -self.coeffs[i].clone())
    }

    /// Adds `c` to the constant term.
    pub fn add_constant(&self, c: &C) -> Self {
        let mut s = self.clone();
        s.coeffs[0] += c;
        s
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_coeff() && C::BACKEND == crate::Backend::Exact {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Series quotient; the divisor needs a nonzero constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let b0 = &other.coeffs[0];
        if b0.is_zero_coeff() {
            return Err(Error::ConstantTerm {
                op: "div",
                expected: "nonzero",
            });
        }
        let n = self.order();
        let mut q: Vec<C> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 0..k {
                acc -= &(q[j].clone() * &other.coeffs[k - j]);
            }
            q.push(acc / b0.clone());
        }
        Ok(Series { coeffs: q })
    }

    /// `log s` for `s_0 = 1`, via `n L_n = n s_n - sum_{k<n} k L_k s_{n-k}`.
    pub fn log_unit(&self) -> Result<Self> {
        if !self.coeffs[0].is_one_coeff() {
            return Err(Error::ConstantTerm {
                op: "log_unit",
                expected: "1",
            });
        }
        let n = self.order();
        let s0 = self.coeffs[0].clone();
        // holds k * L_k
        let mut kl: Vec<C> = vec![C::zero(); n + 1];
        for m in 1..=n {
            let mut acc = C::from_i64(m as i64) * &self.coeffs[m];
            for k in 1..m {
                acc -= &(kl[k].clone() * &self.coeffs[m - k]);
            }
            kl[m] = acc / s0.clone();
        }
        Ok(Self::from_fn(n, |m| {
            if m == 0 {
                C::zero()
            } else {
                kl[m].clone() / C::from_i64(m as i64)
            }
        }))
    }

    /// `exp s` for `s_0 = 0`, via `n E_n = sum_{k=1}^{n} k s_k E_{n-k}`.
    pub fn exp_zero(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_coeff() {
            return Err(Error::ConstantTerm {
                op: "exp_zero",
                expected: "0",
            });
        }
        let n = self.order();
        let ks: Vec<C> = (0..=n)
            .map(|k| C::from_i64(k as i64) * &self.coeffs[k])
            .collect();
        let mut e: Vec<C> = Vec::with_capacity(n + 1);
        e.push(C::one());
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if ks[k].is_zero_coeff() {
                    continue;
                }
                acc += &(ks[k].clone() * &e[m - k]);
            }
            e.push(acc / C::from_i64(m as i64));
        }
        Ok(Series { coeffs: e })
    }

    /// `s^e = exp(e log s)` for `s_0 = 1`.
    pub fn pow(&self, e: &Exponent) -> Result<Self> {
        let e = C::from_exponent(e)?;
        self.log_unit()?.scale(&e).exp_zero()
    }

    /// `outer(inner(z))` by Horner accumulation; `inner_0` must vanish.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.same_order(inner)?;
        if !inner.coeffs[0].is_zero_coeff() {
            return Err(Error::ConstantTerm {
                op: "compose",
                expected: "0",
            });
        }
        let n = self.order();
        let mut acc = Self::monomial(self.coeffs[n].clone(), 0, n);
        for k in (0..n).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// `int_0^z s(t)/t dt`; `s_0` must vanish.
    pub fn integrate_over_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_coeff() {
            return Err(Error::ConstantTerm {
                op: "integrate_over_t",
                expected: "0",
            });
        }
        Ok(Self::from_fn(self.order(), |k| {
            if k == 0 {
                C::zero()
            } else {
                self.coeffs[k].clone() / C::from_i64(k as i64)
            }
        }))
    }

    /// Formal derivative; the result has order `N - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        Self::from_fn(n - 1, |k| {
            C::from_i64(k as i64 + 1) * &self.coeffs[k + 1]
        })
    }

    /// Antiderivative vanishing at 0; the result has order `N + 1`.
    pub fn antiderivative(&self) -> Self {
        Self::from_fn(self.order() + 1, |k| {
            if k == 0 {
                C::zero()
            } else {
                self.coeffs[k - 1].clone() / C::from_i64(k as i64)
            }
        })
    }

    /// `z * s`, order `N + 1`.
    pub fn shift_up(&self) -> Self {
        Self::from_fn(self.order() + 1, |k| {
            if k == 0 {
                C::zero()
            } else {
                self.coeffs[k - 1].clone()
            }
        })
    }

    /// `s / z` for `s_0 = 0`, order `N - 1`.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero_coeff() {
            return Err(Error::ConstantTerm {
                op: "shift_down",
                expected: "0",
            });
        }
        if self.order() == 0 {
            return Err(Error::OrderTooSmall { have: 0, need: 1 });
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `s(w z)`: coefficient `k` multiplied by `w^k`.
    pub fn dilate(&self, w: &C) -> Self {
        let mut p = C::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * &p);
            p = p * w;
        }
        Series { coeffs: out }
    }

    /// `s(z^m)`, truncated at the same order.
    pub fn substitute_power(&self, m: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * m > n {
                break;
            }
            out.coeffs[k * m] = c.clone();
        }
        out
    }

    /// Largest coefficient-wise distance, as a double.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a.clone() - b.clone()).abs_f64())
            .fold(0.0, f64::max)
    }
}
