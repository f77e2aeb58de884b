use std::f64::consts::PI;

use crate::error::{Error, Result};

const BASEL: f64 = PI * PI / 6.0;

/// `Li_2(x) = sum_{n>=1} x^n / n^2` for `|x| <= 1`, to about 1e-15 absolute.
///
/// For `|x| <= 1/2` the series is summed directly until the geometric tail bound
/// `|x|^{n+1} / ((n+1)^2 (1 - |x|))` drops below 1e-17. Larger arguments are
/// mapped into that range by the reflection `Li_2(x) + Li_2(1-x) = pi^2/6 - ln x ln(1-x)`
/// and the duplication `Li_2(x) + Li_2(-x) = Li_2(x^2)/2`.
pub fn dilog(x: f64) -> Result<f64> {
    if x.is_nan() || x.abs() > 1.0 {
        return Err(Error::Domain(format!("dilog needs |x| <= 1, got {x}")));
    }
    Ok(dilog_unchecked(x))
}

fn dilog_unchecked(x: f64) -> f64 {
    if x == 1.0 {
        return BASEL;
    }
    if x == -1.0 {
        return -BASEL / 2.0;
    }
    if x.abs() <= 0.5 {
        return dilog_series(x);
    }
    if x > 0.5 {
        return BASEL - x.ln() * (-x).ln_1p() - dilog_series(1.0 - x);
    }
    // x in [-1, -1/2): x^2 in (1/4, 1), -x in (1/2, 1)
    dilog_unchecked(x * x) / 2.0 - dilog_unchecked(-x)
}

fn dilog_series(x: f64) -> f64 {
    let ax = x.abs();
    let mut sum = 0.0;
    let mut p = 1.0;
    let mut n = 1u32;
    loop {
        p *= x;
        let nf = n as f64;
        sum += p / (nf * nf);
        let tail = ax.powi(n as i32 + 1) / ((nf + 1.0).powi(2) * (1.0 - ax));
        if tail < 1e-17 || n > 10_000 {
            break;
        }
        n += 1;
    }
    sum
}

/// `Li_2(x)/x`, with the limit value 1 at `x = 0`.
pub fn dilog_over_x(x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(1.0);
    }
    Ok(dilog(x)? / x)
}

/// `sum_{n>N} n^s` for `s < -1`, by Euler–Maclaurin at `N`.
pub(crate) fn power_tail(s: f64, big_n: usize) -> f64 {
    let n = big_n as f64;
    let integral = -n.powf(s + 1.0) / (s + 1.0);
    let f = n.powf(s);
    let d1 = s * n.powf(s - 1.0);
    let d3 = s * (s - 1.0) * (s - 2.0) * n.powf(s - 3.0);
    let d5 = s * (s - 1.0) * (s - 2.0) * (s - 3.0) * (s - 4.0) * n.powf(s - 5.0);
    integral - f / 2.0 - d1 / 12.0 + d3 / 720.0 - d5 / 30240.0
}
