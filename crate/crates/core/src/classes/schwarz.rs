use std::cmp::Ordering;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, Float};
use crate::error::{Error, Result};
use crate::series::Series;

/// A Schwarz function `phi(z) = z psi(z)` with `psi` given by its Schur parameters.
///
/// Validity (`|phi| < 1` on the disk) holds by construction: every parameter is
/// checked to lie in the closed unit disk and `psi` is rebuilt from them with the
/// inverse Schur recursion
/// `psi_k = (l_k + z psi_{k+1}) / (1 + conj(l_k) z psi_{k+1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzFn<C: Coeff> {
    schur: Vec<C>,
    phi: Series<C>,
}

/// JSON form `{"schur": [[re, im], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchwarzJson {
    pub schur: Vec<[f64; 2]>,
}

impl<C: Coeff> SchwarzFn<C> {
    /// Builds `phi` to order `order` from Schur parameters `l_0..l_m`.
    ///
    /// A unimodular parameter ends the recursion (`psi_k` is that constant), so
    /// later parameters are ignored. An empty list gives `phi = 0`.
    pub fn from_schur(params: &[C], order: usize) -> Result<Self> {
        for (index, l) in params.iter().enumerate() {
            if l.cmp_modulus_one() == Ordering::Greater {
                return Err(Error::SchurModulus {
                    index,
                    modulus: l.abs_f64(),
                });
            }
        }
        if order == 0 {
            return Ok(SchwarzFn {
                schur: params.to_vec(),
                phi: Series::zero(0),
            });
        }
        let m = order - 1;
        let mut psi = Series::<C>::zero(m);
        for l in params.iter().rev() {
            if l.cmp_modulus_one() == Ordering::Equal {
                psi = Series::monomial(l.clone(), 0, m);
                continue;
            }
            let z_psi = psi.shift_up().truncate(m);
            let num = z_psi.add_constant(l);
            let den = z_psi.scale(&l.conj()).add_constant(&C::one());
            psi = num.div(&den)?;
        }
        Ok(SchwarzFn {
            schur: params.to_vec(),
            phi: psi.shift_up(),
        })
    }

    pub fn zero(order: usize) -> Self {
        SchwarzFn {
            schur: vec![C::zero()],
            phi: Series::zero(order),
        }
    }

    /// `phi(z) = z^k` (Schur parameters `0, ..., 0, 1`).
    pub fn monomial(k: usize, order: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("Schwarz monomial needs k >= 1".into()));
        }
        let mut params = vec![C::zero(); k - 1];
        params.push(C::one());
        Self::from_schur(&params, order)
    }

    /// Schur refit of raw coefficients `c_1..c_N`.
    ///
    /// Rejects the input if any step of the forward Schur algorithm produces a
    /// parameter of modulus above one (beyond the float tolerance).
    pub fn from_coefficients(coeffs: &[C]) -> Result<Self> {
        if coeffs.is_empty() {
            return Ok(Self::zero(0));
        }
        let order = coeffs.len();
        let mut psi = Series::new(coeffs.to_vec())?;
        let mut params = Vec::with_capacity(order);
        loop {
            let l = psi.coeff(0).clone();
            match l.cmp_modulus_one() {
                Ordering::Greater => {
                    return Err(Error::SchurModulus {
                        index: params.len(),
                        modulus: l.abs_f64(),
                    })
                }
                Ordering::Equal => {
                    params.push(l);
                    break;
                }
                Ordering::Less => {}
            }
            params.push(l.clone());
            if psi.order() == 0 {
                break;
            }
            let num = psi.add_constant(&(-l.clone())).shift_down()?;
            let den = psi
                .scale(&(-l.conj()))
                .add_constant(&C::one())
                .truncate(num.order());
            psi = num.div(&den)?;
        }
        Self::from_schur(&params, order)
    }

    pub fn from_json(json: &SchwarzJson, order: usize) -> Result<Self> {
        let params = json
            .schur
            .iter()
            .map(|&[re, im]| C::from_complex(Complex64::new(re, im), "complex Schur parameters"))
            .collect::<Result<Vec<C>>>()?;
        Self::from_schur(&params, order)
    }

    pub fn to_json(&self) -> SchwarzJson {
        SchwarzJson {
            schur: self
                .schur
                .iter()
                .map(|l| {
                    let z = l.to_complex();
                    [z.re, z.im]
                })
                .collect(),
        }
    }

    pub fn schur_params(&self) -> &[C] {
        &self.schur
    }

    pub fn series(&self) -> &Series<C> {
        &self.phi
    }

    pub fn order(&self) -> usize {
        self.phi.order()
    }

    /// `c_1..c_{k_max}`.
    pub fn coefficients_of(&self, k_max: usize) -> Result<Vec<C>> {
        if k_max > self.order() {
            return Err(Error::CoefficientRange {
                requested: k_max,
                available: self.order(),
            });
        }
        Ok(self.phi.coeffs()[1..=k_max].to_vec())
    }

    /// Same function truncated to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        SchwarzFn {
            schur: self.schur.clone(),
            phi: self.phi.truncate(order),
        }
    }
}

impl SchwarzFn<Float> {
    /// `phi(e^{i theta} z)`; Schur parameter `k` picks up `e^{i (k+1) theta}`.
    pub fn rotated(&self, theta: f64) -> Self {
        let w = Complex64::from_polar(1.0, theta);
        let schur = self
            .schur
            .iter()
            .enumerate()
            .map(|(k, l)| l * Complex64::from_polar(1.0, theta * (k as f64 + 1.0)))
            .collect();
        SchwarzFn {
            schur,
            phi: self.phi.dilate(&w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Exact;

    fn q(n: i64, d: i64) -> Exact {
        Exact::ratio(n, d)
    }

    #[test]
    fn unimodular_constant_gives_identity() {
        let phi = SchwarzFn::<Exact>::from_schur(&[q(1, 1)], 6).unwrap();
        assert_eq!(phi.series(), &Series::z(6));
        assert_eq!(phi.coefficients_of(3).unwrap(), vec![q(1, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn zero_parameter_gives_zero() {
        let phi = SchwarzFn::<Exact>::from_schur(&[q(0, 1)], 6).unwrap();
        assert_eq!(phi.series(), &Series::zero(6));
    }

    #[test]
    fn one_recursion_step_gives_z_squared() {
        let phi = SchwarzFn::<Exact>::from_schur(&[q(0, 1), q(1, 1)], 6).unwrap();
        assert_eq!(phi.series(), &Series::monomial(q(1, 1), 2, 6));
        assert_eq!(phi.coefficients_of(3).unwrap(), vec![q(0, 1), q(1, 1), q(0, 1)]);
        assert_eq!(SchwarzFn::<Exact>::monomial(2, 6).unwrap().series(), phi.series());
    }

    #[test]
    fn unimodular_parameter_truncates_the_recursion() {
        let a = SchwarzFn::<Exact>::from_schur(&[q(1, 3), q(-1, 1), q(1, 2)], 8).unwrap();
        let b = SchwarzFn::<Exact>::from_schur(&[q(1, 3), q(-1, 1)], 8).unwrap();
        assert_eq!(a.series(), b.series());
    }

    #[test]
    fn half_parameters_match_long_division_oracle() {
        // psi_1 = 1/2, psi_0 = (1/2 + z/2) / (1 + z/4); divide by hand-rolled long division
        let num = [q(1, 2), q(1, 2), q(0, 1), q(0, 1), q(0, 1)];
        let den = [q(1, 1), q(1, 4), q(0, 1), q(0, 1), q(0, 1)];
        let mut quo: Vec<Exact> = Vec::new();
        for k in 0..5 {
            let mut r = num[k].clone();
            for j in 0..k {
                r -= &(quo[j].clone() * &den[k - j]);
            }
            quo.push(r);
        }
        let phi = SchwarzFn::<Exact>::from_schur(&[q(1, 2), q(1, 2)], 5).unwrap();
        assert_eq!(phi.coefficients_of(5).unwrap(), quo);
        assert_eq!(phi.coefficients_of(2).unwrap(), vec![q(1, 2), q(3, 8)]);

        let single = SchwarzFn::<Exact>::from_schur(&[q(1, 2)], 4).unwrap();
        assert_eq!(single.coefficients_of(2).unwrap(), vec![q(1, 2), q(0, 1)]);
    }

    #[test]
    fn rejects_parameters_outside_the_disk() {
        let err = SchwarzFn::<Exact>::from_schur(&[q(1, 2), q(5, 4)], 4).unwrap_err();
        assert!(matches!(err, Error::SchurModulus { index: 1, .. }));
        let err = SchwarzFn::<Float>::from_schur(&[Complex64::new(0.8, 0.7)], 4).unwrap_err();
        assert!(matches!(err, Error::SchurModulus { index: 0, .. }));
    }

    #[test]
    fn coefficient_range_is_checked() {
        let phi = SchwarzFn::<Exact>::from_schur(&[q(1, 1)], 3).unwrap();
        assert!(phi.coefficients_of(4).is_err());
    }

    #[test]
    fn schur_refit_recovers_parameters() {
        let params = [q(1, 3), q(-1, 4), q(2, 5), q(1, 7)];
        let phi = SchwarzFn::<Exact>::from_schur(&params, 4).unwrap();
        let refit = SchwarzFn::<Exact>::from_coefficients(&phi.coefficients_of(4).unwrap()).unwrap();
        assert_eq!(refit.schur_params(), &params);
        assert_eq!(refit.series(), phi.series());
    }

    #[test]
    fn schur_refit_rejects_non_schwarz_data() {
        // c_1 = 1/2, c_2 = 1: |c_2| > 1 - |c_1|^2 so the second step leaves the disk
        let err = SchwarzFn::<Exact>::from_coefficients(&[q(1, 2), q(1, 1)]).unwrap_err();
        assert!(matches!(err, Error::SchurModulus { index: 1, .. }));
        assert!(SchwarzFn::<Exact>::from_coefficients(&[q(3, 2)]).is_err());
    }

    #[test]
    fn rotation_matches_parameter_rotation() {
        let params = [Complex64::new(0.3, 0.2), Complex64::new(-0.5, 0.1), Complex64::new(0.0, 0.6)];
        let phi = SchwarzFn::<Float>::from_schur(&params, 10).unwrap();
        let rot = phi.rotated(0.7);
        let rebuilt = SchwarzFn::<Float>::from_schur(rot.schur_params(), 10).unwrap();
        assert!(rebuilt.series().max_abs_diff(rot.series()) < 1e-13);
    }

    #[test]
    fn json_round_trip() {
        let phi = SchwarzFn::<Float>::from_schur(&[Complex64::new(0.25, -0.5)], 4).unwrap();
        let text = serde_json::to_string(&phi.to_json()).unwrap();
        assert_eq!(text, r#"{"schur":[[0.25,-0.5]]}"#);
        let back = SchwarzFn::<Float>::from_json(&serde_json::from_str(&text).unwrap(), 4).unwrap();
        assert_eq!(back, phi);
        let err = SchwarzFn::<Exact>::from_json(&serde_json::from_str(&text).unwrap(), 4);
        assert!(matches!(err, Err(Error::FloatOnly(_))));
    }
}
