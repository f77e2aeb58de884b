//! Sharp bound `Phi(mu, upsilon)` for `|c_3 + mu c_1 c_2 + upsilon c_1^3|` over
//! Schwarz functions, on the three parameter regions D2, D6 and D9.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PsRegion {
    D2,
    D6,
    D9,
}

impl std::fmt::Display for PsRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PsRegion::D2 => "D2",
            PsRegion::D6 => "D6",
            PsRegion::D9 => "D9",
        };
        f.write_str(s)
    }
}

const EDGE_TOL: f64 = 1e-12;

impl PsRegion {
    pub const ALL: [PsRegion; 3] = [PsRegion::D2, PsRegion::D6, PsRegion::D9];

    /// Closed `|mu|` range of the region (`D9` is unbounded above).
    pub fn mu_range(self) -> (f64, f64) {
        match self {
            PsRegion::D2 => (0.5, 2.0),
            PsRegion::D6 => (2.0, 4.0),
            PsRegion::D9 => (2.0, f64::INFINITY),
        }
    }

    /// Closed `upsilon` range at a given `mu` (`D6` is unbounded above).
    pub fn upsilon_range(self, mu: f64) -> (f64, f64) {
        let m = mu.abs();
        match self {
            PsRegion::D2 => (4.0 / 27.0 * (m + 1.0).powi(3) - (m + 1.0), 1.0),
            PsRegion::D6 => ((mu * mu + 8.0) / 12.0, f64::INFINITY),
            PsRegion::D9 => (
                -2.0 / 3.0 * (m + 1.0),
                2.0 * m * (m + 1.0) / (mu * mu + 2.0 * m + 4.0),
            ),
        }
    }

    pub fn contains(self, mu: f64, upsilon: f64) -> bool {
        let m = mu.abs();
        let (mlo, mhi) = self.mu_range();
        if m < mlo - EDGE_TOL || m > mhi + EDGE_TOL {
            return false;
        }
        let (lo, hi) = self.upsilon_range(mu);
        upsilon >= lo - EDGE_TOL && upsilon <= hi + EDGE_TOL
    }

    /// The region's closed-form value.
    pub fn value(self, mu: f64, upsilon: f64) -> f64 {
        let m = mu.abs();
        match self {
            PsRegion::D2 => 1.0,
            PsRegion::D6 => upsilon.abs(),
            PsRegion::D9 => 2.0 / 3.0 * (m + 1.0) * ((m + 1.0) / (3.0 * (m + 1.0 + upsilon))).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PsValue {
    pub value: f64,
    pub region: PsRegion,
}

/// Regions containing `(mu, upsilon)`, in D2, D6, D9 order.
pub fn ps_regions(mu: f64, upsilon: f64) -> Vec<PsRegion> {
    PsRegion::ALL
        .into_iter()
        .filter(|r| r.contains(mu, upsilon))
        .collect()
}

/// `Phi(mu, upsilon)`; where regions overlap their values are asserted to agree.
pub fn ps_phi(mu: f64, upsilon: f64) -> Result<PsValue> {
    let regions = ps_regions(mu, upsilon);
    let Some(&first) = regions.first() else {
        return Err(Error::UncoveredRegion { mu, upsilon });
    };
    let value = first.value(mu, upsilon);
    for r in &regions[1..] {
        let other = r.value(mu, upsilon);
        assert!(
            (other - value).abs() <= 1e-9,
            "PS regions {first} and {r} disagree at ({mu}, {upsilon}): {value} vs {other}"
        );
    }
    Ok(PsValue {
        value,
        region: first,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d2_example() {
        let v = ps_phi(1.0, 1.0).unwrap();
        assert_eq!(v.value, 1.0);
        assert_eq!(v.region, PsRegion::D2);
    }

    #[test]
    fn d6_boundary_example() {
        let v = ps_phi(3.0, 17.0 / 12.0).unwrap();
        assert_eq!(v.region, PsRegion::D6);
        assert!((v.value - 17.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn d9_example() {
        let v = ps_phi(3.0, 0.0).unwrap();
        assert_eq!(v.region, PsRegion::D9);
        assert!((v.value - 8.0 / (3.0 * 3f64.sqrt())).abs() < 1e-15);
        assert!((v.value - 1.5396).abs() < 1e-4);
    }

    #[test]
    fn uncovered_point() {
        assert!(matches!(ps_phi(0.1, 0.0), Err(Error::UncoveredRegion { .. })));
        assert!(matches!(ps_phi(3.0, 1.35), Err(Error::UncoveredRegion { .. })));
    }

    #[test]
    fn symmetric_in_sign_of_mu() {
        for &(mu, u) in &[(1.0, 0.5), (3.0, 2.0), (5.0, -1.0)] {
            assert_eq!(ps_phi(mu, u).unwrap(), ps_phi(-mu, u).unwrap());
        }
    }

    #[test]
    fn regions_agree_on_shared_boundaries() {
        // D2/D6/D9 meet only at |mu| = 2, upsilon = 1
        let shared = ps_regions(2.0, 1.0);
        assert_eq!(shared, vec![PsRegion::D2, PsRegion::D6, PsRegion::D9]);
        for r in shared {
            assert!((r.value(2.0, 1.0) - 1.0).abs() < 1e-12);
        }
        // D2/D9 overlap is the single point above; check continuity approaching it
        for k in 1..=20 {
            let e = 1e-3 * k as f64;
            let d2 = PsRegion::D2.value(2.0 - e, 1.0);
            let d9 = PsRegion::D9.value(2.0 + e, PsRegion::D9.upsilon_range(2.0 + e).1);
            assert!((d2 - d9).abs() < 10.0 * e);
        }
    }
}
