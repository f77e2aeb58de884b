//! Derivative-free maximization over Schur parameters: seeded restarts
//! followed by coordinate-wise golden-section refinement on the modulus and
//! phase of each parameter (plus an optional extra angle).

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::sample::disk_point;

const INV_PHI: f64 = 0.618_033_988_749_894_9;
const SECTION_EVALS: usize = 30;
const MAX_SWEEPS: usize = 6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Incumbent {
    pub evaluation: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub schur: Vec<Complex64>,
    pub angle: f64,
}

#[derive(Debug, Clone)]
pub struct OptResult {
    pub best: Point,
    pub value: f64,
    pub trajectory: Vec<Incumbent>,
    pub evaluations: usize,
}

struct State<'a, F> {
    objective: &'a F,
    budget: usize,
    used: usize,
    best: Option<(Point, f64)>,
    trajectory: Vec<Incumbent>,
}

impl<F: Fn(&Point) -> f64> State<'_, F> {
    fn exhausted(&self) -> bool {
        self.used >= self.budget
    }

    fn eval(&mut self, p: &Point) -> Option<f64> {
        if self.exhausted() {
            return None;
        }
        self.used += 1;
        let v = (self.objective)(p);
        let v = if v.is_finite() { v } else { f64::NEG_INFINITY };
        if self.best.as_ref().is_none_or(|(_, b)| v > *b) {
            self.best = Some((p.clone(), v));
            self.trajectory.push(Incumbent {
                evaluation: self.used,
                value: v,
            });
        }
        Some(v)
    }

    /// Golden-section maximization of `t -> objective(set(p, t))` on `[lo, hi]`,
    /// keeping the current value if nothing better is found.
    fn section(&mut self, p: &mut Point, current: f64, lo: f64, hi: f64, set: impl Fn(&mut Point, f64)) -> f64 {
        let at = |p: &Point, t: f64| {
            let mut q = p.clone();
            set(&mut q, t);
            q
        };
        let (mut a, mut b) = (lo, hi);
        let mut x1 = b - INV_PHI * (b - a);
        let mut x2 = a + INV_PHI * (b - a);
        let Some(mut f1) = self.eval(&at(p, x1)) else { return current };
        let Some(mut f2) = self.eval(&at(p, x2)) else { return current };
        let (mut best_t, mut best_v) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        for _ in 0..SECTION_EVALS {
            if f1 >= f2 {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - INV_PHI * (b - a);
                let Some(v) = self.eval(&at(p, x1)) else { break };
                f1 = v;
                if v > best_v {
                    (best_t, best_v) = (x1, v);
                }
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + INV_PHI * (b - a);
                let Some(v) = self.eval(&at(p, x2)) else { break };
                f2 = v;
                if v > best_v {
                    (best_t, best_v) = (x2, v);
                }
            }
        }
        // endpoints matter: extremals sit on the unit circle
        for t in [lo, hi] {
            if let Some(v) = self.eval(&at(p, t)) {
                if v > best_v {
                    (best_t, best_v) = (t, v);
                }
            }
        }
        if best_v > current {
            set(p, best_t);
            best_v
        } else {
            current
        }
    }

    fn refine(&mut self, mut p: Point, use_angle: bool) {
        let Some(mut value) = self.eval(&p) else { return };
        for _ in 0..MAX_SWEEPS {
            let start = value;
            for j in 0..p.schur.len() {
                let phase = p.schur[j].arg();
                value = self.section(&mut p, value, 0.0, 1.0, |q, r| {
                    q.schur[j] = Complex64::from_polar(r, phase)
                });
                let r = p.schur[j].norm();
                if r > 0.0 {
                    value = self.section(&mut p, value, -PI, PI, |q, t| {
                        q.schur[j] = Complex64::from_polar(r, t)
                    });
                }
                if self.exhausted() {
                    return;
                }
            }
            if use_angle {
                value = self.section(&mut p, value, -PI, PI, |q, t| q.angle = t);
            }
            if self.exhausted() || value - start <= 1e-13 * value.abs().max(1.0) {
                return;
            }
        }
    }
}

/// Maximizes `objective` over `dim` Schur parameters (and an angle when
/// `use_angle`) within `budget` evaluations.
///
/// Starts are tried in order: the zero point, the monomials `z^k` for
/// `k = 1..=dim`, any `extra_starts`, then random disk points from `rng`.
pub fn maximize<F, R>(
    dim: usize,
    use_angle: bool,
    budget: usize,
    extra_starts: &[Point],
    rng: &mut R,
    objective: F,
) -> OptResult
where
    F: Fn(&Point) -> f64,
    R: Rng,
{
    let mut st = State {
        objective: &objective,
        budget: budget.max(1),
        used: 0,
        best: None,
        trajectory: Vec::new(),
    };
    let zero = Point {
        schur: vec![Complex64::new(0.0, 0.0); dim],
        angle: 0.0,
    };
    st.eval(&zero);
    let mut starts: Vec<Point> = (1..=dim)
        .map(|k| {
            let mut p = zero.clone();
            p.schur[k - 1] = Complex64::new(1.0, 0.0);
            p
        })
        .collect();
    starts.extend_from_slice(extra_starts);
    for p in starts {
        if st.exhausted() {
            break;
        }
        st.refine(p, use_angle);
    }
    while !st.exhausted() {
        let p = Point {
            schur: (0..dim).map(|_| disk_point(rng)).collect(),
            angle: if use_angle { rng.gen_range(-PI..PI) } else { 0.0 },
        };
        st.refine(p, use_angle);
    }
    let (best, value) = st.best.expect("at least one evaluation");
    OptResult {
        best,
        value,
        trajectory: st.trajectory,
        evaluations: st.used,
    }
}
