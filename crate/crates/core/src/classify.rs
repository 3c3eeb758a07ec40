//! Open/closed classification of arc-length geodesics and their fiber
//! intersections, plus the Clifford torus containing a translated geodesic.
//!
//! For a geodesic with unit horizontal speed and vertical speed `vf`, the
//! ratio `c = vf / sqrt(1 + vf^2)` decides everything: the curve meets the
//! fiber of its start point at `s_n = pi n / sqrt(1 + vf^2)`, at phase
//! `pi n (1 - c)`. It closes up exactly when `c = p/q` is rational.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sphere::Su2Element;

/// Default largest denominator tried by [`detect_rational`].
pub const DEFAULT_MAX_DENOMINATOR: u64 = 64;
/// Default tolerance of [`detect_rational`].
pub const DEFAULT_RATIONAL_TOL: f64 = 1e-9;

/// Ratio `c = vf / sqrt(1 + vf^2)`, given exactly or as a real number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VerticalRatio {
    /// `p/q` with `0 <= p < q` coprime. Classified as closed.
    Rational { p: u64, q: u64 },
    /// Any real in `[0, 1)`. Classified as open.
    Real(f64),
}

impl VerticalRatio {
    /// Ratio of a given vertical speed.
    pub fn from_vertical_speed(vf: f64) -> Self {
        VerticalRatio::Real(vf / (1.0 + vf * vf).sqrt())
    }
}

/// One intersection with the fiber through the start point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FiberHit {
    /// Arc-length time of the hit.
    pub s: f64,
    /// Phase `theta` with the geodesic at `a e^{i theta}`, in `[0, 2pi)`.
    pub phase: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub closed: bool,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub ratio: f64,
    pub vertical_speed: f64,
    pub minimal_period: Option<f64>,
    pub loop_length: Option<f64>,
    pub fiber_hits: Vec<FiberHit>,
    pub segment_length: f64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Classifies the geodesic with the given ratio.
///
/// For the open case `open_hits` fiber intersections are listed; the closed
/// case always lists the `2q` hits of one loop.
pub fn classify(ratio: VerticalRatio, open_hits: usize) -> Result<ClassificationReport> {
    match ratio {
        VerticalRatio::Rational { p, q } => {
            if q == 0 || p >= q {
                return Err(Error::InvalidRatio(format!("need 0 <= p < q, got {p}/{q}")));
            }
            if gcd(p, q) != 1 {
                return Err(Error::InvalidRatio(format!("{p}/{q} is not in lowest terms")));
            }
            let (pf, qf) = (p as f64, q as f64);
            let root = ((qf - pf) * (qf + pf)).sqrt();
            let period = TAU * root;
            let segment = PI * root / qf;
            // phase pi n (q - p) / q reduced with integer arithmetic
            let fiber_hits = (1..=2 * q)
                .map(|n| FiberHit {
                    s: segment * n as f64,
                    phase: PI * ((n * (q - p)) % (2 * q)) as f64 / qf,
                })
                .collect();
            Ok(ClassificationReport {
                closed: true,
                p: Some(p),
                q: Some(q),
                ratio: pf / qf,
                vertical_speed: pf / root,
                minimal_period: Some(period),
                loop_length: Some(period),
                fiber_hits,
                segment_length: segment,
            })
        }
        VerticalRatio::Real(c) => {
            if !(0.0..1.0).contains(&c) {
                return Err(Error::InvalidRatio(format!("ratio {c} is outside [0, 1)")));
            }
            let w = (1.0 - c * c).sqrt();
            let segment = PI * w;
            let fiber_hits = (1..=open_hits)
                .map(|n| {
                    let n = n as f64;
                    FiberHit {
                        s: segment * n,
                        phase: crate::geodesic::reduce_angle(PI * n * (1.0 - c)),
                    }
                })
                .collect();
            Ok(ClassificationReport {
                closed: false,
                p: None,
                q: None,
                ratio: c,
                vertical_speed: c / w,
                minimal_period: None,
                loop_length: None,
                fiber_hits,
                segment_length: segment,
            })
        }
    }
}

/// Outcome of looking for a small-denominator fraction near a real ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RationalDetection {
    pub p: u64,
    pub q: u64,
    pub error: f64,
}

/// Finds the fraction `p/q`, `q <= max_denominator`, within `tol` of `c`,
/// preferring the smallest denominator.
pub fn detect_rational(c: f64, max_denominator: u64, tol: f64) -> Option<RationalDetection> {
    if !(0.0..1.0).contains(&c) {
        return None;
    }
    (1..=max_denominator).find_map(|q| {
        let p = (c * q as f64).round() as u64;
        let error = (c - p as f64 / q as f64).abs();
        (error < tol && p < q && gcd(p, q) == 1).then_some(RationalDetection { p, q, error })
    })
}

/// Squared radius `|w1|^2` of the Clifford torus that contains the geodesic
/// with vertical speed `vf` after the translation of [`clifford_translation`].
pub fn clifford_torus_level(vf: f64) -> Result<f64> {
    if !(vf >= 0.0) {
        return Err(Error::InvalidParams(format!("vertical speed must be >= 0, got {vf}")));
    }
    let t = (1.0 + vf * vf).sqrt() - vf;
    Ok(1.0 / (1.0 + t * t))
}

/// SU(2) element `(rho, i e^{i alpha} sqrt(1 - rho^2))` that moves the
/// arc-length geodesic from `(1, 0)` with horizontal direction `(0, e^{i alpha})`
/// and vertical speed `vf` onto the Clifford torus `|w1|^2 = rho^2`.
pub fn clifford_translation(vf: f64, alpha: f64) -> Result<Su2Element> {
    let level = clifford_torus_level(vf)?;
    let phi1 = Complex64::new(level.sqrt(), 0.0);
    let phi2 = Complex64::new(0.0, 1.0) * Complex64::from_polar((1.0 - level).sqrt(), alpha);
    Su2Element::new(phi1, phi2)
}
