//! Carnot-Caratheodory distance from `(1, 0)`, by endpoint case.
//!
//! Every closed-form value is cross-checked against the minimum of the
//! solver's own solution list; a disagreement is an error, never a warning.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bvp::roots::scan_roots;
use crate::bvp::{
    b_function, b_plateau, enumerate_branches, fiber_branch_solutions, rho_base, solutions_at_q,
    solve_antipodal, solve_horizontal_sphere, BranchSolution, Endpoint, EndpointCase, SolverConfig,
};
use crate::error::{Error, Result};
use crate::geodesic::reduce_angle;
use crate::sphere::{SpherePoint, Su2Element};

/// Agreement required between the closed form and the enumerated minimum.
pub const CONSISTENCY_TOL: f64 = 1e-9;

/// `u0` closer than this to `+-|z1|` marks a boundary root.
const BOUNDARY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub distance: f64,
    pub case: EndpointCase,
    pub q_used: u32,
    pub minimizer: BranchSolution,
    /// Sorted lengths of every solution examined.
    pub all_lengths: Vec<f64>,
    /// `|theta1|` sits on the plateau `(pi/2)(1 - |z1|)`: the minimizer has `|u| = |z1|`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub boundary: bool,
}

fn lengths(sols: &[BranchSolution]) -> Vec<f64> {
    let mut l: Vec<f64> = sols.iter().map(|s| s.length).collect();
    l.sort_by(f64::total_cmp);
    l
}

fn shortest(sols: &[BranchSolution]) -> Option<BranchSolution> {
    sols.iter().copied().min_by(|a, b| a.length.total_cmp(&b.length))
}

fn checked(
    formula: f64,
    case: EndpointCase,
    sols: &[BranchSolution],
    q_used: Option<u32>,
    boundary: bool,
) -> Result<DistanceResult> {
    let best = shortest(sols).ok_or(Error::InconsistentMinimizer {
        formula,
        enumerated: f64::NAN,
    })?;
    if !((formula - best.length).abs() <= CONSISTENCY_TOL) {
        return Err(Error::InconsistentMinimizer {
            formula,
            enumerated: best.length,
        });
    }
    Ok(DistanceResult {
        distance: formula,
        case,
        q_used: q_used.unwrap_or(best.q),
        minimizer: best,
        all_lengths: lengths(sols),
        boundary,
    })
}

/// Unique root `u0` of `B(u) = theta1`, scanned in `u = |z1| sin t`.
fn plateau_root(endpoint: &Endpoint, config: &SolverConfig) -> Option<f64> {
    let (a, b, th) = (endpoint.abs1(), endpoint.abs2(), endpoint.theta1());
    let f = |t: f64| b_function(a * t.sin(), a, b).map(|v| v - th).unwrap_or(f64::NAN);
    scan_roots(f, -FRAC_PI_2, FRAC_PI_2, config.scan_points, config.root_tol)
        .into_iter()
        .map(|t| a * t.sin())
        .min_by(|x, y| x.abs().total_cmp(&y.abs()))
}

/// Distance from `(1, 0)` to the endpoint.
pub fn cc_distance(endpoint: &Endpoint, config: &SolverConfig) -> Result<DistanceResult> {
    config.validate()?;
    let case = endpoint.case();
    match case {
        EndpointCase::Fiber => {
            let sols = fiber_branch_solutions(endpoint, config.max_fiber_n)?;
            let w = reduce_angle(endpoint.z1().arg());
            checked((w * (TAU - w)).sqrt(), case, &sols, None, false)
        }
        EndpointCase::Antipodal => checked(PI, case, &solve_antipodal(config), None, false),
        EndpointCase::HorizontalSphere => {
            let sols = solve_horizontal_sphere(endpoint, config)?.solutions;
            let z1 = endpoint.z1().re.clamp(-1.0, 1.0);
            checked(z1.acos(), case, &sols, None, false)
        }
        EndpointCase::General => general_distance(endpoint, config),
    }
}

fn general_distance(endpoint: &Endpoint, config: &SolverConfig) -> Result<DistanceResult> {
    let case = EndpointCase::General;
    let a = endpoint.abs1();
    if endpoint.theta1().abs() <= b_plateau(a) {
        if let Some(u0) = plateau_root(endpoint, config) {
            let formula = (1.0 - u0 * u0).sqrt() * rho_base(u0, a, endpoint.abs2())?;
            let boundary = a - u0.abs() < BOUNDARY_TOL;
            let sols = enumerate_branches(endpoint, 1, config);
            return checked(formula, case, &sols, Some(0), boundary);
        }
    }
    let q_m = (0..=config.q_max)
        .find(|&q| !solutions_at_q(endpoint, q, config).is_empty())
        .ok_or(Error::NoSolutionWithinQmax { q_max: config.q_max })?;
    let at_q_m = solutions_at_q(endpoint, q_m, config);
    let formula = shortest(&at_q_m).expect("q_m has solutions").length;
    let sols = enumerate_branches(endpoint, q_m + 1, config);
    checked(formula, case, &sols, Some(q_m), false)
}

/// SU(2) element moving `a` to `(1, 0)`, and the image of `b`.
pub fn reduce_pair(a: &SpherePoint, b: &SpherePoint) -> Result<(Su2Element, Endpoint)> {
    for p in [a, b] {
        if p.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: p.dim(),
            });
        }
    }
    let (a1, a2) = (a.coords()[0], a.coords()[1]);
    let phi = Su2Element::new(a1.conj(), -a2)?;
    let [w1, w2] = phi.apply([b.coords()[0], b.coords()[1]]);
    let norm = (w1.norm_sqr() + w2.norm_sqr()).sqrt();
    Ok((phi, Endpoint::new(w1 / norm, w2 / norm)?))
}

/// Distance between two points of S^3.
pub fn cc_distance_between(a: &SpherePoint, b: &SpherePoint, config: &SolverConfig) -> Result<DistanceResult> {
    let (_, e) = reduce_pair(a, b)?;
    cc_distance(&e, config)
}

/// Endpoint `(e^{i omega}, 0)` on the fiber through `(1, 0)`.
pub fn fiber_endpoint(omega: f64) -> Result<Endpoint> {
    Endpoint::new(Complex64::from_polar(1.0, omega), Complex64::new(0.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn fiber_quarter_turn() {
        let d = cc_distance(&fiber_endpoint(FRAC_PI_2).unwrap(), &SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(d.distance, FRAC_PI_2 * 3f64.sqrt(), epsilon = 1e-14);
        assert_eq!(d.case, EndpointCase::Fiber);
    }

    #[test]
    fn antipodal() {
        let e = Endpoint::new(Complex64::new(-1.0, 0.0), Complex64::new(0.0, 0.0)).unwrap();
        let d = cc_distance(&e, &SolverConfig::default()).unwrap();
        assert_eq!(d.distance, PI);
    }

    #[test]
    fn horizontal() {
        let e = Endpoint::new(Complex64::new(0.7, 0.0), Complex64::new(0.51f64.sqrt(), 0.0)).unwrap();
        let d = cc_distance(&e, &SolverConfig::default()).unwrap();
        assert_abs_diff_eq!(d.distance, 0.795398830184144, epsilon = 1e-14);
    }

    #[test]
    fn forward_generated_upper_bound() {
        let e = Endpoint::new(
            crate::geodesic::s3_coords(0.3, 2.0, 1.0, 1.0)[0],
            crate::geodesic::s3_coords(0.3, 2.0, 1.0, 1.0)[1],
        )
        .unwrap();
        let d = cc_distance(&e, &SolverConfig::default()).unwrap();
        assert!(d.distance <= 2.0 * 0.91f64.sqrt() + 1e-12);
        assert_eq!(d.distance, d.all_lengths[0].min(d.distance));
    }

    #[test]
    fn reduce_pair_identity() {
        let a = SpherePoint::base(2);
        let b = SpherePoint::s3(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).unwrap();
        let (phi, e) = reduce_pair(&a, &b).unwrap();
        assert_eq!(phi, Su2Element::identity());
        assert_eq!(e.z1(), Complex64::new(0.6, 0.0));
        assert_eq!(e.z2(), Complex64::new(0.0, 0.8));
    }

    #[test]
    fn reduce_pair_swap() {
        let a = SpherePoint::s3(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)).unwrap();
        let b = SpherePoint::base(2);
        let (phi, e) = reduce_pair(&a, &b).unwrap();
        let img = phi.apply([a.coords()[0], a.coords()[1]]);
        assert!((img[0] - 1.0).norm() < 1e-15 && img[1].norm() < 1e-15);
        assert_abs_diff_eq!(e.z1().norm_sqr() + e.z2().norm_sqr(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn reduce_pair_rejects_higher_dimension() {
        let a = SpherePoint::base(3);
        assert!(matches!(reduce_pair(&a, &a), Err(Error::DimensionMismatch { .. })));
    }
}
