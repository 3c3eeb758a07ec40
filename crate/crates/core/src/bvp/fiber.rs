//! Endpoints on the fiber through the base point.
//!
//! With unit horizontal speed the geodesic meets the fiber at arc length
//! `pi n / sqrt(1 + vf^2)`, at phase `pi n (1 - c)` with `c = vf / sqrt(1 + vf^2)`.
//! Solving `pi n (1 - c) = omega` gives the n-th family.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::{dedup_sort, verified, BranchSolution, Endpoint, Family};
use crate::error::{Error, Result};
use crate::geodesic::reduce_angle;

/// Fiber phases closer than this to 0 (mod 2pi) are degenerate.
const OMEGA_EPS: f64 = 1e-12;

/// The n-th family of geodesics reaching `a e^{i omega}`.
///
/// The horizontal direction is free: any unit horizontal vector works.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FiberSolution {
    pub n: u32,
    /// Signed vertical speed in the arc-length clock. Negative for reflected phases.
    pub vertical_speed: f64,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberSolutions {
    /// Phase reduced to `(0, 2pi)`.
    pub omega: f64,
    /// `omega > pi`: solved for `2pi - omega` and the vertical speed flipped.
    pub reflected: bool,
    /// Sorted by length; the first entry is the shortest.
    pub solutions: Vec<FiberSolution>,
}

fn reduce_omega(omega: f64) -> Result<f64> {
    if !omega.is_finite() {
        return Err(Error::OmegaOutOfRange { omega });
    }
    let w = reduce_angle(omega);
    if w < OMEGA_EPS || TAU - w < OMEGA_EPS {
        return Err(Error::DegenerateOmega);
    }
    Ok(w)
}

/// Families `n = 1..=n_max` of geodesics from `a` to `a e^{i omega}`.
pub fn solve_fiber(omega: f64, n_max: u32) -> Result<FiberSolutions> {
    let omega = reduce_omega(omega)?;
    let reflected = omega > PI;
    let w = if reflected { TAU - omega } else { omega };
    let sign = if reflected { -1.0 } else { 1.0 };
    let solutions = (1..=n_max)
        .map(|n| {
            let pn = PI * n as f64;
            let root = (w * (2.0 * pn - w)).sqrt();
            FiberSolution {
                n,
                vertical_speed: sign * (pn - w) / root,
                length: root,
            }
        })
        .collect();
    Ok(FiberSolutions {
        omega,
        reflected,
        solutions,
    })
}

/// Every S^3 geodesic with `rho = pi n`, `n <= n_max`, ending at `(e^{i omega}, 0)`.
///
/// For `rho = pi n` the endpoint is `(e^{i pi n (1 - u)}, 0)`, so each total
/// phase `W = omega + 2 pi k` in `(0, 2 pi n)` gives `u = 1 - W / (pi n)`,
/// reported with `p = k`.
pub fn fiber_branch_solutions(endpoint: &Endpoint, n_max: u32) -> Result<Vec<BranchSolution>> {
    let omega = reduce_omega(endpoint.z1().arg())?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let pn = PI * n as f64;
        let mut k = 0i64;
        loop {
            let w = omega + TAU * k as f64;
            if w >= 2.0 * pn {
                break;
            }
            if let Some(s) = verified(endpoint, 1.0 - w / pn, pn, 0.0, k, Family::Circle) {
                out.push(s);
            }
            k += 1;
        }
    }
    Ok(dedup_sort(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    #[test]
    fn half_turn() {
        let f = solve_fiber(PI, 3).unwrap();
        assert_eq!(f.solutions[0].vertical_speed, 0.0);
        assert_abs_diff_eq!(f.solutions[0].length, PI, epsilon = 1e-15);
    }

    #[test]
    fn quarter_turn() {
        let f = solve_fiber(PI / 2.0, 1).unwrap();
        assert_abs_diff_eq!(f.solutions[0].length, PI * 3f64.sqrt() / 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(f.solutions[0].vertical_speed, 1.0 / 3f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn small_phase_limit() {
        let mut prev = f64::INFINITY;
        for k in 1..=6 {
            let f = solve_fiber(10f64.powi(-k), 1).unwrap();
            assert!(f.solutions[0].length < prev);
            prev = f.solutions[0].length;
            assert!(f.solutions[0].vertical_speed > 10f64.powf(k as f64 / 2.0));
        }
    }

    #[test]
    fn lengths_increase_with_n() {
        let f = solve_fiber(1.3, 16).unwrap();
        for w in f.solutions.windows(2) {
            assert!(w[1].length > w[0].length);
        }
    }

    #[test]
    fn reflection() {
        let f = solve_fiber(3.0 * PI / 2.0, 2).unwrap();
        assert!(f.reflected);
        assert!(f.solutions[0].vertical_speed < 0.0);
        assert_abs_diff_eq!(f.solutions[0].length, PI * 3f64.sqrt() / 2.0, epsilon = 1e-14);
    }

    #[test]
    fn degenerate_and_invalid() {
        assert_eq!(solve_fiber(0.0, 1), Err(Error::DegenerateOmega));
        assert_eq!(solve_fiber(TAU, 1), Err(Error::DegenerateOmega));
        assert!(matches!(solve_fiber(f64::NAN, 1), Err(Error::OmegaOutOfRange { .. })));
    }

    #[test]
    fn branch_solutions_reach_the_endpoint() {
        let e = Endpoint::new(Complex64::from_polar(1.0, 1.0), Complex64::new(0.0, 0.0)).unwrap();
        let sols = fiber_branch_solutions(&e, 4).unwrap();
        // n families contribute n phases each
        assert_eq!(sols.len(), 1 + 2 + 3 + 4);
        assert_abs_diff_eq!(sols[0].length, (TAU - 1.0).sqrt(), epsilon = 1e-14);
        assert!(sols.iter().all(|s| s.residual < 1e-9 && s.family == Family::Circle));
    }
}
