//! Endpoints with `z1` real and `z2 != 0`.
//!
//! The great circle `u = 0`, `rho = arccos z1` is the shortest connection;
//! its windings `rho = +-arccos z1 + 2 pi k` also reach the endpoint.
//! Further geodesics sit at the roots of `Phi(rho) = z1` on each interval
//! `D_n`, one for each sign of `u`. Everything with `rho < pi (q_max + 1)`
//! is returned.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::functions::{horizontal_interval, horizontal_u_abs, phi_function};
use super::general::zero_z1_solutions;
use super::roots::bracket_roots;
use super::{alpha_from_z2, dedup_sort, phase_index, verified, BranchSolution, Endpoint, Family, SolverConfig};
use crate::error::{Error, Result};

/// Values of `Phi - z1` larger than this at a bracketed sign change mark a pole.
const POLE_REJECT: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HorizontalSolutions {
    /// Sorted by length; the great-circle minimizer comes first.
    pub solutions: Vec<BranchSolution>,
    /// No root of `Phi(rho) = z1` was found on `D_1 ..= D_{q_max}`.
    pub no_roots_in_range: bool,
}

/// Solves the boundary value problem for an endpoint on the horizontal sphere.
///
/// `z1 = 0` is handled by the `rho = pi/2 + pi k` family.
pub fn solve_horizontal_sphere(endpoint: &Endpoint, config: &SolverConfig) -> Result<HorizontalSolutions> {
    config.validate()?;
    let im = endpoint.z1().im.abs();
    if im >= endpoint.case_eps() {
        return Err(Error::NotOnHorizontalSphere { im });
    }
    if endpoint.abs2() < endpoint.case_eps() {
        return Err(Error::EndpointOnSpecialLocus {
            case: if endpoint.z1().re < 0.0 { "antipodal" } else { "fiber" }.into(),
        });
    }
    if endpoint.abs1() < endpoint.case_eps() {
        let solutions = zero_z1_solutions(endpoint, config);
        return Ok(HorizontalSolutions {
            solutions,
            no_roots_in_range: false,
        });
    }
    let z1 = endpoint.z1().re;
    let theta1 = endpoint.theta1();
    let mut sols = Vec::new();
    let rho_cap = PI * (config.q_max as f64 + 1.0);
    // great circles: the minimizer arccos z1 and its windings +-arccos z1 + 2 pi k
    let rho0 = z1.acos();
    let circles = (0..).map(|k| TAU * k as f64).flat_map(|w| [w + rho0, w + TAU - rho0]);
    for rho in circles.take_while(|&r| r < rho_cap) {
        let alpha = alpha_from_z2(0.0, rho, endpoint.z2());
        if let Some(s) = verified(endpoint, 0.0, rho, alpha, phase_index(0.0, rho, theta1), Family::Isolated) {
            sols.push(s);
        }
    }
    let mut found = 0usize;
    let f = |rho: f64| phi_function(rho, z1).map(|v| v - z1).unwrap_or(f64::NAN);
    let n_scan = config.scan_points;
    for n in 1..=config.q_max {
        let (lo, hi) = horizontal_interval(n, z1);
        if !(hi > lo) {
            continue;
        }
        // interior points only: Phi - z1 vanishes at one end of every D_n
        let xs: Vec<f64> = (1..n_scan).map(|k| lo + (hi - lo) * k as f64 / n_scan as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
        for rho in bracket_roots(&f, &xs, &ys, config.root_tol) {
            if !(f(rho).abs() < POLE_REJECT) {
                continue;
            }
            let Ok(ua) = horizontal_u_abs(rho, z1) else {
                continue;
            };
            for u in [ua, -ua] {
                let alpha = alpha_from_z2(u, rho, endpoint.z2());
                if let Some(s) = verified(endpoint, u, rho, alpha, phase_index(u, rho, theta1), Family::Isolated) {
                    sols.push(s);
                    found += 1;
                }
            }
        }
    }
    Ok(HorizontalSolutions {
        solutions: dedup_sort(sols),
        no_roots_in_range: found == 0,
    })
}
