//! Boundary value problem for S^3 geodesics from `(1, 0)`.
//!
//! Every solver returns [`BranchSolution`]s: parameters `(u, rho, alpha)` of
//! a geodesic with `eval_s3(params, 1)` equal to the endpoint, re-verified
//! against the endpoint before being returned.

mod antipodal;
mod endpoint;
mod fiber;
mod functions;
mod general;
mod horizontal;
pub mod roots;

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesic::{reduce_angle, s3_coords, S3GeodesicParams};

pub use antipodal::solve_antipodal;
pub use endpoint::{Endpoint, EndpointCase, DEFAULT_CASE_EPS};
pub use fiber::{fiber_branch_solutions, solve_fiber, FiberSolution, FiberSolutions};
pub use functions::{
    arccot, b_function, b_plateau, horizontal_interval, horizontal_u_abs, phi_function, psi_function, rho_base,
};
pub use general::{enumerate_branches, solutions_at_q, solve_general, zero_z1_solutions};
pub use horizontal::{solve_horizontal_sphere, HorizontalSolutions};

/// Endpoint residual every returned solution must stay below.
pub const VERIFY_TOL: f64 = 1e-9;
/// Two solutions closer than this in both `u` and `rho` are merged.
pub const DEDUP_TOL: f64 = 1e-9;

const SIGN_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub q_max: u32,
    pub root_tol: f64,
    pub scan_points: usize,
    pub max_fiber_n: u32,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            q_max: 8,
            root_tol: 1e-12,
            scan_points: 2048,
            max_fiber_n: 16,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.root_tol > 0.0 && self.root_tol < 1e-6) {
            return Err(Error::InvalidConfig(format!(
                "root_tol must be in (0, 1e-6), got {}",
                self.root_tol
            )));
        }
        if self.scan_points < 2 {
            return Err(Error::InvalidConfig("scan_points must be at least 2".into()));
        }
        if self.max_fiber_n == 0 {
            return Err(Error::InvalidConfig("max_fiber_n must be positive".into()));
        }
        Ok(())
    }

    pub fn with_q_max(self, q_max: u32) -> Self {
        Self { q_max, ..self }
    }
}

/// Whether `alpha` is pinned down by the endpoint or free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Isolated,
    /// `sin rho = 0`: every `alpha` reaches the endpoint; `alpha = 0` is reported.
    Circle,
}

/// One solution of the boundary value problem.
///
/// `sigma1 = sgn cos rho` and `sigma2 = sgn sin rho`, with 0 when the value
/// is zero to within `1e-12`. `q = floor(rho / 2pi)` and `p` is the winding
/// index of the phase equation of `z1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchSolution {
    pub sigma1: i8,
    pub sigma2: i8,
    pub p: i64,
    pub q: u32,
    pub u: f64,
    pub rho: f64,
    pub alpha: f64,
    pub length: f64,
    pub residual: f64,
    pub family: Family,
}

impl BranchSolution {
    pub fn params(&self) -> S3GeodesicParams {
        S3GeodesicParams::new(self.u, self.rho, self.alpha).expect("solutions carry valid parameters")
    }
}

/// Complex 2-norm of `eval_s3(u, rho, alpha, 1) - endpoint`.
pub fn endpoint_residual(u: f64, rho: f64, alpha: f64, endpoint: &Endpoint) -> f64 {
    let [w1, w2] = s3_coords(u, rho, alpha, 1.0);
    ((w1 - endpoint.z1()).norm_sqr() + (w2 - endpoint.z2()).norm_sqr()).sqrt()
}

/// `alpha` from `z2 = r sin(rho) e^{-i (u rho + alpha)}`.
pub(crate) fn alpha_from_z2(u: f64, rho: f64, z2: Complex64) -> f64 {
    let scale = (1.0 - u * u).sqrt() * rho.sin();
    if z2.norm() == 0.0 || scale == 0.0 {
        return 0.0;
    }
    let w = z2 * Complex64::from_polar(1.0, u * rho) / scale;
    reduce_angle(-w.arg())
}

fn sign(x: f64) -> i8 {
    if x.abs() < SIGN_EPS {
        0
    } else if x > 0.0 {
        1
    } else {
        -1
    }
}

/// Winding index `p` of the phase equation `G(u) + 2 pi p = theta1`, where
/// `G` is the continuous branch of `arg z1(1)` on the `(sigma1, sigma2)` system.
pub(crate) fn phase_index(u: f64, rho: f64, theta1: f64) -> i64 {
    let (sn, cs) = rho.sin_cos();
    let beta = (u * sn.abs()).atan2(cs.abs());
    let arg = match (cs >= 0.0, sn >= 0.0) {
        (true, true) => beta,
        (false, false) => PI + beta,
        (false, true) => PI - beta,
        (true, false) => -beta,
    };
    ((theta1 - arg + u * rho) / TAU).round() as i64
}

/// Builds and verifies a solution; `None` if the residual is too large.
pub(crate) fn verified(
    endpoint: &Endpoint,
    u: f64,
    rho: f64,
    alpha: f64,
    p: i64,
    family: Family,
) -> Option<BranchSolution> {
    if !(u.abs() < 1.0) || !(rho > 0.0) {
        return None;
    }
    let alpha = reduce_angle(alpha);
    let residual = endpoint_residual(u, rho, alpha, endpoint);
    if !(residual < VERIFY_TOL) {
        return None;
    }
    let (sn, cs) = rho.sin_cos();
    Some(BranchSolution {
        sigma1: sign(cs),
        sigma2: sign(sn),
        p,
        q: (rho / TAU).floor() as u32,
        u,
        rho,
        alpha,
        length: rho * (1.0 - u * u).sqrt(),
        residual,
        family,
    })
}

fn order(a: &BranchSolution, b: &BranchSolution) -> std::cmp::Ordering {
    a.length
        .total_cmp(&b.length)
        .then(a.q.cmp(&b.q))
        .then(a.p.cmp(&b.p))
        .then(a.u.total_cmp(&b.u))
}

/// Merges solutions closer than [`DEDUP_TOL`] in `(u, rho)`, keeping the
/// smaller residual, and sorts by `(length, q, p, u)`.
pub(crate) fn dedup_sort(mut sols: Vec<BranchSolution>) -> Vec<BranchSolution> {
    sols.sort_by(|a, b| a.rho.total_cmp(&b.rho).then(a.u.total_cmp(&b.u)));
    let mut out: Vec<BranchSolution> = Vec::with_capacity(sols.len());
    for s in sols {
        let dup = out
            .iter_mut()
            .rev()
            .take_while(|o| s.rho - o.rho < DEDUP_TOL)
            .find(|o| (o.u - s.u).abs() < DEDUP_TOL);
        match dup {
            Some(o) => {
                if s.residual < o.residual {
                    *o = s;
                }
            }
            None => out.push(s),
        }
    }
    out.sort_by(order);
    out
}

/// All solutions the dedicated solver of the endpoint's case finds.
pub fn solve(endpoint: &Endpoint, config: &SolverConfig) -> Result<Vec<BranchSolution>> {
    config.validate()?;
    match endpoint.case() {
        EndpointCase::Fiber => fiber_branch_solutions(endpoint, config.max_fiber_n),
        EndpointCase::Antipodal => Ok(solve_antipodal(config)),
        EndpointCase::HorizontalSphere => Ok(solve_horizontal_sphere(endpoint, config)?.solutions),
        EndpointCase::General => solve_general(endpoint, config),
    }
}
