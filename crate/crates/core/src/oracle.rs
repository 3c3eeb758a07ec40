//! Brute-force shooting over `(u, rho, alpha)`.
//!
//! Only the forward map `eval_s3(., 1)` is used, never the branch equations,
//! so the oracle is an independent check of the distance solver. `z1(1)`
//! does not depend on `alpha`, so `(u, rho)` are found first on a grid and
//! refined, then `alpha` is fitted to `z2`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bvp::Endpoint;
use crate::error::{Error, Result};
use crate::geodesic::{reduce_angle, s3_coords};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub grid_u: usize,
    pub grid_rho: usize,
    pub rho_max: f64,
    pub grid_alpha: usize,
    pub refine_iters: usize,
    pub accept_residual: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            grid_u: 401,
            grid_rho: 2000,
            rho_max: 4.0 * PI,
            grid_alpha: 256,
            refine_iters: 60,
            accept_residual: 1e-6,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        let ok = self.grid_u > 1
            && self.grid_rho > 1
            && self.grid_alpha > 1
            && self.refine_iters > 0
            && self.rho_max > 0.0
            && self.accept_residual > 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidConfig(format!("oracle grid sizes and tolerances must be positive: {self:?}")))
        }
    }
}

/// Best shot found by [`shooting_oracle`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub length: f64,
    pub u: f64,
    pub rho: f64,
    pub alpha: f64,
    pub residual: f64,
    /// Grid candidates that refined below `accept_residual`.
    pub accepted: usize,
}

fn z1_error(u: f64, rho: f64, t1: Complex64) -> f64 {
    (s3_coords(u, rho, 0.0, 1.0)[0] - t1).norm()
}

const U_MAX: f64 = 1.0 - 1e-12;

/// Compass search in `(u, rho)` with step halving, then Newton steps on
/// `z1(u, rho) = t1` with a central-difference Jacobian.
fn refine_u_rho(mut u: f64, mut rho: f64, du: f64, drho: f64, t1: Complex64, iters: usize) -> (f64, f64) {
    let mut e = z1_error(u, rho, t1);
    let (mut hu, mut hr) = (du, drho);
    let mut halvings = 0;
    while halvings < iters {
        let mut moved = false;
        for (cu, cr) in [(hu, 0.0), (-hu, 0.0), (0.0, hr), (0.0, -hr)] {
            let (nu, nr) = ((u + cu).clamp(-U_MAX, U_MAX), rho + cr);
            if nr <= 0.0 {
                continue;
            }
            let ne = z1_error(nu, nr, t1);
            if ne < e {
                (u, rho, e) = (nu, nr, ne);
                moved = true;
            }
        }
        if !moved {
            hu *= 0.5;
            hr *= 0.5;
            halvings += 1;
        }
    }
    let f = |u: f64, rho: f64| s3_coords(u, rho, 0.0, 1.0)[0] - t1;
    let h = 1e-7;
    for _ in 0..20 {
        let r = f(u, rho);
        if r.norm() < 1e-15 {
            break;
        }
        let ju = (f(u + h, rho) - f(u - h, rho)) / (2.0 * h);
        let jr = (f(u, rho + h) - f(u, rho - h)) / (2.0 * h);
        let det = ju.re * jr.im - ju.im * jr.re;
        if det.abs() < 1e-14 {
            break;
        }
        let su = (r.re * jr.im - r.im * jr.re) / det;
        let sr = (ju.re * r.im - ju.im * r.re) / det;
        let (nu, nr) = (u - su, rho - sr);
        if !(nu.abs() < 1.0) || !(nr > 0.0) || f(nu, nr).norm() >= r.norm() {
            break;
        }
        (u, rho) = (nu, nr);
    }
    (u, rho)
}

/// Grid plus golden-section fit of `alpha` to the target `z2`.
fn fit_alpha(u: f64, rho: f64, t2: Complex64, grid: usize, iters: usize) -> f64 {
    let err = |a: f64| (s3_coords(u, rho, a, 1.0)[1] - t2).norm();
    let step = TAU / grid as f64;
    let best = (0..grid)
        .map(|k| k as f64 * step)
        .min_by(|a, b| err(*a).total_cmp(&err(*b)))
        .unwrap_or(0.0);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (best - step, best + step);
    for _ in 0..iters {
        let x1 = hi - g * (hi - lo);
        let x2 = lo + g * (hi - lo);
        if err(x1) < err(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    reduce_angle(0.5 * (lo + hi))
}

/// Shortest geodesic length found by shooting from `(1, 0)` to the endpoint.
pub fn shooting_oracle(endpoint: &Endpoint, config: &OracleConfig) -> Result<OracleResult> {
    config.validate()?;
    let (t1, t2) = (endpoint.z1(), endpoint.z2());
    let (nu, nr) = (config.grid_u, config.grid_rho);
    let du = 2.0 / nu as f64;
    let drho = config.rho_max / nr as f64;
    let us: Vec<f64> = (0..nu).map(|i| -1.0 + du * (i as f64 + 0.5)).collect();
    let rhos: Vec<f64> = (0..nr).map(|j| drho * (j as f64 + 0.5)).collect();
    let grid: Vec<f64> = us
        .iter()
        .flat_map(|&u| rhos.iter().map(move |&r| z1_error(u, r, t1)))
        .collect();
    let at = |i: usize, j: usize| grid[i * nr + j];
    // |dz1/du| <= rho + 1 and |dz1/drho| <= 2 bound the error inside a cell
    let coarse = 2.0 * ((config.rho_max + 1.0) * du + 2.0 * drho) + 1e-3;

    let mut best: Option<OracleResult> = None;
    let mut accepted = 0;
    for i in 0..nu {
        for j in 0..nr {
            let e = at(i, j);
            if e > coarse {
                continue;
            }
            let is_min = (i.saturating_sub(1)..=(i + 1).min(nu - 1))
                .all(|a| (j.saturating_sub(1)..=(j + 1).min(nr - 1)).all(|b| at(a, b) >= e));
            if !is_min {
                continue;
            }
            let (u, rho) = refine_u_rho(us[i], rhos[j], du, drho, t1, config.refine_iters);
            let alpha = fit_alpha(u, rho, t2, config.grid_alpha, config.refine_iters);
            let [w1, w2] = s3_coords(u, rho, alpha, 1.0);
            let residual = ((w1 - t1).norm_sqr() + (w2 - t2).norm_sqr()).sqrt();
            if !(residual < config.accept_residual) {
                continue;
            }
            accepted += 1;
            let length = rho * (1.0 - u * u).sqrt();
            if best.is_none_or(|b| length < b.length) {
                best = Some(OracleResult {
                    length,
                    u,
                    rho,
                    alpha,
                    residual,
                    accepted: 0,
                });
            }
        }
    }
    best.map(|b| OracleResult { accepted, ..b }).ok_or(Error::OracleNoCandidate)
}
