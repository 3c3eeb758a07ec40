//! Endpoints off the special loci.
//!
//! With `c = sqrt(|z1|^2 - u^2)`, `A(u) = arccot(c / |z2|)` in `(0, pi/2]` and
//! `B(u) = arg(c + i u |z2|) - u A(u)`, the four sign systems
//! `(sgn cos rho, sgn sin rho)` reduce to one equation each:
//!
//! | system | rho            | phase of z1                    |
//! |--------|----------------|--------------------------------|
//! | (+,+)  | A + 2pi q      | B - 2pi q u                    |
//! | (-,-)  | A + pi(2q+1)   | pi + B - pi(2q+1) u            |
//! | (-,+)  | -A + pi(2q+1)  | pi - B - pi(2q+1) u            |
//! | (+,-)  | -A + 2pi(q+1)  | -B - 2pi(q+1) u                |
//!
//! and the phase must equal `theta1 - 2 pi p`. Each is scanned over
//! `u = |z1| sin t`, `t` in `[-pi/2, pi/2]`, which keeps `c = |z1| cos t`
//! smooth up to the ends of the `u` range.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::functions::b_from_parts;
use super::roots::bracket_roots;
use super::{alpha_from_z2, dedup_sort, verified, BranchSolution, Endpoint, EndpointCase, Family, SolverConfig};
use crate::error::{Error, Result};

#[derive(Clone, Copy)]
struct System {
    /// 0 or 1: multiple of pi added to the phase.
    s0: f64,
    /// Sign in front of `A` and `B`.
    s1: f64,
}

const SYSTEMS: [System; 4] = [
    System { s0: 0.0, s1: 1.0 },
    System { s0: 1.0, s1: 1.0 },
    System { s0: 1.0, s1: -1.0 },
    System { s0: 0.0, s1: -1.0 },
];

impl System {
    fn offset(self, q: u32) -> f64 {
        let q = q as f64;
        match (self.s0 == 0.0, self.s1 > 0.0) {
            (true, true) => TAU * q,
            (true, false) => TAU * (q + 1.0),
            (false, _) => PI * (2.0 * q + 1.0),
        }
    }
}

/// Grid of `(u, B)` shared by all systems and all `q`.
struct Scan<'a> {
    endpoint: &'a Endpoint,
    config: &'a SolverConfig,
    a: f64,
    b: f64,
    ts: Vec<f64>,
    us: Vec<f64>,
    bs: Vec<f64>,
}

impl<'a> Scan<'a> {
    fn new(endpoint: &'a Endpoint, config: &'a SolverConfig) -> Self {
        let (a, b) = (endpoint.abs1(), endpoint.abs2());
        let n = config.scan_points;
        let ts: Vec<f64> = (0..=n)
            .map(|k| -FRAC_PI_2 + PI * k as f64 / n as f64)
            .collect();
        let mut us = Vec::with_capacity(ts.len());
        let mut bs = Vec::with_capacity(ts.len());
        for &t in &ts {
            let (u, c) = Self::uc(a, t);
            us.push(u);
            bs.push(b_from_parts(u, c, b));
        }
        Self {
            endpoint,
            config,
            a,
            b,
            ts,
            us,
            bs,
        }
    }

    fn uc(a: f64, t: f64) -> (f64, f64) {
        let (s, c) = t.sin_cos();
        (a * s, (a * c).max(0.0))
    }

    fn phase(&self, sys: System, k: f64, t: f64) -> (f64, f64) {
        let (u, c) = Self::uc(self.a, t);
        let g = sys.s0 * PI + sys.s1 * b_from_parts(u, c, self.b) - u * k;
        (g, sys.s1 * self.b.atan2(c) + k)
    }

    fn solutions_at(&self, q: u32) -> Vec<BranchSolution> {
        let theta1 = self.endpoint.theta1();
        let mut out = Vec::new();
        for sys in SYSTEMS {
            let k = sys.offset(q);
            let g: Vec<f64> = self
                .us
                .iter()
                .zip(&self.bs)
                .map(|(&u, &bv)| sys.s0 * PI + sys.s1 * bv - u * k)
                .collect();
            let gmin = g.iter().copied().fold(f64::INFINITY, f64::min);
            let gmax = g.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            // one extra level each side: a tangent root may peak between samples
            let p_lo = ((theta1 - gmax) / TAU).ceil() as i64 - 1;
            let p_hi = ((theta1 - gmin) / TAU).floor() as i64 + 1;
            for p in p_lo..=p_hi {
                let target = theta1 - TAU * p as f64;
                let h: Vec<f64> = g.iter().map(|&v| v - target).collect();
                let f = |t: f64| self.phase(sys, k, t).0 - target;
                for t in bracket_roots(&f, &self.ts, &h, self.config.root_tol) {
                    let (u, _) = Self::uc(self.a, t);
                    let rho = self.phase(sys, k, t).1;
                    let alpha = alpha_from_z2(u, rho, self.endpoint.z2());
                    if let Some(s) = verified(self.endpoint, u, rho, alpha, p, Family::Isolated) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

/// Verified solutions of all four sign systems at one `q`, unsorted and
/// not deduplicated. Requires `z1 != 0` and `z2 != 0`.
pub fn solutions_at_q(endpoint: &Endpoint, q: u32, config: &SolverConfig) -> Vec<BranchSolution> {
    Scan::new(endpoint, config).solutions_at(q)
}

/// Verified solutions of all four sign systems for `q = 0..=q_max`,
/// deduplicated and sorted by `(length, q, p, u)`.
///
/// Unlike [`solve_general`] this accepts any endpoint with `z1, z2 != 0`,
/// including ones on the horizontal sphere.
pub fn enumerate_branches(endpoint: &Endpoint, q_max: u32, config: &SolverConfig) -> Vec<BranchSolution> {
    if endpoint.abs1() < endpoint.case_eps() {
        return zero_z1_solutions(endpoint, &config.with_q_max(q_max));
    }
    if endpoint.abs2() < endpoint.case_eps() {
        return Vec::new();
    }
    let scan = Scan::new(endpoint, config);
    let all = (0..=q_max).flat_map(|q| scan.solutions_at(q)).collect();
    dedup_sort(all)
}

/// Solves the boundary value problem for a general endpoint.
pub fn solve_general(endpoint: &Endpoint, config: &SolverConfig) -> Result<Vec<BranchSolution>> {
    config.validate()?;
    if endpoint.case() != EndpointCase::General {
        return Err(Error::EndpointOnSpecialLocus {
            case: endpoint.case().to_string(),
        });
    }
    let sols = enumerate_branches(endpoint, config.q_max, config);
    if sols.is_empty() {
        return Err(Error::NoSolutionWithinQmax { q_max: config.q_max });
    }
    Ok(sols)
}

/// Endpoints `(0, z2)`: only `u = 0`, `rho = pi/2 + pi k` reach them,
/// for `k = 0..=2 q_max + 1`.
pub fn zero_z1_solutions(endpoint: &Endpoint, config: &SolverConfig) -> Vec<BranchSolution> {
    let out = (0..=2 * config.q_max as u64 + 1)
        .filter_map(|k| {
            let rho = FRAC_PI_2 + PI * k as f64;
            verified(endpoint, 0.0, rho, alpha_from_z2(0.0, rho, endpoint.z2()), 0, Family::Isolated)
        })
        .collect();
    dedup_sort(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::{eval_s3, S3GeodesicParams};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    fn forward(u: f64, rho: f64, alpha: f64) -> Endpoint {
        let p = eval_s3(&S3GeodesicParams::new(u, rho, alpha).unwrap(), 1.0);
        Endpoint::from_point(&p).unwrap()
    }

    fn recovers(sols: &[BranchSolution], u: f64, rho: f64, alpha: f64, tol: f64) -> bool {
        sols.iter().any(|s| {
            let da = (s.alpha - alpha).rem_euclid(TAU);
            (s.u - u).abs() < tol && (s.rho - rho).abs() < tol && da.min(TAU - da) < tol
        })
    }

    #[test]
    fn round_trip_example() {
        let e = forward(0.3, 2.0, 1.0);
        assert_eq!(e.case(), EndpointCase::General);
        let sols = solve_general(&e, &SolverConfig::default()).unwrap();
        assert!(recovers(&sols, 0.3, 2.0, 1.0, 1e-9));
        assert!(sols.iter().all(|s| s.residual < 1e-9 && s.length > 0.0));
    }

    #[test]
    fn round_trip_each_system() {
        // one generating triple per sign system, at q = 0 and q = 1
        for &(u, rho) in &[(0.2, 1.0), (-0.5, 4.0), (0.6, 2.5), (-0.1, 5.5), (0.4, 7.0), (-0.7, 10.0), (0.3, 9.0), (0.5, 12.0)] {
            let e = forward(u, rho, 2.0);
            let sols = solve_general(&e, &SolverConfig::default()).unwrap();
            assert!(recovers(&sols, u, rho, 2.0, 1e-9), "{u} {rho}");
        }
    }

    #[test]
    fn signs_match_rho() {
        let e = forward(0.3, 2.0, 1.0);
        for s in solve_general(&e, &SolverConfig::default()).unwrap() {
            let (sn, cs) = s.rho.sin_cos();
            assert_eq!(s.sigma1, if cs > 0.0 { 1 } else { -1 });
            assert_eq!(s.sigma2, if sn > 0.0 { 1 } else { -1 });
            assert_eq!(s.q, (s.rho / TAU).floor() as u32);
            assert_abs_diff_eq!(s.length, s.rho * (1.0 - s.u * s.u).sqrt(), epsilon = 1e-15);
        }
    }

    #[test]
    fn special_loci_redirect() {
        let e = Endpoint::new(Complex64::new(0.7, 0.0), Complex64::new(0.51f64.sqrt(), 0.0)).unwrap();
        assert!(matches!(
            solve_general(&e, &SolverConfig::default()),
            Err(Error::EndpointOnSpecialLocus { .. })
        ));
    }

    #[test]
    fn zero_z1_family() {
        let e = Endpoint::new(Complex64::new(0.0, 0.0), Complex64::from_polar(1.0, 0.7)).unwrap();
        let sols = zero_z1_solutions(&e, &SolverConfig::default().with_q_max(1));
        assert_eq!(sols.len(), 4);
        assert_abs_diff_eq!(sols[0].rho, FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn q1_solvable_for_large_z1() {
        // |z1| >= 3/4 and |theta1| above the plateau: some q = 1 system has a root
        let (a, th) = (0.8f64, 2.5f64);
        let b = (1.0 - a * a).sqrt();
        let e = Endpoint::new(Complex64::from_polar(a, th), Complex64::from_polar(b, 0.3)).unwrap();
        assert!(th > crate::bvp::b_plateau(a));
        assert!(!solutions_at_q(&e, 1, &SolverConfig::default()).is_empty());
    }
}
