//! The scalar functions behind the S^3 branch equations.
//!
//! On the horizontal sphere (`z1` real) the endpoint equations collapse to
//! `Phi(rho) = z1` with `u(rho)^2 = (z1^2 - cos^2 rho) / sin^2 rho`, and the
//! poles of `Phi` sit where `Psi(rho) = rho |u(rho)|` crosses `pi/2 + pi m`.
//!
//! Off the special loci, `cot rho = +-sqrt(|z1|^2 - u^2) / |z2|` and the
//! phase of `z1` gives one equation in `u` built from `B`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Inverse cotangent with values in `(0, pi)`.
pub fn arccot(x: f64) -> f64 {
    1.0f64.atan2(x)
}

fn horizontal_u(rho: f64, z1: f64, function: &'static str) -> Result<f64> {
    let (s, c) = rho.sin_cos();
    let num = z1 * z1 - c * c;
    if !(num >= 0.0) || s == 0.0 || !rho.is_finite() {
        return Err(Error::DomainError {
            function,
            argument: rho,
        });
    }
    Ok(num.sqrt() / s.abs())
}

/// `|u|` as a function of `rho` on the horizontal sphere.
pub fn horizontal_u_abs(rho: f64, z1: f64) -> Result<f64> {
    horizontal_u(rho, z1, "u")
}

/// `Phi(rho) = cos rho / cos(rho sqrt(z1^2 - cos^2 rho) / |sin rho|)`.
pub fn phi_function(rho: f64, z1: f64) -> Result<f64> {
    let u = horizontal_u(rho, z1, "phi")?;
    Ok(rho.cos() / (rho * u).cos())
}

/// `Psi(rho) = rho sqrt(z1^2 - cos^2 rho) / |sin rho|`.
pub fn psi_function(rho: f64, z1: f64) -> Result<f64> {
    Ok(rho * horizontal_u(rho, z1, "psi")?)
}

/// The interval `D_n = (arccos|z1| + pi n, pi (n + 1) - arccos|z1|)` where
/// `Phi` and `Psi` are defined.
pub fn horizontal_interval(n: u32, z1: f64) -> (f64, f64) {
    let a = z1.abs().acos();
    let n = n as f64;
    (a + std::f64::consts::PI * n, std::f64::consts::PI * (n + 1.0) - a)
}

/// `arccot(sqrt(|z1|^2 - u^2) / |z2|)`, the base value of `rho` on the
/// `(+,+)` branch, in `(0, pi/2]`.
pub fn rho_base(u: f64, z1_abs: f64, z2_abs: f64) -> Result<f64> {
    let c = b_domain(u, z1_abs, z2_abs, "rho_base")?;
    Ok(z2_abs.atan2(c))
}

fn b_domain(u: f64, z1_abs: f64, z2_abs: f64, function: &'static str) -> Result<f64> {
    let d = z1_abs * z1_abs - u * u;
    if !(d >= -1e-15) || !(z2_abs > 0.0) {
        return Err(Error::DomainError {
            function,
            argument: u,
        });
    }
    Ok(d.max(0.0).sqrt())
}

/// `B(u) = arccot(sqrt(|z1|^2 - u^2) / (u |z2|)) - u arccot(sqrt(|z1|^2 - u^2) / |z2|)`.
///
/// The first term is taken as the argument of `sqrt(|z1|^2 - u^2) + i u |z2|`,
/// which makes `B` odd and continuous through `B(0) = 0`. `|B| <= pi/2`.
pub fn b_function(u: f64, z1_abs: f64, z2_abs: f64) -> Result<f64> {
    let c = b_domain(u, z1_abs, z2_abs, "b")?;
    Ok(b_from_parts(u, c, z2_abs))
}

/// `B` from `u` and the precomputed root `c = sqrt(|z1|^2 - u^2)`.
pub(crate) fn b_from_parts(u: f64, c: f64, z2_abs: f64) -> f64 {
    (u * z2_abs).atan2(c) - u * z2_abs.atan2(c)
}

/// `B(|z1|) = (pi/2)(1 - |z1|)`: the largest value `B` reaches.
pub fn b_plateau(z1_abs: f64) -> f64 {
    FRAC_PI_2 * (1.0 - z1_abs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn arccot_branch() {
        assert_abs_diff_eq!(arccot(0.0), FRAC_PI_2);
        assert_abs_diff_eq!(arccot(1.0), PI / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(arccot(-1.0), 3.0 * PI / 4.0, epsilon = 1e-15);
        assert!(arccot(1e300) > 0.0);
    }

    #[test]
    fn phi_vanishes_mid_interval() {
        for n in 1..6 {
            let rho = FRAC_PI_2 + PI * n as f64;
            assert!(phi_function(rho, 0.7).unwrap().abs() < 1e-14);
        }
    }

    #[test]
    fn phi_slope_at_its_zeros() {
        // Oracle: central differences. The slope is (-1)^(n+1) / cos(z1 (pi/2 + pi n)).
        let z1: f64 = 0.7;
        let h = 1e-6;
        for n in 1..6 {
            let rho = FRAC_PI_2 + PI * n as f64;
            let fd = (phi_function(rho + h, z1).unwrap() - phi_function(rho - h, z1).unwrap()) / (2.0 * h);
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let closed = sign / (z1 * rho).cos();
            assert_abs_diff_eq!(fd, closed, epsilon = 1e-7 * closed.abs().max(1.0));
            assert!(fd.abs() > 0.0 && fd.is_finite());
        }
    }

    #[test]
    fn psi_vanishes_at_interval_ends() {
        for n in 1..5 {
            let (lo, hi) = horizontal_interval(n, 0.7);
            let e = 1e-12;
            assert!(psi_function(lo + e, 0.7).unwrap() < 1e-4);
            assert!(psi_function(hi - e, 0.7).unwrap() < 1e-4);
            assert!(psi_function(0.5 * (lo + hi), 0.7).unwrap() > 0.0);
        }
    }

    #[test]
    fn phi_domain_errors() {
        assert!(matches!(phi_function(0.1, 0.7), Err(Error::DomainError { .. })));
        assert!(matches!(psi_function(PI, 0.7), Err(Error::DomainError { .. })));
    }

    #[test]
    fn b_is_odd_and_bounded() {
        let (a, b) = (0.7, 0.51f64.sqrt());
        for k in 0..=1000 {
            let u = -a + 2.0 * a * k as f64 / 1000.0;
            let u = u.clamp(-a, a);
            let v = b_function(u, a, b).unwrap();
            assert!(v.abs() <= FRAC_PI_2);
            assert_abs_diff_eq!(v, -b_function(-u, a, b).unwrap(), epsilon = 1e-15);
        }
        assert_eq!(b_function(0.0, a, b).unwrap(), 0.0);
    }

    #[test]
    fn b_plateau_values() {
        for &a in &[0.3f64, 0.7, 0.9] {
            let b = (1.0 - a * a).sqrt();
            assert_abs_diff_eq!(b_function(a, a, b).unwrap(), b_plateau(a), epsilon = 1e-12);
            assert_abs_diff_eq!(b_function(-a, a, b).unwrap(), -b_plateau(a), epsilon = 1e-12);
        }
        assert!(b_function(0.8, 0.7, 0.5).is_err());
    }

    #[test]
    fn rho_base_range() {
        let (a, b) = (0.6, 0.8);
        assert_abs_diff_eq!(rho_base(a, a, b).unwrap(), FRAC_PI_2);
        let r0 = rho_base(0.0, a, b).unwrap();
        assert_abs_diff_eq!(r0, arccot(a / b), epsilon = 1e-15);
        assert!(r0 > 0.0 && r0 < FRAC_PI_2);
    }
}
