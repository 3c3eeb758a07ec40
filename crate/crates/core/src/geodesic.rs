//! Closed-form normal geodesics.
//!
//! A geodesic from `a` with initial velocity `v` is the great circle through
//! `a` in direction `v`, multiplied by the compensating fiber phase
//! `e^{-i s vf}` where `vf = Re <v, V(a)>`.
//!
//! On S^3 the curves from `(1, 0)` are written with `(u, rho, alpha)`:
//!
//! ```text
//! z1(s) = e^{-i u rho s} (cos(rho s) + i u sin(rho s))
//! z2(s) = r e^{-i (u rho s + alpha)} sin(rho s),     r = sqrt(1 - u^2)
//! ```
//!
//! for `s` in `[0, 1]`. Their sub-Riemannian length is `r * rho`.

use std::f64::consts::TAU;
use std::io::{self, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format;
use crate::sphere::{decompose, hermitian, SpherePoint, TangentVector};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Horizontality verdict threshold on `|<gamma', gamma>|`.
pub const HORIZONTAL_TOL: f64 = 1e-9;

/// Geodesic of S^{2n-1} given by its start point and initial velocity.
#[derive(Debug, Clone)]
pub struct GeneralGeodesic {
    velocity: TangentVector,
    speed: f64,
}

impl GeneralGeodesic {
    pub fn new(a: SpherePoint, v: Vec<Complex64>) -> Result<Self> {
        let velocity = decompose(&a, &v)?;
        let speed = velocity.norm();
        if !(speed > 0.0) || !speed.is_finite() {
            return Err(Error::InvalidParams(format!(
                "initial speed must be positive, got {speed}"
            )));
        }
        Ok(Self { velocity, speed })
    }

    /// Arc-length parametrized geodesic from `a` with unit horizontal
    /// velocity `vh` and signed vertical speed `vf`.
    pub fn arc_length(a: SpherePoint, vh: &[Complex64], vf: f64) -> Result<Self> {
        let h = decompose(&a, vh)?;
        let nh = crate::sphere::norm(h.horizontal());
        if h.vertical().abs() > 1e-9 || (nh - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParams(
                "horizontal direction must be a unit horizontal vector".into(),
            ));
        }
        let v = h
            .horizontal()
            .iter()
            .zip(a.coords())
            .map(|(x, ak)| x / nh + I * ak * vf)
            .collect();
        Self::new(a, v)
    }

    pub fn start(&self) -> &SpherePoint {
        self.velocity.base()
    }

    pub fn velocity(&self) -> &TangentVector {
        &self.velocity
    }

    /// Real norm of the initial velocity.
    pub fn speed(&self) -> f64 {
        self.speed
    }

    /// Signed vertical component of the initial velocity.
    pub fn vertical_speed(&self) -> f64 {
        self.velocity.vertical()
    }

    /// Speed measured in the sub-Riemannian metric, `|v_H|`.
    pub fn horizontal_speed(&self) -> f64 {
        crate::sphere::norm(self.velocity.horizontal())
    }

    fn great_circle(&self, s: f64) -> Vec<Complex64> {
        let (sn, cs) = (self.speed * s).sin_cos();
        self.start()
            .coords()
            .iter()
            .zip(self.velocity.components())
            .map(|(a, v)| a * cs + v * (sn / self.speed))
            .collect()
    }

    /// Riemannian great circle through the same initial data.
    pub fn riemannian_point(&self, s: f64) -> SpherePoint {
        SpherePoint::from_unit(self.great_circle(s))
    }
}

/// Evaluates the sub-Riemannian geodesic at time `s`.
pub fn eval_general(g: &GeneralGeodesic, s: f64) -> SpherePoint {
    let phase = Complex64::from_polar(1.0, -s * g.vertical_speed());
    SpherePoint::from_unit(g.great_circle(s).into_iter().map(|c| c * phase).collect())
}

/// Analytic velocity of [`eval_general`].
pub fn velocity_general(g: &GeneralGeodesic, s: f64) -> Vec<Complex64> {
    let vf = g.vertical_speed();
    let phase = Complex64::from_polar(1.0, -s * vf);
    let (sn, cs) = (g.speed * s).sin_cos();
    g.start()
        .coords()
        .iter()
        .zip(g.velocity.components())
        .map(|(a, v)| {
            let circle = a * cs + v * (sn / g.speed);
            let d_circle = -a * (g.speed * sn) + v * cs;
            (d_circle - I * vf * circle) * phase
        })
        .collect()
}

/// The `(u, rho, alpha)` parametrization of S^3 geodesics from `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct S3GeodesicParams {
    u: f64,
    rho: f64,
    alpha: f64,
}

impl S3GeodesicParams {
    /// Requires `|u| < 1` and `rho > 0`; `alpha` is reduced to `[0, 2pi)`.
    pub fn new(u: f64, rho: f64, alpha: f64) -> Result<Self> {
        if !(u.abs() < 1.0) {
            return Err(Error::InvalidParams(format!("|u| must be < 1, got {u}")));
        }
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::InvalidParams(format!("rho must be > 0, got {rho}")));
        }
        if !alpha.is_finite() {
            return Err(Error::InvalidParams("alpha must be finite".into()));
        }
        Ok(Self {
            u,
            rho,
            alpha: reduce_angle(alpha),
        })
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `sqrt(1 - u^2)`.
    pub fn r(&self) -> f64 {
        (1.0 - self.u * self.u).sqrt()
    }

    /// The same curve as a [`GeneralGeodesic`] with `v = (i u rho, r rho e^{-i alpha})`.
    pub fn to_general(&self) -> GeneralGeodesic {
        let v = vec![
            Complex64::new(0.0, self.u * self.rho),
            Complex64::from_polar(self.r() * self.rho, -self.alpha),
        ];
        GeneralGeodesic::new(SpherePoint::base(2), v).expect("velocity is tangent at the base point")
    }
}

/// Reduces an angle to `[0, 2pi)`.
pub fn reduce_angle(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y >= TAU {
        0.0
    } else {
        y
    }
}

pub(crate) fn s3_coords(u: f64, rho: f64, alpha: f64, s: f64) -> [Complex64; 2] {
    let r = (1.0 - u * u).sqrt();
    let (sn, cs) = (rho * s).sin_cos();
    let z1 = Complex64::from_polar(1.0, -u * rho * s) * Complex64::new(cs, u * sn);
    let z2 = Complex64::from_polar(r * sn, -(u * rho * s + alpha));
    [z1, z2]
}

/// Point of the S^3 geodesic at `s`.
pub fn eval_s3(params: &S3GeodesicParams, s: f64) -> SpherePoint {
    SpherePoint::from_unit(s3_coords(params.u, params.rho, params.alpha, s).to_vec())
}

/// Analytic derivative of [`eval_s3`] with respect to `s`.
pub fn velocity_s3(params: &S3GeodesicParams, s: f64) -> [Complex64; 2] {
    let S3GeodesicParams { u, rho, alpha } = *params;
    let r = params.r();
    let (sn, cs) = (rho * s).sin_cos();
    let e1 = Complex64::from_polar(1.0, -u * rho * s);
    let e2 = Complex64::from_polar(1.0, -(u * rho * s + alpha));
    let z1 = e1 * Complex64::new(cs, u * sn);
    let z2 = e2 * (r * sn);
    let dz1 = -I * (u * rho) * z1 + e1 * Complex64::new(-rho * sn, u * rho * cs);
    let dz2 = -I * (u * rho) * z2 + e2 * (r * rho * cs);
    [dz1, dz2]
}

/// Sub-Riemannian length `rho * sqrt(1 - u^2)` over `s` in `[0, 1]`.
pub fn arc_length(params: &S3GeodesicParams) -> f64 {
    params.rho * params.r()
}

/// Worst horizontality violation found on a sampled curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HorizontalityReport {
    pub max_violation: f64,
    pub worst_s: f64,
    pub pass: bool,
}

/// Samples `sampler` at `grid` uniform points of `[s0, s1]` and measures
/// `max |<gamma'(s), gamma(s)>|`.
///
/// The sampler returns `(point, velocity)` at a given time.
pub fn check_horizontal<F>(sampler: F, s0: f64, s1: f64, grid: usize) -> HorizontalityReport
where
    F: Fn(f64) -> (Vec<Complex64>, Vec<Complex64>),
{
    let grid = grid.max(2);
    let mut report = HorizontalityReport {
        max_violation: 0.0,
        worst_s: s0,
        pass: true,
    };
    for k in 0..grid {
        let s = s0 + (s1 - s0) * k as f64 / (grid - 1) as f64;
        let (z, dz) = sampler(s);
        let viol = hermitian(&dz, &z).norm();
        if !(viol <= report.max_violation) {
            report.max_violation = viol;
            report.worst_s = s;
        }
    }
    report.pass = report.max_violation < HORIZONTAL_TOL;
    report
}

/// One sampled point of an S^3 curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub s: f64,
    pub re_z1: f64,
    pub im_z1: f64,
    pub re_z2: f64,
    pub im_z2: f64,
}

/// Samples the geodesic at `samples` uniform points of `[0, 1]`.
pub fn sample_s3(params: &S3GeodesicParams, samples: usize) -> Vec<CurveSample> {
    let n = samples.max(2);
    (0..n)
        .map(|k| {
            let s = if k == n - 1 { 1.0 } else { k as f64 / (n - 1) as f64 };
            let [z1, z2] = s3_coords(params.u, params.rho, params.alpha, s);
            CurveSample {
                s,
                re_z1: z1.re,
                im_z1: z1.im,
                re_z2: z2.re,
                im_z2: z2.im,
            }
        })
        .collect()
}

pub const CURVE_CSV_HEADER: &str = "s,re_z1,im_z1,re_z2,im_z2";

/// Writes samples as CSV with a header row.
pub fn write_curve_csv<W: Write>(samples: &[CurveSample], mut out: W) -> io::Result<()> {
    writeln!(out, "{CURVE_CSV_HEADER}")?;
    for p in samples {
        out.write_all(format::csv_row(&[p.s, p.re_z1, p.im_z1, p.re_z2, p.im_z2]).as_bytes())?;
    }
    Ok(())
}
