use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sphere::SpherePoint;

/// Default tolerance of the endpoint case dispatch.
pub const DEFAULT_CASE_EPS: f64 = 1e-10;

/// Which solver an endpoint belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndpointCase {
    /// `z2 = 0`: on the fiber through `(1, 0)`.
    Fiber,
    /// `(-1, 0)`.
    Antipodal,
    /// `Im z1 = 0`, `z2 != 0`.
    HorizontalSphere,
    General,
}

impl std::fmt::Display for EndpointCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            EndpointCase::Fiber => "fiber",
            EndpointCase::Antipodal => "antipodal",
            EndpointCase::HorizontalSphere => "horizontal_sphere",
            EndpointCase::General => "general",
        };
        f.write_str(name)
    }
}

/// Target point of the S^3 boundary value problem from `(1, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Endpoint {
    z1: Complex64,
    z2: Complex64,
    case: EndpointCase,
    case_eps: f64,
}

impl Endpoint {
    pub fn new(z1: Complex64, z2: Complex64) -> Result<Self> {
        Self::with_case_eps(z1, z2, DEFAULT_CASE_EPS)
    }

    pub fn with_case_eps(z1: Complex64, z2: Complex64, case_eps: f64) -> Result<Self> {
        let p = SpherePoint::s3(z1, z2)?;
        Ok(Self::from_unit(p.coords()[0], p.coords()[1], case_eps))
    }

    pub fn from_point(p: &SpherePoint) -> Result<Self> {
        Self::new(p.coords()[0], *p.coords().get(1).unwrap_or(&Complex64::new(0.0, 0.0)))
    }

    pub(crate) fn from_unit(z1: Complex64, z2: Complex64, case_eps: f64) -> Self {
        let case = if (z1 + 1.0).norm() < case_eps {
            EndpointCase::Antipodal
        } else if z2.norm() < case_eps {
            EndpointCase::Fiber
        } else if z1.im.abs() < case_eps {
            EndpointCase::HorizontalSphere
        } else {
            EndpointCase::General
        };
        Self {
            z1,
            z2,
            case,
            case_eps,
        }
    }

    pub fn z1(&self) -> Complex64 {
        self.z1
    }

    pub fn z2(&self) -> Complex64 {
        self.z2
    }

    pub fn case(&self) -> EndpointCase {
        self.case
    }

    pub fn case_eps(&self) -> f64 {
        self.case_eps
    }

    pub fn abs1(&self) -> f64 {
        self.z1.norm()
    }

    pub fn abs2(&self) -> f64 {
        self.z2.norm()
    }

    /// `arg z1` in `[-pi, pi)`.
    pub fn theta1(&self) -> f64 {
        half_open_arg(self.z1)
    }

    /// `arg z2` in `[-pi, pi)`.
    pub fn theta2(&self) -> f64 {
        half_open_arg(self.z2)
    }

    pub fn to_point(&self) -> SpherePoint {
        SpherePoint::from_unit(vec![self.z1, self.z2])
    }
}

fn half_open_arg(z: Complex64) -> f64 {
    let a = z.arg();
    if a >= PI {
        -PI
    } else {
        a
    }
}
