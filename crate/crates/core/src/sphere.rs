//! Points of S^{2n-1} in complex coordinates, the Hopf vertical field, and
//! the SU(2) action on S^3.
//!
//! Inner products follow the Hermitian convention `<x, y> = sum x_k conj(y_k)`.
//! The real Riemannian metric is `Re <x, y>`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on the norm of inputs accepted (and renormalized) by constructors.
pub const NORM_TOL: f64 = 1e-9;

/// Tangency tolerance for [`decompose`].
pub const TANGENT_TOL: f64 = 1e-9;

/// Coordinates below this modulus are treated as zero when choosing a phase.
pub const PHASE_EPS: f64 = 1e-12;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Hermitian inner product `sum x_k conj(y_k)`.
pub fn hermitian(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a * b.conj()).sum()
}

/// Euclidean norm of a complex vector viewed in R^{2n}.
pub fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// A unit vector of C^n, i.e. a point of S^{2n-1}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    coords: Vec<Complex64>,
}

impl SpherePoint {
    /// Builds a point, renormalizing inputs whose norm is within 1e-9 of one.
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: coords.len(),
            });
        }
        let n = norm(&coords);
        if !n.is_finite() || (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm: n });
        }
        let coords = coords.into_iter().map(|c| c / n).collect();
        Ok(Self { coords })
    }

    /// Point of S^3.
    pub fn s3(z1: Complex64, z2: Complex64) -> Result<Self> {
        Self::new(vec![z1, z2])
    }

    /// The base point `(1, 0, ..., 0)` of S^{2n-1}.
    pub fn base(n: usize) -> Self {
        assert!(n >= 2, "S^(2n-1) needs n >= 2");
        let mut coords = vec![Complex64::new(0.0, 0.0); n];
        coords[0] = Complex64::new(1.0, 0.0);
        Self { coords }
    }

    /// Uses already-normalized coordinates as-is.
    pub(crate) fn from_unit(coords: Vec<Complex64>) -> Self {
        debug_assert!((norm(&coords) - 1.0).abs() < 1e-8);
        Self { coords }
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    /// Complex dimension `n` of the ambient C^n.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Multiplies every coordinate by `e^{i theta}` (motion along the fiber).
    pub fn rotate_phase(&self, theta: f64) -> Self {
        let w = Complex64::from_polar(1.0, theta);
        Self {
            coords: self.coords.iter().map(|c| c * w).collect(),
        }
    }

    /// Complex 2-norm distance to another point of the same dimension.
    pub fn distance_to(&self, other: &SpherePoint) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// A real tangent vector at a sphere point, with its Hopf decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector {
    base: SpherePoint,
    components: Vec<Complex64>,
    vertical: f64,
    horizontal: Vec<Complex64>,
}

impl TangentVector {
    pub fn base(&self) -> &SpherePoint {
        &self.base
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    /// Signed vertical scalar `Re <v, V(z)>`.
    pub fn vertical(&self) -> f64 {
        self.vertical
    }

    /// Horizontal part `v - vertical * V(z)`.
    pub fn horizontal(&self) -> &[Complex64] {
        &self.horizontal
    }

    /// Real norm of the full vector.
    pub fn norm(&self) -> f64 {
        norm(&self.components)
    }

    /// Rebuilds the vector from its horizontal and vertical parts.
    pub fn recombine(&self) -> Vec<Complex64> {
        let v = vertical_field(&self.base);
        self.horizontal
            .iter()
            .zip(v.components())
            .map(|(h, vz)| h + vz * self.vertical)
            .collect()
    }
}

/// Outward unit normal `N(z) = z`.
pub fn normal_field(z: &SpherePoint) -> Vec<Complex64> {
    z.coords.clone()
}

/// Vertical unit field `V(z) = i z`, tangent to the Hopf fiber.
pub fn vertical_field(z: &SpherePoint) -> TangentVector {
    let components: Vec<Complex64> = z.coords.iter().map(|c| I * c).collect();
    TangentVector {
        base: z.clone(),
        horizontal: vec![Complex64::new(0.0, 0.0); components.len()],
        components,
        vertical: 1.0,
    }
}

/// Splits a tangent vector into its horizontal part and signed vertical scalar.
pub fn decompose(z: &SpherePoint, v: &[Complex64]) -> Result<TangentVector> {
    if v.len() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            got: v.len(),
        });
    }
    let ip = hermitian(v, &z.coords);
    if ip.re.abs() > TANGENT_TOL {
        return Err(Error::NotTangent {
            violation: ip.re.abs(),
        });
    }
    // Re <v, i z> = Im <v, z>
    let vertical = ip.im;
    let horizontal = v
        .iter()
        .zip(&z.coords)
        .map(|(vk, zk)| vk - I * zk * vertical)
        .collect();
    Ok(TangentVector {
        base: z.clone(),
        components: v.to_vec(),
        vertical,
        horizontal,
    })
}

/// Canonical representative of the Hopf fiber through a point, plus Bloch
/// coordinates when `n = 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    pub representative: Vec<Complex64>,
    pub bloch: Option<[f64; 3]>,
}

/// Projects a sphere point to CP^{n-1}.
///
/// The representative has its first non-negligible coordinate real and
/// positive.
pub fn hopf_project(z: &SpherePoint) -> ProjectivePoint {
    let k = z
        .coords
        .iter()
        .position(|c| c.norm() > PHASE_EPS)
        .expect("a unit vector has a non-negligible coordinate");
    let phase = Complex64::from_polar(1.0, -z.coords[k].arg());
    let representative = z.coords.iter().map(|c| c * phase).collect();
    let bloch = (z.dim() == 2).then(|| {
        let (z1, z2) = (z.coords[0], z.coords[1]);
        let w = z1 * z2.conj();
        [2.0 * w.re, 2.0 * w.im, z1.norm_sqr() - z2.norm_sqr()]
    });
    ProjectivePoint {
        representative,
        bloch,
    }
}

/// Fiber phase reduced to `[0, 2pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct FiberPhase(f64);

impl FiberPhase {
    pub fn new(omega: f64) -> Self {
        let mut w = omega.rem_euclid(TAU);
        if w >= TAU {
            w = 0.0;
        }
        Self(w)
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Element of SU(2) given by its first column `(phi1, phi2)`.
///
/// It acts on C^2 through the matrix `[[phi1, -conj(phi2)], [phi2, conj(phi1)]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Su2Element {
    phi1: Complex64,
    phi2: Complex64,
}

impl Su2Element {
    pub fn new(phi1: Complex64, phi2: Complex64) -> Result<Self> {
        let n = (phi1.norm_sqr() + phi2.norm_sqr()).sqrt();
        if !n.is_finite() || (n - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm: n });
        }
        Ok(Self {
            phi1: phi1 / n,
            phi2: phi2 / n,
        })
    }

    pub fn identity() -> Self {
        Self {
            phi1: Complex64::new(1.0, 0.0),
            phi2: Complex64::new(0.0, 0.0),
        }
    }

    pub fn phi1(&self) -> Complex64 {
        self.phi1
    }

    pub fn phi2(&self) -> Complex64 {
        self.phi2
    }

    /// Applies the matrix to an arbitrary complex 2-vector.
    pub fn apply(&self, w: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.phi1 * w[0] - self.phi2.conj() * w[1],
            self.phi2 * w[0] + self.phi1.conj() * w[1],
        ]
    }

    /// Group product `self * other`.
    pub fn compose(&self, other: &Su2Element) -> Su2Element {
        let [phi1, phi2] = self.apply([other.phi1, other.phi2]);
        Su2Element { phi1, phi2 }
    }

    pub fn inverse(&self) -> Su2Element {
        Su2Element {
            phi1: self.phi1.conj(),
            phi2: -self.phi2,
        }
    }
}

/// Acts on a point of S^3.
pub fn su2_act(phi: &Su2Element, z: &SpherePoint) -> Result<SpherePoint> {
    if z.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: z.dim(),
        });
    }
    let w = phi.apply([z.coords[0], z.coords[1]]);
    Ok(SpherePoint::from_unit(w.to_vec()))
}
