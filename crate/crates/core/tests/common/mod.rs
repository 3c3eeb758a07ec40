#![allow(dead_code)]

use std::f64::consts::TAU;

use hopf_sr::bvp::Endpoint;
use hopf_sr::{SpherePoint, Su2Element};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point of S^3: `|z1|^2` is uniform on `[0, 1]` and both phases are uniform.
pub fn random_s3<R: Rng>(rng: &mut R) -> (Complex64, Complex64) {
    let t: f64 = rng.gen();
    let z1 = Complex64::from_polar(t.sqrt(), rng.gen_range(0.0..TAU));
    let z2 = Complex64::from_polar((1.0 - t).sqrt(), rng.gen_range(0.0..TAU));
    (z1, z2)
}

pub fn random_endpoint<R: Rng>(rng: &mut R) -> Endpoint {
    let (z1, z2) = random_s3(rng);
    Endpoint::new(z1, z2).unwrap()
}

fn gaussian_pair<R: Rng>(rng: &mut R) -> Complex64 {
    // Box-Muller
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    Complex64::from_polar((-2.0 * u1.ln()).sqrt(), TAU * u2)
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> SpherePoint {
    let v: Vec<Complex64> = (0..n).map(|_| gaussian_pair(rng)).collect();
    let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    SpherePoint::new(v.into_iter().map(|c| c / norm).collect()).unwrap()
}

/// Random real tangent vector at `a`, scaled to norm `scale`.
pub fn random_tangent<R: Rng>(rng: &mut R, a: &SpherePoint, scale: f64) -> Vec<Complex64> {
    let z = a.coords();
    let mut v: Vec<Complex64> = (0..z.len()).map(|_| gaussian_pair(rng)).collect();
    let normal: f64 = v.iter().zip(z).map(|(x, y)| (x * y.conj()).re).sum();
    for (x, y) in v.iter_mut().zip(z) {
        *x -= y * normal;
    }
    let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|c| c * (scale / norm)).collect()
}

pub fn random_su2<R: Rng>(rng: &mut R) -> Su2Element {
    let p = random_point(rng, 2);
    Su2Element::new(p.coords()[0], p.coords()[1]).unwrap()
}

pub fn apply(phi: &Su2Element, p: &SpherePoint) -> SpherePoint {
    let [w1, w2] = phi.apply([p.coords()[0], p.coords()[1]]);
    SpherePoint::new(vec![w1, w2]).unwrap()
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Smallest distance between two angles.
pub fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}
