use std::f64::consts::PI;

use num_complex::Complex64;

use super::{dedup_sort, verified, BranchSolution, Endpoint, Family, SolverConfig, DEFAULT_CASE_EPS};

/// Geodesics from `(1, 0)` to `(-1, 0)` with `rho = pi m`, `m <= 2 q_max + 1`.
///
/// Even `m`: `u = (2p + 1)/m`, `-m/2 <= p <= m/2 - 1`.
/// Odd `m`: `u = 2p/m`, `|p| <= (m - 1)/2`.
/// `alpha` is free; each family is reported once with `alpha = 0`.
pub fn solve_antipodal(config: &SolverConfig) -> Vec<BranchSolution> {
    let endpoint = Endpoint::from_unit(Complex64::new(-1.0, 0.0), Complex64::new(0.0, 0.0), DEFAULT_CASE_EPS);
    let m_max = 2 * config.q_max as i64 + 1;
    let mut out = Vec::new();
    for m in 1..=m_max {
        let mf = m as f64;
        let (lo, hi) = if m % 2 == 0 { (-m / 2, m / 2 - 1) } else { (-(m - 1) / 2, (m - 1) / 2) };
        for p in lo..=hi {
            let u = if m % 2 == 0 { (2 * p + 1) as f64 / mf } else { (2 * p) as f64 / mf };
            if let Some(mut s) = verified(&endpoint, u, PI * mf, 0.0, p, Family::Circle) {
                s.q = (m / 2) as u32;
                out.push(s);
            }
        }
    }
    dedup_sort(out)
}
