//! Scan-and-bisect root isolation for scalar functions with poles.

/// Bisects `f` on `[lo, hi]` where `f(lo)` and `f(hi)` differ in sign,
/// until the bracket is shorter than `tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    // 200 halvings exhaust any f64 bracket
    for _ in 0..200 {
        if (hi - lo).abs() <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (flo < 0.0) == (fm < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Indices `i` of a sampled sequence where `values[i]` and `values[i + 1]`
/// bracket a zero. Exact zeros are reported once; NaN samples never bracket.
pub fn sign_changes(values: &[f64]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..values.len().saturating_sub(1) {
        let (a, b) = (values[i], values[i + 1]);
        if a.is_nan() || b.is_nan() {
            continue;
        }
        if a == 0.0 {
            if i == 0 || values[i - 1] != 0.0 {
                out.push(i);
            }
        } else if (b != 0.0 && (a < 0.0) != (b < 0.0)) || (b == 0.0 && i + 2 == values.len()) {
            out.push(i);
        }
    }
    out
}

/// Sub-intervals used when a dip of `|f|` is resampled.
const REFINE_POINTS: usize = 64;
/// Nested resampling levels around a dip.
const REFINE_DEPTH: u32 = 3;

/// A tangent root is reported when `|f|` at the extremum is below this.
const TANGENT_ACCEPT: f64 = 1e-9;
/// Half-step of the central difference used to locate an extremum.
const EXTREMUM_STEP: f64 = 1e-7;

/// Roots of `f` from samples `ys = f(xs)`: every sign change is bisected to
/// `tol`. A local minimum of `|f|` with no sign change next to it may hide a
/// pair of close roots inside one cell, so the two cells around it are
/// resampled finely, up to [`REFINE_DEPTH`] levels. If that still shows no
/// sign change, the extremum of `f` there is located and reported when `f`
/// nearly vanishes on it (a tangent root). Callers are expected to verify.
pub fn bracket_roots<F: Fn(f64) -> f64>(f: &F, xs: &[f64], ys: &[f64], tol: f64) -> Vec<f64> {
    bracket_roots_at(f, xs, ys, tol, REFINE_DEPTH)
}

/// Critical point of `f` in `[lo, hi]`, found by bisecting the sign of a
/// central difference. Assumes a single extremum in the bracket.
fn extremum<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> f64 {
    let slope = |x: f64| f(x + EXTREMUM_STEP) - f(x - EXTREMUM_STEP);
    let (sl, sh) = (slope(lo), slope(hi));
    if !((sl < 0.0) != (sh < 0.0)) {
        return if f(lo).abs() < f(hi).abs() { lo } else { hi };
    }
    bisect(slope, lo, hi, tol)
}

fn bracket_roots_at<F: Fn(f64) -> f64>(f: &F, xs: &[f64], ys: &[f64], tol: f64, depth: u32) -> Vec<f64> {
    let changes = sign_changes(ys);
    let mut roots: Vec<f64> = changes
        .iter()
        .map(|&i| {
            if ys[i] == 0.0 {
                xs[i]
            } else if ys[i + 1] == 0.0 {
                xs[i + 1]
            } else {
                bisect(f, xs[i], xs[i + 1], tol)
            }
        })
        .collect();
    if depth == 0 {
        return roots;
    }
    for i in 1..ys.len().saturating_sub(1) {
        let (l, m, r) = (ys[i - 1].abs(), ys[i].abs(), ys[i + 1].abs());
        let dip = m < l && m <= r && m > 0.0 && l.is_finite() && r.is_finite();
        let near_change = changes.iter().any(|&c| c + 1 >= i && c <= i);
        if !dip || near_change || (ys[i - 1] < 0.0) != (ys[i] < 0.0) {
            continue;
        }
        let (a, b) = (xs[i - 1], xs[i + 1]);
        let sub_x: Vec<f64> = (0..=REFINE_POINTS)
            .map(|k| a + (b - a) * k as f64 / REFINE_POINTS as f64)
            .collect();
        let sub_y: Vec<f64> = sub_x.iter().map(|&x| f(x)).collect();
        let sub = bracket_roots_at(f, &sub_x, &sub_y, tol, depth - 1);
        if sub.is_empty() && depth == REFINE_DEPTH {
            let x = extremum(f, a, b, tol);
            if f(x).abs() < TANGENT_ACCEPT {
                roots.push(x);
            }
        }
        roots.extend(sub);
    }
    roots
}

/// Samples `f` at `n + 1` equally spaced points of `[a, b]` (both ends
/// included), then isolates roots with [`bracket_roots`].
pub fn scan_roots<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize, tol: f64) -> Vec<f64> {
    let n = n.max(1);
    let xs: Vec<f64> = (0..=n).map(|k| a + (b - a) * k as f64 / n as f64).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    bracket_roots(&f, &xs, &ys, tol)
}
