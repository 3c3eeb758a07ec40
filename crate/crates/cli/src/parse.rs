//! Value parsers for command-line flags.

use std::f64::consts::PI;

use num_complex::Complex64;

/// `re,im`, e.g. `0.7,0` or `-1,0`.
pub fn complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected re,im but got {s:?}"))?;
    Ok(Complex64::new(real(re)?, real(im)?))
}

/// `p/q` with non-negative integers.
pub fn ratio(s: &str) -> Result<(u64, u64), String> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| format!("expected p/q but got {s:?}"))?;
    let int = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((int(p)?, int(q)?))
}

/// A real number, optionally a multiple of pi: `2.5`, `pi`, `-pi`, `4pi`,
/// `3*pi`, `pi/2`, `3pi/4`.
pub fn real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let bad = || format!("not a number: {s:?}");
    let Some(at) = t.find("pi") else {
        return t.parse::<f64>().map_err(|_| bad());
    };
    let coef = t[..at].trim_end_matches('*').trim();
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let rest = t[at + 2..].trim();
    let den = match rest.strip_prefix('/') {
        Some(d) => d.trim().parse::<f64>().map_err(|_| bad())?,
        None if rest.is_empty() => 1.0,
        None => return Err(bad()),
    };
    if den == 0.0 {
        return Err(bad());
    }
    Ok(coef * PI / den)
}

/// `a:b` with `a < b`, each end parsed by [`real`].
pub fn range(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected a:b but got {s:?}"))?;
    let (a, b) = (real(a)?, real(b)?);
    if !(a < b) {
        return Err(format!("empty range {a}:{b}"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_multiples() {
        assert_eq!(real("pi").unwrap(), PI);
        assert_eq!(real("4pi").unwrap(), 4.0 * PI);
        assert_eq!(real("3*pi").unwrap(), 3.0 * PI);
        assert_eq!(real("-pi/2").unwrap(), -PI / 2.0);
        assert_eq!(real("3pi/4").unwrap(), 0.75 * PI);
        assert_eq!(real("-0.7").unwrap(), -0.7);
        assert!(real("pix").is_err());
        assert!(real("pi/0").is_err());
    }

    #[test]
    fn ranges_and_pairs() {
        assert_eq!(range("pi:4pi").unwrap(), (PI, 4.0 * PI));
        assert!(range("2:1").is_err());
        assert_eq!(complex("-1,0").unwrap(), Complex64::new(-1.0, 0.0));
        assert!(complex("1").is_err());
        assert_eq!(ratio("1/2").unwrap(), (1, 2));
        assert!(ratio("1/-2").is_err());
    }
}
