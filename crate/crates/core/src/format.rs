//! Fixed-precision number output shared by the JSON and CSV writers.
//!
//! Every float is written with exactly 17 significant digits, which is
//! enough to round-trip any `f64` and keeps golden outputs byte-stable.

use std::io;

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter, PrettyFormatter};

/// Formats `x` with 17 significant digits.
///
/// Positional notation is used for decimal exponents in `-5..17`, scientific
/// notation otherwise. Non-finite values render as `NaN`, `inf`, `-inf`.
pub fn sig17(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0" } else { "0.0" }.to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    debug_assert_eq!(digits.len(), 17);

    if !(-5..17).contains(&exp) {
        return format!("{sign}{}.{}e{exp}", &digits[..1], &digits[1..]);
    }
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    } else {
        let split = exp as usize + 1;
        let frac = if split < digits.len() {
            &digits[split..]
        } else {
            "0"
        };
        format!("{sign}{}.{frac}", &digits[..split])
    }
}

/// serde_json formatter that writes floats through [`sig17`].
pub struct Sig17<F> {
    inner: F,
}

impl<F: Formatter> Formatter for Sig17<F> {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        if value.is_finite() {
            writer.write_all(sig17(value).as_bytes())
        } else {
            writer.write_all(b"null")
        }
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_array(w)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array(w)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array_value(w)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object(w)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object(w)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(w, first)
    }
    fn end_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_key(w)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_value(w)
    }
}

/// Serializes `value` as pretty-printed JSON with 17-digit floats.
pub fn to_json_pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let fmt = Sig17 {
        inner: PrettyFormatter::with_indent(b"  "),
    };
    write_json(value, fmt)
}

/// Serializes `value` as single-line JSON with 17-digit floats.
pub fn to_json_compact<T: Serialize + ?Sized>(value: &T) -> String {
    write_json(value, Sig17 { inner: CompactFormatter })
}

fn write_json<T: Serialize + ?Sized, F: Formatter>(value: &T, fmt: Sig17<F>) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    String::from_utf8(buf).expect("serde_json writes UTF-8")
}

/// Writes one CSV row: fields joined by `,`, terminated by `\n`.
pub fn csv_row(fields: &[f64]) -> String {
    let mut line = fields.iter().map(|x| sig17(*x)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(sig17(std::f64::consts::PI), "3.1415926535897931");
        assert_eq!(sig17(1.0), "1.0000000000000000");
        assert_eq!(sig17(-0.5), "-0.50000000000000000");
        assert_eq!(sig17(1e-7), "9.9999999999999995e-8");
        assert_eq!(sig17(1e-300), "1.0000000000000000e-300");
        assert_eq!(sig17(123456.0), "123456.00000000000");
        assert_eq!(sig17(0.0), "0.0");
        assert_eq!(sig17(f64::NAN), "NaN");
    }

    #[test]
    fn round_trips_through_parse() {
        for &x in &[
            std::f64::consts::E,
            1.0 / 3.0,
            -2.5e-300,
            6.02e23,
            0.1,
            1e16,
            9.999999999999999e16,
            1e-5,
        ] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn json_uses_fixed_digits() {
        let s = to_json_compact(&vec![0.1_f64, 2.0]);
        assert_eq!(s, "[0.10000000000000001,2.0000000000000000]");
        let back: Vec<f64> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vec![0.1, 2.0]);
    }
}
