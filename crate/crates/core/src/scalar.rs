//! Exact coefficient fields: rationals and Gaussian rationals.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `re + im·i` with exact rational parts.
pub type Gaussian = Complex<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gauss(re: i64, im: i64) -> Gaussian {
    Complex::new(rat(re), rat(im))
}

pub fn gaussian_from_rational(r: Rational) -> Gaussian {
    Complex::new(r, Rational::zero())
}

pub fn imag_unit() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Compact rendering: `0`, `1`, `-i`, `2i`, `1/2-3i`.
pub fn format_gaussian(z: &Gaussian) -> String {
    let im_part = |im: &Rational| -> String {
        if im.is_one() {
            "i".to_string()
        } else if (-im).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", format_rational(im))
        }
    };
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => format_rational(&z.re),
        (true, false) => im_part(&z.im),
        (false, false) => {
            let im = im_part(&z.im);
            if z.im.is_negative() {
                format!("{}{}", format_rational(&z.re), im)
            } else {
                format!("{}+{}", format_rational(&z.re), im)
            }
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Inverse of [`format_gaussian`].
pub fn parse_gaussian(s: &str) -> Result<Gaussian> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty Gaussian rational".into()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(gaussian_from_rational(parse_rational(&s)?));
    };
    // split at the last sign that is not leading
    let split = body
        .char_indices()
        .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
        .map(|(k, _)| k)
        .last();
    let (re, im) = match split {
        Some(k) => (parse_rational(&body[..k])?, &body[k..]),
        None => (Rational::zero(), body),
    };
    let im = match im {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
    };
    Ok(Complex::new(re, im))
}

fn bigint_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(n.to_string()),
    }
}

/// `[num, den]`; components outside the i64 range are emitted as strings.
pub fn rational_json(r: &Rational) -> Value {
    Value::Array(vec![bigint_json(r.numer()), bigint_json(r.denom())])
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let part = |v: &Value| -> Result<BigInt> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| Error::Parse(format!("non-integer component {n}"))),
            Value::String(s) => s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))),
            other => Err(Error::Parse(format!("expected integer, got {other}"))),
        }
    };
    match v.as_array().map(Vec::as_slice) {
        Some([n, d]) => {
            let d = part(d)?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(part(n)?, d))
        }
        _ => Err(Error::Parse(format!("expected [num, den], got {v}"))),
    }
}
