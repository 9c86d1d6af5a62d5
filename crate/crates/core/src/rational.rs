//! Exact rational helpers: parsing, formatting and snapping floats.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

use crate::{Error, Result};

/// The exact scalar used throughout the combinatorial layer.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn to_f64(x: &Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

pub fn to_big(x: &Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

/// Integer value of `x` if it has denominator one.
pub fn as_integer(x: &Q) -> Option<i64> {
    x.is_integer().then(|| x.to_integer())
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

/// Parses `p/q`, an integer, or a finite decimal such as `-0.25`, exactly.
pub fn parse_q(token: &str) -> Result<Q> {
    let bad = || Error::Invalid(format!("cannot parse `{token}` as a rational"));
    let s = token.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 15 {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num: i64 = if digits.is_empty() { 0 } else { digits.parse().map_err(|_| bad())? };
    let den = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
    let v = Q::new(num, den);
    Ok(if neg { -v } else { v })
}

/// Parses a comma-separated list of rationals.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(parse_q).collect()
}

/// Simplest rational within `tol` of `x` (continued-fraction convergents).
pub fn snap(x: f64, tol: f64) -> Result<Q> {
    if !x.is_finite() || x.abs() > 1e12 {
        return Err(Error::Invalid(format!("cannot snap {x} to a rational")));
    }
    let (mut h0, mut h1): (i128, i128) = (0, 1);
    let (mut k0, mut k1): (i128, i128) = (1, 0);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if h2.abs() > i64::MAX as i128 / 4 || k2 > i64::MAX as i128 / 4 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= tol {
            return Ok(Q::new(h1 as i64, k1 as i64));
        }
        let frac = r - a;
        if frac.abs() < 1e-300 {
            break;
        }
        r = 1.0 / frac;
    }
    if k1 > 0 && (h1 as f64 / k1 as f64 - x).abs() <= tol {
        return Ok(Q::new(h1 as i64, k1 as i64));
    }
    Err(Error::Invalid(format!("cannot snap {x} within {tol}")))
}
