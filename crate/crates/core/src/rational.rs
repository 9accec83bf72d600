//! Exact rational parsing and formatting.
//!
//! Data files and CLI flags carry rationals as strings, either `p/q` or a
//! decimal literal such as `0.25` or `1e-9`. Both are parsed exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Parses `p/q`, an integer, or a decimal literal with optional exponent.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::InvalidArgument(format!("zero denominator in {text:?}")));
        }
        return Ok(BigRational::new(num, den));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let exp: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], exp)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = all_digits.parse().map_err(|_| bad())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    if scale.unsigned_abs() > 10_000 {
        return Err(Error::InvalidArgument(format!(
            "exponent out of range in {text:?}"
        )));
    }
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Canonical text form: `p` when integral, otherwise reduced `p/q`.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn floor_to_i64(value: &BigRational) -> Option<i64> {
    value.floor().to_integer().to_i64()
}

pub fn ceil_to_i64(value: &BigRational) -> Option<i64> {
    value.ceil().to_integer().to_i64()
}

/// Nearest f64 at or below `value`.
pub fn to_f64_down(value: &BigRational) -> f64 {
    let approx = value.to_f64().unwrap_or(f64::NAN);
    match BigRational::from_float(approx) {
        Some(exact) if &exact > value => next_down(approx),
        _ => approx,
    }
}

/// Nearest f64 at or above `value`.
pub fn to_f64_up(value: &BigRational) -> f64 {
    let approx = value.to_f64().unwrap_or(f64::NAN);
    match BigRational::from_float(approx) {
        Some(exact) if &exact < value => next_up(approx),
        _ => approx,
    }
}

pub fn next_up(x: f64) -> f64 {
    x.next_up()
}

pub fn next_down(x: f64) -> f64 {
    x.next_down()
}

/// Largest power of two not exceeding `value` (which must be positive).
pub fn dyadic_floor(value: &BigRational) -> BigRational {
    debug_assert!(value.is_positive());
    let two = BigInt::from(2u32);
    let mut p = BigRational::one();
    if &p <= value {
        while &(&p * &two) <= value {
            p *= &two;
        }
    } else {
        while &p > value {
            p /= &two;
        }
    }
    p
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
