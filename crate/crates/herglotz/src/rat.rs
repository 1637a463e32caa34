//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`, which already maintains the
//! invariants we need (reduced, positive denominator). This module adds the
//! constructors, parsing and conversion helpers used across the crate.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "a/b" or "a" (optional sign, arbitrary precision).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    match t.split_once('/') {
        None => BigInt::from_str(t)
            .map(Rat::from_integer)
            .map_err(|_| Error::Malformed(format!("bad rational literal {s:?}"))),
        Some((n, d)) => {
            let num = BigInt::from_str(n.trim())
                .map_err(|_| Error::Malformed(format!("bad rational literal {s:?}")))?;
            let den = BigInt::from_str(d.trim())
                .map_err(|_| Error::Malformed(format!("bad rational literal {s:?}")))?;
            if den.is_zero() {
                return Err(Error::Malformed(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// "a/b", with "/b" omitted for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // Ratio::to_f64 handles magnitudes beyond f64 by returning +-inf,
    // which is what the numeric oracles want.
    r.to_f64().unwrap_or(f64::NAN)
}

/// -1, 0 or +1.
pub fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
