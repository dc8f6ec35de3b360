//! Exact rational helpers: construction, parsing, factorials, binomials,
//! and conversion to decimals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::decimal::BigDecimal;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed rational literal: {0}")]
    Malformed(String),
}

/// Reduced rational with the sign on the numerator.
pub fn rational(num: i64, den: i64) -> Result<BigRational, RationalError> {
    if den == 0 {
        return Err(RationalError::ZeroDenominator);
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

pub fn big_rational(num: BigInt, den: BigInt) -> Result<BigRational, RationalError> {
    if den.is_zero() {
        return Err(RationalError::ZeroDenominator);
    }
    Ok(BigRational::new(num, den))
}

pub fn from_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, RationalError> {
    let s = s.trim();
    let make = |t: &str| -> Result<BigInt, RationalError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| RationalError::Malformed(s.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = make(d)?;
            if den.is_zero() {
                return Err(RationalError::ZeroDenominator);
            }
            Ok(BigRational::new(make(n)?, den))
        }
        None => {
            // allow plain decimal literals in inputs like "1.5"
            if s.contains('.') {
                let d = BigDecimal::parse(s, 30)
                    .ok_or_else(|| RationalError::Malformed(s.to_string()))?;
                Ok(d.to_rational())
            } else {
                Ok(BigRational::from_integer(make(s)?))
            }
        }
    }
}

/// `num/den` for fractions, plain integer string otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Integer binomial coefficient; zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient C(w, k) for rational w.
pub fn binomial_rational(w: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        let factor = w - from_int(i as i64);
        acc = acc * factor / from_int((i + 1) as i64);
    }
    acc
}

/// r^e for signed e; negative exponents require a nonzero base.
pub fn pow_rational(r: &BigRational, e: i32) -> BigRational {
    r.pow(e)
}

pub fn to_decimal(r: &BigRational, precision: usize) -> BigDecimal {
    BigDecimal::from_rational(r, precision)
}

/// Exact n-th root when the rational is a perfect n-th power.
pub fn exact_nth_root(r: &BigRational, n: u32) -> Option<BigRational> {
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let root_of = |x: &BigInt| -> Option<BigInt> {
        let candidate = num_integer::Roots::nth_root(x, n);
        if candidate.pow(n) == *x {
            Some(candidate)
        } else {
            None
        }
    };
    if r.is_negative() {
        let flipped = -r;
        let num = root_of(flipped.numer())?;
        let den = root_of(flipped.denom())?;
        Some(-BigRational::new(num, den))
    } else {
        let num = root_of(r.numer())?;
        let den = root_of(r.denom())?;
        Some(BigRational::new(num, den))
    }
}
