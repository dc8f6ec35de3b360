//! Dense polynomials over exact rationals: arithmetic, Euclidean division,
//! gcd, derivatives, evaluation, and Taylor shifts.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::decimal::BigDecimal;
use crate::rational::{format_rational, from_int};

/// Coefficients lowest degree first; no trailing zeros (zero poly is empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn monomial(degree: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// Convenience constructor from small integers, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics on zero divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] / &lead;
            quot[k - dd] = q.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                let delta = &q * b;
                rem[idx] -= delta;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor by the Euclidean remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = BigRational::one() / l;
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * from_int((k + 1) as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_decimal(&self, x: &BigDecimal) -> BigDecimal {
        let p = x.precision();
        let mut acc = BigDecimal::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&BigDecimal::from_rational(c, p));
        }
        acc
    }

    /// Taylor coefficients of p(t + h) in h, up to and including order `order`.
    pub fn shift_jet(&self, t: &BigRational, order: usize) -> Vec<BigRational> {
        // repeated synthetic division by (x - t)
        let mut work = self.coeffs.clone();
        let mut jet = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            if work.is_empty() {
                jet.push(BigRational::zero());
                continue;
            }
            let mut rem = BigRational::zero();
            for c in work.iter_mut().rev() {
                let v = rem * t + c.clone();
                rem = v.clone();
                *c = v;
            }
            jet.push(work.remove(0));
        }
        jet
    }

    /// p(x + t) as a polynomial in x.
    pub fn shift(&self, t: &BigRational) -> Self {
        let deg = match self.degree() {
            None => return Self::zero(),
            Some(d) => d,
        };
        Self::new(self.shift_jet(t, deg))
    }

    /// p(c*x) as a polynomial in x.
    pub fn dilate(&self, c: &BigRational) -> Self {
        let mut power = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Self::new(out)
    }

    /// p(-x).
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

/// Derivative per the usual power rule.
pub fn poly_derivative(p: &Polynomial) -> Polynomial {
    p.derivative()
}

/// Monic gcd; panics if both arguments are zero.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert!(!(p.is_zero() && q.is_zero()), "gcd of two zero polynomials");
    p.gcd(q)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let mag_str = format_rational(&mag);
            match k {
                0 => write!(f, "{mag_str}")?,
                _ => {
                    if mag.is_one() {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{mag_str}*x")?;
                    }
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
