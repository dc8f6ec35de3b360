//! Fixed-precision decimal arithmetic over big integers.
//!
//! A [`BigDecimal`] is `mantissa * 10^(-scale)` together with a precision:
//! the number of significant decimal digits the value promises to carry.
//! Every operation rounds its result to the larger precision of its
//! operands, round-half-even. Transcendental kernels (pi, exp, ln, sin,
//! cos, atan, sqrt) work at the value's precision plus guard digits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Default significant-digit budget when none is requested.
pub const DEFAULT_PRECISION: usize = 30;

const GUARD: usize = 8;

/// Decimal value `mantissa * 10^(-scale)` carrying `precision` significant digits.
#[derive(Clone, Debug)]
pub struct BigDecimal {
    mantissa: BigInt,
    scale: i64,
    precision: usize,
}

fn pow10(k: u64) -> BigInt {
    BigInt::from(10u32).pow(k as u32)
}

/// Number of decimal digits in |n| (1 for zero).
fn digits(n: &BigInt) -> usize {
    if n.is_zero() {
        1
    } else {
        // bits -> decimal digits estimate, corrected by comparison
        let bits = n.bits();
        let mut est = ((bits as f64) * std::f64::consts::LOG10_2) as u64;
        if est == 0 {
            est = 1;
        }
        let mut p = pow10(est);
        let mag = n.abs();
        while p <= mag {
            est += 1;
            p *= 10;
        }
        est as usize
    }
}

/// Quotient of n/d rounded half-even; d > 0.
fn div_round_half_even(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(d.is_positive());
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        return q;
    }
    let twice: BigInt = r.abs() * 2;
    let bump = match twice.cmp(d) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => q.is_odd(),
    };
    if !bump {
        q
    } else if n.is_negative() {
        q - 1
    } else {
        q + 1
    }
}

impl BigDecimal {
    pub fn new(mantissa: BigInt, scale: i64, precision: usize) -> Self {
        BigDecimal {
            mantissa,
            scale,
            precision: precision.max(1),
        }
    }

    pub fn zero(precision: usize) -> Self {
        Self::new(BigInt::zero(), 0, precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::new(BigInt::one(), 0, precision)
    }

    pub fn from_int(n: i64, precision: usize) -> Self {
        Self::new(BigInt::from(n), 0, precision)
    }

    pub fn from_bigint(n: BigInt, precision: usize) -> Self {
        Self::new(n, 0, precision)
    }

    /// Round a rational to `precision` significant digits.
    pub fn from_rational(r: &BigRational, precision: usize) -> Self {
        let precision = precision.max(1);
        if r.is_zero() {
            return Self::zero(precision);
        }
        let dn = digits(r.numer());
        let dd = digits(r.denom());
        // Scale the numerator so the quotient carries precision + 2 digits.
        let shift = (precision + 2 + dd).saturating_sub(dn.min(precision + 2 + dd)) as i64;
        let scaled = r.numer() * pow10(shift as u64);
        let q = div_round_half_even(&scaled, r.denom());
        Self::new(q, shift, precision).round_to(precision)
    }

    /// Parse a plain decimal literal like `-3.14159` or `42`.
    pub fn parse(s: &str, precision: usize) -> Option<Self> {
        let s = s.trim();
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s.strip_prefix('+').unwrap_or(s)),
        };
        let (body, exponent) = match body.split_once(['e', 'E']) {
            Some((b, e)) => (b, e.parse::<i64>().ok()?),
            None => (body, 0),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return None;
        }
        let joined = format!("{int_part}{frac_part}");
        let mantissa: BigInt = joined.parse().ok()?;
        Some(Self::new(
            mantissa * sign,
            frac_part.len() as i64 - exponent,
            precision,
        ))
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa.is_positive()
    }

    /// Exact rational value of this decimal.
    pub fn to_rational(&self) -> BigRational {
        if self.scale >= 0 {
            BigRational::new(self.mantissa.clone(), pow10(self.scale as u64))
        } else {
            BigRational::from_integer(self.mantissa.clone() * pow10((-self.scale) as u64))
        }
    }

    /// Floor of log10 |x|; 0 for zero.
    pub fn magnitude_exponent(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            digits(&self.mantissa) as i64 - 1 - self.scale
        }
    }

    /// Same value re-rounded to carry `precision` significant digits.
    pub fn round_to(&self, precision: usize) -> Self {
        let precision = precision.max(1);
        let d = digits(&self.mantissa);
        if self.is_zero() || d <= precision {
            return Self::new(self.mantissa.clone(), self.scale, precision);
        }
        let drop = (d - precision) as u64;
        let q = div_round_half_even(&self.mantissa, &pow10(drop));
        Self::new(q, self.scale - drop as i64, precision)
    }

    fn align(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let scale = self.scale.max(other.scale);
        let a = &self.mantissa * pow10((scale - self.scale) as u64);
        let b = &other.mantissa * pow10((scale - other.scale) as u64);
        (a, b, scale)
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.precision.max(other.precision);
        let (a, b, scale) = self.align(other);
        Self::new(a + b, scale, p).round_to(p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.mantissa, self.scale, self.precision)
    }

    pub fn abs(&self) -> Self {
        Self::new(self.mantissa.abs(), self.scale, self.precision)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.precision.max(other.precision);
        Self::new(
            &self.mantissa * &other.mantissa,
            self.scale + other.scale,
            p,
        )
        .round_to(p)
    }

    /// Division rounded to the working precision. Panics on zero divisor.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "decimal division by zero");
        let p = self.precision.max(other.precision);
        if self.is_zero() {
            return Self::zero(p);
        }
        let wp = p + GUARD;
        let dn = digits(&self.mantissa);
        let dd = digits(&other.mantissa);
        let shift = (wp + 1 + dd).saturating_sub(dn.min(wp + 1 + dd)) as u64;
        let scaled = &self.mantissa * pow10(shift);
        let neg = other.mantissa.is_negative();
        let q = div_round_half_even(
            &(if neg { -scaled } else { scaled }),
            &other.mantissa.abs(),
        );
        Self::new(q, self.scale + shift as i64 - other.scale, p).round_to(p)
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self::new(&self.mantissa * k, self.scale, self.precision).round_to(self.precision)
    }

    pub fn div_int(&self, k: i64) -> Self {
        self.div(&Self::from_int(k, self.precision))
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.precision);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.align(other);
        a.cmp(&b)
    }

    /// Greatest integer not exceeding the value.
    pub fn floor_int(&self) -> BigInt {
        if self.scale <= 0 {
            return &self.mantissa * pow10((-self.scale) as u64);
        }
        let d = pow10(self.scale as u64);
        self.mantissa.div_floor(&d)
    }

    /// Nearest integer; exact halves round down.
    pub fn round_int(&self) -> BigInt {
        if self.scale <= 0 {
            return &self.mantissa * pow10((-self.scale) as u64);
        }
        let d = pow10(self.scale as u64);
        let half = &d / 2;
        let (q, r) = self.mantissa.div_mod_floor(&d);
        if r > half {
            q + 1
        } else {
            q
        }
    }

    /// True when |self| < 10^(-k) * max(1, |anchor|): the value cannot move
    /// the anchor's k-th significant digit.
    pub fn negligible_against(&self, anchor: &Self, k: usize) -> bool {
        if self.is_zero() {
            return true;
        }
        let anchor_mag = if anchor.is_zero() {
            0
        } else {
            anchor.magnitude_exponent()
        };
        self.magnitude_exponent() < anchor_mag - k as i64
    }

    // ---- transcendental kernels ----

    /// pi by Machin's formula in fixed-point integer arithmetic.
    pub fn pi(precision: usize) -> Self {
        let precision = precision.max(1);
        let wp = precision + GUARD + 4;
        let unit = pow10(wp as u64);
        // arctan(1/x) * unit, truncated
        let arccot = |x: i64| -> BigInt {
            let xx = BigInt::from(x) * x;
            let mut power = &unit / x;
            let mut sum = power.clone();
            let mut k: i64 = 1;
            loop {
                power = &power / &xx;
                if power.is_zero() {
                    break;
                }
                let term = &power / (2 * k + 1);
                if k % 2 == 1 {
                    sum -= term;
                } else {
                    sum += term;
                }
                k += 1;
            }
            sum
        };
        let pi_unit = (arccot(5) * 16) - (arccot(239) * 4);
        Self::new(pi_unit, wp as i64, precision).round_to(precision)
    }

    /// Natural logarithm of 10.
    pub fn ln10(precision: usize) -> Self {
        Self::from_int(10, precision).ln()
    }

    /// Square root, half-even at the working precision. Panics on negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of negative decimal");
        let p = self.precision;
        if self.is_zero() {
            return Self::zero(p);
        }
        let wp = p + GUARD;
        // Want mantissa with ~2*wp digits and even effective scale.
        let d = digits(&self.mantissa);
        let mut shift = (2 * wp).saturating_sub(d) as i64;
        if (self.scale + shift) % 2 != 0 {
            shift += 1;
        }
        let scaled = &self.mantissa * pow10(shift as u64);
        let root = num_integer::Roots::sqrt(&scaled);
        Self::new(root, (self.scale + shift) / 2, p).round_to(p)
    }

    /// e^x via argument halving and the Maclaurin series.
    pub fn exp(&self) -> Self {
        let p = self.precision;
        if self.is_zero() {
            return Self::one(p);
        }
        if self.is_negative() {
            return Self::one(p).div(&self.neg().exp());
        }
        // Halve until the argument is at most 1/2.
        let mut halvings = 0usize;
        let mag = self.magnitude_exponent();
        if mag >= 0 {
            halvings = ((mag + 1) as f64 * 3.33).ceil() as usize + 1;
        }
        let wp = p + GUARD + halvings + 2;
        let mut t = self.round_to(wp);
        for _ in 0..halvings {
            t = t.div_int(2);
        }
        let mut sum = Self::one(wp);
        let mut term = Self::one(wp);
        let mut n: i64 = 1;
        loop {
            term = term.mul(&t).div_int(n);
            if term.negligible_against(&sum, wp + 2) {
                break;
            }
            sum = sum.add(&term);
            n += 1;
        }
        for _ in 0..halvings {
            sum = sum.mul(&sum);
        }
        sum.round_to(p)
    }

    /// Natural logarithm via power-of-ten normalization, repeated square
    /// roots, and the atanh series. Panics on non-positive input.
    pub fn ln(&self) -> Self {
        assert!(self.is_positive(), "ln of non-positive decimal");
        let p = self.precision;
        let wp = p + GUARD + 6;
        // x = f * 10^e with 1 <= f < 10
        let e = self.magnitude_exponent();
        let f = Self::new(self.mantissa.clone(), self.scale + e, wp);
        let ln_f = Self::ln_near_one(&f, wp);
        let result = if e == 0 {
            ln_f
        } else {
            let ten = Self::new(BigInt::one(), -1, wp);
            let ln10 = Self::ln_near_one(&ten, wp);
            ln_f.add(&ln10.mul_int(e))
        };
        result.round_to(p)
    }

    /// ln of a value in (0.1, 10]: repeated sqrt until close to 1, then atanh.
    fn ln_near_one(x: &Self, wp: usize) -> Self {
        let mut y = x.round_to(wp + 4);
        let one = Self::one(wp + 4);
        let mut doublings = 0u32;
        let band = Self::new(BigInt::from(5), 2, wp); // 0.05
        while y.sub(&one).abs().cmp_value(&band) == Ordering::Greater {
            y = y.sqrt();
            doublings += 1;
        }
        let u = y.sub(&one).div(&y.add(&one));
        let u2 = u.mul(&u);
        let mut term = u.clone();
        let mut sum = u.clone();
        let mut k: i64 = 1;
        loop {
            term = term.mul(&u2);
            let add = term.div_int(2 * k + 1);
            if add.negligible_against(&sum, wp + 2) && k > 1 {
                break;
            }
            sum = sum.add(&add);
            k += 1;
        }
        sum.mul_int(2i64 << doublings)
    }

    /// Simultaneous sine and cosine, reducing modulo 2*pi then halving.
    pub fn sin_cos(&self) -> (Self, Self) {
        let p = self.precision;
        let mag = self.magnitude_exponent().max(0) as usize;
        let wp = p + GUARD + 8 + mag;
        let two_pi = Self::pi(wp).mul_int(2);
        let q = self.round_to(wp).div(&two_pi).round_int();
        let mut t = self.round_to(wp).sub(&two_pi.mul(&Self::from_bigint(q, wp)));
        // |t| <= pi; halve until below 1/4
        let quarter = Self::new(BigInt::from(25), 2, wp);
        let mut halvings = 0u32;
        while t.abs().cmp_value(&quarter) == Ordering::Greater {
            t = t.div_int(2);
            halvings += 1;
        }
        let t2 = t.mul(&t);
        // sin series
        let mut sin = t.clone();
        let mut term = t.clone();
        let mut k: i64 = 1;
        loop {
            term = term.mul(&t2).div_int(-(2 * k) * (2 * k + 1));
            if term.negligible_against(&Self::one(wp), wp + 2) {
                break;
            }
            sin = sin.add(&term);
            k += 1;
        }
        // cos series
        let mut cos = Self::one(wp);
        term = Self::one(wp);
        k = 1;
        loop {
            term = term.mul(&t2).div_int(-(2 * k - 1) * (2 * k));
            if term.negligible_against(&Self::one(wp), wp + 2) {
                break;
            }
            cos = cos.add(&term);
            k += 1;
        }
        for _ in 0..halvings {
            let s2 = sin.mul(&cos).mul_int(2);
            let c2 = cos.mul(&cos).sub(&sin.mul(&sin));
            sin = s2;
            cos = c2;
        }
        (sin.round_to(p), cos.round_to(p))
    }

    /// Arctangent via angle halving and the Maclaurin series.
    pub fn atan(&self) -> Self {
        let p = self.precision;
        if self.is_zero() {
            return Self::zero(p);
        }
        if self.is_negative() {
            return self.neg().atan().neg();
        }
        let one = Self::one(p + GUARD);
        if self.cmp_value(&one) == Ordering::Greater {
            // atan x = pi/2 - atan(1/x)
            let half_pi = Self::pi(p + GUARD).div_int(2);
            return half_pi.sub(&one.div(&self.round_to(p + GUARD)).atan()).round_to(p);
        }
        let wp = p + GUARD + 8;
        let mut x = self.round_to(wp);
        let band = Self::new(BigInt::from(5), 2, wp); // 0.05
        let mut doublings = 0u32;
        let one_wp = Self::one(wp);
        while x.abs().cmp_value(&band) == Ordering::Greater {
            let denom = one_wp.add(&one_wp.add(&x.mul(&x)).sqrt());
            x = x.div(&denom);
            doublings += 1;
        }
        let x2 = x.mul(&x);
        let mut term = x.clone();
        let mut sum = x.clone();
        let mut k: i64 = 1;
        loop {
            term = term.mul(&x2).neg();
            let add = term.div_int(2 * k + 1);
            if add.negligible_against(&sum, wp + 2) {
                break;
            }
            sum = sum.add(&add);
            k += 1;
        }
        sum.mul_int(1i64 << doublings).round_to(p)
    }
}

impl fmt::Display for BigDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let neg = self.mantissa.is_negative();
        let digits_str = self.mantissa.abs().to_string();
        let s = if self.scale <= 0 {
            format!("{}{}", digits_str, "0".repeat((-self.scale) as usize))
        } else {
            let scale = self.scale as usize;
            if digits_str.len() > scale {
                let (int, frac) = digits_str.split_at(digits_str.len() - scale);
                let frac = frac.trim_end_matches('0');
                if frac.is_empty() {
                    int.to_string()
                } else {
                    format!("{int}.{frac}")
                }
            } else {
                let frac = format!("{}{}", "0".repeat(scale - digits_str.len()), digits_str);
                let frac = frac.trim_end_matches('0');
                format!("0.{frac}")
            }
        };
        write!(f, "{}{}", if neg { "-" } else { "" }, s)
    }
}

impl PartialEq for BigDecimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl Eq for BigDecimal {}

impl PartialOrd for BigDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl Ord for BigDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}
