//! Truncated power series (jets) around a point: arithmetic, elementary
//! functions, rational powers, composition, and reversion.
//!
//! A [`TruncatedSeries`] with center c and coefficients c0..cN stands for
//! f(c + t) = c0 + c1 t + ... + cN t^N + O(t^(N+1)). Coefficients live in a
//! [`SeriesDomain`]: exact rationals where a computation stays rational, or
//! fixed-precision decimals. Rational-domain operations that would need an
//! irrational value report [`SeriesError::NeedsDecimal`] instead of
//! approximating, so callers can rerun in the decimal domain deliberately.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::decimal::BigDecimal;
use crate::rational::{exact_nth_root, pow_rational, to_decimal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("value is irrational; rerun in the decimal domain")]
    NeedsDecimal,
    #[error("branch point: {0}")]
    Branch(String),
    #[error("expansion order exhausted before the result was determined")]
    OrderExhausted,
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("quotient has a pole of order {0}")]
    ValuationUnderflow(usize),
}

/// Coefficient arithmetic for series, plus exact-or-refuse evaluation of the
/// elementary functions at a series' constant term (the `*0` methods).
pub trait SeriesDomain: Clone {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, r: &BigRational) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_positive(&self, a: &Self::Elem) -> bool;
    fn is_negative(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, SeriesError>;

    fn pi(&self) -> Result<Self::Elem, SeriesError>;
    fn exp0(&self, a: &Self::Elem) -> Result<Self::Elem, SeriesError>;
    fn log0(&self, a: &Self::Elem) -> Result<Self::Elem, SeriesError>;
    fn sincos0(&self, a: &Self::Elem) -> Result<(Self::Elem, Self::Elem), SeriesError>;
    fn atan0(&self, a: &Self::Elem) -> Result<Self::Elem, SeriesError>;
    fn sqrt0(&self, a: &Self::Elem) -> Result<Self::Elem, SeriesError>;
    fn pow0(&self, a: &Self::Elem, e: &BigRational) -> Result<Self::Elem, SeriesError>;

    fn to_decimal(&self, a: &Self::Elem, precision: usize) -> BigDecimal;
    /// Exact rational reading of the element, when the domain has one.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;
    /// True when `a` is numerical noise next to `anchor` (always false in
    /// exact domains).
    fn negligible(&self, a: &Self::Elem, anchor: &Self::Elem) -> bool;
    /// |a| > |b|.
    fn abs_gt(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
}

/// Exact rational coefficients. Refuses (with `NeedsDecimal`) whenever an
/// elementary function value would be irrational.
#[derive(Debug, Clone, Default)]
pub struct RationalDomain;

impl SeriesDomain for RationalDomain {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_rational(&self, r: &BigRational) -> BigRational {
        r.clone()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_positive(&self, a: &BigRational) -> bool {
        a.is_positive()
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> Result<BigRational, SeriesError> {
        if b.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Ok(a / b)
    }

    fn pi(&self) -> Result<BigRational, SeriesError> {
        Err(SeriesError::NeedsDecimal)
    }

    fn exp0(&self, a: &BigRational) -> Result<BigRational, SeriesError> {
        if a.is_zero() {
            Ok(BigRational::one())
        } else {
            Err(SeriesError::NeedsDecimal)
        }
    }

    fn log0(&self, a: &BigRational) -> Result<BigRational, SeriesError> {
        if !a.is_positive() {
            return Err(SeriesError::DomainViolation(
                "logarithm of a non-positive value".into(),
            ));
        }
        if a.is_one() {
            Ok(BigRational::zero())
        } else {
            Err(SeriesError::NeedsDecimal)
        }
    }

    fn sincos0(&self, a: &BigRational) -> Result<(BigRational, BigRational), SeriesError> {
        if a.is_zero() {
            Ok((BigRational::zero(), BigRational::one()))
        } else {
            Err(SeriesError::NeedsDecimal)
        }
    }

    fn atan0(&self, a: &BigRational) -> Result<BigRational, SeriesError> {
        if a.is_zero() {
            Ok(BigRational::zero())
        } else {
            Err(SeriesError::NeedsDecimal)
        }
    }

    fn sqrt0(&self, a: &BigRational) -> Result<BigRational, SeriesError> {
        if a.is_negative() {
            return Err(SeriesError::DomainViolation(
                "square root of a negative value".into(),
            ));
        }
        exact_nth_root(a, 2).ok_or(SeriesError::NeedsDecimal)
    }

    fn pow0(&self, a: &BigRational, e: &BigRational) -> Result<BigRational, SeriesError> {
        if a.is_zero() {
            return if e.is_positive() {
                Ok(BigRational::zero())
            } else if e.is_zero() {
                Ok(BigRational::one())
            } else {
                Err(SeriesError::DivisionByZero)
            };
        }
        if e.is_integer() {
            let p = e
                .to_integer()
                .to_i32()
                .ok_or(SeriesError::OrderExhausted)?;
            return Ok(pow_rational(a, p));
        }
        let q = e
            .denom()
            .to_u32()
            .ok_or(SeriesError::OrderExhausted)?;
        if a.is_negative() && q % 2 == 0 {
            return Err(SeriesError::DomainViolation(
                "even root of a negative value".into(),
            ));
        }
        let root = exact_nth_root(a, q).ok_or(SeriesError::NeedsDecimal)?;
        let p = e
            .numer()
            .to_i32()
            .ok_or(SeriesError::OrderExhausted)?;
        Ok(pow_rational(&root, p))
    }

    fn to_decimal(&self, a: &BigRational, precision: usize) -> BigDecimal {
        to_decimal(a, precision)
    }

    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn negligible(&self, _a: &BigRational, _anchor: &BigRational) -> bool {
        false
    }

    fn abs_gt(&self, a: &BigRational, b: &BigRational) -> bool {
        a.abs() > b.abs()
    }
}

/// Fixed-precision decimal coefficients.
#[derive(Debug, Clone)]
pub struct DecimalDomain {
    pub precision: usize,
}

impl DecimalDomain {
    pub fn new(precision: usize) -> Self {
        DecimalDomain { precision }
    }
}

impl SeriesDomain for DecimalDomain {
    type Elem = BigDecimal;

    fn zero(&self) -> BigDecimal {
        BigDecimal::zero(self.precision)
    }

    fn one(&self) -> BigDecimal {
        BigDecimal::one(self.precision)
    }

    fn from_rational(&self, r: &BigRational) -> BigDecimal {
        to_decimal(r, self.precision)
    }

    fn is_zero(&self, a: &BigDecimal) -> bool {
        a.is_zero()
    }

    fn is_positive(&self, a: &BigDecimal) -> bool {
        a.is_positive()
    }

    fn is_negative(&self, a: &BigDecimal) -> bool {
        a.is_negative()
    }

    fn add(&self, a: &BigDecimal, b: &BigDecimal) -> BigDecimal {
        a.add(b)
    }

    fn sub(&self, a: &BigDecimal, b: &BigDecimal) -> BigDecimal {
        a.sub(b)
    }

    fn mul(&self, a: &BigDecimal, b: &BigDecimal) -> BigDecimal {
        a.mul(b)
    }

    fn neg(&self, a: &BigDecimal) -> BigDecimal {
        a.neg()
    }

    fn div(&self, a: &BigDecimal, b: &BigDecimal) -> Result<BigDecimal, SeriesError> {
        if b.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Ok(a.div(b))
    }

    fn pi(&self) -> Result<BigDecimal, SeriesError> {
        Ok(BigDecimal::pi(self.precision))
    }

    fn exp0(&self, a: &BigDecimal) -> Result<BigDecimal, SeriesError> {
        Ok(a.exp())
    }

    fn log0(&self, a: &BigDecimal) -> Result<BigDecimal, SeriesError> {
        if !a.is_positive() {
            return Err(SeriesError::DomainViolation(
                "logarithm of a non-positive value".into(),
            ));
        }
        Ok(a.ln())
    }

    fn sincos0(&self, a: &BigDecimal) -> Result<(BigDecimal, BigDecimal), SeriesError> {
        Ok(a.sin_cos())
    }

    fn atan0(&self, a: &BigDecimal) -> Result<BigDecimal, SeriesError> {
        Ok(a.atan())
    }

    fn sqrt0(&self, a: &BigDecimal) -> Result<BigDecimal, SeriesError> {
        if a.is_negative() {
            return Err(SeriesError::DomainViolation(
                "square root of a negative value".into(),
            ));
        }
        Ok(a.sqrt())
    }

    fn pow0(&self, a: &BigDecimal, e: &BigRational) -> Result<BigDecimal, SeriesError> {
        if a.is_zero() {
            return if e.is_positive() {
                Ok(self.zero())
            } else if e.is_zero() {
                Ok(self.one())
            } else {
                Err(SeriesError::DivisionByZero)
            };
        }
        if e.is_integer() {
            let p = e
                .to_integer()
                .to_i64()
                .ok_or(SeriesError::OrderExhausted)?;
            let base = a.powi(p.unsigned_abs());
            return if p >= 0 {
                Ok(base)
            } else {
                Ok(self.one().div(&base))
            };
        }
        if a.is_negative() {
            if e.denom().to_u64().map(|q| q % 2 == 0).unwrap_or(true) {
                return Err(SeriesError::DomainViolation(
                    "even root of a negative value".into(),
                ));
            }
            let m = self.from_rational(e).mul(&a.abs().ln()).exp();
            let odd_num = e.numer().to_i64().map(|p| p % 2 != 0).unwrap_or(false);
            return Ok(if odd_num { m.neg() } else { m });
        }
        Ok(self.from_rational(e).mul(&a.ln()).exp())
    }

    fn to_decimal(&self, a: &BigDecimal, precision: usize) -> BigDecimal {
        a.round_to(precision)
    }

    fn to_rational(&self, _a: &BigDecimal) -> Option<BigRational> {
        None
    }

    fn negligible(&self, a: &BigDecimal, anchor: &BigDecimal) -> bool {
        a.negligible_against(anchor, 4)
    }

    fn abs_gt(&self, a: &BigDecimal, b: &BigDecimal) -> bool {
        a.abs().cmp_value(&b.abs()) == std::cmp::Ordering::Greater
    }
}

#[derive(Debug, Clone)]
pub struct TruncatedSeries<D: SeriesDomain> {
    pub center: D::Elem,
    pub coeffs: Vec<D::Elem>,
}

impl<D: SeriesDomain> PartialEq for TruncatedSeries<D> {
    fn eq(&self, other: &Self) -> bool {
        self.center == other.center && self.coeffs == other.coeffs
    }
}

impl<D: SeriesDomain> TruncatedSeries<D> {
    pub fn new(center: D::Elem, coeffs: Vec<D::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c0");
        TruncatedSeries { center, coeffs }
    }

    pub fn constant(domain: &D, center: D::Elem, value: D::Elem, order: usize) -> Self {
        let mut coeffs = vec![domain.zero(); order + 1];
        coeffs[0] = value;
        TruncatedSeries { center, coeffs }
    }

    /// The jet of the function x itself: center + t.
    pub fn identity(domain: &D, center: D::Elem, order: usize) -> Self {
        let mut coeffs = vec![domain.zero(); order + 1];
        coeffs[0] = center.clone();
        if order >= 1 {
            coeffs[1] = domain.one();
        }
        TruncatedSeries { center, coeffs }
    }

    pub fn zero_series(domain: &D, center: D::Elem, order: usize) -> Self {
        TruncatedSeries {
            center,
            coeffs: vec![domain.zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Smallest k with c_k != 0, or None for the all-zero series.
    pub fn valuation(&self, domain: &D) -> Option<usize> {
        self.coeffs.iter().position(|c| !domain.is_zero(c))
    }

    pub fn is_zero(&self, domain: &D) -> bool {
        self.valuation(domain).is_none()
    }

    pub fn coeff(&self, domain: &D, k: usize) -> D::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| domain.zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        TruncatedSeries {
            center: self.center.clone(),
            coeffs,
        }
    }

    /// Replace coefficients that are numerical noise next to the largest
    /// coefficient with exact zeros. No-op in exact domains.
    pub fn cleaned(&self, domain: &D) -> Self {
        let mut anchor = domain.zero();
        for c in &self.coeffs {
            if domain.abs_gt(c, &anchor) {
                anchor = c.clone();
            }
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if !domain.is_zero(c) && domain.negligible(c, &anchor) {
                    domain.zero()
                } else {
                    c.clone()
                }
            })
            .collect();
        TruncatedSeries {
            center: self.center.clone(),
            coeffs,
        }
    }
}

fn assert_aligned<D: SeriesDomain>(a: &TruncatedSeries<D>, b: &TruncatedSeries<D>) {
    assert!(
        a.center == b.center && a.order() == b.order(),
        "series must share center and order"
    );
}

pub fn ps_add<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    b: &TruncatedSeries<D>,
) -> TruncatedSeries<D> {
    assert_aligned(a, b);
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| domain.add(x, y))
        .collect();
    TruncatedSeries::new(a.center.clone(), coeffs)
}

pub fn ps_sub<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    b: &TruncatedSeries<D>,
) -> TruncatedSeries<D> {
    assert_aligned(a, b);
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| domain.sub(x, y))
        .collect();
    TruncatedSeries::new(a.center.clone(), coeffs)
}

pub fn ps_neg<D: SeriesDomain>(domain: &D, a: &TruncatedSeries<D>) -> TruncatedSeries<D> {
    let coeffs = a.coeffs.iter().map(|x| domain.neg(x)).collect();
    TruncatedSeries::new(a.center.clone(), coeffs)
}

pub fn ps_scale<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    c: &D::Elem,
) -> TruncatedSeries<D> {
    let coeffs = a.coeffs.iter().map(|x| domain.mul(x, c)).collect();
    TruncatedSeries::new(a.center.clone(), coeffs)
}

pub fn ps_mul<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    b: &TruncatedSeries<D>,
) -> TruncatedSeries<D> {
    assert_aligned(a, b);
    let n = a.order();
    let mut coeffs = vec![domain.zero(); n + 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if domain.is_zero(x) {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if i + j > n {
                break;
            }
            coeffs[i + j] = domain.add(&coeffs[i + j], &domain.mul(x, y));
        }
    }
    TruncatedSeries::new(a.center.clone(), coeffs)
}

/// Quotient a/b as a pure (non-Laurent) series.
///
/// With val(b) = v, the quotient is determined through order N - v, and the
/// result is truncated accordingly. Errors if val(a) < val(b).
pub fn ps_div<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    b: &TruncatedSeries<D>,
) -> Result<TruncatedSeries<D>, SeriesError> {
    assert_aligned(a, b);
    let vb = b.valuation(domain).ok_or(SeriesError::DivisionByZero)?;
    let (q, shift) = ps_div_shifted(domain, a, b)?;
    if shift < 0 {
        return Err(SeriesError::ValuationUnderflow((-shift) as usize));
    }
    // The quotient is determined through order N - val(b): the normalized
    // quotient q runs through N - max(va, vb) and shifting by va - vb
    // exactly refills the gap.
    let result_order = a.order() - vb;
    let shift = shift as usize;
    let mut coeffs = vec![domain.zero(); result_order + 1];
    for (k, c) in q.coeffs.into_iter().enumerate() {
        coeffs[shift + k] = c;
    }
    Ok(TruncatedSeries::new(a.center.clone(), coeffs))
}

/// Laurent-aware quotient: returns (q, shift) with a/b = t^shift * q and
/// q having a nonzero constant term (unless a is the zero series, in which
/// case q is the zero series and shift is 0).
pub fn ps_div_shifted<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    b: &TruncatedSeries<D>,
) -> Result<(TruncatedSeries<D>, i64), SeriesError> {
    assert_aligned(a, b);
    let vb = b.valuation(domain).ok_or(SeriesError::DivisionByZero)?;
    let va = match a.valuation(domain) {
        Some(v) => v,
        None => {
            let order = a.order() - vb;
            return Ok((
                TruncatedSeries::zero_series(domain, a.center.clone(), order),
                0,
            ));
        }
    };
    let strip = va.max(vb);
    let n = a.order() - strip;
    let num: Vec<D::Elem> = a.coeffs[va..=va + n].to_vec();
    let den: Vec<D::Elem> = b.coeffs[vb..=vb + n].to_vec();
    let mut out: Vec<D::Elem> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = num[k].clone();
        for j in 1..=k {
            acc = domain.sub(&acc, &domain.mul(&den[j], &out[k - j]));
        }
        out.push(domain.div(&acc, &den[0])?);
    }
    Ok((
        TruncatedSeries::new(a.center.clone(), out),
        va as i64 - vb as i64,
    ))
}

/// a^e for rational e, by the direct power recurrence
/// k * a0 * c_k = sum_{j=1..k} ((e+1) j - k) * a_j * c_{k-j},  c_0 = a0^e.
///
/// A zero constant term is handled by factoring out the valuation v; this
/// requires v*e to be a non-negative integer, otherwise the power has a
/// branch point (or a pole) at the center.
pub fn ps_pow<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    e: &BigRational,
) -> Result<TruncatedSeries<D>, SeriesError> {
    let n = a.order();
    let v = match a.valuation(domain) {
        Some(v) => v,
        None => {
            return if e.is_positive() {
                Ok(TruncatedSeries::zero_series(domain, a.center.clone(), n))
            } else {
                Err(SeriesError::DivisionByZero)
            };
        }
    };
    let shift_exact = BigRational::from_integer(BigInt::from(v as i64)) * e;
    if !shift_exact.is_integer() {
        return Err(SeriesError::Branch(
            "fractional power of the leading term".into(),
        ));
    }
    let shift = shift_exact
        .to_integer()
        .to_i64()
        .ok_or(SeriesError::OrderExhausted)?;
    if shift < 0 {
        return Err(SeriesError::ValuationUnderflow((-shift) as usize));
    }
    let shift = shift as usize;
    if shift > n {
        return Ok(TruncatedSeries::zero_series(domain, a.center.clone(), n));
    }

    let m = n - v; // stripped series is exact through order m
    let base: Vec<D::Elem> = a.coeffs[v..=v + m].to_vec();
    let c0 = domain.pow0(&base[0], e)?;
    let mut pow: Vec<D::Elem> = Vec::with_capacity(m + 1);
    pow.push(c0);
    let e_plus_1 = e + BigRational::one();
    for k in 1..=m {
        let mut acc = domain.zero();
        for j in 1..=k {
            let factor = &e_plus_1 * BigRational::from_integer(BigInt::from(j as i64))
                - BigRational::from_integer(BigInt::from(k as i64));
            if factor.is_zero() {
                continue;
            }
            let term = domain.mul(&base[j], &pow[k - j]);
            acc = domain.add(&acc, &domain.mul(&domain.from_rational(&factor), &term));
        }
        let k_a0 = domain.mul(
            &domain.from_rational(&BigRational::from_integer(BigInt::from(k as i64))),
            &base[0],
        );
        pow.push(domain.div(&acc, &k_a0)?);
    }

    let mut coeffs = vec![domain.zero(); n + 1];
    for (k, c) in pow.into_iter().enumerate() {
        if shift + k > n {
            break;
        }
        coeffs[shift + k] = c;
    }
    Ok(TruncatedSeries::new(a.center.clone(), coeffs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemFn {
    Exp,
    Log,
    Sin,
    Cos,
    Atan,
    Sqrt,
}

/// Elementary function of a series, seeded by the exact function value at
/// the constant term and continued by the function's differential equation.
pub fn ps_elem<D: SeriesDomain>(
    domain: &D,
    f: ElemFn,
    a: &TruncatedSeries<D>,
) -> Result<TruncatedSeries<D>, SeriesError> {
    let n = a.order();
    let a0 = a.coeffs[0].clone();
    match f {
        ElemFn::Exp => {
            // E = exp(a0) * exp(u), u = a - a0; k e_k = sum j u_j e_{k-j}.
            let seed = domain.exp0(&a0)?;
            let mut e: Vec<D::Elem> = vec![domain.one()];
            for k in 1..=n {
                let mut acc = domain.zero();
                for j in 1..=k {
                    let u_j = &a.coeffs[j];
                    if domain.is_zero(u_j) {
                        continue;
                    }
                    let jr = domain.from_rational(&BigRational::from_integer(BigInt::from(
                        j as i64,
                    )));
                    acc = domain.add(&acc, &domain.mul(&jr, &domain.mul(u_j, &e[k - j])));
                }
                let kr =
                    domain.from_rational(&BigRational::from_integer(BigInt::from(k as i64)));
                e.push(domain.div(&acc, &kr)?);
            }
            let coeffs = e.iter().map(|c| domain.mul(c, &seed)).collect();
            Ok(TruncatedSeries::new(a.center.clone(), coeffs))
        }
        ElemFn::Log => {
            // L' * a = a': k a0 l_k = k a_k - sum_{j<k} j l_j a_{k-j}.
            let seed = domain.log0(&a0)?;
            let mut l: Vec<D::Elem> = vec![seed];
            for k in 1..=n {
                let kr =
                    domain.from_rational(&BigRational::from_integer(BigInt::from(k as i64)));
                let mut acc = domain.mul(&kr, &a.coeffs[k]);
                for j in 1..k {
                    let jr = domain.from_rational(&BigRational::from_integer(BigInt::from(
                        j as i64,
                    )));
                    acc = domain.sub(
                        &acc,
                        &domain.mul(&jr, &domain.mul(&l[j], &a.coeffs[k - j])),
                    );
                }
                l.push(domain.div(&acc, &domain.mul(&kr, &a0))?);
            }
            Ok(TruncatedSeries::new(a.center.clone(), l))
        }
        ElemFn::Sin | ElemFn::Cos => {
            let (s, c) = ps_sin_cos(domain, a)?;
            Ok(if f == ElemFn::Sin { s } else { c })
        }
        ElemFn::Atan => {
            // T' * (1 + a^2) = a'.
            let seed = domain.atan0(&a0)?;
            let one = TruncatedSeries::constant(domain, a.center.clone(), domain.one(), n);
            let d = ps_add(domain, &one, &ps_mul(domain, a, a));
            let mut t: Vec<D::Elem> = vec![seed];
            for k in 1..=n {
                let kr =
                    domain.from_rational(&BigRational::from_integer(BigInt::from(k as i64)));
                let mut acc = domain.mul(&kr, &a.coeffs[k]);
                for j in 1..k {
                    let jr = domain.from_rational(&BigRational::from_integer(BigInt::from(
                        j as i64,
                    )));
                    acc = domain.sub(
                        &acc,
                        &domain.mul(&jr, &domain.mul(&t[j], &d.coeffs[k - j])),
                    );
                }
                t.push(domain.div(&acc, &domain.mul(&kr, &d.coeffs[0]))?);
            }
            Ok(TruncatedSeries::new(a.center.clone(), t))
        }
        ElemFn::Sqrt => {
            if domain.is_zero(&a0) {
                return if a.is_zero(domain) {
                    Ok(TruncatedSeries::zero_series(domain, a.center.clone(), n))
                } else {
                    Err(SeriesError::Branch(
                        "square root of a series vanishing at the center".into(),
                    ))
                };
            }
            let seed = domain.sqrt0(&a0)?;
            if domain.is_zero(&seed) {
                return Err(SeriesError::Branch(
                    "square root of a series vanishing at the center".into(),
                ));
            }
            let two_s0 = domain.add(&seed, &seed);
            let mut s: Vec<D::Elem> = vec![seed];
            for k in 1..=n {
                let mut acc = a.coeffs[k].clone();
                for j in 1..k {
                    acc = domain.sub(&acc, &domain.mul(&s[j], &s[k - j]));
                }
                s.push(domain.div(&acc, &two_s0)?);
            }
            Ok(TruncatedSeries::new(a.center.clone(), s))
        }
    }
}

/// Sine and cosine of a series together (they share one recurrence).
pub fn ps_sin_cos<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
) -> Result<(TruncatedSeries<D>, TruncatedSeries<D>), SeriesError> {
    let n = a.order();
    let a0 = a.coeffs[0].clone();
    let (s0, c0) = domain.sincos0(&a0)?;
    // sin(u), cos(u) for u = a - a0: k su_k = sum j u_j cu_{k-j}, and the
    // cosine line with the sign flipped.
    let mut su: Vec<D::Elem> = vec![domain.zero()];
    let mut cu: Vec<D::Elem> = vec![domain.one()];
    for k in 1..=n {
        let mut acc_s = domain.zero();
        let mut acc_c = domain.zero();
        for j in 1..=k {
            let u_j = &a.coeffs[j];
            if domain.is_zero(u_j) {
                continue;
            }
            let jr =
                domain.from_rational(&BigRational::from_integer(BigInt::from(j as i64)));
            let ju = domain.mul(&jr, u_j);
            acc_s = domain.add(&acc_s, &domain.mul(&ju, &cu[k - j]));
            acc_c = domain.add(&acc_c, &domain.mul(&ju, &su[k - j]));
        }
        let kr = domain.from_rational(&BigRational::from_integer(BigInt::from(k as i64)));
        su.push(domain.div(&acc_s, &kr)?);
        cu.push(domain.neg(&domain.div(&acc_c, &kr)?));
    }
    let sin_coeffs = (0..=n)
        .map(|k| domain.add(&domain.mul(&s0, &cu[k]), &domain.mul(&c0, &su[k])))
        .collect();
    let cos_coeffs = (0..=n)
        .map(|k| domain.sub(&domain.mul(&c0, &cu[k]), &domain.mul(&s0, &su[k])))
        .collect();
    Ok((
        TruncatedSeries::new(a.center.clone(), sin_coeffs),
        TruncatedSeries::new(a.center.clone(), cos_coeffs),
    ))
}

/// Substitute `inner` into `outer`. The constant term of `inner` must equal
/// `outer`'s center, so that inner - center has valuation >= 1.
pub fn ps_compose<D: SeriesDomain>(
    domain: &D,
    outer: &TruncatedSeries<D>,
    inner: &TruncatedSeries<D>,
) -> Result<TruncatedSeries<D>, SeriesError> {
    if inner.coeffs[0] != outer.center {
        return Err(SeriesError::DomainViolation(
            "inner series does not pass through the outer center".into(),
        ));
    }
    let n = outer.order().min(inner.order());
    let mut v = inner.truncate(n);
    v.coeffs[0] = domain.zero();
    let mut acc = TruncatedSeries::constant(
        domain,
        inner.center.clone(),
        outer.coeffs[outer.order()].clone(),
        n,
    );
    for k in (0..outer.order()).rev() {
        acc = ps_mul(domain, &acc, &v);
        acc.coeffs[0] = domain.add(&acc.coeffs[0], &outer.coeffs[k]);
    }
    Ok(acc)
}

/// Compositional inverse: b with a(b(t)) = t through the truncation order.
/// Requires valuation exactly 1.
pub fn ps_reverse<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
) -> Result<TruncatedSeries<D>, SeriesError> {
    let n = a.order();
    if a.valuation(domain) != Some(1) {
        return Err(SeriesError::DomainViolation(
            "reversion needs valuation exactly 1".into(),
        ));
    }
    let a1 = a.coeffs[1].clone();
    let mut b = TruncatedSeries::zero_series(domain, a.coeffs[0].clone(), n);
    if n >= 1 {
        b.coeffs[1] = domain.div(&domain.one(), &a1)?;
    }
    for k in 2..=n {
        // With b known through t^{k-1}, the t^k coefficient of a(b) is
        // a1*b_k plus terms free of b_k; pick b_k to cancel it.
        let composed = compose_at_zero(domain, a, &b, k);
        b.coeffs[k] = domain.neg(&domain.div(&composed, &a1)?);
    }
    Ok(b)
}

// Coefficient of t^k in a(b(t)) - t, where b has zero constant term.
fn compose_at_zero<D: SeriesDomain>(
    domain: &D,
    a: &TruncatedSeries<D>,
    b: &TruncatedSeries<D>,
    k: usize,
) -> D::Elem {
    let n = k;
    let mut v = b.truncate(n);
    v.coeffs[0] = domain.zero();
    let top = a.order().min(n);
    let mut acc = TruncatedSeries::constant(domain, b.center.clone(), a.coeffs[top].clone(), n);
    for idx in (0..top).rev() {
        acc = ps_mul(domain, &acc, &v);
        acc.coeffs[0] = domain.add(&acc.coeffs[0], &a.coeffs[idx]);
    }
    let mut out = acc.coeffs[k].clone();
    if k == 1 {
        out = domain.sub(&out, &domain.one());
    }
    out
}

/// Coefficientwise derivative; drops the top order.
pub fn ps_derivative<D: SeriesDomain>(domain: &D, a: &TruncatedSeries<D>) -> TruncatedSeries<D> {
    let n = a.order();
    if n == 0 {
        return TruncatedSeries::zero_series(domain, a.center.clone(), 0);
    }
    let coeffs = (1..=n)
        .map(|k| {
            let kr = domain.from_rational(&BigRational::from_integer(BigInt::from(k as i64)));
            domain.mul(&kr, &a.coeffs[k])
        })
        .collect();
    TruncatedSeries::new(a.center.clone(), coeffs)
}

impl<D: SeriesDomain> fmt::Display for TruncatedSeries<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            let text = c.to_string();
            if text == "0" && k > 0 {
                continue;
            }
            if k == 0 {
                write!(f, "{text}")?;
                wrote = true;
                continue;
            }
            if !wrote {
                write!(f, "{text}")?;
            } else if let Some(rest) = text.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {text}")?;
            }
            if k == 1 {
                write!(f, "*t")?;
            } else {
                write!(f, "*t^{k}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
