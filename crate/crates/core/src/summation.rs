//! Summatory terms from general terms: exact Faulhaber polynomials,
//! geometric-weighted and alternating closed forms, asymptotic summation
//! with optimal truncation, and the classical constants it produces.
//!
//! The asymptotic expansions here are divergent. Every routine that uses
//! one applies the same stopping rule: add correction terms while their
//! magnitudes decrease, stop at the first term that grows, and report the
//! smallest term as the accuracy proxy.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::decimal::BigDecimal;
use crate::numbers::bernoulli;
use crate::poly::Polynomial;
use crate::rational::{binomial, to_decimal};
use crate::series::{
    ps_div_shifted, DecimalDomain, RationalDomain, SeriesDomain, SeriesError, TruncatedSeries,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SummationError {
    #[error("weight 1 has no geometric closed form; use the power-sum polynomial")]
    UnitWeight,
    #[error("term has no closed-form antiderivative; asymptotic summation needs one")]
    NoAntiderivative,
    #[error("asymptotic expansion diverged before any term decreased")]
    ImmediateDivergence,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A series' general term f(k), with enough analytic structure to be summed:
/// point evaluation, Taylor jets at arbitrary points, and (for the built-in
/// families) a closed-form antiderivative.
#[derive(Debug, Clone)]
pub enum AnalyticTerm {
    /// k^n
    Power(u32),
    /// 1/(a + (k-1) b)^n
    ReciprocalPower {
        a: BigRational,
        b: BigRational,
        n: u32,
    },
    /// ln k
    Log,
    /// p(k)/q(k)
    Rational { num: Polynomial, den: Polynomial },
}

impl AnalyticTerm {
    pub fn harmonic() -> Self {
        AnalyticTerm::ReciprocalPower {
            a: BigRational::one(),
            b: BigRational::one(),
            n: 1,
        }
    }

    pub fn zeta(n: u32) -> Self {
        AnalyticTerm::ReciprocalPower {
            a: BigRational::one(),
            b: BigRational::one(),
            n,
        }
    }

    /// Taylor jet at x > 0 (coefficients f(x), f'(x), f''(x)/2, ...).
    pub fn jet(
        &self,
        domain: &DecimalDomain,
        x: &BigDecimal,
        order: usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, SummationError> {
        match self {
            AnalyticTerm::Power(n) => {
                let base = TruncatedSeries::identity(domain, x.clone(), order);
                let e = BigRational::from_integer(BigInt::from(*n));
                Ok(crate::series::ps_pow(domain, &base, &e)?)
            }
            AnalyticTerm::ReciprocalPower { a, b, n } => {
                // u = a + (x-1) b, term jet = (u + b t)^(-n).
                let u = domain
                    .from_rational(a)
                    .add(&x.sub(&domain.one()).mul(&domain.from_rational(b)));
                if !u.is_positive() {
                    return Err(SummationError::OutOfRange(
                        "reciprocal-power term evaluated at a non-positive base".into(),
                    ));
                }
                let mut coeffs = vec![domain.zero(); order + 1];
                coeffs[0] = u.clone();
                if order >= 1 {
                    coeffs[1] = domain.from_rational(b);
                }
                let base = TruncatedSeries::new(x.clone(), coeffs);
                let e = -BigRational::from_integer(BigInt::from(*n));
                Ok(crate::series::ps_pow(domain, &base, &e)?)
            }
            AnalyticTerm::Log => {
                if !x.is_positive() {
                    return Err(SummationError::OutOfRange(
                        "log term evaluated at a non-positive point".into(),
                    ));
                }
                // ln(x + t) = ln x + sum (-1)^(m+1) t^m / (m x^m)
                let mut coeffs = Vec::with_capacity(order + 1);
                coeffs.push(x.ln());
                let inv_x = domain.one().div(x);
                let mut p = domain.one();
                for m in 1..=order {
                    p = p.mul(&inv_x);
                    let c = p.div_int(m as i64);
                    coeffs.push(if m % 2 == 0 { c.neg() } else { c });
                }
                Ok(TruncatedSeries::new(x.clone(), coeffs))
            }
            AnalyticTerm::Rational { num, den } => {
                let n_jet = decimal_poly_jet(domain, num, x, order);
                let d_jet = decimal_poly_jet(domain, den, x, order);
                let (q, shift) = ps_div_shifted(domain, &n_jet, &d_jet)?;
                if shift < 0 {
                    return Err(SummationError::OutOfRange(
                        "rational term has a pole at the evaluation point".into(),
                    ));
                }
                let mut coeffs = vec![domain.zero(); order + 1];
                for (k, c) in q.coeffs.into_iter().enumerate() {
                    let idx = k + shift as usize;
                    if idx <= order {
                        coeffs[idx] = c;
                    }
                }
                Ok(TruncatedSeries::new(x.clone(), coeffs))
            }
        }
    }

    pub fn eval(
        &self,
        domain: &DecimalDomain,
        x: &BigDecimal,
    ) -> Result<BigDecimal, SummationError> {
        Ok(self.jet(domain, x, 0)?.coeffs[0].clone())
    }

    /// A fixed antiderivative F with F' = f, for the families that have one
    /// in closed form. The choice of integration constant is immaterial: it
    /// cancels between calibration and evaluation.
    pub fn antiderivative(
        &self,
        domain: &DecimalDomain,
        x: &BigDecimal,
    ) -> Result<BigDecimal, SummationError> {
        match self {
            AnalyticTerm::Power(n) => {
                let p = x.powi(*n as u64 + 1);
                Ok(p.div_int(*n as i64 + 1))
            }
            AnalyticTerm::ReciprocalPower { a, b, n } => {
                let u = domain
                    .from_rational(a)
                    .add(&x.sub(&domain.one()).mul(&domain.from_rational(b)));
                if !u.is_positive() {
                    return Err(SummationError::OutOfRange(
                        "reciprocal-power antiderivative at a non-positive base".into(),
                    ));
                }
                let bd = domain.from_rational(b);
                if *n == 1 {
                    Ok(u.ln().div(&bd))
                } else {
                    // -1 / ((n-1) b u^(n-1))
                    let pw = u.powi(*n as u64 - 1);
                    Ok(domain
                        .one()
                        .neg()
                        .div(&bd.mul_int(*n as i64 - 1).mul(&pw)))
                }
            }
            AnalyticTerm::Log => {
                if !x.is_positive() {
                    return Err(SummationError::OutOfRange(
                        "log antiderivative at a non-positive point".into(),
                    ));
                }
                Ok(x.mul(&x.ln()).sub(x))
            }
            AnalyticTerm::Rational { .. } => Err(SummationError::NoAntiderivative),
        }
    }
}

fn decimal_poly_jet(
    domain: &DecimalDomain,
    p: &Polynomial,
    x: &BigDecimal,
    order: usize,
) -> TruncatedSeries<DecimalDomain> {
    // Repeated synthetic division of p by (t - x), in decimals.
    let mut work: Vec<BigDecimal> = p
        .coeffs()
        .iter()
        .map(|c| domain.from_rational(c))
        .collect();
    if work.is_empty() {
        work.push(domain.zero());
    }
    let mut jet = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        if work.is_empty() {
            jet.push(domain.zero());
            continue;
        }
        let mut acc = domain.zero();
        for c in work.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        jet.push(acc);
        // Divide by (t - x): quotient coefficients by Horner, drop the last.
        let mut quotient = Vec::with_capacity(work.len().saturating_sub(1));
        let mut carry = domain.zero();
        for c in work.iter().rev() {
            carry = carry.mul(x).add(c);
            quotient.push(carry.clone());
        }
        quotient.pop();
        quotient.reverse();
        work = quotient;
    }
    TruncatedSeries::new(x.clone(), jet)
}

/// Result of an asymptotic summation, with its accuracy bookkeeping.
#[derive(Debug, Clone)]
pub struct SummationResult {
    pub value: BigDecimal,
    pub terms_summed_directly: u64,
    pub correction_terms_used: usize,
    /// Magnitude of the last correction term actually used.
    pub smallest_term: BigDecimal,
    /// True when the stopping rule fired because the next term grew.
    pub truncated_at_growth: bool,
}

/// Exact polynomial P with P(x) = sum_{k=1}^{x} k^n for integer x >= 0.
pub fn faulhaber(n: u32) -> Polynomial {
    // (1/(n+1)) sum_j C(n+1, j) B_j x^(n+1-j), with the B_1 = +1/2 sign
    // convention so the sum runs through x rather than x-1.
    let table = bernoulli((n as usize) / 2 + 1);
    let mut coeffs = vec![BigRational::zero(); n as usize + 2];
    let over = BigRational::new(BigInt::one(), BigInt::from(n as i64 + 1));
    for j in 0..=n as usize {
        let b = match j {
            0 => BigRational::one(),
            1 => BigRational::new(BigInt::one(), BigInt::from(2)),
            _ if j % 2 == 1 => BigRational::zero(),
            _ => {
                let k = j / 2;
                let sign = if k % 2 == 1 { 1 } else { -1 };
                &table.values[k - 1] * BigRational::from_integer(BigInt::from(sign))
            }
        };
        if b.is_zero() {
            continue;
        }
        let c = BigRational::from_integer(binomial(n as u64 + 1, j as u64)) * b * &over;
        coeffs[n as usize + 1 - j] = c;
    }
    Polynomial::new(coeffs)
}

/// Closed form for sum_{k=1}^{x} k^n p^k with p != 1:
/// value = p^x * prefactor(x) + constant.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricClosedForm {
    pub weight: BigRational,
    pub prefactor: Polynomial,
    pub constant: BigRational,
}

impl GeometricClosedForm {
    pub fn eval(&self, x: u32) -> BigRational {
        let px = crate::rational::pow_rational(&self.weight, x as i32);
        px * self.prefactor.eval(&BigRational::from_integer(BigInt::from(x))) + &self.constant
    }
}

pub fn geometric_weighted(
    n: u32,
    p: &BigRational,
) -> Result<GeometricClosedForm, SummationError> {
    if p.is_one() {
        return Err(SummationError::UnitWeight);
    }
    // The prefactor Q solves Q(x) - Q(x-1)/p = x^n; writing the shift as
    // exp(-d/dx) gives Q = W(D) x^n with W(u) = p / (p - e^(-u)).
    let dom = RationalDomain;
    let order = n as usize;
    let mut den = Vec::with_capacity(order + 1);
    den.push(p - BigRational::one());
    for m in 1..=order {
        let sign = if m % 2 == 0 { -1 } else { 1 };
        den.push(BigRational::new(
            BigInt::from(sign),
            crate::rational::factorial(m),
        ));
    }
    let num = TruncatedSeries::constant(&dom, BigRational::zero(), p.clone(), order);
    let den = TruncatedSeries::new(BigRational::zero(), den);
    let w = crate::series::ps_div(&dom, &num, &den)?;

    // Q(x) = sum_m w_m * (d/dx)^m x^n = sum_m w_m n!/(n-m)! x^(n-m).
    let mut coeffs = vec![BigRational::zero(); order + 1];
    let mut falling = BigRational::one();
    for m in 0..=order {
        coeffs[order - m] = &w.coeffs[m] * &falling;
        falling *= BigRational::from_integer(BigInt::from((n as i64) - m as i64));
    }
    let prefactor = Polynomial::new(coeffs);
    let constant = -prefactor.coeff(0);
    Ok(GeometricClosedForm {
        weight: p.clone(),
        prefactor,
        constant,
    })
}

/// Closed forms for sum_{k=1}^{x} (-1)^(k-1) k^n, split by the parity of x,
/// plus the Abel value of the infinite alternating series.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternatingClosedForm {
    pub even: Polynomial,
    pub odd: Polynomial,
    pub abel: BigRational,
}

impl AlternatingClosedForm {
    pub fn eval(&self, x: u32) -> BigRational {
        let xr = BigRational::from_integer(BigInt::from(x));
        if x % 2 == 0 {
            self.even.eval(&xr)
        } else {
            self.odd.eval(&xr)
        }
    }
}

pub fn alternating_power_closed_form(n: u32) -> AlternatingClosedForm {
    // Bracket B(x) = x^n/2 + sum_j (-1)^(j+1) (2^(2j)-1) b_j C(n,2j-1)
    // x^(n-2j+1) / (2j); then even sum = K - B, odd sum = K + B with
    // K = B(0), which is also the Abel value.
    let table = bernoulli(n as usize / 2 + 1);
    let mut bracket = Polynomial::monomial(
        n as usize,
        BigRational::new(BigInt::one(), BigInt::from(2)),
    );
    let mut j = 1usize;
    while 2 * j - 1 <= n as usize {
        let factor = BigRational::from_integer((BigInt::one() << (2 * j)) - BigInt::one())
            * &table.values[j - 1]
            * BigRational::from_integer(binomial(n as u64, 2 * j as u64 - 1))
            / BigRational::from_integer(BigInt::from(2 * j as i64));
        let signed = if j % 2 == 1 { factor } else { -factor };
        bracket = bracket.add(&Polynomial::monomial(n as usize - (2 * j - 1), signed));
        j += 1;
    }
    let abel = bracket.coeff(0);
    let k_poly = Polynomial::constant(abel.clone());
    AlternatingClosedForm {
        even: k_poly.sub(&bracket),
        odd: k_poly.add(&bracket),
        abel,
    }
}

// Shared tail of the asymptotic expansion at x:
//   F(x) + f(x)/2 + sum_j (-1)^(j+1) b_j c_{2j-1} / (2j)
// where c are the jet coefficients of f at x. Stops at the optimal
// truncation point; returns (tail, used, smallest, truncated_at_growth).
fn asymptotic_tail(
    f: &AnalyticTerm,
    domain: &DecimalDomain,
    x: &BigDecimal,
    depth: usize,
    weights: &TailWeights,
) -> Result<(BigDecimal, usize, BigDecimal, bool), SummationError> {
    let jet = f.jet(domain, x, 2 * depth)?;
    let mut tail = match weights.base {
        TailBase::IntegralPlusHalf => {
            let half = jet.coeffs[0].div_int(2);
            f.antiderivative(domain, x)?.add(&half)
        }
        TailBase::HalfOnly => jet.coeffs[0].div_int(2),
    };
    let table = bernoulli(depth);
    let mut used = 0usize;
    let mut smallest = BigDecimal::zero(domain.precision);
    let mut last_mag: Option<BigDecimal> = None;
    let mut truncated = false;
    for j in 1..=depth {
        if 2 * j - 1 > jet.order() {
            break;
        }
        let mut w = table.values[j - 1].clone()
            / BigRational::from_integer(BigInt::from(2 * j as i64));
        if j % 2 == 0 {
            w = -w;
        }
        if let Some(extra) = &weights.factor {
            w *= extra(j);
        }
        let term = jet.coeffs[2 * j - 1].mul(&domain.from_rational(&w));
        let mag = term.abs();
        if let Some(prev) = &last_mag {
            if mag.cmp_value(prev) == std::cmp::Ordering::Greater {
                truncated = true;
                break;
            }
        }
        tail = tail.add(&term);
        smallest = mag.clone();
        last_mag = Some(mag);
        used += 1;
    }
    Ok((tail, used, smallest, truncated))
}

enum TailBase {
    IntegralPlusHalf,
    HalfOnly,
}

struct TailWeights {
    base: TailBase,
    /// Extra rational factor per index j (used by the alternating variant).
    factor: Option<Box<dyn Fn(usize) -> BigRational>>,
}

/// The constant C with sum_{k=1}^{x} f(k) = C + F(x) + f(x)/2 + corrections,
/// found by summing to the pivot directly and subtracting the expansion
/// there.
pub fn euler_maclaurin_constant(
    f: &AnalyticTerm,
    pivot: u64,
    depth: usize,
    precision: usize,
) -> Result<SummationResult, SummationError> {
    let domain = DecimalDomain::new(precision);
    if pivot < 1 {
        return Err(SummationError::OutOfRange("pivot must be at least 1".into()));
    }
    let mut direct = domain.zero();
    for k in 1..=pivot {
        direct = direct.add(&f.eval(&domain, &BigDecimal::from_int(k as i64, precision))?);
    }
    let x = BigDecimal::from_int(pivot as i64, precision);
    let weights = TailWeights {
        base: TailBase::IntegralPlusHalf,
        factor: None,
    };
    let (tail, used, smallest, truncated) = asymptotic_tail(f, &domain, &x, depth, &weights)?;
    if used == 0 && depth > 0 {
        return Err(SummationError::ImmediateDivergence);
    }
    Ok(SummationResult {
        value: direct.sub(&tail),
        terms_summed_directly: pivot,
        correction_terms_used: used,
        smallest_term: smallest,
        truncated_at_growth: truncated,
    })
}

/// sum_{k=1}^{x} f(k) = C + expansion at x, for x at or beyond the pivot
/// used to calibrate C.
pub fn euler_maclaurin_sum(
    f: &AnalyticTerm,
    x: &BigDecimal,
    constant: &SummationResult,
    depth: usize,
    precision: usize,
) -> Result<SummationResult, SummationError> {
    let domain = DecimalDomain::new(precision);
    let weights = TailWeights {
        base: TailBase::IntegralPlusHalf,
        factor: None,
    };
    let (tail, used, smallest, truncated) = asymptotic_tail(f, &domain, x, depth, &weights)?;
    Ok(SummationResult {
        value: constant.value.add(&tail),
        terms_summed_directly: constant.terms_summed_directly,
        correction_terms_used: used,
        smallest_term: smallest,
        truncated_at_growth: truncated,
    })
}

/// Value of the infinite alternating series sum (-1)^(k-1) f(k), calibrated
/// at the pivot x: the alternating expansion's constant term.
///
/// The correction weights are (2^(2j)-1) times the plain ones, and the
/// bracket enters with sign +1 at even pivots, -1 at odd ones.
pub fn boole_alternating_sum(
    f: &AnalyticTerm,
    x: u64,
    depth: usize,
    precision: usize,
) -> Result<SummationResult, SummationError> {
    let domain = DecimalDomain::new(precision);
    if x < 1 {
        return Err(SummationError::OutOfRange("pivot must be at least 1".into()));
    }
    let mut partial = domain.zero();
    for k in 1..=x {
        let v = f.eval(&domain, &BigDecimal::from_int(k as i64, precision))?;
        partial = if k % 2 == 1 { partial.add(&v) } else { partial.sub(&v) };
    }
    let xd = BigDecimal::from_int(x as i64, precision);
    let weights = TailWeights {
        base: TailBase::HalfOnly,
        factor: Some(Box::new(|j: usize| {
            BigRational::from_integer((BigInt::one() << (2 * j)) - BigInt::one())
        })),
    };
    let (bracket, used, smallest, truncated) =
        asymptotic_tail(f, &domain, &xd, depth, &weights)?;
    if used == 0 && depth > 0 {
        return Err(SummationError::ImmediateDivergence);
    }
    let value = if x % 2 == 0 {
        partial.add(&bracket)
    } else {
        partial.sub(&bracket)
    };
    Ok(SummationResult {
        value,
        terms_summed_directly: x,
        correction_terms_used: used,
        smallest_term: smallest,
        truncated_at_growth: truncated,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    Natural,
    Common,
}

/// sum_{k=1}^{x} log k by Stirling's expansion:
/// (1/2) log 2 pi + (x + 1/2) log x - x + corrections.
pub fn log_gamma_sum(
    x: &BigDecimal,
    base: LogBase,
    depth: usize,
    precision: usize,
) -> Result<SummationResult, SummationError> {
    if !x.is_positive() {
        return Err(SummationError::OutOfRange(
            "log-factorial needs a positive argument".into(),
        ));
    }
    let wp = precision + 10;
    let domain = DecimalDomain::new(wp);
    let two_pi = BigDecimal::pi(wp).mul_int(2);
    let half = BigDecimal::parse("0.5", wp).unwrap();
    let mut s = two_pi
        .ln()
        .mul(&half)
        .add(&x.round_to(wp).add(&half).mul(&x.round_to(wp).ln()))
        .sub(&x.round_to(wp));

    let table = bernoulli(depth);
    let mut used = 0usize;
    let mut smallest = BigDecimal::zero(wp);
    let mut last_mag: Option<BigDecimal> = None;
    let mut truncated = false;
    let inv_x = domain.one().div(&x.round_to(wp));
    let inv_x2 = inv_x.mul(&inv_x);
    let mut p = inv_x.clone();
    for j in 1..=depth {
        let w = &table.values[j - 1]
            / BigRational::from_integer(BigInt::from((2 * j as i64 - 1) * 2 * j as i64));
        let mut term = p.mul(&domain.from_rational(&w));
        if j % 2 == 0 {
            term = term.neg();
        }
        let mag = term.abs();
        if let Some(prev) = &last_mag {
            if mag.cmp_value(prev) == std::cmp::Ordering::Greater {
                truncated = true;
                break;
            }
        }
        s = s.add(&term);
        smallest = mag.clone();
        last_mag = Some(mag);
        used += 1;
        p = p.mul(&inv_x2);
    }

    if base == LogBase::Common {
        let log10_e = domain.one().div(&BigDecimal::ln10(wp));
        s = s.mul(&log10_e);
        smallest = smallest.mul(&log10_e).abs();
    }
    Ok(SummationResult {
        value: s.round_to(precision),
        terms_summed_directly: 0,
        correction_terms_used: used,
        smallest_term: smallest,
        truncated_at_growth: truncated,
    })
}

/// Pi from the arctangent-sum expansion at integer n.
#[derive(Debug, Clone)]
pub struct PiArccot {
    /// Expansion value before the exponentially small correction.
    pub provisional: BigDecimal,
    /// The final correction 4 pi / (e^(2 n pi) - 1).
    pub correction: BigDecimal,
    /// provisional - correction.
    pub value: BigDecimal,
}

/// Pi via s = sum_{k=1}^{n} 1/(n^2 + k^2):
/// pi = 4 n s + 1/n + sum_j (-1)^(j+1) b_{2j-1} / ((2j-1) 2^(2j-2) n^(4j-2)),
/// then minus 4 pi / (e^(2 n pi) - 1) using the provisional value.
///
/// `depth` counts correction terms; the weights use the odd-indexed entries
/// of the Bernoulli table.
pub fn pi_via_arccot(n: u32, depth: usize, precision: usize) -> Result<PiArccot, SummationError> {
    if n < 2 {
        return Err(SummationError::OutOfRange(
            "the arctangent pivot needs n >= 2".into(),
        ));
    }
    let wp = precision + 10;
    let mut s = BigRational::zero();
    let n2 = BigInt::from(n) * BigInt::from(n);
    for k in 1..=n {
        let d = &n2 + BigInt::from(k) * BigInt::from(k);
        s += BigRational::new(BigInt::one(), d);
    }
    let table = bernoulli(2 * depth);
    let mut pi = to_decimal(&s, wp).mul_int(4 * n as i64);
    pi = pi.add(&BigDecimal::one(wp).div_int(n as i64));
    for j in 1..=depth {
        // Bernoulli index 2j-1 (1-based table), weight 1/((2j-1) 2^(2j-2) n^(4j-2)).
        let b = &table.values[2 * j - 2];
        let denom = BigRational::from_integer(
            BigInt::from(2 * j as i64 - 1)
                * (BigInt::one() << (2 * j - 2))
                * BigInt::from(n).pow(4 * j as u32 - 2),
        );
        let w = b / denom;
        let term = to_decimal(&w, wp);
        pi = if j % 2 == 1 { pi.add(&term) } else { pi.sub(&term) };
    }
    let provisional = pi.clone();
    let e2npi = pi.mul_int(2 * n as i64).exp();
    let correction = pi
        .mul_int(4)
        .div(&e2npi.sub(&BigDecimal::one(wp)));
    let value = provisional.sub(&correction);
    Ok(PiArccot {
        provisional: provisional.round_to(precision),
        correction: correction.round_to(precision),
        value: value.round_to(precision),
    })
}

/// log of 2^m over the middle binomial coefficient of (1+1)^m, by the
/// asymptotic expansion; returns the ratio itself.
pub fn middle_binomial_ratio(
    m: u32,
    depth: usize,
    precision: usize,
) -> Result<BigDecimal, SummationError> {
    if m < 2 || m % 2 != 0 {
        return Err(SummationError::OutOfRange(
            "the middle coefficient needs even m >= 2".into(),
        ));
    }
    let wp = precision + 10;
    let domain = DecimalDomain::new(wp);
    // (1/2) ln(m pi / 2) + sum_k (-1)^(k+1) (2^(2k)-1) b_k / ((2k-1)(2k) m^(2k-1))
    let half_m_pi = BigDecimal::pi(wp).mul_int(m as i64).div_int(2);
    let mut lg = half_m_pi.ln().div_int(2);
    let table = bernoulli(depth);
    let inv_m = domain.one().div_int(m as i64);
    let inv_m2 = inv_m.mul(&inv_m);
    let mut p = inv_m.clone();
    let mut last_mag: Option<BigDecimal> = None;
    for k in 1..=depth {
        let w = BigRational::from_integer((BigInt::one() << (2 * k)) - BigInt::one())
            * &table.values[k - 1]
            / BigRational::from_integer(BigInt::from((2 * k as i64 - 1) * 2 * k as i64));
        let mut term = p.mul(&domain.from_rational(&w));
        if k % 2 == 0 {
            term = term.neg();
        }
        let mag = term.abs();
        if let Some(prev) = &last_mag {
            if mag.cmp_value(prev) == std::cmp::Ordering::Greater {
                break;
            }
        }
        lg = lg.add(&term);
        last_mag = Some(mag);
        p = p.mul(&inv_m2);
    }
    Ok(lg.exp().round_to(precision))
}

/// zeta(s) for integer s >= 2 via calibration on 1/k^s.
pub fn zeta_value(
    s: u32,
    pivot: u64,
    depth: usize,
    precision: usize,
) -> Result<SummationResult, SummationError> {
    if s < 2 {
        return Err(SummationError::OutOfRange(
            "zeta summation needs exponent >= 2".into(),
        ));
    }
    euler_maclaurin_constant(&AnalyticTerm::zeta(s), pivot, depth, precision)
}

/// Euler's constant: the calibration constant of the harmonic series.
pub fn gamma_constant(
    pivot: u64,
    depth: usize,
    precision: usize,
) -> Result<SummationResult, SummationError> {
    euler_maclaurin_constant(&AnalyticTerm::harmonic(), pivot, depth, precision)
}

/// Harmonic number H_x for large x via the calibrated expansion.
pub fn harmonic_number(
    x: u64,
    pivot: u64,
    depth: usize,
    precision: usize,
) -> Result<SummationResult, SummationError> {
    let c = gamma_constant(pivot, depth, precision)?;
    euler_maclaurin_sum(
        &AnalyticTerm::harmonic(),
        &BigDecimal::from_int(x as i64, precision),
        &c,
        depth,
        precision,
    )
}
