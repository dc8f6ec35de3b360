//! Fractional-index values of summatory and product sequences.
//!
//! A sequence defined termwise, S(x) = f(1) + ... + f(x), extends to
//! non-integer x by subtracting the offset copy of its series from the
//! series itself: S(w) = sum_k [f(k) - f(k+w)] when the terms vanish.
//! When the terms level off or drift, binomial-weighted forward
//! differences restore convergence. The surviving pairwise series is
//! summed directly over a prefix and finished with the asymptotic
//! correction expansion anchored there. Products interpolate the same
//! way in the log domain.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::decimal::BigDecimal;
use crate::numbers::bernoulli;
use crate::poly::Polynomial;
use crate::rational::{binomial, binomial_rational, factorial, pow_rational, to_decimal};
use crate::series::{ps_elem, DecimalDomain, ElemFn, SeriesDomain, SeriesError, TruncatedSeries};
use crate::summation::{
    euler_maclaurin_constant, gamma_constant, log_gamma_sum, AnalyticTerm, LogBase,
    SummationError,
};

#[derive(Debug, Error)]
pub enum InterpolationError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error(
        "tail class check failed: |difference of order {order}| was {near} at k={near_k} \
         and {far} at k={far_k}"
    )]
    TailClassMismatch {
        order: usize,
        near_k: usize,
        far_k: usize,
        near: String,
        far: String,
    },
    #[error("pole encountered: {0}")]
    Pole(String),
    #[error("correction budget exhausted: smallest correction {smallest} is above {target}")]
    BudgetExhausted { smallest: String, target: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Summation(#[from] SummationError),
}

/// How the tail of the term sequence settles. Declared by the caller and
/// verified numerically before any value is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailClass {
    /// f(k) -> 0.
    Vanishing,
    /// Forward differences of f vanish; f itself may approach a nonzero
    /// level or drift slowly.
    VanishingDifferences,
    /// Second differences vanish; f may drift linearly.
    VanishingSecondDifferences,
}

impl TailClass {
    fn order(self) -> usize {
        match self {
            TailClass::Vanishing => 0,
            TailClass::VanishingDifferences => 1,
            TailClass::VanishingSecondDifferences => 2,
        }
    }
}

/// Term sequence whose partial sums or products are interpolated.
#[derive(Debug, Clone)]
pub enum SequenceFamily {
    /// f(k) = 1 / (a + (k-1) b)^n with a, b > 0, handled through exact
    /// shifted reciprocal-power series.
    ReciprocalPower { a: BigRational, b: BigRational, n: u32 },
    /// Partial sums f(1) + ... + f(x) of an analytic term.
    PartialSum(AnalyticTerm),
    /// Partial products f(1) ... f(x); every factor must stay positive.
    Product(AnalyticTerm),
}

/// A fractional-index evaluation request.
#[derive(Debug, Clone)]
pub struct InterpolationQuery {
    pub family: SequenceFamily,
    /// Index at which the sequence is read off; any nonnegative rational.
    pub omega: BigRational,
    pub tail_class: TailClass,
    /// Terms summed directly before the accelerated tail takes over.
    pub prefix: usize,
    /// Correction budget for the tail expansion.
    pub depth: usize,
}

impl InterpolationQuery {
    pub fn new(family: SequenceFamily, omega: BigRational, tail_class: TailClass) -> Self {
        InterpolationQuery {
            family,
            omega,
            tail_class,
            prefix: 50,
            depth: 30,
        }
    }
}

/// Splits the index into its whole part and a fractional remainder in
/// [0, 1). The whole part is peeled off by the recurrence S(m + w) =
/// S(w) + f(w+1) + ... + f(w+m), so only the remainder needs the series.
fn split_index(omega: &BigRational) -> Result<(u64, BigRational), InterpolationError> {
    if omega.is_negative() {
        return Err(InterpolationError::InvalidQuery(format!(
            "index must be nonnegative, got {}",
            crate::rational::format_rational(omega)
        )));
    }
    let whole = omega.floor();
    let frac = omega - &whole;
    let w = whole
        .to_integer()
        .to_u64()
        .filter(|w| *w <= 1_000_000)
        .ok_or_else(|| InterpolationError::InvalidQuery("index too large".into()))?;
    Ok((w, frac))
}

/// sum_{k >= 0} [(k+c)^{-n} - (k+d)^{-n}] for positive rational c, d.
///
/// Direct terms through k = prefix stay exact; the tail from the anchor
/// onward is the correction expansion whose coefficients are jets of the
/// pair, also exact. Only the n = 1 integral contributes a logarithm.
fn pairwise_reciprocal_sum(
    n: u32,
    c: &BigRational,
    d: &BigRational,
    prefix: usize,
    depth: usize,
    wp: usize,
    target_exp: usize,
) -> Result<BigDecimal, InterpolationError> {
    let e = -(n as i32);
    let mut head = BigRational::zero();
    for k in 0..=prefix {
        let kr = BigRational::from_integer(BigInt::from(k));
        head += pow_rational(&(c + &kr), e) - pow_rational(&(d + &kr), e);
    }
    let kr = BigRational::from_integer(BigInt::from(prefix));
    let xc = c + &kr;
    let xd = d + &kr;
    let mut log_part = BigDecimal::zero(wp);
    if n == 1 {
        log_part = to_decimal(&(&xd / &xc), wp).ln();
    } else {
        head += (pow_rational(&xc, e + 1) - pow_rational(&xd, e + 1))
            / BigRational::from_integer(BigInt::from(n - 1));
    }
    head -= (pow_rational(&xc, e) - pow_rational(&xd, e))
        / BigRational::from_integer(BigInt::from(2));
    // Correction j uses the odd jet coefficient of the pair at the anchor:
    // (-1)^m C(n-1+m, m) [xc^{-n-m} - xd^{-n-m}] with m = 2j - 1.
    let table = bernoulli(depth);
    let floor = BigRational::new(BigInt::one(), BigInt::from(10).pow((wp + 2) as u32));
    let target = BigRational::new(BigInt::one(), BigInt::from(10).pow(target_exp as u32));
    let mut prev: Option<BigRational> = None;
    let mut smallest: Option<BigRational> = None;
    let mut settled = false;
    for j in 1..=depth {
        let m = 2 * j as u32 - 1;
        let w = BigRational::from_integer(binomial((n - 1 + m) as u64, m as u64));
        let cm = -(w * (pow_rational(&xc, e - m as i32) - pow_rational(&xd, e - m as i32)));
        let mut term = &table.values[j - 1] * cm / BigRational::from_integer(BigInt::from(2 * j));
        if j % 2 == 0 {
            term = -term;
        }
        let mag = term.abs();
        if let Some(p) = &prev {
            if mag > *p {
                break;
            }
        }
        head -= term;
        smallest = Some(mag.clone());
        if mag <= floor {
            settled = true;
            break;
        }
        prev = Some(mag);
    }
    if !settled {
        if let Some(s) = smallest {
            if s > target {
                return Err(InterpolationError::BudgetExhausted {
                    smallest: format!("{}", to_decimal(&s, 6)),
                    target: format!("1e-{}", target_exp),
                });
            }
        }
    }
    Ok(to_decimal(&head, wp).add(&log_part))
}

/// Term viewed either directly or through its logarithm (for products).
enum Kernel<'a> {
    Plain(&'a AnalyticTerm),
    LogOf(&'a AnalyticTerm),
}

impl Kernel<'_> {
    fn eval(&self, dom: &DecimalDomain, x: &BigDecimal) -> Result<BigDecimal, InterpolationError> {
        match self {
            Kernel::Plain(t) => Ok(t.eval(dom, x)?),
            Kernel::LogOf(t) => {
                let v = t.eval(dom, x)?;
                if !v.is_positive() {
                    return Err(InterpolationError::Pole(format!(
                        "factor at index {} is not positive",
                        x
                    )));
                }
                Ok(v.ln())
            }
        }
    }

    fn jet(
        &self,
        dom: &DecimalDomain,
        x: &BigDecimal,
        order: usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, InterpolationError> {
        match self {
            Kernel::Plain(t) => Ok(t.jet(dom, x, order)?),
            Kernel::LogOf(t) => {
                let j = t.jet(dom, x, order)?;
                if !j.coeffs[0].is_positive() {
                    return Err(InterpolationError::Pole(format!(
                        "factor at index {} is not positive",
                        x
                    )));
                }
                Ok(ps_elem(dom, ElemFn::Log, &j)?)
            }
        }
    }
}

fn difference_magnitude(
    kernel: &Kernel,
    order: usize,
    k: i64,
    dom: &DecimalDomain,
) -> Result<BigDecimal, InterpolationError> {
    let mut vals: Vec<BigDecimal> = Vec::with_capacity(order + 1);
    for i in 0..=order as i64 {
        vals.push(kernel.eval(dom, &BigDecimal::from_int(k + i, dom.precision))?);
    }
    for _ in 0..order {
        for i in 0..vals.len() - 1 {
            vals[i] = vals[i + 1].sub(&vals[i]);
        }
        vals.pop();
    }
    Ok(vals[0].abs())
}

/// The declared class is trusted only after the relevant difference
/// order is seen to decay: doubling k must shrink it to at most 3/4,
/// which polynomially vanishing tails pass with room while anything
/// clinging to a nonzero level fails.
fn verify_tail_class(
    kernel: &Kernel,
    order: usize,
    prefix: usize,
    dom: &DecimalDomain,
) -> Result<(), InterpolationError> {
    let near = difference_magnitude(kernel, order, prefix as i64, dom)?;
    let far = difference_magnitude(kernel, order, 2 * prefix as i64, dom)?;
    if near.is_zero() && far.is_zero() {
        return Ok(());
    }
    let bound = near.mul_int(3).div_int(4);
    if far.cmp_value(&bound) == Ordering::Greater {
        return Err(InterpolationError::TailClassMismatch {
            order,
            near_k: prefix,
            far_k: 2 * prefix,
            near: format!("{}", near),
            far: format!("{}", far),
        });
    }
    Ok(())
}

/// Interpolated sum for a general term with tail class `order`:
///
///   S(w) = sum_{k<=K} [f(k) - f(k+w)]
///        + sum_{j<=order} C(w,j) Delta^{j-1} f(K+1)
///        + sum_{k>K} h(k),
///
/// where h(k) = f(k) - f(k+w) + sum_j C(w,j) Delta^j f(k) vanishes fast
/// enough for the correction expansion. Its integral reduces to pieces
/// over [K, K+w] and [K, K+1] that come straight from the jets.
fn class_sum(
    kernel: &Kernel,
    order: usize,
    omega: &BigRational,
    prefix: usize,
    depth: usize,
    wp: usize,
    target_exp: usize,
) -> Result<BigDecimal, InterpolationError> {
    let dom = DecimalDomain::new(wp);
    verify_tail_class(kernel, order, prefix, &dom)?;
    let omega_dec = to_decimal(omega, wp);
    let kk = prefix as i64;

    let mut total = dom.zero();
    for k in 1..=kk {
        let x = BigDecimal::from_int(k, wp);
        let a = kernel.eval(&dom, &x)?;
        let b = kernel.eval(&dom, &x.add(&omega_dec))?;
        total = total.add(&a.sub(&b));
    }

    if order > 0 {
        let mut row: Vec<BigDecimal> = Vec::with_capacity(order);
        for i in 0..order as i64 {
            row.push(kernel.eval(&dom, &BigDecimal::from_int(kk + 1 + i, wp))?);
        }
        for j in 1..=order {
            let w = binomial_rational(omega, j);
            total = total.add(&row[0].mul(&dom.from_rational(&w)));
            for i in 0..row.len() - 1 {
                row[i] = row[i + 1].sub(&row[i]);
            }
            row.pop();
        }
    }

    let digits_per = (prefix as f64).log10().max(0.5);
    let m = (2 * depth + 1).max((wp as f64 / digits_per).ceil() as usize + 8);
    let anchor = BigDecimal::from_int(kk, wp);
    let j0 = kernel.jet(&dom, &anchor, m)?.coeffs;
    let jw = kernel.jet(&dom, &anchor.add(&omega_dec), m)?.coeffs;
    let mut shifts: Vec<Vec<BigDecimal>> = Vec::new();
    for i in 1..=order as i64 {
        shifts.push(kernel.jet(&dom, &BigDecimal::from_int(kk + i, wp), m)?.coeffs);
    }

    // Definite integral of a jet over [anchor, anchor + width].
    let integrate = |coeffs: &[BigDecimal], width: &BigDecimal| -> BigDecimal {
        let mut pw = width.clone();
        let mut s = dom.zero();
        for (mi, cm) in coeffs.iter().enumerate() {
            s = s.add(&cm.mul(&pw).div_int(mi as i64 + 1));
            pw = pw.mul(width);
        }
        s
    };

    let one = BigDecimal::one(wp);
    let mut integral = integrate(&j0, &omega_dec);
    if order >= 1 {
        let i_k = integrate(&j0, &one);
        integral = integral.sub(&i_k.mul(&dom.from_rational(omega)));
        if order >= 2 {
            let i_k1 = integrate(&shifts[0], &one);
            let w2 = dom.from_rational(&binomial_rational(omega, 2));
            integral = integral.sub(&i_k1.sub(&i_k).mul(&w2));
        }
    }

    let mut h: Vec<BigDecimal> = j0.iter().zip(jw.iter()).map(|(a, b)| a.sub(b)).collect();
    if order >= 1 {
        let w1 = dom.from_rational(omega);
        for (i, hm) in h.iter_mut().enumerate() {
            *hm = hm.add(&shifts[0][i].sub(&j0[i]).mul(&w1));
        }
        if order >= 2 {
            let w2 = dom.from_rational(&binomial_rational(omega, 2));
            for (i, hm) in h.iter_mut().enumerate() {
                let d2 = shifts[1][i].sub(&shifts[0][i].mul_int(2)).add(&j0[i]);
                *hm = hm.add(&d2.mul(&w2));
            }
        }
    }

    let mut tail = integral.sub(&h[0].div_int(2));
    let table = bernoulli(depth);
    let floor = BigDecimal::parse(&format!("1e-{}", wp + 2), wp).unwrap();
    let target = BigDecimal::parse(&format!("1e-{}", target_exp), wp).unwrap();
    let mut prev: Option<BigDecimal> = None;
    let mut smallest: Option<BigDecimal> = None;
    let mut settled = false;
    for j in 1..=depth {
        if 2 * j - 1 >= h.len() {
            break;
        }
        let w = &table.values[j - 1] / BigRational::from_integer(BigInt::from(2 * j));
        let mut term = h[2 * j - 1].mul(&dom.from_rational(&w));
        if j % 2 == 0 {
            term = term.neg();
        }
        let mag = term.abs();
        if let Some(p) = &prev {
            if mag.cmp_value(p) == Ordering::Greater {
                break;
            }
        }
        tail = tail.sub(&term);
        smallest = Some(mag.clone());
        if mag.cmp_value(&floor) != Ordering::Greater {
            settled = true;
            break;
        }
        prev = Some(mag);
    }
    if !settled {
        if let Some(s) = smallest {
            if s.cmp_value(&target) == Ordering::Greater {
                return Err(InterpolationError::BudgetExhausted {
                    smallest: format!("{}", s.round_to(6)),
                    target: format!("1e-{}", target_exp),
                });
            }
        }
    }
    Ok(total.add(&tail))
}

/// Value of the summatory or product sequence at the query's index.
pub fn interp_sum(
    query: &InterpolationQuery,
    precision: usize,
) -> Result<BigDecimal, InterpolationError> {
    let wp = precision + 12;
    let dom = DecimalDomain::new(wp);
    let depth = query.depth.max(1);
    let prefix = query.prefix.max(4);
    let target_exp = precision + 2;
    let (whole, frac) = split_index(&query.omega)?;
    match &query.family {
        SequenceFamily::ReciprocalPower { a, b, n } => {
            if *n == 0 {
                return Err(InterpolationError::InvalidQuery(
                    "reciprocal-power exponent must be at least 1".into(),
                ));
            }
            if !a.is_positive() || !b.is_positive() {
                return Err(InterpolationError::InvalidQuery(
                    "the progression needs a positive start and step".into(),
                ));
            }
            let e = -(*n as i32);
            let mut exact = BigRational::zero();
            for j in 1..=whole {
                let steps = &frac + BigRational::from_integer(BigInt::from(j - 1));
                exact += pow_rational(&(a + steps * b), e);
            }
            let mut value = to_decimal(&exact, wp);
            if !frac.is_zero() {
                let q = a / b;
                let scale = to_decimal(&pow_rational(b, e), wp);
                let pw = pairwise_reciprocal_sum(
                    *n,
                    &q,
                    &(&q + &frac),
                    prefix,
                    depth,
                    wp,
                    target_exp,
                )?;
                value = value.add(&pw.mul(&scale));
            }
            Ok(value.round_to(precision))
        }
        SequenceFamily::PartialSum(term) => {
            let kernel = Kernel::Plain(term);
            let mut value = dom.zero();
            for j in 1..=whole {
                let x = to_decimal(&(&frac + BigRational::from_integer(BigInt::from(j))), wp);
                value = value.add(&kernel.eval(&dom, &x)?);
            }
            if !frac.is_zero() {
                let s = class_sum(
                    &kernel,
                    query.tail_class.order(),
                    &frac,
                    prefix,
                    depth,
                    wp,
                    target_exp,
                )?;
                value = value.add(&s);
            }
            Ok(value.round_to(precision))
        }
        SequenceFamily::Product(term) => {
            let kernel = Kernel::LogOf(term);
            let mut lnp = dom.zero();
            for j in 1..=whole {
                let x = to_decimal(&(&frac + BigRational::from_integer(BigInt::from(j))), wp);
                lnp = lnp.add(&kernel.eval(&dom, &x)?);
            }
            if !frac.is_zero() {
                let s = class_sum(
                    &kernel,
                    query.tail_class.order(),
                    &frac,
                    prefix,
                    depth,
                    wp,
                    target_exp,
                )?;
                lnp = lnp.add(&s);
            }
            Ok(lnp.exp().round_to(precision))
        }
    }
}

/// Partial product f(1) ... f(x) read off at a fractional index.
pub fn interp_product(
    term: &AnalyticTerm,
    tail_class: TailClass,
    omega: &BigRational,
    precision: usize,
) -> Result<BigDecimal, InterpolationError> {
    interp_sum(
        &InterpolationQuery::new(
            SequenceFamily::Product(term.clone()),
            omega.clone(),
            tail_class,
        ),
        precision,
    )
}

/// The running-index factors k: partial products are the factorials.
pub fn factorial_term() -> AnalyticTerm {
    AnalyticTerm::Power(1)
}

/// The odd numbers 2k - 1 as factors.
pub fn odd_number_term() -> AnalyticTerm {
    AnalyticTerm::Rational {
        num: Polynomial::from_ints(&[-1, 2]),
        den: Polynomial::from_ints(&[1]),
    }
}

/// Factors (a + (k-1)c) / (b + (k-1)c), tending to 1.
pub fn ratio_term(a: i64, b: i64, c: i64) -> AnalyticTerm {
    AnalyticTerm::Rational {
        num: Polynomial::from_ints(&[a - c, c]),
        den: Polynomial::from_ints(&[b - c, c]),
    }
}

/// Rapidly converging rearrangement of the half-index sum for the family
/// 1/a + 1/(a+b) + ...: the value at index one half equals
///
///   1/(2a) + (1/2) b / (2a (2a+b)) + ...,
///
/// where each term carries an extra factor k b / (2 (2a + k b)), so the
/// series gains a binary digit per term even though the family itself
/// converges only like 1/k.
pub fn halfindex_fast(
    a: &BigRational,
    b: &BigRational,
    terms: usize,
    precision: usize,
) -> Result<BigDecimal, InterpolationError> {
    if !a.is_positive() || !b.is_positive() {
        return Err(InterpolationError::InvalidQuery(
            "the progression needs a positive start and step".into(),
        ));
    }
    if terms == 0 {
        return Err(InterpolationError::InvalidQuery(
            "at least one term is required".into(),
        ));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let two_a = a * &two;
    let mut t = two_a.recip();
    let mut sum = t.clone();
    for k in 1..terms {
        let kb = b * BigRational::from_integer(BigInt::from(k));
        t = t * &kb / ((&two_a + &kb) * &two);
        sum += &t;
    }
    Ok(to_decimal(&sum, precision))
}

/// Generalized binomial coefficient C(n, w) for rational arguments,
/// interpolating Pascal's rows along w. Exact whenever w or n - w is a
/// nonnegative integer, zero when w - n is a positive integer, decimal
/// through log-factorial asymptotics otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum BinomialValue {
    Exact(BigRational),
    Approx(BigDecimal),
}

pub fn interp_binomial(
    n: &BigRational,
    omega: &BigRational,
    precision: usize,
) -> Result<BinomialValue, InterpolationError> {
    let diff = n - omega;
    if omega.is_integer() {
        let m = omega.to_integer();
        return if m.is_negative() {
            Ok(BinomialValue::Exact(BigRational::zero()))
        } else {
            Ok(BinomialValue::Exact(falling_over_factorial(n, &m)?))
        };
    }
    if diff.is_integer() {
        let m = diff.to_integer();
        return if m.is_negative() {
            Ok(BinomialValue::Exact(BigRational::zero()))
        } else {
            Ok(BinomialValue::Exact(falling_over_factorial(n, &m)?))
        };
    }
    let neg_one = -BigRational::one();
    if *n <= neg_one || *omega <= neg_one || diff <= neg_one {
        return Err(InterpolationError::InvalidQuery(
            "arguments must keep n, w and n - w above -1 outside the exact cases".into(),
        ));
    }
    let wp = precision + 12;
    let v = lngamma1p(n, wp)?
        .sub(&lngamma1p(omega, wp)?)
        .sub(&lngamma1p(&diff, wp)?)
        .exp();
    Ok(BinomialValue::Approx(v.round_to(precision)))
}

/// n (n-1) ... (n-m+1) / m! for integer m >= 0.
fn falling_over_factorial(n: &BigRational, m: &BigInt) -> Result<BigRational, InterpolationError> {
    let m = m
        .to_usize()
        .filter(|m| *m <= 100_000)
        .ok_or_else(|| InterpolationError::InvalidQuery("integer part too large".into()))?;
    let mut prod = BigRational::one();
    for i in 0..m {
        prod *= n - BigRational::from_integer(BigInt::from(i));
    }
    Ok(prod / BigRational::from_integer(factorial(m)))
}

/// log of the interpolated factorial, log Gamma(1 + z), for rational
/// z > -1: shift upward until the asymptotic log-factorial expansion has
/// settled, then strip the shifted factors.
fn lngamma1p(z: &BigRational, wp: usize) -> Result<BigDecimal, InterpolationError> {
    if *z <= -BigRational::one() {
        return Err(InterpolationError::Pole(
            "log-factorial needs an argument above -1".into(),
        ));
    }
    let y_min = (2 * wp) / 5 + 4;
    let fl = z.floor().to_integer().to_i64().unwrap_or(0);
    let shift = if fl >= y_min as i64 {
        0
    } else {
        (y_min as i64 - fl) as u64
    };
    let arg = z + BigRational::from_integer(BigInt::from(shift));
    let st = log_gamma_sum(&to_decimal(&arg, wp), LogBase::Natural, wp, wp)?;
    let mut v = st.value;
    for j in 1..=shift {
        v = v.sub(&to_decimal(&(z + BigRational::from_integer(BigInt::from(j))), wp).ln());
    }
    Ok(v)
}

/// m-th derivative of the interpolated harmonic numbers at x > -1:
/// (-1)^{m+1} m! sum_{k >= 1} (x + k)^{-(m+1)}.
pub fn harmonic_derivative(
    x: &BigDecimal,
    order: u32,
    precision: usize,
) -> Result<BigDecimal, InterpolationError> {
    if order == 0 {
        return Err(InterpolationError::InvalidQuery(
            "derivative order must be at least 1".into(),
        ));
    }
    let wp = precision + 10;
    let q = x.to_rational() + BigRational::one();
    if !q.is_positive() {
        return Err(InterpolationError::Pole(
            "argument must exceed -1".into(),
        ));
    }
    let term = AnalyticTerm::ReciprocalPower {
        a: q,
        b: BigRational::one(),
        n: order + 1,
    };
    let pivot = ((2 * wp) / 5).max(16) as u64;
    let z = euler_maclaurin_constant(&term, pivot, wp, wp)?;
    let mut v = z
        .value
        .mul(&BigDecimal::from_bigint(factorial(order as usize), wp));
    if order % 2 == 0 {
        v = v.neg();
    }
    Ok(v.round_to(precision))
}

/// Derivative of the interpolated log-factorial at x > -1, equal to
/// minus Euler's constant plus sum_{k >= 1} x / (k (k + x)).
pub fn digamma_shifted(x: &BigDecimal, precision: usize) -> Result<BigDecimal, InterpolationError> {
    let wp = precision + 10;
    let xr = x.to_rational();
    let shifted = &xr + BigRational::one();
    if !shifted.is_positive() {
        return Err(InterpolationError::Pole(
            "argument must exceed -1".into(),
        ));
    }
    let g = gamma_constant(50, wp, wp)?;
    let mut v = g.value.neg();
    if !xr.is_zero() {
        let pw = pairwise_reciprocal_sum(
            1,
            &BigRational::one(),
            &shifted,
            50,
            wp,
            wp,
            precision + 2,
        )?;
        v = v.add(&pw);
    }
    Ok(v.round_to(precision))
}
