//! Series transformations that trade terms for convergence: the
//! difference transform for alternating series, its staged re-application
//! for violently divergent ones, closed forms for power series whose
//! coefficients have eventually-constant differences, and the
//! factorial-denominator transform.
//!
//! Divergent inputs are accepted throughout. A report never claims
//! convergence; it states the transformed value and leaves interpretation
//! (the value of the generating expression) to the caller.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::decimal::BigDecimal;
use crate::differences::build_table;
use crate::rational::{factorial, pow_rational, to_decimal};
use crate::series::RationalDomain;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AccelerationError {
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("stage {stage} takes {requested} terms but only {remaining} remain")]
    StageExhausted {
        stage: usize,
        requested: usize,
        remaining: usize,
    },
    #[error("coefficient differences do not become constant within the supplied window")]
    UnstableDifferences,
    #[error("the closed form divides by 1 - x; x = 1 has no infinite-series value")]
    UnitArgument,
}

/// Outcome of a transform: the new terms, their running sums, and where
/// the transform was re-applied along the way.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformReport {
    pub input_terms_used: usize,
    /// Signed terms of the transformed series, in summation order.
    pub transformed_terms: Vec<BigRational>,
    pub partial_sums: Vec<BigRational>,
    pub value: BigRational,
    /// Indices into `transformed_terms` where the tail was re-differenced.
    pub restarts: Vec<usize>,
}

impl TransformReport {
    fn new(input_terms_used: usize, terms: Vec<BigRational>, restarts: Vec<usize>) -> Self {
        let mut partial_sums = Vec::with_capacity(terms.len());
        let mut acc = BigRational::zero();
        for t in &terms {
            acc += t;
            partial_sums.push(acc.clone());
        }
        TransformReport {
            input_terms_used,
            transformed_terms: terms,
            value: acc,
            partial_sums,
            restarts,
        }
    }

    pub fn value_decimal(&self, precision: usize) -> BigDecimal {
        to_decimal(&self.value, precision)
    }
}

// Difference transform of a signed alternating tail s0 + s1 + s2 + ...,
// read as sigma * (b0 - b1 + b2 - ...): the result terms are
// sigma * (-1)^k Delta^k b0 / 2^(k+1).
fn transform_signed(tail: &[BigRational]) -> Vec<BigRational> {
    let sigma_negative = tail[0].is_negative();
    let b: Vec<BigRational> = tail
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if (i % 2 == 1) ^ sigma_negative {
                -s
            } else {
                s.clone()
            }
        })
        .collect();
    let table = build_table(&RationalDomain, &b, b.len() - 1)
        .expect("depth bounded by length");
    let mut out = Vec::with_capacity(b.len());
    let mut denom = BigInt::from(2);
    for k in 0..b.len() {
        let mut t = table.leading(k) / BigRational::from_integer(denom.clone());
        if (k % 2 == 1) ^ sigma_negative {
            t = -t;
        }
        out.push(t);
        denom *= 2;
    }
    out
}

/// Transform of the alternating series a0 - a1 + a2 - ... built from the
/// leading term magnitudes: the result sums Delta^k a0 / 2^(k+1) with
/// alternating signs. Terminates exactly when the differences do.
pub fn euler_transform(
    a: &[BigRational],
    depth: usize,
) -> Result<TransformReport, AccelerationError> {
    if a.len() < depth + 1 {
        return Err(AccelerationError::InsufficientTerms {
            needed: depth + 1,
            got: a.len(),
        });
    }
    let signed: Vec<BigRational> = a[..depth + 1]
        .iter()
        .enumerate()
        .map(|(i, t)| if i % 2 == 1 { -t } else { t.clone() })
        .collect();
    Ok(TransformReport::new(
        depth + 1,
        transform_signed(&signed),
        Vec::new(),
    ))
}

/// One step of a staged pipeline: bank `take` leading terms of the current
/// transformed series, then optionally re-difference what is left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stage {
    pub take: usize,
    pub transform_rest: bool,
}

/// Staged re-application of the difference transform. The input magnitudes
/// are transformed once up front; each stage then moves `take` terms into
/// the banked sum and, if asked, re-differences the remaining tail. Terms
/// never taken by any stage do not contribute.
pub fn euler_transform_staged(
    a: &[BigRational],
    stages: &[Stage],
) -> Result<TransformReport, AccelerationError> {
    if a.is_empty() {
        return Err(AccelerationError::InsufficientTerms { needed: 1, got: 0 });
    }
    let signed: Vec<BigRational> = a
        .iter()
        .enumerate()
        .map(|(i, t)| if i % 2 == 1 { -t } else { t.clone() })
        .collect();
    let mut current = transform_signed(&signed);
    let mut banked: Vec<BigRational> = Vec::new();
    let mut restarts = Vec::new();
    for (i, stage) in stages.iter().enumerate() {
        if stage.take > current.len() {
            return Err(AccelerationError::StageExhausted {
                stage: i,
                requested: stage.take,
                remaining: current.len(),
            });
        }
        banked.extend(current.drain(..stage.take));
        if stage.transform_rest && !current.is_empty() {
            current = transform_signed(&current);
            restarts.push(banked.len());
        }
    }
    Ok(TransformReport::new(a.len(), banked, restarts))
}

/// Value at x of sum a_k x^k (k from 1), for coefficient sequences whose
/// differences become constant at some order d:
/// sum over j of Delta^j a1 * x^(j+1) / (1-x)^(j+1).
///
/// With `upper` = n the sum stops at a_n x^n; the tail is removed by the
/// same closed form anchored at a_(n+1), whose leading differences follow
/// from the constancy of row d. At x = -1 the infinite value agrees with
/// the difference transform of the corresponding alternating series.
pub fn polynomial_coefficient_sum(
    coeffs: &[BigRational],
    x: &BigRational,
    upper: Option<u64>,
) -> Result<BigRational, AccelerationError> {
    if coeffs.len() < 2 {
        return Err(AccelerationError::UnstableDifferences);
    }
    let table = build_table(&RationalDomain, coeffs, coeffs.len() - 1)
        .expect("depth bounded by length");
    let d = (0..coeffs.len())
        .find(|&k| {
            let row = table.row(k);
            row.len() >= 2 && row.iter().all(|v| v == &row[0])
        })
        .ok_or(AccelerationError::UnstableDifferences)?;
    let head: Vec<BigRational> = (0..=d).map(|j| table.leading(j).clone()).collect();

    let advance = |col: &mut Vec<BigRational>| {
        // Delta^j at the next position is Delta^j + Delta^(j+1) here; the
        // top row d is constant, so the column extends indefinitely.
        for j in 0..d {
            let step = col[j + 1].clone();
            col[j] += step;
        }
    };

    if x.is_one() {
        let n = upper.ok_or(AccelerationError::UnitArgument)?;
        let mut col = head;
        let mut acc = BigRational::zero();
        for _ in 0..n {
            acc += &col[0];
            advance(&mut col);
        }
        return Ok(acc);
    }

    let closed = |lead: &[BigRational]| {
        let ratio = x / (BigRational::one() - x);
        let mut factor = ratio.clone();
        let mut acc = BigRational::zero();
        for l in lead {
            acc += l * &factor;
            factor *= &ratio;
        }
        acc
    };

    let infinite = closed(&head);
    match upper {
        None => Ok(infinite),
        Some(n) => {
            let mut col = head;
            for _ in 0..n {
                advance(&mut col);
            }
            Ok(infinite - closed(&col) * pow_rational(x, n as i32))
        }
    }
}

/// Transform with factorial denominators: from the magnitudes of
/// a0 - a1 + a2 - ..., build staged rows R0 = a,
/// R(m+1)[j] = R(m)[j+1] - (m+1) R(m)[j], and sum
/// (-1)^m R(m)[0] / (m+2)!.
pub fn factorial_transform(
    a: &[BigRational],
    depth: usize,
) -> Result<TransformReport, AccelerationError> {
    if a.len() < depth + 1 {
        return Err(AccelerationError::InsufficientTerms {
            needed: depth + 1,
            got: a.len(),
        });
    }
    let mut row: Vec<BigRational> = a[..depth + 1].to_vec();
    let mut terms = Vec::with_capacity(depth + 1);
    for m in 0..=depth {
        let mut t = &row[0] / BigRational::from_integer(factorial(m + 2));
        if m % 2 == 1 {
            t = -t;
        }
        terms.push(t);
        if m < depth {
            let weight = BigRational::from_integer(BigInt::from(m as i64 + 1));
            row = row
                .windows(2)
                .map(|w| &w[1] - &w[0] * &weight)
                .collect();
        }
    }
    Ok(TransformReport::new(depth + 1, terms, Vec::new()))
}
