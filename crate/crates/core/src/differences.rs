//! Forward-difference tables and the bridge from derivative jets to finite
//! differences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::rational::binomial;
use crate::series::{SeriesDomain, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DifferenceError {
    #[error("table depth {depth} needs a sequence longer than {len}")]
    DepthTooLarge { depth: usize, len: usize },
    #[error("jet of order {order} cannot produce a difference of order {k}")]
    InsufficientOrder { order: usize, k: usize },
}

/// Triangular table: row 0 is the sequence, row k its k-th forward
/// differences (one entry shorter per row).
#[derive(Debug, Clone, PartialEq)]
pub struct DifferenceTable<D: SeriesDomain> {
    pub step: D::Elem,
    pub rows: Vec<Vec<D::Elem>>,
}

impl<D: SeriesDomain> DifferenceTable<D> {
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, k: usize) -> &[D::Elem] {
        &self.rows[k]
    }

    /// First entry of row k: the k-th difference at the sequence start.
    pub fn leading(&self, k: usize) -> &D::Elem {
        &self.rows[k][0]
    }
}

pub fn build_table<D: SeriesDomain>(
    domain: &D,
    seq: &[D::Elem],
    depth: usize,
) -> Result<DifferenceTable<D>, DifferenceError> {
    if depth >= seq.len() {
        return Err(DifferenceError::DepthTooLarge {
            depth,
            len: seq.len(),
        });
    }
    let mut rows: Vec<Vec<D::Elem>> = Vec::with_capacity(depth + 1);
    rows.push(seq.to_vec());
    for k in 1..=depth {
        let prev = &rows[k - 1];
        let row = prev
            .windows(2)
            .map(|w| domain.sub(&w[1], &w[0]))
            .collect();
        rows.push(row);
    }
    Ok(DifferenceTable {
        step: domain.one(),
        rows,
    })
}

// sum_{i=0}^{k} (-1)^(k-i) C(k,i) i^m: the m-th power moment of the k-th
// difference operator. Zero for m < k, k! at m = k.
fn difference_moment(k: usize, m: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=k {
        let mut term = binomial(k as u64, i as u64);
        term *= BigInt::from(i as u64).pow(m as u32);
        if (k - i) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// k-th forward difference with step omega of the function whose Taylor jet
/// at the base point is given: Delta^k y = sum_m c_m omega^m M(k, m).
///
/// Exact when the jet captures the whole function (polynomials); otherwise
/// the jet order bounds the accuracy and should comfortably exceed k.
pub fn difference_from_jet<D: SeriesDomain>(
    domain: &D,
    jet: &TruncatedSeries<D>,
    omega: &D::Elem,
    k: usize,
) -> Result<D::Elem, DifferenceError> {
    if jet.order() < k {
        return Err(DifferenceError::InsufficientOrder {
            order: jet.order(),
            k,
        });
    }
    if k == 0 {
        return Ok(jet.coeffs[0].clone());
    }
    let mut omega_pow = domain.one();
    for _ in 0..k {
        omega_pow = domain.mul(&omega_pow, omega);
    }
    let mut acc = domain.zero();
    for m in k..=jet.order() {
        let moment = difference_moment(k, m);
        if !moment.is_zero() {
            let factor = domain.from_rational(&BigRational::from_integer(moment));
            acc = domain.add(&acc, &domain.mul(&jet.coeffs[m], &domain.mul(&omega_pow, &factor)));
        }
        omega_pow = domain.mul(&omega_pow, omega);
    }
    Ok(acc)
}
