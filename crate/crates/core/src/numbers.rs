//! Bernoulli, tangent, and secant number tables, and the classical
//! power series (tan, cot, sec, csc) built from them.
//!
//! Conventions: `bernoulli(count).values[k]` is the absolute value of the
//! (2k+2)-th Bernoulli number in the modern indexing, i.e. the sequence
//! 1/6, 1/30, 1/42, 1/30, 5/66, ... All tables are exact rationals or
//! integers; nothing here rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::{binomial, factorial};

/// First `count` Bernoulli values together with their odd-multiple companions.
///
/// `scaled[k] = values[k] * (2k+3)`, the form in which the values enter the
/// alternating arctangent tail and several other summation formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    pub values: Vec<BigRational>,
    pub scaled: Vec<BigRational>,
}

impl BernoulliTable {
    /// Value multiplying pi^(2n) in the even zeta closed form, for n = k+1.
    pub fn value(&self, k: usize) -> &BigRational {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Absolute Bernoulli values via the quadratic recurrence
/// (2n+1) * b_n = sum_{j=1}^{n-1} C(2n, 2j) * b_j * b_{n-j},  b_1 = 1/6.
pub fn bernoulli(count: usize) -> BernoulliTable {
    let mut values: Vec<BigRational> = Vec::with_capacity(count);
    if count >= 1 {
        values.push(BigRational::new(BigInt::from(1), BigInt::from(6)));
    }
    for n in 2..=count {
        let mut sum = BigRational::zero();
        for j in 1..n {
            let c = BigRational::from_integer(binomial(2 * n as u64, 2 * j as u64));
            sum += c * &values[j - 1] * &values[n - j - 1];
        }
        values.push(sum / big(2 * n as i64 + 1));
    }
    let scaled = values
        .iter()
        .enumerate()
        .map(|(k, v)| v * big(2 * k as i64 + 3))
        .collect();
    BernoulliTable { values, scaled }
}

/// Tangent numbers 1, 1, 3, 17, 155, 2073, ...
///
/// Computed by the direct convolution
/// (2n-1) * A_n = (1/2) * sum_{j=1}^{n-1} C(2n, 2j) * A_j * A_{n-j},  A_1 = 1,
/// and independently as 2 * (2^(2n) - 1) * b_n from the Bernoulli table.
/// The two constructions must agree, and every entry must be an integer;
/// both facts are asserted.
pub fn tangent_numbers(count: usize) -> Vec<BigInt> {
    let mut conv: Vec<BigInt> = Vec::with_capacity(count);
    if count >= 1 {
        conv.push(BigInt::one());
    }
    for n in 2..=count {
        let mut sum = BigInt::zero();
        for j in 1..n {
            sum += binomial(2 * n as u64, 2 * j as u64) * &conv[j - 1] * &conv[n - j - 1];
        }
        let twice = BigInt::from(2 * (2 * n as i64 - 1));
        let (q, r) = num_integer::Integer::div_rem(&sum, &twice);
        assert!(r.is_zero(), "tangent convolution must divide exactly");
        conv.push(q);
    }

    let table = bernoulli(count);
    for (k, b) in table.values.iter().enumerate() {
        let n = k + 1;
        let factor = (BigInt::one() << (2 * n)) - BigInt::one();
        let via_bernoulli = b * BigRational::from_integer(factor * BigInt::from(2));
        assert!(
            via_bernoulli.is_integer(),
            "2*(2^(2n)-1)*b_n must clear the denominator"
        );
        assert_eq!(
            via_bernoulli.to_integer(),
            conv[k],
            "tangent number paths disagree at n = {n}"
        );
    }
    conv
}

/// Secant numbers 1, 1, 5, 61, 1385, 50521, ... (the listing starts at the
/// constant term of sec x, so `secant_numbers(1)` is `[1]`).
///
/// Recurrence: e_n = sum_{j=1}^{n} (-1)^(j+1) * C(2n, 2j) * e_{n-j},  e_0 = 1.
pub fn secant_numbers(count: usize) -> Vec<BigInt> {
    let mut values: Vec<BigInt> = Vec::with_capacity(count);
    if count >= 1 {
        values.push(BigInt::one());
    }
    for n in 1..count {
        let mut sum = BigInt::zero();
        for j in 1..=n {
            let term = binomial(2 * n as u64, 2 * j as u64) * &values[n - j];
            if j % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        values.push(sum);
    }
    values
}

/// Rational r with zeta(2n) = r * pi^(2n): r = 2^(2n-1) * b_n / (2n)!.
///
/// First values: 1/6, 1/90, 1/945.
pub fn zeta_even_coefficient(n: usize) -> BigRational {
    assert!(n >= 1, "even zeta values start at 2n = 2");
    let table = bernoulli(n);
    let power = BigInt::one() << (2 * n - 1);
    table.values[n - 1].clone() * BigRational::new(power, factorial(2 * n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    Tan,
    Cot,
    Sec,
    Csc,
}

/// Leading coefficients of one of the four classical trigonometric series.
///
/// For tan, cot, and csc the coefficients multiply x, x^3, x^5, ...;
/// for sec they multiply 1, x^2, x^4, ... Cot and csc additionally carry a
/// leading 1/x term, flagged by `has_pole`, and their listed coefficients
/// are the corrections that follow it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigSeries {
    pub kind: TrigKind,
    pub has_pole: bool,
    pub coefficients: Vec<BigRational>,
}

/// The first `count` coefficients of the requested series, all exact.
///
/// tan x  =        x + x^3/3 + 2x^5/15 + ...
/// cot x  =  1/x - x/3 - x^3/45 - 2x^5/945 - ...
/// sec x  =    1 + x^2/2 + 5x^4/24 + 61x^6/720 + ...
/// csc x  =  1/x + x/6 + 7x^3/360 + 31x^5/15120 + ...
pub fn trig_series(kind: TrigKind, count: usize) -> TrigSeries {
    let coefficients = match kind {
        TrigKind::Tan => {
            let tangent = tangent_numbers(count);
            (1..=count)
                .map(|k| {
                    let num = BigInt::from(&tangent[k - 1] << (2 * k - 1));
                    BigRational::new(num, factorial(2 * k))
                })
                .collect()
        }
        TrigKind::Cot => {
            let table = bernoulli(count);
            (1..=count)
                .map(|k| {
                    let num = BigInt::one() << (2 * k);
                    -&table.values[k - 1] * BigRational::new(num, factorial(2 * k))
                })
                .collect()
        }
        TrigKind::Sec => {
            let secant = secant_numbers(count);
            (0..count)
                .map(|k| BigRational::new(secant[k].clone(), factorial(2 * k)))
                .collect()
        }
        TrigKind::Csc => {
            let table = bernoulli(count);
            (1..=count)
                .map(|k| {
                    let num = ((BigInt::one() << (2 * k - 1)) - BigInt::one()) * BigInt::from(2);
                    &table.values[k - 1] * BigRational::new(num, factorial(2 * k))
                })
                .collect()
        }
    };
    TrigSeries {
        kind,
        has_pole: matches!(kind, TrigKind::Cot | TrigKind::Csc),
        coefficients,
    }
}
