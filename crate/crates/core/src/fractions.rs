//! Partial-fraction resolution for rational functions with known factors.
//!
//! The denominator's factors are given, not discovered: simple linear factors
//! `f + gx`, repeated linear factors `(f + gx)^n`, and quadratic factors
//! `f^2 - 2fg cos(phi) x + g^2 x^2` standing for a conjugate root pair of
//! modulus f/g. Numerators come from evaluation and differentiation at the
//! root, never from solving a linear system, so every result over rational
//! data is exact. Whole families of binomial denominators (`f^n +- g^n x^n`
//! and their quadratic-in-`x^n` relatives) can be decomposed in one call
//! because their factors are known in closed form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::decimal::BigDecimal;
use crate::poly::Polynomial;
use crate::rational::to_decimal;
use crate::series::{ps_div, RationalDomain, SeriesError, TruncatedSeries};

#[derive(Debug, Error)]
pub enum FractionError {
    #[error("factor does not divide the denominator")]
    NotADivisor,
    #[error("factor multiplicity mismatch: {0}")]
    WrongMultiplicity(String),
    #[error("degenerate angle: cos phi = +-1 collapses the conjugate pair")]
    DegenerateAngle,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// An angle carried exactly as a rational multiple of pi.
///
/// The multiple is reduced into [0, 2), which changes nothing downstream:
/// every formula in this module is even in the angle, so only cos(phi) and
/// sin(phi)^2 matter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Angle {
    multiple: BigRational,
}

impl Angle {
    pub fn new(multiple: BigRational) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut m = multiple % &two;
        if m.is_negative() {
            m += &two;
        }
        Angle { multiple: m }
    }

    /// The reduced coefficient t of the angle t*pi, in [0, 2).
    pub fn pi_multiple(&self) -> &BigRational {
        &self.multiple
    }

    /// True when the angle is an integer multiple of pi (cos phi = +-1).
    pub fn is_degenerate(&self) -> bool {
        self.multiple.is_integer()
    }

    /// Exact cosine for the few multiples of pi where it is rational:
    /// denominators 1, 2 and 3 are the only ones possible.
    pub fn cos_rational(&self) -> Option<BigRational> {
        let num = self.multiple.numer();
        let den = self.multiple.denom();
        let half = |n: i64| Some(BigRational::new(BigInt::from(n), BigInt::from(2)));
        if *den == BigInt::one() {
            return if num.is_zero() {
                Some(BigRational::one())
            } else {
                Some(-BigRational::one())
            };
        }
        if *den == BigInt::from(2) {
            return Some(BigRational::zero());
        }
        if *den == BigInt::from(3) {
            // num is one of 1, 2, 4, 5 after reduction into [0, 2)
            return if *num == BigInt::one() || *num == BigInt::from(5) {
                half(1)
            } else {
                half(-1)
            };
        }
        None
    }

    /// (cos phi, sin phi) at the given precision.
    pub fn cos_sin_decimal(&self, precision: usize) -> (BigDecimal, BigDecimal) {
        let wp = precision + 8;
        let theta = BigDecimal::pi(wp).mul(&to_decimal(&self.multiple, wp));
        let (sin, cos) = theta.sin_cos();
        (cos.round_to(precision), sin.round_to(precision))
    }
}

/// A declared factor of the denominator.
#[derive(Clone, Debug, PartialEq)]
pub enum FactorSpec {
    /// (f + g x)^power
    Linear {
        f: BigRational,
        g: BigRational,
        power: usize,
    },
    /// (f^2 - 2 f g cos(angle) x + g^2 x^2)^power
    Trinomial {
        f: BigRational,
        g: BigRational,
        angle: Angle,
        power: usize,
    },
}

impl FactorSpec {
    pub fn linear(f: BigRational, g: BigRational) -> Result<Self, FractionError> {
        Self::linear_power(f, g, 1)
    }

    pub fn linear_power(
        f: BigRational,
        g: BigRational,
        power: usize,
    ) -> Result<Self, FractionError> {
        if g.is_zero() {
            return Err(FractionError::InvalidInput(
                "linear factor needs a nonzero x coefficient".into(),
            ));
        }
        if power == 0 {
            return Err(FractionError::InvalidInput("factor power must be >= 1".into()));
        }
        Ok(FactorSpec::Linear { f, g, power })
    }

    pub fn trinomial(f: BigRational, g: BigRational, angle: Angle) -> Result<Self, FractionError> {
        Self::trinomial_power(f, g, angle, 1)
    }

    pub fn trinomial_power(
        f: BigRational,
        g: BigRational,
        angle: Angle,
        power: usize,
    ) -> Result<Self, FractionError> {
        if f.is_zero() || g.is_zero() {
            return Err(FractionError::InvalidInput(
                "trinomial factor needs nonzero f and g".into(),
            ));
        }
        if power == 0 {
            return Err(FractionError::InvalidInput("factor power must be >= 1".into()));
        }
        if angle.is_degenerate() {
            return Err(FractionError::DegenerateAngle);
        }
        Ok(FactorSpec::Trinomial { f, g, angle, power })
    }

    /// The factor expanded to a polynomial, including its power. None when
    /// the trinomial's cosine is irrational.
    pub fn polynomial(&self) -> Option<Polynomial> {
        let base = self.base_polynomial()?;
        let mut out = Polynomial::one();
        for _ in 0..self.power() {
            out = out.mul(&base);
        }
        Some(out)
    }

    pub fn power(&self) -> usize {
        match self {
            FactorSpec::Linear { power, .. } | FactorSpec::Trinomial { power, .. } => *power,
        }
    }

    fn base_polynomial(&self) -> Option<Polynomial> {
        match self {
            FactorSpec::Linear { f, g, .. } => Some(Polynomial::new(vec![f.clone(), g.clone()])),
            FactorSpec::Trinomial { f, g, angle, .. } => {
                let c = angle.cos_rational()?;
                let minus_two = BigRational::from_integer(BigInt::from(-2));
                Some(Polynomial::new(vec![f * f, minus_two * f * g * c, g * g]))
            }
        }
    }
}

/// Numerators attached to one factor.
#[derive(Clone, Debug)]
pub enum Numerators {
    /// Entry k sits over (f + gx)^(n-k); a simple factor is a ladder of one.
    Ladder(Vec<BigRational>),
    /// constant + linear * x over the trinomial, exact cosine case.
    TrinomialExact {
        constant: BigRational,
        linear: BigRational,
    },
    /// constant + linear * x at working precision, irrational cosine case.
    TrinomialDecimal {
        constant: BigDecimal,
        linear: BigDecimal,
    },
}

#[derive(Clone, Debug)]
pub struct PartialFraction {
    pub factor: FactorSpec,
    pub numerators: Numerators,
}

impl PartialFraction {
    /// Numeric value of this fraction at x, using x's precision. The caller
    /// keeps x away from the factor's roots.
    pub fn evaluate(&self, x: &BigDecimal) -> BigDecimal {
        let p = x.precision();
        match (&self.factor, &self.numerators) {
            (FactorSpec::Linear { f, g, power }, Numerators::Ladder(nums)) => {
                let lin = to_decimal(f, p).add(&to_decimal(g, p).mul(x));
                let mut sum = BigDecimal::zero(p);
                for (k, num) in nums.iter().enumerate() {
                    let mut den = BigDecimal::one(p);
                    for _ in 0..(power - k) {
                        den = den.mul(&lin);
                    }
                    sum = sum.add(&to_decimal(num, p).div(&den));
                }
                sum
            }
            (FactorSpec::Trinomial { f, g, angle, .. }, nums) => {
                let (constant, linear) = match nums {
                    Numerators::TrinomialExact { constant, linear } => {
                        (to_decimal(constant, p), to_decimal(linear, p))
                    }
                    Numerators::TrinomialDecimal { constant, linear } => {
                        (constant.round_to(p), linear.round_to(p))
                    }
                    Numerators::Ladder(_) => unreachable!("trinomial factor with ladder"),
                };
                let (cos, _) = angle.cos_sin_decimal(p);
                let fd = to_decimal(f, p);
                let gd = to_decimal(g, p);
                let den = fd
                    .mul(&fd)
                    .sub(&fd.mul(&gd).mul(&cos).mul(x).mul_int(2))
                    .add(&gd.mul(&gd).mul(x).mul(x));
                constant.add(&linear.mul(x)).div(&den)
            }
            _ => unreachable!("linear factor with trinomial numerators"),
        }
    }
}

/// A = g * P(x0) / Q'(x0) at the root x0 = -f/g of a simple linear factor.
pub fn simple_fraction(
    p: &Polynomial,
    q: &Polynomial,
    factor: &FactorSpec,
) -> Result<PartialFraction, FractionError> {
    let (f, g) = match factor {
        FactorSpec::Linear { f, g, power: 1 } => (f, g),
        FactorSpec::Linear { .. } => {
            return Err(FractionError::InvalidInput(
                "simple_fraction expects power 1; use repeated_fraction".into(),
            ))
        }
        FactorSpec::Trinomial { .. } => {
            return Err(FractionError::InvalidInput(
                "simple_fraction expects a linear factor".into(),
            ))
        }
    };
    if q.is_zero() {
        return Err(FractionError::InvalidInput("zero denominator".into()));
    }
    let x0 = -(f / g);
    if !q.eval(&x0).is_zero() {
        return Err(FractionError::NotADivisor);
    }
    let slope = q.derivative().eval(&x0);
    if slope.is_zero() {
        return Err(FractionError::WrongMultiplicity(
            "root is repeated; use repeated_fraction".into(),
        ));
    }
    let a = g * &p.eval(&x0) / slope;
    Ok(PartialFraction {
        factor: factor.clone(),
        numerators: Numerators::Ladder(vec![a]),
    })
}

/// Full ladder over (f + gx)^n: with S = Q / (f + gx)^n, entry k is the k-th
/// Taylor coefficient of P/S at the root divided by g^k, sitting over
/// (f + gx)^(n-k).
pub fn repeated_fraction(
    p: &Polynomial,
    q: &Polynomial,
    factor: &FactorSpec,
) -> Result<PartialFraction, FractionError> {
    let (f, g, n) = match factor {
        FactorSpec::Linear { f, g, power } => (f, g, *power),
        FactorSpec::Trinomial { .. } => {
            return Err(FractionError::InvalidInput(
                "repeated_fraction expects a linear factor".into(),
            ))
        }
    };
    if q.is_zero() {
        return Err(FractionError::InvalidInput("zero denominator".into()));
    }
    let lin = Polynomial::new(vec![f.clone(), g.clone()]);
    let mut cofactor = q.clone();
    for _ in 0..n {
        let (quot, rem) = cofactor.divrem(&lin);
        if !rem.is_zero() {
            return Err(FractionError::WrongMultiplicity(format!(
                "factor divides fewer than {n} times"
            )));
        }
        cofactor = quot;
    }
    let x0 = -(f / g);
    if cofactor.eval(&x0).is_zero() {
        return Err(FractionError::WrongMultiplicity(format!(
            "factor divides more than {n} times"
        )));
    }
    let dom = RationalDomain;
    let num = TruncatedSeries::new(BigRational::zero(), p.shift_jet(&x0, n - 1));
    let den = TruncatedSeries::new(BigRational::zero(), cofactor.shift_jet(&x0, n - 1));
    let jet = ps_div(&dom, &num, &den)?;
    let mut ladder = Vec::with_capacity(n);
    let mut gpow = BigRational::one();
    for k in 0..n {
        ladder.push(jet.coeff(&dom, k) / &gpow);
        gpow *= g;
    }
    Ok(PartialFraction {
        factor: factor.clone(),
        numerators: Numerators::Ladder(ladder),
    })
}

/// Cosine and scaled-sine images of a polynomial under x^j -> r^j cos(j phi)
/// and x^j -> r^j sin(j phi), with the sine image divided by sin(phi) so both
/// stay rational. Chebyshev recurrences supply cos(j phi) and
/// sin(j phi)/sin(phi) from c = cos(phi).
fn rational_images(p: &Polynomial, r: &BigRational, c: &BigRational) -> (BigRational, BigRational) {
    let two_c = c + c;
    // (T_j, T_{j+1}) and (U_{j-1}, U_j), advanced together
    let mut t = (BigRational::one(), c.clone());
    let mut u = (BigRational::zero(), BigRational::one());
    let mut power = BigRational::one();
    let mut cos_img = BigRational::zero();
    let mut sin_img = BigRational::zero();
    for coeff in p.coeffs() {
        if !coeff.is_zero() {
            let scaled = coeff * &power;
            cos_img += &scaled * &t.0;
            sin_img += &scaled * &u.0;
        }
        t = (t.1.clone(), &two_c * &t.1 - &t.0);
        u = (u.1.clone(), &two_c * &u.1 - &u.0);
        power *= r;
    }
    (cos_img, sin_img)
}

/// Same images in decimal, plus a magnitude anchor for divisor tolerance.
fn decimal_images(
    p: &Polynomial,
    r: &BigDecimal,
    cos: &BigDecimal,
    sin: &BigDecimal,
    wp: usize,
) -> (BigDecimal, BigDecimal, BigDecimal) {
    let mut cos_j = BigDecimal::one(wp);
    let mut sin_j = BigDecimal::zero(wp);
    let mut power = BigDecimal::one(wp);
    let mut cos_img = BigDecimal::zero(wp);
    let mut sin_img = BigDecimal::zero(wp);
    let mut anchor = BigDecimal::one(wp);
    for coeff in p.coeffs() {
        if !coeff.is_zero() {
            let scaled = to_decimal(coeff, wp).mul(&power);
            cos_img = cos_img.add(&scaled.mul(&cos_j));
            sin_img = sin_img.add(&scaled.mul(&sin_j));
            anchor = anchor.add(&scaled.abs());
        }
        let next_cos = cos_j.mul(cos).sub(&sin_j.mul(sin));
        let next_sin = sin_j.mul(cos).add(&cos_j.mul(sin));
        cos_j = next_cos;
        sin_j = next_sin;
        power = power.mul(r);
    }
    (cos_img, sin_img, anchor)
}

/// Numerator pair (constant + linear*x) over a quadratic factor, from the
/// cosine/sine images of P and Q' at the conjugate roots. Exact when
/// cos(phi) is rational, otherwise computed at `precision` digits.
pub fn trinomial_fraction(
    p: &Polynomial,
    q: &Polynomial,
    factor: &FactorSpec,
    precision: usize,
) -> Result<PartialFraction, FractionError> {
    let (f, g, angle) = match factor {
        FactorSpec::Trinomial {
            f,
            g,
            angle,
            power: 1,
        } => (f, g, angle),
        FactorSpec::Trinomial { .. } => {
            return Err(FractionError::Unsupported(
                "repeated quadratic factors have no finished resolution rule".into(),
            ))
        }
        FactorSpec::Linear { .. } => {
            return Err(FractionError::InvalidInput(
                "trinomial_fraction expects a quadratic factor".into(),
            ))
        }
    };
    if q.is_zero() {
        return Err(FractionError::InvalidInput("zero denominator".into()));
    }
    let dq = q.derivative();
    let ratio = f / g;
    let two = BigRational::from_integer(BigInt::from(2));

    if let Some(c) = angle.cos_rational() {
        let tri = factor.polynomial().expect("rational cosine expands");
        let (quot, rem) = q.divrem(&tri);
        if !rem.is_zero() {
            return Err(FractionError::NotADivisor);
        }
        let (_, rem2) = quot.divrem(&tri);
        if rem2.is_zero() {
            return Err(FractionError::WrongMultiplicity(
                "quadratic factor divides more than once".into(),
            ));
        }
        let sin_sq = BigRational::one() - &c * &c;
        let (pc, ps) = rational_images(p, &ratio, &c);
        let (qc, qs) = rational_images(&dq, &ratio, &c);
        let d = &qc * &qc + &sin_sq * &qs * &qs;
        debug_assert!(!d.is_zero(), "simple conjugate pair has nonvanishing Q'");
        let dot = &pc * &qc + &sin_sq * &ps * &qs;
        let cross = &pc * &qs - &ps * &qc;
        let linear = &two * g * g * &dot / &d;
        let constant = &two * f * g * (&sin_sq * &cross - &c * &dot) / &d;
        return Ok(PartialFraction {
            factor: factor.clone(),
            numerators: Numerators::TrinomialExact { constant, linear },
        });
    }

    let wp = precision.max(10) + 10;
    let (cos, sin) = angle.cos_sin_decimal(wp);
    let r = to_decimal(&ratio, wp);
    let (q_cos, q_sin, q_anchor) = decimal_images(q, &r, &cos, &sin, wp);
    if !q_cos.negligible_against(&q_anchor, wp - 8) || !q_sin.negligible_against(&q_anchor, wp - 8)
    {
        return Err(FractionError::NotADivisor);
    }
    let (qc, qs, dq_anchor) = decimal_images(&dq, &r, &cos, &sin, wp);
    let d = qc.mul(&qc).add(&qs.mul(&qs));
    if d.negligible_against(&dq_anchor.mul(&dq_anchor), wp - 8) {
        return Err(FractionError::WrongMultiplicity(
            "quadratic factor divides more than once".into(),
        ));
    }
    let (pc, ps, _) = decimal_images(p, &r, &cos, &sin, wp);
    let dot = pc.mul(&qc).add(&ps.mul(&qs));
    let cross = pc.mul(&qs).sub(&ps.mul(&qc));
    let fd = to_decimal(f, wp);
    let gd = to_decimal(g, wp);
    let linear = gd.mul(&gd).mul(&dot).mul_int(2).div(&d);
    let constant = fd
        .mul(&gd)
        .mul(&cross.mul(&sin).sub(&dot.mul(&cos)))
        .mul_int(2)
        .div(&d);
    Ok(PartialFraction {
        factor: factor.clone(),
        numerators: Numerators::TrinomialDecimal {
            constant: constant.round_to(precision),
            linear: linear.round_to(precision),
        },
    })
}

/// A binomial denominator whose factors are known in closed form. Requires
/// f > 0 and g > 0, matching the derivation of the factor lists.
#[derive(Clone, Debug, PartialEq)]
pub enum DenominatorFamily {
    /// f^n + g^n x^n
    SumPower {
        f: BigRational,
        g: BigRational,
        n: u32,
    },
    /// f^n - g^n x^n
    DifferencePower {
        f: BigRational,
        g: BigRational,
        n: u32,
    },
    /// f^2n - 2 f^n g^n cos(omega) x^n + g^2n x^2n, a quadratic in x^n
    TrinomialPower {
        f: BigRational,
        g: BigRational,
        n: u32,
        omega: Angle,
    },
}

fn rational_pow(base: &BigRational, e: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= base;
    }
    out
}

impl DenominatorFamily {
    fn validate(&self) -> Result<(&BigRational, &BigRational, u32), FractionError> {
        let (f, g, n) = match self {
            DenominatorFamily::SumPower { f, g, n }
            | DenominatorFamily::DifferencePower { f, g, n }
            | DenominatorFamily::TrinomialPower { f, g, n, .. } => (f, g, *n),
        };
        if !f.is_positive() || !g.is_positive() {
            return Err(FractionError::InvalidInput(
                "family parameters f and g must be positive".into(),
            ));
        }
        if n == 0 {
            return Err(FractionError::InvalidInput("family exponent must be >= 1".into()));
        }
        Ok((f, g, n))
    }

    /// The denominator as a polynomial.
    pub fn denominator(&self) -> Result<Polynomial, FractionError> {
        let (f, g, n) = self.validate()?;
        match self {
            DenominatorFamily::SumPower { .. } => Ok(Polynomial::constant(rational_pow(f, n))
                .add(&Polynomial::monomial(n as usize, rational_pow(g, n)))),
            DenominatorFamily::DifferencePower { .. } => Ok(Polynomial::constant(rational_pow(
                f, n,
            ))
            .sub(&Polynomial::monomial(n as usize, rational_pow(g, n)))),
            DenominatorFamily::TrinomialPower { omega, .. } => {
                if omega.is_degenerate() {
                    return Err(FractionError::DegenerateAngle);
                }
                let c = omega.cos_rational().ok_or_else(|| {
                    FractionError::Unsupported(
                        "irrational cos(omega) leaves no exact rational denominator".into(),
                    )
                })?;
                let middle = BigRational::from_integer(BigInt::from(-2))
                    * rational_pow(f, n)
                    * rational_pow(g, n)
                    * c;
                Ok(Polynomial::constant(rational_pow(f, 2 * n))
                    .add(&Polynomial::monomial(n as usize, middle))
                    .add(&Polynomial::monomial(2 * n as usize, rational_pow(g, 2 * n))))
            }
        }
    }

    /// The closed-form factor list: real linear factors first, then one
    /// quadratic per conjugate pair with angles in increasing order.
    pub fn factors(&self) -> Result<Vec<FactorSpec>, FractionError> {
        let (f, g, n) = self.validate()?;
        let angle_of = |num: i64, den: i64| {
            Angle::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
        };
        let mut out = Vec::new();
        match self {
            DenominatorFamily::SumPower { .. } => {
                if n % 2 == 1 {
                    out.push(FactorSpec::linear(f.clone(), g.clone())?);
                }
                let mut k = 1;
                while 2 * k - 1 < n {
                    out.push(FactorSpec::trinomial(
                        f.clone(),
                        g.clone(),
                        angle_of((2 * k - 1) as i64, n as i64),
                    )?);
                    k += 1;
                }
            }
            DenominatorFamily::DifferencePower { .. } => {
                out.push(FactorSpec::linear(f.clone(), -g.clone())?);
                if n % 2 == 0 {
                    out.push(FactorSpec::linear(f.clone(), g.clone())?);
                }
                let mut k = 1;
                while 2 * k < n {
                    out.push(FactorSpec::trinomial(
                        f.clone(),
                        g.clone(),
                        angle_of(2 * k as i64, n as i64),
                    )?);
                    k += 1;
                }
            }
            DenominatorFamily::TrinomialPower { omega, .. } => {
                if omega.is_degenerate() {
                    return Err(FractionError::DegenerateAngle);
                }
                // reduce omega into (0, pi); the family only sees cos(omega)
                let one = BigRational::one();
                let two = BigRational::from_integer(BigInt::from(2));
                let w = if omega.pi_multiple() > &one {
                    &two - omega.pi_multiple()
                } else {
                    omega.pi_multiple().clone()
                };
                let nn = BigRational::from_integer(BigInt::from(n));
                let mut angles = vec![&w / &nn];
                let mut k = 1u32;
                while angles.len() < n as usize {
                    let base = BigRational::from_integer(BigInt::from(2 * k as i64));
                    angles.push((&base - &w) / &nn);
                    if angles.len() < n as usize {
                        angles.push((&base + &w) / &nn);
                    }
                    k += 1;
                }
                for a in angles {
                    out.push(FactorSpec::trinomial(f.clone(), g.clone(), Angle::new(a))?);
                }
            }
        }
        Ok(out)
    }
}

/// A complete decomposition: polynomial part plus one fraction per factor.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub polynomial_part: Polynomial,
    pub fractions: Vec<PartialFraction>,
    pub denominator: Polynomial,
}

impl Decomposition {
    /// Numeric value of the whole right-hand side at x.
    pub fn evaluate(&self, x: &BigDecimal) -> BigDecimal {
        let mut sum = self.polynomial_part.eval_decimal(x);
        for frac in &self.fractions {
            sum = sum.add(&frac.evaluate(x));
        }
        sum
    }
}

/// Decompose P over a family denominator: split off the polynomial part,
/// then resolve one fraction per closed-form factor.
pub fn full_decompose(
    p: &Polynomial,
    family: &DenominatorFamily,
    precision: usize,
) -> Result<Decomposition, FractionError> {
    let q = family.denominator()?;
    let (polynomial_part, remainder) = p.divrem(&q);
    let mut fractions = Vec::new();
    for factor in family.factors()? {
        let pf = match &factor {
            FactorSpec::Linear { .. } => simple_fraction(&remainder, &q, &factor)?,
            FactorSpec::Trinomial { .. } => {
                trinomial_fraction(&remainder, &q, &factor, precision)?
            }
        };
        fractions.push(pf);
    }
    Ok(Decomposition {
        polynomial_part,
        fractions,
        denominator: q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational;

    fn rat(n: i64, d: i64) -> BigRational {
        rational(n, d).unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn angle(n: i64, d: i64) -> Angle {
        Angle::new(rat(n, d))
    }

    fn dec(s: &str, p: usize) -> BigDecimal {
        BigDecimal::parse(s, p).unwrap()
    }

    fn assert_close(a: &BigDecimal, b: &BigDecimal, digits: usize) {
        let diff = a.sub(b).abs();
        assert!(
            diff.negligible_against(&BigDecimal::one(a.precision()), digits),
            "difference {:?} exceeds 1e-{digits}",
            diff
        );
    }

    fn ladder(pf: &PartialFraction) -> &[BigRational] {
        match &pf.numerators {
            Numerators::Ladder(v) => v,
            other => panic!("expected ladder, got {other:?}"),
        }
    }

    fn exact_pair(pf: &PartialFraction) -> (&BigRational, &BigRational) {
        match &pf.numerators {
            Numerators::TrinomialExact { constant, linear } => (constant, linear),
            other => panic!("expected exact pair, got {other:?}"),
        }
    }

    fn decimal_pair(pf: &PartialFraction) -> (&BigDecimal, &BigDecimal) {
        match &pf.numerators {
            Numerators::TrinomialDecimal { constant, linear } => (constant, linear),
            other => panic!("expected decimal pair, got {other:?}"),
        }
    }

    /// Numerator polynomial of a power-one fraction, for recombination.
    fn numerator_poly(pf: &PartialFraction) -> Polynomial {
        match &pf.numerators {
            Numerators::Ladder(v) => {
                assert_eq!(v.len(), 1);
                Polynomial::constant(v[0].clone())
            }
            Numerators::TrinomialExact { constant, linear } => {
                Polynomial::new(vec![constant.clone(), linear.clone()])
            }
            other => panic!("cannot recombine decimal numerators exactly: {other:?}"),
        }
    }

    /// Exact recombination: polynomial part times Q plus each numerator
    /// times its cofactor must reproduce P.
    fn assert_recombines(p: &Polynomial, decomp: &Decomposition) {
        let mut sum = decomp.polynomial_part.mul(&decomp.denominator);
        for pf in &decomp.fractions {
            let factor_poly = pf.factor.polynomial().expect("exact factor");
            let (cofactor, rem) = decomp.denominator.divrem(&factor_poly);
            assert!(rem.is_zero());
            sum = sum.add(&numerator_poly(pf).mul(&cofactor));
        }
        assert_eq!(&sum, p);
    }

    #[test]
    fn cosine_table_matches_the_rational_angles() {
        let cases = [
            (angle(1, 3), Some(rat(1, 2))),
            (angle(1, 2), Some(int(0))),
            (angle(2, 3), Some(rat(-1, 2))),
            (angle(4, 3), Some(rat(-1, 2))),
            (angle(3, 2), Some(int(0))),
            (angle(5, 3), Some(rat(1, 2))),
            (angle(7, 3), Some(rat(1, 2))),
            (angle(-1, 3), Some(rat(1, 2))),
            (angle(0, 1), Some(int(1))),
            (angle(1, 1), Some(int(-1))),
            (angle(1, 4), None),
            (angle(1, 6), None),
            (angle(2, 5), None),
        ];
        for (a, want) in cases {
            assert_eq!(a.cos_rational(), want, "angle {:?}", a.pi_multiple());
        }
    }

    #[test]
    fn decimal_cosine_agrees_with_the_exact_table() {
        for (n, d) in [(1i64, 3i64), (1, 2), (2, 3), (5, 3)] {
            let a = angle(n, d);
            let (cos, sin) = a.cos_sin_decimal(40);
            let want = to_decimal(&a.cos_rational().unwrap(), 40);
            assert_close(&cos, &want, 38);
            let sin_sq = sin.mul(&sin).add(&cos.mul(&cos));
            assert_close(&sin_sq, &BigDecimal::one(40), 38);
        }
    }

    #[test]
    fn simple_fraction_reference_values() {
        // x^9 / (1 + x^17) at the factor 1 + x
        let pf = simple_fraction(
            &Polynomial::monomial(9, int(1)),
            &Polynomial::constant(int(1)).add(&Polynomial::monomial(17, int(1))),
            &FactorSpec::linear(int(1), int(1)).unwrap(),
        )
        .unwrap();
        assert_eq!(ladder(&pf), &[rat(-1, 17)]);

        // x^m / (1 - x^2n) at 1 - x gives 1/(2n) regardless of m < 2n
        for n in 1..=4u32 {
            for m in 0..2 * n {
                let q = Polynomial::constant(int(1))
                    .sub(&Polynomial::monomial(2 * n as usize, int(1)));
                let pf = simple_fraction(
                    &Polynomial::monomial(m as usize, int(1)),
                    &q,
                    &FactorSpec::linear(int(1), int(-1)).unwrap(),
                )
                .unwrap();
                assert_eq!(ladder(&pf), &[rat(1, 2 * n as i64)]);
            }
        }

        // x^m / (1 - 4x^k + 3x^n) at 1 - x gives 1/(4k - 3n)
        for (m, k, n) in [(5usize, 2usize, 3usize), (2, 1, 2), (0, 3, 2)] {
            let q = Polynomial::constant(int(1))
                .sub(&Polynomial::monomial(k, int(4)))
                .add(&Polynomial::monomial(n, int(3)));
            let pf = simple_fraction(
                &Polynomial::monomial(m, int(1)),
                &q,
                &FactorSpec::linear(int(1), int(-1)).unwrap(),
            )
            .unwrap();
            assert_eq!(ladder(&pf), &[rat(1, 4 * k as i64 - 3 * n as i64)]);
        }
    }

    #[test]
    fn simple_fraction_matches_the_cofactor_route() {
        // Same residue two ways: g*P/Q' at the root versus P/S with S the
        // exact cofactor.
        let cases = [
            (
                Polynomial::from_ints(&[2, 0, 1]),
                Polynomial::from_ints(&[1, -4, 3]),
                int(1),
                int(-1),
            ),
            (
                Polynomial::from_ints(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
                Polynomial::constant(int(1)).add(&Polynomial::monomial(17, int(1))),
                int(1),
                int(1),
            ),
            (
                Polynomial::from_ints(&[5, 3]),
                Polynomial::from_ints(&[6, 11, 6, 1]),
                int(3),
                int(1),
            ),
        ];
        for (p, q, f, g) in cases {
            let factor = FactorSpec::linear(f.clone(), g.clone()).unwrap();
            let pf = simple_fraction(&p, &q, &factor).unwrap();
            let lin = Polynomial::new(vec![f.clone(), g.clone()]);
            let (s, rem) = q.divrem(&lin);
            assert!(rem.is_zero());
            let x0 = -(&f / &g);
            assert_eq!(ladder(&pf)[0], p.eval(&x0) / s.eval(&x0));
        }
    }

    #[test]
    fn simple_fraction_rejects_bad_factors() {
        let q = Polynomial::from_ints(&[1, 0, 1]);
        let factor = FactorSpec::linear(int(1), int(-1)).unwrap();
        assert!(matches!(
            simple_fraction(&Polynomial::one(), &q, &factor),
            Err(FractionError::NotADivisor)
        ));

        // (1-x)^2 (1+x): the root at 1 is repeated
        let q = Polynomial::from_ints(&[1, -1, -1, 1]);
        assert!(matches!(
            simple_fraction(&Polynomial::one(), &q, &factor),
            Err(FractionError::WrongMultiplicity(_))
        ));
    }

    #[test]
    fn repeated_ladder_reference_values() {
        // x^m / (1 - 4x^3 + 3x^4) over (1 - x)^2: ladder 1/6, (4 - 3m)/18
        for m in [0usize, 1, 2, 5] {
            let q = Polynomial::from_ints(&[1, 0, 0, -4, 3]);
            let factor = FactorSpec::linear_power(int(1), int(-1), 2).unwrap();
            let pf = repeated_fraction(&Polynomial::monomial(m, int(1)), &q, &factor).unwrap();
            assert_eq!(
                ladder(&pf),
                &[rat(1, 6), rat(4 - 3 * m as i64, 18)],
                "m = {m}"
            );
        }
    }

    #[test]
    fn repeated_power_one_matches_simple() {
        let q = Polynomial::from_ints(&[3, 6, 1, 2]); // (1+2x)(3+x^2)
        for p in [
            Polynomial::from_ints(&[1]),
            Polynomial::from_ints(&[0, 7, -2]),
            Polynomial::from_ints(&[4, 0, 0, 9]),
        ] {
            let f1 = FactorSpec::linear(int(1), int(2)).unwrap();
            let fn1 = FactorSpec::linear_power(int(1), int(2), 1).unwrap();
            let a = simple_fraction(&p, &q, &f1).unwrap();
            let b = repeated_fraction(&p, &q, &fn1).unwrap();
            assert_eq!(ladder(&a), ladder(&b));
        }
    }

    #[test]
    fn repeated_ladder_recombines_exactly() {
        // Q = (1+2x)^3 (1+x), P arbitrary of smaller degree
        let cube = Polynomial::from_ints(&[1, 2]);
        let q = cube.mul(&cube).mul(&cube).mul(&Polynomial::from_ints(&[1, 1]));
        let p = Polynomial::from_ints(&[5, 2, -3, 7]);

        let factor = FactorSpec::linear_power(int(1), int(2), 3).unwrap();
        let pf = repeated_fraction(&p, &q, &factor).unwrap();
        let simple = simple_fraction(&p, &q, &FactorSpec::linear(int(1), int(1)).unwrap()).unwrap();

        // sum of numerator_k * Q / (1+2x)^(3-k) + A * Q / (1+x)
        let mut sum = Polynomial::zero();
        let nums = ladder(&pf);
        for (k, num) in nums.iter().enumerate() {
            let mut cof = Polynomial::from_ints(&[1, 1]);
            for _ in 0..k {
                cof = cof.mul(&cube);
            }
            sum = sum.add(&cof.scale(num));
        }
        let mut cof = cube.clone();
        cof = cof.mul(&cube).mul(&cube);
        sum = sum.add(&cof.scale(&ladder(&simple)[0]));
        assert_eq!(sum, p);
    }

    #[test]
    fn repeated_fraction_rejects_wrong_multiplicity() {
        let q = Polynomial::from_ints(&[1, -1, -1, 1]); // (1-x)^2 (1+x)
        let p = Polynomial::one();
        let too_many = FactorSpec::linear_power(int(1), int(-1), 3).unwrap();
        assert!(matches!(
            repeated_fraction(&p, &q, &too_many),
            Err(FractionError::WrongMultiplicity(_))
        ));
        let too_few = FactorSpec::linear_power(int(1), int(-1), 1).unwrap();
        assert!(matches!(
            repeated_fraction(&p, &q, &too_few),
            Err(FractionError::WrongMultiplicity(_))
        ));
    }

    #[test]
    fn trinomial_unit_quadratic_is_its_own_numerator() {
        // 1 / (1 + x^2): the whole fraction is already simple
        let q = Polynomial::from_ints(&[1, 0, 1]);
        let factor = FactorSpec::trinomial(int(1), int(1), angle(1, 2)).unwrap();
        let pf = trinomial_fraction(&Polynomial::one(), &q, &factor, 30).unwrap();
        let (constant, linear) = exact_pair(&pf);
        assert_eq!(constant, &int(1));
        assert_eq!(linear, &int(0));
    }

    #[test]
    fn trinomial_exact_pairs_recombine() {
        // factor 4 + 6x + 9x^2 (f=2, g=3, phi = 2pi/3) inside a cubic
        let tri = Polynomial::from_ints(&[4, 6, 9]);
        let rest = Polynomial::from_ints(&[1, 1]);
        let q = tri.mul(&rest);
        let p = Polynomial::one();
        let factor = FactorSpec::trinomial(int(2), int(3), angle(2, 3)).unwrap();
        let pf = trinomial_fraction(&p, &q, &factor, 30).unwrap();
        let (constant, linear) = exact_pair(&pf);
        assert_eq!(constant, &rat(3, 7));
        assert_eq!(linear, &rat(-9, 7));

        // P - (constant + linear x) * cofactor must vanish mod the factor
        let num = Polynomial::new(vec![constant.clone(), linear.clone()]);
        let (_, check) = p.sub(&num.mul(&rest)).divrem(&tri);
        assert!(check.is_zero());

        // phi = pi/3 against a different cofactor
        let tri = Polynomial::from_ints(&[1, -1, 1]);
        let rest = Polynomial::from_ints(&[2, 1]);
        let q = tri.mul(&rest);
        let p = Polynomial::from_ints(&[5, 1]);
        let factor = FactorSpec::trinomial(int(1), int(1), angle(1, 3)).unwrap();
        let pf = trinomial_fraction(&p, &q, &factor, 30).unwrap();
        let (constant, linear) = exact_pair(&pf);
        let num = Polynomial::new(vec![constant.clone(), linear.clone()]);
        let (_, check) = p.sub(&num.mul(&rest)).divrem(&tri);
        assert!(check.is_zero());
    }

    #[test]
    fn trinomial_rejects_non_divisors_and_repeats() {
        let q = Polynomial::from_ints(&[1, 0, 1]);
        let wrong = FactorSpec::trinomial(int(1), int(1), angle(1, 3)).unwrap();
        assert!(matches!(
            trinomial_fraction(&Polynomial::one(), &q, &wrong, 30),
            Err(FractionError::NotADivisor)
        ));

        let sq = q.mul(&q);
        let factor = FactorSpec::trinomial(int(1), int(1), angle(1, 2)).unwrap();
        assert!(matches!(
            trinomial_fraction(&Polynomial::one(), &sq, &factor, 30),
            Err(FractionError::WrongMultiplicity(_))
        ));

        assert!(matches!(
            FactorSpec::trinomial(int(1), int(1), angle(1, 1)),
            Err(FractionError::DegenerateAngle)
        ));

        let repeated = FactorSpec::trinomial_power(int(1), int(1), angle(1, 2), 2).unwrap();
        assert!(matches!(
            trinomial_fraction(&Polynomial::one(), &sq, &repeated, 30),
            Err(FractionError::Unsupported(_))
        ));

        // decimal path: 1 + x^4 is not divisible by the phi = pi/3 factor
        let quartic = Polynomial::from_ints(&[1, 0, 0, 0, 1]);
        let eighth = FactorSpec::trinomial(int(1), int(1), angle(1, 8)).unwrap();
        assert!(matches!(
            trinomial_fraction(&Polynomial::one(), &quartic, &eighth, 30),
            Err(FractionError::NotADivisor)
        ));
    }

    #[test]
    fn trinomial_decimal_quarter_turn() {
        // x / (1 + x^4) over the two factors x^2 -+ sqrt(2) x + 1
        let q = Polynomial::from_ints(&[1, 0, 0, 0, 1]);
        let p = Polynomial::x();
        let sqrt2_over_4 = "0.353553390593273762200422181052";

        let pf = trinomial_fraction(
            &p,
            &q,
            &FactorSpec::trinomial(int(1), int(1), angle(1, 4)).unwrap(),
            30,
        )
        .unwrap();
        let (constant, linear) = decimal_pair(&pf);
        assert_close(constant, &dec(sqrt2_over_4, 30), 28);
        assert!(linear.negligible_against(&BigDecimal::one(30), 28));

        let pf = trinomial_fraction(
            &p,
            &q,
            &FactorSpec::trinomial(int(1), int(1), angle(3, 4)).unwrap(),
            30,
        )
        .unwrap();
        let (constant, linear) = decimal_pair(&pf);
        assert_close(&constant.neg(), &dec(sqrt2_over_4, 30), 28);
        assert!(linear.negligible_against(&BigDecimal::one(30), 28));
    }

    #[test]
    fn trinomial_decimal_fifth_roots() {
        // x^2 / (1 + x^5): both numerator coefficients of the theta = pi/5
        // factor equal (2/5) cos(2 pi/5), both of the 3 pi/5 factor equal
        // -(2/5) cos(pi/5).
        let q = Polynomial::constant(int(1)).add(&Polynomial::monomial(5, int(1)));
        let p = Polynomial::monomial(2, int(1));
        let a = dec("0.123606797749978969640917366873", 30);
        let b = dec("0.323606797749978969640917366873", 30);

        let pf = trinomial_fraction(
            &p,
            &q,
            &FactorSpec::trinomial(int(1), int(1), angle(1, 5)).unwrap(),
            30,
        )
        .unwrap();
        let (constant, linear) = decimal_pair(&pf);
        assert_close(constant, &a, 27);
        assert_close(linear, &a, 27);

        let pf = trinomial_fraction(
            &p,
            &q,
            &FactorSpec::trinomial(int(1), int(1), angle(3, 5)).unwrap(),
            30,
        )
        .unwrap();
        let (constant, linear) = decimal_pair(&pf);
        assert_close(&constant.neg(), &b, 27);
        assert_close(&linear.neg(), &b, 27);
    }

    #[test]
    fn sum_power_family_odd_exponent() {
        // x^2 / (1 + x^5): linear numerator +1/5 at 1 + x, and the whole
        // decomposition re-evaluates to P/Q numerically.
        let p = Polynomial::monomial(2, int(1));
        let family = DenominatorFamily::SumPower {
            f: int(1),
            g: int(1),
            n: 5,
        };
        let decomp = full_decompose(&p, &family, 30).unwrap();
        assert!(decomp.polynomial_part.is_zero());
        assert_eq!(decomp.fractions.len(), 3);
        assert_eq!(ladder(&decomp.fractions[0]), &[rat(1, 5)]);

        for x in [rat(1, 3), rat(-2, 7), rat(9, 5)] {
            let xd = to_decimal(&x, 40);
            let want = p.eval_decimal(&xd).div(&decomp.denominator.eval_decimal(&xd));
            assert_close(&decomp.evaluate(&xd), &want, 26);
        }

        // odd m flips the linear numerator's sign
        let decomp = full_decompose(&Polynomial::monomial(3, int(1)), &family, 30).unwrap();
        assert_eq!(ladder(&decomp.fractions[0]), &[rat(-1, 5)]);
    }

    #[test]
    fn sum_power_family_small_cases() {
        // n = 2: a single exact quadratic
        let family = DenominatorFamily::SumPower {
            f: int(1),
            g: int(1),
            n: 2,
        };
        let decomp = full_decompose(&Polynomial::one(), &family, 30).unwrap();
        assert_eq!(decomp.fractions.len(), 1);
        let (constant, linear) = exact_pair(&decomp.fractions[0]);
        assert_eq!(constant, &int(1));
        assert_eq!(linear, &int(0));

        // n = 1: plain linear factor; equal degrees leave a constant part
        let family = DenominatorFamily::SumPower {
            f: int(2),
            g: int(3),
            n: 1,
        };
        let p = Polynomial::from_ints(&[1, 1]);
        let decomp = full_decompose(&p, &family, 30).unwrap();
        assert_eq!(decomp.polynomial_part, Polynomial::constant(rat(1, 3)));
        assert_eq!(ladder(&decomp.fractions[0]), &[p.eval(&rat(-2, 3))]);
    }

    #[test]
    fn difference_power_family_reference_values() {
        // x^m / (f^n - g^n x^n): numerator over f - gx is 1/(n f^(n-m-1) g^m)
        let family = DenominatorFamily::DifferencePower {
            f: int(2),
            g: int(3),
            n: 5,
        };
        let decomp = full_decompose(&Polynomial::monomial(2, int(1)), &family, 30).unwrap();
        assert_eq!(ladder(&decomp.fractions[0]), &[rat(1, 180)]);

        // 1 / (1 - x^2) = (1/2)/(1 - x) + (1/2)/(1 + x)
        let family = DenominatorFamily::DifferencePower {
            f: int(1),
            g: int(1),
            n: 2,
        };
        let decomp = full_decompose(&Polynomial::one(), &family, 30).unwrap();
        assert_eq!(decomp.fractions.len(), 2);
        assert_eq!(ladder(&decomp.fractions[0]), &[rat(1, 2)]);
        assert_eq!(ladder(&decomp.fractions[1]), &[rat(1, 2)]);
        assert_recombines(&Polynomial::one(), &decomp);
    }

    #[test]
    fn difference_power_even_case_recombines_exactly() {
        // x^3 / (16 - x^4): factors 2 - x, 2 + x, 4 + x^2 are all exact
        let p = Polynomial::monomial(3, int(1));
        let family = DenominatorFamily::DifferencePower {
            f: int(2),
            g: int(1),
            n: 4,
        };
        let decomp = full_decompose(&p, &family, 30).unwrap();
        assert_eq!(decomp.fractions.len(), 3);
        assert_recombines(&p, &decomp);
    }

    #[test]
    fn trinomial_power_family_exact_case() {
        // 1 + x^2 + x^4 = (1 - x + x^2)(1 + x + x^2): omega = 2pi/3, n = 2
        let p = Polynomial::from_ints(&[1, -1, 0, 2]);
        let family = DenominatorFamily::TrinomialPower {
            f: int(1),
            g: int(1),
            n: 2,
            omega: angle(2, 3),
        };
        let decomp = full_decompose(&p, &family, 30).unwrap();
        assert_eq!(
            decomp.denominator,
            Polynomial::from_ints(&[1, 0, 1, 0, 1])
        );
        assert_eq!(decomp.fractions.len(), 2);
        assert_recombines(&p, &decomp);
    }

    #[test]
    fn trinomial_power_family_decimal_case() {
        // x / (1 - x^2 + x^4): omega = pi/3 splits into angles pi/6 and
        // 5pi/6 with numerators +-1/(2 sqrt 3) and no linear part.
        let p = Polynomial::x();
        let family = DenominatorFamily::TrinomialPower {
            f: int(1),
            g: int(1),
            n: 2,
            omega: angle(1, 3),
        };
        let decomp = full_decompose(&p, &family, 30).unwrap();
        assert_eq!(
            decomp.denominator,
            Polynomial::from_ints(&[1, 0, -1, 0, 1])
        );
        let inv_two_sqrt3 = dec("0.288675134594812882254574390251", 30);
        let (c0, l0) = decimal_pair(&decomp.fractions[0]);
        let (c1, l1) = decimal_pair(&decomp.fractions[1]);
        assert_close(c0, &inv_two_sqrt3, 27);
        assert_close(&c1.neg(), &inv_two_sqrt3, 27);
        assert!(l0.negligible_against(&BigDecimal::one(30), 27));
        assert!(l1.negligible_against(&BigDecimal::one(30), 27));

        for x in [rat(2, 5), rat(-3, 4)] {
            let xd = to_decimal(&x, 40);
            let want = p.eval_decimal(&xd).div(&decomp.denominator.eval_decimal(&xd));
            assert_close(&decomp.evaluate(&xd), &want, 26);
        }
    }

    #[test]
    fn trinomial_power_family_rejections() {
        let base = |omega| DenominatorFamily::TrinomialPower {
            f: int(1),
            g: int(1),
            n: 2,
            omega,
        };
        assert!(matches!(
            full_decompose(&Polynomial::one(), &base(angle(1, 4)), 30),
            Err(FractionError::Unsupported(_))
        ));
        assert!(matches!(
            full_decompose(&Polynomial::one(), &base(angle(0, 1)), 30),
            Err(FractionError::DegenerateAngle)
        ));
    }

    #[test]
    fn polynomial_part_splits_off_with_alternating_signs() {
        // x^9 / (1 + 8x^3): quotient x^6/8 - x^3/64 + 1/512, remainder -1/512
        let p = Polynomial::monomial(9, int(1));
        let family = DenominatorFamily::SumPower {
            f: int(1),
            g: int(2),
            n: 3,
        };
        let decomp = full_decompose(&p, &family, 30).unwrap();
        let mut want = vec![int(0); 7];
        want[0] = rat(1, 512);
        want[3] = rat(-1, 64);
        want[6] = rat(1, 8);
        assert_eq!(decomp.polynomial_part, Polynomial::new(want));

        for x in [rat(1, 2), rat(-4, 3)] {
            let xd = to_decimal(&x, 40);
            let want = p.eval_decimal(&xd).div(&decomp.denominator.eval_decimal(&xd));
            assert_close(&decomp.evaluate(&xd), &want, 25);
        }
    }

    #[test]
    fn zero_numerator_at_the_root_is_fine() {
        // P vanishes at the factor root: numerator 0, not an error
        let p = Polynomial::from_ints(&[1, 0, -1]); // 1 - x^2
        let q = Polynomial::from_ints(&[2, -1, -1]); // (1 - x)(2 + x)
        let pf = simple_fraction(&p, &q, &FactorSpec::linear(int(1), int(-1)).unwrap()).unwrap();
        assert_eq!(ladder(&pf), &[int(0)]);
    }

    #[test]
    fn family_input_validation() {
        let family = DenominatorFamily::SumPower {
            f: int(0),
            g: int(1),
            n: 3,
        };
        assert!(matches!(
            full_decompose(&Polynomial::one(), &family, 30),
            Err(FractionError::InvalidInput(_))
        ));
        let family = DenominatorFamily::DifferencePower {
            f: int(1),
            g: int(1),
            n: 0,
        };
        assert!(matches!(
            full_decompose(&Polynomial::one(), &family, 30),
            Err(FractionError::InvalidInput(_))
        ));
    }
}
