//! Root extraction and root analysis: series refinement of equation
//! solutions (order 1 is the classical tangent step), nth roots by
//! binomial series, corrected divisors, or rational approximants, equal
//! root detection, certified real-root counting with isolating intervals,
//! coefficient sign criteria, and extrema of rational functions.
//!
//! Counting is exact. Every real root of a square-free polynomial lies
//! strictly between consecutive critical points, where the polynomial is
//! monotone, so certified signs at the critical points decide everything;
//! the signs themselves are certified in rational arithmetic by shrinking
//! each critical bracket until a mean-value bound excludes a zero inside.
//! Decimal arithmetic enters only when a location or residual is reported.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::decimal::BigDecimal;
use crate::poly::Polynomial;
use crate::rational::{binomial, binomial_rational, exact_nth_root, pow_rational, to_decimal};
use crate::series::{
    ps_div, ps_reverse, DecimalDomain, RationalDomain, SeriesDomain, SeriesError, TruncatedSeries,
};

#[derive(Debug, Error)]
pub enum RootError {
    #[error("derivative vanishes at x = {at}; the series step is undefined there")]
    VanishingDerivative { at: String },
    #[error("denominator vanishes at a stationary point: {at}")]
    DenominatorVanishes { at: String },
    #[error("certification failed: {0}")]
    Unclassifiable(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Outcome of an iterative or truncated root computation.
#[derive(Clone, Debug)]
pub struct RootReport {
    pub root: BigDecimal,
    /// Series order (or truncation depth) the computation ran at.
    pub order: usize,
    /// Refinement stages actually performed.
    pub sweeps: usize,
    /// |f(root)|, evaluated at the returned root, not an error estimate.
    pub residual: BigDecimal,
    /// Successive approximations, starting point included.
    pub history: Vec<BigDecimal>,
}

/// Anything that can expand itself as a truncated Taylor series at a
/// decimal point. Coefficient k of the result is f^(k)(x)/k!.
pub trait JetFn {
    fn jet(
        &self,
        dom: &DecimalDomain,
        x: &BigDecimal,
        order: usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, SeriesError>;
}

impl JetFn for Polynomial {
    fn jet(
        &self,
        dom: &DecimalDomain,
        x: &BigDecimal,
        order: usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, SeriesError> {
        // repeated synthetic division by (t - x), like the rational shift
        let mut work: Vec<BigDecimal> = self
            .coeffs()
            .iter()
            .map(|c| to_decimal(c, dom.precision))
            .collect();
        let mut jet = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            if work.is_empty() {
                jet.push(dom.zero());
                continue;
            }
            let mut rem = dom.zero();
            for c in work.iter_mut().rev() {
                let v = rem.mul(x).add(c);
                rem = v.clone();
                *c = v;
            }
            jet.push(work.remove(0));
        }
        Ok(TruncatedSeries::new(x.clone(), jet))
    }
}

/// Adapter so a jet-producing closure can be handed to [`solve_series`].
pub struct JetClosure<F>(pub F);

impl<F> JetFn for JetClosure<F>
where
    F: Fn(
        &DecimalDomain,
        &BigDecimal,
        usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, SeriesError>,
{
    fn jet(
        &self,
        dom: &DecimalDomain,
        x: &BigDecimal,
        order: usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, SeriesError> {
        (self.0)(dom, x, order)
    }
}

/// Refine a root of `f` starting from `x0`. Each sweep expands the jet at
/// the current iterate, reverts the series, and evaluates the reverted
/// series at minus the function value, truncated after `order` terms; the
/// residual error is then raised to roughly the (order+1)-th power per
/// sweep. Order 1 is the tangent-line step.
pub fn solve_series<F: JetFn + ?Sized>(
    f: &F,
    x0: &BigDecimal,
    order: usize,
    sweeps: usize,
    precision: usize,
) -> Result<RootReport, RootError> {
    if order == 0 {
        return Err(RootError::InvalidInput("series order must be at least 1".into()));
    }
    if sweeps == 0 {
        return Err(RootError::InvalidInput("at least one sweep is required".into()));
    }
    let wp = precision + 10;
    let dom = DecimalDomain::new(wp);
    let mut x = x0.round_to(wp);
    let mut history = vec![x.round_to(precision)];
    for _ in 0..sweeps {
        let jet = f.jet(&dom, &x, order)?;
        let y0 = jet.coeffs[0].clone();
        if y0.is_zero() {
            break;
        }
        if jet.coeffs.len() < 2 || jet.coeffs[1].is_zero() {
            return Err(RootError::VanishingDerivative { at: x.to_string() });
        }
        let mut u = jet;
        u.coeffs[0] = dom.zero();
        let rev = ps_reverse(&dom, &u)?;
        let w = y0.neg();
        let mut acc = rev.coeffs[order].clone();
        for k in (1..order).rev() {
            acc = acc.mul(&w).add(&rev.coeffs[k]);
        }
        let step = acc.mul(&w);
        if step.is_zero() {
            break;
        }
        x = x.add(&step);
        history.push(x.round_to(precision));
    }
    let residual = f.jet(&dom, &x, 0)?.coeffs[0].abs();
    Ok(RootReport {
        root: x.round_to(precision),
        order,
        sweeps: history.len() - 1,
        residual: residual.round_to(precision),
        history,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NthRootMethod {
    /// Binomial expansion of (a^n + b)^(1/n), after rescaling the radicand
    /// by an integer factor that makes the remainder b as small as it can.
    Series,
    /// a + b/D with the divisor D summed as a series in b; the truncation
    /// depth counts divisor terms.
    Divisor,
    /// Quotients of two binomial-coefficient ladders (the same ladder at
    /// 1/n and at -1/n); depth is the ladder length, each depth one more
    /// matched series order.
    RationalApproximant,
}

/// value^(1/n) by one of the three truncation schemes. All intermediate
/// arithmetic is exact rational; the report carries every partial
/// approximation and the exact residual |root^n - value|.
pub fn nth_root(
    value: &BigRational,
    n: u32,
    method: NthRootMethod,
    depth: usize,
    precision: usize,
) -> Result<RootReport, RootError> {
    if !value.is_positive() {
        return Err(RootError::InvalidInput("radicand must be positive".into()));
    }
    if n < 2 {
        return Err(RootError::InvalidInput("root index must be at least 2".into()));
    }
    if depth == 0 {
        return Err(RootError::InvalidInput("depth must be at least 1".into()));
    }
    if let Some(r) = exact_nth_root(value, n) {
        let root = to_decimal(&r, precision);
        return Ok(RootReport {
            root: root.clone(),
            order: depth,
            sweeps: 0,
            residual: BigDecimal::zero(precision),
            history: vec![root],
        });
    }
    let (scale, base, offset) = match method {
        NthRootMethod::Series => choose_scale(value, n),
        _ => {
            let (a, b) = nearest_power(value, n);
            (BigInt::one(), a, b)
        }
    };
    // value * scale^n = base^n + offset, with |offset| well below base^n
    let base_pow = pow_rational(&base, n as i32);
    let u = &offset / &base_pow;
    let nu = BigRational::new(BigInt::one(), BigInt::from(n));
    let scale_rat = BigRational::from_integer(scale);

    let approximations: Vec<BigRational> = match method {
        NthRootMethod::Series => {
            let mut out = Vec::with_capacity(depth);
            let mut partial = BigRational::zero();
            let mut upow = BigRational::one();
            for j in 0..depth {
                partial += binomial_rational(&nu, j) * &upow;
                upow *= &u;
                out.push(&base * &partial / &scale_rat);
            }
            out
        }
        NthRootMethod::Divisor => {
            let dom = RationalDomain;
            let correction = TruncatedSeries::new(
                BigRational::zero(),
                (0..depth).map(|j| binomial_rational(&nu, j + 1)).collect(),
            );
            let unit =
                TruncatedSeries::constant(&dom, BigRational::zero(), BigRational::one(), depth - 1);
            let inverse = ps_div(&dom, &unit, &correction)?;
            let lead = pow_rational(&base, n as i32 - 1);
            let mut divisor = BigRational::zero();
            let mut upow = BigRational::one();
            let mut out = Vec::with_capacity(depth);
            for j in 0..depth {
                divisor += &lead * &inverse.coeffs[j] * &upow;
                upow *= &u;
                if divisor.is_zero() {
                    return Err(RootError::InvalidInput(
                        "truncated divisor vanishes; deepen the truncation".into(),
                    ));
                }
                out.push(&base + &offset / &divisor);
            }
            out
        }
        NthRootMethod::RationalApproximant => {
            let neg_nu = -nu.clone();
            let mut out = Vec::with_capacity(depth);
            for m in 1..=depth {
                let num = ladder_value(&nu, m, &u);
                let den = ladder_value(&neg_nu, m, &u);
                if den.is_zero() {
                    return Err(RootError::InvalidInput(
                        "approximant denominator vanishes; deepen the ladder".into(),
                    ));
                }
                out.push(&base * num / den);
            }
            out
        }
    };
    let last = approximations.last().expect("depth >= 1");
    let residual = (pow_rational(last, n as i32) - value).abs();
    Ok(RootReport {
        root: to_decimal(last, precision),
        order: depth,
        sweeps: approximations.len(),
        residual: to_decimal(&residual, precision),
        history: approximations.iter().map(|a| to_decimal(a, precision)).collect(),
    })
}

// Sum of the recurrence ladder A0 = 1, A_{k+1} = A_k (m-k)(v+m-k) /
// ((k+1)(2m-k)), evaluated as sum A_k u^k. The quotient of this ladder at
// v = 1/n over the ladder at v = -1/n matches (1+u)^(1/n) through order 2m.
fn ladder_value(v: &BigRational, m: usize, u: &BigRational) -> BigRational {
    let mut coef = BigRational::one();
    let mut upow = BigRational::one();
    let mut acc = BigRational::one();
    for k in 0..m {
        let rise = BigRational::from_integer(BigInt::from((m - k) as i64));
        let num = &rise * (v + &rise);
        let den = BigRational::from_integer(BigInt::from(((k + 1) * (2 * m - k)) as i64));
        coef = coef * num / den;
        upow *= u;
        acc += &coef * &upow;
    }
    acc
}

fn int_pow(base: &BigInt, e: u32) -> BigInt {
    num_traits::pow(base.clone(), e as usize)
}

// Largest a >= 0 with a^n <= v.
fn floor_nth_root(v: &BigRational, n: u32) -> BigInt {
    let one = BigRational::one();
    if v < &one {
        return BigInt::zero();
    }
    let mut hi = BigInt::from(2);
    while BigRational::from_integer(int_pow(&hi, n)) <= *v {
        hi = &hi * 2;
    }
    let mut lo = BigInt::one();
    while &hi - &lo > BigInt::one() {
        let mid = (&hi + &lo) / 2;
        if BigRational::from_integer(int_pow(&mid, n)) <= *v {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

// Nearest positive integer base: returns (a, v - a^n) minimizing |v - a^n|.
fn nearest_power(v: &BigRational, n: u32) -> (BigRational, BigRational) {
    let floor = floor_nth_root(v, n).max(BigInt::one());
    let up = &floor + BigInt::one();
    let lo_off = v - BigRational::from_integer(int_pow(&floor, n));
    let hi_off = v - BigRational::from_integer(int_pow(&up, n));
    if lo_off.abs() <= hi_off.abs() {
        (BigRational::from_integer(floor), lo_off)
    } else {
        (BigRational::from_integer(up), hi_off)
    }
}

// Integer rescaling f in 1..=10 minimizing |offset| relative to the scaled
// radicand; ties keep the smaller factor.
fn choose_scale(value: &BigRational, n: u32) -> (BigInt, BigRational, BigRational) {
    let mut best: Option<(BigInt, BigRational, BigRational, BigRational)> = None;
    for f in 1..=10i64 {
        let factor = BigInt::from(f);
        let scaled = value * BigRational::from_integer(int_pow(&factor, n));
        let (a, b) = nearest_power(&scaled, n);
        let ratio = b.abs() / &scaled;
        let better = best.as_ref().map_or(true, |(_, _, _, r)| ratio < *r);
        if better {
            best = Some((factor, a, b, ratio));
        }
    }
    let (f, a, b, _) = best.expect("nonempty candidate range");
    (f, a, b)
}

/// Factors of p that occur with multiplicity at least 2, via the iterated
/// gcd ladder with the derivative.
pub fn equal_roots(p: &Polynomial) -> Result<Vec<(Polynomial, usize)>, RootError> {
    if p.is_zero() {
        return Err(RootError::InvalidInput("zero polynomial".into()));
    }
    Ok(square_free_decomposition(p)
        .into_iter()
        .filter(|(_, m)| *m >= 2)
        .collect())
}

/// Full square-free decomposition: pairwise coprime monic factors f_i with
/// p = lead * prod f_i^i; constant factors are dropped.
pub fn square_free_decomposition(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    match p.degree() {
        Some(d) if d >= 1 => {}
        _ => return Vec::new(),
    }
    let mut ladder = vec![p.monic()];
    while ladder.last().unwrap().degree() != Some(0) {
        let last = ladder.last().unwrap();
        ladder.push(last.gcd(&last.derivative()));
    }
    // ladder[k] holds every multiplicity-m factor exactly max(m - k, 0) times
    let mut quots = Vec::with_capacity(ladder.len() - 1);
    for i in 1..ladder.len() {
        let (q, r) = ladder[i - 1].divrem(&ladder[i]);
        debug_assert!(r.is_zero());
        quots.push(q);
    }
    let mut out = Vec::new();
    for i in 0..quots.len() {
        let f = if i + 1 < quots.len() {
            let (q, r) = quots[i].divrem(&quots[i + 1]);
            debug_assert!(r.is_zero());
            q
        } else {
            quots[i].clone()
        };
        if f.degree().map_or(false, |d| d >= 1) {
            out.push((f.monic(), i + 1));
        }
    }
    out
}

fn sign_rat(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn half(x: &BigRational) -> BigRational {
    x / BigRational::from_integer(BigInt::from(2))
}

// A located real root: either an exact rational value or an open bracket
// (lo, hi) whose endpoint signs differ and which holds exactly one,
// necessarily irrational, root of the polynomial it was built from. The
// *_unbounded flags mark endpoints that are artificial outer bounds rather
// than informative sign points.
#[derive(Clone, Debug)]
enum Isolated {
    Exact(BigRational),
    Bracket {
        lo: BigRational,
        hi: BigRational,
        lo_unbounded: bool,
        hi_unbounded: bool,
    },
}

impl Isolated {
    fn left(&self) -> &BigRational {
        match self {
            Isolated::Exact(z) => z,
            Isolated::Bracket { lo, .. } => lo,
        }
    }

    fn right(&self) -> &BigRational {
        match self {
            Isolated::Exact(z) => z,
            Isolated::Bracket { hi, .. } => hi,
        }
    }

    fn midpoint(&self) -> BigRational {
        match self {
            Isolated::Exact(z) => z.clone(),
            Isolated::Bracket { lo, hi, .. } => half(&(lo + hi)),
        }
    }

    fn width(&self) -> BigRational {
        match self {
            Isolated::Exact(_) => BigRational::zero(),
            Isolated::Bracket { lo, hi, .. } => hi - lo,
        }
    }
}

// One bisection step, keeping the half where g changes sign. A rational
// midpoint root collapses the bracket to an exact location.
fn bisect(loc: &mut Isolated, g: &Polynomial) {
    let (lo, hi, lo_unb, hi_unb) = match loc {
        Isolated::Exact(_) => return,
        Isolated::Bracket {
            lo,
            hi,
            lo_unbounded,
            hi_unbounded,
        } => (lo.clone(), hi.clone(), *lo_unbounded, *hi_unbounded),
    };
    let mid = half(&(&lo + &hi));
    let smid = sign_rat(&g.eval(&mid));
    if smid == 0 {
        *loc = Isolated::Exact(mid);
        return;
    }
    let slo = sign_rat(&g.eval(&lo));
    *loc = if smid == slo {
        Isolated::Bracket {
            lo: mid,
            hi,
            lo_unbounded: false,
            hi_unbounded: hi_unb,
        }
    } else {
        Isolated::Bracket {
            lo,
            hi: mid,
            lo_unbounded: lo_unb,
            hi_unbounded: false,
        }
    };
}

// Upper bound for |p| on [-radius, radius]: sum |c_i| radius^i.
fn poly_abs_bound(p: &Polynomial, radius: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut pw = BigRational::one();
    for c in p.coeffs() {
        acc += c.abs() * &pw;
        pw *= radius;
    }
    acc
}

// Strict bound on the magnitude of every real root.
fn cauchy_bound(p: &Polynomial) -> BigRational {
    let lead = match p.leading() {
        Some(l) => l.clone(),
        None => return BigRational::one(),
    };
    let mut m = BigRational::zero();
    if let Some(d) = p.degree() {
        for c in &p.coeffs()[..d] {
            let q = (c / &lead).abs();
            if q > m {
                m = q;
            }
        }
    }
    m + BigRational::one()
}

// Sign of h at the root located by `loc` (a root of g, never of h). For a
// bracket the sign is certified by shrinking until |h(mid)| exceeds the
// largest possible variation of h across the bracket.
fn certified_sign_at(h: &Polynomial, loc: &mut Isolated, g: &Polynomial) -> Result<i8, RootError> {
    let hd = h.derivative();
    for _ in 0..20_000 {
        match loc {
            Isolated::Exact(z) => {
                let s = sign_rat(&h.eval(z));
                if s == 0 {
                    return Err(RootError::Unclassifiable(
                        "shared root where coprimality was promised".into(),
                    ));
                }
                return Ok(s);
            }
            Isolated::Bracket { lo, hi, .. } => {
                let mid = half(&(&*lo + &*hi));
                let hm = h.eval(&mid);
                if !hm.is_zero() {
                    let radius = {
                        let a = lo.abs();
                        let b = hi.abs();
                        let m = if a > b { a } else { b };
                        if m > BigRational::one() {
                            m
                        } else {
                            BigRational::one()
                        }
                    };
                    let swing = poly_abs_bound(&hd, &radius) * (&*hi - &*lo);
                    if hm.abs() > swing {
                        return Ok(sign_rat(&hm));
                    }
                }
            }
        }
        bisect(loc, g);
    }
    Err(RootError::Unclassifiable(
        "sign certification budget exhausted".into(),
    ))
}

// Divisors of |n|, None when n is zero or too large to enumerate.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.abs().to_u64()?;
    if v == 0 || v > 1_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            out.push(BigInt::from(v / d));
        }
        d += 1;
    }
    Some(out)
}

fn rational_root_candidates(g: &Polynomial) -> Option<Vec<BigRational>> {
    let mut lcm = BigInt::one();
    for c in g.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let scale = BigRational::from_integer(lcm);
    let ints: Vec<BigInt> = g.coeffs().iter().map(|c| (c * &scale).to_integer()).collect();
    let p_divs = small_divisors(ints.first()?)?;
    let q_divs = small_divisors(ints.last()?)?;
    if p_divs.len().checked_mul(q_divs.len())? > 4096 {
        return None;
    }
    let mut set = BTreeSet::new();
    for p in &p_divs {
        for q in &q_divs {
            let r = BigRational::new(p.clone(), q.clone());
            set.insert(-r.clone());
            set.insert(r);
        }
    }
    Some(set.into_iter().collect())
}

// Splits off every rational root (each simple, since callers pass
// square-free input). The remainder has no rational roots unless the
// divisor enumeration overflowed, which only widens brackets, never
// miscounts: isolation works on whatever polynomial comes back.
fn extract_rational_roots(g: &Polynomial) -> (Vec<BigRational>, Polynomial) {
    let mut roots = Vec::new();
    let mut rest = g.monic();
    while rest.degree().map_or(false, |d| d >= 1) && rest.coeff(0).is_zero() {
        roots.push(BigRational::zero());
        rest = Polynomial::new(rest.coeffs()[1..].to_vec());
    }
    loop {
        let deg = match rest.degree() {
            Some(d) if d >= 1 => d,
            _ => break,
        };
        if deg == 1 {
            roots.push(-rest.coeff(0) / rest.coeff(1));
            rest = Polynomial::one();
            break;
        }
        let candidates = match rational_root_candidates(&rest) {
            Some(c) => c,
            None => break,
        };
        let hit = candidates.into_iter().find(|c| rest.eval(c).is_zero());
        match hit {
            Some(r) => {
                let lin = Polynomial::new(vec![-r.clone(), BigRational::one()]);
                let (q, rem) = rest.divrem(&lin);
                debug_assert!(rem.is_zero());
                roots.push(r);
                rest = q.monic();
            }
            None => break,
        }
    }
    roots.sort();
    (roots, rest)
}

fn square_free_part(p: &Polynomial) -> Polynomial {
    let g = p.gcd(&p.derivative());
    if g.degree() == Some(0) {
        return p.monic();
    }
    let (q, r) = p.divrem(&g);
    debug_assert!(r.is_zero());
    q.monic()
}

// Locates every real root of a square-free polynomial: exact rational
// roots by trial division, the rest bracketed between certified-sign
// anchors at the critical points (plus outer bound anchors), between which
// the polynomial is monotone.
fn isolate_squarefree(g: &Polynomial) -> Result<Vec<Isolated>, RootError> {
    match g.degree() {
        None => return Err(RootError::InvalidInput("zero polynomial".into())),
        Some(0) => return Ok(Vec::new()),
        Some(_) => {}
    }
    let (exact, h) = extract_rational_roots(g);
    let mut out: Vec<Isolated> = exact.into_iter().map(Isolated::Exact).collect();
    if h.degree().map_or(false, |d| d >= 2) {
        let dsf = square_free_part(&h.derivative());
        let mut crits = isolate_squarefree(&dsf)?;
        let mut bound = cauchy_bound(&h);
        let crit_bound = cauchy_bound(&dsf);
        if crit_bound > bound {
            bound = crit_bound;
        }
        bound += BigRational::one();
        let neg = -bound.clone();
        // anchors: (left, right, certified sign of h, artificial?)
        let mut anchors: Vec<(BigRational, BigRational, i8, bool)> = Vec::new();
        anchors.push((neg.clone(), neg.clone(), sign_rat(&h.eval(&neg)), true));
        for loc in crits.iter_mut() {
            let mut guard = 0usize;
            while *loc.left() <= neg || *loc.right() >= bound {
                bisect(loc, &dsf);
                guard += 1;
                if guard > 20_000 {
                    return Err(RootError::Unclassifiable(
                        "critical bracket would not fit inside the root bound".into(),
                    ));
                }
            }
            let s = certified_sign_at(&h, loc, &dsf)?;
            anchors.push((loc.left().clone(), loc.right().clone(), s, false));
        }
        anchors.push((bound.clone(), bound.clone(), sign_rat(&h.eval(&bound)), true));
        for k in 1..anchors.len() {
            let (_, ref r0, s0, b0) = anchors[k - 1];
            let (ref l1, _, s1, b1) = anchors[k];
            if s0 != s1 {
                out.push(Isolated::Bracket {
                    lo: r0.clone(),
                    hi: l1.clone(),
                    lo_unbounded: b0,
                    hi_unbounded: b1,
                });
            }
        }
        // keep the rational roots of g out of the brackets
        let fixed: Vec<BigRational> = out
            .iter()
            .filter_map(|l| match l {
                Isolated::Exact(z) => Some(z.clone()),
                _ => None,
            })
            .collect();
        for loc in out.iter_mut() {
            if matches!(loc, Isolated::Exact(_)) {
                continue;
            }
            let mut guard = 0usize;
            while fixed.iter().any(|z| loc.left() <= z && z <= loc.right()) {
                bisect(loc, &h);
                guard += 1;
                if guard > 20_000 {
                    return Err(RootError::Unclassifiable(
                        "bracket refinement budget exhausted".into(),
                    ));
                }
            }
        }
    }
    out.sort_by(|a, b| a.midpoint().cmp(&b.midpoint()));
    Ok(out)
}

// Shrinks brackets until all locations are pairwise disjoint as closed
// intervals. Roots of coprime factors are distinct, so this terminates.
fn disjointify(items: &mut [(Isolated, usize)], polys: &[&Polynomial]) -> Result<(), RootError> {
    items.sort_by(|a, b| a.0.midpoint().cmp(&b.0.midpoint()));
    let mut budget = 100_000usize;
    loop {
        let mut clean = true;
        for i in 1..items.len() {
            if items[i - 1].0.right() < items[i].0.left() {
                continue;
            }
            clean = false;
            let wa = items[i - 1].0.width();
            let wb = items[i].0.width();
            if wa.is_zero() && wb.is_zero() {
                return Err(RootError::Unclassifiable(
                    "two exact root locations coincide".into(),
                ));
            }
            let j = if wa >= wb { i - 1 } else { i };
            let g = polys[items[j].1];
            bisect(&mut items[j].0, g);
            budget -= 1;
            if budget == 0 {
                return Err(RootError::Unclassifiable(
                    "interval separation budget exhausted".into(),
                ));
            }
        }
        if clean {
            return Ok(());
        }
        items.sort_by(|a, b| a.0.midpoint().cmp(&b.0.midpoint()));
    }
}

/// Where one real root lives. `lo == hi` pins an exact rational root; a
/// `None` endpoint means the root is merely beyond the last certified sign
/// point on that side.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: Option<BigRational>,
    pub hi: Option<BigRational>,
}

fn to_interval(loc: &Isolated) -> RootInterval {
    match loc {
        Isolated::Exact(z) => RootInterval {
            lo: Some(z.clone()),
            hi: Some(z.clone()),
        },
        Isolated::Bracket {
            lo,
            hi,
            lo_unbounded,
            hi_unbounded,
        } => RootInterval {
            lo: if *lo_unbounded { None } else { Some(lo.clone()) },
            hi: if *hi_unbounded { None } else { Some(hi.clone()) },
        },
    }
}

/// Sign sequences of the two classical coefficient tests plus the plain
/// sign-variation counts. Every sequence is bookended with +; a sign
/// variation anywhere certifies a pair of nonreal roots, but silence
/// proves nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientCriteria {
    /// +1 where c_i^2 exceeds (i+1)(n-i+1)/(i(n-i)) * c_{i-1} c_{i+1}.
    pub newton_signs: Vec<i8>,
    /// +1 where c_i^2 exceeds 2C/(C-1) times the alternating sum of
    /// equally distant coefficient products, C = binomial(n, i).
    pub campbell_signs: Vec<i8>,
    /// (sign variations, sign repetitions) across the nonzero
    /// coefficients: upper bounds for positive and negative root counts,
    /// exact when every root is real.
    pub harriot: (usize, usize),
}

fn variations(signs: &[i8]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl CoefficientCriteria {
    /// Number of nonreal roots certified by the neighbor-product test.
    pub fn newton_imaginary_bound(&self) -> usize {
        variations(&self.newton_signs)
    }

    /// Number of nonreal roots certified by the equally-distant-product test.
    pub fn campbell_imaginary_bound(&self) -> usize {
        variations(&self.campbell_signs)
    }
}

/// Coefficient sign tests for a polynomial of degree at least 2.
pub fn coefficient_criteria(p: &Polynomial) -> Result<CoefficientCriteria, RootError> {
    let n = match p.degree() {
        Some(d) if d >= 2 => d,
        _ => {
            return Err(RootError::InvalidInput(
                "coefficient criteria need degree at least 2".into(),
            ))
        }
    };
    let monic = p.monic();
    // c[i] multiplies x^{n-i}; the classical alternating-sign normal form
    // only relabels c_i as (-1)^i c_i, which cancels out of every product
    // compared here, so plain coefficients are equivalent.
    let c: Vec<BigRational> = (0..=n).map(|i| monic.coeff(n - i)).collect();
    let mut newton = vec![1i8; n + 1];
    let mut campbell = vec![1i8; n + 1];
    for i in 1..n {
        let sq = &c[i] * &c[i];
        let fi = BigRational::new(
            BigInt::from(((i + 1) * (n - i + 1)) as i64),
            BigInt::from((i * (n - i)) as i64),
        );
        newton[i] = if sq > fi * (&c[i - 1] * &c[i + 1]) { 1 } else { -1 };
        let bin = binomial(n as u64, i as u64);
        let gi = BigRational::new(&bin * BigInt::from(2), &bin - BigInt::one());
        let mut distant = BigRational::zero();
        for j in 1..=i.min(n - i) {
            let term = &c[i - j] * &c[i + j];
            if j % 2 == 1 {
                distant += term;
            } else {
                distant -= term;
            }
        }
        campbell[i] = if sq > gi * distant { 1 } else { -1 };
    }
    let nz: Vec<(usize, i8)> = monic
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, sign_rat(c)))
        .collect();
    let mut vpos = 0usize;
    let mut vneg = 0usize;
    for w in nz.windows(2) {
        let (k0, s0) = w[0];
        let (k1, s1) = w[1];
        if s0 != s1 {
            vpos += 1;
        }
        let t0 = if k0 % 2 == 0 { s0 } else { -s0 };
        let t1 = if k1 % 2 == 0 { s1 } else { -s1 };
        if t0 != t1 {
            vneg += 1;
        }
    }
    Ok(CoefficientCriteria {
        newton_signs: newton,
        campbell_signs: campbell,
        harriot: (vpos, vneg),
    })
}

/// Everything the real-root analysis certifies about one polynomial.
#[derive(Clone, Debug)]
pub struct RootNature {
    pub degree: usize,
    /// Real roots counted with multiplicity.
    pub real_count: usize,
    /// One entry per distinct real root, ascending and pairwise disjoint;
    /// multiplicities live in `equal_root_factors`.
    pub intervals: Vec<RootInterval>,
    /// degree - real_count; the isolation is complete, so this is the
    /// exact number of nonreal roots, always even.
    pub imaginary_lower_bound: usize,
    pub equal_root_factors: Vec<(Polynomial, usize)>,
    /// Coefficient sign tests, present from degree 2 up.
    pub criteria: Option<CoefficientCriteria>,
}

/// Count and isolate the real roots of p, with the repeated-factor
/// structure and the coefficient criteria alongside.
pub fn root_nature(p: &Polynomial) -> Result<RootNature, RootError> {
    let degree = match p.degree() {
        None => return Err(RootError::InvalidInput("zero polynomial".into())),
        Some(d) => d,
    };
    if degree == 0 {
        return Ok(RootNature {
            degree: 0,
            real_count: 0,
            intervals: Vec::new(),
            imaginary_lower_bound: 0,
            equal_root_factors: Vec::new(),
            criteria: None,
        });
    }
    let decomp = square_free_decomposition(p);
    let mut located: Vec<(Isolated, usize)> = Vec::new();
    let mut real_count = 0usize;
    for (idx, (factor, mult)) in decomp.iter().enumerate() {
        let locs = isolate_squarefree(factor)?;
        real_count += mult * locs.len();
        located.extend(locs.into_iter().map(|l| (l, idx)));
    }
    let polys: Vec<&Polynomial> = decomp.iter().map(|(f, _)| f).collect();
    disjointify(&mut located, &polys)?;
    debug_assert_eq!((degree - real_count) % 2, 0);
    let criteria = if degree >= 2 {
        Some(coefficient_criteria(p)?)
    } else {
        None
    };
    Ok(RootNature {
        degree,
        real_count,
        intervals: located.iter().map(|(l, _)| to_interval(l)).collect(),
        imaginary_lower_bound: degree - real_count,
        equal_root_factors: decomp.into_iter().filter(|(_, m)| *m >= 2).collect(),
        criteria,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremumKind {
    Min,
    Max,
    /// A stationary point the function passes straight through.
    Neither,
}

/// A stationary point of num/den. Exact fields are set when the location
/// is rational; decimal fields are always set.
#[derive(Clone, Debug)]
pub struct Extremum {
    pub location: BigDecimal,
    pub exact_location: Option<BigRational>,
    pub value: BigDecimal,
    pub exact_value: Option<BigRational>,
    pub kind: ExtremumKind,
    /// Order of vanishing of the derivative numerator; odd means a true
    /// extremum, even means `Neither`.
    pub multiplicity: usize,
}

/// All real stationary points of num/den, ascending. Classification reads
/// the sign of R = num' den - num den' on both sides of each root: the
/// derivative of the quotient is R/den^2, so an odd-order sign change of R
/// from - to + is a minimum, + to - a maximum, and no change is neither.
pub fn extrema(
    num: &Polynomial,
    den: &Polynomial,
    precision: usize,
) -> Result<Vec<Extremum>, RootError> {
    if den.is_zero() {
        return Err(RootError::InvalidInput("denominator is the zero polynomial".into()));
    }
    let r = num.derivative().mul(den).sub(&num.mul(&den.derivative()));
    if r.degree().map_or(true, |d| d == 0) {
        return Ok(Vec::new());
    }
    let decomp = square_free_decomposition(&r);
    let mut located: Vec<(Isolated, usize)> = Vec::new();
    for (idx, (factor, _)) in decomp.iter().enumerate() {
        let locs = isolate_squarefree(factor)?;
        located.extend(locs.into_iter().map(|l| (l, idx)));
    }
    let polys: Vec<&Polynomial> = decomp.iter().map(|(f, _)| f).collect();
    disjointify(&mut located, &polys)?;

    let wp = precision + 10;
    let one = BigRational::one();
    let mut out = Vec::with_capacity(located.len());
    for k in 0..located.len() {
        let (ref loc, idx) = located[k];
        let (factor, mult) = &decomp[idx];
        // sign of R strictly left and right of this root; bracket
        // endpoints work directly, an exact root probes toward its
        // neighbors (no other root lives in between)
        let (s_left, s_right) = match loc {
            Isolated::Bracket { lo, hi, .. } => (sign_rat(&r.eval(lo)), sign_rat(&r.eval(hi))),
            Isolated::Exact(z) => {
                let a = match k.checked_sub(1).map(|i| &located[i]) {
                    Some((prev, _)) => half(&(prev.right() + z)),
                    None => z - &one,
                };
                let b = match located.get(k + 1) {
                    Some((next, _)) => half(&(z + next.left())),
                    None => z + &one,
                };
                (sign_rat(&r.eval(&a)), sign_rat(&r.eval(&b)))
            }
        };
        let kind = if mult % 2 == 0 {
            debug_assert_eq!(s_left, s_right);
            ExtremumKind::Neither
        } else if s_left < 0 && s_right > 0 {
            ExtremumKind::Min
        } else if s_left > 0 && s_right < 0 {
            ExtremumKind::Max
        } else {
            return Err(RootError::Unclassifiable(
                "odd-order root without a sign change".into(),
            ));
        };
        let entry = match loc {
            Isolated::Exact(z) => {
                let den_v = den.eval(z);
                if den_v.is_zero() {
                    return Err(RootError::DenominatorVanishes {
                        at: crate::rational::format_rational(z),
                    });
                }
                let val = num.eval(z) / den_v;
                Extremum {
                    location: to_decimal(z, precision),
                    exact_location: Some(z.clone()),
                    value: to_decimal(&val, precision),
                    exact_value: Some(val),
                    kind,
                    multiplicity: *mult,
                }
            }
            Isolated::Bracket { .. } => {
                if factor.gcd(den).degree().map_or(false, |d| d >= 1) {
                    return Err(RootError::DenominatorVanishes {
                        at: format!("a common irrational root of {} and the denominator", factor),
                    });
                }
                let target = pow_rational(
                    &BigRational::new(BigInt::one(), BigInt::from(10)),
                    (precision + 5) as i32,
                );
                let mut work = loc.clone();
                let mut guard = 0usize;
                while work.width() > target {
                    bisect(&mut work, factor);
                    guard += 1;
                    if guard > 200_000 {
                        return Err(RootError::Unclassifiable(
                            "location refinement budget exhausted".into(),
                        ));
                    }
                }
                let mid = to_decimal(&work.midpoint(), wp);
                let den_v = den.eval_decimal(&mid);
                if den_v.is_zero() {
                    return Err(RootError::DenominatorVanishes { at: mid.to_string() });
                }
                let val = num.eval_decimal(&mid).div(&den_v);
                Extremum {
                    location: mid.round_to(precision),
                    exact_location: None,
                    value: val.round_to(precision),
                    exact_value: None,
                    kind,
                    multiplicity: *mult,
                }
            }
        };
        out.push(entry);
    }
    Ok(out)
}

/// Stationary points of a plain polynomial.
pub fn polynomial_extrema(p: &Polynomial, precision: usize) -> Result<Vec<Extremum>, RootError> {
    extrema(p, &Polynomial::one(), precision)
}

/// Real-root count of x^(m+n) + A x^n + B by the parity case analysis on
/// (m, n), cross-checked against the certified isolation. The decisive
/// comparison is (m+n)^(m+n) B^m against m^m n^n |A|^(m+n); equality lands
/// on the equal-root boundary, where the isolation alone decides.
pub fn trinomial_real_roots(
    m: u32,
    n: u32,
    a_coef: &BigRational,
    b_coef: &BigRational,
) -> Result<RootNature, RootError> {
    if m == 0 || n == 0 {
        return Err(RootError::InvalidInput("exponents must be positive".into()));
    }
    if a_coef.is_zero() || b_coef.is_zero() {
        return Err(RootError::InvalidInput(
            "a trinomial needs all three terms".into(),
        ));
    }
    let d = (m + n) as usize;
    let mut coeffs = vec![BigRational::zero(); d + 1];
    coeffs[0] = b_coef.clone();
    coeffs[n as usize] = a_coef.clone();
    coeffs[d] = BigRational::one();
    let nature = root_nature(&Polynomial::new(coeffs))?;
    if let Some(expected) = trinomial_case_count(m, n, a_coef, b_coef) {
        if expected != nature.real_count {
            return Err(RootError::Unclassifiable(format!(
                "case analysis predicts {} real roots, isolation found {}",
                expected, nature.real_count
            )));
        }
    }
    Ok(nature)
}

fn trinomial_case_count(m: u32, n: u32, a: &BigRational, b: &BigRational) -> Option<usize> {
    use std::cmp::Ordering::*;
    let d = m + n;
    let dd = pow_rational(&BigRational::from_integer(BigInt::from(d)), d as i32);
    let mm = pow_rational(&BigRational::from_integer(BigInt::from(m)), m as i32);
    let nn = pow_rational(&BigRational::from_integer(BigInt::from(n)), n as i32);
    let scale = mm * nn;
    let e_pow = pow_rational(&a.abs(), d as i32);
    match (m % 2, n % 2) {
        // odd degree, derivative sign set by A alone when A > 0
        (0, 1) => {
            if a.is_positive() {
                Some(1)
            } else {
                match (dd * pow_rational(b, m as i32)).cmp(&(scale * e_pow)) {
                    Less => Some(3),
                    Greater => Some(1),
                    Equal => None,
                }
            }
        }
        // even degree; B < 0 makes the comparison one-sided
        (1, 1) => match (scale * e_pow).cmp(&(dd * pow_rational(b, m as i32))) {
            Greater => Some(2),
            Less => Some(0),
            Equal => None,
        },
        // even powers only: a polynomial in x^2
        (0, 0) => {
            if b.is_negative() {
                Some(2)
            } else if a.is_positive() {
                Some(0)
            } else {
                match (dd * pow_rational(b, m as i32)).cmp(&(scale * e_pow)) {
                    Less => Some(4),
                    Greater => Some(0),
                    Equal => None,
                }
            }
        }
        // odd degree with an even-power middle term
        (1, 0) => {
            if sign_rat(b) == -sign_rat(a) {
                match (scale * e_pow).cmp(&(dd * pow_rational(&b.abs(), m as i32))) {
                    Greater => Some(3),
                    Less => Some(1),
                    Equal => None,
                }
            } else {
                Some(1)
            }
        }
        _ => unreachable!("parities are 0 or 1"),
    }
}

#[cfg(test)]
mod tests {
    use std::cmp::Ordering;

    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::rational::rational;
    use crate::series::{ps_elem, ps_mul, ps_scale, ps_sub, ElemFn};

    const SQRT2: &str = "1.41421356237309504880168872420969807856967187537694807317668";
    const SQRT200: &str = "14.1421356237309504880168872420969807856967187537694807317668";
    const CBRT10: &str = "2.15443469003188372175929356651935049525934494219210858248924";
    const PHI: &str = "1.61803398874989484820458683436563811772030917980576286213545";
    const INV_PHI: &str = "0.61803398874989484820458683436563811772030917980576286213545";
    const CUBIC_ROOT_A: &str = "1.6506291914393882188808009674261974358954952317062";
    const CUBIC_ROOT_B: &str = "0.77091699705924810082514636930702696725505311936333";
    const QUARTIC_ROOT: &str = "1.6117662985992038776814923440044024650002562066892";
    const LOG_EQ_ROOT: &str = "1.3712885742386235368613621062996899588428544048423";
    const PRODUCT_LOG_ROOT: &str = "3.5972850235404175054976522517822860691355430548866";
    const QUOTIENT_MIN: &str = "-0.0294372515228594143797353094836230571639374954766231218798";
    const QUOTIENT_MAX: &str = "-33.9705627484771405856202646905163769428360625045233768781202";

    fn rat(n: i64, d: i64) -> BigRational {
        rational(n, d).unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn dec(s: &str) -> BigDecimal {
        BigDecimal::parse(s, 62).unwrap()
    }

    fn assert_close(actual: &BigDecimal, expected: &BigDecimal, digits: u64) {
        let diff = actual.sub(expected).abs();
        let tol = BigDecimal::one(62).div(&BigDecimal::from_int(10, 62).powi(digits));
        assert!(
            diff.cmp_value(&tol) == Ordering::Less,
            "expected {actual} within 1e-{digits} of {expected}"
        );
    }

    fn assert_sorted_disjoint(intervals: &[RootInterval]) {
        for w in intervals.windows(2) {
            let hi = w[0].hi.as_ref().expect("inner endpoint missing");
            let lo = w[1].lo.as_ref().expect("inner endpoint missing");
            assert!(hi < lo, "intervals overlap: {hi} vs {lo}");
        }
    }

    fn log_equation_jet(
        dom: &DecimalDomain,
        x: &BigDecimal,
        order: usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, SeriesError> {
        // x - (10/ln 10) ln x, the fixed-point form of x = 10 log10 x
        let ident = TruncatedSeries::identity(dom, x.clone(), order);
        let ln = ps_elem(dom, ElemFn::Log, &ident)?;
        let kn = BigDecimal::from_int(10, dom.precision).div(&BigDecimal::ln10(dom.precision));
        Ok(ps_sub(dom, &ident, &ps_scale(dom, &ln, &kn)))
    }

    fn product_log_jet(
        dom: &DecimalDomain,
        x: &BigDecimal,
        order: usize,
    ) -> Result<TruncatedSeries<DecimalDomain>, SeriesError> {
        // x ln x - ln 100
        let ident = TruncatedSeries::identity(dom, x.clone(), order);
        let ln = ps_elem(dom, ElemFn::Log, &ident)?;
        let prod = ps_mul(dom, &ident, &ln);
        let c = BigDecimal::from_int(100, dom.precision).ln();
        Ok(ps_sub(dom, &prod, &TruncatedSeries::constant(dom, x.clone(), c, order)))
    }

    #[test]
    fn tangent_ladder_walks_into_the_cubic_root() {
        let poly = Polynomial::from_ints(&[-4, 3, -2, 1]);
        let report = solve_series(&poly, &BigDecimal::from_int(1, 40), 1, 4, 30).unwrap();
        assert_eq!(report.sweeps, 4);
        assert_close(&report.history[1], &BigDecimal::from_int(2, 40), 25);
        assert_close(&report.history[2], &to_decimal(&rat(12, 7), 35), 25);
        assert_close(&report.history[3], &to_decimal(&rat(2812, 1701), 35), 25);
        assert_close(&report.history[4], &dec("1.650633"), 5);
    }

    #[test]
    fn converged_cubic_matches_reference_digits() {
        let poly = Polynomial::from_ints(&[-4, 3, -2, 1]);
        let report = solve_series(&poly, &BigDecimal::from_int(1, 50), 3, 30, 40).unwrap();
        assert_close(&report.root, &dec(CUBIC_ROOT_A), 35);
        let tol = BigDecimal::one(50).div(&BigDecimal::from_int(10, 50).powi(38));
        assert!(report.residual.cmp_value(&tol) == Ordering::Less);
    }

    #[test]
    fn one_quadratic_expansion_yields_nine_digits() {
        let poly = Polynomial::from_ints(&[-2, 2, 0, 1]);
        let start = BigDecimal::parse("0.77", 40).unwrap();
        let single = solve_series(&poly, &start, 2, 1, 30).unwrap();
        assert_close(&single.root, &dec("0.770916997"), 9);
        let converged = solve_series(&poly, &start, 2, 6, 40).unwrap();
        assert_close(&converged.root, &dec(CUBIC_ROOT_B), 35);
    }

    #[test]
    fn quartic_refines_from_a_two_decimal_guess() {
        let poly = Polynomial::from_ints(&[-8, 4, -2, 0, 1]);
        let start = BigDecimal::parse("1.61", 40).unwrap();
        let single = solve_series(&poly, &start, 2, 1, 30).unwrap();
        assert_close(&single.root, &dec("1.6117662"), 6);
        let converged = solve_series(&poly, &start, 3, 8, 40).unwrap();
        assert_close(&converged.root, &dec(QUARTIC_ROOT), 35);
    }

    #[test]
    fn logarithmic_fixed_point_is_solved() {
        let f = JetClosure(log_equation_jet);
        let start = BigDecimal::parse("1.37", 50).unwrap();
        let report = solve_series(&f, &start, 2, 20, 40).unwrap();
        assert_close(&report.root, &dec(LOG_EQ_ROOT), 35);
        assert_close(&report.root, &dec("1.37128857"), 8);
    }

    #[test]
    fn product_log_equation_is_solved() {
        let f = JetClosure(product_log_jet);
        let start = BigDecimal::parse("3.5", 50).unwrap();
        let report = solve_series(&f, &start, 2, 20, 40).unwrap();
        assert_close(&report.root, &dec(PRODUCT_LOG_ROOT), 35);
        // the classical seven-figure table value 3.5972852 is off in its
        // seventh decimal: the residual against it stays above 1.5e-7
        let table = dec("3.5972852");
        let gap = report.root.sub(&table).abs();
        let low = BigDecimal::parse("0.00000015", 40).unwrap();
        let high = BigDecimal::parse("0.00000025", 40).unwrap();
        assert!(gap.cmp_value(&low) == Ordering::Greater);
        assert!(gap.cmp_value(&high) == Ordering::Less);
    }

    #[test]
    fn order_one_is_the_tangent_formula() {
        let poly = Polynomial::from_ints(&[-2, 0, 1]);
        let report = solve_series(&poly, &BigDecimal::from_int(3, 40), 1, 1, 35).unwrap();
        assert_close(&report.root, &to_decimal(&rat(11, 6), 40), 30);
    }

    #[test]
    fn each_order_raises_the_contraction_power() {
        let poly = Polynomial::from_ints(&[-2, 0, 1]);
        let start = BigDecimal::parse("1.5", 70).unwrap();
        let truth = dec(SQRT2);
        let e0 = start.sub(&truth).abs();
        let mut previous: Option<BigDecimal> = None;
        for order in 1..=3usize {
            let report = solve_series(&poly, &start, order, 1, 60).unwrap();
            let err = report.root.sub(&truth).abs();
            // one sweep contracts the error like e0^(order+1), up to a
            // constant well under 10
            let bound = e0.powi(order as u64 + 1).mul_int(10);
            assert!(
                err.cmp_value(&bound) == Ordering::Less,
                "order {order}: error {err} above {bound}"
            );
            if let Some(prev) = previous {
                assert!(err.cmp_value(&prev) == Ordering::Less);
            }
            previous = Some(err);
        }
    }

    #[test]
    fn residuals_shrink_every_sweep() {
        let poly = Polynomial::from_ints(&[-2, 2, 0, 1]);
        let start = BigDecimal::parse("0.77", 60).unwrap();
        let report = solve_series(&poly, &start, 1, 5, 50).unwrap();
        let mut residuals = Vec::new();
        for h in &report.history[..4] {
            residuals.push(poly.eval_decimal(h).abs());
        }
        for w in residuals.windows(2) {
            assert!(w[1].cmp_value(&w[0]) == Ordering::Less);
        }
    }

    #[test]
    fn vanishing_derivative_is_reported() {
        let poly = Polynomial::from_ints(&[-2, 0, 1]);
        let err = solve_series(&poly, &BigDecimal::zero(30), 1, 3, 20);
        assert!(matches!(err, Err(RootError::VanishingDerivative { .. })));
    }

    #[test]
    fn degenerate_requests_are_rejected() {
        let poly = Polynomial::from_ints(&[-2, 0, 1]);
        let x0 = BigDecimal::from_int(1, 20);
        assert!(matches!(
            solve_series(&poly, &x0, 0, 3, 20),
            Err(RootError::InvalidInput(_))
        ));
        assert!(matches!(
            solve_series(&poly, &x0, 1, 0, 20),
            Err(RootError::InvalidInput(_))
        ));
    }

    #[test]
    fn starting_on_the_root_stops_immediately() {
        let poly = Polynomial::from_ints(&[-4, 0, 1]);
        let report = solve_series(&poly, &BigDecimal::from_int(2, 30), 2, 5, 25).unwrap();
        assert_eq!(report.sweeps, 0);
        assert!(report.residual.is_zero());
        assert_close(&report.root, &BigDecimal::from_int(2, 30), 20);
    }

    #[test]
    fn exact_radicands_short_circuit() {
        let report = nth_root(&int(8), 3, NthRootMethod::Series, 5, 30).unwrap();
        assert_close(&report.root, &BigDecimal::from_int(2, 30), 25);
        assert_eq!(report.sweeps, 0);
        assert!(report.residual.is_zero());
        let report = nth_root(&rat(16, 81), 4, NthRootMethod::Divisor, 3, 30).unwrap();
        assert_close(&report.root, &to_decimal(&rat(2, 3), 35), 25);
    }

    #[test]
    fn rescaled_binomial_series_converges_fast() {
        // the scale hunt lands on 5: 50 = 7^2 + 1 leaves the tiny remainder
        let shallow = nth_root(&int(2), 2, NthRootMethod::Series, 3, 40).unwrap();
        let err = shallow.root.sub(&dec(SQRT2)).abs();
        let coarse = BigDecimal::parse("0.00001", 45).unwrap();
        let fine = BigDecimal::parse("0.0000001", 45).unwrap();
        assert!(err.cmp_value(&coarse) == Ordering::Less);
        assert!(err.cmp_value(&fine) == Ordering::Greater);
        let deep = nth_root(&int(2), 2, NthRootMethod::Series, 12, 40).unwrap();
        assert_close(&deep.root, &dec(SQRT2), 20);
        assert_eq!(deep.history.len(), 12);
    }

    #[test]
    fn binomial_series_reaches_cube_roots() {
        let report = nth_root(&int(10), 3, NthRootMethod::Series, 20, 40).unwrap();
        assert_close(&report.root, &dec(CBRT10), 18);
    }

    #[test]
    fn corrected_divisor_needs_four_terms_for_ten_digits() {
        let report = nth_root(&int(200), 2, NthRootMethod::Divisor, 4, 40).unwrap();
        assert_close(&report.root, &dec(SQRT200), 9);
        assert_eq!(report.history.len(), 4);
        // the divisor itself: 28 + 1/7 - 1/1372 + 1/134456
        let divisor = BigDecimal::from_int(4, 45)
            .div(&report.root.sub(&BigDecimal::from_int(14, 45)));
        assert_close(&divisor, &dec("28.1421357"), 6);
        assert!(report.residual.is_positive());
    }

    #[test]
    fn divisor_cube_root_is_a_small_fraction() {
        // three divisor terms give 2 + 2/(233/18) = 502/233
        let report = nth_root(&int(10), 3, NthRootMethod::Divisor, 3, 40).unwrap();
        assert_close(&report.root, &to_decimal(&rat(502, 233), 45), 30);
    }

    #[test]
    fn approximant_ladder_reproduces_classical_fractions() {
        let report = nth_root(&int(2), 2, NthRootMethod::RationalApproximant, 2, 40).unwrap();
        assert_close(&report.history[0], &to_decimal(&rat(7, 5), 45), 30);
        assert_close(&report.history[1], &to_decimal(&rat(41, 29), 45), 30);
        let truth = dec(SQRT2);
        let e1 = report.history[0].sub(&truth).abs();
        let e2 = report.history[1].sub(&truth).abs();
        assert!(e2.cmp_value(&e1) == Ordering::Less);
    }

    #[test]
    fn nth_root_input_validation() {
        assert!(matches!(
            nth_root(&int(-2), 2, NthRootMethod::Series, 3, 20),
            Err(RootError::InvalidInput(_))
        ));
        assert!(matches!(
            nth_root(&int(2), 1, NthRootMethod::Series, 3, 20),
            Err(RootError::InvalidInput(_))
        ));
        assert!(matches!(
            nth_root(&int(2), 2, NthRootMethod::Series, 0, 20),
            Err(RootError::InvalidInput(_))
        ));
    }

    #[test]
    fn double_factor_is_detected() {
        let poly = Polynomial::from_ints(&[8, -4, -2, 1]);
        let repeated = equal_roots(&poly).unwrap();
        assert_eq!(repeated, vec![(Polynomial::from_ints(&[-2, 1]), 2)]);
    }

    #[test]
    fn squarefree_polynomials_have_no_equal_roots() {
        let poly = Polynomial::from_ints(&[-2, 0, 1]);
        assert!(equal_roots(&poly).unwrap().is_empty());
    }

    #[test]
    fn triple_factor_is_detected() {
        let poly = Polynomial::from_ints(&[-2, 5, -3, -1, 1]);
        let repeated = equal_roots(&poly).unwrap();
        assert_eq!(repeated, vec![(Polynomial::from_ints(&[-1, 1]), 3)]);
    }

    #[test]
    fn decomposition_reassembles_the_polynomial() {
        let poly = Polynomial::from_ints(&[-3, 1, -6, 2, -3, 1]);
        let decomp = square_free_decomposition(&poly);
        let mut product = Polynomial::one();
        for (factor, mult) in &decomp {
            for _ in 0..*mult {
                product = product.mul(factor);
            }
        }
        assert_eq!(product, poly.monic());
        assert_eq!(decomp.len(), 2);
    }

    #[test]
    fn critical_value_signs_count_the_real_roots() {
        // stationary values -129, -1, -4 at -3, 1, 2: two sign changes
        // against the positive tails, so exactly two real roots
        let poly = Polynomial::from_ints(&[-12, 24, -14, 0, 1]);
        assert_eq!(poly.eval(&int(-3)), int(-129));
        assert_eq!(poly.eval(&int(1)), int(-1));
        assert_eq!(poly.eval(&int(2)), int(-4));
        let nature = root_nature(&poly).unwrap();
        assert_eq!(nature.real_count, 2);
        assert_eq!(nature.imaginary_lower_bound, 2);
        assert_eq!(
            nature.intervals,
            vec![
                RootInterval { lo: None, hi: Some(int(-3)) },
                RootInterval { lo: Some(int(2)), hi: None },
            ]
        );
    }

    #[test]
    fn quartic_families_split_by_real_count() {
        let all_real = root_nature(&Polynomial::from_ints(&[-4, 12, -9, 0, 1])).unwrap();
        assert_eq!(all_real.real_count, 4);
        assert_sorted_disjoint(&all_real.intervals);
        let none_real = root_nature(&Polynomial::from_ints(&[6, -2, 1, 0, 1])).unwrap();
        assert_eq!(none_real.real_count, 0);
        let shifted = root_nature(&Polynomial::from_ints(&[20, -16, 8, -4, 1])).unwrap();
        assert_eq!(shifted.real_count, 0);
        assert_eq!(shifted.imaginary_lower_bound, 4);
    }

    #[test]
    fn rational_and_irrational_roots_mix() {
        let poly = Polynomial::from_ints(&[-1, -2, 0, 1]);
        let nature = root_nature(&poly).unwrap();
        assert_eq!(nature.real_count, 3);
        assert_eq!(nature.intervals.len(), 3);
        assert_eq!(nature.intervals[0].lo, Some(int(-1)));
        assert_eq!(nature.intervals[0].hi, Some(int(-1)));
        assert_sorted_disjoint(&nature.intervals);
    }

    #[test]
    fn nearly_coincident_roots_are_still_separated() {
        // the local maximum value is 2 sqrt(3)/9 = 0.38490017...; the
        // constant 0.3849 stays just below it, leaving three real roots,
        // two of them about 6e-4 apart
        let poly = Polynomial::new(vec![rat(-3849, 10000), int(2), int(-3), int(1)]);
        let nature = root_nature(&poly).unwrap();
        assert_eq!(nature.real_count, 3);
        assert_eq!(nature.intervals.len(), 3);
        assert_sorted_disjoint(&nature.intervals);
    }

    #[test]
    fn multiplicities_enter_the_real_count() {
        let poly = Polynomial::from_ints(&[8, -4, -2, 1]);
        let nature = root_nature(&poly).unwrap();
        assert_eq!(nature.real_count, 3);
        assert_eq!(nature.intervals.len(), 2);
        assert_eq!(nature.imaginary_lower_bound, 0);
        assert_eq!(nature.equal_root_factors, vec![(Polynomial::from_ints(&[-2, 1]), 2)]);
    }

    #[test]
    fn quartic_cofactor_keeps_two_real_roots() {
        let poly = Polynomial::from_ints(&[-1, -1, 1, 1, 1]);
        let nature = root_nature(&poly).unwrap();
        assert_eq!(nature.real_count, 2);
        assert_eq!(nature.imaginary_lower_bound, 2);
    }

    #[test]
    fn linear_polynomials_are_trivial() {
        let nature = root_nature(&Polynomial::from_ints(&[-3, 1])).unwrap();
        assert_eq!(nature.degree, 1);
        assert_eq!(nature.real_count, 1);
        assert_eq!(
            nature.intervals,
            vec![RootInterval { lo: Some(int(3)), hi: Some(int(3)) }]
        );
        assert!(nature.criteria.is_none());
    }

    #[test]
    fn biquadratic_signs_alternate_all_the_way() {
        let criteria = coefficient_criteria(&Polynomial::from_ints(&[4, 0, 5, 0, 1])).unwrap();
        assert_eq!(criteria.newton_signs, vec![1, -1, 1, -1, 1]);
        assert_eq!(criteria.campbell_signs, vec![1, -1, 1, -1, 1]);
        assert_eq!(criteria.newton_imaginary_bound(), 4);
        assert_eq!(criteria.campbell_imaginary_bound(), 4);
    }

    #[test]
    fn depressed_cubic_shows_one_variation_pair() {
        let criteria = coefficient_criteria(&Polynomial::from_ints(&[1, 1, 0, 1])).unwrap();
        assert_eq!(criteria.newton_signs, vec![1, -1, 1, 1]);
        assert_eq!(criteria.newton_imaginary_bound(), 2);
    }

    #[test]
    fn both_rules_agree_on_cubics() {
        let cubics = [
            Polynomial::from_ints(&[1, 1, 0, 1]),
            Polynomial::from_ints(&[3, -7, 0, 1]),
            Polynomial::new(vec![rat(-33, 16), int(5), int(-4), int(1)]),
        ];
        for p in &cubics {
            let criteria = coefficient_criteria(p).unwrap();
            assert_eq!(criteria.newton_signs, criteria.campbell_signs);
        }
    }

    #[test]
    fn silent_criteria_can_undercount() {
        // both sign tests stay positive here, yet two roots are imaginary:
        // the tests certify pairs but never promise to find them
        let poly = Polynomial::new(vec![rat(-33, 16), int(5), int(-4), int(1)]);
        let criteria = coefficient_criteria(&poly).unwrap();
        assert_eq!(criteria.newton_imaginary_bound(), 0);
        assert_eq!(criteria.campbell_imaginary_bound(), 0);
        assert_eq!(criteria.harriot, (3, 0));
        let nature = root_nature(&poly).unwrap();
        assert_eq!(nature.real_count, 1);
        assert_eq!(nature.imaginary_lower_bound, 2);
    }

    #[test]
    fn neighbor_product_threshold_sits_at_the_table_ratio() {
        // for a quartic the inner ratio is 8/3, so with unit neighbors the
        // flip happens at the reciprocal 3/8 = 0.375
        let plus = Polynomial::new(vec![int(1), int(1), rat(374, 1000), int(1), int(1)]);
        let minus = Polynomial::new(vec![int(1), int(1), rat(376, 1000), int(1), int(1)]);
        assert_eq!(coefficient_criteria(&plus).unwrap().newton_signs[1], 1);
        assert_eq!(coefficient_criteria(&minus).unwrap().newton_signs[1], -1);
    }

    #[test]
    fn distant_product_threshold_and_alternation() {
        // middle ratio of a quartic is 12/5 and the constant term enters
        // negatively: x^4 + x^2 + C flips at C = -5/12
        let plus = Polynomial::new(vec![rat(-416, 1000), int(0), int(1), int(0), int(1)]);
        let minus = Polynomial::new(vec![rat(-417, 1000), int(0), int(1), int(0), int(1)]);
        let cp = coefficient_criteria(&plus).unwrap();
        let cm = coefficient_criteria(&minus).unwrap();
        assert_eq!(cp.campbell_signs[2], 1);
        assert_eq!(cm.campbell_signs[2], -1);
        // the neighbor test sees only the zero products and stays positive
        assert_eq!(cp.newton_signs[2], 1);
        assert_eq!(cm.newton_signs[2], 1);
    }

    #[test]
    fn sextic_middle_ratio_is_forty_nineteenths() {
        let plus = Polynomial::new(vec![
            rat(474, 1000), int(0), int(0), int(1), int(0), int(0), int(1),
        ]);
        let minus = Polynomial::new(vec![
            rat(476, 1000), int(0), int(0), int(1), int(0), int(0), int(1),
        ]);
        assert_eq!(coefficient_criteria(&plus).unwrap().campbell_signs[3], 1);
        assert_eq!(coefficient_criteria(&minus).unwrap().campbell_signs[3], -1);
    }

    #[test]
    fn sign_variation_counts_handle_zero_coefficients() {
        let criteria = coefficient_criteria(&Polynomial::from_ints(&[-1, -1, 1])).unwrap();
        assert_eq!(criteria.harriot, (1, 1));
        // x^2 - 1 has a vanishing middle coefficient; naive succession
        // counting would miss the negative root
        let criteria = coefficient_criteria(&Polynomial::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(criteria.harriot, (1, 1));
    }

    #[test]
    fn criteria_bounds_never_exceed_the_truth() {
        let cases = [
            Polynomial::from_ints(&[4, 0, 5, 0, 1]),
            Polynomial::from_ints(&[1, 1, 0, 1]),
            Polynomial::new(vec![rat(-33, 16), int(5), int(-4), int(1)]),
            Polynomial::from_ints(&[-12, 24, -14, 0, 1]),
            Polynomial::from_ints(&[-4, 12, -9, 0, 1]),
            Polynomial::from_ints(&[1, 0, -2, 0, 0, 1]),
        ];
        for p in &cases {
            let nature = root_nature(p).unwrap();
            let criteria = nature.criteria.as_ref().unwrap();
            let imaginary = nature.imaginary_lower_bound;
            assert!(criteria.newton_imaginary_bound() <= imaginary);
            assert!(criteria.campbell_imaginary_bound() <= imaginary);
            assert_eq!(criteria.newton_imaginary_bound() % 2, 0);
            assert_eq!(criteria.campbell_imaginary_bound() % 2, 0);
        }
    }

    #[test]
    fn parabola_minimum_is_exact() {
        let extrema = polynomial_extrema(&Polynomial::from_ints(&[2, 3, 1]), 20).unwrap();
        assert_eq!(extrema.len(), 1);
        assert_eq!(extrema[0].kind, ExtremumKind::Min);
        assert_eq!(extrema[0].exact_location, Some(rat(-3, 2)));
        assert_eq!(extrema[0].exact_value, Some(rat(-1, 4)));
        assert_eq!(extrema[0].multiplicity, 1);
    }

    #[test]
    fn quartic_valley_has_three_stationary_points() {
        let poly = Polynomial::from_ints(&[12, -24, 22, -8, 1]);
        let extrema = polynomial_extrema(&poly, 20).unwrap();
        let summary: Vec<(BigRational, BigRational, ExtremumKind)> = extrema
            .iter()
            .map(|e| {
                (
                    e.exact_location.clone().unwrap(),
                    e.exact_value.clone().unwrap(),
                    e.kind,
                )
            })
            .collect();
        assert_eq!(
            summary,
            vec![
                (int(1), int(3), ExtremumKind::Min),
                (int(2), int(4), ExtremumKind::Max),
                (int(3), int(3), ExtremumKind::Min),
            ]
        );
    }

    #[test]
    fn flat_inflection_is_neither_min_nor_max() {
        let poly = Polynomial::from_ints(&[1, 0, 0, 5, -5, 1]);
        let extrema = polynomial_extrema(&poly, 20).unwrap();
        assert_eq!(extrema.len(), 3);
        assert_eq!(extrema[0].exact_location, Some(int(0)));
        assert_eq!(extrema[0].kind, ExtremumKind::Neither);
        assert_eq!(extrema[0].multiplicity, 2);
        assert_eq!(extrema[1].exact_location, Some(int(1)));
        assert_eq!(extrema[1].kind, ExtremumKind::Max);
        assert_eq!(extrema[1].exact_value, Some(int(2)));
        assert_eq!(extrema[2].exact_location, Some(int(3)));
        assert_eq!(extrema[2].kind, ExtremumKind::Min);
        assert_eq!(extrema[2].exact_value, Some(int(-26)));
    }

    #[test]
    fn sextic_with_complex_critical_pair() {
        let poly = Polynomial::from_ints(&[20, 0, 0, -20, 15, -12, 10]);
        let extrema = polynomial_extrema(&poly, 20).unwrap();
        assert_eq!(extrema.len(), 2);
        assert_eq!(extrema[0].exact_location, Some(int(0)));
        assert_eq!(extrema[0].kind, ExtremumKind::Neither);
        assert_eq!(extrema[1].exact_location, Some(int(1)));
        assert_eq!(extrema[1].kind, ExtremumKind::Min);
        assert_eq!(extrema[1].exact_value, Some(int(13)));
    }

    #[test]
    fn bounded_quotient_has_symmetric_peaks() {
        let num = Polynomial::from_ints(&[0, 1]);
        let den = Polynomial::from_ints(&[1, 0, 1]);
        let extrema = extrema(&num, &den, 20).unwrap();
        assert_eq!(extrema.len(), 2);
        assert_eq!(extrema[0].exact_location, Some(int(-1)));
        assert_eq!(extrema[0].exact_value, Some(rat(-1, 2)));
        assert_eq!(extrema[0].kind, ExtremumKind::Min);
        assert_eq!(extrema[1].exact_location, Some(int(1)));
        assert_eq!(extrema[1].exact_value, Some(rat(1, 2)));
        assert_eq!(extrema[1].kind, ExtremumKind::Max);
    }

    #[test]
    fn irrational_stationary_points_are_refined() {
        let num = Polynomial::from_ints(&[2, -3, 1]);
        let den = Polynomial::from_ints(&[2, 3, 1]);
        let extrema = extrema(&num, &den, 30).unwrap();
        assert_eq!(extrema.len(), 2);
        assert!(extrema[0].exact_location.is_none());
        let minus_sqrt2 = dec(SQRT2).neg();
        assert_close(&extrema[0].location, &minus_sqrt2, 25);
        assert_eq!(extrema[0].kind, ExtremumKind::Max);
        assert_close(&extrema[0].value, &dec(QUOTIENT_MAX), 25);
        assert_close(&extrema[1].location, &dec(SQRT2), 25);
        assert_eq!(extrema[1].kind, ExtremumKind::Min);
        assert_close(&extrema[1].value, &dec(QUOTIENT_MIN), 25);
    }

    #[test]
    fn quotient_extremum_away_from_poles() {
        let num = Polynomial::from_ints(&[1, -1, 1]);
        let den = Polynomial::from_ints(&[-1, 1, 1]);
        let extrema = extrema(&num, &den, 20).unwrap();
        assert_eq!(extrema.len(), 2);
        assert_eq!(extrema[0].exact_location, Some(int(0)));
        assert_eq!(extrema[0].exact_value, Some(int(-1)));
        assert_eq!(extrema[0].kind, ExtremumKind::Max);
        assert_eq!(extrema[1].exact_location, Some(int(2)));
        assert_eq!(extrema[1].exact_value, Some(rat(3, 5)));
        assert_eq!(extrema[1].kind, ExtremumKind::Min);
    }

    #[test]
    fn odd_quotient_with_unit_extrema() {
        let num = Polynomial::from_ints(&[0, 1, 0, 1]);
        let den = Polynomial::from_ints(&[1, 0, -1, 0, 1]);
        let extrema = extrema(&num, &den, 20).unwrap();
        assert_eq!(extrema.len(), 2);
        assert_eq!(extrema[0].exact_location, Some(int(-1)));
        assert_eq!(extrema[0].exact_value, Some(int(-2)));
        assert_eq!(extrema[0].kind, ExtremumKind::Min);
        assert_eq!(extrema[1].exact_location, Some(int(1)));
        assert_eq!(extrema[1].exact_value, Some(int(2)));
        assert_eq!(extrema[1].kind, ExtremumKind::Max);
    }

    #[test]
    fn golden_section_stationary_points() {
        let num = Polynomial::from_ints(&[0, -1, 0, 1]);
        let den = Polynomial::from_ints(&[1, 0, -1, 0, 1]);
        let extrema = extrema(&num, &den, 30).unwrap();
        assert_eq!(extrema.len(), 4);
        let phi = dec(PHI);
        let inv_phi = dec(INV_PHI);
        let half = to_decimal(&rat(1, 2), 40);
        let cases = [
            (phi.neg(), half.neg(), ExtremumKind::Min),
            (inv_phi.neg(), half.clone(), ExtremumKind::Max),
            (inv_phi.clone(), half.neg(), ExtremumKind::Min),
            (phi.clone(), half.clone(), ExtremumKind::Max),
        ];
        for (e, (loc, val, kind)) in extrema.iter().zip(cases.iter()) {
            assert!(e.exact_location.is_none());
            assert_close(&e.location, loc, 25);
            assert_close(&e.value, val, 25);
            assert_eq!(e.kind, *kind);
        }
    }

    #[test]
    fn pure_powers_at_the_origin() {
        let cubic = polynomial_extrema(&Polynomial::from_ints(&[0, 0, 0, 1]), 20).unwrap();
        assert_eq!(cubic.len(), 1);
        assert_eq!(cubic[0].kind, ExtremumKind::Neither);
        assert_eq!(cubic[0].multiplicity, 2);
        let quartic = polynomial_extrema(&Polynomial::from_ints(&[0, 0, 0, 0, 1]), 20).unwrap();
        assert_eq!(quartic.len(), 1);
        assert_eq!(quartic[0].kind, ExtremumKind::Min);
        assert_eq!(quartic[0].multiplicity, 3);
        assert_eq!(quartic[0].exact_value, Some(int(0)));
    }

    #[test]
    fn stationary_point_on_a_pole_is_an_error() {
        let num = Polynomial::one();
        let den = Polynomial::from_ints(&[0, 0, 1]);
        assert!(matches!(
            extrema(&num, &den, 20),
            Err(RootError::DenominatorVanishes { .. })
        ));
    }

    #[test]
    fn trinomial_case_analysis_matches_isolation() {
        let three = trinomial_real_roots(3, 2, &int(-2), &int(1)).unwrap();
        assert_eq!(three.real_count, 3);
        let none = trinomial_real_roots(2, 2, &int(1), &int(1)).unwrap();
        assert_eq!(none.real_count, 0);
        let sextic = trinomial_real_roots(4, 2, &int(1), &int(1)).unwrap();
        assert_eq!(sextic.real_count, 0);
        let two = trinomial_real_roots(2, 2, &int(1), &int(-1)).unwrap();
        assert_eq!(two.real_count, 2);
        let cubic = trinomial_real_roots(2, 1, &int(-3), &int(1)).unwrap();
        assert_eq!(cubic.real_count, 3);
        let single = trinomial_real_roots(3, 2, &int(1), &int(1)).unwrap();
        assert_eq!(single.real_count, 1);
    }

    #[test]
    fn trinomial_grid_is_internally_consistent() {
        let values = [int(-2), int(-1), int(1), int(2)];
        for m in 1..=3u32 {
            for n in 1..=2u32 {
                for a in &values {
                    for b in &values {
                        let result = trinomial_real_roots(m, n, a, b);
                        assert!(
                            result.is_ok(),
                            "disagreement at m={m} n={n} a={a} b={b}: {result:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn trinomial_input_validation() {
        assert!(matches!(
            trinomial_real_roots(0, 1, &int(1), &int(1)),
            Err(RootError::InvalidInput(_))
        ));
        assert!(matches!(
            trinomial_real_roots(1, 1, &int(0), &int(1)),
            Err(RootError::InvalidInput(_))
        ));
    }
}
