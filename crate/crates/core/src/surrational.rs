//! Surrationals: fractions of surintegers with positive denominators.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{ArithError, ArithResult};
use crate::natural::{nat_meet, nat_sub_exact};
use crate::ordinal::Ordinal;
use crate::surinteger::{
    in_lambda_ring, neg, si_add, si_compare, si_mul, si_sub, validate_lambda, SurInteger,
};

/// Steps allowed in a single long division before giving up.
const DIVISION_STEPS: usize = 100_000;

/// `num / den` with `den > 0`. Equality and order are by cross-multiplication,
/// so unreduced representations compare equal to their reduced forms.
#[derive(Debug, Clone)]
pub struct SurRational {
    num: SurInteger,
    den: SurInteger,
    reduced: bool,
}

impl SurRational {
    /// Builds `num / den` and reduces it as far as the reduction strategy allows.
    pub fn new(num: SurInteger, den: SurInteger) -> ArithResult<Self> {
        Ok(reduce(&SurRational::unreduced(num, den)?))
    }

    /// Builds `num / den` without reducing; only the sign is normalized.
    pub fn unreduced(num: SurInteger, den: SurInteger) -> ArithResult<Self> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (num, den) = if den.is_negative() {
            (neg(&num), neg(&den))
        } else {
            (num, den)
        };
        let reduced = den.is_one();
        Ok(SurRational { num, den, reduced })
    }

    pub fn zero() -> Self {
        SurRational::from(SurInteger::zero())
    }

    pub fn one() -> Self {
        SurRational::from(SurInteger::one())
    }

    /// `a / b` for machine integers.
    pub fn ratio(a: i64, b: i64) -> ArithResult<Self> {
        SurRational::new(SurInteger::from(a), SurInteger::from(b))
    }

    pub fn num(&self) -> &SurInteger {
        &self.num
    }

    pub fn den(&self) -> &SurInteger {
        &self.den
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn signum(&self) -> i8 {
        self.num.signum()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// The value as a surinteger when the denominator divides the numerator.
    pub fn to_surinteger(&self) -> Option<SurInteger> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        exact_divide(&self.num, &self.den).ok()
    }

    /// True when both numerator and denominator are finite.
    pub fn is_finite_rational(&self) -> bool {
        let r = reduce(self);
        r.num.is_finite() && r.den.is_finite()
    }

    pub fn abs(&self) -> SurRational {
        if self.is_negative() {
            q_neg(self)
        } else {
            self.clone()
        }
    }
}

impl From<SurInteger> for SurRational {
    fn from(a: SurInteger) -> Self {
        SurRational {
            num: a,
            den: SurInteger::one(),
            reduced: true,
        }
    }
}

impl From<i64> for SurRational {
    fn from(n: i64) -> Self {
        SurRational::from(SurInteger::from(n))
    }
}

impl From<&Ordinal> for SurRational {
    fn from(a: &Ordinal) -> Self {
        SurRational::from(SurInteger::from(a))
    }
}

impl PartialEq for SurRational {
    fn eq(&self, other: &Self) -> bool {
        q_eq(self, other)
    }
}

impl Eq for SurRational {}

impl PartialOrd for SurRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SurRational {
    fn cmp(&self, other: &Self) -> Ordering {
        q_compare(self, other)
    }
}

pub fn q_eq(p: &SurRational, q: &SurRational) -> bool {
    si_mul(&p.num, &q.den) == si_mul(&q.num, &p.den)
}

pub fn q_compare(p: &SurRational, q: &SurRational) -> Ordering {
    si_compare(&si_mul(&p.num, &q.den), &si_mul(&q.num, &p.den))
}

pub fn q_add(p: &SurRational, q: &SurRational) -> SurRational {
    let num = si_add(&si_mul(&p.num, &q.den), &si_mul(&q.num, &p.den));
    let den = si_mul(&p.den, &q.den);
    reduce(&SurRational {
        num,
        den,
        reduced: false,
    })
}

pub fn q_neg(p: &SurRational) -> SurRational {
    SurRational {
        num: neg(&p.num),
        den: p.den.clone(),
        reduced: p.reduced,
    }
}

pub fn q_sub(p: &SurRational, q: &SurRational) -> SurRational {
    q_add(p, &q_neg(q))
}

pub fn q_mul(p: &SurRational, q: &SurRational) -> SurRational {
    reduce(&SurRational {
        num: si_mul(&p.num, &q.num),
        den: si_mul(&p.den, &q.den),
        reduced: false,
    })
}

/// Reciprocal; the reciprocal of zero is zero.
pub fn q_inv(p: &SurRational) -> SurRational {
    if p.is_zero() {
        return SurRational::zero();
    }
    let (num, den) = if p.num.is_negative() {
        (neg(&p.den), neg(&p.num))
    } else {
        (p.den.clone(), p.num.clone())
    };
    SurRational {
        num,
        den,
        reduced: p.reduced,
    }
}

/// Quotient `p / q`, refusing a zero divisor.
pub fn q_div(p: &SurRational, q: &SurRational) -> ArithResult<SurRational> {
    if q.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    Ok(q_mul(p, &q_inv(q)))
}

pub fn q_pow(p: &SurRational, n: u32) -> SurRational {
    let mut acc = SurRational::one();
    for _ in 0..n {
        acc = q_mul(&acc, p);
    }
    acc
}

/// Cancels common factors where one can be found.
///
/// Strategy: integer content, then the largest common monomial `ω^e`, then exact
/// division of one side by the other. Divisors of a monomial are monomials, so
/// the result is fully reduced whenever either side ends up a monomial.
pub fn reduce(p: &SurRational) -> SurRational {
    if p.reduced {
        return p.clone();
    }
    if p.num.is_zero() {
        return SurRational::from(SurInteger::zero());
    }
    let g = BigInt::from(p.num.content().gcd(&p.den.content()));
    let mut num = p.num.divide_coefficients(&g);
    let mut den = p.den.divide_coefficients(&g);

    let common = num
        .terms()
        .iter()
        .chain(den.terms())
        .map(|t| t.exponent.clone())
        .reduce(|a, b| nat_meet(&a, &b))
        .unwrap_or_default();
    if !common.is_zero() {
        num = shift_down(&num, &common);
        den = shift_down(&den, &common);
    }

    let mut reduced = num.is_monomial() || den.is_monomial();
    if !reduced {
        if let Ok(q) = exact_divide(&num, &den) {
            num = q;
            den = SurInteger::one();
            reduced = true;
        } else if let Ok(q) = exact_divide(&den, &num) {
            num = SurInteger::one();
            den = q;
            reduced = true;
        }
    }
    if den.is_negative() {
        num = neg(&num);
        den = neg(&den);
    }
    SurRational { num, den, reduced }
}

/// Divides every exponent by `ω^e`, which must divide each term.
fn shift_down(a: &SurInteger, e: &Ordinal) -> SurInteger {
    SurInteger::from_terms(a.terms().iter().map(|t| {
        (
            nat_sub_exact(&t.exponent, e).expect("common monomial divides every term"),
            t.coefficient.clone(),
        )
    }))
}

/// The `c` with `b · c = a`, found by leading-term long division.
pub fn exact_divide(a: &SurInteger, b: &SurInteger) -> ArithResult<SurInteger> {
    if b.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    let lead = b.leading_term().expect("nonzero").clone();
    let mut quotient = SurInteger::zero();
    let mut rest = a.clone();
    for _ in 0..DIVISION_STEPS {
        let Some(t) = rest.leading_term() else {
            return Ok(quotient);
        };
        let exponent = nat_sub_exact(&t.exponent, &lead.exponent)
            .ok_or_else(|| ArithError::NotDivisible("leading exponents do not divide".into()))?;
        let (c, r) = t.coefficient.div_rem(&lead.coefficient);
        if !r.is_zero() {
            return Err(ArithError::NotDivisible(
                "leading coefficients do not divide".into(),
            ));
        }
        let step = SurInteger::monomial(exponent, c);
        rest = si_sub(&rest, &si_mul(&step, b));
        quotient = si_add(&quotient, &step);
    }
    Err(ArithError::resource(
        "long division did not terminate within the step budget",
    ))
}

/// Membership in `ℚ_λ`, judged on the reduced representative.
pub fn in_lambda_field(p: &SurRational, lambda: &Ordinal) -> ArithResult<bool> {
    validate_lambda(lambda)?;
    let r = reduce(p);
    Ok(in_lambda_ring(&r.num, lambda)? && in_lambda_ring(&r.den, lambda)?)
}

/// Least `n ≤ bound` with `|q| ≤ n·|p|`.
pub fn archimedean_witness(
    p: &SurRational,
    q: &SurRational,
    bound: &BigUint,
) -> ArithResult<BigUint> {
    if p.is_zero() {
        return Err(ArithError::undefined("archimedean witness against zero"));
    }
    if q.is_zero() {
        return Ok(BigUint::zero());
    }
    // |q| ≤ n·|p|  ⟺  big ≤ n·small with both sides positive surintegers.
    let big = si_mul(&q.num.abs(), &p.den);
    let small = si_mul(&p.num.abs(), &q.den);
    let (bt, st) = (
        big.leading_term().expect("nonzero"),
        small.leading_term().expect("nonzero"),
    );
    let n = match bt.exponent.cmp(&st.exponent) {
        Ordering::Greater => {
            return Err(ArithError::NoWitness(
                "the ratio is infinite, so no natural multiple suffices".into(),
            ))
        }
        Ordering::Less => BigUint::one(),
        Ordering::Equal => {
            let top = bt.coefficient.magnitude();
            let bottom = st.coefficient.magnitude();
            let n0 = top.div_ceil(bottom);
            if si_compare(&big, &small.scale(&BigInt::from(n0.clone()))) == Ordering::Greater {
                n0 + 1u32
            } else {
                n0
            }
        }
    };
    if n > *bound {
        return Err(ArithError::NoWitness(format!(
            "least witness exceeds the bound {bound}"
        )));
    }
    Ok(n)
}

/// `(p + q) / 2`, for `p < q`.
pub fn midpoint(p: &SurRational, q: &SurRational) -> ArithResult<SurRational> {
    if q_compare(p, q) != Ordering::Less {
        return Err(ArithError::undefined("midpoint needs p < q"));
    }
    Ok(q_mul(&q_add(p, q), &SurRational::ratio(1, 2)?))
}

/// Integer `n`-th root of a natural, if exact.
pub(crate) fn exact_nth_root(x: &BigUint, n: u32) -> Option<BigUint> {
    let r = x.nth_root(n);
    (r.pow(n) == *x).then_some(r)
}
