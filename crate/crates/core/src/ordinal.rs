//! Ordinals below epsilon-zero in iterated Cantor normal form, with the
//! recursive (non-commutative) arithmetic.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{ArithError, ArithResult, Limits};

/// One summand `ω^exponent · coefficient`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    pub exponent: Ordinal,
    pub coefficient: BigUint,
}

impl Term {
    pub fn new(exponent: Ordinal, coefficient: BigUint) -> Self {
        Term {
            exponent,
            coefficient,
        }
    }
}

/// An ordinal `< ε₀`. Terms are kept with strictly decreasing exponents and
/// nonzero coefficients, so the derived lexicographic order is the ordinal order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrdinalClass {
    Zero,
    Successor,
    Limit,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from(1u32)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    /// `ω^e`.
    pub fn omega_pow(e: Ordinal) -> Self {
        Ordinal::monomial(e, BigUint::one())
    }

    /// `ω^e · c`; zero when `c = 0`.
    pub fn monomial(e: Ordinal, c: BigUint) -> Self {
        if c.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term::new(e, c)],
        }
    }

    /// Builds an ordinal from terms, rejecting anything that is not in normal form.
    pub fn from_terms(terms: Vec<Term>) -> ArithResult<Self> {
        let o = Ordinal { terms };
        if o.is_valid() {
            Ok(o)
        } else {
            Err(ArithError::undefined("terms are not in Cantor normal form"))
        }
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<Term>) -> Self {
        let o = Ordinal { terms };
        debug_assert!(o.is_valid(), "malformed ordinal {:?}", o);
        o
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].exponent.is_zero()
            && self.terms[0].coefficient.is_one()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    pub fn is_omega(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].exponent.is_one()
            && self.terms[0].coefficient.is_one()
    }

    /// The value as a natural number, if finite.
    pub fn to_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_natural().and_then(|n| n.to_u64())
    }

    pub fn leading_exponent(&self) -> Option<&Ordinal> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn leading_coefficient(&self) -> Option<&BigUint> {
        self.terms.first().map(|t| &t.coefficient)
    }

    /// True for `ω^ζ` with coefficient 1 (including `1 = ω^0`).
    pub fn is_omega_power(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].coefficient.is_one()
    }

    /// Splits into the part with positive exponents and the finite tail.
    pub fn split_finite(&self) -> (Ordinal, BigUint) {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => (
                Ordinal {
                    terms: self.terms[..self.terms.len() - 1].to_vec(),
                },
                t.coefficient.clone(),
            ),
            _ => (self.clone(), BigUint::zero()),
        }
    }

    /// Checks every normal-form invariant, recursively.
    pub fn is_valid(&self) -> bool {
        self.terms
            .iter()
            .all(|t| !t.coefficient.is_zero() && t.exponent.is_valid())
            && self.terms.windows(2).all(|w| w[0].exponent > w[1].exponent)
    }

    /// Number of terms counted through every nesting level.
    pub fn size(&self) -> usize {
        self.terms.iter().map(|t| 1 + t.exponent.size()).sum()
    }

    /// Height of the exponent tower; 0 for zero, 1 for nonzero naturals.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    fn max_coefficient_bits(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.coefficient.bits().max(t.exponent.max_coefficient_bits()))
            .max()
            .unwrap_or(0)
    }

    /// Fails with `ResourceExceeded` when the value is larger than the limits allow.
    pub fn check_limits(&self, limits: &Limits) -> ArithResult<()> {
        if self.size() > limits.max_terms {
            return Err(ArithError::resource(format!(
                "result has more than {} terms",
                limits.max_terms
            )));
        }
        if self.max_coefficient_bits() > limits.max_bits {
            return Err(ArithError::resource(format!(
                "coefficient exceeds {} bits",
                limits.max_bits
            )));
        }
        Ok(())
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from(BigUint::from(n))
    }
}

impl From<u32> for Ordinal {
    fn from(n: u32) -> Self {
        Ordinal::from(BigUint::from(n))
    }
}

pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

/// Largest element of a finite list; zero for the empty list.
pub fn max_of(values: &[Ordinal]) -> Ordinal {
    values.iter().max().cloned().unwrap_or_default()
}

pub fn classify(a: &Ordinal) -> OrdinalClass {
    match a.terms.last() {
        None => OrdinalClass::Zero,
        Some(t) if t.exponent.is_zero() => OrdinalClass::Successor,
        Some(_) => OrdinalClass::Limit,
    }
}

pub fn successor(a: &Ordinal) -> Ordinal {
    rec_add(a, &Ordinal::one())
}

/// The `β` with `successor(β) = a`, when `a` is a successor.
pub fn predecessor(a: &Ordinal) -> Option<Ordinal> {
    let (head, n) = a.split_finite();
    if n.is_zero() {
        return None;
    }
    Some(rec_add(&head, &Ordinal::from(n - 1u32)))
}

pub fn rec_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let Some(lead) = b.terms.first() else {
        return a.clone();
    };
    let mut terms: Vec<Term> = Vec::with_capacity(a.terms.len() + b.terms.len());
    let mut merged = None;
    for t in &a.terms {
        match t.exponent.cmp(&lead.exponent) {
            Ordering::Greater => terms.push(t.clone()),
            Ordering::Equal => {
                merged = Some(&t.coefficient);
                break;
            }
            Ordering::Less => break,
        }
    }
    let mut rest = b.terms.iter();
    let first = rest.next().expect("nonempty");
    let coefficient = match merged {
        Some(c) => c + &first.coefficient,
        None => first.coefficient.clone(),
    };
    terms.push(Term::new(first.exponent.clone(), coefficient));
    terms.extend(rest.cloned());
    Ordinal::from_terms_unchecked(terms)
}

/// Left-to-right recursive sum of the first `n` entries; missing entries count as 0.
pub fn rec_sum(seq: &[Ordinal], n: usize) -> Ordinal {
    seq.iter()
        .take(n)
        .fold(Ordinal::zero(), |acc, x| rec_add(&acc, x))
}

pub fn rec_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() || b.is_zero() {
        return Ordinal::zero();
    }
    let lead = &a.terms[0].exponent;
    let mut acc = Ordinal::zero();
    for t in &b.terms {
        let piece = if t.exponent.is_zero() {
            let mut terms = a.terms.clone();
            terms[0].coefficient *= &t.coefficient;
            Ordinal::from_terms_unchecked(terms)
        } else {
            Ordinal::monomial(rec_add(lead, &t.exponent), t.coefficient.clone())
        };
        acc = rec_add(&acc, &piece);
    }
    acc
}

pub fn rec_pow(a: &Ordinal, b: &Ordinal) -> ArithResult<Ordinal> {
    rec_pow_with(a, b, &Limits::default())
}

/// Ordinal exponentiation under explicit resource limits.
///
/// A zero base follows the recursion literally: `0^β` is `0` at successor
/// exponents and `1` at limit exponents.
pub fn rec_pow_with(a: &Ordinal, b: &Ordinal, limits: &Limits) -> ArithResult<Ordinal> {
    if b.is_zero() || a.is_one() {
        return Ok(Ordinal::one());
    }
    if a.is_zero() {
        return Ok(match classify(b) {
            OrdinalClass::Limit => Ordinal::one(),
            _ => Ordinal::zero(),
        });
    }
    let (lim, n) = b.split_finite();
    let head = if lim.is_zero() {
        Ordinal::one()
    } else if a.is_finite() {
        let exponent = lim
            .terms
            .iter()
            .map(|t| Term::new(drop_leading_one(&t.exponent), t.coefficient.clone()))
            .collect();
        Ordinal::omega_pow(Ordinal::from_terms_unchecked(exponent))
    } else {
        Ordinal::omega_pow(rec_mul(&a.terms[0].exponent, &lim))
    };
    head.check_limits(limits)?;
    let tail = pow_natural(a, &n, limits)?;
    let result = rec_mul(&head, &tail);
    result.check_limits(limits)?;
    Ok(result)
}

/// The `δ` with `1 +̇ δ = γ`, for `γ ≥ 1`.
fn drop_leading_one(g: &Ordinal) -> Ordinal {
    match g.to_natural() {
        Some(k) => Ordinal::from(k - 1u32),
        None => g.clone(),
    }
}

fn pow_natural(a: &Ordinal, n: &BigUint, limits: &Limits) -> ArithResult<Ordinal> {
    if n.is_zero() {
        return Ok(Ordinal::one());
    }
    if let Some(k) = a.to_natural() {
        let bits = k.bits().saturating_sub(1).max(1);
        let estimate = n
            .to_u64()
            .map(|n| n.saturating_mul(bits))
            .unwrap_or(u64::MAX);
        if estimate > limits.max_bits {
            return Err(ArithError::resource(format!(
                "power exceeds {} bits",
                limits.max_bits
            )));
        }
        let e = n.to_u32().expect("bounded by max_bits");
        return Ok(Ordinal::from(k.pow(e)));
    }
    let mut result = Ordinal::one();
    for i in (0..n.bits()).rev() {
        result = rec_mul(&result, &result);
        if n.bit(i) {
            result = rec_mul(&result, a);
        }
        result.check_limits(limits)?;
    }
    Ok(result)
}

/// The unique `γ` with `a +̇ γ = b`, defined when `a < b`.
pub fn rec_sub_left(a: &Ordinal, b: &Ordinal) -> ArithResult<Ordinal> {
    if a >= b {
        return Err(ArithError::undefined(
            "left subtraction needs the subtrahend strictly below the minuend",
        ));
    }
    Ok(sub_left_unchecked(a, b))
}

fn sub_left_unchecked(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let i = a
        .terms
        .iter()
        .zip(&b.terms)
        .take_while(|(x, y)| x == y)
        .count();
    if i == a.terms.len() {
        return Ordinal::from_terms_unchecked(b.terms[i..].to_vec());
    }
    let (ta, tb) = (&a.terms[i], &b.terms[i]);
    if ta.exponent == tb.exponent {
        let mut terms = vec![Term::new(
            tb.exponent.clone(),
            &tb.coefficient - &ta.coefficient,
        )];
        terms.extend_from_slice(&b.terms[i + 1..]);
        Ordinal::from_terms_unchecked(terms)
    } else {
        Ordinal::from_terms_unchecked(b.terms[i..].to_vec())
    }
}

/// Left division: the unique `(q, r)` with `a = d ·̇ q +̇ r` and `r < d`.
pub fn div_rem(a: &Ordinal, d: &Ordinal) -> ArithResult<(Ordinal, Ordinal)> {
    if d.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    let e1 = &d.terms[0].exponent;
    let c1 = &d.terms[0].coefficient;
    let mut quotient = Vec::new();
    let mut idx = 0;
    while idx < a.terms.len() && a.terms[idx].exponent > *e1 {
        let t = &a.terms[idx];
        quotient.push(Term::new(
            sub_left_unchecked(e1, &t.exponent),
            t.coefficient.clone(),
        ));
        idx += 1;
    }
    let rest = Ordinal::from_terms_unchecked(a.terms[idx..].to_vec());
    let mut m = match rest.terms.first() {
        Some(t) if t.exponent == *e1 => &t.coefficient / c1,
        _ => BigUint::zero(),
    };
    if !m.is_zero() && rec_mul(d, &Ordinal::from(m.clone())) > rest {
        m -= 1u32;
    }
    let remainder = if m.is_zero() {
        rest
    } else {
        let dm = rec_mul(d, &Ordinal::from(m.clone()));
        if dm == rest {
            Ordinal::zero()
        } else {
            sub_left_unchecked(&dm, &rest)
        }
    };
    if !m.is_zero() {
        quotient.push(Term::new(Ordinal::zero(), m));
    }
    Ok((Ordinal::from_terms_unchecked(quotient), remainder))
}

/// One digit `base^exponent ·̇ coefficient` of a base expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digit {
    pub exponent: Ordinal,
    pub coefficient: Ordinal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseExpansion {
    pub base: Ordinal,
    pub digits: Vec<Digit>,
}

impl BaseExpansion {
    /// Evaluates `Σ base^ζ_i ·̇ δ_i` left to right.
    pub fn recompose(&self) -> ArithResult<Ordinal> {
        let mut acc = Ordinal::zero();
        for d in &self.digits {
            let p = rec_pow(&self.base, &d.exponent)?;
            acc = rec_add(&acc, &rec_mul(&p, &d.coefficient));
        }
        Ok(acc)
    }
}

/// Expansion of `a` in base `base > 1` with decreasing exponents and digits in `(0, base)`.
pub fn base_expand(a: &Ordinal, base: &Ordinal) -> ArithResult<BaseExpansion> {
    if *base <= Ordinal::one() {
        return Err(ArithError::undefined("base must exceed 1"));
    }
    let mut digits = Vec::new();
    let mut rest = a.clone();
    while !rest.is_zero() {
        let exponent = log_floor(&rest, base)?;
        let power = rec_pow(base, &exponent)?;
        let (coefficient, remainder) = div_rem(&rest, &power)?;
        digits.push(Digit {
            exponent,
            coefficient,
        });
        rest = remainder;
    }
    Ok(BaseExpansion {
        base: base.clone(),
        digits,
    })
}

/// Largest `γ` with `base^γ ≤ a`, for `a ≥ 1`.
fn log_floor(a: &Ordinal, base: &Ordinal) -> ArithResult<Ordinal> {
    let lead = &a.terms[0];
    if let Some(b) = base.to_natural() {
        let mut n = 0u64;
        let mut p = b.clone();
        while p <= lead.coefficient {
            n += 1;
            p *= &b;
        }
        let omega_part = rec_mul(&Ordinal::omega(), &lead.exponent);
        return Ok(rec_add(&omega_part, &Ordinal::from(n)));
    }
    let (q, r) = div_rem(&lead.exponent, &base.terms[0].exponent)?;
    if r.is_zero() && classify(&q) == OrdinalClass::Successor && rec_pow(base, &q)? > *a {
        return Ok(predecessor(&q).expect("successor"));
    }
    Ok(q)
}
