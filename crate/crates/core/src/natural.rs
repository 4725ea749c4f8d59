//! Natural (Hessenberg) sum and product, and the closure-point predicates.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{ArithError, ArithResult, Limits};
use crate::ordinal::{rec_mul, rec_pow_with, Ordinal, Term};

fn from_map(map: BTreeMap<Ordinal, BigUint>) -> Ordinal {
    let terms = map
        .into_iter()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| Term::new(e, c))
        .collect();
    Ordinal::from_terms_unchecked(terms)
}

pub fn nat_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let mut map: BTreeMap<Ordinal, BigUint> = BTreeMap::new();
    for t in a.terms().iter().chain(b.terms()) {
        *map.entry(t.exponent.clone()).or_default() += &t.coefficient;
    }
    from_map(map)
}

pub fn nat_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let mut map: BTreeMap<Ordinal, BigUint> = BTreeMap::new();
    for x in a.terms() {
        for y in b.terms() {
            *map.entry(nat_add(&x.exponent, &y.exponent)).or_default() +=
                &x.coefficient * &y.coefficient;
        }
    }
    from_map(map)
}

/// Natural sum of the first `n` entries.
pub fn nat_sum(seq: &[Ordinal], n: usize) -> Ordinal {
    seq.iter()
        .take(n)
        .fold(Ordinal::zero(), |acc, x| nat_add(&acc, x))
}

/// The `d` with `nat_add(e, d) = x`, if one exists (coefficientwise subtraction).
pub fn nat_sub_exact(x: &Ordinal, e: &Ordinal) -> Option<Ordinal> {
    let mut map: BTreeMap<Ordinal, BigUint> = x
        .terms()
        .iter()
        .map(|t| (t.exponent.clone(), t.coefficient.clone()))
        .collect();
    for t in e.terms() {
        let slot = map.get_mut(&t.exponent)?;
        if *slot < t.coefficient {
            return None;
        }
        *slot -= &t.coefficient;
    }
    Some(from_map(map))
}

/// Coefficientwise minimum; the largest common natural summand.
pub fn nat_meet(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let other: BTreeMap<&Ordinal, &BigUint> = b
        .terms()
        .iter()
        .map(|t| (&t.exponent, &t.coefficient))
        .collect();
    let mut map = BTreeMap::new();
    for t in a.terms() {
        if let Some(c) = other.get(&t.exponent) {
            map.insert(t.exponent.clone(), (*c).min(&t.coefficient).clone());
        }
    }
    from_map(map)
}

/// Multiplies every coefficient by `k`: the natural sum of `k` copies.
pub fn nat_scale(a: &Ordinal, k: &BigUint) -> Ordinal {
    if k.is_zero() {
        return Ordinal::zero();
    }
    let terms = a
        .terms()
        .iter()
        .map(|t| Term::new(t.exponent.clone(), &t.coefficient * k))
        .collect();
    Ordinal::from_terms_unchecked(terms)
}

/// Divides every coefficient by `k` when all are divisible.
pub fn nat_divide(a: &Ordinal, k: &BigUint) -> Option<Ordinal> {
    if k.is_zero() {
        return None;
    }
    let mut terms = Vec::with_capacity(a.terms().len());
    for t in a.terms() {
        if !(&t.coefficient % k).is_zero() {
            return None;
        }
        terms.push(Term::new(t.exponent.clone(), &t.coefficient / k));
    }
    Some(Ordinal::from_terms_unchecked(terms))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    /// `β +̇ α = α` for every `β < α`.
    GammaAdd,
    /// `β ·̇ α = α` for every `0 < β < α`.
    DeltaMul,
    /// `β ^ α = α` for every `2 ≤ β < α`.
    EpsilonExp,
    /// `β + γ < α` for all `β, γ < α`.
    NatAdd,
    /// `β × γ < α` for all `β, γ < α`.
    NatMul,
}

/// Decides closure membership from the shape of the normal form.
///
/// Small cases, fixed by evaluating the defining formula over every smaller ordinal:
///
/// | kind       | 0   | 1   | 2   | transfinite members   |
/// |------------|-----|-----|-----|-----------------------|
/// | GammaAdd   | yes | yes | no  | `ω^ζ`                 |
/// | DeltaMul   | yes | yes | yes | `ω^(ω^ζ)`             |
/// | EpsilonExp | yes | yes | yes | `ω` only below `ε₀`   |
/// | NatAdd     | yes | yes | no  | `ω^ζ`                 |
/// | NatMul     | yes | yes | yes | `ω^(ω^ζ)`             |
///
/// For DeltaMul the range starts at 1 (zero absorbs everything), and for
/// EpsilonExp at 2 (bases 0 and 1 are constant); otherwise `ω` itself would
/// fail both conditions. Over those ranges 1 and 2 are members of both kinds.
pub fn is_closure_number(kind: ClosureKind, a: &Ordinal) -> bool {
    let small = a.to_u64();
    match kind {
        ClosureKind::GammaAdd | ClosureKind::NatAdd => a.is_zero() || a.is_omega_power(),
        ClosureKind::DeltaMul | ClosureKind::NatMul => {
            matches!(small, Some(0..=2)) || is_power_tower_two(a)
        }
        ClosureKind::EpsilonExp => matches!(small, Some(0..=2)) || a.is_omega(),
    }
}

/// True for `ω^(ω^ζ)`.
fn is_power_tower_two(a: &Ordinal) -> bool {
    a.is_omega_power()
        && a.leading_exponent()
            .is_some_and(|e| !e.is_zero() && e.is_omega_power())
}

/// The least closure number of `kind` strictly above `a`.
pub fn next_closure(kind: ClosureKind, a: &Ordinal) -> ArithResult<Ordinal> {
    if !is_closure_number(kind, a) {
        return Err(ArithError::undefined(format!(
            "{} is not a closure number of this kind",
            crate::print::ordinal_to_string(a)
        )));
    }
    let omega = Ordinal::omega();
    if let Some(k) = a.to_u64() {
        let next = match (kind, k) {
            (ClosureKind::GammaAdd | ClosureKind::NatAdd, 0) => Some(1u64),
            (ClosureKind::DeltaMul | ClosureKind::NatMul | ClosureKind::EpsilonExp, 0 | 1) => {
                Some(k + 1)
            }
            _ => None,
        };
        return Ok(next.map(Ordinal::from).unwrap_or(omega));
    }
    match kind {
        ClosureKind::GammaAdd | ClosureKind::NatAdd => Ok(rec_mul(a, &omega)),
        ClosureKind::DeltaMul | ClosureKind::NatMul => rec_pow_with(a, &omega, &Limits::default()),
        ClosureKind::EpsilonExp => Err(ArithError::not_representable(
            "the next exponential closure point above omega is epsilon-zero",
        )),
    }
}
