//! The transfinite hyperoperation sequence on its representable fragment.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{ArithError, ArithResult, Limits};
use crate::ordinal::{rec_add, rec_mul, rec_pow_with, successor, Ordinal};

/// Number of terms of a fundamental sequence sampled when evaluating a supremum.
const SAMPLES: u64 = 12;
/// How many trailing samples must agree before a pattern is accepted.
const WINDOW: usize = 4;
/// From this finite index on, every value with base and argument at least 2
/// (other than `℧(2,2) = 4`) has more than `2^64` bits.
const HUGE_INDEX: u64 = 7;
/// Tallest exponent tower built by tetration of a transfinite base.
const TOWER_LIMIT: u64 = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HyperIndex {
    Finite(u64),
    Omega,
}

impl HyperIndex {
    pub fn new(index: &Ordinal) -> ArithResult<Self> {
        if let Some(n) = index.to_natural() {
            return n
                .to_u64()
                .map(HyperIndex::Finite)
                .ok_or_else(|| ArithError::Unsupported("hyperoperation index too large".into()));
        }
        if index.is_omega() {
            return Ok(HyperIndex::Omega);
        }
        Err(ArithError::Unsupported(
            "hyperoperation indices beyond omega are not evaluated".into(),
        ))
    }

    pub fn to_ordinal(self) -> Ordinal {
        match self {
            HyperIndex::Finite(n) => Ordinal::from(n),
            HyperIndex::Omega => Ordinal::omega(),
        }
    }
}

pub fn hyperop(idx: HyperIndex, a: &Ordinal, b: &Ordinal) -> ArithResult<Ordinal> {
    hyperop_with(idx, a, b, &Limits::default())
}

pub fn hyperop_with(
    idx: HyperIndex,
    a: &Ordinal,
    b: &Ordinal,
    limits: &Limits,
) -> ArithResult<Ordinal> {
    match idx {
        HyperIndex::Finite(n) => finite_index(n, a, b, limits),
        HyperIndex::Omega => omega_index(a, b, limits),
    }
}

pub fn tetration(a: &Ordinal, b: &Ordinal) -> ArithResult<Ordinal> {
    hyperop(HyperIndex::Finite(4), a, b)
}

pub fn tetration_with(a: &Ordinal, b: &Ordinal, limits: &Limits) -> ArithResult<Ordinal> {
    hyperop_with(HyperIndex::Finite(4), a, b, limits)
}

fn finite_index(n: u64, a: &Ordinal, b: &Ordinal, limits: &Limits) -> ArithResult<Ordinal> {
    match n {
        0 => return Ok(successor(a)),
        1 => return Ok(rec_add(a, b)),
        2 => return Ok(rec_mul(a, b)),
        3 => return rec_pow_with(a, b, limits),
        _ => {}
    }
    if b.is_zero() {
        return Ok(Ordinal::one());
    }
    if b.is_one() {
        return Ok(a.clone());
    }
    if a.is_one() {
        return Ok(Ordinal::one());
    }
    if a.is_zero() {
        // Alternates 1, 0, 1, ... along successors and is 1 at every limit stage.
        let (_, k) = b.split_finite();
        return Ok(if k.bit(0) {
            Ordinal::zero()
        } else {
            Ordinal::one()
        });
    }
    if !a.is_finite() && n >= 5 {
        // ℧_n(a, 2) = ℧_{n-1}(a, a) is already at least ℧_4(a, ω) ≥ ε₀.
        return Err(ArithError::not_representable(format!(
            "hyperoperation {n} with a transfinite base reaches epsilon-zero"
        )));
    }
    let Some(k) = b.to_natural() else {
        return beyond_omega(n, a, b, limits);
    };
    if !a.is_finite() && k > BigUint::from(TOWER_LIMIT) {
        return Err(ArithError::resource("exponent tower too tall"));
    }
    let two = Ordinal::from(2u32);
    if n >= HUGE_INDEX && a.is_finite() && !(*a == two && k == BigUint::from(2u32)) {
        return Err(ArithError::resource(format!(
            "hyperoperation {n} on finite arguments exceeds any magnitude cap"
        )));
    }
    // Downward recursion: ℧_n(a, k) = ℧_{n-1}(a, ℧_n(a, k-1)).
    let mut value = a.clone();
    let mut step = BigUint::one();
    while step < k {
        let next = finite_index(n - 1, a, &value, limits)?;
        next.check_limits(limits)?;
        if next == value {
            break;
        }
        value = next;
        step += 1u32;
    }
    Ok(value)
}

/// `℧_n(a, b)` for transfinite `b` and `a ≥ 2`, `n ≥ 4`.
///
/// The value at `ω` is the supremum over finite arguments. When it is a fixed
/// point of `℧_{n-1}(a, ·)` every larger argument yields it too.
fn beyond_omega(n: u64, a: &Ordinal, b: &Ordinal, limits: &Limits) -> ArithResult<Ordinal> {
    let samples = (0..SAMPLES).map(|k| finite_index(n, a, &Ordinal::from(k), limits));
    let at_omega = supremum(samples)?;
    // For a finite base the value at ω is ω, which every ℧_m with m ≥ 3 fixes.
    if b.is_omega() || a.is_finite() {
        return Ok(at_omega);
    }
    if finite_index(n - 1, a, &at_omega, limits)? == at_omega {
        return Ok(at_omega);
    }
    Err(ArithError::Unsupported(
        "no stabilization detected along the fundamental sequence".into(),
    ))
}

/// `℧_ω(a, b)`: the supremum over finite indices.
fn omega_index(a: &Ordinal, b: &Ordinal, limits: &Limits) -> ArithResult<Ordinal> {
    if b.is_zero() {
        return Ok(Ordinal::one());
    }
    if b.is_one() {
        return Ok(a.clone());
    }
    let samples = (0..SAMPLES).map(|rho| finite_index(rho, a, b, limits));
    supremum(samples)
}

/// Supremum of a sampled sequence of ordinals.
///
/// Accepted patterns, checked on the trailing window:
/// an eventually constant sequence (the supremum is the largest sample);
/// strictly increasing naturals, or naturals growing past the magnitude cap (`ω`);
/// a fixed prefix followed by a term whose coefficient grows (next power of `ω`);
/// strictly growing tower height (the supremum is at least `ε₀`).
fn supremum(samples: impl Iterator<Item = ArithResult<Ordinal>>) -> ArithResult<Ordinal> {
    let mut seen: Vec<Ordinal> = Vec::new();
    for s in samples {
        match s {
            Ok(v) => seen.push(v),
            Err(ArithError::ResourceExceeded(msg)) => {
                let tail = &seen[seen.len().saturating_sub(3)..];
                if tail.len() == 3
                    && tail.iter().all(Ordinal::is_finite)
                    && strictly_increasing(tail)
                {
                    return Ok(Ordinal::omega());
                }
                return Err(ArithError::ResourceExceeded(msg));
            }
            Err(e) => return Err(e),
        }
    }
    let tail = &seen[seen.len() - WINDOW..];
    if tail.windows(2).all(|w| w[0] == w[1]) {
        return Ok(seen.iter().max().cloned().expect("nonempty"));
    }
    if !strictly_increasing(tail) {
        return Err(ArithError::Unsupported(
            "sampled sequence is not monotone".into(),
        ));
    }
    if tail.iter().all(Ordinal::is_finite) {
        return Ok(Ordinal::omega());
    }
    if tail.windows(2).all(|w| w[0].depth() < w[1].depth()) {
        return Err(ArithError::not_representable(
            "supremum of a growing exponent tower reaches epsilon-zero",
        ));
    }
    growing_coefficient_limit(tail)
        .ok_or_else(|| ArithError::Unsupported("no stabilization detected".into()))
}

fn strictly_increasing(xs: &[Ordinal]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

/// `P + ω^e·c_i + …` with fixed `P`, `e` and growing `c_i` tends to `P + ω^(e+1)`.
fn growing_coefficient_limit(xs: &[Ordinal]) -> Option<Ordinal> {
    let first = xs[0].terms();
    let prefix = (0..first.len())
        .take_while(|&i| xs.iter().all(|x| x.terms().get(i) == Some(&first[i])))
        .count();
    let exponent = &first.get(prefix)?.exponent;
    let coefficients: Option<Vec<&BigUint>> = xs
        .iter()
        .map(|x| {
            x.terms()
                .get(prefix)
                .filter(|t| t.exponent == *exponent)
                .map(|t| &t.coefficient)
        })
        .collect();
    let coefficients = coefficients?;
    if !coefficients.windows(2).all(|w| w[0] < w[1]) {
        return None;
    }
    let head = Ordinal::from_terms_unchecked(first[..prefix].to_vec());
    Some(rec_add(&head, &Ordinal::omega_pow(successor(exponent))))
}

/// Membership in the closure class of `℧_n`: `℧_n(β, γ) < a` for all `β, γ < a`.
///
/// Decided from the normal form: `n = 1` gives `0, 1, ω^ζ`; `n = 2` gives
/// `0, 1, 2, ω^(ω^ζ)`; `n ≥ 3` gives `0, 2, ω` below `ε₀`.
pub fn is_hyper_number(n: &Ordinal, a: &Ordinal) -> ArithResult<bool> {
    let Some(n) = n.to_u64() else {
        return Err(ArithError::Unsupported(
            "closure under transfinite hyperoperations".into(),
        ));
    };
    let small = a.to_u64();
    Ok(match n {
        0 => {
            return Err(ArithError::undefined(
                "the successor operation has no closure points",
            ))
        }
        1 => a.is_zero() || a.is_omega_power(),
        2 => {
            matches!(small, Some(0..=2))
                || (a.is_omega_power()
                    && a.leading_exponent()
                        .is_some_and(|e| !e.is_zero() && e.is_omega_power()))
        }
        _ => matches!(small, Some(0 | 2)) || a.is_omega(),
    })
}

/// The least `℧_n`-closure number strictly above `a`.
pub fn next_hyper_number(n: &Ordinal, a: &Ordinal) -> ArithResult<Ordinal> {
    if !is_hyper_number(n, a)? {
        return Err(ArithError::undefined(
            "argument is not a closure number of this hyperoperation",
        ));
    }
    let k = n.to_u64().expect("checked");
    if let Some(m) = a.to_u64() {
        let next = match (k, m) {
            (1 | 2, 0) => Some(1u64),
            (2, 1) => Some(2),
            (3.., 0) => Some(2),
            _ => None,
        };
        return Ok(next.map(Ordinal::from).unwrap_or_else(Ordinal::omega));
    }
    hyperop(HyperIndex::Finite(k + 1), a, &Ordinal::omega())
}

/// Evaluates the defining recursion directly on machine integers; `None` on overflow.
pub fn hyperop_by_recursion(n: u64, a: u64, b: u64) -> Option<u64> {
    match (n, b) {
        (0, _) => a.checked_add(1),
        (1, _) => a.checked_add(b),
        (2, _) => a.checked_mul(b),
        (3, _) => a.checked_pow(u32::try_from(b).ok()?),
        (_, 0) => Some(1),
        _ => {
            let mut v = a;
            for _ in 1..b {
                v = hyperop_by_recursion(n - 1, a, v)?;
            }
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::rec_pow;

    fn n(k: u64) -> Ordinal {
        Ordinal::from(k)
    }
    fn w() -> Ordinal {
        Ordinal::omega()
    }
    fn wp(e: Ordinal) -> Ordinal {
        Ordinal::omega_pow(e)
    }
    fn h(i: u64, a: &Ordinal, b: &Ordinal) -> ArithResult<Ordinal> {
        hyperop(HyperIndex::Finite(i), a, b)
    }

    #[test]
    fn low_indices_agree_with_recursive_operations() {
        assert_eq!(h(0, &w(), &n(5)).unwrap(), successor(&w()));
        assert_eq!(h(1, &n(1), &w()).unwrap(), w());
        assert_eq!(h(2, &n(2), &w()).unwrap(), w());
        assert_eq!(h(3, &n(2), &n(3)).unwrap(), n(8));
        assert_eq!(h(3, &w(), &w()).unwrap(), wp(w()));
    }

    #[test]
    fn tetration_tower() {
        for a in [n(2), w()] {
            let expected = rec_pow(&a, &rec_pow(&a, &rec_pow(&a, &a).unwrap()).unwrap()).unwrap();
            assert_eq!(h(4, &a, &n(4)).unwrap(), expected);
        }
        assert_eq!(tetration(&n(2), &n(3)).unwrap(), n(16));
        assert_eq!(tetration(&w(), &n(2)).unwrap(), wp(w()));
        assert!(matches!(
            tetration(&w(), &w()),
            Err(ArithError::NotRepresentable(_))
        ));
        assert_eq!(tetration(&n(2), &w()).unwrap(), w());
        assert_eq!(tetration(&n(2), &wp(n(2))).unwrap(), w());
        assert_eq!(tetration(&n(0), &w()).unwrap(), n(1));
        assert_eq!(tetration(&n(0), &n(3)).unwrap(), n(0));
    }

    #[test]
    fn omega_index() {
        assert_eq!(hyperop(HyperIndex::Omega, &n(3), &n(3)).unwrap(), w());
        assert_eq!(hyperop(HyperIndex::Omega, &n(2), &n(2)).unwrap(), n(4));
        assert_eq!(hyperop(HyperIndex::Omega, &n(1), &n(5)).unwrap(), n(6));
        assert!(matches!(
            hyperop(HyperIndex::Omega, &w(), &n(2)),
            Err(ArithError::NotRepresentable(_))
        ));
        assert!(HyperIndex::new(&successor(&w())).is_err());
    }

    #[test]
    fn magnitude_cap() {
        assert!(matches!(
            h(5, &n(3), &n(3)),
            Err(ArithError::ResourceExceeded(_))
        ));
        assert_eq!(h(5, &n(2), &n(3)).unwrap(), n(65536));
        assert_eq!(h(1000, &n(2), &n(2)).unwrap(), n(4));
    }

    #[test]
    fn agrees_with_direct_recursion() {
        for i in 0..6 {
            for a in 0..4 {
                for b in 0..4 {
                    if let Some(v) = hyperop_by_recursion(i, a, b).filter(|v| *v < 1 << 40) {
                        assert_eq!(h(i, &n(a), &n(b)).unwrap(), n(v), "H[{i}]({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn hyper_numbers() {
        assert!(is_hyper_number(&n(1), &wp(n(2))).unwrap());
        assert!(is_hyper_number(&n(2), &wp(w())).unwrap());
        assert!(!is_hyper_number(&n(2), &wp(n(3))).unwrap());
        assert!(is_hyper_number(&n(4), &w()).unwrap());
        assert!(!is_hyper_number(&n(3), &n(3)).unwrap());
        assert_eq!(next_hyper_number(&n(1), &w()).unwrap(), wp(n(2)));
        assert_eq!(next_hyper_number(&n(2), &w()).unwrap(), wp(w()));
        assert!(matches!(
            next_hyper_number(&n(3), &w()),
            Err(ArithError::NotRepresentable(_))
        ));
        assert_eq!(next_hyper_number(&n(3), &n(0)).unwrap(), n(2));
        assert_eq!(next_hyper_number(&n(3), &n(2)).unwrap(), w());
    }
}
