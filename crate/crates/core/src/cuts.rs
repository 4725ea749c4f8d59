//! Decidable cut predicates over a truncated surrational field.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{ArithError, ArithResult};
use crate::natural::{nat_divide, nat_scale, nat_sub_exact};
use crate::ordinal::Ordinal;
use crate::surinteger::{neg, si_compare, si_mul, si_sub, validate_lambda, SurInteger};
use crate::surrational::{exact_nth_root, in_lambda_field, q_compare, reduce, SurRational};

/// Terms examined while extracting an `n`-th root before giving up.
const ROOT_STEPS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutKind {
    /// Members are the `p` with `p < q`.
    Rational(SurRational),
    /// Members are the `p` with `p ≤ 0` or `p^n < q`.
    Root { radicand: SurRational, degree: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSpec {
    pub kind: CutKind,
    pub lambda: Ordinal,
}

impl CutSpec {
    pub fn rational(q: SurRational, lambda: Ordinal) -> ArithResult<Self> {
        validate_lambda(&lambda)?;
        Ok(CutSpec {
            kind: CutKind::Rational(q),
            lambda,
        })
    }

    pub fn root(radicand: SurRational, degree: u32, lambda: Ordinal) -> ArithResult<Self> {
        validate_lambda(&lambda)?;
        if radicand.signum() <= 0 {
            return Err(ArithError::undefined("root cut radicand must be positive"));
        }
        if degree < 2 {
            return Err(ArithError::undefined("root cut degree must be at least 2"));
        }
        Ok(CutSpec {
            kind: CutKind::Root { radicand, degree },
            lambda,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCutClass {
    Surrational(SurRational),
    Irrational,
}

pub fn cut_member(c: &CutSpec, p: &SurRational) -> ArithResult<bool> {
    if !in_lambda_field(p, &c.lambda)? {
        return Err(ArithError::OutOfField(
            "the point is not in the ambient truncated field".into(),
        ));
    }
    match &c.kind {
        CutKind::Rational(q) => Ok(q_compare(p, q).is_lt()),
        CutKind::Root { radicand, degree } => {
            if p.signum() <= 0 {
                return Ok(true);
            }
            let a = power(p.num(), *degree);
            let b = power(p.den(), *degree);
            let lhs = si_mul(&a, radicand.den());
            let rhs = si_mul(&b, radicand.num());
            Ok(si_compare(&lhs, &rhs).is_lt())
        }
    }
}

fn power(x: &SurInteger, n: u32) -> SurInteger {
    (0..n).fold(SurInteger::one(), |acc, _| si_mul(&acc, x))
}

/// Decides whether the `n`-th root of a positive surrational is itself surrational.
pub fn classify_root_cut(radicand: &SurRational, degree: u32) -> ArithResult<RootCutClass> {
    if radicand.signum() <= 0 || degree < 2 {
        return Err(ArithError::undefined(
            "root cut needs a positive radicand and degree at least 2",
        ));
    }
    let q = reduce(radicand);
    let top = nth_root(q.num(), degree)?;
    let bottom = nth_root(q.den(), degree)?;
    match (top, bottom) {
        (Some(a), Some(b)) => Ok(RootCutClass::Surrational(SurRational::new(a, b)?)),
        _ if q.is_reduced() => Ok(RootCutClass::Irrational),
        _ => Err(ArithError::Inconclusive(
            "the radicand could not be brought to lowest terms".into(),
        )),
    }
}

/// The `r` with `r^n = x`, if one exists.
///
/// Extracts the root term by term from the top: each new term is forced by the
/// leading term of the current remainder, so any failure is conclusive.
pub fn nth_root(x: &SurInteger, n: u32) -> ArithResult<Option<SurInteger>> {
    if x.is_zero() {
        return Ok(Some(SurInteger::zero()));
    }
    if x.is_negative() {
        if n.is_multiple_of(2) {
            return Ok(None);
        }
        return Ok(nth_root(&neg(x), n)?.map(|r| neg(&r)));
    }
    let lead = x.leading_term().expect("nonzero");
    let Some(first) = monomial_root(&lead.exponent, lead.coefficient.magnitude(), n) else {
        return Ok(None);
    };
    let mut root = first;
    let n_big = BigUint::from(n);
    for _ in 0..ROOT_STEPS {
        let rest = si_sub(x, &power(&root, n));
        let Some(t) = rest.leading_term() else {
            return Ok(Some(root));
        };
        let lt = root.leading_term().expect("nonzero");
        let lt_exponent = nat_scale(&lt.exponent, &BigUint::from(n - 1));
        let divisor = BigInt::from(n_big.clone()) * lt.coefficient.pow(n - 1);
        let Some(exponent) = nat_sub_exact(&t.exponent, &lt_exponent) else {
            return Ok(None);
        };
        if (&t.coefficient % &divisor) != BigInt::zero() {
            return Ok(None);
        }
        if root.lowest_exponent().is_some_and(|low| exponent >= *low) {
            return Ok(None);
        }
        let step = SurInteger::monomial(exponent, &t.coefficient / &divisor);
        root = crate::surinteger::si_add(&root, &step);
    }
    Err(ArithError::Inconclusive(
        "root extraction exceeded its step budget".into(),
    ))
}

fn monomial_root(exponent: &Ordinal, coefficient: &BigUint, n: u32) -> Option<SurInteger> {
    let c = exact_nth_root(coefficient, n)?;
    let e = nat_divide(exponent, &BigUint::from(n))?;
    Some(SurInteger::monomial(e, BigInt::from(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> Ordinal {
        Ordinal::omega_pow(Ordinal::omega())
    }
    fn q(a: i64, b: i64) -> SurRational {
        SurRational::ratio(a, b).unwrap()
    }
    fn si(terms: &[(u64, i64)]) -> SurInteger {
        SurInteger::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (Ordinal::from(e), BigInt::from(c))),
        )
    }

    #[test]
    fn square_root_of_two() {
        let c = CutSpec::root(SurRational::from(2), 2, lam()).unwrap();
        assert!(cut_member(&c, &q(7, 5)).unwrap());
        assert!(!cut_member(&c, &q(3, 2)).unwrap());
        assert!(cut_member(&c, &q(-10, 1)).unwrap());
    }

    #[test]
    fn square_root_of_omega() {
        let c = CutSpec::root(SurRational::from(SurInteger::omega()), 2, lam()).unwrap();
        assert!(cut_member(&c, &SurRational::from(1000)).unwrap());
        assert!(!cut_member(&c, &SurRational::from(SurInteger::omega())).unwrap());
    }

    #[test]
    fn out_of_field() {
        let c = CutSpec::rational(q(1, 2), Ordinal::omega()).unwrap();
        assert!(cut_member(&c, &q(1, 3)).unwrap());
        assert!(matches!(
            cut_member(&c, &SurRational::from(SurInteger::omega())),
            Err(ArithError::OutOfField(_))
        ));
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_root_cut(&SurRational::from(4), 2).unwrap(),
            RootCutClass::Surrational(SurRational::from(2))
        );
        assert_eq!(
            classify_root_cut(&SurRational::from(2), 2).unwrap(),
            RootCutClass::Irrational
        );
        assert_eq!(
            classify_root_cut(&SurRational::from(si(&[(2, 1)])), 2).unwrap(),
            RootCutClass::Surrational(SurRational::from(SurInteger::omega()))
        );
        assert_eq!(
            classify_root_cut(&q(8, 27), 3).unwrap(),
            RootCutClass::Surrational(q(2, 3))
        );
        let square = si(&[(2, 1), (1, 2), (0, 1)]);
        assert_eq!(
            classify_root_cut(&SurRational::from(square), 2).unwrap(),
            RootCutClass::Surrational(SurRational::from(si(&[(1, 1), (0, 1)])))
        );
        assert_eq!(
            classify_root_cut(&SurRational::from(si(&[(2, 1), (0, 1)])), 2).unwrap(),
            RootCutClass::Irrational
        );
        assert_eq!(
            classify_root_cut(&SurRational::from(SurInteger::omega()), 2).unwrap(),
            RootCutClass::Irrational
        );
    }

    #[test]
    fn roots_are_sound() {
        let r = si(&[(3, 2), (1, -1), (0, 5)]);
        let cube = power(&r, 3);
        assert_eq!(nth_root(&cube, 3).unwrap(), Some(r.clone()));
        assert_eq!(nth_root(&neg(&cube), 3).unwrap(), Some(neg(&r)));
        assert_eq!(
            nth_root(&si_sub(&cube, &SurInteger::one()), 3).unwrap(),
            None
        );
    }
}
