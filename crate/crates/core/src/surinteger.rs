//! Surintegers: Cantor normal forms with signed coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{ArithError, ArithResult};
use crate::natural::{is_closure_number, nat_add, ClosureKind};
use crate::ordinal::{Ordinal, Term};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedTerm {
    pub exponent: Ordinal,
    pub coefficient: BigInt,
}

/// `Σ ω^ζ_i · μ_i` with strictly decreasing `ζ_i` and nonzero integers `μ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SurInteger {
    terms: Vec<SignedTerm>,
}

/// The pair (negative part, positive part) of ordinals with disjoint exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoordinateForm {
    pub negative_part: Ordinal,
    pub positive_part: Ordinal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CyclicForm {
    /// `±(1 + 1 + … + 1)` with `count` ones.
    Cyclic {
        negative: bool,
        count: BigUint,
    },
    NotCyclic,
}

impl SurInteger {
    pub fn zero() -> Self {
        SurInteger { terms: Vec::new() }
    }

    pub fn one() -> Self {
        SurInteger::from(BigInt::one())
    }

    pub fn omega() -> Self {
        SurInteger::from(&Ordinal::omega())
    }

    pub fn monomial(exponent: Ordinal, coefficient: BigInt) -> Self {
        if coefficient.is_zero() {
            return SurInteger::zero();
        }
        SurInteger {
            terms: vec![SignedTerm {
                exponent,
                coefficient,
            }],
        }
    }

    fn from_map(map: BTreeMap<Ordinal, BigInt>) -> Self {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exponent, coefficient)| SignedTerm {
                exponent,
                coefficient,
            })
            .collect();
        SurInteger { terms }
    }

    /// Builds a value from arbitrary terms, collecting equal exponents.
    pub fn from_terms(terms: impl IntoIterator<Item = (Ordinal, BigInt)>) -> Self {
        let mut map: BTreeMap<Ordinal, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        SurInteger::from_map(map)
    }

    pub fn terms(&self) -> &[SignedTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_integer().is_some_and(|n| n.is_one())
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as an ordinary integer, if finite.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// The value as an ordinal, if every coefficient is positive.
    pub fn to_ordinal(&self) -> Option<Ordinal> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                t.coefficient
                    .to_biguint()
                    .map(|c| Term::new(t.exponent.clone(), c))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Ordinal::from_terms_unchecked(terms))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&SignedTerm> {
        self.terms.first()
    }

    /// Positive in the sense that includes zero.
    pub fn is_positive(&self) -> bool {
        self.terms
            .first()
            .is_none_or(|t| t.coefficient.is_positive())
    }

    pub fn is_negative(&self) -> bool {
        !self.is_positive()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.terms.first() {
            None => 0,
            Some(t) if t.coefficient.is_positive() => 1,
            Some(_) => -1,
        }
    }

    pub fn abs(&self) -> SurInteger {
        if self.is_negative() {
            neg(self)
        } else {
            self.clone()
        }
    }

    /// Greatest common divisor of all coefficients, 0 for zero.
    pub fn content(&self) -> BigUint {
        self.terms
            .iter()
            .fold(BigUint::zero(), |g, t| g.gcd(t.coefficient.magnitude()))
    }

    /// Divides every coefficient by `k`, which must divide them all.
    pub fn divide_coefficients(&self, k: &BigInt) -> SurInteger {
        let terms = self
            .terms
            .iter()
            .map(|t| SignedTerm {
                exponent: t.exponent.clone(),
                coefficient: &t.coefficient / k,
            })
            .collect();
        SurInteger { terms }
    }

    pub fn scale(&self, k: &BigInt) -> SurInteger {
        si_mul(self, &SurInteger::from(k.clone()))
    }

    /// The `m`-th term as a monomial.
    pub fn representative(&self, m: usize) -> Option<SurInteger> {
        self.terms
            .get(m)
            .map(|t| SurInteger::monomial(t.exponent.clone(), t.coefficient.clone()))
    }

    /// The least exponent present, if any.
    pub fn lowest_exponent(&self) -> Option<&Ordinal> {
        self.terms.last().map(|t| &t.exponent)
    }
}

impl From<BigInt> for SurInteger {
    fn from(n: BigInt) -> Self {
        SurInteger::monomial(Ordinal::zero(), n)
    }
}

impl From<i64> for SurInteger {
    fn from(n: i64) -> Self {
        SurInteger::from(BigInt::from(n))
    }
}

impl From<&Ordinal> for SurInteger {
    fn from(a: &Ordinal) -> Self {
        let terms = a
            .terms()
            .iter()
            .map(|t| SignedTerm {
                exponent: t.exponent.clone(),
                coefficient: BigInt::from(t.coefficient.clone()),
            })
            .collect();
        SurInteger { terms }
    }
}

impl PartialOrd for SurInteger {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SurInteger {
    fn cmp(&self, other: &Self) -> Ordering {
        si_compare(self, other)
    }
}

pub fn si_add(a: &SurInteger, b: &SurInteger) -> SurInteger {
    let mut map: BTreeMap<Ordinal, BigInt> = BTreeMap::new();
    for t in a.terms.iter().chain(&b.terms) {
        *map.entry(t.exponent.clone()).or_default() += &t.coefficient;
    }
    SurInteger::from_map(map)
}

pub fn neg(a: &SurInteger) -> SurInteger {
    let terms = a
        .terms
        .iter()
        .map(|t| SignedTerm {
            exponent: t.exponent.clone(),
            coefficient: -&t.coefficient,
        })
        .collect();
    SurInteger { terms }
}

pub fn si_sub(a: &SurInteger, b: &SurInteger) -> SurInteger {
    si_add(a, &neg(b))
}

pub fn si_mul(a: &SurInteger, b: &SurInteger) -> SurInteger {
    let mut map: BTreeMap<Ordinal, BigInt> = BTreeMap::new();
    for x in &a.terms {
        for y in &b.terms {
            *map.entry(nat_add(&x.exponent, &y.exponent)).or_default() +=
                &x.coefficient * &y.coefficient;
        }
    }
    SurInteger::from_map(map)
}

/// Orders by the first term where the two normal forms differ.
pub fn si_compare(a: &SurInteger, b: &SurInteger) -> Ordering {
    match si_sub(a, b).terms.first() {
        None => Ordering::Equal,
        Some(t) if t.coefficient.is_negative() => Ordering::Less,
        Some(_) => Ordering::Greater,
    }
}

/// Index of the first position where the term lists differ.
pub fn first_difference_index(a: &SurInteger, b: &SurInteger) -> Option<usize> {
    let common = a
        .terms
        .iter()
        .zip(&b.terms)
        .take_while(|(x, y)| x == y)
        .count();
    if common == a.terms.len() && common == b.terms.len() {
        None
    } else {
        Some(common)
    }
}

pub fn to_coordinates(a: &SurInteger) -> CoordinateForm {
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for t in &a.terms {
        let term = Term::new(t.exponent.clone(), t.coefficient.magnitude().clone());
        if t.coefficient.is_negative() {
            negative.push(term);
        } else {
            positive.push(term);
        }
    }
    CoordinateForm {
        negative_part: Ordinal::from_terms_unchecked(negative),
        positive_part: Ordinal::from_terms_unchecked(positive),
    }
}

/// Balances the two parts exponent by exponent; any pair of ordinals is accepted.
pub fn from_coordinates(c: &CoordinateForm) -> SurInteger {
    si_sub(
        &SurInteger::from(&c.positive_part),
        &SurInteger::from(&c.negative_part),
    )
}

/// Accepts `ω` and the transfinite natural-multiplication closure numbers `ω^(ω^ζ)`.
pub fn validate_lambda(lambda: &Ordinal) -> ArithResult<()> {
    if !lambda.is_finite() && is_closure_number(ClosureKind::NatMul, lambda) {
        Ok(())
    } else {
        Err(ArithError::InvalidLambda(format!(
            "{} is not omega or a transfinite closure point of natural multiplication",
            crate::print::ordinal_to_string(lambda)
        )))
    }
}

/// Membership in the truncation `ℤ_λ`: both coordinates lie below `λ`.
pub fn in_lambda_ring(a: &SurInteger, lambda: &Ordinal) -> ArithResult<bool> {
    validate_lambda(lambda)?;
    let c = to_coordinates(a);
    Ok(c.negative_part < *lambda && c.positive_part < *lambda)
}

pub fn cyclic_decompose(a: &SurInteger) -> CyclicForm {
    match a.as_integer() {
        Some(n) => CyclicForm::Cyclic {
            negative: n.is_negative(),
            count: n.magnitude().clone(),
        },
        None => CyclicForm::NotCyclic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(k: u64) -> Ordinal {
        Ordinal::from(k)
    }
    fn si(terms: &[(u64, i64)]) -> SurInteger {
        SurInteger::from_terms(terms.iter().map(|&(e, c)| (o(e), BigInt::from(c))))
    }
    fn oc(terms: &[(u64, u64)]) -> Ordinal {
        Ordinal::from_terms(
            terms
                .iter()
                .map(|&(e, c)| Term::new(o(e), BigUint::from(c)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn coordinates_round_trip() {
        let a = si(&[(5, 4), (4, -2), (2, -7), (1, 3), (0, -1)]);
        let c = to_coordinates(&a);
        assert_eq!(c.negative_part, oc(&[(4, 2), (2, 7), (0, 1)]));
        assert_eq!(c.positive_part, oc(&[(5, 4), (1, 3)]));
        assert_eq!(from_coordinates(&c), a);
        assert_eq!(
            to_coordinates(&SurInteger::zero()),
            CoordinateForm {
                negative_part: o(0),
                positive_part: o(0)
            }
        );
        assert_eq!(to_coordinates(&si(&[(0, -5)])).negative_part, o(5));
    }

    #[test]
    fn balancing() {
        let c = |n: Ordinal, p: Ordinal| CoordinateForm {
            negative_part: n,
            positive_part: p,
        };
        assert_eq!(from_coordinates(&c(o(3), o(5))), si(&[(0, 2)]));
        assert_eq!(
            from_coordinates(&c(oc(&[(1, 1)]), oc(&[(1, 3)]))),
            si(&[(1, 2)])
        );
        assert_eq!(from_coordinates(&c(o(0), oc(&[(2, 1)]))), si(&[(2, 1)]));
    }

    #[test]
    fn ring_operations() {
        assert_eq!(
            si_add(&si(&[(1, 3), (0, -2)]), &si(&[(1, -1), (0, 5)])),
            si(&[(1, 2), (0, 3)])
        );
        let a = si(&[(3, 2), (0, -9)]);
        assert!(si_add(&a, &neg(&a)).is_zero());
        assert_eq!(neg(&si(&[(1, 1), (0, -1)])), si(&[(1, -1), (0, 1)]));
        assert_eq!(neg(&neg(&a)), a);
        assert_eq!(
            si_mul(&si(&[(1, 1), (0, -1)]), &si(&[(1, 1), (0, 1)])),
            si(&[(2, 1), (0, -1)])
        );
        assert_eq!(si_mul(&a, &SurInteger::one()), a);
        assert_eq!(si_mul(&si(&[(0, -2)]), &si(&[(0, -3)])), si(&[(0, 6)]));
    }

    #[test]
    fn ordering() {
        assert_eq!(
            si_compare(&si(&[(1, 1), (0, -5)]), &si(&[(0, 100)])),
            Ordering::Greater
        );
        assert_eq!(si_compare(&si(&[(1, -1)]), &si(&[(0, -5)])), Ordering::Less);
        let a = si(&[(2, 1), (1, -1), (0, 7)]);
        assert_eq!(si_compare(&a, &a), Ordering::Equal);
        assert!(a < si(&[(2, 1), (0, 3)]));
        assert!(SurInteger::zero().is_positive());
        assert!(si(&[(3, -1), (0, 8)]).is_negative());
    }

    #[test]
    fn lambda_rings() {
        let w = Ordinal::omega();
        let ww = Ordinal::omega_pow(w.clone());
        assert!(in_lambda_ring(&si(&[(1, 3), (0, -2)]), &ww).unwrap());
        assert!(!in_lambda_ring(&si(&[(1, 1)]), &w).unwrap());
        assert!(in_lambda_ring(&si(&[(0, -7)]), &w).unwrap());
        assert!(matches!(
            in_lambda_ring(&si(&[(0, 1)]), &oc(&[(2, 1)])),
            Err(ArithError::InvalidLambda(_))
        ));
        assert!(matches!(
            in_lambda_ring(&si(&[(0, 1)]), &o(2)),
            Err(ArithError::InvalidLambda(_))
        ));
    }

    #[test]
    fn cyclic() {
        assert_eq!(
            cyclic_decompose(&si(&[(0, -3)])),
            CyclicForm::Cyclic {
                negative: true,
                count: BigUint::from(3u32)
            }
        );
        assert_eq!(cyclic_decompose(&si(&[(1, 1)])), CyclicForm::NotCyclic);
        assert_eq!(
            cyclic_decompose(&SurInteger::zero()),
            CyclicForm::Cyclic {
                negative: false,
                count: BigUint::zero()
            }
        );
    }
}
