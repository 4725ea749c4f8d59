//! Canonical text rendering. Every numeric form printed here parses back to an
//! equal value.

use std::fmt::Write;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::One;

use crate::complex::Gaussian;
use crate::cuts::RootCutClass;
use crate::ordinal::{BaseExpansion, Ordinal, OrdinalClass};
use crate::surinteger::{CyclicForm, SurInteger};
use crate::surrational::{reduce, SurRational};
use crate::value::{Classification, Value};

pub fn ordinal_to_string(a: &Ordinal) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = a
        .terms()
        .iter()
        .map(|t| monomial(&t.exponent, &t.coefficient))
        .collect();
    parts.join(" + ")
}

pub fn surinteger_to_string(a: &SurInteger) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in a.terms().iter().enumerate() {
        let negative = t.coefficient.sign() == Sign::Minus;
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&monomial(&t.exponent, t.coefficient.magnitude()));
    }
    out
}

fn monomial(exponent: &Ordinal, coefficient: &BigUint) -> String {
    if exponent.is_zero() {
        return coefficient.to_string();
    }
    let mut s = String::from("w");
    if !exponent.is_one() {
        s.push('^');
        s.push_str(&exponent_to_string(exponent));
    }
    if !coefficient.is_one() {
        let _ = write!(s, "*{coefficient}");
    }
    s
}

fn exponent_to_string(e: &Ordinal) -> String {
    if e.is_finite() || e.is_omega() {
        ordinal_to_string(e)
    } else {
        format!("({})", ordinal_to_string(e))
    }
}

/// Renders a reduced quotient; an integral value prints as its numerator.
pub fn surrational_to_string(p: &SurRational) -> String {
    let p = reduce(p);
    if p.den().is_one() {
        return surinteger_to_string(p.num());
    }
    let num = if p.num().terms().len() > 1 {
        format!("({})", surinteger_to_string(p.num()))
    } else {
        surinteger_to_string(p.num())
    };
    let den = match p.den().terms() {
        [t] if t.exponent.is_zero() || t.coefficient == BigInt::one() => {
            surinteger_to_string(p.den())
        }
        _ => format!("({})", surinteger_to_string(p.den())),
    };
    format!("{num} / {den}")
}

pub fn gaussian_to_string(g: &Gaussian) -> String {
    format!(
        "({}, {})",
        surrational_to_string(&g.re),
        surrational_to_string(&g.im)
    )
}

pub fn classification_to_string(c: &Classification) -> String {
    match c {
        Classification::Ordinal(OrdinalClass::Zero) => "zero".into(),
        Classification::Ordinal(OrdinalClass::Successor) => "successor".into(),
        Classification::Ordinal(OrdinalClass::Limit) => "limit".into(),
        Classification::RootCut(RootCutClass::Surrational(p)) => {
            format!("surrational({})", surrational_to_string(p))
        }
        Classification::RootCut(RootCutClass::Irrational) => "irrational".into(),
        Classification::Cyclic(CyclicForm::Cyclic { negative, count }) => {
            format!("cyclic({}{count})", if *negative { "-" } else { "" })
        }
        Classification::Cyclic(CyclicForm::NotCyclic) => "not-cyclic".into(),
    }
}

/// Digits in the form `[base^exp]*digit`, highest first.
pub fn expansion_to_string(e: &BaseExpansion) -> String {
    if e.digits.is_empty() {
        return format!("0 (base {})", ordinal_to_string(&e.base));
    }
    let base = ordinal_to_string(&e.base);
    let parts: Vec<String> = e
        .digits
        .iter()
        .map(|d| {
            format!(
                "[{base}]^({})*({})",
                ordinal_to_string(&d.exponent),
                ordinal_to_string(&d.coefficient)
            )
        })
        .collect();
    parts.join(" +. ")
}

pub fn print_canonical(v: &Value) -> String {
    match v {
        Value::Ordinal(o) => ordinal_to_string(o),
        Value::SurInteger(s) => surinteger_to_string(s),
        Value::SurRational(q) => surrational_to_string(q),
        Value::Gaussian(g) => gaussian_to_string(g),
        Value::Boolean(b) => b.to_string(),
        Value::Classification(c) => classification_to_string(c),
        Value::Expansion(e) => expansion_to_string(e),
    }
}
