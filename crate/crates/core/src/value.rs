//! Runtime values produced by the evaluator.

use std::fmt;

use crate::complex::Gaussian;
use crate::cuts::RootCutClass;
use crate::ordinal::{BaseExpansion, Ordinal, OrdinalClass};
use crate::surinteger::{CyclicForm, SurInteger};
use crate::surrational::SurRational;

#[derive(Debug, Clone)]
pub enum Classification {
    Ordinal(OrdinalClass),
    RootCut(RootCutClass),
    Cyclic(CyclicForm),
}

#[derive(Debug, Clone)]
pub enum Value {
    Ordinal(Ordinal),
    SurInteger(SurInteger),
    SurRational(SurRational),
    Gaussian(Gaussian),
    Boolean(bool),
    Classification(Classification),
    Expansion(BaseExpansion),
}

/// Numeric tower levels, lowest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Ordinal,
    SurInteger,
    SurRational,
    Gaussian,
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Ordinal(_) => "Ordinal",
            Value::SurInteger(_) => "SurInteger",
            Value::SurRational(_) => "SurRational",
            Value::Gaussian(_) => "Gaussian",
            Value::Boolean(_) => "Boolean",
            Value::Classification(_) => "Classification",
            Value::Expansion(_) => "BaseExpansion",
        }
    }

    pub fn level(&self) -> Option<Level> {
        match self {
            Value::Ordinal(_) => Some(Level::Ordinal),
            Value::SurInteger(_) => Some(Level::SurInteger),
            Value::SurRational(_) => Some(Level::SurRational),
            Value::Gaussian(_) => Some(Level::Gaussian),
            _ => None,
        }
    }

    /// Lifts a numeric value to `level`; `None` for non-numeric values or a downward request.
    pub fn promote(&self, level: Level) -> Option<Value> {
        let own = self.level()?;
        if own > level {
            return None;
        }
        let mut v = self.clone();
        while v.level()? < level {
            v = match v {
                Value::Ordinal(o) => Value::SurInteger(SurInteger::from(&o)),
                Value::SurInteger(s) => Value::SurRational(SurRational::from(s)),
                Value::SurRational(q) => Value::Gaussian(Gaussian::from(q)),
                other => return Some(other),
            };
        }
        Some(v)
    }

    /// The value as an ordinal, if it denotes one at any level.
    pub fn as_ordinal(&self) -> Option<Ordinal> {
        match self {
            Value::Ordinal(o) => Some(o.clone()),
            Value::SurInteger(s) => s.to_ordinal(),
            Value::SurRational(q) => q.to_surinteger()?.to_ordinal(),
            Value::Gaussian(g) if g.im.is_zero() => Value::SurRational(g.re.clone()).as_ordinal(),
            _ => None,
        }
    }

    pub fn as_surinteger(&self) -> Option<SurInteger> {
        match self.promote(Level::SurInteger)? {
            Value::SurInteger(s) => Some(s),
            _ => match self {
                Value::SurRational(q) => q.to_surinteger(),
                Value::Gaussian(g) if g.im.is_zero() => g.re.to_surinteger(),
                _ => None,
            },
        }
    }

    pub fn as_surrational(&self) -> Option<SurRational> {
        match self.promote(Level::SurRational) {
            Some(Value::SurRational(q)) => Some(q),
            _ => match self {
                Value::Gaussian(g) if g.im.is_zero() => Some(g.re.clone()),
                _ => None,
            },
        }
    }

    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self.promote(Level::Gaussian)? {
            Value::Gaussian(g) => Some(g),
            _ => None,
        }
    }
}

/// Equality up to the identifications of the numeric tower.
impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Boolean(a), Value::Boolean(b)) => a == b,
            (Value::Classification(a), Value::Classification(b)) => match (a, b) {
                (Classification::Ordinal(x), Classification::Ordinal(y)) => x == y,
                (Classification::RootCut(x), Classification::RootCut(y)) => x == y,
                (Classification::Cyclic(x), Classification::Cyclic(y)) => x == y,
                _ => false,
            },
            (Value::Expansion(a), Value::Expansion(b)) => a == b,
            _ => match (self.level(), other.level()) {
                (Some(x), Some(y)) => {
                    let level = x.max(y);
                    match (self.promote(level), other.promote(level)) {
                        (Some(Value::Ordinal(a)), Some(Value::Ordinal(b))) => a == b,
                        (Some(Value::SurInteger(a)), Some(Value::SurInteger(b))) => a == b,
                        (Some(Value::SurRational(a)), Some(Value::SurRational(b))) => a == b,
                        (Some(Value::Gaussian(a)), Some(Value::Gaussian(b))) => a == b,
                        _ => false,
                    }
                }
                _ => false,
            },
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::print::print_canonical(self))
    }
}
