//! Evaluation of parsed expressions with upward promotion along
//! Ordinal → SurInteger → SurRational → Gaussian.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::complex::{cx_add, cx_div, cx_inv, cx_mul, cx_neg, cx_sub, Gaussian};
use crate::cuts::{classify_root_cut, cut_member, CutSpec};
use crate::error::{ArithError, Limits};
use crate::hyper::{hyperop_with, is_hyper_number, next_hyper_number, tetration_with, HyperIndex};
use crate::natural::{is_closure_number, nat_add, nat_mul, next_closure, ClosureKind};
use crate::oracle::{Oracle, OracleError, SmallOrdinal};
use crate::ordinal::{
    base_expand, classify, div_rem, predecessor, rec_add, rec_mul, rec_pow_with, rec_sub_left,
    successor, Ordinal,
};
use crate::print::{ordinal_to_string, print_canonical};
use crate::surinteger::{
    cyclic_decompose, in_lambda_ring, neg, si_add, si_mul, si_sub, to_coordinates, SurInteger,
};
use crate::surrational::{
    archimedean_witness, in_lambda_field, midpoint, q_add, q_compare, q_div, q_inv, q_mul, q_neg,
    q_pow, q_sub, reduce, SurRational,
};
use crate::syntax::{line_column, parse, BinOp, Diagnostic, Expr, ExprKind, Span};
use crate::value::{Classification, Level, Value};

/// Largest exponent accepted by the ring power above the ordinals.
const MAX_RING_EXPONENT: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalFailure {
    Arith(ArithError),
    /// The closed form and the definitional oracle disagree.
    OracleMismatch {
        engine: String,
        oracle: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct EvalError {
    pub op: String,
    pub span: Span,
    pub failure: EvalFailure,
}

impl EvalError {
    pub fn code(&self) -> &'static str {
        match &self.failure {
            EvalFailure::Arith(e) => e.code(),
            EvalFailure::OracleMismatch { .. } => "OracleMismatch",
        }
    }

    pub fn arith(&self) -> Option<&ArithError> {
        match &self.failure {
            EvalFailure::Arith(e) => Some(e),
            EvalFailure::OracleMismatch { .. } => None,
        }
    }

    pub fn message(&self) -> String {
        match &self.failure {
            EvalFailure::Arith(e) => format!("{}: {e}", self.op),
            EvalFailure::OracleMismatch { engine, oracle } => {
                format!(
                    "{}: closed form gives {engine}, oracle gives {oracle}",
                    self.op
                )
            }
        }
    }
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message())
    }
}

/// Either stage of `parse` then `eval` failing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] Diagnostic),
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::Eval(e) => e.code(),
        }
    }

    /// 1-based line and column in `src`.
    pub fn position(&self, src: &str) -> (usize, usize) {
        match self {
            Error::Parse(d) => (d.line, d.column),
            Error::Eval(e) => line_column(src, e.span.start),
        }
    }
}

type EResult<T> = Result<T, EvalError>;

#[derive(Debug)]
pub struct Evaluator {
    pub limits: Limits,
    /// Ambient `λ` for ring and field membership queries.
    pub lambda: Ordinal,
    pub oracle: bool,
    pub bindings: HashMap<String, Value>,
    oracle_checks: AtomicU64,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator {
            limits: Limits::default(),
            lambda: Ordinal::omega_pow(Ordinal::omega()),
            oracle: false,
            bindings: HashMap::new(),
            oracle_checks: AtomicU64::new(0),
        }
    }
}

impl Clone for Evaluator {
    fn clone(&self) -> Self {
        Evaluator {
            limits: self.limits,
            lambda: self.lambda.clone(),
            oracle: self.oracle,
            bindings: self.bindings.clone(),
            oracle_checks: AtomicU64::new(self.oracle_checks()),
        }
    }
}

fn fail(op: &str, span: Span, e: ArithError) -> EvalError {
    EvalError {
        op: op.to_string(),
        span,
        failure: EvalFailure::Arith(e),
    }
}

fn undefined(op: &str, span: Span, msg: impl Into<String>) -> EvalError {
    fail(op, span, ArithError::Undefined(msg.into()))
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator::default()
    }

    /// Number of results confirmed by the definitional oracle so far.
    pub fn oracle_checks(&self) -> u64 {
        self.oracle_checks.load(AtomicOrdering::Relaxed)
    }

    pub fn eval_str(&self, src: &str) -> Result<Value, Error> {
        let e = parse(src)?;
        Ok(self.eval(&e)?)
    }

    pub fn eval(&self, e: &Expr) -> EResult<Value> {
        let sp = e.span;
        match &e.kind {
            ExprKind::NatLiteral(n) => Ok(Value::Ordinal(Ordinal::from(n.clone()))),
            ExprKind::Omega => Ok(Value::Ordinal(Ordinal::omega())),
            ExprKind::Eps0Sentinel => Err(fail(
                "e0",
                sp,
                ArithError::NotRepresentable("epsilon-zero is the least fixed point of w^x".into()),
            )),
            ExprKind::ImaginaryUnit => Ok(Value::Gaussian(Gaussian::i())),
            ExprKind::Bool(b) => Ok(Value::Boolean(*b)),
            ExprKind::Var(name) => self
                .bindings
                .get(name)
                .cloned()
                .ok_or_else(|| undefined("name", sp, format!("unbound name '{name}'"))),
            ExprKind::UnaryNeg(inner) => {
                let v = self.eval(inner)?;
                self.negate(&v, sp)
            }
            ExprKind::BinOp(op, l, r) => {
                let a = self.eval(l)?;
                let b = self.eval(r)?;
                self.binary(*op, &a, &b, sp)
            }
            ExprKind::Complex(re, im) => {
                let re = self.eval(re)?;
                let im = self.eval(im)?;
                let re = self.rational(&re, "complex", sp)?;
                let im = self.rational(&im, "complex", sp)?;
                Ok(Value::Gaussian(Gaussian::new(re, im)))
            }
            ExprKind::HyperApp(n, a, b) => {
                let n = self.ordinal_arg(n, "H")?;
                let a = self.ordinal_arg(a, "H")?;
                let b = self.ordinal_arg(b, "H")?;
                let idx = HyperIndex::new(&n).map_err(|e| fail("H", sp, e))?;
                let r = hyperop_with(idx, &a, &b, &self.limits).map_err(|e| fail("H", sp, e))?;
                Ok(Value::Ordinal(r))
            }
            ExprKind::RootCut(..) => Err(undefined(
                "sqrt",
                sp,
                "a root cut is not a value; use it inside member(...) or classify(...)",
            )),
            ExprKind::FuncApp(name, args) => self.call(name, args, sp),
        }
    }

    fn ordinal_arg(&self, e: &Expr, op: &str) -> EResult<Ordinal> {
        let v = self.eval(e)?;
        self.ordinal(&v, op, e.span)
    }

    fn ordinal(&self, v: &Value, op: &str, sp: Span) -> EResult<Ordinal> {
        v.as_ordinal().ok_or_else(|| {
            undefined(
                op,
                sp,
                format!("expected an ordinal, found {}", describe(v)),
            )
        })
    }

    fn surinteger(&self, v: &Value, op: &str, sp: Span) -> EResult<SurInteger> {
        v.as_surinteger().ok_or_else(|| {
            undefined(
                op,
                sp,
                format!("expected a surinteger, found {}", describe(v)),
            )
        })
    }

    fn rational(&self, v: &Value, op: &str, sp: Span) -> EResult<SurRational> {
        v.as_surrational().ok_or_else(|| {
            undefined(
                op,
                sp,
                format!("expected a surrational, found {}", describe(v)),
            )
        })
    }

    fn level(&self, v: &Value, op: &str, sp: Span) -> EResult<Level> {
        v.level()
            .ok_or_else(|| undefined(op, sp, format!("expected a number, found {}", describe(v))))
    }

    fn checked(&self, o: Ordinal, op: &str, sp: Span) -> EResult<Value> {
        o.check_limits(&self.limits).map_err(|e| fail(op, sp, e))?;
        Ok(Value::Ordinal(o))
    }

    fn negate(&self, v: &Value, sp: Span) -> EResult<Value> {
        let level = self.level(v, "-", sp)?.max(Level::SurInteger);
        Ok(match v.promote(level).expect("numeric") {
            Value::SurInteger(s) => Value::SurInteger(neg(&s)),
            Value::SurRational(q) => Value::SurRational(q_neg(&q)),
            Value::Gaussian(g) => Value::Gaussian(cx_neg(&g)),
            _ => unreachable!("promoted to at least SurInteger"),
        })
    }

    fn binary(&self, op: BinOp, a: &Value, b: &Value, sp: Span) -> EResult<Value> {
        let sym = op.symbol();
        match op {
            BinOp::NatAdd | BinOp::NatMul | BinOp::Sub | BinOp::Frac => self.field_op(op, a, b, sp),
            BinOp::RecPow if !matches!(a, Value::Ordinal(_)) || b.as_ordinal().is_none() => {
                self.ring_pow(a, b, sp)
            }
            BinOp::RecAdd | BinOp::RecMul | BinOp::RecSub | BinOp::RecPow | BinOp::Tetra => {
                let x = self.ordinal(a, sym, sp)?;
                let y = self.ordinal(b, sym, sp)?;
                let r = match op {
                    BinOp::RecAdd => rec_add(&x, &y),
                    BinOp::RecMul => rec_mul(&x, &y),
                    BinOp::RecSub => rec_sub_left(&y, &x).map_err(|e| fail(sym, sp, e))?,
                    BinOp::RecPow => {
                        rec_pow_with(&x, &y, &self.limits).map_err(|e| fail(sym, sp, e))?
                    }
                    _ => tetration_with(&x, &y, &self.limits).map_err(|e| fail(sym, sp, e))?,
                };
                if self.oracle {
                    self.cross_check(op, &x, &y, &r, sp)?;
                }
                self.checked(r, sym, sp)
            }
        }
    }

    fn field_op(&self, op: BinOp, a: &Value, b: &Value, sp: Span) -> EResult<Value> {
        let sym = op.symbol();
        let mut level = self.level(a, sym, sp)?.max(self.level(b, sym, sp)?);
        match op {
            BinOp::Sub => level = level.max(Level::SurInteger),
            BinOp::Frac => level = level.max(Level::SurRational),
            _ => {}
        }
        let (a, b) = (
            a.promote(level).expect("numeric"),
            b.promote(level).expect("numeric"),
        );
        let r = match (a, b) {
            (Value::Ordinal(x), Value::Ordinal(y)) => {
                let r = if op == BinOp::NatAdd {
                    nat_add(&x, &y)
                } else {
                    nat_mul(&x, &y)
                };
                return self.checked(r, sym, sp);
            }
            (Value::SurInteger(x), Value::SurInteger(y)) => Value::SurInteger(match op {
                BinOp::NatAdd => si_add(&x, &y),
                BinOp::NatMul => si_mul(&x, &y),
                _ => si_sub(&x, &y),
            }),
            (Value::SurRational(x), Value::SurRational(y)) => Value::SurRational(match op {
                BinOp::NatAdd => q_add(&x, &y),
                BinOp::NatMul => q_mul(&x, &y),
                BinOp::Sub => q_sub(&x, &y),
                _ => q_div(&x, &y).map_err(|e| fail(sym, sp, e))?,
            }),
            (Value::Gaussian(x), Value::Gaussian(y)) => Value::Gaussian(match op {
                BinOp::NatAdd => cx_add(&x, &y),
                BinOp::NatMul => cx_mul(&x, &y),
                BinOp::Sub => cx_sub(&x, &y),
                _ => cx_div(&x, &y).map_err(|e| fail(sym, sp, e))?,
            }),
            _ => unreachable!("both promoted to the same level"),
        };
        Ok(r)
    }

    /// Integer powers of surintegers, surrationals and Gaussians.
    fn ring_pow(&self, a: &Value, b: &Value, sp: Span) -> EResult<Value> {
        let level = self.level(a, "^", sp)?;
        let k = b
            .as_surinteger()
            .and_then(|s| s.as_integer())
            .ok_or_else(|| {
                undefined(
                    "^",
                    sp,
                    "exponent of a non-ordinal base must be a finite integer",
                )
            })?;
        if k.abs() > BigInt::from(MAX_RING_EXPONENT) {
            return Err(fail(
                "^",
                sp,
                ArithError::ResourceExceeded(format!("exponent above {MAX_RING_EXPONENT}")),
            ));
        }
        let n = k.abs().to_u32().expect("bounded");
        let level = if k.is_negative() {
            level.max(Level::SurRational)
        } else {
            level
        };
        let r = match a.promote(level).expect("numeric") {
            Value::SurInteger(s) => {
                let mut acc = SurInteger::one();
                for _ in 0..n {
                    acc = si_mul(&acc, &s);
                }
                Value::SurInteger(acc)
            }
            Value::SurRational(q) => {
                let base = if k.is_negative() {
                    if q.is_zero() {
                        return Err(fail("^", sp, ArithError::DivisionByZero));
                    }
                    q_inv(&q)
                } else {
                    q
                };
                Value::SurRational(q_pow(&base, n))
            }
            Value::Gaussian(g) => {
                let base = if k.is_negative() {
                    cx_inv(&g).map_err(|e| fail("^", sp, e))?
                } else {
                    g
                };
                let mut acc = Gaussian::one();
                for _ in 0..n {
                    acc = cx_mul(&acc, &base);
                }
                Value::Gaussian(acc)
            }
            Value::Ordinal(_) => unreachable!("ordinal bases use the recursive power"),
            _ => unreachable!("numeric"),
        };
        Ok(r)
    }

    fn cross_check(
        &self,
        op: BinOp,
        x: &Ordinal,
        y: &Ordinal,
        r: &Ordinal,
        sp: Span,
    ) -> EResult<()> {
        let (Some(sx), Some(sy)) = (SmallOrdinal::from_ordinal(x), SmallOrdinal::from_ordinal(y))
        else {
            return Ok(());
        };
        let mut oracle = Oracle::default();
        if sx.a > oracle.bound()
            || sx.b > oracle.bound()
            || sy.a > oracle.bound()
            || sy.b > oracle.bound()
        {
            return Ok(());
        }
        let expected = match op {
            BinOp::RecAdd => oracle.def_rec_add(sx, sy),
            BinOp::RecMul => oracle.def_rec_mul(sx, sy),
            BinOp::RecPow => oracle.def_rec_pow(sx, sy),
            _ => return Ok(()),
        };
        match expected {
            Ok(s) if s.to_ordinal() == *r => {
                self.oracle_checks.fetch_add(1, AtomicOrdering::Relaxed);
                Ok(())
            }
            Ok(s) => Err(EvalError {
                op: op.symbol().to_string(),
                span: sp,
                failure: EvalFailure::OracleMismatch {
                    engine: ordinal_to_string(r),
                    oracle: ordinal_to_string(&s.to_ordinal()),
                },
            }),
            Err(OracleError::FragmentExceeded) => Ok(()),
        }
    }

    fn arity(
        &self,
        name: &str,
        args: &[Expr],
        range: std::ops::RangeInclusive<usize>,
        sp: Span,
    ) -> EResult<()> {
        if range.contains(&args.len()) {
            Ok(())
        } else if range.start() == range.end() {
            Err(undefined(
                name,
                sp,
                format!("expects {} argument(s), got {}", range.start(), args.len()),
            ))
        } else {
            Err(undefined(
                name,
                sp,
                format!(
                    "expects {} to {} arguments, got {}",
                    range.start(),
                    range.end(),
                    args.len()
                ),
            ))
        }
    }

    fn lambda_arg(&self, args: &[Expr], index: usize, name: &str) -> EResult<Ordinal> {
        match args.get(index) {
            Some(e) => self.ordinal_arg(e, name),
            None => Ok(self.lambda.clone()),
        }
    }

    fn cut_spec(&self, e: &Expr, lambda: Ordinal, name: &str) -> EResult<CutSpec> {
        let sp = e.span;
        match &e.kind {
            ExprKind::RootCut(n, q) => {
                let (degree, radicand) = self.root_parts(n, q, name)?;
                CutSpec::root(radicand, degree, lambda).map_err(|err| fail(name, sp, err))
            }
            ExprKind::FuncApp(f, args) if f == "cut" => {
                self.arity("cut", args, 1..=1, sp)?;
                let v = self.eval(&args[0])?;
                let q = self.rational(&v, "cut", args[0].span)?;
                CutSpec::rational(q, lambda).map_err(|err| fail(name, sp, err))
            }
            _ => Err(undefined(name, sp, "expected a cut: sqrt[n](q) or cut(q)")),
        }
    }

    fn root_parts(&self, n: &Expr, q: &Expr, name: &str) -> EResult<(u32, SurRational)> {
        let degree = self.ordinal_arg(n, name)?;
        let degree = degree
            .to_u64()
            .and_then(|d| u32::try_from(d).ok())
            .ok_or_else(|| undefined(name, n.span, "root degree must be a finite natural"))?;
        let v = self.eval(q)?;
        Ok((degree, self.rational(&v, name, q.span)?))
    }

    fn call(&self, name: &str, args: &[Expr], sp: Span) -> EResult<Value> {
        let closure_kind = match name {
            "is_gamma" | "next_gamma" => Some(ClosureKind::GammaAdd),
            "is_delta" | "next_delta" => Some(ClosureKind::DeltaMul),
            "is_epsilon" | "next_epsilon" => Some(ClosureKind::EpsilonExp),
            "is_add_closed" | "next_add_closed" => Some(ClosureKind::NatAdd),
            "is_mul_closed" | "next_mul_closed" => Some(ClosureKind::NatMul),
            _ => None,
        };
        if let Some(kind) = closure_kind {
            self.arity(name, args, 1..=1, sp)?;
            let a = self.ordinal_arg(&args[0], name)?;
            return if name.starts_with("is_") {
                Ok(Value::Boolean(is_closure_number(kind, &a)))
            } else {
                let r = next_closure(kind, &a).map_err(|e| fail(name, sp, e))?;
                self.checked(r, name, sp)
            };
        }
        match name {
            "member" => {
                self.arity(name, args, 2..=3, sp)?;
                let lambda = self.lambda_arg(args, 2, name)?;
                let cut = self.cut_spec(&args[0], lambda, name)?;
                let v = self.eval(&args[1])?;
                let p = self.rational(&v, name, args[1].span)?;
                let r = cut_member(&cut, &p).map_err(|e| fail(name, sp, e))?;
                Ok(Value::Boolean(r))
            }
            "classify" => {
                self.arity(name, args, 1..=1, sp)?;
                if let ExprKind::RootCut(n, q) = &args[0].kind {
                    let (degree, radicand) = self.root_parts(n, q, name)?;
                    if radicand.signum() <= 0 || degree < 2 {
                        return Err(undefined(
                            name,
                            sp,
                            "root cut needs a positive radicand and degree at least 2",
                        ));
                    }
                    let c = classify_root_cut(&radicand, degree).map_err(|e| fail(name, sp, e))?;
                    return Ok(Value::Classification(Classification::RootCut(c)));
                }
                let a = self.ordinal_arg(&args[0], name)?;
                Ok(Value::Classification(Classification::Ordinal(classify(&a))))
            }
            "cyclic" => {
                self.arity(name, args, 1..=1, sp)?;
                let v = self.eval(&args[0])?;
                let s = self.surinteger(&v, name, args[0].span)?;
                Ok(Value::Classification(Classification::Cyclic(
                    cyclic_decompose(&s),
                )))
            }
            "succ" | "pred" => {
                self.arity(name, args, 1..=1, sp)?;
                let a = self.ordinal_arg(&args[0], name)?;
                if name == "succ" {
                    self.checked(successor(&a), name, sp)
                } else {
                    predecessor(&a)
                        .map(Value::Ordinal)
                        .ok_or_else(|| undefined(name, sp, "argument is not a successor"))
                }
            }
            "base" => {
                self.arity(name, args, 2..=2, sp)?;
                let a = self.ordinal_arg(&args[0], name)?;
                let b = self.ordinal_arg(&args[1], name)?;
                let e = base_expand(&a, &b).map_err(|e| fail(name, sp, e))?;
                Ok(Value::Expansion(e))
            }
            "div" | "mod" => {
                self.arity(name, args, 2..=2, sp)?;
                let a = self.ordinal_arg(&args[0], name)?;
                let b = self.ordinal_arg(&args[1], name)?;
                let (q, r) = div_rem(&a, &b).map_err(|e| fail(name, sp, e))?;
                Ok(Value::Ordinal(if name == "div" { q } else { r }))
            }
            "is_hyper" | "next_hyper" => {
                self.arity(name, args, 2..=2, sp)?;
                let n = self.ordinal_arg(&args[0], name)?;
                let a = self.ordinal_arg(&args[1], name)?;
                if name == "is_hyper" {
                    let r = is_hyper_number(&n, &a).map_err(|e| fail(name, sp, e))?;
                    Ok(Value::Boolean(r))
                } else {
                    let r = next_hyper_number(&n, &a).map_err(|e| fail(name, sp, e))?;
                    self.checked(r, name, sp)
                }
            }
            "neg_part" | "pos_part" => {
                self.arity(name, args, 1..=1, sp)?;
                let v = self.eval(&args[0])?;
                let c = to_coordinates(&self.surinteger(&v, name, args[0].span)?);
                Ok(Value::Ordinal(if name == "neg_part" {
                    c.negative_part
                } else {
                    c.positive_part
                }))
            }
            "in_ring" | "in_field" => {
                self.arity(name, args, 1..=2, sp)?;
                let lambda = self.lambda_arg(args, 1, name)?;
                let v = self.eval(&args[0])?;
                let r = if name == "in_ring" {
                    in_lambda_ring(&self.surinteger(&v, name, args[0].span)?, &lambda)
                } else {
                    in_lambda_field(&self.rational(&v, name, args[0].span)?, &lambda)
                };
                Ok(Value::Boolean(r.map_err(|e| fail(name, sp, e))?))
            }
            "reduce" | "inv" | "num" | "den" => {
                self.arity(name, args, 1..=1, sp)?;
                let v = self.eval(&args[0])?;
                if let (Value::Gaussian(g), "inv") = (&v, name) {
                    return Ok(Value::Gaussian(cx_inv(g).map_err(|e| fail(name, sp, e))?));
                }
                let q = self.rational(&v, name, args[0].span)?;
                Ok(match name {
                    "reduce" => Value::SurRational(reduce(&q)),
                    "inv" => Value::SurRational(q_inv(&q)),
                    "num" => Value::SurInteger(reduce(&q).num().clone()),
                    _ => Value::SurInteger(reduce(&q).den().clone()),
                })
            }
            "re" | "im" => {
                self.arity(name, args, 1..=1, sp)?;
                let v = self.eval(&args[0])?;
                let g = v.as_gaussian().ok_or_else(|| {
                    undefined(
                        name,
                        sp,
                        format!("expected a number, found {}", describe(&v)),
                    )
                })?;
                Ok(Value::SurRational(if name == "re" { g.re } else { g.im }))
            }
            "midpoint" => {
                self.arity(name, args, 2..=2, sp)?;
                let p = self.eval(&args[0])?;
                let q = self.eval(&args[1])?;
                let p = self.rational(&p, name, args[0].span)?;
                let q = self.rational(&q, name, args[1].span)?;
                Ok(Value::SurRational(
                    midpoint(&p, &q).map_err(|e| fail(name, sp, e))?,
                ))
            }
            "witness" => {
                self.arity(name, args, 3..=3, sp)?;
                let p = self.eval(&args[0])?;
                let q = self.eval(&args[1])?;
                let p = self.rational(&p, name, args[0].span)?;
                let q = self.rational(&q, name, args[1].span)?;
                let bound: BigUint =
                    self.ordinal_arg(&args[2], name)?
                        .to_natural()
                        .ok_or_else(|| {
                            undefined(name, args[2].span, "bound must be a finite natural")
                        })?;
                let n = archimedean_witness(&p, &q, &bound).map_err(|e| fail(name, sp, e))?;
                Ok(Value::Ordinal(Ordinal::from(n)))
            }
            "cmp" | "lt" | "eq" => {
                self.arity(name, args, 2..=2, sp)?;
                let a = self.eval(&args[0])?;
                let b = self.eval(&args[1])?;
                if name == "eq" {
                    return Ok(Value::Boolean(a == b));
                }
                let ord = self.compare(&a, &b, name, sp)?;
                Ok(match name {
                    "lt" => Value::Boolean(ord == Ordering::Less),
                    _ => Value::SurInteger(SurInteger::from(ord as i64)),
                })
            }
            _ => Err(undefined(name, sp, format!("unknown function '{name}'"))),
        }
    }

    fn compare(&self, a: &Value, b: &Value, name: &str, sp: Span) -> EResult<Ordering> {
        let level = self.level(a, name, sp)?.max(self.level(b, name, sp)?);
        match (
            a.promote(level).expect("numeric"),
            b.promote(level).expect("numeric"),
        ) {
            (Value::Ordinal(x), Value::Ordinal(y)) => Ok(x.cmp(&y)),
            (Value::SurInteger(x), Value::SurInteger(y)) => Ok(x.cmp(&y)),
            (Value::SurRational(x), Value::SurRational(y)) => Ok(q_compare(&x, &y)),
            _ => Err(undefined(name, sp, "Gaussian values are not ordered")),
        }
    }
}

fn describe(v: &Value) -> String {
    let text = print_canonical(v);
    if text.len() > 60 {
        v.type_name().to_string()
    } else {
        format!("{} {text}", v.type_name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(src: &str) -> String {
        print_canonical(&Evaluator::new().eval_str(src).unwrap())
    }

    fn code(src: &str) -> &'static str {
        Evaluator::new().eval_str(src).unwrap_err().code()
    }

    #[test]
    fn recursive_and_natural_addition() {
        assert_eq!(show("1 +. w"), "w");
        assert_eq!(show("1 + w"), "w + 1");
        assert_eq!(show("w +. 1"), "w + 1");
        assert_eq!(show("w*2 + w"), "w*3");
        assert_eq!(show("H[w](3,3)"), "w");
        assert_eq!(show("0"), "0");
    }

    #[test]
    fn signed_and_fractional() {
        assert_eq!(show("(w - 1) * (w + 1)"), "w^2 - 1");
        assert_eq!(show("(w^2 - 1) / (w - 1)"), "w + 1");
        assert_eq!(show("w^-1"), "1 / w");
        assert_eq!(show("(1/w)^2"), "1 / w^2");
        assert_eq!(show("i*i"), "(-1, 0)");
        assert_eq!(show("cmp(w - 5, 3)"), "1");
        assert_eq!(show("w + 5 -. w"), "5");
        assert_eq!(show("w^2 -. w*2"), "w^2");
    }

    #[test]
    fn functions() {
        assert_eq!(show("member(sqrt[2](2), 7/5)"), "true");
        assert_eq!(show("member(sqrt[2](2), 3/2)"), "false");
        assert_eq!(show("classify(sqrt[2](w^2))"), "surrational(w)");
        assert_eq!(show("classify(sqrt[2](2))"), "irrational");
        assert_eq!(show("next_gamma(w)"), "w^2");
        assert_eq!(show("next_delta(w)"), "w^w");
        assert_eq!(show("cyclic(0 - 3)"), "cyclic(-3)");
        assert_eq!(show("witness(1/3, 1, 10)"), "3");
    }

    #[test]
    fn errors_carry_codes() {
        assert_eq!(code("w ^^ w"), "NotRepresentable");
        assert_eq!(code("1 / 0"), "DivisionByZero");
        assert_eq!(code("x + 1"), "Undefined");
        assert_eq!(code("e0"), "NotRepresentable");
        assert_eq!(code("1 +"), "ParseError");
        assert_eq!(code("(0 - 1) +. 1"), "Undefined");
    }

    #[test]
    fn oracle_cross_check() {
        let ev = Evaluator {
            oracle: true,
            ..Evaluator::default()
        };
        for src in ["1 +. w", "w*2 +. 3", "2 *. w", "2 ^ w", "3 ^ (w + 1)"] {
            ev.eval_str(src).unwrap();
        }
        assert_eq!(ev.oracle_checks(), 5);
    }
}
