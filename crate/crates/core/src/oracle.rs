//! Independent oracle: the recursive operations evaluated by unfolding their
//! successor and limit clauses on ordinals `ω·a + b`, plus random generators.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use rand::Rng;
use thiserror::Error;

use crate::complex::Gaussian;
use crate::ordinal::{Ordinal, Term};
use crate::surinteger::SurInteger;
use crate::surrational::SurRational;
use crate::value::Value;

/// Samples taken along each cofinal sequence.
const COFINAL_SAMPLES: u128 = 24;
/// Trailing samples that must show the same pattern.
const STABLE_WINDOW: usize = 8;
/// Largest `ω`-coefficient of a limit argument that is unfolded.
const LIMIT_ROWS: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallOrdinal {
    /// Coefficient of `ω`.
    pub a: u64,
    /// Finite part.
    pub b: u64,
}

impl SmallOrdinal {
    pub const fn new(a: u64, b: u64) -> Self {
        SmallOrdinal { a, b }
    }

    pub fn to_ordinal(self) -> Ordinal {
        let mut terms = Vec::new();
        if self.a > 0 {
            terms.push(Term::new(Ordinal::one(), BigUint::from(self.a)));
        }
        if self.b > 0 {
            terms.push(Term::new(Ordinal::zero(), BigUint::from(self.b)));
        }
        Ordinal::from_terms(terms).expect("descending by construction")
    }

    /// The inverse embedding, for ordinals below `ω²`.
    pub fn from_ordinal(o: &Ordinal) -> Option<Self> {
        let mut s = SmallOrdinal::new(0, 0);
        for t in o.terms() {
            let c = u64::try_from(&t.coefficient).ok()?;
            match t.exponent.to_u64()? {
                0 => s.b = c,
                1 => s.a = c,
                _ => return None,
            }
        }
        Some(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("result leaves the fragment below omega squared or exceeds the bound")]
    FragmentExceeded,
}

type OracleResult = Result<SmallOrdinal, OracleError>;

/// Working pair `ω·a + b`; intermediate samples may exceed the public bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Pair(u128, u128);

const ZERO: Pair = Pair(0, 0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Add,
    Mul,
    Pow,
}

/// Memoizing evaluator of the definitional recursions.
#[derive(Debug, Clone)]
pub struct Oracle {
    bound: u64,
    memo: HashMap<(Op, Pair, Pair), Result<Pair, OracleError>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(8)
    }
}

impl Oracle {
    pub fn new(bound: u64) -> Self {
        Oracle {
            bound,
            memo: HashMap::new(),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn def_rec_add(&mut self, x: SmallOrdinal, y: SmallOrdinal) -> OracleResult {
        self.run(Op::Add, x, y)
    }

    pub fn def_rec_mul(&mut self, x: SmallOrdinal, y: SmallOrdinal) -> OracleResult {
        self.run(Op::Mul, x, y)
    }

    pub fn def_rec_pow(&mut self, x: SmallOrdinal, y: SmallOrdinal) -> OracleResult {
        self.run(Op::Pow, x, y)
    }

    fn run(&mut self, op: Op, x: SmallOrdinal, y: SmallOrdinal) -> OracleResult {
        let r = self.unfold(
            op,
            Pair(x.a.into(), x.b.into()),
            Pair(y.a.into(), y.b.into()),
        )?;
        let bound = u128::from(self.bound);
        if r.0 <= bound && r.1 <= bound {
            Ok(SmallOrdinal::new(r.0 as u64, r.1 as u64))
        } else {
            Err(OracleError::FragmentExceeded)
        }
    }

    fn unfold(&mut self, op: Op, x: Pair, y: Pair) -> Result<Pair, OracleError> {
        if let Some(r) = self.memo.get(&(op, x, y)) {
            return r.clone();
        }
        let r = self.unfold_uncached(op, x, y);
        self.memo.insert((op, x, y), r.clone());
        r
    }

    fn unfold_uncached(&mut self, op: Op, x: Pair, y: Pair) -> Result<Pair, OracleError> {
        if y == ZERO {
            return Ok(match op {
                Op::Add => x,
                Op::Mul => ZERO,
                Op::Pow => Pair(0, 1),
            });
        }
        if y.1 > 0 {
            // Successor clause applied y.1 times on top of the limit part ω·y.0.
            let mut acc = self.unfold(op, x, Pair(y.0, 0))?;
            match op {
                Op::Add => {
                    acc.1 = acc
                        .1
                        .checked_add(y.1)
                        .ok_or(OracleError::FragmentExceeded)?;
                }
                Op::Mul => {
                    for _ in 0..y.1 {
                        acc = self.unfold(Op::Add, acc, x)?;
                    }
                }
                Op::Pow => {
                    for _ in 0..y.1 {
                        acc = self.unfold(Op::Mul, acc, x)?;
                    }
                }
            }
            return Ok(acc);
        }
        // Limit: the union over every δ < ω·a. The operations are monotone in
        // their right argument, so the last row ω·(a-1) + n is cofinal.
        if y.0 > self.bound.max(LIMIT_ROWS) as u128 {
            return Err(OracleError::FragmentExceeded);
        }
        let samples = (0..COFINAL_SAMPLES)
            .map(|n| self.unfold(op, x, Pair(y.0 - 1, n)))
            .collect::<Result<Vec<_>, _>>()?;
        row_supremum(&samples)
    }
}

/// Supremum of an increasing row of samples: eventually constant, or with a
/// fixed `ω`-coefficient and unbounded finite part.
fn row_supremum(samples: &[Pair]) -> Result<Pair, OracleError> {
    let max = *samples.iter().max().expect("nonempty");
    let tail = &samples[samples.len() - STABLE_WINDOW..];
    if tail.windows(2).all(|w| w[0] == w[1]) {
        return Ok(max);
    }
    if tail.windows(2).all(|w| w[0].0 == w[1].0 && w[0].1 < w[1].1) {
        return Ok(max.max(Pair(tail[0].0 + 1, 0)));
    }
    Err(OracleError::FragmentExceeded)
}

/// Size bounds for random values.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Nesting depth of exponents.
    pub depth: usize,
    /// Maximum number of terms at each level.
    pub terms: usize,
    /// Coefficients are drawn from `1..=max_coeff`.
    pub max_coeff: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            depth: 2,
            terms: 3,
            max_coeff: 9,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Ordinal,
    SurInteger,
    SurRational,
    Gaussian,
}

pub fn gen_random<R: Rng + ?Sized>(kind: GenKind, rng: &mut R, budget: &Budget) -> Value {
    match kind {
        GenKind::Ordinal => Value::Ordinal(random_ordinal(rng, budget)),
        GenKind::SurInteger => Value::SurInteger(random_surinteger(rng, budget)),
        GenKind::SurRational => Value::SurRational(random_surrational(rng, budget)),
        GenKind::Gaussian => Value::Gaussian(random_gaussian(rng, budget)),
    }
}

pub fn random_ordinal<R: Rng + ?Sized>(rng: &mut R, budget: &Budget) -> Ordinal {
    let exponents = random_exponents(rng, budget);
    let terms = exponents
        .into_iter()
        .map(|e| Term::new(e, BigUint::from(rng.gen_range(1..=budget.max_coeff))))
        .collect();
    Ordinal::from_terms(terms).expect("descending by construction")
}

/// A strictly decreasing list of exponents of nesting depth below `budget.depth`.
fn random_exponents<R: Rng + ?Sized>(rng: &mut R, budget: &Budget) -> Vec<Ordinal> {
    let count = rng.gen_range(0..=budget.terms);
    let inner = Budget {
        depth: budget.depth.saturating_sub(1),
        ..*budget
    };
    let mut exps: Vec<Ordinal> = (0..count)
        .map(|_| {
            if budget.depth <= 1 {
                Ordinal::zero()
            } else if inner.depth <= 1 {
                Ordinal::from(rng.gen_range(0..=budget.max_coeff))
            } else {
                random_ordinal(rng, &inner)
            }
        })
        .collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps.dedup();
    exps
}

pub fn random_surinteger<R: Rng + ?Sized>(rng: &mut R, budget: &Budget) -> SurInteger {
    let m = budget.max_coeff as i64;
    SurInteger::from_terms(random_exponents(rng, budget).into_iter().map(|e| {
        let c = rng.gen_range(1..=m);
        (e, BigInt::from(if rng.gen_bool(0.5) { c } else { -c }))
    }))
}

pub fn random_nonzero_surinteger<R: Rng + ?Sized>(rng: &mut R, budget: &Budget) -> SurInteger {
    loop {
        let s = random_surinteger(rng, budget);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_surrational<R: Rng + ?Sized>(rng: &mut R, budget: &Budget) -> SurRational {
    let num = random_surinteger(rng, budget);
    let den = random_nonzero_surinteger(rng, budget);
    SurRational::new(num, den).expect("nonzero denominator")
}

pub fn random_nonzero_surrational<R: Rng + ?Sized>(rng: &mut R, budget: &Budget) -> SurRational {
    let num = random_nonzero_surinteger(rng, budget);
    let den = random_nonzero_surinteger(rng, budget);
    SurRational::new(num, den).expect("nonzero denominator")
}

pub fn random_gaussian<R: Rng + ?Sized>(rng: &mut R, budget: &Budget) -> Gaussian {
    Gaussian::new(
        random_surrational(rng, budget),
        random_surrational(rng, budget),
    )
}

/// A finite rational `a/b` with `|a| ≤ max` and `1 ≤ b ≤ max`.
pub fn random_finite_rational<R: Rng + ?Sized>(rng: &mut R, max: i64) -> SurRational {
    SurRational::ratio(rng.gen_range(-max..=max), rng.gen_range(1..=max))
        .expect("positive denominator")
}
