//! The twelve acceptance criteria. Each prints one PASS or FAIL line; the test
//! fails if any criterion does.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use transfinita::complex::{cx_inv, cx_mul, Gaussian};
use transfinita::cuts::{classify_root_cut, cut_member, CutSpec, RootCutClass};
use transfinita::hyper::{hyperop, tetration, HyperIndex};
use transfinita::natural::{nat_add, next_closure, ClosureKind};
use transfinita::oracle::{
    gen_random, random_finite_rational, random_gaussian, random_nonzero_surrational,
    random_ordinal, random_surinteger, random_surrational, Budget, GenKind, Oracle, OracleError,
    SmallOrdinal,
};
use transfinita::ordinal::{base_expand, rec_add, rec_mul, rec_pow, Ordinal};
use transfinita::surinteger::{
    cyclic_decompose, from_coordinates, neg, si_add, si_mul, to_coordinates, CoordinateForm,
    CyclicForm, SurInteger,
};
use transfinita::surrational::{
    archimedean_witness, midpoint, q_add, q_eq, q_inv, q_mul, q_neg, q_sub, SurRational,
};
use transfinita::{parse, print_canonical, ArithError, Evaluator};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn n(k: u64) -> Ordinal {
    Ordinal::from(k)
}

fn w() -> Ordinal {
    Ordinal::omega()
}

fn wpow(e: Ordinal) -> Ordinal {
    Ordinal::omega_pow(e)
}

fn mono(e: u64, c: u64) -> Ordinal {
    Ordinal::monomial(n(e), BigUint::from(c))
}

/// Outcome of one criterion: a summary on success, the first failure otherwise.
type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn identity_table() -> Outcome {
    let one = n(1);
    ensure!(rec_add(&one, &w()) == w(), "1 +. w != w");
    let w_plus_1 = rec_add(&w(), &one);
    ensure!(
        w_plus_1
            == Ordinal::from_terms(vec![
                transfinita::Term::new(n(1), BigUint::from(1u32)),
                transfinita::Term::new(n(0), BigUint::from(1u32)),
            ])
            .unwrap(),
        "w +. 1 is not w + 1"
    );
    ensure!(w_plus_1 == nat_add(&one, &w()), "w +. 1 != 1 + w");

    let four = HyperIndex::Finite(4);
    let two = n(2);
    let tower2 = rec_pow(&two, &rec_pow(&two, &rec_pow(&two, &two).unwrap()).unwrap()).unwrap();
    ensure!(tower2 == n(65536), "2^(2^(2^2)) != 65536");
    ensure!(
        hyperop(four, &two, &n(4)).unwrap() == tower2,
        "H4(2,4) mismatch"
    );
    let ww = rec_pow(&w(), &w()).unwrap();
    let tower_w = rec_pow(&w(), &rec_pow(&w(), &ww).unwrap()).unwrap();
    ensure!(
        hyperop(four, &w(), &n(4)).unwrap() == tower_w,
        "H4(w,4) mismatch"
    );

    ensure!(
        hyperop(HyperIndex::Omega, &n(3), &n(3)).unwrap() == w(),
        "H_w(3,3) != w"
    );
    ensure!(
        next_closure(ClosureKind::GammaAdd, &w()).unwrap() == mono(2, 1),
        "next gamma after w"
    );
    ensure!(
        next_closure(ClosureKind::DeltaMul, &w()).unwrap() == wpow(w()),
        "next delta after w"
    );
    ensure!(ww == wpow(w()), "w^w");
    let next = next_closure(ClosureKind::NatMul, &ww).unwrap();
    ensure!(
        next == wpow(wpow(n(2))),
        "next closure after w^w is {next:?}"
    );
    ensure!(
        matches!(tetration(&w(), &w()), Err(ArithError::NotRepresentable(_))),
        "w ^^ w must be NotRepresentable"
    );
    Ok("13 identities".into())
}

fn coordinate_example() -> Outcome {
    let t = |e: u64, c: i64| (n(e), BigInt::from(c));
    let s = SurInteger::from_terms([t(5, 4), t(4, -2), t(2, -7), t(1, 3), t(0, -1)]);
    let expected = CoordinateForm {
        negative_part: nat_add(&nat_add(&mono(4, 2), &mono(2, 7)), &n(1)),
        positive_part: nat_add(&mono(5, 4), &mono(1, 3)),
    };
    let c = to_coordinates(&s);
    ensure!(c == expected, "coordinates {c:?}");
    ensure!(from_coordinates(&c) == s, "back-conversion differs");
    ensure!(
        print_canonical(&transfinita::Value::SurInteger(s)) == "w^5*4 - w^4*2 - w^2*7 + w*3 - 1",
        "printed form"
    );
    Ok("five-term form to (w^4*2 + w^2*7 + 1, w^5*4 + w*3) and back".into())
}

fn ring_suite() -> Outcome {
    const N: usize = 10_000;
    let budget = Budget::default();
    let mut r = rng(3);
    let zero = SurInteger::zero();
    let one = SurInteger::one();
    for i in 0..N {
        let a = random_surinteger(&mut r, &budget);
        let b = random_surinteger(&mut r, &budget);
        let c = random_surinteger(&mut r, &budget);
        let d = random_surinteger(&mut r, &budget);
        ensure!(
            si_add(&si_add(&a, &b), &c) == si_add(&a, &si_add(&b, &c)),
            "add assoc #{i}"
        );
        ensure!(si_add(&a, &b) == si_add(&b, &a), "add comm #{i}");
        ensure!(si_add(&a, &zero) == a, "add identity #{i}");
        ensure!(si_add(&a, &neg(&a)) == zero, "add inverse #{i}");
        ensure!(
            si_mul(&si_mul(&a, &b), &c) == si_mul(&a, &si_mul(&b, &c)),
            "mul assoc #{i}"
        );
        ensure!(si_mul(&a, &b) == si_mul(&b, &a), "mul comm #{i}");
        ensure!(si_mul(&a, &one) == a, "mul identity #{i}");
        ensure!(
            si_mul(&a, &si_add(&b, &c)) == si_add(&si_mul(&a, &b), &si_mul(&a, &c)),
            "distributivity #{i}"
        );
        let (lo1, hi1) = if a < b { (&a, &b) } else { (&b, &a) };
        let (lo2, hi2) = if c < d { (&c, &d) } else { (&d, &c) };
        if lo1 < hi1 && lo2 < hi2 {
            ensure!(
                si_add(lo1, lo2) < si_add(hi1, hi2),
                "order and addition #{i}"
            );
        }
        if a > zero && b > zero {
            ensure!(si_mul(&a, &b) > zero, "positive products #{i}");
        }
    }
    Ok(format!("{N} random triples, 10 laws"))
}

fn field_suite() -> Outcome {
    const N: usize = 10_000;
    let budget = Budget {
        depth: 2,
        terms: 2,
        max_coeff: 9,
    };
    let mut r = rng(4);
    let zero = SurRational::zero();
    let one = SurRational::one();
    for i in 0..N {
        let a = random_surrational(&mut r, &budget);
        let b = random_surrational(&mut r, &budget);
        let c = random_surrational(&mut r, &budget);
        let d = random_surrational(&mut r, &budget);
        ensure!(
            q_eq(&q_add(&q_add(&a, &b), &c), &q_add(&a, &q_add(&b, &c))),
            "add assoc #{i}"
        );
        ensure!(q_eq(&q_add(&a, &b), &q_add(&b, &a)), "add comm #{i}");
        ensure!(q_eq(&q_add(&a, &zero), &a), "add identity #{i}");
        ensure!(q_eq(&q_add(&a, &q_neg(&a)), &zero), "add inverse #{i}");
        ensure!(
            q_eq(&q_mul(&q_mul(&a, &b), &c), &q_mul(&a, &q_mul(&b, &c))),
            "mul assoc #{i}"
        );
        ensure!(q_eq(&q_mul(&a, &b), &q_mul(&b, &a)), "mul comm #{i}");
        ensure!(q_eq(&q_mul(&a, &one), &a), "mul identity #{i}");
        ensure!(
            q_eq(
                &q_mul(&a, &q_add(&b, &c)),
                &q_add(&q_mul(&a, &b), &q_mul(&a, &c))
            ),
            "distributivity #{i}"
        );
        if !a.is_zero() {
            ensure!(q_eq(&q_mul(&a, &q_inv(&a)), &one), "mul inverse #{i}");
        }
        let (lo1, hi1) = if a < b { (&a, &b) } else { (&b, &a) };
        let (lo2, hi2) = if c < d { (&c, &d) } else { (&d, &c) };
        if lo1 < hi1 && lo2 < hi2 {
            ensure!(q_add(lo1, lo2) < q_add(hi1, hi2), "order and addition #{i}");
        }
        if a > zero && b > zero {
            ensure!(q_mul(&a, &b) > zero, "positive products #{i}");
        }
    }
    Ok(format!("{N} random triples, 11 laws"))
}

fn discreteness() -> Outcome {
    const N: usize = 10_000;
    let budget = Budget::default();
    let mut r = rng(5);
    let one = SurInteger::one();
    for i in 0..N {
        let a = random_surinteger(&mut r, &budget);
        let b = if r.gen_bool(0.5) {
            random_surinteger(&mut r, &budget)
        } else {
            si_add(&a, &SurInteger::from(r.gen_range(-2i64..=2)))
        };
        ensure!(
            !(a < b && b < si_add(&a, &one)),
            "element strictly between a and a+1 at #{i}"
        );
    }
    for k in -200i64..=200 {
        let expected = CyclicForm::Cyclic {
            negative: k < 0,
            count: BigUint::from(k.unsigned_abs()),
        };
        ensure!(
            cyclic_decompose(&SurInteger::from(k)) == expected,
            "cyclic form of {k}"
        );
    }
    let mut transfinite = 0;
    while transfinite < 1_000 {
        let a = random_surinteger(&mut r, &budget);
        if a.is_finite() {
            continue;
        }
        transfinite += 1;
        ensure!(
            cyclic_decompose(&a) == CyclicForm::NotCyclic,
            "transfinite value decomposed"
        );
    }
    Ok(format!(
        "{N} pairs, 401 finite and 1000 transfinite decompositions"
    ))
}

fn archimedean() -> Outcome {
    let bound = BigUint::from(1_000_000u32);
    let mut r = rng(6);
    let mut found = 0;
    while found < 1_000 {
        let p = random_finite_rational(&mut r, 1_000);
        let q = random_finite_rational(&mut r, 1_000);
        if p.is_zero() {
            continue;
        }
        let k = archimedean_witness(&p, &q, &bound)
            .map_err(|e| format!("no witness for finite pair: {e}"))?;
        let lhs = q.abs();
        let rhs = q_mul(
            &p.abs(),
            &SurRational::from(i64::try_from(k.clone()).unwrap()),
        );
        ensure!(lhs <= rhs, "witness {k} too small");
        found += 1;
    }
    let omega = SurRational::from(&w());
    ensure!(
        matches!(
            archimedean_witness(&SurRational::one(), &omega, &bound),
            Err(ArithError::NoWitness(_))
        ),
        "(1, w) must have no witness"
    );
    let mut chains = 0;
    for k in 0..=20i64 {
        for m in 2..=20i64 {
            let nk = SurRational::from(k);
            let w_over_m = q_mul(&omega, &SurRational::ratio(1, m).unwrap());
            let w_minus_n = q_sub(&omega, &nk);
            ensure!(
                nk < w_over_m && w_over_m < w_minus_n,
                "chain fails at n={k}, m={m}"
            );
            chains += 1;
        }
    }
    Ok(format!(
        "1000 witnesses, NoWitness for (1, w), {chains} chains"
    ))
}

fn density_and_gap() -> Outcome {
    const N: usize = 10_000;
    let budget = Budget {
        depth: 2,
        terms: 2,
        max_coeff: 9,
    };
    let mut r = rng(7);
    let mut checked = 0;
    while checked < N {
        let p = random_surrational(&mut r, &budget);
        let q = random_surrational(&mut r, &budget);
        if q_eq(&p, &q) {
            continue;
        }
        let (lo, hi) = if p < q { (&p, &q) } else { (&q, &p) };
        let m = midpoint(lo, hi).map_err(|e| e.to_string())?;
        ensure!(
            *lo < m && m < *hi,
            "midpoint not strictly between at #{checked}"
        );
        checked += 1;
    }
    let eps = q_inv(&SurRational::from(&w()));
    for i in 0..100 {
        let q = random_finite_rational(&mut r, 1_000);
        let den = r.gen_range(1..=1_000i64);
        let num = r.gen_range(1..=den);
        let rr = SurRational::ratio(num, den).unwrap();
        let mid = q_add(&q, &rr);
        ensure!(!(q < mid && mid < q_add(&q, &eps)), "gap violated at #{i}");
    }
    Ok(format!("{N} midpoints, 100 gap checks"))
}

fn oracle_equivalence() -> Outcome {
    const B: u64 = 6;
    let mut oracle = Oracle::default();
    let (mut add, mut mul, mut pow, mut skipped) = (0, 0, 0, 0);
    for xa in 0..=B {
        for xb in 0..=B {
            for ya in 0..=B {
                for yb in 0..=B {
                    let (x, y) = (SmallOrdinal::new(xa, xb), SmallOrdinal::new(ya, yb));
                    let (xo, yo) = (x.to_ordinal(), y.to_ordinal());
                    match oracle.def_rec_add(x, y) {
                        Ok(s) => {
                            ensure!(
                                s.to_ordinal() == rec_add(&xo, &yo),
                                "add disagrees at {x:?} {y:?}"
                            );
                            add += 1;
                        }
                        Err(OracleError::FragmentExceeded) => skipped += 1,
                    }
                    match oracle.def_rec_mul(x, y) {
                        Ok(s) => {
                            ensure!(
                                s.to_ordinal() == rec_mul(&xo, &yo),
                                "mul disagrees at {x:?} {y:?}"
                            );
                            mul += 1;
                        }
                        Err(OracleError::FragmentExceeded) => {
                            let closed = rec_mul(&xo, &yo);
                            let outside = SmallOrdinal::from_ordinal(&closed)
                                .is_none_or(|s| s.a > oracle.bound() || s.b > oracle.bound());
                            ensure!(
                                outside,
                                "oracle gave up on in-fragment product at {x:?} {y:?}"
                            );
                            skipped += 1;
                        }
                    }
                    if let Ok(s) = oracle.def_rec_pow(x, y) {
                        ensure!(
                            s.to_ordinal() == rec_pow(&xo, &yo).unwrap(),
                            "pow disagrees at {x:?} {y:?}"
                        );
                        pow += 1;
                    }
                }
            }
        }
    }
    ensure!(add > 0 && mul > 0 && pow > 0, "empty comparison");
    ensure!(rec_pow(&n(2), &w()).unwrap() == w(), "2^w != w");
    for a in 0..=6u64 {
        for k in 0..=6u32 {
            ensure!(
                rec_pow(&n(a), &n(k.into())).unwrap() == n(a.pow(k)),
                "{a}^{k}"
            );
        }
    }
    Ok(format!("2401 pairs per op: {add} add, {mul} mul, {pow} pow agreements, {skipped} add/mul results outside the fragment"))
}

fn base_expansion() -> Outcome {
    let budget = Budget::default();
    let mut r = rng(9);
    let bases = [n(2), n(10), w(), rec_add(&w(), &n(1))];
    for base in &bases {
        for i in 0..1_000 {
            let a = random_ordinal(&mut r, &budget);
            let e = base_expand(&a, base).map_err(|e| format!("expand #{i}: {e}"))?;
            ensure!(
                e.recompose().map_err(|e| e.to_string())? == a,
                "recomposition #{i} in base {base:?}"
            );
            if base.is_omega() {
                ensure!(e.digits.len() == a.terms().len(), "digit count #{i}");
                for (d, t) in e.digits.iter().zip(a.terms()) {
                    ensure!(d.exponent == t.exponent, "digit exponent #{i}");
                    ensure!(
                        d.coefficient == Ordinal::from(t.coefficient.clone()),
                        "digit value #{i}"
                    );
                }
            }
        }
    }
    Ok("1000 ordinals in each of bases 2, 10, w, w + 1".into())
}

fn cut_predicates() -> Outcome {
    let lambda = wpow(w());
    let sqrt2 =
        CutSpec::root(SurRational::from(2), 2, lambda.clone()).map_err(|e| e.to_string())?;
    let mut decided = 0;
    for a in 0..=50i64 {
        for b in 1..=50i64 {
            let p = SurRational::ratio(a, b).unwrap();
            let member = cut_member(&sqrt2, &p).map_err(|e| e.to_string())?;
            ensure!(
                member == (a * a < 2 * b * b),
                "sqrt 2 membership of {a}/{b}"
            );
            decided += 1;
        }
    }
    let sqrt_w = CutSpec::root(SurRational::from(&w()), 2, lambda).map_err(|e| e.to_string())?;
    for a in -50..=50i64 {
        for b in 1..=50i64 {
            let p = SurRational::ratio(a, b).unwrap();
            ensure!(
                cut_member(&sqrt_w, &p).map_err(|e| e.to_string())?,
                "{a}/{b} not below sqrt w"
            );
        }
    }
    ensure!(
        !cut_member(&sqrt_w, &SurRational::from(&w())).unwrap(),
        "w below sqrt w"
    );
    let w2 = SurRational::from(&mono(2, 1));
    ensure!(
        classify_root_cut(&w2, 2).unwrap() == RootCutClass::Surrational(SurRational::from(&w())),
        "sqrt(w^2) should be w"
    );
    ensure!(
        classify_root_cut(&SurRational::from(2), 2).unwrap() == RootCutClass::Irrational,
        "sqrt 2 irrational"
    );
    Ok(format!(
        "{decided} fractions against a^2 < 2b^2, 5050 finite rationals below sqrt w"
    ))
}

fn gaussian() -> Outcome {
    let i = Gaussian::i();
    let sq = cx_mul(&i, &i);
    ensure!(
        q_eq(&sq.re, &SurRational::from(-1)) && sq.im.is_zero(),
        "i^2 != -1"
    );
    let budget = Budget {
        depth: 2,
        terms: 2,
        max_coeff: 9,
    };
    let mut r = rng(11);
    let mut done = 0;
    while done < 1_000 {
        let a = if r.gen_bool(0.5) {
            random_gaussian(&mut r, &budget)
        } else {
            Gaussian::new(
                random_nonzero_surrational(&mut r, &budget),
                random_surrational(&mut r, &budget),
            )
        };
        if a.is_zero() {
            continue;
        }
        let p = cx_mul(&a, &cx_inv(&a).map_err(|e| e.to_string())?);
        ensure!(
            q_eq(&p.re, &SurRational::one()) && q_eq(&p.im, &SurRational::zero()),
            "a * a^-1 != 1 at #{done}"
        );
        done += 1;
    }
    Ok("i^2 = -1, 1000 inverses".into())
}

const FUZZ_ALPHABET: &[&str] = &[
    "w", "1", "23", "+", "+.", "-", "-.", "*", "*.", "/", "^", "^^", "(", ")", "[", "]", ",", "H",
    "sqrt", "i", "e0", "member", "x", " ", "$", "#", "@", "=", ".", "é",
];

fn mutate(src: &str, r: &mut ChaCha8Rng) -> String {
    let mut chars: Vec<char> = src.chars().collect();
    for _ in 0..r.gen_range(1..=3) {
        let pos = r.gen_range(0..=chars.len());
        match r.gen_range(0..3) {
            0 if pos < chars.len() => {
                chars.remove(pos);
            }
            1 => {
                let ins = FUZZ_ALPHABET[r.gen_range(0..FUZZ_ALPHABET.len())];
                for (k, ch) in ins.chars().enumerate() {
                    chars.insert(pos + k, ch);
                }
            }
            _ => chars.truncate(pos),
        }
    }
    chars.into_iter().collect()
}

fn parser() -> Outcome {
    const N: usize = 10_000;
    let ev = Evaluator::new();
    let budget = Budget::default();
    let mut r = rng(12);
    let kinds = [
        GenKind::Ordinal,
        GenKind::SurInteger,
        GenKind::SurRational,
        GenKind::Gaussian,
    ];
    let mut texts = Vec::with_capacity(N);
    for i in 0..N {
        let v = gen_random(kinds[i % 4], &mut r, &budget);
        let text = print_canonical(&v);
        let back = ev.eval_str(&text).map_err(|e| format!("{text:?}: {e}"))?;
        ensure!(
            back == v,
            "round trip of {text:?} gave {}",
            print_canonical(&back)
        );
        texts.push(text);
    }
    let mut malformed = 0;
    let mut attempts = 0;
    while malformed < N {
        attempts += 1;
        let input = if r.gen_bool(0.5) {
            mutate(&texts[r.gen_range(0..texts.len())], &mut r)
        } else {
            (0..r.gen_range(0..12))
                .map(|_| FUZZ_ALPHABET[r.gen_range(0..FUZZ_ALPHABET.len())])
                .collect()
        };
        let outcome = catch_unwind(|| parse(&input));
        match outcome {
            Err(_) => return Err(format!("parser panicked on {input:?}")),
            Ok(Ok(_)) => continue,
            Ok(Err(d)) => {
                ensure!(
                    d.line >= 1 && d.column >= 1,
                    "diagnostic without position for {input:?}"
                );
                malformed += 1;
            }
        }
    }
    Ok(format!(
        "{N} round trips, {malformed} malformed inputs diagnosed out of {attempts} fuzzed"
    ))
}

type Criterion = fn() -> Outcome;

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, Criterion); 12] = [
        ("identity table", identity_table),
        ("coordinate form example", coordinate_example),
        ("ordered ring laws", ring_suite),
        ("ordered field laws", field_suite),
        ("discreteness and cyclicity", discreteness),
        ("archimedean dichotomy", archimedean),
        ("density and gap", density_and_gap),
        ("oracle equivalence", oracle_equivalence),
        ("base expansion round trip", base_expansion),
        ("cut predicates", cut_predicates),
        ("gaussian formulas", gaussian),
        ("parser round trip and fuzzing", parser),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let line = match outcome {
            Ok(detail) => format!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2} FAIL {name}: {why}", i + 1)
            }
        };
        writeln!(std::io::stdout().lock(), "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
