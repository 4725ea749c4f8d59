//! Gaussian surrationals: pairs `(re, im)` with the complex field operations.

use crate::error::{ArithError, ArithResult};
use crate::surrational::{q_add, q_div, q_mul, q_neg, q_sub, SurRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gaussian {
    pub re: SurRational,
    pub im: SurRational,
}

impl Gaussian {
    pub fn new(re: SurRational, im: SurRational) -> Self {
        Gaussian { re, im }
    }

    pub fn zero() -> Self {
        Gaussian::new(SurRational::zero(), SurRational::zero())
    }

    pub fn one() -> Self {
        Gaussian::new(SurRational::one(), SurRational::zero())
    }

    pub fn i() -> Self {
        Gaussian::new(SurRational::zero(), SurRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl From<SurRational> for Gaussian {
    fn from(re: SurRational) -> Self {
        Gaussian::new(re, SurRational::zero())
    }
}

pub fn cx_add(a: &Gaussian, b: &Gaussian) -> Gaussian {
    Gaussian::new(q_add(&a.re, &b.re), q_add(&a.im, &b.im))
}

pub fn cx_neg(a: &Gaussian) -> Gaussian {
    Gaussian::new(q_neg(&a.re), q_neg(&a.im))
}

pub fn cx_sub(a: &Gaussian, b: &Gaussian) -> Gaussian {
    cx_add(a, &cx_neg(b))
}

pub fn cx_mul(a: &Gaussian, b: &Gaussian) -> Gaussian {
    Gaussian::new(
        q_sub(&q_mul(&a.re, &b.re), &q_mul(&a.im, &b.im)),
        q_add(&q_mul(&a.re, &b.im), &q_mul(&a.im, &b.re)),
    )
}

pub fn cx_inv(a: &Gaussian) -> ArithResult<Gaussian> {
    if a.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    let norm = q_add(&q_mul(&a.re, &a.re), &q_mul(&a.im, &a.im));
    Ok(Gaussian::new(
        q_div(&a.re, &norm)?,
        q_neg(&q_div(&a.im, &norm)?),
    ))
}

pub fn cx_div(a: &Gaussian, b: &Gaussian) -> ArithResult<Gaussian> {
    Ok(cx_mul(a, &cx_inv(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surinteger::SurInteger;

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::new(SurRational::from(re), SurRational::from(im))
    }
    fn q(a: i64, b: i64) -> SurRational {
        SurRational::ratio(a, b).unwrap()
    }
    fn inv_w() -> SurRational {
        SurRational::new(SurInteger::one(), SurInteger::omega()).unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(cx_add(&g(1, 2), &g(3, 4)), g(4, 6));
        assert_eq!(cx_add(&g(5, -1), &Gaussian::zero()), g(5, -1));
        let a = Gaussian::new(inv_w(), SurRational::zero());
        let b = Gaussian::new(SurRational::zero(), inv_w());
        assert_eq!(cx_add(&a, &b), Gaussian::new(inv_w(), inv_w()));
    }

    #[test]
    fn multiplication() {
        assert_eq!(cx_mul(&Gaussian::i(), &Gaussian::i()), g(-1, 0));
        assert_eq!(cx_mul(&g(3, 7), &Gaussian::one()), g(3, 7));
        let wi = Gaussian::new(SurRational::zero(), SurRational::from(SurInteger::omega()));
        let w2 = SurInteger::from(&crate::ordinal::Ordinal::omega_pow(
            crate::ordinal::Ordinal::from(2u32),
        ));
        assert_eq!(
            cx_mul(&wi, &wi),
            Gaussian::new(q_neg(&SurRational::from(w2)), SurRational::zero())
        );
    }

    #[test]
    fn negation() {
        assert_eq!(cx_neg(&g(1, -2)), g(-1, 2));
        assert_eq!(cx_neg(&Gaussian::zero()), Gaussian::zero());
        assert_eq!(cx_neg(&cx_neg(&g(4, 9))), g(4, 9));
    }

    #[test]
    fn inversion() {
        assert_eq!(cx_inv(&g(0, 1)).unwrap(), g(0, -1));
        assert_eq!(cx_inv(&g(1, 1)).unwrap(), Gaussian::new(q(1, 2), q(-1, 2)));
        let w = Gaussian::from(SurRational::from(SurInteger::omega()));
        assert_eq!(cx_inv(&w).unwrap(), Gaussian::from(inv_w()));
        assert!(matches!(
            cx_inv(&Gaussian::zero()),
            Err(ArithError::DivisionByZero)
        ));
    }
}
