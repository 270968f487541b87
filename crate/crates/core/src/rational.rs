//! Quotients of Laurent polynomials.
//!
//! Equality is decided by cross-multiplication; no normal form is computed
//! or needed. Heavy summations (Bailey transforms, q-Chu-Vandermonde grids)
//! are assembled over explicit common denominators by their callers, so the
//! generic `add` here stays simple apart from an equal-denominator fast
//! path.

use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    /// Panics if `den` is the zero polynomial; a vanishing denominator is
    /// always a caller bug (admissibility screens reject such parameters).
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        Self { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        Self { num: self.num.scaled(c), den: self.den.clone() }
    }

    /// First mismatching exponent of the cross products `n1*d2` vs `n2*d1`.
    pub fn cross_mismatch(a: &Self, b: &Self) -> Option<(i64, BigInt, BigInt)> {
        let left = &a.num * &b.den;
        let right = &b.num * &a.den;
        LaurentPoly::first_mismatch(&left, &right)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        Self::cross_mismatch(self, other).is_none()
    }
}

impl Eq for RationalFunction {}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn cross_multiplied_equality_ignores_common_factors() {
        // q/(1+q) == (q - q^2)/(1 - q^2)
        let a = RationalFunction::new(p(&[(1, 1)]), p(&[(0, 1), (1, 1)]));
        let b = RationalFunction::new(p(&[(1, 1), (2, -1)]), p(&[(0, 1), (2, -1)]));
        assert_eq!(a, b);
        assert_ne!(a, RationalFunction::one());
    }

    #[test]
    fn field_arithmetic() {
        let a = RationalFunction::new(p(&[(0, 1)]), p(&[(0, 1), (1, -1)])); // 1/(1-q)
        let b = RationalFunction::new(p(&[(1, -1)]), p(&[(0, 1), (1, -1)])); // -q/(1-q)
        assert_eq!(&a + &b, RationalFunction::one());
        let c = &a * &b;
        assert_eq!(
            c,
            RationalFunction::new(p(&[(1, -1)]), p(&[(0, 1), (1, -2), (2, 1)]))
        );
        assert_eq!(&(&a - &a) + &RationalFunction::one(), RationalFunction::one());
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn zero_denominator_rejected() {
        let _ = RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero());
    }
}
