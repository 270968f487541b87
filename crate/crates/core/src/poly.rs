//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! [`LaurentPoly`] is the universal value type for the finite identities:
//! exponents may be negative, coefficients are exact `BigInt`s, and the
//! stored form is canonical (no zero coefficient is ever kept), so equality
//! is plain coefficient-wise equality.
//!
//! The sparse map representation is right for theorem sides (a partial theta
//! sum of degree 25000 has only a few dozen terms). The dense kernel
//! [`DensePoly`] backs the heavy inner loops where every exponent is
//! occupied; it is an implementation detail of this crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse exact Laurent polynomial, canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^exp`; the zero monomial collapses to the zero polynomial.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// `1 - q^exp`. For `exp == 0` this is the zero polynomial.
    pub fn one_minus_q_pow(exp: i64) -> Self {
        let mut p = Self::one();
        p.add_term(exp, &BigInt::from(-1));
        p
    }

    /// `1 - sign * q^exp` with `sign` in `{1, -1}`.
    pub fn one_minus_signed_q_pow(sign: i64, exp: i64) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        let mut p = Self::one();
        p.add_term(exp, &BigInt::from(-sign));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient.
    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `sign * q^shift * other` into `self`.
    pub fn add_assign_shifted(&mut self, other: &Self, shift: i64, sign: i64) {
        debug_assert!(sign == 1 || sign == -1);
        for (e, c) in other.terms() {
            if sign == 1 {
                self.add_term(e + shift, c);
            } else {
                let neg = -c.clone();
                self.add_term(e + shift, &neg);
            }
        }
    }

    /// `q^shift * self`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// In-place multiplication by the binomial `1 - q^j`, `j != 0`.
    pub fn mul_one_minus_q_pow(&mut self, j: i64) {
        assert!(j != 0, "1 - q^0 is zero; refusing silent annihilation");
        let shifted: Vec<(i64, BigInt)> =
            self.coeffs.iter().map(|(&e, c)| (e + j, -c.clone())).collect();
        for (e, c) in shifted {
            self.add_term(e, &c);
        }
    }

    /// Exact division by `1 - q^j` (`j != 0`). Panics when the division is
    /// not exact; that always signals a transcription bug upstream.
    pub fn exact_div_one_minus_q_pow(&self, j: i64) -> Self {
        assert!(j != 0);
        let mut dense = DensePoly::from_sparse(self);
        dense.exact_div_one_minus_q_pow(j);
        dense.into_sparse()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// First exponent at which two polynomials differ, together with the two
    /// coefficients at that exponent.
    pub fn first_mismatch(a: &Self, b: &Self) -> Option<(i64, BigInt, BigInt)> {
        let mut exps: Vec<i64> = a.coeffs.keys().chain(b.coeffs.keys()).copied().collect();
        exps.sort_unstable();
        exps.dedup();
        for e in exps {
            let ca = a.coeff(e);
            let cb = b.coeff(e);
            if ca != cb {
                return Some((e, ca, cb));
            }
        }
        None
    }

    /// Moves the top coefficient one exponent up. Used only by the
    /// self-test harness to prove that comparisons can fail.
    pub fn with_one_exponent_corrupted(&self) -> Self {
        let mut out = self.clone();
        match out.max_exp() {
            Some(e) => {
                let c = out.coeffs.remove(&e).unwrap();
                out.add_term(e + 1, &c);
            }
            None => out.add_term(0, &BigInt::one()),
        }
        out
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_shifted(rhs, 0, -1);
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Multiply through the dense kernel when both factors are big.
        if self.num_terms() > 16 && rhs.num_terms() > 16 {
            let a = DensePoly::from_sparse(self);
            let b = DensePoly::from_sparse(rhs);
            return a.mul(&b).into_sparse();
        }
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }
}

/// Printing contract shared with the command line `expand` output:
/// ascending exponents, explicit `+`/`-` separators, `q^k` power notation,
/// bare `q` for exponent one, and `0` for the zero polynomial.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            if e == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !unit {
                    write!(f, "{}", mag)?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Dense Laurent polynomial on a contiguous exponent window; the workhorse
/// behind binomial-product chains whose results are dense anyway.
#[derive(Debug, Clone)]
pub(crate) struct DensePoly {
    /// Exponent of `c[0]`.
    pub min: i64,
    pub c: Vec<BigInt>,
}

impl DensePoly {
    pub fn zero() -> Self {
        Self { min: 0, c: Vec::new() }
    }

    pub fn one() -> Self {
        Self { min: 0, c: vec![BigInt::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn from_sparse(p: &LaurentPoly) -> Self {
        match (p.min_exp(), p.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, v) in p.terms() {
                    c[(e - lo) as usize] = v.clone();
                }
                Self { min: lo, c }
            }
            _ => Self::zero(),
        }
    }

    pub fn into_sparse(self) -> LaurentPoly {
        let min = self.min;
        LaurentPoly {
            coeffs: self
                .c
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (min + i as i64, v))
                .collect(),
        }
    }

    fn trim(&mut self) {
        while self.c.last().map(|v| v.is_zero()).unwrap_or(false) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|v| v.is_zero()).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.min += lead as i64;
        }
    }

    /// In-place `self *= (1 - q^j)`, any `j != 0`.
    pub fn mul_one_minus_q_pow(&mut self, j: i64) {
        assert!(j != 0);
        if self.c.is_empty() {
            return;
        }
        let n = self.c.len();
        if j > 0 {
            let j = j as usize;
            self.c.resize(n + j, BigInt::zero());
            // c'[x] = c[x] - c[x - j], top down.
            for x in (0..n + j).rev() {
                if x >= j {
                    let (lo, hi) = self.c.split_at_mut(x);
                    let sub = &lo[x - j];
                    hi[0] -= sub;
                }
            }
        } else {
            // (1 - q^{-t}) f = f - q^{-t} f: on the window shifted down by
            // t, f sits at offset t and the subtracted copy at offset 0.
            let t = (-j) as usize;
            let mut c = vec![BigInt::zero(); n + t];
            for (x, v) in self.c.iter().enumerate() {
                c[x + t] += v;
                c[x] -= v;
            }
            self.min += j;
            self.c = c;
        }
        self.trim();
    }

    /// In-place exact division by `1 - q^j` (`j != 0`). Panics if inexact.
    pub fn exact_div_one_minus_q_pow(&mut self, j: i64) {
        assert!(j != 0);
        if self.c.is_empty() {
            return;
        }
        self.trim();
        let (t, flip) = if j > 0 { (j as usize, false) } else { ((-j) as usize, true) };
        // (1 - q^{-t}) = -q^{-t}(1 - q^t): divide by (1 - q^t), shift up t,
        // negate.
        let n = self.c.len();
        assert!(n >= t, "exact division failed: quotient would be empty");
        // R[x] = C[x] + R[x - t], ascending; top t coefficients must vanish.
        let mut r = std::mem::take(&mut self.c);
        for x in t..n {
            let (lo, hi) = r.split_at_mut(x);
            hi[0] += &lo[x - t];
        }
        for v in &r[n - t..] {
            assert!(v.is_zero(), "exact division by 1 - q^{} failed", j);
        }
        r.truncate(n - t);
        self.c = r;
        if flip {
            self.min += t as i64;
            for v in self.c.iter_mut() {
                *v = -v.clone();
            }
        }
        self.trim();
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.c.is_empty() || other.c.is_empty() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + k] += a * b;
            }
        }
        let mut out = Self { min: self.min + other.min, c };
        out.trim();
        out
    }

    /// `self += sign * q^shift * other`.
    pub fn add_assign_shifted(&mut self, other: &Self, shift: i64, sign: i64) {
        debug_assert!(sign == 1 || sign == -1);
        if other.c.is_empty() {
            return;
        }
        let olo = other.min + shift;
        let ohi = olo + other.c.len() as i64 - 1;
        if self.c.is_empty() {
            self.min = olo;
            self.c = vec![BigInt::zero(); (ohi - olo + 1) as usize];
        } else {
            let lo = self.min.min(olo);
            let hi = (self.min + self.c.len() as i64 - 1).max(ohi);
            if lo < self.min {
                let pad = (self.min - lo) as usize;
                let mut c = vec![BigInt::zero(); pad];
                c.extend(std::mem::take(&mut self.c));
                self.c = c;
                self.min = lo;
            }
            let need = (hi - self.min + 1) as usize;
            if self.c.len() < need {
                self.c.resize(need, BigInt::zero());
            }
        }
        for (i, v) in other.c.iter().enumerate() {
            let idx = (olo + i as i64 - self.min) as usize;
            if sign == 1 {
                self.c[idx] += v;
            } else {
                self.c[idx] -= v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut a = p(&[(0, 1), (2, 3)]);
        a.add_term(2, &BigInt::from(-3));
        assert_eq!(a, p(&[(0, 1)]));
        assert_eq!(a.num_terms(), 1);
    }

    #[test]
    fn display_contract() {
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(
            p(&[(0, 1), (1, 1), (4, 2), (6, 1)]).to_string(),
            "1 + q + 2q^4 + q^6"
        );
        assert_eq!(p(&[(0, 1), (2, -1), (3, -1)]).to_string(), "1 - q^2 - q^3");
        assert_eq!(p(&[(-2, -3), (1, 1)]).to_string(), "-3q^-2 + q");
    }

    #[test]
    fn binomial_mul_and_exact_div_roundtrip() {
        for j in [1i64, 3, -2, -5] {
            let a = p(&[(-1, 2), (0, 1), (4, -7)]);
            let mut b = DensePoly::from_sparse(&a);
            b.mul_one_minus_q_pow(j);
            let prod = b.clone().into_sparse();
            let direct = &a * &LaurentPoly::one_minus_q_pow(j);
            assert_eq!(prod, direct, "j={}", j);
            b.exact_div_one_minus_q_pow(j);
            assert_eq!(b.into_sparse(), a, "j={}", j);
        }
    }

    #[test]
    #[should_panic(expected = "exact division")]
    fn inexact_division_is_a_hard_error() {
        let a = p(&[(0, 1), (1, 1)]);
        let _ = a.exact_div_one_minus_q_pow(1);
    }

    #[test]
    fn corruption_moves_one_exponent() {
        let a = p(&[(0, 1), (3, 2)]);
        let c = a.with_one_exponent_corrupted();
        assert_eq!(c, p(&[(0, 1), (4, 2)]));
        assert_eq!(p(&[]).with_one_exponent_corrupted(), p(&[(0, 1)]));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-10i64..10), (-20i64..20)), 0..8)
            .prop_map(|terms| {
                LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
            })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            let left = &a * &(&b + &c);
            let right = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(left, right);
        }

        #[test]
        fn dense_sparse_mul_agree(a in arb_poly(), b in arb_poly()) {
            let dense = DensePoly::from_sparse(&a).mul(&DensePoly::from_sparse(&b)).into_sparse();
            prop_assert_eq!(dense, &a * &b);
        }
    }
}
