//! Truncated formal series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] stores coefficients on a Laurent window together
//! with an explicit *horizon*: the largest exponent through which the
//! coefficients are guaranteed exact. Arithmetic propagates the horizon
//! pessimistically, so a comparison `eq_to(order)` can hard-fail when an
//! operand was not computed far enough -- losing exactness silently is the
//! one bug class this type is designed to make loud.
//!
//! `horizon == None` means the value is exact at every order (an embedded
//! Laurent polynomial). Coefficients below the stored window are exactly
//! zero, not unknown.

use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Exponent of `coeffs[0]`; meaningful only when `coeffs` is nonempty.
    min: i64,
    coeffs: Vec<BigInt>,
    /// Largest exponent with exact coefficients; `None` = exact everywhere.
    horizon: Option<i64>,
}

impl TruncatedSeries {
    pub fn zero() -> Self {
        Self { min: 0, coeffs: Vec::new(), horizon: None }
    }

    pub fn zero_to(order: i64) -> Self {
        Self { min: 0, coeffs: Vec::new(), horizon: Some(order) }
    }

    pub fn one() -> Self {
        Self::from_poly(&LaurentPoly::one())
    }

    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        Self::from_poly(&LaurentPoly::monomial(exp, c))
    }

    /// Embeds an exact polynomial (horizon unlimited).
    pub fn from_poly(p: &LaurentPoly) -> Self {
        match p.min_exp() {
            None => Self::zero(),
            Some(lo) => {
                let hi = p.max_exp().unwrap();
                let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in p.terms() {
                    coeffs[(e - lo) as usize] = c.clone();
                }
                Self { min: lo, coeffs, horizon: None }
            }
        }
    }

    pub fn horizon(&self) -> Option<i64> {
        self.horizon
    }

    /// Lowest exponent with a nonzero stored coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.min + i as i64)
    }

    pub fn is_zero_on_window(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if let Some(h) = self.horizon {
            assert!(exp <= h, "coefficient at q^{} is beyond the horizon {}", exp, h);
        }
        if self.coeffs.is_empty() || exp < self.min {
            return BigInt::zero();
        }
        let idx = exp - self.min;
        if idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min = 0;
        }
    }

    fn drop_beyond_horizon(&mut self) {
        if let Some(h) = self.horizon {
            if !self.coeffs.is_empty() {
                let keep = h - self.min + 1;
                if keep <= 0 {
                    self.coeffs.clear();
                    self.min = 0;
                } else if (keep as usize) < self.coeffs.len() {
                    self.coeffs.truncate(keep as usize);
                }
            }
        }
        self.trim();
    }

    /// Adds `c * q^exp`; contributions beyond the horizon are discarded,
    /// which is exactly what term-accumulation loops want.
    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if let Some(h) = self.horizon {
            if exp > h {
                return;
            }
        }
        if self.coeffs.is_empty() {
            self.min = exp;
            self.coeffs.push(c.clone());
            return;
        }
        if exp < self.min {
            let pad = (self.min - exp) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.extend(std::mem::take(&mut self.coeffs));
            self.coeffs = v;
            self.min = exp;
        }
        let idx = (exp - self.min) as usize;
        if idx >= self.coeffs.len() {
            self.coeffs.resize(idx + 1, BigInt::zero());
        }
        self.coeffs[idx] += c;
    }

    /// `q^shift * self`.
    pub fn shifted(&self, shift: i64) -> Self {
        let mut out = self.clone();
        out.min += shift;
        out.horizon = out.horizon.map(|h| h + shift);
        out
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            let mut out = Self::zero();
            out.horizon = self.horizon;
            return out;
        }
        let mut out = self.clone();
        for v in out.coeffs.iter_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&BigInt::from(-1))
    }

    pub fn add(&self, other: &Self) -> Self {
        let horizon = match (self.horizon, other.horizon) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        let mut out = Self { min: 0, coeffs: Vec::new(), horizon };
        for (s, _) in [(self, 0), (other, 0)] {
            for (i, c) in s.coeffs.iter().enumerate() {
                out.add_term(s.min + i as i64, c);
            }
        }
        out.drop_beyond_horizon();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Lowest exponent that could carry a nonzero coefficient, counting the
    /// unknown tail; used for horizon propagation in products.
    fn effective_valuation(&self) -> Option<i64> {
        match self.valuation() {
            Some(v) => Some(v),
            None => self.horizon.map(|h| h + 1),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let va = self.effective_valuation();
        let vb = other.effective_valuation();
        // A true zero (no terms, unlimited horizon) annihilates exactly.
        if va.is_none() || vb.is_none() {
            return Self::zero();
        }
        let mut horizon: Option<i64> = None;
        if let Some(h) = self.horizon {
            horizon = Some(h + vb.unwrap());
        }
        if let Some(h) = other.horizon {
            let cand = h + va.unwrap();
            horizon = Some(horizon.map_or(cand, |x| x.min(cand)));
        }
        let mut out = Self { min: 0, coeffs: Vec::new(), horizon };
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return out;
        }
        let lo = self.min + other.min;
        let full = self.coeffs.len() + other.coeffs.len() - 1;
        let len = match horizon {
            Some(h) => ((h - lo + 1).max(0) as usize).min(full),
            None => full,
        };
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs.iter().enumerate() {
                let idx = i + k;
                if idx >= len {
                    break;
                }
                coeffs[idx] += a * b;
            }
        }
        out.min = lo;
        out.coeffs = coeffs;
        out.drop_beyond_horizon();
        out
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        self.mul(&Self::from_poly(p))
    }

    /// Multiplicative inverse computed through exponent `target`.
    ///
    /// The lowest-order coefficient must be a unit (+1 or -1); every series
    /// inverted anywhere in this crate has that form.
    pub fn invert(&self, target: i64) -> Self {
        let v = self
            .valuation()
            .expect("cannot invert a series with no nonzero coefficient");
        let lead = self.coeff(v);
        assert!(
            lead.clone().abs().is_one(),
            "series inversion requires a unit lowest coefficient, got {}",
            lead
        );
        let h = match self.horizon {
            Some(n) => (n - 2 * v).min(target),
            None => target,
        };
        let out_lo = -v;
        let len = (h - out_lo + 1).max(0) as usize;
        if len == 0 {
            let mut z = Self::zero();
            z.horizon = Some(h);
            return z;
        }
        // normalized unit: b[i] = coeff(v + i)
        let width = len;
        let b: Vec<BigInt> = (0..width as i64).map(|i| self.coeff_raw(v + i)).collect();
        let mut r = vec![BigInt::zero(); width];
        r[0] = lead.clone(); // 1/(±1) = ±1
        for x in 1..width {
            let mut acc = BigInt::zero();
            for i in 1..=x {
                if !b[i].is_zero() && !r[x - i].is_zero() {
                    acc += &b[i] * &r[x - i];
                }
            }
            if !acc.is_zero() {
                r[x] = -(&lead * acc);
            }
        }
        let mut out = Self { min: out_lo, coeffs: r, horizon: Some(h) };
        out.drop_beyond_horizon();
        out
    }

    /// Coefficient lookup without the horizon assertion, for internal use
    /// where indexes are already range-checked against the window.
    fn coeff_raw(&self, exp: i64) -> BigInt {
        if self.coeffs.is_empty() || exp < self.min {
            return BigInt::zero();
        }
        let idx = exp - self.min;
        if idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Restriction to a smaller order; used by truncation-consistency tests.
    pub fn restrict(&self, order: i64) -> Self {
        if let Some(h) = self.horizon {
            assert!(order <= h, "cannot restrict to {} beyond horizon {}", order, h);
        }
        let mut out = self.clone();
        out.horizon = Some(order);
        out.drop_beyond_horizon();
        out
    }

    /// First mismatching exponent at or below `order`. Panics when either
    /// operand was not computed through `order`.
    pub fn first_mismatch_to(a: &Self, b: &Self, order: i64) -> Option<(i64, BigInt, BigInt)> {
        for (s, name) in [(a, "lhs"), (b, "rhs")] {
            if let Some(h) = s.horizon {
                assert!(
                    h >= order,
                    "{} only computed to order {}, comparison needs {}",
                    name,
                    h,
                    order
                );
            }
        }
        let lo = match (a.valuation(), b.valuation()) {
            (None, None) => return None,
            (Some(x), None) => x,
            (None, Some(y)) => y,
            (Some(x), Some(y)) => x.min(y),
        };
        for e in lo..=order {
            let ca = a.coeff_raw(e);
            let cb = b.coeff_raw(e);
            if ca != cb {
                return Some((e, ca, cb));
            }
        }
        None
    }

    pub fn eq_to(a: &Self, b: &Self, order: i64) -> bool {
        Self::first_mismatch_to(a, b, order).is_none()
    }

    /// Shifts the lowest nonzero coefficient one exponent up (injecting a
    /// unit at the horizon when the window is empty); self-test fuel.
    pub fn with_one_exponent_corrupted(&self) -> Self {
        let mut out = self.clone();
        match out.valuation() {
            Some(v) => {
                let c = out.coeff_raw(v);
                let neg = -c.clone();
                out.add_term(v, &neg);
                out.add_term(v + 1, &c);
                out.trim();
            }
            None => {
                let at = out.horizon.unwrap_or(0);
                out.add_term(at, &BigInt::one());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn horizon_propagates_through_products() {
        // (known to 10) * q^-3 is only known to 7
        let a = TruncatedSeries::from_poly(&poly(&[(0, 1), (1, 2)])).restrict(10);
        let m = TruncatedSeries::monomial(-3, 1);
        let p = a.mul(&m);
        assert_eq!(p.horizon(), Some(7));
        assert_eq!(p.coeff(-3), BigInt::from(1));
        // exact polynomial factors do not degrade the horizon
        let p2 = a.mul_poly(&poly(&[(0, 1), (5, 1)]));
        assert_eq!(p2.horizon(), Some(10));
    }

    #[test]
    fn unit_inversion_roundtrip_on_window() {
        let n = 24;
        // u = 1 - q - q^2 (unit), and a Laurent unit -q^-1 + 1
        for u in [
            TruncatedSeries::from_poly(&poly(&[(0, 1), (1, -1), (2, -1)])),
            TruncatedSeries::from_poly(&poly(&[(-1, -1), (0, 1)])),
        ] {
            let inv = u.invert(n);
            let prod = u.mul(&inv);
            assert!(
                TruncatedSeries::eq_to(&prod, &TruncatedSeries::one(), prod.horizon().unwrap()),
                "u * u^-1 != 1"
            );
            assert!(prod.horizon().unwrap() >= n - 2);
        }
    }

    #[test]
    #[should_panic(expected = "comparison needs")]
    fn comparing_beyond_horizon_is_loud() {
        let a = TruncatedSeries::from_poly(&poly(&[(0, 1)])).restrict(5);
        let b = TruncatedSeries::one();
        let _ = TruncatedSeries::first_mismatch_to(&a, &b, 6);
    }

    #[test]
    fn add_keeps_min_horizon_and_drops_tail_terms() {
        let a = TruncatedSeries::from_poly(&poly(&[(0, 1), (8, 5)])).restrict(10);
        let b = TruncatedSeries::from_poly(&poly(&[(1, 2), (9, 7)])).restrict(6);
        let s = a.add(&b);
        assert_eq!(s.horizon(), Some(6));
        assert_eq!(s.coeff(1), BigInt::from(2));
        // stored coefficients above the common horizon are gone
        assert_eq!(s.coeff(6), BigInt::zero());
    }

    #[test]
    fn restriction_commutes_with_arithmetic() {
        let u = TruncatedSeries::from_poly(&poly(&[(0, 1), (1, -1)]));
        let a = u.invert(30);
        let b = u.invert(12);
        assert_eq!(a.restrict(12), b);
    }
}
