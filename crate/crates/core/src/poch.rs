//! q-Pochhammer symbols and Gaussian binomial coefficients.
//!
//! The finite symbol is `(q^m; q^b)_n = prod_{j=0}^{n-1} (1 - q^{m+jb})`,
//! extended to negative length by `(a;q)_n = (a;q)_inf / (aq^n;q)_inf`,
//! which amounts to `(q^m;q^b)_{-t} = 1 / prod_{j=1}^{t} (1 - q^{m-jb})`.
//! Under that extension `1/(q;q)_n` is identically zero for `n < 0`: the
//! flipped product acquires the factor `1 - q^0`. [`poch_finite_recip`]
//! realises the reciprocal as an honest (possibly zero) polynomial so that
//! callers can treat those terms uniformly.

use crate::poly::{DensePoly, LaurentPoly};
use crate::rational::RationalFunction;
use crate::series::TruncatedSeries;

/// Length parameter of a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PochLength {
    Finite(i64),
    Infinite,
}

/// Description of a symbol `(q^m; q^b)_n` with `a` specialised to a power
/// of `q`, the only form the identities here ever need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QPochSpec {
    /// Exponent of the argument: `a = q^m`.
    pub base_exp: i64,
    /// Modulus: the base is `q^b`, `b >= 1`.
    pub modulus: i64,
    pub length: PochLength,
}

impl QPochSpec {
    pub fn finite(base_exp: i64, modulus: i64, n: i64) -> Self {
        assert!(modulus >= 1);
        Self { base_exp, modulus, length: PochLength::Finite(n) }
    }

    pub fn infinite(base_exp: i64, modulus: i64) -> Self {
        assert!(modulus >= 1);
        Self { base_exp, modulus, length: PochLength::Infinite }
    }

    pub fn eval_finite(&self) -> RationalFunction {
        match self.length {
            PochLength::Finite(n) => poch_finite(self.base_exp, self.modulus, n),
            PochLength::Infinite => panic!("infinite symbol needs a series order"),
        }
    }

    pub fn eval_series(&self, order: i64) -> TruncatedSeries {
        match self.length {
            PochLength::Finite(n) => {
                let r = poch_finite(self.base_exp, self.modulus, n);
                assert!(r.den().is_one(), "negative-length symbol is not a series");
                TruncatedSeries::from_poly(r.num()).restrict(order)
            }
            PochLength::Infinite => poch_inf(self.base_exp, self.modulus, order),
        }
    }
}

/// `prod_{j=0}^{n-1} (1 - q^{m+jb})` for `n >= 0`, as an exact polynomial.
/// The product is the zero polynomial whenever some factor exponent is 0.
pub fn poch_poly(m: i64, b: i64, n: i64) -> LaurentPoly {
    assert!(b >= 1 && n >= 0);
    let mut acc = DensePoly::one();
    for j in 0..n {
        let e = m + j * b;
        if e == 0 {
            return LaurentPoly::zero();
        }
        acc.mul_one_minus_q_pow(e);
    }
    acc.into_sparse()
}

/// `(q;q)_n` for `n >= 0`.
pub fn qq_poly(n: i64) -> LaurentPoly {
    poch_poly(1, 1, n)
}

/// `(q;q)_hi / (q;q)_lo = prod_{j=lo+1}^{hi} (1 - q^j)` for `hi >= lo >= 0`.
pub fn qq_ratio(hi: i64, lo: i64) -> LaurentPoly {
    assert!(hi >= lo && lo >= 0, "qq_ratio({}, {})", hi, lo);
    let mut acc = DensePoly::one();
    for j in lo + 1..=hi {
        acc.mul_one_minus_q_pow(j);
    }
    acc.into_sparse()
}

/// `(q^m; q^b)_hi / (q^m; q^b)_lo = prod_{j=lo}^{hi-1} (1 - q^{m+jb})`,
/// `hi >= lo >= 0`.
pub fn poch_ratio(m: i64, b: i64, hi: i64, lo: i64) -> LaurentPoly {
    assert!(hi >= lo && lo >= 0);
    let mut acc = DensePoly::one();
    for j in lo..hi {
        let e = m + j * b;
        if e == 0 {
            return LaurentPoly::zero();
        }
        acc.mul_one_minus_q_pow(e);
    }
    acc.into_sparse()
}

/// `(q^m; q^b)_n` for any integer `n`.
///
/// Negative lengths resolve through the extension rule; if the flipped
/// product vanishes the symbol is a pole and this panics -- use
/// [`poch_finite_recip`] where the reciprocal-zero convention is wanted.
pub fn poch_finite(m: i64, b: i64, n: i64) -> RationalFunction {
    if n >= 0 {
        RationalFunction::from_poly(poch_poly(m, b, n))
    } else {
        let den = flipped_product(m, b, -n);
        assert!(
            !den.is_zero(),
            "(q^{}; q^{})_{} is a pole; its reciprocal is the value that exists",
            m,
            b,
            n
        );
        RationalFunction::new(LaurentPoly::one(), den)
    }
}

/// `1 / (q^m; q^b)_n` for any integer `n`, total: for `n < 0` this is the
/// polynomial `prod_{j=1}^{-n} (1 - q^{m-jb})`, which is exactly zero when
/// the product contains `1 - q^0` (so `1/(q;q)_n = 0` for `n < 0`).
pub fn poch_finite_recip(m: i64, b: i64, n: i64) -> RationalFunction {
    if n >= 0 {
        let den = poch_poly(m, b, n);
        assert!(!den.is_zero(), "reciprocal of zero symbol (q^{}; q^{})_{}", m, b, n);
        RationalFunction::new(LaurentPoly::one(), den)
    } else {
        RationalFunction::from_poly(flipped_product(m, b, -n))
    }
}

fn flipped_product(m: i64, b: i64, t: i64) -> LaurentPoly {
    debug_assert!(t > 0);
    let mut acc = LaurentPoly::one();
    for j in 1..=t {
        let e = m - j * b;
        if e == 0 {
            return LaurentPoly::zero();
        }
        let mut d = DensePoly::from_sparse(&acc);
        d.mul_one_minus_q_pow(e);
        acc = d.into_sparse();
    }
    acc
}

/// `1/(q;q)_n` as a truncated series: zero for `n < 0`, otherwise the unit
/// inverse of the finite product.
pub fn recip_qq_series(n: i64, order: i64) -> TruncatedSeries {
    if n < 0 {
        TruncatedSeries::zero()
    } else {
        TruncatedSeries::from_poly(&qq_poly(n)).invert(order)
    }
}

/// `(q^m; q^b)_inf` truncated at `order`. `m <= 0` yields a Laurent window:
/// the finitely many non-unit factors multiply an ordinary unit tail. A
/// factor with exponent 0 makes the whole product exactly zero.
pub fn poch_inf(m: i64, b: i64, order: i64) -> TruncatedSeries {
    poch_inf_signed(1, m, b, order)
}

/// `prod_{j>=0} (1 - sign * q^{m+jb})` truncated at `order`, `sign = +-1`.
/// Coefficients are exact through `order` even when `m <= 0`: the internal
/// working order is raised by the product's negative valuation.
pub fn poch_inf_signed(sign: i64, m: i64, b: i64, order: i64) -> TruncatedSeries {
    assert!(b >= 1);
    assert!(sign == 1 || sign == -1);
    let mut negv = 0;
    let mut j = 0;
    while m + j * b < 0 {
        negv += m + j * b;
        j += 1;
    }
    let elevated = order - negv;
    let mut acc = TruncatedSeries::one().restrict(elevated);
    let mut j = 0;
    loop {
        let e = m + j * b;
        if e == 0 && sign == 1 {
            // a factor 1 - q^0 annihilates the whole product exactly
            return TruncatedSeries::zero();
        }
        // inert for the final window: e plus the full valuation clears it
        if e > elevated {
            break;
        }
        acc = acc.mul_poly(&LaurentPoly::one_minus_signed_q_pow(sign, e));
        j += 1;
    }
    acc
}

/// Gaussian binomial coefficient: `(q;q)_n / ((q;q)_m (q;q)_{n-m})` for
/// `0 <= m <= n`, zero otherwise.
pub fn q_binomial(n: i64, m: i64) -> LaurentPoly {
    if m < 0 || m > n {
        return LaurentPoly::zero();
    }
    let m = m.min(n - m);
    let mut acc = DensePoly::one();
    // Interleaved product/division keeps every partial result a Gaussian
    // binomial, so each division is exact.
    for j in 1..=m {
        acc.mul_one_minus_q_pow(n - m + j);
        acc.exact_div_one_minus_q_pow(j);
    }
    acc.into_sparse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn finite_symbol_small_cases() {
        // (q;q)_0 = 1 (empty product)
        assert!(poch_finite(1, 1, 0).num().is_one());
        // (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3, expanded by hand
        assert_eq!(qq_poly(2), p(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
    }

    #[test]
    fn reciprocal_convention_for_negative_length() {
        // 1/(q;q)_{-1} is exactly zero: the flipped product contains 1-q^0.
        let r = poch_finite_recip(1, 1, -1);
        assert!(r.num().is_zero());
        // (q^3;q)_{-2} = 1/((1-q^2)(1-q)) is a regular value.
        let v = poch_finite(3, 1, -2);
        assert_eq!(
            v.recip().num(),
            &(&p(&[(0, 1), (2, -1)]) * &p(&[(0, 1), (1, -1)]))
        );
        // (q^{k+2};q)_{-1} = 1/(1 - q^{k+1})
        let v = poch_finite(2, 1, -1);
        assert_eq!(v, RationalFunction::new(p(&[(0, 1)]), p(&[(0, 1), (1, -1)])));
    }

    #[test]
    fn infinite_product_pentagonal_prefix() {
        // (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - ... ; to order 5 by brute
        // product of the first factors.
        let s = poch_inf(1, 1, 5);
        let expect = TruncatedSeries::from_poly(&p(&[(0, 1), (1, -1), (2, -1), (5, 1)]));
        assert!(TruncatedSeries::eq_to(&s, &expect, 5));
    }

    #[test]
    fn infinite_product_all_factors_inert() {
        let s = poch_inf(6, 5, 4);
        assert!(TruncatedSeries::eq_to(&s, &TruncatedSeries::one(), 4));
    }

    #[test]
    fn infinite_product_unit_inverse_contract() {
        let n = 40;
        let s = poch_inf(1, 1, n);
        let prod = s.mul(&s.invert(n));
        assert!(TruncatedSeries::eq_to(&prod, &TruncatedSeries::one(), n));
    }

    #[test]
    fn laurent_window_for_nonpositive_base() {
        // (q^{-1};q)_inf contains the factor 1 - q^0: exactly zero.
        let s = poch_inf(-1, 1, 6);
        assert!(s.is_zero_on_window());
        // with modulus 5 the exponents are -1, 4, 9, ...: a genuine unit
        // multiple of q^{-1}.
        let s = poch_inf(-1, 5, 6);
        assert_eq!(s.valuation(), Some(-1));
        let expect = TruncatedSeries::from_poly(
            &(&p(&[(0, 1), (-1, -1)]) * &p(&[(0, 1), (4, -1)])),
        )
        .mul_poly(&p(&[(0, 1), (9, -1)]));
        assert!(TruncatedSeries::eq_to(&s, &expect.restrict(6), 6));
    }

    #[test]
    fn gaussian_binomial_values() {
        // [4 2]_q = (q;q)_4/((q;q)_2)^2 expanded independently
        let num = qq_poly(4);
        let den = &qq_poly(2) * &qq_poly(2);
        let direct = q_binomial(4, 2);
        assert_eq!(&direct * &den, num);
        assert_eq!(direct, p(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert!(q_binomial(3, 0).is_one());
        assert!(q_binomial(2, 5).is_zero());
        assert!(q_binomial(5, -1).is_zero());
    }

    proptest! {
        #[test]
        fn concatenation_law(m in 1i64..4, b in 1i64..3, n in 0i64..7, k in 0i64..7) {
            // (q^m;q^b)_n * (q^{m+nb};q^b)_k = (q^m;q^b)_{n+k}
            let left = &poch_poly(m, b, n) * &poch_poly(m + n * b, b, k);
            prop_assert_eq!(left, poch_poly(m, b, n + k));
        }

        #[test]
        fn binomial_matches_definition(n in 0i64..10, m in 0i64..10) {
            let qb = q_binomial(n, m);
            if m > n {
                prop_assert!(qb.is_zero());
            } else {
                prop_assert_eq!(&qb * &(&qq_poly(m) * &qq_poly(n - m)), qq_poly(n));
            }
        }
    }
}
