//! Bailey pairs and the finite hypergeometric summation checks.
//!
//! A pair of sequences `(alpha, beta)` is a Bailey pair relative to
//! `a = q^kappa` when
//! `beta_n = sum_{r=0}^n alpha_r / ((q;q)_{n-r} (q^{kappa+1};q)_{n+r})`,
//! and the inverse relation recovers alpha:
//! `alpha_n = (1 - q^{kappa+2n}) sum_{r=0}^n (-1)^{n-r} q^C(n-r,2)
//!            (q^{kappa+1};q)_{n+r-1} / (q;q)_{n-r} beta_r`.
//!
//! All entries are rational functions compared by cross-multiplication.
//! The transforms assemble each sum over one explicit common denominator
//! built from Pochhammer ratio products, which keeps degrees linear in the
//! sequence length instead of exponential.

use crate::poch::{poch_poly, poch_ratio, qq_poly, qq_ratio};
use crate::poly::LaurentPoly;
use crate::rational::RationalFunction;
use crate::report::{compare_rationals, merge, params, VerificationReport};
use crate::schur::{theorem_rhs_with, SchurFamily, SchurFlavor};
use crate::binom2;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A Bailey pair relative to `a = q^kappa` with entries up to length `L`.
#[derive(Debug, Clone)]
pub struct BaileyPair {
    pub kappa: i64,
    pub alpha: Vec<RationalFunction>,
    pub beta: Vec<RationalFunction>,
}

impl BaileyPair {
    pub fn new(kappa: i64, alpha: Vec<RationalFunction>, beta: Vec<RationalFunction>) -> Self {
        assert!(kappa >= 0 && alpha.len() == beta.len());
        Self { kappa, alpha, beta }
    }

    /// Checks the defining relation for every `n < L`, cross-multiplied.
    pub fn check(&self, family: &str) -> Vec<VerificationReport> {
        let forward = bailey_forward(&self.alpha, self.kappa, self.alpha.len());
        self.beta
            .iter()
            .zip(forward.iter())
            .enumerate()
            .map(|(n, (b, f))| {
                compare_rationals(
                    family,
                    params(&[("n", n as i64), ("kappa", self.kappa)]),
                    b,
                    f,
                    false,
                )
            })
            .collect()
    }
}

/// `beta_n` for `n < len` from a given alpha sequence.
pub fn bailey_forward(alpha: &[RationalFunction], kappa: i64, len: usize) -> Vec<RationalFunction> {
    assert!(alpha.len() >= len);
    let mut out = Vec::with_capacity(len);
    for n in 0..len as i64 {
        let dens: Vec<&LaurentPoly> = (0..=n).map(|r| alpha[r as usize].den()).collect();
        let skip = skip_products(&dens);
        let mut num = LaurentPoly::zero();
        for r in 0..=n {
            // 1/((q;q)_{n-r} (q^{k+1};q)_{n+r}) lifted to the common
            // denominator (q;q)_n (q^{k+1};q)_{2n}
            let lift = &qq_ratio(n, n - r) * &poch_ratio(kappa + 1, 1, 2 * n, n + r);
            let t = &(alpha[r as usize].num() * &lift) * &skip[r as usize];
            num = &num + &t;
        }
        let mut den = &qq_poly(n) * &poch_poly(kappa + 1, 1, 2 * n);
        for d in &dens {
            den = &den * d;
        }
        out.push(RationalFunction::new(num, den));
    }
    out
}

/// `alpha_n` for `n < len` from a given beta sequence.
///
/// At `n = 0` the relation degenerates to `alpha_0 = beta_0` for every
/// `kappa` (for `kappa = 0` that is the regular limit of the otherwise
/// singular `(1 - q^kappa)(q^{kappa+1};q)_{-1}` product).
pub fn bailey_inverse(beta: &[RationalFunction], kappa: i64, len: usize) -> Vec<RationalFunction> {
    assert!(beta.len() >= len);
    let mut out = Vec::with_capacity(len);
    for n in 0..len as i64 {
        if n == 0 {
            out.push(beta[0].clone());
            continue;
        }
        let dens: Vec<&LaurentPoly> = (0..=n).map(|r| beta[r as usize].den()).collect();
        let skip = skip_products(&dens);
        let mut num = LaurentPoly::zero();
        for r in 0..=n {
            let mut t = &poch_poly(kappa + 1, 1, n + r - 1) * &qq_ratio(n, n - r);
            t = &t * &(beta[r as usize].num() * &skip[r as usize]);
            let sign = if (n - r) % 2 == 0 { 1 } else { -1 };
            num.add_assign_shifted(&t, binom2(n - r), sign);
        }
        let mut prefactor = LaurentPoly::one();
        prefactor.add_term(kappa + 2 * n, &BigInt::from(-1));
        num = &num * &prefactor;
        let mut den = qq_poly(n);
        for d in &dens {
            den = &den * d;
        }
        out.push(RationalFunction::new(num, den));
    }
    out
}

/// `prod_{s != r} dens[s]` for each r, via prefix/suffix products.
fn skip_products(dens: &[&LaurentPoly]) -> Vec<LaurentPoly> {
    let len = dens.len();
    let mut pre = vec![LaurentPoly::one(); len + 1];
    for i in 0..len {
        pre[i + 1] = &pre[i] * dens[i];
    }
    let mut suf = vec![LaurentPoly::one(); len + 1];
    for i in (0..len).rev() {
        suf[i] = &suf[i + 1] * dens[i];
    }
    (0..len).map(|r| &pre[r] * &suf[r + 1]).collect()
}

/// The classical pair relative to `q`:
/// `alpha_n = (-1)^n q^{n(3n+1)/2} (1-q^{2n+1})/(1-q)`, `beta_n = 1/(q;q)_n`.
pub fn rogers_alpha(n: i64) -> RationalFunction {
    let mut num = LaurentPoly::one();
    num.add_term(2 * n + 1, &BigInt::from(-1));
    let num = num.shifted(n * (3 * n + 1) / 2);
    let num = if n % 2 == 0 { num } else { -&num };
    RationalFunction::new(num, LaurentPoly::one_minus_q_pow(1))
}

pub fn rogers_beta(n: i64) -> RationalFunction {
    RationalFunction::new(LaurentPoly::one(), qq_poly(n))
}

pub fn check_rogers_instance(n: i64, corrupt: bool) -> VerificationReport {
    let alpha: Vec<RationalFunction> = (0..=n).map(rogers_alpha).collect();
    let forward = bailey_forward(&alpha, 1, (n + 1) as usize);
    compare_rationals(
        "rogers",
        params(&[("n", n)]),
        &forward[n as usize],
        &rogers_beta(n),
        corrupt,
    )
}

/// Rogers' pair satisfies the defining relation for all `n < len`.
pub fn rogers_pair_check(len: i64) -> Vec<VerificationReport> {
    (0..len).map(|n| check_rogers_instance(n, false)).collect()
}

/// Deterministic pseudo-random rational sequence for roundtrip checks:
/// numerators are small Laurent polynomials, denominators come from a pool
/// of binomial units.
pub fn random_rational_sequence(seed: u64, len: usize) -> Vec<RationalFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dens = [
        LaurentPoly::one(),
        LaurentPoly::one_minus_q_pow(1),
        LaurentPoly::one_minus_q_pow(2),
        LaurentPoly::one_minus_signed_q_pow(-1, 1), // 1 + q
        LaurentPoly::one_minus_q_pow(3),
    ];
    (0..len)
        .map(|_| {
            let mut num = LaurentPoly::zero();
            let terms = rng.gen_range(1..=4);
            for _ in 0..terms {
                let e = rng.gen_range(-2i64..=3);
                let c = loop {
                    let c = rng.gen_range(-9i64..=9);
                    if c != 0 {
                        break c;
                    }
                };
                num.add_term(e, &BigInt::from(c));
            }
            if num.is_zero() {
                num = LaurentPoly::one();
            }
            let den = dens[rng.gen_range(0..dens.len())].clone();
            RationalFunction::new(num, den)
        })
        .collect()
}

/// Roundtrip identity on one deterministic random sequence of length 8.
/// `dir 0`: forward then inverse recovers alpha; `dir 1`: inverse then
/// forward recovers beta.
pub fn check_roundtrip_instance(seq: i64, kappa: i64, dir: i64, corrupt: bool) -> VerificationReport {
    const LEN: usize = 8;
    let seed = 0x9E3779B9u64
        .wrapping_mul(seq as u64 + 1)
        .wrapping_add((kappa as u64) << 32)
        .wrapping_add(dir as u64);
    let original = random_rational_sequence(seed, LEN);
    let recovered = if dir == 0 {
        bailey_inverse(&bailey_forward(&original, kappa, LEN), kappa, LEN)
    } else {
        bailey_forward(&bailey_inverse(&original, kappa, LEN), kappa, LEN)
    };
    let p = params(&[("seq", seq), ("kappa", kappa), ("dir", dir)]);
    let reports: Vec<VerificationReport> = original
        .iter()
        .zip(recovered.iter())
        .map(|(a, b)| compare_rationals("bailey-roundtrip", p.clone(), b, a, corrupt))
        .collect();
    merge(reports)
}

/// q-Chu-Vandermonde summation at `a = q^A`, `c = q^C` (or the `c = 0`
/// instance when `c_exp` is `None`):
/// `sum_{j=0}^n (a, q^{-n}; q)_j q^j / ((q, c; q)_j)
///  = (c/a; q)_n a^n / (c; q)_n`.
pub fn qcv_check(n: i64, a_exp: i64, c_exp: Option<i64>, corrupt: bool) -> VerificationReport {
    assert!(n >= 0);
    let mut p = params(&[("n", n), ("a", a_exp)]);
    match c_exp {
        Some(c) => p.push(("c".into(), c)),
        None => p.push(("czero".into(), 1)),
    }

    // admissibility: (c;q)_j must not vanish for j <= n
    if let Some(c) = c_exp {
        if poch_poly(c, 1, n).is_zero() {
            return VerificationReport::invalid("qcv", p, None);
        }
    }

    let c_poch_n = match c_exp {
        Some(c) => poch_poly(c, 1, n),
        None => LaurentPoly::one(),
    };
    let mut num = LaurentPoly::zero();
    for j in 0..=n {
        let mut t = &poch_poly(a_exp, 1, j) * &poch_poly(-n, 1, j);
        t = &t * &qq_ratio(n, j);
        if let Some(c) = c_exp {
            t = &t * &poch_ratio(c, 1, n, j);
        }
        num.add_assign_shifted(&t, j, 1);
    }
    let lhs = RationalFunction::new(num, &qq_poly(n) * &c_poch_n);

    let rhs_num = match c_exp {
        Some(c) => poch_poly(c - a_exp, 1, n).shifted(a_exp * n),
        None => LaurentPoly::q_pow(a_exp * n),
    };
    let rhs = RationalFunction::new(rhs_num, c_poch_n);

    compare_rationals("qcv", p, &lhs, &rhs, corrupt)
}

/// Watson-Sears transform check at q-power parameters `a = q^A`, ...,
/// `e = q^E`; the terminating very-well-poised series
/// `sum_j (1-aq^{2j})/(1-a) (a,b,c,d,e,q^{-n};q)_j /
///  ((q, aq/b, aq/c, aq/d, aq/e, aq^{n+1};q)_j) z^j`,
/// `z = a^2 q^{n+2}/(bcde)`, equals
/// `(aq, b, a^2q^2/bcde;q)_n / ((aq/c, aq/d, aq/e;q)_n)` times the
/// balanced 4phi3 with upper row `(aq/bc, aq/bd, aq/be, q^{-n})` and lower
/// row `(aq/b, a^2q^2/bcde, q^{1-n}/b)`.
///
/// Parameter tuples producing a vanishing denominator anywhere on either
/// side are rejected as invalid instances before evaluation.
pub fn ws_check(
    n: i64,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    e: i64,
    corrupt: bool,
) -> VerificationReport {
    assert!(n >= 0);
    let p = params(&[("n", n), ("a", a), ("b", b), ("c", c), ("d", d), ("e", e)]);

    let g = 2 + 2 * a - b - c - d - e; // a^2 q^2 / bcde
    let h = 1 - n - b; // q^{1-n} / b
    let z = 2 * a + n + 2 - b - c - d - e; // argument of the 8W7

    // denominators that must not vanish through index n
    let den_exps = [1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, a + n + 1, g, h];
    for &x in &den_exps {
        if poch_poly(x, 1, n).is_zero() {
            return VerificationReport::invalid("ws", p, None);
        }
    }

    // left side over (q;q)_n (aq/b,aq/c,aq/d,aq/e,aq^{n+1};q)_n
    let mut lnum = LaurentPoly::zero();
    for j in 0..=n {
        let mut t = if j == 0 {
            LaurentPoly::one()
        } else {
            // (1-aq^{2j})/(1-a) (a;q)_j = (1-q^{A+2j}) (q^{A+1};q)_{j-1}
            let mut v = poch_poly(a + 1, 1, j - 1);
            v.mul_one_minus_q_pow(a + 2 * j);
            v
        };
        for x in [b, c, d, e, -n] {
            t = &t * &poch_poly(x, 1, j);
        }
        t = &t * &qq_ratio(n, j);
        for x in [1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, a + n + 1] {
            t = &t * &poch_ratio(x, 1, n, j);
        }
        lnum.add_assign_shifted(&t, j * z, 1);
    }
    let mut lden = qq_poly(n);
    for x in [1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, a + n + 1] {
        lden = &lden * &poch_poly(x, 1, n);
    }
    let lhs = RationalFunction::new(lnum, lden);

    // right side: prefactor times balanced 4phi3 over
    // (q;q)_n (aq/b, G, H;q)_n
    let mut phinum = LaurentPoly::zero();
    for j in 0..=n {
        let mut t = LaurentPoly::one();
        for x in [1 + a - b - c, 1 + a - b - d, 1 + a - b - e, -n] {
            t = &t * &poch_poly(x, 1, j);
        }
        t = &t * &qq_ratio(n, j);
        for x in [1 + a - b, g, h] {
            t = &t * &poch_ratio(x, 1, n, j);
        }
        phinum.add_assign_shifted(&t, j, 1);
    }
    let mut pref_num = &poch_poly(a + 1, 1, n) * &poch_poly(b, 1, n);
    pref_num = &pref_num * &poch_poly(g, 1, n);
    let mut pref_den = LaurentPoly::one();
    for x in [1 + a - c, 1 + a - d, 1 + a - e] {
        pref_den = &pref_den * &poch_poly(x, 1, n);
    }
    let mut phiden = qq_poly(n);
    for x in [1 + a - b, g, h] {
        phiden = &phiden * &poch_poly(x, 1, n);
    }
    let rhs = RationalFunction::new(&pref_num * &phinum, &pref_den * &phiden);

    compare_rationals("ws", p, &lhs, &rhs, corrupt)
}

/// Replays the inversion step of the main proof concretely: the Schur
/// expressions `beta_m = x_{2m+k+2} q^{-C(2m+k+2,2)} (q;q)_{k+1}` form the
/// beta side of a Bailey pair relative to `q^{k+1}`, and inverting must
/// reproduce the weighted Schur sum of the main identity up to the
/// prefactor `q^{-C(2n+k+2,2)} (1 - q^{2n+k+1})`.
pub fn check_theorem_inversion(
    flavor: SchurFlavor,
    k: i64,
    m_max: i64,
    corrupt: bool,
) -> VerificationReport {
    let fam = SchurFamily::new(flavor);
    let len = (m_max + 1) as usize;
    let beta: Vec<RationalFunction> = (0..=m_max)
        .map(|m| {
            let num = &fam.get(2 * m + k + 2) * &qq_poly(k + 1);
            RationalFunction::from_poly(num.shifted(-binom2(2 * m + k + 2)))
        })
        .collect();
    let alpha = bailey_inverse(&beta, k + 1, len);
    let p = params(&[("flavor", flavor.tag()), ("k", k), ("m_max", m_max)]);
    let reports: Vec<VerificationReport> = (0..=m_max)
        .map(|nn| {
            let mut expect = theorem_rhs_with(&fam, nn, k);
            expect.mul_one_minus_q_pow(2 * nn + k + 1);
            let expect =
                RationalFunction::from_poly(expect.shifted(-binom2(2 * nn + k + 2)));
            compare_rationals(
                "bailey-inversion",
                p.clone(),
                &alpha[nn as usize],
                &expect,
                corrupt,
            )
        })
        .collect();
    merge(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_of_delta_alpha() {
        // alpha = (1, 0, 0, ...), kappa = 0: beta_n = 1/((q;q)_n)^2
        let alpha: Vec<RationalFunction> = (0..4)
            .map(|r| if r == 0 { RationalFunction::one() } else { RationalFunction::zero() })
            .collect();
        let beta = bailey_forward(&alpha, 0, 4);
        assert_eq!(beta[0], RationalFunction::one());
        for (n, b) in beta.iter().enumerate() {
            let q = qq_poly(n as i64);
            assert_eq!(*b, RationalFunction::new(LaurentPoly::one(), &q * &q), "n={}", n);
        }
        // alpha = (0, 1, 0, ...): beta_0 = 0
        let alpha2: Vec<RationalFunction> = (0..2)
            .map(|r| if r == 1 { RationalFunction::one() } else { RationalFunction::zero() })
            .collect();
        assert!(bailey_forward(&alpha2, 0, 1)[0].is_zero());
    }

    #[test]
    fn inverse_of_delta_beta() {
        // beta = (1, 0, 0, ...), kappa = 0: alpha_0 = 1
        let beta: Vec<RationalFunction> = (0..3)
            .map(|r| if r == 0 { RationalFunction::one() } else { RationalFunction::zero() })
            .collect();
        let alpha = bailey_inverse(&beta, 0, 3);
        assert_eq!(alpha[0], RationalFunction::one());
    }

    #[test]
    fn rogers_pair_small() {
        for r in rogers_pair_check(8) {
            assert!(r.is_pass(), "{:?}", r);
        }
        // beta_2 is literally 1/(q;q)_2
        assert!(check_rogers_instance(2, false).is_pass());
    }

    #[test]
    fn rogers_inverse_recovers_alpha() {
        // the inverse relation applied to beta_n = 1/(q;q)_n, kappa = 1,
        // gives Rogers' alpha
        let beta: Vec<RationalFunction> = (0..6).map(rogers_beta).collect();
        let alpha = bailey_inverse(&beta, 1, 6);
        for (n, a) in alpha.iter().enumerate() {
            assert_eq!(*a, rogers_alpha(n as i64), "n={}", n);
        }
    }

    #[test]
    fn roundtrip_both_directions() {
        for kappa in 0..=1 {
            for dir in 0..=1 {
                let r = check_roundtrip_instance(0, kappa, dir, false);
                assert!(r.is_pass(), "{:?}", r);
            }
        }
    }

    #[test]
    fn qcv_small_instances() {
        assert!(qcv_check(0, 1, Some(2), false).is_pass());
        // n=1, a=q, c=q^2: both sides q/(1+q), verified by hand
        assert!(qcv_check(1, 1, Some(2), false).is_pass());
        assert!(qcv_check(5, 3, Some(7), false).is_pass());
        // c = 0 instance: right side collapses to a^n
        assert!(qcv_check(3, 2, None, false).is_pass());
        // inadmissible: c = q^0 makes (c;q)_j vanish
        assert_eq!(qcv_check(2, 1, Some(0), false).status, crate::report::Status::Invalid);
    }

    #[test]
    fn ws_small_instances() {
        assert!(ws_check(0, 2, 1, 1, 1, 1, false).is_pass());
        assert!(ws_check(1, 2, 1, 1, 1, 1, false).is_pass());
        assert!(ws_check(3, 3, 1, 2, 1, 1, false).is_pass());
    }

    #[test]
    fn theorem_inversion_small() {
        for flavor in [SchurFlavor::E, SchurFlavor::D] {
            for k in 0..=1 {
                let r = check_theorem_inversion(flavor, k, 4, false);
                assert!(r.is_pass(), "{:?} k={}: {:?}", flavor, k, r);
            }
        }
    }
}
