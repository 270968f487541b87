//! Brute-force partition combinatorics: Frobenius symbols, successive
//! ranks, oscillations, the gap-2 / rank-restricted bijection, minimal
//! oscillation partitions, and the signed sum matching the partial theta
//! series.
//!
//! A partition is a weakly decreasing list of positive parts. Along its
//! Durfee diagonal it is the two-rowed symbol `(t_j; b_j)` with
//! `t_j = lambda_j - j` and `b_j = lambda'_j - j`; the successive ranks are
//! `r(lambda) = (t_j - b_j)`. The `(2,i)`-positive oscillation is the
//! length of the longest subsequence of `r(lambda)` whose odd-position
//! entries are `>= 4-i` and even-position entries are `<= 1-i`; negative
//! oscillation swaps the two thresholds.
//!
//! Subsequence means strictly increasing indices, not necessarily
//! contiguous, and a length-1 subsequence must meet the *first* threshold
//! (high for positive, low for negative). That reading is validated rather
//! than assumed: the closed-form minimal partitions are required to have
//! oscillation exactly `j`, and the minimality searches would fail loudly
//! under any other convention.

use crate::poly::LaurentPoly;
use crate::report::{compare_polys, merge, params, VerificationReport};
use crate::schur::{partial_theta, SchurFamily, SchurFlavor};
use crate::Error;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> i64 {
        self.parts.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> i64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = (1..=self.largest())
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as i64)
            .collect();
        Partition { parts: cols }
    }

    /// Durfee square side: `max { j : lambda_j >= j }`.
    pub fn durfee(&self) -> i64 {
        let mut d = 0;
        for (idx, &p) in self.parts.iter().enumerate() {
            if p >= (idx + 1) as i64 {
                d = (idx + 1) as i64;
            } else {
                break;
            }
        }
        d
    }

    /// Frobenius symbol `(top; bottom)`, both strictly decreasing.
    pub fn frobenius(&self) -> (Vec<i64>, Vec<i64>) {
        let d = self.durfee() as usize;
        let conj = self.conjugate();
        let top = (0..d).map(|j| self.parts[j] - (j + 1) as i64).collect();
        let bottom = (0..d).map(|j| conj.parts[j] - (j + 1) as i64).collect();
        (top, bottom)
    }

    /// Reconstructs the partition with the given Frobenius symbol.
    pub fn from_frobenius(top: &[i64], bottom: &[i64]) -> Partition {
        assert_eq!(top.len(), bottom.len());
        let d = top.len();
        assert!(top.windows(2).all(|w| w[0] > w[1]));
        assert!(bottom.windows(2).all(|w| w[0] > w[1]));
        let mut parts: Vec<i64> = (0..d).map(|j| top[j] + (j + 1) as i64).collect();
        // rows below the Durfee square come from the leg lengths
        let mut row = d as i64 + 1;
        loop {
            let len = (0..d).filter(|&j| bottom[j] + (j + 1) as i64 >= row).count() as i64;
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        let out = Partition::new(parts);
        debug_assert_eq!(out.frobenius(), (top.to_vec(), bottom.to_vec()));
        out
    }

    /// Successive ranks `t_j - b_j`.
    pub fn ranks(&self) -> Vec<i64> {
        let (t, b) = self.frobenius();
        t.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscSign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OscillationSpec {
    /// Class index, 1 or 2; thresholds are `>= 4-i` and `<= 1-i`.
    pub i: i64,
    pub sign: OscSign,
}

/// Longest alternating-threshold subsequence of the rank sequence, by a
/// two-state scan (best even length / best odd length seen so far).
pub fn oscillation(lambda: &Partition, spec: OscillationSpec) -> i64 {
    let hi = 4 - spec.i;
    let lo = 1 - spec.i;
    // positive: odd positions high, even positions low; negative swaps
    let meets_first = |x: i64| match spec.sign {
        OscSign::Positive => x >= hi,
        OscSign::Negative => x <= lo,
    };
    let meets_second = |x: i64| match spec.sign {
        OscSign::Positive => x <= lo,
        OscSign::Negative => x >= hi,
    };
    let mut best_even: i64 = 0; // includes the empty subsequence
    let mut best_odd: i64 = i64::MIN / 2;
    for x in lambda.ranks() {
        let new_odd = if meets_first(x) { best_odd.max(best_even + 1) } else { best_odd };
        let new_even = if meets_second(x) { best_even.max(best_odd + 1) } else { best_even };
        best_odd = new_odd;
        best_even = new_even;
    }
    best_even.max(best_odd).max(0)
}

/// Exhaustive subsequence search; the oracle for the scan above on small
/// partitions.
pub fn oscillation_brute(lambda: &Partition, spec: OscillationSpec) -> i64 {
    let ranks = lambda.ranks();
    let d = ranks.len();
    assert!(d <= 20, "brute-force oscillation is for small partitions");
    let hi = 4 - spec.i;
    let lo = 1 - spec.i;
    let mut best = 0;
    for mask in 0u32..(1 << d) {
        let sel: Vec<i64> = (0..d).filter(|&t| mask >> t & 1 == 1).map(|t| ranks[t]).collect();
        let ok = sel.iter().enumerate().all(|(pos, &x)| {
            let want_high = match spec.sign {
                OscSign::Positive => pos % 2 == 0,
                OscSign::Negative => pos % 2 == 1,
            };
            if want_high {
                x >= hi
            } else {
                x <= lo
            }
        });
        if ok {
            best = best.max(sel.len() as i64);
        }
    }
    best
}

/// Calls `f` for every partition of `l` with parts at most `max_part` and
/// at most `max_len` parts, in deterministic order (parts chosen largest
/// first).
pub fn enumerate_partitions(l: i64, max_part: i64, max_len: i64, f: &mut dyn FnMut(&[i64])) {
    fn rec(
        remaining: i64,
        max_next: i64,
        slots: i64,
        buf: &mut Vec<i64>,
        f: &mut dyn FnMut(&[i64]),
    ) {
        if remaining == 0 {
            f(buf);
            return;
        }
        if slots == 0 || max_next == 0 {
            return;
        }
        let hi = max_next.min(remaining);
        for p in (1..=hi).rev() {
            if p * slots < remaining {
                break;
            }
            buf.push(p);
            rec(remaining - p, p, slots - 1, buf, f);
            buf.pop();
        }
    }
    if l == 0 {
        f(&[]);
        return;
    }
    if l < 0 || max_part <= 0 || max_len <= 0 {
        return;
    }
    let mut buf = Vec::new();
    rec(l, max_part, max_len, &mut buf, f);
}

/// Membership in `b_i(l, n)`: gaps of at least 2, largest part at most
/// `n - 2`, and no part equal to 1 when `i = 1`.
fn is_b_member(parts: &[i64], i: i64, n: i64) -> bool {
    if let Some(&first) = parts.first() {
        if first > n - 2 {
            return false;
        }
    }
    if parts.windows(2).any(|w| w[0] - w[1] < 2) {
        return false;
    }
    if i == 1 && parts.last() == Some(&1) {
        return false;
    }
    true
}

/// `|b_i(l, n)|` by enumeration.
pub fn count_b(i: i64, l: i64, n: i64) -> u64 {
    assert!(i == 1 || i == 2);
    let mut count = 0;
    enumerate_partitions(l, (n - 2).max(0), l.max(1), &mut |parts| {
        if is_b_member(parts, i, n) {
            count += 1;
        }
    });
    count
}

/// Rank window and size bounds of `q_i(., n)`:
/// ranks in {0,1} with parts <= floor(n/2), length <= floor((n-1)/2) for
/// i = 2; ranks in {1,2} with parts <= floor((n+1)/2), length <=
/// floor((n-2)/2) for i = 1.
fn q_bounds(i: i64, n: i64) -> (i64, i64, i64, i64) {
    match i {
        2 => (0, 1, n.div_euclid(2), (n - 1).div_euclid(2)),
        1 => (1, 2, (n + 1).div_euclid(2), (n - 2).div_euclid(2)),
        _ => panic!("i must be 1 or 2"),
    }
}

fn is_q_member(p: &Partition, i: i64, n: i64) -> bool {
    let (rank_lo, rank_hi, max_part, max_len) = q_bounds(i, n);
    if p.largest() > max_part || p.len() > max_len {
        return false;
    }
    p.ranks().iter().all(|&r| (rank_lo..=rank_hi).contains(&r))
}

/// `|q_i(l, n)|` by enumeration.
pub fn count_q(i: i64, l: i64, n: i64) -> u64 {
    let (_, _, max_part, max_len) = q_bounds(i, n);
    let mut count = 0;
    enumerate_partitions(l, max_part.max(0), max_len.max(0), &mut |parts| {
        let p = Partition::new(parts.to_vec());
        if is_q_member(&p, i, n) {
            count += 1;
        }
    });
    count
}

/// All members of `q_i(., n)` across every weight (the boxes are finite).
pub fn q_set(i: i64, n: i64) -> Vec<Partition> {
    let (_, _, max_part, max_len) = q_bounds(i, n);
    let mut out = Vec::new();
    for l in 0..=(max_part.max(0) * max_len.max(0)) {
        enumerate_partitions(l, max_part.max(0), max_len.max(0), &mut |parts| {
            let p = Partition::new(parts.to_vec());
            if is_q_member(&p, i, n) {
                out.push(p);
            }
        });
    }
    out
}

/// Forward half of the weight-preserving bijection `b_i -> q_i`: the part
/// `lambda_j` splits into the Frobenius column
/// `(floor(lambda_j/2); floor((lambda_j-1)/2))`.
pub fn bq_forward(i: i64, lambda: &Partition, n: i64) -> Result<Partition, Error> {
    if !is_b_member(lambda.parts(), i, n) {
        return Err(Error::Membership(format!("{} is not in b_{}(., {})", lambda, i, n)));
    }
    let top: Vec<i64> = lambda.parts().iter().map(|&p| p.div_euclid(2)).collect();
    let bottom: Vec<i64> = lambda.parts().iter().map(|&p| (p - 1).div_euclid(2)).collect();
    let mu = Partition::from_frobenius(&top, &bottom);
    debug_assert_eq!(mu.weight(), lambda.weight());
    debug_assert!(is_q_member(&mu, i, n), "image {} not in q_{}(., {})", mu, i, n);
    Ok(mu)
}

/// Backward half: a symbol column `(s_j; c_j)` rejoins into the part
/// `s_j + c_j + 1`.
pub fn bq_backward(i: i64, mu: &Partition, n: i64) -> Result<Partition, Error> {
    if !is_q_member(mu, i, n) {
        return Err(Error::Membership(format!("{} is not in q_{}(., {})", mu, i, n)));
    }
    let (top, bottom) = mu.frobenius();
    let parts: Vec<i64> = top.iter().zip(bottom.iter()).map(|(s, c)| s + c + 1).collect();
    let lambda = if parts.is_empty() { Partition::empty() } else { Partition::new(parts) };
    debug_assert!(is_b_member(lambda.parts(), i, n));
    Ok(lambda)
}

/// `p_i` / `m_i`: partitions of `l` in an `a x b` box with oscillation of
/// the given sign at least `j`.
pub fn count_pm(i: i64, a: i64, b: i64, j: i64, l: i64, sign: OscSign) -> u64 {
    let spec = OscillationSpec { i, sign };
    let mut count = 0;
    enumerate_partitions(l, a.max(0), b.max(0), &mut |parts| {
        let p = Partition::new(parts.to_vec());
        if oscillation(&p, spec) >= j {
            count += 1;
        }
    });
    count
}

/// Generating function `sum_l count q^l` over a whole box.
fn pm_generating(i: i64, a: i64, b: i64, j: i64, sign: OscSign) -> LaurentPoly {
    let spec = OscillationSpec { i, sign };
    let mut acc = LaurentPoly::zero();
    for l in 0..=(a.max(0) * b.max(0)) {
        enumerate_partitions(l, a.max(0), b.max(0), &mut |parts| {
            let p = Partition::new(parts.to_vec());
            if oscillation(&p, spec) >= j {
                acc.add_term(l, &BigInt::from(1));
            }
        });
    }
    acc
}

/// The four-case generating function identity: with
/// `abar = floor((n-i+2)/2)` and `bbar = floor((n+i-3)/2)`,
/// `q^{j(5j-2i+5)/2} [n-1, floor((n+i-5j-3)/2)]` equals the box generating
/// function of `p_i` (j <= 0 even, j >= 0 odd) or `m_i` (the other two
/// cases) at oscillation bound `|j|`. The boxes are finite, so this is an
/// exact polynomial identity.
pub fn check_gf_pm_instance(i: i64, n: i64, j: i64, corrupt: bool) -> VerificationReport {
    assert!(i == 1 || i == 2);
    let abar = (n - i + 2).div_euclid(2);
    let bbar = (n + i - 3).div_euclid(2);
    let prod = j * (5 * j - 2 * i + 5);
    debug_assert!(prod % 2 == 0);
    let lhs = crate::poch::q_binomial(n - 1, (n + i - 5 * j - 3).div_euclid(2)).shifted(prod / 2);

    let sign = match (j <= 0, j.rem_euclid(2) == 0) {
        (true, true) => OscSign::Positive,
        (true, false) => OscSign::Negative,
        (false, false) => OscSign::Positive,
        (false, true) => OscSign::Negative,
    };
    // j = 0 sits in both cases; either way the count is the whole box
    let rhs = pm_generating(i, abar, bbar, j.abs(), sign);

    compare_polys("gf-pm", params(&[("i", i), ("n", n), ("j", j)]), &lhs, &rhs, corrupt)
}

/// Inclusion-exclusion over oscillations:
/// `Q_i(l,n) = sum_{j>=0} (-1)^j p_i(abar,bbar;j,l)
///            + sum_{j>=1} (-1)^j m_i(abar,bbar;j,l)`.
pub fn check_inclusion_exclusion(i: i64, l: i64, n: i64, corrupt: bool) -> VerificationReport {
    let abar = (n - i + 2).div_euclid(2);
    let bbar = (n + i - 3).div_euclid(2);
    let mut total: i64 = 0;
    let mut j = 0;
    loop {
        let p = count_pm(i, abar, bbar, j, l, OscSign::Positive) as i64;
        let m = count_pm(i, abar, bbar, j, l, OscSign::Negative) as i64;
        if p == 0 && m == 0 && j > 0 {
            break;
        }
        let s = if j % 2 == 0 { 1 } else { -1 };
        total += s * p;
        if j >= 1 {
            total += s * m;
        }
        j += 1;
    }
    let lhs = LaurentPoly::monomial(0, total);
    let rhs = LaurentPoly::monomial(0, count_q(i, l, n) as i64);
    compare_polys(
        "gf-pm",
        params(&[("i", i), ("l", l), ("n", n), ("ie", 1)]),
        &lhs,
        &rhs,
        corrupt,
    )
}

/// Closed form of the minimal-weight partition with `(2,i)`-oscillation
/// exactly `j`. The even positive and odd negative cases are direct part
/// lists; the other two follow by conjugation with `i -> 5-i`.
pub fn minimal_partition(i: i64, j: i64, sign: OscSign) -> Partition {
    assert!((1..=4).contains(&i) && j >= 0);
    if j == 0 {
        return Partition::empty();
    }
    let p = match (sign, j % 2 == 0) {
        (OscSign::Positive, true) => plus_even(i, j),
        (OscSign::Negative, false) => minus_odd(i, j),
        (OscSign::Positive, false) => minus_odd(5 - i, j).conjugate(),
        (OscSign::Negative, true) => plus_even(5 - i, j).conjugate(),
    };
    debug_assert_eq!(p.weight(), minimal_weight(i, j, sign));
    p
}

/// `|lambda^+_{i,j}| = j(5j+2i-5)/2` for even j and `j(5j-2i+5)/2` for odd
/// j; the negative sign swaps the two cases.
pub fn minimal_weight(i: i64, j: i64, sign: OscSign) -> i64 {
    let w_plus_even = j * (5 * j + 2 * i - 5) / 2;
    let w_minus_even = j * (5 * j - 2 * i + 5) / 2;
    match (sign, j % 2 == 0) {
        (OscSign::Positive, true) => w_plus_even,
        (OscSign::Negative, true) => w_minus_even,
        (OscSign::Positive, false) => w_minus_even,
        (OscSign::Negative, false) => w_plus_even,
    }
}

/// `(5j/2, (5j/2-3)^2, ..., (j+3)^2, j^i, (j-2)^3, ..., 2^3)`, j even.
fn plus_even(i: i64, j: i64) -> Partition {
    debug_assert!(j >= 2 && j % 2 == 0);
    let mut parts = vec![5 * j / 2];
    for k in (1..=j / 2 - 1).rev() {
        parts.push(j + 3 * k);
        parts.push(j + 3 * k);
    }
    for _ in 0..i {
        parts.push(j);
    }
    for k in 1..=j / 2 - 1 {
        let p = j - 2 * k;
        parts.extend_from_slice(&[p, p, p]);
    }
    Partition::new(parts)
}

/// `((j+3K)^2, ..., (j+3)^2, j^i, (j-2)^3, ..., 3^3, 1^3)`, j odd,
/// `K = (j-1)/2`.
fn minus_odd(i: i64, j: i64) -> Partition {
    debug_assert!(j >= 1 && j % 2 == 1);
    let mut parts = Vec::new();
    for k in (1..=(j - 1) / 2).rev() {
        parts.push(j + 3 * k);
        parts.push(j + 3 * k);
    }
    for _ in 0..i {
        parts.push(j);
    }
    for k in 1..=(j - 1) / 2 {
        let p = j - 2 * k;
        parts.extend_from_slice(&[p, p, p]);
    }
    Partition::new(parts)
}

/// Minimality by exhaustive search: the closed form has oscillation
/// exactly `j`, no lighter partition reaches oscillation `j`, and it is
/// the unique one of its weight that does. The census is encoded as the
/// polynomial `sum_w #(partitions of w with osc >= j) q^w` over
/// `w <= weight`, which must equal `q^weight`.
pub fn check_minimal_instance(i: i64, j: i64, sign: OscSign, corrupt: bool) -> VerificationReport {
    let spec = OscillationSpec { i, sign };
    let lambda = minimal_partition(i, j, sign);
    let w = lambda.weight();
    let p = params(&[
        ("i", i),
        ("j", j),
        ("sign", if sign == OscSign::Positive { 0 } else { 1 }),
    ]);

    let exact = compare_polys(
        "minimal",
        p.clone(),
        &LaurentPoly::monomial(0, oscillation(&lambda, spec)),
        &LaurentPoly::monomial(0, j),
        corrupt,
    );

    let mut census = LaurentPoly::zero();
    for weight in 0..=w {
        enumerate_partitions(weight, weight.max(1), weight.max(1), &mut |parts| {
            let q = Partition::new(parts.to_vec());
            if oscillation(&q, spec) >= j {
                census.add_term(weight, &BigInt::from(1));
            }
        });
    }
    let expected = if j == 0 { LaurentPoly::one() } else { LaurentPoly::q_pow(w) };
    let unique = compare_polys("minimal", p, &census, &expected, false);

    merge(vec![exact, unique])
}

/// The signed sum over minimal partitions matches the partial theta sum:
/// `sum_{j=-n-k}^{n} (-1)^j q^{j(5j-2i+5)/2} =
///  sum (-1)^{d(lambda)} q^{|lambda|}` over the members of `M_i` with
/// `lambda_1 <= floor((5n+2ki-2i+5)/2)` and
/// `lambda'_1 <= floor((5n+2ki)/2)`.
pub fn check_signed_sum_instance(i: i64, n: i64, k: i64, corrupt: bool) -> VerificationReport {
    assert!((i == 1 || i == 2) && n >= 0 && (k == 0 || k == 1));
    let lhs = partial_theta(n, k, 5 - 2 * i);

    let max_part = (5 * n + 2 * k * i - 2 * i + 5).div_euclid(2);
    let max_len = (5 * n + 2 * k * i).div_euclid(2);
    let mut rhs = LaurentPoly::zero();
    rhs.add_term(0, &BigInt::from(1)); // the empty partition
    let mut j = 1;
    loop {
        let mut any_fits = false;
        for sign in [OscSign::Positive, OscSign::Negative] {
            let lambda = minimal_partition(i, j, sign);
            if lambda.largest() <= max_part && lambda.len() <= max_len {
                any_fits = true;
                let d = lambda.durfee();
                let c = if d % 2 == 0 { 1 } else { -1 };
                rhs.add_term(lambda.weight(), &BigInt::from(c));
            }
        }
        // the first part grows linearly in j, so after both signs clear
        // the box nothing later can fit
        if !any_fits && 5 * j > 2 * max_part + 10 {
            break;
        }
        j += 1;
    }

    compare_polys("signed-sum", params(&[("i", i), ("n", n), ("k", k)]), &lhs, &rhs, corrupt)
}

/// `Q_i(l, n) = B_i(l, n)` by counting and by explicit bijection
/// roundtrip over the whole of `b_i(l, n)`.
pub fn check_bq_instance(i: i64, l: i64, n: i64, corrupt: bool) -> VerificationReport {
    let p = params(&[("i", i), ("l", l), ("n", n)]);
    let counts = compare_polys(
        "bq-bijection",
        p.clone(),
        &LaurentPoly::monomial(0, count_b(i, l, n) as i64),
        &LaurentPoly::monomial(0, count_q(i, l, n) as i64),
        corrupt,
    );

    // roundtrip failures counted at exponent 0; distinct images at 1
    let mut failures: i64 = 0;
    let mut images = Vec::new();
    enumerate_partitions(l, (n - 2).max(0), l.max(1), &mut |parts| {
        if is_b_member(parts, i, n) {
            let lambda =
                if parts.is_empty() { Partition::empty() } else { Partition::new(parts.to_vec()) };
            match bq_forward(i, &lambda, n) {
                Ok(mu) => {
                    if mu.weight() != l
                        || !is_q_member(&mu, i, n)
                        || bq_backward(i, &mu, n).as_ref() != Ok(&lambda)
                    {
                        failures += 1;
                    }
                    images.push(mu);
                }
                Err(_) => failures += 1,
            }
        }
    });
    images.sort_by(|a, b| a.parts().cmp(b.parts()));
    images.dedup();
    let injective = images.len() as i64;
    let expected = count_b(i, l, n) as i64;
    let roundtrip = compare_polys(
        "bq-bijection",
        p,
        &LaurentPoly::from_terms([(0, BigInt::from(failures)), (1, BigInt::from(injective))]),
        &LaurentPoly::from_terms([(0, BigInt::from(0)), (1, BigInt::from(expected))]),
        false,
    );

    merge(vec![counts, roundtrip])
}

/// Ties the recurrence polynomials to the brute-force counts: the
/// coefficients of `e_n` are `|b_2(l,n)|` and those of `d_n` are
/// `|b_1(l,n)|`.
pub fn check_schur_count_instance(
    flavor: SchurFlavor,
    n: i64,
    corrupt: bool,
) -> VerificationReport {
    let i = match flavor {
        SchurFlavor::E => 2,
        SchurFlavor::D => 1,
    };
    let poly = SchurFamily::new(flavor).get(n);
    let max_l = poly.max_exp().unwrap_or(0).max((n - 2).max(0));
    let mut counted = LaurentPoly::zero();
    for l in 0..=max_l {
        let c = count_b(i, l, n);
        counted.add_term(l, &BigInt::from(c));
    }
    compare_polys(
        "schur-counts",
        params(&[("flavor", flavor.tag()), ("n", n)]),
        &poly,
        &counted,
        corrupt,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn stats_of_the_worked_example() {
        let p = part(&[7, 7, 5, 3, 3, 1, 1, 1]);
        assert_eq!(p.weight(), 28);
        assert_eq!(p.conjugate(), part(&[8, 5, 5, 3, 3, 2, 2]));
        assert_eq!(p.durfee(), 3);
        assert_eq!(p.frobenius(), (vec![6, 5, 2], vec![7, 3, 2]));
        assert_eq!(p.ranks(), vec![-1, 2, 0]);
        // conjugation swaps the two rows of the symbol
        assert_eq!(p.conjugate().frobenius(), (vec![7, 3, 2], vec![6, 5, 2]));
    }

    #[test]
    fn empty_partition_conventions() {
        let e = Partition::empty();
        assert_eq!(e.weight(), 0);
        assert_eq!(e.durfee(), 0);
        assert_eq!(e.ranks(), Vec::<i64>::new());
        assert_eq!(oscillation(&e, OscillationSpec { i: 1, sign: OscSign::Positive }), 0);
    }

    #[test]
    fn ranks_of_five_two() {
        // (5,2): t = (4, 0), b = (1, 0)
        assert_eq!(part(&[5, 2]).ranks(), vec![3, 0]);
    }

    #[test]
    fn oscillation_examples() {
        // (5,2), i=1, positive: ranks (3, 0) with 3 >= 3 and 0 <= 0
        let p = part(&[5, 2]);
        assert_eq!(oscillation(&p, OscillationSpec { i: 1, sign: OscSign::Positive }), 2);
        // worked example, i=2, negative: ranks (-1, 2, 0) select (-1, 2)
        let p = part(&[7, 7, 5, 3, 3, 1, 1, 1]);
        assert_eq!(oscillation(&p, OscillationSpec { i: 2, sign: OscSign::Negative }), 2);
    }

    #[test]
    fn scan_matches_brute_force() {
        for l in 0..=18 {
            enumerate_partitions(l, l.max(1), l.max(1), &mut |parts| {
                let p = if parts.is_empty() {
                    Partition::empty()
                } else {
                    Partition::new(parts.to_vec())
                };
                for i in [1, 2] {
                    for sign in [OscSign::Positive, OscSign::Negative] {
                        let spec = OscillationSpec { i, sign };
                        assert_eq!(
                            oscillation(&p, spec),
                            oscillation_brute(&p, spec),
                            "{} i={} {:?}",
                            p,
                            i,
                            sign
                        );
                    }
                }
            });
        }
    }

    #[test]
    fn b_set_counts_match_worked_values() {
        let e6: Vec<u64> = (0..=6).map(|l| count_b(2, l, 6)).collect();
        assert_eq!(e6, vec![1, 1, 1, 1, 2, 1, 1]);
        let d6: Vec<u64> = (0..=6).map(|l| count_b(1, l, 6)).collect();
        assert_eq!(d6, vec![1, 0, 1, 1, 1, 0, 1]);
        assert_eq!(count_b(2, 0, 9), 1);
    }

    #[test]
    fn q_sets_for_n_six() {
        let mut q2: Vec<Vec<i64>> = q_set(2, 6).into_iter().map(|p| p.parts().to_vec()).collect();
        q2.sort();
        let mut expect =
            vec![vec![], vec![1], vec![2], vec![2, 1], vec![3, 1], vec![2, 2], vec![3, 2], vec![
                3, 3,
            ]];
        expect.sort();
        assert_eq!(q2, expect);
        let mut q1: Vec<Vec<i64>> = q_set(1, 6).into_iter().map(|p| p.parts().to_vec()).collect();
        q1.sort();
        let mut expect = vec![vec![], vec![2], vec![3], vec![3, 1], vec![3, 3]];
        expect.sort();
        assert_eq!(q1, expect);
        assert_eq!(count_q(2, 0, 10), 1);
    }

    #[test]
    fn bijection_example_and_roundtrip() {
        // (4,2) in b_2(6,6) maps to (3,3)
        let mu = bq_forward(2, &part(&[4, 2]), 6).unwrap();
        assert_eq!(mu, part(&[3, 3]));
        assert_eq!(bq_forward(2, &Partition::empty(), 6).unwrap(), Partition::empty());
        // membership violations are errors
        assert!(bq_forward(2, &part(&[9]), 6).is_err());
        assert!(bq_forward(1, &part(&[3, 1]), 8).is_err());
        // exhaustive roundtrip over b_2(l, 8), l <= 20
        for l in 0..=20 {
            let rep = check_bq_instance(2, l, 8, false);
            assert!(rep.is_pass(), "{:?}", rep);
        }
    }

    #[test]
    fn minimal_partition_values() {
        assert_eq!(minimal_partition(1, 2, OscSign::Positive), part(&[5, 2]));
        assert_eq!(minimal_partition(1, 2, OscSign::Positive).weight(), 7);
        assert_eq!(minimal_partition(1, 0, OscSign::Negative), Partition::empty());
        // |lambda^-| = j(5j-2i+5)/2 for even j
        for i in [1, 2] {
            for j in [2, 4, 6] {
                assert_eq!(
                    minimal_partition(i, j, OscSign::Negative).weight(),
                    j * (5 * j - 2 * i + 5) / 2
                );
            }
        }
        // the Durfee size equals the oscillation index
        for i in [1, 2] {
            for j in 1..=6 {
                for sign in [OscSign::Positive, OscSign::Negative] {
                    assert_eq!(minimal_partition(i, j, sign).durfee(), j);
                }
            }
        }
    }

    #[test]
    fn even_plus_frobenius_boundary_entries() {
        // top row (5j/2-1, ..., 4, 0), bottom row (5j/2+i-5, ..., i, i-1)
        for i in [1, 2] {
            for j in [2, 4, 6] {
                let lambda = minimal_partition(i, j, OscSign::Positive);
                let (top, bottom) = lambda.frobenius();
                assert_eq!(top[0], 5 * j / 2 - 1, "i={} j={}", i, j);
                assert_eq!(*top.last().unwrap(), 0, "i={} j={}", i, j);
                assert_eq!(bottom[0], 5 * j / 2 + i - 5, "i={} j={}", i, j);
                assert_eq!(*bottom.last().unwrap(), i - 1, "i={} j={}", i, j);
                if j >= 4 {
                    assert_eq!(top[1], 5 * j / 2 - 5);
                    assert_eq!(top[top.len() - 2], 4);
                    assert_eq!(bottom[bottom.len() - 2], i);
                }
            }
        }
    }

    #[test]
    fn conjugation_rules() {
        // (lambda^+_{i,j})' = lambda^-_{5-i,j} for odd j,
        // (lambda^-_{i,j})' = lambda^+_{5-i,j} for even j
        for i in [1, 2] {
            for j in [1, 3, 5] {
                assert_eq!(
                    minimal_partition(i, j, OscSign::Positive).conjugate(),
                    minimal_partition(5 - i, j, OscSign::Negative)
                );
            }
            for j in [2, 4, 6] {
                assert_eq!(
                    minimal_partition(i, j, OscSign::Negative).conjugate(),
                    minimal_partition(5 - i, j, OscSign::Positive)
                );
            }
        }
    }

    #[test]
    fn minimality_small() {
        for i in [1, 2] {
            for j in 0..=2 {
                for sign in [OscSign::Positive, OscSign::Negative] {
                    let rep = check_minimal_instance(i, j, sign, false);
                    assert!(rep.is_pass(), "i={} j={} {:?}: {:?}", i, j, sign, rep);
                }
            }
        }
    }

    #[test]
    fn signed_sum_small() {
        assert!(check_signed_sum_instance(2, 0, 0, false).is_pass());
        assert!(check_signed_sum_instance(1, 0, 1, false).is_pass());
        for i in [1, 2] {
            for n in 0..=3 {
                for k in 0..=1 {
                    let rep = check_signed_sum_instance(i, n, k, false);
                    assert!(rep.is_pass(), "i={} n={} k={}: {:?}", i, n, k, rep);
                }
            }
        }
    }

    #[test]
    fn gf_pm_small() {
        for i in [1, 2] {
            for n in 4..=7 {
                for j in -2..=2 {
                    let rep = check_gf_pm_instance(i, n, j, false);
                    assert!(rep.is_pass(), "i={} n={} j={}: {:?}", i, n, j, rep);
                }
            }
        }
    }

    #[test]
    fn inclusion_exclusion_small() {
        for i in [1, 2] {
            for n in 4..=8 {
                for l in 0..=12 {
                    let rep = check_inclusion_exclusion(i, l, n, false);
                    assert!(rep.is_pass(), "i={} l={} n={}: {:?}", i, l, n, rep);
                }
            }
        }
    }

    #[test]
    fn schur_counts_small() {
        for flavor in [SchurFlavor::E, SchurFlavor::D] {
            for n in 2..=10 {
                let rep = check_schur_count_instance(flavor, n, false);
                assert!(rep.is_pass(), "{:?} n={}: {:?}", flavor, n, rep);
            }
        }
    }
}
