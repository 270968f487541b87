//! Verification outcome records.
//!
//! Every identity instance produces one [`VerificationReport`]. A failing
//! comparison records the first mismatching exponent together with both
//! coefficients, which in practice pinpoints the wrong term of a long
//! exponent formula immediately.

use crate::poly::LaurentPoly;
use crate::rational::RationalFunction;
use crate::series::TruncatedSeries;
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Parameters outside the family domain (for example a vanishing
    /// denominator in a Watson-Sears tuple). Not a mismatch.
    Invalid,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Invalid => write!(f, "invalid"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub family: String,
    /// Parameter list in the family's canonical order.
    pub params: Vec<(String, i64)>,
    /// Truncation order for series checks; `None` for exact checks.
    pub order: Option<i64>,
    pub status: Status,
    /// Present exactly when `status == Fail`.
    pub mismatch: Option<Mismatch>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn invalid(family: &str, params: Vec<(String, i64)>, order: Option<i64>) -> Self {
        Self {
            family: family.to_string(),
            params,
            order,
            status: Status::Invalid,
            mismatch: None,
            elapsed_ms: 0,
        }
    }

    fn from_mismatch(
        family: &str,
        params: Vec<(String, i64)>,
        order: Option<i64>,
        mismatch: Option<(i64, BigInt, BigInt)>,
    ) -> Self {
        let (status, mismatch) = match mismatch {
            None => (Status::Pass, None),
            Some((exponent, lhs, rhs)) => {
                (Status::Fail, Some(Mismatch { exponent, lhs, rhs }))
            }
        };
        Self {
            family: family.to_string(),
            params,
            order,
            status,
            mismatch,
            elapsed_ms: 0,
        }
    }
}

/// Converts `(name, value)` pairs into the owned parameter list.
pub fn params(pairs: &[(&str, i64)]) -> Vec<(String, i64)> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Exact polynomial comparison. With `corrupt` set, one exponent of the
/// left side is shifted first (self-test mode).
pub fn compare_polys(
    family: &str,
    params: Vec<(String, i64)>,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
    corrupt: bool,
) -> VerificationReport {
    let corrupted;
    let lhs = if corrupt {
        corrupted = lhs.with_one_exponent_corrupted();
        &corrupted
    } else {
        lhs
    };
    VerificationReport::from_mismatch(family, params, None, LaurentPoly::first_mismatch(lhs, rhs))
}

/// Coefficient comparison of two series through `order`.
pub fn compare_series(
    family: &str,
    params: Vec<(String, i64)>,
    order: i64,
    lhs: &TruncatedSeries,
    rhs: &TruncatedSeries,
    corrupt: bool,
) -> VerificationReport {
    let corrupted;
    let lhs = if corrupt {
        corrupted = lhs.with_one_exponent_corrupted();
        &corrupted
    } else {
        lhs
    };
    VerificationReport::from_mismatch(
        family,
        params,
        Some(order),
        TruncatedSeries::first_mismatch_to(lhs, rhs, order),
    )
}

/// Cross-multiplied comparison of two rational functions.
pub fn compare_rationals(
    family: &str,
    params: Vec<(String, i64)>,
    lhs: &RationalFunction,
    rhs: &RationalFunction,
    corrupt: bool,
) -> VerificationReport {
    let corrupted;
    let lhs = if corrupt {
        corrupted =
            RationalFunction::new(lhs.num().with_one_exponent_corrupted(), lhs.den().clone());
        &corrupted
    } else {
        lhs
    };
    VerificationReport::from_mismatch(
        family,
        params,
        None,
        RationalFunction::cross_mismatch(lhs, rhs),
    )
}

/// Merges sub-comparisons of one instance: first failure wins, any invalid
/// marks the instance invalid.
pub fn merge(reports: Vec<VerificationReport>) -> VerificationReport {
    debug_assert!(!reports.is_empty());
    let mut out = reports[0].clone();
    for r in reports {
        match r.status {
            Status::Fail => return r,
            Status::Invalid => out = r.clone(),
            Status::Pass => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_compare_fails_with_populated_mismatch() {
        let p = LaurentPoly::from_terms([(0i64, BigInt::from(1)), (3, BigInt::from(-2))]);
        let ok = compare_polys("t", params(&[("n", 1)]), &p, &p, false);
        assert!(ok.is_pass());
        assert!(ok.mismatch.is_none());
        let bad = compare_polys("t", params(&[("n", 1)]), &p, &p, true);
        assert_eq!(bad.status, Status::Fail);
        let m = bad.mismatch.expect("mismatch populated");
        assert_eq!(m.exponent, 3);
    }
}
