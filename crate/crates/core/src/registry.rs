//! The named family catalogue behind `verify` and `list`: builds instance
//! grids from command-line style parameters and dispatches each instance
//! to its checker, with an optional single-instance corruption hook for
//! the self-test mode.

use crate::bailey::{
    check_rogers_instance, check_roundtrip_instance, qcv_check, ws_check,
};
use crate::chain::{verify_family_opts, FamilyInstance};
use crate::partitions::{
    check_bq_instance, check_gf_pm_instance, check_inclusion_exclusion,
    check_minimal_instance, check_signed_sum_instance, OscSign,
};
use crate::report::VerificationReport;
use crate::schur::{
    check_aj_instance, check_coeff_instance, check_eulerpol_instance, check_frec_instance,
    check_frec_telescoped, check_rrpoly_instance, check_theorem_instance,
    check_three_way_instance, SchurFamily, SchurFlavor,
};
use crate::Error;

#[derive(Debug, Clone, Copy)]
pub struct FamilyMeta {
    pub name: &'static str,
    pub param_names: &'static [&'static str],
    /// Whether instances carry a truncation order.
    pub has_order: bool,
    pub describe: &'static str,
}

/// The registered families, in catalogue order.
pub const CATALOGUE: &[FamilyMeta] = &[
    FamilyMeta { name: "thm", param_names: &["n", "k", "flavor"], has_order: false, describe: "partial theta sum equals the weighted Schur-polynomial sum (both flavors)" },
    FamilyMeta { name: "rrpoly", param_names: &["n", "a"], has_order: false, describe: "two-route polynomial analogue: positive q-binomial sum equals alternating theta-weighted binomial sum" },
    FamilyMeta { name: "aj", param_names: &["n", "k"], has_order: false, describe: "partial theta sum equals the Szego-polynomial weighted sum" },
    FamilyMeta { name: "eulerpol", param_names: &["n", "k"], has_order: false, describe: "polynomial analogue of the pentagonal-number identity, plus its rational transform origin" },
    FamilyMeta { name: "frec", param_names: &["n", "m", "k"], has_order: false, describe: "tail recurrence of the Szego-weighted sum and its telescoped two-term consequence" },
    FamilyMeta { name: "coeff", param_names: &["n", "m"], has_order: false, describe: "coefficient identity in m, n from the two-variable form of the main identity" },
    FamilyMeta { name: "gis", param_names: &["m"], has_order: true, describe: "shifted Rogers-Ramanujan sum as a two-product Schur combination" },
    FamilyMeta { name: "am", param_names: &["m", "k"], has_order: true, describe: "q-power specialisation of the key double-sum proposition" },
    FamilyMeta { name: "inffin", param_names: &["r", "k"], has_order: true, describe: "theta-product sum rearranged into two partial theta sums" },
    FamilyMeta { name: "lemma1", param_names: &["M", "n", "k"], has_order: true, describe: "triple-sum lemma with parity-split closed form" },
    FamilyMeta { name: "lquad", param_names: &["m", "n", "i", "k"], has_order: true, describe: "quadratic-shift form of the triple-sum lemma" },
    FamilyMeta { name: "llin", param_names: &["m", "n", "i", "k"], has_order: true, describe: "linear-shift form summing to the quadratic one" },
    FamilyMeta { name: "inverted", param_names: &["m", "n", "i", "k"], has_order: true, describe: "Bailey-inverted double sum with terminating right side" },
    FamilyMeta { name: "del", param_names: &["m", "n", "i", "k"], has_order: true, describe: "four-delta double-sum identity (doubled exponent lattice)" },
    FamilyMeta { name: "symm", param_names: &["m", "n", "k"], has_order: true, describe: "symmetric two-delta identity (doubled exponent lattice)" },
    FamilyMeta { name: "symm2", param_names: &["m", "n"], has_order: true, describe: "single-delta identity combining into the symmetric one" },
    FamilyMeta { name: "fin", param_names: &["m"], has_order: true, describe: "bilateral alternating double sum collapsing to a delta times the cubed product" },
    FamilyMeta { name: "zero", param_names: &["eq", "a"], has_order: true, describe: "tail-shift and bilateral-vanishing identities for alternating quadratic sums" },
    FamilyMeta { name: "altsum", param_names: &["j"], has_order: false, describe: "finite alternating quadratic sum vanishes exactly" },
    FamilyMeta { name: "qcv", param_names: &["n", "a", "c"], has_order: false, describe: "terminating q-Chu-Vandermonde summation at q-power parameters" },
    FamilyMeta { name: "ws", param_names: &["n", "a", "b", "c", "d", "e"], has_order: false, describe: "very-well-poised transform against the balanced 4phi3 at q-power parameters" },
    FamilyMeta { name: "rogers", param_names: &["n"], has_order: false, describe: "the classical Bailey pair relative to q satisfies the defining relation" },
    FamilyMeta { name: "bailey-roundtrip", param_names: &["seq", "kappa", "dir"], has_order: false, describe: "Bailey transform and its inverse are mutually inverse on random rational sequences" },
    FamilyMeta { name: "bq-bijection", param_names: &["i", "l", "n"], has_order: false, describe: "gap-2 partitions against rank-restricted partitions: counts and explicit bijection" },
    FamilyMeta { name: "gf-pm", param_names: &["i", "n", "j"], has_order: false, describe: "box generating functions of oscillation-bounded partitions, four sign/parity cases" },
    FamilyMeta { name: "minimal", param_names: &["i", "j", "sign"], has_order: false, describe: "closed-form minimal oscillation partitions are minimal and unique, by exhaustive search" },
    FamilyMeta { name: "signed-sum", param_names: &["i", "n", "k"], has_order: false, describe: "signed sum over minimal partitions equals the partial theta sum" },
    FamilyMeta { name: "schur-three-way", param_names: &["n", "flavor"], has_order: false, describe: "recurrence, alternating and positive-term Schur forms agree" },
];

pub fn meta(name: &str) -> Option<&'static FamilyMeta> {
    CATALOGUE.iter().find(|m| m.name == name)
}

/// Grid selection coming from command-line flags. `ranges` overrides the
/// built-in parameter ranges by name.
#[derive(Debug, Clone, Default)]
pub struct Grid {
    pub n_max: Option<i64>,
    pub m_max: Option<i64>,
    pub k: Option<i64>,
    pub i: Option<i64>,
    pub order: Option<i64>,
    pub ranges: Vec<(String, i64, i64)>,
}

impl Grid {
    fn range_or(&self, name: &str, lo: i64, hi: i64) -> (i64, i64) {
        for (n, a, b) in &self.ranges {
            if n == name {
                return (*a, *b);
            }
        }
        (lo, hi)
    }

    fn k_values(&self) -> Vec<i64> {
        match self.k {
            Some(k) => vec![k],
            None => vec![0, 1],
        }
    }

    fn i_values(&self) -> Vec<i64> {
        match self.i {
            Some(i) => vec![i],
            None => vec![1, 2],
        }
    }

    fn i01_values(&self) -> Vec<i64> {
        match self.i {
            Some(i) => vec![i],
            None => vec![0, 1],
        }
    }
}

/// A runnable instance of one registered family.
#[derive(Debug, Clone)]
pub enum Instance {
    Thm { flavor: SchurFlavor, n: i64, k: i64 },
    Rrpoly { n: i64, a: i64 },
    Aj { n: i64, k: i64 },
    Eulerpol { n: i64, k: i64 },
    FrecRec { n: i64, m: i64, k: i64 },
    FrecTele { n: i64, k: i64 },
    Coeff { n: i64, m: i64 },
    Chain { inst: FamilyInstance, order: i64 },
    Qcv { n: i64, a: i64, c: Option<i64> },
    Ws { n: i64, a: i64, b: i64, c: i64, d: i64, e: i64 },
    Rogers { n: i64 },
    Roundtrip { seq: i64, kappa: i64, dir: i64 },
    Bq { i: i64, l: i64, n: i64 },
    GfPm { i: i64, n: i64, j: i64 },
    GfPmInclExcl { i: i64, l: i64, n: i64 },
    Minimal { i: i64, j: i64, sign: OscSign },
    SignedSum { i: i64, n: i64, k: i64 },
    ThreeWay { flavor: SchurFlavor, n: i64 },
}

impl Instance {
    pub fn run(&self, corrupt: bool) -> VerificationReport {
        match *self {
            Instance::Thm { flavor, n, k } => {
                check_theorem_instance(&SchurFamily::new(flavor), n, k, corrupt)
            }
            Instance::Rrpoly { n, a } => check_rrpoly_instance(n, a, corrupt),
            Instance::Aj { n, k } => check_aj_instance(n, k, corrupt),
            Instance::Eulerpol { n, k } => check_eulerpol_instance(n, k, corrupt),
            Instance::FrecRec { n, m, k } => check_frec_instance(n, m, k, corrupt),
            Instance::FrecTele { n, k } => check_frec_telescoped(n, k, corrupt),
            Instance::Coeff { n, m } => check_coeff_instance(n, m, corrupt),
            Instance::Chain { ref inst, order } => verify_family_opts(inst, order, corrupt),
            Instance::Qcv { n, a, c } => qcv_check(n, a, c, corrupt),
            Instance::Ws { n, a, b, c, d, e } => ws_check(n, a, b, c, d, e, corrupt),
            Instance::Rogers { n } => check_rogers_instance(n, corrupt),
            Instance::Roundtrip { seq, kappa, dir } => {
                check_roundtrip_instance(seq, kappa, dir, corrupt)
            }
            Instance::Bq { i, l, n } => check_bq_instance(i, l, n, corrupt),
            Instance::GfPm { i, n, j } => check_gf_pm_instance(i, n, j, corrupt),
            Instance::GfPmInclExcl { i, l, n } => check_inclusion_exclusion(i, l, n, corrupt),
            Instance::Minimal { i, j, sign } => check_minimal_instance(i, j, sign, corrupt),
            Instance::SignedSum { i, n, k } => check_signed_sum_instance(i, n, k, corrupt),
            Instance::ThreeWay { flavor, n } => {
                check_three_way_instance(&SchurFamily::new(flavor), n, corrupt)
            }
        }
    }
}

const FLAVORS: [SchurFlavor; 2] = [SchurFlavor::E, SchurFlavor::D];

/// Builds the instance grid for a named family. Unknown names and out-of-
/// domain fixed parameters are errors (exit code 2 territory).
pub fn instances_for(family: &str, grid: &Grid) -> Result<Vec<Instance>, Error> {
    let mut out = Vec::new();
    match family {
        "thm" => {
            let n_max = grid.n_max.unwrap_or(25);
            require(n_max >= 0, "n-max must be nonnegative")?;
            for flavor in FLAVORS {
                for k in grid.k_values() {
                    for n in 0..=n_max {
                        out.push(Instance::Thm { flavor, n, k });
                    }
                }
            }
        }
        "rrpoly" => {
            let n_max = grid.n_max.unwrap_or(50);
            require(n_max >= 0, "n-max must be nonnegative")?;
            for a in 0..=1 {
                for n in 0..=n_max {
                    out.push(Instance::Rrpoly { n, a });
                }
            }
        }
        "aj" => {
            let n_max = grid.n_max.unwrap_or(25);
            require(n_max >= 0, "n-max must be nonnegative")?;
            for k in grid.k_values() {
                for n in 0..=n_max {
                    out.push(Instance::Aj { n, k });
                }
            }
        }
        "eulerpol" => {
            let n_max = grid.n_max.unwrap_or(40);
            require(n_max >= 0, "n-max must be nonnegative")?;
            for k in grid.k_values() {
                for n in 0..=n_max {
                    out.push(Instance::Eulerpol { n, k });
                }
            }
        }
        "frec" => {
            let n_max = grid.n_max.unwrap_or(10);
            require(n_max >= 1, "n-max must be at least 1")?;
            for k in grid.k_values() {
                for n in 1..=n_max {
                    for m in 0..n {
                        out.push(Instance::FrecRec { n, m, k });
                    }
                    out.push(Instance::FrecTele { n, k });
                }
            }
        }
        "coeff" => {
            let n_max = grid.n_max.unwrap_or(8);
            require(n_max >= 0, "n-max must be nonnegative")?;
            for n in 0..=n_max {
                for m in 0..=3 * n + 1 {
                    out.push(Instance::Coeff { n, m });
                }
            }
        }
        "gis" => {
            let order = grid.order.unwrap_or(50);
            let m_max = grid.m_max.unwrap_or(15);
            require(m_max >= 0, "m-max must be nonnegative")?;
            for m in 0..=m_max {
                out.push(Instance::Chain { inst: FamilyInstance::Gis { m }, order });
            }
        }
        "am" => {
            let order = grid.order.unwrap_or(50);
            let m_max = grid.m_max.unwrap_or(10);
            require(m_max >= 0, "m-max must be nonnegative")?;
            for k in grid.k_values() {
                for m in 0..=m_max {
                    out.push(Instance::Chain { inst: FamilyInstance::Am { m, k }, order });
                }
            }
        }
        "inffin" => {
            let order = grid.order.unwrap_or(50);
            let (rlo, rhi) = grid.range_or("r", 0, 6);
            for k in grid.k_values() {
                for r in rlo.max(0)..=rhi {
                    out.push(Instance::Chain { inst: FamilyInstance::Inffin { r, k }, order });
                }
            }
        }
        "lemma1" => {
            let order = grid.order.unwrap_or(25);
            let (mlo, mhi) = grid.range_or("M", 0, 7);
            let (nlo, nhi) = grid.range_or("n", -4, 4);
            for k in grid.k_values() {
                for cap_m in mlo.max(0)..=mhi {
                    for n in nlo..=nhi {
                        out.push(Instance::Chain {
                            inst: FamilyInstance::Lemma1 { cap_m, n, k },
                            order,
                        });
                    }
                }
            }
        }
        "lquad" | "llin" | "inverted" => {
            let order = grid.order.unwrap_or(25);
            let (mlo, mhi) = grid.range_or("m", 0, 4);
            let (nlo, nhi) = grid.range_or("n", -4, 4);
            for k in grid.k_values() {
                for i in grid.i01_values() {
                    for m in mlo.max(0)..=mhi {
                        for n in nlo..=nhi {
                            let inst = match family {
                                "lquad" => FamilyInstance::Lquad { m, n, i, k },
                                "llin" => FamilyInstance::Llin { m, n, i, k },
                                _ => FamilyInstance::Inverted { m, n, i, k },
                            };
                            out.push(Instance::Chain { inst, order });
                        }
                    }
                }
            }
        }
        "del" => {
            let order = grid.order.unwrap_or(25);
            let (mlo, mhi) = grid.range_or("m", -4, 4);
            let (nlo, nhi) = grid.range_or("n", -4, 4);
            for k in grid.k_values() {
                for i in grid.i01_values() {
                    for m in mlo..=mhi {
                        for n in nlo..=nhi {
                            out.push(Instance::Chain {
                                inst: FamilyInstance::Del { m, n, i, k },
                                order,
                            });
                        }
                    }
                }
            }
        }
        "symm" => {
            let order = grid.order.unwrap_or(25);
            let (mlo, mhi) = grid.range_or("m", -4, 4);
            let (nlo, nhi) = grid.range_or("n", -4, 4);
            for k in grid.k_values() {
                for m in mlo..=mhi {
                    for n in nlo..=nhi {
                        out.push(Instance::Chain {
                            inst: FamilyInstance::Symm { m, n, k },
                            order,
                        });
                    }
                }
            }
        }
        "symm2" => {
            let order = grid.order.unwrap_or(25);
            let (mlo, mhi) = grid.range_or("m", -4, 4);
            let (nlo, nhi) = grid.range_or("n", -4, 4);
            for m in mlo..=mhi {
                for n in nlo..=nhi {
                    out.push(Instance::Chain { inst: FamilyInstance::Symm2 { m, n }, order });
                }
            }
        }
        "fin" => {
            let order = grid.order.unwrap_or(25);
            let (mlo, mhi) = grid.range_or("m", -4, 4);
            for m in mlo..=mhi {
                out.push(Instance::Chain { inst: FamilyInstance::Fin { m }, order });
            }
        }
        "zero" => {
            let order = grid.order.unwrap_or(25);
            let (alo, ahi) = grid.range_or("a", -4, 4);
            for a in alo..=ahi {
                out.push(Instance::Chain { inst: FamilyInstance::Zero1 { a }, order });
                out.push(Instance::Chain { inst: FamilyInstance::Zero2 { a }, order });
            }
        }
        "altsum" => {
            let (jlo, jhi) = grid.range_or("j", 0, 7);
            for j in jlo.max(0)..=jhi {
                out.push(Instance::Chain {
                    inst: FamilyInstance::Altsum { j },
                    order: 0,
                });
            }
        }
        "qcv" => {
            let (nlo, nhi) = grid.range_or("n", 1, 5);
            let (alo, ahi) = grid.range_or("a", 1, 5);
            let (clo, chi) = grid.range_or("c", 1, 5);
            for n in nlo.max(0)..=nhi {
                for a in alo..=ahi {
                    for c in clo..=chi {
                        out.push(Instance::Qcv { n, a, c: Some(c) });
                    }
                    out.push(Instance::Qcv { n, a, c: None });
                }
            }
        }
        "ws" => {
            for &(n, a, b, c, d, e) in WS_DEFAULT_TUPLES {
                out.push(Instance::Ws { n, a, b, c, d, e });
            }
        }
        "rogers" => {
            let n_max = grid.n_max.unwrap_or(15);
            require(n_max >= 0, "n-max must be nonnegative")?;
            for n in 0..=n_max {
                out.push(Instance::Rogers { n });
            }
        }
        "bailey-roundtrip" => {
            let (slo, shi) = grid.range_or("seq", 0, 19);
            for kappa in 0..=1 {
                for seq in slo.max(0)..=shi {
                    out.push(Instance::Roundtrip { seq, kappa, dir: seq % 2 });
                }
            }
        }
        "bq-bijection" => {
            let (llo, lhi) = grid.range_or("l", 0, 30);
            let (nlo, nhi) = grid.range_or("n", 2, 12);
            for i in grid.i_values() {
                // the rank-restricted boxes need n >= 2
                for n in nlo.max(2)..=nhi {
                    for l in llo.max(0)..=lhi {
                        out.push(Instance::Bq { i, l, n });
                    }
                }
            }
        }
        "gf-pm" => {
            let n_max = grid.n_max.unwrap_or(8);
            let (jlo, jhi) = grid.range_or("j", -2, 2);
            for i in grid.i_values() {
                for n in 2..=n_max {
                    for j in jlo..=jhi {
                        out.push(Instance::GfPm { i, n, j });
                    }
                }
            }
        }
        "minimal" => {
            let (jlo, jhi) = grid.range_or("j", 0, 4);
            for i in grid.i_values() {
                for j in jlo.max(0)..=jhi {
                    for sign in [OscSign::Positive, OscSign::Negative] {
                        out.push(Instance::Minimal { i, j, sign });
                    }
                }
            }
        }
        "signed-sum" => {
            let n_max = grid.n_max.unwrap_or(5);
            require(n_max >= 0, "n-max must be nonnegative")?;
            for i in grid.i_values() {
                for k in grid.k_values() {
                    for n in 0..=n_max {
                        out.push(Instance::SignedSum { i, n, k });
                    }
                }
            }
        }
        "schur-three-way" => {
            let n_max = grid.n_max.unwrap_or(50);
            require(n_max >= 1, "n-max must be at least 1")?;
            for flavor in FLAVORS {
                for n in 1..=n_max {
                    out.push(Instance::ThreeWay { flavor, n });
                }
            }
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    }
    Ok(out)
}

/// Ten admissible q-power parameter tuples `(n, a, b, c, d, e)` for the
/// very-well-poised transform check.
pub const WS_DEFAULT_TUPLES: &[(i64, i64, i64, i64, i64, i64)] = &[
    (0, 2, 1, 1, 1, 1),
    (1, 2, 1, 1, 1, 1),
    (1, 3, 1, 2, 1, 1),
    (2, 2, 1, 1, 1, 1),
    (2, 3, 1, 1, 2, 1),
    (2, 4, 2, 1, 1, 1),
    (3, 3, 1, 2, 1, 1),
    (3, 2, 1, 1, 1, 1),
    (3, 4, 1, 2, 2, 1),
    (3, 5, 2, 2, 1, 1),
];

fn require(cond: bool, msg: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn catalogue_names_are_unique_and_known() {
        let mut names: Vec<&str> = CATALOGUE.iter().map(|m| m.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), CATALOGUE.len());
        assert!(meta("thm").is_some());
        assert!(meta("nope").is_none());
    }

    #[test]
    fn every_family_builds_and_a_small_instance_runs() {
        let grid = Grid {
            n_max: Some(2),
            m_max: Some(1),
            order: Some(10),
            ranges: vec![
                ("M".into(), 0, 1),
                ("n".into(), -1, 1),
                ("m".into(), 0, 1),
                ("a".into(), 1, 2),
                ("c".into(), 2, 3),
                ("l".into(), 0, 4),
                ("j".into(), 0, 1),
                ("r".into(), 0, 1),
                ("seq".into(), 0, 0),
            ],
            ..Default::default()
        };
        for m in CATALOGUE {
            let instances = instances_for(m.name, &grid).unwrap();
            assert!(!instances.is_empty(), "{} built no instances", m.name);
            let rep = instances[0].run(false);
            assert!(
                rep.status == Status::Pass || rep.status == Status::Invalid,
                "{}: {:?}",
                m.name,
                rep
            );
        }
    }

    #[test]
    fn unknown_family_is_an_error() {
        assert!(matches!(
            instances_for("bogus", &Grid::default()),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn ws_default_tuples_are_admissible_and_pass() {
        for &(n, a, b, c, d, e) in WS_DEFAULT_TUPLES {
            let rep = crate::bailey::ws_check(n, a, b, c, d, e, false);
            assert_eq!(rep.status, Status::Pass, "({},{},{},{},{},{}): {:?}", n, a, b, c, d, e, rep);
        }
    }

    #[test]
    fn corrupting_one_instance_fails_exactly_that_instance() {
        let grid = Grid { n_max: Some(3), ..Default::default() };
        let instances = instances_for("aj", &grid).unwrap();
        let target = 1usize;
        let reports: Vec<VerificationReport> = instances
            .iter()
            .enumerate()
            .map(|(idx, inst)| inst.run(idx == target))
            .collect();
        for (idx, rep) in reports.iter().enumerate() {
            if idx == target {
                assert_eq!(rep.status, Status::Fail);
                assert!(rep.mismatch.is_some());
            } else {
                assert_eq!(rep.status, Status::Pass, "{:?}", rep);
            }
        }
    }
}
