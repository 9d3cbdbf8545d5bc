//! Deterministic identity suites: fixed sample sets for the transformation,
//! quasimodular, modular-relation, period, precursor, and telescoping checks,
//! packaged as verification reports so the command line and the test harness
//! share one implementation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebraic::{rat, QuadraticIrrational, Rat};
use crate::approx::AC;
use crate::dyadic::Mag;
use crate::hypergeom::{check_transformation, HGParams, Transformation};
use crate::modular::{self, CaseTag};
use crate::series::{
    check_wz_lemma, special_rows, verify_precursor, PeriodFamily, Verdict, VerificationReport,
};
use crate::{Error, Result};

pub const SUITES: [&str; 7] =
    ["clausen", "euler", "e2", "modular-relations", "periods", "precursors", "wz"];

fn tol_mag(tol_digits: u32) -> Mag {
    Mag::from_rational(&Rat::new(BigInt::one(), BigInt::from(10).pow(tol_digits)))
}

/// Residual-style verdict: pass when the enclosure of (lhs - rhs) contains
/// zero within tolerance, fail when it provably exceeds tolerance.
fn classify_residual(res: &AC, tol: &Mag) -> Verdict {
    if res.contains_zero() && tol.cmp_value(&res.mag_upper()) != std::cmp::Ordering::Less {
        Verdict::Pass
    } else if !res.contains_zero() {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}

fn residual_report(id: String, res: &AC, tol_digits: u32) -> VerificationReport {
    let tol = tol_mag(tol_digits);
    VerificationReport {
        id,
        verdict: classify_residual(res, &tol),
        lhs: res.to_string_decimal(tol_digits as usize / 2),
        rhs: "0".into(),
        truncation_index: 0,
        digits_per_term: None,
        note: None,
        wall_ms: 0,
    }
}

/// Clausen's squaring identity at fixed parameter/argument samples.
pub fn suite_clausen(prec: u32) -> Result<Vec<VerificationReport>> {
    let prec = prec.max(256);
    let tol = 60;
    let params = [(1, 4, 1, 4), (1, 6, 1, 3), (1, 8, 3, 8), (1, 3, 1, 3)];
    let zs = [(1, 2), (-1, 2), (1, 3), (-2, 3), (1, 7), (5, 8)];
    let mut out = Vec::new();
    for (an, ad, bn, bd) in params {
        for (zn, zd) in zs {
            let t = Transformation::Clausen { a: rat(an, ad), b: rat(bn, bd), z: rat(zn, zd) };
            let res = check_transformation(&t, prec)?;
            out.push(residual_report(
                format!("clausen-{an}/{ad}-{bn}/{bd}-at-{zn}/{zd}"),
                &res,
                tol,
            ));
        }
    }
    Ok(out)
}

/// Euler and Pfaff transformations at fixed samples.
pub fn suite_euler(prec: u32) -> Result<Vec<VerificationReport>> {
    let prec = prec.max(256);
    let tol = 60;
    let params = [(1, 4, 1, 4), (1, 6, 5, 6), (1, 3, 2, 3), (1, 2, 1, 2)];
    let zs = [(1, 2), (-1, 2), (1, 3), (-2, 3), (3, 5)];
    let mut out = Vec::new();
    for (an, ad, bn, bd) in params {
        for (zn, zd) in zs {
            let hp = HGParams::new(rat(an, ad), rat(bn, bd), Rat::one());
            let res =
                check_transformation(&Transformation::Euler { params: hp.clone(), z: rat(zn, zd) }, prec)?;
            out.push(residual_report(
                format!("euler-{an}/{ad}-{bn}/{bd}-at-{zn}/{zd}"),
                &res,
                tol,
            ));
            let res =
                check_transformation(&Transformation::Pfaff { params: hp, z: rat(zn, zd) }, prec)?;
            out.push(residual_report(
                format!("pfaff-{an}/{ad}-{bn}/{bd}-at-{zn}/{zd}"),
                &res,
                tol,
            ));
        }
    }
    Ok(out)
}

fn tau_sample(re: (i64, i64), im: (i64, i64), prec: u32) -> AC {
    AC::from_parts(&rat(re.0, re.1), &rat(im.0, im.1), prec)
}

/// Quasimodular transformation law of the weight-two series under fixed
/// unimodular matrices.
pub fn suite_e2(prec: u32) -> Result<Vec<VerificationReport>> {
    let prec = prec.max(192);
    let tol = 30;
    let taus = [
        ((1, 5), (7, 5)),
        ((-1, 3), (6, 5)),
        ((2, 7), (13, 10)),
        ((0, 1), (3, 2)),
        ((-2, 5), (11, 8)),
    ];
    let gammas: [[i64; 4]; 2] = [[0, -1, 1, 0], [2, 1, 1, 1]];
    let mut out = Vec::new();
    for (i, (re, im)) in taus.into_iter().enumerate() {
        for g in gammas {
            let tau = tau_sample(re, im, prec);
            let res = modular::e2_transformation_residual(&tau, g, prec)?;
            out.push(residual_report(
                format!("e2-law-sample{}-[{},{},{},{}]", i, g[0], g[1], g[2], g[3]),
                &res,
                tol,
            ));
        }
    }
    Ok(out)
}

/// Cleared-denominator modular relations between each uniformizer and its
/// companion, plus the Fricke involution residuals, at fixed points.
pub fn suite_modular_relations(prec: u32) -> Result<Vec<VerificationReport>> {
    let prec = prec.max(192);
    let tol = 30;
    let taus = [
        ((0, 1), (5, 4)),
        ((1, 4), (4, 3)),
        ((-1, 3), (3, 2)),
        ((1, 5), (7, 5)),
        ((-2, 7), (6, 5)),
    ];
    let mut out = Vec::new();
    for case in CaseTag::all() {
        for (i, (re, im)) in taus.into_iter().enumerate() {
            let tau = tau_sample(re, im, prec);
            let res = modular::modular_relation_residual(case, &tau, prec)?;
            out.push(residual_report(format!("relation-{}-sample{}", case.name(), i), &res, tol));
        }
        if matches!(case, CaseTag::C2B | CaseTag::C3B) {
            let tau = tau_sample((0, 1), (5, 4), prec);
            let res = modular::fricke_residual(case, &tau, prec)?;
            out.push(residual_report(format!("fricke-{}", case.name()), &res, tol));
        }
    }
    Ok(out)
}

/// Twelfth-power period normalizations for every hypergeometric family at a
/// fixed interior point.
pub fn suite_periods(prec: u32) -> Result<Vec<VerificationReport>> {
    let prec = prec.max(192);
    let tol = 40;
    let tau = AC::from_parts(&Rat::zero(), &rat(2, 1), prec);
    let mut out = Vec::new();
    for family in PeriodFamily::all() {
        let res = crate::series::period_residual(family, &tau, prec)?;
        out.push(residual_report(format!("period-{family:?}"), &res, tol));
    }
    Ok(out)
}

/// The two-term contiguous evaluations at every tabulated singular value
/// whose point lies in a convergent chart.
pub fn suite_precursors(prec: u32) -> Result<Vec<VerificationReport>> {
    let prec = prec.max(256);
    let tol = 40;
    let mut out = Vec::new();
    for row in special_rows() {
        let tau = QuadraticIrrational::new(row.tau.a, row.tau.b, row.tau.c)?;
        let case = CaseTag::parse(&row.case)
            .ok_or_else(|| Error::InvalidInput(format!("unknown case tag '{}'", row.case)))?;
        let report = verify_precursor(case, &tau, prec, tol)?;
        let skipped = report
            .note
            .as_deref()
            .is_some_and(|n| n.contains("no chart contains this point"));
        if !skipped {
            out.push(report);
        }
    }
    Ok(out)
}

/// Telescoping-certificate verification of the three symmetric-sum lemmas.
pub fn suite_wz() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for id in ["1B", "2B", "3B"] {
        let r = check_wz_lemma(id, 60, 24)?;
        out.push(VerificationReport {
            id: format!("wz-{id}"),
            verdict: r.verdict,
            lhs: format!(
                "equality={} recurrence={} certificate={}",
                r.equality_ok, r.recurrence_ok, r.certificate_ok
            ),
            rhs: "all true".into(),
            truncation_index: r.terms_checked,
            digits_per_term: None,
            note: Some(format!("certificate grid 0 <= k <= n <= {}", r.grid)),
            wall_ms: 0,
        });
    }
    Ok(out)
}

pub fn run_suite(name: &str, prec: u32) -> Result<Vec<VerificationReport>> {
    match name {
        "clausen" => suite_clausen(prec),
        "euler" => suite_euler(prec),
        "e2" => suite_e2(prec),
        "modular-relations" => suite_modular_relations(prec),
        "periods" => suite_periods(prec),
        "precursors" => suite_precursors(prec),
        "wz" => suite_wz(),
        other => Err(Error::InvalidInput(format!(
            "unknown suite '{other}'; available: {}",
            SUITES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(reports: &[VerificationReport]) {
        for r in reports {
            assert_eq!(r.verdict, Verdict::Pass, "{}: {:?} ({:?})", r.id, r.verdict, r.note);
        }
    }

    #[test]
    fn clausen_suite_passes() {
        all_pass(&suite_clausen(256).unwrap());
    }

    #[test]
    fn euler_suite_passes() {
        all_pass(&suite_euler(256).unwrap());
    }

    #[test]
    fn e2_suite_passes() {
        all_pass(&suite_e2(192).unwrap());
    }

    #[test]
    fn modular_relations_suite_passes() {
        all_pass(&suite_modular_relations(192).unwrap());
    }

    #[test]
    fn periods_suite_passes() {
        all_pass(&suite_periods(192).unwrap());
    }

    #[test]
    fn precursors_suite_passes() {
        let reports = suite_precursors(256).unwrap();
        assert!(reports.len() >= 29, "scored {} rows", reports.len());
        all_pass(&reports);
    }

    #[test]
    fn wz_suite_passes() {
        all_pass(&suite_wz().unwrap());
    }
}
