//! Modular and quasi-modular forms: Eisenstein series with certified tails,
//! eta/theta products, hauptmodul-style uniformizers and modular relations.
//!
//! All evaluations take an enclosure of a point `tau` in the upper half plane
//! and return enclosures. Truncation tails are added as rigorous error radii
//! using explicit bounds valid whenever `|q| <= 1/2` (`q = exp(2 pi i tau)`),
//! i.e. `Im(tau) >= log(2)/(2 pi)`.

use crate::approx::AC;
use crate::dyadic::Mag;
use crate::pi::pi_enclosure;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The six coverings handled by the laboratory.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CaseTag {
    C1B,
    C2A,
    C2B,
    C2C,
    C3A,
    C3B,
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::C1B => "1B",
            CaseTag::C2A => "2A",
            CaseTag::C2B => "2B",
            CaseTag::C2C => "2C",
            CaseTag::C3A => "3A",
            CaseTag::C3B => "3B",
        }
    }

    pub fn parse(s: &str) -> Option<CaseTag> {
        match s {
            "1B" => Some(CaseTag::C1B),
            "2A" => Some(CaseTag::C2A),
            "2B" => Some(CaseTag::C2B),
            "2C" => Some(CaseTag::C2C),
            "3A" => Some(CaseTag::C3A),
            "3B" => Some(CaseTag::C3B),
            _ => None,
        }
    }

    pub fn all() -> [CaseTag; 6] {
        [CaseTag::C1B, CaseTag::C2A, CaseTag::C2B, CaseTag::C2C, CaseTag::C3A, CaseTag::C3B]
    }
}

/// `q = exp(2 pi i tau)`.
pub fn nome(tau: &AC, prec: u32) -> AC {
    let work = prec + 32;
    let two_pi_i = pi_enclosure(work).mul_i64(2).mul_i();
    tau.with_prec(work).mul(&two_pi_i).exp().with_prec(prec)
}

/// `p = exp(pi i tau)` (the half nome used by the theta constants).
pub fn half_nome(tau: &AC, prec: u32) -> AC {
    let work = prec + 32;
    let pi_i = pi_enclosure(work).mul_i();
    tau.with_prec(work).mul(&pi_i).exp().with_prec(prec)
}

/// Weight-2/4/6 Eisenstein values at a common point, sharing one nome.
#[derive(Clone, Debug)]
pub struct EisensteinBundle {
    pub e2: AC,
    pub e4: AC,
    pub e6: AC,
    pub q: AC,
}

fn require_small_nome(q: &AC) -> Result<Mag> {
    let r = q.mag_upper();
    if !r.le_two_exp(-1) {
        return Err(Error::OutOfDomain(
            "nome exceeds 1/2; point is too low in the upper half plane for the \
             certified truncation bounds"
                .into(),
        ));
    }
    Ok(r)
}

/// Smallest k with `33675264 k^5 r^k <= 2^-(prec+5)`; this single cutoff also
/// dominates the weight-2 and weight-4 tails.
fn eisenstein_cutoff(r: &Mag, prec: u32) -> Result<u64> {
    let target = -(prec as i64) - 5;
    let mut rk = *r;
    for k in 1..200_000u64 {
        let lead = Mag::from_u64(33_675_264).mul(&Mag::from_u64(k).pow(5));
        if lead.mul(&rk).le_two_exp(target) {
            return Ok(k);
        }
        rk = rk.mul(r);
    }
    Err(Error::InsufficientPrecision("Eisenstein cutoff exceeds 200000 terms".into()))
}

/// Evaluate E2, E4, E6 at `tau` with certified truncation tails.
pub fn eisenstein(tau: &AC, prec: u32) -> Result<EisensteinBundle> {
    let work = prec + 32;
    let q = nome(tau, work);
    let r = require_small_nome(&q)?;
    let k = eisenstein_cutoff(&r, work)?;

    let one = AC::from_i64(1, work);
    let mut e2 = one.clone();
    let mut e4 = one.clone();
    let mut e6 = one.clone();
    let mut qn = one.clone();
    for n in 1..k {
        qn = qn.mul(&q);
        // n q^n / (1 - q^n)
        let t = qn.div(&one.sub(&qn))?;
        let ni = n as i64;
        e2 = e2.add(&t.mul_i64(-24 * ni));
        e4 = e4.add(&t.mul_i64(240 * ni * ni * ni));
        e6 = e6.add(&t.mul_i64(-504 * ni * ni * ni * ni * ni));
    }
    let rk = r.pow(k);
    let e2_tail = Mag::from_u64(576).mul_u64(k).mul(&rk);
    let e4_tail = Mag::from_u64(245_760).mul(&Mag::from_u64(k).pow(3)).mul(&rk);
    let e6_tail = Mag::from_u64(33_675_264).mul(&Mag::from_u64(k).pow(5)).mul(&rk);
    Ok(EisensteinBundle {
        e2: e2.add_err(&e2_tail).with_prec(prec),
        e4: e4.add_err(&e4_tail).with_prec(prec),
        e6: e6.add_err(&e6_tail).with_prec(prec),
        q: q.with_prec(prec),
    })
}

/// The non-holomorphic completion `E2*(tau) = E2(tau) - 3/(pi Im tau)`.
pub fn e2_star(tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 32;
    let b = eisenstein(tau, work)?;
    let y = tau.with_prec(work).imag_part();
    let corr = pi_enclosure(work).mul(&y).inv()?.mul_i64(3);
    Ok(b.e2.sub(&corr).with_prec(prec))
}

/// `s2(tau) = (E4/E6) E2*(tau)`.
pub fn s2(tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 32;
    let b = eisenstein(tau, work)?;
    if b.e6.contains_zero() {
        return Err(Error::Undefined(
            "E6 enclosure contains zero (tau is equivalent to i); s2 is undefined here".into(),
        ));
    }
    let star = e2_star(tau, work)?;
    Ok(b.e4.div(&b.e6)?.mul(&star).with_prec(prec))
}

/// Normalized discriminant `(E4^3 - E6^2)/1728 = q prod (1-q^n)^24 = eta^24`.
pub fn delta(tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 32;
    let b = eisenstein(tau, work)?;
    let num = b.e4.powi(3)?.sub(&b.e6.powi(2)?);
    Ok(num.mul_rational(&rat(1, 1728)).with_prec(prec))
}

/// `J = E4^3/(E4^3 - E6^2) = j/1728`; `J(i) = 1`, `J(rho) = 0`.
pub fn j_invariant(tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 32;
    let b = eisenstein(tau, work)?;
    let e4c = b.e4.powi(3)?;
    let den = e4c.sub(&b.e6.powi(2)?);
    if den.contains_zero() {
        return Err(Error::Numeric("discriminant enclosure contains zero".into()));
    }
    Ok(e4c.div(&den)?.with_prec(prec))
}

/// Dedekind eta `eta(tau) = q^(1/24) prod_{n>=1} (1 - q^n)` with a certified
/// relative tail `8 |q|^(N+1)` for the truncated product (valid for |q|<=1/2).
pub fn eta(tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 48;
    // q^(1/24) = exp(pi i tau / 12), principal on the standard strip
    let q24 = tau
        .with_prec(work)
        .mul(&pi_enclosure(work).mul_i())
        .mul_rational(&rat(1, 12))
        .exp();
    let q = q24.powi(24)?;
    let r = require_small_nome(&q)?;
    // smallest N with 8 r^(N+1) <= 2^-(work+4)
    let target = -(work as i64) - 4;
    let mut n_terms = 0u64;
    let mut rn = r;
    for n in 1..200_000u64 {
        rn = rn.mul(&r);
        if Mag::from_u64(8).mul(&rn).le_two_exp(target) {
            n_terms = n;
            break;
        }
    }
    if n_terms == 0 {
        return Err(Error::InsufficientPrecision("eta product cutoff exceeded".into()));
    }
    let one = AC::from_i64(1, work);
    let mut prod = one.clone();
    let mut qn = one.clone();
    for _ in 1..=n_terms {
        qn = qn.mul(&q);
        prod = prod.mul(&one.sub(&qn));
    }
    let value = q24.mul(&prod);
    let rel = Mag::from_u64(8).mul(&r.pow(n_terms + 1));
    let tail = value.mag_upper().mul(&rel);
    Ok(value.add_err(&tail).with_prec(prec))
}

/// Jacobi theta constants. `which` is 2, 3 or 4.
pub fn theta(which: u8, tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 48;
    // p4 = exp(pi i tau / 4); theta2 uses p^((n+1/2)^2) = p4^((2n+1)^2)
    let p4 = tau
        .with_prec(work)
        .mul(&pi_enclosure(work).mul_i())
        .mul_rational(&rat(1, 4))
        .exp();
    let p = p4.powi(4)?;
    let r = p.mag_upper();
    if !r.le_two_exp(-1) {
        return Err(Error::OutOfDomain("theta nome exceeds 1/2".into()));
    }
    let target = -(work as i64) - 4;
    // pick N with 4 r^((N+1)^2) below target (theta2 tail 4 r4^((2N+3)^2) is
    // smaller since r4^4 = r)
    let mut n_cut = None;
    for n in 1..10_000u64 {
        if Mag::from_u64(4).mul(&r.pow((n + 1) * (n + 1))).le_two_exp(target) {
            n_cut = Some(n);
            break;
        }
    }
    let n_cut =
        n_cut.ok_or_else(|| Error::InsufficientPrecision("theta cutoff exceeded".into()))?;
    let mut sum;
    match which {
        2 => {
            // 2 sum_{n>=0} p4^((2n+1)^2)
            sum = AC::zero(work);
            for n in 0..=n_cut {
                let e = (2 * n + 1) * (2 * n + 1);
                sum = sum.add(&p4.powi(e as i64)?);
            }
            sum = sum.mul_i64(2);
            let r4 = p4.mag_upper();
            let tail = Mag::from_u64(4).mul(&r4.pow((2 * n_cut + 3) * (2 * n_cut + 3)));
            sum = sum.add_err(&tail);
        }
        3 | 4 => {
            sum = AC::from_i64(1, work);
            for n in 1..=n_cut {
                let term = p.powi((n * n) as i64)?;
                let sign = if which == 4 && n % 2 == 1 { -2 } else { 2 };
                sum = sum.add(&term.mul_i64(sign));
            }
            let tail = Mag::from_u64(4).mul(&r.pow((n_cut + 1) * (n_cut + 1)));
            sum = sum.add_err(&tail);
        }
        _ => return Err(Error::InvalidInput("theta index must be 2, 3 or 4".into())),
    }
    Ok(sum.with_prec(prec))
}

fn scale_tau(tau: &AC, k: i64) -> AC {
    tau.mul_i64(k)
}

/// Evaluate the uniformizing function of the given covering at `tau`.
pub fn uniformizer(case: CaseTag, tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 48;
    let v = match case {
        CaseTag::C1B => {
            // s = (1 - sqrt(1 - 1/J))/2, the branch that is analytic along the
            // imaginary axis above i and vanishes at the cusp
            let j = j_invariant(tau, work)?;
            let one = AC::from_i64(1, work);
            let inner = one.sub(&j.inv()?);
            let root = inner.sqrt()?;
            one.sub(&root).mul_rational(&rat(1, 2))
        }
        CaseTag::C2A => {
            let t2 = theta(2, tau, work)?;
            let t3 = theta(3, tau, work)?;
            let t4 = theta(4, tau, work)?;
            let num = t3.powi(4)?.add(&t4.powi(4)?);
            let den = t2.powi(2)?.mul(&t3).mul(&t4);
            num.div(&den)?.powi(4)?.mul_rational(&rat(1, 16))
        }
        CaseTag::C2B => {
            let e1 = eta(tau, work)?;
            let e2t = eta(&scale_tau(tau, 2), work)?;
            e1.div(&e2t)?.powi(24)?.mul_rational(&rat(-1, 64))
        }
        CaseTag::C2C => {
            let t2 = theta(2, tau, work)?;
            let t3 = theta(3, tau, work)?;
            t2.div(&t3)?.powi(4)?
        }
        CaseTag::C3A => {
            let a = eta(tau, work)?.powi(12)?;
            let b = eta(&scale_tau(tau, 3), work)?.powi(12)?;
            let num = a.add(&b.mul_i64(27)).powi(2)?;
            let den = a.mul(&b).mul_i64(108);
            num.div(&den)?
        }
        CaseTag::C3B => {
            let e1 = eta(tau, work)?;
            let e3t = eta(&scale_tau(tau, 3), work)?;
            e1.div(&e3t)?.powi(12)?.mul_rational(&rat(-1, 27))
        }
    };
    Ok(v.with_prec(prec))
}

/// Residual of the polynomial relation tying the uniformizer to `J`, with
/// denominators cleared so an exact zero is expected:
///
/// - 1B: `4 J s (1-s) - 1`
/// - 2A: `4 t v + (1-t)^2` (t is the 2B uniformizer at the same point)
/// - 2B: `27 J t^2 - (4-t)^3`
/// - 2C: `27 J lambda^2 (1-lambda)^2 - 4 (1 - lambda + lambda^2)^3`
/// - 3A: `4 u w + (1-u)^2` (u is the 3B uniformizer at the same point)
/// - 3B: `64 u^3 J - (u-9)^3 (1-u)`
pub fn modular_relation_residual(case: CaseTag, tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 48;
    let one = AC::from_i64(1, work);
    let resid = match case {
        CaseTag::C1B => {
            let j = j_invariant(tau, work)?;
            let s = uniformizer(CaseTag::C1B, tau, work)?;
            j.mul(&s).mul(&one.sub(&s)).mul_i64(4).sub(&one)
        }
        CaseTag::C2A => {
            let v = uniformizer(CaseTag::C2A, tau, work)?;
            let t = uniformizer(CaseTag::C2B, tau, work)?;
            t.mul(&v).mul_i64(4).add(&one.sub(&t).powi(2)?)
        }
        CaseTag::C2B => {
            let j = j_invariant(tau, work)?;
            let t = uniformizer(CaseTag::C2B, tau, work)?;
            let lhs = j.mul(&t.powi(2)?).mul_i64(27);
            let rhs = AC::from_i64(4, work).sub(&t).powi(3)?;
            lhs.sub(&rhs)
        }
        CaseTag::C2C => {
            let j = j_invariant(tau, work)?;
            let l = uniformizer(CaseTag::C2C, tau, work)?;
            let lhs = j.mul(&l.powi(2)?).mul(&one.sub(&l).powi(2)?).mul_i64(27);
            let rhs = one.sub(&l).add(&l.powi(2)?).powi(3)?.mul_i64(4);
            lhs.sub(&rhs)
        }
        CaseTag::C3A => {
            let w = uniformizer(CaseTag::C3A, tau, work)?;
            let u = uniformizer(CaseTag::C3B, tau, work)?;
            u.mul(&w).mul_i64(4).add(&one.sub(&u).powi(2)?)
        }
        CaseTag::C3B => {
            let j = j_invariant(tau, work)?;
            let u = uniformizer(CaseTag::C3B, tau, work)?;
            let lhs = u.powi(3)?.mul(&j).mul_i64(64);
            let rhs = u.sub(&AC::from_i64(9, work)).powi(3)?.mul(&one.sub(&u));
            lhs.sub(&rhs)
        }
    };
    Ok(resid.with_prec(prec))
}

/// Fricke involution residual: `t(-1/(2 tau)) t(tau) - 1` for 2B and
/// `u(-1/(3 tau)) u(tau) - 1` for 3B.
pub fn fricke_residual(case: CaseTag, tau: &AC, prec: u32) -> Result<AC> {
    let work = prec + 48;
    let n = match case {
        CaseTag::C2B => 2,
        CaseTag::C3B => 3,
        _ => {
            return Err(Error::Unsupported(
                "Fricke residual is defined for the 2B and 3B uniformizers".into(),
            ))
        }
    };
    let here = uniformizer(case, tau, work)?;
    let flipped = tau.with_prec(work).mul_i64(n).inv()?.neg();
    let there = uniformizer(case, &flipped, work)?;
    Ok(here.mul(&there).sub(&AC::from_i64(1, work)).with_prec(prec))
}

/// Residual of the weight-2 quasi-modular transformation law
/// `E2((a tau + b)/(c tau + d)) = (c tau + d)^2 E2(tau) - (6 i / pi) c (c tau + d)`
/// for `g = [a, b; c, d]` in SL2(Z).
pub fn e2_transformation_residual(tau: &AC, g: [i64; 4], prec: u32) -> Result<AC> {
    let [a, b, c, d] = g;
    if a * d - b * c != 1 {
        return Err(Error::InvalidInput("matrix must have determinant 1".into()));
    }
    let work = prec + 32;
    let tau = tau.with_prec(work);
    let den = tau.mul_i64(c).add(&AC::from_i64(d, work));
    let gtau = tau.mul_i64(a).add(&AC::from_i64(b, work)).div(&den)?;
    let lhs = eisenstein(&gtau, work)?.e2;
    let e2 = eisenstein(&tau, work)?.e2;
    let shift = pi_enclosure(work).inv()?.mul_i().mul_i64(6 * c).mul(&den);
    let rhs = den.powi(2)?.mul(&e2).sub(&shift);
    Ok(lhs.sub(&rhs).with_prec(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::QuadraticIrrational;

    fn tau_2i(prec: u32) -> AC {
        AC::from_i64(2, prec).mul_i()
    }

    fn tau_i(prec: u32) -> AC {
        AC::i(prec)
    }

    fn tau_rho(prec: u32) -> AC {
        // rho = (-1 + sqrt(-3))/2
        QuadraticIrrational::new(1, 1, 1).unwrap().embed(prec)
    }

    #[test]
    fn e2_at_i_is_three_over_pi() {
        let prec = 192;
        let b = eisenstein(&tau_i(prec + 16), prec).unwrap();
        let oracle = pi_enclosure(prec).inv().unwrap().mul_i64(3);
        assert!(b.e2.overlaps(&oracle));
        assert!(b.e2.sub(&oracle).mag_upper().le_two_exp(-170));
        // E6(i) = 0
        assert!(b.e6.contains_zero());
    }

    #[test]
    fn e2_at_rho_and_e4_vanishing() {
        let prec = 192;
        let b = eisenstein(&tau_rho(prec + 16), prec).unwrap();
        // E2(rho) = 2 sqrt(3)/pi
        let oracle = AC::from_i64(3, prec)
            .sqrt()
            .unwrap()
            .mul_i64(2)
            .mul(&pi_enclosure(prec).inv().unwrap());
        assert!(b.e2.sub(&oracle).mag_upper().le_two_exp(-170));
        assert!(b.e4.contains_zero());
    }

    #[test]
    fn e2_star_vanishes_at_special_points() {
        for tau in [tau_i(224), tau_rho(224)] {
            let s = e2_star(&tau, 192).unwrap();
            assert!(s.contains_zero());
            assert!(s.mag_upper().le_two_exp(-170));
        }
    }

    #[test]
    fn j_invariant_known_values() {
        let prec = 192;
        // J(i) = 1 requires care since Delta is fine but E6(i)=0; J-1 = E6^2/Delta
        let j = j_invariant(&tau_i(prec + 16), prec).unwrap();
        assert!(j.sub(&AC::from_i64(1, prec)).mag_upper().le_two_exp(-150));
        // j(2i) = 66^3, so J(2i) = 66^3/1728
        let j2 = j_invariant(&tau_2i(prec + 16), prec).unwrap();
        let oracle = AC::from_rational(&rat(66 * 66 * 66, 1728), prec);
        assert!(j2.overlaps(&oracle));
        assert!(j2.sub(&oracle).mag_upper().le_two_exp(-150));
    }

    #[test]
    fn discriminant_matches_eta_power() {
        let prec = 192;
        for tau in [tau_2i(prec + 32), tau_rho(prec + 32)] {
            let d = delta(&tau, prec).unwrap();
            let e24 = eta(&tau, prec + 16).unwrap().powi(24).unwrap().with_prec(prec);
            assert!(d.overlaps(&e24));
            let rel = d.sub(&e24).mag_upper();
            assert!(rel.le(&d.mag_upper().mul_two_exp(-150)));
        }
    }

    #[test]
    fn jacobi_quartic_identity() {
        // theta3^4 = theta2^4 + theta4^4
        let prec = 160;
        for tau in [
            tau_i(prec + 16),
            tau_2i(prec + 16),
            QuadraticIrrational::new(2, 2, 3).unwrap().embed(prec + 16),
        ] {
            let t2 = theta(2, &tau, prec).unwrap().powi(4).unwrap();
            let t3 = theta(3, &tau, prec).unwrap().powi(4).unwrap();
            let t4 = theta(4, &tau, prec).unwrap().powi(4).unwrap();
            let resid = t3.sub(&t2.add(&t4));
            assert!(resid.contains_zero());
            assert!(resid.mag_upper().le_two_exp(-140));
        }
    }

    #[test]
    fn lambda_at_i_is_one_half() {
        let l = uniformizer(CaseTag::C2C, &tau_i(224), 192).unwrap();
        let half = AC::from_rational(&rat(1, 2), 192);
        assert!(l.overlaps(&half));
        assert!(l.sub(&half).mag_upper().le_two_exp(-170));
    }

    #[test]
    fn quartic_uniformizer_at_i() {
        // v(i) = 81/32
        let v = uniformizer(CaseTag::C2A, &tau_i(224), 192).unwrap();
        let oracle = AC::from_rational(&rat(81, 32), 192);
        assert!(v.overlaps(&oracle));
        assert!(v.sub(&oracle).mag_upper().le_two_exp(-170));
    }

    #[test]
    fn degree_one_uniformizer_sheet() {
        // s(i) = 1/2 and s(2i) is small and positive (the cusp-side sheet)
        let prec = 192;
        let s_at_i = uniformizer(CaseTag::C1B, &tau_i(prec + 32), prec).unwrap();
        assert!(s_at_i.sub(&AC::from_rational(&rat(1, 2), prec)).mag_upper().le_two_exp(-60));
        let s = uniformizer(CaseTag::C1B, &tau_2i(prec + 32), prec).unwrap();
        let m = s.mag_upper();
        assert!(m.le(&Mag::from_u64(1).mul_two_exp(-9))); // |s| < 1/512
        assert!(!s.contains_zero());
        assert!(!s.re.is_negative());
    }

    #[test]
    fn modular_relations_hold() {
        let prec = 160;
        let points = [
            tau_2i(prec + 48),
            QuadraticIrrational::new(1, 0, 3).unwrap().embed(prec + 48),
            QuadraticIrrational::new(2, 2, 3).unwrap().embed(prec + 48),
        ];
        for case in CaseTag::all() {
            for tau in &points {
                let r = modular_relation_residual(case, tau, prec).unwrap();
                assert!(r.contains_zero(), "case {} residual off zero", case.name());
            }
        }
    }

    #[test]
    fn fricke_involution_residuals() {
        let prec = 160;
        let tau = tau_2i(prec + 48);
        for case in [CaseTag::C2B, CaseTag::C3B] {
            let r = fricke_residual(case, &tau, prec).unwrap();
            assert!(r.contains_zero(), "Fricke residual off zero for {}", case.name());
            assert!(r.mag_upper().le_two_exp(-100));
        }
    }

    #[test]
    fn e2_transformation_law() {
        let prec = 160;
        let tau = QuadraticIrrational::new(2, 2, 3).unwrap().embed(prec + 32);
        for g in [[1i64, 1, 0, 1], [0, -1, 1, 0], [1, 0, 1, 1], [2, 1, 1, 1], [1, -1, 1, 0]] {
            let r = e2_transformation_residual(&tau, g, prec).unwrap();
            assert!(r.contains_zero(), "law fails for {:?}", g);
            assert!(r.mag_upper().le_two_exp(-120));
        }
    }

    #[test]
    fn high_precision_s2_spot() {
        // s2 at (-3 + sqrt(-267))/6: 200+ digits, enclosure well below 1e-200
        let prec = 768;
        let tau = QuadraticIrrational::new(3, 3, 23).unwrap().embed(prec + 32);
        let v = s2(&tau, prec).unwrap();
        assert!(v.mag_upper().le(&Mag::from_u64(2))); // sanity: bounded
        assert!(v.err.le_two_exp(-700));
        assert!(v.im.is_zero() || v.imag_part().contains_zero());
    }
}
