//! Rigorous certification that the weight-zero quotient `s2` takes a claimed
//! algebraic value at a CM point.
//!
//! The strategy: an explicit positive integer multiplier `M` clears every
//! denominator that can appear in `s2(tau)`, so `M s2(tau)` is an algebraic
//! integer of the real quadratic field `L` generated by `j(tau)`. Distinct
//! algebraic integers of `L` are separated under the embeddings `L -> R`:
//! if every embedding gap `|M s2(tau_i) - M x_i|` is strictly below 1, the
//! candidate `x` and the true value coincide. The gap test is run on rigorous
//! enclosures, so a pass is a proof (relative to the integrality theorem),
//! and a gap provably at least 1 refutes the candidate.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebraic::{reduced_forms, AlgebraicNumber, QuadraticIrrational, Rat};
use crate::approx::AC;
use crate::dyadic::{Dyadic, Mag};
use crate::modular;
use crate::recognize::recognize_quadratic;
use crate::series::Verdict;
use crate::{Error, Result};

/// Everything needed to run a certification: the form(s), the candidate
/// value(s), and an exact Weierstrass model whose invariants are algebraic
/// integers after scaling by `d_scale`.
#[derive(Clone, Debug)]
pub struct CertificationInput {
    pub tau: QuadraticIrrational,
    pub tau_conj: Option<QuadraticIrrational>,
    pub candidate: AlgebraicNumber,
    pub candidate_conj: Option<AlgebraicNumber>,
    /// `g2 = 27 J/(J-1) * d_scale^2` for the exact `J = j/1728` at `tau`.
    pub g2: AlgebraicNumber,
    /// `g3 = 27 J/(J-1) * d_scale^3`.
    pub g3: AlgebraicNumber,
    pub d_scale: BigInt,
}

impl CertificationInput {
    pub fn validate(&self) -> Result<()> {
        if let Some(tc) = &self.tau_conj {
            if tc.d() != self.tau.d() {
                return Err(Error::InvalidInput(
                    "conjugate form has a different discriminant".into(),
                ));
            }
            let cc = self
                .candidate_conj
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("missing conjugate candidate".into()))?;
            if *cc != self.candidate.conj() {
                return Err(Error::InvalidInput(
                    "candidate and conjugate candidate are not field conjugates".into(),
                ));
            }
        }
        // the model discriminant g2^3 - 27 g3^2 must not vanish, except for
        // the degenerate j = 0 model where both invariants are zero and the
        // multiplier falls back to M6 = 1
        let disc = self.g2.pow(3)?.sub(&self.g3.mul(&self.g3)?.mul_rat(&rat_i64(27)))?;
        if disc.is_zero() && !(self.g2.is_zero() && self.g3.is_zero()) {
            return Err(Error::InvalidInput("singular model: g2^3 - 27 g3^2 = 0".into()));
        }
        Ok(())
    }
}

/// The integrality multiplier `M = 7 M2 M6` attached to one form:
/// `N = a*c` is the norm of the lattice generator `a*tau`, `M1 = N^2` clears
/// the leading coefficient of the `N`-division polynomial, `M2 = M1*N*d`
/// clears the lattice trace denominators, and `M6` clears the norm
/// denominator of `e6 = g3/140`.
#[derive(Clone, Debug)]
pub struct Multiplier {
    pub n: i64,
    pub m1: BigInt,
    pub m2: BigInt,
    pub m6: BigInt,
    pub m: BigInt,
}

pub fn multiplier_for_form(form: &QuadraticIrrational, m6: &BigInt) -> Multiplier {
    let n = form.a * form.c;
    let m1 = BigInt::from(n) * n;
    let m2 = &m1 * n * form.d();
    let m = BigInt::from(7) * &m2 * m6;
    Multiplier { n, m1, m2, m6: m6.clone(), m }
}

/// `M6 = |Norm_{L/Q}(e6)|` with `e6 = g3/140`, which must be an algebraic
/// integer. For the degenerate `j = 0` model (`g3 = 0`) the value collapses
/// and `M6 = 1` suffices.
fn e6_norm_abs(g3: &AlgebraicNumber) -> Result<BigInt> {
    let e6 = g3.mul_rat(&Rat::new(BigInt::one(), BigInt::from(140)));
    if !is_algebraic_integer(&e6) {
        return Err(Error::InvalidInput(
            "e6 = g3/140 is not an algebraic integer; enlarge d_scale".into(),
        ));
    }
    if e6.is_zero() {
        return Ok(BigInt::one());
    }
    let nrm = if e6.is_rational() { e6.rational_part.clone() } else { e6.norm() };
    debug_assert!(nrm.is_integer());
    Ok(nrm.numer().abs())
}

pub fn build_multiplier(input: &CertificationInput) -> Result<Multiplier> {
    let m6 = e6_norm_abs(&input.g3)?;
    Ok(multiplier_for_form(&input.tau, &m6))
}

fn is_algebraic_integer(x: &AlgebraicNumber) -> bool {
    if x.is_rational() {
        x.rational_part.is_integer()
    } else {
        x.trace().is_integer() && x.norm().is_integer()
    }
}

fn rat_i64(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// One embedding's share of a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingGap {
    pub form: [i64; 3],
    pub candidate: String,
    pub n: i64,
    pub m1: String,
    pub m2: String,
    pub m6: String,
    pub m_digits: usize,
    /// Decimal rendering of the enclosure of `|M s2(tau_i) - M x_i|`.
    pub gap: String,
    pub gap_below_one: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub tau: [i64; 3],
    pub disc: i64,
    pub candidate: String,
    pub embeddings: Vec<EmbeddingGap>,
    pub verdict: Verdict,
    pub precision_bits: u32,
}

fn algebraic_to_string(x: &AlgebraicNumber) -> String {
    if x.is_rational() {
        format!("{}", x.rational_part)
    } else if x.rational_part.is_zero() {
        format!("{}*sqrt({})", x.surd_part, x.radicand)
    } else {
        format!("{} + {}*sqrt({})", x.rational_part, x.surd_part, x.radicand)
    }
}

/// Pass iff the whole enclosure is below 1; fail iff the modulus is provably
/// at least 1; otherwise more precision is needed.
fn classify_gap(gap: &AC) -> Verdict {
    let one = Mag::from_u64(1);
    if gap.mag_upper().cmp_value(&one) == Ordering::Less {
        return Verdict::Pass;
    }
    if let Some(lo) = gap.mag_lower() {
        if lo.cmp_value(&Dyadic::one()) != Ordering::Less {
            return Verdict::Fail;
        }
    }
    Verdict::Inconclusive
}

fn gap_at(
    form: &QuadraticIrrational,
    cand: &AlgebraicNumber,
    m: &BigInt,
    prec: u32,
) -> Result<(AC, Verdict)> {
    if cand.radicand < 0 {
        return Err(Error::InvalidInput("candidate must be real".into()));
    }
    let work = prec + 32;
    // reduction puts Im(tau) >= sqrt(3)/2, far above the convergence floor
    let red = form.reduce();
    let s2v = modular::s2(&red.embed(work), work)?;
    let cand_ac = cand.embed(work, 1)?;
    let gap = s2v.sub(&cand_ac).mul_rational(&Rat::from_integer(m.clone())).with_prec(prec);
    let verdict = classify_gap(&gap);
    Ok((gap, verdict))
}

/// Runs the per-embedding gap test `|M s2(tau_i) - M x_i| < 1`, escalating the
/// working precision while any enclosure straddles the threshold. A fail at
/// any precision is definitive (the lower bound only grows as enclosures
/// shrink); a pass requires every embedding gap to clear the test.
pub fn certify_s2(input: &CertificationInput, precision_bits: u32) -> Result<Certificate> {
    input.validate()?;
    let m6 = e6_norm_abs(&input.g3)?;
    let mut embeddings = vec![(input.tau, input.candidate.clone())];
    if let Some(tc) = &input.tau_conj {
        embeddings.push((*tc, input.candidate_conj.clone().expect("validated")));
    }
    let mut prec = precision_bits.max(64);
    let mut last: Option<Certificate> = None;
    for _ in 0..5 {
        let mut verdict = Verdict::Pass;
        let mut gaps = Vec::new();
        for (form, cand) in &embeddings {
            let mult = multiplier_for_form(form, &m6);
            let (gap, v) = gap_at(form, cand, &mult.m, prec)?;
            verdict = verdict.merge(v);
            gaps.push(EmbeddingGap {
                form: [form.a, form.b, form.c],
                candidate: algebraic_to_string(cand),
                n: mult.n,
                m1: mult.m1.to_string(),
                m2: mult.m2.to_string(),
                m6: mult.m6.to_string(),
                m_digits: mult.m.to_string().len(),
                gap: gap.to_string_decimal(8),
                gap_below_one: v == Verdict::Pass,
            });
        }
        let cert = Certificate {
            tau: [input.tau.a, input.tau.b, input.tau.c],
            disc: input.tau.d(),
            candidate: algebraic_to_string(&input.candidate),
            embeddings: gaps,
            verdict,
            precision_bits: prec,
        };
        match verdict {
            Verdict::Pass | Verdict::Fail => return Ok(cert),
            Verdict::Inconclusive => {
                last = Some(cert);
                prec *= 2;
            }
        }
    }
    Ok(last.expect("at least one round"))
}

/// Exact Weierstrass data recovered from the class polynomial of `j(tau)`.
#[derive(Clone, Debug)]
pub struct ExactModel {
    pub j: AlgebraicNumber,
    pub g2: AlgebraicNumber,
    pub g3: AlgebraicNumber,
    pub d_scale: BigInt,
    pub forms: Vec<QuadraticIrrational>,
}

/// Rounds a complex enclosure known (from theory) to contain a rational
/// integer to that integer; `None` when the enclosure is too wide to isolate
/// a single integer.
fn round_to_integer(x: &AC) -> Option<BigInt> {
    if !x.err.le_two_exp(-3) {
        return None;
    }
    let re = x.re.to_rational();
    let k = (&re + Rat::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    if (re - Rat::from_integer(k.clone())).abs() > Rat::new(BigInt::one(), BigInt::from(4)) {
        return None;
    }
    Some(k)
}

fn squarefree_divisors(d: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for m in 2..=d {
        if d % m != 0 {
            continue;
        }
        let (s, _) = crate::algebraic::squarefree_decompose(m);
        if s == 1 {
            out.push(m);
        }
    }
    out
}

/// Computes the exact `j`-invariant at `tau` as a degree <= 2 algebraic
/// integer (class number <= 2), then builds the scaled model
/// `g2 = 27 J/(J-1) D^2`, `g3 = 27 J/(J-1) D^3` with `D` the least positive
/// integer making `g2`, `g3`, and `e6 = g3/140` algebraic integers.
pub fn exact_model(tau: &QuadraticIrrational, precision_bits: u32) -> Result<ExactModel> {
    let d = tau.d();
    let forms = reduced_forms(d)?;
    let h = forms.len();
    if h == 0 || h > 2 {
        return Err(Error::Unsupported(format!(
            "class number {h} for discriminant -{d}; only h <= 2 is supported"
        )));
    }
    let primary = tau.reduce();
    if !forms.contains(&primary) {
        return Err(Error::InvalidInput("form does not reduce into the class list".into()));
    }
    let mut prec = precision_bits.max(192);
    for _ in 0..4 {
        let mut js = Vec::with_capacity(h);
        for f in &forms {
            js.push(modular::j_invariant(&f.embed(prec), prec)?.mul_i64(1728));
        }
        let j_alg = if h == 1 {
            match round_to_integer(&js[0]) {
                Some(k) => AlgebraicNumber::rational(Rat::from_integer(k)),
                None => {
                    prec *= 2;
                    continue;
                }
            }
        } else {
            let (sum, prod) = (js[0].add(&js[1]), js[0].mul(&js[1]));
            let (s, p) = match (round_to_integer(&sum), round_to_integer(&prod)) {
                (Some(s), Some(p)) => (s, p),
                _ => {
                    prec *= 2;
                    continue;
                }
            };
            // j = (s +/- k*sqrt(m))/2 with s^2 - 4p = k^2 m, m a squarefree
            // divisor of d (the real quadratic field sits in the genus field)
            let disc_poly = &s * &s - BigInt::from(4) * &p;
            if !disc_poly.is_positive() {
                return Err(Error::Numeric("class polynomial is not totally real".into()));
            }
            let mut found = None;
            for m in squarefree_divisors(d) {
                let mb = BigInt::from(m);
                if (&disc_poly % &mb).is_zero() {
                    let q = &disc_poly / &mb;
                    let k = q.sqrt();
                    if &k * &k == q {
                        found = Some((m, k));
                        break;
                    }
                }
            }
            let (m, k) = found.ok_or_else(|| {
                Error::Numeric("could not express the class polynomial root over Q(sqrt(m))".into())
            })?;
            let half = Rat::new(BigInt::one(), BigInt::from(2));
            let plus = AlgebraicNumber::new(
                Rat::from_integer(s.clone()) * &half,
                Rat::from_integer(k.clone()) * &half,
                m,
            );
            let minus = plus.conj();
            // match the branch to the enclosure at the primary form
            let idx = forms.iter().position(|f| *f == primary).expect("checked");
            let target = js[idx].real_part();
            let pe = plus.embed(prec, 1)?;
            if pe.real_part().overlaps(&target) {
                plus
            } else if minus.embed(prec, 1)?.real_part().overlaps(&target) {
                minus
            } else {
                prec *= 2;
                continue;
            }
        };
        return finish_model(j_alg, forms, d);
    }
    Err(Error::InsufficientPrecision(
        "could not isolate the class polynomial coefficients".into(),
    ))
}

fn finish_model(
    j: AlgebraicNumber,
    forms: Vec<QuadraticIrrational>,
    _d: i64,
) -> Result<ExactModel> {
    if j.is_zero() {
        // j = 0: the scaled model collapses; certification uses M6 = 1
        return Ok(ExactModel {
            j,
            g2: AlgebraicNumber::from_i64(0),
            g3: AlgebraicNumber::from_i64(0),
            d_scale: BigInt::one(),
            forms,
        });
    }
    let j_minus = j.sub(&AlgebraicNumber::from_i64(1728))?;
    if j_minus.is_zero() {
        return Err(Error::Undefined("j = 1728: the model has g3 = 0 and s2 is undefined".into()));
    }
    // base = 27 J/(J-1) = 27 j/(j-1728)
    let base = j.div(&j_minus)?.mul_rat(&rat_i64(27));
    let e6_base = base.mul_rat(&Rat::new(BigInt::one(), BigInt::from(140)));
    // integrality conditions as (rational, weight): the denominator of each
    // rational must be absorbed by D^weight
    let mut conds: Vec<(Rat, u32)> = Vec::new();
    if base.is_rational() {
        conds.push((base.rational_part.clone(), 2)); // g2 = base*D^2
        conds.push((e6_base.rational_part.clone(), 3)); // e6 = e6_base*D^3
    } else {
        conds.push((base.trace(), 2));
        conds.push((base.norm(), 4));
        conds.push((e6_base.trace(), 3));
        conds.push((e6_base.norm(), 6));
    }
    let d_scale = least_scale(&conds)?;
    let d2 = Rat::from_integer(&d_scale * &d_scale);
    let d3 = Rat::from_integer(&d_scale * &d_scale * &d_scale);
    let g2 = base.mul_rat(&d2);
    let g3 = base.mul_rat(&d3);
    let e6 = g3.mul_rat(&Rat::new(BigInt::one(), BigInt::from(140)));
    if !(is_algebraic_integer(&g2) && is_algebraic_integer(&g3) && is_algebraic_integer(&e6)) {
        return Err(Error::Unsupported("scaling factor search failed".into()));
    }
    Ok(ExactModel { j, g2, g3, d_scale, forms })
}

/// Least positive `D` with `denominator(r) | D^w` for every condition,
/// computed prime-by-prime as `ceil(v_p(den)/w)`.
fn least_scale(conds: &[(Rat, u32)]) -> Result<BigInt> {
    let dens: Vec<BigInt> = conds.iter().map(|(r, _)| r.denom().clone()).collect();
    let atoms = coprime_atoms(&dens)?;
    let mut scale = BigInt::one();
    for a in &atoms {
        let mut k = 0u32;
        for (r, w) in conds {
            let v = valuation(r.denom(), a);
            k = k.max(v.div_ceil(*w));
        }
        scale *= a.pow(k);
    }
    Ok(scale)
}

/// Splits the denominators into prime atoms by trial division; class
/// polynomial denominators here are products of small primes.
fn coprime_atoms(dens: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut atoms = Vec::new();
    let mut rem: Vec<BigInt> = dens.to_vec();
    let mut p: u64 = 2;
    while p <= 1_000_000 {
        let pb = BigInt::from(p);
        let mut divides = false;
        for r in rem.iter_mut() {
            while (&*r % &pb).is_zero() {
                *r /= &pb;
                divides = true;
            }
        }
        if divides {
            atoms.push(pb);
        }
        p = if p == 2 { 3 } else { p + 2 };
        if !rem.iter().any(|r| r > &BigInt::one()) {
            return Ok(atoms);
        }
    }
    Err(Error::Unsupported("denominator has a prime factor beyond the trial bound".into()))
}

fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut n = n.clone();
    let mut v = 0;
    while (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    v
}

/// Numerically evaluates `s2` at the (reduced) form, recognizes a degree <= 2
/// algebraic candidate by lattice reduction, and confirms it at doubled
/// precision before returning.
fn recognize_s2(form: &QuadraticIrrational, precision_bits: u32) -> Result<AlgebraicNumber> {
    let red = form.reduce();
    let mut prec = precision_bits.max(256);
    for _ in 0..4 {
        let s2v = modular::s2(&red.embed(prec), prec)?;
        let height = BigInt::one() << (prec / 8) as usize;
        match recognize_quadratic(&s2v.real_part(), &height) {
            Ok(Some(c)) if c.radicand >= 0 => {
                let confirm = modular::s2(&red.embed(2 * prec), 2 * prec)?;
                if confirm.sub(&c.embed(2 * prec, 1)?).contains_zero() {
                    return Ok(c);
                }
            }
            Ok(_) => {}
            Err(Error::InsufficientPrecision(_)) => {}
            Err(e) => return Err(e),
        }
        prec *= 2;
    }
    Err(Error::Numeric("failed to recognize s2 as a degree <= 2 algebraic number".into()))
}

/// End-to-end pipeline: recognize candidates at every class representative,
/// check they are field conjugates, build the exact model, and certify.
pub fn guess_and_certify(tau: &QuadraticIrrational, precision_bits: u32) -> Result<Certificate> {
    let model = exact_model(tau, precision_bits)?;
    let primary = tau.reduce();
    let other = model.forms.iter().find(|f| **f != primary).copied();
    let candidate = recognize_s2(&primary, precision_bits)?;
    let (tau_conj, candidate_conj) = match other {
        Some(f) => {
            let c2 = recognize_s2(&f, precision_bits)?;
            if c2 != candidate.conj() {
                return Err(Error::Numeric(
                    "conjugate consistency failure: the class representatives did not \
                     recognize to field-conjugate values"
                        .into(),
                ));
            }
            (Some(f), Some(c2))
        }
        None => (None, None),
    };
    let input = CertificationInput {
        tau: *tau,
        tau_conj,
        candidate,
        candidate_conj,
        g2: model.g2,
        g3: model.g3,
        d_scale: model.d_scale,
    };
    certify_s2(&input, precision_bits)
}

/// Convenience constructor: exact model + caller-supplied candidate. The
/// conjugate form (when the class number is 2) gets the field conjugate of
/// the candidate.
pub fn input_for_candidate(
    tau: &QuadraticIrrational,
    candidate: AlgebraicNumber,
    precision_bits: u32,
) -> Result<CertificationInput> {
    let model = exact_model(tau, precision_bits)?;
    let primary = tau.reduce();
    let other = model.forms.iter().find(|f| **f != primary).copied();
    let candidate_conj = other.map(|_| candidate.conj());
    Ok(CertificationInput {
        tau: *tau,
        tau_conj: other,
        candidate,
        candidate_conj,
        g2: model.g2,
        g3: model.g3,
        d_scale: model.d_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::rat;

    fn form(a: i64, b: i64, c: i64) -> QuadraticIrrational {
        QuadraticIrrational::new(a, b, c).unwrap()
    }

    #[test]
    fn multiplier_at_i() {
        // a = c = 1, d = 4: N = 1, M1 = 1, M2 = 4
        let m = multiplier_for_form(&form(1, 0, 1), &BigInt::one());
        assert_eq!(m.n, 1);
        assert_eq!(m.m1, BigInt::one());
        assert_eq!(m.m2, BigInt::from(4));
        assert_eq!(m.m, BigInt::from(28));
    }

    #[test]
    fn model_matches_worked_example_disc_267() {
        let tau = form(3, 3, 23);
        let model = exact_model(&tau, 256).unwrap();
        let d_expected = BigInt::from(7i64 * 11 * 71) * BigInt::from(167i64) * BigInt::from(251i64) * BigInt::from(263i64);
        assert_eq!(model.d_scale, d_expected);
        let m6 = e6_norm_abs(&model.g3).unwrap();
        let m6_expected = BigInt::from(2).pow(20)
            * BigInt::from(3).pow(6)
            * BigInt::from(5).pow(4)
            * BigInt::from(11).pow(7)
            * BigInt::from(17).pow(3)
            * BigInt::from(47).pow(3)
            * BigInt::from(71).pow(4)
            * BigInt::from(167).pow(4)
            * BigInt::from(251).pow(4)
            * BigInt::from(263).pow(4);
        assert_eq!(m6, m6_expected);
        // N = 69 for (3,3,23) and 67 for the other class representative
        let m_tau = multiplier_for_form(&tau, &m6);
        assert_eq!(m_tau.n, 69);
        assert_eq!(m_tau.m2, BigInt::from(267i64) * BigInt::from(69i64 * 69) * BigInt::from(69));
        let other = model.forms.iter().find(|f| f.a == 1).unwrap();
        assert_eq!(multiplier_for_form(other, &m6).n, 67);
    }

    #[test]
    fn certifies_worked_example_disc_267() {
        let tau = form(3, 3, 23);
        let candidate = AlgebraicNumber::new(
            Rat::new(BigInt::from(4110014282640i64), BigInt::from(5363953714273i64)),
            Rat::new(BigInt::from(-66461074000i64), BigInt::from(5363953714273i64)),
            89,
        );
        let input = input_for_candidate(&tau, candidate, 512).unwrap();
        let cert = certify_s2(&input, 512).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.embeddings.len(), 2);
        assert!(cert.embeddings.iter().all(|g| g.gap_below_one));
    }

    #[test]
    fn rational_value_passes_and_off_by_one_fails() {
        // tau ~ sqrt(-2)/2, s2 = 5/14
        let tau = form(2, 0, 1);
        let good = AlgebraicNumber::rational(rat(5, 14));
        let input = input_for_candidate(&tau, good, 256).unwrap();
        let cert = certify_s2(&input, 256).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);

        let bad = AlgebraicNumber::rational(rat(5, 14) + rat(1, 1));
        let input = input_for_candidate(&tau, bad, 256).unwrap();
        let cert = certify_s2(&input, 256).unwrap();
        assert_eq!(cert.verdict, Verdict::Fail);
    }

    #[test]
    fn guesses_rational_value() {
        // tau = (-1+sqrt(-7))/2
        let cert = guess_and_certify(&form(1, 1, 2), 256).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.candidate, "5/21");
    }

    #[test]
    fn guesses_quadratic_value() {
        // tau = sqrt(-10)/2: s2 = (103 - 12 sqrt 5)/186
        let cert = guess_and_certify(&form(2, 0, 5), 256).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.candidate, "103/186 + -2/31*sqrt(5)");
        assert_eq!(cert.embeddings.len(), 2);
    }

    #[test]
    fn certifies_zero_value_at_rho() {
        let cert = guess_and_certify(&form(1, 1, 1), 256).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.candidate, "0");
    }

    #[test]
    fn undefined_at_i() {
        let input = input_for_candidate(&form(1, 0, 1), AlgebraicNumber::from_i64(0), 256);
        assert!(input.is_err());
    }
}
