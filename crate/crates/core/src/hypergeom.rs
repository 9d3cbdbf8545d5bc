//! Rigorous evaluation of generalized hypergeometric series inside the unit
//! disc, the derivative of a squared Gauss function, and the classical
//! transformation identities (Euler, Pfaff, Clausen) plus the two
//! quartic/cubic covering relations.
//!
//! Tail control: beyond the truncation index the magnitude of the term ratio
//! is bounded by |z| * prod max(1, (a_i+n)/(b_i+n)) with numerator and
//! denominator parameters paired in sorted order; each factor is either at
//! most 1 or decreasing in n, so evaluating at the truncation index gives a
//! geometric majorant for the whole tail.

use crate::algebraic::Rat;
use crate::approx::{rational_pow, real_nth_root, AC};
use crate::dyadic::Mag;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

/// Rising factorial (alpha)_n, exact.
pub fn pochhammer(alpha: &Rat, n: u64) -> Rat {
    let mut acc = Rat::one();
    let mut f = alpha.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rat::one();
    }
    acc
}

/// Gauss parameters (a, b; c).
#[derive(Clone, Debug, PartialEq)]
pub struct HGParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HGParams {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        HGParams { a, b, c }
    }
}

fn is_nonpositive_integer(r: &Rat) -> bool {
    r.is_integer() && !r.numer().is_positive()
}

/// Sum of prod_i (nums_i)_n / prod_j (dens_j)_n * z^n / n! with a rigorous
/// geometric tail bound. `nums` and `dens` must satisfy |nums| = |dens| + 1
/// after the implicit factorial is appended, i.e. |nums| = |dens| + 1.
pub fn eval_pfq(nums: &[Rat], dens: &[Rat], z: &AC, prec: u32) -> crate::Result<AC> {
    for d in dens {
        if is_nonpositive_integer(d) {
            return Err(crate::Error::InvalidInput(
                "denominator parameter is a non-positive integer".into(),
            ));
        }
    }
    if nums.len() != dens.len() + 1 {
        return Err(crate::Error::InvalidInput(
            "series needs one more numerator than denominator parameter".into(),
        ));
    }
    let work = prec + 32;
    let z = z.with_prec(work);
    let zmag = z.mag_upper();
    // |z| must be bounded away from 1 for the majorant to close
    if !zmag.le(&Mag::from_u64(121).mul_two_exp(-7)) {
        // 121/128 = 0.9453...
        return Err(crate::Error::OutOfDomain(
            "argument too close to the unit circle for direct summation".into(),
        ));
    }
    // pair parameters in sorted order (the factorial slot contributes 1)
    let mut ns: Vec<Rat> = nums.to_vec();
    let mut ds: Vec<Rat> = dens.to_vec();
    ds.push(Rat::one());
    ns.sort();
    ds.sort();
    let mut sum = AC::zero(work);
    let mut term = AC::from_i64(1, work);
    let tol = Mag::two_exp(-(work as i64));
    let mut n: u64 = 0;
    loop {
        sum = sum.add(&term);
        // exact ratio factor term(n+1)/term(n) = prod (a_i+n)/(b_i+n) * z
        let nr = Rat::from_integer(BigInt::from(n));
        let mut fac = Rat::one();
        for a in &ns {
            fac *= a + &nr;
        }
        for b in &ds {
            fac /= b + &nr;
        }
        term = term.mul(&z).mul_rational(&fac);
        n += 1;
        if n < 4 {
            continue;
        }
        // majorant ratio valid for all indices >= n
        let mut rho = zmag.clone();
        let nr = Rat::from_integer(BigInt::from(n));
        for (a, b) in ns.iter().zip(ds.iter()) {
            let f = (a + &nr) / (b + &nr);
            if f > Rat::one() {
                rho = rho.mul(&Mag::from_rational(&f));
            }
        }
        if rho.le(&Mag::from_u64(255).mul_two_exp(-8)) {
            // rho <= 255/256 < 1; tail <= |term| * rho... starting at term(n):
            // term(n) itself is the first unsummed term, tail <= |term|/(1-rho)
            let one_minus_rho_inv = geometric_factor(&rho);
            let tail = term.mag_upper().mul(&one_minus_rho_inv);
            if tail.le(&tol) {
                sum = sum.add_err(&tail);
                return Ok(sum.with_prec(prec));
            }
        }
        if n > 200_000 {
            return Err(crate::Error::InsufficientPrecision(
                "hypergeometric tail bound failed to close".into(),
            ));
        }
    }
}

/// Upper bound for 1/(1-rho) given rho <= 255/256.
fn geometric_factor(rho: &Mag) -> Mag {
    // find k with rho <= 1 - 2^-k by doubling; crude but safe
    for k in 1..=8 {
        let bound = Mag::from_u64((1u64 << k) - 1).mul_two_exp(-k);
        if rho.le(&bound) {
            return Mag::two_exp(k);
        }
    }
    Mag::two_exp(8)
}

/// Rigorous 2F1(a,b;c;z) for |z| away from 1.
pub fn hyp2f1(p: &HGParams, z: &AC, prec: u32) -> crate::Result<AC> {
    eval_pfq(
        &[p.a.clone(), p.b.clone()],
        std::slice::from_ref(&p.c),
        z,
        prec,
    )
}

/// Rigorous 3F2 with three numerator and two denominator parameters.
pub fn hyp3f2(nums: &[Rat; 3], dens: &[Rat; 2], z: &AC, prec: u32) -> crate::Result<AC> {
    eval_pfq(nums, dens, z, prec)
}

/// 2F1 at an exact rational argument, routing arguments near or beyond the
/// convergence boundary on the negative axis through the Pfaff
/// transformation F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1)).
pub fn hyp2f1_rat(p: &HGParams, z: &Rat, prec: u32) -> crate::Result<AC> {
    let three_quarters = Rat::new(BigInt::from(3), BigInt::from(4));
    if z.abs() <= three_quarters {
        return hyp2f1(p, &AC::from_rational(z, prec + 16), prec);
    }
    if z.is_negative() {
        // z/(z-1) lies in (0,1) and below |z|/(|z|+1) < 1
        let zt = z / (z - Rat::one());
        let inner = HGParams::new(p.a.clone(), &p.c - &p.b, p.c.clone());
        let f = hyp2f1(&inner, &AC::from_rational(&zt, prec + 16), prec + 16)?;
        let base = Rat::one() - z;
        let pw = power_rational(&base, &-p.a.clone(), prec + 16)?;
        return Ok(f.mul(&pw).with_prec(prec));
    }
    Err(crate::Error::OutOfDomain(
        "rational argument too close to 1 for direct or Pfaff summation".into(),
    ))
}

/// x^e for positive rational x and rational exponent e, as a real enclosure.
pub fn power_rational(x: &Rat, e: &Rat, prec: u32) -> crate::Result<AC> {
    if !x.is_positive() {
        return Err(crate::Error::OutOfDomain("power of a non-positive base".into()));
    }
    let p = e
        .numer()
        .to_i64()
        .ok_or_else(|| crate::Error::InvalidInput("exponent numerator too large".into()))?;
    let q = e
        .denom()
        .to_u32()
        .ok_or_else(|| crate::Error::InvalidInput("exponent denominator too large".into()))?;
    rational_pow(x, p, q, prec)
}

/// d/dz [2F1(a,b;c;z)^2] = 2 F(z) * (ab/c) * 2F1(a+1, b+1; c+1; z).
pub fn d_dz_f_squared(p: &HGParams, z: &AC, prec: u32) -> crate::Result<AC> {
    let work = prec + 16;
    let f = hyp2f1(p, z, work)?;
    let shifted = HGParams::new(
        &p.a + Rat::one(),
        &p.b + Rat::one(),
        &p.c + Rat::one(),
    );
    let fp = hyp2f1(&shifted, z, work)?;
    let scale = Rat::from_integer(BigInt::from(2)) * &p.a * &p.b / &p.c;
    Ok(f.mul(&fp).mul_rational(&scale).with_prec(prec))
}

/// d/dz [2F1(a,b;c;z)^2] at an exact rational argument, routed through the
/// same Pfaff fallback as `hyp2f1_rat` so negative arguments beyond the
/// direct summation radius remain usable.
pub fn d_dz_f_squared_rat(p: &HGParams, z: &Rat, prec: u32) -> crate::Result<AC> {
    let work = prec + 16;
    let f = hyp2f1_rat(p, z, work)?;
    let shifted = HGParams::new(&p.a + Rat::one(), &p.b + Rat::one(), &p.c + Rat::one());
    let fp = hyp2f1_rat(&shifted, z, work)?;
    let scale = Rat::from_integer(BigInt::from(2)) * &p.a * &p.b / &p.c;
    Ok(f.mul(&fp).mul_rational(&scale).with_prec(prec))
}

/// The transformation identities exercised by the verification suites.
#[derive(Clone, Debug)]
pub enum Transformation {
    /// F(a,b;c;z) = (1-z)^(c-a-b) F(c-a, c-b; c; z)
    Euler { params: HGParams, z: Rat },
    /// F(a,b;c;z) = (1-z)^(-a) F(a, c-b; c; z/(z-1))
    Pfaff { params: HGParams, z: Rat },
    /// F(a,b;a+b+1/2;z)^2 = 3F2(2a, 2b, a+b; 2a+2b, a+b+1/2; z)
    Clausen { a: Rat, b: Rat, z: Rat },
    /// (t/(t-1))^(1/4) F(1/8,3/8;1;1/v) = F(1/4,1/4;1;1/t), v and t linked
    /// by the quartic covering relation
    Relation2A { v: AC, t: AC },
    /// (u/(u-1))^(1/3) F(1/6,1/3;1;1/w) = F(1/3,1/3;1;1/u), w and u linked
    /// by the cubic covering relation
    Relation3A { w: AC, u: AC },
}

/// Enclosure of the identity residual (left minus right); a passing check
/// has a residual containing zero with small magnitude.
pub fn check_transformation(t: &Transformation, prec: u32) -> crate::Result<AC> {
    let work = prec + 16;
    match t {
        Transformation::Euler { params, z } => {
            let lhs = hyp2f1_rat(params, z, work)?;
            let e = &params.c - &params.a - &params.b;
            let flipped = HGParams::new(&params.c - &params.a, &params.c - &params.b, params.c.clone());
            let rhs = hyp2f1_rat(&flipped, z, work)?
                .mul(&power_rational(&(Rat::one() - z), &e, work)?);
            Ok(lhs.sub(&rhs).with_prec(prec))
        }
        Transformation::Pfaff { params, z } => {
            let lhs = hyp2f1_rat(params, z, work)?;
            let zt = z / (z - Rat::one());
            let inner = HGParams::new(params.a.clone(), &params.c - &params.b, params.c.clone());
            let rhs = hyp2f1_rat(&inner, &zt, work)?
                .mul(&power_rational(&(Rat::one() - z), &-params.a.clone(), work)?);
            Ok(lhs.sub(&rhs).with_prec(prec))
        }
        Transformation::Clausen { a, b, z } => {
            let half = Rat::new(BigInt::one(), BigInt::from(2));
            let c = a + b + &half;
            let f = hyp2f1_rat(&HGParams::new(a.clone(), b.clone(), c.clone()), z, work)?;
            let rhs = eval_pfq(
                &[
                    a * Rat::from_integer(BigInt::from(2)),
                    b * Rat::from_integer(BigInt::from(2)),
                    a + b,
                ],
                &[(a + b) * Rat::from_integer(BigInt::from(2)), c],
                &AC::from_rational(z, work),
                work,
            )?;
            Ok(f.mul(&f).sub(&rhs).with_prec(prec))
        }
        Transformation::Relation2A { v, t } => {
            let quarter_root = covering_root(t, 4, work)?;
            let f = hyp2f1(
                &HGParams::new(rq(1, 8), rq(3, 8), rq(1, 1)),
                &v.with_prec(work).inv()?,
                work,
            )?;
            let g = hyp2f1(
                &HGParams::new(rq(1, 4), rq(1, 4), rq(1, 1)),
                &t.with_prec(work).inv()?,
                work,
            )?;
            Ok(quarter_root.mul(&f).sub(&g).with_prec(prec))
        }
        Transformation::Relation3A { w, u } => {
            let cube_root = covering_root(u, 3, work)?;
            let f = hyp2f1(
                &HGParams::new(rq(1, 6), rq(1, 3), rq(1, 1)),
                &w.with_prec(work).inv()?,
                work,
            )?;
            let g = hyp2f1(
                &HGParams::new(rq(1, 3), rq(1, 3), rq(1, 1)),
                &u.with_prec(work).inv()?,
                work,
            )?;
            Ok(cube_root.mul(&f).sub(&g).with_prec(prec))
        }
    }
}

fn rq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Principal real q-th root of x/(x-1) (requires the ratio to be a positive
/// real enclosure, which holds for every sample exercised).
fn covering_root(x: &AC, q: u32, prec: u32) -> crate::Result<AC> {
    let one = AC::from_i64(1, prec);
    let ratio = x.with_prec(prec).div(&x.sub(&one))?;
    real_nth_root(&ratio, q)
}
