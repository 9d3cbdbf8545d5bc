//! Recognition of real numbers as algebraic numbers of degree at most 2 by
//! 3-dimensional integer lattice reduction.
//!
//! A candidate minimal polynomial p x^2 + q x + r is extracted from an
//! LLL-reduced basis of the lattice spanned by (1, 0, round(S x^2)),
//! (0, 1, round(S x)), (0, 0, S) with scale S = 2^(P/2), and accepted only
//! when the rigorous enclosure of |p x^2 + q x + r| is below 2^(-P/4).

use crate::algebraic::AlgebraicNumber;
use crate::approx::AC;
use crate::dyadic::Mag;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

type Vec3 = [BigInt; 3];

fn dot(a: &Vec3, b: &Vec3) -> BigInt {
    let mut s = BigInt::zero();
    for i in 0..3 {
        s += &a[i] * &b[i];
    }
    s
}

/// round(n/d) with d > 0, ties toward +inf (floor of n/d + 1/2)
fn round_quot(n: &BigInt, d: &BigInt) -> BigInt {
    let num = BigInt::from(2) * n + d;
    let den = BigInt::from(2) * d;
    // floor division
    let q = &num / &den;
    let r = &num - &q * &den;
    if r.is_negative() {
        q - 1
    } else {
        q
    }
}

/// Lovasz-reduced basis with delta = 3/4 via the all-integer algorithm
/// (determinant/lambda state, exact divisions, no rational arithmetic).
fn lll_reduce(mut b: Vec<Vec3>) -> Vec<Vec3> {
    let n = b.len();
    // D[m] = Gram determinant of the first m vectors, D[0] = 1;
    // L[i][j] = D[j+1] * mu[i][j] for j < i (all integers)
    let mut d = vec![BigInt::from(1); n + 1];
    let mut l = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut u = dot(&b[i], &b[j]);
            for t in 0..j {
                u = (&d[t + 1] * &u - &l[i][t] * &l[j][t]) / &d[t];
            }
            if j < i {
                l[i][j] = u;
            } else {
                d[i + 1] = u;
            }
        }
    }
    let redi = |b: &mut Vec<Vec3>, l: &mut Vec<Vec<BigInt>>, d: &Vec<BigInt>, k: usize, j: usize| {
        let q = round_quot(&l[k][j], &d[j + 1]);
        if !q.is_zero() {
            for t in 0..3 {
                let v = &b[k][t] - &q * &b[j][t];
                b[k][t] = v;
            }
            for t in 0..j {
                let v = &l[k][t] - &q * &l[j][t];
                l[k][t] = v;
            }
            l[k][j] = &l[k][j] - &q * &d[j + 1];
        }
    };
    let mut k = 1usize;
    let mut guard = 0u64;
    while k < n {
        guard += 1;
        assert!(guard < 1_000_000, "lattice reduction failed to terminate");
        redi(&mut b, &mut l, &d, k, k - 1);
        let lam = l[k][k - 1].clone();
        if BigInt::from(4) * &d[k + 1] * &d[k - 1] < BigInt::from(3) * &d[k] * &d[k] - BigInt::from(4) * &lam * &lam
        {
            // swap b[k-1], b[k] and fix up the integer state
            b.swap(k, k - 1);
            for j in 0..k.saturating_sub(1) {
                let tmp = l[k][j].clone();
                l[k][j] = l[k - 1][j].clone();
                l[k - 1][j] = tmp;
            }
            let bnew = (&d[k - 1] * &d[k + 1] + &lam * &lam) / &d[k];
            for i in k + 1..n {
                let t = l[i][k].clone();
                l[i][k] = (&l[i][k - 1] * &d[k + 1] - &lam * &t) / &d[k];
                l[i][k - 1] = (&bnew * &t + &lam * &l[i][k]) / &d[k + 1];
            }
            d[k] = bnew;
            k = k.max(2) - 1;
        } else {
            for j in (0..k.saturating_sub(1)).rev() {
                redi(&mut b, &mut l, &d, k, j);
            }
            k += 1;
        }
    }
    b
}

fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// Attempts to recognize the real enclosure `x` as a root of an integer
/// quadratic with coefficient height at most `max_height`. Returns Ok(None)
/// when no candidate passes the acceptance threshold; errs when the
/// enclosure radius is too large to decide at the implied threshold.
pub fn recognize_quadratic(
    x: &AC,
    max_height: &BigInt,
) -> crate::Result<Option<AlgebraicNumber>> {
    let p_bits = x.prec as i64;
    // precision gate: candidate evaluation error is about H(2|x|+1) * err,
    // which must stay below the acceptance threshold 2^(-P/4)
    let h_mag = Mag::from_bigint_mag(max_height, 0);
    let slack = h_mag
        .mul(&x.mag_upper().mul_u64(2).add(&Mag::from_u64(1)))
        .mul(&x.err);
    if !slack.le_two_exp(-p_bits / 4 - 2) {
        return Err(crate::Error::InsufficientPrecision(
            "enclosure radius too large for the requested height".into(),
        ));
    }
    let s_bits = (p_bits / 2) as u64;
    let x2 = x.mul(x);
    let sx = scaled_round(&x.re, s_bits);
    let sx2 = scaled_round(&x2.re, s_bits);
    let s = BigInt::from(1) << s_bits;
    let basis = vec![
        [BigInt::from(1), BigInt::zero(), sx2],
        [BigInt::zero(), BigInt::from(1), sx],
        [BigInt::zero(), BigInt::zero(), s.clone()],
    ];
    let reduced = lll_reduce(basis);
    let mut best: Option<(AlgebraicNumber, Mag)> = None;
    for v in &reduced {
        let p = v[0].clone();
        let q = v[1].clone();
        // reconstruct r from the third coordinate
        let r_scaled = &v[2] - &p * scaled_round(&x2.re, s_bits) - &q * scaled_round(&x.re, s_bits);
        if (&r_scaled % &s) != BigInt::zero() {
            continue;
        }
        let r = r_scaled / &s;
        if p.is_zero() && q.is_zero() {
            continue;
        }
        if p.abs() > *max_height || q.abs() > *max_height || r.abs() > *max_height {
            continue;
        }
        // normalize sign and content
        let g = gcd_big(&gcd_big(&p, &q), &r);
        let (p, q, r) = if g.is_zero() {
            (p, q, r)
        } else {
            (&p / &g, &q / &g, &r / &g)
        };
        // rigorous acceptance: |p x^2 + q x + r| < 2^(-P/4)
        let val = x2
            .mul_rational(&BigRational::from_integer(p.clone()))
            .add(&x.mul_rational(&BigRational::from_integer(q.clone())))
            .add(&AC::from_rational(&BigRational::from_integer(r.clone()), x.prec));
        let bound = val.mag_upper();
        if !bound.le_two_exp(-p_bits / 4) {
            continue;
        }
        if let Some(alg) = quadratic_root_near(&p, &q, &r, x)? {
            match &best {
                Some((_, b)) if b.le(&bound) => {}
                _ => best = Some((alg, bound)),
            }
        }
    }
    Ok(best.map(|(a, _)| a))
}

fn scaled_round(d: &crate::dyadic::Dyadic, s_bits: u64) -> BigInt {
    let shifted = d.shl(s_bits as i64);
    let r = shifted.to_rational();
    round_quot(r.numer(), r.denom())
}

/// Converts integer quadratic coefficients to the root nearest the enclosure.
fn quadratic_root_near(
    p: &BigInt,
    q: &BigInt,
    r: &BigInt,
    x: &AC,
) -> crate::Result<Option<AlgebraicNumber>> {
    if p.is_zero() {
        if q.is_zero() {
            return Ok(None);
        }
        return Ok(Some(AlgebraicNumber::rational(BigRational::new(-r.clone(), q.clone()))));
    }
    let disc = q * q - BigInt::from(4) * p * r;
    if disc.is_negative() {
        return Ok(None); // complex roots cannot match a real enclosure
    }
    // find square-free D <= 10^4 with disc = m^2 D
    let mut found: Option<(BigInt, i64)> = None;
    if disc.is_zero() {
        found = Some((BigInt::zero(), 0));
    } else {
        for dcand in 1i64..=10_000 {
            let (s, f) = crate::algebraic::squarefree_decompose(dcand);
            if s != 1 || f != dcand {
                continue; // only square-free candidates
            }
            if (&disc % BigInt::from(dcand)) != BigInt::zero() {
                continue;
            }
            let quot: BigInt = &disc / BigInt::from(dcand);
            let root = quot.sqrt();
            if &root * &root == quot {
                found = Some((root, if dcand == 1 { 0 } else { dcand }));
                break;
            }
        }
    }
    let Some((m, dsf)) = found else {
        return Err(crate::Error::Unsupported(
            "discriminant has no square-free part below 10^4".into(),
        ));
    };
    let two_p = BigRational::from_integer(BigInt::from(2) * p);
    let base = BigRational::from_integer(-q.clone()) / &two_p;
    if dsf == 0 {
        // rational roots (-q ± m) / 2p: pick the one inside/nearest x
        let m_rat = BigRational::from_integer(m);
        for sign in [1i64, -1] {
            let root = &base + BigRational::from_integer(BigInt::from(sign)) * &m_rat / &two_p;
            let cand = AlgebraicNumber::rational(root);
            if encloses_candidate(x, &cand)? {
                return Ok(Some(cand));
            }
        }
        return Ok(None);
    }
    let surd = BigRational::from_integer(m) / &two_p;
    for sign in [1i64, -1] {
        let cand = AlgebraicNumber::new(
            base.clone(),
            &surd * BigRational::from_integer(BigInt::from(sign)),
            dsf,
        );
        if encloses_candidate(x, &cand)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

fn encloses_candidate(x: &AC, cand: &AlgebraicNumber) -> crate::Result<bool> {
    let e = cand.embed(x.prec + 32, 1)?;
    Ok(x.sub(&e).contains_zero())
}


#[cfg(test)]
mod perf_tests {
    use super::*;
    use crate::algebraic::rat;

    #[test]
    fn high_precision_recognition() {
        let target = AlgebraicNumber::new(
            rat(4110014282640000000i64 / 1000, 5363953714273),
            rat(-66461074000, 5363953714273),
            89,
        );
        let x = target.embed(1024, 1).unwrap();
        let t0 = std::time::Instant::now();
        let got = recognize_quadratic(&x, &num_bigint::BigInt::from(10u64).pow(30))
            .unwrap()
            .unwrap();
        eprintln!("1024-bit recognition took {:?}", t0.elapsed());
        assert_eq!(got, target);
    }
}
