//! Rigorous enclosures of pi.
//!
//! The production path sums the fast hypergeometric-type series
//! `426880 sqrt(10005) / pi = sum_n (6n)!/((3n)! n!^3) (545140134 n + 13591409)
//! (-640320^3)^(-n)` by binary splitting with an explicit geometric tail
//! bound. An independent Machin arctangent oracle
//! (`pi = 16 atan(1/5) - 4 atan(1/239)`) is evaluated once per process and
//! the two enclosures are required to overlap before any cached value is
//! served.

use crate::approx::AC;
use crate::dyadic::{Dyadic, Mag};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

const A_LIN: i64 = 545140134;
const B_LIN: i64 = 13591409;

fn c3() -> BigInt {
    BigInt::from(640320i64).pow(3)
}

/// Term-ratio numerator/denominator of the series (ratio of consecutive
/// coefficient terms, excluding the linear factor).
fn split_num(n: u64) -> BigInt {
    let n = n as i64;
    -BigInt::from(24) * (6 * n - 5) * (2 * n - 1) * (6 * n - 1)
}

fn split_den(n: u64) -> BigInt {
    BigInt::from(n).pow(3) * c3()
}

/// Binary splitting over [a, b): returns (P, Q, T) with
/// T/Q = sum_{n=a}^{b-1} (B + A n) prod_{k=a}^{n} num(k)/den(k),
/// where num(0)/den(0) = 1.
fn split(a: u64, b: u64) -> (BigInt, BigInt, BigInt) {
    if b - a == 1 {
        let (p, q) = if a == 0 {
            (BigInt::one(), BigInt::one())
        } else {
            (split_num(a), split_den(a))
        };
        let t = (BigInt::from(B_LIN) + BigInt::from(A_LIN) * a) * &p;
        (p, q, t)
    } else {
        let m = (a + b) / 2;
        let (pl, ql, tl) = split(a, m);
        let (pr, qr, tr) = split(m, b);
        (&pl * &pr, &ql * &qr, tl * &qr + pl * tr)
    }
}

/// Enclosure of pi at roughly `prec` bits via the fast series.
pub fn chudnovsky_pi(prec: u32) -> AC {
    let work = prec + 32;
    // each term gains log2(640320^3 / 1728) ~ 47.11 bits
    let n_terms = (work as u64) / 47 + 3;
    let (p, q, t) = split(0, n_terms);
    // tail: |r(N-1)| = |P|/Q; |term(n)| <= (B + A n)|r(N-1)| rho^(n-N+1)
    // with rho = 1728/640320^3 and (B + A n) <= (B + A N) 2^(n-N),
    // so the tail is at most (B + A N)|r(N-1)| * 2 rho / (1 - 2 rho).
    let r_last = BigRational::new(p.abs(), q.clone()).abs();
    let rho = BigRational::new(BigInt::from(1728), c3());
    let lin = BigRational::from_integer(BigInt::from(B_LIN) + BigInt::from(A_LIN) * n_terms);
    let tail = lin * r_last * BigRational::from_integer(BigInt::from(4)) * rho;
    let sum = AC::from_rational(&BigRational::new(t, q), work)
        .add_err(&Mag::from_rational(&tail));
    let root = AC::from_i64(10005, work).sqrt().expect("sqrt of positive integer");
    let num = root.mul_i64(426880);
    num.div(&sum).expect("series sum is nonzero").with_prec(prec)
}

/// Enclosure of pi via `16 atan(1/5) - 4 atan(1/239)` in scaled-integer
/// arithmetic. Independent of the fast series; used as a consistency oracle.
pub fn machin_pi(prec: u32) -> AC {
    let s = prec as u64 + 24;
    let scale = BigInt::one() << s;
    let acc = atan_inv_scaled_times(16, 5, &scale) - atan_inv_scaled_times(4, 239, &scale);
    let value = Dyadic::new(acc, -(s as i64));
    // each of the two series accrues at most one unit of truncation error
    // per term plus one omitted-tail unit; series lengths are below s
    let err = Mag::from_u64(40 * (s / 4 + 2)).mul_two_exp(-(s as i64));
    AC { re: value, im: Dyadic::zero(), err, prec }.with_prec(prec)
}

/// floor(scale * k * atan(1/x)) up to bounded truncation error.
fn atan_inv_scaled_times(k: u64, x: u64, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut p = scale * k / BigInt::from(x);
    let mut acc = BigInt::zero();
    let mut n: u64 = 0;
    while !p.is_zero() {
        let term = &p / BigInt::from(2 * n + 1);
        if n % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        p = &p / &x2;
        n += 1;
    }
    acc
}

static PI_CACHE: Lazy<Mutex<Option<AC>>> = Lazy::new(|| Mutex::new(None));
static CROSS_CHECKED: Lazy<()> = Lazy::new(|| {
    let a = chudnovsky_pi(256);
    let b = machin_pi(256);
    assert!(
        a.overlaps(&b),
        "pi self-check failed: fast-series and arctangent enclosures disagree"
    );
});

/// Cached enclosure of pi at `prec` bits. The first call cross-checks the
/// fast series against the arctangent oracle.
pub fn pi_enclosure(prec: u32) -> AC {
    Lazy::force(&CROSS_CHECKED);
    let mut guard = PI_CACHE.lock().unwrap();
    if let Some(cached) = guard.as_ref() {
        if cached.prec >= prec {
            return cached.with_prec(prec);
        }
    }
    let fresh = chudnovsky_pi(prec);
    *guard = Some(fresh.clone());
    fresh
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifty_digits() {
        let p = pi_enclosure(256);
        assert_eq!(
            p.re.to_decimal(50),
            "3.14159265358979323846264338327950288419716939937510"
        );
        assert!(p.err.le_two_exp(-250));
    }

    #[test]
    fn machin_matches_fast_series() {
        let a = chudnovsky_pi(400);
        let b = machin_pi(400);
        assert!(a.overlaps(&b));
        assert!(b.err.le_two_exp(-380));
    }

    #[test]
    fn high_precision_contains_low() {
        let low = chudnovsky_pi(192);
        let high = chudnovsky_pi(768);
        // midpoint of the high-precision run lies inside the low enclosure
        let d = low.sub(&high);
        assert!(d.contains_zero());
    }
}
