//! Arbitrary-precision complex values with a rigorous absolute error radius.
//!
//! An `ApproxComplex` stores a dyadic midpoint (re, im) and a single radius
//! `err` bounding the distance to the true value in the complex plane. Every
//! operation produces a radius that dominates propagated input error plus its
//! own rounding error, so enclosures remain valid under composition.

use crate::dyadic::{Dyadic, Mag};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug)]
pub struct ApproxComplex {
    pub re: Dyadic,
    pub im: Dyadic,
    pub err: Mag,
    pub prec: u32,
}

pub type AC = ApproxComplex;

impl ApproxComplex {
    pub fn zero(prec: u32) -> Self {
        AC { re: Dyadic::zero(), im: Dyadic::zero(), err: Mag::zero(), prec }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        AC { re: Dyadic::from_i64(v), im: Dyadic::zero(), err: Mag::zero(), prec }
    }

    pub fn from_dyadic(re: Dyadic, prec: u32) -> Self {
        AC { re, im: Dyadic::zero(), err: Mag::zero(), prec }
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        let (re, err) = Dyadic::from_rational(r, prec);
        AC { re, im: Dyadic::zero(), err, prec }
    }

    pub fn from_parts(re: &BigRational, im: &BigRational, prec: u32) -> Self {
        let (r, e1) = Dyadic::from_rational(re, prec);
        let (i, e2) = Dyadic::from_rational(im, prec);
        AC { re: r, im: i, err: e1.add(&e2), prec }
    }

    pub fn i(prec: u32) -> Self {
        AC { re: Dyadic::zero(), im: Dyadic::from_i64(1), err: Mag::zero(), prec }
    }

    fn round(mut self) -> Self {
        let (re, e1) = self.re.round_to(self.prec);
        let (im, e2) = self.im.round_to(self.prec);
        self.re = re;
        self.im = im;
        self.err = self.err.add(&e1).add(&e2);
        self
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        let mut c = self.clone();
        c.prec = prec;
        c.round()
    }

    pub fn add_err(mut self, e: &Mag) -> Self {
        self.err = self.err.add(e);
        self
    }

    pub fn neg(&self) -> Self {
        AC { re: self.re.neg(), im: self.im.neg(), err: self.err, prec: self.prec }
    }

    pub fn conj(&self) -> Self {
        AC { re: self.re.clone(), im: self.im.neg(), err: self.err, prec: self.prec }
    }

    pub fn add(&self, o: &AC) -> Self {
        AC {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
            err: self.err.add(&o.err),
            prec: self.prec.min(o.prec),
        }
        .round()
    }

    pub fn sub(&self, o: &AC) -> Self {
        self.add(&o.neg())
    }

    /// Upper bound on |midpoint| (uses |re| + |im| >= |mid|).
    pub fn mid_mag(&self) -> Mag {
        Mag::from_dyadic(&self.re).add(&Mag::from_dyadic(&self.im))
    }

    /// Upper bound on |true value|.
    pub fn mag_upper(&self) -> Mag {
        self.mid_mag().add(&self.err)
    }

    /// Lower bound on |true value| as a dyadic; None if the enclosure may
    /// contain zero. Uses |mid| >= max(|re|, |im|).
    pub fn mag_lower(&self) -> Option<Dyadic> {
        let m = if self.re.abs().cmp_value(&self.im.abs()) == std::cmp::Ordering::Less {
            self.im.abs()
        } else {
            self.re.abs()
        };
        let lb = m.sub(&self.err.to_dyadic());
        if lb.is_negative() || lb.is_zero() {
            None
        } else {
            Some(lb)
        }
    }

    /// True if the enclosure certainly contains zero: |mid|^2 <= err^2,
    /// compared exactly in dyadic arithmetic.
    pub fn contains_zero(&self) -> bool {
        let m2 = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let e = self.err.to_dyadic();
        m2.cmp_value(&e.mul(&e)) != std::cmp::Ordering::Greater
    }

    pub fn mul(&self, o: &AC) -> Self {
        let prec = self.prec.min(o.prec);
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        let ea = self.err;
        let eb = o.err;
        let prop = self
            .mid_mag()
            .mul(&eb)
            .add(&o.mid_mag().mul(&ea))
            .add(&ea.mul(&eb));
        AC { re, im, err: prop, prec }.round()
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        AC {
            re: self.re.mul_i64(k),
            im: self.im.mul_i64(k),
            err: self.err.mul(&Mag::from_u64(k.unsigned_abs())),
            prec: self.prec,
        }
        .round()
    }

    /// Multiplies by i (exact rotation).
    pub fn mul_i(&self) -> Self {
        AC { re: self.im.neg(), im: self.re.clone(), err: self.err, prec: self.prec }
    }

    pub fn mul_two_exp(&self, e: i64) -> Self {
        AC {
            re: self.re.shl(e),
            im: self.im.shl(e),
            err: self.err.mul_two_exp(e),
            prec: self.prec,
        }
    }

    /// Multiplies by an exact rational.
    pub fn mul_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return AC::zero(self.prec);
        }
        let num = Dyadic::from_bigint(r.numer().clone());
        let den = Dyadic::from_bigint(r.denom().clone());
        let prec = self.prec;
        let (re, e1) = self.re.mul(&num).div(&den, prec + 8);
        let (im, e2) = self.im.mul(&num).div(&den, prec + 8);
        let scale = Mag::from_rational(&r.abs());
        AC { re, im, err: self.err.mul(&scale).add(&e1).add(&e2), prec }.round()
    }

    /// Reciprocal 1/z. Errors if the enclosure may contain zero.
    pub fn inv(&self) -> Result<Self, crate::Error> {
        let lb = self
            .mag_lower()
            .ok_or_else(|| crate::Error::DivisionByZero("enclosure contains zero".into()))?;
        let prec = self.prec;
        let d = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let (re, e1) = self.re.div(&d, prec + 8);
        let (im, e2) = self.im.neg().div(&d, prec + 8);
        // |1/ztilde - 1/z| = |z - ztilde| / (|z| |ztilde|) <= err / lb^2
        let (inv_lb, _) = Dyadic::one().div(&lb, 64);
        let inv_lb = Mag::from_dyadic(&inv_lb).add(&Mag::two_exp(inv_lb.mag_exp_upper() - 60));
        let prop = self.err.mul(&inv_lb).mul(&inv_lb);
        Ok(AC { re, im, err: prop.add(&e1).add(&e2), prec }.round())
    }

    pub fn div(&self, o: &AC) -> Result<Self, crate::Error> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn powi(&self, k: i64) -> Result<Self, crate::Error> {
        if k < 0 {
            return self.inv()?.powi(-k);
        }
        let mut acc = AC::from_i64(1, self.prec);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Complex exponential. The input is scaled by 2^-k into |z| <= 1/4,
    /// summed by Taylor series with a geometric tail bound, then squared k
    /// times; all error propagation happens in enclosure arithmetic.
    pub fn exp(&self) -> Self {
        let prec = self.prec;
        let m = self.mag_upper();
        // choose k with |z| / 2^k <= 1/4
        let mut k: i64 = 0;
        let mut mm = m;
        while !mm.le_two_exp(-2) {
            mm = mm.mul_two_exp(-1);
            k += 1;
        }
        let work = prec + 2 * k as u32 + 32;
        let z = self.with_prec(work).mul_two_exp(-k);
        let mut sum = AC::from_i64(1, work);
        let mut term = AC::from_i64(1, work);
        let mut n: i64 = 1;
        loop {
            term = term.mul(&z);
            // divide by n exactly via rational scale
            term = term.mul_rational(&BigRational::new(BigInt::from(1), BigInt::from(n)));
            sum = sum.add(&term);
            let tb = term.mag_upper();
            if tb.le_two_exp(-(work as i64 + 4)) {
                // remaining tail <= |term| * sum_{j>=1} (1/4)^j * ... <= |term|
                sum = sum.add_err(&tb);
                break;
            }
            n += 1;
        }
        for _ in 0..k {
            sum = sum.mul(&sum);
        }
        sum.with_prec(prec)
    }

    /// Principal square root. Supports enclosures containing zero (returns a
    /// zero-centered enclosure of radius sqrt(|z| upper bound)); otherwise
    /// requires the midpoint square root to have positive real part, which
    /// holds whenever the enclosure stays off the negative real axis.
    pub fn sqrt(&self) -> Result<Self, crate::Error> {
        let prec = self.prec;
        if self.mag_lower().is_none() {
            // enclosure may contain 0: |sqrt z| <= sqrt(|z|)
            let r = self.mag_upper().sqrt();
            return Ok(AC { re: Dyadic::zero(), im: Dyadic::zero(), err: r, prec });
        }
        let work = prec + 16;
        // midpoint square root by the half-angle recipe
        let d = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let (r, _) = d.sqrt(work + 8);
        let (w_re, w_im) = if !self.re.is_negative() {
            // u = sqrt((r+re)/2), v = im/(2u)
            let (u, _) = r.add(&self.re).shl(-1).sqrt(work);
            if u.is_zero() {
                return Err(crate::Error::Numeric("sqrt: degenerate midpoint".into()));
            }
            let (v, _) = self.im.shl(-1).div(&u, work);
            (u, v)
        } else {
            // v = sign(im) * sqrt((r-re)/2), u = im/(2v)
            let (s, _) = r.sub(&self.re).shl(-1).sqrt(work);
            let v = if self.im.is_negative() { s.neg() } else { s };
            if v.is_zero() {
                return Err(crate::Error::BranchCut(
                    "sqrt: enclosure touches the negative real axis".into(),
                ));
            }
            let (u, _) = self.im.shl(-1).div(&v, work);
            (u, v)
        };
        let w = AC { re: w_re, im: w_im, err: Mag::zero(), prec: work };
        // residual-based error: |w - sqrt(z)| <= (|w^2 - ztilde| + err_z) / Re(w)
        // valid since both w and the true root lie in the closed right half
        // plane and Re(w) > 0 bounds |w + sqrt(z)| from below.
        let mid = AC { re: self.re.clone(), im: self.im.clone(), err: Mag::zero(), prec: work };
        let resid = w.mul(&w).sub(&mid).mag_upper();
        if w.re.is_negative() || w.re.is_zero() {
            return Err(crate::Error::BranchCut(
                "sqrt: midpoint root not in the open right half plane".into(),
            ));
        }
        let re_low = w.re.sub(&Mag::two_exp(w.re.mag_exp_upper() - work as i64 + 8).to_dyadic());
        if re_low.is_negative() || re_low.is_zero() {
            return Err(crate::Error::Numeric("sqrt: precision exhausted".into()));
        }
        let num = resid.add(&self.err).to_dyadic();
        let (bound, e) = num.div(&re_low, 64);
        let err = Mag::from_dyadic(&bound).add(&e);
        Ok(AC { re: w.re, im: w.im, err, prec }.round())
    }

    /// Real part as a real enclosure (half-width err carries over).
    pub fn real_part(&self) -> AC {
        AC { re: self.re.clone(), im: Dyadic::zero(), err: self.err, prec: self.prec }
    }

    pub fn imag_part(&self) -> AC {
        AC { re: self.im.clone(), im: Dyadic::zero(), err: self.err, prec: self.prec }
    }

    /// Whether this enclosure certainly overlaps another (their midpoint
    /// distance is at most the sum of radii).
    pub fn overlaps(&self, o: &AC) -> bool {
        let d = AC {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
            err: self.err.add(&o.err),
            prec: self.prec.min(o.prec),
        };
        d.contains_zero()
    }

    /// Whether a given exact point (re, im rational) lies within the enclosure.
    pub fn contains_point(&self, re: &BigRational, im: &BigRational) -> bool {
        let prec = self.prec + 64;
        let p = AC::from_parts(re, im, prec);
        let d = AC {
            re: self.re.sub(&p.re),
            im: self.im.sub(&p.im),
            err: self.err.add(&p.err),
            prec,
        };
        d.contains_zero()
    }

    pub fn to_string_decimal(&self, digits: usize) -> String {
        let r = self.re.to_decimal(digits);
        if self.im.is_zero() {
            format!("{r} (radius 2^{})", mag_exp_str(&self.err))
        } else {
            let i = self.im.to_decimal(digits);
            format!("{r} + {i}i (radius 2^{})", mag_exp_str(&self.err))
        }
    }
}

fn mag_exp_str(m: &Mag) -> String {
    if m.is_zero() {
        "-inf".into()
    } else {
        format!("{}", m.to_dyadic().mag_exp_upper())
    }
}

/// Real enclosure of x^(p/q) for an exact positive rational x.
/// For negative x, only odd q is allowed (real root of the same sign).
pub fn rational_pow(x: &BigRational, p: i64, q: u32, prec: u32) -> Result<AC, crate::Error> {
    assert!(q >= 1);
    if x.is_zero() {
        if p > 0 {
            return Ok(AC::zero(prec));
        }
        return Err(crate::Error::DivisionByZero("0 to a nonpositive power".into()));
    }
    let negative = x.is_negative();
    if negative && q % 2 == 0 {
        return Err(crate::Error::BranchCut("even root of a negative rational".into()));
    }
    let y = if p >= 0 {
        x.abs().pow(p as i32)
    } else {
        BigRational::from_integer(BigInt::from(1)) / x.abs().pow((-p) as i32)
    };
    let (d, e) = Dyadic::from_rational(&y, (prec + 8) * q);
    let base = AC { re: d, im: Dyadic::zero(), err: e, prec: prec + 8 };
    let root = real_nth_root(&base, q)?;
    let sign = if negative && p % 2 != 0 { -1 } else { 1 };
    Ok(root.mul_i64(sign).with_prec(prec))
}

/// Real q-th root of a real positive enclosure.
pub fn real_nth_root(x: &AC, q: u32) -> Result<AC, crate::Error> {
    assert!(q >= 1);
    if q == 1 {
        return Ok(x.clone());
    }
    let lb = x
        .mag_lower()
        .ok_or_else(|| crate::Error::Numeric("nth_root: enclosure contains zero".into()))?;
    if x.re.is_negative() {
        return Err(crate::Error::BranchCut("nth_root of negative enclosure".into()));
    }
    let prec = x.prec;
    let (r, e_ulp) = x.re.nth_root(q, prec + 8);
    // derivative bound: |x^(1/q) - y^(1/q)| <= |x - y| * ub^(1/q) / (q * lb)
    let (rub, _) = x.mag_upper().to_dyadic().nth_root(q, 64);
    let rub = Mag::from_dyadic(&rub).add(&Mag::two_exp(rub.mag_exp_upper() - 60));
    let (inv_lb, _) = Dyadic::one().div(&lb, 64);
    let inv_lb = Mag::from_dyadic(&inv_lb).add(&Mag::two_exp(inv_lb.mag_exp_upper() - 60));
    let prop = x.err.mul(&rub).mul(&inv_lb); // dividing by q only shrinks it
    Ok(AC { re: r, im: Dyadic::zero(), err: prop.add(&e_ulp), prec }.round())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn interval_mul_propagation() {
        // (1 +/- 2^-100)^2 should have err <= 3*2^-100 + rounding
        let mut x = AC::from_i64(1, 256);
        x.err = Mag::two_exp(-100);
        let y = x.mul(&x);
        assert!(y.err.le(&Mag::two_exp(-98)));
        assert!(Mag::two_exp(-100).le(&y.err));
    }

    #[test]
    fn exp_known_value() {
        // e^1 = 2.718281828...
        let x = AC::from_i64(1, 128);
        let e = x.exp();
        assert!(e.contains_point(
            &rat(2718281828, 1000000000),
            &rat(0, 1)
        ) == false); // the truncated decimal is NOT e exactly
        let s = e.re.to_decimal(9);
        assert_eq!(s, "2.718281828");
        assert!(e.err.le_two_exp(-120));
    }

    #[test]
    fn exp_imaginary_unit_circle() {
        // |e^(i)| = 1
        let z = AC::i(192);
        let e = z.exp();
        let m = e.mul(&e.conj());
        assert!(m.contains_point(&rat(1, 1), &rat(0, 1)));
    }

    #[test]
    fn sqrt_of_two() {
        let x = AC::from_i64(2, 128);
        let s = x.sqrt().unwrap();
        let sq = s.mul(&s);
        assert!(sq.contains_point(&rat(2, 1), &rat(0, 1)));
        assert!(s.err.le_two_exp(-110));
    }

    #[test]
    fn sqrt_of_i_principal() {
        let z = AC::i(128);
        let s = z.sqrt().unwrap();
        assert!(!s.re.is_negative());
        let sq = s.mul(&s);
        assert!(sq.contains_point(&rat(0, 1), &rat(1, 1)));
    }

    #[test]
    fn div_round_trip() {
        let a = AC::from_rational(&rat(7, 3), 192);
        let b = AC::from_rational(&rat(-2, 5), 192);
        let q = a.div(&b).unwrap();
        let back = q.mul(&b);
        assert!(back.contains_point(&rat(7, 3), &rat(0, 1)));
    }

    #[test]
    fn rational_pow_cube_root() {
        // (-2)^(1/3) = -1.2599...
        let v = rational_pow(&rat(-2, 1), 1, 3, 128).unwrap();
        assert!(v.re.is_negative());
        let c = v.mul(&v).mul(&v);
        assert!(c.contains_point(&rat(-2, 1), &rat(0, 1)));
    }

    #[test]
    fn pow_rational_pfaff_constant() {
        // 2^(-1/2) squared = 1/2
        let v = rational_pow(&rat(2, 1), -1, 2, 160).unwrap();
        let s = v.mul(&v);
        assert!(s.contains_point(&rat(1, 2), &rat(0, 1)));
    }
}
