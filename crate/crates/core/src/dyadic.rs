//! Exact dyadic numbers `m * 2^e` with arbitrary-size mantissa, plus a small
//! outward-rounded magnitude type used for rigorous error radii.
//!
//! `Dyadic` addition and multiplication are exact; precision is controlled
//! explicitly through [`Dyadic::round_to`], which reports the rounding error
//! it introduced. `Mag` is an unsigned magnitude `m * 2^e` with a 32-bit
//! mantissa whose every operation rounds up, so a `Mag` computed from upper
//! bounds is itself an upper bound.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact dyadic rational `mant * 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic { mant: BigInt::from(v), exp: 0 }.normalized()
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Dyadic { mant: v, exp: 0 }.normalized()
    }

    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Bit length of the mantissa (0 for zero).
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Strict upper bound exponent: |self| < 2^(this value). Zero gives i64::MIN.
    pub fn mag_exp_upper(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.bits() as i64
        }
    }

    /// Strips trailing zero bits off the mantissa.
    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    /// Exact sum. Mantissa growth is bounded by the exponent gap, so callers
    /// should round operands to a working precision first.
    pub fn add(&self, o: &Dyadic) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &o.mant << (o.exp - e) as u64;
        Dyadic { mant: a + b, exp: e }.normalized()
    }

    pub fn sub(&self, o: &Dyadic) -> Self {
        self.add(&o.neg())
    }

    /// Exact product.
    pub fn mul(&self, o: &Dyadic) -> Self {
        Dyadic { mant: &self.mant * &o.mant, exp: self.exp + o.exp }.normalized()
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Dyadic { mant: &self.mant * k, exp: self.exp }.normalized()
    }

    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Rounds the mantissa to at most `prec` bits, truncating toward zero.
    /// Returns the rounded value and a bound on the discarded amount.
    pub fn round_to(&self, prec: u32) -> (Dyadic, Mag) {
        let bits = self.bits();
        if bits <= prec as u64 {
            return (self.clone(), Mag::zero());
        }
        let s = bits - prec as u64;
        let (sign, mag) = (self.mant.sign(), self.mant.magnitude());
        let m = mag >> s;
        let dropped = Mag::two_exp(self.exp + s as i64);
        let mant = BigInt::from_biguint(sign, m);
        (Dyadic { mant, exp: self.exp + s as i64 }.normalized(), dropped)
    }

    /// Quotient rounded toward zero to about `prec` significant bits.
    /// Returns the quotient and a bound on the truncation error.
    pub fn div(&self, o: &Dyadic, prec: u32) -> (Dyadic, Mag) {
        assert!(!o.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return (Dyadic::zero(), Mag::zero());
        }
        let shift = (prec as i64 + o.bits() as i64 - self.bits() as i64 + 2).max(0) as u64;
        let num = &self.mant << shift;
        let q = num / &o.mant;
        let exp = self.exp - o.exp - shift as i64;
        let err = Mag::two_exp(exp);
        (Dyadic { mant: q, exp }.normalized(), err)
    }

    /// Floor square root of a nonnegative dyadic, rounded down to about
    /// `prec` significant bits. Returns the root and an error bound of one
    /// ulp (the true root lies in [result, result + err]).
    pub fn sqrt(&self, prec: u32) -> (Dyadic, Mag) {
        assert!(!self.is_negative(), "dyadic sqrt of negative value");
        if self.is_zero() {
            return (Dyadic::zero(), Mag::zero());
        }
        let target_bits = 2 * prec as u64 + 2;
        let mut t = target_bits.saturating_sub(self.bits());
        // make the shifted exponent even so it halves exactly
        if (self.exp - t as i64) & 1 != 0 {
            t += 1;
        }
        let m = self.mant.magnitude() << t;
        let r = m.sqrt();
        let exp = (self.exp - t as i64) / 2;
        (
            Dyadic { mant: BigInt::from_biguint(Sign::Plus, r), exp }.normalized(),
            Mag::two_exp(exp),
        )
    }

    /// Floor q-th root of a nonnegative dyadic, rounded down to about `prec`
    /// significant bits; error at most one ulp upward.
    pub fn nth_root(&self, q: u32, prec: u32) -> (Dyadic, Mag) {
        assert!(q >= 1);
        assert!(!self.is_negative(), "dyadic nth_root of negative value");
        if self.is_zero() {
            return (Dyadic::zero(), Mag::zero());
        }
        let target_bits = (q as u64) * (prec as u64 + 2);
        let mut t = target_bits.saturating_sub(self.bits());
        // increasing t by rem makes (exp - t) divisible by q
        let rem = (self.exp - t as i64).rem_euclid(q as i64);
        t += rem as u64;
        let m = self.mant.magnitude() << t;
        let r = m.nth_root(q);
        let exp = (self.exp - t as i64) / q as i64;
        (
            Dyadic { mant: BigInt::from_biguint(Sign::Plus, r), exp }.normalized(),
            Mag::two_exp(exp),
        )
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn cmp_value(&self, o: &Dyadic) -> std::cmp::Ordering {
        let d = self.sub(o);
        if d.mant.is_zero() {
            std::cmp::Ordering::Equal
        } else if d.mant.is_negative() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Rounds a rational to `prec` bits. Returns the value and error bound.
    pub fn from_rational(r: &BigRational, prec: u32) -> (Dyadic, Mag) {
        if r.is_zero() {
            return (Dyadic::zero(), Mag::zero());
        }
        let num = r.numer();
        let den = r.denom();
        let shift = (prec as i64 + den.bits() as i64 - num.bits() as i64 + 2).max(0) as u64;
        let q = (num << shift) / den;
        let exp = -(shift as i64);
        (Dyadic { mant: q, exp }.normalized(), Mag::two_exp(exp))
    }

    /// Approximate conversion for diagnostics and seeding only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (take, shift) = if bits > 53 { (bits - 53, bits - 53) } else { (0, 0) };
        let top = (self.mant.magnitude() >> take).to_f64().unwrap_or(f64::INFINITY);
        let e = self.exp + shift as i64;
        let mut v = top;
        if e > 1020 {
            v = f64::INFINITY;
        } else if e < -1060 {
            v = 0.0;
        } else {
            v *= (e as f64).exp2();
        }
        if self.mant.is_negative() {
            -v
        } else {
            v
        }
    }

    /// Decimal representation truncated toward zero after `digits` fractional
    /// digits. Intended for deterministic report output.
    pub fn to_decimal(&self, digits: usize) -> String {
        let sign = if self.is_negative() { "-" } else { "" };
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = self.abs().mul(&Dyadic::from_bigint(scale.clone()));
        // floor of |x| * 10^digits
        let floor = if scaled.exp >= 0 {
            scaled.mant << scaled.exp as u64
        } else {
            scaled.mant >> (-scaled.exp) as u64
        };
        let (int_part, frac_part) = floor.div_rem(&scale);
        let frac = frac_part.magnitude().to_str_radix(10);
        let pad = "0".repeat(digits.saturating_sub(frac.len()));
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{pad}{frac}")
        }
    }
}

/// An upper-bound magnitude `mant * 2^exp` (mant < 2^32 once normalized).
/// All operations round upward, so bounds stay valid under composition.
#[derive(Clone, Copy, Debug)]
pub struct Mag {
    mant: u64,
    exp: i64,
}

impl Mag {
    pub fn zero() -> Self {
        Mag { mant: 0, exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.mant == 0
    }

    pub fn two_exp(e: i64) -> Self {
        Mag { mant: 1, exp: e }
    }

    pub fn from_u64(v: u64) -> Self {
        Mag { mant: v, exp: 0 }.normalized()
    }

    fn normalized(mut self) -> Self {
        if self.mant == 0 {
            self.exp = 0;
            return self;
        }
        while self.mant >= 1 << 32 {
            self.mant = (self.mant >> 1) + (self.mant & 1);
            self.exp += 1;
        }
        self
    }

    /// Upper bound on |v| for a `BigInt` mantissa with exponent `exp`.
    pub fn from_bigint_mag(v: &BigInt, exp: i64) -> Self {
        let mag = v.magnitude();
        if mag.is_zero() {
            return Mag::zero();
        }
        let bits = mag.bits();
        if bits <= 32 {
            Mag { mant: mag.to_u64().unwrap(), exp }.normalized()
        } else {
            let s = bits - 32;
            let top = (mag >> s).to_u64().unwrap();
            // +1 rounds up for the discarded low bits
            Mag { mant: top + 1, exp: exp + s as i64 }.normalized()
        }
    }

    /// Upper bound on |d|.
    pub fn from_dyadic(d: &Dyadic) -> Self {
        Mag::from_bigint_mag(&d.mant, d.exp)
    }

    /// Upper bound on a nonnegative rational.
    pub fn from_rational(r: &BigRational) -> Self {
        assert!(!r.is_negative());
        if r.is_zero() {
            return Mag::zero();
        }
        // ceil of numerator/denominator scaled into 32 bits
        let num = r.numer().magnitude();
        let den = r.denom().magnitude();
        let shift = 40i64 + den.bits() as i64 - num.bits() as i64;
        let (q, exact) = if shift >= 0 {
            let (q, r2) = (num << shift as u64).div_rem(den);
            (q, r2.is_zero())
        } else {
            let (q, r2) = num.div_rem(&(den << (-shift) as u64));
            (q, r2.is_zero())
        };
        let bump = if exact { 0u32 } else { 1 };
        let v = Mag::from_bigint_mag(&BigInt::from_biguint(Sign::Plus, q + bump), -shift);
        v
    }

    /// Shifts the mantissa left into [2^31, 2^32) so that rounding in `add`
    /// costs at most one part in 2^31.
    fn upscaled(&self) -> Mag {
        if self.mant == 0 {
            return *self;
        }
        let lead = 63 - self.mant.leading_zeros() as i64; // top bit index
        let shift = 31 - lead;
        if shift > 0 {
            Mag { mant: self.mant << shift, exp: self.exp - shift }
        } else {
            *self
        }
    }

    pub fn add(&self, o: &Mag) -> Self {
        if self.is_zero() {
            return *o;
        }
        if o.is_zero() {
            return *self;
        }
        let a0 = self.upscaled();
        let b0 = o.upscaled();
        let e = a0.exp.max(b0.exp);
        let a = shr_round_up(a0.mant, (e - a0.exp) as u64);
        let b = shr_round_up(b0.mant, (e - b0.exp) as u64);
        Mag { mant: a + b, exp: e }.normalized()
    }

    pub fn mul(&self, o: &Mag) -> Self {
        if self.is_zero() || o.is_zero() {
            return Mag::zero();
        }
        let p = self.mant as u128 * o.mant as u128;
        let mut exp = self.exp + o.exp;
        let mut m = p;
        while m >= 1 << 63 {
            m = (m >> 1) + (m & 1);
            exp += 1;
        }
        Mag { mant: m as u64, exp }.normalized()
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        self.mul(&Mag::from_u64(k))
    }

    pub fn mul_two_exp(&self, e: i64) -> Self {
        if self.is_zero() {
            return *self;
        }
        Mag { mant: self.mant, exp: self.exp + e }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = *self;
        let mut acc = Mag::from_u64(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Upper bound on the square root.
    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        let (m, e) = if self.exp & 1 != 0 {
            (self.mant << 1, self.exp - 1)
        } else {
            (self.mant, self.exp)
        };
        let r = (m as f64).sqrt().ceil() as u64 + 1;
        Mag { mant: r, exp: e / 2 }.normalized()
    }

    pub fn to_dyadic(&self) -> Dyadic {
        Dyadic { mant: BigInt::from(self.mant), exp: self.exp }.normalized()
    }

    pub fn to_rational(&self) -> BigRational {
        self.to_dyadic().to_rational()
    }

    pub fn cmp_value(&self, o: &Mag) -> std::cmp::Ordering {
        let a = self.normalized();
        let b = o.normalized();
        if a.is_zero() || b.is_zero() {
            return (a.mant != 0).cmp(&(b.mant != 0));
        }
        let ha = a.exp + 64 - a.mant.leading_zeros() as i64;
        let hb = b.exp + 64 - b.mant.leading_zeros() as i64;
        ha.cmp(&hb).then_with(|| {
            // same leading-bit position: compare aligned mantissas
            let sh = (a.exp - b.exp).unsigned_abs().min(63);
            if a.exp >= b.exp {
                ((a.mant as u128) << sh).cmp(&(b.mant as u128))
            } else {
                (a.mant as u128).cmp(&((b.mant as u128) << sh))
            }
        })
    }

    pub fn le(&self, o: &Mag) -> bool {
        self.cmp_value(o) != std::cmp::Ordering::Greater
    }

    /// True if self <= 2^e.
    pub fn le_two_exp(&self, e: i64) -> bool {
        self.le(&Mag::two_exp(e))
    }

    pub fn to_f64(&self) -> f64 {
        self.to_dyadic().to_f64()
    }
}

fn shr_round_up(m: u64, s: u64) -> u64 {
    if s >= 64 {
        return if m > 0 { 1 } else { 0 };
    }
    let mask = (1u64 << s) - 1;
    (m >> s) + if m & mask != 0 { 1 } else { 0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(m: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(m), e)
    }

    #[test]
    fn add_mul_exact() {
        let a = dy(3, -2); // 0.75
        let b = dy(5, -3); // 0.625
        assert_eq!(a.add(&b), dy(11, -3));
        assert_eq!(a.mul(&b), dy(15, -5));
        assert_eq!(a.sub(&a), Dyadic::zero());
    }

    #[test]
    fn round_reports_error() {
        let x = Dyadic::new(BigInt::from((1u64 << 40) + 1), 0);
        let (r, err) = x.round_to(8);
        assert!(r.bits() <= 8);
        // |x - r| <= err
        let diff = x.sub(&r).abs();
        assert!(Mag::from_dyadic(&diff).le(&err));
    }

    #[test]
    fn sqrt_encloses() {
        let x = dy(2, 0);
        let (r, err) = x.sqrt(64);
        let lo = r.mul(&r);
        let hi = r.add(&err.to_dyadic());
        let hi2 = hi.mul(&hi);
        assert!(lo.cmp_value(&x) != std::cmp::Ordering::Greater);
        assert!(hi2.cmp_value(&x) != std::cmp::Ordering::Less);
    }

    #[test]
    fn nth_root_encloses() {
        let x = dy(5, 0);
        let (r, err) = x.nth_root(3, 64);
        let lo = r.mul(&r).mul(&r);
        let hi = r.add(&err.to_dyadic());
        let hi3 = hi.mul(&hi).mul(&hi);
        assert!(lo.cmp_value(&x) != std::cmp::Ordering::Greater);
        assert!(hi3.cmp_value(&x) != std::cmp::Ordering::Less);
    }

    #[test]
    fn div_encloses() {
        let a = dy(1, 0);
        let b = dy(3, 0);
        let (q, err) = a.div(&b, 80);
        // 1/3 in [q, q + err]
        let three = dy(3, 0);
        assert!(q.mul(&three).cmp_value(&a) != std::cmp::Ordering::Greater);
        let hi = q.add(&err.to_dyadic());
        assert!(hi.mul(&three).cmp_value(&a) != std::cmp::Ordering::Less);
    }

    #[test]
    fn mag_rounds_up() {
        let a = Mag::from_u64(3);
        let b = Mag::two_exp(-1);
        let s = a.add(&b);
        assert!(Mag::from_u64(3).le(&s));
        let p = a.mul(&a);
        assert!(Mag::from_u64(9).le(&p));
        assert!(p.le(&Mag::from_u64(9)));
    }

    #[test]
    fn mag_from_rational_upper() {
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        let m = Mag::from_rational(&r);
        // m >= 1/3
        assert!(m.to_rational() >= r);
        assert!(m.to_rational() < BigRational::new(BigInt::from(34), BigInt::from(100)));
    }

    #[test]
    fn decimal_truncates() {
        let (x, _) = Dyadic::from_rational(
            &BigRational::new(BigInt::from(5), BigInt::from(14)),
            200,
        );
        let s = x.to_decimal(10);
        assert_eq!(s, "0.3571428571");
    }
}
