//! Exact univariate polynomials and rational functions over the rationals.
//!
//! These are the symbolic substrate for the differential-equation
//! derivations: degrees stay tiny, so naive dense arithmetic and Euclidean
//! gcd are more than fast enough. `RationalFunction` keeps a canonical form
//! (gcd-reduced, integer-primitive denominator with positive leading
//! coefficient) so structural equality is meaningful.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

fn rz() -> Rat {
    Rat::zero()
}

/// Dense polynomial; `coeffs[i]` multiplies x^i, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn x() -> Self {
        Poly::new(vec![rz(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// Builds from integer coefficients, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(rz)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(rz)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![rz(); n];
        for i in 0..n {
            out[i] = self.coeff(i) + o.coeff(i);
        }
        Poly::new(out)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![rz(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rz();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation over a complex enclosure.
    pub fn eval_ac(&self, x: &crate::approx::AC) -> crate::approx::AC {
        let mut acc = crate::approx::AC::zero(x.prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&crate::approx::AC::from_rational(c, x.prec));
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder of self / o (o nonzero).
    pub fn divrem(&self, o: &Poly) -> (Poly, Poly) {
        assert!(!o.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        let dlead = o.leading();
        let dd = o.degree().unwrap();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading() / &dlead;
            let mut t = vec![rz(); rd - dd + 1];
            t[rd - dd] = c;
            let t = Poly::new(t);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(o));
        }
        (quo, rem)
    }

    /// Monic gcd via Euclid.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            a.scale(&(Rat::one() / lead))
        }
    }

    /// x^deg * p(1/x): coefficient reversal for the chart at infinity.
    pub fn reversed(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(c)
    }

    /// Substitutes a rational function f into the polynomial:
    /// returns p(f) as a rational function.
    pub fn compose_rf(&self, f: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(f).add(&RationalFunction::constant(c.clone()));
        }
        acc
    }

    /// Rational roots, found from divisors of the cleared-denominator
    /// leading and constant coefficients.
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.is_zero() {
            return vec![];
        }
        let mut p = self.clone();
        // strip factors of x
        let mut roots = Vec::new();
        while p.coeff(0).is_zero() && !p.is_zero() {
            if !roots.contains(&rz()) {
                roots.push(rz());
            }
            p = Poly::new(p.coeffs[1..].to_vec());
        }
        if p.degree().map_or(true, |d| d == 0) {
            return roots;
        }
        // clear denominators to integer coefficients
        let mut den = BigInt::one();
        for c in &p.coeffs {
            den = lcm(&den, c.denom());
        }
        let ints: Vec<BigInt> = p
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        for num in divisors(&a0) {
            for dnm in divisors(&an) {
                for sign in [1i64, -1] {
                    let cand = Rat::new(&num * BigInt::from(sign), dnm.clone());
                    if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand.clone());
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        BigInt::zero()
    } else {
        (a * b / gcd_int(a, b)).abs()
    }
}

fn gcd_int(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // small positive divisors; the polynomials seen here have tiny coefficients
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Quotient of two polynomials in canonical reduced form.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.reduce();
        rf
    }

    pub fn zero() -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Poly::one(), den: Poly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn x() -> Self {
        RationalFunction { num: Poly::x(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().map_or(false, |d| d > 0) {
            self.num = self.num.divrem(&g).0;
            self.den = self.den.divrem(&g).0;
        }
        // scale so the denominator has integer primitive coefficients with
        // positive leading coefficient
        let mut den_lcm = BigInt::one();
        for c in &self.den.coeffs {
            den_lcm = lcm(&den_lcm, c.denom());
        }
        let mut content = BigInt::zero();
        for c in &self.den.coeffs {
            content = gcd_int(&content, &(c.numer() * (&den_lcm / c.denom())));
        }
        let mut factor = Rat::new(den_lcm, content);
        if self.den.leading().is_negative() {
            factor = -factor;
        }
        self.num = self.num.scale(&factor);
        self.den = self.den.scale(&factor);
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &RationalFunction) -> RationalFunction {
        assert!(!o.is_zero(), "division by zero rational function");
        RationalFunction::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, c: &Rat) -> RationalFunction {
        RationalFunction::new(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> RationalFunction {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Quotient-rule derivative.
    pub fn derivative(&self) -> RationalFunction {
        RationalFunction::new(
            self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative())),
            self.den.mul(&self.den),
        )
    }

    /// Evaluation; None at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Evaluation over a complex enclosure; errors when the denominator
    /// enclosure straddles zero.
    pub fn eval_ac(&self, x: &crate::approx::AC) -> crate::Result<crate::approx::AC> {
        self.num.eval_ac(x).div(&self.den.eval_ac(x))
    }

    /// f(1/x) as a rational function of x (chart at infinity).
    pub fn subst_inv(&self) -> RationalFunction {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let m = dn.max(dd);
        // x^m f(1/x) = [x^(m-dn) rev(num)] / [x^(m-dd) rev(den)] * x^0 ... built directly:
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        for _ in 0..(m - dn) {
            num = num.mul(&Poly::x());
        }
        for _ in 0..(m - dd) {
            den = den.mul(&Poly::x());
        }
        RationalFunction::new(num, den)
    }

    /// Substitutes another rational function for the variable.
    pub fn compose(&self, f: &RationalFunction) -> RationalFunction {
        let n = self.num.compose_rf(f);
        let d = self.den.compose_rf(f);
        n.div(&d)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                1 if a.is_one() => write!(f, "x")?,
                1 => write!(f, "{}*x", a)?,
                _ if a.is_one() => write!(f, "x^{}", i)?,
                _ => write!(f, "{}*x^{}", a, i)?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::rat;

    fn rf_ints(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    #[test]
    fn reduction_canonicalizes() {
        // (x^2 - 1)/(x - 1) == x + 1
        let a = rf_ints(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(a, rf_ints(&[1, 1], &[1]));
        assert_eq!(a.num, Poly::from_ints(&[1, 1]));
        assert_eq!(a.den, Poly::one());
    }

    #[test]
    fn arithmetic_matches_partial_fractions() {
        // 1/x + 1/(1-x) = 1/(x(1-x))
        let a = rf_ints(&[1], &[0, 1]);
        let b = rf_ints(&[1], &[1, -1]);
        let sum = a.add(&b);
        assert_eq!(sum, rf_ints(&[1], &[0, 1, -1]));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx [x/(1-x)] = 1/(1-x)^2
        let f = rf_ints(&[0, 1], &[1, -1]);
        assert_eq!(f.derivative(), rf_ints(&[1], &[1, -2, 1]));
    }

    #[test]
    fn substitution_at_infinity() {
        // f = (x^2+1)/x, f(1/x) = (1+x^2)/x
        let f = rf_ints(&[1, 0, 1], &[0, 1]);
        assert_eq!(f.subst_inv(), rf_ints(&[1, 0, 1], &[0, 1]));
        // g = x^3, g(1/x) = 1/x^3
        let g = rf_ints(&[0, 0, 0, 1], &[1]);
        assert_eq!(g.subst_inv(), rf_ints(&[1], &[0, 0, 0, 1]));
    }

    #[test]
    fn rational_roots_found() {
        // 6x^2 - 5x + 1 = (2x-1)(3x-1)
        let p = Poly::from_ints(&[1, -5, 6]);
        let roots = p.rational_roots();
        assert_eq!(roots, vec![rat(1, 3), rat(1, 2)]);
        // x^3 - x = x(x-1)(x+1)
        let q = Poly::from_ints(&[0, -1, 0, 1]);
        let roots = q.rational_roots();
        assert_eq!(roots, vec![rat(-1, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn composition() {
        // f = x^2, g = 1/(1-x): f(g) = 1/(1-x)^2
        let f = rf_ints(&[0, 0, 1], &[1]);
        let g = rf_ints(&[1], &[1, -1]);
        assert_eq!(f.compose(&g), rf_ints(&[1], &[1, -2, 1]));
    }

    #[test]
    fn eval_and_poles() {
        let f = rf_ints(&[1], &[0, 1, -1]);
        assert_eq!(f.eval(&rat(1, 2)), Some(rat(4, 1)));
        assert_eq!(f.eval(&rat(0, 1)), None);
        assert_eq!(f.eval(&rat(1, 1)), None);
    }
}
