//! Exact elements of rational and real-quadratic fields, and quadratic
//! irrationals in the upper half plane presented as binary quadratic forms.

use crate::approx::AC;
use crate::dyadic::{Dyadic, Mag};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Square-free decomposition n = s^2 * f with f square-free (sign kept on f).
pub fn squarefree_decompose(n: i64) -> (i64, i64) {
    if n == 0 {
        return (1, 0);
    }
    let neg = n < 0;
    let mut m = n.unsigned_abs();
    let mut s: i64 = 1;
    let mut f: i64 = 1;
    let mut p: u64 = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= p as i64;
        }
        if e % 2 == 1 {
            f *= p as i64;
        }
        p += 1;
    }
    f *= m as i64;
    (s, if neg { -f } else { f })
}

/// Exact p + q*sqrt(D) with D a square-free integer (D = 0 means rational).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    pub rational_part: Rat,
    pub surd_part: Rat,
    pub radicand: i64,
}

impl AlgebraicNumber {
    pub fn rational(p: Rat) -> Self {
        AlgebraicNumber { rational_part: p, surd_part: Rat::zero(), radicand: 0 }
    }

    pub fn from_i64(v: i64) -> Self {
        Self::rational(rint(v))
    }

    /// Builds p + q*sqrt(n), extracting square factors of n.
    pub fn new(p: Rat, q: Rat, n: i64) -> Self {
        if q.is_zero() || n == 0 {
            return Self::rational(p);
        }
        if n == 1 {
            return Self::rational(p + q);
        }
        let (s, f) = squarefree_decompose(n);
        if f == 1 {
            return Self::rational(p + q * rint(s));
        }
        AlgebraicNumber { rational_part: p, surd_part: q * rint(s), radicand: f }
    }

    pub fn is_rational(&self) -> bool {
        self.surd_part.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.surd_part.is_zero()
    }

    pub fn conj(&self) -> Self {
        AlgebraicNumber {
            rational_part: self.rational_part.clone(),
            surd_part: -self.surd_part.clone(),
            radicand: self.radicand,
        }
    }

    pub fn trace(&self) -> Rat {
        &self.rational_part + &self.rational_part
    }

    pub fn norm(&self) -> Rat {
        &self.rational_part * &self.rational_part
            - &self.surd_part * &self.surd_part * rint(self.radicand)
    }

    fn common_radicand(&self, o: &Self) -> crate::Result<i64> {
        match (self.is_rational(), o.is_rational()) {
            (true, true) => Ok(0),
            (true, false) => Ok(o.radicand),
            (false, true) => Ok(self.radicand),
            (false, false) => {
                if self.radicand == o.radicand {
                    Ok(self.radicand)
                } else {
                    Err(crate::Error::InvalidInput(format!(
                        "mixing radicands {} and {}; embed numerically first",
                        self.radicand, o.radicand
                    )))
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> crate::Result<Self> {
        let r = self.common_radicand(o)?;
        Ok(AlgebraicNumber::new(
            &self.rational_part + &o.rational_part,
            &self.surd_part + &o.surd_part,
            r,
        ))
    }

    pub fn sub(&self, o: &Self) -> crate::Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraicNumber {
            rational_part: -self.rational_part.clone(),
            surd_part: -self.surd_part.clone(),
            radicand: self.radicand,
        }
    }

    pub fn mul(&self, o: &Self) -> crate::Result<Self> {
        let r = self.common_radicand(o)?;
        let p = &self.rational_part * &o.rational_part
            + &self.surd_part * &o.surd_part * rint(r);
        let q = &self.rational_part * &o.surd_part + &self.surd_part * &o.rational_part;
        Ok(AlgebraicNumber::new(p, q, r))
    }

    pub fn mul_rat(&self, k: &Rat) -> Self {
        AlgebraicNumber {
            rational_part: &self.rational_part * k,
            surd_part: &self.surd_part * k,
            radicand: if (&self.surd_part * k).is_zero() { 0 } else { self.radicand },
        }
    }

    pub fn inv(&self) -> crate::Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(crate::Error::DivisionByZero("algebraic number with zero norm".into()));
        }
        Ok(self.conj().mul_rat(&(Rat::one() / n)))
    }

    pub fn div(&self, o: &Self) -> crate::Result<Self> {
        self.mul(&o.inv()?)
    }

    pub fn pow(&self, k: u32) -> crate::Result<Self> {
        let mut acc = Self::from_i64(1);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Real embedding p + sign * q * sqrt(D). Errors on negative radicand.
    pub fn embed(&self, prec: u32, sign: i8) -> crate::Result<AC> {
        if self.is_rational() {
            return Ok(AC::from_rational(&self.rational_part, prec));
        }
        if self.radicand < 0 {
            return Err(crate::Error::InvalidInput(
                "negative radicand has no real embedding".into(),
            ));
        }
        let root = AC::from_i64(self.radicand, prec + 16).sqrt()?;
        let surd = if sign >= 0 { self.surd_part.clone() } else { -self.surd_part.clone() };
        Ok(AC::from_rational(&self.rational_part, prec + 16)
            .add(&root.mul_rational(&surd))
            .with_prec(prec))
    }

    /// Complex embedding p + q*i*sqrt(|D|) for negative radicand (principal
    /// upper value when q > 0); falls back to the real embedding otherwise.
    pub fn embed_complex(&self, prec: u32) -> crate::Result<AC> {
        if self.radicand >= 0 {
            return self.embed(prec, 1);
        }
        let root = AC::from_i64(-self.radicand, prec + 16).sqrt()?;
        Ok(AC::from_rational(&self.rational_part, prec + 16)
            .add(&root.mul_rational(&self.surd_part).mul_i())
            .with_prec(prec))
    }
}

/// tau = (-b + sqrt(-d))/(2a) with d = 4ac - b^2 > 0: the root in the upper
/// half plane of a x^2 + b x + c = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadraticIrrational {
    pub fn new(a: i64, b: i64, c: i64) -> crate::Result<Self> {
        if a <= 0 {
            return Err(crate::Error::InvalidInput("form must have a > 0".into()));
        }
        let d = 4 * a * c - b * b;
        if d <= 0 {
            return Err(crate::Error::InvalidInput(
                "form must be positive definite (4ac - b^2 > 0)".into(),
            ));
        }
        let g = gcd3(a, b, c);
        if g != 1 {
            return Err(crate::Error::InvalidInput("form must be primitive".into()));
        }
        Ok(QuadraticIrrational { a, b, c })
    }

    pub fn d(&self) -> i64 {
        4 * self.a * self.c - self.b * self.b
    }

    /// Enclosure of tau at the requested precision.
    pub fn embed(&self, prec: u32) -> AC {
        let work = prec + 16;
        let root = AC::from_i64(self.d(), work).sqrt().expect("d > 0");
        let re = AC::from_rational(&rat(-self.b, 2 * self.a), work);
        let im = root.mul_rational(&rat(1, 2 * self.a));
        re.add(&im.mul_i()).with_prec(prec)
    }

    /// Exact imaginary part sqrt(d)/(2a) as an enclosure.
    pub fn imag_enclosure(&self, prec: u32) -> AC {
        let root = AC::from_i64(self.d(), prec + 16).sqrt().expect("d > 0");
        root.mul_rational(&rat(1, 2 * self.a)).with_prec(prec)
    }

    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        (-a < b && b <= a && a < c) || (0 <= b && b <= a && a == c)
    }

    /// Gauss reduction to the canonical equivalent form; the reduced tau has
    /// Im(tau) >= sqrt(3)/2.
    pub fn reduce(&self) -> QuadraticIrrational {
        let mut f = *self;
        loop {
            if f.c < f.a || (f.c == f.a && f.b < 0) {
                f = QuadraticIrrational { a: f.c, b: -f.b, c: f.a };
                continue;
            }
            if f.b > f.a || f.b <= -f.a {
                // translate b into (-a, a]
                let two_a = 2 * f.a;
                let mut b = f.b.rem_euclid(two_a);
                if b > f.a {
                    b -= two_a;
                }
                let c = (b * b + f.d()) / (4 * f.a);
                f = QuadraticIrrational { a: f.a, b, c };
                continue;
            }
            return f;
        }
    }
}

fn gcd2(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    gcd2(gcd2(a, b), c)
}

/// All primitive reduced binary quadratic forms of discriminant -d
/// (class-group representatives).
pub fn reduced_forms(d: i64) -> crate::Result<Vec<QuadraticIrrational>> {
    if d <= 0 || !(d % 4 == 0 || d % 4 == 3) {
        return Err(crate::Error::InvalidInput(format!(
            "-{d} is not a valid negative discriminant"
        )));
    }
    let mut out = Vec::new();
    let mut a: i64 = 1;
    while 3 * a * a <= d {
        for b in -a + 1..=a {
            if (b * b + d) % (4 * a) != 0 {
                continue;
            }
            let c = (b * b + d) / (4 * a);
            if c < a {
                continue;
            }
            if c == a && b < 0 {
                continue;
            }
            if gcd3(a, b, c) != 1 {
                continue;
            }
            out.push(QuadraticIrrational { a, b, c });
        }
        a += 1;
    }
    out.sort_by_key(|f| (f.a, f.b, f.c));
    Ok(out)
}

/// Dyadic-interval helper: true if |x - y| <= tol for real enclosures.
pub fn real_close(x: &AC, y: &AC, tol: &Mag) -> bool {
    let d = x.sub(y);
    let m = Mag::from_dyadic(&d.re).add(&d.err).add(&Mag::from_dyadic(&d.im));
    m.le(tol)
}

pub fn dyadic_from_f64_approx(v: f64) -> Dyadic {
    // exact conversion of an f64 (used only for seeding/diagnostics)
    if v == 0.0 {
        return Dyadic::zero();
    }
    let bits = v.to_bits();
    let sign = if v < 0.0 { -1 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i64 - 1075;
    let mant = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    Dyadic::new(BigInt::from(mant) * sign, exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_norm() {
        // (1 + sqrt5)/2 times (1 - sqrt5)/2 = -1
        let x = AlgebraicNumber::new(rat(1, 2), rat(1, 2), 5);
        let p = x.mul(&x.conj()).unwrap();
        assert_eq!(p, AlgebraicNumber::from_i64(-1));
        assert_eq!(x.norm(), rint(-1));
    }

    #[test]
    fn squarefree_extraction() {
        let x = AlgebraicNumber::new(rat(0, 1), rat(1, 1), 12);
        assert_eq!(x.radicand, 3);
        assert_eq!(x.surd_part, rint(2));
        let (s, f) = squarefree_decompose(-48);
        assert_eq!((s, f), (4, -3));
    }

    #[test]
    fn embed_conjugate_signs() {
        let x = AlgebraicNumber::new(rat(139, 418), rat(-45, 418), 5);
        let plus = x.embed(128, 1).unwrap();
        let minus = x.embed(128, -1).unwrap();
        // sum of embeddings = trace
        let s = plus.add(&minus);
        assert!(s.contains_point(&x.trace(), &Rat::zero()));
        // plus embedding of (139 - 45 sqrt5)/418 ~ 0.09181...
        assert_eq!(plus.re.to_decimal(5), "0.09181");
    }

    #[test]
    fn radicand_mixing_rejected() {
        let a = AlgebraicNumber::new(rat(1, 1), rat(1, 1), 2);
        let b = AlgebraicNumber::new(rat(1, 1), rat(1, 1), 3);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn reduced_forms_examples() {
        let f267 = reduced_forms(267).unwrap();
        assert_eq!(
            f267,
            vec![
                QuadraticIrrational { a: 1, b: 1, c: 67 },
                QuadraticIrrational { a: 3, b: 3, c: 23 },
            ]
        );
        assert_eq!(reduced_forms(4).unwrap(), vec![QuadraticIrrational { a: 1, b: 0, c: 1 }]);
        assert_eq!(reduced_forms(3).unwrap(), vec![QuadraticIrrational { a: 1, b: 1, c: 1 }]);
        assert_eq!(reduced_forms(24).unwrap().len(), 2);
        assert_eq!(reduced_forms(40).unwrap().len(), 2);
        assert_eq!(reduced_forms(51).unwrap().len(), 2);
        assert_eq!(reduced_forms(75).unwrap().len(), 2);
    }

    #[test]
    fn reduce_form() {
        // (4,0,1) ~ (1,0,4)
        let f = QuadraticIrrational::new(4, 0, 1).unwrap();
        assert_eq!(f.reduce(), QuadraticIrrational { a: 1, b: 0, c: 4 });
        let g = QuadraticIrrational::new(2, 1, 1).unwrap();
        assert_eq!(g.reduce().d(), 7);
        assert!(g.reduce().is_reduced());
    }

    #[test]
    fn tau_embedding() {
        // tau = (-3 + sqrt(-267))/6
        let f = QuadraticIrrational::new(3, 3, 23).unwrap();
        let t = f.embed(128);
        assert_eq!(t.re.to_decimal(4), "-0.5000");
        // Im = sqrt(267)/6 = 2.7233...
        assert_eq!(t.im.to_decimal(4), "2.7233");
    }
}
