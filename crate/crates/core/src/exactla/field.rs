use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact coefficient field: a prime field `F_p` or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Prime(u64),
    Rational,
}

impl Field {
    /// Prime field `F_p`. Only primes below `2^32` are accepted so that products fit in `u64`.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(0),
            Field::Rational => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Mod(1),
            Field::Rational => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod(n.rem_euclid(*p as i64) as u64),
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Parses a decimal integer (any field) or a `num/den` fraction.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            Field::Prime(p) => {
                let modp = |x: &BigInt| -> u64 {
                    let pb = BigInt::from(*p);
                    let r = ((x % &pb) + &pb) % &pb;
                    let (_, digits) = r.to_u64_digits();
                    digits.first().copied().unwrap_or(0)
                };
                let n = modp(&num);
                let d = modp(&den);
                if d == 0 {
                    return Err(bad());
                }
                let zp = Zp { p: *p };
                Ok(Scalar::Mod(zp.mul(&n, &zp.inv(&d))))
            }
        }
    }

    /// Serializes a scalar: decimal integer for prime fields, `num/den` (or an integer) for rationals.
    pub fn format(&self, s: &Scalar) -> String {
        match s {
            Scalar::Mod(v) => v.to_string(),
            Scalar::Rat(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Field::Prime(p), Scalar::Mod(v)) => v < p,
            (Field::Rational, Scalar::Rat(_)) => true,
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        arith!(self, ar => ar.wrap_scalar(ar.add(&ar.unwrap_scalar(a), &ar.unwrap_scalar(b))))
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        arith!(self, ar => ar.wrap_scalar(ar.sub(&ar.unwrap_scalar(a), &ar.unwrap_scalar(b))))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        arith!(self, ar => ar.wrap_scalar(ar.mul(&ar.unwrap_scalar(a), &ar.unwrap_scalar(b))))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        arith!(self, ar => ar.wrap_scalar(ar.neg(&ar.unwrap_scalar(a))))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        arith!(self, ar => {
            let x = ar.unwrap_scalar(a);
            if ar.is_zero(&x) { None } else { Some(ar.wrap_scalar(ar.inv(&x))) }
        })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// A field element. The field it belongs to is carried by the enclosing matrix or algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod(v) => *v == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element arithmetic shared by the matrix kernels. Implemented once per field kind so the
/// elimination loops run on unboxed `u64` for prime fields.
pub(crate) trait Arith {
    type E: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Inverse of a nonzero element.
    fn inv(&self, a: &Self::E) -> Self::E;
    /// `a - f * b`, the elimination step.
    fn sub_mul(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Self::E {
        self.sub(a, &self.mul(f, b))
    }
    fn unwrap_scalar(&self, s: &Scalar) -> Self::E;
    fn wrap_scalar(&self, e: Self::E) -> Scalar;
    fn slice<'a>(&self, e: &'a super::matrix::Entries) -> &'a [Self::E];
    fn slice_mut<'a>(&self, e: &'a mut super::matrix::Entries) -> &'a mut alloc::vec::Vec<Self::E>;
    fn wrap(&self, v: alloc::vec::Vec<Self::E>) -> super::matrix::Entries;
}

pub(crate) struct Zp {
    pub p: u64,
}

impl Arith for Zp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2)
        let mut base = *a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
    fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> u64 {
        let prod = f * b % self.p;
        self.sub(a, &prod)
    }
    fn unwrap_scalar(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Mod(v) => *v % self.p,
            Scalar::Rat(_) => panic!("rational scalar used in a prime field"),
        }
    }
    fn wrap_scalar(&self, e: u64) -> Scalar {
        Scalar::Mod(e)
    }
    fn slice<'a>(&self, e: &'a super::matrix::Entries) -> &'a [u64] {
        match e {
            super::matrix::Entries::Prime(v) => v,
            super::matrix::Entries::Rational(_) => panic!("entry storage does not match field"),
        }
    }
    fn slice_mut<'a>(&self, e: &'a mut super::matrix::Entries) -> &'a mut alloc::vec::Vec<u64> {
        match e {
            super::matrix::Entries::Prime(v) => v,
            super::matrix::Entries::Rational(_) => panic!("entry storage does not match field"),
        }
    }
    fn wrap(&self, v: alloc::vec::Vec<u64>) -> super::matrix::Entries {
        super::matrix::Entries::Prime(v)
    }
}

pub(crate) struct Qq;

impl Arith for Qq {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        debug_assert!(!a.is_zero() && !a.abs().is_zero());
        a.recip()
    }
    fn unwrap_scalar(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rat(q) => q.clone(),
            Scalar::Mod(_) => panic!("prime-field scalar used in the rationals"),
        }
    }
    fn wrap_scalar(&self, e: BigRational) -> Scalar {
        Scalar::Rat(e)
    }
    fn slice<'a>(&self, e: &'a super::matrix::Entries) -> &'a [BigRational] {
        match e {
            super::matrix::Entries::Rational(v) => v,
            super::matrix::Entries::Prime(_) => panic!("entry storage does not match field"),
        }
    }
    fn slice_mut<'a>(&self, e: &'a mut super::matrix::Entries) -> &'a mut alloc::vec::Vec<BigRational> {
        match e {
            super::matrix::Entries::Rational(v) => v,
            super::matrix::Entries::Prime(_) => panic!("entry storage does not match field"),
        }
    }
    fn wrap(&self, v: alloc::vec::Vec<BigRational>) -> super::matrix::Entries {
        super::matrix::Entries::Rational(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(f.add(&a, &b), Scalar::Mod(2));
        assert_eq!(f.mul(&a, &b), Scalar::Mod(2));
        assert_eq!(f.sub(&a, &b), Scalar::Mod(4));
        assert_eq!(f.inv(&a), Some(Scalar::Mod(2)));
        assert_eq!(f.inv(&f.zero()), None);
        assert_eq!(f.from_i64(-1), Scalar::Mod(4));
    }

    #[test]
    fn rejects_composites() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(1 << 33).is_err());
    }

    #[test]
    fn parse_and_format() {
        let q = Field::Rational;
        let x = q.parse("-6/4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.format(&q.parse("7").unwrap()), "7");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.parse("1/2").unwrap(), Scalar::Mod(3));
        assert_eq!(f5.parse("-1").unwrap(), Scalar::Mod(4));
        assert!(f5.parse("1/5").is_err());
        assert!(q.parse("x").is_err());
    }
}
