use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on supported primes; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

/// The exact base field: the rationals or a prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// `F_p`, rejecting composites and primes above 2^31.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_PRIME {
            return Err(Error::InvalidField(format!("prime {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular { value: n.rem_euclid(p as i64) as u64, p },
        }
    }

    pub fn from_u64(&self, n: u64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular { value: n % p, p },
        }
    }

    /// Image of `num/den` in the field; `None` when `den` vanishes there.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        d.inv().map(|d| n * d)
    }

    /// Parses `"3/2"`, `"-4"`, `"−3/7"`, and for prime fields also `"4 mod 5"`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::ParseScalar(text.to_string());
        let mut s = text.trim().replace('\u{2212}', "-");
        if let Some((lhs, modulus)) = s.clone().split_once("mod") {
            let Field::Prime(p) = *self else {
                return Err(bad());
            };
            let m: u64 = modulus.trim().parse().map_err(|_| bad())?;
            if m != p {
                return Err(bad());
            }
            s = lhs.trim().to_string();
        }
        let value: BigRational = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?),
        };
        self.from_rational(&value).ok_or_else(bad)
    }

    /// Reduces a rational into this field; `None` if the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        match *self {
            Field::Rationals => Some(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| {
                    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
                };
                let num = Scalar::Modular { value: reduce(q.numer()), p };
                let den = Scalar::Modular { value: reduce(q.denom()), p };
                den.inv().map(|d| num * d)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are canonical representatives in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, p: u64 },
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Modular { value, p } => {
                inv_mod(*value, *p).map(|v| Scalar::Modular { value: v, p: *p })
            }
        }
    }

    pub fn pow(&self, exp: u64) -> Scalar {
        match self {
            Scalar::Rational(q) => {
                let mut acc = BigRational::one();
                for _ in 0..exp {
                    acc *= q;
                }
                Scalar::Rational(acc)
            }
            Scalar::Modular { value, p } => Scalar::Modular { value: pow_mod(*value, exp, *p), p: *p },
        }
    }

    /// `self / other`, `None` on division by zero.
    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|inv| self * &inv)
    }

    /// The integer this scalar represents, when it is one (residues map to `0..p`).
    pub fn to_integer(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value as i64),
        }
    }

    /// Exact textual form: `-3/7` over Q, `4 mod 5` over F_5.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }

    pub(crate) fn residue(&self) -> u64 {
        match self {
            Scalar::Modular { value, .. } => *value,
            Scalar::Rational(_) => panic!("residue() called on a rational scalar"),
        }
    }

    pub(crate) fn as_rational(&self) -> &BigRational {
        match self {
            Scalar::Rational(q) => q,
            Scalar::Modular { .. } => panic!("as_rational() called on a modular scalar"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { value, p } => write!(f, "{value} mod {p}"),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, p: q }) if p == q => {
                Scalar::Modular { value: (a + b) % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, p: q }) if p == q => {
                Scalar::Modular { value: (a + p - b) % p, p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, p: q }) if p == q => {
                Scalar::Modular { value: mul_mod(*a, *b, *p), p: *p }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, p } => Scalar::Modular { value: (p - value) % p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, p: q }) if p == q => {
                *a = (*a + b) % *p
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &(-rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(2147483647).is_ok());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime((1 << 31) + 11).is_err());
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Field::Rationals;
        assert_eq!(q.parse("6/-4").unwrap().to_string(), "-3/2");
        assert!(matches!(q.parse("1/0"), Err(Error::ParseScalar(_))));
        assert!(matches!(q.parse("x"), Err(Error::ParseScalar(_))));
        let a = q.parse("6/4").unwrap();
        assert_eq!(a.to_string(), "3/2");
        let b = q.parse("\u{2212}3/7").unwrap();
        assert_eq!(b.to_string(), "-3/7");
        assert_eq!((a * b).to_string(), "-9/14");
    }

    #[test]
    fn modular_arithmetic() {
        let f = Field::Prime(5);
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert_eq!(f.parse("4 mod 5").unwrap(), f.from_i64(4));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(3));
        assert!(f.parse("1/5").is_err());
        assert!(f.parse("4 mod 7").is_err());
        let two = f.from_i64(2);
        assert_eq!(two.inv().unwrap(), f.from_i64(3));
        assert_eq!(two.pow(4), f.one());
        assert_eq!(f.from_i64(7).to_string(), "2 mod 5");
    }

    #[test]
    fn large_prime_products_do_not_overflow() {
        let p = 2147483647;
        let f = Field::Prime(p);
        let a = f.from_u64(p - 1);
        assert_eq!(&a * &a, f.one());
        assert_eq!(a.inv().unwrap(), a);
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = Field::Rationals.one() + Field::Prime(3).one();
    }
}
