//! Exact field elements: arbitrary-precision rationals and residues modulo an
//! odd prime.
//!
//! A [`Scalar`] carries its field with it. Mixing elements of different fields
//! in one arithmetic expression is a programming error and panics.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::GeomError;

/// Smallest prime modulus accepted by [`Field::prime`].
pub const MIN_PRIME: u64 = 11;

/// The ground field: the rationals or a prime field `F_p` with `p >= 11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`. Rejects 2 explicitly (circle equations and the tangential
    /// hexagon statement both need characteristic other than 2), composites,
    /// and primes below [`MIN_PRIME`].
    pub fn prime(p: u64) -> Result<Field, GeomError> {
        if p == 2 {
            return Err(GeomError::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(GeomError::InvalidField(format!("{p} is not prime")));
        }
        if p < MIN_PRIME {
            return Err(GeomError::InvalidField(format!(
                "prime {p} is below the minimum {MIN_PRIME}"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        self.bigint(&BigInt::from(n))
    }

    pub fn bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(n.clone())),
            Field::Prime(p) => Scalar::Fp(Fp::from_bigint(n, p)),
        }
    }

    /// `num / den`, failing when the denominator vanishes in this field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar, GeomError> {
        self.int(num).checked_div(&self.int(den))
    }

    /// Maps a rational number into the field (reduction mod p for `F_p`).
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar, GeomError> {
        match self {
            Field::Rational => Ok(Scalar::Q(q.clone())),
            Field::Prime(_) => self.bigint(q.numer()).checked_div(&self.bigint(q.denom())),
        }
    }

    /// Parses `"num"` or `"num/den"` (optional leading minus, no decimals).
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, GeomError> {
        let bad = || GeomError::Parse(format!("invalid exact number {text:?}"));
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let valid = |s: &str| {
            let digits = s.strip_prefix('-').unwrap_or(s);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num) || !valid(den) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(GeomError::Parse(format!("zero denominator in {text:?}")));
        }
        self.from_rational(&BigRational::new(num, den))
            .map_err(|_| GeomError::Parse(format!("{text:?} has a denominator divisible by the field characteristic")))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Residue in `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: u64, modulus: u64) -> Fp {
        Fp {
            value: value % modulus,
            modulus,
        }
    }

    fn from_bigint(n: &BigInt, modulus: u64) -> Fp {
        let r = n.mod_floor(&BigInt::from(modulus));
        Fp {
            value: r.to_u64().expect("residue fits in u64"),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn add(self, o: Fp) -> Fp {
        let s = (self.value as u128 + o.value as u128) % self.modulus as u128;
        Fp::new(s as u64, self.modulus)
    }

    fn sub(self, o: Fp) -> Fp {
        let m = self.modulus as u128;
        let s = (self.value as u128 + m - o.value as u128) % m;
        Fp::new(s as u64, self.modulus)
    }

    fn mul(self, o: Fp) -> Fp {
        let s = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Fp::new(s as u64, self.modulus)
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Option<Fp> {
        (self.value != 0).then(|| self.pow(self.modulus - 2))
    }
}

/// An exact element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp(Fp),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(x) => x.value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(q) => (!q.is_zero()).then(|| Scalar::Q(q.recip())),
            Scalar::Fp(x) => x.inv().map(Scalar::Fp),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, GeomError> {
        other
            .inv()
            .map(|i| self * &i)
            .ok_or(GeomError::DivisionByZero)
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp(_) => None,
        }
    }

    /// Lossy conversion for rendering only.
    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().and_then(|q| q.to_f64())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp(x) => write!(f, "{}", x.value),
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $fp:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    (Scalar::Fp(a), Scalar::Fp(b)) if a.modulus == b.modulus => {
                        Scalar::Fp(a.$fp(*b))
                    }
                    _ => mismatch(self, rhs),
                }
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }

        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, add);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, sub);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, mul);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like `BigRational`.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl<'a> Div<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        &self / rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(q) => Scalar::Q(-q),
            Scalar::Fp(x) => Scalar::Fp(Fp::new(0, x.modulus).sub(*x)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Canonical representative of a nonzero homogeneous triple (or any vector):
/// over Q coprime integers with the first nonzero entry positive, over F_p the
/// first nonzero entry scaled to 1. Returns `None` for the zero vector.
pub fn canonicalize(v: &[Scalar]) -> Option<Vec<Scalar>> {
    let lead = v.iter().position(|s| !s.is_zero())?;
    match &v[lead] {
        Scalar::Q(_) => {
            let qs: Vec<&BigRational> = v.iter().map(|s| s.as_rational().expect("uniform field")).collect();
            let lcm = qs
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let ints: Vec<BigInt> = qs.iter().map(|q| (*q * &lcm).to_integer()).collect();
            let gcd = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
            let sign = if ints[lead].is_negative() { -BigInt::one() } else { BigInt::one() };
            let scale = gcd * sign;
            Some(
                ints.into_iter()
                    .map(|n| Scalar::Q(BigRational::from_integer(n / &scale)))
                    .collect(),
            )
        }
        s @ Scalar::Fp(_) => {
            let inv = s.inv().expect("nonzero lead");
            Some(v.iter().map(|x| x * &inv).collect())
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
