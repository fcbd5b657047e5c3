//! Exact coefficient arithmetic: arbitrary-precision rationals or an odd prime field.
//!
//! Every scalar carries its field descriptor so that mixed-field arithmetic is
//! caught immediately. No floating point appears anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CoreError;

/// Coefficient field: the rationals, or integers modulo an odd prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Prime field of odd characteristic. Characteristic 2 and composite
    /// moduli are rejected.
    pub fn prime(q: u64) -> Result<Self, CoreError> {
        if q == 2 {
            return Err(CoreError::CharacteristicTwo);
        }
        if !is_prime_u64(q) {
            return Err(CoreError::NotPrime(q));
        }
        Ok(FieldSpec::Prime(q))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(q) => *q,
        }
    }

    /// True when the characteristic divides `n` (never true in characteristic 0
    /// unless `n` is 0).
    pub fn characteristic_divides(&self, n: u64) -> bool {
        match self {
            FieldSpec::Rationals => n == 0,
            FieldSpec::Prime(q) => n.is_multiple_of(*q),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Prime(q) => write!(f, "gf({q})"),
        }
    }
}

/// An exact field element together with its field descriptor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    field: FieldSpec,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar { field, repr: Repr::Rat(BigRational::zero()) },
            FieldSpec::Prime(_) => Scalar { field, repr: Repr::Mod(0) },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        Scalar::from_bigint(field, &BigInt::from(n))
    }

    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Self {
        match field {
            FieldSpec::Rationals => Scalar { field, repr: Repr::Rat(BigRational::from(n.clone())) },
            FieldSpec::Prime(q) => {
                let m = n.mod_floor_u64(q);
                Scalar { field, repr: Repr::Mod(m) }
            }
        }
    }

    /// Builds numer/denom. In a prime field the denominator is inverted; a
    /// denominator divisible by the characteristic is a division by zero.
    pub fn from_ratio(field: FieldSpec, numer: &BigInt, denom: &BigInt) -> Result<Self, CoreError> {
        if denom.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar {
                field,
                repr: Repr::Rat(BigRational::new(numer.clone(), denom.clone())),
            }),
            FieldSpec::Prime(_) => {
                let n = Scalar::from_bigint(field, numer);
                let d = Scalar::from_bigint(field, denom);
                n.div(&d)
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(m) => *m == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod(m) => *m == 1,
        }
    }

    fn check_field(&self, other: &Scalar) {
        assert_eq!(self.field, other.field, "mixed coefficient fields");
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_field(other);
        match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar { field: self.field, repr: Repr::Rat(a + b) },
            (Repr::Mod(a), Repr::Mod(b)) => {
                let q = self.field.characteristic() as u128;
                let s = ((*a as u128) + (*b as u128)) % q;
                Scalar { field: self.field, repr: Repr::Mod(s as u64) }
            }
            _ => unreachable!("field/representation mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match &self.repr {
            Repr::Rat(a) => Scalar { field: self.field, repr: Repr::Rat(-a) },
            Repr::Mod(a) => {
                let q = self.field.characteristic();
                let m = if *a == 0 { 0 } else { q - a };
                Scalar { field: self.field, repr: Repr::Mod(m) }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_field(other);
        match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar { field: self.field, repr: Repr::Rat(a * b) },
            (Repr::Mod(a), Repr::Mod(b)) => {
                let q = self.field.characteristic() as u128;
                let p = ((*a as u128) * (*b as u128)) % q;
                Scalar { field: self.field, repr: Repr::Mod(p as u64) }
            }
            _ => unreachable!("field/representation mismatch"),
        }
    }

    pub fn inv(&self) -> Result<Scalar, CoreError> {
        if self.is_zero() {
            return Err(CoreError::DivisionByZero);
        }
        match &self.repr {
            Repr::Rat(a) => Ok(Scalar { field: self.field, repr: Repr::Rat(a.recip()) }),
            Repr::Mod(a) => {
                let q = self.field.characteristic();
                let inv = mod_inverse(*a, q).ok_or(CoreError::DivisionByZero)?;
                Ok(Scalar { field: self.field, repr: Repr::Mod(inv) })
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, CoreError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `(-1)^parity`: minus one when `parity` is odd, one otherwise.
    pub fn sign(field: FieldSpec, parity: bool) -> Scalar {
        if parity {
            Scalar::one(field).neg()
        } else {
            Scalar::one(field)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Mod(m) => write!(f, "{m}"),
        }
    }
}

/// Whether a rational scalar is negative; prime-field residues are never
/// printed with a sign.
pub fn is_displayed_negative(s: &Scalar) -> bool {
    match &s.repr {
        Repr::Rat(r) => r.is_negative(),
        Repr::Mod(_) => false,
    }
}

/// The Koszul sign `(-1)^(d1*d2)` in the given field.
pub fn koszul_sign(field: FieldSpec, deg_left: i64, deg_right: i64) -> Scalar {
    Scalar::sign(field, koszul_parity(deg_left, deg_right))
}

/// Parity of `d1*d2`: true exactly when both degrees are odd.
pub fn koszul_parity(deg_left: i64, deg_right: i64) -> bool {
    deg_left.rem_euclid(2) == 1 && deg_right.rem_euclid(2) == 1
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, q: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, q: u64) -> u64 {
        let m = self % BigInt::from(q);
        let m = if m.is_negative() { m + BigInt::from(q) } else { m };
        m.to_u64().expect("residue fits in u64")
    }
}

fn mod_inverse(a: u64, q: u64) -> Option<u64> {
    // extended Euclid over signed 128-bit
    let (mut r0, mut r1) = (q as i128, (a % q) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(q as i128) as u64)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // deterministic Miller-Rabin for u64
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_characteristic_two() {
        assert_eq!(FieldSpec::prime(2), Err(CoreError::CharacteristicTwo));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(FieldSpec::prime(15), Err(CoreError::NotPrime(15)));
        assert!(FieldSpec::prime(5).is_ok());
        assert!(FieldSpec::prime(1_000_000_007).is_ok());
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = FieldSpec::Rationals;
        let half = Scalar::from_ratio(f, &BigInt::from(1), &BigInt::from(2)).unwrap();
        let third = Scalar::from_ratio(f, &BigInt::from(1), &BigInt::from(3)).unwrap();
        let sum = half.add(&third);
        assert_eq!(sum, Scalar::from_ratio(f, &BigInt::from(5), &BigInt::from(6)).unwrap());
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(5).unwrap();
        for n in 1..5i64 {
            let s = Scalar::from_i64(f, n);
            assert!(s.mul(&s.inv().unwrap()).is_one());
        }
        assert_eq!(Scalar::zero(f).inv(), Err(CoreError::DivisionByZero));
    }

    #[test]
    fn koszul_sign_examples() {
        let f = FieldSpec::Rationals;
        assert_eq!(koszul_sign(f, 1, 1), Scalar::from_i64(f, -1));
        for k in -4..5 {
            assert_eq!(koszul_sign(f, 0, k), Scalar::one(f));
        }
        assert_eq!(koszul_sign(f, 2, 3), Scalar::one(f));
        assert_eq!(koszul_sign(f, -1, 3), Scalar::from_i64(f, -1));
    }

    #[test]
    fn least_residue_display() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(Scalar::from_i64(f, -1).to_string(), "4");
        assert_eq!(Scalar::from_i64(f, 7).to_string(), "2");
    }
}
