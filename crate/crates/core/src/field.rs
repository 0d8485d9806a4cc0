//! Coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. Two families are
//! provided: exact rationals ([`Rational`], arbitrary precision) and prime
//! fields [`Fp<P>`] for an odd prime `P < 2^31` fixed at compile time.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Exact rational numbers in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Which field a computation runs over; used by file formats and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    Prime(u32),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// A commutative field with exact arithmetic.
///
/// Division by zero panics; use [`Field::inv`] when the divisor may vanish.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Div<Output = Self>
{
    fn kind() -> FieldKind;

    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// `num / den`; `None` when `den` vanishes in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        Self::from_bigint(den).inv().map(|d| Self::from_bigint(num) * d)
    }

    /// A uniformly random element of a small box (rationals) or of the
    /// whole field (prime fields). Never zero.
    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Whether the element prints with a leading minus sign.
    fn is_negative_repr(&self) -> bool;
}

impl Field for Rational {
    fn kind() -> FieldKind {
        FieldKind::Rationals
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        loop {
            let v: i64 = rng.gen_range(-9..=9);
            if v != 0 {
                return Self::from_i64(v);
            }
        }
    }

    fn is_negative_repr(&self) -> bool {
        self.is_negative()
    }
}

/// Element of the prime field with `P` elements, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const CHECK: () = assert!(P > 2 && P < (1 << 31), "modulus must be an odd prime below 2^31");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp((v % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Symmetric representative in `(-P/2, P/2]`.
    fn signed(self) -> i64 {
        if self.0 > P / 2 {
            self.0 as i64 - P as i64
        } else {
            self.0 as i64
        }
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp(if s >= P as u64 { (s - P as u64) as u32 } else { s as u32 })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        if self.0 >= rhs.0 {
            Fp(self.0 - rhs.0)
        } else {
            Fp(self.0 + (P - rhs.0))
        }
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn kind() -> FieldKind {
        FieldKind::Prime(P)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // extended Euclid on (a, P)
        let (mut r0, mut r1) = (P as i64, self.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is not prime");
        Some(Fp(t0.rem_euclid(P as i64) as u32))
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    fn from_bigint(v: &BigInt) -> Self {
        let r = v.mod_floor(&BigInt::from(P));
        Fp(r.to_u32().expect("residue fits"))
    }

    fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(1..P))
    }

    fn is_negative_repr(&self) -> bool {
        self.signed() < 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = Fp<32003>;

    #[test]
    fn prime_field_inverse() {
        for v in [1u64, 2, 3, 16001, 32002] {
            let a = F::new(v);
            assert_eq!(a * a.inv().unwrap(), F::one());
        }
        assert!(F::zero().inv().is_none());
    }

    #[test]
    fn prime_field_zero_is_unique() {
        assert_eq!(F::new(32003), F::zero());
        assert_eq!(F::from_i64(-32003), F::zero());
        assert_eq!(F::from_i64(-1), F::new(32002));
    }

    #[test]
    fn signed_display() {
        assert_eq!(F::from_i64(-2).to_string(), "-2");
        assert_eq!(F::from_i64(5).to_string(), "5");
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = Rational::from_ratio(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(*q.denom(), BigInt::from(2));
        assert!(Rational::from_ratio(&BigInt::from(1), &BigInt::from(0)).is_none());
    }

    #[test]
    fn fermat_little() {
        let a = F::new(12345);
        assert_eq!(a.pow(32002), F::one());
    }
}
