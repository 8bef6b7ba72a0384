//! Coefficient rings: GF(2), GF(2^k) and the integers.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::field::{Fe, FieldDesc};

/// Runtime tag of a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingTag {
    Gf2,
    Gf2k(FieldDesc),
    Int,
}

/// A commutative coefficient ring. The ring value carries whatever context the
/// arithmetic needs (the modulus for GF(2^k)); elements are plain data.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn tag(&self) -> RingTag;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Image of an integer under the canonical map Z -> R.
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Multiplies by the integer `n` (used for formal derivatives).
    fn mul_int(&self, a: &Self::Elem, n: u64) -> Self::Elem {
        self.mul(a, &self.from_i64(n as i64))
    }

    /// Text form of a coefficient as it appears before `*` in a term.
    fn fmt_coeff(&self, a: &Self::Elem) -> String;
}

/// The prime field GF(2). Elements are `0` or `1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gf2;

impl Ring for Gf2 {
    type Elem = u8;

    fn tag(&self) -> RingTag {
        RingTag::Gf2
    }
    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn is_zero(&self, a: &u8) -> bool {
        *a == 0
    }
    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }
    fn neg(&self, a: &u8) -> u8 {
        *a
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        a & b
    }
    fn from_i64(&self, n: i64) -> u8 {
        (n.rem_euclid(2)) as u8
    }
    fn fmt_coeff(&self, a: &u8) -> String {
        a.to_string()
    }
}

/// The integers, with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn tag(&self) -> RingTag {
        RingTag::Int
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn fmt_coeff(&self, a: &BigInt) -> String {
        if a.is_negative() {
            format!("({a})")
        } else {
            a.to_string()
        }
    }
}

impl Ring for FieldDesc {
    type Elem = Fe;

    fn tag(&self) -> RingTag {
        RingTag::Gf2k(*self)
    }
    fn zero(&self) -> Fe {
        0
    }
    fn one(&self) -> Fe {
        1
    }
    fn is_zero(&self, a: &Fe) -> bool {
        *a == 0
    }
    fn add(&self, a: &Fe, b: &Fe) -> Fe {
        a ^ b
    }
    fn neg(&self, a: &Fe) -> Fe {
        *a
    }
    fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        FieldDesc::mul(self, *a, *b)
    }
    fn from_i64(&self, n: i64) -> Fe {
        (n.rem_euclid(2)) as Fe
    }
    fn fmt_coeff(&self, a: &Fe) -> String {
        format!("{a:#x}")
    }
}
