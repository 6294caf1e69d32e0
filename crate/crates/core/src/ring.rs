//! The scalar abstraction shared by matrices and representations.
//!
//! Every scalar is a commutative ring element built on the `num-traits`
//! identities. Scalars that live in a parameterised ring (a Laurent ring
//! with named variables, a prime field with a modulus) allow their
//! `zero()`/`one()` to be context free; such constants adopt the context of
//! whatever they are combined with.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub trait Ring:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + Send
    + Sync
{
    /// The multiplicative inverse, when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// `-1` in the ring, in the context of `self`.
    fn neg_one() -> Self {
        -Self::one()
    }

    // Borrowing arithmetic, so that matrix products do not clone every
    // entry. The defaults clone; heap-backed scalars override them.

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn neg_ref(&self) -> Self {
        -self.clone()
    }

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a.mul_ref(b);
    }

    /// The image of an integer, by double-and-add from `one()`.
    fn from_int(c: i64) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        let mut k = c.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc += base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.add_ref(&base);
            }
        }
        if c < 0 {
            -acc
        } else {
            acc
        }
    }
}

impl Ring for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Ring for i64 {
    fn unit_inverse(&self) -> Option<Self> {
        match self {
            1 | -1 => Some(*self),
            _ => None,
        }
    }
}
