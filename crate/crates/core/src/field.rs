//! Prime field arithmetic for specialised probes.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;

/// An element of `F_p`.
///
/// `p == 0` marks an integer constant not yet bound to a modulus, which is
/// what `zero()` and `one()` produce; it is reduced as soon as it meets a
/// bound element.
#[derive(Clone, Copy)]
pub struct Fp {
    v: i64,
    p: u64,
}

impl Fp {
    /// `v mod p`. `p` must be a prime below 2^31.
    pub fn new(v: i64, p: u64) -> Self {
        assert!((2..1 << 31).contains(&p), "modulus out of range: {p}");
        Fp { v: v.rem_euclid(p as i64), p }
    }

    pub fn value(&self) -> i64 {
        self.v
    }

    /// The modulus, or `None` for an unbound constant.
    pub fn modulus(&self) -> Option<u64> {
        (self.p != 0).then_some(self.p)
    }

    fn joint(a: &Fp, b: &Fp) -> Result<u64> {
        match (a.p, b.p) {
            (0, q) | (q, 0) => Ok(q),
            (p, q) if p == q => Ok(p),
            (p, q) => Err(Error::ModulusMismatch(p, q)),
        }
    }

    fn reduce(v: i128, p: u64) -> Fp {
        if p == 0 {
            Fp { v: i64::try_from(v).expect("unbound constant overflow"), p }
        } else {
            Fp { v: v.rem_euclid(p as i128) as i64, p }
        }
    }

    pub fn try_add(&self, o: &Fp) -> Result<Fp> {
        let p = Fp::joint(self, o)?;
        Ok(Fp::reduce(self.v as i128 + o.v as i128, p))
    }

    pub fn try_sub(&self, o: &Fp) -> Result<Fp> {
        let p = Fp::joint(self, o)?;
        Ok(Fp::reduce(self.v as i128 - o.v as i128, p))
    }

    pub fn try_mul(&self, o: &Fp) -> Result<Fp> {
        let p = Fp::joint(self, o)?;
        Ok(Fp::reduce(self.v as i128 * o.v as i128, p))
    }

    /// `self^k`; negative powers require a nonzero element.
    pub fn pow(&self, k: i64) -> Result<Fp> {
        let base = if k < 0 { self.inverse().ok_or_else(|| Error::NotInvertible(self.to_string()))? } else { *self };
        let mut e = k.unsigned_abs();
        let mut b = base;
        let mut acc = Fp { v: 1, p: base.p };
        while e > 0 {
            if e & 1 == 1 {
                acc *= b;
            }
            b *= b;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Option<Fp> {
        if self.p == 0 {
            return matches!(self.v, 1 | -1).then_some(*self);
        }
        if self.v == 0 {
            return None;
        }
        // Fermat: a^(p-2) = a^-1.
        self.pow(self.p as i64 - 2).ok()
    }

    fn canonical(&self, p: u64) -> i64 {
        if p == 0 {
            self.v
        } else {
            self.v.rem_euclid(p as i64)
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, o: &Fp) -> bool {
        match Fp::joint(self, o) {
            Ok(p) => self.canonical(p) == o.canonical(p),
            Err(_) => false,
        }
    }
}

impl Eq for Fp {}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            0 => write!(f, "Fp({})", self.v),
            p => write!(f, "Fp({} mod {p})", self.v),
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }

    fn is_zero(&self) -> bool {
        self.canonical(self.p) == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
}

macro_rules! fp_binop {
    ($tr:ident, $m:ident, $try:ident, $atr:ident, $am:ident) => {
        impl $tr for Fp {
            type Output = Fp;
            fn $m(self, o: Fp) -> Fp {
                self.$try(&o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $atr for Fp {
            fn $am(&mut self, o: Fp) {
                *self = self.$try(&o).unwrap_or_else(|e| panic!("{e}"));
            }
        }
    };
}

fp_binop!(Add, add, try_add, AddAssign, add_assign);
fp_binop!(Sub, sub, try_sub, SubAssign, sub_assign);
fp_binop!(Mul, mul, try_mul, MulAssign, mul_assign);

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::reduce(-(self.v as i128), self.p)
    }
}

impl Ring for Fp {
    fn unit_inverse(&self) -> Option<Self> {
        self.inverse()
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += *a * *b;
    }
}
