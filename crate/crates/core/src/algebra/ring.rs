//! Residue rings Z2 and Z4, the coefficient scalars for all polynomial
//! arithmetic in this crate.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A finite commutative coefficient ring with explicit unit inversion.
///
/// Elements are residues `0..MODULUS`. The trait is deliberately small:
/// just enough for dense polynomial arithmetic with division by
/// unit-leading divisors.
pub trait CoeffRing:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    const MODULUS: u8;
    const NAME: &'static str;

    /// Embeds an integer residue, reducing mod `MODULUS`.
    fn from_residue(v: u8) -> Self;

    /// The residue in `0..MODULUS`.
    fn residue(self) -> u8;

    /// Multiplicative inverse, if this element is a unit.
    fn inverse(self) -> Option<Self>;

    fn is_unit(self) -> bool {
        self.inverse().is_some()
    }
}

/// The field with two elements, residues mod 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z2(u8);

/// The ring of integers mod 4. Units are 1 and 3; 2 is the unique
/// nonzero zero divisor.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z4(u8);

impl Z2 {
    pub const fn new(v: u8) -> Self {
        Z2(v & 1)
    }
}

impl Z4 {
    pub const fn new(v: u8) -> Self {
        Z4(v & 3)
    }

    /// Reduction mod 2.
    pub fn mod2(self) -> Z2 {
        Z2::new(self.0)
    }
}

impl From<Z2> for Z4 {
    /// The coefficient-wise lift 0 -> 0, 1 -> 1.
    fn from(b: Z2) -> Z4 {
        Z4(b.0)
    }
}

macro_rules! ring_ops {
    ($t:ident, $m:expr) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $t((self.0 + rhs.0) % $m)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $t((self.0 + $m - rhs.0) % $m)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $t((self.0 * rhs.0) % $m)
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $t(($m - self.0) % $m)
            }
        }
        impl Zero for $t {
            fn zero() -> $t {
                $t(0)
            }
            fn is_zero(&self) -> bool {
                self.0 == 0
            }
        }
        impl One for $t {
            fn one() -> $t {
                $t(1)
            }
        }
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

ring_ops!(Z2, 2);
ring_ops!(Z4, 4);

impl CoeffRing for Z2 {
    const MODULUS: u8 = 2;
    const NAME: &'static str = "Z2";

    fn from_residue(v: u8) -> Self {
        Z2(v % 2)
    }

    fn residue(self) -> u8 {
        self.0
    }

    fn inverse(self) -> Option<Self> {
        (self.0 == 1).then_some(self)
    }
}

impl CoeffRing for Z4 {
    const MODULUS: u8 = 4;
    const NAME: &'static str = "Z4";

    fn from_residue(v: u8) -> Self {
        Z4(v % 4)
    }

    fn residue(self) -> u8 {
        self.0
    }

    fn inverse(self) -> Option<Self> {
        // 1*1 = 1 and 3*3 = 9 = 1; 0 and 2 are not units.
        match self.0 {
            1 | 3 => Some(self),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_arithmetic() {
        let a = Z4::new(3);
        let b = Z4::new(2);
        assert_eq!(a + b, Z4::new(1));
        assert_eq!(a - b, Z4::new(1));
        assert_eq!(a * b, Z4::new(2));
        assert_eq!(-a, Z4::new(1));
        assert_eq!(a.inverse(), Some(Z4::new(3)));
        assert_eq!(b.inverse(), None);
        assert_eq!(Z4::new(7), Z4::new(3));
    }

    #[test]
    fn z2_arithmetic() {
        let one = Z2::new(1);
        assert_eq!(one + one, Z2::new(0));
        assert_eq!(one * one, one);
        assert_eq!(-one, one);
        assert!(Z2::new(0).inverse().is_none());
    }

    #[test]
    fn mod2_reduction() {
        assert_eq!(Z4::new(3).mod2(), Z2::new(1));
        assert_eq!(Z4::new(2).mod2(), Z2::new(0));
        assert_eq!(Z4::from(Z2::new(1)), Z4::new(1));
    }
}
