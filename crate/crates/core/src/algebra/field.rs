//! Prime fields F2, F3 and the rationals behind a common [`Field`] trait.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Exact field arithmetic. Implemented for [`Gf2`], [`Gf3`] and [`BigRational`].
pub trait Field:
    Clone + PartialEq + Eq + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Image of an integer under the canonical ring map Z -> K.
    fn from_int(v: i64) -> Self;
}

/// Tag naming one of the supported fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    F2,
    F3,
    Q,
}

impl FieldTag {
    /// Characteristic of the field; 0 for the rationals.
    pub fn characteristic(self) -> u8 {
        match self {
            FieldTag::F2 => 2,
            FieldTag::F3 => 3,
            FieldTag::Q => 0,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::F2 => write!(f, "F2"),
            FieldTag::F3 => write!(f, "F3"),
            FieldTag::Q => write!(f, "Q"),
        }
    }
}

macro_rules! prime_field {
    ($name:ident, $p:expr, $doc:expr) => {
        #[doc = $doc]
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(u8);

        impl $name {
            pub const P: u8 = $p;
            pub const ZERO: $name = $name(0);
            pub const ONE: $name = $name(1);

            /// Reduces any integer into the field.
            pub fn new(v: i64) -> Self {
                $name(v.rem_euclid($p as i64) as u8)
            }

            /// Canonical representative in `0..P`.
            pub fn value(self) -> u8 {
                self.0
            }

            /// All field elements in ascending order.
            pub fn elements() -> impl Iterator<Item = Self> {
                (0..$p).map($name)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl Add for $name {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                $name((self.0 + rhs.0) % $p)
            }
        }

        impl Sub for $name {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                $name((self.0 + $p - rhs.0) % $p)
            }
        }

        impl Mul for $name {
            type Output = Self;
            fn mul(self, rhs: Self) -> Self {
                $name((self.0 * rhs.0) % $p)
            }
        }

        impl Neg for $name {
            type Output = Self;
            fn neg(self) -> Self {
                $name(($p - self.0) % $p)
            }
        }

        impl std::iter::Sum for $name {
            fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
                iter.fold($name(0), |acc, x| acc + x)
            }
        }

        impl Field for $name {
            fn zero() -> Self {
                $name(0)
            }
            fn one() -> Self {
                $name(1)
            }
            fn is_zero(&self) -> bool {
                self.0 == 0
            }
            fn inv(&self) -> Option<Self> {
                (1..$p).map($name).find(|&x| (x * *self).0 == 1)
            }
            fn from_int(v: i64) -> Self {
                $name::new(v)
            }
        }

        impl Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_u8(self.0)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let v = u8::deserialize(d)?;
                if v >= $p {
                    return Err(serde::de::Error::custom(format!("{} is not a canonical element of F{}", v, $p)));
                }
                Ok($name(v))
            }
        }
    };
}

prime_field!(Gf2, 2, "An element of the two-element field.");
prime_field!(Gf3, 3, "An element of the three-element field.");

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// A single field element tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    F2(Gf2),
    F3(Gf3),
    Q(BigRational),
}

impl Scalar {
    pub fn field(&self) -> FieldTag {
        match self {
            Scalar::F2(_) => FieldTag::F2,
            Scalar::F3(_) => FieldTag::F3,
            Scalar::Q(_) => FieldTag::Q,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::F2(x) => x.is_zero(),
            Scalar::F3(x) => x.is_zero(),
            Scalar::Q(x) => Field::is_zero(x),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::F2(x) => write!(f, "{x}"),
            Scalar::F3(x) => write!(f, "{x}"),
            Scalar::Q(x) => write!(f, "{x}"),
        }
    }
}

/// Parses `"p/q"` or `"p"` into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if Zero::is_zero(&den) {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Shorthand for an integer rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_int(v)
}

/// Shorthand for `p/q`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
