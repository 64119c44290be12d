//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Smallest excluded characteristic: contraction divides by factorials up to `3!`.
pub const DEFAULT_MIN_PRIME_EXCLUSIVE: u64 = 7;

/// Coefficient field descriptor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
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

impl Field {
    /// `F_p` with `p` prime and `p > 7`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::prime_above(p, DEFAULT_MIN_PRIME_EXCLUSIVE)
    }

    /// `F_p` with a caller-chosen lower bound: `p` must be prime and `p > bound`.
    pub fn prime_above(p: u64, bound: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!("{p} is not prime")));
        }
        if p <= bound {
            return Err(AlgebraError::InvalidField(format!("{p} must exceed {bound}")));
        }
        if p > u32::MAX as u64 {
            return Err(AlgebraError::InvalidField(format!("{p} exceeds 32 bits")));
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
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                Scalar::Modular {
                    value: r.to_u64().expect("residue fits"),
                    modulus: *p,
                }
            }
        }
    }

    /// `num/den` in this field; `None` when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.from_bigint(num) * &d.inverse().expect("nonzero"))
    }

    /// Embeds an exact rational; fails when the denominator vanishes mod `p`.
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        self.from_ratio(q.numer(), q.denom())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator (guaranteed by `BigRational`); residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p prime.
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
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

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: inv_mod(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), exp as usize)),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, exp as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// True when printing needs a leading minus (rationals only; residues are non-negative).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.abs()),
            m => m.clone(),
        }
    }

    /// Integer value when the scalar is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value as i64),
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
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modular:expr) => {
        #[allow(clippy::suspicious_arithmetic_impl)]
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                        Scalar::Modular {
                            value: $modular(*a, *b, *p),
                            modulus: *p,
                        }
                    }
                    _ => panic!("scalar field mismatch"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, p: u64| (a + b) % p
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, p: u64| (a + p - b) % p
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, p: u64| a * b % p
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_normalize() {
        let q = Field::Rationals;
        let a = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(a.to_string(), "-2/3");
        assert!(q.from_ratio(&BigInt::from(1), &BigInt::from(0)).is_none());
    }

    #[test]
    fn prime_field_bounds() {
        assert!(Field::prime(7).is_err());
        assert!(Field::prime(11).is_ok());
        assert!(Field::prime(9).is_err());
        assert_eq!(Field::prime_above(7, 6).unwrap(), Field::Prime(7));
    }

    #[test]
    fn modular_inverse_and_negation() {
        let f = Field::prime_above(7, 6).unwrap();
        let three = f.from_i64(3);
        assert_eq!(&three * &three.inverse().unwrap(), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        // t^2 - t + 1 vanishes at t = 3 in F_7
        let t = f.from_i64(3);
        assert!((&(&t * &t) - &t + f.one()).is_zero());
    }
}
