//! Exact field arithmetic parameterized by characteristic.
//!
//! A [`Characteristic`] is either 0 (work over the rationals with
//! arbitrary-precision integers) or a prime `p` (work in the residue field
//! `F_p`). A [`Scalar`] is a single field element tagged with its
//! characteristic; elements of different characteristics never combine.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

/// Errors from scalar construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// A nonzero, non-prime characteristic was requested.
    #[error("characteristic must be 0 or a prime, got {0}")]
    NotPrime(u64),
    /// Two scalars of different characteristics were combined.
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(Characteristic, Characteristic),
    /// Multiplicative inverse of zero was requested.
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    /// A fraction with denominator zero (or divisible by p) was requested.
    #[error("invalid denominator")]
    BadDenominator,
}

/// The characteristic of the base field: 0 or a prime.
///
/// Primality is checked at construction, so every `Characteristic` in
/// circulation describes an actual field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(u64);

impl Characteristic {
    /// Characteristic 0: exact rational arithmetic.
    pub const ZERO: Characteristic = Characteristic(0);

    /// Builds a characteristic from a raw value (0 or a prime).
    pub fn new(value: u64) -> Result<Self, ScalarError> {
        if value == 0 || is_prime(value) {
            Ok(Characteristic(value))
        } else {
            Err(ScalarError::NotPrime(value))
        }
    }

    /// Builds a prime characteristic; rejects 0 and composites.
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(Characteristic(p))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// An exact field element: a residue mod a prime, or a reduced rational.
///
/// Invariants: residues lie in `[0, p)`; rationals are in lowest terms with
/// positive denominator (maintained by the underlying `BigRational`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Residue { value: u64, prime: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn zero(c: Characteristic) -> Scalar {
        Scalar::from_integer(0, c)
    }

    pub fn one(c: Characteristic) -> Scalar {
        Scalar::from_integer(1, c)
    }

    /// Embeds an integer into the field, reducing mod p when p > 0.
    pub fn from_integer(k: i64, c: Characteristic) -> Scalar {
        match c.value() {
            0 => Scalar::Rational(BigRational::from_integer(BigInt::from(k))),
            p => {
                // i128 keeps the reduction exact for primes above i64::MAX.
                let v = (k as i128).rem_euclid(p as i128) as u64;
                Scalar::Residue { value: v, prime: p }
            }
        }
    }

    /// Embeds the fraction `num/den`. In characteristic p this is
    /// `num * den^(-1)` and fails when p divides `den`.
    pub fn from_fraction(num: i64, den: i64, c: Characteristic) -> Result<Scalar, ScalarError> {
        if den == 0 {
            return Err(ScalarError::BadDenominator);
        }
        match c.value() {
            0 => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            _ => {
                let d = Scalar::from_integer(den, c);
                let inv = d.inv().map_err(|_| ScalarError::BadDenominator)?;
                Scalar::from_integer(num, c).mul(&inv)
            }
        }
    }

    pub fn characteristic(&self) -> Characteristic {
        match self {
            Scalar::Residue { prime, .. } => Characteristic(*prime),
            Scalar::Rational(_) => Characteristic::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Residue { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Residue { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    /// The residue value, when this scalar lives in some `F_p`.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    /// The underlying reduced fraction, when this scalar has characteristic 0.
    pub fn rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Residue { .. } => None,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        let (a, b) = (self.characteristic(), other.characteristic());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::CharacteristicMismatch(a, b))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Residue { value: a, prime }, Scalar::Residue { value: b, .. }) => {
                let sum = (*a as u128 + *b as u128) % *prime as u128;
                Scalar::Residue {
                    value: sum as u64,
                    prime: *prime,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!("same_field checked"),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Residue { value: a, prime }, Scalar::Residue { value: b, .. }) => {
                let prod = (*a as u128 * *b as u128) % *prime as u128;
                Scalar::Residue {
                    value: prod as u64,
                    prime: *prime,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!("same_field checked"),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Residue { value, prime } => Scalar::Residue {
                value: if *value == 0 { 0 } else { prime - value },
                prime: *prime,
            },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        Ok(match self {
            Scalar::Residue { value, prime } => Scalar::Residue {
                value: inv_mod(*value, *prime),
                prime: *prime,
            },
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.mul(&other.inv()?)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Residue { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Extended Euclid on signed 128-bit integers: returns (g, x, y) with
/// a*x + b*y = g.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0 && a < p);
    let (g, x, _) = extended_gcd(a as i128, p as i128);
    debug_assert_eq!(g, 1, "p is prime and a is nonzero");
    x.rem_euclid(p as i128) as u64
}
