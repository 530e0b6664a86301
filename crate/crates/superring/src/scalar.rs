//! Exact arithmetic over the three supported coefficient domains:
//! arbitrary-precision rationals, prime fields `F_p` (machine-word `p`,
//! `p = 2` allowed), and arbitrary-precision integers.
//!
//! Every value has a unique canonical representation, so equality of
//! scalars is representation equality: rationals are stored fully
//! reduced with positive denominator, prime-field residues lie in
//! `[0, p)`, integers are signed bignums.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin, valid for all `u64` inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Tag identifying one of the three coefficient domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarDomain {
    Rational,
    PrimeField(u64),
    Integer,
}

impl ScalarDomain {
    /// Builds the `F_p` tag, rejecting composite moduli.
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(ScalarDomain::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, ScalarDomain::Integer)
    }

    /// Number of elements for finite domains (`F_p`), `None` otherwise.
    pub fn size(&self) -> Option<u64> {
        match self {
            ScalarDomain::PrimeField(p) => Some(*p),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, value: i64) -> Scalar {
        match self {
            ScalarDomain::Rational => Scalar::Rational(BigRational::from(BigInt::from(value))),
            ScalarDomain::PrimeField(p) => {
                let r = (value % *p as i64 + *p as i64) as u64 % p;
                Scalar::PrimeField { p: *p, value: r }
            }
            ScalarDomain::Integer => Scalar::Integer(BigInt::from(value)),
        }
    }

    pub fn from_bigint(&self, value: BigInt) -> Scalar {
        match self {
            ScalarDomain::Rational => Scalar::Rational(BigRational::from(value)),
            ScalarDomain::PrimeField(p) => {
                let m = BigInt::from(*p);
                let mut r = value % &m;
                if r.is_negative() {
                    r += &m;
                }
                let (_, digits) = r.to_u64_digits();
                Scalar::PrimeField {
                    p: *p,
                    value: digits.first().copied().unwrap_or(0),
                }
            }
            ScalarDomain::Integer => Scalar::Integer(value),
        }
    }

    /// Parses a scalar literal: `-?[0-9]+` or `-?[0-9]+/[1-9][0-9]*`.
    /// Rational literals are valid over the rationals only; prime-field
    /// literals are integers reduced mod `p`.
    pub fn parse_literal(&self, text: &str) -> Result<Scalar> {
        let err = |msg: &str| Error::Parse {
            position: 0,
            message: format!("{msg}: `{text}`"),
        };
        if let Some((num, den)) = text.split_once('/') {
            if *self != ScalarDomain::Rational {
                return Err(err("rational literal outside the rational domain"));
            }
            let n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
            let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
            if d.is_zero() || d.is_negative() {
                return Err(err("denominator must be positive"));
            }
            Ok(Scalar::Rational(BigRational::new(n, d)))
        } else {
            let n: BigInt = text.parse().map_err(|_| err("bad integer literal"))?;
            Ok(self.from_bigint(n))
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ScalarDomain::Rational => "Q".into(),
            ScalarDomain::PrimeField(p) => format!("F{p}"),
            ScalarDomain::Integer => "Z".into(),
        }
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// An exact scalar in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    PrimeField { p: u64, value: u64 },
    Integer(BigInt),
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rational(_) => ScalarDomain::Rational,
            Scalar::PrimeField { p, .. } => ScalarDomain::PrimeField(*p),
            Scalar::Integer(_) => ScalarDomain::Integer,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::PrimeField { value, .. } => *value == 0,
            Scalar::Integer(n) => n.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::PrimeField { value, .. } => *value == 1,
            Scalar::Integer(n) => n.is_one(),
        }
    }

    fn check_same_domain(&self, other: &Scalar) -> Result<()> {
        if self.domain() == other.domain() {
            Ok(())
        } else {
            Err(Error::DomainMismatch(
                self.domain().describe(),
                other.domain().describe(),
            ))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::PrimeField { p, value: a }, Scalar::PrimeField { value: b, .. }) => {
                Scalar::PrimeField {
                    p: *p,
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same_domain(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::PrimeField { p, value: a }, Scalar::PrimeField { value: b, .. }) => {
                Scalar::PrimeField {
                    p: *p,
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::PrimeField { p, value } => Scalar::PrimeField {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
            Scalar::Integer(a) => Scalar::Integer(-a),
        }
    }

    /// Multiplicative inverse. Fails on zero, and on non-unit integers
    /// (only `1` and `-1` are invertible over the integers).
    pub fn invert(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero scalar".into()));
        }
        match self {
            Scalar::Rational(a) => Ok(Scalar::Rational(a.recip())),
            Scalar::PrimeField { p, value } => {
                // Fermat: a^(p-2) mod p.
                let mut acc: u64 = 1;
                let mut base = *value;
                let mut exp = p - 2;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = ((acc as u128 * base as u128) % *p as u128) as u64;
                    }
                    base = ((base as u128 * base as u128) % *p as u128) as u64;
                    exp >>= 1;
                }
                Ok(Scalar::PrimeField { p: *p, value: acc })
            }
            Scalar::Integer(n) => {
                if n.is_one() || (-n).is_one() {
                    Ok(Scalar::Integer(n.clone()))
                } else {
                    Err(Error::NotInvertible(format!(
                        "{n} has no integer inverse"
                    )))
                }
            }
        }
    }

    /// Division in a field domain.
    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        self.mul(&other.invert()?)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::PrimeField { value, .. } => write!(f, "{value}"),
            Scalar::Integer(n) => write!(f, "{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> Scalar {
        ScalarDomain::Rational.parse_literal(text).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(q("1/2").add(&q("1/3")).unwrap(), q("5/6"));
    }

    #[test]
    fn prime_field_multiplication() {
        let f5 = ScalarDomain::prime_field(5).unwrap();
        assert_eq!(f5.from_i64(2).mul(&f5.from_i64(3)).unwrap(), f5.one());
    }

    #[test]
    fn integer_negation_identity() {
        let z = ScalarDomain::Integer;
        assert_eq!(z.zero().neg(), z.zero());
    }

    #[test]
    fn prime_field_inverse() {
        // Oracle: 2 * 3 = 6 = 1 mod 5.
        let f5 = ScalarDomain::prime_field(5).unwrap();
        let inv = f5.from_i64(2).invert().unwrap();
        assert_eq!(inv, f5.from_i64(3));
        assert!(f5.from_i64(2).mul(&inv).unwrap().is_one());
    }

    #[test]
    fn rational_inverse() {
        assert_eq!(q("-3/4").invert().unwrap(), q("-4/3"));
    }

    #[test]
    fn integer_inverse_rejected() {
        let two = ScalarDomain::Integer.from_i64(2);
        assert!(matches!(two.invert(), Err(Error::NotInvertible(_))));
        let minus_one = ScalarDomain::Integer.from_i64(-1);
        assert_eq!(minus_one.invert().unwrap(), minus_one);
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(ScalarDomain::prime_field(4), Err(Error::NotPrime(4))));
        assert!(ScalarDomain::prime_field(2).is_ok());
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let a = ScalarDomain::Rational.one();
        let b = ScalarDomain::Integer.one();
        assert!(matches!(a.add(&b), Err(Error::DomainMismatch(..))));
    }

    #[test]
    fn negative_literal_reduces_mod_p() {
        let f3 = ScalarDomain::prime_field(3).unwrap();
        assert_eq!(f3.parse_literal("-1").unwrap(), f3.from_i64(2));
        assert!(f3.parse_literal("1/2").is_err());
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..2000 {
            assert_eq!(is_prime_u64(n), trial(n), "disagree at {n}");
        }
        assert!(is_prime_u64(2_147_483_647));
        assert!(!is_prime_u64(2_147_483_649));
    }
}
