//! Polynomial superalgebras `K[X_1..X_s | t_1..t_d]` with commuting even
//! indeterminates and anticommuting odd ones, over a field or over the
//! integers; includes the dual-integers ring `Z[e]` and its square
//! factorization demonstration.
//!
//! Elements are stored as a canonical term map keyed by (odd monomial
//! mask, even exponent vector); no zero coefficients are kept, so
//! equality is structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::parse_expression;
use crate::scalar::{is_prime_u64, Scalar, ScalarDomain};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct TermKey {
    mask: u64,
    evens: Vec<u32>,
}

impl Ord for TermKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.mask.count_ones(), self.mask, &self.evens).cmp(&(
            other.mask.count_ones(),
            other.mask,
            &other.evens,
        ))
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, PartialEq, Eq)]
struct PolyInner {
    base: ScalarDomain,
    even_vars: Vec<String>,
    odd_vars: Vec<String>,
}

/// Variable context of a polynomial superalgebra.
#[derive(Debug, Clone)]
pub struct SuperPolyRing {
    inner: Arc<PolyInner>,
}

impl PartialEq for SuperPolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}
impl Eq for SuperPolyRing {}

impl SuperPolyRing {
    pub fn new<S: Into<String>>(
        base: ScalarDomain,
        even_vars: impl IntoIterator<Item = S>,
        odd_vars: impl IntoIterator<Item = S>,
    ) -> Result<SuperPolyRing> {
        let even_vars: Vec<String> = even_vars.into_iter().map(Into::into).collect();
        let odd_vars: Vec<String> = odd_vars.into_iter().map(Into::into).collect();
        if odd_vars.len() > 63 {
            return Err(Error::Spec("at most 63 odd variables".into()));
        }
        let mut names: Vec<&String> = even_vars.iter().chain(&odd_vars).collect();
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Spec("duplicate variable name".into()));
        }
        Ok(SuperPolyRing {
            inner: Arc::new(PolyInner {
                base,
                even_vars,
                odd_vars,
            }),
        })
    }

    /// The dual integers `Z[e]`, one odd variable over the integers.
    pub fn dual_integers() -> SuperPolyRing {
        SuperPolyRing::new(ScalarDomain::Integer, Vec::new(), vec!["e"]).unwrap()
    }

    pub fn base(&self) -> ScalarDomain {
        self.inner.base
    }

    pub fn zero(&self) -> SuperPolynomial {
        SuperPolynomial {
            ring: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> SuperPolynomial {
        self.scalar(self.inner.base.one())
    }

    pub fn scalar(&self, c: Scalar) -> SuperPolynomial {
        let mut p = self.zero();
        p.add_term(
            TermKey {
                mask: 0,
                evens: vec![0; self.inner.even_vars.len()],
            },
            c,
        );
        p
    }

    pub fn even_var(&self, i: usize) -> SuperPolynomial {
        let mut evens = vec![0; self.inner.even_vars.len()];
        evens[i] = 1;
        let mut p = self.zero();
        p.add_term(TermKey { mask: 0, evens }, self.inner.base.one());
        p
    }

    pub fn odd_var(&self, i: usize) -> SuperPolynomial {
        let mut p = self.zero();
        p.add_term(
            TermKey {
                mask: 1 << i,
                evens: vec![0; self.inner.even_vars.len()],
            },
            self.inner.base.one(),
        );
        p
    }

    /// Parses the extended grammar with even-variable powers
    /// (`factor := name ('^' positive-integer)?`).
    pub fn parse(&self, text: &str) -> Result<SuperPolynomial> {
        let terms = parse_expression(text, true)?;
        let mut out = self.zero();
        for term in terms {
            let mut coeff = match &term.scalar {
                Some((lit, pos)) => self.inner.base.parse_literal(lit).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse {
                        position: *pos,
                        message,
                    },
                    other => other,
                })?,
                None => self.inner.base.one(),
            };
            if term.negated {
                coeff = coeff.neg();
            }
            let mut mask: u64 = 0;
            let mut evens = vec![0u32; self.inner.even_vars.len()];
            let mut vanished = false;
            for factor in &term.factors {
                if let Some(i) = self
                    .inner
                    .even_vars
                    .iter()
                    .position(|v| v == &factor.name)
                {
                    evens[i] += factor.power;
                } else if let Some(i) =
                    self.inner.odd_vars.iter().position(|v| v == &factor.name)
                {
                    if factor.power >= 2 || mask >> i & 1 == 1 {
                        vanished = true; // odd square is structurally zero
                        break;
                    }
                    if koszul_sign_wide(mask, i) < 0 {
                        coeff = coeff.neg();
                    }
                    mask |= 1 << i;
                } else {
                    return Err(Error::UnknownGenerator {
                        name: factor.name.clone(),
                        position: factor.position,
                    });
                }
            }
            if !vanished {
                out.add_term(TermKey { mask, evens }, coeff);
            }
        }
        Ok(out)
    }
}

fn koszul_sign_wide(mask: u64, i: usize) -> i8 {
    let below = (mask & ((1u64 << i) - 1)).count_ones();
    let above = mask.count_ones() - below;
    if above % 2 == 0 {
        1
    } else {
        -1
    }
}

/// An element of a polynomial superalgebra in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    ring: SuperPolyRing,
    terms: BTreeMap<TermKey, Scalar>,
}

impl SuperPolynomial {
    pub fn ring(&self) -> &SuperPolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: TermKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c).expect("same domain");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &SuperPolynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SuperPolynomial {
        let mut out = self.ring.zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.neg());
        }
        out
    }

    pub fn sub(&self, other: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<SuperPolynomial> {
        let mut out = self.ring.zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c)?);
        }
        Ok(out)
    }

    /// Product: even variables commute with everything, odd monomials
    /// multiply by the Koszul sign rule, repeated odd variables vanish.
    pub fn mul(&self, other: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.check_ring(other)?;
        let mut out = self.ring.zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if ka.mask & kb.mask != 0 {
                    continue;
                }
                let sign = wide_koszul(ka.mask, kb.mask);
                let mut c = ca.mul(cb)?;
                if sign < 0 {
                    c = c.neg();
                }
                let evens = ka
                    .evens
                    .iter()
                    .zip(&kb.evens)
                    .map(|(x, y)| x + y)
                    .collect();
                out.add_term(
                    TermKey {
                        mask: ka.mask | kb.mask,
                        evens,
                    },
                    c,
                );
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: usize) -> Result<SuperPolynomial> {
        let mut acc = self.ring.one();
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The odd-variable-free part, a polynomial in the even variables.
    pub fn body(&self) -> SuperPolynomial {
        let mut out = self.ring.zero();
        for (k, c) in &self.terms {
            if k.mask == 0 {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    }

    fn constant_coeff(&self) -> Scalar {
        let zero_key = TermKey {
            mask: 0,
            evens: vec![0; self.ring.inner.even_vars.len()],
        };
        self.terms
            .get(&zero_key)
            .cloned()
            .unwrap_or_else(|| self.ring.inner.base.zero())
    }

    /// A unit has a body that is an invertible constant of the base
    /// ring (any nonzero constant over a field, `+1`/`-1` over the
    /// integers); a body of positive even degree rules a unit out.
    pub fn is_unit(&self) -> bool {
        let body = self.body();
        let c = self.constant_coeff();
        if c.is_zero() || c.invert().is_err() {
            return false;
        }
        body.terms.len() == 1
    }

    /// Exact inverse via the terminating geometric series over the
    /// nilpotent odd part.
    pub fn invert(&self) -> Result<SuperPolynomial> {
        let body = self.body();
        let c = self.constant_coeff();
        if body.terms.len() > 1 {
            return Err(Error::NotInvertible(format!(
                "{self}: body has positive even degree"
            )));
        }
        let c_inv = c
            .invert()
            .map_err(|_| Error::NotInvertible(self.to_string()))?;
        // nu = 1 - f/c has no body, hence is nilpotent.
        let nu = self.ring.one().sub(&self.scale(&c_inv)?)?;
        let mut acc = self.ring.one();
        let mut power = nu.clone();
        while !power.is_zero() {
            acc = acc.add(&power)?;
            power = power.mul(&nu)?;
        }
        let inv = acc.scale(&c_inv)?;
        debug_assert!(self.mul(&inv).unwrap() == self.ring.one());
        Ok(inv)
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (key, c) in &self.terms {
            let mut pieces: Vec<String> = Vec::new();
            for (i, name) in self.ring.inner.even_vars.iter().enumerate() {
                match key.evens[i] {
                    0 => {}
                    1 => pieces.push(name.clone()),
                    e => pieces.push(format!("{name}^{e}")),
                }
            }
            for (i, name) in self.ring.inner.odd_vars.iter().enumerate() {
                if key.mask >> i & 1 == 1 {
                    pieces.push(name.clone());
                }
            }
            let (neg, mag) = if scalar_is_negative(c) {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if pieces.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", pieces.join("*"))?;
            } else {
                write!(f, "{mag}*{}", pieces.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn wide_koszul(a: u64, b: u64) -> i8 {
    let mut inversions = 0u32;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        inversions += (b & ((1u64 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn scalar_is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => r < &num::BigRational::from(num::BigInt::from(0)),
        Scalar::Integer(n) => n < &num::BigInt::from(0),
        Scalar::PrimeField { .. } => false,
    }
}

/// Associate test in the dual integers, from the unit classification
/// `{±1 + b e}`: `a + b e ~ a' + b' e` iff for some sign `s`,
/// `a' = s a` and `b' - s b` is a multiple of `a`.
pub fn dual_integer_associates(x: &SuperPolynomial, y: &SuperPolynomial) -> Result<bool> {
    let (ax, bx) = dual_integer_parts(x)?;
    let (ay, by) = dual_integer_parts(y)?;
    use num::BigInt;
    use num::Zero;
    for sign in [BigInt::from(1), BigInt::from(-1)] {
        if ay != &sign * &ax {
            continue;
        }
        let delta = &by - &sign * &bx;
        if ax.is_zero() {
            if delta.is_zero() {
                return Ok(true);
            }
        } else if (&delta % &ax).is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn dual_integer_parts(x: &SuperPolynomial) -> Result<(num::BigInt, num::BigInt)> {
    let ring = SuperPolyRing::dual_integers();
    if x.ring != ring {
        return Err(Error::AlgebraMismatch);
    }
    let mut a = num::BigInt::from(0);
    let mut b = num::BigInt::from(0);
    for (k, c) in &x.terms {
        let Scalar::Integer(n) = c else {
            unreachable!("dual integers carry integer scalars")
        };
        if k.mask == 0 {
            a = n.clone();
        } else {
            b = n.clone();
        }
    }
    Ok((a, b))
}

/// Irreducibility criterion for the demonstration: `a + b e` with `|a|`
/// prime is irreducible in the dual integers.
pub fn dual_integer_irreducible_by_prime_body(x: &SuperPolynomial) -> Result<bool> {
    let (a, _) = dual_integer_parts(x)?;
    let (_, digits) = num::Signed::abs(&a).to_u64_digits();
    Ok(digits.len() == 1 && is_prime_u64(digits[0]))
}

/// Is the dual integer a zerodivisor? Exactly the multiples of `e`.
pub fn dual_integer_is_zerodivisor(x: &SuperPolynomial) -> Result<bool> {
    let (a, _) = dual_integer_parts(x)?;
    Ok(num::Zero::is_zero(&a))
}

/// Transcript of the `p^2` double-factorization demonstration in the
/// dual integers.
#[derive(Debug, Clone, Serialize)]
pub struct DualIntegerDemo {
    pub prime: u64,
    pub square: String,
    pub first_factors: [String; 2],
    pub second_factors: [String; 2],
    pub products_verified: bool,
    pub factors_irreducible: bool,
    pub factors_regular: bool,
    /// Associate checks between each factor of one factorization and
    /// each factor of the other; all must be false.
    pub cross_associates: [bool; 4],
    pub unit_classification: String,
}

/// Builds and verifies both factorizations
/// `p^2 = (p - e)(p + e) = (p - p e)(p + p e)` and the failure of
/// factor-wise association between them.
pub fn dual_integer_square_demo(p: u64) -> Result<DualIntegerDemo> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let ring = SuperPolyRing::dual_integers();
    let square = ring.parse(&format!("{}", (p as u128) * (p as u128)))?;
    let f1 = [
        ring.parse(&format!("{p} - e"))?,
        ring.parse(&format!("{p} + e"))?,
    ];
    let f2 = [
        ring.parse(&format!("{p} - {p}*e"))?,
        ring.parse(&format!("{p} + {p}*e"))?,
    ];
    let products_verified = f1[0].mul(&f1[1])? == square && f2[0].mul(&f2[1])? == square;
    let mut factors_irreducible = true;
    let mut factors_regular = true;
    for f in f1.iter().chain(&f2) {
        factors_irreducible &= dual_integer_irreducible_by_prime_body(f)?;
        factors_regular &= !dual_integer_is_zerodivisor(f)?;
    }
    let cross_associates = [
        dual_integer_associates(&f1[0], &f2[0])?,
        dual_integer_associates(&f1[0], &f2[1])?,
        dual_integer_associates(&f1[1], &f2[0])?,
        dual_integer_associates(&f1[1], &f2[1])?,
    ];
    let demo = DualIntegerDemo {
        prime: p,
        square: square.to_string(),
        first_factors: [f1[0].to_string(), f1[1].to_string()],
        second_factors: [f2[0].to_string(), f2[1].to_string()],
        products_verified,
        factors_irreducible,
        factors_regular,
        cross_associates,
        unit_classification: "units are exactly s + b*e with s in {1, -1}".into(),
    };
    if !products_verified {
        return Err(Error::VerificationFailed("products differ from p^2".into()));
    }
    if cross_associates.iter().any(|&x| x) {
        return Err(Error::VerificationFailed(
            "factors of the two factorizations are associate".into(),
        ));
    }
    Ok(demo)
}
