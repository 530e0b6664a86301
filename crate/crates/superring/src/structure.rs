//! Graded ideals and ring-structure predicates: the canonical
//! superideal, superreduction, nilradical, units and exact inverses,
//! locality, prime and maximal ideals, superdomain/superfield tests,
//! and ideal powers.

use serde::Serialize;

use crate::algebra::{Element, Superalgebra};
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, RowSpace};
use crate::monomial::Parity;
use crate::scalar::Scalar;

/// A graded two-sided ideal, stored as generators plus a row-reduced
/// basis split by parity. Non-homogeneous generators are split into
/// their parity components, both of which are adjoined; prime and
/// maximal ideals are automatically graded, so nothing is lost.
#[derive(Debug, Clone)]
pub struct Ideal {
    algebra: Superalgebra,
    generators: Vec<Element>,
    space: RowSpace,
    even_basis: Vec<Element>,
    odd_basis: Vec<Element>,
}

impl Ideal {
    pub fn algebra(&self) -> &Superalgebra {
        &self.algebra
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// (even, odd) dimensions of the ideal as a graded subspace.
    pub fn dims(&self) -> (usize, usize) {
        (self.even_basis.len(), self.odd_basis.len())
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn even_basis(&self) -> &[Element] {
        &self.even_basis
    }

    pub fn odd_basis(&self) -> &[Element] {
        &self.odd_basis
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        self.even_basis
            .iter()
            .chain(&self.odd_basis)
            .cloned()
            .collect()
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        if x.algebra() != &self.algebra {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.space.contains(x.coeffs()))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other
            .basis_elements()
            .iter()
            .all(|v| self.space.contains(v.coeffs()))
    }

    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.space.same_space(&other.space)
    }

    pub fn is_zero(&self) -> bool {
        self.space.rank() == 0
    }

    pub fn is_proper(&self) -> bool {
        !self.space.contains(self.algebra.one().coeffs())
    }

    /// Canonical representative of `x` modulo the ideal.
    pub fn residue(&self, x: &Element) -> Element {
        let mut coeffs = x.coeffs().to_vec();
        self.space.reduce(&mut coeffs);
        self.algebra
            .element_from_coeffs(coeffs)
            .expect("same algebra")
    }

    /// Product ideal `self^k`. `k = 0` is rejected.
    pub fn power(&self, k: usize) -> Result<Ideal> {
        if k == 0 {
            return Err(Error::Precondition("ideal power requires k >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            let mut products = Vec::new();
            for b in acc.basis_elements() {
                for c in self.basis_elements() {
                    let p = b.mul_unchecked(&c);
                    if !p.is_zero() {
                        products.push(p);
                    }
                }
            }
            acc = ideal_from_homogeneous_span(&self.algebra, products);
        }
        Ok(acc)
    }

    /// Least `m >= 1` with `self^m = 0`, or `None` when the powers
    /// stabilize at a nonzero ideal.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let mut current = self.clone();
        let mut m = 1;
        loop {
            if current.is_zero() {
                return Some(m);
            }
            let next = current.multiply(self);
            if next.rank() == current.rank() {
                return None;
            }
            current = next;
            m += 1;
        }
    }

    fn multiply(&self, other: &Ideal) -> Ideal {
        let mut products = Vec::new();
        for b in self.basis_elements() {
            for c in other.basis_elements() {
                let p = b.mul_unchecked(&c);
                if !p.is_zero() {
                    products.push(p);
                }
            }
        }
        ideal_from_homogeneous_span(&self.algebra, products)
    }

    /// Summary report with structural flags, as emitted by the CLI.
    pub fn report(&self) -> Result<IdealReport> {
        let (even, odd) = self.dims();
        Ok(IdealReport {
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            dims: GradedDims { even, odd },
            flags: IdealFlags {
                prime: if self.is_proper() {
                    Some(is_prime_ideal(self)?)
                } else {
                    None
                },
                maximal: if self.is_proper() {
                    Some(is_maximal_ideal(self)?)
                } else {
                    None
                },
                nilpotency_index: self.nilpotency_index(),
            },
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedDims {
    pub even: usize,
    pub odd: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealFlags {
    pub prime: Option<bool>,
    pub maximal: Option<bool>,
    pub nilpotency_index: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub generators: Vec<String>,
    pub dims: GradedDims,
    pub flags: IdealFlags,
}

/// Builds the ideal spanned by homogeneous elements that already form a
/// multiplication-closed span (used internally by powers/products).
fn ideal_from_homogeneous_span(algebra: &Superalgebra, span: Vec<Element>) -> Ideal {
    build_ideal(algebra, span, Vec::new())
}

fn build_ideal(algebra: &Superalgebra, pieces: Vec<Element>, generators: Vec<Element>) -> Ideal {
    let dim = algebra.dim();
    let mut space = RowSpace::new(algebra.field(), dim);
    // Left monomial multiples of each homogeneous piece span the
    // two-sided ideal: supercommutativity folds right multiples into
    // left ones up to sign.
    for piece in &pieces {
        debug_assert!(piece.is_homogeneous());
        for j in 0..dim {
            let prod = algebra.basis_element(j).mul_unchecked(piece);
            if !prod.is_zero() {
                space.insert(prod.coeffs().to_vec());
            }
        }
    }

    let mut even_basis = Vec::new();
    let mut odd_basis = Vec::new();
    for row in space.rows() {
        let e = algebra
            .element_from_coeffs(row.clone())
            .expect("row in algebra");
        match e.homogeneous_parity() {
            Some(Parity::Even) => even_basis.push(e),
            Some(Parity::Odd) => odd_basis.push(e),
            None => unreachable!("ideal rows stay parity-homogeneous"),
        }
    }

    let ideal = Ideal {
        algebra: algebra.clone(),
        generators,
        space,
        even_basis,
        odd_basis,
    };
    // Closure check: multiplication by every basis monomial stays inside.
    debug_assert!(ideal.basis_elements().iter().all(|v| (0..dim).all(|j| {
        let p = algebra.basis_element(j).mul_unchecked(v);
        ideal.space.contains(p.coeffs())
    })));
    ideal
}

/// Smallest graded ideal containing the generators. Non-homogeneous
/// generators contribute both parity components.
pub fn ideal_from_generators(algebra: &Superalgebra, generators: &[Element]) -> Result<Ideal> {
    let mut pieces = Vec::new();
    for g in generators {
        if g.algebra() != algebra {
            return Err(Error::AlgebraMismatch);
        }
        let (even, odd) = g.parity_decompose();
        if !even.is_zero() {
            pieces.push(even);
        }
        if !odd.is_zero() {
            pieces.push(odd);
        }
    }
    Ok(build_ideal(algebra, pieces, generators.to_vec()))
}

/// The canonical superideal `J = R·R_odd = R_odd^2 + R_odd`: the ideal
/// generated by all odd elements.
pub fn canonical_superideal(algebra: &Superalgebra) -> Ideal {
    let gens: Vec<Element> = (0..algebra.dim())
        .filter(|&i| algebra.basis_parity(i) == Parity::Odd)
        .map(|i| algebra.basis_element(i))
        .collect();
    build_ideal(algebra, gens.clone(), gens)
}

/// Description of a quotient `R / a` by a graded ideal: graded residue
/// dimensions and a projection onto canonical representatives.
#[derive(Debug, Clone)]
pub struct QuotientDescription {
    ideal: Ideal,
    residue_dims: (usize, usize),
}

impl QuotientDescription {
    pub fn new(ideal: Ideal) -> QuotientDescription {
        let (ae, ao) = ideal.algebra.dims();
        let (ie, io) = ideal.dims();
        QuotientDescription {
            residue_dims: (ae - ie, ao - io),
            ideal,
        }
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn residue_dims(&self) -> (usize, usize) {
        self.residue_dims
    }

    /// Canonical representative of the residue class of `x`; the kernel
    /// of this projection is exactly the ideal.
    pub fn project(&self, x: &Element) -> Element {
        self.ideal.residue(x)
    }
}

/// The superreduction `R / J`; for odd-generated algebras the residue is
/// one-dimensional even, isomorphic to the base field.
pub fn superreduction(algebra: &Superalgebra) -> QuotientDescription {
    QuotientDescription::new(canonical_superideal(algebra))
}

impl Element {
    /// Exact nilpotency test: in a `d`-dimensional algebra a nilpotent
    /// element has index at most `d + 1` (its lower powers are linearly
    /// independent), so one bounded power decides.
    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.algebra().dim() + 1).is_zero()
    }
}

/// The ideal of nilpotent elements. Finite fields get an exhaustive
/// sweep; over the rationals the algebra must be a superdomain, where
/// the nilradical coincides with the canonical superideal.
pub fn nilradical(algebra: &Superalgebra) -> Result<Ideal> {
    if algebra.is_finite() {
        let mut nilpotents = Vec::new();
        for x in algebra.enumerate_elements()? {
            if !x.is_zero() && x.is_nilpotent() {
                nilpotents.push(x);
            }
        }
        let ideal = ideal_from_generators(algebra, &nilpotents)?;
        // The nilpotent set must itself be closed into the same span.
        for x in &nilpotents {
            debug_assert!(ideal.contains(x).unwrap());
        }
        Ok(ideal)
    } else if is_superdomain(algebra)? {
        Ok(canonical_superideal(algebra))
    } else {
        Err(Error::Unsupported(
            "nilradical over an infinite field requires a superdomain".into(),
        ))
    }
}

impl Element {
    /// Units are exactly the elements with a nonzero constant
    /// coefficient: the complement is the canonical superideal, which is
    /// nilpotent, and no nilpotent is a unit.
    pub fn is_unit(&self) -> bool {
        !self.constant_coeff().is_zero()
    }

    /// Exact two-sided inverse via the terminating geometric series:
    /// with `a = c(1 - nu)` and `nu` nilpotent,
    /// `a^-1 = c^-1 (1 + nu + nu^2 + ...)`.
    pub fn invert(&self) -> Result<Element> {
        if !self.is_unit() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let c = self.constant_coeff().clone();
        let c_inv = c.invert()?;
        // nu = 1 - a/c
        let nu = self
            .algebra()
            .one()
            .sub(&self.scale(&c_inv)?)
            .expect("same algebra");
        let mut acc = self.algebra().one();
        let mut power = nu.clone();
        let mut guard = 0;
        while !power.is_zero() {
            acc = acc.add(&power)?;
            power = power.mul_unchecked(&nu);
            guard += 1;
            debug_assert!(guard <= self.algebra().generator_count() + 2);
        }
        let inverse = acc.scale(&c_inv)?;
        debug_assert!(self.mul_unchecked(&inverse) == self.algebra().one());
        debug_assert!(inverse.mul_unchecked(self) == self.algebra().one());
        Ok(inverse)
    }
}

/// All maximal ideals. Odd-generated algebras are local: the non-units
/// form exactly the canonical superideal, and any maximal ideal consists
/// of non-units, so the canonical superideal is the unique one.
pub fn maximal_ideals(algebra: &Superalgebra) -> Vec<Ideal> {
    let j = canonical_superideal(algebra);
    // Sanity: membership in J coincides with being a non-unit.
    debug_assert!({
        let probe = |x: &Element| j.contains(x).unwrap() == !x.is_unit();
        probe(&algebra.one()) && (0..algebra.dim()).all(|i| probe(&algebra.basis_element(i)))
    });
    vec![j]
}

/// Intersection of all maximal ideals.
pub fn jacobson_radical(algebra: &Superalgebra) -> Ideal {
    let mut ideals = maximal_ideals(algebra);
    let first = ideals.remove(0);
    ideals.into_iter().fold(first, |acc, next| {
        let common: Vec<Element> = acc
            .basis_elements()
            .into_iter()
            .filter(|v| next.contains(v).unwrap())
            .collect();
        ideal_from_homogeneous_span(&acc.algebra.clone(), common)
    })
}

pub fn is_local(algebra: &Superalgebra) -> bool {
    maximal_ideals(algebra).len() == 1
}

/// Homogeneous elements of a finite algebra (both parities), nonzero.
fn homogeneous_elements(algebra: &Superalgebra) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for x in algebra.enumerate_elements()? {
        if !x.is_zero() && x.is_homogeneous() {
            out.push(x);
        }
    }
    Ok(out)
}

/// Primality of a graded ideal: the quotient is an integral domain.
///
/// Finite fields: exhaustive over homogeneous pairs outside the ideal
/// (for superideals, homogeneous pairs decide primality). Rationals:
/// a prime ideal must contain every nilpotent, hence the whole canonical
/// superideal; above it the quotient is the base field.
pub fn is_prime_ideal(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let algebra = &ideal.algebra;
    if algebra.is_finite() {
        let candidates: Vec<Element> = homogeneous_elements(algebra)?
            .into_iter()
            .filter(|x| !ideal.contains(x).unwrap())
            .collect();
        for x in &candidates {
            for y in &candidates {
                if ideal.contains(&x.mul_unchecked(y)).unwrap() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    } else {
        let j = canonical_superideal(algebra);
        // Every element of J is nilpotent (J^(n+1) = 0), and a quotient
        // by an ideal missing some nilpotent has zerodivisors.
        debug_assert!(j.nilpotency_index().is_some());
        Ok(ideal.contains_ideal(&j))
    }
}

/// Maximality of a graded ideal: the quotient is a field.
pub fn is_maximal_ideal(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let algebra = &ideal.algebra;
    let q = QuotientDescription::new(ideal.clone());
    if q.residue_dims().1 > 0 {
        // A nonzero odd residue squares to zero; fields have no
        // nilpotents.
        return Ok(false);
    }
    if algebra.is_finite() {
        // Every nonzero residue must be invertible modulo the ideal.
        let dim = algebra.dim();
        'outer: for x in algebra.enumerate_elements()? {
            let r = q.project(&x);
            if r.is_zero() {
                continue;
            }
            let mut columns: Vec<Vec<Scalar>> = (0..dim)
                .map(|jx| r.mul_unchecked(&algebra.basis_element(jx)).coeffs().to_vec())
                .collect();
            for v in ideal.basis_elements() {
                columns.push(v.coeffs().to_vec());
            }
            if solve_affine(algebra.field(), &columns, algebra.one().coeffs()).is_some() {
                continue 'outer;
            }
            return Ok(false);
        }
        Ok(true)
    } else {
        let j = canonical_superideal(algebra);
        if !ideal.contains_ideal(&j) {
            return Ok(false);
        }
        // Between J and R the only proper ideal is J itself, with
        // residue the base field.
        Ok(true)
    }
}

/// `R` is a superdomain when its superreduction is a domain,
/// equivalently when the canonical superideal is prime.
pub fn is_superdomain(algebra: &Superalgebra) -> Result<bool> {
    is_prime_ideal(&canonical_superideal(algebra))
}

/// `R` is a superfield when its superreduction is a field,
/// equivalently when the canonical superideal is maximal.
pub fn is_superfield(algebra: &Superalgebra) -> Result<bool> {
    is_maximal_ideal(&canonical_superideal(algebra))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::scalar::ScalarDomain;

    fn f2_free2() -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::prime_field(2).unwrap(),
            ["t1", "t2"],
            [],
        ))
        .unwrap()
    }

    fn ex312(domain: ScalarDomain) -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(
            domain,
            vec!["e1", "e2", "e3"],
            vec!["e1*e2 - e1*e3"],
        ))
        .unwrap()
    }

    fn dual_q() -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(ScalarDomain::Rational, ["e"], [])).unwrap()
    }

    #[test]
    fn principal_ideal_closure() {
        // Oracle: multiplying t1 by every monomial gives t1 and t1*t2.
        let alg = f2_free2();
        let i = ideal_from_generators(&alg, &[alg.generator(0)]).unwrap();
        assert_eq!(i.dims(), (1, 1));
        assert!(i.contains(&alg.parse_element("t1").unwrap()).unwrap());
        assert!(i.contains(&alg.parse_element("t1*t2").unwrap()).unwrap());
        assert!(!i.contains(&alg.parse_element("t2").unwrap()).unwrap());
    }

    #[test]
    fn zero_and_unit_ideals() {
        let alg = f2_free2();
        let z = ideal_from_generators(&alg, &[alg.zero()]).unwrap();
        assert_eq!(z.dims(), (0, 0));
        assert!(z.is_zero());
        let u = ideal_from_generators(&alg, &[alg.one()]).unwrap();
        assert!(!u.is_proper());
        assert_eq!(u.rank(), alg.dim());
    }

    #[test]
    fn canonical_superideal_shapes() {
        let alg = f2_free2();
        let j = canonical_superideal(&alg);
        assert_eq!(j.dims(), (1, 2)); // {t1*t2} even, {t1, t2} odd
        for text in ["t1", "t2", "t1*t2", "t1 + t2 + t1*t2"] {
            assert!(j.contains(&alg.parse_element(text).unwrap()).unwrap());
        }
        assert!(!j.contains(&alg.parse_element("1 + t1").unwrap()).unwrap());

        let s = ex312(ScalarDomain::Rational);
        let js = canonical_superideal(&s);
        assert_eq!(js.dims(), (2, 3));

        let d = dual_q();
        let jd = canonical_superideal(&d);
        assert_eq!(jd.dims(), (0, 1));
    }

    #[test]
    fn canonical_even_part_is_odd_square() {
        // J_even must equal the span of products of two odd elements.
        for alg in [f2_free2(), ex312(ScalarDomain::Rational)] {
            let j = canonical_superideal(&alg);
            let odd: Vec<Element> = (0..alg.dim())
                .filter(|&i| alg.basis_parity(i) == Parity::Odd)
                .map(|i| alg.basis_element(i))
                .collect();
            let mut span = RowSpace::new(alg.field(), alg.dim());
            for a in &odd {
                for b in &odd {
                    let p = a.mul_unchecked(b);
                    if !p.is_zero() {
                        span.insert(p.coeffs().to_vec());
                    }
                }
            }
            assert_eq!(span.rank(), j.dims().0);
            for v in j.even_basis() {
                assert!(span.contains(v.coeffs()));
            }
        }
    }

    #[test]
    fn superreduction_is_the_base_field() {
        let q = superreduction(&ex312(ScalarDomain::Rational));
        assert_eq!(q.residue_dims(), (1, 0));
        let alg = q.ideal().algebra().clone();
        let x = alg.parse_element("2 + e1 + e1*e2").unwrap();
        assert_eq!(x.constant_coeff(), q.project(&x).constant_coeff());
        assert!(q.project(&alg.generator(0)).is_zero());

        assert_eq!(superreduction(&f2_free2()).residue_dims(), (1, 0));
        assert_eq!(superreduction(&dual_q()).residue_dims(), (1, 0));
    }

    #[test]
    fn nilradical_matches_canonical_ideal() {
        let alg = f2_free2();
        let nil = nilradical(&alg).unwrap();
        assert!(nil.same_ideal(&canonical_superideal(&alg)));

        let s = ex312(ScalarDomain::prime_field(3).unwrap());
        let nil_s = nilradical(&s).unwrap();
        assert!(nil_s.same_ideal(&canonical_superideal(&s)));

        let d = dual_q();
        let nil_d = nilradical(&d).unwrap();
        assert_eq!(nil_d.dims(), (0, 1));
        assert!(nil_d.contains(&d.generator(0)).unwrap());
    }

    #[test]
    fn dual_number_inverse_formula() {
        // (a0 + a1 e)^-1 = a0^-1 - a1 a0^-2 e
        let d = dual_q();
        let q = ScalarDomain::Rational;
        let a = d.parse_element("3 + 5*e").unwrap();
        let inv = a.invert().unwrap();
        let a0_inv = q.parse_literal("1/3").unwrap();
        let expected = d
            .scalar_element(a0_inv.clone())
            .add_scaled(
                &q.parse_literal("5").unwrap().mul(&a0_inv.mul(&a0_inv).unwrap()).unwrap().neg(),
                &d.generator(0),
            )
            .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(a.mul(&inv).unwrap(), d.one());
    }

    #[test]
    fn grassmann3_quotient_inverse() {
        let s = ex312(ScalarDomain::Rational);
        let x = s.parse_element("1 + e1 + e1*e2").unwrap();
        let inv = x.invert().unwrap();
        assert_eq!(inv, s.parse_element("1 - e1 - e1*e2").unwrap());
        assert!(matches!(
            s.generator(0).invert(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn unit_count_of_f2_two_generators() {
        let alg = f2_free2();
        let units: Vec<Element> = alg
            .enumerate_elements()
            .unwrap()
            .filter(|x| x.is_unit())
            .collect();
        assert_eq!(units.len(), 8);
        for u in units {
            assert_eq!(u.mul(&u.invert().unwrap()).unwrap(), alg.one());
        }
    }

    #[test]
    fn locality_and_maximal_ideals() {
        for alg in [f2_free2(), ex312(ScalarDomain::Rational), dual_q()] {
            assert!(is_local(&alg));
            let ms = maximal_ideals(&alg);
            assert_eq!(ms.len(), 1);
            assert!(ms[0].same_ideal(&canonical_superideal(&alg)));
            assert!(jacobson_radical(&alg).same_ideal(&ms[0]));
        }
    }

    #[test]
    fn prime_and_maximal_tests() {
        let alg = f2_free2();
        let j = canonical_superideal(&alg);
        assert!(is_prime_ideal(&j).unwrap());
        assert!(is_maximal_ideal(&j).unwrap());

        let t1 = ideal_from_generators(&alg, &[alg.generator(0)]).unwrap();
        // t2 * t2 = 0 lies in (t1) while t2 does not.
        assert!(!is_prime_ideal(&t1).unwrap());

        let zero = ideal_from_generators(&alg, &[alg.zero()]).unwrap();
        assert!(!is_prime_ideal(&zero).unwrap());

        let whole = ideal_from_generators(&alg, &[alg.one()]).unwrap();
        assert!(matches!(is_prime_ideal(&whole), Err(Error::ImproperIdeal)));
    }

    #[test]
    fn prime_tests_over_the_rationals() {
        let alg = ex312(ScalarDomain::Rational);
        let j = canonical_superideal(&alg);
        assert!(is_prime_ideal(&j).unwrap());
        assert!(is_maximal_ideal(&j).unwrap());
        let e1 = ideal_from_generators(&alg, &[alg.generator(0)]).unwrap();
        assert!(!is_prime_ideal(&e1).unwrap());
        assert!(!is_maximal_ideal(&e1).unwrap());
    }

    #[test]
    fn superdomain_and_superfield() {
        assert!(is_superdomain(&ex312(ScalarDomain::Rational)).unwrap());
        assert!(is_superfield(&ex312(ScalarDomain::Rational)).unwrap());
        assert!(is_superfield(&f2_free2()).unwrap());
        assert!(is_superdomain(&dual_q()).unwrap());
    }

    #[test]
    fn ideal_powers_and_nilpotency() {
        let alg = f2_free2();
        let j = canonical_superideal(&alg);
        let j2 = j.power(2).unwrap();
        assert_eq!(j2.dims(), (1, 0));
        assert!(j2.contains(&alg.parse_element("t1*t2").unwrap()).unwrap());
        assert!(j.power(3).unwrap().is_zero());
        assert_eq!(j.nilpotency_index(), Some(3));
        assert!(matches!(j.power(0), Err(Error::Precondition(_))));

        let f3 = ScalarDomain::prime_field(3).unwrap();
        let flat = Superalgebra::build(AlgebraSpec::new(
            f3,
            vec!["e1", "e2", "e3"],
            vec!["e1*e2", "e1*e3", "e2*e3"],
        ))
        .unwrap();
        let jf = canonical_superideal(&flat);
        assert_eq!(jf.nilpotency_index(), Some(2));

        let zero = ideal_from_generators(&alg, &[alg.zero()]).unwrap();
        assert_eq!(zero.nilpotency_index(), Some(1));
    }

    #[test]
    fn mixed_generator_splits_into_parity_parts() {
        let alg = Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::Rational,
            ["t1", "t2"],
            [],
        ))
        .unwrap();
        let g = alg.parse_element("t1 + t1*t2").unwrap();
        let i = ideal_from_generators(&alg, &[g]).unwrap();
        for v in i.basis_elements() {
            assert!(v.is_homogeneous());
        }
        assert!(i.contains(&alg.parse_element("t1").unwrap()).unwrap());
        assert!(i.contains(&alg.parse_element("t1*t2").unwrap()).unwrap());
    }

    #[test]
    fn nilradical_unsupported_branch_is_unreachable_for_builds() {
        // Every constructible algebra is a superdomain, so the rational
        // path always succeeds.
        let alg = ex312(ScalarDomain::Rational);
        assert!(nilradical(&alg).is_ok());
    }
}
