//! Element-level factorization predicates: divisibility, the associate
//! relation with unit certificates, normality, regularity,
//! irreducibility, and prime elements.
//!
//! All predicates are exact. Over finite fields they are two-valued;
//! over the rationals, irreducibility is decided through a stack of
//! exact criteria and only reports [`Decision::Undecided`] when none of
//! them applies.

use serde::Serialize;

use crate::algebra::{Element, Superalgebra};
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, AffineSolutions, RowSpace};
use crate::scalar::Scalar;
use crate::structure::{canonical_superideal, ideal_from_generators, is_prime_ideal};

/// Outcome of a predicate that is allowed to be undecided over an
/// infinite field. Finite-field paths never produce `Undecided`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Undecided => None,
        }
    }
}

/// The two-sided span `span{m * a * m'}` over basis monomials; for a
/// homogeneous element this is exactly `aR = Ra`.
pub(crate) fn two_sided_span(a: &Element) -> RowSpace {
    let alg = a.algebra();
    let dim = alg.dim();
    let mut space = RowSpace::new(alg.field(), dim);
    if a.is_homogeneous() {
        for j in 0..dim {
            let v = alg.basis_element(j).mul_unchecked(a);
            if !v.is_zero() {
                space.insert(v.coeffs().to_vec());
            }
        }
    } else {
        for i in 0..dim {
            let left = alg.basis_element(i).mul_unchecked(a);
            if left.is_zero() {
                continue;
            }
            for j in 0..dim {
                let v = left.mul_unchecked(&alg.basis_element(j));
                if !v.is_zero() {
                    space.insert(v.coeffs().to_vec());
                }
            }
        }
    }
    space
}

/// Does `a` divide `b`, i.e. is `b` in the two-sided span of `a`?
/// For homogeneous `a` the span collapses to `aR` and membership is
/// equivalent to the existence of single cofactors `c, d` with `b = cad`.
pub fn divides(a: &Element, b: &Element) -> Result<bool> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    Ok(two_sided_span(a).contains(b.coeffs()))
}

/// Kernel of the bilinear associate system `x*a = b*y` as vectors
/// `(x, y)` of length `2 dim`.
fn associate_kernel(a: &Element, b: &Element) -> AffineSolutions {
    let alg = a.algebra();
    let dim = alg.dim();
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(2 * dim);
    for j in 0..dim {
        columns.push(alg.basis_element(j).mul_unchecked(a).coeffs().to_vec());
    }
    for j in 0..dim {
        let v = b.mul_unchecked(&alg.basis_element(j));
        columns.push(v.coeffs().iter().map(Scalar::neg).collect());
    }
    let zero_target = vec![alg.field().zero(); dim];
    solve_affine(alg.field(), &columns, &zero_target).expect("homogeneous system is consistent")
}

/// Are `a` and `b` associates, i.e. `a = u b v` for units `u, v`?
///
/// Decided exactly over every base field: `a = u b v` holds iff the
/// solution space `W = {(x, y) : x a = b y}` is contained in neither of
/// the hyperplanes `const(x) = 0`, `const(y) = 0` (a group is never the
/// union of two proper subgroups, so such a solution can then be picked
/// with both constants nonzero, giving `u = x^{-1}`, `v = y`).
pub fn are_associates(a: &Element, b: &Element) -> Result<bool> {
    Ok(associate_certificate(a, b)?.is_some())
}

/// Unit certificate `(u, v)` with `a = u * b * v`, when associated.
pub fn associate_certificate(a: &Element, b: &Element) -> Result<Option<(Element, Element)>> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let alg = a.algebra();
    let dim = alg.dim();
    let sols = associate_kernel(a, b);
    let x_const = 0;
    let y_const = dim;
    let wx = sols.kernel.iter().find(|w| !w[x_const].is_zero());
    let wy = sols.kernel.iter().find(|w| !w[y_const].is_zero());
    let (Some(wx), Some(wy)) = (wx, wy) else {
        return Ok(None);
    };
    // Pick a kernel vector off both hyperplanes.
    let w: Vec<Scalar> = if !wx[y_const].is_zero() {
        wx.clone()
    } else if !wy[x_const].is_zero() {
        wy.clone()
    } else {
        wx.iter()
            .zip(wy)
            .map(|(p, q)| p.add(q).expect("same domain"))
            .collect()
    };
    let x = alg.element_from_coeffs(w[..dim].to_vec())?;
    let y = alg.element_from_coeffs(w[dim..].to_vec())?;
    debug_assert!(x.is_unit() && y.is_unit());
    let u = x.invert()?;
    let v = y;
    debug_assert!(u.mul_unchecked(b).mul_unchecked(&v) == *a);
    Ok(Some((u, v)))
}

/// One-sided associates inside the even part: `a = u b` for an even
/// unit `u`. This is the associate relation of the commutative ring
/// `R_even` used by the even-factorization check.
pub(crate) fn are_associates_even(a: &Element, b: &Element) -> Result<bool> {
    if a.algebra() != b.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    let alg = a.algebra();
    let even_idx: Vec<usize> = (0..alg.dim())
        .filter(|&i| alg.basis_parity(i) == crate::monomial::Parity::Even)
        .collect();
    let columns: Vec<Vec<Scalar>> = even_idx
        .iter()
        .map(|&k| alg.basis_element(k).mul_unchecked(b).coeffs().to_vec())
        .collect();
    let Some(sols) = solve_affine(alg.field(), &columns, a.coeffs()) else {
        return Ok(false);
    };
    // Coefficient index 0 (the constant monomial) is the first even index.
    debug_assert_eq!(even_idx[0], 0);
    Ok(sols.attains_nonzero_at(0))
}

impl Element {
    /// An element is normal when its left and right multiples span the
    /// same subspace, `aR = Ra`. Homogeneous elements always are.
    pub fn is_normal(&self) -> bool {
        let alg = self.algebra();
        let dim = alg.dim();
        let mut left = RowSpace::new(alg.field(), dim);
        let mut right = RowSpace::new(alg.field(), dim);
        for j in 0..dim {
            let e = alg.basis_element(j);
            let l = self.mul_unchecked(&e);
            if !l.is_zero() {
                left.insert(l.coeffs().to_vec());
            }
            let r = e.mul_unchecked(self);
            if !r.is_zero() {
                right.insert(r.coeffs().to_vec());
            }
        }
        left.same_space(&right)
    }

    /// Regular means not a zerodivisor: multiplication by the element is
    /// injective, equivalently `a x != 0` for every nonzero homogeneous `x`.
    pub fn is_regular(&self) -> bool {
        let alg = self.algebra();
        let mut space = RowSpace::new(alg.field(), alg.dim());
        for col in self.left_mul_columns() {
            space.insert(col);
        }
        space.rank() == alg.dim()
    }

    pub fn is_zerodivisor(&self) -> bool {
        !self.is_regular()
    }
}

/// Exact irreducibility test.
///
/// Rejects zero and units. A non-unit is irreducible when it is not a
/// product of two non-units. The decision stack:
///   1. any product of two non-units lies in the square of the maximal
///      ideal, so elements outside that span are irreducible;
///   2. over a finite field, sweep all non-unit left factors `b` and
///      solve `b y = a` for a non-unit `y` (exhaustive, two-valued);
///   3. over the rationals, sweep monomial left and right factors
///      (one scalar absorbs into the cofactor), reporting reducible on
///      success and `Undecided` otherwise.
pub fn is_irreducible(a: &Element) -> Result<Decision> {
    if a.is_zero() {
        return Err(Error::ZeroInput("irreducibility of zero".into()));
    }
    if a.is_unit() {
        return Err(Error::UnitInput(a.to_string()));
    }
    let alg = a.algebra();
    let j2 = canonical_superideal(alg).power(2)?;
    if !j2.contains(a)? {
        return Ok(Decision::Yes);
    }
    if alg.is_finite() {
        for b in alg.enumerate_elements()? {
            if b.is_unit() || b.is_zero() {
                continue;
            }
            if solve_cofactor(&b, a, Side::Left)?.is_some() {
                return Ok(Decision::No);
            }
        }
        return Ok(Decision::Yes);
    }
    for i in 0..alg.dim() {
        let m = alg.basis_element(i);
        if m.is_unit() {
            continue;
        }
        for side in [Side::Left, Side::Right] {
            if solve_cofactor(&m, a, side)?.is_some() {
                return Ok(Decision::No);
            }
        }
    }
    Ok(Decision::Undecided)
}

#[derive(Clone, Copy, PartialEq)]
pub(crate) enum Side {
    Left,
    Right,
}

/// Finds a non-unit cofactor `y` with `b y = a` (or `y b = a`), if one
/// exists: the affine solution set must meet the hyperplane of vanishing
/// constant coefficient.
pub(crate) fn solve_cofactor(b: &Element, a: &Element, side: Side) -> Result<Option<Element>> {
    let alg = a.algebra();
    let dim = alg.dim();
    let columns: Vec<Vec<Scalar>> = (0..dim)
        .map(|j| {
            let e = alg.basis_element(j);
            match side {
                Side::Left => b.mul_unchecked(&e),
                Side::Right => e.mul_unchecked(b),
            }
            .coeffs()
            .to_vec()
        })
        .collect();
    let Some(sols) = solve_affine(alg.field(), &columns, a.coeffs()) else {
        return Ok(None);
    };
    let Some(y) = sols.solution_with_zero_at(0, &alg.field()) else {
        return Ok(None);
    };
    let y = alg.element_from_coeffs(y)?;
    debug_assert!(!y.is_unit());
    debug_assert!(
        match side {
            Side::Left => b.mul_unchecked(&y),
            Side::Right => y.mul_unchecked(b),
        } == *a
    );
    Ok(Some(y))
}

/// Is the normal element `p` prime, i.e. is the principal ideal `pR`
/// prime? Cross-checkable against the quantifier form
/// `p | ab implies p | a or p | b`.
pub fn is_prime_element(p: &Element) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroInput("primality of zero".into()));
    }
    if p.is_unit() {
        return Err(Error::UnitInput(p.to_string()));
    }
    if !p.is_normal() {
        return Err(Error::Precondition(
            "prime elements must be normal".into(),
        ));
    }
    let alg = p.algebra();
    if p.is_homogeneous() {
        let ideal = ideal_from_generators(alg, &[p.clone()])?;
        return is_prime_ideal(&ideal);
    }
    // Mixed parity: work with the honest two-sided span, which may fail
    // to be graded.
    let span = two_sided_span(p);
    let graded = span.rows().iter().all(|row| {
        let e = alg.element_from_coeffs(row.clone()).expect("row fits");
        let (even, odd) = e.parity_decompose();
        span.contains(even.coeffs()) && span.contains(odd.coeffs())
    });
    if graded {
        let mut pieces = Vec::new();
        for row in span.rows() {
            let e = alg.element_from_coeffs(row.clone())?;
            let (even, odd) = e.parity_decompose();
            if !even.is_zero() {
                pieces.push(even);
            }
            if !odd.is_zero() {
                pieces.push(odd);
            }
        }
        let ideal = ideal_from_generators(alg, &pieces)?;
        debug_assert_eq!(ideal.rank(), span.rank());
        return is_prime_ideal(&ideal);
    }
    if !alg.is_finite() {
        // A prime ideal contains every nilpotent, hence the whole
        // canonical superideal, and is then graded; a non-graded span
        // cannot be prime.
        return Ok(false);
    }
    let count = alg.element_count().unwrap_or(u128::MAX);
    if count > 4096 {
        return Err(Error::Unsupported(
            "exhaustive prime test for a non-graded principal ideal of this size".into(),
        ));
    }
    let outside: Vec<Element> = alg
        .enumerate_elements()?
        .filter(|x| !span.contains(x.coeffs()))
        .collect();
    for x in &outside {
        for y in &outside {
            if span.contains(x.mul_unchecked(y).coeffs()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All irreducible elements of a finite algebra, via one sweep over
/// products of non-unit pairs.
pub fn irreducible_elements(algebra: &Superalgebra) -> Result<Vec<Element>> {
    let non_units: Vec<Element> = algebra
        .enumerate_elements()?
        .filter(|x| !x.is_unit() && !x.is_zero())
        .collect();
    let mut reducible = std::collections::HashSet::new();
    for b in &non_units {
        for c in &non_units {
            let p = b.mul_unchecked(c);
            if !p.is_zero() {
                reducible.insert(p);
            }
        }
    }
    let mut out: Vec<Element> = non_units
        .into_iter()
        .filter(|x| !reducible.contains(x))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// The nonzero even non-units that are irreducible; empty in every
/// unique-factorization algebra this library has encountered, which is
/// what makes the annihilator-witness extraction vacuous there.
pub fn even_irreducible_elements(algebra: &Superalgebra) -> Result<Vec<Element>> {
    Ok(irreducible_elements(algebra)?
        .into_iter()
        .filter(|x| {
            x.homogeneous_parity() == Some(crate::monomial::Parity::Even)
        })
        .collect())
}

/// Exhaustive audit of the normal irreducible elements of a finite
/// algebra: are they all prime, are they all zerodivisors, and does at
/// least one nonzero normal irreducible zerodivisor exist?
///
/// Note the primality half fails in flat algebras on two or more odd
/// generators: a generator divides the zero product of two others but
/// neither factor, so it is irreducible yet not prime. The audit
/// reports what actually holds, with witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct NormalIrreducibleAudit {
    pub normal_irreducible_count: usize,
    pub all_prime: bool,
    pub all_zerodivisors: bool,
    pub exists_normal_irreducible_zerodivisor: bool,
    pub non_prime_witnesses: Vec<String>,
}

pub fn audit_normal_irreducibles(algebra: &Superalgebra) -> Result<NormalIrreducibleAudit> {
    let normal_irreducibles: Vec<Element> = irreducible_elements(algebra)?
        .into_iter()
        .filter(|x| x.is_normal())
        .collect();
    let mut all_prime = true;
    let mut all_zerodivisors = true;
    let mut exists = false;
    let mut non_prime_witnesses = Vec::new();
    for x in &normal_irreducibles {
        if !is_prime_element(x)? {
            all_prime = false;
            non_prime_witnesses.push(x.to_string());
        }
        if x.is_zerodivisor() {
            exists = true;
        } else {
            all_zerodivisors = false;
        }
    }
    Ok(NormalIrreducibleAudit {
        normal_irreducible_count: normal_irreducibles.len(),
        all_prime,
        all_zerodivisors,
        exists_normal_irreducible_zerodivisor: exists,
        non_prime_witnesses,
    })
}
