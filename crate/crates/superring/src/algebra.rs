//! Finite-dimensional supercommutative superalgebras presented as a
//! quotient of the exterior algebra on odd generators by a homogeneous
//! relation ideal, together with exact element arithmetic.
//!
//! Construction row-reduces the relation ideal inside the full
//! `2^n`-dimensional exterior algebra under the (degree, mask) monomial
//! order, eliminating the leading monomial of every relation multiple.
//! The surviving non-pivot monomials form the reduced basis; products of
//! basis monomials are reduced once into a structure-constant table.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{parse_expression, ParsedTerm};
use crate::linalg::RowSpace;
use crate::monomial::{Monomial, Parity};
use crate::scalar::{Scalar, ScalarDomain};

/// Hard cap on odd generators; the free exterior algebra has dimension
/// `2^n`, and ideal closure materializes all monomial multiples.
pub const MAX_ODD_GENERATORS: usize = 12;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind")]
enum FieldRepr {
    Q,
    Fp { p: u64 },
}

/// Presentation of a superalgebra: base field, ordered odd generator
/// names, and parity-homogeneous relations in the element grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub struct AlgebraSpec {
    pub field: ScalarDomain,
    pub odd_generators: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    field: FieldRepr,
    odd_generators: Vec<String>,
    relations: Vec<String>,
}

impl TryFrom<SpecRepr> for AlgebraSpec {
    type Error = Error;
    fn try_from(repr: SpecRepr) -> Result<Self> {
        let field = match repr.field {
            FieldRepr::Q => ScalarDomain::Rational,
            FieldRepr::Fp { p } => ScalarDomain::prime_field(p)
                .map_err(|_| Error::Spec(format!("field modulus {p} is not prime")))?,
        };
        Ok(AlgebraSpec {
            field,
            odd_generators: repr.odd_generators,
            relations: repr.relations,
        })
    }
}

impl From<AlgebraSpec> for SpecRepr {
    fn from(spec: AlgebraSpec) -> Self {
        SpecRepr {
            field: match spec.field {
                ScalarDomain::Rational => FieldRepr::Q,
                ScalarDomain::PrimeField(p) => FieldRepr::Fp { p },
                ScalarDomain::Integer => unreachable!("integer base is rejected at build"),
            },
            odd_generators: spec.odd_generators,
            relations: spec.relations,
        }
    }
}

impl AlgebraSpec {
    pub fn new<S: Into<String>>(
        field: ScalarDomain,
        odd_generators: impl IntoIterator<Item = S>,
        relations: impl IntoIterator<Item = S>,
    ) -> Self {
        AlgebraSpec {
            field,
            odd_generators: odd_generators.into_iter().map(Into::into).collect(),
            relations: relations.into_iter().map(Into::into).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Spec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}

struct Inner {
    spec: AlgebraSpec,
    domain: ScalarDomain,
    n: usize,
    /// RREF of the relation ideal over all `2^n` free monomial
    /// coordinates, pivoting on the largest monomial of each row.
    ideal: RowSpace,
    ideal_dims: (usize, usize),
    /// Reduced basis monomials in (degree, mask) order; index 0 is `1`.
    basis: Vec<Monomial>,
    /// Structure constants: `mult[i][j]` is the reduced coefficient
    /// vector of `basis[i] * basis[j]`, stored sparsely.
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    dims: (usize, usize),
    fingerprint: u64,
}

/// An immutable supercommutative superalgebra; cheap to clone and share.
#[derive(Clone)]
pub struct Superalgebra {
    inner: Arc<Inner>,
}

impl fmt::Debug for Superalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Superalgebra({}[{}] dim {}|{})",
            self.inner.domain,
            self.inner.spec.odd_generators.join(","),
            self.inner.dims.0,
            self.inner.dims.1
        )
    }
}

impl PartialEq for Superalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.inner.fingerprint == other.inner.fingerprint
    }
}
impl Eq for Superalgebra {}

fn monomial_order(width: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..width as u32).collect();
    masks.sort_by_key(|&m| Monomial(m).order_key());
    masks
}

impl Superalgebra {
    /// Builds the quotient algebra from its presentation.
    pub fn build(spec: AlgebraSpec) -> Result<Superalgebra> {
        if !spec.field.is_field() {
            return Err(Error::Spec(
                "base ring of an exterior algebra must be a field (Q or Fp)".into(),
            ));
        }
        let n = spec.odd_generators.len();
        if n == 0 {
            return Err(Error::Spec("at least one odd generator is required".into()));
        }
        if n > MAX_ODD_GENERATORS {
            return Err(Error::Spec(format!(
                "at most {MAX_ODD_GENERATORS} odd generators are supported (got {n})"
            )));
        }
        for (i, name) in spec.odd_generators.iter().enumerate() {
            let valid = !name.is_empty()
                && name.chars().next().unwrap().is_ascii_alphabetic()
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Spec(format!("invalid generator name `{name}`")));
            }
            if spec.odd_generators[..i].contains(name) {
                return Err(Error::Spec(format!("duplicate generator name `{name}`")));
            }
        }

        let domain = spec.field;
        let width = 1usize << n;
        let descending: Vec<usize> = monomial_order(width)
            .into_iter()
            .rev()
            .map(|m| m as usize)
            .collect();
        let mut ideal = RowSpace::with_priority(domain, width, descending);

        // Evaluate each relation in the free exterior algebra and check
        // parity homogeneity.
        let mut relation_vectors = Vec::new();
        for (index, text) in spec.relations.iter().enumerate() {
            let vec = free_vector_from_text(&spec, text)?;
            let parities: Vec<Parity> = (0..width)
                .filter(|&m| !vec[m].is_zero())
                .map(|m| Monomial(m as u32).parity())
                .collect();
            if parities.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::InhomogeneousRelation {
                    index,
                    text: text.clone(),
                });
            }
            relation_vectors.push(vec);
        }

        // Ideal closure: the span of all monomial multiples of the
        // relations. One-sided multiples suffice; supercommutativity
        // makes the span two-sided.
        for rel in &relation_vectors {
            for m in 0..width as u32 {
                let mut row = vec![domain.zero(); width];
                let mut nonzero = false;
                for t in 0..width as u32 {
                    if rel[t as usize].is_zero() {
                        continue;
                    }
                    if let Some((sign, prod)) = Monomial(m).mul(Monomial(t)) {
                        let c = if sign < 0 {
                            rel[t as usize].neg()
                        } else {
                            rel[t as usize].clone()
                        };
                        row[prod.0 as usize] = row[prod.0 as usize].add(&c)?;
                        nonzero = true;
                    }
                }
                if nonzero {
                    ideal.insert(row);
                }
            }
        }

        if ideal.is_pivot(0) {
            return Err(Error::TrivialQuotient);
        }
        let mut ideal_even = 0;
        let mut ideal_odd = 0;
        for &piv in ideal.pivots() {
            match Monomial(piv as u32).parity() {
                Parity::Even => ideal_even += 1,
                Parity::Odd => ideal_odd += 1,
            }
        }
        debug_assert_eq!(ideal_even + ideal_odd, ideal.rank());

        let basis: Vec<Monomial> = monomial_order(width)
            .into_iter()
            .filter(|&m| !ideal.is_pivot(m as usize))
            .map(Monomial)
            .collect();
        let dims = (
            basis.iter().filter(|m| m.parity() == Parity::Even).count(),
            basis.iter().filter(|m| m.parity() == Parity::Odd).count(),
        );

        let reduce_free = |vec: &mut Vec<Scalar>| -> Vec<(usize, Scalar)> {
            ideal.reduce(vec);
            let mut out = Vec::new();
            for (i, m) in basis.iter().enumerate() {
                let c = &vec[m.0 as usize];
                if !c.is_zero() {
                    out.push((i, c.clone()));
                }
            }
            out
        };

        let dim = basis.len();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                if let Some((sign, prod)) = basis[i].mul(basis[j]) {
                    let mut vec = vec![domain.zero(); width];
                    vec[prod.0 as usize] = domain.from_i64(sign as i64);
                    mult[i][j] = reduce_free(&mut vec);
                }
            }
        }

        let mut hasher = DefaultHasher::new();
        spec.odd_generators.hash(&mut hasher);
        format!("{domain}").hash(&mut hasher);
        for (row, piv) in ideal.rows().iter().zip(ideal.pivots()) {
            piv.hash(&mut hasher);
            for s in row {
                s.hash(&mut hasher);
            }
        }
        let fingerprint = hasher.finish();

        Ok(Superalgebra {
            inner: Arc::new(Inner {
                spec,
                domain,
                n,
                ideal,
                ideal_dims: (ideal_even, ideal_odd),
                basis,
                mult,
                dims,
                fingerprint,
            }),
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.inner.spec
    }

    pub fn field(&self) -> ScalarDomain {
        self.inner.domain
    }

    pub fn generator_count(&self) -> usize {
        self.inner.n
    }

    /// Total linear dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.inner.basis.len()
    }

    /// (even, odd) dimensions of the quotient.
    pub fn dims(&self) -> (usize, usize) {
        self.inner.dims
    }

    /// (even, odd) dimensions of the relation ideal.
    pub fn ideal_dims(&self) -> (usize, usize) {
        self.inner.ideal_dims
    }

    pub fn basis_monomials(&self) -> &[Monomial] {
        &self.inner.basis
    }

    pub fn basis_parity(&self, index: usize) -> Parity {
        self.inner.basis[index].parity()
    }

    /// Printable label of a basis monomial (`1` for the constant).
    pub fn basis_label(&self, index: usize) -> String {
        let m = self.inner.basis[index];
        if m.0 == 0 {
            return "1".into();
        }
        (0..self.inner.n)
            .filter(|&i| m.contains_generator(i))
            .map(|i| self.inner.spec.odd_generators[i].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn zero(&self) -> Element {
        Element {
            algebra: self.clone(),
            coeffs: vec![self.inner.domain.zero(); self.dim()],
        }
    }

    pub fn one(&self) -> Element {
        self.scalar_element(self.inner.domain.one())
    }

    pub fn scalar_element(&self, c: Scalar) -> Element {
        let mut e = self.zero();
        e.coeffs[0] = c;
        e
    }

    /// Image of the `i`-th odd generator in the quotient.
    pub fn generator(&self, i: usize) -> Element {
        let mut free = vec![self.inner.domain.zero(); 1 << self.inner.n];
        free[1 << i] = self.inner.domain.one();
        self.element_from_free(free)
    }

    pub fn basis_element(&self, index: usize) -> Element {
        let mut e = self.zero();
        e.coeffs[index] = self.inner.domain.one();
        e
    }

    pub fn element_from_coeffs(&self, coeffs: Vec<Scalar>) -> Result<Element> {
        if coeffs.len() != self.dim() {
            return Err(Error::Spec(format!(
                "coefficient vector has length {}, expected {}",
                coeffs.len(),
                self.dim()
            )));
        }
        for c in &coeffs {
            if c.domain() != self.inner.domain {
                return Err(Error::DomainMismatch(
                    c.domain().describe(),
                    self.inner.domain.describe(),
                ));
            }
        }
        Ok(Element {
            algebra: self.clone(),
            coeffs,
        })
    }

    /// Reduces a vector over the free exterior monomials into the quotient.
    fn element_from_free(&self, mut free: Vec<Scalar>) -> Element {
        self.inner.ideal.reduce(&mut free);
        let mut coeffs = vec![self.inner.domain.zero(); self.dim()];
        for (i, m) in self.inner.basis.iter().enumerate() {
            coeffs[i] = free[m.0 as usize].clone();
        }
        Element {
            algebra: self.clone(),
            coeffs,
        }
    }

    /// Parses an element in the grammar
    /// `expr := term (('+'|'-') term)*; term := scalar ('*' factor)* | factor ('*' factor)*`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let free = free_vector_from_text(&self.inner.spec, text)?;
        Ok(self.element_from_free(free))
    }

    pub fn is_finite(&self) -> bool {
        self.inner.domain.size().is_some()
    }

    /// Number of elements for finite base fields.
    pub fn element_count(&self) -> Option<u128> {
        self.inner
            .domain
            .size()
            .map(|q| (q as u128).pow(self.dim() as u32))
    }

    /// Streams all elements of a finite algebra in lexicographic
    /// coefficient order (leading coefficient most significant).
    pub fn enumerate_elements(&self) -> Result<impl Iterator<Item = Element> + '_> {
        let q = self.inner.domain.size().ok_or(Error::InfiniteField)?;
        let dim = self.dim();
        let mut digits = vec![0u64; dim];
        let mut done = false;
        let alg = self.clone();
        Ok(std::iter::from_fn(move || {
            if done {
                return None;
            }
            let coeffs: Vec<Scalar> = digits
                .iter()
                .map(|&d| alg.inner.domain.from_i64(d as i64))
                .collect();
            // increment, last digit fastest
            let mut i = dim;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
            Some(Element {
                algebra: alg.clone(),
                coeffs,
            })
        }))
    }

    /// Streams elements supported on the given basis indices, in
    /// lexicographic coefficient order.
    pub(crate) fn enumerate_support(
        &self,
        support: &[usize],
    ) -> Result<impl Iterator<Item = Element> + '_> {
        let q = self.field().size().ok_or(Error::InfiniteField)?;
        let support = support.to_vec();
        let k = support.len();
        let mut digits = vec![0u64; k];
        let mut done = false;
        Ok(std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mut coeffs = vec![self.field().zero(); self.dim()];
            for (pos, &idx) in support.iter().enumerate() {
                coeffs[idx] = self.field().from_i64(digits[pos] as i64);
            }
            let mut i = k;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
            Some(Element {
                algebra: self.clone(),
                coeffs,
            })
        }))
    }

    /// Indices of the even (resp. odd) basis monomials.
    pub fn parity_indices(&self, parity: Parity) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis_parity(i) == parity)
            .collect()
    }

    /// Uniformly random element (small-height scalars over the rationals).
    pub fn random_element(&self, rng: &mut impl Rng) -> Element {
        let coeffs = (0..self.dim())
            .map(|_| random_scalar(self.inner.domain, rng))
            .collect();
        Element {
            algebra: self.clone(),
            coeffs,
        }
    }

    /// Random element with nonzero constant coefficient.
    pub fn random_unit(&self, rng: &mut impl Rng) -> Element {
        let mut e = self.random_element(rng);
        while e.coeffs[0].is_zero() {
            e.coeffs[0] = random_scalar(self.inner.domain, rng);
        }
        e
    }

    pub fn fingerprint(&self) -> u64 {
        self.inner.fingerprint
    }

    /// Canonical byte key of the relation ideal, used to deduplicate
    /// algebras that differ only in how their relations were sampled.
    pub fn ideal_key(&self) -> String {
        let mut rows: Vec<String> = self
            .inner
            .ideal
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        rows.sort();
        rows.join(";")
    }
}

pub(crate) fn random_scalar(domain: ScalarDomain, rng: &mut impl Rng) -> Scalar {
    match domain {
        ScalarDomain::PrimeField(p) => domain.from_i64(rng.gen_range(0..p) as i64),
        ScalarDomain::Rational => {
            let n = rng.gen_range(-9i64..=9);
            let d = rng.gen_range(1i64..=4);
            domain
                .parse_literal(&format!("{n}/{d}"))
                .expect("valid literal")
        }
        ScalarDomain::Integer => domain.from_i64(rng.gen_range(-9i64..=9)),
    }
}

/// Evaluates an expression over the free exterior algebra on the spec's
/// generators, producing a dense vector indexed by monomial mask.
fn free_vector_from_text(spec: &AlgebraSpec, text: &str) -> Result<Vec<Scalar>> {
    let terms = parse_expression(text, false)?;
    let width = 1usize << spec.odd_generators.len();
    let mut out = vec![spec.field.zero(); width];
    for term in terms {
        accumulate_term(spec, &term, &mut out)?;
    }
    Ok(out)
}

fn accumulate_term(spec: &AlgebraSpec, term: &ParsedTerm, out: &mut [Scalar]) -> Result<()> {
    let mut coeff = match &term.scalar {
        Some((text, pos)) => spec.field.parse_literal(text).map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse {
                position: *pos,
                message,
            },
            other => other,
        })?,
        None => spec.field.one(),
    };
    if term.negated {
        coeff = coeff.neg();
    }
    let mut mono = Monomial::ONE;
    for factor in &term.factors {
        let idx = spec
            .odd_generators
            .iter()
            .position(|g| g == &factor.name)
            .ok_or_else(|| Error::UnknownGenerator {
                name: factor.name.clone(),
                position: factor.position,
            })?;
        debug_assert_eq!(factor.power, 1);
        match mono.mul(Monomial(1 << idx)) {
            Some((sign, prod)) => {
                if sign < 0 {
                    coeff = coeff.neg();
                }
                mono = prod;
            }
            None => return Ok(()), // repeated odd generator: term vanishes
        }
    }
    out[mono.0 as usize] = out[mono.0 as usize].add(&coeff)?;
    Ok(())
}

/// An element of a [`Superalgebra`]: a coefficient vector over the
/// reduced monomial basis.
#[derive(Clone)]
pub struct Element {
    algebra: Superalgebra,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coeffs == other.coeffs
    }
}
impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.algebra.inner.fingerprint.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl Element {
    pub fn algebra(&self) -> &Superalgebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> &Scalar {
        &self.coeffs[index]
    }

    /// Coefficient of the basis monomial `1`; the image in the
    /// superreduction for odd-generated algebras.
    pub fn constant_coeff(&self) -> &Scalar {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check_same_algebra(&self, other: &Element) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same_algebra(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Element {
            algebra: self.algebra.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Element> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.mul(c))
            .collect::<Result<_>>()?;
        Ok(Element {
            algebra: self.algebra.clone(),
            coeffs,
        })
    }

    /// `self + c * other`, componentwise.
    pub fn add_scaled(&self, c: &Scalar, other: &Element) -> Result<Element> {
        self.add(&other.scale(c)?)
    }

    /// Exact product, reduced against the relation ideal. Monomials
    /// multiply with the Koszul sign; overlapping masks vanish.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same_algebra(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Element) -> Element {
        let inner = &self.algebra.inner;
        let mut coeffs = vec![inner.domain.zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let table = &inner.mult[i][j];
                if table.is_empty() {
                    continue;
                }
                let ab = a.mul(b).expect("same domain");
                for (k, c) in table {
                    coeffs[*k] = coeffs[*k].add(&ab.mul(c).expect("same domain")).unwrap();
                }
            }
        }
        Element {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    pub fn pow(&self, exp: usize) -> Element {
        let mut acc = self.algebra.one();
        for _ in 0..exp {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Splits into even and odd parts: `x = x_even + x_odd`.
    pub fn parity_decompose(&self) -> (Element, Element) {
        let mut even = self.algebra.zero();
        let mut odd = self.algebra.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            match self.algebra.basis_parity(i) {
                Parity::Even => even.coeffs[i] = c.clone(),
                Parity::Odd => odd.coeffs[i] = c.clone(),
            }
        }
        (even, odd)
    }

    pub fn even_part(&self) -> Element {
        self.parity_decompose().0
    }

    pub fn odd_part(&self) -> Element {
        self.parity_decompose().1
    }

    /// `Some(parity)` when the support is parity-homogeneous (zero counts
    /// as homogeneous of either parity and reports `Even`).
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        let mut parity = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.algebra.basis_parity(i);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_parity().is_some()
    }

    /// Canonical ordering used for deterministic iteration: support size
    /// first, then lexicographic on the coefficient vector.
    pub fn canonical_cmp(&self, other: &Element) -> std::cmp::Ordering {
        self.support_size()
            .cmp(&other.support_size())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Matrix of `x -> self * x` as columns over the basis.
    pub(crate) fn left_mul_columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.algebra.dim())
            .map(|j| {
                self.mul_unchecked(&self.algebra.basis_element(j))
                    .coeffs
            })
            .collect()
    }

}

fn scalar_is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => r < &num::BigRational::from(num::BigInt::from(0)),
        Scalar::Integer(n) => n < &num::BigInt::from(0),
        Scalar::PrimeField { .. } => false,
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = self.algebra.basis_label(i);
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
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{mag}*{label}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn f2_free2() -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::prime_field(2).unwrap(),
            ["t1", "t2"],
            [],
        ))
        .unwrap()
    }

    pub(crate) fn q_free2() -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(ScalarDomain::Rational, ["t1", "t2"], [])).unwrap()
    }

    pub(crate) fn grassmann3_quotient(domain: ScalarDomain) -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(
            domain,
            vec!["e1", "e2", "e3"],
            vec!["e1*e2 - e1*e3"],
        ))
        .unwrap()
    }

    #[test]
    fn f2_two_generators_has_sixteen_elements() {
        let alg = f2_free2();
        assert_eq!(alg.dims(), (2, 2));
        assert_eq!(alg.element_count(), Some(16));
        let all: Vec<Element> = alg.enumerate_elements().unwrap().collect();
        assert_eq!(all.len(), 16);
        let distinct: std::collections::HashSet<_> = all.into_iter().collect();
        assert_eq!(distinct.len(), 16);
    }

    #[test]
    fn all_products_zero_gives_dual_number_shape() {
        let f3 = ScalarDomain::prime_field(3).unwrap();
        let alg = Superalgebra::build(AlgebraSpec::new(
            f3,
            vec!["e1", "e2", "e3"],
            vec!["e1*e2", "e1*e3", "e2*e3"],
        ))
        .unwrap();
        assert_eq!(alg.dims(), (1, 3));
        let labels: Vec<String> = (0..alg.dim()).map(|i| alg.basis_label(i)).collect();
        assert_eq!(labels, ["1", "e1", "e2", "e3"]);
    }

    #[test]
    fn quotient_by_relation_keeps_the_expected_even_basis() {
        let alg = grassmann3_quotient(ScalarDomain::Rational);
        assert_eq!(alg.dims(), (3, 3));
        let even: Vec<String> = (0..alg.dim())
            .filter(|&i| alg.basis_parity(i) == Parity::Even)
            .map(|i| alg.basis_label(i))
            .collect();
        assert_eq!(even, ["1", "e1*e2", "e2*e3"]);
    }

    #[test]
    fn relation_identifies_products() {
        // e1*e3 reduces to the representative e1*e2, and e1*e2*e3 = 0.
        let alg = grassmann3_quotient(ScalarDomain::Rational);
        let e1 = alg.generator(0);
        let e2 = alg.generator(1);
        let e3 = alg.generator(2);
        let e12 = e1.mul(&e2).unwrap();
        let e13 = e1.mul(&e3).unwrap();
        assert_eq!(e12, e13);
        assert!(!e12.is_zero());
        assert!(e12.mul(&e3).unwrap().is_zero());
    }

    #[test]
    fn koszul_sign_on_generators() {
        let alg = q_free2();
        let t1 = alg.generator(0);
        let t2 = alg.generator(1);
        let t12 = t1.mul(&t2).unwrap();
        assert_eq!(t2.mul(&t1).unwrap(), t12.neg());
        assert_eq!(format!("{}", t2.mul(&t1).unwrap()), "-t1*t2");
    }

    #[test]
    fn parse_and_format_round_trip() {
        let alg = q_free2();
        for text in ["0", "1", "-t1", "1/2 + t1*t2", "1 + 2*t1 - 1/2*t1*t2"] {
            let e = alg.parse_element(text).unwrap();
            let shown = e.to_string();
            assert_eq!(alg.parse_element(&shown).unwrap(), e, "{text} -> {shown}");
        }
        assert_eq!(alg.parse_element("t2*t1").unwrap().to_string(), "-t1*t2");
        assert!(alg.parse_element("t1*t1").unwrap().is_zero());
        let f2 = f2_free2();
        let e = f2.parse_element("1 + t1*t2").unwrap();
        assert_eq!(e.to_string(), "1 + t1*t2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let alg = q_free2();
        match alg.parse_element("1 + zz") {
            Err(Error::UnknownGenerator { name, position }) => {
                assert_eq!(name, "zz");
                assert_eq!(position, 4);
            }
            other => panic!("expected unknown generator, got {other:?}"),
        }
        assert!(alg.parse_element("1/0").is_err());
    }

    #[test]
    fn parity_decomposition() {
        let alg = q_free2();
        let x = alg.parse_element("1 + t1").unwrap();
        let (even, odd) = x.parity_decompose();
        assert_eq!(even, alg.one());
        assert_eq!(odd, alg.generator(0));
        assert_eq!(even.add(&odd).unwrap(), x);
        let t12 = alg.parse_element("t1*t2").unwrap();
        assert_eq!(t12.parity_decompose().0, t12);
        assert!(t12.parity_decompose().1.is_zero());
        let z = alg.zero();
        assert!(z.parity_decompose().0.is_zero() && z.parity_decompose().1.is_zero());
    }

    #[test]
    fn add_scale_identities() {
        let alg = q_free2();
        let a = alg.parse_element("1 + t1").unwrap();
        let one = ScalarDomain::Rational.one();
        assert_eq!(a.add_scaled(&one, &alg.zero()).unwrap(), a);
        let t1 = alg.generator(0);
        assert!(t1
            .add_scaled(&ScalarDomain::Rational.from_i64(-1), &t1)
            .unwrap()
            .is_zero());
        let sum = alg.generator(0).add_scaled(&one, &alg.generator(1)).unwrap();
        assert_eq!(sum.to_string(), "t1 + t2");
    }

    #[test]
    fn build_rejects_bad_specs() {
        let q = ScalarDomain::Rational;
        assert!(matches!(
            Superalgebra::build(AlgebraSpec::new(q, Vec::<String>::new(), vec![])),
            Err(Error::Spec(_))
        ));
        assert!(matches!(
            Superalgebra::build(AlgebraSpec::new(q, vec!["t1"], vec!["1"])),
            Err(Error::TrivialQuotient)
        ));
        assert!(matches!(
            Superalgebra::build(AlgebraSpec::new(q, vec!["t1", "t2"], vec!["t1 + t1*t2"])),
            Err(Error::InhomogeneousRelation { index: 0, .. })
        ));
        assert!(matches!(
            Superalgebra::build(AlgebraSpec::new(q, vec!["t1", "t1"], vec![])),
            Err(Error::Spec(_))
        ));
    }

    #[test]
    fn ideal_dimension_bookkeeping() {
        let alg = grassmann3_quotient(ScalarDomain::Rational);
        let (ie, io) = alg.ideal_dims();
        assert_eq!(ie + io, (1 << 3) - alg.dim());
        assert_eq!((ie, io), (1, 1)); // t1*t2 - t1*t3 and t1*t2*t3
    }

    #[test]
    fn enumeration_sizes() {
        let f2 = ScalarDomain::prime_field(2).unwrap();
        let alg = Superalgebra::build(AlgebraSpec::new(f2, vec!["t1"], vec![])).unwrap();
        assert_eq!(alg.enumerate_elements().unwrap().count(), 4);
        let ex312 = grassmann3_quotient(ScalarDomain::prime_field(3).unwrap());
        assert_eq!(ex312.enumerate_elements().unwrap().count(), 729);
        assert!(q_free2().enumerate_elements().is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{"field": {"kind": "Fp", "p": 3}, "odd_generators": ["t1", "t2", "t3"], "relations": ["t1*t2 - t1*t3"]}"#;
        let spec = AlgebraSpec::from_json(text).unwrap();
        assert_eq!(spec.field, ScalarDomain::PrimeField(3));
        let again = AlgebraSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(spec, again);
        assert!(AlgebraSpec::from_json(
            r#"{"field": {"kind": "Fp", "p": 4}, "odd_generators": ["a"], "relations": []}"#
        )
        .is_err());
    }
}
