//! Exhaustive factorization enumeration and the unique-factorization
//! decision procedures, together with the annihilator-witness
//! extraction used by the nilpotency argument for even irreducibles.
//!
//! A factorization of a nonzero non-unit is an ordered product of
//! normal irreducible elements. Two factorizations are equivalent when
//! they have the same length and some permutation matches the factors
//! into associate pairs; enumeration reports one representative per
//! equivalence class.
//!
//! Search strategy: depth-first over leading factors. For a subject
//! `x`, every candidate non-unit `f` is screened by linear feasibility
//! of `f y = x`; surviving normal irreducible `f` contribute `[f] ++ t`
//! for every non-unit solution `y` and every factorization tail `t` of
//! `y`. Termination: each extraction strictly raises the power of the
//! maximal ideal containing the cofactor, so chains are shorter than
//! the nilpotency index; a configurable depth cap guards the recursion
//! and overflowing it is an error, never a silent truncation.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use serde::Serialize;

use crate::algebra::{Element, Superalgebra};
use crate::error::{Error, Result};
use crate::factor::{
    are_associates, are_associates_even, associate_certificate, is_irreducible, Decision,
};
use crate::linalg::solve_affine;
use crate::monomial::Parity;
use crate::scalar::Scalar;
use crate::structure::{canonical_superideal, Ideal};

/// Default recursion depth cap; comfortably above the nilpotency index
/// of every shipped algebra.
pub const DEFAULT_FACTOR_CAP: usize = 16;

/// Which element universe a factorization lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FactorizationScope {
    /// Factors range over all elements.
    General,
    /// Subjects and factors are parity-homogeneous.
    Homogeneous,
    /// Everything is confined to the commutative even part; associates
    /// are one-sided and normality is automatic.
    EvenSubring,
}

/// An ordered factorization of `subject` into normal irreducibles.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub subject: Element,
    pub factors: Vec<Element>,
    pub scope: FactorizationScope,
}

impl Factorization {
    /// Re-verifies every claim this object makes: the ordered product
    /// equals the subject and each factor is a nonzero non-unit that is
    /// normal and irreducible (in-scope versions for the even case).
    pub fn verify(&self) -> Result<()> {
        if self.factors.is_empty() {
            return Err(Error::VerificationFailed("empty factor list".into()));
        }
        let mut product = self.subject.algebra().one();
        for f in &self.factors {
            product = product.mul(f)?;
        }
        if product != self.subject {
            return Err(Error::VerificationFailed(format!(
                "factors multiply to {product}, not {}",
                self.subject
            )));
        }
        for f in &self.factors {
            if f.is_zero() || f.is_unit() {
                return Err(Error::VerificationFailed(format!(
                    "factor {f} is zero or a unit"
                )));
            }
            match self.scope {
                FactorizationScope::General | FactorizationScope::Homogeneous => {
                    if !f.is_normal() {
                        return Err(Error::VerificationFailed(format!(
                            "factor {f} is not normal"
                        )));
                    }
                    match is_irreducible(f)? {
                        Decision::Yes => {}
                        Decision::No => {
                            return Err(Error::VerificationFailed(format!(
                                "factor {f} is reducible"
                            )))
                        }
                        Decision::Undecided => {
                            return Err(Error::Undecided(format!(
                                "irreducibility of factor {f}"
                            )))
                        }
                    }
                    if self.scope == FactorizationScope::Homogeneous && !f.is_homogeneous() {
                        return Err(Error::VerificationFailed(format!(
                            "factor {f} is not homogeneous"
                        )));
                    }
                }
                FactorizationScope::EvenSubring => {
                    if f.homogeneous_parity() != Some(Parity::Even) {
                        return Err(Error::VerificationFailed(format!(
                            "factor {f} is not even"
                        )));
                    }
                    if !is_irreducible_in_even_part(f)? {
                        return Err(Error::VerificationFailed(format!(
                            "factor {f} is reducible inside the even part"
                        )));
                    }
                }
            }
        }
        if self.scope == FactorizationScope::Homogeneous && !self.subject.is_homogeneous() {
            return Err(Error::VerificationFailed("subject is not homogeneous".into()));
        }
        Ok(())
    }

    /// Factor strings for reports.
    pub fn factor_strings(&self) -> Vec<String> {
        self.factors.iter().map(|f| f.to_string()).collect()
    }
}

/// Scope-aware associate test used for factorization equivalence.
fn associates_in_scope(a: &Element, b: &Element, scope: FactorizationScope) -> Result<bool> {
    match scope {
        FactorizationScope::General | FactorizationScope::Homogeneous => are_associates(a, b),
        FactorizationScope::EvenSubring => are_associates_even(a, b),
    }
}

/// Equivalence of factorizations: equal length plus a permutation
/// matching the factors into associate pairs.
pub fn factorizations_equivalent(a: &Factorization, b: &Factorization) -> Result<bool> {
    if a.scope != b.scope || a.factors.len() != b.factors.len() {
        return Ok(false);
    }
    fn matching(
        a: &[Element],
        b: &[Element],
        used: &mut Vec<bool>,
        i: usize,
        scope: FactorizationScope,
    ) -> Result<bool> {
        if i == a.len() {
            return Ok(true);
        }
        for j in 0..b.len() {
            if used[j] || !associates_in_scope(&a[i], &b[j], scope)? {
                continue;
            }
            used[j] = true;
            if matching(a, b, used, i + 1, scope)? {
                return Ok(true);
            }
            used[j] = false;
        }
        Ok(false)
    }
    let mut used = vec![false; b.factors.len()];
    matching(&a.factors, &b.factors, &mut used, 0, a.scope)
}

/// Is the even element `f` irreducible inside the commutative even
/// part, i.e. not a product of two even non-units?
pub fn is_irreducible_in_even_part(f: &Element) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroInput("irreducibility of zero".into()));
    }
    if f.is_unit() {
        return Err(Error::UnitInput(f.to_string()));
    }
    let alg = f.algebra();
    if !alg.is_finite() {
        return Err(Error::InfiniteField);
    }
    let even_idx: Vec<usize> = (0..alg.dim())
        .filter(|&i| alg.basis_parity(i) == Parity::Even)
        .collect();
    for b in alg.enumerate_support(&even_idx)? {
        if b.is_unit() || b.is_zero() {
            continue;
        }
        if even_cofactor(&b, f, &even_idx)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A non-unit even `y` with `b y = a`, if one exists.
fn even_cofactor(b: &Element, a: &Element, even_idx: &[usize]) -> Result<Option<Element>> {
    let alg = a.algebra();
    let columns: Vec<Vec<Scalar>> = even_idx
        .iter()
        .map(|&k| b.mul_unchecked(&alg.basis_element(k)).coeffs().to_vec())
        .collect();
    let Some(sols) = solve_affine(alg.field(), &columns, a.coeffs()) else {
        return Ok(None);
    };
    // Constant coordinate is the first even index.
    let Some(y) = sols.solution_with_zero_at(0, &alg.field()) else {
        return Ok(None);
    };
    let mut coeffs = vec![alg.field().zero(); alg.dim()];
    for (pos, &k) in even_idx.iter().enumerate() {
        coeffs[k] = y[pos].clone();
    }
    Ok(Some(alg.element_from_coeffs(coeffs)?))
}

/// Shared state for one enumeration run over a finite algebra.
struct Session {
    algebra: Superalgebra,
    scope: FactorizationScope,
    cap: usize,
    /// All nonzero non-units in canonical order.
    all_non_units: Vec<Element>,
    /// Scope-filtered candidate factors, canonical order.
    factor_candidates: Vec<Element>,
    /// Square of the maximal ideal: products of two non-units land here.
    j_squared: Ideal,
    even_idx: Vec<usize>,
    irred: HashMap<Element, bool>,
    normal: HashMap<Element, bool>,
    memo: HashMap<Element, Rc<Vec<Vec<Element>>>>,
    class_reps: Vec<Element>,
    class_of: HashMap<Element, usize>,
}

impl Session {
    fn new(algebra: &Superalgebra, scope: FactorizationScope, cap: usize) -> Result<Session> {
        if !algebra.is_finite() {
            return Err(Error::InfiniteField);
        }
        let mut all_non_units: Vec<Element> = algebra
            .enumerate_elements()?
            .filter(|x| !x.is_zero() && !x.is_unit())
            .collect();
        all_non_units.sort_by(|a, b| a.canonical_cmp(b));
        let factor_candidates: Vec<Element> = all_non_units
            .iter()
            .filter(|x| match scope {
                FactorizationScope::General => true,
                FactorizationScope::Homogeneous => x.is_homogeneous(),
                FactorizationScope::EvenSubring => {
                    x.homogeneous_parity() == Some(Parity::Even)
                }
            })
            .cloned()
            .collect();
        let j_squared = canonical_superideal(algebra).power(2)?;
        let even_idx = (0..algebra.dim())
            .filter(|&i| algebra.basis_parity(i) == Parity::Even)
            .collect();
        Ok(Session {
            algebra: algebra.clone(),
            scope,
            cap,
            all_non_units,
            factor_candidates,
            j_squared,
            even_idx,
            irred: HashMap::new(),
            normal: HashMap::new(),
            memo: HashMap::new(),
            class_reps: Vec::new(),
            class_of: HashMap::new(),
        })
    }

    fn is_normal_memo(&mut self, e: &Element) -> bool {
        if self.scope == FactorizationScope::EvenSubring {
            return true; // the even part is commutative
        }
        if let Some(&v) = self.normal.get(e) {
            return v;
        }
        let v = e.is_normal();
        self.normal.insert(e.clone(), v);
        v
    }

    /// Irreducibility in the scope's universe, memoized. Elements
    /// outside the square of the maximal ideal are irreducible outright;
    /// the rest get an exhaustive left-factor sweep.
    fn is_irreducible_memo(&mut self, e: &Element) -> Result<bool> {
        if let Some(&v) = self.irred.get(e) {
            return Ok(v);
        }
        let v = if !self.j_squared.contains(e)? {
            true
        } else {
            match self.scope {
                FactorizationScope::EvenSubring => {
                    let mut irreducible = true;
                    // in-R_even irreducibility: even left factor, even cofactor
                    let candidates = self.factor_candidates.clone();
                    for b in &candidates {
                        if even_cofactor(b, e, &self.even_idx)?.is_some() {
                            irreducible = false;
                            break;
                        }
                    }
                    irreducible
                }
                _ => {
                    let mut irreducible = true;
                    for b in &self.all_non_units {
                        if crate::factor::solve_cofactor(b, e, crate::factor::Side::Left)?
                            .is_some()
                        {
                            irreducible = false;
                            break;
                        }
                    }
                    irreducible
                }
            }
        };
        self.irred.insert(e.clone(), v);
        Ok(v)
    }

    fn class_id(&mut self, e: &Element) -> Result<usize> {
        if let Some(&id) = self.class_of.get(e) {
            return Ok(id);
        }
        for (id, rep) in self.class_reps.iter().enumerate() {
            if associates_in_scope(e, rep, self.scope)? {
                self.class_of.insert(e.clone(), id);
                return Ok(id);
            }
        }
        let id = self.class_reps.len();
        self.class_reps.push(e.clone());
        self.class_of.insert(e.clone(), id);
        Ok(id)
    }

    fn class_key(&mut self, seq: &[Element]) -> Result<Vec<usize>> {
        let mut key = Vec::with_capacity(seq.len());
        for f in seq {
            key.push(self.class_id(f)?);
        }
        key.sort_unstable();
        Ok(key)
    }

    /// All non-unit in-scope solutions `y` of `f y = x`, canonical order.
    fn cofactor_solutions(&self, f: &Element, x: &Element) -> Result<Vec<Element>> {
        let alg = &self.algebra;
        let support: Vec<usize> = match self.scope {
            FactorizationScope::EvenSubring => self.even_idx.clone(),
            _ => (0..alg.dim()).collect(),
        };
        let columns: Vec<Vec<Scalar>> = support
            .iter()
            .map(|&k| f.mul_unchecked(&alg.basis_element(k)).coeffs().to_vec())
            .collect();
        let Some(sols) = solve_affine(alg.field(), &columns, x.coeffs()) else {
            return Ok(Vec::new());
        };
        let q = alg.field().size().expect("finite");
        let k = sols.kernel.len();
        if (k as u32) >= 32 || q.checked_pow(k as u32).map_or(true, |c| c > 250_000) {
            return Err(Error::Unsupported(format!(
                "cofactor solution space of size {q}^{k} is too large to enumerate"
            )));
        }
        let mut out = Vec::new();
        let mut digits = vec![0u64; k];
        loop {
            let mut point = sols.particular.clone();
            for (kv, &d) in sols.kernel.iter().zip(&digits) {
                for (pi, kvi) in point.iter_mut().zip(kv) {
                    let scaled = kvi
                        .mul(&alg.field().from_i64(d as i64))
                        .expect("same domain");
                    *pi = pi.add(&scaled).expect("same domain");
                }
            }
            let mut coeffs = vec![alg.field().zero(); alg.dim()];
            for (pos, &idx) in support.iter().enumerate() {
                coeffs[idx] = point[pos].clone();
            }
            let y = alg.element_from_coeffs(coeffs)?;
            let in_scope = match self.scope {
                FactorizationScope::General => true,
                FactorizationScope::Homogeneous => y.is_homogeneous(),
                FactorizationScope::EvenSubring => true,
            };
            if in_scope && !y.is_unit() && !y.is_zero() {
                out.push(y);
            }
            // increment
            let mut i = k;
            loop {
                if i == 0 {
                    out.sort_by(|a, b| a.canonical_cmp(b));
                    out.dedup();
                    return Ok(out);
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < q {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// One representative factor sequence per equivalence class of
    /// factorizations of `x`; stops early after `limit` classes.
    fn enumerate_node(
        &mut self,
        x: &Element,
        depth: usize,
        limit: Option<usize>,
    ) -> Result<Vec<Vec<Element>>> {
        if depth > self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        if self.is_irreducible_memo(x)? {
            return Ok(if self.is_normal_memo(x) {
                vec![vec![x.clone()]]
            } else {
                Vec::new()
            });
        }
        let mut results: Vec<Vec<Element>> = Vec::new();
        let mut keys: HashSet<Vec<usize>> = HashSet::new();
        for fi in 0..self.factor_candidates.len() {
            let f = self.factor_candidates[fi].clone();
            let solutions = self.cofactor_solutions(&f, x)?;
            if solutions.is_empty() {
                continue;
            }
            if !self.is_normal_memo(&f) || !self.is_irreducible_memo(&f)? {
                continue;
            }
            for y in solutions {
                let tails = self.factorizations_of(&y, depth + 1)?;
                for tail in tails.iter() {
                    let mut seq = Vec::with_capacity(tail.len() + 1);
                    seq.push(f.clone());
                    seq.extend(tail.iter().cloned());
                    let key = self.class_key(&seq)?;
                    if keys.insert(key) {
                        results.push(seq);
                        if let Some(lim) = limit {
                            if results.len() >= lim {
                                return Ok(results);
                            }
                        }
                    }
                }
            }
        }
        Ok(results)
    }

    /// Fully enumerated and memoized factorization classes of `x`.
    fn factorizations_of(&mut self, x: &Element, depth: usize) -> Result<Rc<Vec<Vec<Element>>>> {
        if let Some(hit) = self.memo.get(x) {
            return Ok(Rc::clone(hit));
        }
        let res = Rc::new(self.enumerate_node(x, depth, None)?);
        self.memo.insert(x.clone(), Rc::clone(&res));
        Ok(res)
    }

    /// One factorization of `x`, found greedily; avoids full enumeration.
    fn first_factorization(&mut self, x: &Element, depth: usize) -> Result<Option<Vec<Element>>> {
        if depth > self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        if self.is_irreducible_memo(x)? {
            return Ok(if self.is_normal_memo(x) {
                Some(vec![x.clone()])
            } else {
                None
            });
        }
        for fi in 0..self.factor_candidates.len() {
            let f = self.factor_candidates[fi].clone();
            let solutions = self.cofactor_solutions(&f, x)?;
            if solutions.is_empty() {
                continue;
            }
            if !self.is_normal_memo(&f) || !self.is_irreducible_memo(&f)? {
                continue;
            }
            for y in solutions {
                if let Some(tail) = self.first_factorization(&y, depth + 1)? {
                    let mut seq = vec![f];
                    seq.extend(tail);
                    return Ok(Some(seq));
                }
            }
        }
        Ok(None)
    }
}

/// All factorizations of `x` into normal irreducibles, one
/// representative per equivalence class, deterministically ordered.
pub fn factorizations(x: &Element, cap: usize) -> Result<Vec<Factorization>> {
    scoped_factorizations(x, FactorizationScope::General, cap)
}

pub(crate) fn scoped_factorizations(
    x: &Element,
    scope: FactorizationScope,
    cap: usize,
) -> Result<Vec<Factorization>> {
    if x.is_zero() {
        return Err(Error::ZeroInput("factorization of zero".into()));
    }
    if x.is_unit() {
        return Err(Error::UnitInput(x.to_string()));
    }
    let mut session = Session::new(x.algebra(), scope, cap)?;
    let seqs = session.enumerate_node(x, 0, None)?;
    Ok(seqs
        .into_iter()
        .map(|factors| Factorization {
            subject: x.clone(),
            factors,
            scope,
        })
        .collect())
}

/// Status of a unique-factorization check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UfsrStatus {
    Ufsr,
    NotUfsr,
    Undecided,
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UfsrMethod {
    Exhaustive,
    Structural,
    HomogeneousExhaustive,
    EvenExhaustive,
}

/// A machine-checkable reason for a negative verdict.
#[derive(Debug, Clone)]
pub enum UfsrWitness {
    /// Two verified, pairwise inequivalent factorizations of one subject.
    InequivalentFactorizations {
        first: Factorization,
        second: Factorization,
    },
    /// A nonzero non-unit with no factorization into normal irreducibles.
    NoFactorization {
        subject: Element,
        scope: FactorizationScope,
    },
}

impl UfsrWitness {
    /// Re-verifies the witness from scratch through the public
    /// predicates; failure is reported, never swallowed.
    pub fn verify(&self) -> Result<()> {
        match self {
            UfsrWitness::InequivalentFactorizations { first, second } => {
                first.verify()?;
                second.verify()?;
                if first.subject != second.subject {
                    return Err(Error::VerificationFailed(
                        "witness factorizations have different subjects".into(),
                    ));
                }
                if factorizations_equivalent(first, second)? {
                    return Err(Error::VerificationFailed(
                        "witness factorizations are equivalent".into(),
                    ));
                }
                Ok(())
            }
            UfsrWitness::NoFactorization { subject, scope } => {
                let found = scoped_factorizations(subject, *scope, DEFAULT_FACTOR_CAP)?;
                if found.is_empty() {
                    Ok(())
                } else {
                    Err(Error::VerificationFailed(format!(
                        "subject {subject} admits a factorization after all"
                    )))
                }
            }
        }
    }

    pub fn subject(&self) -> &Element {
        match self {
            UfsrWitness::InequivalentFactorizations { first, .. } => &first.subject,
            UfsrWitness::NoFactorization { subject, .. } => subject,
        }
    }
}

/// Outcome of a unique-factorization decision.
#[derive(Debug, Clone)]
pub struct UfsrVerdict {
    pub status: UfsrStatus,
    pub method: UfsrMethod,
    pub witness: Option<UfsrWitness>,
}

fn exhaustive_check(
    algebra: &Superalgebra,
    scope: FactorizationScope,
    method: UfsrMethod,
    cap: usize,
) -> Result<UfsrVerdict> {
    let mut session = Session::new(algebra, scope, cap)?;
    let subjects = session.factor_candidates.clone();
    for x in &subjects {
        let classes = session.enumerate_node(x, 0, Some(2))?;
        let witness = match classes.len() {
            0 => UfsrWitness::NoFactorization {
                subject: x.clone(),
                scope,
            },
            1 => continue,
            _ => UfsrWitness::InequivalentFactorizations {
                first: Factorization {
                    subject: x.clone(),
                    factors: classes[0].clone(),
                    scope,
                },
                second: Factorization {
                    subject: x.clone(),
                    factors: classes[1].clone(),
                    scope,
                },
            },
        };
        witness.verify()?;
        return Ok(UfsrVerdict {
            status: UfsrStatus::NotUfsr,
            method,
            witness: Some(witness),
        });
    }
    Ok(UfsrVerdict {
        status: UfsrStatus::Ufsr,
        method,
        witness: None,
    })
}

/// Exhaustive unique-factorization check over a finite base field:
/// every nonzero non-unit must admit exactly one equivalence class of
/// factorizations into normal irreducibles.
pub fn ufsr_check(algebra: &Superalgebra, cap: usize) -> Result<UfsrVerdict> {
    exhaustive_check(
        algebra,
        FactorizationScope::General,
        UfsrMethod::Exhaustive,
        cap,
    )
}

/// The homogeneous weakening: subjects and factors are restricted to
/// parity-homogeneous elements.
pub fn homogeneous_ufsr_check(algebra: &Superalgebra, cap: usize) -> Result<UfsrVerdict> {
    exhaustive_check(
        algebra,
        FactorizationScope::Homogeneous,
        UfsrMethod::HomogeneousExhaustive,
        cap,
    )
}

/// The even weakening: unique factorization, in the commutative sense,
/// inside the even part.
pub fn even_ufsr_check(algebra: &Superalgebra, cap: usize) -> Result<UfsrVerdict> {
    exhaustive_check(
        algebra,
        FactorizationScope::EvenSubring,
        UfsrMethod::EvenExhaustive,
        cap,
    )
}

/// Structural check that also works over infinite fields.
///
/// When the square of the maximal ideal vanishes, every nonzero
/// non-unit `a` is irreducible (a product of two non-units lies in the
/// vanished square) and normal (`aR = Ka = Ra`), so every factorization
/// has length one and uniqueness is trivial: the algebra is a UFSR.
/// Otherwise a bounded search looks for a verified non-uniqueness
/// witness among generator products `g_i g_j = g_i (g_i + g_j)`;
/// if none verifies, the check reports `Undecided`.
pub fn structural_ufsr_check(algebra: &Superalgebra) -> Result<UfsrVerdict> {
    let j = canonical_superideal(algebra);
    let j2 = j.power(2)?;
    if j2.is_zero() {
        return Ok(UfsrVerdict {
            status: UfsrStatus::Ufsr,
            method: UfsrMethod::Structural,
            witness: None,
        });
    }
    let n = algebra.generator_count();
    for i in 0..n {
        for jx in 0..n {
            if i == jx {
                continue;
            }
            let gi = algebra.generator(i);
            let gj = algebra.generator(jx);
            if gi.is_zero() || gj.is_zero() {
                continue;
            }
            let subject = gi.mul_unchecked(&gj);
            if subject.is_zero() {
                continue;
            }
            let alt = gi.add(&gj)?;
            debug_assert_eq!(gi.mul_unchecked(&alt), subject);
            let all_irreducible = [&gi, &gj, &alt]
                .iter()
                .all(|e| is_irreducible(e).map(|d| d == Decision::Yes).unwrap_or(false));
            if !all_irreducible {
                continue;
            }
            let first = Factorization {
                subject: subject.clone(),
                factors: vec![gi.clone(), gj.clone()],
                scope: FactorizationScope::General,
            };
            let second = Factorization {
                subject: subject.clone(),
                factors: vec![gi.clone(), alt.clone()],
                scope: FactorizationScope::General,
            };
            if factorizations_equivalent(&first, &second)? {
                continue;
            }
            let witness = UfsrWitness::InequivalentFactorizations { first, second };
            witness.verify()?;
            return Ok(UfsrVerdict {
                status: UfsrStatus::NotUfsr,
                method: UfsrMethod::Structural,
                witness: Some(witness),
            });
        }
    }
    Ok(UfsrVerdict {
        status: UfsrStatus::Undecided,
        method: UfsrMethod::Structural,
        witness: None,
    })
}

/// Witness produced by factoring an element annihilated by an even
/// irreducible `a`: `x = a^n f_1 ... f_d` with no `f_i` associate to
/// `a` and the `f_i` pairwise non-associate.
#[derive(Debug, Clone)]
pub struct AnnihilatorWitness {
    pub base: Element,
    pub annihilated: Element,
    pub exponent: usize,
    pub cofactors: Vec<Element>,
}

impl AnnihilatorWitness {
    pub fn verify(&self) -> Result<()> {
        let mut product = self.base.pow(self.exponent);
        for f in &self.cofactors {
            product = product.mul(f)?;
        }
        if product != self.annihilated {
            return Err(Error::VerificationFailed(format!(
                "regrouped product {product} differs from {}",
                self.annihilated
            )));
        }
        for f in &self.cofactors {
            if !f.is_normal() || is_irreducible(f)? != Decision::Yes {
                return Err(Error::VerificationFailed(format!(
                    "cofactor {f} is not a normal irreducible"
                )));
            }
            if are_associates(f, &self.base)? {
                return Err(Error::VerificationFailed(format!(
                    "cofactor {f} is associate to the base"
                )));
            }
        }
        for (i, f) in self.cofactors.iter().enumerate() {
            for g in &self.cofactors[i + 1..] {
                if are_associates(f, g)? {
                    return Err(Error::VerificationFailed(format!(
                        "cofactors {f} and {g} are associate"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Factors an annihilated element and pulls out every factor associate
/// to the even irreducible `a`, using that even elements are central.
///
/// Preconditions: `a` is even, irreducible and a non-unit; `x` is
/// nonzero homogeneous with `a x = 0`; the ambient algebra is a unique
/// factorization superring (the caller's hypothesis — when the algebra
/// has no even irreducible at all the hypothesis set is empty and this
/// operation is unreachable).
pub fn annihilator_factor_witness(
    a: &Element,
    x: &Element,
    cap: usize,
) -> Result<AnnihilatorWitness> {
    if a.algebra() != x.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if a.is_zero() || x.is_zero() {
        return Err(Error::ZeroInput("annihilator witness".into()));
    }
    if a.homogeneous_parity() != Some(Parity::Even) {
        return Err(Error::Precondition("the base element must be even".into()));
    }
    if a.is_unit() {
        return Err(Error::UnitInput(a.to_string()));
    }
    match is_irreducible(a)? {
        Decision::Yes => {}
        Decision::No => {
            return Err(Error::Precondition(
                "the base element must be irreducible".into(),
            ))
        }
        Decision::Undecided => {
            return Err(Error::Undecided("irreducibility of the base".into()))
        }
    }
    if !x.is_homogeneous() {
        return Err(Error::Precondition(
            "the annihilated element must be homogeneous".into(),
        ));
    }
    if !a.mul(x)?.is_zero() {
        return Err(Error::Precondition(
            "the base must annihilate the element".into(),
        ));
    }

    let mut session = Session::new(a.algebra(), FactorizationScope::General, cap)?;
    let Some(factors) = session.first_factorization(x, 0)? else {
        return Err(Error::Precondition(
            "the annihilated element admits no factorization into normal irreducibles; \
             the ambient ring is not a unique factorization superring"
            .into(),
        ));
    };

    let one = a.algebra().one();
    let mut exponent = 0usize;
    let mut pending = one.clone();
    let mut cofactors: Vec<Element> = Vec::new();
    for g in &factors {
        if let Some((u, v)) = associate_certificate(g, a)? {
            // g = u a v = a (u v) because a is even, hence central.
            exponent += 1;
            pending = pending.mul(&u)?.mul(&v)?;
        } else if pending == one {
            cofactors.push(g.clone());
        } else {
            cofactors.push(pending.mul(g)?);
            pending = one.clone();
        }
    }
    if pending != one {
        match cofactors.last_mut() {
            Some(last) => *last = last.mul(&pending)?,
            None => {
                return Err(Error::Precondition(
                    "every factor of the annihilated element is associate to the base; \
                     no residual factorization remains"
                    .into(),
                ))
            }
        }
    }

    let witness = AnnihilatorWitness {
        base: a.clone(),
        annihilated: x.clone(),
        exponent,
        cofactors,
    };
    witness.verify()?;
    Ok(witness)
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

    fn f3_flat3() -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::prime_field(3).unwrap(),
            vec!["e1", "e2", "e3"],
            vec!["e1*e2", "e1*e3", "e2*e3"],
        ))
        .unwrap()
    }

    fn ex312_f3() -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::prime_field(3).unwrap(),
            vec!["e1", "e2", "e3"],
            vec!["e1*e2 - e1*e3"],
        ))
        .unwrap()
    }

    fn fact(alg: &Superalgebra, subject: &str, factors: &[&str]) -> Factorization {
        Factorization {
            subject: alg.parse_element(subject).unwrap(),
            factors: factors.iter().map(|f| alg.parse_element(f).unwrap()).collect(),
            scope: FactorizationScope::General,
        }
    }

    #[test]
    fn top_monomial_has_three_classes_over_f2() {
        let alg = f2_free2();
        let t12 = alg.parse_element("t1*t2").unwrap();
        let found = factorizations(&t12, DEFAULT_FACTOR_CAP).unwrap();
        assert_eq!(found.len(), 3);
        for f in &found {
            f.verify().unwrap();
            assert_eq!(f.factors.len(), 2);
        }
        // The two classes highlighted by the counterexample must appear.
        for expected in [
            fact(&alg, "t1*t2", &["t1", "t2"]),
            fact(&alg, "t1*t2", &["t1", "t1 + t2"]),
        ] {
            expected.verify().unwrap();
            assert!(
                found
                    .iter()
                    .any(|f| factorizations_equivalent(f, &expected).unwrap()),
                "missing class {:?}",
                expected.factor_strings()
            );
        }
    }

    #[test]
    fn irreducibles_factor_only_as_themselves() {
        let alg = f3_flat3();
        let e1 = alg.generator(0);
        let found = factorizations(&e1, DEFAULT_FACTOR_CAP).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].factors, vec![e1]);
    }

    #[test]
    fn factorization_rejects_zero_and_units() {
        let alg = f2_free2();
        assert!(matches!(
            factorizations(&alg.zero(), 16),
            Err(Error::ZeroInput(_))
        ));
        assert!(matches!(
            factorizations(&alg.one(), 16),
            Err(Error::UnitInput(_))
        ));
        let q = Superalgebra::build(AlgebraSpec::new(ScalarDomain::Rational, ["t1"], []))
            .unwrap();
        assert!(matches!(
            factorizations(&q.generator(0), 16),
            Err(Error::InfiniteField)
        ));
    }

    #[test]
    fn f2_free_two_is_not_a_ufsr() {
        let verdict = ufsr_check(&f2_free2(), DEFAULT_FACTOR_CAP).unwrap();
        assert_eq!(verdict.status, UfsrStatus::NotUfsr);
        let witness = verdict.witness.unwrap();
        witness.verify().unwrap();
        assert_eq!(witness.subject().to_string(), "t1*t2");
    }

    #[test]
    fn flat_algebra_is_a_ufsr() {
        let verdict = ufsr_check(&f3_flat3(), DEFAULT_FACTOR_CAP).unwrap();
        assert_eq!(verdict.status, UfsrStatus::Ufsr);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn grassmann3_quotient_is_not_a_ufsr() {
        let alg = ex312_f3();
        let verdict = ufsr_check(&alg, DEFAULT_FACTOR_CAP).unwrap();
        assert_eq!(verdict.status, UfsrStatus::NotUfsr);
        verdict.witness.unwrap().verify().unwrap();

        // The counterexample product has both highlighted classes.
        let e12 = alg.parse_element("e1*e2").unwrap();
        let found = factorizations(&e12, DEFAULT_FACTOR_CAP).unwrap();
        for expected in [
            fact(&alg, "e1*e2", &["e1", "e2"]),
            fact(&alg, "e1*e2", &["e1", "e3"]),
        ] {
            assert!(
                found
                    .iter()
                    .any(|f| factorizations_equivalent(f, &expected).unwrap()),
                "missing {:?}",
                expected.factor_strings()
            );
        }
        let a = fact(&alg, "e1*e2", &["e1", "e2"]);
        let b = fact(&alg, "e1*e2", &["e1", "e3"]);
        assert!(!factorizations_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn homogeneous_check_matches_general_on_shipped_algebras() {
        for alg in [f2_free2(), f3_flat3(), ex312_f3()] {
            let general = ufsr_check(&alg, DEFAULT_FACTOR_CAP).unwrap().status;
            let homog = homogeneous_ufsr_check(&alg, DEFAULT_FACTOR_CAP)
                .unwrap()
                .status;
            assert_eq!(general, homog);
        }
    }

    #[test]
    fn even_part_checks() {
        // F2[t1,t2]: the even part {0, 1, t1t2, 1+t1t2} is a UFR; its
        // only nonzero non-unit t1*t2 is irreducible there.
        let verdict = even_ufsr_check(&f2_free2(), DEFAULT_FACTOR_CAP).unwrap();
        assert_eq!(verdict.status, UfsrStatus::Ufsr);
        let t12 = f2_free2().parse_element("t1*t2").unwrap();
        assert!(is_irreducible_in_even_part(&t12).unwrap());

        // Trivial even part: vacuously a UFR.
        assert_eq!(
            even_ufsr_check(&f3_flat3(), DEFAULT_FACTOR_CAP).unwrap().status,
            UfsrStatus::Ufsr
        );
        // 27-element even part sweep.
        assert_eq!(
            even_ufsr_check(&ex312_f3(), DEFAULT_FACTOR_CAP).unwrap().status,
            UfsrStatus::Ufsr
        );
    }

    #[test]
    fn structural_check_agrees_with_exhaustive() {
        let flat = f3_flat3();
        assert_eq!(
            structural_ufsr_check(&flat).unwrap().status,
            UfsrStatus::Ufsr
        );
        assert_eq!(
            ufsr_check(&flat, DEFAULT_FACTOR_CAP).unwrap().status,
            UfsrStatus::Ufsr
        );

        let free = f2_free2();
        let structural = structural_ufsr_check(&free).unwrap();
        assert_eq!(structural.status, UfsrStatus::NotUfsr);
        structural.witness.unwrap().verify().unwrap();
    }

    #[test]
    fn structural_check_over_the_rationals() {
        let dual = Superalgebra::build(AlgebraSpec::new(ScalarDomain::Rational, ["e"], []))
            .unwrap();
        assert_eq!(
            structural_ufsr_check(&dual).unwrap().status,
            UfsrStatus::Ufsr
        );

        let free = Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::Rational,
            ["t1", "t2"],
            [],
        ))
        .unwrap();
        let verdict = structural_ufsr_check(&free).unwrap();
        assert_eq!(verdict.status, UfsrStatus::NotUfsr);
        let witness = verdict.witness.unwrap();
        witness.verify().unwrap();
        match &witness {
            UfsrWitness::InequivalentFactorizations { first, second } => {
                assert_eq!(first.subject.to_string(), "t1*t2");
                assert_eq!(first.factor_strings(), ["t1", "t2"]);
                assert_eq!(second.factor_strings(), ["t1", "t1 + t2"]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn annihilator_witness_zero_exponent_branch() {
        // F2 Grassmann algebra on four generators has the even
        // irreducible t1*t2 + t3*t4; it annihilates t1*t2*t3, whose
        // factorizations contain no factor associate to it.
        let alg = Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::prime_field(2).unwrap(),
            ["t1", "t2", "t3", "t4"],
            [],
        ))
        .unwrap();
        let a = alg.parse_element("t1*t2 + t3*t4").unwrap();
        assert_eq!(is_irreducible(&a).unwrap(), Decision::Yes);
        let x = alg.parse_element("t1*t2*t3").unwrap();
        assert!(a.mul(&x).unwrap().is_zero());
        let witness = annihilator_factor_witness(&a, &x, DEFAULT_FACTOR_CAP).unwrap();
        witness.verify().unwrap();
        assert_eq!(witness.exponent, 0);
        let mut product = alg.one();
        for f in &witness.cofactors {
            product = product.mul(f).unwrap();
        }
        assert_eq!(product, x);
    }

    #[test]
    fn annihilator_witness_preconditions() {
        let alg = f2_free2();
        let t12 = alg.parse_element("t1*t2").unwrap(); // even but reducible
        let t1 = alg.generator(0);
        assert!(matches!(
            annihilator_factor_witness(&t12, &t1, 16),
            Err(Error::Precondition(_))
        ));
        // Odd base rejected.
        assert!(matches!(
            annihilator_factor_witness(&t1, &t12, 16),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn no_factorization_witness_detects_vacuity() {
        // In the flat algebra every nonzero non-unit is its own unique
        // factorization, so a NoFactorization witness must not verify.
        let alg = f3_flat3();
        let bogus = UfsrWitness::NoFactorization {
            subject: alg.generator(0),
            scope: FactorizationScope::General,
        };
        assert!(matches!(
            bogus.verify(),
            Err(Error::VerificationFailed(_))
        ));
    }
}
