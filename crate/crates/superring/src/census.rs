//! Randomized census: sample quotient algebras with random homogeneous
//! degree-two relations, classify each one, and assert the structure
//! theorems on every unique-factorization superdomain found.

use std::collections::HashMap;
use std::rc::Rc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraSpec, Superalgebra};
use crate::dimension::{ksdim, KsdimPair};
use crate::error::{Error, Result};
use crate::factor::irreducible_elements;
use crate::structure::{
    canonical_superideal, is_local, is_superdomain, is_superfield, maximal_ideals, GradedDims,
};
use crate::ufsr::{structural_ufsr_check, ufsr_check, UfsrStatus};

#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub field: crate::scalar::ScalarDomain,
    pub samples: usize,
    pub max_gens: usize,
    pub seed: u64,
    pub cap: usize,
}

impl CensusConfig {
    pub fn new(field: crate::scalar::ScalarDomain, samples: usize, max_gens: usize, seed: u64) -> Self {
        CensusConfig {
            field,
            samples,
            max_gens,
            seed,
            cap: crate::ufsr::DEFAULT_FACTOR_CAP,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub sample: usize,
    pub generators: usize,
    pub relations: Vec<String>,
    pub dims: GradedDims,
    pub ufsr: UfsrStatus,
    pub superdomain: bool,
    pub superfield: bool,
    pub regular: bool,
    pub ksdim: KsdimPair,
    pub nilpotency_index: Option<usize>,
    pub local: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub field: String,
    pub seed: u64,
    pub samples: usize,
    pub max_gens: usize,
    pub distinct_algebras: usize,
    pub ufsr_rows: usize,
    pub rows: Vec<CensusRow>,
    /// Structure-theorem violations; must stay empty.
    pub violations: Vec<String>,
}

struct Classification {
    dims: GradedDims,
    ufsr: UfsrStatus,
    superdomain: bool,
    superfield: bool,
    regular: bool,
    ksdim: KsdimPair,
    nilpotency_index: Option<usize>,
    local: bool,
    violations: Vec<String>,
}

/// Classifies one algebra and, when it is a unique factorization
/// superdomain, asserts the full structure-theorem package: locality
/// with the canonical superideal as the unique maximal ideal,
/// superfield, nilpotent normal irreducibles that are prime
/// zerodivisors (at least one existing), nilpotency index at most
/// `n + 1`, and Krull superdimension `0|d` with `d >= 1`.
fn classify(algebra: &Superalgebra, cap: usize) -> Result<Classification> {
    let mut violations = Vec::new();
    let verdict = ufsr_check(algebra, cap)?;
    let structural = structural_ufsr_check(algebra)?;
    match (structural.status, verdict.status) {
        (UfsrStatus::Ufsr, UfsrStatus::Ufsr) => {}
        (UfsrStatus::NotUfsr, UfsrStatus::NotUfsr) => {}
        (UfsrStatus::Undecided, _) => {}
        (s, e) => violations.push(format!(
            "structural check {s:?} disagrees with exhaustive check {e:?}"
        )),
    }

    let superdomain = is_superdomain(algebra)?;
    let superfield = is_superfield(algebra)?;
    let local = is_local(algebra);
    let j = canonical_superideal(algebra);
    let nilpotency_index = j.nilpotency_index();
    let ks = ksdim(algebra)?;
    let regular = crate::dimension::is_regular_superring(algebra)?;
    let (de, do_) = algebra.dims();
    let dims = GradedDims { even: de, odd: do_ };

    if verdict.status == UfsrStatus::Ufsr && superdomain {
        if !local {
            violations.push("UFSR superdomain is not local".into());
        }
        let maximals = maximal_ideals(algebra);
        if maximals.len() != 1 || !maximals[0].same_ideal(&j) {
            violations.push("maximal ideal differs from the canonical superideal".into());
        }
        if !superfield {
            violations.push("UFSR superdomain is not a superfield".into());
        }
        match nilpotency_index {
            Some(ix) if ix <= algebra.generator_count() + 1 => {}
            other => violations.push(format!(
                "canonical superideal nilpotency index {other:?} exceeds n + 1"
            )),
        }
        if ks.even != 0 {
            violations.push(format!("even Krull superdimension {} != 0", ks.even));
        }
        if do_ > 0 && ks.odd < 1 {
            violations.push("odd Krull superdimension is zero on a ring with odd part".into());
        }
        // Every normal irreducible must be nilpotent.
        for x in irreducible_elements(algebra)? {
            if x.is_normal() && !x.is_nilpotent() {
                violations.push(format!("normal irreducible {x} is not nilpotent"));
            }
        }
    }

    Ok(Classification {
        dims,
        ufsr: verdict.status,
        superdomain,
        superfield,
        regular,
        ksdim: ks,
        nilpotency_index,
        local,
        violations,
    })
}

/// Draws `0..=3` random relations, each a nonzero homogeneous
/// combination of degree-two monomials in the generators.
fn sample_relations(rng: &mut ChaCha8Rng, field: crate::scalar::ScalarDomain, n: usize) -> Vec<String> {
    let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push(format!("{}*{}", names[i], names[j]));
        }
    }
    if pairs.is_empty() {
        return Vec::new();
    }
    let q = field.size().expect("census runs over finite fields");
    let count = rng.gen_range(0..=3usize);
    let mut relations = Vec::new();
    for _ in 0..count {
        loop {
            let coeffs: Vec<u64> = (0..pairs.len()).map(|_| rng.gen_range(0..q)).collect();
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            let text = pairs
                .iter()
                .zip(&coeffs)
                .filter(|(_, &c)| c != 0)
                .map(|(m, &c)| if c == 1 { m.clone() } else { format!("{c}*{m}") })
                .collect::<Vec<_>>()
                .join(" + ");
            relations.push(text);
            break;
        }
    }
    relations
}

/// Runs the census: deterministic for a fixed seed, with structurally
/// identical algebras classified once and shared across rows.
pub fn run_census(config: &CensusConfig) -> Result<CensusReport> {
    if config.field.size().is_none() {
        return Err(Error::InfiniteField);
    }
    if config.max_gens > 4 {
        return Err(Error::Unsupported(
            "census supports at most 4 generators".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cache: HashMap<String, Rc<Classification>> = HashMap::new();
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for sample in 0..config.samples {
        let n = rng.gen_range(1..=config.max_gens.max(1));
        let relations = sample_relations(&mut rng, config.field, n);
        let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
        let spec = AlgebraSpec::new(config.field, names, relations.clone());
        let algebra = Superalgebra::build(spec)?;
        let key = format!("{}|{}", n, algebra.ideal_key());
        let classification = match cache.get(&key) {
            Some(hit) => Rc::clone(hit),
            None => {
                let c = Rc::new(classify(&algebra, config.cap)?);
                cache.insert(key, Rc::clone(&c));
                c
            }
        };
        for v in &classification.violations {
            violations.push(format!(
                "sample {sample} (n={n}, relations {relations:?}): {v}"
            ));
        }
        rows.push(CensusRow {
            sample,
            generators: n,
            relations,
            dims: classification.dims.clone(),
            ufsr: classification.ufsr,
            superdomain: classification.superdomain,
            superfield: classification.superfield,
            regular: classification.regular,
            ksdim: classification.ksdim,
            nilpotency_index: classification.nilpotency_index,
            local: classification.local,
        });
    }
    let ufsr_rows = rows
        .iter()
        .filter(|r| r.ufsr == UfsrStatus::Ufsr)
        .count();
    Ok(CensusReport {
        field: config.field.describe(),
        seed: config.seed,
        samples: config.samples,
        max_gens: config.max_gens,
        distinct_algebras: cache.len(),
        ufsr_rows,
        rows,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{f2, f3};

    #[test]
    fn census_is_deterministic_and_clean() {
        let config = CensusConfig::new(f2(), 40, 3, 0);
        let a = run_census(&config).unwrap();
        let b = run_census(&config).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert!(a.violations.is_empty(), "{:?}", a.violations);
        assert_eq!(a.rows.len(), 40);
        assert!(a.ufsr_rows > 0);
    }

    #[test]
    fn single_generator_samples_are_always_ufsr() {
        let config = CensusConfig::new(f3(), 25, 1, 7);
        let report = run_census(&config).unwrap();
        assert!(report.violations.is_empty());
        for row in &report.rows {
            assert_eq!(row.ufsr, UfsrStatus::Ufsr);
            assert_eq!(row.ksdim, crate::dimension::KsdimPair { even: 0, odd: 1 });
        }
    }

    #[test]
    fn empty_census() {
        let config = CensusConfig::new(f2(), 0, 3, 0);
        let report = run_census(&config).unwrap();
        assert!(report.rows.is_empty());
        assert!(report.violations.is_empty());
    }

    #[test]
    fn infinite_field_is_rejected() {
        let config = CensusConfig::new(crate::scalar::ScalarDomain::Rational, 5, 2, 0);
        assert!(matches!(run_census(&config), Err(Error::InfiniteField)));
    }
}
