//! Krull superdimension `0|d`, odd parameter systems, the cotangent
//! report `sdim(m/m^2)`, superring regularity, and the Artinian profile
//! of a finite-dimensional algebra.

use serde::Serialize;

use crate::algebra::{Element, Superalgebra};
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, RowSpace};
use crate::monomial::Parity;
use crate::scalar::Scalar;
use crate::structure::{canonical_superideal, is_local, GradedDims};

/// The pair `Kdim(R_even) | max length of an odd parameter system`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KsdimPair {
    pub even: usize,
    pub odd: usize,
}

impl std::fmt::Display for KsdimPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

/// Maximum length of a tuple of odd elements with nonzero product.
///
/// Since the even part is Artinian local, a tuple `a_1, .., a_n` of odd
/// elements is a parameter system exactly when `a_1 ... a_n != 0` (the
/// annihilator is then proper and the quotient keeps Krull dimension
/// zero). The search ranges over subsets of odd basis monomials only:
/// expanding a nonzero product of arbitrary odd elements by
/// multilinearity exhibits a summand over distinct basis monomials
/// (repeated monomials square to zero) of the same length, and
/// conversely every subset with nonzero product is itself a system.
pub fn odd_ksdim(algebra: &Superalgebra) -> usize {
    let odd: Vec<Element> = algebra
        .parity_indices(Parity::Odd)
        .into_iter()
        .map(|i| algebra.basis_element(i))
        .collect();
    fn dfs(odd: &[Element], start: usize, product: &Element, depth: usize) -> usize {
        let mut best = depth;
        for i in start..odd.len() {
            let next = product.mul_unchecked(&odd[i]);
            if !next.is_zero() {
                best = best.max(dfs(odd, i + 1, &next, depth + 1));
            }
        }
        best
    }
    dfs(&odd, 0, &algebra.one(), 0)
}

/// Outcome of scanning the even part for prime ideals.
#[derive(Debug, Clone, Serialize)]
pub struct EvenPrimeScan {
    pub primes_found: usize,
    pub all_maximal: bool,
    pub method: &'static str,
}

/// Finds every prime ideal of the commutative even part and checks
/// maximality. Small finite even parts are scanned by enumerating all
/// multiplication-closed subspaces; otherwise the structural route
/// verifies that the non-constant even monomials span a nilpotent ideal
/// of codimension one, which every prime must contain and which is
/// therefore the unique (maximal) prime.
pub fn scan_even_part_primes(algebra: &Superalgebra) -> Result<EvenPrimeScan> {
    let even_idx = algebra.parity_indices(Parity::Even);
    let de = even_idx.len();
    let enumerable = algebra
        .field()
        .size()
        .map(|q| de <= 4 && q.pow(de as u32) <= 256)
        .unwrap_or(false);
    if enumerable {
        let evens: Vec<Element> = algebra.enumerate_support(&even_idx)?.collect();
        let dim = algebra.dim();
        // Breadth-first closure over all subspaces of the even part.
        let key_of = |space: &RowSpace| -> String {
            let mut rows: Vec<String> = space
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
        };
        let mut seen = std::collections::HashSet::new();
        let mut queue = vec![RowSpace::new(algebra.field(), dim)];
        seen.insert(key_of(&queue[0]));
        let mut subspaces = Vec::new();
        while let Some(space) = queue.pop() {
            for x in &evens {
                if x.is_zero() || space.contains(x.coeffs()) {
                    continue;
                }
                let mut bigger = space.clone();
                bigger.insert(x.coeffs().to_vec());
                if seen.insert(key_of(&bigger)) {
                    queue.push(bigger.clone());
                    subspaces.push(bigger);
                }
            }
        }
        subspaces.push(RowSpace::new(algebra.field(), dim));

        let one = algebra.one();
        let mut primes_found = 0usize;
        let mut all_maximal = true;
        for space in &subspaces {
            let is_ideal = space.rows().iter().all(|row| {
                let r = algebra.element_from_coeffs(row.clone()).expect("row fits");
                even_idx.iter().all(|&k| {
                    space.contains(r.mul_unchecked(&algebra.basis_element(k)).coeffs())
                })
            });
            if !is_ideal || space.contains(one.coeffs()) {
                continue;
            }
            let outside: Vec<&Element> = evens
                .iter()
                .filter(|x| !space.contains(x.coeffs()))
                .collect();
            let prime = outside.iter().all(|x| {
                outside
                    .iter()
                    .all(|y| !space.contains(x.mul_unchecked(y).coeffs()))
            });
            if !prime {
                continue;
            }
            primes_found += 1;
            let maximal = outside.iter().all(|x| {
                let mut columns: Vec<Vec<Scalar>> = even_idx
                    .iter()
                    .map(|&k| x.mul_unchecked(&algebra.basis_element(k)).coeffs().to_vec())
                    .collect();
                for row in space.rows() {
                    columns.push(row.clone());
                }
                solve_affine(algebra.field(), &columns, one.coeffs()).is_some()
            });
            all_maximal &= maximal;
        }
        return Ok(EvenPrimeScan {
            primes_found,
            all_maximal,
            method: "enumeration",
        });
    }

    // Structural route, with each ingredient verified numerically.
    let dim = algebra.dim();
    let mut radical = RowSpace::new(algebra.field(), dim);
    let mut nil_basis = Vec::new();
    for &k in &even_idx {
        if k == 0 {
            continue;
        }
        let m = algebra.basis_element(k);
        radical.insert(m.coeffs().to_vec());
        nil_basis.push(m);
    }
    // Closed under multiplication by the even part?
    let closed = nil_basis.iter().all(|r| {
        even_idx
            .iter()
            .all(|&k| radical.contains(r.mul_unchecked(&algebra.basis_element(k)).coeffs()))
    });
    // Nilpotent? Iterate spanwise products until the span dies.
    let mut power: Vec<Element> = nil_basis.clone();
    let mut nilpotent = false;
    for _ in 0..=dim {
        if power.is_empty() {
            nilpotent = true;
            break;
        }
        let mut next_space = RowSpace::new(algebra.field(), dim);
        let mut next = Vec::new();
        for a in &power {
            for b in &nil_basis {
                let p = a.mul_unchecked(b);
                if !p.is_zero() && next_space.insert(p.coeffs().to_vec()) {
                    next.push(algebra.element_from_coeffs(
                        next_space.rows().last().unwrap().clone(),
                    )?);
                }
            }
        }
        power = next;
    }
    let codim_one = radical.rank() + 1 == de;
    if !(closed && nilpotent && codim_one) {
        return Err(Error::VerificationFailed(
            "even part is not a field plus nilpotents".into(),
        ));
    }
    // Every prime of the even part contains all nilpotents, hence this
    // ideal; the quotient is the base field, so the ideal is the unique
    // prime and it is maximal.
    Ok(EvenPrimeScan {
        primes_found: 1,
        all_maximal: true,
        method: "structural",
    })
}

/// Krull dimension of the even part. Always zero here; the claim is
/// backed by an explicit prime scan of the even part.
pub fn even_ksdim(algebra: &Superalgebra) -> Result<usize> {
    let scan = scan_even_part_primes(algebra)?;
    if !scan.all_maximal {
        return Err(Error::VerificationFailed(
            "found a non-maximal prime in the even part".into(),
        ));
    }
    Ok(0)
}

pub fn ksdim(algebra: &Superalgebra) -> Result<KsdimPair> {
    Ok(KsdimPair {
        even: even_ksdim(algebra)?,
        odd: odd_ksdim(algebra),
    })
}

/// Graded dimensions of the cotangent space `m / m^2` of the (unique)
/// maximal ideal.
#[derive(Debug, Clone, Serialize)]
pub struct CotangentReport {
    pub maximal_ideal_dims: GradedDims,
    pub m_squared_dims: GradedDims,
    pub sdim: KsdimPair,
}

pub fn cotangent_sdim(algebra: &Superalgebra) -> Result<CotangentReport> {
    if !is_local(algebra) {
        return Err(Error::Unsupported(
            "cotangent report requires a local algebra".into(),
        ));
    }
    let m = canonical_superideal(algebra);
    let m2 = m.power(2)?;
    let (me, mo) = m.dims();
    let (se, so) = m2.dims();
    debug_assert!(se <= me && so <= mo);
    Ok(CotangentReport {
        maximal_ideal_dims: GradedDims { even: me, odd: mo },
        m_squared_dims: GradedDims { even: se, odd: so },
        sdim: KsdimPair {
            even: me - se,
            odd: mo - so,
        },
    })
}

/// Regularity in the sense of matching Krull superdimension with the
/// cotangent superdimension, `Ksdim(R) = sdim(m/m^2)`.
pub fn is_regular_superring(algebra: &Superalgebra) -> Result<bool> {
    let k = ksdim(algebra)?;
    let c = cotangent_sdim(algebra)?;
    Ok(k == c.sdim)
}

/// `R_odd` is a finitely generated module over the even part; immediate
/// for finite-dimensional algebras but exposed as a named predicate.
pub fn is_oddly_noetherian(algebra: &Superalgebra) -> bool {
    let _ = algebra;
    true
}

/// Chain-condition profile of a finite-dimensional algebra.
#[derive(Debug, Clone, Serialize)]
pub struct ArtinianProfile {
    pub artinian: bool,
    pub noetherian: bool,
    pub oddly_noetherian: bool,
    pub ksdim: KsdimPair,
    /// Least `n` with `m^n = 0` for the maximal ideal.
    pub maximal_power_vanishing: Option<usize>,
    pub all_primes_maximal: bool,
}

/// Profile report: chain conditions hold because every superideal is a
/// graded subspace of a finite-dimensional algebra, so strict chains
/// are bounded by the linear dimension. Primes of the whole algebra are
/// `p_even + R_odd` over primes of the even part, so the even scan
/// settles whether all primes are maximal.
pub fn artinian_profile(algebra: &Superalgebra) -> Result<ArtinianProfile> {
    let scan = scan_even_part_primes(algebra)?;
    let m = canonical_superideal(algebra);
    Ok(ArtinianProfile {
        artinian: true,
        noetherian: true,
        oddly_noetherian: is_oddly_noetherian(algebra),
        ksdim: ksdim(algebra)?,
        maximal_power_vanishing: m.nilpotency_index(),
        all_primes_maximal: scan.all_maximal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraSpec;
    use crate::scalar::ScalarDomain;

    fn q_free2() -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(ScalarDomain::Rational, ["t1", "t2"], [])).unwrap()
    }

    fn ex312(domain: ScalarDomain) -> Superalgebra {
        Superalgebra::build(AlgebraSpec::new(
            domain,
            vec!["e1", "e2", "e3"],
            vec!["e1*e2 - e1*e3"],
        ))
        .unwrap()
    }

    fn flat(domain: ScalarDomain, names: &[&str]) -> Superalgebra {
        let mut relations = Vec::new();
        for i in 0..names.len() {
            for j in i..names.len() {
                relations.push(format!("{}*{}", names[i], names[j]));
            }
        }
        Superalgebra::build(AlgebraSpec::new(
            domain,
            names.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            relations,
        ))
        .unwrap()
    }

    #[test]
    fn odd_dimension_by_exhaustive_tuples() {
        assert_eq!(odd_ksdim(&q_free2()), 2);
        assert_eq!(odd_ksdim(&flat(ScalarDomain::Rational, &["e1", "e2", "e3", "e4", "e5"])), 1);
        assert_eq!(odd_ksdim(&ex312(ScalarDomain::Rational)), 2);
        assert_eq!(odd_ksdim(&ex312(ScalarDomain::prime_field(3).unwrap())), 2);
    }

    #[test]
    fn odd_dimension_matches_unpruned_oracle() {
        // Oracle: enumerate all subsets of odd basis monomials without
        // pruning and take the longest nonzero product.
        for alg in [
            q_free2(),
            ex312(ScalarDomain::Rational),
            flat(ScalarDomain::prime_field(3).unwrap(), &["e1", "e2", "e3"]),
        ] {
            let odd: Vec<_> = alg
                .parity_indices(Parity::Odd)
                .into_iter()
                .map(|i| alg.basis_element(i))
                .collect();
            let mut best = 0;
            for subset in 0u32..(1 << odd.len()) {
                let mut p = alg.one();
                for (i, o) in odd.iter().enumerate() {
                    if subset >> i & 1 == 1 {
                        p = p.mul_unchecked(o);
                    }
                }
                if !p.is_zero() {
                    best = best.max(subset.count_ones() as usize);
                }
            }
            assert_eq!(odd_ksdim(&alg), best);
        }
    }

    #[test]
    fn even_dimension_is_zero_everywhere() {
        for alg in [
            q_free2(),
            ex312(ScalarDomain::Rational),
            ex312(ScalarDomain::prime_field(3).unwrap()),
            flat(ScalarDomain::prime_field(2).unwrap(), &["t1"]),
        ] {
            assert_eq!(even_ksdim(&alg).unwrap(), 0);
        }
    }

    #[test]
    fn even_scan_enumerates_small_finite_parts() {
        let f2 = Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::prime_field(2).unwrap(),
            ["t1", "t2"],
            [],
        ))
        .unwrap();
        let scan = scan_even_part_primes(&f2).unwrap();
        assert_eq!(scan.method, "enumeration");
        // R_even = {0, 1, j, 1+j} with j^2 = 0 has the unique prime (j).
        assert_eq!(scan.primes_found, 1);
        assert!(scan.all_maximal);

        let scan_q = scan_even_part_primes(&q_free2()).unwrap();
        assert_eq!(scan_q.method, "structural");
        assert!(scan_q.all_maximal);
    }

    #[test]
    fn cotangent_reports() {
        let report = cotangent_sdim(&q_free2()).unwrap();
        assert_eq!(report.maximal_ideal_dims.even, 1);
        assert_eq!(report.maximal_ideal_dims.odd, 2);
        assert_eq!(report.m_squared_dims.even, 1);
        assert_eq!(report.m_squared_dims.odd, 0);
        assert_eq!(report.sdim, KsdimPair { even: 0, odd: 2 });

        let report = cotangent_sdim(&ex312(ScalarDomain::Rational)).unwrap();
        assert_eq!(report.sdim, KsdimPair { even: 0, odd: 3 });

        let dual = flat(ScalarDomain::Rational, &["e"]);
        assert_eq!(
            cotangent_sdim(&dual).unwrap().sdim,
            KsdimPair { even: 0, odd: 1 }
        );
    }

    #[test]
    fn regularity_verdicts() {
        // Free on two generators: regular (0|2 on both sides) even
        // though unique factorization fails there.
        assert!(is_regular_superring(&q_free2()).unwrap());
        // The identified-products quotient: Ksdim 0|2 vs sdim 0|3.
        assert!(!is_regular_superring(&ex312(ScalarDomain::Rational)).unwrap());
        // Dual numbers: 0|1 on both sides.
        assert!(is_regular_superring(&flat(ScalarDomain::Rational, &["e"])).unwrap());
    }

    #[test]
    fn artinian_profiles() {
        let flat3 = flat(ScalarDomain::prime_field(3).unwrap(), &["e1", "e2", "e3"]);
        let p = artinian_profile(&flat3).unwrap();
        assert!(p.artinian && p.noetherian && p.oddly_noetherian);
        assert_eq!(p.ksdim, KsdimPair { even: 0, odd: 1 });
        assert_eq!(p.maximal_power_vanishing, Some(2));
        assert!(p.all_primes_maximal);

        let f2 = Superalgebra::build(AlgebraSpec::new(
            ScalarDomain::prime_field(2).unwrap(),
            ["t1", "t2"],
            [],
        ))
        .unwrap();
        let p = artinian_profile(&f2).unwrap();
        assert_eq!(p.ksdim, KsdimPair { even: 0, odd: 2 });
        assert_eq!(p.maximal_power_vanishing, Some(3));

        let p = artinian_profile(&ex312(ScalarDomain::prime_field(3).unwrap())).unwrap();
        assert_eq!(p.ksdim, KsdimPair { even: 0, odd: 2 });
    }

    #[test]
    fn odd_dimension_bounded_by_cotangent() {
        for alg in [
            q_free2(),
            ex312(ScalarDomain::Rational),
            flat(ScalarDomain::Rational, &["e1", "e2", "e3"]),
        ] {
            let sdim = cotangent_sdim(&alg).unwrap().sdim;
            assert!(odd_ksdim(&alg) <= sdim.odd);
        }
    }
}
