//! The bundled family of example algebras used throughout the tests,
//! the verification suite, and the runnable examples.

use crate::algebra::{AlgebraSpec, Superalgebra};
use crate::scalar::ScalarDomain;

/// `K[e]`: one odd generator, no relations.
pub fn dual_numbers(domain: ScalarDomain) -> Superalgebra {
    Superalgebra::build(AlgebraSpec::new(domain, vec!["e"], vec![])).expect("valid spec")
}

/// `K[e1..en]` with every product of two generators set to zero.
pub fn flat_algebra(domain: ScalarDomain, n: usize) -> Superalgebra {
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let mut relations = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            relations.push(format!("{}*{}", names[i], names[j]));
        }
    }
    Superalgebra::build(AlgebraSpec::new(domain, names, relations)).expect("valid spec")
}

/// The free exterior algebra on two odd generators `t1, t2`.
pub fn free_two(domain: ScalarDomain) -> Superalgebra {
    Superalgebra::build(AlgebraSpec::new(domain, vec!["t1", "t2"], vec![])).expect("valid spec")
}

/// The quotient of the free exterior algebra on `e1, e2, e3` that
/// identifies `e1*e2` with `e1*e3`: a superfield without unique
/// factorization.
pub fn grassmann3_identified(domain: ScalarDomain) -> Superalgebra {
    Superalgebra::build(AlgebraSpec::new(
        domain,
        vec!["e1", "e2", "e3"],
        vec!["e1*e2 - e1*e3"],
    ))
    .expect("valid spec")
}

pub fn f2() -> ScalarDomain {
    ScalarDomain::prime_field(2).expect("2 is prime")
}

pub fn f3() -> ScalarDomain {
    ScalarDomain::prime_field(3).expect("3 is prime")
}
