//! Build a supercommutative superalgebra from a JSON spec or
//! programmatically, and inspect its presentation.
//!
//! ```bash
//! cargo run -p superring --example build_algebra
//! ```

use superring::{AlgebraSpec, ScalarDomain, Superalgebra};

fn main() -> superring::Result<()> {
    // From the JSON wire format used by the CLI.
    let json = r#"{
        "field": { "kind": "Fp", "p": 3 },
        "odd_generators": ["e1", "e2", "e3"],
        "relations": ["e1*e2 - e1*e3"]
    }"#;
    let alg = Superalgebra::build(AlgebraSpec::from_json(json)?)?;
    let (even, odd) = alg.dims();
    println!("quotient algebra over {}", alg.field());
    println!("  dims: {even} even, {odd} odd");
    println!(
        "  basis: {}",
        (0..alg.dim())
            .map(|i| alg.basis_label(i))
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!("  elements: {}", alg.element_count().unwrap());

    // Programmatically, over the rationals.
    let free = Superalgebra::build(AlgebraSpec::new(
        ScalarDomain::Rational,
        ["t1", "t2"],
        [],
    ))?;
    println!(
        "\nfree exterior algebra on two generators over Q: dims {:?}",
        free.dims()
    );

    // Malformed specs are rejected with a reason.
    let bad = Superalgebra::build(AlgebraSpec::new(
        ScalarDomain::Rational,
        ["t1", "t2"],
        ["t1 + t1*t2"],
    ));
    println!("inhomogeneous relation: {}", bad.unwrap_err());
    Ok(())
}
