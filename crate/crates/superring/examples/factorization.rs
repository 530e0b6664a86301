//! Divisibility, associates with unit certificates, irreducibility,
//! and exhaustive factorization enumeration, including the product with
//! two inequivalent factorizations.
//!
//! ```bash
//! cargo run -p superring --example factorization
//! ```

use superring::catalog::{f2, free_two};
use superring::factor::{associate_certificate, divides, is_irreducible};
use superring::ufsr::{factorizations, DEFAULT_FACTOR_CAP};

fn main() -> superring::Result<()> {
    let alg = free_two(f2());
    let t1 = alg.generator(0);
    let t2 = alg.generator(1);
    let t12 = alg.parse_element("t1*t2")?;

    println!("t1 | t1*t2: {}", divides(&t1, &t12)?);
    println!("t1 | t2:    {}", divides(&t1, &t2)?);

    println!("\nirreducible(t1):    {:?}", is_irreducible(&t1)?);
    println!("irreducible(t1*t2): {:?}", is_irreducible(&t12)?);

    // Associates come with certificates a = u * b * v.
    let b = alg.parse_element("t1 + t1*t2")?;
    match associate_certificate(&b, &t1)? {
        Some((u, v)) => println!("\n{b} = ({u}) * t1 * ({v})"),
        None => println!("\n{b} is not associate to t1"),
    }
    let c = alg.parse_element("t1 + t2")?;
    println!(
        "t2 associate to t1 + t2: {}",
        associate_certificate(&t2, &c)?.is_some()
    );

    println!("\nfactorizations of t1*t2, one per equivalence class:");
    for f in factorizations(&t12, DEFAULT_FACTOR_CAP)? {
        f.verify()?;
        println!("  ({})", f.factor_strings().join(") * ("));
    }
    Ok(())
}
