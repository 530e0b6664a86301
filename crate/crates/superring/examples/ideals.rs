//! Graded ideals: the canonical superideal, superreduction, nilradical,
//! maximal ideals, primality tests, powers, and nilpotency indices.
//!
//! ```bash
//! cargo run -p superring --example ideals
//! ```

use superring::catalog::{f2, free_two, grassmann3_identified};
use superring::structure::{
    canonical_superideal, ideal_from_generators, is_local, is_prime_ideal, is_superdomain,
    is_superfield, maximal_ideals, nilradical, superreduction,
};
use superring::ScalarDomain;

fn main() -> superring::Result<()> {
    let alg = free_two(f2());
    let j = canonical_superideal(&alg);
    println!("canonical superideal of F2[t1,t2]: dims {:?}", j.dims());
    println!("  J^2 dims: {:?}", j.power(2)?.dims());
    println!("  nilpotency index: {:?}", j.nilpotency_index());
    println!("  prime: {}", is_prime_ideal(&j)?);

    let principal = ideal_from_generators(&alg, &[alg.generator(0)])?;
    println!(
        "\nprincipal ideal (t1): dims {:?}, prime: {}",
        principal.dims(),
        is_prime_ideal(&principal)?
    );

    let q = superreduction(&alg);
    println!("\nsuperreduction dims: {:?}", q.residue_dims());
    let x = alg.parse_element("1 + t1 + t1*t2")?;
    println!("residue of {x}: {}", q.project(&x));

    println!("\nnilradical dims: {:?}", nilradical(&alg)?.dims());
    println!("local: {}", is_local(&alg));
    println!("maximal ideals: {}", maximal_ideals(&alg).len());

    let s = grassmann3_identified(ScalarDomain::Rational);
    println!(
        "\nidentified quotient over Q: superdomain {}, superfield {}",
        is_superdomain(&s)?,
        is_superfield(&s)?
    );
    Ok(())
}
