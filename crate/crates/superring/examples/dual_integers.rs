//! The dual integers `Z[e]`: units are `{+1, -1} + b e`, squares of
//! primes factor in two ways whose factors are not associates, so
//! factorizations exist but are not unique.
//!
//! ```bash
//! cargo run -p superring --example dual_integers
//! ```

use superring::superpoly::{
    dual_integer_associates, dual_integer_square_demo, SuperPolyRing,
};

fn main() -> superring::Result<()> {
    let ring = SuperPolyRing::dual_integers();

    for p in [2u64, 5] {
        let demo = dual_integer_square_demo(p)?;
        println!("p = {p}:");
        println!(
            "  {} = ({}) * ({}) = ({}) * ({})",
            demo.square,
            demo.first_factors[0],
            demo.first_factors[1],
            demo.second_factors[0],
            demo.second_factors[1],
        );
        println!(
            "  factors irreducible: {}, regular: {}, cross-associate: {:?}",
            demo.factors_irreducible, demo.factors_regular, demo.cross_associates
        );
    }

    let u = ring.parse("-1 + 7*e")?;
    println!("\n(-1 + 7*e)^-1 = {}", u.invert()?);
    println!("2 + e is a unit: {}", ring.parse("2 + e")?.is_unit());

    let a = ring.parse("5 + e")?;
    let b = ring.parse("5 + 6*e")?; // 5 + (1 + 5)e = (1 + e)(5 + e)
    println!(
        "\n5 + e associate to 5 + 6*e: {}",
        dual_integer_associates(&a, &b)?
    );
    Ok(())
}
