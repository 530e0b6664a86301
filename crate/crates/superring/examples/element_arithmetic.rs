//! Parse, print, and multiply elements: anticommuting generators,
//! structural squares-to-zero, and parity decomposition.
//!
//! ```bash
//! cargo run -p superring --example element_arithmetic
//! ```

use superring::catalog::free_two;
use superring::ScalarDomain;

fn main() -> superring::Result<()> {
    let alg = free_two(ScalarDomain::Rational);
    let t1 = alg.generator(0);
    let t2 = alg.generator(1);

    println!("t1 * t2 = {}", t1.mul(&t2)?);
    println!("t2 * t1 = {}", t2.mul(&t1)?);
    println!("t1 * t1 = {}", t1.mul(&t1)?);

    let x = alg.parse_element("1/2 + 3*t1 - t1*t2")?;
    println!("\nparsed: {x}");
    let (even, odd) = x.parity_decompose();
    println!("even part: {even}");
    println!("odd part:  {odd}");

    let y = alg.parse_element("t2*t1")?;
    println!("\ncanonicalized t2*t1: {y}");

    // Round trip through the grammar.
    let again = alg.parse_element(&x.to_string())?;
    assert_eq!(again, x);
    println!("display round-trips exactly");

    // Errors carry byte positions.
    match alg.parse_element("1 + oops") {
        Err(e) => println!("\nparse error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
