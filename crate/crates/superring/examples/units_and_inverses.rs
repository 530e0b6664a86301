//! Units and exact closed-form inverses: an element is a unit exactly
//! when its constant coefficient is nonzero, and the inverse is a
//! terminating geometric series over the nilpotent part.
//!
//! ```bash
//! cargo run -p superring --example units_and_inverses
//! ```

use superring::catalog::{dual_numbers, flat_algebra, grassmann3_identified};
use superring::ScalarDomain;

fn main() -> superring::Result<()> {
    let dual = dual_numbers(ScalarDomain::Rational);
    let a = dual.parse_element("3 + 5*e")?;
    println!("in Q[e]:         ({a})^-1 = {}", a.invert()?);

    let flat = flat_algebra(ScalarDomain::Rational, 3);
    let b = flat.parse_element("2 + e1 - e2 + 4*e3")?;
    println!("in flat Q[e1..e3]: ({b})^-1 = {}", b.invert()?);

    let s = grassmann3_identified(ScalarDomain::Rational);
    let c = s.parse_element("1 + e1 + e1*e2")?;
    let inv = c.invert()?;
    println!("in the identified quotient: ({c})^-1 = {inv}");
    assert_eq!(c.mul(&inv)?, s.one());

    // Units with anticommuting cross terms: products of odd elements
    // cancel in the square, so the series stops early.
    let d = s.parse_element("1 + e1 + e2")?;
    println!("({d})^-1 = {}", d.invert()?);

    let z = s.generator(0);
    println!("\nnon-unit: invert({z}) -> {}", z.invert().unwrap_err());
    Ok(())
}
