//! The four unique-factorization decision procedures: exhaustive,
//! structural, homogeneous-restricted, and even-part (commutative).
//! Negative verdicts come with machine-checked witnesses.
//!
//! ```bash
//! cargo run -p superring --example ufsr_checks
//! ```

use superring::catalog::{f2, f3, flat_algebra, free_two, grassmann3_identified};
use superring::ufsr::{
    even_ufsr_check, homogeneous_ufsr_check, structural_ufsr_check, ufsr_check, UfsrWitness,
    DEFAULT_FACTOR_CAP,
};
use superring::ScalarDomain;

fn show(witness: &Option<UfsrWitness>) {
    if let Some(w) = witness {
        match w {
            UfsrWitness::InequivalentFactorizations { first, second } => {
                println!(
                    "    witness: {} = ({}) = ({}), verified: {}",
                    first.subject,
                    first.factor_strings().join(") * ("),
                    second.factor_strings().join(") * ("),
                    w.verify().is_ok()
                );
            }
            UfsrWitness::NoFactorization { subject, .. } => {
                println!("    witness: {subject} admits no factorization");
            }
        }
    }
}

fn main() -> superring::Result<()> {
    let cap = DEFAULT_FACTOR_CAP;

    let flat = flat_algebra(f3(), 3);
    let v = ufsr_check(&flat, cap)?;
    println!("flat F3[e1..e3]: exhaustive -> {:?}", v.status);

    let free = free_two(f2());
    let v = ufsr_check(&free, cap)?;
    println!("free F2[t1,t2]:  exhaustive -> {:?}", v.status);
    show(&v.witness);

    // Structural check works over the rationals too.
    let v = structural_ufsr_check(&flat_algebra(ScalarDomain::Rational, 5))?;
    println!("flat Q[e1..e5]:  structural -> {:?}", v.status);
    let v = structural_ufsr_check(&free_two(ScalarDomain::Rational))?;
    println!("free Q[t1,t2]:   structural -> {:?}", v.status);
    show(&v.witness);

    // Weakenings.
    let s = grassmann3_identified(f3());
    println!(
        "\nidentified quotient over F3: general {:?}, homogeneous {:?}, even part {:?}",
        ufsr_check(&s, cap)?.status,
        homogeneous_ufsr_check(&s, cap)?.status,
        even_ufsr_check(&s, cap)?.status,
    );
    println!(
        "free F2[t1,t2]: even part {:?} (its only nonzero even non-unit is irreducible there)",
        even_ufsr_check(&free, cap)?.status,
    );
    Ok(())
}
