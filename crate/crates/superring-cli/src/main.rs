//! Thin command-line front end over the `superring` library: build an
//! algebra from a JSON spec file and run one of the reports. Exit codes:
//! 0 success, 1 domain errors (non-unit inversion, infinite-field
//! enumeration, failed verification), 2 parse/spec errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use superring::census::{run_census, CensusConfig};
use superring::report;
use superring::scalar::ScalarDomain;
use superring::verify::{run_paper_checks, VerifyOptions};
use superring::{AlgebraSpec, Error, Superalgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "superring",
    about = "Exact computer algebra for finitely generated supercommutative superrings",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, basis, and presentation of an algebra.
    Info {
        #[arg(long)]
        spec: PathBuf,
    },
    /// List all elements (finite base field only).
    Elements {
        #[arg(long)]
        spec: PathBuf,
    },
    /// List the units (finite base field only).
    Units {
        #[arg(long)]
        spec: PathBuf,
    },
    /// List the irreducible elements (finite base field only).
    Irreducibles {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Enumerate the factorizations of one element into normal
    /// irreducibles, up to equivalence.
    Factor {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        element: String,
        /// Recursion depth cap for the factorization search.
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Unique-factorization verdict (exhaustive over finite fields,
    /// structural over the rationals), with a machine-checked witness.
    Ufsr {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Canonical superideal, superreduction, nilradical, Jacobson
    /// radical, and locality flags.
    Ideals {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Krull superdimension, cotangent dimensions, regularity, and the
    /// Artinian profile.
    Ksdim {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Regularity verdict only.
    Regular {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Run the bundled verification suite of worked examples and
    /// structure theorems; nonzero exit when any check fails.
    VerifyPaper {
        /// Census samples per base field inside the structure-theorem
        /// checks.
        #[arg(long, default_value_t = 60)]
        census_samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Randomized classification census over a small prime field,
    /// asserting the structure theorems on every UFSR found.
    Census {
        /// Base field: f2, f3, or f<p> for a prime p.
        #[arg(long, default_value = "f2")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_gens: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
}

fn load_algebra(path: &PathBuf) -> Result<Superalgebra, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Spec(format!("cannot read {}: {e}", path.display())))?;
    Superalgebra::build(AlgebraSpec::from_json(&text)?)
}

fn parse_field(text: &str) -> Result<ScalarDomain, Error> {
    match text {
        "q" | "Q" => Ok(ScalarDomain::Rational),
        other => {
            let p: u64 = other
                .strip_prefix('f')
                .or_else(|| other.strip_prefix('F'))
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::Spec(format!("unknown field `{other}`")))?;
            ScalarDomain::prime_field(p)
        }
    }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("reports serialize")
        ),
        Format::Text => println!("{}", text(value)),
    }
}

fn graded(d: &superring::structure::GradedDims) -> String {
    format!("{}|{}", d.even, d.odd)
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Info { spec } => {
            let alg = load_algebra(&spec)?;
            let r = report::info_report(&alg);
            emit(cli.format, &r, |r| {
                format!(
                    "field: {}\ngenerators: {}\nrelations: [{}]\ndims (even|odd): {}\nideal dims: {}\nbasis: {}\nelements: {}",
                    r.field,
                    r.odd_generators.join(", "),
                    r.relations.join(", "),
                    graded(&r.dims),
                    graded(&r.ideal_dims),
                    r.basis.join(", "),
                    r.element_count.as_deref().unwrap_or("infinite")
                )
            });
        }
        Command::Elements { spec } => {
            let alg = load_algebra(&spec)?;
            let r = report::elements_report(&alg)?;
            emit(cli.format, &r, |r| {
                format!("{} elements:\n{}", r.count, r.elements.join("\n"))
            });
        }
        Command::Units { spec } => {
            let alg = load_algebra(&spec)?;
            let r = report::units_report(&alg)?;
            emit(cli.format, &r, |r| {
                format!("{} units:\n{}", r.count, r.elements.join("\n"))
            });
        }
        Command::Irreducibles { spec } => {
            let alg = load_algebra(&spec)?;
            let r = report::irreducibles_report(&alg)?;
            emit(cli.format, &r, |r| {
                format!(
                    "{} irreducible elements:\n{}",
                    r.count,
                    r.elements.join("\n")
                )
            });
        }
        Command::Factor { spec, element, cap } => {
            let alg = load_algebra(&spec)?;
            let r = report::factor_report(&alg, &element, cap)?;
            emit(cli.format, &r, |r| {
                let mut out = format!(
                    "subject: {}\nverdict: {}\nequivalence classes: {}",
                    r.subject, r.verdict, r.class_count
                );
                for f in &r.factorizations {
                    out.push_str(&format!("\n  ({})", f.join(") * (")));
                }
                out
            });
        }
        Command::Ufsr { spec, cap } => {
            let alg = load_algebra(&spec)?;
            let r = report::ufsr_report(&alg, cap)?;
            emit(cli.format, &r, |r| {
                let mut out = format!("status: {:?}\nmethod: {:?}", r.status, r.method);
                if let Some(w) = &r.witness {
                    out.push_str(&format!(
                        "\nwitness ({}) on subject {}: verified = {}",
                        w.kind, w.subject, w.verified
                    ));
                    if let (Some(a), Some(b)) = (&w.first_factors, &w.second_factors) {
                        out.push_str(&format!(
                            "\n  ({})  vs  ({})",
                            a.join(") * ("),
                            b.join(") * (")
                        ));
                    }
                }
                out
            });
        }
        Command::Ideals { spec } => {
            let alg = load_algebra(&spec)?;
            let r = report::ideals_report(&alg)?;
            emit(cli.format, &r, |r| {
                format!(
                    "canonical superideal: dims {} (prime: {:?}, maximal: {:?}, nilpotency index: {:?})\nsuperreduction dims: {}\nnilradical dims: {}\njacobson radical dims: {}\nlocal: {}\nsuperdomain: {}\nsuperfield: {}",
                    graded(&r.canonical_superideal.dims),
                    r.canonical_superideal.flags.prime,
                    r.canonical_superideal.flags.maximal,
                    r.canonical_superideal.flags.nilpotency_index,
                    graded(&r.superreduction_dims),
                    graded(&r.nilradical_dims),
                    graded(&r.jacobson_radical_dims),
                    r.local,
                    r.superdomain,
                    r.superfield
                )
            });
        }
        Command::Ksdim { spec } => {
            let alg = load_algebra(&spec)?;
            let r = report::ksdim_report(&alg)?;
            emit(cli.format, &r, |r| {
                format!(
                    "Ksdim: {}|{}\ncotangent sdim: {}\nregular: {}\nartinian: {} (maximal ideal power vanishing at {:?}, all primes maximal: {})",
                    r.even,
                    r.odd,
                    graded(&r.cotangent),
                    r.regular,
                    r.artinian_profile.artinian,
                    r.artinian_profile.maximal_power_vanishing,
                    r.artinian_profile.all_primes_maximal
                )
            });
        }
        Command::Regular { spec } => {
            let alg = load_algebra(&spec)?;
            let r = report::regular_report(&alg)?;
            emit(cli.format, &r, |r| {
                format!(
                    "regular: {} (Ksdim {} vs cotangent sdim {})",
                    r.regular,
                    graded(&r.ksdim),
                    graded(&r.cotangent_sdim)
                )
            });
        }
        Command::VerifyPaper {
            census_samples,
            seed,
            cap,
        } => {
            let checks = run_paper_checks(&VerifyOptions {
                census_samples,
                seed,
                cap,
            });
            let r = report::verify_report(checks);
            emit(cli.format, &r, |r| {
                let mut out = String::new();
                for c in &r.checks {
                    out.push_str(&format!(
                        "{} {:<45} {}\n",
                        if c.passed { "PASS" } else { "FAIL" },
                        c.name,
                        c.detail
                    ));
                }
                out.push_str(&format!("{} passed, {} failed", r.passed, r.failed));
                out
            });
            return Ok(r.failed == 0);
        }
        Command::Census {
            field,
            seed,
            max_gens,
            samples,
            cap,
        } => {
            let config = CensusConfig {
                field: parse_field(&field)?,
                samples,
                max_gens,
                seed,
                cap,
            };
            let r = run_census(&config)?;
            emit(cli.format, &r, |r| {
                let mut out = format!(
                    "census over {}: {} samples, {} distinct algebras, {} UFSR rows\n",
                    r.field, r.samples, r.distinct_algebras, r.ufsr_rows
                );
                out.push_str(
                    "sample  n  dims  ufsr     superfield  regular  ksdim  nil   relations\n",
                );
                for row in &r.rows {
                    out.push_str(&format!(
                        "{:>6}  {}  {}|{}   {:<8} {:<10}  {:<7}  {}   {:<4}  {:?}\n",
                        row.sample,
                        row.generators,
                        row.dims.even,
                        row.dims.odd,
                        format!("{:?}", row.ufsr),
                        row.superfield,
                        row.regular,
                        row.ksdim,
                        row.nilpotency_index
                            .map(|i| i.to_string())
                            .unwrap_or_else(|| "-".into()),
                        row.relations,
                    ));
                }
                out.push_str(&format!("violations: {}", r.violations.len()));
                out
            });
            return Ok(r.violations.is_empty());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
