//! Serializable report types backing the command-line interface. Field
//! order is fixed by declaration, so serialized output is byte-stable
//! for identical requests.

use serde::Serialize;

use crate::algebra::Superalgebra;
use crate::census::CensusReport;
use crate::dimension::{artinian_profile, cotangent_sdim, ksdim, ArtinianProfile};
use crate::error::Result;
use crate::factor::irreducible_elements;
use crate::structure::{
    canonical_superideal, is_local, is_superdomain, is_superfield, jacobson_radical, nilradical,
    superreduction, GradedDims, IdealReport,
};
use crate::ufsr::{
    factorizations, structural_ufsr_check, ufsr_check, UfsrMethod, UfsrStatus, UfsrVerdict,
    UfsrWitness,
};
use crate::verify::CheckResult;

#[derive(Debug, Clone, Serialize)]
pub struct InfoReport {
    pub field: String,
    pub odd_generators: Vec<String>,
    pub relations: Vec<String>,
    pub dims: GradedDims,
    pub ideal_dims: GradedDims,
    pub basis: Vec<String>,
    pub element_count: Option<String>,
}

pub fn info_report(alg: &Superalgebra) -> InfoReport {
    let (even, odd) = alg.dims();
    let (ie, io) = alg.ideal_dims();
    InfoReport {
        field: alg.field().describe(),
        odd_generators: alg.spec().odd_generators.clone(),
        relations: alg.spec().relations.clone(),
        dims: GradedDims { even, odd },
        ideal_dims: GradedDims { even: ie, odd: io },
        basis: (0..alg.dim()).map(|i| alg.basis_label(i)).collect(),
        element_count: alg.element_count().map(|c| c.to_string()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementListReport {
    pub count: usize,
    pub elements: Vec<String>,
}

pub fn elements_report(alg: &Superalgebra) -> Result<ElementListReport> {
    let elements: Vec<String> = alg.enumerate_elements()?.map(|x| x.to_string()).collect();
    Ok(ElementListReport {
        count: elements.len(),
        elements,
    })
}

pub fn units_report(alg: &Superalgebra) -> Result<ElementListReport> {
    let units: Vec<String> = alg
        .enumerate_elements()?
        .filter(|x| x.is_unit())
        .map(|x| x.to_string())
        .collect();
    Ok(ElementListReport {
        count: units.len(),
        elements: units,
    })
}

pub fn irreducibles_report(alg: &Superalgebra) -> Result<ElementListReport> {
    let irr: Vec<String> = irreducible_elements(alg)?
        .into_iter()
        .map(|x| x.to_string())
        .collect();
    Ok(ElementListReport {
        count: irr.len(),
        elements: irr,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorReport {
    pub subject: String,
    pub verdict: String,
    pub class_count: usize,
    pub factorizations: Vec<Vec<String>>,
}

pub fn factor_report(alg: &Superalgebra, element: &str, cap: usize) -> Result<FactorReport> {
    let subject = alg.parse_element(element)?;
    let found = factorizations(&subject, cap)?;
    for f in &found {
        f.verify()?;
    }
    let verdict = if found.len() == 1 && found[0].factors.len() == 1 {
        "irreducible"
    } else if found.is_empty() {
        "no factorization into normal irreducibles"
    } else {
        "reducible"
    };
    Ok(FactorReport {
        subject: subject.to_string(),
        verdict: verdict.into(),
        class_count: found.len(),
        factorizations: found.iter().map(|f| f.factor_strings()).collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub kind: String,
    pub subject: String,
    pub first_factors: Option<Vec<String>>,
    pub second_factors: Option<Vec<String>>,
    /// Re-verification transcript: products, predicates, inequivalence.
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct UfsrReport {
    pub status: UfsrStatus,
    pub method: UfsrMethod,
    pub witness: Option<WitnessReport>,
}

pub fn ufsr_report_from(verdict: &UfsrVerdict) -> UfsrReport {
    let witness = verdict.witness.as_ref().map(|w| match w {
        UfsrWitness::InequivalentFactorizations { first, second } => WitnessReport {
            kind: "inequivalent-factorizations".into(),
            subject: first.subject.to_string(),
            first_factors: Some(first.factor_strings()),
            second_factors: Some(second.factor_strings()),
            verified: w.verify().is_ok(),
        },
        UfsrWitness::NoFactorization { subject, .. } => WitnessReport {
            kind: "no-factorization".into(),
            subject: subject.to_string(),
            first_factors: None,
            second_factors: None,
            verified: w.verify().is_ok(),
        },
    });
    UfsrReport {
        status: verdict.status,
        method: verdict.method,
        witness,
    }
}

pub fn ufsr_report(alg: &Superalgebra, cap: usize) -> Result<UfsrReport> {
    let verdict = if alg.is_finite() {
        ufsr_check(alg, cap)?
    } else {
        structural_ufsr_check(alg)?
    };
    Ok(ufsr_report_from(&verdict))
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealsReport {
    pub canonical_superideal: IdealReport,
    pub superreduction_dims: GradedDims,
    pub nilradical_dims: GradedDims,
    pub jacobson_radical_dims: GradedDims,
    pub local: bool,
    pub superdomain: bool,
    pub superfield: bool,
}

pub fn ideals_report(alg: &Superalgebra) -> Result<IdealsReport> {
    let j = canonical_superideal(alg);
    let (re, ro) = superreduction(alg).residue_dims();
    let nil = nilradical(alg)?;
    let (ne, no) = nil.dims();
    let jac = jacobson_radical(alg);
    let (je, jo) = jac.dims();
    Ok(IdealsReport {
        canonical_superideal: j.report()?,
        superreduction_dims: GradedDims { even: re, odd: ro },
        nilradical_dims: GradedDims { even: ne, odd: no },
        jacobson_radical_dims: GradedDims { even: je, odd: jo },
        local: is_local(alg),
        superdomain: is_superdomain(alg)?,
        superfield: is_superfield(alg)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct KsdimReport {
    pub even: usize,
    pub odd: usize,
    pub cotangent: GradedDims,
    pub regular: bool,
    pub artinian_profile: ArtinianProfile,
}

pub fn ksdim_report(alg: &Superalgebra) -> Result<KsdimReport> {
    let k = ksdim(alg)?;
    let c = cotangent_sdim(alg)?;
    Ok(KsdimReport {
        even: k.even,
        odd: k.odd,
        cotangent: GradedDims {
            even: c.sdim.even,
            odd: c.sdim.odd,
        },
        regular: crate::dimension::is_regular_superring(alg)?,
        artinian_profile: artinian_profile(alg)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularReport {
    pub regular: bool,
    pub ksdim: GradedDims,
    pub cotangent_sdim: GradedDims,
}

pub fn regular_report(alg: &Superalgebra) -> Result<RegularReport> {
    let k = ksdim(alg)?;
    let c = cotangent_sdim(alg)?;
    Ok(RegularReport {
        regular: k == c.sdim,
        ksdim: GradedDims {
            even: k.even,
            odd: k.odd,
        },
        cotangent_sdim: GradedDims {
            even: c.sdim.even,
            odd: c.sdim.odd,
        },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckResult>,
}

pub fn verify_report(checks: Vec<CheckResult>) -> VerifyReport {
    let passed = checks.iter().filter(|c| c.passed).count();
    VerifyReport {
        passed,
        failed: checks.len() - passed,
        checks,
    }
}

pub type CensusJson = CensusReport;
