//! Canonical JSON encoding of multivectors, polynomials, and basis files.
//!
//! Keys are emitted in sorted order and terms in a fixed sort (blades by
//! grade then mask, monomials by degree then lexicographic exponents), so
//! serializing the same data always yields identical bytes. Rationals are
//! decimal-integer strings joined by `/`.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::branching::{
    BasisElement, BasisMode, BranchLabel, CheckResult, Family, LabelLevel, VerifyReport,
};
use crate::clifford::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, MultiIndex};
use crate::scalar::{rat_from_str, rat_to_string, GaussianRational, Rat};

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BladeTermDto {
    pub blade: Vec<usize>,
    pub im: String,
    pub re: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermDto {
    pub coeff: Vec<BladeTermDto>,
    pub exponents: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ElementDto {
    pub label: Vec<(u32, u32, String)>,
    pub norm2: String,
    pub poly: Vec<TermDto>,
    pub signature: Vec<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_scale_approx: Option<f64>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CheckDto {
    pub detail: String,
    pub name: String,
    pub passed: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ReportDto {
    pub checks: Vec<CheckDto>,
    pub passed: bool,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BasisFileDto {
    pub chain: Vec<usize>,
    pub elements: Vec<ElementDto>,
    pub m: usize,
    pub mode: String,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDto>,
}

/// In-memory view of a basis file.
#[derive(Clone, Debug)]
pub struct BasisFile {
    pub mode: BasisMode,
    pub m: usize,
    pub n: u32,
    pub chain: Vec<usize>,
    pub elements: Vec<BasisElement>,
    pub report: Option<VerifyReport>,
    /// Attach inexact `1/sqrt(norm2)` scale factors on serialization.
    pub normalized: bool,
}

pub fn multivector_to_dto(mv: &Multivector) -> Vec<BladeTermDto> {
    let mut terms: Vec<(&Blade, &GaussianRational)> = mv.terms().collect();
    terms.sort_by_key(|(b, _)| (b.grade(), b.mask()));
    terms
        .into_iter()
        .map(|(b, c)| BladeTermDto {
            blade: b.indices(),
            im: rat_to_string(&c.im),
            re: rat_to_string(&c.re),
        })
        .collect()
}

pub fn multivector_from_dto(dto: &[BladeTermDto], m: usize) -> Result<Multivector> {
    let mut mv = Multivector::zero(m);
    for term in dto {
        let blade = Blade::from_indices(&term.blade)?;
        if !blade.fits(m) {
            return Err(Error::InvalidBlade {
                index: term.blade.iter().copied().max().unwrap_or(0),
                dim: m,
            });
        }
        let c = GaussianRational::new(rat_from_str(&term.re)?, rat_from_str(&term.im)?);
        mv = mv.add(&Multivector::from_blade(m, blade, c)?)?;
    }
    Ok(mv)
}

pub fn poly_to_dto(p: &CliffordPolynomial) -> Vec<TermDto> {
    let mut terms: Vec<(&MultiIndex, &Multivector)> = p.terms().collect();
    terms.sort_by_key(|(e, _)| (e.degree(), e.exponents().to_vec()));
    terms
        .into_iter()
        .map(|(e, c)| TermDto {
            coeff: multivector_to_dto(c),
            exponents: e.exponents().to_vec(),
        })
        .collect()
}

pub fn poly_from_dto(dto: &[TermDto], m: usize) -> Result<CliffordPolynomial> {
    let mut p = CliffordPolynomial::zero(m);
    for term in dto {
        if term.exponents.len() != m {
            return Err(Error::Parse(format!(
                "exponent vector of length {} in dimension {m}",
                term.exponents.len()
            )));
        }
        let coeff = multivector_from_dto(&term.coeff, m)?;
        let mono =
            CliffordPolynomial::monomial(MultiIndex::from_exponents(term.exponents.clone()), coeff);
        p = p.add(&mono)?;
    }
    Ok(p)
}

fn triple_to_dto(t: &[Rat; 3]) -> [String; 3] {
    [
        rat_to_string(&t[0]),
        rat_to_string(&t[1]),
        rat_to_string(&t[2]),
    ]
}

fn triple_from_dto(t: &[String; 3]) -> Result<[Rat; 3]> {
    Ok([
        rat_from_str(&t[0])?,
        rat_from_str(&t[1])?,
        rat_from_str(&t[2])?,
    ])
}

pub fn element_to_dto(el: &BasisElement, normalized: bool) -> ElementDto {
    let unit_scale_approx = if normalized {
        el.norm2.to_f64().map(|x| 1.0 / x.sqrt())
    } else {
        None
    };
    ElementDto {
        label: el
            .label
            .levels
            .iter()
            .map(|l| (l.s, l.k, l.family.tag().to_string()))
            .collect(),
        norm2: rat_to_string(&el.norm2),
        poly: poly_to_dto(&el.poly),
        signature: el.signature.iter().map(triple_to_dto).collect(),
        unit_scale_approx,
    }
}

pub fn element_from_dto(dto: &ElementDto, m: usize) -> Result<BasisElement> {
    let levels = dto
        .label
        .iter()
        .map(|(s, k, tag)| {
            Ok(LabelLevel {
                s: *s,
                k: *k,
                family: Family::parse(tag)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let signature = dto
        .signature
        .iter()
        .map(triple_from_dto)
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisElement {
        poly: poly_from_dto(&dto.poly, m)?,
        label: BranchLabel { levels },
        norm2: rat_from_str(&dto.norm2)?,
        signature,
    })
}

fn report_to_dto(report: &VerifyReport) -> ReportDto {
    ReportDto {
        checks: report
            .checks
            .iter()
            .map(|c| CheckDto {
                detail: c.detail.clone(),
                name: c.name.clone(),
                passed: c.passed,
            })
            .collect(),
        passed: report.passed(),
    }
}

fn report_from_dto(dto: &ReportDto) -> VerifyReport {
    VerifyReport {
        checks: dto
            .checks
            .iter()
            .map(|c| CheckResult {
                name: c.name.clone(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

pub fn basis_file_to_dto(file: &BasisFile) -> BasisFileDto {
    BasisFileDto {
        chain: file.chain.clone(),
        elements: file
            .elements
            .iter()
            .map(|e| element_to_dto(e, file.normalized))
            .collect(),
        m: file.m,
        mode: file.mode.as_str().to_string(),
        n: file.n,
        report: file.report.as_ref().map(report_to_dto),
    }
}

pub fn basis_file_from_dto(dto: &BasisFileDto) -> Result<BasisFile> {
    let mode = BasisMode::parse(&dto.mode)?;
    let elements = dto
        .elements
        .iter()
        .map(|e| element_from_dto(e, dto.m))
        .collect::<Result<Vec<_>>>()?;
    let normalized = dto.elements.iter().any(|e| e.unit_scale_approx.is_some());
    Ok(BasisFile {
        mode,
        m: dto.m,
        n: dto.n,
        chain: dto.chain.clone(),
        elements,
        report: dto.report.as_ref().map(report_from_dto),
        normalized,
    })
}

/// Canonical one-line JSON rendering of a basis file.
pub fn basis_file_to_string(file: &BasisFile) -> String {
    serde_json::to_string(&basis_file_to_dto(file)).expect("serialization cannot fail")
}

pub fn basis_file_from_str(s: &str) -> Result<BasisFile> {
    let dto: BasisFileDto =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("invalid basis file: {e}")))?;
    basis_file_from_dto(&dto)
}
