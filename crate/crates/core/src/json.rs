//! JSON wire formats for forms, assembled bases, and verification reports.
//!
//! Coefficients serialize as decimal strings (`num`, `den`) so arbitrary
//! precision survives the round trip. Components are keyed by alternator
//! label; the empty alternator of 0-forms uses the key `"1"`.

use crate::bases::{AssociatedBasis, SubspaceKind};
use crate::error::FormError;
use crate::face::Face;
use crate::form::{axis_index, axis_name, Alternator, DifferentialForm};
use crate::poly::{ExponentVector, Polynomial};
use crate::scalar::ExactScalar;
use crate::verify::VerificationReport;
use crate::FamilyId;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermDto {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FormDto {
    pub n: usize,
    pub k: usize,
    pub components: BTreeMap<String, Vec<TermDto>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ConstraintDto {
    pub axis: String,
    pub value: i8,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FaceDto {
    pub constraints: Vec<ConstraintDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ElementDto {
    pub face: FaceDto,
    pub subspace: String,
    pub grade: i64,
    pub form: FormDto,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct BasisDto {
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub r: u32,
    pub elements: Vec<ElementDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ReportDto {
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub r: u32,
    #[serde(rename = "card_B")]
    pub card_b: usize,
    #[serde(rename = "rank_A")]
    pub rank_a: usize,
    #[serde(rename = "rank_B")]
    pub rank_b: usize,
    #[serde(rename = "rank_C")]
    pub rank_c: usize,
    pub verdict: String,
    pub elapsed_ms: u64,
}

pub fn form_to_dto(w: &DifferentialForm) -> FormDto {
    let mut components = BTreeMap::new();
    for (alt, poly) in w.components() {
        let terms = poly
            .terms()
            .map(|(e, c)| TermDto {
                exps: e.iter().collect(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect();
        components.insert(alt.label(), terms);
    }
    FormDto {
        n: w.ambient_dim(),
        k: w.form_order(),
        components,
    }
}

pub fn form_from_dto(dto: &FormDto) -> Result<DifferentialForm, String> {
    if dto.k > dto.n + 1 {
        return Err(format!(
            "form order {} too large for dimension {}",
            dto.k, dto.n
        ));
    }
    let mut out = DifferentialForm::zero(dto.n, dto.k);
    for (label, terms) in &dto.components {
        let alt = Alternator::from_label(label, dto.n)
            .ok_or_else(|| format!("bad alternator label {label:?}"))?;
        if alt.order() != dto.k {
            return Err(format!(
                "alternator {label:?} has order {}, expected {}",
                alt.order(),
                dto.k
            ));
        }
        let mut poly = Polynomial::zero(dto.n);
        for t in terms {
            if t.exps.len() != dto.n {
                return Err(format!(
                    "exponent tuple {:?} has length {}, expected {}",
                    t.exps,
                    t.exps.len(),
                    dto.n
                ));
            }
            let num = BigInt::from_str(&t.num).map_err(|e| format!("bad numerator: {e}"))?;
            let den = BigInt::from_str(&t.den).map_err(|e| format!("bad denominator: {e}"))?;
            if den == BigInt::from(0) {
                return Err("zero denominator".to_string());
            }
            poly.add_term(
                ExponentVector::new(t.exps.clone()),
                ExactScalar::from_bigints(num, den),
            );
        }
        if !poly.is_zero() {
            out = out
                .try_add(&DifferentialForm::from_component(dto.n, alt, poly))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(out)
}

pub fn face_to_dto(face: &Face) -> FaceDto {
    FaceDto {
        constraints: face
            .constraints()
            .iter()
            .map(|&(axis, value)| ConstraintDto {
                axis: axis_name(axis).to_string(),
                value,
            })
            .collect(),
    }
}

pub fn face_from_dto(dto: &FaceDto, n: usize) -> Result<Face, String> {
    let mut constraints = Vec::new();
    for c in &dto.constraints {
        let mut chars = c.axis.chars();
        let (Some(ch), None) = (chars.next(), chars.next()) else {
            return Err(format!("bad axis {:?}", c.axis));
        };
        let axis = axis_index(ch).ok_or_else(|| format!("bad axis {:?}", c.axis))?;
        constraints.push((axis, c.value));
    }
    Face::new(n, constraints).map_err(|e: FormError| e.to_string())
}

pub fn basis_to_dto(basis: &AssociatedBasis) -> BasisDto {
    BasisDto {
        family: basis.family.family.token().to_string(),
        n: basis.family.n,
        k: basis.family.k,
        r: basis.family.r,
        elements: basis
            .elements
            .iter()
            .map(|e| ElementDto {
                face: face_to_dto(&e.face),
                subspace: e.subspace.kind.token().to_string(),
                grade: e.subspace.grade,
                form: form_to_dto(&e.form),
            })
            .collect(),
    }
}

/// Extracts the candidate forms from a serialized basis, validating the
/// declared `(n, k)`.
pub fn forms_from_basis_dto(dto: &BasisDto) -> Result<Vec<DifferentialForm>, String> {
    let mut forms = Vec::with_capacity(dto.elements.len());
    for e in &dto.elements {
        if e.form.n != dto.n || e.form.k != dto.k {
            return Err(format!(
                "element declares (n, k) = ({}, {}), basis declares ({}, {})",
                e.form.n, e.form.k, dto.n, dto.k
            ));
        }
        forms.push(form_from_dto(&e.form)?);
    }
    Ok(forms)
}

/// Subspace token used in element provenance, kept alongside the DTO layer
/// so serialized tokens stay in sync with [`SubspaceKind`].
pub fn subspace_kind_from_token(token: &str) -> Option<SubspaceKind> {
    SubspaceKind::from_token(token)
}

pub fn report_to_dto(report: &VerificationReport, id: &FamilyId) -> ReportDto {
    ReportDto {
        family: id.family.token().to_string(),
        n: id.n,
        k: id.k,
        r: id.r,
        card_b: report.card_b,
        rank_a: report.rank_a,
        rank_b: report.rank_b,
        rank_c: report.rank_c,
        verdict: if report.verdict { "pass" } else { "fail" }.to_string(),
        elapsed_ms: report.elapsed_ms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{assemble, Family};

    #[test]
    fn form_round_trip_via_json_text() {
        let basis = assemble(&FamilyId::new(Family::S, 1, 1, 3)).unwrap();
        for e in &basis.elements {
            let dto = form_to_dto(&e.form);
            let text = serde_json::to_string(&dto).unwrap();
            let back: FormDto = serde_json::from_str(&text).unwrap();
            assert_eq!(form_from_dto(&back).unwrap(), e.form);
        }
    }

    #[test]
    fn zero_form_round_trip() {
        let dto = form_to_dto(&DifferentialForm::zero(2, 1));
        assert!(dto.components.is_empty());
        assert!(form_from_dto(&dto).unwrap().is_zero());
    }

    #[test]
    fn basis_dto_has_expected_shape() {
        let basis = assemble(&FamilyId::new(Family::SMinus, 1, 2, 3)).unwrap();
        let dto = basis_to_dto(&basis);
        assert_eq!(dto.family, "s-");
        assert_eq!(dto.elements.len(), 6);
        let text = serde_json::to_string(&dto).unwrap();
        let back: BasisDto = serde_json::from_str(&text).unwrap();
        let forms = forms_from_basis_dto(&back).unwrap();
        assert_eq!(forms, basis.forms());
    }

    #[test]
    fn bad_payloads_are_rejected() {
        let mut dto = form_to_dto(&DifferentialForm::zero(3, 1));
        dto.components.insert(
            "dw".into(),
            vec![TermDto {
                exps: vec![0, 0, 0],
                num: "1".into(),
                den: "1".into(),
            }],
        );
        assert!(form_from_dto(&dto).is_err());

        let mut dto = form_to_dto(&DifferentialForm::zero(3, 1));
        dto.components.insert(
            "dx".into(),
            vec![TermDto {
                exps: vec![0, 0],
                num: "1".into(),
                den: "1".into(),
            }],
        );
        assert!(form_from_dto(&dto).is_err());
    }
}
