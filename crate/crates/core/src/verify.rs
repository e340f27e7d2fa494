//! Coefficient-matrix encoding, exact rank, and basis verification.
//!
//! A set of forms is encoded as a dense rational matrix with one row per
//! form: alternator blocks in lexicographic order, and inside each block one
//! column per exponent tuple `(e_x, e_y, e_z)` with `0 <= e <= deg`, the
//! last axis fastest. A candidate list `B` is a basis for the span of a
//! reference set `A` exactly when
//! `#B = rank(B) = rank(A over B) = rank(A)`.

use crate::bases::AssociatedBasis;
use crate::error::VerifyError;
use crate::form::{Alternator, DifferentialForm};
use crate::scalar::ExactScalar;
use crate::spaces::{q_minus_span, s_minus_span, s_span, SpanningSet};
use crate::Family;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::time::Instant;

/// Dense matrix of exact rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ExactScalar>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Result<Self, VerifyError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(VerifyError::ShapeMismatch(nrows, ncols, 1, r.len()));
            }
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.entries[r * self.cols + c] = v;
    }

    /// New matrix with `other`'s rows appended below `self`'s.
    pub fn stacked(&self, other: &RationalMatrix) -> Result<RationalMatrix, VerifyError> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(VerifyError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let cols = if self.rows == 0 {
            other.cols
        } else {
            self.cols
        };
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols,
            entries,
        })
    }
}

/// Exact rank over the rationals.
///
/// Rows are scaled to integers and reduced by fraction-free (Bareiss style)
/// elimination, with the first nonzero entry in column order as pivot.
/// Intermediate values stay integral, so no tolerance exists anywhere.
pub fn rank_exact(m: &RationalMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    // clear denominators row by row
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut lcm = BigInt::one();
        for c in 0..m.cols {
            lcm = lcm.lcm(m.get(r, c).denom());
        }
        let row: Vec<BigInt> = (0..m.cols)
            .map(|c| {
                let e = m.get(r, c);
                e.numer() * (&lcm / e.denom())
            })
            .collect();
        a.push(row);
    }

    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..m.cols {
        let Some(pivot_idx) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_idx);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in below.iter_mut() {
            if row[col..].iter().all(Zero::is_zero) {
                continue;
            }
            let factor = row[col].clone();
            for (entry, pivot_entry) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let num = &pivot * &*entry - &factor * pivot_entry;
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                *entry = num / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// Fixed-length coefficient vector of a form under the given per-variable
/// degree bound. Ordering: alternators of `(n, k)` lexicographically, then
/// exponent tuples with the last axis fastest. Length `C(n,k) (deg+1)^n`.
///
/// A bound smaller than some exponent in `w` is an error, never a silent
/// truncation.
pub fn coefficient_row(w: &DifferentialForm, deg: u32) -> Result<Vec<ExactScalar>, VerifyError> {
    let n = w.ambient_dim();
    for axis in 0..n {
        let found = w.max_exponent(axis);
        if found > deg {
            return Err(VerifyError::DegreeTooSmall { deg, found });
        }
    }
    let alternators = Alternator::all(n, w.form_order());
    let block = (deg as usize + 1).pow(n as u32);
    let mut row = vec![ExactScalar::zero(); alternators.len() * block];
    for (b, alt) in alternators.iter().enumerate() {
        if let Some(poly) = w.component(alt) {
            for (exps, coeff) in poly.terms() {
                let mut idx = 0usize;
                for axis in 0..n {
                    idx = idx * (deg as usize + 1) + exps.get(axis) as usize;
                }
                row[b * block + idx] = coeff.clone();
            }
        }
    }
    Ok(row)
}

/// Largest per-variable exponent over a slice of forms.
pub fn required_degree(forms: &[DifferentialForm]) -> u32 {
    forms
        .iter()
        .flat_map(|w| (0..w.ambient_dim()).map(move |a| w.max_exponent(a)))
        .max()
        .unwrap_or(0)
}

fn same_space(forms: &[DifferentialForm]) -> Option<(usize, usize)> {
    let first = forms.iter().find(|w| !w.is_zero())?;
    Some((first.ambient_dim(), first.form_order()))
}

/// Coefficient matrix of a set of forms under a common degree bound.
pub fn coefficient_matrix(
    forms: &[DifferentialForm],
    deg: u32,
) -> Result<RationalMatrix, VerifyError> {
    let mut rows = Vec::with_capacity(forms.len());
    for w in forms {
        rows.push(coefficient_row(w, deg)?);
    }
    RationalMatrix::from_rows(rows)
}

/// Exact rank of the span of a set of forms.
pub fn rank_of_forms(forms: &[DifferentialForm]) -> Result<usize, VerifyError> {
    if forms.is_empty() {
        return Ok(0);
    }
    let deg = required_degree(forms);
    Ok(rank_exact(&coefficient_matrix(forms, deg)?))
}

/// Whether `w` lies in the span of `set`: appending its coefficient row must
/// not increase the rank.
pub fn in_span(w: &DifferentialForm, set: &[DifferentialForm]) -> Result<bool, VerifyError> {
    if w.is_zero() {
        return Ok(true);
    }
    if let (Some((n_a, k_a)), Some((n_b, k_b))) =
        (same_space(set), same_space(std::slice::from_ref(w)))
    {
        if (n_a, k_a) != (n_b, k_b) {
            return Err(VerifyError::MixedSpaces { n_a, k_a, n_b, k_b });
        }
    }
    let mut all: Vec<DifferentialForm> = set.to_vec();
    all.push(w.clone());
    let deg = required_degree(&all);
    let base = coefficient_matrix(set, deg)?;
    let extended = base.stacked(&RationalMatrix::from_rows(vec![coefficient_row(w, deg)?])?)?;
    Ok(rank_exact(&extended) == rank_exact(&base))
}

/// Result of the rank-equality verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// number of candidate elements
    pub card_b: usize,
    /// rank of the reference spanning set
    pub rank_a: usize,
    /// rank of the candidate set
    pub rank_b: usize,
    /// rank of the stacked matrix (reference over candidate)
    pub rank_c: usize,
    /// true exactly when `card_b = rank_b = rank_c = rank_a`
    pub verdict: bool,
    pub elapsed_ms: u64,
}

/// Runs the rank-equality check: encodes `standard` as `A` and `candidate`
/// as `B` under a shared degree bound, stacks `B` below `A` into `C`, and
/// passes exactly when `#B = rank(B) = rank(C) = rank(A)`.
///
/// The reference set may be linearly dependent; only the candidate carries
/// the cardinality requirement.
pub fn verify_basis(
    candidate: &[DifferentialForm],
    standard: &[DifferentialForm],
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    if let (Some((n_a, k_a)), Some((n_b, k_b))) = (same_space(standard), same_space(candidate)) {
        if (n_a, k_a) != (n_b, k_b) {
            return Err(VerifyError::MixedSpaces { n_a, k_a, n_b, k_b });
        }
    }
    let mut all: Vec<DifferentialForm> = standard.to_vec();
    all.extend_from_slice(candidate);
    let deg = required_degree(&all);
    let a = coefficient_matrix(standard, deg)?;
    let b = coefficient_matrix(candidate, deg)?;
    let c = a.stacked(&b)?;
    let rank_a = rank_exact(&a);
    let rank_b = rank_exact(&b);
    let rank_c = rank_exact(&c);
    let card_b = candidate.len();
    Ok(VerificationReport {
        card_b,
        rank_a,
        rank_b,
        rank_c,
        verdict: card_b == rank_b && rank_b == rank_c && rank_c == rank_a,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Outcome of the full computational-basis check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub passed: bool,
    pub report: VerificationReport,
    /// description of the first offending element, if any
    pub first_offender: Option<String>,
}

/// The standard spanning set (the rank oracle) of a family space.
pub fn standard_span_for(id: &crate::FamilyId) -> Result<SpanningSet, VerifyError> {
    let set = match id.family {
        Family::QMinus => q_minus_span(id.r, id.k, id.n)?,
        Family::S => s_span(id.r, id.k, id.n)?,
        Family::SMinus => s_minus_span(id.r, id.k, id.n)?,
    };
    Ok(set)
}

/// The standard spanning set matching an assembled basis's family.
pub fn standard_span(basis: &AssociatedBasis) -> Result<SpanningSet, VerifyError> {
    standard_span_for(&basis.family)
}

/// Full check of the computational-basis definition: the assembled list must
/// verify as a basis of the matching standard span, and every element must
/// be associated to exactly one face of its minimal trace dimension.
pub fn check_computational_basis(basis: &AssociatedBasis) -> Result<CheckOutcome, VerifyError> {
    let standard = standard_span(basis)?;
    let forms = basis.forms();
    let report = verify_basis(&forms, standard.elements())?;
    let mut first_offender = None;
    if report.verdict {
        for (idx, element) in basis.elements.iter().enumerate() {
            match crate::bases::associate_face(&element.form, basis.family.n) {
                Ok(face) if face == element.face => {}
                Ok(face) => {
                    first_offender = Some(format!(
                        "element {idx} ({}) re-associates to {face}, stored {}",
                        element.subspace, element.face
                    ));
                    break;
                }
                Err(err) => {
                    first_offender = Some(format!("element {idx} ({}): {err}", element.subspace));
                    break;
                }
            }
        }
    }
    Ok(CheckOutcome {
        passed: report.verdict && first_offender.is_none(),
        report,
        first_offender,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{assemble, FamilyId};
    use crate::poly::ExponentVector;
    use crate::spaces::j_span;

    #[test]
    fn identity_rank() {
        assert_eq!(rank_exact(&RationalMatrix::identity(5)), 5);
        assert_eq!(rank_exact(&RationalMatrix::zero(3, 4)), 0);
    }

    #[test]
    fn coefficient_row_layout() {
        // (5x + 4yz + 3y + 2z + 1) dx with deg = 1 in three variables:
        // 24 entries starting 1, 2, 3, 4, 5, then zeros.
        let n = 3;
        let mut w = DifferentialForm::zero(n, 1);
        let terms: [(i64, [u32; 3]); 5] = [
            (1, [0, 0, 0]),
            (2, [0, 0, 1]),
            (3, [0, 1, 0]),
            (4, [0, 1, 1]),
            (5, [1, 0, 0]),
        ];
        for (c, e) in terms {
            w = w
                .try_add(&DifferentialForm::monomial(
                    n,
                    ExponentVector::new(e.to_vec()),
                    vec![0],
                    ExactScalar::from_int(c),
                ))
                .unwrap();
        }
        let row = coefficient_row(&w, 1).unwrap();
        assert_eq!(row.len(), 24);
        let ints: Vec<i64> = row
            .iter()
            .map(|c| {
                use num_traits::ToPrimitive;
                c.numer().to_i64().unwrap()
            })
            .collect();
        assert_eq!(&ints[..5], &[1, 2, 3, 4, 5]);
        assert!(ints[5..].iter().all(|&v| v == 0));
    }

    #[test]
    fn zero_form_encodes_to_zero_row() {
        let row = coefficient_row(&DifferentialForm::zero(3, 1), 1).unwrap();
        assert!(row.iter().all(ExactScalar::is_zero));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let w = DifferentialForm::monomial(
            3,
            ExponentVector::new(vec![2, 0, 0]),
            vec![0],
            ExactScalar::one(),
        );
        assert!(matches!(
            coefficient_row(&w, 1),
            Err(VerifyError::DegreeTooSmall { deg: 1, found: 2 })
        ));
    }

    #[test]
    fn rank_of_derived_koszul_span() {
        // the three derivative images of j_span(1,1,3) span a plane
        let j = j_span(1, 1, 3).unwrap();
        let images: Vec<DifferentialForm> = j.elements().iter().map(DifferentialForm::d).collect();
        assert_eq!(images.len(), 3);
        assert_eq!(rank_of_forms(&images).unwrap(), 2);
    }

    #[test]
    fn verify_s113_basis() {
        let basis = assemble(&FamilyId::new(crate::Family::S, 1, 1, 3)).unwrap();
        let standard = crate::s_span(1, 1, 3).unwrap();
        let report = verify_basis(&basis.forms(), standard.elements()).unwrap();
        assert!(report.verdict);
        assert_eq!(report.rank_a, 24);
        assert_eq!(report.rank_b, 24);
        assert_eq!(report.rank_c, 24);
        assert_eq!(report.card_b, 24);

        // dropping an element fails the cardinality equality
        let mut forms = basis.forms();
        forms.pop();
        let report = verify_basis(&forms, standard.elements()).unwrap();
        assert!(!report.verdict);
        assert_eq!(report.card_b, 23);
        assert_eq!(report.rank_b, 23);
        assert_eq!(report.rank_a, 24);

        // duplicating an element fails independence
        let mut forms = basis.forms();
        forms.push(forms[0].clone());
        let report = verify_basis(&forms, standard.elements()).unwrap();
        assert!(!report.verdict);
        assert_eq!(report.card_b, 25);
        assert_eq!(report.rank_b, 24);
    }

    #[test]
    fn check_full_definition() {
        let basis = assemble(&FamilyId::new(crate::Family::S, 1, 1, 3)).unwrap();
        let outcome = check_computational_basis(&basis).unwrap();
        assert!(outcome.passed);
        assert!(outcome.first_offender.is_none());
    }
}
