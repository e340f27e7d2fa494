//! Shared helpers for the integration suites.
#![allow(dead_code)]

use feec::parse::parse_polynomial;
use feec::{Alternator, DifferentialForm, Family, FamilyId, Polynomial};
use std::path::{Path, PathBuf};

/// Every (family, n, k, r) combination covered by the verification matrix:
/// r = 1..6 on the square, r = 1..4 on the cube.
pub fn all_cases() -> Vec<FamilyId> {
    let mut cases = Vec::new();
    for family in [Family::QMinus, Family::S, Family::SMinus] {
        for k in 0..=2usize {
            for r in 1..=6u32 {
                cases.push(FamilyId::new(family, r, k, 2));
            }
        }
        for k in 0..=3usize {
            for r in 1..=4u32 {
                cases.push(FamilyId::new(family, r, k, 3));
            }
        }
    }
    cases
}

pub fn golden_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("FEEC_GOLDEN_DIR") {
        return PathBuf::from(dir);
    }
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("..")
        .join("..")
        .join("golden")
}

/// Reads a reference list: a `# columns:` header naming the alternator of
/// each `|`-separated column, then one form per line in factored notation.
pub fn parse_reference_file(path: &Path) -> Vec<DifferentialForm> {
    let n = 3;
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    let mut lines = text.lines();
    let header = lines.next().expect("reference file has a header");
    let columns: Vec<Alternator> = header
        .trim_start_matches('#')
        .trim()
        .trim_start_matches("columns:")
        .split_whitespace()
        .map(|label| {
            Alternator::from_label(label, n)
                .unwrap_or_else(|| panic!("bad column label {label:?} in {}", path.display()))
        })
        .collect();
    let mut forms = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells: Vec<&str> = line.split('|').map(str::trim).collect();
        assert_eq!(
            cells.len(),
            columns.len(),
            "{}:{} has {} columns",
            path.display(),
            lineno + 2,
            cells.len()
        );
        let mut form = DifferentialForm::zero(n, columns[0].order());
        for (cell, alt) in cells.iter().zip(&columns) {
            let poly = parse_polynomial(cell, n)
                .unwrap_or_else(|e| panic!("{}:{}: {e}", path.display(), lineno + 2));
            if poly.is_zero() {
                continue;
            }
            form = form
                .try_add(&DifferentialForm::from_component(n, alt.clone(), poly))
                .expect("columns share the form order");
        }
        assert!(
            !form.is_zero(),
            "{}:{} is a zero row",
            path.display(),
            lineno + 2
        );
        forms.push(form);
    }
    forms
}

/// Injects a 2-variable form into three variables, sending variable 0 to
/// `axes[0]` and variable 1 to `axes[1]` (which must be ascending).
pub fn embed_in_cube(w: &DifferentialForm, axes: &[usize]) -> DifferentialForm {
    assert_eq!(w.ambient_dim(), 2);
    assert!(axes.len() == 2 && axes[0] < axes[1]);
    let mut out = DifferentialForm::zero(3, w.form_order());
    for (alt, poly) in w.components() {
        let mapped: Vec<usize> = alt.axes().iter().map(|&a| axes[a]).collect();
        let mut p3 = Polynomial::zero(3);
        for (exps, coeff) in poly.terms() {
            let mut e3 = vec![0u32; 3];
            e3[axes[0]] = exps.get(0);
            e3[axes[1]] = exps.get(1);
            p3.add_term(feec::ExponentVector::new(e3), coeff.clone());
        }
        out = out
            .try_add(&DifferentialForm::from_component(
                3,
                Alternator::new(mapped),
                p3,
            ))
            .unwrap();
    }
    out
}
