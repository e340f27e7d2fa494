//! Basis rendering for the four output formats.

use crate::OutputFormat;
use feec::json::basis_to_dto;
use feec::render::{latex_polynomial, render_form, render_polynomial};
use feec::{Alternator, AssociatedBasis, Polynomial};

fn column_alternators(n: usize, k: usize) -> Vec<Alternator> {
    Alternator::all(n, k)
}

fn face_label(face: &feec::Face) -> String {
    let s = face.to_string();
    // CSV cells use ';' between constraints
    s.replace(',', ";")
}

pub fn render_basis(basis: &AssociatedBasis, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for e in &basis.elements {
                out.push_str(&render_form(&e.form));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut text =
                serde_json::to_string_pretty(&basis_to_dto(basis)).expect("basis serializes");
            text.push('\n');
            text
        }
        OutputFormat::Latex => render_latex(basis),
        OutputFormat::Csv => render_csv(basis),
    }
}

fn render_latex(basis: &AssociatedBasis) -> String {
    let id = basis.family;
    let columns = column_alternators(id.n, id.k);
    let mut out = String::new();
    out.push_str("\\[\n\\begin{array}{");
    for _ in &columns {
        out.push('l');
    }
    out.push_str("}\n");
    if id.k > 0 {
        let header: Vec<String> = columns
            .iter()
            .map(|alt| format!("\\mathit{{{}}}", alt.label()))
            .collect();
        out.push_str(&header.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\hline\n");
    let zero = Polynomial::zero(id.n);
    for e in &basis.elements {
        let cells: Vec<String> = columns
            .iter()
            .map(|alt| latex_polynomial(e.form.component(alt).unwrap_or(&zero)))
            .collect();
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{array}\n\\]\n");
    out
}

fn render_csv(basis: &AssociatedBasis) -> String {
    let id = basis.family;
    let columns = column_alternators(id.n, id.k);
    let mut out = String::new();
    out.push_str("index,m,face,subspace,grade");
    for alt in &columns {
        out.push(',');
        out.push_str(&alt.label());
    }
    out.push('\n');
    let zero = Polynomial::zero(id.n);
    for (idx, e) in basis.elements.iter().enumerate() {
        out.push_str(&format!(
            "{idx},{},{},{},{}",
            e.face.dim(),
            face_label(&e.face),
            e.subspace.kind.token(),
            e.subspace.grade
        ));
        for alt in &columns {
            out.push(',');
            out.push_str(&render_polynomial(e.form.component(alt).unwrap_or(&zero)));
        }
        out.push('\n');
    }
    out
}
