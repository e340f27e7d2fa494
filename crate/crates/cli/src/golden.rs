//! Golden data handling: the committed reference lists (factored tables,
//! compared as sets of canonically expanded forms) and the committed
//! rendered outputs (compared byte for byte, regenerable via
//! `selftest --regen-golden`).

use crate::CliError;
use feec::parse::parse_polynomial;
use feec::render::render_form;
use feec::{assemble, Alternator, DifferentialForm, Family, FamilyId};
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

/// Golden directory: `FEEC_GOLDEN_DIR` override, then `./golden`, then the
/// workspace copy next to the sources.
pub fn golden_dir() -> PathBuf {
    if let Ok(dir) = std::env::var("FEEC_GOLDEN_DIR") {
        return PathBuf::from(dir);
    }
    let cwd = PathBuf::from("golden");
    if cwd.is_dir() {
        return cwd;
    }
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("..")
        .join("..")
        .join("golden")
}

fn family_token(family: Family) -> &'static str {
    match family {
        Family::S => "s",
        Family::SMinus => "sm",
        Family::QMinus => "q",
    }
}

/// The spaces with committed golden data: both serendipity families,
/// r = 1..3, k = 0..2 on the cube.
pub fn golden_cases() -> Vec<FamilyId> {
    let mut cases = Vec::new();
    for family in [Family::S, Family::SMinus] {
        for r in 1..=3u32 {
            for k in 0..=2usize {
                cases.push(FamilyId::new(family, r, k, 3));
            }
        }
    }
    cases
}

/// Reference list file for a case. The 0-form lists are shared between the
/// two serendipity families.
fn reference_path(dir: &Path, id: &FamilyId) -> PathBuf {
    let token = if id.k == 0 {
        "s"
    } else {
        family_token(id.family)
    };
    dir.join("reference")
        .join(format!("{token}_r{}_k{}.txt", id.r, id.k))
}

fn rendered_path(dir: &Path, id: &FamilyId) -> PathBuf {
    dir.join("rendered").join(format!(
        "{}_r{}_k{}.txt",
        family_token(id.family),
        id.r,
        id.k
    ))
}

/// Reads a reference list: a `# columns:` header naming the alternator of
/// each `|`-separated column, then one form per line in factored notation.
pub fn parse_reference_file(path: &Path) -> Result<Vec<DifferentialForm>, CliError> {
    let n = 3;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Usage(format!("{}: empty file", path.display())))?;
    let mut columns = Vec::new();
    for label in header
        .trim_start_matches('#')
        .trim()
        .trim_start_matches("columns:")
        .split_whitespace()
    {
        columns.push(Alternator::from_label(label, n).ok_or_else(|| {
            CliError::Usage(format!("{}: bad column label {label:?}", path.display()))
        })?);
    }
    let mut forms = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cells: Vec<&str> = line.split('|').map(str::trim).collect();
        if cells.len() != columns.len() {
            return Err(CliError::Usage(format!(
                "{}:{}: {} columns, expected {}",
                path.display(),
                lineno + 2,
                cells.len(),
                columns.len()
            )));
        }
        let mut form = DifferentialForm::zero(n, columns[0].order());
        for (cell, alt) in cells.iter().zip(&columns) {
            let poly = parse_polynomial(cell, n)
                .map_err(|e| CliError::Usage(format!("{}:{}: {e}", path.display(), lineno + 2)))?;
            if poly.is_zero() {
                continue;
            }
            form = form
                .try_add(&DifferentialForm::from_component(n, alt.clone(), poly))
                .expect("columns share the form order");
        }
        forms.push(form);
    }
    Ok(forms)
}

pub enum GoldenOutcome {
    Match,
    Mismatch(String),
}

/// Set comparison of a generated basis against its committed reference list.
pub fn compare_reference(dir: &Path, id: &FamilyId) -> Result<GoldenOutcome, CliError> {
    let reference: BTreeSet<String> = parse_reference_file(&reference_path(dir, id))?
        .iter()
        .map(render_form)
        .collect();
    let basis = assemble(id).map_err(|e| CliError::Usage(e.to_string()))?;
    let generated: BTreeSet<String> = basis
        .elements
        .iter()
        .map(|e| render_form(&e.form))
        .collect();
    if generated == reference {
        Ok(GoldenOutcome::Match)
    } else {
        let missing: Vec<&String> = reference.difference(&generated).take(2).collect();
        let extra: Vec<&String> = generated.difference(&reference).take(2).collect();
        Ok(GoldenOutcome::Mismatch(format!(
            "{} generated vs {} listed; missing {missing:?}; extra {extra:?}",
            generated.len(),
            reference.len()
        )))
    }
}

/// Byte comparison of the current text rendering against the committed copy.
pub fn compare_rendered(dir: &Path, id: &FamilyId) -> Result<GoldenOutcome, CliError> {
    let path = rendered_path(dir, id);
    let committed = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let basis = assemble(id).map_err(|e| CliError::Usage(e.to_string()))?;
    let current = crate::output::render_basis(&basis, crate::OutputFormat::Text);
    if committed == current {
        Ok(GoldenOutcome::Match)
    } else {
        Ok(GoldenOutcome::Mismatch(format!(
            "{} differs from current rendering",
            path.display()
        )))
    }
}

/// Rewrites the rendered golden files from the current output.
pub fn regenerate_rendered(dir: &Path) -> Result<(), CliError> {
    let rendered = dir.join("rendered");
    std::fs::create_dir_all(&rendered)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", rendered.display())))?;
    for id in golden_cases() {
        let basis = assemble(&id).map_err(|e| CliError::Usage(e.to_string()))?;
        let text = crate::output::render_basis(&basis, crate::OutputFormat::Text);
        let path = rendered_path(dir, &id);
        std::fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
