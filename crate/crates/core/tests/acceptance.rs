//! Acceptance suite: every release-gating criterion, one test per
//! criterion, each printing a single PASS/FAIL line. All checks are exact;
//! no tolerances appear anywhere.

mod common;

use common::{all_cases, embed_in_cube, golden_dir, parse_reference_file};
use feec::parse::parse_polynomial;
use feec::render::render_form;
use feec::{
    assemble, associate_face, check_computational_basis, homogeneous_basis, in_span, q_minus_span,
    rank_of_forms, s_span, verify_basis, Alternator, DifferentialForm, ExactScalar, Face, Family,
    FamilyId, SubspaceId, SubspaceKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeSet;

fn pass_line(criterion: u32, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

fn form_from_columns(cols: [&str; 3]) -> DifferentialForm {
    let n = 3;
    let alts = [vec![0], vec![1], vec![2]];
    let mut form = DifferentialForm::zero(n, 1);
    for (cell, axes) in cols.iter().zip(alts) {
        let poly = parse_polynomial(cell, n).unwrap();
        if poly.is_zero() {
            continue;
        }
        form = form
            .try_add(&DifferentialForm::from_component(
                n,
                Alternator::new(axes),
                poly,
            ))
            .unwrap();
    }
    form
}

#[test]
fn criterion_1_basis_verification_matrix() {
    let cases = all_cases();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|id| {
            let basis = assemble(id).unwrap_or_else(|e| panic!("{id}: {e}"));
            let outcome = check_computational_basis(&basis).unwrap_or_else(|e| panic!("{id}: {e}"));
            if outcome.passed {
                None
            } else {
                Some(format!(
                    "{id}: card_B={} rank_A={} rank_B={} rank_C={} offender={:?}",
                    outcome.report.card_b,
                    outcome.report.rank_a,
                    outcome.report.rank_b,
                    outcome.report.rank_c,
                    outcome.first_offender
                ))
            }
        })
        .collect();
    pass_line(
        1,
        failures.is_empty(),
        &format!(
            "{}/{} exact basis verifications{}",
            cases.len() - failures.len(),
            cases.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}

#[test]
fn criterion_2_pinned_ranks() {
    let basis = assemble(&FamilyId::new(Family::S, 1, 1, 3)).unwrap();
    let standard = s_span(1, 1, 3).unwrap();
    let report = verify_basis(&basis.forms(), standard.elements()).unwrap();
    let ranks_ok = report.rank_a == 24 && report.rank_b == 24 && report.rank_c == 24;

    let j = feec::j_span(1, 1, 3).unwrap();
    let d_images: Vec<DifferentialForm> = j.elements().iter().map(DifferentialForm::d).collect();
    let dj_rank = rank_of_forms(&d_images).unwrap();

    pass_line(
        2,
        ranks_ok && dj_rank == 2,
        &format!(
            "S_1 k=1 n=3 ranks A/B/C = {}/{}/{} (want 24), d-image rank = {dj_rank} (want 2)",
            report.rank_a, report.rank_b, report.rank_c
        ),
    );
}

#[test]
fn criterion_3_reference_list_equality() {
    let dir = golden_dir().join("reference");
    let pinned_counts = [
        ("s", 1, 1, 24usize),
        ("s", 2, 1, 48),
        ("sm", 1, 1, 12),
        ("s", 1, 2, 18),
        ("s", 2, 2, 39),
        ("sm", 1, 2, 6),
    ];
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for (token, family) in [("s", Family::S), ("sm", Family::SMinus)] {
        for r in 1..=3u32 {
            for k in 0..=2usize {
                // the 0-form lists are shared: both families generate them
                let file = dir.join(format!("s_r{r}_k{k}.txt"));
                let file = if token == "sm" && k > 0 {
                    dir.join(format!("sm_r{r}_k{k}.txt"))
                } else {
                    file
                };
                let reference: BTreeSet<String> = parse_reference_file(&file)
                    .iter()
                    .map(render_form)
                    .collect();
                let basis = assemble(&FamilyId::new(family, r, k, 3)).unwrap();
                let generated: BTreeSet<String> = basis
                    .elements
                    .iter()
                    .map(|e| render_form(&e.form))
                    .collect();
                if generated != reference {
                    let missing: Vec<_> = reference.difference(&generated).take(3).collect();
                    let extra: Vec<_> = generated.difference(&reference).take(3).collect();
                    mismatches.push(format!(
                        "{token} r={r} k={k}: {} generated vs {} listed; missing {missing:?}; extra {extra:?}",
                        generated.len(),
                        reference.len()
                    ));
                    continue;
                }
                for (t, pr, pk, count) in pinned_counts {
                    if t == token && pr == r && pk == k && generated.len() != count {
                        mismatches.push(format!(
                            "{token} r={r} k={k}: {} elements, pinned {count}",
                            generated.len()
                        ));
                    }
                }
                checked += 1;
            }
        }
    }
    pass_line(
        3,
        mismatches.is_empty() && checked == 18,
        &format!(
            "{checked}/18 reference lists equal as canonical form sets{}",
            if mismatches.is_empty() {
                String::new()
            } else {
                format!("; mismatches: {mismatches:?}")
            }
        ),
    );
}

#[test]
fn criterion_4_tensor_product_cardinality() {
    fn binom(n: u64, k: u64) -> u64 {
        let mut r = 1;
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }
    let cases: Vec<FamilyId> = all_cases()
        .into_iter()
        .filter(|c| c.family == Family::QMinus)
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|id| {
            let expected = binom(id.n as u64, id.k as u64)
                * u64::from(id.r).pow(id.k as u32)
                * u64::from(id.r + 1).pow((id.n - id.k) as u32);
            let basis = assemble(id).unwrap();
            if basis.len() as u64 != expected {
                return Some(format!(
                    "{id}: {} elements, law says {expected}",
                    basis.len()
                ));
            }
            let standard = q_minus_span(id.r, id.k, id.n).unwrap();
            let report = verify_basis(&basis.forms(), standard.elements()).unwrap();
            if report.verdict {
                None
            } else {
                Some(format!("{id}: rank check failed {report:?}"))
            }
        })
        .collect();
    pass_line(
        4,
        failures.is_empty(),
        &format!(
            "cardinality C(n,k) r^k (r+1)^(n-k) and rank equality on {} tensor product cases{}",
            cases.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}

#[test]
fn criterion_5_membership_suite() {
    let span = s_span(1, 1, 3).unwrap();
    let set = span.elements();
    let mut failures = Vec::new();

    // xyz dx alone is not in the space
    let xyz_dx = form_from_columns(["xyz", "0", "0"]);
    if in_span(&xyz_dx, set).unwrap() {
        failures.push("xyz dx unexpectedly in span".to_string());
    }

    // none of the twelve "obvious guess" completions are
    for (cols, label) in [
        (["x(y + 1)(z + 1)", "0", "0"], "x(y+1)(z+1) dx"),
        (["x(y + 1)(z - 1)", "0", "0"], "x(y+1)(z-1) dx"),
        (["x(y - 1)(z + 1)", "0", "0"], "x(y-1)(z+1) dx"),
        (["x(y - 1)(z - 1)", "0", "0"], "x(y-1)(z-1) dx"),
        (["0", "y(x + 1)(z + 1)", "0"], "y(x+1)(z+1) dy"),
        (["0", "y(x + 1)(z - 1)", "0"], "y(x+1)(z-1) dy"),
        (["0", "y(x - 1)(z + 1)", "0"], "y(x-1)(z+1) dy"),
        (["0", "y(x - 1)(z - 1)", "0"], "y(x-1)(z-1) dy"),
        (["0", "0", "z(x + 1)(y + 1)"], "z(x+1)(y+1) dz"),
        (["0", "0", "z(x + 1)(y - 1)"], "z(x+1)(y-1) dz"),
        (["0", "0", "z(x - 1)(y + 1)"], "z(x-1)(y+1) dz"),
        (["0", "0", "z(x - 1)(y - 1)"], "z(x-1)(y-1) dz"),
    ] {
        if in_span(&form_from_columns(cols), set).unwrap() {
            failures.push(format!("{label} unexpectedly in span"));
        }
    }

    // the corrected completions are
    let prep = form_from_columns(["2xyz", "x^2z", "x^2y"]);
    if !in_span(&prep, set).unwrap() {
        failures.push("2xyz dx + x^2 z dy + x^2 y dz not in span".to_string());
    }
    let completed = form_from_columns(["2x(y + 1)(z + 1)", "(z + 1)(x^2 - 1)", "(y + 1)(x^2 - 1)"]);
    if !in_span(&completed, set).unwrap() {
        failures.push("completed edge function not in span".to_string());
    }

    // and so are the twelve constant-order edge functions
    for (cols, label) in [
        (["(y + 1)(z + 1)", "0", "0"], "(y+1)(z+1) dx"),
        (["(y + 1)(z - 1)", "0", "0"], "(y+1)(z-1) dx"),
        (["(y - 1)(z + 1)", "0", "0"], "(y-1)(z+1) dx"),
        (["(y - 1)(z - 1)", "0", "0"], "(y-1)(z-1) dx"),
        (["0", "(x + 1)(z + 1)", "0"], "(x+1)(z+1) dy"),
        (["0", "(x + 1)(z - 1)", "0"], "(x+1)(z-1) dy"),
        (["0", "(x - 1)(z + 1)", "0"], "(x-1)(z+1) dy"),
        (["0", "(x - 1)(z - 1)", "0"], "(x-1)(z-1) dy"),
        (["0", "0", "(x + 1)(y + 1)"], "(x+1)(y+1) dz"),
        (["0", "0", "(x + 1)(y - 1)"], "(x+1)(y-1) dz"),
        (["0", "0", "(x - 1)(y + 1)"], "(x-1)(y+1) dz"),
        (["0", "0", "(x - 1)(y - 1)"], "(x-1)(y-1) dz"),
    ] {
        if !in_span(&form_from_columns(cols), set).unwrap() {
            failures.push(format!("{label} not in span"));
        }
    }

    pass_line(
        5,
        failures.is_empty(),
        &format!(
            "26 exact membership decisions{}",
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, k: usize) -> DifferentialForm {
    let mut form = DifferentialForm::zero(n, k);
    let alts = Alternator::all(n, k);
    for _ in 0..5 {
        let alt = alts[rng.gen_range(0..alts.len())].clone();
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=4u32)).collect();
        let coeff = loop {
            let c: i64 = rng.gen_range(-9..=9);
            if c != 0 {
                break c;
            }
        };
        form = form
            .try_add(&DifferentialForm::monomial(
                n,
                feec::ExponentVector::new(exps),
                alt.axes().to_vec(),
                ExactScalar::from_int(coeff),
            ))
            .unwrap();
    }
    form
}

#[test]
fn criterion_6_calculus_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();

    // d∘d = 0 on 200 random forms with k <= n-2
    for trial in 0..200 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let k = rng.gen_range(0..=n - 2);
        let w = random_form(&mut rng, n, k);
        if !w.d().d().is_zero() {
            failures.push(format!("d(d(w)) != 0 at trial {trial}"));
        }
    }

    // κ∘κ = 0 on 200 random forms with k >= 2
    for trial in 0..200 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let k = rng.gen_range(2..=n);
        let w = random_form(&mut rng, n, k);
        if !w.koszul().koszul().is_zero() {
            failures.push(format!("k(k(w)) != 0 at trial {trial}"));
        }
    }

    // (dκ + κd) = (r + k) id on homogeneous monomials, exhaustively
    let mut checked = 0usize;
    for n in 2..=3usize {
        for r in 0..=4u32 {
            for k in 0..=n {
                if r as usize + k == 0 {
                    continue;
                }
                for w in homogeneous_basis(r, k, n).unwrap().elements() {
                    let lhs = w.koszul().d().try_add(&w.d().koszul()).unwrap();
                    let rhs = w.scale(&ExactScalar::from_int(i64::from(r) + k as i64));
                    if lhs != rhs {
                        failures.push(format!(
                            "homotopy identity fails on {} (r={r}, k={k}, n={n})",
                            render_form(w)
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }

    pass_line(
        6,
        failures.is_empty(),
        &format!(
            "d∘d and κ∘κ vanish on 400 random forms; homotopy identity exact on {checked} monomials{}",
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}

#[test]
fn criterion_7_unique_face_association() {
    let cases = all_cases();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|id| {
            let basis = assemble(id).unwrap();
            for (idx, e) in basis.elements.iter().enumerate() {
                match associate_face(&e.form, id.n) {
                    Ok(face) => {
                        if face != e.face {
                            return Some(format!("{id} element {idx}: face mismatch"));
                        }
                    }
                    Err(err) => return Some(format!("{id} element {idx}: {err}")),
                }
            }
            None
        })
        .collect();
    let total: usize = cases.iter().map(|id| assemble(id).unwrap().len()).sum();
    pass_line(
        7,
        failures.is_empty(),
        &format!(
            "unique minimal-dimension face for every element across {} cases ({total} elements){}",
            cases.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}

#[test]
fn criterion_8_trace_restriction_identities() {
    // for each 2D face f of the cube, the traces of the cube subspace span
    // exactly the matching square subspace built in f's free coordinates
    let faces: Vec<Face> = feec::faces_of_cube(3, 2).unwrap();
    let mut failures = Vec::new();
    let mut checked = 0usize;

    let mut spans_equal = |label: String,
                           traces: Vec<DifferentialForm>,
                           expected: Vec<DifferentialForm>| {
        let nonzero: Vec<DifferentialForm> = traces.into_iter().filter(|t| !t.is_zero()).collect();
        let rank_t = rank_of_forms(&nonzero).unwrap();
        let rank_e = rank_of_forms(&expected).unwrap();
        let mut both = nonzero;
        both.extend(expected);
        let rank_union = rank_of_forms(&both).unwrap();
        if !(rank_t == rank_e && rank_e == rank_union) {
            failures.push(format!(
                "{label}: trace span rank {rank_t}, expected span rank {rank_e}, union {rank_union}"
            ));
        }
        checked += 1;
    };

    let cube = |kind: SubspaceKind, i: i64| SubspaceId {
        kind,
        grade: i,
        k: 1,
        n: 3,
    };
    let square = |kind: SubspaceKind, i: i64| SubspaceId {
        kind,
        grade: i,
        k: 1,
        n: 2,
    };

    for face in &faces {
        let axes = face.free_axes();
        for i in 0..=4i64 {
            // tr_f E_i(cube) = E_i(face)
            let traces = feec::bases::subspace(&cube(SubspaceKind::E, i))
                .unwrap()
                .iter()
                .map(|w| w.trace(face).unwrap())
                .collect();
            let expected = feec::bases::subspace(&square(SubspaceKind::E, i))
                .unwrap()
                .iter()
                .map(|w| embed_in_cube(w, &axes))
                .collect();
            spans_equal(format!("E_{i} on {face}"), traces, expected);

            // tr_f Ẽ_i(cube) = Ẽ_i(face)
            let traces = feec::bases::subspace(&cube(SubspaceKind::ETilde, i))
                .unwrap()
                .iter()
                .map(|w| w.trace(face).unwrap())
                .collect();
            let expected = feec::bases::subspace(&square(SubspaceKind::ETilde, i))
                .unwrap()
                .iter()
                .map(|w| embed_in_cube(w, &axes))
                .collect();
            spans_equal(format!("E~_{i} on {face}"), traces, expected);

            if i >= 2 {
                // tr_f F̂_r(cube) = F_r(face)
                let traces = feec::bases::subspace(&cube(SubspaceKind::FHat, i))
                    .unwrap()
                    .iter()
                    .map(|w| w.trace(face).unwrap())
                    .collect();
                let expected = feec::bases::subspace(&square(SubspaceKind::F, i))
                    .unwrap()
                    .iter()
                    .map(|w| embed_in_cube(w, &axes))
                    .collect();
                spans_equal(format!("F^_{i} on {face}"), traces, expected);

                // tr_f F̃_r(cube) = F̃_r(face)
                let traces = feec::bases::subspace(&cube(SubspaceKind::FTilde, i))
                    .unwrap()
                    .iter()
                    .map(|w| w.trace(face).unwrap())
                    .collect();
                let expected = feec::bases::subspace(&square(SubspaceKind::FTilde, i))
                    .unwrap()
                    .iter()
                    .map(|w| embed_in_cube(w, &axes))
                    .collect();
                spans_equal(format!("F~_{i} on {face}"), traces, expected);
            }
        }
    }

    pass_line(
        8,
        failures.is_empty(),
        &format!(
            "{checked} exact trace-span equalities on the six 2D faces{}",
            if failures.is_empty() {
                String::new()
            } else {
                format!("; failures: {failures:?}")
            }
        ),
    );
}

#[test]
fn criterion_9_tensor_constraint_reconstruction_gate() {
    // The per-row degree constraints of the tensor product subspaces follow
    // a written rule that names only one representative row; the reading is
    // accepted only if the assembled bases verify exactly against the
    // monomial spans for r = 1..4. A failure here is an open transcription
    // issue and must not be patched by loosening the check.
    let mut cases = Vec::new();
    for n in [2usize, 3] {
        for k in 1..=n {
            for r in 1..=4u32 {
                cases.push(FamilyId::new(Family::QMinus, r, k, n));
            }
        }
    }
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|id| {
            let basis = assemble(id).unwrap();
            let standard = q_minus_span(id.r, id.k, id.n).unwrap();
            let report = verify_basis(&basis.forms(), standard.elements()).unwrap();
            if report.verdict {
                None
            } else {
                Some(format!("{id}: {report:?}"))
            }
        })
        .collect();
    pass_line(
        9,
        failures.is_empty(),
        &format!(
            "per-row degree constraint reading verified on {} tensor product spaces{}",
            cases.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; open transcription issues: {failures:?}")
            }
        ),
    );
}
