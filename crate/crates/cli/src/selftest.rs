//! The selftest command: verify batches of spaces and, in full scope,
//! compare against the committed golden data.

use crate::golden::{self, GoldenOutcome};
use crate::{CliError, Scope};
use feec::{assemble, check_computational_basis, Family, FamilyId};
use rayon::prelude::*;

fn cases(scope: Scope) -> Vec<FamilyId> {
    let (r2, r3) = match scope {
        Scope::Quick => (2u32, 2u32),
        Scope::Full => (6, 4),
    };
    let mut out = Vec::new();
    for family in [Family::QMinus, Family::S, Family::SMinus] {
        for k in 0..=2usize {
            for r in 1..=r2 {
                out.push(FamilyId::new(family, r, k, 2));
            }
        }
        for k in 0..=3usize {
            for r in 1..=r3 {
                out.push(FamilyId::new(family, r, k, 3));
            }
        }
    }
    out
}

type CaseOutcome = (FamilyId, Result<(bool, String), String>);

pub fn run(scope: Scope, regen_golden: bool) -> Result<u8, CliError> {
    let dir = golden::golden_dir();
    if regen_golden {
        golden::regenerate_rendered(&dir)?;
        return Ok(0);
    }

    let cases = cases(scope);
    let results: Vec<CaseOutcome> = cases
        .par_iter()
        .map(|id| {
            let outcome = assemble(id)
                .map_err(|e| e.to_string())
                .and_then(|basis| check_computational_basis(&basis).map_err(|e| e.to_string()))
                .map(|o| {
                    let line = format!(
                        "card={:<4} ranks {}/{}/{} {:>6} ms",
                        o.report.card_b,
                        o.report.rank_a,
                        o.report.rank_b,
                        o.report.rank_c,
                        o.report.elapsed_ms
                    );
                    (o.passed && o.first_offender.is_none(), line)
                });
            (*id, outcome)
        })
        .collect();

    println!("family  n  k  r   result");
    let mut failures = 0usize;
    for (id, outcome) in &results {
        let (ok, detail) = match outcome {
            Ok((ok, line)) => (*ok, line.clone()),
            Err(e) => (false, e.clone()),
        };
        if !ok {
            failures += 1;
        }
        println!(
            "{:<6} {:>2} {:>2} {:>2}   {}  {}",
            id.family.to_string(),
            id.n,
            id.k,
            id.r,
            if ok { "pass" } else { "FAIL" },
            detail
        );
    }

    let mut golden_failures = 0usize;
    if scope == Scope::Full {
        for id in golden::golden_cases() {
            match golden::compare_reference(&dir, &id)? {
                GoldenOutcome::Match => {
                    println!(
                        "golden reference {:<3} r={} k={}  match",
                        id.family.to_string(),
                        id.r,
                        id.k
                    );
                }
                GoldenOutcome::Mismatch(msg) => {
                    golden_failures += 1;
                    println!(
                        "golden reference {:<3} r={} k={}  MISMATCH: {msg}",
                        id.family.to_string(),
                        id.r,
                        id.k
                    );
                }
            }
            match golden::compare_rendered(&dir, &id)? {
                GoldenOutcome::Match => {
                    println!(
                        "golden rendered  {:<3} r={} k={}  match",
                        id.family.to_string(),
                        id.r,
                        id.k
                    );
                }
                GoldenOutcome::Mismatch(msg) => {
                    golden_failures += 1;
                    println!(
                        "golden rendered  {:<3} r={} k={}  MISMATCH: {msg}",
                        id.family.to_string(),
                        id.r,
                        id.k
                    );
                }
            }
        }
    }

    println!(
        "{} verifications, {} failed{}",
        results.len(),
        failures,
        if scope == Scope::Full {
            format!("; {golden_failures} golden mismatches")
        } else {
            String::new()
        }
    );
    Ok(if failures == 0 && golden_failures == 0 {
        0
    } else {
        1
    })
}
