//! The verification suites behind `tangled verify`: exhaustive checks of the
//! bijection, the row/crossing correspondence, crossing/nesting duality, the
//! move-set restrictions, and agreement of the three counting routes.
//!
//! Each property prints one `PASS`/`FAIL` line; failures carry the first
//! counterexample as JSON. Output is deterministic for fixed arguments.

use anyhow::Result;
use clap::ValueEnum;
use serde_json::json;
use tangled::{
    allowed_moves, beta, beta_inv, count_all, count_by_vt, phi, psi, tangled_diagrams,
    vacillating_tableaux, DiagramClass, Move,
};

#[derive(ValueEnum, Clone, Copy)]
pub enum Suite {
    /// Inflation/deflation and the bijection compose to the identity.
    Roundtrip,
    /// Maximal shape height equals the crossing number.
    Theorem2,
    /// k-noncrossing and k-nonnesting diagrams are equinumerous.
    Duality,
    /// Move restrictions map exactly onto matchings, partitions, braids.
    Corollary,
    /// Formula, tableau DP, and exhaustive counts agree.
    Counts,
}

struct Outcome {
    name: String,
    detail: String,
    failure: Option<String>,
}

impl Outcome {
    fn check(
        name: impl Into<String>,
        detail: impl Into<String>,
        failure: Option<String>,
    ) -> Self {
        Outcome {
            name: name.into(),
            detail: detail.into(),
            failure,
        }
    }
}

pub fn run(suite: Suite, n: usize, bound: usize) -> Result<bool> {
    let outcomes = match suite {
        Suite::Roundtrip => roundtrip(n, bound)?,
        Suite::Theorem2 => theorem2(n, bound)?,
        Suite::Duality => duality(n, bound)?,
        Suite::Corollary => corollary(n, bound)?,
        Suite::Counts => counts(n, bound)?,
    };
    let mut all_passed = true;
    for outcome in &outcomes {
        match &outcome.failure {
            None => println!("PASS {} {}", outcome.name, outcome.detail),
            Some(counterexample) => {
                all_passed = false;
                println!(
                    "FAIL {} {} counterexample={}",
                    outcome.name, outcome.detail, counterexample
                );
            }
        }
    }
    Ok(all_passed)
}

fn roundtrip(n: usize, bound: usize) -> Result<Vec<Outcome>> {
    let mut deflate_failure = None;
    let mut phi_psi_failure = None;
    let mut beta_failure = None;
    let mut diagrams = 0usize;
    for diagram in tangled_diagrams(n, bound)? {
        diagrams += 1;
        let inflation = diagram.inflate();
        if deflate_failure.is_none() && inflation.deflate().ok().as_ref() != Some(&diagram) {
            deflate_failure = Some(serde_json::to_string(&diagram)?);
        }
        let back = psi(&inflation).and_then(|v| phi(&v));
        if phi_psi_failure.is_none() && back.ok().as_ref() != Some(&inflation) {
            phi_psi_failure = Some(serde_json::to_string(&diagram)?);
        }
        let via_tableau = beta_inv(&diagram).and_then(|v| beta(&v));
        if beta_failure.is_none() && via_tableau.ok().as_ref() != Some(&diagram) {
            beta_failure = Some(serde_json::to_string(&diagram)?);
        }
    }
    let mut psi_phi_failure = None;
    let mut tableaux = 0usize;
    for tableau in vacillating_tableaux(n, None, &Move::ALL, bound)? {
        tableaux += 1;
        let back = phi(&tableau).and_then(|m| psi(&m));
        if psi_phi_failure.is_none() && back.ok().as_ref() != Some(&tableau) {
            psi_phi_failure = Some(serde_json::to_string(&tableau)?);
        }
    }
    let count_failure = if diagrams == tableaux {
        None
    } else {
        Some(json!({ "diagrams": diagrams, "tableaux": tableaux }).to_string())
    };
    Ok(vec![
        Outcome::check(
            "roundtrip.deflate-inflate",
            format!("n={n} cases={diagrams}"),
            deflate_failure,
        ),
        Outcome::check(
            "roundtrip.phi-after-psi",
            format!("n={n} cases={diagrams}"),
            phi_psi_failure,
        ),
        Outcome::check(
            "roundtrip.beta-after-beta-inv",
            format!("n={n} cases={diagrams}"),
            beta_failure,
        ),
        Outcome::check(
            "roundtrip.psi-after-phi",
            format!("n={n} cases={tableaux}"),
            psi_phi_failure,
        ),
        Outcome::check(
            "roundtrip.set-sizes",
            format!("n={n} diagrams={diagrams} tableaux={tableaux}"),
            count_failure,
        ),
    ])
}

fn theorem2(n: usize, bound: usize) -> Result<Vec<Outcome>> {
    let mut failure = None;
    let mut cases = 0usize;
    for diagram in tangled_diagrams(n, bound)? {
        cases += 1;
        let rows = beta_inv(&diagram)?.max_rows();
        let crossings = diagram.crossing_number();
        if failure.is_none() && rows != crossings {
            failure = Some(
                json!({
                    "diagram": serde_json::to_value(&diagram)?,
                    "max_rows": rows,
                    "crossing_number": crossings,
                })
                .to_string(),
            );
        }
    }
    Ok(vec![Outcome::check(
        "theorem2.rows-equal-crossing-number",
        format!("n={n} cases={cases}"),
        failure,
    )])
}

fn duality(n: usize, bound: usize) -> Result<Vec<Outcome>> {
    let max_k = n + 2;
    let mut noncrossing = vec![0usize; max_k + 1];
    let mut nonnesting = vec![0usize; max_k + 1];
    for diagram in tangled_diagrams(n, bound)? {
        let crossing = diagram.crossing_number();
        let nesting = diagram.nesting_number();
        for k in 2..=max_k {
            if crossing < k {
                noncrossing[k] += 1;
            }
            if nesting < k {
                nonnesting[k] += 1;
            }
        }
    }
    Ok((2..=max_k)
        .map(|k| {
            let failure = if noncrossing[k] == nonnesting[k] {
                None
            } else {
                Some(
                    json!({ "k": k, "noncrossing": noncrossing[k], "nonnesting": nonnesting[k] })
                        .to_string(),
                )
            };
            Outcome::check(
                format!("duality.k={k}"),
                format!("n={n} noncrossing={} nonnesting={}", noncrossing[k], nonnesting[k]),
                failure,
            )
        })
        .collect())
}

fn corollary(n: usize, bound: usize) -> Result<Vec<Outcome>> {
    let classes = [
        ("matching", DiagramClass::Matching),
        ("partition", DiagramClass::Partition),
        ("braid", DiagramClass::Braid),
    ];
    let mut outcomes = Vec::new();
    for (label, class) in classes {
        let moves = allowed_moves(class);
        let restricted: Vec<_> = vacillating_tableaux(n, None, moves, bound)?.collect();
        let in_class: Vec<_> = tangled_diagrams(n, bound)?
            .filter(|d| d.classify().is_in(class))
            .collect();

        let count_failure = if restricted.len() == in_class.len() {
            None
        } else {
            Some(
                json!({ "tableaux": restricted.len(), "diagrams": in_class.len() }).to_string(),
            )
        };
        outcomes.push(Outcome::check(
            format!("corollary.{label}.count"),
            format!("n={n} tableaux={} diagrams={}", restricted.len(), in_class.len()),
            count_failure,
        ));

        let mut image_failure = None;
        for tableau in &restricted {
            let image = beta(tableau)?;
            if !image.classify().is_in(class) {
                image_failure = Some(serde_json::to_string(tableau)?);
                break;
            }
        }
        outcomes.push(Outcome::check(
            format!("corollary.{label}.image"),
            format!("n={n} cases={}", restricted.len()),
            image_failure,
        ));

        let mut move_failure = None;
        for diagram in &in_class {
            if !beta_inv(diagram)?.uses_only(moves) {
                move_failure = Some(serde_json::to_string(diagram)?);
                break;
            }
        }
        outcomes.push(Outcome::check(
            format!("corollary.{label}.moves"),
            format!("n={n} cases={}", in_class.len()),
            move_failure,
        ));
    }
    Ok(outcomes)
}

fn counts(n: usize, bound: usize) -> Result<Vec<Outcome>> {
    let mut outcomes = Vec::new();
    for k in 2..=5 {
        let formula = count_all(k, n);
        let by_dp = count_by_vt(k, n);
        let brute = if n <= bound {
            let mut total = 0usize;
            for diagram in tangled_diagrams(n, bound)? {
                if diagram.crossing_number() < k {
                    total += 1;
                }
            }
            Some(total)
        } else {
            None
        };
        let agree = formula == by_dp
            && brute.is_none_or(|b| tangled::Count::from(b) == formula);
        let detail = match brute {
            Some(b) => format!("n={n} formula={formula} vt-dp={by_dp} brute={b}"),
            None => format!("n={n} formula={formula} vt-dp={by_dp} brute=skipped"),
        };
        let failure = if agree {
            None
        } else {
            Some(
                json!({
                    "k": k,
                    "formula": formula.to_string(),
                    "vt_dp": by_dp.to_string(),
                    "brute": brute,
                })
                .to_string(),
            )
        };
        outcomes.push(Outcome::check(format!("counts.k={k}"), detail, failure));
    }
    Ok(outcomes)
}
