//! Rendering of axiom-check reports: one line per axiom, `PASS` with
//! the number of instantiations or `FAIL` with a counterexample.

use seqthy_core::axioms::AxiomResult;

pub fn format_report(results: &[AxiomResult]) -> String {
    let mut out = String::new();
    for r in results {
        match &r.counterexample {
            None => out.push_str(&format!("{} PASS tuples={}\n", r.id, r.tuples)),
            Some(cx) => out.push_str(&format!("{} FAIL {}\n", r.id, cx)),
        }
    }
    out
}

pub fn all_passed(results: &[AxiomResult]) -> bool {
    results.iter().all(|r| r.passed())
}
