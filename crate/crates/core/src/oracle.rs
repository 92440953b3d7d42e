//! Cross-checks of the automata constructions against bounded search.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::automata::Automaton;
use crate::bounded::{brute_force_estimate, brute_force_outputs};
use crate::error::Result;
use crate::observability::{
    brute_force_observability, check_observability, default_depth, validate_witness, Strategy,
    DEFAULT_DEPTH_CAP,
};
use crate::observation::{AttackModel, ObservationMap};
use crate::observer::build_observer;
use crate::problem::Problem;
use crate::supervisor::{brute_force_supervisor, Supervisor};
use crate::symbols::OutputWord;

/// Outcome of one cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(OracleCheck {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Every output word of length at most `n`, shortest first.
pub fn all_output_words(p: &ObservationMap, n: usize) -> Vec<OutputWord> {
    let mut out = vec![OutputWord::empty()];
    let mut layer = vec![OutputWord::empty()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|y| p.outputs().map(move |t| y.with(t)))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Specification depth that suffices for outputs of length `n`: between two
/// emitted symbols a shortest producing word repeats no specification state.
pub fn estimate_depth(spec: &Automaton, n: usize) -> usize {
    (n + 1) * spec.num_states()
}

/// Observer estimates and accepted outputs against bounded enumeration, for
/// outputs of length at most `n`. Returns a description of the first
/// mismatch.
pub fn check_observer_against_brute_force(
    spec: &Automaton,
    a: &AttackModel,
    p: &ObservationMap,
    n: usize,
) -> Result<Option<String>> {
    let obs = build_observer(spec, a, p)?;
    let depth = estimate_depth(spec, n);
    let mut accepted = BTreeSet::new();
    for y in all_output_words(p, n) {
        let brute = brute_force_estimate(spec, a, p, &y, depth);
        match obs.estimate(&y) {
            Some(est) => {
                accepted.insert(y.clone());
                if est.states() != &brute {
                    return Ok(Some(format!(
                        "estimate after `{}`: observer {} vs enumeration {:?}",
                        p.render(&y),
                        est.label(spec),
                        brute
                            .iter()
                            .map(|s| spec.state_name(*s))
                            .collect::<Vec<_>>()
                    )));
                }
            }
            None if !brute.is_empty() => {
                return Ok(Some(format!(
                    "observer rejects producible `{}`",
                    p.render(&y)
                )));
            }
            None => {}
        }
    }
    if accepted != brute_force_outputs(spec, a, p, n, depth) {
        return Ok(Some(
            "accepted outputs differ from enumerated outputs".into(),
        ));
    }
    Ok(None)
}

/// Bank decisions against the direct formula for every output of length at
/// most `n`.
pub fn check_supervisor_against_brute_force(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
    n: usize,
) -> Result<Option<String>> {
    let sup = Arc::new(Supervisor::new(spec, p, attacks)?);
    let depth = estimate_depth(spec, n);
    for y in all_output_words(p, n) {
        let bank = sup.bank().feed_all(&y);
        let direct = brute_force_supervisor(plant, spec, p, attacks, &y, depth)?;
        if crate::supervisor::supervisor_decision(&bank) != direct {
            return Ok(Some(format!("decision after `{}` differs", p.render(&y))));
        }
    }
    Ok(None)
}

/// Runs every applicable cross-check on `problem`. `depth` bounds the
/// brute-force observability search (default `2·|R|²·|X|` capped at 10);
/// `n` bounds output lengths.
pub fn run_oracles(problem: &Problem, depth: Option<usize>, n: usize) -> Result<OracleReport> {
    let Problem {
        plant,
        spec,
        observation: p,
        ..
    } = problem;
    let attacks = problem.attack_models();
    let depth = depth.unwrap_or_else(|| default_depth(plant, spec, DEFAULT_DEPTH_CAP));
    let mut report = OracleReport::default();

    let fast = check_observability(plant, spec, p, &attacks, Strategy::Auto, depth)?;
    let brute = brute_force_observability(plant, spec, p, &attacks, depth)?;
    report.push(
        "observability verdict",
        fast.is_holds() == brute.is_holds(),
        format!(
            "{}: {}, brute force (depth {depth}): {}",
            fast.method,
            verdict_word(fast.is_holds()),
            verdict_word(brute.is_holds())
        ),
    );
    for (label, v) in [("automaton", &fast), ("brute-force", &brute)] {
        if let Some(w) = &v.witness {
            report.push(
                format!("{label} witness re-validates"),
                validate_witness(plant, spec, p, &attacks, w),
                "",
            );
        }
    }

    if attacks.iter().any(AttackModel::is_insertion_removal) {
        return Ok(report);
    }
    for (i, a) in attacks.iter().enumerate() {
        let name = &problem.attacks[i].name;
        let m = check_observer_against_brute_force(spec, a, p, n)?;
        report.push(
            format!("observer {name} estimates (outputs ≤ {n})"),
            m.is_none(),
            m.unwrap_or_default(),
        );
    }
    let m = check_supervisor_against_brute_force(plant, spec, p, &attacks, n)?;
    report.push(
        format!("supervisor decisions (outputs ≤ {n})"),
        m.is_none(),
        m.unwrap_or_default(),
    );
    Ok(report)
}

fn verdict_word(holds: bool) -> &'static str {
    if holds {
        "observable"
    } else {
        "not observable"
    }
}
