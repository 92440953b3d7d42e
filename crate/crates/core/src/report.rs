//! Human-readable witness reports.

use std::fmt;

use serde::Serialize;

use crate::automata::ControllabilityWitness;
use crate::error::{Error, Result};
use crate::observability::{validate_witness, ObservabilityWitness};
use crate::observation::common_output;
use crate::problem::Problem;

/// A violation of controllability or observability, rendered with names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum WitnessReport {
    NotControllable {
        /// `w ∈ K` with `wσ ∈ L ∖ K`.
        w: String,
        event: String,
    },
    NotObservable {
        /// `wσ ∈ K`.
        w: String,
        /// `w′σ ∈ L ∖ K`.
        w_prime: String,
        event: String,
        attack: String,
        attack_prime: String,
        /// An output in `AP(w) ∩ A′P(w′)`.
        #[serde(skip_serializing_if = "Option::is_none")]
        output: Option<String>,
    },
}

impl WitnessReport {
    /// Renders a controllability witness after re-checking it.
    pub fn controllability(problem: &Problem, wit: &ControllabilityWitness) -> Result<Self> {
        let ws = wit.word.with(wit.event);
        let ok = problem.spec.accepts(&wit.word)
            && !problem.alphabet.is_controllable(wit.event)
            && problem.plant.accepts(&ws)
            && !problem.spec.accepts(&ws);
        if !ok {
            return Err(Error::InvalidModel(
                "controllability witness does not re-validate".into(),
            ));
        }
        Ok(WitnessReport::NotControllable {
            w: problem.alphabet.render(&wit.word),
            event: problem.alphabet.name(wit.event).to_string(),
        })
    }

    /// Renders an observability witness after re-checking it against the
    /// definition; `attacks` are indices into `problem.attacks`.
    pub fn observability(problem: &Problem, wit: &ObservabilityWitness) -> Result<Self> {
        let models = problem.attack_models();
        if !validate_witness(
            &problem.plant,
            &problem.spec,
            &problem.observation,
            &models,
            wit,
        ) {
            return Err(Error::InvalidModel(
                "observability witness does not re-validate".into(),
            ));
        }
        let p = &problem.observation;
        let output = common_output(
            &models[wit.attack],
            &models[wit.attack_prime],
            p,
            &wit.w,
            &wit.w_prime,
        )
        .map(|y| p.render(&y));
        Ok(WitnessReport::NotObservable {
            w: problem.alphabet.render(&wit.w),
            w_prime: problem.alphabet.render(&wit.w_prime),
            event: problem.alphabet.name(wit.event).to_string(),
            attack: problem.attacks[wit.attack].name.clone(),
            attack_prime: problem.attacks[wit.attack_prime].name.clone(),
            output,
        })
    }
}

impl fmt::Display for WitnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessReport::NotControllable { w, event } => {
                writeln!(f, "verdict: not controllable")?;
                writeln!(f, "w: {w}")?;
                writeln!(f, "event: {event}")
            }
            WitnessReport::NotObservable {
                w,
                w_prime,
                event,
                attack,
                attack_prime,
                output,
            } => {
                writeln!(f, "verdict: not observable")?;
                writeln!(f, "w: {w}")?;
                writeln!(f, "w': {w_prime}")?;
                writeln!(f, "event: {event}")?;
                writeln!(f, "attack on w: {attack}")?;
                writeln!(f, "attack on w': {attack_prime}")?;
                if let Some(y) = output {
                    writeln!(f, "shared output: {y}")?;
                }
                Ok(())
            }
        }
    }
}
