//! The observer-bank supervisor.
//!
//! One observer runs per hypothesized attack. An observer whose transition
//! is undefined on the received symbol has seen an output its attack cannot
//! produce from `K`; it is marked dead for the rest of the run and
//! contributes only the uncontrollable events. The control decision is the
//! union over observers of the events some estimated state can perform.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::automata::Automaton;
use crate::bounded::words_producing;
use crate::error::{Error, Result};
use crate::observation::{AttackModel, ObservationMap};
use crate::observer::{build_observer, Observer, ObserverState};
use crate::symbols::{Event, OutputSymbol, OutputWord};

/// Events enabled by the supervisor after some output history.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ControlDecision {
    pub enabled: BTreeSet<Event>,
}

impl ControlDecision {
    pub fn allows(&self, e: Event) -> bool {
        self.enabled.contains(&e)
    }
}

/// `Ψ(s)`: the uncontrollable events plus every controllable event some
/// state of `s` can perform in the specification.
pub fn psi(spec: &Automaton, s: &ObserverState) -> BTreeSet<Event> {
    let alphabet = spec.alphabet();
    let mut out: BTreeSet<Event> = alphabet.uncontrollable().collect();
    out.extend(
        alphabet
            .controllable()
            .filter(|&e| s.states().iter().any(|&r| spec.step(r, e).is_some())),
    );
    out
}

/// Offline part of the supervisor: the observers and their `Ψ` tables.
#[derive(Debug, Clone)]
pub struct Supervisor {
    observers: Vec<Observer>,
    psi: Vec<Vec<BTreeSet<Event>>>,
    uncontrollable: BTreeSet<Event>,
}

/// Per-observer current state index; `None` once the observer is dead.
pub type BankConfig = Vec<Option<usize>>;

impl Supervisor {
    pub fn new(spec: &Automaton, p: &ObservationMap, attacks: &[AttackModel]) -> Result<Self> {
        let observers = attacks
            .iter()
            .map(|a| build_observer(spec, a, p))
            .collect::<Result<Vec<_>>>()?;
        let psi = observers
            .iter()
            .map(|o| o.states().iter().map(|s| psi(spec, s)).collect())
            .collect();
        Ok(Supervisor {
            observers,
            psi,
            uncontrollable: spec.alphabet().uncontrollable().collect(),
        })
    }

    pub fn observers(&self) -> &[Observer] {
        &self.observers
    }

    /// `Ψ` of observer `i` at its state `s`.
    pub fn psi_of(&self, i: usize, s: usize) -> &BTreeSet<Event> {
        &self.psi[i][s]
    }

    pub fn initial_config(&self) -> BankConfig {
        vec![Some(0); self.observers.len()]
    }

    pub fn step_config(&self, config: &[Option<usize>], t: OutputSymbol) -> BankConfig {
        config
            .iter()
            .zip(&self.observers)
            .map(|(c, obs)| c.and_then(|i| obs.step_index(i, t)))
            .collect()
    }

    pub fn decision(&self, config: &[Option<usize>]) -> ControlDecision {
        let mut enabled = self.uncontrollable.clone();
        for (i, c) in config.iter().enumerate() {
            if let Some(s) = c {
                enabled.extend(self.psi[i][*s].iter().copied());
            }
        }
        ControlDecision { enabled }
    }

    /// A fresh bank that has received nothing yet.
    pub fn bank(self: &Arc<Self>) -> SupervisorBank {
        SupervisorBank {
            supervisor: Arc::clone(self),
            current: self.initial_config(),
            history: OutputWord::empty(),
        }
    }
}

/// Online state of the supervisor: one current observer state per attack.
#[derive(Debug, Clone)]
pub struct SupervisorBank {
    supervisor: Arc<Supervisor>,
    current: BankConfig,
    history: OutputWord,
}

impl SupervisorBank {
    pub fn new(spec: &Automaton, p: &ObservationMap, attacks: &[AttackModel]) -> Result<Self> {
        Ok(Arc::new(Supervisor::new(spec, p, attacks)?).bank())
    }

    pub fn supervisor(&self) -> &Supervisor {
        &self.supervisor
    }

    pub fn config(&self) -> &[Option<usize>] {
        &self.current
    }

    pub fn history(&self) -> &OutputWord {
        &self.history
    }

    pub fn is_alive(&self, i: usize) -> bool {
        self.current[i].is_some()
    }

    pub fn alive(&self) -> Vec<bool> {
        self.current.iter().map(Option::is_some).collect()
    }

    /// Current estimate of observer `i`, if it is alive.
    pub fn estimate(&self, i: usize) -> Option<&ObserverState> {
        self.current[i].map(|s| &self.supervisor.observers[i].states()[s])
    }

    /// Feeds a whole output word.
    pub fn feed_all(&self, y: &OutputWord) -> SupervisorBank {
        y.iter().fold(self.clone(), |b, t| supervisor_feed(&b, t))
    }
}

/// `f(y) = ⋃_A Φ_A(y)` for the history the bank has received.
pub fn supervisor_decision(bank: &SupervisorBank) -> ControlDecision {
    bank.supervisor.decision(&bank.current)
}

/// Steps every live observer on `t`; an undefined step kills the observer.
pub fn supervisor_feed(bank: &SupervisorBank, t: OutputSymbol) -> SupervisorBank {
    SupervisorBank {
        supervisor: Arc::clone(&bank.supervisor),
        current: bank.supervisor.step_config(&bank.current, t),
        history: bank.history.with(t),
    }
}

/// `f(y) = Σ_u ∪ {σ ∈ Σ_c : ∃w ∈ K, |w| ≤ depth, ∃A, y ∈ AP(w), wσ ∈ K}`,
/// evaluated by bounded search over specification words.
pub fn brute_force_supervisor(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
    y: &OutputWord,
    depth: usize,
) -> Result<ControlDecision> {
    plant.ensure_same_alphabet(spec)?;
    if attacks.iter().any(AttackModel::is_insertion_removal) {
        return Err(Error::Unsupported(
            "bounded supervisor evaluation needs finite-image attacks".into(),
        ));
    }
    let alphabet = spec.alphabet();
    let mut enabled: BTreeSet<Event> = alphabet.uncontrollable().collect();
    for a in attacks {
        for r in words_producing(spec, a, p, y, depth).into_keys() {
            enabled.extend(
                alphabet
                    .controllable()
                    .filter(|&e| spec.step(r, e).is_some()),
            );
        }
    }
    Ok(ControlDecision { enabled })
}
