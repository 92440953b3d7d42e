//! State estimation under a replacement-removal attack.
//!
//! The observer is the subset construction over the specification automaton
//! in which an event emitting output `t` under `AP` moves the estimate on
//! `t`, and events whose attacked output may be ε are folded into the
//! unobservable reach.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::automata::{Automaton, StateId};
use crate::error::{Error, Result};
use crate::observation::{
    compose_removal_observation, epsilon_erasable, r_not_alpha, AttackModel, EventImages,
    InsertionRemovalSet, ObservationMap,
};
use crate::symbols::{OutputSymbol, OutputWord};

/// A canonical (sorted) set of specification states.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ObserverState(BTreeSet<StateId>);

impl ObserverState {
    pub fn new(states: impl IntoIterator<Item = StateId>) -> Self {
        ObserverState(states.into_iter().collect())
    }

    pub fn states(&self) -> &BTreeSet<StateId> {
        &self.0
    }

    pub fn contains(&self, s: StateId) -> bool {
        self.0.contains(&s)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Brace-set label such as `{x2,x3}`.
    pub fn label(&self, spec: &Automaton) -> String {
        let names: Vec<&str> = self.0.iter().map(|s| spec.state_name(*s)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Display for ObserverState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|s| s.index().to_string()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// `UR_A(B)`: states reachable from `B` through events whose attacked
/// observation can be empty.
pub fn unobservable_reach(
    spec: &Automaton,
    a: &AttackModel,
    p: &ObservationMap,
    from: &BTreeSet<StateId>,
) -> BTreeSet<StateId> {
    let erasable: Vec<bool> = spec
        .alphabet()
        .events()
        .map(|e| epsilon_erasable(a, p, e))
        .collect();
    closure(spec, &erasable, from.iter().copied())
}

fn closure(
    spec: &Automaton,
    erasable: &[bool],
    from: impl IntoIterator<Item = StateId>,
) -> BTreeSet<StateId> {
    let mut seen: BTreeSet<StateId> = from.into_iter().collect();
    let mut stack: Vec<StateId> = seen.iter().copied().collect();
    while let Some(r) = stack.pop() {
        for (e, r2) in spec.successors(r) {
            if erasable[e.index()] && seen.insert(r2) {
                stack.push(r2);
            }
        }
    }
    seen
}

/// Deterministic observer `Obs_A(G_K)` over the output alphabet.
#[derive(Debug, Clone)]
pub struct Observer {
    spec: Automaton,
    attack: AttackModel,
    observation: ObservationMap,
    states: Vec<ObserverState>,
    index: HashMap<ObserverState, usize>,
    delta: Vec<Vec<Option<usize>>>,
}

impl Observer {
    pub fn spec(&self) -> &Automaton {
        &self.spec
    }

    pub fn attack(&self) -> &AttackModel {
        &self.attack
    }

    pub fn observation(&self) -> &ObservationMap {
        &self.observation
    }

    /// Observer states in discovery order; index 0 is the initial state.
    pub fn states(&self) -> &[ObserverState] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn initial(&self) -> &ObserverState {
        &self.states[0]
    }

    pub fn index_of(&self, s: &ObserverState) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn step_index(&self, i: usize, t: OutputSymbol) -> Option<usize> {
        self.delta[i].get(t.index()).copied().flatten()
    }

    /// Index of the state reached on `y` from the initial state.
    pub fn run(&self, y: &OutputWord) -> Option<usize> {
        y.iter().try_fold(0, |i, t| self.step_index(i, t))
    }

    /// Estimate after `y`, or `None` when `y` is not in the observer language.
    pub fn estimate(&self, y: &OutputWord) -> Option<&ObserverState> {
        self.run(y).map(|i| &self.states[i])
    }

    pub fn accepts(&self, y: &OutputWord) -> bool {
        self.run(y).is_some()
    }

    /// Defined transitions `(source, symbol, target)` by state index.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, OutputSymbol, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(t, d)| d.map(|j| (i, OutputSymbol(t), j)))
        })
    }
}

/// Subset construction for a finite-image attack.
pub fn build_observer(spec: &Automaton, a: &AttackModel, p: &ObservationMap) -> Result<Observer> {
    let images: EventImages = a.event_images(p).map_err(|_| {
        Error::Unsupported(
            "observers are built for identity and replacement-removal attacks; \
             use build_removal_observer for insertion-removal attacks"
                .into(),
        )
    })?;
    let alphabet = spec.alphabet();
    let erasable: Vec<bool> = alphabet.events().map(|e| images.erasable(e)).collect();
    let initial = ObserverState(closure(spec, &erasable, [spec.initial()]));

    let mut states = vec![initial.clone()];
    let mut index = HashMap::from([(initial, 0usize)]);
    let mut delta: Vec<Vec<Option<usize>>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut row = vec![None; p.num_outputs()];
        for t in p.outputs() {
            let targets: Vec<StateId> = states[i]
                .0
                .iter()
                .flat_map(|&r| spec.successors(r))
                .filter(|&(e, _)| images.emits(e, t))
                .map(|(_, r2)| r2)
                .collect();
            if targets.is_empty() {
                continue;
            }
            let target = ObserverState(closure(spec, &erasable, targets));
            let j = *index.entry(target.clone()).or_insert_with(|| {
                states.push(target);
                queue.push_back(states.len() - 1);
                states.len() - 1
            });
            row[t.index()] = Some(j);
        }
        // Rows are filled in discovery order, so row i lands at index i.
        debug_assert_eq!(delta.len(), i);
        delta.push(row);
    }
    Ok(Observer {
        spec: spec.clone(),
        attack: a.clone(),
        observation: p.clone(),
        states,
        index,
        delta,
    })
}

/// `η_obs,A(s, t)`.
pub fn observer_step(
    obs: &Observer,
    s: &ObserverState,
    t: OutputSymbol,
) -> Result<Option<ObserverState>> {
    let i = obs
        .index_of(s)
        .ok_or_else(|| Error::UnknownState(s.label(&obs.spec)))?;
    obs.observation.check_outputs([t])?;
    Ok(obs.step_index(i, t).map(|j| obs.states[j].clone()))
}

/// Observer for an insertion-removal attack `A_α`, built as the conventional
/// observer under `R_¬α ∘ P`. Feed it `R_¬α(y)` rather than `y`; see
/// [`removal_estimate`].
pub fn build_removal_observer(
    spec: &Automaton,
    alpha: &InsertionRemovalSet,
    p: &ObservationMap,
) -> Observer {
    let q = compose_removal_observation(alpha, p);
    let mut obs =
        build_observer(spec, &AttackModel::Identity, &q).expect("identity has finite images");
    obs.attack = AttackModel::InsertionRemoval(alpha.clone());
    obs
}

/// Estimate of a removal observer after the corrupted output `y`.
pub fn removal_estimate<'a>(
    obs: &'a Observer,
    alpha: &InsertionRemovalSet,
    y: &OutputWord,
) -> Option<&'a ObserverState> {
    obs.estimate(&r_not_alpha(alpha, y))
}
