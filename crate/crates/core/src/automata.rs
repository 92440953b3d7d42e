//! Deterministic partial automata over a controllable/uncontrollable event
//! partition, bounded language enumeration and the controllability check.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::symbols::{Event, SymbolTable, Word};
use crate::verdict::{Method, Verdict};

/// Event alphabet Σ split into controllable and uncontrollable events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    events: SymbolTable,
    controllable: Vec<bool>,
}

impl Alphabet {
    /// Builds the alphabet; every event not listed in `controllable` is
    /// uncontrollable.
    pub fn new<I, S, C, T>(events: I, controllable: C) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        C: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let events = SymbolTable::new(events)?;
        let mut flags = vec![false; events.len()];
        for name in controllable {
            let name = name.as_ref();
            let i = events
                .position(name)
                .ok_or_else(|| Error::UnknownEvent(name.to_string()))?;
            flags[i] = true;
        }
        Ok(Alphabet {
            events,
            controllable: flags,
        })
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn events(&self) -> impl Iterator<Item = Event> + '_ {
        (0..self.events.len()).map(Event)
    }

    pub fn controllable(&self) -> impl Iterator<Item = Event> + '_ {
        self.events().filter(|e| self.controllable[e.0])
    }

    pub fn uncontrollable(&self) -> impl Iterator<Item = Event> + '_ {
        self.events().filter(|e| !self.controllable[e.0])
    }

    pub fn is_controllable(&self, e: Event) -> bool {
        self.controllable[e.0]
    }

    pub fn contains(&self, e: Event) -> bool {
        e.0 < self.events.len()
    }

    pub fn event(&self, name: &str) -> Result<Event> {
        self.events
            .position(name)
            .map(Event)
            .ok_or_else(|| Error::UnknownEvent(name.to_string()))
    }

    pub fn name(&self, e: Event) -> &str {
        self.events.name(e.0)
    }

    pub fn names(&self) -> &[String] {
        self.events.names()
    }

    /// Parses a word such as `"abcda"` or `"open close"`. The strings `""`
    /// and `"ε"` denote the empty word.
    pub fn word(&self, text: &str) -> Result<Word> {
        if text.trim() == "ε" {
            return Ok(Word::empty());
        }
        self.events
            .tokenize(text)
            .map(|v| v.into_iter().map(Event).collect())
            .ok_or_else(|| Error::BadWord(text.to_string()))
    }

    pub fn render(&self, w: &Word) -> String {
        self.events.render(w.iter().map(|e| e.0))
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        match w.iter().find(|e| !self.contains(*e)) {
            Some(e) => Err(Error::UnknownEvent(format!("#{}", e.0))),
            None => Ok(()),
        }
    }
}

/// Opaque handle to a state of one automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub(crate) usize);

impl StateId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Deterministic automaton with a partial transition function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    alphabet: Alphabet,
    states: SymbolTable,
    delta: Vec<Option<StateId>>,
    initial: StateId,
}

impl Automaton {
    /// Builds an automaton from named states and `(source, event, target)`
    /// triples. States appearing only in transitions are declared implicitly.
    pub fn new<S: AsRef<str>>(
        alphabet: Alphabet,
        states: &[S],
        initial: &str,
        transitions: &[(S, S, S)],
    ) -> Result<Self> {
        let mut names: Vec<String> = states.iter().map(|s| s.as_ref().to_string()).collect();
        let declared: BTreeSet<&str> = states.iter().map(|s| s.as_ref()).collect();
        if declared.len() != names.len() {
            return Err(Error::InvalidModel("duplicate state name".into()));
        }
        for name in std::iter::once(initial).chain(
            transitions
                .iter()
                .flat_map(|(s, _, t)| [s.as_ref(), t.as_ref()]),
        ) {
            if !names.iter().any(|n| n == name) {
                names.push(name.to_string());
            }
        }
        let states = SymbolTable::new(names)?;
        let n_events = alphabet.len();
        let mut delta: Vec<Option<StateId>> = vec![None; states.len() * n_events];
        for (src, ev, dst) in transitions {
            let s = states.position(src.as_ref()).expect("declared above");
            let d = states.position(dst.as_ref()).expect("declared above");
            let e = alphabet.event(ev.as_ref())?;
            let slot = &mut delta[s * n_events + e.0];
            match slot {
                Some(prev) if prev.0 != d => {
                    return Err(Error::InvalidModel(format!(
                        "nondeterministic transitions from `{}` on `{}`",
                        src.as_ref(),
                        ev.as_ref()
                    )))
                }
                _ => *slot = Some(StateId(d)),
            }
        }
        let initial = StateId(states.position(initial).expect("declared above"));
        Ok(Automaton {
            alphabet,
            states,
            delta,
            initial,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> {
        (0..self.states.len()).map(StateId)
    }

    pub fn state(&self, name: &str) -> Result<StateId> {
        self.states
            .position(name)
            .map(StateId)
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn state_name(&self, s: StateId) -> &str {
        self.states.name(s.0)
    }

    pub fn state_names(&self) -> &[String] {
        self.states.names()
    }

    /// Single transition; `None` when undefined or when `e` is foreign.
    pub fn step(&self, s: StateId, e: Event) -> Option<StateId> {
        if e.0 >= self.alphabet.len() {
            return None;
        }
        self.delta[s.0 * self.alphabet.len() + e.0]
    }

    /// Defined transitions out of `s`, in event order.
    pub fn successors(&self, s: StateId) -> impl Iterator<Item = (Event, StateId)> + '_ {
        self.alphabet
            .events()
            .filter_map(move |e| self.step(s, e).map(|t| (e, t)))
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Event, StateId)> + '_ {
        self.states()
            .flat_map(move |s| self.successors(s).map(move |(e, t)| (s, e, t)))
    }

    pub fn run_from(&self, s: StateId, w: &Word) -> Option<StateId> {
        w.iter().try_fold(s, |s, e| self.step(s, e))
    }

    /// ξ(x₀, w), or `None` when some prefix leaves the transition function.
    pub fn run(&self, w: &Word) -> Result<Option<StateId>> {
        self.alphabet.check_word(w)?;
        Ok(self.run_from(self.initial, w))
    }

    pub fn generates(&self, w: &Word) -> Result<bool> {
        Ok(self.run(w)?.is_some())
    }

    /// Whether `w` is in the generated language.
    pub fn accepts(&self, w: &Word) -> bool {
        self.run_from(self.initial, w).is_some()
    }

    /// States reachable from the initial state.
    pub fn reachable(&self) -> BTreeSet<StateId> {
        let mut seen = BTreeSet::from([self.initial]);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(s) = queue.pop_front() {
            for (_, t) in self.successors(s) {
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    pub(crate) fn ensure_same_alphabet(&self, other: &Automaton) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(
                "plant and specification use different alphabets".into(),
            ));
        }
        Ok(())
    }
}

/// All words of a prefix-closed language up to a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedLanguage {
    pub depth: usize,
    pub words: BTreeSet<Word>,
}

impl BoundedLanguage {
    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_prefix_closed(&self) -> bool {
        self.words
            .iter()
            .all(|w| w.is_empty() || self.words.contains(&w.prefix(w.len() - 1)))
    }
}

/// Words of length at most `depth` generated by `aut`, in length-lex order.
pub fn enumerate_language(aut: &Automaton, depth: usize) -> BoundedLanguage {
    let mut words = BTreeSet::new();
    let mut frontier = vec![(Word::empty(), aut.initial())];
    for len in 0..=depth {
        let mut next = Vec::new();
        for (w, s) in frontier {
            if len < depth {
                for (e, t) in aut.successors(s) {
                    next.push((w.with(e), t));
                }
            }
            words.insert(w);
        }
        frontier = next;
    }
    BoundedLanguage { depth, words }
}

/// A word of K that can be continued by an uncontrollable event inside L but
/// not inside K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControllabilityWitness {
    pub word: Word,
    pub event: Event,
}

/// Breadth-first search over the synchronized pairs `(η(r₀,w), ξ(x₀,w))`.
/// Calls `visit` on each pair with a shortest word reaching it; stops at the
/// first `Some`.
fn search_pairs<T>(
    plant: &Automaton,
    spec: &Automaton,
    mut visit: impl FnMut(StateId, StateId, &Word) -> Option<T>,
) -> Option<T> {
    let start = (spec.initial(), plant.initial());
    let mut words: HashMap<(StateId, StateId), Word> = HashMap::from([(start, Word::empty())]);
    let mut queue = VecDeque::from([start]);
    while let Some((r, x)) = queue.pop_front() {
        let w = words[&(r, x)].clone();
        if let Some(found) = visit(r, x, &w) {
            return Some(found);
        }
        for (e, r2) in spec.successors(r) {
            if let Some(x2) = plant.step(x, e) {
                words.entry((r2, x2)).or_insert_with(|| {
                    queue.push_back((r2, x2));
                    w.with(e)
                });
            }
        }
    }
    None
}

/// Decides `K Σ_u ∩ L ⊂ K` exactly, with `K = L(spec)` and `L = L(plant)`.
pub fn check_controllability(
    plant: &Automaton,
    spec: &Automaton,
) -> Result<Verdict<ControllabilityWitness>> {
    plant.ensure_same_alphabet(spec)?;
    let alphabet = plant.alphabet();
    let witness = search_pairs(plant, spec, |r, x, w| {
        alphabet
            .uncontrollable()
            .find(|&e| plant.step(x, e).is_some() && spec.step(r, e).is_none())
            .map(|event| ControllabilityWitness {
                word: w.clone(),
                event,
            })
    });
    Ok(match witness {
        Some(w) => Verdict::fails(w, Method::Synchronized),
        None => Verdict::holds(Method::Synchronized),
    })
}

/// Shortest word of `L(spec)` not generated by `plant`, if any.
pub fn sublanguage_counterexample(plant: &Automaton, spec: &Automaton) -> Result<Option<Word>> {
    plant.ensure_same_alphabet(spec)?;
    Ok(search_pairs(plant, spec, |r, x, w| {
        spec.successors(r)
            .find(|&(e, _)| plant.step(x, e).is_none())
            .map(|(e, _)| w.with(e))
    }))
}

/// True iff every word of `L(spec)` up to length `depth` is generated by
/// `plant`. Since the counterexample search is breadth-first, this agrees with
/// enumerating `L(spec)` to `depth`.
pub fn check_sublanguage(plant: &Automaton, spec: &Automaton, depth: usize) -> Result<bool> {
    Ok(sublanguage_counterexample(plant, spec)?.is_none_or(|w| w.len() > depth))
}
