//! Exhaustive bounded search over specification words.
//!
//! These routines enumerate concrete words of `K = L(G_K)` up to a length
//! bound together with the output words they can produce, and serve as the
//! reference implementations the automata-based procedures are checked
//! against. Words are deduplicated by the information their future depends
//! on (current states plus produced output, or plus alignment column), keeping
//! the shortest representative; breadth-first order makes this exact for any
//! length bound.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::automata::{Automaton, StateId};
use crate::observation::{AlignmentColumn, AttackModel, EventImages, ObservationMap};
use crate::symbols::{OutputWord, Word};

/// A specification word together with the states it reaches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reached {
    pub word: Word,
    /// `ξ(x₀, w)`.
    pub plant: StateId,
    /// `η(r₀, w)`.
    pub spec: StateId,
}

/// For every output word `y` with `|y| ≤ max_output`, the distinct
/// `(plant, spec)` state pairs reached by words `w ∈ K`, `|w| ≤ depth`, that
/// can emit `y` when event `e` emits one element of `images.of(e)`.
///
/// Words of `K` that leave the plant (only possible when `K ⊄ L`) are skipped.
pub fn emitted_outputs(
    plant: &Automaton,
    spec: &Automaton,
    images: &EventImages,
    depth: usize,
    max_output: usize,
) -> BTreeMap<OutputWord, Vec<Reached>> {
    type Key = (OutputWord, StateId, StateId);
    let mut seen: HashMap<Key, Word> = HashMap::new();
    let start: Key = (OutputWord::empty(), plant.initial(), spec.initial());
    seen.insert(start.clone(), Word::empty());
    let mut frontier = vec![start];
    for _ in 0..depth {
        let mut next = Vec::new();
        for key in frontier {
            let (y, x, r) = &key;
            let w = seen[&key].clone();
            for (e, r2) in spec.successors(*r) {
                let Some(x2) = plant.step(*x, e) else {
                    continue;
                };
                for o in images.of(e) {
                    let y2 = match o {
                        Some(t) if y.len() < max_output => y.with(*t),
                        Some(_) => continue,
                        None => y.clone(),
                    };
                    let k2 = (y2, x2, r2);
                    if !seen.contains_key(&k2) {
                        seen.insert(k2.clone(), w.with(e));
                        next.push(k2);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: BTreeMap<OutputWord, Vec<Reached>> = BTreeMap::new();
    let mut entries: Vec<(Key, Word)> = seen.into_iter().collect();
    entries.sort_by(|a, b| {
        a.1.cmp(&b.1)
            .then_with(|| (a.0 .1, a.0 .2).cmp(&(b.0 .1, b.0 .2)))
    });
    for ((y, x, r), word) in entries {
        out.entry(y).or_default().push(Reached {
            word,
            plant: x,
            spec: r,
        });
    }
    out
}

/// Shortest words `w ∈ K`, `|w| ≤ depth`, with `y ∈ AP(w)`, one per reached
/// specification state. `a` must have finite images.
pub fn words_producing(
    spec: &Automaton,
    a: &AttackModel,
    p: &ObservationMap,
    y: &OutputWord,
    depth: usize,
) -> BTreeMap<StateId, Word> {
    let images = a.event_images(p).expect("finite-image attack");
    let mut found: BTreeMap<StateId, Word> = BTreeMap::new();
    let start = (spec.initial(), AlignmentColumn::start(y));
    let mut seen: HashSet<(StateId, AlignmentColumn)> = HashSet::from([start.clone()]);
    let mut frontier = vec![(start, Word::empty())];
    for len in 0..=depth {
        let mut next = Vec::new();
        for ((r, col), w) in frontier {
            if col.complete() {
                found.entry(r).or_insert_with(|| w.clone());
            }
            if len == depth {
                continue;
            }
            for (e, r2) in spec.successors(r) {
                let col2 = col.advance(y, images.of(e));
                if col2.is_dead() {
                    continue;
                }
                let key = (r2, col2);
                if seen.insert(key.clone()) {
                    next.push((key, w.with(e)));
                }
            }
        }
        frontier = next;
    }
    found
}

/// `{η(r₀, w) : w ∈ K, |w| ≤ depth, y ∈ AP(w)}`.
pub fn brute_force_estimate(
    spec: &Automaton,
    a: &AttackModel,
    p: &ObservationMap,
    y: &OutputWord,
    depth: usize,
) -> BTreeSet<StateId> {
    words_producing(spec, a, p, y, depth).into_keys().collect()
}

/// `{y : |y| ≤ max_output, ∃w ∈ K, |w| ≤ depth, y ∈ AP(w)}`.
pub fn brute_force_outputs(
    spec: &Automaton,
    a: &AttackModel,
    p: &ObservationMap,
    max_output: usize,
    depth: usize,
) -> BTreeSet<OutputWord> {
    let images = a.event_images(p).expect("finite-image attack");
    // The plant plays no role here; the specification stands in for it.
    emitted_outputs(spec, spec, &images, depth, max_output)
        .into_keys()
        .collect()
}
