//! Seeded random problem generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use desguard::observation::{
    AttackModel, InsertionRemovalSet, ObservationMap, ReplacementRemovalMap,
};
use desguard::{Alphabet, Automaton, NamedAttack, OutputSymbol, Problem};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EVENT_NAMES: [&str; 4] = ["a", "b", "c", "d"];
pub const OUTPUT_NAMES: [&str; 3] = ["x", "y", "z"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttackFamily {
    /// Identity and replacement-removal attacks.
    Finite,
    /// Insertion-removal attacks only.
    InsertionRemoval,
}

/// A random alphabet, observation map, plant and controllable
/// specification with at most 5 states each, over at most 4 events and 3
/// output symbols, together with 1 to 3 attacks of the given family.
///
/// The specification unfolds the plant: every specification state is
/// labelled with a plant state, uncontrollable plant moves are always kept,
/// controllable ones are kept at random. This makes `K ⊂ L` controllable
/// while letting several specification states share a plant state.
pub fn random_problem(rng: &mut impl Rng, family: AttackFamily) -> Problem {
    loop {
        if let Some(p) = try_random_problem(rng, family) {
            return p;
        }
    }
}

fn try_random_problem(rng: &mut impl Rng, family: AttackFamily) -> Option<Problem> {
    let n_events = rng.gen_range(2..=4);
    let events = &EVENT_NAMES[..n_events];
    let controllable: Vec<&str> = events
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    let alphabet = Alphabet::new(events.iter().copied(), controllable).ok()?;

    let n_out = rng.gen_range(1..=3);
    let outputs = &OUTPUT_NAMES[..n_out];
    let table: Vec<(&str, &str)> = events
        .iter()
        .map(|&e| {
            let t = if rng.gen_bool(0.25) {
                ""
            } else {
                *outputs.choose(rng).unwrap()
            };
            (e, t)
        })
        .collect();
    let observation = ObservationMap::new(&alphabet, outputs, &table).ok()?;

    let n_plant = rng.gen_range(1..=5);
    let plant_names: Vec<String> = (0..n_plant).map(|i| format!("x{i}")).collect();
    let mut plant_edges = Vec::new();
    let mut plant_delta = vec![vec![None; n_events]; n_plant];
    for x in 0..n_plant {
        for e in 0..n_events {
            if rng.gen_bool(0.45) {
                let t = rng.gen_range(0..n_plant);
                plant_delta[x][e] = Some(t);
                plant_edges.push((
                    plant_names[x].clone(),
                    events[e].to_string(),
                    plant_names[t].clone(),
                ));
            }
        }
    }
    let plant = Automaton::new(alphabet.clone(), &plant_names, "x0", &plant_edges).ok()?;

    // Unfold: spec state i is labelled with plant state label[i].
    let max_spec = 5;
    let mut label = vec![0usize];
    let mut spec_edges = Vec::new();
    let mut i = 0;
    while i < label.len() {
        let x = label[i];
        for e in 0..n_events {
            let Some(x2) = plant_delta[x][e] else {
                continue;
            };
            let is_c = alphabet.is_controllable(alphabet.event(events[e]).unwrap());
            if is_c && rng.gen_bool(0.35) {
                continue;
            }
            let same: Vec<usize> = (0..label.len()).filter(|&j| label[j] == x2).collect();
            let target = if same.is_empty() || (label.len() < max_spec && rng.gen_bool(0.3)) {
                if label.len() >= max_spec {
                    if is_c {
                        continue;
                    }
                    return None;
                }
                label.push(x2);
                label.len() - 1
            } else {
                *same.choose(rng).unwrap()
            };
            spec_edges.push((format!("r{i}"), events[e].to_string(), format!("r{target}")));
        }
        i += 1;
    }
    let spec_names: Vec<String> = (0..label.len()).map(|i| format!("r{i}")).collect();
    let spec = Automaton::new(alphabet.clone(), &spec_names, "r0", &spec_edges).ok()?;

    let n_attacks = rng.gen_range(1..=3);
    let attacks = (0..n_attacks)
        .map(|k| NamedAttack {
            name: format!("A{}", k + 1),
            model: random_attack(rng, &observation, family),
        })
        .collect();
    Some(Problem {
        alphabet,
        observation,
        plant,
        spec,
        attacks,
    })
}

pub fn random_attack(rng: &mut impl Rng, p: &ObservationMap, family: AttackFamily) -> AttackModel {
    match family {
        AttackFamily::Finite if rng.gen_bool(0.15) => AttackModel::Identity,
        AttackFamily::Finite => AttackModel::ReplacementRemoval(random_replacement(rng, p)),
        AttackFamily::InsertionRemoval => {
            let alpha: Vec<OutputSymbol> = p.outputs().filter(|_| rng.gen_bool(0.4)).collect();
            AttackModel::InsertionRemoval(InsertionRemovalSet::new(p, alpha).unwrap())
        }
    }
}

/// φ with one or two images per symbol, each a symbol or ε.
pub fn random_replacement(rng: &mut impl Rng, p: &ObservationMap) -> ReplacementRemovalMap {
    let mut pool: Vec<Option<OutputSymbol>> = p.outputs().map(Some).collect();
    pool.push(None);
    let phi = p
        .outputs()
        .map(|t| {
            let k = rng.gen_range(1..=2);
            let mut set = BTreeSet::new();
            if rng.gen_bool(0.5) {
                set.insert(Some(t));
            }
            while set.len() < k {
                set.insert(*pool.choose(rng).unwrap());
            }
            set
        })
        .collect();
    ReplacementRemovalMap::new(p, phi).unwrap()
}
