//! Bounded computation of the closed-loop languages.
//!
//! For a fixed supervisor `f` and an actual attack `A`, `L^max` keeps `wσ`
//! when some corrupted history `y ∈ AP(w)` makes `f` enable `σ`, and `L^min`
//! keeps it when every such history does. Because `f(y)` depends on `y` only
//! through the bank configuration, each word carries the set of
//! configurations its corrupted histories can lead to rather than the
//! histories themselves.

use std::collections::BTreeSet;
use std::fmt;

use crate::automata::{check_controllability, enumerate_language, Automaton, BoundedLanguage};
use crate::error::{Error, Result};
use crate::observability::{
    check_observability, ObservabilityWitness, Strategy, DEFAULT_DEPTH_CAP,
};
use crate::observation::{AttackModel, EventImages, ObservationMap};
use crate::supervisor::{BankConfig, Supervisor};
use crate::symbols::{Event, Word};

/// Bank configurations reachable over the corrupted histories of one word.
pub type BankConfigSet = BTreeSet<BankConfig>;

/// `L^max` and `L^min` for one actual attack, truncated at `depth`.
#[derive(Debug, Clone)]
pub struct LoopResult {
    pub lmax: BoundedLanguage,
    pub lmin: BoundedLanguage,
    /// Index of the actual attack in the hypothesized set.
    pub attack: usize,
    pub depth: usize,
}

impl LoopResult {
    pub fn coincide(&self) -> bool {
        self.lmax.words == self.lmin.words
    }
}

/// Configurations after appending `e` to every history in `configs`.
pub fn advance_configs(
    sup: &Supervisor,
    images: &EventImages,
    configs: &BankConfigSet,
    e: Event,
) -> BankConfigSet {
    let mut out = BankConfigSet::new();
    for c in configs {
        for o in images.of(e) {
            match o {
                None => {
                    out.insert(c.clone());
                }
                Some(t) => {
                    out.insert(sup.step_config(c, *t));
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Quantifier {
    Some,
    All,
}

fn controlled_language(
    plant: &Automaton,
    sup: &Supervisor,
    images: &EventImages,
    depth: usize,
    q: Quantifier,
) -> BoundedLanguage {
    let start: BankConfigSet = BTreeSet::from([sup.initial_config()]);
    let mut words = BTreeSet::from([Word::empty()]);
    let mut frontier = vec![(Word::empty(), plant.initial(), start)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (w, x, configs) in frontier {
            let decisions: Vec<_> = configs.iter().map(|c| sup.decision(c)).collect();
            for (e, x2) in plant.successors(x) {
                let keep = match q {
                    Quantifier::Some => decisions.iter().any(|d| d.allows(e)),
                    Quantifier::All => decisions.iter().all(|d| d.allows(e)),
                };
                if !keep {
                    continue;
                }
                let w2 = w.with(e);
                words.insert(w2.clone());
                next.push((w2, x2, advance_configs(sup, images, &configs, e)));
            }
        }
        frontier = next;
    }
    BoundedLanguage { depth, words }
}

/// `L^max_{f,A}` and `L^min_{f,A}` up to `depth`, where `f` is the observer
/// bank built for `attacks` and `A = attacks[attack]` is the attack actually
/// applied.
pub fn compute_controlled_languages(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
    attack: usize,
    depth: usize,
) -> Result<LoopResult> {
    plant.ensure_same_alphabet(spec)?;
    let actual = attacks
        .get(attack)
        .ok_or_else(|| Error::InvalidModel(format!("attack index {attack} out of range")))?;
    let sup = Supervisor::new(spec, p, attacks)?;
    let images = actual.event_images(p)?;
    Ok(simulate(plant, &sup, &images, attack, depth))
}

fn simulate(
    plant: &Automaton,
    sup: &Supervisor,
    images: &EventImages,
    attack: usize,
    depth: usize,
) -> LoopResult {
    LoopResult {
        lmax: controlled_language(plant, sup, images, depth, Quantifier::Some),
        lmin: controlled_language(plant, sup, images, depth, Quantifier::All),
        attack,
        depth,
    }
}

/// `2·|R|`.
pub fn default_loop_depth(spec: &Automaton) -> usize {
    2 * spec.num_states()
}

/// How a closed-loop language departs from `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscrepancyKind {
    /// A word of `L^max` outside `K`: the attack tricked the supervisor
    /// into enabling an illegal event.
    OutsideSpec,
    /// A word of `K` missing from `L^min`: some corrupted history made the
    /// supervisor disable a legal event.
    Blocked,
}

impl fmt::Display for DiscrepancyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiscrepancyKind::OutsideSpec => "outside-spec",
            DiscrepancyKind::Blocked => "blocked",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub attack: usize,
    pub kind: DiscrepancyKind,
    /// Shortest offending word.
    pub word: Word,
}

/// Outcome of checking `L^min = L^max = K` at bounded depth.
#[derive(Debug, Clone)]
pub struct ClosedLoopReport {
    pub depth: usize,
    pub controllable: bool,
    /// `None` when the observability check was not run because `K` is not
    /// controllable.
    pub observable: Option<bool>,
    pub observability_witness: Option<ObservabilityWitness>,
    /// `|K≤depth|`.
    pub spec_words: usize,
    pub results: Vec<LoopResult>,
    pub discrepancies: Vec<Discrepancy>,
}

impl ClosedLoopReport {
    /// True when the closed loop behaves as the verdicts predict: no
    /// discrepancy when `K` is controllable and observable.
    pub fn consistent(&self) -> bool {
        !(self.controllable && self.observable == Some(true)) || self.discrepancies.is_empty()
    }

    pub fn equalities_hold(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn discrepancies(spec_lang: &BoundedLanguage, r: &LoopResult) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    if let Some(w) = r.lmax.words.iter().find(|w| !spec_lang.contains(w)) {
        out.push(Discrepancy {
            attack: r.attack,
            kind: DiscrepancyKind::OutsideSpec,
            word: w.clone(),
        });
    }
    if let Some(w) = spec_lang.words.iter().find(|w| !r.lmin.contains(w)) {
        out.push(Discrepancy {
            attack: r.attack,
            kind: DiscrepancyKind::Blocked,
            word: w.clone(),
        });
    }
    out
}

/// Runs the controllability and observability checks, simulates the bank
/// supervisor against every attack of the set, and compares both
/// closed-loop languages with `K≤depth`.
pub fn verify_closed_loop(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
    depth: usize,
) -> Result<ClosedLoopReport> {
    let controllable = check_controllability(plant, spec)?.is_holds();
    let (observable, observability_witness) = if controllable {
        let v = check_observability(plant, spec, p, attacks, Strategy::Auto, DEFAULT_DEPTH_CAP)?;
        (Some(v.is_holds()), v.witness)
    } else {
        (None, None)
    };
    let sup = Supervisor::new(spec, p, attacks)?;
    let spec_lang = enumerate_language(spec, depth);
    let mut results = Vec::new();
    let mut found = Vec::new();
    for (i, a) in attacks.iter().enumerate() {
        let r = simulate(plant, &sup, &a.event_images(p)?, i, depth);
        found.extend(discrepancies(&spec_lang, &r));
        results.push(r);
    }
    Ok(ClosedLoopReport {
        depth,
        controllable,
        observable,
        observability_witness,
        spec_words: spec_lang.len(),
        results,
        discrepancies: found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example1;
    use crate::observation::ap_word;
    use crate::supervisor::SupervisorBank;

    #[test]
    fn observable_sets_reach_the_specification() {
        let ex = example1();
        for set in [&["A1"][..], &["A2"], &["A3"]] {
            let sub = ex.with_attacks(set);
            let attacks = sub.attack_models();
            let report =
                verify_closed_loop(&ex.plant, &ex.spec, &ex.observation, &attacks, 7).unwrap();
            assert!(report.controllable);
            assert_eq!(report.observable, Some(true));
            assert!(
                report.equalities_hold(),
                "{set:?}: {:?}",
                report.discrepancies
            );
            for r in &report.results {
                assert_eq!(r.lmax.len(), report.spec_words);
                assert!(r.coincide());
            }
        }
    }

    #[test]
    fn unobservable_set_lets_the_attack_through() {
        let ex = example1();
        let sub = ex.with_attacks(&["A2", "A3"]);
        let attacks = sub.attack_models();
        let r = compute_controlled_languages(&ex.plant, &ex.spec, &ex.observation, &attacks, 0, 6)
            .unwrap();
        let abcdac = ex.alphabet.word("abcdac").unwrap();
        assert!(r.lmax.contains(&abcdac));
        assert!(!ex.spec.accepts(&abcdac));
        assert!(r.lmin.words.is_subset(&r.lmax.words));

        // Word-level cross-check: some y ∈ A2P(abcda) makes the bank enable c.
        let bank = SupervisorBank::new(&ex.spec, &ex.observation, &attacks).unwrap();
        let w = ex.alphabet.word("abcda").unwrap();
        let c = ex.alphabet.event("c").unwrap();
        let ys = ap_word(&attacks[0], &ex.observation, &w).unwrap();
        assert!(ys
            .iter()
            .any(|y| crate::supervisor::supervisor_decision(&bank.feed_all(y)).allows(c)));

        let report = verify_closed_loop(&ex.plant, &ex.spec, &ex.observation, &attacks, 7).unwrap();
        assert_eq!(report.observable, Some(false));
        assert!(!report.equalities_hold());
        assert!(report.consistent());
        let d = &report.discrepancies[0];
        assert_eq!(d.kind, DiscrepancyKind::OutsideSpec);
        assert_eq!(ex.alphabet.render(&d.word), "abcdac");
    }

    #[test]
    fn identity_languages_coincide() {
        let ex = example1();
        let attacks = [AttackModel::Identity];
        let r = compute_controlled_languages(&ex.plant, &ex.spec, &ex.observation, &attacks, 0, 8)
            .unwrap();
        assert!(r.coincide());
        assert!(r.lmax.is_prefix_closed());
    }

    #[test]
    fn bad_attack_index() {
        let ex = example1();
        let err = compute_controlled_languages(&ex.plant, &ex.spec, &ex.observation, &[], 0, 3);
        assert!(err.is_err());
    }
}
