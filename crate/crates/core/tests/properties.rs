mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::{random_problem, rng, AttackFamily};
use desguard::automata::{check_controllability, enumerate_language};
use desguard::closed_loop::{advance_configs, compute_controlled_languages, BankConfigSet};
use desguard::io::{parse_problem, serialize_problem};
use desguard::observability::{
    build_test_automaton, check_observability, observability_violations, Strategy,
};
use desguard::observation::{ap_inverse_contains, ap_word, common_output, AttackModel};
use desguard::oracle::all_output_words;
use desguard::supervisor::{supervisor_decision, supervisor_feed, Supervisor};
use desguard::{Event, OutputWord, Problem, Word};
use proptest::prelude::*;

fn words_upto(p: &Problem, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| p.alphabet.events().map(move |e| w.with(e)))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn finite(seed: u64) -> Problem {
    random_problem(&mut rng(seed), AttackFamily::Finite)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bounded_languages_are_prefix_closed(seed in any::<u64>(), depth in 0usize..6) {
        let pr = finite(seed);
        let k = enumerate_language(&pr.spec, depth);
        prop_assert!(k.is_prefix_closed());
        prop_assert!(k.words.iter().all(|w| w.len() <= depth && pr.plant.accepts(w)));
    }

    #[test]
    fn controllability_matches_definition(seed in any::<u64>(), drop in any::<u64>()) {
        let mut pr = finite(seed);
        // Occasionally break controllability by removing one spec transition.
        let edges: Vec<_> = pr.spec.transitions().collect();
        if drop % 2 == 0 && !edges.is_empty() {
            let skip = (drop / 2) as usize % edges.len();
            let names = pr.spec.state_names().to_vec();
            let kept: Vec<(String, String, String)> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, (s, e, t))| {
                    (names[s.index()].clone(), pr.alphabet.name(*e).to_string(), names[t.index()].clone())
                })
                .collect();
            pr.spec = desguard::Automaton::new(pr.alphabet.clone(), &names, &names[0], &kept).unwrap();
        }
        let v = check_controllability(&pr.plant, &pr.spec).unwrap();
        // A shortest violation is no longer than the number of state pairs.
        let depth = pr.spec.num_states() * pr.plant.num_states();
        let k = enumerate_language(&pr.spec, depth);
        let violation = k.words.iter().any(|w| {
            pr.alphabet.uncontrollable().any(|e| {
                let we = w.with(e);
                pr.plant.accepts(&we) && !pr.spec.accepts(&we)
            })
        });
        prop_assert_eq!(v.is_holds(), !violation);
        if let Some(w) = v.witness {
            prop_assert!(pr.spec.accepts(&w.word));
            prop_assert!(!pr.alphabet.is_controllable(w.event));
            prop_assert!(pr.plant.accepts(&w.word.with(w.event)) && !pr.spec.accepts(&w.word.with(w.event)));
        }
    }

    #[test]
    fn membership_agrees_with_enumeration(seed in any::<u64>()) {
        let pr = finite(seed);
        let p = &pr.observation;
        let outs = all_output_words(p, 3);
        for a in pr.attack_models() {
            for w in words_upto(&pr, 3) {
                let ap = ap_word(&a, p, &w).unwrap();
                for y in &outs {
                    prop_assert_eq!(ap.contains(y), ap_inverse_contains(&a, p, &w, y));
                }
            }
        }
    }

    #[test]
    fn test_automaton_language(seed in any::<u64>()) {
        let pr = finite(seed);
        let attacks = pr.attack_models();
        let p = &pr.observation;
        let words = words_upto(&pr, 3);
        let (a, b) = (&attacks[0], attacks.last().unwrap());
        let t = build_test_automaton(&pr.plant, &pr.spec, p, a, b).unwrap();
        for w in &words {
            for w2 in &words {
                let expected = pr.spec.accepts(w)
                    && pr.spec.accepts(w2)
                    && !ap_word(a, p, w).unwrap().is_disjoint(&ap_word(b, p, w2).unwrap());
                prop_assert_eq!(t.accepts_pair(w, w2), expected);
                prop_assert_eq!(common_output(a, b, p, w, w2).is_some(), !ap_word(a, p, w).unwrap().is_disjoint(&ap_word(b, p, w2).unwrap()));
            }
        }
    }

    #[test]
    fn verdict_ignores_attack_order(seed in any::<u64>()) {
        let pr = finite(seed);
        let attacks = pr.attack_models();
        let mut reversed = attacks.clone();
        reversed.reverse();
        let v1 = check_observability(&pr.plant, &pr.spec, &pr.observation, &attacks, Strategy::Auto, 6).unwrap();
        let v2 = check_observability(&pr.plant, &pr.spec, &pr.observation, &reversed, Strategy::Auto, 6).unwrap();
        prop_assert_eq!(v1.is_holds(), v2.is_holds());
        let all = observability_violations(&pr.plant, &pr.spec, &pr.observation, &attacks).unwrap();
        prop_assert_eq!(all.is_empty(), v1.is_holds());
    }

    #[test]
    fn insertion_removal_order_and_subsets(seed in any::<u64>()) {
        let pr = random_problem(&mut rng(seed), AttackFamily::InsertionRemoval);
        let attacks = pr.attack_models();
        let v = check_observability(&pr.plant, &pr.spec, &pr.observation, &attacks, Strategy::Reduction, 0).unwrap();
        // Observability under a set implies observability under each member.
        if v.is_holds() {
            for a in &attacks {
                let single = check_observability(&pr.plant, &pr.spec, &pr.observation, std::slice::from_ref(a), Strategy::Reduction, 0).unwrap();
                prop_assert!(single.is_holds());
            }
        }
    }

    #[test]
    fn decisions_contain_uncontrollable_and_death_is_permanent(seed in any::<u64>(), ys in proptest::collection::vec(0usize..3, 0..8)) {
        let pr = finite(seed);
        let p = &pr.observation;
        let sup = Arc::new(Supervisor::new(&pr.spec, p, &pr.attack_models()).unwrap());
        let uncontrollable: BTreeSet<Event> = pr.alphabet.uncontrollable().collect();
        let syms: Vec<_> = p.outputs().collect();
        let mut bank = sup.bank();
        let mut alive = bank.alive();
        for k in ys {
            prop_assert!(supervisor_decision(&bank).enabled.is_superset(&uncontrollable));
            bank = supervisor_feed(&bank, syms[k % syms.len()]);
            let now = bank.alive();
            for (before, after) in alive.iter().zip(&now) {
                prop_assert!(*before || !*after);
            }
            alive = now;
        }
    }

    #[test]
    fn closed_loop_languages(seed in any::<u64>()) {
        let pr = finite(seed);
        let attacks = pr.attack_models();
        for i in 0..attacks.len() {
            let r = compute_controlled_languages(&pr.plant, &pr.spec, &pr.observation, &attacks, i, 5).unwrap();
            prop_assert!(r.lmin.words.is_subset(&r.lmax.words));
            prop_assert!(r.lmin.is_prefix_closed() && r.lmax.is_prefix_closed());
        }
        let id = compute_controlled_languages(&pr.plant, &pr.spec, &pr.observation, &[AttackModel::Identity], 0, 5).unwrap();
        prop_assert!(id.coincide());
    }

    #[test]
    fn bank_configurations_match_word_level_histories(seed in any::<u64>()) {
        let pr = finite(seed);
        let p = &pr.observation;
        let attacks = pr.attack_models();
        let sup = Arc::new(Supervisor::new(&pr.spec, p, &attacks).unwrap());
        for a in &attacks {
            let images = a.event_images(p).unwrap();
            for w in words_upto(&pr, 4) {
                let mut configs: BankConfigSet = BTreeSet::from([sup.initial_config()]);
                for e in w.iter() {
                    configs = advance_configs(&sup, &images, &configs, e);
                }
                let from_words: BankConfigSet = ap_word(a, p, &w)
                    .unwrap()
                    .iter()
                    .map(|y| sup.bank().feed_all(y).config().to_vec())
                    .collect();
                prop_assert_eq!(configs, from_words);
            }
        }
    }

    #[test]
    fn problem_files_round_trip(seed in any::<u64>(), ir in any::<bool>()) {
        let family = if ir { AttackFamily::InsertionRemoval } else { AttackFamily::Finite };
        let pr = random_problem(&mut rng(seed), family);
        let text = serialize_problem(&pr);
        let back = parse_problem(&text).unwrap();
        prop_assert_eq!(&back, &pr);
        prop_assert_eq!(serialize_problem(&back), text);
    }
}

#[test]
fn empty_output_history_is_always_explained() {
    let pr = finite(7);
    for a in pr.attack_models() {
        let obs = desguard::observer::build_observer(&pr.spec, &a, &pr.observation).unwrap();
        assert!(obs.accepts(&OutputWord::empty()));
    }
}
