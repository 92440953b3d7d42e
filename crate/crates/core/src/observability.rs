//! Observability of a specification under a set of observation attacks.
//!
//! Three procedures decide the same property:
//!
//! * [`check_observability_rr`] builds, for every ordered attack pair, the
//!   triple product `T_{A,A′}` of specification × plant × specification
//!   synchronized on event pairs whose attacked observations can coincide,
//!   and looks for a reachable triple where a controllable event is possible
//!   in the first specification copy and in the plant but not in the second
//!   specification copy.
//! * [`check_observability_ir`] reduces insertion-removal attacks to
//!   conventional observability under `R_¬(α_i ∪ α_j) ∘ P` for every pair.
//! * [`brute_force_observability`] enumerates pairs of specification words up
//!   to a length bound.
//!
//! Witnesses are always oriented so that `wσ ∈ K`, `w′σ ∈ L ∖ K` and
//! `AP(w) ∩ A′P(w′) ≠ ∅`, with `A = attacks[attack]` and
//! `A′ = attacks[attack_prime]`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::{check_controllability, sublanguage_counterexample, Automaton, StateId};
use crate::bounded::emitted_outputs;
use crate::error::{Error, Result};
use crate::observation::{
    common_output, compose_removal_observation, keyed_images, AttackModel, ObservationMap,
};
use crate::symbols::{Event, Word};
use crate::verdict::{Method, Verdict};

/// Default cap on the brute-force word length.
pub const DEFAULT_DEPTH_CAP: usize = 10;

/// A violation of observability under attacks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservabilityWitness {
    /// Continues to `wσ ∈ K`.
    pub w: Word,
    /// Continues to `w′σ ∈ L ∖ K`.
    pub w_prime: Word,
    pub event: Event,
    /// Index of the attack applied to `w`.
    pub attack: usize,
    /// Index of the attack applied to `w′`.
    pub attack_prime: usize,
}

/// Event of the test automaton: a pair of plant events, either of which may
/// be ε (`None`), but not both.
pub type PairEvent = (Option<Event>, Option<Event>);

/// State `(r, x′, r′)` of the test automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TestState {
    pub spec: StateId,
    pub plant: StateId,
    pub spec_prime: StateId,
}

/// The reachable part of the product `T_{A,A′}`.
#[derive(Debug, Clone)]
pub struct TestAutomaton {
    events: Vec<PairEvent>,
    states: Vec<TestState>,
    index: HashMap<TestState, usize>,
    edges: Vec<Vec<(usize, usize)>>,
    parent: Vec<Option<(usize, usize)>>,
    plant: Automaton,
    spec: Automaton,
}

impl TestAutomaton {
    /// `Σ_T`, in a fixed order.
    pub fn events(&self) -> &[PairEvent] {
        &self.events
    }

    /// Reachable states in breadth-first discovery order; index 0 is `q₀`.
    pub fn states(&self) -> &[TestState] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn contains(&self, q: &TestState) -> bool {
        self.index.contains_key(q)
    }

    /// Outgoing `(event index, target index)` pairs of state `i`.
    pub fn edges(&self, i: usize) -> &[(usize, usize)] {
        &self.edges[i]
    }

    pub fn plant(&self) -> &Automaton {
        &self.plant
    }

    pub fn spec(&self) -> &Automaton {
        &self.spec
    }

    /// A shortest pair `(w, w′)` driving `q₀` to state `i`.
    pub fn path_to(&self, mut i: usize) -> (Word, Word) {
        let mut steps = Vec::new();
        while let Some((prev, ev)) = self.parent[i] {
            steps.push(self.events[ev]);
            i = prev;
        }
        steps.reverse();
        let left = steps.iter().filter_map(|(l, _)| *l).collect();
        let right = steps.iter().filter_map(|(_, r)| *r).collect();
        (left, right)
    }

    /// Whether `(w, w′)` is generated, i.e. some interleaving of the two words
    /// into events of `Σ_T` is defined from `q₀`.
    pub fn accepts_pair(&self, w: &Word, w_prime: &Word) -> bool {
        let event_index: HashMap<PairEvent, usize> = self
            .events
            .iter()
            .enumerate()
            .map(|(i, e)| (*e, i))
            .collect();
        let (n, m) = (w.len(), w_prime.len());
        let mut seen = BTreeSet::from([(0usize, 0usize, 0usize)]);
        let mut stack = vec![(0usize, 0usize, 0usize)];
        while let Some((i, j, q)) = stack.pop() {
            if (i, j) == (n, m) {
                return true;
            }
            let l = w.symbols().get(i).copied();
            let r = w_prime.symbols().get(j).copied();
            let candidates = [
                ((l, r), (i + 1, j + 1)),
                ((l, None), (i + 1, j)),
                ((None, r), (i, j + 1)),
            ];
            for (pe, (i2, j2)) in candidates {
                if pe == (None, None)
                    || (pe.0.is_none() != (i2 == i))
                    || (pe.1.is_none() != (j2 == j))
                {
                    continue;
                }
                let Some(&ev) = event_index.get(&pe) else {
                    continue;
                };
                if let Some(&(_, q2)) = self.edges[q].iter().find(|(e, _)| *e == ev) {
                    if seen.insert((i2, j2, q2)) {
                        stack.push((i2, j2, q2));
                    }
                }
            }
        }
        false
    }
}

fn finite_images(a: &AttackModel, p: &ObservationMap) -> Result<crate::observation::EventImages> {
    a.event_images(p).map_err(|_| {
        Error::Unsupported(
            "the product test needs identity or replacement-removal attacks; \
             use the insertion-removal reduction or brute force"
                .into(),
        )
    })
}

/// Builds the reachable part of `T_{A,A′}`.
pub fn build_test_automaton(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    a: &AttackModel,
    a_prime: &AttackModel,
) -> Result<TestAutomaton> {
    plant.ensure_same_alphabet(spec)?;
    let left = finite_images(a, p)?;
    let right = finite_images(a_prime, p)?;
    let with_eps = |e: Option<Event>, imgs: &crate::observation::EventImages| -> Vec<Option<_>> {
        match e {
            None => vec![None],
            Some(e) => imgs.of(e).to_vec(),
        }
    };
    let options: Vec<Option<Event>> = std::iter::once(None)
        .chain(plant.alphabet().events().map(Some))
        .collect();
    let mut events = Vec::new();
    for &l in &options {
        for &r in &options {
            if l.is_none() && r.is_none() {
                continue;
            }
            let (li, ri) = (with_eps(l, &left), with_eps(r, &right));
            if li.iter().any(|o| ri.contains(o)) {
                events.push((l, r));
            }
        }
    }

    let q0 = TestState {
        spec: spec.initial(),
        plant: plant.initial(),
        spec_prime: spec.initial(),
    };
    let mut states = vec![q0];
    let mut index = HashMap::from([(q0, 0)]);
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut parent = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let q = states[i];
        for (ev, &(l, r)) in events.iter().enumerate() {
            let spec_next = match l {
                Some(e) => spec.step(q.spec, e),
                None => Some(q.spec),
            };
            let (plant_next, prime_next) = match r {
                Some(e) => (plant.step(q.plant, e), spec.step(q.spec_prime, e)),
                None => (Some(q.plant), Some(q.spec_prime)),
            };
            let (Some(s), Some(x), Some(s2)) = (spec_next, plant_next, prime_next) else {
                continue;
            };
            let target = TestState {
                spec: s,
                plant: x,
                spec_prime: s2,
            };
            let j = *index.entry(target).or_insert_with(|| {
                states.push(target);
                edges.push(Vec::new());
                parent.push(Some((i, ev)));
                queue.push_back(states.len() - 1);
                states.len() - 1
            });
            edges[i].push((ev, j));
        }
    }
    Ok(TestAutomaton {
        events,
        states,
        index,
        edges,
        parent,
        plant: plant.clone(),
        spec: spec.clone(),
    })
}

fn require_sublanguage(plant: &Automaton, spec: &Automaton) -> Result<()> {
    if let Some(w) = sublanguage_counterexample(plant, spec)? {
        return Err(Error::Precondition(format!(
            "specification word `{}` is not generated by the plant",
            spec.alphabet().render(&w)
        )));
    }
    Ok(())
}

fn require_controllable(plant: &Automaton, spec: &Automaton) -> Result<()> {
    require_sublanguage(plant, spec)?;
    if let Some(w) = check_controllability(plant, spec)?.witness {
        return Err(Error::Precondition(format!(
            "specification is not controllable (`{}` followed by `{}`)",
            spec.alphabet().render(&w.word),
            spec.alphabet().name(w.event)
        )));
    }
    Ok(())
}

/// Product-automaton test for identity and replacement-removal attack sets.
/// Requires a controllable specification.
pub fn check_observability_rr(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
) -> Result<Verdict<ObservabilityWitness>> {
    plant.ensure_same_alphabet(spec)?;
    if attacks.iter().any(AttackModel::is_insertion_removal) {
        return Err(Error::Unsupported(
            "insertion-removal attacks in the product test".into(),
        ));
    }
    require_controllable(plant, spec)?;
    for (i, a) in attacks.iter().enumerate() {
        for (j, a_prime) in attacks.iter().enumerate() {
            if let Some(w) = product_pair_witness(plant, spec, p, a, a_prime)? {
                return Ok(Verdict::fails(
                    ObservabilityWitness {
                        attack: i,
                        attack_prime: j,
                        ..w
                    },
                    Method::Product,
                ));
            }
        }
    }
    Ok(Verdict::holds(Method::Product))
}

/// Searches `T_{A,A′}` for a violating triple; the attack indices of the
/// returned witness are 0 and 1.
fn product_pair_witness(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    a: &AttackModel,
    a_prime: &AttackModel,
) -> Result<Option<ObservabilityWitness>> {
    let t = build_test_automaton(plant, spec, p, a, a_prime)?;
    let alphabet = plant.alphabet();
    for (k, q) in t.states().iter().enumerate() {
        let bad = alphabet.controllable().find(|&e| {
            spec.step(q.spec, e).is_some()
                && plant.step(q.plant, e).is_some()
                && spec.step(q.spec_prime, e).is_none()
        });
        if let Some(event) = bad {
            let (w, w_prime) = t.path_to(k);
            return Ok(Some(ObservabilityWitness {
                w,
                w_prime,
                event,
                attack: 0,
                attack_prime: 1,
            }));
        }
    }
    Ok(None)
}

/// One witness for every attack pair that violates observability: every
/// ordered pair for finite-image sets, every pair `i ≤ j` for
/// insertion-removal sets. Mixed sets are unsupported.
pub fn observability_violations(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
) -> Result<Vec<ObservabilityWitness>> {
    let ir = attacks.iter().filter(|a| a.is_insertion_removal()).count();
    let mut out = Vec::new();
    if ir == 0 {
        require_controllable(plant, spec)?;
        for (i, a) in attacks.iter().enumerate() {
            for (j, a_prime) in attacks.iter().enumerate() {
                if let Some(w) = product_pair_witness(plant, spec, p, a, a_prime)? {
                    out.push(ObservabilityWitness {
                        attack: i,
                        attack_prime: j,
                        ..w
                    });
                }
            }
        }
    } else if ir == attacks.len() {
        for i in 0..attacks.len() {
            for j in i..attacks.len() {
                let pair = [attacks[i].clone(), attacks[j].clone()];
                if let Some(w) = check_observability_ir(plant, spec, p, &pair)?.witness {
                    out.push(ObservabilityWitness {
                        attack: if w.attack == 0 { i } else { j },
                        attack_prime: if w.attack_prime == 0 { i } else { j },
                        ..w
                    });
                }
            }
        }
    } else {
        return Err(Error::Unsupported(
            "per-pair witnesses for mixed attack sets".into(),
        ));
    }
    Ok(out)
}

/// Observability without attacks, under observation map `q`.
pub fn check_conventional_observability(
    plant: &Automaton,
    spec: &Automaton,
    q: &ObservationMap,
) -> Result<Verdict<ObservabilityWitness>> {
    check_observability_rr(plant, spec, q, &[AttackModel::Identity])
}

/// Observability under insertion-removal attacks `A_α1, …, A_αM` via
/// conventional observability under `R_¬(α_i ∪ α_j) ∘ P` for all `i ≤ j`.
pub fn check_observability_ir(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
) -> Result<Verdict<ObservabilityWitness>> {
    let sets = attacks
        .iter()
        .map(|a| match a {
            AttackModel::InsertionRemoval(alpha) => Ok(alpha),
            _ => Err(Error::Unsupported(
                "the reduction applies to insertion-removal attack sets only".into(),
            )),
        })
        .collect::<Result<Vec<_>>>()?;
    for i in 0..sets.len() {
        for j in i..sets.len() {
            let q = compose_removal_observation(&sets[i].union(sets[j]), p);
            if let Some(w) = check_conventional_observability(plant, spec, &q)?.witness {
                return Ok(Verdict::fails(
                    ObservabilityWitness {
                        attack: i,
                        attack_prime: j,
                        ..w
                    },
                    Method::Reduction,
                ));
            }
        }
    }
    Ok(Verdict::holds(Method::Reduction))
}

/// Exhaustive check over all `w, w′ ∈ K` with `|w|, |w′| ≤ depth` and all
/// ordered attack pairs. Uses the controllable-event form when `K` is
/// controllable and the full two-sided condition otherwise. Handles every
/// attack kind, including mixed sets.
pub fn brute_force_observability(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
    depth: usize,
) -> Result<Verdict<ObservabilityWitness>> {
    plant.ensure_same_alphabet(spec)?;
    let controllable = check_controllability(plant, spec)?.is_holds();
    let alphabet = plant.alphabet();
    let candidates: Vec<Event> = if controllable {
        alphabet.controllable().collect()
    } else {
        alphabet.events().collect()
    };
    for (i, a) in attacks.iter().enumerate() {
        for (j, a_prime) in attacks.iter().enumerate() {
            let (left, right) = keyed_images(a, a_prime, p);
            let lhs = emitted_outputs(plant, spec, &left, depth, depth);
            let rhs = emitted_outputs(plant, spec, &right, depth, depth);
            for (key, ws) in &lhs {
                let Some(ws_prime) = rhs.get(key) else {
                    continue;
                };
                for w in ws {
                    for w2 in ws_prime {
                        let bad = candidates.iter().copied().find(|&e| {
                            spec.step(w.spec, e).is_some()
                                && plant.step(w2.plant, e).is_some()
                                && spec.step(w2.spec, e).is_none()
                        });
                        if let Some(event) = bad {
                            return Ok(Verdict::fails(
                                ObservabilityWitness {
                                    w: w.word.clone(),
                                    w_prime: w2.word.clone(),
                                    event,
                                    attack: i,
                                    attack_prime: j,
                                },
                                Method::BruteForce,
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::holds(Method::BruteForce))
}

/// `2·|R|²·|X|` capped at `cap`.
pub fn default_depth(plant: &Automaton, spec: &Automaton, cap: usize) -> usize {
    let r = spec.num_states();
    (2 * r * r * plant.num_states()).min(cap)
}

/// Re-checks a witness directly against the definition: both words in `K`,
/// `wσ ∈ K`, `w′σ ∈ L ∖ K`, and a common corrupted output exists.
pub fn validate_witness(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
    witness: &ObservabilityWitness,
) -> bool {
    let (Some(a), Some(a_prime)) = (
        attacks.get(witness.attack),
        attacks.get(witness.attack_prime),
    ) else {
        return false;
    };
    let ws = witness.w.with(witness.event);
    let ws_prime = witness.w_prime.with(witness.event);
    spec.accepts(&witness.w)
        && spec.accepts(&witness.w_prime)
        && spec.accepts(&ws)
        && plant.accepts(&ws_prime)
        && !spec.accepts(&ws_prime)
        && common_output(a, a_prime, p, &witness.w, &witness.w_prime).is_some()
}

/// Which procedure [`check_observability`] should run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Product test for finite-image sets, reduction for insertion-removal
    /// sets, brute force for mixed sets.
    Auto,
    Product,
    Reduction,
    BruteForce,
}

/// Dispatches to one of the procedures. `depth` is used by brute force only.
pub fn check_observability(
    plant: &Automaton,
    spec: &Automaton,
    p: &ObservationMap,
    attacks: &[AttackModel],
    strategy: Strategy,
    depth: usize,
) -> Result<Verdict<ObservabilityWitness>> {
    let strategy = match strategy {
        Strategy::Auto => {
            let ir = attacks.iter().filter(|a| a.is_insertion_removal()).count();
            if ir == 0 {
                Strategy::Product
            } else if ir == attacks.len() {
                Strategy::Reduction
            } else {
                Strategy::BruteForce
            }
        }
        s => s,
    };
    match strategy {
        Strategy::Product => check_observability_rr(plant, spec, p, attacks),
        Strategy::Reduction => check_observability_ir(plant, spec, p, attacks),
        _ => brute_force_observability(plant, spec, p, attacks, depth),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::fixtures::{example1, example1_insertion_removal};
    use crate::observation::InsertionRemovalSet;

    #[test]
    fn example_verdicts_by_product() {
        let ex = example1();
        for set in [&["A1"][..], &["A2"], &["A3"], &["A1", "A2"]] {
            let sub = ex.with_attacks(set);
            let v =
                check_observability_rr(&ex.plant, &ex.spec, &ex.observation, &sub.attack_models())
                    .unwrap();
            assert!(v.is_holds(), "{set:?}");
        }
        let sub = ex.with_attacks(&["A2", "A3"]);
        let attacks = sub.attack_models();
        let v = check_observability_rr(&ex.plant, &ex.spec, &ex.observation, &attacks).unwrap();
        let w = v.witness.expect("not observable under {A2, A3}");
        let render = |w: &Word| ex.alphabet.render(w);
        assert_eq!(ex.alphabet.name(w.event), "c");
        assert_eq!((w.attack, w.attack_prime), (1, 0));
        assert_eq!(render(&w.w), "abcdab");
        assert_eq!(render(&w.w_prime), "abcda");
        assert_eq!(
            ex.spec.run(&w.w).unwrap(),
            Some(ex.spec.state("x2").unwrap())
        );
        assert_eq!(
            ex.plant.run(&w.w_prime).unwrap(),
            Some(ex.plant.state("x1").unwrap())
        );
        assert!(validate_witness(
            &ex.plant,
            &ex.spec,
            &ex.observation,
            &attacks,
            &w
        ));
    }

    #[test]
    fn violations_list_every_offending_pair() {
        let ex = example1();
        let attacks = ex.attack_models();
        let found =
            observability_violations(&ex.plant, &ex.spec, &ex.observation, &attacks).unwrap();
        let pairs: Vec<(usize, usize)> = found.iter().map(|w| (w.attack, w.attack_prime)).collect();
        assert!(pairs.contains(&(2, 1)), "{pairs:?}");
        assert!(!pairs.contains(&(0, 0)) && !pairs.contains(&(1, 1)) && !pairs.contains(&(2, 2)));
        for w in &found {
            assert!(validate_witness(
                &ex.plant,
                &ex.spec,
                &ex.observation,
                &attacks,
                w
            ));
        }
        let ir = example1_insertion_removal();
        let attacks = ir.attack_models();
        for w in observability_violations(&ir.plant, &ir.spec, &ir.observation, &attacks).unwrap() {
            assert!(validate_witness(
                &ir.plant,
                &ir.spec,
                &ir.observation,
                &attacks,
                &w
            ));
        }
    }

    #[test]
    fn brute_force_matches_the_worked_example() {
        let ex = example1();
        let sub = ex.with_attacks(&["A2", "A3"]);
        let attacks = sub.attack_models();
        let v =
            brute_force_observability(&ex.plant, &ex.spec, &ex.observation, &attacks, 6).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(ex.alphabet.render(&w.w), "abcdab");
        assert_eq!(ex.alphabet.render(&w.w_prime), "abcda");
        assert_eq!((w.attack, w.attack_prime), (1, 0));
        assert!(validate_witness(
            &ex.plant,
            &ex.spec,
            &ex.observation,
            &attacks,
            &w
        ));

        let a1 = ex.with_attacks(&["A1"]).attack_models();
        assert!(
            brute_force_observability(&ex.plant, &ex.spec, &ex.observation, &a1, 8)
                .unwrap()
                .is_holds()
        );
        assert!(brute_force_observability(
            &ex.spec,
            &ex.spec,
            &ex.observation,
            &[AttackModel::Identity],
            6
        )
        .unwrap()
        .is_holds());
    }

    #[test]
    fn test_automaton_alphabet() {
        let ex = example1();
        let full = ObservationMap::identity(&ex.alphabet);
        let t = build_test_automaton(
            &ex.plant,
            &ex.spec,
            &full,
            &AttackModel::Identity,
            &AttackModel::Identity,
        )
        .unwrap();
        let diagonal: Vec<PairEvent> = ex.alphabet.events().map(|e| (Some(e), Some(e))).collect();
        assert_eq!(t.events(), &diagonal[..]);

        let ev = |s| Some(ex.alphabet.event(s).unwrap());
        let t = build_test_automaton(
            &ex.plant,
            &ex.spec,
            &ex.observation,
            ex.attack("A3"),
            ex.attack("A2"),
        )
        .unwrap();
        assert!(t.events().contains(&(ev("d"), None)));
        assert!(t.events().contains(&(ev("a"), ev("d"))));
        assert!(!t.events().contains(&(ev("a"), ev("b"))));
        let bound = ex.spec.num_states().pow(2) * ex.plant.num_states();
        assert!(t.num_states() <= bound);
        let bad = TestState {
            spec: ex.spec.state("x2").unwrap(),
            plant: ex.plant.state("x1").unwrap(),
            spec_prime: ex.spec.state("x1").unwrap(),
        };
        assert!(t.contains(&bad));
    }

    #[test]
    fn product_rejects_insertion_removal_and_uncontrollable() {
        let ex = example1_insertion_removal();
        let err = check_observability_rr(&ex.plant, &ex.spec, &ex.observation, &ex.attack_models());
        assert!(err.unwrap_err().is_unsupported());

        let alpha = Alphabet::new(["a", "b", "c", "d"], ["a"]).unwrap();
        let ex = crate::fixtures::example1_with_alphabet(alpha);
        let err = check_observability_rr(
            &ex.plant,
            &ex.spec,
            &ex.observation,
            &[AttackModel::Identity],
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn conventional_examples() {
        let ex = example1();
        assert!(
            check_conventional_observability(&ex.plant, &ex.plant, &ex.observation)
                .unwrap()
                .is_holds()
        );
        assert!(
            check_conventional_observability(&ex.plant, &ex.spec, &ex.observation)
                .unwrap()
                .is_holds()
        );
        let blind = ObservationMap::new(
            &ex.alphabet,
            &["a", "b", "d"],
            &[("a", ""), ("b", ""), ("c", ""), ("d", "")],
        )
        .unwrap();
        let v = check_conventional_observability(&ex.plant, &ex.spec, &blind).unwrap();
        let w = v
            .witness
            .expect("blind supervisor cannot separate x1 from x2");
        assert!(validate_witness(
            &ex.plant,
            &ex.spec,
            &blind,
            &[AttackModel::Identity],
            &w
        ));
    }

    #[test]
    fn reduction_examples() {
        let ex = example1();
        let p = &ex.observation;
        let ir = |names: &[&str]| {
            AttackModel::InsertionRemoval(InsertionRemovalSet::from_names(p, names).unwrap())
        };
        assert!(check_observability_ir(&ex.plant, &ex.spec, p, &[ir(&[])])
            .unwrap()
            .is_holds());

        let d = [ir(&["d"])];
        let reduced = check_observability_ir(&ex.plant, &ex.spec, p, &d).unwrap();
        let q =
            compose_removal_observation(&InsertionRemovalSet::from_names(p, &["d"]).unwrap(), p);
        let direct = check_conventional_observability(&ex.plant, &ex.spec, &q).unwrap();
        assert_eq!(reduced.is_holds(), direct.is_holds());
        let brute = brute_force_observability(&ex.plant, &ex.spec, p, &d, 8).unwrap();
        assert_eq!(reduced.is_holds(), brute.is_holds());

        let ab = [ir(&["a"]), ir(&["b"])];
        let reduced = check_observability_ir(&ex.plant, &ex.spec, p, &ab).unwrap();
        let conj = [&["a"][..], &["b"], &["a", "b"]].iter().all(|set| {
            let q =
                compose_removal_observation(&InsertionRemovalSet::from_names(p, set).unwrap(), p);
            check_conventional_observability(&ex.plant, &ex.spec, &q)
                .unwrap()
                .is_holds()
        });
        assert_eq!(reduced.is_holds(), conj);
        if let Some(w) = &reduced.witness {
            assert!(validate_witness(&ex.plant, &ex.spec, p, &ab, w));
        }
    }

    #[test]
    fn mixed_sets_are_brute_force_only() {
        let ex = example1();
        let p = &ex.observation;
        let ir = AttackModel::InsertionRemoval(InsertionRemovalSet::from_names(p, &["d"]).unwrap());
        let mixed = vec![ex.attack("A2").clone(), ir];
        assert!(check_observability_ir(&ex.plant, &ex.spec, p, &mixed)
            .unwrap_err()
            .is_unsupported());
        let v = check_observability(&ex.plant, &ex.spec, p, &mixed, Strategy::Auto, 8).unwrap();
        assert_eq!(v.method, Method::BruteForce);
        if let Some(w) = &v.witness {
            assert!(validate_witness(&ex.plant, &ex.spec, p, &mixed, w));
        }
    }

    #[test]
    fn pair_language_matches_overlap() {
        let ex = example1();
        let p = &ex.observation;
        let (a, a2) = (ex.attack("A3"), ex.attack("A2"));
        let t = build_test_automaton(&ex.plant, &ex.spec, p, a, a2).unwrap();
        let w = ex.alphabet.word("abcdab").unwrap();
        let w2 = ex.alphabet.word("abcda").unwrap();
        assert!(t.accepts_pair(&w, &w2));
        let w3 = ex.alphabet.word("ab").unwrap();
        assert!(!t.accepts_pair(&w3, &w2));
    }
}
