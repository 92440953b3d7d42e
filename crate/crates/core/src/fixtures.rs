//! Built-in example systems.
//!
//! The four-state cycle below is the running example: the plant `G` is the
//! specification `G_K` plus one controllable shortcut `c` from `x1` to `x3`
//! that the supervisor must disable.
//!
//! ```text
//!   G_K:  x0 -a-> x1 -b-> x2 -c-> x3 -d-> x0
//!   G:    G_K  +  x1 -c-> x3
//! ```
//!
//! `c` is unobservable; `a`, `b`, `d` are observed as themselves. Attack `A1`
//! replaces every symbol by any symbol, `A2` may turn `a` into `b` and `d`
//! into `a`, and `A3` erases every `d`.

use crate::automata::{Alphabet, Automaton};
use crate::observation::{AttackModel, InsertionRemovalSet, ObservationMap, ReplacementRemovalMap};
use crate::problem::{NamedAttack, Problem};

/// The running example with `Σ_c = {a, c}`.
pub fn example1() -> Problem {
    example1_with_alphabet(Alphabet::new(["a", "b", "c", "d"], ["a", "c"]).expect("valid alphabet"))
}

/// The running example over a caller-chosen controllable partition.
pub fn example1_with_alphabet(alphabet: Alphabet) -> Problem {
    let cycle = [
        ("x0", "a", "x1"),
        ("x1", "b", "x2"),
        ("x2", "c", "x3"),
        ("x3", "d", "x0"),
    ];
    let states = ["x0", "x1", "x2", "x3"];
    let spec = Automaton::new(alphabet.clone(), &states, "x0", &cycle).expect("valid spec");
    let mut plant_edges = cycle.to_vec();
    plant_edges.push(("x1", "c", "x3"));
    let plant = Automaton::new(alphabet.clone(), &states, "x0", &plant_edges).expect("valid plant");
    let observation = ObservationMap::new(
        &alphabet,
        &["a", "b", "d"],
        &[("a", "a"), ("b", "b"), ("c", ""), ("d", "d")],
    )
    .expect("valid observation map");
    let rr = |table: &[(&str, &[&str])]| {
        AttackModel::ReplacementRemoval(
            ReplacementRemovalMap::from_names(&observation, table).expect("valid attack"),
        )
    };
    let all: &[&str] = &["a", "b", "d"];
    let attacks = vec![
        NamedAttack {
            name: "A1".into(),
            model: rr(&[("a", all), ("b", all), ("d", all)]),
        },
        NamedAttack {
            name: "A2".into(),
            model: rr(&[("a", &["a", "b"]), ("b", &["b"]), ("d", &["a", "d"])]),
        },
        NamedAttack {
            name: "A3".into(),
            model: rr(&[("a", &["a"]), ("b", &["b"]), ("d", &[""])]),
        },
    ];
    Problem {
        alphabet,
        observation,
        plant,
        spec,
        attacks,
    }
}

/// The running example with insertion-removal attacks on `{d}`, `{a}` and
/// `{b}` in place of the replacement-removal ones.
pub fn example1_insertion_removal() -> Problem {
    let base = example1();
    let set = |names: &[&str]| {
        AttackModel::InsertionRemoval(
            InsertionRemovalSet::from_names(&base.observation, names).expect("valid α"),
        )
    };
    Problem {
        attacks: vec![
            NamedAttack {
                name: "Ad".into(),
                model: set(&["d"]),
            },
            NamedAttack {
                name: "Aa".into(),
                model: set(&["a"]),
            },
            NamedAttack {
                name: "Ab".into(),
                model: set(&["b"]),
            },
        ],
        ..base
    }
}

/// A bare alphabet with an identity observation and one insertion-removal
/// attack, for exercising the attack algebra on its own.
#[derive(Debug, Clone)]
pub struct SymbolExample {
    pub alphabet: Alphabet,
    pub observation: ObservationMap,
    pub attack: AttackModel,
}

/// Events `t1, t2` observed as themselves; the attack inserts and removes
/// `t1`.
pub fn example2() -> SymbolExample {
    symbol_example(&["t1", "t2"])
}

/// Like [`example2`] with a third symbol `t3`.
pub fn example2_three() -> SymbolExample {
    symbol_example(&["t1", "t2", "t3"])
}

fn symbol_example(names: &[&str]) -> SymbolExample {
    let alphabet =
        Alphabet::new(names.iter().copied(), names.iter().copied()).expect("valid alphabet");
    let observation = ObservationMap::identity(&alphabet);
    let attack = AttackModel::InsertionRemoval(
        InsertionRemovalSet::from_names(&observation, &["t1"]).expect("valid α"),
    );
    SymbolExample {
        alphabet,
        observation,
        attack,
    }
}
