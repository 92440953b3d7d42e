//! Supervisory control of discrete-event systems whose observation channel is
//! corrupted by an attacker.
//!
//! The crate decides whether a specification language can be enforced when
//! the supervisor only sees attacked observations, synthesizes the
//! observer-bank supervisor that enforces it, and simulates the closed loop.

pub mod automata;
pub mod bounded;
pub mod closed_loop;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod observability;
pub mod observation;
pub mod observer;
pub mod oracle;
pub mod problem;
pub mod report;
pub mod supervisor;
pub mod symbols;
pub mod verdict;

pub use automata::{Alphabet, Automaton, BoundedLanguage, StateId};
pub use error::{Error, Result};
pub use observation::{AttackModel, InsertionRemovalSet, ObservationMap, ReplacementRemovalMap};
pub use problem::{NamedAttack, Problem};
pub use symbols::{Event, OutputSymbol, OutputWord, Word};
pub use verdict::{Method, Verdict};
