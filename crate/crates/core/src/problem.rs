use crate::automata::{Alphabet, Automaton};
use crate::observation::{AttackModel, ObservationMap};

/// An attack hypothesis together with the name used in reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedAttack {
    pub name: String,
    pub model: AttackModel,
}

/// A complete supervisory-control problem: plant `G`, specification `G_K`,
/// observation map and the attack set the supervisor must withstand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub alphabet: Alphabet,
    pub observation: ObservationMap,
    pub plant: Automaton,
    pub spec: Automaton,
    pub attacks: Vec<NamedAttack>,
}

impl Problem {
    /// Looks up an attack by name.
    ///
    /// # Panics
    /// When no attack has that name.
    pub fn attack(&self, name: &str) -> &AttackModel {
        &self
            .attacks
            .iter()
            .find(|a| a.name == name)
            .unwrap_or_else(|| panic!("no attack named `{name}`"))
            .model
    }

    pub fn attack_models(&self) -> Vec<AttackModel> {
        self.attacks.iter().map(|a| a.model.clone()).collect()
    }

    /// The same problem restricted to the named attacks, in the given order.
    pub fn with_attacks(&self, names: &[&str]) -> Problem {
        let attacks = names
            .iter()
            .map(|n| NamedAttack {
                name: n.to_string(),
                model: self.attack(n).clone(),
            })
            .collect();
        Problem {
            attacks,
            ..self.clone()
        }
    }
}
