//! JSON problem files.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "events": ["a", "b", "c", "d"],
//!   "controllable": ["a", "c"],
//!   "outputs": ["a", "b", "d"],
//!   "observation": {"a": "a", "b": "b", "c": "", "d": "d"},
//!   "plant": {"states": ["x0", "x1"], "initial": "x0",
//!             "transitions": [{"from": "x0", "event": "a", "to": "x1"}]},
//!   "spec": { ... },
//!   "attacks": [
//!     {"name": "A3", "kind": "replacement-removal", "phi": {"d": [""]}},
//!     {"name": "Ad", "kind": "insertion-removal", "alpha": ["d"]}
//!   ]
//! }
//! ```
//!
//! The empty string stands for ε in `observation` and in `phi` images.
//! Output symbols missing from a `phi` table are left uncorrupted.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automata::{sublanguage_counterexample, Alphabet, Automaton};
use crate::error::Error;
use crate::observation::{AttackModel, InsertionRemovalSet, ObservationMap, ReplacementRemovalMap};
use crate::problem::{NamedAttack, Problem};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema_version: String,
    pub events: Vec<String>,
    pub controllable: Vec<String>,
    pub outputs: Vec<String>,
    pub observation: BTreeMap<String, String>,
    pub plant: AutomatonFile,
    pub spec: AutomatonFile,
    pub attacks: Vec<AttackFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonFile {
    pub states: Vec<String>,
    pub initial: String,
    pub transitions: Vec<TransitionFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionFile {
    pub from: String,
    pub event: String,
    pub to: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttackKind {
    Identity,
    ReplacementRemoval,
    InsertionRemoval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttackFile {
    pub name: String,
    pub kind: AttackKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
}

/// Why a problem file could not be loaded.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed problem file: {0}")]
    Malformed(#[from] serde_json::Error),

    #[error("unsupported schema version `{0}` (expected `{SCHEMA_VERSION}`)")]
    Schema(String),

    #[error("invalid `{field}`: {source}")]
    Invalid {
        field: String,
        #[source]
        source: Error,
    },
}

fn at(field: impl Into<String>) -> impl FnOnce(Error) -> LoadError {
    let field = field.into();
    move |source| LoadError::Invalid { field, source }
}

/// Reads and validates a problem file.
pub fn load_problem(path: impl AsRef<Path>) -> Result<Problem, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_problem(&text)
}

pub fn parse_problem(text: &str) -> Result<Problem, LoadError> {
    let file: ProblemFile = serde_json::from_str(text)?;
    file.to_problem()
}

fn automaton(
    alphabet: &Alphabet,
    file: &AutomatonFile,
    field: &str,
) -> Result<Automaton, LoadError> {
    let edges: Vec<(&str, &str, &str)> = file
        .transitions
        .iter()
        .map(|t| (t.from.as_str(), t.event.as_str(), t.to.as_str()))
        .collect();
    let states: Vec<&str> = file.states.iter().map(String::as_str).collect();
    Automaton::new(alphabet.clone(), &states, &file.initial, &edges).map_err(at(field))
}

impl ProblemFile {
    /// Builds the validated data model.
    pub fn to_problem(&self) -> Result<Problem, LoadError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(LoadError::Schema(self.schema_version.clone()));
        }
        let alphabet = Alphabet::new(&self.events, &self.controllable).map_err(at("events"))?;
        let table: Vec<(&str, &str)> = self
            .observation
            .iter()
            .map(|(e, t)| (e.as_str(), t.as_str()))
            .collect();
        let observation =
            ObservationMap::new(&alphabet, &self.outputs, &table).map_err(at("observation"))?;
        let plant = automaton(&alphabet, &self.plant, "plant")?;
        let spec = automaton(&alphabet, &self.spec, "spec")?;
        if let Some(w) = sublanguage_counterexample(&plant, &spec).map_err(at("spec"))? {
            return Err(LoadError::Invalid {
                field: "spec".into(),
                source: Error::InvalidModel(format!(
                    "specification word `{}` is not generated by the plant",
                    alphabet.render(&w)
                )),
            });
        }
        let mut attacks: Vec<NamedAttack> = Vec::new();
        for (i, a) in self.attacks.iter().enumerate() {
            let field = format!("attacks[{i}]");
            if attacks.iter().any(|b| b.name == a.name) {
                return Err(LoadError::Invalid {
                    field,
                    source: Error::InvalidModel(format!("duplicate attack name `{}`", a.name)),
                });
            }
            let model = attack_model(&observation, a).map_err(at(field))?;
            attacks.push(NamedAttack {
                name: a.name.clone(),
                model,
            });
        }
        Ok(Problem {
            alphabet,
            observation,
            plant,
            spec,
            attacks,
        })
    }

    /// The file representation of `problem`.
    pub fn from_problem(problem: &Problem) -> ProblemFile {
        let alphabet = &problem.alphabet;
        let p = &problem.observation;
        ProblemFile {
            schema_version: SCHEMA_VERSION.into(),
            events: alphabet.names().to_vec(),
            controllable: alphabet
                .controllable()
                .map(|e| alphabet.name(e).to_string())
                .collect(),
            outputs: p.output_names().to_vec(),
            observation: alphabet
                .events()
                .map(|e| {
                    let t = p
                        .image(e)
                        .map(|t| p.symbol_name(t).to_string())
                        .unwrap_or_default();
                    (alphabet.name(e).to_string(), t)
                })
                .collect(),
            plant: automaton_file(&problem.plant),
            spec: automaton_file(&problem.spec),
            attacks: problem.attacks.iter().map(|a| attack_file(p, a)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("problem files always serialize");
        s.push('\n');
        s
    }
}

fn attack_model(p: &ObservationMap, a: &AttackFile) -> Result<AttackModel, Error> {
    let stray = |what: &str| {
        Err(Error::InvalidModel(format!(
            "`{what}` is not allowed for attack kind {:?}",
            a.kind
        )))
    };
    match a.kind {
        AttackKind::Identity => {
            if a.phi.is_some() {
                return stray("phi");
            }
            if a.alpha.is_some() {
                return stray("alpha");
            }
            Ok(AttackModel::Identity)
        }
        AttackKind::ReplacementRemoval => {
            if a.alpha.is_some() {
                return stray("alpha");
            }
            let phi = a.phi.as_ref().ok_or_else(|| {
                Error::InvalidModel("replacement-removal attack needs `phi`".into())
            })?;
            let table: Vec<(&str, Vec<&str>)> = phi
                .iter()
                .map(|(k, v)| (k.as_str(), v.iter().map(String::as_str).collect()))
                .collect();
            let table: Vec<(&str, &[&str])> =
                table.iter().map(|(k, v)| (*k, v.as_slice())).collect();
            Ok(AttackModel::ReplacementRemoval(
                ReplacementRemovalMap::from_names(p, &table)?,
            ))
        }
        AttackKind::InsertionRemoval => {
            if a.phi.is_some() {
                return stray("phi");
            }
            let alpha = a.alpha.as_ref().ok_or_else(|| {
                Error::InvalidModel("insertion-removal attack needs `alpha`".into())
            })?;
            Ok(AttackModel::InsertionRemoval(
                InsertionRemovalSet::from_names(p, alpha)?,
            ))
        }
    }
}

fn automaton_file(aut: &Automaton) -> AutomatonFile {
    let alphabet = aut.alphabet();
    AutomatonFile {
        states: aut.state_names().to_vec(),
        initial: aut.state_name(aut.initial()).to_string(),
        transitions: aut
            .transitions()
            .map(|(s, e, t)| TransitionFile {
                from: aut.state_name(s).to_string(),
                event: alphabet.name(e).to_string(),
                to: aut.state_name(t).to_string(),
            })
            .collect(),
    }
}

fn attack_file(p: &ObservationMap, a: &NamedAttack) -> AttackFile {
    let (kind, phi, alpha) = match &a.model {
        AttackModel::Identity => (AttackKind::Identity, None, None),
        AttackModel::ReplacementRemoval(m) => {
            let phi = p
                .outputs()
                .map(|t| {
                    let images = m
                        .images(t)
                        .iter()
                        .map(|o| o.map(|u| p.symbol_name(u).to_string()).unwrap_or_default())
                        .collect();
                    (p.symbol_name(t).to_string(), images)
                })
                .collect();
            (AttackKind::ReplacementRemoval, Some(phi), None)
        }
        AttackModel::InsertionRemoval(s) => {
            let alpha = s.symbols().map(|t| p.symbol_name(t).to_string()).collect();
            (AttackKind::InsertionRemoval, None, Some(alpha))
        }
    };
    AttackFile {
        name: a.name.clone(),
        kind,
        phi,
        alpha,
    }
}

/// Serializes `problem` as a schema-version-1 JSON document.
pub fn serialize_problem(problem: &Problem) -> String {
    ProblemFile::from_problem(problem).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example1, example1_insertion_removal};

    #[test]
    fn round_trip() {
        for ex in [example1(), example1_insertion_removal()] {
            let text = serialize_problem(&ex);
            let back = parse_problem(&text).unwrap();
            assert_eq!(back, ex);
            assert_eq!(serialize_problem(&back), text);
        }
    }

    fn edit(f: impl FnOnce(&mut serde_json::Value)) -> Result<Problem, LoadError> {
        let mut v: serde_json::Value =
            serde_json::from_str(&serialize_problem(&example1())).unwrap();
        f(&mut v);
        parse_problem(&v.to_string())
    }

    #[test]
    fn rejects_empty_phi() {
        let err = edit(|v| v["attacks"][2]["phi"]["d"] = serde_json::json!([])).unwrap_err();
        assert!(
            matches!(&err, LoadError::Invalid { field, .. } if field == "attacks[2]"),
            "{err}"
        );
    }

    #[test]
    fn rejects_unknown_symbols_and_fields() {
        let err = edit(|v| v["attacks"][0]["phi"]["c"] = serde_json::json!(["a"])).unwrap_err();
        assert!(
            matches!(&err, LoadError::Invalid { source: Error::UnknownSymbol(s), .. } if s == "c"),
            "{err}"
        );
        let err = edit(|v| v["bogus"] = serde_json::json!(1)).unwrap_err();
        assert!(matches!(err, LoadError::Malformed(_)));
        let err = edit(|v| v["schema_version"] = serde_json::json!("2")).unwrap_err();
        assert!(matches!(err, LoadError::Schema(_)));
        assert!(matches!(parse_problem("{"), Err(LoadError::Malformed(_))));
    }

    #[test]
    fn rejects_spec_outside_plant() {
        let err = edit(|v| {
            v["spec"]["transitions"]
                .as_array_mut()
                .unwrap()
                .push(serde_json::json!({"from": "x0", "event": "b", "to": "x0"}))
        })
        .unwrap_err();
        assert!(
            matches!(&err, LoadError::Invalid { field, .. } if field == "spec"),
            "{err}"
        );
    }

    #[test]
    fn rejects_misplaced_parameters() {
        let err = edit(|v| v["attacks"][0]["alpha"] = serde_json::json!(["a"])).unwrap_err();
        assert!(matches!(err, LoadError::Invalid { .. }));
        let err = edit(|v| v["attacks"][1]["name"] = serde_json::json!("A1")).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }
}
