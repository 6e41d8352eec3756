//! JSON documents for observers, environments and Markov chains.
//!
//! Transition keys are `"state,input"` (or `"env_state,action"`) with a
//! literal comma, so identifiers may not contain commas. Serialization is
//! canonical: object keys are sorted, output is pretty-printed with a
//! trailing newline, and identical values give identical bytes.

use std::collections::BTreeMap;

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::alphabet::Alphabet;
use crate::environment::Environment;
use crate::error::{Error, Result, SetKind};
use crate::observer::{Boundary, Observer};

pub const FORMAT_VERSION: &str = "1";

// Fields are declared in lexicographic order so serialized keys come out sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObserverDocument {
    #[serde(default)]
    pub boundary: String,
    pub format_version: String,
    pub inputs: Vec<String>,
    pub output_map: BTreeMap<String, String>,
    pub outputs: Vec<String>,
    pub states: Vec<String>,
    pub transitions: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvironmentDocument {
    pub actions: Vec<String>,
    pub env_states: Vec<String>,
    pub env_transitions: BTreeMap<String, String>,
    pub format_version: String,
    pub observation: BTreeMap<String, String>,
    pub observations: Vec<String>,
}

/// Row-stochastic transition matrix; row `i` holds the probabilities of
/// leaving state `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDocument {
    pub format_version: String,
    pub matrix: Vec<Vec<f64>>,
}

fn parse_json<T: DeserializeOwned>(text: &[u8]) -> Result<T> {
    serde_json::from_slice(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn to_canonical<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

fn check_version(v: &str) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "unsupported format_version `{v}`, expected `{FORMAT_VERSION}`"
        )))
    }
}

fn alphabet(kind: SetKind, labels: &[String]) -> Result<Alphabet> {
    if let Some(bad) = labels.iter().find(|l| l.contains(',')) {
        return Err(Error::InvalidIdentifier {
            id: bad.clone(),
            reason: "identifiers must not contain commas",
        });
    }
    Alphabet::new(kind, labels.iter().cloned())
}

/// Reads a `"first,second"`-keyed table into a dense row-major index table.
fn pair_table(
    map: &BTreeMap<String, String>,
    rows: &Alphabet,
    cols: &Alphabet,
    targets: &Alphabet,
    context: &str,
) -> Result<Vec<usize>> {
    let mut table = vec![None; rows.len() * cols.len()];
    for (key, target) in map {
        let (a, b) = key.split_once(',').ok_or_else(|| {
            Error::InvalidInput(format!("{context} key `{key}` is not of the form `a,b`"))
        })?;
        let undeclared = |kind, id: &str| Error::UndeclaredReference {
            kind,
            id: id.to_string(),
            context: format!("{context} key `{key}`"),
        };
        let i = rows.get(a).ok_or_else(|| undeclared(rows.kind(), a))?;
        let j = cols.get(b).ok_or_else(|| undeclared(cols.kind(), b))?;
        let t = targets.get(target).ok_or_else(|| Error::UndeclaredReference {
            kind: targets.kind(),
            id: target.clone(),
            context: format!("{context} value for `{key}`"),
        })?;
        table[i * cols.len() + j] = Some(t);
    }
    table
        .iter()
        .enumerate()
        .map(|(k, t)| {
            t.ok_or_else(|| {
                Error::MissingTransition(
                    rows.label(k / cols.len()).to_string(),
                    cols.label(k % cols.len()).to_string(),
                )
            })
        })
        .collect()
}

fn single_table(
    map: &BTreeMap<String, String>,
    rows: &Alphabet,
    targets: &Alphabet,
    context: &'static str,
) -> Result<Vec<usize>> {
    let mut table = vec![None; rows.len()];
    for (key, target) in map {
        let i = rows.get(key).ok_or_else(|| Error::UndeclaredReference {
            kind: rows.kind(),
            id: key.clone(),
            context: context.to_string(),
        })?;
        let t = targets.get(target).ok_or_else(|| Error::UndeclaredReference {
            kind: targets.kind(),
            id: target.clone(),
            context: format!("{context} value for `{key}`"),
        })?;
        table[i] = Some(t);
    }
    table
        .iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| Error::MissingEntry(context, rows.label(i).to_string())))
        .collect()
}

impl ObserverDocument {
    pub fn from_observer(obs: &Observer) -> Self {
        let (xs, ys) = (obs.states(), obs.inputs());
        let transitions = (0..xs.len())
            .flat_map(|x| (0..ys.len()).map(move |y| (x, y)))
            .map(|(x, y)| {
                (
                    format!("{},{}", xs.label(x), ys.label(y)),
                    xs.label(obs.next(x, y)).to_string(),
                )
            })
            .collect();
        let output_map = xs
            .iter()
            .map(|(x, l)| (l.to_string(), obs.outputs().label(obs.out(x)).to_string()))
            .collect();
        ObserverDocument {
            boundary: obs.boundary().description.clone(),
            format_version: FORMAT_VERSION.to_string(),
            inputs: ys.labels().to_vec(),
            output_map,
            outputs: obs.outputs().labels().to_vec(),
            states: xs.labels().to_vec(),
            transitions,
        }
    }

    pub fn to_observer(&self) -> Result<Observer> {
        check_version(&self.format_version)?;
        let states = alphabet(SetKind::State, &self.states)?;
        let inputs = alphabet(SetKind::Input, &self.inputs)?;
        let outputs = alphabet(SetKind::Output, &self.outputs)?;
        let transition = pair_table(&self.transitions, &states, &inputs, &states, "transitions")?;
        let output_map = single_table(&self.output_map, &states, &outputs, "output_map")?;
        Observer::from_tables(states, inputs, outputs, transition, output_map, Boundary::new(&self.boundary))
    }
}

impl EnvironmentDocument {
    pub fn from_environment(env: &Environment) -> Self {
        let (ss, aa) = (env.env_states(), env.actions());
        let env_transitions = (0..ss.len())
            .flat_map(|s| (0..aa.len()).map(move |a| (s, a)))
            .map(|(s, a)| {
                (
                    format!("{},{}", ss.label(s), aa.label(a)),
                    ss.label(env.next(s, a)).to_string(),
                )
            })
            .collect();
        let observation = ss
            .iter()
            .map(|(s, l)| (l.to_string(), env.observations().label(env.observe(s)).to_string()))
            .collect();
        EnvironmentDocument {
            actions: aa.labels().to_vec(),
            env_states: ss.labels().to_vec(),
            env_transitions,
            format_version: FORMAT_VERSION.to_string(),
            observation,
            observations: env.observations().labels().to_vec(),
        }
    }

    pub fn to_environment(&self) -> Result<Environment> {
        check_version(&self.format_version)?;
        let states = alphabet(SetKind::EnvState, &self.env_states)?;
        let actions = alphabet(SetKind::Action, &self.actions)?;
        let observations = alphabet(SetKind::Observation, &self.observations)?;
        let transition =
            pair_table(&self.env_transitions, &states, &actions, &states, "env_transitions")?;
        let observation = single_table(&self.observation, &states, &observations, "observation")?;
        Environment::from_tables(states, actions, observations, transition, observation)
    }
}

pub fn parse_observer(text: &[u8]) -> Result<Observer> {
    parse_json::<ObserverDocument>(text)?.to_observer()
}

pub fn serialize_observer(obs: &Observer) -> String {
    to_canonical(&ObserverDocument::from_observer(obs))
}

pub fn parse_environment(text: &[u8]) -> Result<Environment> {
    parse_json::<EnvironmentDocument>(text)?.to_environment()
}

pub fn serialize_environment(env: &Environment) -> String {
    to_canonical(&EnvironmentDocument::from_environment(env))
}

pub fn parse_chain(text: &[u8]) -> Result<Vec<Vec<f64>>> {
    let doc: ChainDocument = parse_json(text)?;
    check_version(&doc.format_version)?;
    Ok(doc.matrix)
}

pub fn serialize_chain(matrix: &[Vec<f64>]) -> String {
    to_canonical(&ChainDocument {
        format_version: FORMAT_VERSION.to_string(),
        matrix: matrix.to_vec(),
    })
}
