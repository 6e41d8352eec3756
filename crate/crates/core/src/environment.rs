use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result, SetKind};

/// The dual machine an observer is coupled to: environment states driven by
/// the observer's actions, and an observation map producing sensor readings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Environment {
    env_states: Alphabet,
    actions: Alphabet,
    observations: Alphabet,
    transition: Vec<usize>,
    observation: Vec<usize>,
}

impl Environment {
    pub fn from_tables(
        env_states: Alphabet,
        actions: Alphabet,
        observations: Alphabet,
        transition: Vec<usize>,
        observation: Vec<usize>,
    ) -> Result<Self> {
        let (ns, na, no) = (env_states.len(), actions.len(), observations.len());
        if transition.len() != ns * na {
            return Err(Error::Malformed(format!(
                "environment transition table has {} entries, expected {}",
                transition.len(),
                ns * na
            )));
        }
        if observation.len() != ns {
            return Err(Error::Malformed(format!(
                "observation table has {} entries, expected {ns}",
                observation.len()
            )));
        }
        if transition.iter().any(|&t| t >= ns) || observation.iter().any(|&o| o >= no) {
            return Err(Error::Malformed("environment table entry out of range".into()));
        }
        Ok(Environment {
            env_states: env_states.retagged(SetKind::EnvState),
            actions: actions.retagged(SetKind::Action),
            observations: observations.retagged(SetKind::Observation),
            transition,
            observation,
        })
    }

    pub fn builder<S, A, O>(env_states: S, actions: A, observations: O) -> EnvironmentBuilder
    where
        S: IntoIterator,
        S::Item: Into<String>,
        A: IntoIterator,
        A::Item: Into<String>,
        O: IntoIterator,
        O::Item: Into<String>,
    {
        EnvironmentBuilder {
            env_states: env_states.into_iter().map(Into::into).collect(),
            actions: actions.into_iter().map(Into::into).collect(),
            observations: observations.into_iter().map(Into::into).collect(),
            transitions: Vec::new(),
            observed: Vec::new(),
        }
    }

    pub fn env_states(&self) -> &Alphabet {
        &self.env_states
    }

    pub fn actions(&self) -> &Alphabet {
        &self.actions
    }

    pub fn observations(&self) -> &Alphabet {
        &self.observations
    }

    pub fn num_states(&self) -> usize {
        self.env_states.len()
    }

    /// `h(s, a)` by index.
    #[inline]
    pub fn next(&self, s: usize, a: usize) -> usize {
        assert!(a < self.actions.len(), "action index {a} out of range");
        self.transition[s * self.actions.len() + a]
    }

    /// `o(s)` by index.
    #[inline]
    pub fn observe(&self, s: usize) -> usize {
        self.observation[s]
    }

    pub fn transition_table(&self) -> &[usize] {
        &self.transition
    }

    pub fn observation_table(&self) -> &[usize] {
        &self.observation
    }
}

#[derive(Debug, Clone)]
pub struct EnvironmentBuilder {
    env_states: Vec<String>,
    actions: Vec<String>,
    observations: Vec<String>,
    transitions: Vec<(String, String, String)>,
    observed: Vec<(String, String)>,
}

impl EnvironmentBuilder {
    pub fn transition(
        mut self,
        state: impl Into<String>,
        action: impl Into<String>,
        next: impl Into<String>,
    ) -> Self {
        self.transitions.push((state.into(), action.into(), next.into()));
        self
    }

    /// Sets `h(s, a) = next` for every action `a`.
    pub fn constant_transition(mut self, state: impl Into<String>, next: impl Into<String>) -> Self {
        let (state, next) = (state.into(), next.into());
        for a in self.actions.clone() {
            self.transitions.push((state.clone(), a, next.clone()));
        }
        self
    }

    pub fn observation(mut self, state: impl Into<String>, observation: impl Into<String>) -> Self {
        self.observed.push((state.into(), observation.into()));
        self
    }

    pub fn build(self) -> Result<Environment> {
        let env_states = Alphabet::new(SetKind::EnvState, self.env_states)?;
        let actions = Alphabet::new(SetKind::Action, self.actions)?;
        let observations = Alphabet::new(SetKind::Observation, self.observations)?;

        let mut delta = HashMap::new();
        for (s, a, n) in &self.transitions {
            let key = (env_states.lookup(s)?, actions.lookup(a)?);
            if delta.insert(key, env_states.lookup(n)?).is_some() {
                return Err(Error::Malformed(format!("environment transition ({s}, {a}) defined twice")));
            }
        }
        let mut transition = Vec::with_capacity(env_states.len() * actions.len());
        for (si, s) in env_states.iter() {
            for (ai, a) in actions.iter() {
                let n = delta
                    .get(&(si, ai))
                    .ok_or_else(|| Error::MissingTransition(s.into(), a.into()))?;
                transition.push(*n);
            }
        }
        let mut obs: Vec<Option<usize>> = vec![None; env_states.len()];
        for (s, o) in &self.observed {
            let si = env_states.lookup(s)?;
            if obs[si].replace(observations.lookup(o)?).is_some() {
                return Err(Error::Malformed(format!("observation of `{s}` defined twice")));
            }
        }
        let observation = obs
            .into_iter()
            .enumerate()
            .map(|(si, o)| o.ok_or_else(|| Error::MissingEntry("observation", env_states.label(si).into())))
            .collect::<Result<Vec<_>>>()?;
        Environment::from_tables(env_states, actions, observations, transition, observation)
    }
}
