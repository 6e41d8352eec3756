//! Closed observer/environment loops.
//!
//! One step senses, updates, acts, then lets the environment respond:
//! `y = o(s)`, `x' = f(x, y)`, `z = g(x')`, `s' = h(s, z)`.

use std::collections::HashSet;

use crate::environment::Environment;
use crate::error::{Error, Result};
use crate::observer::Observer;

/// A joint configuration: observer state and environment state, by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Joint {
    pub state: usize,
    pub env: usize,
}

impl Joint {
    pub fn new(state: usize, env: usize) -> Self {
        Joint { state, env }
    }
}

/// One loop iteration. `t` counts from 1; the record holds the input sensed,
/// the post-update observer state, the emitted output and the post-update
/// environment state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceRecord {
    pub t: usize,
    pub input: usize,
    pub state: usize,
    pub output: usize,
    pub env_state: usize,
}

impl TraceRecord {
    pub fn joint(&self) -> Joint {
        Joint::new(self.state, self.env_state)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub start: Joint,
    pub records: Vec<TraceRecord>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Joint states after each step (the start state excluded).
    pub fn joints(&self) -> impl Iterator<Item = Joint> + '_ {
        self.records.iter().map(TraceRecord::joint)
    }

    /// Replays the loop equations over every record.
    pub fn satisfies_loop_equations(&self, sys: &CoupledSystem) -> bool {
        let mut prev = self.start;
        for (i, r) in self.records.iter().enumerate() {
            let obs = sys.observer();
            let env = sys.environment();
            let ok = r.t == i + 1
                && Some(r.input) == sys.input_for(env.observe(prev.env))
                && r.state == obs.next(prev.state, r.input)
                && r.output == obs.out(r.state)
                && r.env_state == env.next(prev.env, sys.action_for(r.output));
            if !ok {
                return false;
            }
            prev = r.joint();
        }
        true
    }
}

/// An observer wired to an environment with checked alphabets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupledSystem {
    observer: Observer,
    environment: Environment,
    /// Observation index -> observer input index, for observations the
    /// environment can actually emit.
    obs_to_input: Vec<Option<usize>>,
    /// Observer output index -> environment action index.
    output_to_action: Vec<usize>,
}

impl CoupledSystem {
    /// Wires by label: every observation the environment can emit must be an
    /// observer input, and every observer output must be an environment action.
    pub fn new(observer: Observer, environment: Environment) -> Result<Self> {
        let emitted: HashSet<usize> = environment.observation_table().iter().copied().collect();
        let mut obs_to_input = vec![None; environment.observations().len()];
        for (oi, label) in environment.observations().iter() {
            match observer.inputs().get(label) {
                Some(y) => obs_to_input[oi] = Some(y),
                None if emitted.contains(&oi) => {
                    return Err(Error::IncompatibleAlphabets(format!(
                        "observation `{label}` is not an observer input"
                    )))
                }
                None => {}
            }
        }
        let output_to_action = observer
            .outputs()
            .iter()
            .map(|(_, label)| {
                environment.actions().get(label).ok_or_else(|| {
                    Error::IncompatibleAlphabets(format!(
                        "observer output `{label}` is not an environment action"
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoupledSystem {
            observer,
            environment,
            obs_to_input,
            output_to_action,
        })
    }

    pub fn observer(&self) -> &Observer {
        &self.observer
    }

    pub fn environment(&self) -> &Environment {
        &self.environment
    }

    fn input_for(&self, observation: usize) -> Option<usize> {
        self.obs_to_input[observation]
    }

    pub fn action_for(&self, output: usize) -> usize {
        self.output_to_action[output]
    }

    /// Observer input sensed in environment state `s`.
    pub fn sense(&self, s: usize) -> usize {
        self.obs_to_input[self.environment.observe(s)]
            .expect("emitted observations are checked at construction")
    }

    pub fn joint(&self, state: &str, env_state: &str) -> Result<Joint> {
        Ok(Joint::new(
            self.observer.states().lookup(state)?,
            self.environment.env_states().lookup(env_state)?,
        ))
    }

    pub fn joint_labels(&self, j: Joint) -> (&str, &str) {
        (
            self.observer.states().label(j.state),
            self.environment.env_states().label(j.env),
        )
    }

    pub fn num_joint_states(&self) -> usize {
        self.observer.num_states() * self.environment.num_states()
    }

    /// One sense -> update -> act -> environment step. `t` is stamped on the
    /// returned record.
    pub fn step_coupled(&self, joint: Joint, t: usize) -> (Joint, TraceRecord) {
        let y = self.sense(joint.env);
        let x = self.observer.next(joint.state, y);
        let z = self.observer.out(x);
        let s = self.environment.next(joint.env, self.action_for(z));
        let record = TraceRecord {
            t,
            input: y,
            state: x,
            output: z,
            env_state: s,
        };
        (Joint::new(x, s), record)
    }

    pub fn run(&self, start: Joint, horizon: usize) -> Trace {
        let mut records = Vec::with_capacity(horizon);
        let mut j = start;
        for t in 1..=horizon {
            let (next, record) = self.step_coupled(j, t);
            records.push(record);
            j = next;
        }
        Trace { start, records }
    }

    fn check_joint(&self, j: Joint) -> Result<()> {
        if j.state >= self.observer.num_states() || j.env >= self.environment.num_states() {
            return Err(Error::InvalidInput(format!("joint state {j:?} out of range")));
        }
        Ok(())
    }

    /// Joint states reachable from `starts`, in discovery order.
    pub fn reachable(&self, starts: &[Joint]) -> Result<Vec<Joint>> {
        let mut seen = HashSet::new();
        let mut order = Vec::new();
        for &s in starts {
            self.check_joint(s)?;
            let mut j = s;
            while seen.insert(j) {
                order.push(j);
                j = self.step_coupled(j, 0).0;
            }
        }
        Ok(order)
    }

    /// Checks the minimality conditions: non-empty sensing and action sets,
    /// more than one internal state, and feedback closure from `starts`.
    ///
    /// Closure is approximated by one-step non-constancy: some reachable
    /// environment state responds differently to two observer outputs, and
    /// the observation map takes at least two values on reachable states.
    pub fn validate_minimal(&self, starts: &[Joint]) -> Result<MinimalityReport> {
        let reach = self.reachable(starts)?;
        let mut env_reach: Vec<usize> = reach.iter().map(|j| j.env).collect();
        env_reach.sort_unstable();
        env_reach.dedup();

        let nz = self.observer.num_outputs();
        let actions_affect_environment = env_reach.iter().any(|&s| {
            let first = self.environment.next(s, self.action_for(0));
            (1..nz).any(|z| self.environment.next(s, self.action_for(z)) != first)
        });
        let observations: HashSet<usize> =
            env_reach.iter().map(|&s| self.environment.observe(s)).collect();

        Ok(MinimalityReport {
            sensing: self.observer.num_inputs() >= 1,
            action: self.observer.num_outputs() >= 1,
            nontrivial_dynamics: self.observer.num_states() > 1,
            actions_affect_environment,
            environment_affects_inputs: observations.len() > 1,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimalityReport {
    /// `|Y| >= 1`
    pub sensing: bool,
    /// `|Z| >= 1`
    pub action: bool,
    /// `|X| > 1`
    pub nontrivial_dynamics: bool,
    pub actions_affect_environment: bool,
    pub environment_affects_inputs: bool,
}

impl MinimalityReport {
    pub fn feedback_closure(&self) -> bool {
        self.actions_affect_environment && self.environment_affects_inputs
    }

    pub fn passed(&self) -> bool {
        self.sensing && self.action && self.nontrivial_dynamics && self.feedback_closure()
    }

    pub fn conditions(&self) -> [(&'static str, bool); 5] {
        [
            ("sensing", self.sensing),
            ("action", self.action),
            ("nontrivial-dynamics", self.nontrivial_dynamics),
            ("actions-affect-environment", self.actions_affect_environment),
            ("environment-affects-inputs", self.environment_affects_inputs),
        ]
    }
}
