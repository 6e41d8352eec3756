use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::coupled::{CoupledSystem, Joint};
use crate::environment::Environment;
use crate::error::{Error, Result, SetKind};
use crate::observer::Observer;

/// How a deterministic closed loop settles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdaptationResult {
    /// The trajectory revisited a joint state. `steps` is the step at which
    /// the revisit happened, `transient` the step at which the cycle was
    /// first entered, and `period = steps - transient`.
    TransientToCycle {
        steps: usize,
        transient: usize,
        period: usize,
    },
    /// The goal held after `steps` steps (0 when it holds at the start).
    GoalReached { steps: usize },
    /// The trajectory closed a cycle without ever meeting the goal.
    GoalUnreachable { explored: usize },
}

impl AdaptationResult {
    pub fn kind(&self) -> &'static str {
        match self {
            AdaptationResult::TransientToCycle { .. } => "transient-to-cycle",
            AdaptationResult::GoalReached { .. } => "goal-reached",
            AdaptationResult::GoalUnreachable { .. } => "goal-unreachable",
        }
    }

    pub fn steps(&self) -> Option<usize> {
        match *self {
            AdaptationResult::TransientToCycle { steps, .. }
            | AdaptationResult::GoalReached { steps } => Some(steps),
            AdaptationResult::GoalUnreachable { .. } => None,
        }
    }

    pub fn cycle_period(&self) -> Option<usize> {
        match *self {
            AdaptationResult::TransientToCycle { period, .. } => Some(period),
            _ => None,
        }
    }
}

/// Steps until the loop from `start` enters its limit cycle, or, with a
/// goal, until the goal predicate first holds.
///
/// A deterministic finite loop always revisits within `|X|·|S|` steps, so
/// `CapExceeded` only fires when `cap` is below that bound.
pub fn adaptation_time(
    sys: &CoupledSystem,
    start: Joint,
    goal: Option<&dyn Fn(Joint) -> bool>,
    cap: usize,
) -> Result<AdaptationResult> {
    if cap == 0 {
        return Err(Error::InvalidInput("cap must be at least 1".into()));
    }
    if start.state >= sys.observer().num_states() || start.env >= sys.environment().num_states() {
        return Err(Error::InvalidInput(format!("start {start:?} out of range")));
    }
    if let Some(goal) = goal {
        if goal(start) {
            return Ok(AdaptationResult::GoalReached { steps: 0 });
        }
    }
    let mut seen: HashMap<Joint, usize> = HashMap::from([(start, 0)]);
    let mut j = start;
    for t in 1..=cap {
        j = sys.step_coupled(j, t).0;
        if let Some(goal) = goal {
            if goal(j) {
                return Ok(AdaptationResult::GoalReached { steps: t });
            }
        }
        if let Some(&first) = seen.get(&j) {
            return Ok(match goal {
                Some(_) => AdaptationResult::GoalUnreachable { explored: t },
                None => AdaptationResult::TransientToCycle {
                    steps: t,
                    transient: first,
                    period: t - first,
                },
            });
        }
        seen.insert(j, t);
    }
    Err(Error::CapExceeded { cap })
}

/// An environment that plays `word` (labels of the observer's inputs) one
/// symbol per step regardless of the observer's actions, then repeats the
/// last symbol. Coupling an observer to it turns open-loop input words into
/// a closed loop, so [`adaptation_time`] covers both settings.
pub fn scripted_environment(obs: &Observer, word: &[&str]) -> Result<Environment> {
    if word.is_empty() {
        return Err(Error::InvalidInput("input word must not be empty".into()));
    }
    let symbols = word
        .iter()
        .map(|w| obs.inputs().lookup(w))
        .collect::<Result<Vec<_>>>()?;
    let n = word.len();
    let states = Alphabet::numbered(SetKind::EnvState, "w", n)?;
    let na = obs.num_outputs();
    let transition = (0..n)
        .flat_map(|i| std::iter::repeat_n((i + 1).min(n - 1), na))
        .collect();
    Environment::from_tables(
        states,
        obs.outputs().retagged(SetKind::Action),
        obs.inputs().retagged(SetKind::Observation),
        transition,
        symbols,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn thermostat_flip_cycle() {
        let sys = CoupledSystem::new(thermostat(), flip_environment()).unwrap();
        let r = adaptation_time(&sys, sys.joint("OFF", "Cold").unwrap(), None, 100).unwrap();
        assert_eq!(
            r,
            AdaptationResult::TransientToCycle {
                steps: 2,
                transient: 0,
                period: 2
            }
        );
    }

    #[test]
    fn constant_hot_reaches_fixed_point() {
        let sys = CoupledSystem::new(thermostat(), constant_environment("Hot")).unwrap();
        let r = adaptation_time(&sys, sys.joint("ON", "Hot").unwrap(), None, 100).unwrap();
        assert_eq!(
            r,
            AdaptationResult::TransientToCycle {
                steps: 2,
                transient: 1,
                period: 1
            }
        );
        let held = sys.run(sys.joint("ON", "Hot").unwrap(), 3);
        assert!(held.joints().all(|j| sys.joint_labels(j) == ("OFF", "Hot")));
    }

    #[test]
    fn goal_modes() {
        let sys = CoupledSystem::new(thermostat(), flip_environment()).unwrap();
        let start = sys.joint("OFF", "Cold").unwrap();
        let on = sys.observer().states().lookup("ON").unwrap();
        let reach = |j: Joint| j.state == on;
        assert_eq!(
            adaptation_time(&sys, start, Some(&reach), 10).unwrap(),
            AdaptationResult::GoalReached { steps: 1 }
        );
        let never = |_: Joint| false;
        assert_eq!(
            adaptation_time(&sys, start, Some(&never), 10).unwrap().kind(),
            "goal-unreachable"
        );
        assert_eq!(
            adaptation_time(&sys, start, None, 1),
            Err(Error::CapExceeded { cap: 1 })
        );
        assert!(adaptation_time(&sys, start, None, 0).is_err());
    }

    #[test]
    fn open_loop_word() {
        let t = thermostat();
        let env = scripted_environment(&t, &["Cold", "Cold", "Hot"]).unwrap();
        let sys = CoupledSystem::new(t, env).unwrap();
        let trace = sys.run(sys.joint("OFF", "w0").unwrap(), 4);
        let states: Vec<_> = trace.joints().map(|j| sys.joint_labels(j).0).collect();
        assert_eq!(states, ["ON", "ON", "OFF", "OFF"]);
    }
}
