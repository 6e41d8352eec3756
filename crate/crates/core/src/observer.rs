//! Finite observers: states, inputs, outputs, a total transition function, a
//! total output function and a descriptive boundary.

use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result, SetKind};

/// Declarative description of what lies inside the observer (its states) and
/// what lies outside (the environment). Carries no dynamics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    pub description: String,
}

impl Boundary {
    pub fn new(description: impl Into<String>) -> Self {
        Boundary {
            description: description.into(),
        }
    }
}

impl Default for Boundary {
    fn default() -> Self {
        Boundary::new("inside: internal states; outside: environment")
    }
}

/// A deterministic finite observer `(X, Y, Z, f, g, B)`.
///
/// Transitions are stored row-major by state: the successor of state `x` on
/// input `y` lives at `x * |Y| + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Observer {
    states: Alphabet,
    inputs: Alphabet,
    outputs: Alphabet,
    transition: Vec<usize>,
    output_map: Vec<usize>,
    boundary: Boundary,
}

impl Observer {
    /// Builds an observer from index tables, checking totality and ranges.
    pub fn from_tables(
        states: Alphabet,
        inputs: Alphabet,
        outputs: Alphabet,
        transition: Vec<usize>,
        output_map: Vec<usize>,
        boundary: Boundary,
    ) -> Result<Self> {
        let (nx, ny, nz) = (states.len(), inputs.len(), outputs.len());
        if transition.len() != nx * ny {
            return Err(Error::Malformed(format!(
                "transition table has {} entries, expected {}",
                transition.len(),
                nx * ny
            )));
        }
        if output_map.len() != nx {
            return Err(Error::Malformed(format!(
                "output table has {} entries, expected {nx}",
                output_map.len()
            )));
        }
        if let Some(&bad) = transition.iter().find(|&&t| t >= nx) {
            return Err(Error::Malformed(format!("transition target {bad} out of range")));
        }
        if let Some(&bad) = output_map.iter().find(|&&z| z >= nz) {
            return Err(Error::Malformed(format!("output {bad} out of range")));
        }
        Ok(Observer {
            states: states.retagged(SetKind::State),
            inputs: inputs.retagged(SetKind::Input),
            outputs: outputs.retagged(SetKind::Output),
            transition,
            output_map,
            boundary,
        })
    }

    pub fn builder<S, I, O>(states: S, inputs: I, outputs: O) -> ObserverBuilder
    where
        S: IntoIterator,
        S::Item: Into<String>,
        I: IntoIterator,
        I::Item: Into<String>,
        O: IntoIterator,
        O::Item: Into<String>,
    {
        ObserverBuilder {
            states: states.into_iter().map(Into::into).collect(),
            inputs: inputs.into_iter().map(Into::into).collect(),
            outputs: outputs.into_iter().map(Into::into).collect(),
            transitions: Vec::new(),
            outputs_of: Vec::new(),
            boundary: Boundary::default(),
        }
    }

    pub fn states(&self) -> &Alphabet {
        &self.states
    }

    pub fn inputs(&self) -> &Alphabet {
        &self.inputs
    }

    pub fn outputs(&self) -> &Alphabet {
        &self.outputs
    }

    pub fn boundary(&self) -> &Boundary {
        &self.boundary
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    /// `f(x, y)` by index. Panics on out-of-range indices.
    #[inline]
    pub fn next(&self, x: usize, y: usize) -> usize {
        assert!(y < self.inputs.len(), "input index {y} out of range");
        self.transition[x * self.inputs.len() + y]
    }

    /// `g(x)` by index. Panics on out-of-range indices.
    #[inline]
    pub fn out(&self, x: usize) -> usize {
        self.output_map[x]
    }

    pub fn transition_table(&self) -> &[usize] {
        &self.transition
    }

    pub fn output_table(&self) -> &[usize] {
        &self.output_map
    }

    /// `f(x, y)` by label.
    pub fn step_observer(&self, x: &str, y: &str) -> Result<&str> {
        let xi = self.states.lookup(x)?;
        let yi = self.inputs.lookup(y)?;
        Ok(self.states.label(self.next(xi, yi)))
    }

    /// `g(x)` by label.
    pub fn output(&self, x: &str) -> Result<&str> {
        let xi = self.states.lookup(x)?;
        Ok(self.outputs.label(self.out(xi)))
    }

    /// Feeds an input word from `x0`, returning the emitted outputs (one per
    /// input, each taken from the post-update state).
    pub fn run_word(&self, x0: usize, word: &[usize]) -> Vec<usize> {
        let mut x = x0;
        word.iter()
            .map(|&y| {
                x = self.next(x, y);
                self.out(x)
            })
            .collect()
    }

    pub fn with_boundary(mut self, boundary: Boundary) -> Self {
        self.boundary = boundary;
        self
    }

    /// Same tables under new labels (positionally matched).
    pub fn relabeled(&self, states: Alphabet, inputs: Alphabet, outputs: Alphabet) -> Result<Self> {
        if states.len() != self.num_states()
            || inputs.len() != self.num_inputs()
            || outputs.len() != self.num_outputs()
        {
            return Err(Error::Malformed("relabeling changes set sizes".into()));
        }
        Observer::from_tables(
            states,
            inputs,
            outputs,
            self.transition.clone(),
            self.output_map.clone(),
            self.boundary.clone(),
        )
    }

    /// States reachable from `from` under any input word (including `from`).
    pub fn reachable_from(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(x) = stack.pop() {
            for y in 0..self.num_inputs() {
                let n = self.next(x, y);
                if !seen[n] {
                    seen[n] = true;
                    stack.push(n);
                }
            }
        }
        seen
    }
}

/// Label-level construction of an [`Observer`].
#[derive(Debug, Clone)]
pub struct ObserverBuilder {
    states: Vec<String>,
    inputs: Vec<String>,
    outputs: Vec<String>,
    transitions: Vec<(String, String, String)>,
    outputs_of: Vec<(String, String)>,
    boundary: Boundary,
}

impl ObserverBuilder {
    pub fn transition(
        mut self,
        state: impl Into<String>,
        input: impl Into<String>,
        next: impl Into<String>,
    ) -> Self {
        self.transitions
            .push((state.into(), input.into(), next.into()));
        self
    }

    pub fn output(mut self, state: impl Into<String>, output: impl Into<String>) -> Self {
        self.outputs_of.push((state.into(), output.into()));
        self
    }

    pub fn boundary(mut self, description: impl Into<String>) -> Self {
        self.boundary = Boundary::new(description);
        self
    }

    pub fn build(self) -> Result<Observer> {
        let states = Alphabet::new(SetKind::State, self.states)?;
        let inputs = Alphabet::new(SetKind::Input, self.inputs)?;
        let outputs = Alphabet::new(SetKind::Output, self.outputs)?;

        let mut delta: HashMap<(usize, usize), usize> = HashMap::new();
        for (x, y, n) in &self.transitions {
            let key = (states.lookup(x)?, inputs.lookup(y)?);
            let n = states.lookup(n)?;
            if delta.insert(key, n).is_some() {
                return Err(Error::Malformed(format!("transition ({x}, {y}) defined twice")));
            }
        }
        let mut transition = Vec::with_capacity(states.len() * inputs.len());
        for (xi, x) in states.iter() {
            for (yi, y) in inputs.iter() {
                match delta.get(&(xi, yi)) {
                    Some(&n) => transition.push(n),
                    None => return Err(Error::MissingTransition(x.into(), y.into())),
                }
            }
        }

        let mut out: Vec<Option<usize>> = vec![None; states.len()];
        for (x, z) in &self.outputs_of {
            let xi = states.lookup(x)?;
            if out[xi].replace(outputs.lookup(z)?).is_some() {
                return Err(Error::Malformed(format!("output of `{x}` defined twice")));
            }
        }
        let output_map = out
            .into_iter()
            .enumerate()
            .map(|(xi, z)| z.ok_or_else(|| Error::MissingEntry("output", states.label(xi).into())))
            .collect::<Result<Vec<_>>>()?;

        Observer::from_tables(states, inputs, outputs, transition, output_map, self.boundary)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::thermostat;

    #[test]
    fn thermostat_transitions() {
        let t = thermostat();
        assert_eq!(t.step_observer("OFF", "Cold").unwrap(), "ON");
        assert_eq!(t.step_observer("OFF", "Hot").unwrap(), "OFF");
        assert_eq!(t.step_observer("ON", "Cold").unwrap(), "ON");
        assert_eq!(t.step_observer("ON", "Hot").unwrap(), "OFF");
    }

    #[test]
    fn unknown_input_is_identifier_error() {
        let err = thermostat().step_observer("OFF", "Warm").unwrap_err();
        assert_eq!(
            err,
            Error::UnknownIdentifier {
                kind: SetKind::Input,
                id: "Warm".into()
            }
        );
    }

    #[test]
    fn thermostat_outputs() {
        let t = thermostat();
        assert_eq!(t.output("ON").unwrap(), "HeaterOn");
        assert_eq!(t.output("OFF").unwrap(), "HeaterOff");
        assert!(matches!(
            t.output("MAYBE"),
            Err(Error::UnknownIdentifier { kind: SetKind::State, .. })
        ));
    }

    #[test]
    fn builder_reports_missing_transition() {
        let err = Observer::builder(["a", "b"], ["y"], ["z"])
            .transition("a", "y", "a")
            .output("a", "z")
            .output("b", "z")
            .build()
            .unwrap_err();
        assert_eq!(err, Error::MissingTransition("b".into(), "y".into()));
    }

    #[test]
    fn from_tables_checks_ranges() {
        let s = Alphabet::new(SetKind::State, ["a"]).unwrap();
        let i = Alphabet::new(SetKind::Input, ["y"]).unwrap();
        let o = Alphabet::new(SetKind::Output, ["z"]).unwrap();
        let err = Observer::from_tables(s, i, o, vec![1], vec![0], Boundary::default());
        assert!(matches!(err, Err(Error::Malformed(_))));
    }
}
