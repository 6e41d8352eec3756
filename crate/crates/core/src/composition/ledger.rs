use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// An input that crossed an observer's boundary and the state it produced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fact {
    pub observer: String,
    pub step: u64,
    pub input: String,
    pub state: String,
}

/// Append-only record of relational facts. Per observer, steps never
/// decrease.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactLedger {
    entries: Vec<Fact>,
    last_step: HashMap<String, u64>,
}

impl FactLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Fact] {
        &self.entries
    }

    pub fn record_fact(
        &mut self,
        observer: impl Into<String>,
        step: u64,
        input: impl Into<String>,
        state: impl Into<String>,
    ) -> Result<()> {
        let observer = observer.into();
        if let Some(&last) = self.last_step.get(&observer) {
            if step < last {
                return Err(Error::OutOfOrder { observer, step, last });
            }
        }
        self.last_step.insert(observer.clone(), step);
        self.entries.push(Fact {
            observer,
            step,
            input: input.into(),
            state: state.into(),
        });
        Ok(())
    }

    /// Every fact recorded by `observer` up to and including `step`.
    pub fn facts_relative_to(&self, observer: &str, step: u64) -> Vec<&Fact> {
        self.entries
            .iter()
            .filter(|f| f.observer == observer && f.step <= step)
            .collect()
    }

    /// The inputs `observer` has received by `step`, as a set. Two observers
    /// share a fact when the same input label crossed both boundaries.
    pub fn known_inputs(&self, observer: &str, step: u64) -> BTreeSet<&str> {
        self.facts_relative_to(observer, step)
            .into_iter()
            .map(|f| f.input.as_str())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appends_in_order() {
        let mut l = FactLedger::new();
        l.record_fact("alice", 1, "Up", "SawUp").unwrap();
        assert_eq!(l.len(), 1);
        l.record_fact("alice", 2, "Up", "SawUp").unwrap();
        l.record_fact("bob", 1, "x", "y").unwrap();
        assert_eq!(l.len(), 3);
    }

    #[test]
    fn rejects_out_of_order() {
        let mut l = FactLedger::new();
        l.record_fact("alice", 2, "Up", "SawUp").unwrap();
        assert_eq!(
            l.record_fact("alice", 1, "Up", "SawUp"),
            Err(Error::OutOfOrder {
                observer: "alice".into(),
                step: 1,
                last: 2
            })
        );
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn unknown_observer_knows_nothing() {
        let mut l = FactLedger::new();
        l.record_fact("alice", 1, "Up", "SawUp").unwrap();
        assert!(l.facts_relative_to("carol", 10).is_empty());
        assert!(l.facts_relative_to("alice", 0).is_empty());
    }
}
