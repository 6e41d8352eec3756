use std::collections::HashMap;

use super::ObserverMorphism;
use crate::alphabet::Alphabet;
use crate::error::SetKind;
use crate::observer::Observer;

/// The coarsest partition of states in which equivalent states share an
/// output and, on every input, move into equivalent states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BehavioralPartition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl BehavioralPartition {
    /// Moore-style refinement starting from the output partition.
    pub fn compute(obs: &Observer) -> Self {
        let n = obs.num_states();
        let mut block_of = renumber((0..n).map(|x| vec![obs.out(x)]));
        let mut count = block_count(&block_of);
        loop {
            let refined = renumber((0..n).map(|x| {
                let mut sig = Vec::with_capacity(obs.num_inputs() + 1);
                sig.push(block_of[x]);
                sig.extend((0..obs.num_inputs()).map(|y| block_of[obs.next(x, y)]));
                sig
            }));
            let refined_count = block_count(&refined);
            block_of = refined;
            if refined_count == count {
                break;
            }
            count = refined_count;
        }
        let mut blocks = vec![Vec::new(); count];
        for (x, &b) in block_of.iter().enumerate() {
            blocks[b].push(x);
        }
        BehavioralPartition { block_of, blocks }
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Blocks numbered by their smallest member; members ascending.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn equivalent(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }
}

/// Numbers signatures by first occurrence.
fn renumber<I: Iterator<Item = Vec<usize>>>(sigs: I) -> Vec<usize> {
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    sigs.map(|s| {
        let next = ids.len();
        *ids.entry(s).or_insert(next)
    })
    .collect()
}

fn block_count(block_of: &[usize]) -> usize {
    block_of.iter().max().map_or(0, |m| m + 1)
}

/// Result of [`minimize`].
#[derive(Debug, Clone)]
pub struct Minimized {
    pub observer: Observer,
    pub partition: BehavioralPartition,
    /// Groups of inputs that act identically on blocks.
    pub input_classes: Vec<Vec<usize>>,
    /// Surjective homomorphism from the original onto `observer`.
    pub quotient: ObserverMorphism,
}

impl Minimized {
    pub fn reduced_sizes(&self) -> (usize, usize, usize) {
        (
            self.observer.num_states(),
            self.observer.num_inputs(),
            self.observer.num_outputs(),
        )
    }
}

/// Quotients states by behavioral equivalence, merges inputs that act
/// identically on the quotient, and drops outputs never emitted.
///
/// Each quotient element keeps the label of its first member.
pub fn minimize(obs: &Observer) -> Minimized {
    let partition = BehavioralPartition::compute(obs);
    let nx = obs.num_states();

    let class_of_input = renumber(
        (0..obs.num_inputs()).map(|y| (0..nx).map(|x| partition.block_of(obs.next(x, y))).collect()),
    );
    let n_input_classes = block_count(&class_of_input);
    let mut input_classes = vec![Vec::new(); n_input_classes];
    for (y, &c) in class_of_input.iter().enumerate() {
        input_classes[c].push(y);
    }

    let mut emitted = vec![false; obs.num_outputs()];
    for x in 0..nx {
        emitted[obs.out(x)] = true;
    }
    let kept: Vec<usize> = (0..obs.num_outputs()).filter(|&z| emitted[z]).collect();
    let mut output_slot = vec![0; obs.num_outputs()];
    for (i, &z) in kept.iter().enumerate() {
        output_slot[z] = i;
    }

    let reps: Vec<usize> = partition.blocks().iter().map(|b| b[0]).collect();
    let input_reps: Vec<usize> = input_classes.iter().map(|c| c[0]).collect();

    let mut transition = Vec::with_capacity(reps.len() * input_reps.len());
    for &x in &reps {
        for &y in &input_reps {
            transition.push(partition.block_of(obs.next(x, y)));
        }
    }
    let output_map = reps.iter().map(|&x| output_slot[obs.out(x)]).collect();

    let label = |a: &Alphabet, idx: &[usize], kind| {
        Alphabet::new(kind, idx.iter().map(|&i| a.label(i).to_string()))
            .expect("representative labels are unique and non-empty")
    };
    let observer = Observer::from_tables(
        label(obs.states(), &reps, SetKind::State),
        label(obs.inputs(), &input_reps, SetKind::Input),
        label(obs.outputs(), &kept, SetKind::Output),
        transition,
        output_map,
        obs.boundary().clone(),
    )
    .expect("quotient tables are in range");

    let phi_x = (0..nx).map(|x| partition.block_of(x)).collect();
    let phi_y = class_of_input;
    // Outputs outside the image of g only need some target; the output
    // commutation condition never reaches them.
    let phi_z = (0..obs.num_outputs())
        .map(|z| if emitted[z] { output_slot[z] } else { 0 })
        .collect();
    let quotient = ObserverMorphism::new(obs, &observer, phi_x, phi_y, phi_z)
        .expect("quotient maps are total and in range");

    Minimized {
        observer,
        partition,
        input_classes,
        quotient,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::morphism::{check_homomorphism, equivalent};

    #[test]
    fn thermostat_is_already_minimal() {
        let t = thermostat();
        let m = minimize(&t);
        assert_eq!(m.reduced_sizes(), (2, 2, 2));
        assert_eq!(m.observer, t);
        assert!(check_homomorphism(&t, &m.observer, &m.quotient).unwrap().holds());
    }

    #[test]
    fn redundant_observer_collapses() {
        let r = redundant_observer();
        let m = minimize(&r);
        assert_eq!(m.reduced_sizes(), (1, 1, 1));
        assert_eq!(m.partition.blocks(), &[vec![0, 1]]);
        assert!(check_homomorphism(&r, &m.observer, &m.quotient).unwrap().holds());
    }

    #[test]
    fn merges_equivalent_inputs_and_drops_unused_outputs() {
        // `warm` and `hot` act identically; output `idle` is never emitted.
        let obs = Observer::builder(["lo", "hi"], ["cold", "warm", "hot"], ["up", "down", "idle"])
            .transition("lo", "cold", "lo")
            .transition("lo", "warm", "hi")
            .transition("lo", "hot", "hi")
            .transition("hi", "cold", "lo")
            .transition("hi", "warm", "hi")
            .transition("hi", "hot", "hi")
            .output("lo", "up")
            .output("hi", "down")
            .build()
            .unwrap();
        let m = minimize(&obs);
        assert_eq!(m.reduced_sizes(), (2, 2, 2));
        assert_eq!(m.input_classes, vec![vec![0], vec![1, 2]]);
        assert_eq!(m.observer.outputs().labels(), ["up", "down"]);
        assert!(check_homomorphism(&obs, &m.observer, &m.quotient).unwrap().holds());
    }

    #[test]
    fn idempotent_up_to_isomorphism() {
        let r = redundant_observer();
        let once = minimize(&r).observer;
        let twice = minimize(&once).observer;
        assert!(equivalent(&once, &twice));
    }
}
