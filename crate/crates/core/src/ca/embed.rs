//! An observer living inside a cellular automaton.
//!
//! A contiguous block of `k` cells holds the observer's state (block bits
//! read left to right are the binary code of the state index). The two cells
//! flanking the block are its frontier: their bits are the observer's input
//! (`2·left + right`) and its output is a pair of bits (`2·left + right`)
//! acting on them.
//!
//! Per step: read the frontier, update the observer, update every cell by
//! the rule from the pre-step row, overwrite the block with the new state,
//! then apply the output to the two frontier cells.

use super::lattice::ca_step;
use super::rule::CaRule;
use crate::alphabet::Alphabet;
use crate::error::{Error, Result, SetKind};
use crate::observer::{Boundary, Observer};

/// How the observer's output acts on the frontier cells after the rule has
/// updated them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrontierAction {
    /// The output bit replaces the cell.
    #[default]
    Overwrite,
    /// The output bit gates the cell: the cell keeps its rule-updated value
    /// when the bit is 1 and is cleared when it is 0.
    Gate,
}

#[derive(Debug, Clone)]
pub struct EmbeddedSystem {
    rule: CaRule,
    lattice: Vec<bool>,
    block_start: usize,
    block_width: usize,
    observer: Observer,
    frontier: FrontierAction,
}

/// One observer step inside the lattice; `t` counts from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddedStep {
    pub t: usize,
    pub input: usize,
    pub state: usize,
    pub output: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedRun {
    /// `steps + 1` rows, the first being the initial lattice.
    pub diagram: Vec<Vec<bool>>,
    pub trace: Vec<EmbeddedStep>,
}

pub fn embed(
    rule: CaRule,
    lattice: Vec<bool>,
    block_start: usize,
    observer: Observer,
) -> Result<EmbeddedSystem> {
    let w = lattice.len();
    if w < 3 {
        return Err(Error::InvalidInput(format!("lattice width {w} is below 3")));
    }
    if block_start >= w {
        return Err(Error::InvalidInput(format!("block start {block_start} outside width {w}")));
    }
    let nx = observer.num_states();
    if nx < 2 || !nx.is_power_of_two() {
        return Err(Error::Encoding(format!(
            "observer has {nx} states; a block of k cells needs exactly 2^k"
        )));
    }
    let k = nx.trailing_zeros() as usize;
    if k + 2 > w {
        return Err(Error::InvalidInput(format!(
            "block of {k} cells plus two frontier cells does not fit in width {w}"
        )));
    }
    if observer.num_inputs() != 4 || observer.num_outputs() != 4 {
        return Err(Error::Encoding(format!(
            "frontier encodings need 4 inputs and 4 outputs, observer has {} and {}",
            observer.num_inputs(),
            observer.num_outputs()
        )));
    }
    Ok(EmbeddedSystem {
        rule,
        lattice,
        block_start,
        block_width: k,
        observer,
        frontier: FrontierAction::default(),
    })
}

impl EmbeddedSystem {
    pub fn with_frontier(mut self, frontier: FrontierAction) -> Self {
        self.frontier = frontier;
        self
    }

    pub fn frontier(&self) -> FrontierAction {
        self.frontier
    }

    pub fn observer(&self) -> &Observer {
        &self.observer
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    pub fn block_cells(&self) -> impl Iterator<Item = usize> + '_ {
        let w = self.lattice.len();
        (0..self.block_width).map(move |i| (self.block_start + i) % w)
    }

    /// `(left, right)` frontier cell indices.
    pub fn frontier_cells(&self) -> (usize, usize) {
        let w = self.lattice.len();
        (
            (self.block_start + w - 1) % w,
            (self.block_start + self.block_width) % w,
        )
    }

    fn block_code(&self, row: &[bool]) -> usize {
        self.block_cells().fold(0, |acc, c| (acc << 1) | usize::from(row[c]))
    }

    pub fn run_embedded(&self, steps: usize) -> EmbeddedRun {
        let (lf, rf) = self.frontier_cells();
        let k = self.block_width;
        let block: Vec<usize> = self.block_cells().collect();
        let mut row = self.lattice.clone();
        let mut x = self.block_code(&row);
        let mut diagram = Vec::with_capacity(steps + 1);
        let mut trace = Vec::with_capacity(steps);
        diagram.push(row.clone());
        for t in 1..=steps {
            let y = (usize::from(row[lf]) << 1) | usize::from(row[rf]);
            x = self.observer.next(x, y);
            let mut next = ca_step(&row, &self.rule).expect("width checked at construction");
            for (i, &c) in block.iter().enumerate() {
                next[c] = (x >> (k - 1 - i)) & 1 == 1;
            }
            let z = self.observer.out(x);
            let (zl, zr) = ((z >> 1) & 1 == 1, z & 1 == 1);
            match self.frontier {
                FrontierAction::Overwrite => {
                    next[lf] = zl;
                    next[rf] = zr;
                }
                FrontierAction::Gate => {
                    next[lf] &= zl;
                    next[rf] &= zr;
                }
            }
            trace.push(EmbeddedStep {
                t,
                input: y,
                state: x,
                output: z,
            });
            diagram.push(next.clone());
            row = next;
        }
        EmbeddedRun { diagram, trace }
    }
}

fn block_alphabets(k: usize) -> Result<(Alphabet, Alphabet, Alphabet)> {
    let bits = |n: usize, w: usize| format!("{n:0w$b}");
    Ok((
        Alphabet::new(SetKind::State, (0..1usize << k).map(|n| bits(n, k)))?,
        Alphabet::new(SetKind::Input, (0..4).map(|n| bits(n, 2)))?,
        Alphabet::new(SetKind::Output, (0..4).map(|n| bits(n, 2)))?,
    ))
}

/// Block transition that reproduces the rule inside the block, given the
/// frontier bits as outer neighbors.
fn rule_driven_transition(rule: &CaRule, k: usize) -> Vec<usize> {
    let mut transition = Vec::with_capacity((1 << k) * 4);
    for x in 0..1usize << k {
        let bit = |i: usize| (x >> (k - 1 - i)) & 1 == 1;
        for y in 0..4usize {
            let (l, r) = ((y >> 1) & 1 == 1, y & 1 == 1);
            let next = (0..k).fold(0usize, |acc, i| {
                let left = if i == 0 { l } else { bit(i - 1) };
                let right = if i + 1 == k { r } else { bit(i + 1) };
                (acc << 1) | usize::from(rule.apply(left, bit(i), right))
            });
            transition.push(next);
        }
    }
    transition
}

/// An observer whose block evolves exactly like the surrounding automaton
/// and whose output passes both frontier cells through unchanged. Embedded
/// with [`FrontierAction::Gate`] it is invisible.
pub fn transparent_observer(rule: &CaRule, k: usize) -> Result<Observer> {
    if k == 0 {
        return Err(Error::InvalidInput("block width must be at least 1".into()));
    }
    let (s, i, o) = block_alphabets(k)?;
    Observer::from_tables(
        s,
        i,
        o,
        rule_driven_transition(rule, k),
        vec![0b11; 1 << k],
        Boundary::new(format!("{k} block cells inside; frontier and beyond outside")),
    )
}

/// Same block dynamics as [`transparent_observer`], but writes `(0, 0)` to
/// both frontier cells every step.
pub fn damping_observer(rule: &CaRule, k: usize) -> Result<Observer> {
    if k == 0 {
        return Err(Error::InvalidInput("block width must be at least 1".into()));
    }
    let (s, i, o) = block_alphabets(k)?;
    Observer::from_tables(
        s,
        i,
        o,
        rule_driven_transition(rule, k),
        vec![0b00; 1 << k],
        Boundary::new(format!("{k} block cells inside; frontier and beyond outside")),
    )
}
