//! The "observes/modifies" relation between observers, and the registry that
//! keeps it acyclic.

use std::collections::HashMap;

use super::second_order::{second_order_wrap, RuleFamily};
use super::stack::{stack, Wiring};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::observer::Observer;

/// Directed graph over observer ids. Nodes and edges keep insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MetaGraph {
    nodes: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Vec<usize>>,
}

impl MetaGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, id: &str) -> usize {
        if let Some(&i) = self.index.get(id) {
            return i;
        }
        self.index.insert(id.to_string(), self.nodes.len());
        self.nodes.push(id.to_string());
        self.edges.push(Vec::new());
        self.nodes.len() - 1
    }

    /// `from` observes or modifies `to`.
    pub fn add_edge(&mut self, from: &str, to: &str) {
        let a = self.add_node(from);
        let b = self.add_node(to);
        if !self.edges[a].contains(&b) {
            self.edges[a].push(b);
        }
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn successors(&self, id: &str) -> impl Iterator<Item = &str> {
        self.index
            .get(id)
            .into_iter()
            .flat_map(|&i| self.edges[i].iter().map(|&j| self.nodes[j].as_str()))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WellFoundedness {
    WellFounded,
    /// Nodes along a directed cycle, in edge order, starting where the
    /// depth-first search first re-entered it.
    Cycle(Vec<String>),
}

impl WellFoundedness {
    pub fn is_well_founded(&self) -> bool {
        matches!(self, WellFoundedness::WellFounded)
    }
}

/// Depth-first cycle detection.
pub fn check_well_founded(graph: &MetaGraph) -> WellFoundedness {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = graph.nodes.len();
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // (node, next edge to follow)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        mark[root] = Mark::Open;
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            let edge = graph.edges[v].get(top.1).copied();
            top.1 += 1;
            match edge {
                Some(w) => match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Open;
                        stack.push((w, 0));
                    }
                    Mark::Open => {
                        let start = stack
                            .iter()
                            .position(|&(u, _)| u == w)
                            .expect("open node is on the stack");
                        return WellFoundedness::Cycle(
                            stack[start..].iter().map(|&(u, _)| graph.nodes[u].clone()).collect(),
                        );
                    }
                    Mark::Done => {}
                },
                None => {
                    mark[v] = Mark::Done;
                    stack.pop();
                }
            }
        }
    }
    WellFoundedness::WellFounded
}

/// Meta-observation edges registered by composite constructions. Adding an
/// edge that would close a cycle fails and leaves the registry unchanged.
///
/// The registry is the only mutable structure here; writers need `&mut`.
#[derive(Debug, Clone, Default)]
pub struct MetaRegistry {
    graph: MetaGraph,
}

impl MetaRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn graph(&self) -> &MetaGraph {
        &self.graph
    }

    pub fn register(&mut self, from: &str, to: &str) -> Result<()> {
        let mut candidate = self.graph.clone();
        candidate.add_edge(from, to);
        match check_well_founded(&candidate) {
            WellFoundedness::WellFounded => {
                self.graph = candidate;
                Ok(())
            }
            WellFoundedness::Cycle(cycle) => Err(Error::CyclicMeta {
                from: from.to_string(),
                to: to.to_string(),
                cycle,
            }),
        }
    }

    /// [`stack`], recording that `upper_id` observes `lower_id`.
    pub fn stack(
        &mut self,
        lower_id: &str,
        lower: &Observer,
        upper_id: &str,
        upper: &Observer,
        wiring: &Wiring,
    ) -> Result<Observer> {
        let composite = stack(lower, upper, wiring)?;
        self.register(upper_id, lower_id)?;
        Ok(composite)
    }

    /// [`second_order_wrap`], recording that `{id}#meta` modifies `id`.
    pub fn wrap_second_order(
        &mut self,
        id: &str,
        sets: (&Alphabet, &Alphabet, &Alphabet),
        family: &RuleFamily,
    ) -> Result<Observer> {
        let wrapped = second_order_wrap(sets.0, sets.1, sets.2, family)?;
        self.register(&format!("{id}#meta"), id)?;
        Ok(wrapped)
    }
}
