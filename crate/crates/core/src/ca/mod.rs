//! Elementary cellular automata and observers embedded in them.

mod embed;
mod export;
mod lattice;
mod rule;

pub use embed::{
    damping_observer, embed, transparent_observer, EmbeddedRun, EmbeddedStep, EmbeddedSystem,
    FrontierAction,
};
pub use export::{to_pbm, to_text};
pub use lattice::{ca_step, evolve, parse_row, single_seed};
pub use rule::{rule_table, CaRule};
