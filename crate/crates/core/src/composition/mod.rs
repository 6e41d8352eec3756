//! Building larger observers from smaller ones: hierarchical stacks,
//! rule-switching (second-order) observers, the meta-observation graph and
//! the relational fact ledger.

mod ledger;
mod meta;
mod second_order;
mod stack;
pub mod wigner;

pub use ledger::{Fact, FactLedger};
pub use meta::{check_well_founded, MetaGraph, MetaRegistry, WellFoundedness};
pub use second_order::{second_order_wrap, RuleFamily, RuleTable};
pub use stack::{stack, Wiring};
