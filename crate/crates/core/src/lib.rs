//! Finite observers coupled to finite environments.
//!
//! An [`Observer`] senses inputs, updates a finite state and emits outputs;
//! an [`Environment`] receives those outputs as actions and produces the
//! next observation. [`CoupledSystem`] closes the loop. On top of that the
//! crate provides observer morphisms and isomorphism search, behavioral
//! minimization, complexity and adaptation measures, hierarchical and
//! second-order composition, and observers embedded in elementary cellular
//! automata.

pub mod alphabet;
pub mod ca;
pub mod composition;
pub mod coupled;
pub mod document;
pub mod environment;
pub mod error;
pub mod fixtures;
pub mod metrics;
pub mod morphism;
pub mod observer;
#[cfg(feature = "testkit")]
pub mod testkit;

pub use alphabet::Alphabet;
pub use coupled::{CoupledSystem, Joint, MinimalityReport, Trace, TraceRecord};
pub use environment::Environment;
pub use error::{Error, Result, SetKind};
pub use observer::{Boundary, Observer};
