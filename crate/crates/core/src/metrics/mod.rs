//! Complexity, adaptation time and hitting-time measures.

mod adaptation;
mod complexity;
mod hitting;

pub use adaptation::{adaptation_time, scripted_environment, AdaptationResult};
pub use complexity::{complexity, ComplexityReport};
pub use hitting::expected_hitting_time;
