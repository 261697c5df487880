//! State-vector toolkit for checking arguments about copying and deleting
//! quantum states.
//!
//! - [`hilbert`]: kets on tensor-product spaces, inner products, fidelity,
//!   seeded Haar-random sampling.
//! - [`operators`]: dense operators, named gates, Gram feasibility of
//!   partially specified maps and unitary completion.
//! - [`machines`]: deleting machines, the swap machine and its
//!   counter-example, C-NOT/MC-NOT copy and delete trials, clonability.
//! - [`scenarios`] and [`report`]: the named-scenario runner behind the
//!   `uncopy` binary.

pub mod cli;
pub mod error;
pub mod hilbert;
pub mod machines;
pub mod operators;
pub mod report;
pub mod scenarios;

pub use error::{Error, Result};
pub use hilbert::{Ket, SpaceShape, C64};
pub use operators::{Operator, PartialMapSpec};
