//! Simulator, analyzer and compiler toolkit for active membrane systems
//! without charges or dissolution.
//!
//! The crate provides:
//!
//! * a line-oriented source format for membrane systems ([`parse`]),
//! * the maximally-parallel transition semantics, with seeded single runs
//!   and exhaustive exploration of all computations ([`semantics`]),
//! * dependency-graph analysis and single-object verdict prediction
//!   ([`analysis`]),
//! * bounded register programs with configuration graphs ([`tm`]),
//! * family constructions bridging machines, membrane systems, truth-table
//!   reductions and circuits ([`families`], [`reductions`], [`circuit`]).

pub mod analysis;
pub mod circuit;
pub mod config;
pub mod error;
pub mod families;
pub mod multiset;
pub mod parse;
pub mod reductions;
pub mod semantics;
pub mod system;
pub mod tm;

pub use config::Configuration;
pub use error::{Error, Result};
pub use multiset::Multiset;
pub use semantics::{ExploreReport, ExploreResult, Mode, RunResult, Verdict};
pub use system::{LabelId, MembraneSystem, ObjId, Rule, RuleKind, SystemBuilder, ENV};
