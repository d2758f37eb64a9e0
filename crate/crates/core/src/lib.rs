//! Rough-set dependency analysis.
//!
//! Decision systems ([`dataset`]) are partitioned into indiscernibility
//! blocks ([`partition`]), scored by four dependency measures ([`measures`]),
//! reduced by greedy or exhaustive reduct search ([`selection`]) and checked
//! with a block-majority classifier ([`evaluation`]).

pub mod dataset;
pub mod error;
pub mod evaluation;
pub mod fraction;
pub mod measures;
pub mod partition;
pub mod selection;

pub use dataset::{AttributeSet, DecisionSystem, LoadConfig, MissingPolicy};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use measures::{DependencyProfile, DependencyValue, Measure};
pub use partition::{ContingencyTable, Partition};
pub use selection::{Direction, SelectionTrace};
