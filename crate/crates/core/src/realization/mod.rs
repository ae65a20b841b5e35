//! The dynamical realization of a left order: enumerated elements are placed
//! on the line at exact dyadic points, preserving the order.

mod build;
mod diagnostics;
mod dyadic;

pub use build::{build_realization, order_embedding_violations, Realization, RealizationEntry};
pub use diagnostics::{
    convexity_check, enumeration_independence, gap_bound_check, gap_spectrum, non_cocompact_demo,
    partial_action, stable_gap_tightness, BaseGap, ConvexityReport, Gap, GapBoundReport, GapReport,
    IndependenceReport, LevelBracket, NonCocompactReport, PartialAction, TightnessReport, Window,
};
pub use dyadic::DyadicRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("the enumeration is empty")]
    EmptyEnumeration,
    #[error("the enumeration must start with the identity, found {0}")]
    NotStartingWithIdentity(String),
    #[error("{0} is enumerated twice")]
    Duplicate(String),
    #[error("the order is inconsistent on {first} and {second}")]
    Inconsistent { first: String, second: String },
    #[error("the window holds fewer than two orbit points")]
    EmptyWindow,
}
