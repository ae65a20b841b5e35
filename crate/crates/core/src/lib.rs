//! Exact left and circular orders on braid, modular and Tararin groups.
//!
//! The crate is split into four layers:
//!
//! * [`group`]: normal forms, multiplication and ball enumeration.
//! * [`orders`]: sign oracles, the Dubrovina-Dubrovin order on B3, Tararin and
//!   rational orders, and brute-force partial cone search.
//! * [`realization`]: the dyadic dynamical realization on the line and its
//!   finite-scale diagnostics.
//! * [`circular`]: Moebius actions on the boundary of the hyperbolic plane,
//!   circular orders on PSL(2,Z), lifts to the line and rotation numbers.

pub mod circular;
pub mod group;
pub mod orders;
pub mod realization;

pub use group::{Group, GroupError, GroupId};

