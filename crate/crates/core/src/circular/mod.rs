//! Circular orders on PSL(2,Z) from exact boundary actions.
//!
//! Points of the boundary ℚ ∪ {∞} are traversed counterclockwise in the
//! increasing direction of ℝ. The orbit of the base point 0 under the
//! deformed representation gives the circular order c⁽¹⁾; [`PiStar`] lifts a
//! circular order to a left order on B3 and [`QStar`] goes back.

mod config;
mod cover;
mod generations;
mod lift;
mod moebius;
mod pingpong;
mod qstar;
mod rep;

pub use config::{
    cocycle_check, cyclic_sign_of_positions, orbit_config, CircularConfig, CircularOrder,
    CocycleReport, CocycleViolation, ConfigEntry, ConfigOrder, Mirror, OrbitOrder,
};
pub use cover::{
    k_fold_lift, rotation_number, CoverOrbitOrder, CoverPoint, KFoldRep, LinePoint, Rotation,
};
pub use generations::reconstruct_by_generations;
pub use lift::{lift_eval, pi_star, pi_star_sign, LiftConvention, LiftPos, LiftedPosition, PiStar};
pub use moebius::{
    circular_sign, cmp_ccw, in_closed_arc, in_open_arc, BoundaryPoint, CircleKey, MoebiusMap,
    NonPositiveDeterminant,
};
pub use pingpong::{
    build_certified_deformed, gamma_word_identity, guardian_intervals, ping_pong_verify,
    GuardedInterval, IntervalOnCircle, PingPongData, PingPongReport, PingPongWitness,
    DEFAULT_GUARDIAN_RADIUS,
};
pub use qstar::{q_star_sign, QStar};
pub use rep::{build_rep, default_deformation, RepKind, Representation, DEFORMATION_CANDIDATES};

use crate::group::{Group, Psl2z, Psl2zElement};
use crate::orders::OrderError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircularError {
    #[error("invalid deformation: {0}")]
    InvalidDeformation(String),
    #[error("orbit is not free: {first} and {second} both send the base point to {point}")]
    NotFree {
        first: String,
        second: String,
        point: String,
    },
    #[error("no lift with square and cube equal to the shift by {t_shift}")]
    NoRootLift { t_shift: i64 },
    #[error("no representative in the fundamental domain for {0}")]
    RepresentativeSearch(String),
    #[error("no {k}-fold lift exists (need k = 1 or 5 mod 6)")]
    NoLift { k: u32 },
    #[error("the {k}-fold lift is not unique")]
    NonUniqueLift { k: u32 },
    #[error("no periodic point found up to period {max_period}")]
    NoPeriodicPoint { max_period: u32 },
    #[error("degenerate interval: {0}")]
    DegenerateInterval(String),
    #[error("ping-pong precondition failed: {0}")]
    PingPongPrecondition(String),
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// The ten coset representatives e, αβ, αβα, αβ², αβ²α, α, β, βα, β², β²α.
pub fn first_generation() -> Vec<Psl2zElement> {
    [
        "e", "al.be", "al.be.al", "al.be2", "al.be2.al", "al", "be", "be.al", "be2", "be2.al",
    ]
    .iter()
    .map(|w| Psl2z.parse(w).expect("valid word"))
    .collect()
}
