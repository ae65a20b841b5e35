//! Left orders as sign oracles, concrete orders, and partial cone search.

mod axioms;
mod braid;
mod cones;
mod lex;
mod natural;
mod tararin;

pub use axioms::{check_left_invariance, check_order_axioms, AxiomReport, AxiomViolation};
pub use braid::{
    braid_to_b3, b3_to_braid, dd_sign, handle_reduce, BraidWord, DdOrder, HandleReduced,
    Sigma1Class, HANDLE_ITERATION_CAP,
};
pub use cones::{
    enumerate_partial_cones, isolation_evidence, restriction, ConeSearch, IsolationReport,
    PartialCone, DEFAULT_BALL_BUDGET,
};
pub use lex::{lex_decompose, lex_extend, CosetSign, LexOrder, Restricted};
pub use natural::{rational_order, DirectSumOrder, RationalOrder};
pub use tararin::{tararin_orders, EpsilonSignature, TararinOrder};

use crate::group::{Group, GroupError};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// The sign of a non-identity element: positive means `g > e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Neg,
    Pos,
}

impl Sign {
    pub fn of(positive: bool) -> Sign {
        if positive {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn is_pos(self) -> bool {
        self == Sign::Pos
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    /// `Greater` for positive, `Less` for negative.
    pub fn ordering(self) -> Ordering {
        match self {
            Sign::Pos => Ordering::Greater,
            Sign::Neg => Ordering::Less,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::of(self == rhs)
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.to_i8()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Sign, String> {
        match v {
            1 => Ok(Sign::Pos),
            -1 => Ok(Sign::Neg),
            _ => Err(format!("sign must be +1 or -1, got {v}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+1",
            Sign::Neg => "-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("the identity has no sign")]
    Identity,
    #[error("handle reduction exceeded {0} steps")]
    IterationCap(usize),
    #[error("coset comparator is not invariant: {0}")]
    InvarianceViolation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("ball of {size} elements exceeds the budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("required element {0} is not in the ball")]
    RequiredNotInBall(String),
    #[error("required element {0} is not positive under the order")]
    RequiredNotPositive(String),
}

/// A left order on `G` given by the sign of each non-identity element.
pub trait SignOracle<G: Group> {
    fn label(&self) -> String;

    /// Sign of `g`. Callers must not pass the identity.
    fn sign(&self, g: &G::Elem) -> Sign;
}

impl<G: Group, O: SignOracle<G> + ?Sized> SignOracle<G> for &O {
    fn label(&self) -> String {
        (**self).label()
    }
    fn sign(&self, g: &G::Elem) -> Sign {
        (**self).sign(g)
    }
}

impl<G: Group, O: SignOracle<G> + ?Sized> SignOracle<G> for Box<O> {
    fn label(&self) -> String {
        (**self).label()
    }
    fn sign(&self, g: &G::Elem) -> Sign {
        (**self).sign(g)
    }
}

/// An oracle given by a closure.
pub struct FnOracle<F> {
    label: String,
    f: F,
}

impl<F> FnOracle<F> {
    pub fn new(label: impl Into<String>, f: F) -> Self {
        FnOracle {
            label: label.into(),
            f,
        }
    }
}

impl<G: Group, F: Fn(&G::Elem) -> Sign> SignOracle<G> for FnOracle<F> {
    fn label(&self) -> String {
        self.label.clone()
    }
    fn sign(&self, g: &G::Elem) -> Sign {
        (self.f)(g)
    }
}

/// Compares `f` and `g` under the order: `f < g` iff `f⁻¹g > e`.
pub fn compare<G: Group, O: SignOracle<G> + ?Sized>(
    group: &G,
    order: &O,
    f: &G::Elem,
    g: &G::Elem,
) -> Ordering {
    if f == g {
        return Ordering::Equal;
    }
    order.sign(&group.quotient(f, g)).ordering().reverse()
}

/// Sorts elements increasingly under the order.
pub fn sort_by_order<G: Group, O: SignOracle<G> + ?Sized>(group: &G, order: &O, elems: &mut [G::Elem]) {
    elems.sort_by(|f, g| compare(group, order, f, g));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{DirectSum, DirectSumElement};

    #[test]
    fn sign_serializes_as_integer() {
        assert_eq!(serde_json::to_string(&Sign::Neg).unwrap(), "-1");
        assert_eq!(serde_json::from_str::<Sign>("1").unwrap(), Sign::Pos);
        assert!(serde_json::from_str::<Sign>("0").is_err());
    }

    #[test]
    fn compare_on_integers() {
        let z = DirectSum::new(1);
        let o = DirectSumOrder::default();
        let g = |k| DirectSumElement::from_entries([(1, k)]);
        assert_eq!(compare(&z, &o, &g(-2), &g(3)), Ordering::Less);
        assert_eq!(compare(&z, &o, &g(3), &g(3)), Ordering::Equal);
        assert_eq!(compare(&z, &o, &g(4), &g(3)), Ordering::Greater);
    }
}
