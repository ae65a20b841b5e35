use super::{Generator, Group, GroupError, GroupId};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of an additive subgroup of ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RationalElement(pub Rational64);

impl fmt::Display for RationalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The subgroup of ℚ generated by a finite list of rationals. Non finitely
/// generated groups such as ℤ[1/2] are approximated by truncated lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGroup {
    pub generators: Vec<Rational64>,
}

impl RationalGroup {
    pub fn new(generators: Vec<Rational64>) -> Self {
        RationalGroup { generators }
    }

    /// ℤ[1/2] truncated to the generators 1, 1/2, …, 1/2^k.
    pub fn dyadic(k: u32) -> Self {
        RationalGroup::new((0..=k).map(|j| Rational64::new(1, 1 << j)).collect())
    }
}

impl Group for RationalGroup {
    type Elem = RationalElement;

    fn id(&self) -> GroupId {
        GroupId::Rational
    }

    fn identity(&self) -> RationalElement {
        RationalElement(Rational64::from_integer(0))
    }

    fn multiply(&self, g: &RationalElement, h: &RationalElement) -> RationalElement {
        RationalElement(g.0 + h.0)
    }

    fn invert(&self, g: &RationalElement) -> RationalElement {
        RationalElement(-g.0)
    }

    fn alphabet(&self) -> Vec<Generator<RationalElement>> {
        self.generators
            .iter()
            .enumerate()
            .map(|(i, q)| Generator::new(format!("q{i}"), RationalElement(*q)))
            .collect()
    }

    fn format(&self, g: &RationalElement) -> String {
        g.to_string()
    }

    /// Accepts either a rational literal (`3/4`, `-2`) or a word in `q0 q1 …`.
    fn parse(&self, s: &str) -> Result<RationalElement, GroupError> {
        if let Ok(q) = s.trim().parse::<Rational64>() {
            return Ok(RationalElement(q));
        }
        let w = super::Word::parse(self, s)?;
        Ok(self.evaluate(&w))
    }
}
