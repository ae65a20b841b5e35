//! Concrete groups, their normal forms and breadth-first ball enumeration.

mod b3;
mod ball;
mod direct_sum;
mod element;
mod psl2z;
mod rational;
mod tararin;
mod word;

pub use b3::{b3_normalize, B3Element, B3};
pub use ball::{ball, ball_with_generators, first_n, first_n_with_generators};
pub use direct_sum::{DirectSum, DirectSumElement};
pub use element::Element;
pub use psl2z::{Psl2z, Psl2zElement, Syllable};
pub use rational::{RationalElement, RationalGroup};
pub use tararin::{TararinElement, TararinGroup, TararinSpec};
pub use word::{Letter, Word};

use serde::{Deserialize, Serialize};
use std::fmt::{self, Debug};
use std::hash::Hash;
use thiserror::Error;

/// Identifies which concrete group an element or word belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupId {
    B3,
    Psl2z,
    Tararin,
    DirectSum,
    Rational,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupId::B3 => "b3",
            GroupId::Psl2z => "psl2z",
            GroupId::Tararin => "tararin",
            GroupId::DirectSum => "directsum",
            GroupId::Rational => "rational",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group mismatch: expected {expected}, found {found}")]
    Mismatch { expected: GroupId, found: GroupId },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid Tararin spec: {0}")]
    InvalidSpec(String),
    #[error("element not in group: {0}")]
    NotInGroup(String),
}

/// A named generator together with the element it denotes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator<E> {
    pub name: String,
    pub element: E,
}

impl<E> Generator<E> {
    pub fn new(name: impl Into<String>, element: E) -> Self {
        Generator {
            name: name.into(),
            element,
        }
    }
}

/// Dispatch for one concrete group.
pub trait Group {
    type Elem: Clone + Eq + Hash + Debug;

    fn id(&self) -> GroupId;
    fn identity(&self) -> Self::Elem;
    fn multiply(&self, g: &Self::Elem, h: &Self::Elem) -> Self::Elem;
    fn invert(&self, g: &Self::Elem) -> Self::Elem;

    /// Generators of the word alphabet, without inverses.
    fn alphabet(&self) -> Vec<Generator<Self::Elem>>;

    /// Symmetric generating set in shortlex order. Each generator is followed
    /// by its inverse unless the generator is an involution.
    fn ball_generators(&self) -> Vec<Generator<Self::Elem>> {
        let mut out = Vec::new();
        for g in self.alphabet() {
            let inv = self.invert(&g.element);
            let dup = inv == g.element;
            out.push(Generator::new(g.name.clone(), g.element));
            if !dup {
                out.push(Generator::new(inverse_name(&g.name), inv));
            }
        }
        out
    }

    /// Shortest human-readable word for `g` in the CLI syntax.
    fn format(&self, g: &Self::Elem) -> String;

    /// Parses a word in the CLI syntax and evaluates it.
    fn parse(&self, s: &str) -> Result<Self::Elem, GroupError> {
        let word = Word::parse(self, s)?;
        Ok(self.evaluate(&word))
    }

    fn evaluate(&self, w: &Word) -> Self::Elem {
        let alphabet = self.alphabet();
        let mut acc = self.identity();
        for l in &w.letters {
            let g = &alphabet[l.generator].element;
            let g = if l.inverse { self.invert(g) } else { g.clone() };
            acc = self.multiply(&acc, &g);
        }
        acc
    }

    fn is_identity(&self, g: &Self::Elem) -> bool {
        *g == self.identity()
    }

    fn power(&self, g: &Self::Elem, k: i64) -> Self::Elem {
        let base = if k < 0 { self.invert(g) } else { g.clone() };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    /// `f⁻¹ g`, the element whose sign decides `f < g`.
    fn quotient(&self, f: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.multiply(&self.invert(f), g)
    }
}

pub(crate) fn inverse_name(name: &str) -> String {
    if name.chars().count() == 1 && name.chars().all(|c| c.is_ascii_lowercase()) {
        name.to_ascii_uppercase()
    } else {
        format!("{name}^-1")
    }
}

/// Membership in a cyclic subgroup `⟨h⟩`, searching powers up to `max_power`.
pub fn in_cyclic_subgroup<G: Group>(group: &G, h: &G::Elem, g: &G::Elem, max_power: u32) -> bool {
    if group.is_identity(g) {
        return true;
    }
    let inv = group.invert(h);
    let mut pos = group.identity();
    let mut neg = group.identity();
    for _ in 0..max_power {
        pos = group.multiply(&pos, h);
        neg = group.multiply(&neg, &inv);
        if pos == *g || neg == *g {
            return true;
        }
    }
    false
}
