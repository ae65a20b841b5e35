use super::{Generator, Group, GroupId};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A syllable of the free product ℤ₂ ∗ ℤ₃ = ⟨α⟩ ∗ ⟨β⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Syllable {
    #[serde(rename = "al")]
    Alpha,
    #[serde(rename = "be")]
    Beta,
    #[serde(rename = "be2")]
    Beta2,
}

impl Syllable {
    pub fn is_alpha(self) -> bool {
        self == Syllable::Alpha
    }

    /// Exponent of β, zero for α.
    fn beta_exp(self) -> u8 {
        match self {
            Syllable::Alpha => 0,
            Syllable::Beta => 1,
            Syllable::Beta2 => 2,
        }
    }

    pub fn inverse(self) -> Syllable {
        match self {
            Syllable::Alpha => Syllable::Alpha,
            Syllable::Beta => Syllable::Beta2,
            Syllable::Beta2 => Syllable::Beta,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Syllable::Alpha => "al",
            Syllable::Beta => "be",
            Syllable::Beta2 => "be2",
        }
    }
}

/// Appends `right` to the reduced word `left`, cancelling at the junction.
/// Returns the number of central letters produced (`α² = β³ = t`).
pub(crate) fn reduce_concat(left: &mut Vec<Syllable>, right: &[Syllable]) -> i64 {
    let mut central = 0;
    let mut i = 0;
    while i < right.len() {
        let r = right[i];
        match left.last().copied() {
            Some(Syllable::Alpha) if r == Syllable::Alpha => {
                left.pop();
                central += 1;
                i += 1;
            }
            Some(l) if !l.is_alpha() && !r.is_alpha() => {
                left.pop();
                let s = l.beta_exp() + r.beta_exp();
                central += i64::from(s / 3);
                i += 1;
                match s % 3 {
                    0 => continue,
                    1 => left.push(Syllable::Beta),
                    _ => left.push(Syllable::Beta2),
                }
                left.extend_from_slice(&right[i..]);
                return central;
            }
            _ => {
                left.extend_from_slice(&right[i..]);
                return central;
            }
        }
    }
    central
}

/// An element of PSL(2,ℤ) as a reduced alternating word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Psl2zElement {
    pub tail: Vec<Syllable>,
}

impl Psl2zElement {
    pub fn identity() -> Self {
        Psl2zElement { tail: Vec::new() }
    }

    /// Builds an element from an arbitrary syllable sequence, reducing it.
    pub fn from_syllables(syllables: &[Syllable]) -> Self {
        let mut tail = Vec::new();
        for s in syllables {
            reduce_concat(&mut tail, std::slice::from_ref(s));
        }
        Psl2zElement { tail }
    }

    pub fn alpha() -> Self {
        Psl2zElement {
            tail: vec![Syllable::Alpha],
        }
    }

    pub fn beta() -> Self {
        Psl2zElement {
            tail: vec![Syllable::Beta],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.tail.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut tail = self.tail.clone();
        reduce_concat(&mut tail, &other.tail);
        Psl2zElement { tail }
    }

    pub fn inv(&self) -> Self {
        Psl2zElement {
            tail: self.tail.iter().rev().map(|s| s.inverse()).collect(),
        }
    }
}

impl fmt::Display for Psl2zElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tail.is_empty() {
            return f.write_str("e");
        }
        let toks: Vec<&str> = self.tail.iter().map(|s| s.token()).collect();
        f.write_str(&toks.join("."))
    }
}

/// PSL(2,ℤ) = ⟨α, β | α² = β³ = e⟩.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Psl2z;

impl Group for Psl2z {
    type Elem = Psl2zElement;

    fn id(&self) -> GroupId {
        GroupId::Psl2z
    }

    fn identity(&self) -> Psl2zElement {
        Psl2zElement::identity()
    }

    fn multiply(&self, g: &Psl2zElement, h: &Psl2zElement) -> Psl2zElement {
        g.mul(h)
    }

    fn invert(&self, g: &Psl2zElement) -> Psl2zElement {
        g.inv()
    }

    fn alphabet(&self) -> Vec<Generator<Psl2zElement>> {
        vec![
            Generator::new("al", Psl2zElement::alpha()),
            Generator::new("be", Psl2zElement::beta()),
        ]
    }

    fn ball_generators(&self) -> Vec<Generator<Psl2zElement>> {
        vec![
            Generator::new("al", Psl2zElement::alpha()),
            Generator::new("be", Psl2zElement::beta()),
            Generator::new(
                "be2",
                Psl2zElement {
                    tail: vec![Syllable::Beta2],
                },
            ),
        ]
    }

    fn format(&self, g: &Psl2zElement) -> String {
        g.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        let a = Psl2zElement::alpha();
        let b = Psl2zElement::beta();
        assert!(a.mul(&a).is_identity());
        assert!(b.mul(&b).mul(&b).is_identity());
    }

    #[test]
    fn parse_tokens() {
        let g = Psl2z.parse("al.be.be2").unwrap();
        assert_eq!(g.tail, vec![Syllable::Alpha]);
        let g = Psl2z.parse("al be").unwrap();
        assert_eq!(g.to_string(), "al.be");
        assert!(Psl2z.parse("xx").is_err());
    }

    #[test]
    fn inverse_cancels() {
        let g = Psl2z.parse("al.be.al.be2.al").unwrap();
        assert!(g.mul(&g.inv()).is_identity());
        assert!(g.inv().mul(&g).is_identity());
    }
}
