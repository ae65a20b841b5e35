use super::psl2z::reduce_concat;
use super::{in_cyclic_subgroup, Generator, Group, GroupId, Psl2zElement, Syllable};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of B₃ = ⟨a, b, t | a² = b³ = t⟩ written as `t^central · tail`
/// with `tail` a reduced alternating word in α = a, β = b, β² = b².
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct B3Element {
    pub central: i64,
    pub tail: Vec<Syllable>,
}

impl B3Element {
    pub fn identity() -> Self {
        B3Element::default()
    }

    pub fn a() -> Self {
        B3Element {
            central: 0,
            tail: vec![Syllable::Alpha],
        }
    }

    pub fn b() -> Self {
        B3Element {
            central: 0,
            tail: vec![Syllable::Beta],
        }
    }

    pub fn t() -> Self {
        B3Element {
            central: 1,
            tail: Vec::new(),
        }
    }

    /// σ₁ = b a⁻¹ b.
    pub fn sigma1() -> Self {
        B3Element::b()
            .mul(&B3Element::a().inv())
            .mul(&B3Element::b())
    }

    /// σ₂ = b⁻¹ a.
    pub fn sigma2() -> Self {
        B3Element::b().inv().mul(&B3Element::a())
    }

    /// y₁ = σ₁σ₂ = b.
    pub fn y1() -> Self {
        B3Element::sigma1().mul(&B3Element::sigma2())
    }

    /// y₂ = σ₂⁻¹.
    pub fn y2() -> Self {
        B3Element::sigma2().inv()
    }

    pub fn is_identity(&self) -> bool {
        self.central == 0 && self.tail.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut tail = self.tail.clone();
        let extra = reduce_concat(&mut tail, &other.tail);
        B3Element {
            central: self.central + other.central + extra,
            tail,
        }
    }

    /// `(N, s₁…s_k)⁻¹ = (−N − k, s_k⁻¹…s₁⁻¹)` since α⁻¹ = t⁻¹α and β^{∓1} = t⁻¹β^{±1}.
    pub fn inv(&self) -> Self {
        B3Element {
            central: -self.central - self.tail.len() as i64,
            tail: self.tail.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// The image under q: B₃ → PSL(2,ℤ).
    pub fn q(&self) -> Psl2zElement {
        Psl2zElement {
            tail: self.tail.clone(),
        }
    }

    /// The section of q with zero central part.
    pub fn section(g: &Psl2zElement) -> Self {
        B3Element {
            central: 0,
            tail: g.tail.clone(),
        }
    }

    pub fn in_sigma1_subgroup(&self) -> bool {
        in_cyclic_subgroup(&B3, &B3Element::sigma1(), self, self.word_bound())
    }

    pub fn in_sigma2_subgroup(&self) -> bool {
        in_cyclic_subgroup(&B3, &B3Element::sigma2(), self, self.word_bound())
    }

    /// Every power σᵢ^k with |k| > bound has a longer normal form than `self`.
    fn word_bound(&self) -> u32 {
        (self.tail.len() as u64 + self.central.unsigned_abs() + 1) as u32
    }
}

impl fmt::Display for B3Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks = Vec::new();
        match self.central {
            0 => {}
            1 => toks.push("t".to_string()),
            -1 => toks.push("T".to_string()),
            n => toks.push(format!("t^{n}")),
        }
        for s in &self.tail {
            toks.push(
                match s {
                    Syllable::Alpha => "a",
                    Syllable::Beta => "b",
                    Syllable::Beta2 => "b2",
                }
                .to_string(),
            );
        }
        if toks.is_empty() {
            f.write_str("e")
        } else {
            f.write_str(&toks.join("."))
        }
    }
}

/// The braid group B₃ in the `(N, tail)` normal form.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct B3;

impl Group for B3 {
    type Elem = B3Element;

    fn id(&self) -> GroupId {
        GroupId::B3
    }

    fn identity(&self) -> B3Element {
        B3Element::identity()
    }

    fn multiply(&self, g: &B3Element, h: &B3Element) -> B3Element {
        g.mul(h)
    }

    fn invert(&self, g: &B3Element) -> B3Element {
        g.inv()
    }

    fn alphabet(&self) -> Vec<Generator<B3Element>> {
        vec![
            Generator::new("a", B3Element::a()),
            Generator::new("b", B3Element::b()),
            Generator::new("t", B3Element::t()),
        ]
    }

    /// Shortlex order a, a⁻¹, b, b⁻¹; t is not used for balls.
    fn ball_generators(&self) -> Vec<Generator<B3Element>> {
        vec![
            Generator::new("a", B3Element::a()),
            Generator::new("A", B3Element::a().inv()),
            Generator::new("b", B3Element::b()),
            Generator::new("B", B3Element::b().inv()),
        ]
    }

    fn format(&self, g: &B3Element) -> String {
        g.to_string()
    }
}

/// Normal form of a word over `a A b B t T`.
pub fn b3_normalize(w: &super::Word) -> B3Element {
    B3.evaluate(w)
}
