use super::{Generator, Group, GroupError, GroupId};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported sequence ℕ → ℤ, indexed from 1. Zero entries are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct DirectSumElement(pub BTreeMap<u32, i64>);

impl DirectSumElement {
    pub fn unit(i: u32) -> Self {
        DirectSumElement(BTreeMap::from([(i, 1)]))
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut m = BTreeMap::new();
        for (i, v) in entries {
            *m.entry(i).or_insert(0) += v;
        }
        m.retain(|_, v| *v != 0);
        DirectSumElement(m)
    }

    pub fn get(&self, i: u32) -> i64 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    /// Largest index with a nonzero entry.
    pub fn top(&self) -> Option<(u32, i64)> {
        self.0.iter().next_back().map(|(i, v)| (*i, *v))
    }

    /// Membership in Gₘ = elements supported on 1..=m.
    pub fn in_g(&self, m: u32) -> bool {
        self.top().map_or(true, |(i, _)| i <= m)
    }
}

impl fmt::Display for DirectSumElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|(i, v)| {
                if *v == 1 {
                    format!("e{i}")
                } else {
                    format!("e{i}^{v}")
                }
            })
            .collect();
        f.write_str(&toks.join("."))
    }
}

/// ⊕ℤ with its alphabet truncated to e₁..e_K. `DirectSum::new(1)` is ℤ and
/// `DirectSum::new(2)` is ℤ².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DirectSum {
    pub k: u32,
}

impl DirectSum {
    pub fn new(k: u32) -> Self {
        DirectSum { k }
    }

    pub fn check(&self, g: &DirectSumElement) -> Result<(), GroupError> {
        if g.0.keys().any(|&i| i == 0 || i > self.k) {
            Err(GroupError::NotInGroup(g.to_string()))
        } else {
            Ok(())
        }
    }
}

impl Group for DirectSum {
    type Elem = DirectSumElement;

    fn id(&self) -> GroupId {
        GroupId::DirectSum
    }

    fn identity(&self) -> DirectSumElement {
        DirectSumElement::default()
    }

    fn multiply(&self, g: &DirectSumElement, h: &DirectSumElement) -> DirectSumElement {
        DirectSumElement::from_entries(g.0.iter().chain(h.0.iter()).map(|(i, v)| (*i, *v)))
    }

    fn invert(&self, g: &DirectSumElement) -> DirectSumElement {
        DirectSumElement(g.0.iter().map(|(i, v)| (*i, -v)).collect())
    }

    fn alphabet(&self) -> Vec<Generator<DirectSumElement>> {
        (1..=self.k)
            .map(|i| Generator::new(format!("e{i}"), DirectSumElement::unit(i)))
            .collect()
    }

    fn format(&self, g: &DirectSumElement) -> String {
        g.to_string()
    }
}
