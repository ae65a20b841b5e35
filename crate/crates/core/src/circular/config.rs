use super::moebius::{circular_sign, cmp_ccw, BoundaryPoint};
use super::rep::Representation;
use super::CircularError;
use crate::group::{Group, Psl2zElement};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A left-invariant circular order on PSL(2,ℤ), as a triple oracle.
pub trait CircularOrder {
    fn label(&self) -> String;

    /// 0 iff two arguments coincide, otherwise ±1.
    fn cyclic_sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8;
}

impl<C: CircularOrder + ?Sized> CircularOrder for &C {
    fn label(&self) -> String {
        (**self).label()
    }
    fn cyclic_sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8 {
        (**self).cyclic_sign(a, b, c)
    }
}

/// The reversed circular order −c.
pub struct Mirror<C>(pub C);

impl<C: CircularOrder> CircularOrder for Mirror<C> {
    fn label(&self) -> String {
        format!("mirror({})", self.0.label())
    }
    fn cyclic_sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8 {
        -self.0.cyclic_sign(a, b, c)
    }
}

/// The circular order of the orbit of 0 under a representation.
pub struct OrbitOrder<'r> {
    pub rep: &'r Representation,
}

impl CircularOrder for OrbitOrder<'_> {
    fn label(&self) -> String {
        match &self.rep.kind {
            super::RepKind::Modular => "orbit(modular)".into(),
            super::RepKind::Deformed { .. } => "c(1)".into(),
        }
    }

    fn cyclic_sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8 {
        if a == b || b == c || a == c {
            return 0;
        }
        circular_sign(&self.rep.point(a), &self.rep.point(b), &self.rep.point(c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEntry {
    pub element: Psl2zElement,
    pub point: BoundaryPoint,
}

/// Distinct orbit points listed counterclockwise starting at the base point
/// (or at the first point after it when the base is not included).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularConfig {
    pub orientation: String,
    pub entries: Vec<ConfigEntry>,
}

impl CircularConfig {
    pub fn from_entries(mut entries: Vec<ConfigEntry>) -> Self {
        entries.sort_by(|a, b| cmp_ccw(&a.point, &b.point));
        CircularConfig {
            orientation: "ccw".into(),
            entries,
        }
    }

    pub fn elements(&self) -> Vec<Psl2zElement> {
        self.entries.iter().map(|e| e.element.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, g: &Psl2zElement) -> Option<usize> {
        self.entries.iter().position(|e| &e.element == g)
    }

    /// Restriction to a subset of elements, keeping the cyclic order.
    pub fn restrict(&self, keep: &[Psl2zElement]) -> CircularConfig {
        CircularConfig {
            orientation: self.orientation.clone(),
            entries: self
                .entries
                .iter()
                .filter(|e| keep.contains(&e.element))
                .cloned()
                .collect(),
        }
    }

    /// The cyclic sequence of elements rotated to start at `g`.
    pub fn cyclic_from(&self, g: &Psl2zElement) -> Option<Vec<Psl2zElement>> {
        let i = self.position(g)?;
        let n = self.entries.len();
        Some((0..n).map(|k| self.entries[(i + k) % n].element.clone()).collect())
    }

    /// Triple oracle on the configured elements.
    pub fn oracle(&self) -> ConfigOrder {
        ConfigOrder {
            index: self
                .entries
                .iter()
                .enumerate()
                .map(|(i, e)| (e.element.clone(), i))
                .collect(),
        }
    }
}

/// The cyclic order read off a configuration.
pub struct ConfigOrder {
    index: HashMap<Psl2zElement, usize>,
}

impl ConfigOrder {
    pub fn contains(&self, g: &Psl2zElement) -> bool {
        self.index.contains_key(g)
    }
}

/// Cyclic sign of three positions on a circle.
pub fn cyclic_sign_of_positions<T: Ord>(a: &T, b: &T, c: &T) -> i8 {
    if a == b || b == c || a == c {
        return 0;
    }
    let ccw = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
    if ccw {
        1
    } else {
        -1
    }
}

impl CircularOrder for ConfigOrder {
    fn label(&self) -> String {
        "config".into()
    }

    /// Elements outside the configuration are a caller error.
    fn cyclic_sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8 {
        cyclic_sign_of_positions(&self.index[a], &self.index[b], &self.index[c])
    }
}

/// Exact cyclic configuration of {ρ(g)y₀ : g ∈ ball}.
pub fn orbit_config(
    rep: &Representation,
    ball: &[Psl2zElement],
    y0: &BoundaryPoint,
) -> Result<CircularConfig, CircularError> {
    let mut seen: HashMap<BoundaryPoint, &Psl2zElement> = HashMap::new();
    let mut entries = Vec::with_capacity(ball.len());
    for g in ball {
        let p = rep.act(g, y0);
        if let Some(h) = seen.insert(p.clone(), g) {
            return Err(CircularError::NotFree {
                first: h.to_string(),
                second: g.to_string(),
                point: p.to_string(),
            });
        }
        entries.push(ConfigEntry {
            element: g.clone(),
            point: p,
        });
    }
    // positions counterclockwise from y0
    let base = y0.clone();
    let rel = |p: &BoundaryPoint| {
        if *p == base {
            0
        } else {
            1
        }
    };
    entries.sort_by(|a, b| {
        rel(&a.point).cmp(&rel(&b.point)).then_with(|| {
            if a.point == b.point {
                std::cmp::Ordering::Equal
            } else if circular_sign(&base, &a.point, &b.point) == 1 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    });
    Ok(CircularConfig {
        orientation: "ccw".into(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleViolation<E> {
    /// c vanishes exactly on triples with a repeat.
    Degeneracy { triple: [E; 3] },
    /// c(g₂,g₃,g₄) − c(g₁,g₃,g₄) + c(g₁,g₂,g₄) − c(g₁,g₂,g₃) ≠ 0.
    Cocycle { quadruple: [E; 4] },
    /// c(hg₁,hg₂,hg₃) ≠ c(g₁,g₂,g₃).
    Invariance { triple: [E; 3], by: E },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleReport<E> {
    pub triples: usize,
    pub quadruples: usize,
    pub violations: Vec<CocycleViolation<E>>,
}

impl<E> CocycleReport<E> {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the circular-order axioms on all triples and quadruples of
/// `sample`. Left invariance is checked for every multiplier in
/// `sample` when `invariance` is set (the oracle must accept products).
pub fn cocycle_check<G: Group>(
    group: &G,
    c: impl Fn(&G::Elem, &G::Elem, &G::Elem) -> i8,
    sample: &[G::Elem],
    invariance: bool,
) -> CocycleReport<G::Elem> {
    let mut violations = Vec::new();
    let n = sample.len();
    let mut table = vec![0i8; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = c(&sample[i], &sample[j], &sample[k]);
                table[(i * n + j) * n + k] = v;
                let repeat = i == j || j == k || i == k;
                if (v == 0) != repeat {
                    violations.push(CocycleViolation::Degeneracy {
                        triple: [sample[i].clone(), sample[j].clone(), sample[k].clone()],
                    });
                }
            }
        }
    }
    let t = |i: usize, j: usize, k: usize| i32::from(table[(i * n + j) * n + k]);
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    if t(b, cc, d) - t(a, cc, d) + t(a, b, d) - t(a, b, cc) != 0 {
                        violations.push(CocycleViolation::Cocycle {
                            quadruple: [
                                sample[a].clone(),
                                sample[b].clone(),
                                sample[cc].clone(),
                                sample[d].clone(),
                            ],
                        });
                    }
                }
            }
        }
    }
    let mut triples = n * n * n;
    if invariance {
        for h in sample {
            let moved: Vec<G::Elem> = sample.iter().map(|g| group.multiply(h, g)).collect();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        triples += 1;
                        if c(&moved[i], &moved[j], &moved[k]) != t(i, j, k) as i8 {
                            violations.push(CocycleViolation::Invariance {
                                triple: [sample[i].clone(), sample[j].clone(), sample[k].clone()],
                                by: h.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    CocycleReport {
        triples,
        quadruples: n.pow(4),
        violations,
    }
}
