use super::build::{build_realization, Realization};
use super::dyadic::DyadicRational;
use super::RealizationError;
use crate::group::{ball, DirectSum, DirectSumElement, Group};
use crate::orders::{sort_by_order, DirectSumOrder, SignOracle};
use serde::{Deserialize, Serialize};
use std::hash::Hash;

/// A window of the hull given by fractions of its width.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub lo: DyadicRational,
    pub hi: DyadicRational,
}

impl Default for Window {
    /// The central half.
    fn default() -> Self {
        Window {
            lo: DyadicRational::new(1, 2),
            hi: DyadicRational::new(3, 2),
        }
    }
}

impl Window {
    pub fn full() -> Self {
        Window {
            lo: DyadicRational::zero(),
            hi: DyadicRational::integer(1),
        }
    }

    fn bounds<E: Clone + Eq + Hash>(&self, r: &Realization<E>) -> (DyadicRational, DyadicRational) {
        let (a, b) = r.hull();
        let w = b - a;
        (a + &(&w * &self.lo), a + &(&w * &self.hi))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gap {
    pub left: DyadicRational,
    pub right: DyadicRational,
    pub width: DyadicRational,
}

impl Gap {
    fn new(left: &DyadicRational, right: &DyadicRational) -> Self {
        Gap {
            left: left.clone(),
            right: right.clone(),
            width: right - left,
        }
    }
}

/// The largest interval around x₀ free of orbit points of elements outside
/// the candidate subgroup. A missing side is unbounded in the enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseGap {
    pub left: Option<DyadicRational>,
    pub right: Option<DyadicRational>,
    /// Enumerated elements strictly inside, in increasing order.
    pub inside: Vec<String>,
    /// Candidate elements lying outside; empty when the candidate is convex
    /// on the enumeration.
    pub candidates_outside: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub window: (DyadicRational, DyadicRational),
    pub values: Vec<DyadicRational>,
    pub gaps: Vec<Gap>,
    pub max_gap: Option<DyadicRational>,
    pub min_gap: Option<DyadicRational>,
    pub base_gap: BaseGap,
    /// Nontrivial enumerated elements sending every enumerated point of the
    /// base gap whose image is enumerated back into the base gap.
    pub stabilizer_candidates: Vec<String>,
}

pub fn gap_spectrum<G: Group>(
    group: &G,
    r: &Realization<G::Elem>,
    window: &Window,
    candidate: &dyn Fn(&G::Elem) -> bool,
) -> Result<GapReport, RealizationError> {
    let (lo, hi) = window.bounds(r);
    let values: Vec<DyadicRational> = r
        .sorted()
        .map(|e| e.value.clone())
        .filter(|v| &lo <= v && v <= &hi)
        .collect();
    if values.len() < 2 {
        return Err(RealizationError::EmptyWindow);
    }
    let gaps: Vec<Gap> = values.windows(2).map(|w| Gap::new(&w[0], &w[1])).collect();
    let max_gap = gaps.iter().map(|g| g.width.clone()).max();
    let min_gap = gaps.iter().map(|g| g.width.clone()).min();

    let x0 = &r.x0;
    let outsiders = r.sorted().filter(|e| !candidate(&e.element));
    let mut left: Option<DyadicRational> = None;
    let mut right: Option<DyadicRational> = None;
    for e in outsiders {
        if &e.value < x0 {
            left = Some(e.value.clone());
        } else if &e.value > x0 && right.is_none() {
            right = Some(e.value.clone());
        }
    }
    let in_gap = |v: &DyadicRational| {
        left.as_ref().map_or(true, |l| l < v) && right.as_ref().map_or(true, |h| v < h)
    };
    let inside: Vec<&G::Elem> = r.sorted().filter(|e| in_gap(&e.value)).map(|e| &e.element).collect();
    let candidates_outside = r
        .sorted()
        .filter(|e| candidate(&e.element) && !in_gap(&e.value))
        .map(|e| group.format(&e.element))
        .collect();
    let stabilizer_candidates = r
        .entries()
        .iter()
        .filter(|e| !group.is_identity(&e.element))
        .filter(|e| {
            let images: Vec<DyadicRational> = inside
                .iter()
                .filter_map(|h| r.value(&group.multiply(&e.element, h)).cloned())
                .collect();
            !images.is_empty() && images.iter().all(&in_gap)
        })
        .map(|e| group.format(&e.element))
        .collect();
    Ok(GapReport {
        window: (lo, hi),
        values,
        gaps,
        max_gap,
        min_gap,
        base_gap: BaseGap {
            left: left.clone(),
            right: right.clone(),
            inside: inside.iter().map(|g| group.format(g)).collect(),
            candidates_outside,
        },
        stabilizer_candidates,
    })
}

/// The pairs (ι(g), ι(sg)) for enumerated g with sg enumerated, sorted by
/// the first coordinate, and the number of adjacent pairs where the second
/// coordinate fails to increase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialAction {
    pub pairs: Vec<(DyadicRational, DyadicRational)>,
    pub inversions: usize,
}

pub fn partial_action<G: Group>(group: &G, r: &Realization<G::Elem>, s: &G::Elem) -> PartialAction {
    let pairs: Vec<(DyadicRational, DyadicRational)> = r
        .sorted()
        .filter_map(|e| {
            r.value(&group.multiply(s, &e.element))
                .map(|v| (e.value.clone(), v.clone()))
        })
        .collect();
    let inversions = pairs.windows(2).filter(|w| w[0].1 >= w[1].1).count();
    PartialAction { pairs, inversions }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityReport {
    pub checked: usize,
    pub members: usize,
    /// Triples (h₁, g, h₂) with h₁ < g < h₂, hᵢ in the subgroup and g not.
    pub violations: Vec<[String; 3]>,
}

impl ConvexityReport {
    pub fn is_convex(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Looks for elements outside `member` strictly between two members. Each
/// violating g is reported once, with its nearest members on either side.
pub fn convexity_check<G, O>(
    group: &G,
    order: &O,
    member: &dyn Fn(&G::Elem) -> bool,
    elements: &[G::Elem],
) -> ConvexityReport
where
    G: Group,
    O: SignOracle<G> + ?Sized,
{
    let mut sorted = elements.to_vec();
    sort_by_order(group, order, &mut sorted);
    let flags: Vec<bool> = sorted.iter().map(member).collect();
    let mut violations = Vec::new();
    let mut below: Option<usize> = None;
    for (i, g) in sorted.iter().enumerate() {
        if flags[i] {
            below = Some(i);
            continue;
        }
        let Some(b) = below else { continue };
        if let Some(a) = (i + 1..sorted.len()).find(|&j| flags[j]) {
            violations.push([group.format(&sorted[b]), group.format(g), group.format(&sorted[a])]);
        }
    }
    ConvexityReport {
        checked: sorted.len(),
        members: flags.iter().filter(|&&f| f).count(),
        violations,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapBoundReport {
    pub window: (DyadicRational, DyadicRational),
    pub max_gap: DyadicRational,
    pub max_displacement: DyadicRational,
    /// max_gap ≤ max_displacement.
    pub holds: bool,
}

/// Compares the largest orbit gap in the window with the largest
/// displacement |ι(sg) − ι(g)| over generators s and g in the window.
pub fn gap_bound_check<G: Group>(
    group: &G,
    r: &Realization<G::Elem>,
    generators: &[G::Elem],
    window: &Window,
) -> Result<GapBoundReport, RealizationError> {
    let (lo, hi) = window.bounds(r);
    let inside: Vec<_> = r.sorted().filter(|e| lo <= e.value && e.value <= hi).collect();
    if inside.len() < 2 {
        return Err(RealizationError::EmptyWindow);
    }
    let max_gap = inside
        .windows(2)
        .map(|w| &w[1].value - &w[0].value)
        .max()
        .expect("two points");
    let max_displacement = inside
        .iter()
        .flat_map(|e| {
            generators
                .iter()
                .filter_map(|s| r.value(&group.multiply(s, &e.element)))
                .map(|v| (v - &e.value).abs())
        })
        .max()
        .unwrap_or_else(DyadicRational::zero);
    Ok(GapBoundReport {
        window: (lo, hi),
        holds: max_gap <= max_displacement,
        max_gap,
        max_displacement,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceReport {
    pub common: usize,
    /// The common elements appear in the same order in both realizations.
    pub same_relative_order: bool,
    /// The order isomorphism sends the base point to the base point.
    pub base_point_preserved: bool,
}

pub fn enumeration_independence<E: Clone + Eq + Hash>(a: &Realization<E>, b: &Realization<E>) -> IndependenceReport {
    let seq_a: Vec<&E> = a.sorted().map(|e| &e.element).filter(|g| b.contains(g)).collect();
    let seq_b: Vec<&E> = b.sorted().map(|e| &e.element).filter(|g| a.contains(g)).collect();
    let base_a = &a.entries()[0].element;
    let base_b = &b.entries()[0].element;
    let rank = |seq: &[&E], g: &E| seq.iter().position(|h| *h == g);
    IndependenceReport {
        common: seq_a.len(),
        same_relative_order: seq_a == seq_b,
        base_point_preserved: base_a == base_b && rank(&seq_a, base_a) == rank(&seq_b, base_b),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightnessReport {
    pub gaps: usize,
    /// Gaps of the smaller realization into which no point of the larger
    /// one falls.
    pub stable: usize,
    /// The larger realization agrees with the smaller one on its elements.
    pub prefix_consistent: bool,
    /// Both endpoints of every stable gap are values of enumerated elements
    /// of the larger realization.
    pub endpoints_are_orbit_points: bool,
}

pub fn stable_gap_tightness<E: Clone + Eq + Hash>(small: &Realization<E>, large: &Realization<E>) -> TightnessReport {
    let prefix_consistent = small
        .entries()
        .iter()
        .all(|e| large.value(&e.element) == Some(&e.value));
    let large_values: Vec<&DyadicRational> = large.sorted().map(|e| &e.value).collect();
    let sorted: Vec<_> = small.sorted().collect();
    let mut stable = 0;
    let mut endpoints_ok = true;
    for w in sorted.windows(2) {
        let (a, b) = (&w[0].value, &w[1].value);
        let from = large_values.partition_point(|v| *v <= a);
        if large_values.get(from).map_or(true, |v| *v >= b) {
            stable += 1;
            endpoints_ok &= large.value(&w[0].element) == Some(a) && large.value(&w[1].element) == Some(b);
        }
    }
    TightnessReport {
        gaps: sorted.len().saturating_sub(1),
        stable,
        prefix_consistent,
        endpoints_are_orbit_points: endpoints_ok,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelBracket {
    pub m: u32,
    pub orbit_min: DyadicRational,
    pub orbit_max: DyadicRational,
    pub bracket_lo: DyadicRational,
    pub bracket_hi: DyadicRational,
    pub inside: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonCocompactReport {
    pub k: u32,
    pub radius: usize,
    pub hull: (DyadicRational, DyadicRational),
    pub width: DyadicRational,
    pub levels: Vec<LevelBracket>,
}

/// ⊕ℤ truncated to k summands with the top-coordinate order, realized on
/// the ball of the given radius. For m < k the orbit of Gₘ is checked to
/// lie strictly between ι(s⁻¹ₘ₊₁) and ι(sₘ₊₁).
pub fn non_cocompact_demo(k: u32, radius: usize) -> Result<NonCocompactReport, RealizationError> {
    let group = DirectSum::new(k);
    let r = build_realization(&group, &DirectSumOrder::default(), &ball(&group, radius), DyadicRational::zero())?;
    let mut levels = Vec::new();
    for m in 1..k {
        let s = DirectSumElement::unit(m + 1);
        let (Some(hi), Some(lo)) = (r.value(&s), r.value(&group.invert(&s))) else {
            return Err(RealizationError::EmptyWindow);
        };
        let orbit: Vec<&DyadicRational> = r.sorted().filter(|e| e.element.in_g(m)).map(|e| &e.value).collect();
        let (min, max) = (orbit[0].clone(), orbit[orbit.len() - 1].clone());
        levels.push(LevelBracket {
            m,
            inside: lo < &min && &max < hi,
            orbit_min: min,
            orbit_max: max,
            bracket_lo: lo.clone(),
            bracket_hi: hi.clone(),
        });
    }
    let (a, b) = r.hull();
    Ok(NonCocompactReport {
        k,
        radius,
        hull: (a.clone(), b.clone()),
        width: b - a,
        levels,
    })
}
