use super::config::{CircularOrder, Mirror, OrbitOrder};
use super::moebius::BoundaryPoint;
use super::rep::Representation;
use super::CircularError;
use crate::group::{B3Element, Psl2zElement, Syllable, B3};
use crate::orders::{OrderError, Sign, SignOracle};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// How the central element t is sent to a deck translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftConvention {
    /// Orient the circle so that t ↦ τ⁺¹, mirroring the circular order
    /// when it has negative orientation c(e, β, β²) = −1.
    #[default]
    Normalized,
    /// Keep the circle's orientation; t ↦ τ^{c(e, β, β²)}.
    Raw,
}

/// A point of the line covering the circle: a winding count and the orbit
/// element whose point it lies over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftPos {
    pub winding: i64,
    pub element: Psl2zElement,
}

impl LiftPos {
    pub fn base() -> Self {
        LiftPos {
            winding: 0,
            element: Psl2zElement::identity(),
        }
    }
}

/// [`LiftPos`] with the boundary point made explicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedPosition {
    pub winding: i64,
    pub point: BoundaryPoint,
}

enum Oriented<C> {
    Plain(C),
    Mirrored(Mirror<C>),
}

impl<C: CircularOrder> Oriented<C> {
    fn sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8 {
        match self {
            Oriented::Plain(o) => o.cyclic_sign(a, b, c),
            Oriented::Mirrored(o) => o.cyclic_sign(a, b, c),
        }
    }
}

/// π∗c: the left order on B₃ induced by a circular order c on PSL(2,ℤ)
/// through the lifts of its dynamical realization to the line.
///
/// Lifts are computed from c alone: the lift S of a generator s maps
/// (W, ḡ) to (W + w_s + wrap, sḡ), where wrap = 1 exactly when the image
/// crosses the base point, i.e. sḡ = e or c(e, sḡ, s) = +1.
pub struct PiStar<C> {
    order: Oriented<C>,
    /// t ↦ τ^{t_shift}.
    t_shift: i64,
    w_alpha: i64,
    w_beta: i64,
    raw_orientation: i8,
}

fn solve(n: i64, m: i64, target: i64) -> Option<i64> {
    ((target - n) % m == 0).then(|| (target - n) / m)
}

impl<C: CircularOrder> PiStar<C> {
    pub fn new(order: C, convention: LiftConvention) -> Result<Self, CircularError> {
        let (e, b, b2) = (
            Psl2zElement::identity(),
            Psl2zElement::beta(),
            Psl2zElement::from_syllables(&[Syllable::Beta2]),
        );
        let raw = order.cyclic_sign(&e, &b, &b2);
        let (order, t_shift) = match (convention, raw) {
            (LiftConvention::Normalized, -1) => (Oriented::Mirrored(Mirror(order)), 1),
            (LiftConvention::Normalized, _) => (Oriented::Plain(order), 1),
            (LiftConvention::Raw, s) => (Oriented::Plain(order), i64::from(s)),
        };
        let mut lifted = PiStar {
            order,
            t_shift,
            w_alpha: 0,
            w_beta: 0,
            raw_orientation: raw,
        };
        // windings of A₀² and B₀³ with zero offsets
        let n_alpha = lifted.power_winding(Syllable::Alpha, 2);
        let n_beta = lifted.power_winding(Syllable::Beta, 3);
        let mismatch = || CircularError::NoRootLift { t_shift };
        lifted.w_alpha = solve(n_alpha, 2, t_shift).ok_or_else(mismatch)?;
        lifted.w_beta = solve(n_beta, 3, t_shift).ok_or_else(mismatch)?;
        Ok(lifted)
    }

    /// Sign of c(e, β, β²) before any mirroring.
    pub fn raw_orientation(&self) -> i8 {
        self.raw_orientation
    }

    pub fn generator_offsets(&self) -> (i64, i64) {
        (self.w_alpha, self.w_beta)
    }

    fn power_winding(&self, s: Syllable, m: usize) -> i64 {
        let mut p = LiftPos::base();
        for _ in 0..m {
            p = self.apply_syllable(s, &p);
        }
        p.winding
    }

    fn apply_syllable(&self, s: Syllable, p: &LiftPos) -> LiftPos {
        match s {
            Syllable::Beta2 => {
                let q = self.apply_syllable(Syllable::Beta, p);
                self.apply_syllable(Syllable::Beta, &q)
            }
            _ => {
                let gen = Psl2zElement::from_syllables(&[s]);
                let image = gen.mul(&p.element);
                let e = Psl2zElement::identity();
                let wrap = if p.element.is_identity() {
                    0
                } else if image.is_identity() || self.order.sign(&e, &image, &gen) == 1 {
                    1
                } else {
                    0
                };
                let w = if s == Syllable::Alpha { self.w_alpha } else { self.w_beta };
                LiftPos {
                    winding: p.winding + w + wrap,
                    element: image,
                }
            }
        }
    }

    /// The lifted action of g on a lifted position.
    pub fn apply(&self, g: &B3Element, p: &LiftPos) -> LiftPos {
        let mut q = g
            .tail
            .iter()
            .rev()
            .fold(p.clone(), |acc, s| self.apply_syllable(*s, &acc));
        q.winding += g.central * self.t_shift;
        q
    }

    /// (π∗ρ)(g)(x₀).
    pub fn lift(&self, g: &B3Element) -> LiftPos {
        self.apply(g, &LiftPos::base())
    }

    /// Lexicographic comparison by winding, then counterclockwise position
    /// from the base point.
    pub fn cmp(&self, x: &LiftPos, y: &LiftPos) -> Ordering {
        x.winding.cmp(&y.winding).then_with(|| {
            let e = Psl2zElement::identity();
            if x.element == y.element {
                Ordering::Equal
            } else if x.element.is_identity() {
                Ordering::Less
            } else if y.element.is_identity() {
                Ordering::Greater
            } else if self.order.sign(&e, &x.element, &y.element) == 1 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }

    pub fn try_sign(&self, g: &B3Element) -> Result<Sign, OrderError> {
        match self.cmp(&self.lift(g), &LiftPos::base()) {
            Ordering::Greater => Ok(Sign::Pos),
            Ordering::Less => Ok(Sign::Neg),
            Ordering::Equal => Err(OrderError::Identity),
        }
    }
}

impl<C: CircularOrder> SignOracle<B3> for PiStar<C> {
    fn label(&self) -> String {
        let inner = match &self.order {
            Oriented::Plain(o) => o.label(),
            Oriented::Mirrored(o) => o.label(),
        };
        format!("pi-star-{inner}")
    }

    fn sign(&self, g: &B3Element) -> Sign {
        self.try_sign(g).expect("pi-star sign of a non-identity element")
    }
}

/// π∗c⁽¹⁾ with c⁽¹⁾ realized by `rep`.
pub fn pi_star(rep: &Representation, convention: LiftConvention) -> Result<PiStar<OrbitOrder<'_>>, CircularError> {
    PiStar::new(OrbitOrder { rep }, convention)
}

/// The lifted orbit point of g, with its boundary point.
pub fn lift_eval(
    rep: &Representation,
    convention: LiftConvention,
    g: &B3Element,
) -> Result<LiftedPosition, CircularError> {
    let p = pi_star(rep, convention)?.lift(g);
    Ok(LiftedPosition {
        winding: p.winding,
        point: rep.point(&p.element),
    })
}

/// Sign of g under π∗c for the orbit order of `rep`.
pub fn pi_star_sign(
    rep: &Representation,
    convention: LiftConvention,
    g: &B3Element,
) -> Result<Sign, CircularError> {
    Ok(pi_star(rep, convention)?.try_sign(g)?)
}
