use super::config::{cyclic_sign_of_positions, CircularOrder};
use super::moebius::BoundaryPoint;
use super::rep::Representation;
use super::CircularError;
use crate::group::{Psl2zElement, Syllable};
use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A point of the k-fold cover of the circle: a boundary point and a sheet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverPoint {
    pub point: BoundaryPoint,
    pub sheet: u32,
}

/// A point of the line over the circle, with winding counted in turns of
/// the base circle. Its image in the k-cover is on sheet `winding mod k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePoint {
    pub winding: i64,
    pub point: BoundaryPoint,
}

impl LinePoint {
    fn cmp(&self, other: &LinePoint) -> Ordering {
        self.winding
            .cmp(&other.winding)
            .then_with(|| self.point.key().cmp(&other.point.key()))
    }
}

/// The k-fold lift ρ⁽ᵏ⁾ of a representation: each generator s lifts to
/// (p, sheet) ↦ (sp, sheet + shift_s + wrap_s(p) mod k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFoldRep {
    pub base: Representation,
    pub k: u32,
    pub shift_alpha: u32,
    pub shift_beta: u32,
}

/// 1 when s·p passes the base point 0 going counterclockwise from s·0.
fn wrap(m: &super::MoebiusMap, p: &BoundaryPoint) -> i64 {
    if *p == BoundaryPoint::zero() {
        return 0;
    }
    let sp = m.apply(p);
    let s0 = m.apply(&BoundaryPoint::zero());
    i64::from(sp.key() < s0.key())
}

fn unique_shift(n: i64, m: i64, k: u32) -> Result<u32, CircularError> {
    let k64 = i64::from(k);
    let sols: Vec<u32> = (0..k)
        .filter(|&s| (n + m * i64::from(s)).mod_floor(&k64) == 0)
        .collect();
    match sols.as_slice() {
        [] => Err(CircularError::NoLift { k }),
        [s] => Ok(*s),
        _ => Err(CircularError::NonUniqueLift { k }),
    }
}

/// The k-fold lift, which exists iff k ≡ ±1 mod 6.
pub fn k_fold_lift(rep: &Representation, k: u32) -> Result<KFoldRep, CircularError> {
    if k == 0 {
        return Err(CircularError::NoLift { k });
    }
    let zero = BoundaryPoint::zero();
    let winding = |m: &super::MoebiusMap, times: usize| {
        let mut p = zero.clone();
        let mut w = 0;
        for _ in 0..times {
            w += wrap(m, &p);
            p = m.apply(&p);
        }
        w
    };
    let n_alpha = winding(&rep.alpha, 2);
    let n_beta = winding(&rep.beta, 3);
    Ok(KFoldRep {
        base: rep.clone(),
        k,
        shift_alpha: unique_shift(n_alpha, 2, k)?,
        shift_beta: unique_shift(n_beta, 3, k)?,
    })
}

impl KFoldRep {
    fn step(&self, s: Syllable, x: &LinePoint) -> LinePoint {
        match s {
            Syllable::Beta2 => {
                let y = self.step(Syllable::Beta, x);
                self.step(Syllable::Beta, &y)
            }
            _ => {
                let (m, shift) = if s == Syllable::Alpha {
                    (&self.base.alpha, self.shift_alpha)
                } else {
                    (&self.base.beta, self.shift_beta)
                };
                LinePoint {
                    winding: x.winding + i64::from(shift) + wrap(m, &x.point),
                    point: m.apply(&x.point),
                }
            }
        }
    }

    /// The lift of ρ⁽ᵏ⁾(g) to the line, followed by `turns` full turns of
    /// the cover.
    pub fn line_map(&self, g: &Psl2zElement, turns: i64, x: &LinePoint) -> LinePoint {
        let mut y = g.tail.iter().rev().fold(x.clone(), |acc, s| self.step(*s, &acc));
        y.winding += turns * i64::from(self.k);
        y
    }

    pub fn act(&self, g: &Psl2zElement, x: &CoverPoint) -> CoverPoint {
        let y = self.line_map(
            g,
            0,
            &LinePoint {
                winding: i64::from(x.sheet),
                point: x.point.clone(),
            },
        );
        CoverPoint {
            point: y.point,
            sheet: y.winding.mod_floor(&i64::from(self.k)) as u32,
        }
    }

    /// ρ⁽ᵏ⁾(g) applied to the base point (0, sheet 0).
    pub fn point(&self, g: &Psl2zElement) -> CoverPoint {
        self.act(
            g,
            &CoverPoint {
                point: BoundaryPoint::zero(),
                sheet: 0,
            },
        )
    }
}

/// c⁽ᵏ⁾: the circular order of the orbit of (0, sheet 0) on the k-cover.
pub struct CoverOrbitOrder<'a> {
    pub rep: &'a KFoldRep,
}

impl CircularOrder for CoverOrbitOrder<'_> {
    fn label(&self) -> String {
        format!("c({})", self.rep.k)
    }

    fn cyclic_sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8 {
        if a == b || b == c || a == c {
            return 0;
        }
        let (pa, pb, pc) = (self.rep.point(a), self.rep.point(b), self.rep.point(c));
        cyclic_sign_of_positions(
            &(pa.sheet, pa.point.key()),
            &(pb.sheet, pb.point.key()),
            &(pc.sheet, pc.point.key()),
        )
    }
}

/// Exact rotation data of a lifted element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rotation {
    /// Translation number of the lift, in turns of the cover circle.
    pub translation: Rational64,
    /// The rotation number, reduced into [0, 1).
    pub rot: Rational64,
    /// Period of the certified periodic orbit.
    pub period: u32,
}

fn sample_points() -> Vec<BoundaryPoint> {
    let mut pts = vec![BoundaryPoint::Infinity];
    for m in 1..=10i64 {
        for n in -3 * m..=3 * m {
            if n.gcd(&m) == 1 || (n == 0 && m == 1) {
                pts.push(BoundaryPoint::frac(n, m));
            }
        }
    }
    pts
}

/// The rotation number of ρ⁽ᵏ⁾(g) followed by `turns` deck turns.
///
/// For each period q ≤ `max_period` and integer j, the displacement
/// F^q(x) − x − j (in cover turns) is evaluated exactly at sample points on
/// every sheet; a zero or a sign change proves a point with F^q(y) = y + j
/// by the intermediate value theorem, so the translation number is j/q.
pub fn rotation_number(
    rep: &KFoldRep,
    g: &Psl2zElement,
    turns: i64,
    max_period: u32,
) -> Result<Rotation, CircularError> {
    let k = i64::from(rep.k);
    let starts: Vec<LinePoint> = (0..k)
        .flat_map(|w| {
            sample_points().into_iter().map(move |p| LinePoint { winding: w, point: p })
        })
        .collect();
    let mut current = starts.clone();
    for q in 1..=max_period {
        current = current.iter().map(|x| rep.line_map(g, turns, x)).collect();
        let mut candidates: Vec<i64> = current
            .iter()
            .zip(&starts)
            .flat_map(|(y, x)| {
                let d = y.winding - x.winding;
                Integer::div_floor(&(d - 1), &k)..=Integer::div_ceil(&(d + 1), &k)
            })
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        for j in candidates {
            let (mut less, mut greater, mut equal) = (false, false, false);
            for (y, x) in current.iter().zip(&starts) {
                let target = LinePoint {
                    winding: x.winding + j * k,
                    point: x.point.clone(),
                };
                match y.cmp(&target) {
                    Ordering::Less => less = true,
                    Ordering::Greater => greater = true,
                    Ordering::Equal => equal = true,
                }
            }
            if equal || (less && greater) {
                let translation = Rational64::new(j, i64::from(q));
                let rot = translation - translation.floor();
                return Ok(Rotation {
                    translation,
                    rot,
                    period: q,
                });
            }
        }
    }
    Err(CircularError::NoPeriodicPoint { max_period })
}
