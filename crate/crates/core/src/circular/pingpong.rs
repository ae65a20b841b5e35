use super::config::orbit_config;
use super::moebius::{circular_sign, in_open_arc, BoundaryPoint, MoebiusMap};
use super::rep::{build_rep, Representation, DEFORMATION_CANDIDATES};
use super::{first_generation, CircularError};
use crate::group::{ball, Group, Psl2z, Psl2zElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub const DEFAULT_GUARDIAN_RADIUS: usize = 8;

/// An open counterclockwise arc from `left` to `right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalOnCircle {
    pub left: BoundaryPoint,
    pub right: BoundaryPoint,
}

impl IntervalOnCircle {
    pub fn new(left: BoundaryPoint, right: BoundaryPoint) -> Result<Self, CircularError> {
        if left == right {
            return Err(CircularError::DegenerateInterval(format!(
                "endpoints coincide at {left}"
            )));
        }
        Ok(Self { left, right })
    }

    pub fn contains(&self, x: &BoundaryPoint) -> bool {
        in_open_arc(&self.left, x, &self.right)
    }

    /// Whether the open arcs share no point.
    pub fn is_disjoint(&self, other: &IntervalOnCircle) -> bool {
        let base = &self.left;
        let before = |x: &BoundaryPoint, y: &BoundaryPoint| x == y || circular_sign(base, x, y) == 1;
        other.left != *base
            && before(&self.right, &other.left)
            && (other.right == *base || before(&other.left, &other.right))
    }
}

impl std::fmt::Display for IntervalOnCircle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// A ping-pong interval J together with the guardians, the orbit points of
/// the boundary of the inner interval K.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuardedInterval {
    pub name: String,
    pub interval: IntervalOnCircle,
    pub guardians: [Psl2zElement; 2],
}

/// γ₁, γ₂ with J₁⁻, J₂⁻ (sources) and J₁⁺, J₂⁺ (targets).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PingPongData {
    pub gammas: [Psl2zElement; 2],
    pub minus: [GuardedInterval; 2],
    pub plus: [GuardedInterval; 2],
}

impl PingPongData {
    pub fn intervals(&self) -> [&GuardedInterval; 4] {
        [&self.minus[0], &self.plus[0], &self.minus[1], &self.plus[1]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PingPongWitness {
    /// γᵢ does not map the closed complement of Jᵢ⁻ into Jᵢ⁺.
    InclusionFailed {
        gamma: usize,
        image_start: BoundaryPoint,
        image_end: BoundaryPoint,
        target: String,
    },
    GuardianOutside {
        interval: String,
        guardian: String,
        point: BoundaryPoint,
    },
    GuardianNotExtremal {
        interval: String,
        element: String,
        point: BoundaryPoint,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PingPongReport {
    pub passed: bool,
    pub witness: Option<PingPongWitness>,
    pub radius: usize,
    pub tested_points: usize,
}

/// A point of the open counterclockwise arc from p to q, the midpoint in
/// the affine chart that keeps the arc bounded.
fn arc_midpoint(p: &BoundaryPoint, q: &BoundaryPoint) -> Option<BoundaryPoint> {
    let mid = |p: &BoundaryPoint, q: &BoundaryPoint| match (p, q) {
        (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) if a < b => Some(BoundaryPoint::Finite(
            (a + b) / BigRational::from_integer(BigInt::from(2)),
        )),
        _ => None,
    };
    mid(p, q).or_else(|| {
        let chart = MoebiusMap::from_ints(0, -1, 1, 0).expect("det 1");
        mid(&chart.apply(p), &chart.apply(q)).map(|m| chart.inverse().apply(&m))
    })
}

fn el(w: &str) -> Psl2zElement {
    Psl2z.parse(w).expect("valid word")
}

/// The intervals J built from the exact first-generation points: each
/// inner interval K is widened to the midpoints toward its neighbours.
pub fn guardian_intervals(rep: &Representation) -> Result<PingPongData, CircularError> {
    let cfg = orbit_config(rep, &first_generation(), &BoundaryPoint::zero())?;
    let n = cfg.entries.len();
    let make = |name: &str, lo: &str, hi: &str| -> Result<GuardedInterval, CircularError> {
        let (lo, hi) = (el(lo), el(hi));
        let i = cfg.position(&lo).expect("first generation");
        let j = cfg.position(&hi).expect("first generation");
        let prev = &cfg.entries[(i + n - 1) % n].point;
        let next = &cfg.entries[(j + 1) % n].point;
        let pad = |a: &BoundaryPoint, b: &BoundaryPoint| {
            arc_midpoint(a, b).ok_or_else(|| {
                CircularError::DegenerateInterval(format!("no midpoint between {a} and {b}"))
            })
        };
        Ok(GuardedInterval {
            name: name.to_string(),
            interval: IntervalOnCircle::new(
                pad(prev, &cfg.entries[i].point)?,
                pad(&cfg.entries[j].point, next)?,
            )?,
            guardians: [lo, hi],
        })
    };
    Ok(PingPongData {
        gammas: [el("be2.al.be.al"), el("al.be.al.be2")],
        minus: [
            make("J1-", "al.be2", "al.be2.al")?,
            make("J2-", "be", "be.al")?,
        ],
        plus: [
            make("J1+", "be2", "be2.al")?,
            make("J2+", "al.be", "al.be.al")?,
        ],
    })
}

/// Checks that γᵢ maps the closed complement of Jᵢ⁻ into the open Jᵢ⁺ and
/// that the guardians are the extreme orbit points inside each J among the
/// orbit of the ball of the given radius.
pub fn ping_pong_verify(
    rep: &Representation,
    data: &PingPongData,
    radius: usize,
) -> Result<PingPongReport, CircularError> {
    let all = data.intervals();
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if !a.interval.is_disjoint(&b.interval) {
                return Err(CircularError::DegenerateInterval(format!(
                    "{} {} and {} {} overlap",
                    a.name, a.interval, b.name, b.interval
                )));
            }
        }
    }
    let points = ball(&Psl2z, radius);
    let mut report = PingPongReport {
        passed: false,
        witness: None,
        radius,
        tested_points: points.len(),
    };
    for i in 0..2 {
        let m = rep.eval(&data.gammas[i]);
        let source = &data.minus[i].interval;
        let target = &data.plus[i].interval;
        // the closed complement of the source runs from its right end to its left end
        let start = m.apply(&source.right);
        let end = m.apply(&source.left);
        let inside = target.contains(&start)
            && target.contains(&end)
            && circular_sign(&target.left, &start, &end) == 1;
        if !inside {
            report.witness = Some(PingPongWitness::InclusionFailed {
                gamma: i + 1,
                image_start: start,
                image_end: end,
                target: data.plus[i].name.clone(),
            });
            return Ok(report);
        }
    }
    for j in all {
        let [gl, gr] = &j.guardians;
        let (pl, pr) = (rep.point(gl), rep.point(gr));
        for (g, p) in [(gl, &pl), (gr, &pr)] {
            if !j.interval.contains(p) {
                report.witness = Some(PingPongWitness::GuardianOutside {
                    interval: j.name.clone(),
                    guardian: g.to_string(),
                    point: p.clone(),
                });
                return Ok(report);
            }
        }
        for g in &points {
            let p = rep.point(g);
            if in_open_arc(&j.interval.left, &p, &pl) || in_open_arc(&pr, &p, &j.interval.right) {
                report.witness = Some(PingPongWitness::GuardianNotExtremal {
                    interval: j.name.clone(),
                    element: g.to_string(),
                    point: p,
                });
                return Ok(report);
            }
        }
    }
    report.passed = true;
    Ok(report)
}

/// The first admissible deformation whose guardian intervals pass.
pub fn build_certified_deformed(
    radius: usize,
) -> Result<(Representation, PingPongData, PingPongReport), CircularError> {
    let mut last = String::from("no candidates");
    for (c, d) in DEFORMATION_CANDIDATES {
        let rep = build_rep(super::RepKind::deformed(c, d))?;
        let data = match guardian_intervals(&rep) {
            Ok(data) => data,
            Err(e) => {
                last = e.to_string();
                continue;
            }
        };
        let report = ping_pong_verify(&rep, &data, radius)?;
        if report.passed {
            return Ok((rep, data, report));
        }
        last = format!("{:?}", report.witness);
    }
    Err(CircularError::PingPongPrecondition(last))
}

/// A nontrivial reduced word in γ₁^±1, γ₂^±1 of length at most `max_len`
/// whose image is the identity, if any. Letters are (generator index,
/// inverted).
pub fn gamma_word_identity(
    rep: &Representation,
    gammas: &[Psl2zElement; 2],
    max_len: usize,
) -> Option<Vec<(usize, bool)>> {
    let maps: Vec<MoebiusMap> = gammas
        .iter()
        .flat_map(|g| {
            let m = rep.eval(g);
            let inv = m.inverse();
            [m, inv]
        })
        .collect();
    fn go(
        maps: &[MoebiusMap],
        acc: &MoebiusMap,
        word: &mut Vec<usize>,
        max_len: usize,
    ) -> bool {
        if !word.is_empty() && acc.is_identity() {
            return true;
        }
        if word.len() == max_len {
            return false;
        }
        for l in 0..4 {
            if word.last().is_some_and(|&prev| prev == l ^ 1) {
                continue;
            }
            word.push(l);
            if go(maps, &acc.compose(&maps[l]), word, max_len) {
                return true;
            }
            word.pop();
        }
        false
    }
    let mut word = Vec::new();
    go(&maps, &MoebiusMap::identity(), &mut word, max_len)
        .then(|| word.iter().map(|&l| (l / 2, l % 2 == 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deformed_passes() {
        let rep = Representation::deformed();
        let data = guardian_intervals(&rep).unwrap();
        let report = ping_pong_verify(&rep, &data, DEFAULT_GUARDIAN_RADIUS).unwrap();
        assert!(report.passed, "{:?}", report.witness);
    }

    #[test]
    fn guardians_map_to_guardians() {
        let rep = Representation::deformed();
        let g1 = rep.eval(&el("be2.al.be.al"));
        assert_eq!(g1.apply(&rep.point(&el("al.be2.al"))), rep.point(&el("be2")));
        assert_eq!(g1.apply(&rep.point(&el("al.be2"))), rep.point(&el("be2.al")));
        let g2 = rep.eval(&el("al.be.al.be2"));
        assert_eq!(g2.apply(&rep.point(&el("be"))), rep.point(&el("al.be.al")));
        assert_eq!(g2.apply(&rep.point(&el("be.al"))), rep.point(&el("al.be")));
    }

    #[test]
    fn only_e_and_alpha_lie_outside() {
        let rep = Representation::deformed();
        let data = guardian_intervals(&rep).unwrap();
        let outside: Vec<String> = ball(&Psl2z, 6)
            .iter()
            .filter(|g| {
                let p = rep.point(g);
                data.intervals().iter().all(|j| !j.interval.contains(&p))
            })
            .map(|g| g.to_string())
            .collect();
        assert_eq!(outside, ["e", "al"]);
    }

    #[test]
    fn modular_fails_with_the_same_intervals() {
        let data = guardian_intervals(&Representation::deformed()).unwrap();
        let report = ping_pong_verify(&Representation::modular(), &data, 4).unwrap();
        assert!(!report.passed);
        assert!(report.witness.is_some());
    }

    #[test]
    fn swapped_endpoints_are_rejected() {
        let rep = Representation::deformed();
        let mut data = guardian_intervals(&rep).unwrap();
        let j = &mut data.plus[1].interval;
        std::mem::swap(&mut j.left, &mut j.right);
        assert!(matches!(
            ping_pong_verify(&rep, &data, 2),
            Err(CircularError::DegenerateInterval(_))
        ));
        assert!(IntervalOnCircle::new(BoundaryPoint::zero(), BoundaryPoint::zero()).is_err());
    }

    #[test]
    fn gamma_words_are_free() {
        let rep = Representation::deformed();
        let data = guardian_intervals(&rep).unwrap();
        assert_eq!(gamma_word_identity(&rep, &data.gammas, 8), None);
    }

    #[test]
    fn relation_is_found_when_present() {
        let rep = Representation::deformed();
        let al = el("al");
        assert_eq!(gamma_word_identity(&rep, &[al.clone(), al], 2), Some(vec![(0, false), (0, false)]));
    }

    #[test]
    fn certified_default_is_first_candidate() {
        let (rep, _, report) = build_certified_deformed(4).unwrap();
        assert!(report.passed);
        assert_eq!(rep, Representation::deformed());
    }

    #[test]
    fn midpoints_through_infinity() {
        let m = arc_midpoint(&BoundaryPoint::frac(49, 39), &BoundaryPoint::Infinity).unwrap();
        assert_eq!(m, BoundaryPoint::frac(98, 39));
        let m = arc_midpoint(&BoundaryPoint::int(1), &BoundaryPoint::int(-1)).unwrap();
        assert_eq!(m, BoundaryPoint::Infinity);
    }
}
