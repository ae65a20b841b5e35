use super::moebius::{BoundaryPoint, MoebiusMap};
use super::CircularError;
use crate::group::{Psl2zElement, Syllable};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Which representation of PSL(2,ℤ) on ∂ℍ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RepKind {
    Modular,
    /// β conjugated by H = [[c, d], [d, c]].
    Deformed {
        c: (i64, i64),
        d: (i64, i64),
    },
}

impl RepKind {
    pub fn deformed(c: (i64, i64), d: (i64, i64)) -> Self {
        RepKind::Deformed { c, d }
    }
}

/// Admissible deformations, tried in this order by
/// [`crate::circular::build_certified_deformed`].
pub const DEFORMATION_CANDIDATES: [((i64, i64), (i64, i64)); 4] = [
    ((5, 4), (-3, 4)),
    ((13, 12), (-5, 12)),
    ((17, 15), (-8, 15)),
    ((25, 24), (-7, 24)),
];

pub fn default_deformation() -> RepKind {
    let (c, d) = DEFORMATION_CANDIDATES[0];
    RepKind::deformed(c, d)
}

/// The images of α, β (and β²) under a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub kind: RepKind,
    pub alpha: MoebiusMap,
    pub beta: MoebiusMap,
    pub beta2: MoebiusMap,
}

fn rat((n, d): (i64, i64)) -> Result<BigRational, CircularError> {
    if d == 0 {
        return Err(CircularError::InvalidDeformation("zero denominator".into()));
    }
    Ok(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Builds the modular representation or its deformation. A deformation
/// needs c² − d² = 1, c > 0 and d < 0, so that H translates along the
/// geodesic through i and ω = (−1 + i√3)/2 toward −1.
pub fn build_rep(kind: RepKind) -> Result<Representation, CircularError> {
    let alpha = MoebiusMap::from_ints(0, -1, 1, 0).expect("det 1");
    let modular_beta = MoebiusMap::from_ints(1, 1, -1, 0).expect("det 1");
    let beta = match &kind {
        RepKind::Modular => modular_beta,
        RepKind::Deformed { c, d } => {
            let (c, d) = (rat(*c)?, rat(*d)?);
            if &c * &c - &d * &d != BigRational::one() {
                return Err(CircularError::InvalidDeformation("c^2 - d^2 must be 1".into()));
            }
            if !c.is_positive() || !d.is_negative() {
                return Err(CircularError::InvalidDeformation("need c > 0 and d < 0".into()));
            }
            let h = MoebiusMap::from_rationals([c.clone(), d.clone(), d, c])
                .map_err(|_| CircularError::InvalidDeformation("H is degenerate".into()))?;
            h.compose(&modular_beta).compose(&h.inverse())
        }
    };
    let beta2 = beta.compose(&beta);
    debug_assert!(alpha.trace_ratio().is_zero());
    debug_assert!(beta.trace_ratio().is_one());
    Ok(Representation {
        kind,
        alpha,
        beta,
        beta2,
    })
}

impl Representation {
    pub fn modular() -> Self {
        build_rep(RepKind::Modular).expect("modular representation")
    }

    pub fn deformed() -> Self {
        build_rep(default_deformation()).expect("default deformation")
    }

    pub fn syllable(&self, s: Syllable) -> &MoebiusMap {
        match s {
            Syllable::Alpha => &self.alpha,
            Syllable::Beta => &self.beta,
            Syllable::Beta2 => &self.beta2,
        }
    }

    pub fn eval(&self, g: &Psl2zElement) -> MoebiusMap {
        g.tail
            .iter()
            .fold(MoebiusMap::identity(), |acc, s| acc.compose(self.syllable(*s)))
    }

    /// ρ(g)·y, applying the syllables right to left.
    pub fn act(&self, g: &Psl2zElement, y: &BoundaryPoint) -> BoundaryPoint {
        g.tail
            .iter()
            .rev()
            .fold(y.clone(), |p, s| self.syllable(*s).apply(&p))
    }

    /// The orbit point ρ(g)·0.
    pub fn point(&self, g: &Psl2zElement) -> BoundaryPoint {
        self.act(g, &BoundaryPoint::zero())
    }
}
