use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A point of ∂ℍ = ℚ ∪ {∞}.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BoundaryPoint {
    Finite(BigRational),
    Infinity,
}

impl BoundaryPoint {
    pub fn zero() -> Self {
        BoundaryPoint::Finite(BigRational::zero())
    }

    pub fn int(n: i64) -> Self {
        BoundaryPoint::Finite(BigRational::from_integer(n.into()))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        BoundaryPoint::Finite(BigRational::new(n.into(), d.into()))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            BoundaryPoint::Finite(q) => Some(q),
            BoundaryPoint::Infinity => None,
        }
    }

    /// Position along the circle counterclockwise from `0`:
    /// 0, then the positive reals, then ∞, then the negative reals.
    pub fn key(&self) -> CircleKey<'_> {
        match self {
            BoundaryPoint::Infinity => CircleKey(2, None),
            BoundaryPoint::Finite(q) if q.is_zero() => CircleKey(0, None),
            BoundaryPoint::Finite(q) if q.is_positive() => CircleKey(1, Some(q)),
            BoundaryPoint::Finite(q) => CircleKey(3, Some(q)),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            BoundaryPoint::Infinity => f64::INFINITY,
            BoundaryPoint::Finite(q) => q.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Angle in [0, 2π) under the Cayley map, with 0 ↦ 0 and ∞ ↦ π.
    pub fn angle(&self) -> f64 {
        match self {
            BoundaryPoint::Infinity => std::f64::consts::PI,
            BoundaryPoint::Finite(_) => {
                let a = 2.0 * self.to_f64().atan();
                a.rem_euclid(2.0 * std::f64::consts::PI)
            }
        }
    }
}

/// Sort key for counterclockwise position starting at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CircleKey<'a>(u8, Option<&'a BigRational>);

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Infinity => f.write_str("inf"),
            BoundaryPoint::Finite(q) => write!(f, "{q}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn of(n: &BigInt) -> IntRepr {
        match n.to_i64() {
            Some(v) => IntRepr::Small(v),
            None => IntRepr::Big(n.to_string()),
        }
    }

    fn value(self) -> Result<BigInt, String> {
        match self {
            IntRepr::Small(v) => Ok(v.into()),
            IntRepr::Big(s) => s.parse().map_err(|_| format!("bad integer {s}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Finite { num: IntRepr, den: IntRepr },
    Infinite { inf: bool },
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BoundaryPoint::Infinity => PointRepr::Infinite { inf: true },
            BoundaryPoint::Finite(q) => PointRepr::Finite {
                num: IntRepr::of(q.numer()),
                den: IntRepr::of(q.denom()),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BoundaryPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match PointRepr::deserialize(d)? {
            PointRepr::Infinite { inf: true } => Ok(BoundaryPoint::Infinity),
            PointRepr::Infinite { inf: false } => Err(D::Error::custom("inf must be true")),
            PointRepr::Finite { num, den } => {
                let num = num.value().map_err(D::Error::custom)?;
                let den = den.value().map_err(D::Error::custom)?;
                if den.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(BoundaryPoint::Finite(BigRational::new(num, den)))
            }
        }
    }
}

fn sign_of(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Orientation of three boundary points with increasing ℝ counterclockwise:
/// 0 iff two coincide, +1 for counterclockwise order.
pub fn circular_sign(p: &BoundaryPoint, q: &BoundaryPoint, r: &BoundaryPoint) -> i8 {
    use BoundaryPoint::*;
    if p == q || q == r || p == r {
        return 0;
    }
    match (p, q, r) {
        (Finite(p), Finite(q), Finite(r)) => {
            sign_of(&((q - p) * (r - q) * (r - p)))
        }
        (Finite(p), Finite(q), Infinity) => sign_of(&(q - p)),
        (Infinity, Finite(q), Finite(r)) => sign_of(&(r - q)),
        (Finite(p), Infinity, Finite(r)) => sign_of(&(p - r)),
        _ => unreachable!("two infinite points coincide"),
    }
}

/// Whether `x` lies in the open counterclockwise arc from `a` to `b`.
pub fn in_open_arc(a: &BoundaryPoint, x: &BoundaryPoint, b: &BoundaryPoint) -> bool {
    circular_sign(a, x, b) == 1
}

/// Whether `x` lies in the closed counterclockwise arc from `a` to `b`.
pub fn in_closed_arc(a: &BoundaryPoint, x: &BoundaryPoint, b: &BoundaryPoint) -> bool {
    x == a || x == b || in_open_arc(a, x, b)
}

/// A Moebius map z ↦ (az+b)/(cz+d) with integer entries of positive
/// determinant, stored up to scalar (entries coprime, first nonzero entry positive).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MoebiusMap {
    m: [BigInt; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonPositiveDeterminant;

impl MoebiusMap {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self, NonPositiveDeterminant> {
        let map = MoebiusMap { m: [a, b, c, d] };
        if !map.det().is_positive() {
            return Err(NonPositiveDeterminant);
        }
        Ok(map.normalized())
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self, NonPositiveDeterminant> {
        MoebiusMap::new(a.into(), b.into(), c.into(), d.into())
    }

    /// Clears denominators of a rational matrix.
    pub fn from_rationals(m: [BigRational; 4]) -> Result<Self, NonPositiveDeterminant> {
        let l = m.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = m.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect();
        let [a, b, c, d]: [BigInt; 4] = ints.try_into().expect("four entries");
        MoebiusMap::new(a, b, c, d)
    }

    pub fn identity() -> Self {
        MoebiusMap::from_ints(1, 0, 0, 1).expect("det 1")
    }

    fn normalized(mut self) -> Self {
        let g = self.m.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in &mut self.m {
                *x /= &g;
            }
        }
        if self.m.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in &mut self.m {
                *x = -&*x;
            }
        }
        self
    }

    pub fn entries(&self) -> &[BigInt; 4] {
        &self.m
    }

    pub fn det(&self) -> BigInt {
        &self.m[0] * &self.m[3] - &self.m[1] * &self.m[2]
    }

    pub fn trace(&self) -> BigInt {
        &self.m[0] + &self.m[3]
    }

    /// trace²/det, a conjugacy invariant: 0 for order two, 1 for order three,
    /// 4 for parabolic, > 4 for hyperbolic.
    pub fn trace_ratio(&self) -> BigRational {
        BigRational::new(self.trace() * self.trace(), self.det())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &other.m;
        MoebiusMap {
            m: [a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h],
        }
        .normalized()
    }

    pub fn inverse(&self) -> MoebiusMap {
        let [a, b, c, d] = &self.m;
        MoebiusMap {
            m: [d.clone(), -b, -c, a.clone()],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.m[1].is_zero() && self.m[2].is_zero() && self.m[0] == self.m[3]
    }

    pub fn apply(&self, z: &BoundaryPoint) -> BoundaryPoint {
        let [a, b, c, d] = &self.m;
        match z {
            BoundaryPoint::Infinity => {
                if c.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(BigRational::new(a.clone(), c.clone()))
                }
            }
            BoundaryPoint::Finite(q) => {
                let (n, m) = (q.numer(), q.denom());
                let den = c * n + d * m;
                if den.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(BigRational::new(a * n + b * m, den))
                }
            }
        }
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// Total order by counterclockwise position from 0.
pub fn cmp_ccw(p: &BoundaryPoint, q: &BoundaryPoint) -> Ordering {
    p.key().cmp(&q.key())
}
