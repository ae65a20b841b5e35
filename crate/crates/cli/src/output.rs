//! JSON documents emitted by the commands. Every document carries a
//! `schema` tag naming its type and version.

use num_rational::Rational64;
use ordkit_core::circular::BoundaryPoint;
use ordkit_core::orders::Sign;
use serde::{Deserialize, Serialize};

pub fn schema(name: &str) -> String {
    format!("ordkit.{name}/1")
}

/// A boundary point: exact numerator and denominator as decimal strings,
/// or `{"inf": true}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointJson {
    Finite { num: String, den: String },
    Infinite { inf: bool },
}

impl From<&BoundaryPoint> for PointJson {
    fn from(p: &BoundaryPoint) -> Self {
        match p {
            BoundaryPoint::Infinity => PointJson::Infinite { inf: true },
            BoundaryPoint::Finite(q) => PointJson::Finite {
                num: q.numer().to_string(),
                den: q.denom().to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
}

impl From<Rational64> for RationalJson {
    fn from(q: Rational64) -> Self {
        RationalJson {
            num: *q.numer(),
            den: *q.denom(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub schema: String,
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareDoc {
    pub schema: String,
    pub group: String,
    pub order: String,
    pub left: String,
    pub right: String,
    /// One of `<`, `=`, `>`.
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallDoc {
    pub schema: String,
    pub group: String,
    pub radius: usize,
    pub size: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub index: usize,
    pub word: String,
    pub numerator: String,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeDoc {
    pub schema: String,
    pub group: String,
    pub order: String,
    pub x0: String,
    pub entries: Vec<OrbitRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignEntry {
    pub word: String,
    pub sign: i8,
}

impl SignEntry {
    pub fn new(word: String, sign: Sign) -> Self {
        SignEntry {
            word,
            sign: sign.to_i8(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub assignment: Vec<SignEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConesDoc {
    pub schema: String,
    pub group: String,
    pub radius: usize,
    pub required: Vec<String>,
    pub count: usize,
    pub survivors: Vec<Survivor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolationDoc {
    pub schema: String,
    pub group: String,
    pub order: String,
    pub required: Vec<String>,
    pub radius: usize,
    pub survivor_count: usize,
    pub order_survives: bool,
    pub all_agree_with_order: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TararinEntry {
    pub epsilon: String,
    pub generator_signs: Vec<SignEntry>,
    pub axioms_clean: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TararinDoc {
    pub schema: String,
    pub group: String,
    pub radius: usize,
    pub orders: Vec<TararinEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirclePoint {
    pub word: String,
    pub point: PointJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularDoc {
    pub schema: String,
    pub rep: String,
    pub radius: usize,
    /// Counterclockwise from the base point 0.
    pub points: Vec<CirclePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub name: String,
    pub left: PointJson,
    pub right: PointJson,
    pub guardians: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PingpongDoc {
    pub schema: String,
    pub rep: String,
    pub passed: bool,
    pub radius: usize,
    pub tested_points: usize,
    pub gammas: [String; 2],
    pub intervals: Vec<IntervalJson>,
    pub witness: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotDoc {
    pub schema: String,
    pub k: u32,
    pub element: String,
    pub turns: i64,
    pub rot: RationalJson,
    pub translation: RationalJson,
    pub period: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftDoc {
    pub schema: String,
    pub element: String,
    pub k: u32,
    pub convention: String,
    pub winding: i64,
    /// The PSL(2,Z) element whose orbit point the lift lies over.
    pub over: String,
    pub point: PointJson,
    pub sheet: u32,
    pub sign: Option<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructDoc {
    pub schema: String,
    pub rep: String,
    pub depth: usize,
    pub size: usize,
    pub matches_direct_evaluation: bool,
    pub points: Vec<CirclePoint>,
}
