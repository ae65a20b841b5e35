use super::{Generator, Group, GroupError, GroupId};
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Letters naming the levels, from the top of the series downwards.
pub const LEVEL_LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

/// A split iterated extension A₀ ⋉ (A₁ ⋉ (… ⋉ Aₙ)) of subgroups of ℚ.
///
/// Level i acts on level i+1 by `q ↦ (−1)^{numerator(p)} q` for the acting
/// exponent p, and trivially on deeper levels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TararinSpec {
    /// Generators of each Aᵢ.
    pub levels: Vec<Vec<Rational64>>,
    /// Sign of the action of level i on level i+1; must be −1.
    pub actions: Vec<i8>,
}

impl TararinSpec {
    /// ℤ ⋉ ℤ with y ↦ y⁻¹ under x: the Klein bottle group.
    pub fn klein() -> Self {
        TararinSpec::integral(1)
    }

    /// ℤ ⋉ (ℤ ⋉ … ℤ) with n+1 levels and all adjacent actions −1.
    pub fn integral(n: usize) -> Self {
        TararinSpec {
            levels: vec![vec![Rational64::from_integer(1)]; n + 1],
            actions: vec![-1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        let err = |m: &str| Err(GroupError::InvalidSpec(m.to_string()));
        if self.levels.is_empty() || self.levels.len() > LEVEL_LETTERS.len() {
            return err("between 1 and 4 levels are supported");
        }
        if self.actions.len() != self.levels.len() - 1 {
            return err("need one action per adjacent pair of levels");
        }
        if self.levels.iter().any(|l| l.is_empty() || l.iter().any(|q| q.is_zero())) {
            return err("every level needs nonzero generators");
        }
        if self.actions.iter().any(|&s| s != -1) {
            return err("every adjacent action must be -1, otherwise the double quotient is bi-orderable");
        }
        for (i, level) in self.levels.iter().enumerate().take(self.actions.len()) {
            if level.iter().any(|q| q.denom().is_even()) {
                return Err(GroupError::InvalidSpec(format!(
                    "level {i} acts by a sign, so its generators need odd denominators"
                )));
            }
        }
        Ok(())
    }
}

/// The tuple (q₀, …, qₙ) standing for x₀^{q₀} ⋯ xₙ^{qₙ}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TararinElement(pub Vec<Rational64>);

impl TararinElement {
    /// First level with a nonzero coordinate.
    pub fn leading_level(&self) -> Option<usize> {
        self.0.iter().position(|q| !q.is_zero())
    }

    /// Membership in Gᵢ, the subgroup of levels ≥ i.
    pub fn in_level(&self, i: usize) -> bool {
        self.0.iter().take(i).all(|q| q.is_zero())
    }
}

impl fmt::Display for TararinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.0.iter().map(|q| q.to_string()).collect();
        write!(f, "({})", coords.join(", "))
    }
}

fn parity(q: &Rational64) -> i64 {
    if q.numer().is_odd() {
        -1
    } else {
        1
    }
}

/// A Tararin group given by a validated [`TararinSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TararinGroup {
    spec: TararinSpec,
}

impl TararinGroup {
    pub fn new(spec: TararinSpec) -> Result<Self, GroupError> {
        spec.validate()?;
        Ok(TararinGroup { spec })
    }

    pub fn spec(&self) -> &TararinSpec {
        &self.spec
    }

    pub fn levels(&self) -> usize {
        self.spec.levels.len()
    }

    /// sᵢ = xᵢ raised to the first generator of Aᵢ.
    pub fn s(&self, i: usize) -> TararinElement {
        let mut v = vec![Rational64::zero(); self.levels()];
        v[i] = self.spec.levels[i][0];
        TararinElement(v)
    }
}

impl Group for TararinGroup {
    type Elem = TararinElement;

    fn id(&self) -> GroupId {
        GroupId::Tararin
    }

    fn identity(&self) -> TararinElement {
        TararinElement(vec![Rational64::zero(); self.levels()])
    }

    /// (q)(p): rᵢ = pᵢ + (−1)^{num p_{i−1}} qᵢ, moving each xᵢ^{qᵢ} past the
    /// lower levels of p.
    fn multiply(&self, q: &TararinElement, p: &TararinElement) -> TararinElement {
        let r = (0..self.levels())
            .map(|i| {
                let s = if i == 0 { 1 } else { parity(&p.0[i - 1]) };
                p.0[i] + q.0[i] * s
            })
            .collect();
        TararinElement(r)
    }

    fn invert(&self, q: &TararinElement) -> TararinElement {
        let r = (0..self.levels())
            .map(|i| {
                let s = if i == 0 { 1 } else { parity(&q.0[i - 1]) };
                -q.0[i] * s
            })
            .collect();
        TararinElement(r)
    }

    fn alphabet(&self) -> Vec<Generator<TararinElement>> {
        let mut out = Vec::new();
        for (i, gens) in self.spec.levels.iter().enumerate() {
            for (j, g) in gens.iter().enumerate() {
                let mut v = vec![Rational64::zero(); self.levels()];
                v[i] = *g;
                let name = if j == 0 {
                    LEVEL_LETTERS[i].to_string()
                } else {
                    format!("{}{}", LEVEL_LETTERS[i], j)
                };
                out.push(Generator::new(name, TararinElement(v)));
            }
        }
        out
    }

    /// Word x₀^{k₀}⋯ with kᵢ measured in units of the first generator of Aᵢ.
    fn format(&self, g: &TararinElement) -> String {
        let toks: Vec<String> = g
            .0
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(i, q)| {
                let k = q / self.spec.levels[i][0];
                let l = LEVEL_LETTERS[i];
                if k == Rational64::from_integer(1) {
                    l.to_string()
                } else {
                    format!("{l}^{k}")
                }
            })
            .collect();
        if toks.is_empty() {
            "e".to_string()
        } else {
            toks.join(".")
        }
    }

    /// Tokens are `x`, `X`, `x^k` or `x^p/q` for rational exponents; bare
    /// letters may be run together (`xyX`).
    fn parse(&self, s: &str) -> Result<TararinElement, GroupError> {
        let one = Rational64::from_integer(1);
        let mut acc = self.identity();
        for tok in s
            .split(|c: char| c == '.' || c == ',' || c == '*' || c.is_whitespace())
            .filter(|t| !t.is_empty() && *t != "e")
        {
            if tok.chars().all(|c| LEVEL_LETTERS.contains(&c.to_ascii_lowercase())) {
                for c in tok.chars() {
                    acc = self.multiply(&acc, &self.letter(c, 0, one, tok)?);
                }
                continue;
            }
            let unknown = || GroupError::UnknownGenerator(tok.to_string());
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<Rational64>().map_err(|_| unknown())?),
                None => (tok, one),
            };
            let mut chars = name.chars();
            let c = chars.next().ok_or_else(unknown)?;
            let rest = chars.as_str();
            let j = if rest.is_empty() {
                0
            } else {
                rest.parse::<usize>().map_err(|_| unknown())?
            };
            acc = self.multiply(&acc, &self.letter(c, j, exp, tok)?);
        }
        Ok(acc)
    }
}

impl TararinGroup {
    /// The element x_level^{exp·gⱼ} for the j-th generator gⱼ of the level
    /// named by `c` (uppercase inverts).
    fn letter(&self, c: char, j: usize, exp: Rational64, tok: &str) -> Result<TararinElement, GroupError> {
        let unknown = || GroupError::UnknownGenerator(tok.to_string());
        let level = LEVEL_LETTERS[..self.levels()]
            .iter()
            .position(|&l| l == c.to_ascii_lowercase())
            .ok_or_else(unknown)?;
        let g = *self.spec.levels[level].get(j).ok_or_else(unknown)?;
        let exp = if c.is_ascii_uppercase() { -exp } else { exp };
        let mut v = vec![Rational64::zero(); self.levels()];
        v[level] = g * exp;
        Ok(TararinElement(v))
    }
}
