use super::{OrderError, Sign, SignOracle};
use crate::group::{B3Element, Syllable, B3};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Rewriting steps allowed before handle reduction is declared broken.
pub const HANDLE_ITERATION_CAP: usize = 1_000_000;

/// A braid word on three strands. Letters are ±1 for σ₁^{±1} and ±2 for
/// σ₂^{±1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BraidWord(pub Vec<i8>);

impl BraidWord {
    /// Parses `s1 S1 s2 S2` tokens (also run together as `s1s2S1`).
    pub fn parse(s: &str) -> Option<BraidWord> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '.').collect();
        let bytes = compact.as_bytes();
        if bytes.len() % 2 != 0 {
            return None;
        }
        let mut out = Vec::new();
        for pair in bytes.chunks(2) {
            let sign = match pair[0] {
                b's' => 1,
                b'S' => -1,
                _ => return None,
            };
            let gen = match pair[1] {
                b'1' => 1,
                b'2' => 2,
                _ => return None,
            };
            out.push(sign * gen);
        }
        Some(BraidWord(out))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|l| -l).collect())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            let c = if *l > 0 { 's' } else { 'S' };
            write!(f, "{c}{}", l.abs())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sigma1Class {
    Sigma1Positive,
    Sigma1Negative,
    Sigma1Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandleReduced {
    pub word: BraidWord,
    pub class: Sigma1Class,
    pub steps: usize,
}

fn free_reduce(w: &[i8]) -> Vec<i8> {
    let mut out: Vec<i8> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Dehornoy handle reduction for σ₁-handles.
///
/// A σ₁-handle σ₁^e σ₂^m σ₁^{−e} is rewritten as σ₂^{−e} σ₁^{m} σ₂^{e}
/// (with σ₁^m meaning |m| copies of σ₁^{sgn m}) until none is left.
pub fn handle_reduce(w: &BraidWord) -> Result<HandleReduced, OrderError> {
    let mut word = free_reduce(&w.0);
    let mut steps = 0;
    loop {
        let mut handle = None;
        let mut last: Option<usize> = None;
        for (i, &l) in word.iter().enumerate() {
            if l.abs() == 1 {
                if let Some(j) = last {
                    if word[j] == -l {
                        handle = Some((j, i));
                        break;
                    }
                }
                last = Some(i);
            }
        }
        let Some((i, j)) = handle else { break };
        steps += 1;
        if steps > HANDLE_ITERATION_CAP {
            return Err(OrderError::IterationCap(HANDLE_ITERATION_CAP));
        }
        let e = word[i];
        let m: i64 = word[i + 1..j].iter().map(|&l| i64::from(l.signum())).sum();
        let mut rep = Vec::with_capacity(m.unsigned_abs() as usize + 2);
        if m != 0 {
            rep.push(-2 * e);
            rep.extend(std::iter::repeat(m.signum() as i8).take(m.unsigned_abs() as usize));
            rep.push(2 * e);
        }
        let mut next = Vec::with_capacity(word.len() + rep.len());
        next.extend_from_slice(&word[..i]);
        next.extend_from_slice(&rep);
        next.extend_from_slice(&word[j + 1..]);
        word = free_reduce(&next);
    }
    let class = match word.iter().find(|l| l.abs() == 1) {
        Some(&l) if l > 0 => Sigma1Class::Sigma1Positive,
        Some(_) => Sigma1Class::Sigma1Negative,
        None => Sigma1Class::Sigma1Free,
    };
    Ok(HandleReduced {
        word: BraidWord(word),
        class,
        steps,
    })
}

/// Rewrites a braid word in a, b: σ₁ = b a⁻¹ b, σ₂ = b⁻¹ a.
pub fn braid_to_b3(w: &BraidWord) -> B3Element {
    let s1 = B3Element::sigma1();
    let s2 = B3Element::sigma2();
    let (s1i, s2i) = (s1.inv(), s2.inv());
    w.0.iter().fold(B3Element::identity(), |acc, &l| {
        let g = match l {
            1 => &s1,
            -1 => &s1i,
            2 => &s2,
            _ => &s2i,
        };
        acc.mul(g)
    })
}

/// A braid word for a normal form: a = σ₁σ₂², b = σ₁σ₂, t = (σ₁σ₂)³.
pub fn b3_to_braid(g: &B3Element) -> BraidWord {
    let mut w = Vec::new();
    let delta2: [i8; 6] = [1, 2, 1, 2, 1, 2];
    for _ in 0..g.central.unsigned_abs() {
        if g.central > 0 {
            w.extend_from_slice(&delta2);
        } else {
            w.extend(delta2.iter().rev().map(|l| -l));
        }
    }
    for s in &g.tail {
        match s {
            Syllable::Alpha => w.extend_from_slice(&[1, 2, 2]),
            Syllable::Beta => w.extend_from_slice(&[1, 2]),
            Syllable::Beta2 => w.extend_from_slice(&[1, 2, 1, 2]),
        }
    }
    BraidWord(w)
}

/// The Dubrovina-Dubrovin order λ₃: positive iff the handle-reduced word is
/// σ₁-positive, or σ₁-free with negative σ₂-exponent sum.
pub fn dd_sign(g: &B3Element) -> Result<Sign, OrderError> {
    if g.is_identity() {
        return Err(OrderError::Identity);
    }
    let red = handle_reduce(&b3_to_braid(g))?;
    Ok(match red.class {
        Sigma1Class::Sigma1Positive => Sign::Pos,
        Sigma1Class::Sigma1Negative => Sign::Neg,
        Sigma1Class::Sigma1Free => {
            let sum: i64 = red.word.0.iter().map(|&l| i64::from(l.signum())).sum();
            match sum {
                0 => return Err(OrderError::Identity),
                s => Sign::of(s < 0),
            }
        }
    })
}

/// λ₃ as a [`SignOracle`].
#[derive(Debug, Clone, Copy, Default)]
pub struct DdOrder;

impl SignOracle<B3> for DdOrder {
    fn label(&self) -> String {
        "DD-lambda3".to_string()
    }

    fn sign(&self, g: &B3Element) -> Sign {
        dd_sign(g).expect("dd_sign on a non-identity element")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{ball, Group};
    use crate::orders::{check_order_axioms, compare};
    use proptest::prelude::*;
    use std::cmp::Ordering;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s).unwrap()
    }

    #[test]
    fn handle_examples() {
        let r = handle_reduce(&w("s1S1")).unwrap();
        assert!(r.word.0.is_empty());
        assert_eq!(r.class, Sigma1Class::Sigma1Free);

        let r = handle_reduce(&w("S2s1s2")).unwrap();
        assert_eq!(r.word, w("S2s1s2"));
        assert_eq!(r.class, Sigma1Class::Sigma1Positive);
        assert_eq!(r.steps, 0);

        let r = handle_reduce(&w("s1s2S1")).unwrap();
        assert_eq!(r.word, w("S2s1s2"));
        assert_eq!(braid_to_b3(&w("s1s2S1")), braid_to_b3(&r.word));
    }

    #[test]
    fn braid_conversion_round_trips() {
        for g in ball(&B3, 4) {
            assert_eq!(braid_to_b3(&b3_to_braid(&g)), g);
        }
        assert_eq!(braid_to_b3(&w("s1s2s2")), B3Element::a());
        assert_eq!(braid_to_b3(&w("s1s2")), B3Element::b());
    }

    #[test]
    fn dd_examples() {
        assert_eq!(dd_sign(&B3Element::y1()), Ok(Sign::Pos));
        assert_eq!(dd_sign(&B3Element::y2()), Ok(Sign::Pos));
        assert_eq!(dd_sign(&B3Element::a()), Ok(Sign::Pos));
        assert_eq!(dd_sign(&B3Element::sigma2()), Ok(Sign::Neg));
        assert_eq!(dd_sign(&B3Element::identity()), Err(OrderError::Identity));
        let (a, b) = (B3Element::a(), B3Element::b());
        assert_eq!(compare(&B3, &DdOrder, &a, &b), Ordering::Less);
        assert_eq!(dd_sign(&B3Element::t()), Ok(Sign::Pos));
        assert_eq!(dd_sign(&b.inv()), Ok(Sign::Neg));
    }

    #[test]
    fn dd_axioms_radius_six() {
        let rep = check_order_axioms(&B3, &DdOrder, 6);
        assert!(rep.is_clean(), "{:?}", &rep.violations[..1]);
    }

    fn braid_strategy() -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(prop::sample::select(vec![1i8, -1, 2, -2]), 0..24).prop_map(BraidWord)
    }

    proptest! {
        #[test]
        fn reduction_preserves_element(u in braid_strategy()) {
            let red = handle_reduce(&u).unwrap();
            prop_assert_eq!(braid_to_b3(&red.word), braid_to_b3(&u));
            // no σ₁-handle remains
            let s1: Vec<i8> = red.word.0.iter().copied().filter(|l| l.abs() == 1).collect();
            prop_assert!(s1.windows(2).all(|p| p[0] == p[1]));
        }

        #[test]
        fn sign_is_antisymmetric(u in braid_strategy()) {
            let g = braid_to_b3(&u);
            prop_assume!(!g.is_identity());
            prop_assert_eq!(dd_sign(&g.inv()).unwrap(), -dd_sign(&g).unwrap());
            prop_assert_eq!(dd_sign(&B3.invert(&g)).unwrap(), -dd_sign(&g).unwrap());
        }
    }
}
