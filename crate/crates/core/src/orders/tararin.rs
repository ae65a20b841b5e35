use super::{OrderError, Sign, SignOracle};
use crate::group::{TararinElement, TararinGroup, TararinSpec};
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A choice of sign for each level of a Tararin group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpsilonSignature(pub Vec<Sign>);

impl EpsilonSignature {
    /// Parses `+-+` style signatures.
    pub fn parse(s: &str) -> Option<EpsilonSignature> {
        s.chars()
            .map(|c| match c {
                '+' => Some(Sign::Pos),
                '-' => Some(Sign::Neg),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(EpsilonSignature)
    }
}

impl fmt::Display for EpsilonSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if s.is_pos() { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// λ_ε: the sign of an element is ε(i)·sign(qᵢ) at its first nonzero level i.
#[derive(Debug, Clone)]
pub struct TararinOrder {
    pub epsilon: EpsilonSignature,
}

impl SignOracle<TararinGroup> for TararinOrder {
    fn label(&self) -> String {
        format!("tararin{}", self.epsilon)
    }

    fn sign(&self, g: &TararinElement) -> Sign {
        let i = g.leading_level().expect("non-identity element");
        self.epsilon.0[i] * Sign::of(g.0[i].is_positive())
    }
}

/// All 2^{n+1} orders of the group, ε enumerated in binary with `+` first.
pub fn tararin_orders(spec: &TararinSpec) -> Result<Vec<TararinOrder>, OrderError> {
    spec.validate()?;
    let levels = spec.levels.len();
    Ok((0..1u32 << levels)
        .map(|mask| TararinOrder {
            epsilon: EpsilonSignature(
                (0..levels)
                    .map(|i| Sign::of(mask & (1 << (levels - 1 - i)) == 0))
                    .collect(),
            ),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Group, TararinGroup};
    use crate::orders::check_order_axioms;
    use num_rational::Rational64;

    #[test]
    fn counts() {
        let z = TararinSpec {
            levels: vec![vec![Rational64::from_integer(1)]],
            actions: vec![],
        };
        assert_eq!(tararin_orders(&z).unwrap().len(), 2);
        assert_eq!(tararin_orders(&TararinSpec::klein()).unwrap().len(), 4);
        assert_eq!(tararin_orders(&TararinSpec::integral(2)).unwrap().len(), 8);
        let mut bad = TararinSpec::klein();
        bad.actions[0] = 1;
        assert!(tararin_orders(&bad).is_err());
    }

    #[test]
    fn klein_orders_are_distinct_and_valid() {
        let spec = TararinSpec::klein();
        let g = TararinGroup::new(spec.clone()).unwrap();
        let orders = tararin_orders(&spec).unwrap();
        for o in &orders {
            assert!(check_order_axioms(&g, o, 5).is_clean(), "{}", o.label());
            for i in 0..2 {
                let s = g.s(i);
                let s_eps = if o.epsilon.0[i].is_pos() { s } else { g.invert(&s) };
                assert_eq!(o.sign(&s_eps), Sign::Pos);
            }
        }
        for (i, a) in orders.iter().enumerate() {
            for b in &orders[i + 1..] {
                assert!((0..2).any(|l| a.sign(&g.s(l)) != b.sign(&g.s(l))));
            }
        }
    }

    #[test]
    fn rational_levels_pass_axioms() {
        let spec = TararinSpec {
            levels: vec![
                vec![Rational64::from_integer(1)],
                vec![Rational64::new(1, 3)],
                vec![Rational64::new(1, 2)],
            ],
            actions: vec![-1, -1],
        };
        let g = TararinGroup::new(spec.clone()).unwrap();
        for o in tararin_orders(&spec).unwrap() {
            assert!(check_order_axioms(&g, &o, 4).is_clean());
        }
    }

    #[test]
    fn signature_text() {
        let e = EpsilonSignature::parse("+-").unwrap();
        assert_eq!(e.to_string(), "+-");
        assert!(EpsilonSignature::parse("+x").is_none());
    }
}
