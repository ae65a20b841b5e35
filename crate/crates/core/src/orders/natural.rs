use super::{Sign, SignOracle};
use crate::group::{DirectSum, DirectSumElement, RationalElement, RationalGroup};
use num_traits::Signed;

/// The order on ⊕ℤ by the sign of the highest nonzero coordinate. On ℤ this
/// is the natural order.
#[derive(Debug, Clone, Copy, Default)]
pub struct DirectSumOrder {
    pub reciprocal: bool,
}

impl SignOracle<DirectSum> for DirectSumOrder {
    fn label(&self) -> String {
        if self.reciprocal { "lex-top-reciprocal" } else { "lex-top" }.to_string()
    }

    fn sign(&self, g: &DirectSumElement) -> Sign {
        let (_, v) = g.top().expect("non-identity element");
        Sign::of((v > 0) != self.reciprocal)
    }
}

/// The order induced by A ⊂ ℚ ⊂ ℝ, or its reverse.
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalOrder {
    pub reciprocal: bool,
}

/// Alias matching the operation name.
pub fn rational_order(reciprocal: bool) -> RationalOrder {
    RationalOrder { reciprocal }
}

impl SignOracle<RationalGroup> for RationalOrder {
    fn label(&self) -> String {
        if self.reciprocal { "rational-reciprocal" } else { "rational" }.to_string()
    }

    fn sign(&self, g: &RationalElement) -> Sign {
        Sign::of(g.0.is_positive() != self.reciprocal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::orders::check_order_axioms;
    use num_rational::Rational64;

    #[test]
    fn rational_examples() {
        let q = RationalElement(Rational64::new(3, 4));
        assert_eq!(rational_order(false).sign(&q), Sign::Pos);
        assert_eq!(rational_order(true).sign(&q), Sign::Neg);
        let a = RationalGroup::dyadic(2);
        let s = a.multiply(&a.parse("1/2").unwrap(), &a.parse("1/4").unwrap());
        assert_eq!(rational_order(false).sign(&s), Sign::Pos);
        assert!(check_order_axioms(&a, &rational_order(false), 3).is_clean());
    }

    #[test]
    fn direct_sum_top_coordinate() {
        let g = DirectSumElement::from_entries([(1, 100), (3, -1)]);
        assert_eq!(DirectSumOrder::default().sign(&g), Sign::Neg);
        assert!(check_order_axioms(&DirectSum::new(3), &DirectSumOrder::default(), 3).is_clean());
    }
}
