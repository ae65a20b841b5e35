use super::config::{cyclic_sign_of_positions, CircularOrder};
use super::CircularError;
use crate::group::{B3Element, Psl2zElement, B3};
use crate::orders::{compare, SignOracle};
use std::cmp::Ordering;

/// Steps allowed when sliding a coset representative into [e, T).
const REPRESENTATIVE_SEARCH_CAP: i64 = 10_000;

/// q∗λ: the circular order on PSL(2,ℤ) obtained by wrapping the fundamental
/// domain [e, T) of a left order λ on B₃ onto the circle, where T is t or
/// t⁻¹, whichever is positive.
pub struct QStar<O> {
    order: O,
    period: B3Element,
}

impl<O: SignOracle<B3>> QStar<O> {
    pub fn new(order: O) -> Self {
        let t = B3Element::t();
        let period = if order.sign(&t).is_pos() { t } else { t.inv() };
        QStar { order, period }
    }

    fn le(&self, x: &B3Element, y: &B3Element) -> bool {
        compare(&B3, &self.order, x, y) != Ordering::Greater
    }

    /// The unique g with q(g) = ḡ and e ≤ g < T.
    pub fn representative(&self, g: &Psl2zElement) -> Result<B3Element, CircularError> {
        let e = B3Element::identity();
        let (p, pinv) = (&self.period, self.period.inv());
        let mut x = B3Element::section(g);
        let mut steps = 0;
        while !self.le(&e, &x) {
            x = p.mul(&x);
            steps += 1;
            if steps > REPRESENTATIVE_SEARCH_CAP {
                return Err(CircularError::RepresentativeSearch(g.to_string()));
            }
        }
        while !(compare(&B3, &self.order, &x, p) == Ordering::Less) {
            x = pinv.mul(&x);
            steps += 1;
            if steps > REPRESENTATIVE_SEARCH_CAP {
                return Err(CircularError::RepresentativeSearch(g.to_string()));
            }
        }
        if !self.le(&e, &x) {
            return Err(CircularError::RepresentativeSearch(g.to_string()));
        }
        Ok(x)
    }

    pub fn try_cyclic_sign(
        &self,
        a: &Psl2zElement,
        b: &Psl2zElement,
        c: &Psl2zElement,
    ) -> Result<i8, CircularError> {
        if a == b || b == c || a == c {
            return Ok(0);
        }
        let reps = [self.representative(a)?, self.representative(b)?, self.representative(c)?];
        let rank = |i: usize| {
            (0..3)
                .filter(|&j| compare(&B3, &self.order, &reps[j], &reps[i]) == Ordering::Less)
                .count()
        };
        Ok(cyclic_sign_of_positions(&rank(0), &rank(1), &rank(2)))
    }
}

impl<O: SignOracle<B3>> CircularOrder for QStar<O> {
    fn label(&self) -> String {
        format!("q-star-{}", self.order.label())
    }

    fn cyclic_sign(&self, a: &Psl2zElement, b: &Psl2zElement, c: &Psl2zElement) -> i8 {
        self.try_cyclic_sign(a, b, c)
            .expect("representatives exist for a t-cofinal order")
    }
}

/// q∗λ(a, b, c).
pub fn q_star_sign<O: SignOracle<B3>>(
    order: O,
    a: &Psl2zElement,
    b: &Psl2zElement,
    c: &Psl2zElement,
) -> Result<i8, CircularError> {
    QStar::new(order).try_cyclic_sign(a, b, c)
}
