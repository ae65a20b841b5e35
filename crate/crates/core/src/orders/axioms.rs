use super::{Sign, SignOracle};
use crate::group::{ball, Group};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation<E> {
    /// `sign(g⁻¹) ≠ −sign(g)`.
    Antisymmetry { g: E },
    /// `f, g > e` but `fg < e` (fg in the ball).
    Closure { f: E, g: E },
    /// `sign(f⁻¹g) ≠ sign((hf)⁻¹(hg))`.
    LeftInvariance { f: E, g: E, h: E },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<E> {
    pub radius: usize,
    pub checked: usize,
    pub violations: Vec<AxiomViolation<E>>,
}

impl<E> AxiomReport<E> {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks inversion antisymmetry and closure of the positive cone on ball(r).
pub fn check_order_axioms<G: Group, O: SignOracle<G> + ?Sized>(
    group: &G,
    order: &O,
    r: usize,
) -> AxiomReport<G::Elem> {
    let b = ball(group, r);
    let index: HashMap<&G::Elem, usize> = b.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let signs: Vec<Option<Sign>> = b
        .iter()
        .map(|g| (!group.is_identity(g)).then(|| order.sign(g)))
        .collect();
    let mut violations = Vec::new();
    let mut checked = 0;
    for (i, g) in b.iter().enumerate().skip(1) {
        let inv = group.invert(g);
        checked += 1;
        let si = match index.get(&inv) {
            Some(&j) => signs[j].expect("non-identity"),
            None => order.sign(&inv),
        };
        if si == signs[i].expect("non-identity") {
            violations.push(AxiomViolation::Antisymmetry { g: g.clone() });
        }
    }
    let positive: Vec<usize> = (1..b.len()).filter(|&i| signs[i] == Some(Sign::Pos)).collect();
    for &i in &positive {
        for &j in &positive {
            let fg = group.multiply(&b[i], &b[j]);
            if let Some(&k) = index.get(&fg) {
                checked += 1;
                if signs[k] != Some(Sign::Pos) {
                    violations.push(AxiomViolation::Closure {
                        f: b[i].clone(),
                        g: b[j].clone(),
                    });
                }
            }
        }
    }
    AxiomReport {
        radius: r,
        checked,
        violations,
    }
}

/// Checks `sign(f⁻¹g) = sign((hf)⁻¹(hg))` for f, g, h in ball(r) whenever both
/// quotients lie in ball(r).
pub fn check_left_invariance<G: Group, O: SignOracle<G> + ?Sized>(
    group: &G,
    order: &O,
    r: usize,
) -> AxiomReport<G::Elem> {
    let b = ball(group, r);
    let index: HashMap<&G::Elem, usize> = b.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut violations = Vec::new();
    let mut checked = 0;
    for f in &b {
        for g in &b {
            if f == g {
                continue;
            }
            let q = group.quotient(f, g);
            if !index.contains_key(&q) {
                continue;
            }
            let s = order.sign(&q);
            for h in &b {
                let q2 = group.quotient(&group.multiply(h, f), &group.multiply(h, g));
                if !index.contains_key(&q2) {
                    continue;
                }
                checked += 1;
                if order.sign(&q2) != s {
                    violations.push(AxiomViolation::LeftInvariance {
                        f: f.clone(),
                        g: g.clone(),
                        h: h.clone(),
                    });
                }
            }
        }
    }
    AxiomReport {
        radius: r,
        checked,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{DirectSum, DirectSumElement};
    use crate::orders::{DirectSumOrder, FnOracle};

    #[test]
    fn natural_integers_are_clean() {
        let z = DirectSum::new(1);
        let rep = check_order_axioms(&z, &DirectSumOrder::default(), 5);
        assert!(rep.is_clean());
        assert!(check_left_invariance(&z, &DirectSumOrder::default(), 3).is_clean());
    }

    #[test]
    fn constant_assignment_fails_antisymmetry() {
        let z = DirectSum::new(1);
        let all_pos = FnOracle::new("const", |_: &DirectSumElement| Sign::Pos);
        let rep = check_order_axioms(&z, &all_pos, 5);
        assert_eq!(
            rep.violations[0],
            AxiomViolation::Antisymmetry {
                g: DirectSumElement::unit(1)
            }
        );
    }

    #[test]
    fn broken_closure_is_caught() {
        let z = DirectSum::new(1);
        // positive exactly on {1, -2, -3, ...} minus nothing: antisymmetric but not closed
        let odd = FnOracle::new("odd", |g: &DirectSumElement| {
            let v = g.get(1);
            Sign::of(if v.abs() == 1 { v > 0 } else { v < 0 })
        });
        let rep = check_order_axioms(&z, &odd, 3);
        assert!(rep
            .violations
            .iter()
            .any(|v| matches!(v, AxiomViolation::Closure { .. })));
    }
}
