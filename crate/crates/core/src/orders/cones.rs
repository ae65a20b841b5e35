use super::{OrderError, Sign, SignOracle};
use crate::group::{ball, Group};
use std::collections::{HashMap, HashSet};

/// Largest number of non-identity ball elements the cone search accepts.
pub const DEFAULT_BALL_BUDGET: usize = 2000;

/// A sign assignment on ball(r)∖{e}, listed in ball order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCone<E> {
    pub radius: usize,
    pub assignment: Vec<(E, Sign)>,
    /// Antisymmetric and closed under products that stay in the ball.
    pub closed: bool,
}

impl<E: PartialEq> PartialCone<E> {
    pub fn sign_of(&self, g: &E) -> Option<Sign> {
        self.assignment.iter().find(|(h, _)| h == g).map(|(_, s)| *s)
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.assignment.iter().map(|(_, s)| *s).collect()
    }
}

/// Literal `2·var + neg`: "the element is positive".
type Lit = usize;

fn negate(l: Lit) -> Lit {
    l ^ 1
}

/// Exhaustive search for closed antisymmetric sign assignments on a ball,
/// by backtracking with unit propagation over the clauses
/// ¬P(f) ∨ ¬P(g) ∨ P(fg).
pub struct ConeSearch<'g, G: Group> {
    group: &'g G,
    radius: usize,
    ball: Vec<G::Elem>,
    /// Literal for "ball[i] is positive", i ≥ 1.
    lit_of: Vec<Lit>,
    vars: usize,
    clauses: Vec<Vec<Lit>>,
    occurs: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    trail: Vec<usize>,
}

impl<'g, G: Group> ConeSearch<'g, G> {
    pub fn new(group: &'g G, radius: usize, budget: usize) -> Result<Self, OrderError> {
        let b = ball(group, radius);
        if b.len() - 1 > budget {
            return Err(OrderError::BudgetExceeded {
                size: b.len() - 1,
                budget,
            });
        }
        let index: HashMap<&G::Elem, usize> = b.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut lit_of = vec![usize::MAX; b.len()];
        let mut vars = 0;
        let mut involutions = Vec::new();
        for i in 1..b.len() {
            let j = index[&group.invert(&b[i])];
            if j < i {
                lit_of[i] = negate(lit_of[j]);
            } else {
                if j == i {
                    involutions.push(i);
                }
                lit_of[i] = 2 * vars;
                vars += 1;
            }
        }
        // an involution can be neither positive nor negative
        let mut clauses: Vec<Vec<Lit>> = Vec::new();
        for &i in &involutions {
            clauses.push(vec![lit_of[i]]);
            clauses.push(vec![negate(lit_of[i])]);
        }
        let mut seen = HashSet::new();
        for i in 1..b.len() {
            for j in 1..b.len() {
                let Some(&k) = index.get(&group.multiply(&b[i], &b[j])) else {
                    continue;
                };
                if k == 0 {
                    continue;
                }
                let mut c = vec![negate(lit_of[i]), negate(lit_of[j]), lit_of[k]];
                c.sort_unstable();
                c.dedup();
                if c.windows(2).any(|w| w[0] == negate(w[1]) && w[0] / 2 == w[1] / 2) {
                    continue;
                }
                if seen.insert(c.clone()) {
                    clauses.push(c);
                }
            }
        }
        let mut occurs = vec![Vec::new(); 2 * vars];
        for (ci, c) in clauses.iter().enumerate() {
            for &l in c {
                occurs[l].push(ci);
            }
        }
        drop(index);
        Ok(ConeSearch {
            group,
            radius,
            ball: b,
            lit_of,
            vars,
            clauses,
            occurs,
            value: vec![None; vars],
            trail: Vec::new(),
        })
    }

    pub fn ball(&self) -> &[G::Elem] {
        &self.ball
    }

    fn lit_value(&self, l: Lit) -> Option<bool> {
        self.value[l / 2].map(|v| v == (l % 2 == 0))
    }

    /// Makes `l` true and propagates. Returns false on conflict.
    fn assign(&mut self, l: Lit) -> bool {
        match self.lit_value(l) {
            Some(v) => return v,
            None => {
                self.value[l / 2] = Some(l % 2 == 0);
                self.trail.push(l / 2);
            }
        }
        let mut queue = vec![l];
        while let Some(t) = queue.pop() {
            let f = negate(t);
            for idx in 0..self.occurs[f].len() {
                let ci = self.occurs[f][idx];
                let mut unassigned = None;
                let mut n_unassigned = 0;
                let mut satisfied = false;
                for &x in &self.clauses[ci] {
                    match self.lit_value(x) {
                        Some(true) => {
                            satisfied = true;
                            break;
                        }
                        Some(false) => {}
                        None => {
                            n_unassigned += 1;
                            unassigned = Some(x);
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match (n_unassigned, unassigned) {
                    (0, _) => return false,
                    (1, Some(u)) => {
                        self.value[u / 2] = Some(u % 2 == 0);
                        self.trail.push(u / 2);
                        queue.push(u);
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail entry");
            self.value[v] = None;
        }
    }

    fn units_hold(&mut self) -> bool {
        let units: Vec<Lit> = self
            .clauses
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect();
        units.into_iter().all(|u| self.assign(u))
    }

    /// Visits every closed antisymmetric assignment positive on `required`,
    /// in deterministic order (ball order, `+` tried first). The visitor gets
    /// the sign of ball[i] at index i−1.
    pub fn run(
        &mut self,
        required: &[G::Elem],
        mut visit: impl FnMut(&[Sign]),
    ) -> Result<(), OrderError> {
        let index: HashMap<&G::Elem, usize> = self.ball.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut req = Vec::new();
        for g in required {
            match index.get(g) {
                Some(&i) if i > 0 => req.push(self.lit_of[i]),
                _ => return Err(OrderError::RequiredNotInBall(self.group.format(g))),
            }
        }
        self.undo(0);
        if self.units_hold() && req.iter().all(|&l| self.assign(l)) {
            self.dfs(0, &mut visit);
        }
        self.undo(0);
        Ok(())
    }

    fn dfs(&mut self, from: usize, visit: &mut impl FnMut(&[Sign])) {
        let Some(v) = (from..self.vars).find(|&v| self.value[v].is_none()) else {
            let signs: Vec<Sign> = (1..self.ball.len())
                .map(|i| Sign::of(self.lit_value(self.lit_of[i]) == Some(true)))
                .collect();
            visit(&signs);
            return;
        };
        for choice in [2 * v, 2 * v + 1] {
            let mark = self.trail.len();
            if self.assign(choice) {
                self.dfs(v + 1, visit);
            }
            self.undo(mark);
        }
    }

    fn cone(&self, signs: &[Sign]) -> PartialCone<G::Elem> {
        PartialCone {
            radius: self.radius,
            assignment: self.ball[1..].iter().cloned().zip(signs.iter().copied()).collect(),
            closed: true,
        }
    }
}

/// All closed antisymmetric sign assignments on ball(r)∖{e} that are
/// positive on `required`.
pub fn enumerate_partial_cones<G: Group>(
    group: &G,
    r: usize,
    required: &[G::Elem],
    budget: usize,
) -> Result<Vec<PartialCone<G::Elem>>, OrderError> {
    let mut search = ConeSearch::new(group, r, budget)?;
    let mut found = Vec::new();
    search.run(required, |s| found.push(s.to_vec()))?;
    Ok(found.iter().map(|s| search.cone(s)).collect())
}

/// The restriction of an order to ball(r)∖{e}.
pub fn restriction<G: Group, O: SignOracle<G> + ?Sized>(
    group: &G,
    order: &O,
    r: usize,
) -> PartialCone<G::Elem> {
    let b = ball(group, r);
    let index: HashMap<&G::Elem, usize> = b.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let assignment: Vec<(G::Elem, Sign)> = b[1..].iter().map(|g| (g.clone(), order.sign(g))).collect();
    let sign = |i: usize| assignment[i - 1].1;
    let mut closed = true;
    'outer: for i in 1..b.len() {
        if sign(index[&group.invert(&b[i])]) == sign(i) {
            closed = false;
            break;
        }
        if !sign(i).is_pos() {
            continue;
        }
        for j in 1..b.len() {
            if let Some(&k) = index.get(&group.multiply(&b[i], &b[j])) {
                if sign(j).is_pos() && k > 0 && !sign(k).is_pos() {
                    closed = false;
                    break 'outer;
                }
            }
        }
    }
    PartialCone {
        radius: r,
        assignment,
        closed,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolationReport {
    pub radius: usize,
    pub survivor_count: usize,
    /// Every survivor equals the order's restriction.
    pub all_agree_with_order: bool,
    /// The order's restriction is among the survivors.
    pub order_survives: bool,
}

/// Counts the partial cones on ball(r) containing `s` and compares them
/// with the restriction of `order`.
pub fn isolation_evidence<G: Group, O: SignOracle<G> + ?Sized>(
    group: &G,
    order: &O,
    s: &[G::Elem],
    r: usize,
    budget: usize,
) -> Result<IsolationReport, OrderError> {
    for g in s {
        if group.is_identity(g) || !order.sign(g).is_pos() {
            return Err(OrderError::RequiredNotPositive(group.format(g)));
        }
    }
    let mut search = ConeSearch::new(group, r, budget)?;
    let target: Vec<Sign> = search.ball()[1..].iter().map(|g| order.sign(g)).collect();
    let mut count = 0;
    let mut agree = true;
    let mut survives = false;
    search.run(s, |signs| {
        count += 1;
        if signs == target.as_slice() {
            survives = true;
        } else {
            agree = false;
        }
    })?;
    Ok(IsolationReport {
        radius: r,
        survivor_count: count,
        all_agree_with_order: agree && count > 0,
        order_survives: survives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{DirectSum, DirectSumElement, Psl2z, TararinGroup, TararinSpec, B3, B3Element};
    use crate::orders::{tararin_orders, DdOrder, DirectSumOrder};
    use std::collections::BTreeSet;

    #[test]
    fn integers_have_two_cones() {
        let z = DirectSum::new(1);
        let cones = enumerate_partial_cones(&z, 3, &[], 100).unwrap();
        assert_eq!(cones.len(), 2);
        assert_eq!(cones[0].sign_of(&DirectSumElement::unit(1)), Some(Sign::Pos));
        let rep = isolation_evidence(&z, &DirectSumOrder::default(), &[DirectSumElement::unit(1)], 4, 100).unwrap();
        assert_eq!(rep.survivor_count, 1);
        assert!(rep.all_agree_with_order);
    }

    #[test]
    fn torsion_admits_no_cone() {
        assert!(enumerate_partial_cones(&Psl2z, 2, &[], 100).unwrap().is_empty());
    }

    #[test]
    fn klein_patterns() {
        let g = TararinGroup::new(TararinSpec::klein()).unwrap();
        let cones = enumerate_partial_cones(&g, 2, &[], 100).unwrap();
        let patterns: BTreeSet<(Sign, Sign)> = cones
            .iter()
            .map(|c| (c.sign_of(&g.s(0)).unwrap(), c.sign_of(&g.s(1)).unwrap()))
            .collect();
        assert_eq!(patterns.len(), 4);
        for o in tararin_orders(g.spec()).unwrap() {
            let r = restriction(&g, &o, 2);
            assert!(r.closed);
            assert!(cones.contains(&r));
        }
    }

    #[test]
    fn lambda3_survives_with_required_generators() {
        let s = [B3Element::y1(), B3Element::y2()];
        let cones = enumerate_partial_cones(&B3, 4, &s, 1000).unwrap();
        assert!(cones.contains(&restriction(&B3, &DdOrder, 4)));
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            enumerate_partial_cones(&B3, 4, &[], 10).unwrap_err(),
            OrderError::BudgetExceeded { size: 78, budget: 10 }
        );
        let z = DirectSum::new(1);
        let far = DirectSumElement::from_entries([(1, 9)]);
        assert!(matches!(
            enumerate_partial_cones(&z, 2, &[far], 100),
            Err(OrderError::RequiredNotInBall(_))
        ));
    }
}
