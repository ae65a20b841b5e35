use super::dyadic::DyadicRational;
use super::RealizationError;
use crate::group::{Group, GroupId};
use crate::orders::{compare, SignOracle};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationEntry<E> {
    pub element: E,
    pub value: DyadicRational,
}

/// The embedding ι of an enumerated part of an ordered group into the line.
#[derive(Debug, Clone)]
pub struct Realization<E> {
    pub group: GroupId,
    pub order: String,
    pub x0: DyadicRational,
    entries: Vec<RealizationEntry<E>>,
    index: HashMap<E, usize>,
    sorted: Vec<usize>,
}

impl<E: Clone + Eq + Hash> Realization<E> {
    /// Entries in enumeration order.
    pub fn entries(&self) -> &[RealizationEntry<E>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self, g: &E) -> Option<&DyadicRational> {
        self.index.get(g).map(|&i| &self.entries[i].value)
    }

    pub fn contains(&self, g: &E) -> bool {
        self.index.contains_key(g)
    }

    /// Entries sorted by value.
    pub fn sorted(&self) -> impl Iterator<Item = &RealizationEntry<E>> + '_ {
        self.sorted.iter().map(|&i| &self.entries[i])
    }

    /// The smallest and largest values.
    pub fn hull(&self) -> (&DyadicRational, &DyadicRational) {
        let first = self.sorted.first().expect("nonempty");
        let last = self.sorted.last().expect("nonempty");
        (&self.entries[*first].value, &self.entries[*last].value)
    }
}

/// Places the enumerated elements one at a time: below the minimum by −1,
/// above the maximum by +1, otherwise at the midpoint of the neighbours.
pub fn build_realization<G, O>(
    group: &G,
    order: &O,
    enumeration: &[G::Elem],
    x0: DyadicRational,
) -> Result<Realization<G::Elem>, RealizationError>
where
    G: Group,
    O: SignOracle<G> + ?Sized,
{
    let Some(first) = enumeration.first() else {
        return Err(RealizationError::EmptyEnumeration);
    };
    if !group.is_identity(first) {
        return Err(RealizationError::NotStartingWithIdentity(group.format(first)));
    }
    let mut r = Realization {
        group: group.id(),
        order: order.label(),
        x0: x0.clone(),
        entries: Vec::with_capacity(enumeration.len()),
        index: HashMap::with_capacity(enumeration.len()),
        sorted: Vec::with_capacity(enumeration.len()),
    };
    let push = |r: &mut Realization<G::Elem>, g: &G::Elem, value: DyadicRational, at: usize| {
        r.index.insert(g.clone(), r.entries.len());
        r.sorted.insert(at, r.entries.len());
        r.entries.push(RealizationEntry {
            element: g.clone(),
            value,
        });
    };
    push(&mut r, first, x0, 0);
    for g in &enumeration[1..] {
        if r.index.contains_key(g) {
            return Err(RealizationError::Duplicate(group.format(g)));
        }
        let cmp = |i: usize| compare(group, order, &r.entries[i].element, g);
        let at = r.sorted.partition_point(|&i| cmp(i) == Ordering::Less);
        let check = |i: usize, expect: Ordering| {
            let h = &r.entries[i].element;
            let forward = compare(group, order, h, g);
            let backward = compare(group, order, g, h);
            if forward != expect || backward != expect.reverse() {
                return Err(RealizationError::Inconsistent {
                    first: group.format(h),
                    second: group.format(g),
                });
            }
            Ok(())
        };
        let value = match (at.checked_sub(1).map(|p| r.sorted[p]), r.sorted.get(at).copied()) {
            (None, Some(hi)) => {
                check(hi, Ordering::Greater)?;
                &r.entries[hi].value - &DyadicRational::integer(1)
            }
            (Some(lo), None) => {
                check(lo, Ordering::Less)?;
                &r.entries[lo].value + &DyadicRational::integer(1)
            }
            (Some(lo), Some(hi)) => {
                check(lo, Ordering::Less)?;
                check(hi, Ordering::Greater)?;
                r.entries[lo].value.midpoint(&r.entries[hi].value)
            }
            (None, None) => unreachable!("the identity is placed first"),
        };
        push(&mut r, g, value, at);
    }
    Ok(r)
}

/// Pairs (i, j) of entries, i before j in enumeration, on which the order
/// and the values disagree. Every pair is checked.
pub fn order_embedding_violations<G, O>(
    group: &G,
    order: &O,
    r: &Realization<G::Elem>,
) -> Vec<(usize, usize)>
where
    G: Group + Sync,
    G::Elem: Sync,
    O: SignOracle<G> + Sync + ?Sized,
{
    let n = r.len();
    let threads = std::thread::available_parallelism().map_or(1, |p| p.get()).min(n.max(1));
    let entries = r.entries();
    let check_row = |i: usize| -> Vec<(usize, usize)> {
        (i + 1..n)
            .filter(|&j| {
                let by_order = compare(group, order, &entries[i].element, &entries[j].element);
                by_order != entries[i].value.cmp(&entries[j].value)
            })
            .map(|j| (i, j))
            .collect()
    };
    let mut out: Vec<(usize, usize)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let check_row = &check_row;
                s.spawn(move || {
                    (t..n).step_by(threads).flat_map(check_row).collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{first_n, DirectSum};
    use crate::orders::{DdOrder, DirectSumOrder, FnOracle, Sign};
    use crate::group::B3;

    fn z() -> DirectSum {
        DirectSum::new(1)
    }

    fn values<E: Clone + Eq + Hash>(r: &Realization<E>) -> Vec<String> {
        r.entries().iter().map(|e| e.value.to_string()).collect()
    }

    #[test]
    fn integer_examples() {
        let g = z();
        let enumeration = ["e", "e1", "e1^-1", "e1^2"].map(|w| g.parse(w).unwrap());
        let r = build_realization(&g, &DirectSumOrder::default(), &enumeration, DyadicRational::zero()).unwrap();
        assert_eq!(values(&r), ["0", "1", "-1", "2"]);
        let enumeration = ["e", "e1^2", "e1"].map(|w| g.parse(w).unwrap());
        let r = build_realization(&g, &DirectSumOrder::default(), &enumeration, DyadicRational::zero()).unwrap();
        assert_eq!(values(&r), ["0", "1", "1/2^1"]);
    }

    #[test]
    fn base_point_is_x0() {
        let g = z();
        let x0 = DyadicRational::new(3, 2);
        let r = build_realization(&g, &DirectSumOrder::default(), &first_n(&g, 5), x0.clone()).unwrap();
        assert_eq!(r.entries()[0].value, x0);
    }

    #[test]
    fn errors() {
        let g = z();
        let ord = DirectSumOrder::default();
        assert_eq!(
            build_realization(&g, &ord, &[], DyadicRational::zero()).unwrap_err(),
            RealizationError::EmptyEnumeration
        );
        let e1 = g.parse("e1").unwrap();
        assert!(matches!(
            build_realization(&g, &ord, &[e1.clone()], DyadicRational::zero()),
            Err(RealizationError::NotStartingWithIdentity(_))
        ));
        let id = g.identity();
        assert!(matches!(
            build_realization(&g, &ord, &[id.clone(), e1.clone(), e1], DyadicRational::zero()),
            Err(RealizationError::Duplicate(_))
        ));
        // every nontrivial element positive: not antisymmetric
        let bad = FnOracle::new("all-positive", |_: &crate::group::DirectSumElement| Sign::Pos);
        assert!(matches!(
            build_realization(&g, &bad, &first_n(&g, 4), DyadicRational::zero()),
            Err(RealizationError::Inconsistent { .. })
        ));
    }

    #[test]
    fn b3_embedding_is_exact() {
        let r = build_realization(&B3, &DdOrder, &first_n(&B3, 300), DyadicRational::zero()).unwrap();
        assert!(order_embedding_violations(&B3, &DdOrder, &r).is_empty());
    }
}
