use super::{Generator, Group};
use std::collections::HashSet;

/// Breadth-first ball of radius `r` over the group's default symmetric
/// generating set. Elements appear in shortlex order of their first word,
/// starting with e, without duplicates.
pub fn ball<G: Group>(group: &G, r: usize) -> Vec<G::Elem> {
    ball_with_generators(group, &group.ball_generators(), r)
}

/// As [`ball`] with an explicit generator order (the shortlex tie-break).
pub fn ball_with_generators<G: Group>(
    group: &G,
    gens: &[Generator<G::Elem>],
    r: usize,
) -> Vec<G::Elem> {
    bfs(group, gens, Some(r), usize::MAX)
}

/// The first `n` elements of the breadth-first enumeration.
pub fn first_n<G: Group>(group: &G, n: usize) -> Vec<G::Elem> {
    first_n_with_generators(group, &group.ball_generators(), n)
}

pub fn first_n_with_generators<G: Group>(
    group: &G,
    gens: &[Generator<G::Elem>],
    n: usize,
) -> Vec<G::Elem> {
    bfs(group, gens, None, n)
}

fn bfs<G: Group>(
    group: &G,
    gens: &[Generator<G::Elem>],
    radius: Option<usize>,
    limit: usize,
) -> Vec<G::Elem> {
    let e = group.identity();
    let mut seen: HashSet<G::Elem> = HashSet::from([e.clone()]);
    let mut out = vec![e];
    let mut layer_start = 0;
    let mut depth = 0;
    while out.len() < limit && radius.map_or(true, |r| depth < r) {
        let layer_end = out.len();
        if layer_start == layer_end {
            break;
        }
        for i in layer_start..layer_end {
            for s in gens {
                let g = group.multiply(&out[i], &s.element);
                if seen.insert(g.clone()) {
                    out.push(g);
                    if out.len() >= limit {
                        return out;
                    }
                }
            }
        }
        layer_start = layer_end;
        depth += 1;
    }
    out
}
