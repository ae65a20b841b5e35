use super::config::{CircularConfig, ConfigEntry};
use super::moebius::MoebiusMap;
use super::pingpong::{ping_pong_verify, PingPongData, DEFAULT_GUARDIAN_RADIUS};
use super::rep::Representation;
use super::CircularError;
use crate::group::{Group, Psl2z, Psl2zElement};

struct Move<'a> {
    element: Psl2zElement,
    map: MoebiusMap,
    source: &'a [Psl2zElement; 2],
    target: &'a [Psl2zElement; 2],
}

/// Rebuilds the cyclic order of the orbit generation by generation.
///
/// Each of γ₁^±1, γ₂^±1 sends the points outside its source block, read
/// counterclockwise from the right guardian to the left guardian, onto the
/// slot between the guardians of its target block, in the same order. No
/// point comparisons are made; the points are only carried along.
pub fn reconstruct_by_generations(
    rep: &Representation,
    first_gen: &CircularConfig,
    data: &PingPongData,
    depth: usize,
) -> Result<CircularConfig, CircularError> {
    let report = ping_pong_verify(rep, data, DEFAULT_GUARDIAN_RADIUS)?;
    if !report.passed {
        return Err(CircularError::PingPongPrecondition(format!("{:?}", report.witness)));
    }
    let e = Psl2zElement::identity();
    for g in data.intervals().iter().flat_map(|j| j.guardians.iter()).chain([&e]) {
        if first_gen.position(g).is_none() {
            return Err(CircularError::PingPongPrecondition(format!(
                "{g} missing from the first generation"
            )));
        }
    }
    let moves: Vec<Move> = (0..2)
        .flat_map(|i| {
            let m = rep.eval(&data.gammas[i]);
            let minus = &data.minus[i].guardians;
            let plus = &data.plus[i].guardians;
            [
                Move {
                    element: data.gammas[i].clone(),
                    map: m.clone(),
                    source: minus,
                    target: plus,
                },
                Move {
                    element: Psl2z.invert(&data.gammas[i]),
                    map: m.inverse(),
                    source: plus,
                    target: minus,
                },
            ]
        })
        .collect();

    let start = first_gen.position(&e).expect("checked");
    let n = first_gen.len();
    let mut current: Vec<ConfigEntry> = (0..n)
        .map(|k| first_gen.entries[(start + k) % n].clone())
        .collect();
    for _ in 0..depth {
        let index = |g: &Psl2zElement| current.iter().position(|x| &x.element == g).expect("guardian");
        let slots: Vec<Vec<ConfigEntry>> = moves
            .iter()
            .map(|m| {
                let (from, to) = (index(&m.source[1]), index(&m.source[0]));
                let len = current.len();
                let count = (to + len - from - 1) % len;
                (1..=count)
                    .map(|k| {
                        let x = &current[(from + k) % len];
                        ConfigEntry {
                            element: Psl2z.multiply(&m.element, &x.element),
                            point: m.map.apply(&x.point),
                        }
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        let mut skipping = false;
        for x in &current {
            if let Some(i) = moves.iter().position(|m| m.target[0] == x.element) {
                next.push(x.clone());
                next.extend(slots[i].iter().cloned());
                skipping = true;
            } else if moves.iter().any(|m| m.target[1] == x.element) {
                next.push(x.clone());
                skipping = false;
            } else if !skipping {
                next.push(x.clone());
            }
        }
        current = next;
    }
    Ok(CircularConfig {
        orientation: first_gen.orientation.clone(),
        entries: current,
    })
}
