use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use ordkit_core::circular::{
    build_rep, circular_sign, cocycle_check, first_generation, guardian_intervals, k_fold_lift,
    lift_eval, orbit_config, pi_star, pi_star_sign, ping_pong_verify, q_star_sign,
    reconstruct_by_generations, rotation_number, BoundaryPoint, CircularError, CircularOrder,
    CoverOrbitOrder, IntervalOnCircle, LiftConvention, LiftPos, MoebiusMap, OrbitOrder, PiStar,
    RepKind, Representation, DEFAULT_GUARDIAN_RADIUS, DEFORMATION_CANDIDATES,
};
use ordkit_core::group::{ball, B3Element, Group, Psl2z, Psl2zElement, Syllable, B3};
use ordkit_core::orders::{DdOrder, Sign};
use proptest::prelude::*;

type Mat = [BigRational; 4];

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn mul(x: &Mat, y: &Mat) -> Mat {
    [
        &x[0] * &y[0] + &x[1] * &y[2],
        &x[0] * &y[1] + &x[1] * &y[3],
        &x[2] * &y[0] + &x[3] * &y[2],
        &x[2] * &y[1] + &x[3] * &y[3],
    ]
}

fn inv(x: &Mat) -> Mat {
    [x[3].clone(), -x[1].clone(), -x[2].clone(), x[0].clone()]
}

fn is_scalar(x: &Mat) -> bool {
    x[1].is_zero() && x[2].is_zero() && x[0] == x[3]
}

/// Rational points with `None` for ∞.
fn apply(m: &Mat, z: &Option<BigRational>) -> Option<BigRational> {
    let (num, den) = match z {
        None => (m[0].clone(), m[2].clone()),
        Some(z) => (&m[0] * z + &m[1], &m[2] * z + &m[3]),
    };
    (!den.is_zero()).then(|| num / den)
}

/// α and the deformed β, computed directly as H·β·H⁻¹.
fn oracle_generators(c: BigRational, d: BigRational) -> (Mat, Mat) {
    let alpha = [q(0, 1), q(-1, 1), q(1, 1), q(0, 1)];
    let beta = [q(1, 1), q(1, 1), q(-1, 1), q(0, 1)];
    let h = [c.clone(), d.clone(), d, c];
    let det = &h[0] * &h[3] - &h[1] * &h[2];
    let h_inv: Mat = inv(&h).map(|x| x / &det);
    (alpha, mul(&mul(&h, &beta), &h_inv))
}

fn oracle_matrix(g: &Psl2zElement, gens: &(Mat, Mat)) -> Mat {
    let id = [q(1, 1), q(0, 1), q(0, 1), q(1, 1)];
    g.tail.iter().fold(id, |acc, s| match s {
        Syllable::Alpha => mul(&acc, &gens.0),
        Syllable::Beta => mul(&acc, &gens.1),
        Syllable::Beta2 => mul(&mul(&acc, &gens.1), &gens.1),
    })
}

/// Angle of a boundary point under z ↦ (z − i)/(z + i), shifted so that 0
/// sits at angle 0 and increasing reals turn counterclockwise.
fn angle(z: &Option<BigRational>) -> f64 {
    use num_traits::ToPrimitive;
    match z {
        None => std::f64::consts::PI,
        Some(x) => (2.0 * x.to_f64().unwrap().atan()).rem_euclid(2.0 * std::f64::consts::PI),
    }
}

fn angle_sign(a: f64, b: f64, c: f64) -> i8 {
    if a == b || b == c || a == c {
        return 0;
    }
    let tau = 2.0 * std::f64::consts::PI;
    let (db, dc) = ((b - a).rem_euclid(tau), (c - a).rem_euclid(tau));
    if db < dc {
        1
    } else {
        -1
    }
}

fn to_point(z: &Option<BigRational>) -> BoundaryPoint {
    match z {
        None => BoundaryPoint::Infinity,
        Some(x) => BoundaryPoint::Finite(x.clone()),
    }
}

fn el(w: &str) -> Psl2zElement {
    Psl2z.parse(w).unwrap()
}

#[test]
fn circular_sign_examples() {
    let (zero, one, inf) = (BoundaryPoint::zero(), BoundaryPoint::int(1), BoundaryPoint::Infinity);
    assert_eq!(circular_sign(&zero, &one, &inf), 1);
    assert_eq!(circular_sign(&zero, &zero, &one), 0);
    assert_eq!(circular_sign(&one, &zero, &inf), -1);
}

#[test]
fn modular_generators() {
    let rep = Representation::modular();
    assert_eq!(rep.alpha.apply(&BoundaryPoint::zero()), BoundaryPoint::Infinity);
    assert_eq!(rep.beta.apply(&BoundaryPoint::Infinity), BoundaryPoint::int(-1));
}

#[test]
fn deformed_beta_matches_direct_conjugation() {
    let rep = Representation::deformed();
    let beta = MoebiusMap::from_ints(55, 49, -49, -39).unwrap();
    assert_eq!(rep.beta, beta);
    assert_eq!(beta.det(), BigInt::from(256));
    assert_eq!(beta.trace() * beta.trace(), beta.det());
    let (_, oracle) = oracle_generators(q(5, 4), q(-3, 4));
    let scale = &oracle[0] / q(55, 1);
    let expected = [55, 49, -49, -39].map(|x| q(x, 1) * &scale);
    assert_eq!(oracle, expected);
}

#[test]
fn invalid_deformations_are_rejected() {
    for (c, d) in [((1, 1), (-1, 2)), ((5, 4), (3, 4)), ((5, 4), (-3, 0))] {
        assert!(matches!(build_rep(RepKind::deformed(c, d)), Err(CircularError::InvalidDeformation(_))));
    }
}

#[test]
fn modular_orbit_is_not_free() {
    let rep = Representation::modular();
    let err = orbit_config(&rep, &ball(&Psl2z, 2), &BoundaryPoint::zero()).unwrap_err();
    assert!(matches!(err, CircularError::NotFree { .. }));
}

#[test]
fn consecutive_points_around_the_base() {
    let rep = Representation::deformed();
    let cfg = orbit_config(&rep, &ball(&Psl2z, 2), &BoundaryPoint::zero()).unwrap();
    let order = cfg.elements();
    let n = order.len();
    let e = cfg.position(&Psl2zElement::identity()).unwrap();
    assert_eq!(order[(e + n - 1) % n], el("be2.al"));
    assert_eq!(order[(e + 1) % n], el("al.be"));
}

#[test]
fn first_generation_order_against_direct_evaluation() {
    let gens = oracle_generators(q(5, 4), q(-3, 4));
    let mut points: Vec<(f64, Psl2zElement, Option<BigRational>)> = first_generation()
        .into_iter()
        .map(|g| {
            let z = apply(&oracle_matrix(&g, &gens), &Some(q(0, 1)));
            (angle(&z), g, z)
        })
        .collect();
    points.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let rep = Representation::deformed();
    let cfg = orbit_config(&rep, &first_generation(), &BoundaryPoint::zero()).unwrap();
    let oracle: Vec<Psl2zElement> = points.iter().map(|p| p.1.clone()).collect();
    assert_eq!(cfg.elements(), oracle);
    for (entry, p) in cfg.entries.iter().zip(&points) {
        assert_eq!(entry.point, to_point(&p.2));
    }
    let frozen = [
        ("e", Some((0, 1))),
        ("al.be", Some((39, 49))),
        ("al.be.al", Some((49, 55))),
        ("al.be2", Some((55, 49))),
        ("al.be2.al", Some((49, 39))),
        ("al", None),
        ("be", Some((-49, 39))),
        ("be.al", Some((-55, 49))),
        ("be2", Some((-49, 55))),
        ("be2.al", Some((-39, 49))),
    ];
    for (entry, (w, p)) in cfg.entries.iter().zip(frozen) {
        assert_eq!(entry.element, el(w));
        assert_eq!(entry.point, to_point(&p.map(|(n, d)| q(n, d))));
    }
}

#[test]
fn orbit_config_agrees_with_the_oracle_on_ball_4() {
    let gens = oracle_generators(q(5, 4), q(-3, 4));
    let rep = Representation::deformed();
    let b = ball(&Psl2z, 4);
    let cfg = orbit_config(&rep, &b, &BoundaryPoint::zero()).unwrap();
    let mut oracle: Vec<(f64, Psl2zElement)> = b
        .iter()
        .map(|g| (angle(&apply(&oracle_matrix(g, &gens), &Some(q(0, 1)))), g.clone()))
        .collect();
    oracle.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    assert_eq!(cfg.elements(), oracle.into_iter().map(|p| p.1).collect::<Vec<_>>());
}

#[test]
fn cocycle_holds_and_catches_a_flip() {
    let rep = Representation::deformed();
    let c = OrbitOrder { rep: &rep };
    let sample = ball(&Psl2z, 2);
    assert!(cocycle_check(&Psl2z, |a, b, d| c.cyclic_sign(a, b, d), &sample, false).is_clean());
    let (x, y, z) = (sample[1].clone(), sample[2].clone(), sample[3].clone());
    let flipped = |a: &Psl2zElement, b: &Psl2zElement, d: &Psl2zElement| {
        let s = c.cyclic_sign(a, b, d);
        if (a, b, d) == (&x, &y, &z) {
            -s
        } else {
            s
        }
    };
    assert!(!cocycle_check(&Psl2z, flipped, &sample, false).is_clean());
}

#[test]
fn orbit_order_is_left_invariant_on_ball_3() {
    let rep = Representation::deformed();
    let c = OrbitOrder { rep: &rep };
    let sample = ball(&Psl2z, 3);
    let report = cocycle_check(&Psl2z, |a, b, d| c.cyclic_sign(a, b, d), &sample, true);
    assert!(report.is_clean());
}

#[test]
fn other_deformations_give_the_same_order() {
    let b = ball(&Psl2z, 5);
    let base = orbit_config(&Representation::deformed(), &b, &BoundaryPoint::zero()).unwrap();
    for (c, d) in &DEFORMATION_CANDIDATES[1..2] {
        let rep = build_rep(RepKind::deformed(*c, *d)).unwrap();
        let other = orbit_config(&rep, &b, &BoundaryPoint::zero()).unwrap();
        assert_eq!(other.elements(), base.elements());
    }
}

#[test]
fn ping_pong_examples() {
    let rep = Representation::deformed();
    let data = guardian_intervals(&rep).unwrap();
    assert!(ping_pong_verify(&rep, &data, DEFAULT_GUARDIAN_RADIUS).unwrap().passed);
    let modular = Representation::modular();
    assert!(!ping_pong_verify(&modular, &data, 4).map(|r| r.passed).unwrap_or(false));
    let mut swapped = data.clone();
    let j = &mut swapped.plus[0].interval;
    std::mem::swap(&mut j.left, &mut j.right);
    assert!(matches!(
        ping_pong_verify(&rep, &swapped, 4),
        Err(CircularError::DegenerateInterval(_))
    ));
    assert!(IntervalOnCircle::new(BoundaryPoint::int(1), BoundaryPoint::int(1)).is_err());
}

#[test]
fn gamma_words_are_never_trivial() {
    let gens = oracle_generators(q(5, 4), q(-3, 4));
    let rep = Representation::deformed();
    let data = guardian_intervals(&rep).unwrap();
    let g: Vec<Mat> = data.gammas.iter().map(|g| oracle_matrix(g, &gens)).collect();
    let letters = [g[0].clone(), inv(&g[0]), g[1].clone(), inv(&g[1])];
    let mut frontier: Vec<(Mat, usize)> = (0..4).map(|i| (letters[i].clone(), i)).collect();
    let mut count = 0;
    for _ in 0..7 {
        let mut next = Vec::new();
        for (m, last) in &frontier {
            assert!(!is_scalar(m));
            count += 1;
            for (i, l) in letters.iter().enumerate() {
                if i != (last ^ 1) {
                    next.push((mul(m, l), i));
                }
            }
        }
        frontier = next;
    }
    assert_eq!(count, 4 * (3i32.pow(7) - 1) / 2);
}

#[test]
fn generations() {
    let rep = Representation::deformed();
    let data = guardian_intervals(&rep).unwrap();
    let first = orbit_config(&rep, &first_generation(), &BoundaryPoint::zero()).unwrap();
    let depth = |d| reconstruct_by_generations(&rep, &first, &data, d).unwrap();
    assert_eq!(depth(0).elements(), first.elements());
    let (d1, d2, d3) = (depth(1), depth(2), depth(3));
    assert_eq!(d2.restrict(&d1.elements()), d1);
    let direct = orbit_config(&rep, &d3.elements(), &BoundaryPoint::zero()).unwrap();
    assert_eq!(d3, direct);
}

#[test]
fn lift_examples() {
    let rep = Representation::deformed();
    let conv = LiftConvention::Normalized;
    let t = lift_eval(&rep, conv, &B3Element::t()).unwrap();
    assert_eq!(t.winding, 1);
    assert_eq!(t.point, BoundaryPoint::zero());
    let a = lift_eval(&rep, conv, &B3Element::a()).unwrap();
    assert_eq!(a.winding, 0);
    assert_ne!(a.point, BoundaryPoint::zero());
    let g = B3.parse("a.b.B.T.a.b").unwrap();
    let x0 = lift_eval(&rep, conv, &B3.multiply(&g, &B3.invert(&g))).unwrap();
    assert_eq!((x0.winding, x0.point), (0, BoundaryPoint::zero()));
}

#[test]
fn pi_star_examples() {
    let rep = Representation::deformed();
    let conv = LiftConvention::Normalized;
    assert_eq!(pi_star_sign(&rep, conv, &B3Element::t()).unwrap(), Sign::Pos);
    assert_eq!(pi_star_sign(&rep, conv, &B3Element::b().inv()).unwrap(), Sign::Neg);
    assert!(pi_star_sign(&rep, conv, &B3.identity()).is_err());
    let five = k_fold_lift(&rep, 5).unwrap();
    let order = PiStar::new(CoverOrbitOrder { rep: &five }, conv).unwrap();
    let g = B3.parse("a.b.a.b.a.b.a.b.a.b.T.T.T.T").unwrap();
    assert_eq!(order.try_sign(&g).unwrap(), Sign::Neg);
}

#[test]
fn orientation_of_c1_is_positive() {
    let rep = Representation::deformed();
    let pi = pi_star(&rep, LiftConvention::Raw).unwrap();
    assert_eq!(pi.raw_orientation(), 1);
    let c = OrbitOrder { rep: &rep };
    assert_eq!(c.cyclic_sign(&Psl2zElement::identity(), &Psl2zElement::beta(), &el("be2")), 1);
}

#[test]
fn lift_respects_composition_on_ball_3() {
    let rep = Representation::deformed();
    let pi = pi_star(&rep, LiftConvention::Normalized).unwrap();
    let b = ball(&B3, 3);
    for g in &b {
        let lg = pi.lift(g);
        for h in &b {
            assert_eq!(pi.apply(h, &lg), pi.lift(&B3.multiply(h, g)));
        }
    }
    assert_eq!(pi.lift(&B3.identity()), LiftPos::base());
}

#[test]
fn q_star_examples() {
    let (e, a, b) = (Psl2zElement::identity(), Psl2zElement::alpha(), Psl2zElement::beta());
    assert_eq!(q_star_sign(DdOrder, &e, &a, &b).unwrap(), 1);
    assert_eq!(q_star_sign(DdOrder, &a, &a, &b).unwrap(), 0);
    let rep = Representation::deformed();
    let c1 = OrbitOrder { rep: &rep };
    let round = PiStar::new(&c1, LiftConvention::Normalized).unwrap();
    let bb = ball(&Psl2z, 3);
    for x in &bb {
        for y in &bb {
            for z in &bb {
                let via = ordkit_core::circular::QStar::new(&round).try_cyclic_sign(x, y, z).unwrap();
                assert_eq!(via, c1.cyclic_sign(x, y, z));
            }
        }
    }
}

#[test]
fn k_fold_lift_examples() {
    let rep = Representation::deformed();
    assert_eq!(k_fold_lift(&rep, 6), Err(CircularError::NoLift { k: 6 }));
    let one = k_fold_lift(&rep, 1).unwrap();
    for g in ball(&Psl2z, 3) {
        let p = one.point(&g);
        assert_eq!((p.point, p.sheet), (rep.point(&g), 0));
    }
    for k in [5, 7, 11] {
        assert!(k_fold_lift(&rep, k).is_ok());
    }
}

#[test]
fn rotation_examples() {
    let rep = Representation::deformed();
    let ab = el("al.be");
    for (k, expected) in [(5u32, Rational64::new(1, 5)), (7, Rational64::new(6, 7))] {
        let lift = k_fold_lift(&rep, k).unwrap();
        assert_eq!(rotation_number(&lift, &ab, 0, 2 * k).unwrap().rot, expected);
        assert!(rotation_number(&lift, &Psl2zElement::identity(), 0, 1).unwrap().rot.is_zero());
    }
}

#[test]
fn deck_turn_shifts_the_translation_number() {
    let rep = Representation::deformed();
    for k in [5u32, 7] {
        let lift = k_fold_lift(&rep, k).unwrap();
        for w in ["al.be", "be2.al", "al"] {
            let g = el(w);
            let base = rotation_number(&lift, &g, 0, 2 * k).unwrap();
            let turned = rotation_number(&lift, &g, 1, 2 * k).unwrap();
            assert_eq!(turned.translation, base.translation + Rational64::one());
            assert_eq!(turned.rot, base.rot);
        }
    }
}

fn boundary_point() -> impl Strategy<Value = Option<BigRational>> {
    prop_oneof![
        1 => Just(None),
        12 => (-40i64..40, 1i64..12).prop_map(|(n, d)| Some(q(n, d))),
    ]
}

proptest! {
    #[test]
    fn circular_sign_matches_angles(a in boundary_point(), b in boundary_point(), c in boundary_point()) {
        let s = circular_sign(&to_point(&a), &to_point(&b), &to_point(&c));
        prop_assert_eq!(s, angle_sign(angle(&a), angle(&b), angle(&c)));
    }

    #[test]
    fn deformed_action_matches_direct_matrices(
        w in prop::collection::vec(prop::sample::select(vec![Syllable::Alpha, Syllable::Beta, Syllable::Beta2]), 0..8),
        z in boundary_point(),
    ) {
        let gens = oracle_generators(q(5, 4), q(-3, 4));
        let g = Psl2zElement::from_syllables(&w);
        let rep = Representation::deformed();
        prop_assert_eq!(rep.act(&g, &to_point(&z)), to_point(&apply(&oracle_matrix(&g, &gens), &z)));
    }

    #[test]
    fn moebius_apply_is_a_left_action(
        u in prop::collection::vec(prop::sample::select(vec![Syllable::Alpha, Syllable::Beta]), 0..6),
        v in prop::collection::vec(prop::sample::select(vec![Syllable::Alpha, Syllable::Beta]), 0..6),
        z in boundary_point(),
    ) {
        let rep = Representation::deformed();
        let (g, h) = (Psl2zElement::from_syllables(&u), Psl2zElement::from_syllables(&v));
        let z = to_point(&z);
        prop_assert_eq!(rep.act(&g.mul(&h), &z), rep.act(&g, &rep.act(&h, &z)));
        prop_assert!(!rep.eval(&g).det().is_negative());
    }
}
