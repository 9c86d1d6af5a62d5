//! Property tests over the suite models.

use std::sync::OnceLock;

use proptest::prelude::*;
use weylwalk::boundary::{drift, invert_drift, psi_eval, BoundaryPoint, CentralMeasure};
use weylwalk::paths::{in_chamber, pitman_chain, root_operator, Direction, GraphKind, PLPath};
use weylwalk::polytope::in_unit_box_delta;
use weylwalk::rational::{fmt_q, parse_q};
use weylwalk::verify::SUITE;
use weylwalk::{Caps, Model, Q, Weight};

fn models() -> &'static [Model] {
    static MODELS: OnceLock<Vec<Model>> = OnceLock::new();
    MODELS.get_or_init(|| SUITE.iter().map(|(t, d)| Model::new(t.parse().unwrap(), d, Caps::default()).unwrap()).collect())
}

fn model_index() -> impl Strategy<Value = usize> {
    0..SUITE.len()
}

/// `t` coordinates, with exact 0 and 1 appearing often.
fn t_coord() -> impl Strategy<Value = f64> {
    prop_oneof![1 => Just(0.0), 1 => Just(1.0), 4 => 0.01f64..0.99]
}

fn canonical_point(m: &Model, t: Vec<f64>, w: usize) -> Option<BoundaryPoint> {
    if !in_unit_box_delta(&m.datum, &m.delta, &t) {
        return None;
    }
    BoundaryPoint::canonical(m, t, w % m.datum.weyl_order()).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_action_preserves_the_form(k in model_index(), w in 0usize..12, a in prop::collection::vec(-4i64..5, 2), b in prop::collection::vec(-4i64..5, 2)) {
        let m = &models()[k];
        let d = m.rank();
        let (x, y) = (Weight::new(&a[..d]), Weight::new(&b[..d]));
        let e = m.datum.element(w % m.datum.weyl_order());
        prop_assert_eq!(m.datum.inner(&e.apply(&x), &e.apply(&y)), m.datum.inner(&x, &y));
        let inv = m.datum.element(m.datum.inverse(e.index));
        prop_assert_eq!(inv.apply(&e.apply(&x)), x);
        let (dom, g) = m.datum.dominant_representative(&x);
        prop_assert!(dom.is_dominant());
        prop_assert_eq!(g.apply(&x), dom);
    }

    #[test]
    fn root_operators_are_partial_inverses(k in model_index(), letters in prop::collection::vec(0usize..8, 1..4), i in 0usize..2) {
        let m = &models()[k];
        let i = i % m.rank();
        let path = letters.iter().fold(PLPath::empty(m.rank()), |p, &l| p.concat(&m.crystal.letters[l % m.crystal.len()].path));
        if let Some(q) = root_operator(&m.datum, &path, i, Direction::F) {
            prop_assert_eq!(root_operator(&m.datum, &q, i, Direction::E), Some(path.clone()));
            let shift = path.endpoint() - q.endpoint();
            prop_assert_eq!(shift, m.datum.simple_root(i).to_rat());
        }
        if let Some(q) = root_operator(&m.datum, &path, i, Direction::E) {
            prop_assert_eq!(root_operator(&m.datum, &q, i, Direction::F), Some(path));
        }
    }

    #[test]
    fn pitman_chain_lands_in_the_chamber(k in model_index(), letters in prop::collection::vec(0usize..8, 1..5)) {
        let m = &models()[k];
        let path = letters.iter().fold(PLPath::empty(m.rank()), |p, &l| p.concat(&m.crystal.letters[l % m.crystal.len()].path));
        let out = pitman_chain(&m.datum, &path);
        prop_assert!(in_chamber(&out, &Weight::zero(m.rank())));
        prop_assert_eq!(out.length(), path.length());
    }

    #[test]
    fn inversion_recovers_canonical_points(k in model_index(), t in prop::collection::vec(t_coord(), 2), w in 0usize..12) {
        let m = &models()[k];
        let Some(p) = canonical_point(m, t[..m.rank()].to_vec(), w) else { return Ok(()) };
        let q = invert_drift(m, &p.drift).unwrap();
        prop_assert_eq!(q.w, p.w);
        for (a, b) in q.t.iter().zip(&p.t) {
            prop_assert!((a - b).abs() < 1e-8, "{:?} vs {:?}", q.t, p.t);
        }
    }

    #[test]
    fn drift_round_trip_on_interior_points(k in model_index(), raw in prop::collection::vec(0.01f64..1.0, 12)) {
        let m = &models()[k];
        let orbit = m.datum.orbit(&m.delta);
        let total: f64 = raw[..orbit.len()].iter().sum();
        let mut x = vec![0.0; m.rank()];
        for (v, c) in orbit.iter().zip(&raw) {
            for (xi, vi) in x.iter_mut().zip(v.coords()) {
                *xi += c / total * *vi as f64;
            }
        }
        let p = invert_drift(m, &x).unwrap();
        let back = drift(m, &p.t, p.w);
        for (a, b) in back.iter().zip(&x) {
            prop_assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn ones_match_walls_for_positive_t(k in model_index(), t in prop::collection::vec(prop_oneof![1 => Just(1.0), 3 => 0.01f64..0.99], 2), w in 0usize..12) {
        let m = &models()[k];
        let Some(p) = canonical_point(m, t[..m.rank()].to_vec(), w) else { return Ok(()) };
        let y = m.datum.element(p.w).apply_f64(&p.drift);
        for i in 0..m.rank() {
            prop_assert_eq!(p.t[i] == 1.0, y[i].abs() < 1e-10);
        }
    }

    #[test]
    fn kernels_are_stochastic(k in model_index(), t in prop::collection::vec(t_coord(), 2), a in prop::collection::vec(0i64..6, 2)) {
        let m = &models()[k];
        let d = m.rank();
        let Some(p) = canonical_point(m, t[..d].to_vec(), 0) else { return Ok(()) };
        let lambda = Weight::new(&a[..d]);
        for kind in [GraphKind::Free, GraphKind::Chamber] {
            let mu = CentralMeasure::at(m, kind, p.clone()).unwrap();
            let total: f64 = mu.kernel_row(&lambda).unwrap().iter().map(|r| r.1).sum();
            prop_assert!((total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn psi_is_a_probability(k in model_index(), t in prop::collection::vec(t_coord(), 2), w in 0usize..12, n in 0usize..4) {
        let m = &models()[k];
        let Some(p) = canonical_point(m, t[..m.rank()].to_vec(), w) else { return Ok(()) };
        let g = m.graph(GraphKind::Free, n).unwrap();
        for l in g.vertices(n) {
            let v = psi_eval(m, &p, l, n).unwrap();
            prop_assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn rationals_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let x = Q::new(p, q);
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }
}
