use parhecke::heckegeo::*;
use parhecke::projective::{moebius_through, slope_at, MoebiusMap, P1};
use parhecke::sampling::RationalSampler;
use parhecke::{q, Rational};

fn example() -> HeckeInput {
    HeckeInput::new(q(4, 1), q(5, 1), q(2, 1), q(3, 1)).unwrap()
}

#[test]
fn iota_at_two_three() {
    let cfg = PencilConfig::new(q(2, 1), q(3, 1)).unwrap();
    let r = iota_map(&cfg).unwrap();
    assert_eq!(r.alpha, q(1, 1));
    assert_eq!(r.beta, q(-4, 1));
    assert_eq!(r.gamma, q(3, 1));
    assert_eq!(r.v[0], P1::Finite(q(1, 4)));
    assert_eq!(r.v[1], P1::Finite(q(1, 2)));
    assert_eq!(r.v[2], P1::int(0));
    assert_eq!(r.v[3], P1::Infinity);
    assert_eq!(r.v[4], P1::int(1));
    assert_eq!(r.images[3], P1::int(2));
    assert_eq!(r.images[4], P1::int(3));
}

#[test]
fn iota_closed_form_parameters() {
    let mut rng = RationalSampler::new(9);
    for _ in 0..100 {
        let (l4, l5) = (rng.rational(), rng.rational());
        let Ok(cfg) = PencilConfig::new(l4.clone(), l5.clone()) else {
            continue;
        };
        let r = iota_map(&cfg).unwrap();
        let one = Rational::one();
        assert_eq!(r.beta, &l4 * (&one - &l5));
        assert_eq!(r.gamma, &l5 * (&l4 - &one));
        assert_eq!(r.v[0], P1::Finite((&l4 - &l5) / (&l4 * (&one - &l5))));
        assert_eq!(r.v[1], P1::Finite((&l5 - &l4) / (&l5 - &one)));
    }
}

#[test]
fn degenerate_pencils_rejected() {
    assert!(PencilConfig::new(q(2, 1), q(2, 1)).is_err());
    assert!(PencilConfig::new(q(1, 1), q(2, 1)).is_err());
    assert!(PencilConfig::new(q(0, 1), q(2, 1)).is_err());
}

#[test]
fn one_one_examples() {
    let d = |a: i64, b: i64| (P1::int(a), P1::int(b));
    let id = one_one_through(&[d(0, 0), d(1, 1), (P1::Infinity, P1::Infinity)]).unwrap();
    assert_eq!(id, MoebiusMap::identity());
    let two = one_one_through(&[d(0, 0), d(1, 2), (P1::Infinity, P1::Infinity)]).unwrap();
    assert_eq!(two, MoebiusMap::new(q(2, 1), q(0, 1), q(0, 1), q(1, 1)).unwrap());
    assert!(one_one_through(&[d(0, 0), d(0, 2), d(3, 3)]).is_err());
}

#[test]
fn slope_examples() {
    let inv = MoebiusMap::new(q(0, 1), q(1, 1), q(1, 1), q(0, 1)).unwrap();
    assert_eq!(slope_at(&inv, &q(2, 1)).unwrap(), q(-1, 4));
    assert!(slope_at(&inv, &q(0, 1)).is_err());
    // (z - 1)/(z - x) at 0 has derivative (1 - x)/x^2
    let x = q(3, 1);
    let m = MoebiusMap::new(q(1, 1), q(-1, 1), q(1, 1), -x.clone()).unwrap();
    assert_eq!(slope_at(&m, &q(0, 1)).unwrap(), (Rational::one() - &x) / (&x * &x));
}

#[test]
fn anchors_at_example() {
    let a = hecke_anchor_values(&example()).unwrap();
    assert_eq!(a.h0, q(15, 8));
    assert_eq!(a.h1, q(3, 2));
    assert_eq!(a.hinf, q(3, 4));
    assert_eq!(a, closed_form_anchors(&example()).unwrap());
}

#[test]
fn line_map_interpolates_anchors() {
    let m = hecke_line_map(&example()).unwrap();
    assert_eq!(m.apply(&P1::int(1)), P1::Finite(q(3, 2)));
    assert_eq!(m.apply(&P1::int(0)), P1::Finite(q(15, 8)));
    assert_eq!(m.apply(&P1::Infinity), P1::Finite(q(3, 4)));
}

#[test]
fn fourth_point_from_t_curves() {
    let x = example();
    let m = hecke_line_map(&x).unwrap();
    assert_eq!(t_pencil_anchor(&x, 4).unwrap(), m.apply(&P1::Finite(x.p4.clone())));
    assert_eq!(t_pencil_anchor(&x, 5).unwrap(), m.apply(&P1::Finite(x.p5.clone())));
}

#[test]
fn hecke_line_slope_matches_map() {
    let x = example();
    let m = hecke_line_map(&x).unwrap();
    for p in [q(7, 3), q(-2, 1), q(11, 5)] {
        let p = P1::Finite(p);
        assert_eq!(hecke_line_slope(&x, &p).unwrap(), m.apply(&p));
    }
}

#[test]
fn hecke_line_singular_at_x() {
    let x = example();
    let polys = hecke_parametrization(&x, &P1::Finite(q(7, 3))).unwrap();
    assert_eq!(singular_point_of_22(&polys).unwrap(), (x.f4.clone(), x.f5.clone()));
}

#[test]
fn singular_point_examples() {
    let z = Rational::zero;
    let o = Rational::one;
    let sq = [z(), z(), o()];
    let one = [o(), z(), z()];
    assert!(singular_point_of_22(&[sq.clone(), one.clone(), sq.clone(), one.clone()]).is_err());
    // f -> (f^2, f^2 + f): the four coefficient columns have a 1-dim kernel with c = 0
    let lin = [z(), o(), o()];
    let r = singular_point_of_22(&[sq, one.clone(), lin, one]);
    assert!(r.is_err());
}

#[test]
fn moebius_through_consistent() {
    let src = [P1::int(0), P1::int(1), P1::Infinity];
    let dst = [P1::int(2), P1::int(5), P1::int(-1)];
    let m = moebius_through(&src, &dst).unwrap();
    for (s, d) in src.iter().zip(&dst) {
        assert_eq!(&m.apply(s), d);
    }
}
