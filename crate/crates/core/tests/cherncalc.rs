use parhecke::cherncalc::*;
use parhecke::lines16::intersection_matrix;
use parhecke::sampling::RationalSampler;
use parhecke::{q, QVector, Rational};

fn sigma() -> QVector {
    QVector::constant(16, Rational::one())
}

fn s(c: Rational) -> QVector {
    sigma().scale(&c)
}

#[test]
fn surface_products() {
    let es = SurfaceClass::y_divisor(&sigma(), &QVector::zeros(16));
    let gs = SurfaceClass::y_divisor(&QVector::zeros(16), &sigma());
    assert_eq!(mult_surface(&es, &es).unwrap().pt, q(-16, 1));
    assert_eq!(mult_surface(&gs, &es).unwrap().pt, q(96, 1));
    let one = SurfaceClass::one(Surface::Y);
    assert_eq!(mult_surface(&one, &gs).unwrap(), gs);
    assert!(mult_surface(&one, &SurfaceClass::one(Surface::X)).is_err());
}

#[test]
fn todd_classes() {
    let ty = todd_y();
    assert_eq!(ty.rank, q(1, 1));
    assert!(ty.pt.is_zero());
    let tx = todd_x_inv();
    assert_eq!(tx.rank, q(1, 1));
    assert_eq!(tx.divisor, s(q(-1, 8)));
}

#[test]
fn pushforward_generators() {
    let pushed = pushforward_f(&SurfaceClass::one(Surface::Y)).unwrap();
    assert_eq!(pushed.rank, q(4, 1));
    let mut e = QVector::zeros(16);
    e[3] = q(1, 1);
    let pe = pushforward_f(&SurfaceClass::y_divisor(&e, &QVector::zeros(16))).unwrap();
    assert_eq!(pe.divisor, e);
    let pg = pushforward_f(&SurfaceClass::y_divisor(&QVector::zeros(16), &e)).unwrap();
    assert_eq!(pg.divisor, e.scale(&q(2, 1)));
    assert!(pushforward_f(&SurfaceClass::one(Surface::X)).is_err());
}

#[test]
fn ch_f_examples() {
    let z = QVector::zeros(16);
    let f = ch_f(&s(q(5, 8)), &s(q(1, 8)), &z);
    assert_eq!(f.rank, q(4, 1));
    assert_eq!(f.divisor, s(q(-1, 1)));
    assert_eq!(f.pt, q(4, 1));
    assert_eq!(ch_f(&z, &z, &z), f);
}

#[test]
fn ch_m_is_exponential() {
    let mut rng = RationalSampler::with_bound(5, 40);
    for _ in 0..30 {
        let (e, d, t) = (rng.vector(16), rng.vector(16), rng.vector(16));
        assert_eq!(ch_m(&e, &d, &t), ch_m_exp(&e, &d, &t));
    }
}

#[test]
fn grr_pipeline_matches_boxed() {
    let mut rng = RationalSampler::with_bound(6, 40);
    for _ in 0..100 {
        let (e, d, t) = (rng.vector(16), rng.vector(16), rng.vector(16));
        let boxed = ch_f(&e, &d, &t);
        let grr = ch_f_grr(&e, &d, &t);
        assert!(boxed.same_class(&grr));
        assert_eq!(boxed, grr);
    }
}

#[test]
fn moments_closed_form_vs_piecewise() {
    use Atom::*;
    let mut rng = RationalSampler::with_bound(7, 60);
    for _ in 0..200 {
        let (e, d) = (rng.rational(), rng.rational());
        assert_eq!(cube_moment(Moment::One, &e, &d), interval_integral(&[One], &e, &d));
        assert_eq!(cube_moment(Moment::T, &e, &d), interval_integral(&[T], &e, &d));
        assert_eq!(cube_moment(Moment::T2, &e, &d), interval_integral(&[T, T], &e, &d));
        assert_eq!(cube_moment(Moment::Floor, &e, &d), interval_integral(&[FloorE], &e, &d));
        assert_eq!(
            cube_moment(Moment::Floor2, &e, &d),
            interval_integral(&[FloorE, FloorE], &e, &d)
        );
        assert_eq!(
            cube_moment(Moment::FloorT, &e, &d),
            interval_integral(&[FloorE, T], &e, &d)
        );
        assert_eq!(cube_moment(Moment::Floor, &e, &d), &e - &d);
        assert!(interval_integral(&[FloorD], &e, &d).is_zero());
    }
}

#[test]
fn moments_match_fine_riemann_sums() {
    // Midpoint sums on a grid containing the breakpoint are exact for
    // piecewise constants and linears; t^2 picks up h^2/12 per unit length.
    let e = q(7, 3);
    let d = q(1, 5);
    let n = 600i64;
    let h = q(1, n);
    let mut sums = [Rational::zero(), Rational::zero(), Rational::zero()];
    for k in 0..n {
        let mid = -&d + &h * (Rational::int(k) + q(1, 2));
        let fl = (&mid + &e).floor();
        sums[0] += &fl * &h;
        sums[1] += &fl * &mid * &h;
        sums[2] += &mid * &mid * &h;
    }
    assert_eq!(sums[0], cube_moment(Moment::Floor, &e, &d));
    assert_eq!(sums[1], cube_moment(Moment::FloorT, &e, &d));
    assert_eq!(&sums[2] + &(&h * &h / q(12, 1)), cube_moment(Moment::T2, &e, &d));
}

#[test]
fn t_it_over_unit_cube() {
    assert_eq!(integral_t_it(&QVector::zeros(16)), q(44, 3));
}

#[test]
fn cube_floor_and_t() {
    let mut rng = RationalSampler::new(8);
    for _ in 0..100 {
        let (e, d) = (rng.vector(16), rng.vector(16));
        let (fe, t) = integral_floor_and_t(&e, &d);
        assert_eq!(fe, &e - &d);
        assert_eq!(t, &s(q(1, 2)) - &d);
    }
}

#[test]
fn closed_form_integrals() {
    let mut rng = RationalSampler::with_bound(9, 100);
    assert_eq!(eq_tit(&QVector::zeros(16)), q(88, 3));
    for _ in 0..100 {
        let (e, d) = (rng.vector(16), rng.vector(16));
        let [tit, a2, ams] = cube_integrals(&e, &d);
        assert_eq!(tit, eq_tit(&d));
        assert_eq!(a2, eq_a2(&e, &d));
        assert_eq!(ams, eq_aminussigma(&e, &d));
    }
}

#[test]
fn parch_at_base_point() {
    let p = parch(&s(q(5, 8)), &s(q(1, 8)));
    assert_eq!(p.parch0, q(4, 1));
    assert!(p.parch1.is_zero());
    assert!(p.parch2.is_zero());
    assert!(p.is_target());
}

#[test]
fn parch_matches_unsimplified_quadratic() {
    let mut rng = RationalSampler::with_bound(10, 50);
    for _ in 0..50 {
        let (e, d) = (rng.vector(16), rng.vector(16));
        let p = parch(&e, &d);
        assert_eq!(p.parch2, parch2_unsimplified(&e, &d));
        let v = &(&e + &d.scale(&q(3, 1))) - &sigma();
        assert_eq!(p.parch1, v);
    }
}

#[test]
fn parch_condition_examples() {
    let z = QVector::zeros(16);
    let c = parch_conditions(&s(q(5, 8)), &s(q(1, 8)));
    assert!(c.linear && c.quadratic && c.forms_agree);
    let c = parch_conditions(&z, &z);
    assert!(!c.linear && !c.quadratic);
    let c = parch_conditions(&sigma(), &z);
    assert!(c.linear && !c.quadratic);
    assert_eq!(parch2_simplified(&sigma(), &z), q(-4, 1));
}

#[test]
fn integer_shift_changes_only_parch1_and_parch2() {
    let e = s(q(5, 8));
    let d = s(q(1, 8));
    let shifted = parch(&s(q(13, 8)), &d);
    let base = parch(&e, &d);
    assert_eq!(shifted.parch0, base.parch0);
    assert_eq!(shifted.parch1, &base.parch1 + &sigma());
    assert_eq!(shifted.parch2, q(-40, 1));
}

#[test]
fn spectral_condition() {
    let t = QVector::constant(5, q(3, 10));
    assert!(spectral_parch_ok(&t, &t));
    let z = QVector::zeros(5);
    assert!(!spectral_parch_ok(&z, &z));
    assert!(spectral_parch_ok(&QVector::from_ints(&[1, 1, 1, 0, 0]), &z));
    let _ = intersection_matrix();
}
