use parhecke::divcalc::*;
use parhecke::lines16::{intersection_matrix, LineLabel};
use parhecke::solver::{pipeline, PipelineChoices};
use parhecke::{q, QMatrix, QVector, Rational};

fn lbl(e: &[u8]) -> LineLabel {
    LineLabel::from_elems(e).unwrap()
}

#[test]
fn pullbacks_are_sums_of_two_generators() {
    let l = lbl(&[1, 2]);
    let p = pullback_p(l);
    assert_eq!(p.0.iter().filter(|x| !x.is_zero()).count(), 2);
    assert_eq!(p.lp()[l.index()], Rational::one());
    assert_eq!(p.llc()[l.index()], Rational::one());
    let qq = pullback_q_line(l);
    assert_eq!(qq.lq()[l.index()], Rational::one());
    assert_eq!(qq.llc()[l.index()], Rational::one());
    let pt = pullback_q_point(3);
    assert_eq!(pt.r1()[2], Rational::one());
    assert_eq!(pt.r2()[2], Rational::one());
}

// Pulling back a curve class from X and pairing on H is the pairing on X:
// L_I x pt against p^*L_J is L_I . L_J.
#[test]
fn curve_rows_pair_pullbacks_like_the_surface() {
    let t = curve_table();
    let ii = intersection_matrix();
    for (r, li) in LineLabel::all().iter().enumerate() {
        for (c, lj) in LineLabel::all().iter().enumerate() {
            let pj = pullback_p(*lj);
            assert_eq!(t.row(r).dot(&pj.0), *ii.get(r, c), "{li} {lj}");
            let qj = pullback_q_line(*lj);
            assert_eq!(t.row(16 + r).dot(&qj.0), *ii.get(r, c));
        }
        // a point curve meets q^*(X x p_i) once
        for i in 1..=5 {
            assert_eq!(t.row(r).dot(&pullback_q_point(i).0), Rational::one());
            assert_eq!(t.row(16 + r).dot(&pullback_q_point(i).0), Rational::one());
        }
    }
}

#[test]
fn curve_table_shape_and_rank() {
    let t = curve_table();
    assert_eq!((t.nrows(), t.ncols()), (49, 58));
    assert_eq!(t.rank(), 29);
    let td = curve_table_with_delta();
    assert_eq!((td.nrows(), td.ncols()), (49, 59));
    assert_eq!(td.get(32, 0), &q(-1, 1));
}

#[test]
fn delta_hat_solves_and_is_unique_numerically() {
    let s = solve_delta_hat();
    assert!(s.solutions.consistent);
    assert!(s.closed_form_solves);
    assert!(s.unique_numerical_class);
    assert_eq!(s.rank, 29);
    assert_eq!(s.solutions.kernel.len(), 58 - 29);
    // the particular solution differs from the closed form by a kernel class
    let diff = &s.solutions.particular - &delta_hat_class().0;
    assert!(curve_table().mul_vec(&diff).is_zero());
}

#[test]
fn omega_q_matches_expected() {
    assert_eq!(omega_q_class(), omega_q_expected());
}

#[test]
fn pullback_table_shapes() {
    assert_eq!((g_star().nrows(), g_star().ncols()), (165, 58));
    assert_eq!((gz_star().nrows(), gz_star().ncols()), (165, 64));
    assert_eq!(p_tilde_star().ncols(), 32);
    assert_eq!(q_tilde_star().ncols(), 37);
    // every M_{I,i} is hit by exactly one Lp column with weight 2
    let g = g_star();
    for idx in 69..165 {
        let from_lp: Vec<Rational> = (0..16)
            .map(|r| g.get(idx, r).clone())
            .filter(|x| !x.is_zero())
            .collect();
        let i = (idx - 69) % 6 + 1;
        if i <= 5 {
            assert_eq!(from_lp, vec![q(2, 1)]);
        } else {
            assert!(from_lp.is_empty());
        }
    }
}

#[test]
fn g_factors_through_z_on_lp_and_llc() {
    assert!(g_factors_through_z());
}

#[test]
fn boxed_abh_equals_g_star_omega() {
    assert_eq!(gz_pullback_abh(), g_star_omega_q());
}

#[test]
fn derived_abh_differs_on_exceptionals_only() {
    let a = abh_audit();
    assert!(a.g_factors);
    assert!(a.boxed_equals_g_omega);
    assert!(!a.boxed_equals_derived);
    for r in 0..16 {
        assert!(a.residual[ht::s(r)].is_zero());
        assert!(a.residual[ht::ec(r)].is_zero());
        assert!(a.residual[ht::gc(r)].is_zero());
        assert_eq!(a.residual[ht::n(r)], q(1, 2));
        for i in 1..=5 {
            assert_eq!(a.residual[ht::m(r, i)], Rational::one());
        }
        assert!(a.residual[ht::m(r, 6)].is_zero());
    }
    let d = derived_abh();
    assert_eq!(d[ht::n(0)], q(7, 8));
    assert_eq!(d[ht::m(0, 1)], q(8, 5));
}

#[test]
fn relations_are_independent() {
    let rel = relation_differences();
    assert_eq!(rel.len(), 34);
    assert_eq!(QMatrix::from_columns(&rel).unwrap().rank(), 34);
}

#[test]
fn quotient_detects_single_generators() {
    // one EC_I alone is nonzero in the quotient
    let v = PicYCClass(QVector::unit(PIC_YC, yc::ec(3)));
    assert!(!quotient_is_zero(&v));
    // Yp_2 - Yp_5 is a relation
    let w = PicYCClass(&QVector::unit(PIC_YC, yc::yp(2)) - &QVector::unit(PIC_YC, yc::yp(5)));
    assert!(quotient_is_zero(&w));
}

#[test]
fn alternatives_classify() {
    let z = QVector::zeros(16);
    let half = QVector::constant(16, q(1, 2));
    assert_eq!(alternative_classify(&z, &z, &z), Alternative::AltI);
    assert_eq!(alternative_classify(&z, &z, &half), Alternative::AltII);
    assert_eq!(alternative_classify(&z, &half, &z), Alternative::Neither);
}

fn demo() -> parhecke::solver::ParamSet {
    let a = QVector(vec![q(1, 2), q(1, 2), q(1, 2), q(1, 4), q(1, 4)]);
    let b = QVector(vec![q(1, 2), q(1, 2), q(1, 2), q(-1, 4), q(-1, 4)]);
    let (p, cert) = pipeline(&a, &b, &PipelineChoices::default()).unwrap();
    assert!(cert.all_ok(), "{cert:?}");
    p
}

#[test]
fn kernel_class_of_a_solution_vanishes() {
    let p = demo();
    assert!(is_numerically_zero(&kernel_class(&p)));
}

#[test]
fn hecke_divisor_at_representative_level() {
    let p = demo();
    let (t, s) = representative_level(&p);
    let c = hecke_divisor_class(&p, &t, &s);
    for r in 0..16 {
        assert_eq!(c.0[yc::theta(r)], &p.big_a[r] - &q(1, 8));
        assert_eq!(c.0[yc::ec(r)], &(&p.big_c[r] + &p.big_b[r]) + &q(5, 8));
        assert_eq!(c.0[yc::gc(r)], &p.big_b[r] + &q(1, 8));
    }
    for i in 1..=5 {
        assert_eq!(c.0[yc::yp(i)], &(&p.n1[i - 1] + &p.n2[i - 1]) + &q(3, 5));
    }
    assert!(quotient_is_zero(&c));
}

#[test]
fn jump_audit_passes_for_the_demo() {
    let p = demo();
    let ja = jump_audit(&p);
    assert!(ja.all_ok());
    assert!(!ja.walls.is_empty());
}

// Independent check: the Hecke class at many sampled levels is zero.
#[test]
fn hecke_divisor_zero_at_sampled_levels() {
    let p = demo();
    let mut sampler = parhecke::sampling::RationalSampler::new(11);
    for _ in 0..20 {
        let t = sampler.vector(16);
        let s = sampler.vector(5);
        assert!(quotient_is_zero(&hecke_divisor_class(&p, &t, &s)));
    }
}

#[test]
fn jump_audit_fails_when_b_is_not_integral() {
    let mut p = demo();
    p.big_b[3] = &p.big_b[3] + &q(1, 3);
    p.big_a[3] = &p.big_a[3] - &q(1, 3);
    p.lq = &p.big_b + &p.d;
    p.lp = &p.big_a - &p.d;
    assert!(!jump_audit(&p).all_ok());
}

#[test]
fn csv_exports() {
    let csv = curve_table_csv(true);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 50);
    assert_eq!(lines[0].split(',').count(), 60);
    assert!(lines[0].starts_with("curve,DeltaHat,Lp[]"));
    assert!(lines[33].starts_with("DeltaHat_pt,-1"));
    let g = g_star_csv();
    assert_eq!(g.lines().count(), 59);
    assert_eq!(g.lines().next().unwrap().split(',').count(), 166);
}

#[test]
fn all_zero_parameters_give_nonzero_hecke_class() {
    let z16 = QVector::zeros(16);
    let z5 = QVector::zeros(5);
    let p = parhecke::solver::ParamSet {
        a: z5.clone(),
        b: z5.clone(),
        n1: z5.clone(),
        n2: z5.clone(),
        big_a: z16.clone(),
        big_b: z16.clone(),
        big_c: z16.clone(),
        d: z16.clone(),
        e: z16.clone(),
        lp: z16.clone(),
        lq: z16.clone(),
        llc: z16.clone(),
        r1: z5.clone(),
        r2: z5,
    };
    let c = hecke_divisor_class(&p, &z16, &QVector::zeros(5));
    assert_eq!(c.0[yc::theta(0)], q(-1, 8));
    assert!(!quotient_is_zero(&c));
}

#[test]
fn alternative_examples() {
    let d = QVector::constant(16, q(1, 3));
    let lp = -&d;
    let e = QVector::constant(16, q(1, 2));
    assert_eq!(alternative_classify(&lp, &d, &e), Alternative::AltII);
    let sigma_half = QVector::constant(16, q(1, 2));
    let lp2 = &sigma_half - &d;
    assert_eq!(alternative_classify(&lp2, &d, &e), Alternative::Neither);
}

#[test]
fn second_relation_family_is_zero() {
    let r2 = |r: usize| &QVector::unit(PIC_YC, yc::theta(r)) + &QVector::unit(PIC_YC, yc::ec(r));
    assert!(quotient_is_zero(&PicYCClass(&r2(lbl(&[1, 2]).index()) - &r2(0))));
    assert!(!quotient_is_zero(&PicYCClass(r2(0))));
}
