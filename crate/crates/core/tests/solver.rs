use parhecke::cherncalc::parch_conditions;
use parhecke::divcalc::Alternative;
use parhecke::lines16::{adjacent, eigen_project, intersection_matrix, sigma16, LineLabel};
use parhecke::sampling::RationalSampler;
use parhecke::solver::*;
use parhecke::{q, QVector, Rational};

fn v(xs: &[(i64, i64)]) -> QVector {
    QVector(xs.iter().map(|&(n, d)| q(n, d)).collect())
}

fn demo_ab() -> (QVector, QVector) {
    (
        v(&[(1, 2), (1, 2), (1, 2), (1, 4), (1, 4)]),
        v(&[(1, 2), (1, 2), (1, 2), (-1, 4), (-1, 4)]),
    )
}

fn worked_ab() -> (QVector, QVector) {
    (
        v(&[(1, 2), (1, 2), (1, 2), (1, 3), (1, 3)]),
        v(&[(1, 2), (1, 2), (1, 2), (-1, 3), (-1, 3)]),
    )
}

#[test]
fn chern_family_satisfies_both_conditions() {
    let mut s = RationalSampler::new(5);
    for _ in 0..30 {
        let c = chern_family_sample(&s.vector(16), &s.vector(16)).unwrap();
        let k = parch_conditions(&c.e, &c.d);
        assert!(k.linear && k.quadratic && k.forms_agree);
    }
}

#[test]
fn chern_family_reports_projection() {
    let d5 = eigen_project(&QVector::unit(16, 3), &q(-4, 1)).unwrap();
    let c = chern_family_sample(&d5, &QVector::zeros(16)).unwrap();
    assert!(!c.projected_d5 && !c.projected_d10);
    let c = chern_family_sample(&QVector::unit(16, 3), &QVector::zeros(16)).unwrap();
    assert!(c.projected_d5);
    assert!(chern_family_sample(&QVector::zeros(5), &QVector::zeros(16)).is_err());
}

#[test]
fn base_point_of_the_family() {
    let z = QVector::zeros(16);
    let c = chern_family_sample(&z, &z).unwrap();
    assert_eq!(c.d, sigma16().scale(&q(1, 8)));
    assert_eq!(c.e, sigma16().scale(&q(5, 8)));
}

#[test]
fn neighbor_sum_matches_adjacency() {
    let mut s = RationalSampler::new(9);
    let b = s.small_vector(16, 5);
    let nb = neighbor_sum_form(&b);
    for (r, li) in LineLabel::all().iter().enumerate() {
        let mut acc = Rational::zero();
        for (j, lj) in LineLabel::all().iter().enumerate() {
            if adjacent(*li, *lj) {
                acc += &b[j];
            }
        }
        assert_eq!(nb[r], acc);
    }
    let a = s.small_vector(16, 5);
    assert_eq!(c_from(&a, &b), &a + &nb);
}

#[test]
fn kernel_constraints_in_printed_form() {
    let m = kernel_constraints_matrix();
    assert_eq!((m.nrows(), m.ncols()), (49, 58));
    let mut s = RationalSampler::new(3);
    let ii = intersection_matrix();
    let dl = parhecke::lines16::delta_matrix();
    let co = &parhecke::lines16::ones_16x5() - &dl;
    for _ in 0..10 {
        let (lp, lq, llc, r1, r2) = (s.vector(16), s.vector(16), s.vector(16), s.vector(5), s.vector(5));
        let x = lp.concat(&lq).concat(&llc).concat(&r1).concat(&r2);
        let out = m.mul_vec(&x);
        let wr = &co.mul_vec(&r1) + &dl.mul_vec(&r2);
        let wr2 = &dl.mul_vec(&r1) + &co.mul_vec(&r2);
        let expect = (&ii.mul_vec(&lp) + &wr)
            .concat(&(&ii.mul_vec(&lq) + &wr))
            .concat(&QVector(vec![(&r1 + &r2).sum()]))
            .concat(&(&(&(&lp + &lq) - &llc) + &wr2));
        assert_eq!(out, expect);
    }
}

#[test]
fn kernel_solve_rejects_scalar_violation() {
    let (a, b) = demo_ab();
    let z5 = QVector::zeros(5);
    let z16 = QVector::zeros(16);
    match kernel_vanishing_solve(&a, &b, &z5, &z5, &z16, &z16) {
        Err(SolverError::Inconsistent(msg)) => assert!(msg.contains("= 3")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn kernel_solve_rational_example() {
    let (a, b) = demo_ab();
    let n1 = QVector::zeros(5);
    let n2 = -(&a + &b);
    let w = weight_vector(&a, &b, &n1, &n2);
    let s8 = sigma16().scale(&q(1, 8));
    let big_a = &s8 + &w.scale(&q(1, 4));
    let big_b = &-&s8 + &w.scale(&q(1, 4));
    let ks = kernel_vanishing_solve(&a, &b, &n1, &n2, &big_a, &big_b).unwrap();
    assert!(ks.d.consistent);
    assert!(ks.w_in_image);
    assert_eq!(ks.d.kernel.len(), 10);
    assert!(ks.d.contains(&s8));
    let mut off = s8.clone();
    off[0] = &off[0] + Rational::one();
    assert!(!ks.d.contains(&off));
}

#[test]
fn w_lies_in_the_minus_four_eigenspace() {
    let mut s = RationalSampler::new(21);
    for _ in 0..20 {
        let a = s.vector(5);
        let mut b = s.vector(5);
        let shift = &q(3, 1) - &(&a + &b).sum();
        b[0] = &b[0] + &shift;
        let n1 = QVector::zeros(5);
        let mut n2 = QVector::zeros(5);
        n2[0] = q(-3, 1);
        let w = weight_vector(&a, &b, &n1, &n2);
        assert_eq!(intersection_matrix().mul_vec(&w), w.scale(&q(-4, 1)));
    }
}

#[test]
fn stated_solution_entries() {
    let (a, b) = demo_ab();
    let n2 = -(&a + &b);
    let entries = stated_solution_audit(&a, &b, &QVector::zeros(5), &n2);
    let status = |id: &str| entries.iter().find(|e| e.id == id).unwrap().status;
    assert_eq!(status("kernel.exact-solution"), AuditStatus::Pass);
    assert_eq!(status("kernel.stated-sum-quarter"), AuditStatus::Discrepancy);
    assert_eq!(status("kernel.stated-sum-mixed"), AuditStatus::Discrepancy);
    assert_eq!(status("kernel.stated-d5-half-sum"), AuditStatus::Discrepancy);
}

#[test]
fn okamoto_d5_is_not_an_eigenvector() {
    let (a, _) = demo_ab();
    assert_eq!(okamoto_d5_audit(&a).status, AuditStatus::Discrepancy);
    assert_eq!(okamoto_d5_audit(&QVector::zeros(5)).status, AuditStatus::Pass);
}

#[test]
fn n_sum_variant_disagrees() {
    let (a, b) = demo_ab();
    let e = n_sum_variant_audit(&a, &b);
    assert_eq!(e.status, AuditStatus::Discrepancy);
    assert!(e.residual.starts_with("-6"));
}

#[test]
fn thm14_residual_matches_prediction() {
    let mut s = RationalSampler::new(14);
    for _ in 0..50 {
        let r = thm14_audit(&s.vector(5), &s.vector(5)).unwrap();
        assert!(r.matches_prediction);
    }
    let (a, b) = worked_ab();
    let r = thm14_audit(&a, &b).unwrap();
    assert!(!r.linear_ok);
    assert_eq!(r.entry.status, AuditStatus::Discrepancy);
}

#[test]
fn thm14_passes_for_integral_weights() {
    let a = QVector::from_ints(&[1, 0, 2, 0, 0]);
    let b = QVector::from_ints(&[0, 0, 0, 0, 0]);
    let r = thm14_audit(&a, &b).unwrap();
    assert!(r.linear_ok && r.quadratic_ok);
    assert_eq!(r.entry.status, AuditStatus::Pass);
}

#[test]
fn pipeline_demo_certifies() {
    let (a, b) = demo_ab();
    let (p, cert) = pipeline(&a, &b, &PipelineChoices::default()).unwrap();
    assert!(cert.all_ok(), "{cert:?}");
    assert_eq!(p.big_a.dot(&sigma16()), q(2, 1));
    assert_eq!(p.big_b.dot(&sigma16()), q(-2, 1));
    assert_eq!(hecke_integrality_check(&p).alternative, Alternative::AltII);
    assert!(hecke_integrality_check(&p).all_ok());
}

#[test]
fn pipeline_worked_weights_are_infeasible() {
    let (a, b) = worked_ab();
    match pipeline(&a, &b, &PipelineChoices::default()) {
        Err(SolverError::Infeasible { constraint }) => assert!(constraint.contains("I(A + B) = -2w")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn pipeline_names_the_failed_constraint() {
    let (a, _) = demo_ab();
    match pipeline(&a, &a, &PipelineChoices::default()) {
        Err(SolverError::Infeasible { constraint }) => assert_eq!(constraint, "sum(a + b) = 3"),
        other => panic!("{other:?}"),
    }
    let a = v(&[(1, 3), (1, 2), (1, 2), (1, 2), (1, 2)]);
    let b = v(&[(1, 3), (1, 3), (0, 1), (0, 1), (0, 1)]);
    match pipeline(&a, &b, &PipelineChoices::default()) {
        Err(SolverError::Infeasible { constraint }) => assert!(constraint.contains("a + b integral")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn pipeline_with_explicit_a() {
    let (a, b) = demo_ab();
    let mut big_a = QVector::zeros(16);
    big_a[5] = q(2, 1);
    let choices = PipelineChoices {
        big_a: Some(big_a.clone()),
        ..Default::default()
    };
    let (p, cert) = pipeline(&a, &b, &choices).unwrap();
    assert_eq!(p.big_a, big_a);
    assert!(cert.all_ok(), "{cert:?}");
}

#[test]
fn param_set_serde_round_trip() {
    let (a, b) = demo_ab();
    let (p, _) = pipeline(&a, &b, &PipelineChoices::default()).unwrap();
    let s = serde_json::to_string(&p).unwrap();
    assert!(s.contains("\"A\""));
    let back: ParamSet = serde_json::from_str(&s).unwrap();
    assert_eq!(back, p);
}
