use proptest::prelude::*;

use parhecke::cherncalc::{ch_f, ch_f_grr, parch, parch_conditions};
use parhecke::divcalc::{curve_table, hecke_divisor_class, jump_audit, quotient_is_zero};
use parhecke::heckegeo::{closed_form_anchors, hecke_anchor_values, iota_map, HeckeInput, PencilConfig};
use parhecke::lines16::{
    canonical_class, delta_matrix, eigen_project, intersection_matrix, ones_16x5, sigma16, LineLabel, PicXClass,
};
use parhecke::modstab::{is_stable_deg0_k0, FlagConfig0};
use parhecke::okamoto::{reduce, reduced_okamoto};
use parhecke::projective::{MoebiusMap, P1};
use parhecke::qcore::{floor_vec, solve_linear};
use parhecke::sampling::RationalSampler;
use parhecke::solver::{
    chern_family_sample, kernel_vanishing_solve, pipeline, weight_vector, PipelineChoices, SolverError,
};
use parhecke::{q, QMatrix, QVector, Rational};

fn rat() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| q(n, d))
}

fn small() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn qvec(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(rat(), n).prop_map(QVector)
}

fn small_vec(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(small(), n).prop_map(QVector)
}

fn ivec(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(-20i64..=20, n).prop_map(|v| QVector::from_ints(&v))
}

fn p1() -> impl Strategy<Value = P1> {
    prop_oneof![1 => Just(P1::Infinity), 9 => (-6i64..=6).prop_map(P1::int)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn floor_commutes_with_integer_shift(v in qvec(6), w in ivec(6)) {
        prop_assert_eq!(floor_vec(&(&v + &w)), &floor_vec(&v) + &w);
    }

    #[test]
    fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn solve_linear_members_solve(
        rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 3),
        x0 in small_vec(5),
        coeffs in prop::collection::vec(small(), 5),
    ) {
        let m = QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::int(x)).collect()).collect()).unwrap();
        let b = m.mul_vec(&x0);
        let s = solve_linear(&m, &b).unwrap();
        prop_assert!(s.consistent);
        prop_assert!(s.contains(&x0));
        let member = s.member(&coeffs[..s.kernel.len()]);
        prop_assert_eq!(m.mul_vec(&member), b);
    }

    #[test]
    fn label_add_is_involutive(idx in 0usize..16, i in 1u8..=6) {
        let l = LineLabel::from_index(idx);
        prop_assert_eq!(l.add(i).unwrap().add(i).unwrap(), l);
    }

    #[test]
    fn eigen_components_are_eigenvectors(v in qvec(16)) {
        let m = intersection_matrix();
        let mut total = QVector::zeros(16);
        for ev in [q(4, 1), q(-4, 1), Rational::zero()] {
            let p = eigen_project(&v, &ev).unwrap();
            prop_assert_eq!(m.mul_vec(&p), p.scale(&ev));
            total = &total + &p;
        }
        prop_assert_eq!(total, v);
    }

    #[test]
    fn stability_is_moebius_invariant(
        p4 in 2i64..=5, p5 in 6i64..=9,
        flags in prop::collection::vec(p1(), 5),
        g in (1i64..=4, -3i64..=3, -3i64..=3, 1i64..=4),
    ) {
        let pts = [P1::int(0), P1::int(1), P1::Infinity, P1::int(p4), P1::int(p5)];
        let flags: [P1; 5] = std::array::from_fn(|i| flags[i].clone());
        let cfg = FlagConfig0::new(pts, flags).unwrap();
        let (a, b, c, d) = g;
        prop_assume!(a * d - b * c != 0);
        let g = MoebiusMap::new(Rational::int(a), Rational::int(b), Rational::int(c), Rational::int(d)).unwrap();
        let moved = cfg.reparametrize_flags(&g);
        for qv in [q(1, 5), q(1, 2), q(7, 10), q(9, 10)] {
            prop_assert_eq!(
                is_stable_deg0_k0(&cfg, &qv).unwrap().is_stable(),
                is_stable_deg0_k0(&moved, &qv).unwrap().is_stable()
            );
        }
    }

    #[test]
    fn stability_is_nested_across_chambers(p4 in 2i64..=5, p5 in 6i64..=9, flags in prop::collection::vec(p1(), 5)) {
        let pts = [P1::int(0), P1::int(1), P1::Infinity, P1::int(p4), P1::int(p5)];
        let cfg = FlagConfig0::new(pts, std::array::from_fn(|i| flags[i].clone())).unwrap();
        let st = |x: Rational| is_stable_deg0_k0(&cfg, &x).unwrap().is_stable();
        if st(q(7, 10)) {
            prop_assert!(st(q(1, 2)));
        }
        if st(q(1, 2)) {
            prop_assert!(st(q(1, 5)));
        }
    }

    #[test]
    fn reduced_okamoto_is_linear(a in small_vec(5), b in small_vec(5), t in small()) {
        let lhs = reduced_okamoto(&(&a + &b.scale(&t)));
        let rhs = &reduced_okamoto(&a).0 + &reduced_okamoto(&b).0.scale(&t);
        prop_assert_eq!(lhs.0, rhs);
    }

    #[test]
    fn reduction_is_representative_independent(c in qvec(6), t in rat()) {
        let c = PicXClass::from_vector(&c);
        prop_assert_eq!(reduce(&c.add(&canonical_class().scale(&t))), reduce(&c));
    }

    #[test]
    fn scalar_condition_identity(a in qvec(5), b in qvec(5), n1 in ivec(5), n2 in ivec(5)) {
        let w = weight_vector(&a, &b, &n1, &n2);
        let total = (&(&(&a + &n1) + &b) + &n2).sum();
        prop_assert_eq!(w.dot(&sigma16()), total * q(8, 1));
    }

    #[test]
    fn curve_table_is_the_printed_system(x in small_vec(58)) {
        let ii = intersection_matrix();
        let dl = delta_matrix();
        let co = &ones_16x5() - &dl;
        let (lp, lq, llc) = (x.slice(0, 16), x.slice(16, 32), x.slice(32, 48));
        let (r1, r2) = (x.slice(48, 53), x.slice(53, 58));
        let w = &co.mul_vec(&r1) + &dl.mul_vec(&r2);
        let expect = (&ii.mul_vec(&lp) + &w)
            .concat(&(&ii.mul_vec(&lq) + &w))
            .concat(&QVector(vec![(&r1 + &r2).sum()]))
            .concat(&(&(&(&lp + &lq) - &llc) + &(&dl.mul_vec(&r1) + &co.mul_vec(&r2))));
        prop_assert_eq!(curve_table().mul_vec(&x), expect);
    }

    #[test]
    fn sampler_is_seed_deterministic(seed in any::<u64>()) {
        let mut a = RationalSampler::new(seed);
        let mut b = RationalSampler::new(seed);
        prop_assert_eq!(a.vector(8), b.vector(8));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn iota_postcondition(l4 in rat(), l5 in rat()) {
        let Ok(cfg) = PencilConfig::new(l4, l5) else { return Ok(()) };
        let r = iota_map(&cfg).unwrap();
        prop_assert_eq!(&r.images[3], &P1::fin(cfg.l4.clone()));
        prop_assert_eq!(&r.images[4], &P1::fin(cfg.l5.clone()));
    }

    #[test]
    fn anchors_match_closed_forms(p4 in small(), p5 in small(), f4 in small(), f5 in small()) {
        let Ok(input) = HeckeInput::new(p4, p5, f4, f5) else { return Ok(()) };
        let (Ok(a), Ok(c)) = (hecke_anchor_values(&input), closed_form_anchors(&input)) else {
            return Ok(());
        };
        prop_assert_eq!(a, c);
    }

    #[test]
    fn kernel_solutions_are_closed_under_eigenspace_zero(
        a in small_vec(5), b in small_vec(5), v in small_vec(16),
    ) {
        // shift b so the scalar condition holds with n1 = 0, n2 = (-3, 0, ..)
        let mut b = b;
        b[0] = &b[0] + &(q(3, 1) - (&a + &b).sum());
        let n1 = QVector::zeros(5);
        let mut n2 = QVector::zeros(5);
        n2[0] = q(-3, 1);
        let w = weight_vector(&a, &b, &n1, &n2);
        let s8 = sigma16().scale(&q(1, 8));
        let big_a = &s8 + &w.scale(&q(1, 4));
        let big_b = &-&s8 + &w.scale(&q(1, 4));
        let ks = kernel_vanishing_solve(&a, &b, &n1, &n2, &big_a, &big_b).unwrap();
        prop_assert!(ks.d.consistent);
        prop_assert_eq!(ks.d.kernel.len(), 10);
        let z = eigen_project(&v, &Rational::zero()).unwrap();
        prop_assert!(ks.d.contains(&(&ks.d.particular + &z)));
    }
}

fn non_integral_level() -> impl Strategy<Value = (QVector, QVector, QVector)> {
    (small_vec(16), small_vec(16), small_vec(16)).prop_filter("T + e, T + d off integers", |(e, d, t)| {
        (0..16).all(|i| !(&t[i] + &e[i]).is_integer() && !(&t[i] + &d[i]).is_integer())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn grr_matches_boxed((e, d, t) in non_integral_level()) {
        prop_assert!(ch_f(&e, &d, &t).same_class(&ch_f_grr(&e, &d, &t)));
    }

    #[test]
    fn parch1_shifts_by_m_plus_3n(e in small_vec(16), d in small_vec(16), m in ivec(16), n in ivec(16)) {
        let base = parch(&e, &d);
        let moved = parch(&(&e + &m), &(&d + &n));
        prop_assert_eq!(&moved.parch0, &base.parch0);
        prop_assert_eq!(&moved.parch1 - &base.parch1, &m + &n.scale(&q(3, 1)));
    }

    #[test]
    fn chern_family_hits_the_target(d5 in small_vec(16), d10 in small_vec(16)) {
        let c = chern_family_sample(&d5, &d10).unwrap();
        prop_assert!(parch(&c.e, &c.d).is_target());
    }
}

/// Weights in quarters with `a + b` integral and `Σ(a + b) = 3`.
fn quarter_weights() -> impl Strategy<Value = (QVector, QVector)> {
    (prop::collection::vec(-4i64..=4, 5), prop::collection::vec(-1i64..=1, 4)).prop_map(|(x, m)| {
        let a = QVector(x.iter().map(|&k| q(k, 4)).collect());
        let mut s = QVector::from_ints(&[m[0], m[1], m[2], m[3], 0]);
        s[4] = q(3, 1) - s.sum();
        (a.clone(), &s - &a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn pipeline_outputs_satisfy_everything((a, b) in quarter_weights(), seed in any::<u64>()) {
        match pipeline(&a, &b, &PipelineChoices::default()) {
            Ok((p, cert)) => {
                prop_assert!(cert.all_ok(), "{:?}", cert);
                let k = parch_conditions(&p.e, &p.d);
                prop_assert!(k.linear && k.quadratic);
                prop_assert_eq!(&p.lp + &p.d, p.big_a.clone());
                prop_assert!(jump_audit(&p).all_ok());
                let mut s = RationalSampler::new(seed);
                for _ in 0..4 {
                    let (t, u) = (s.vector(16), s.vector(5));
                    prop_assert!(quotient_is_zero(&hecke_divisor_class(&p, &t, &u)));
                }
            }
            Err(SolverError::Infeasible { constraint }) => {
                prop_assert!(constraint.contains("I(A + B) = -2w"), "{}", constraint);
            }
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}
