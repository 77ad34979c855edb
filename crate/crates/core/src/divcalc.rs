//! Divisor classes on the Hecke correspondence `H`, on its resolution `H̃`,
//! and on `Y × C̃`; the pullback tables between them, the curve table that
//! detects classes on `H`, and the level-dependent Hecke divisor.
//!
//! Generator layouts (labels in canonical order, points `i = 1..5`):
//! - `H` (58): `Lp_I`, `Lq_I`, `LLC_I`, `R_{1,i}`, `R_{2,i}`.
//! - `H̃` (165): `S_I`, `EC_I`, `GC_I`, `N_I`, `Yp_i`, then `M_{I,i}` for
//!   `i = 1..6`, label-major.
//! - `Y × C̃` (53): `AJ*Θ_I`, `E_I × C̃`, `G_I × C̃`, `Y × p̃_i`.
//! - `Z` (64): `LpE_I`, `LpG_I`, `LLE_I`, `LLG_I`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::lines16::{intersection_matrix, LineLabel};
use crate::qcore::{q, solve_linear, AffineSolutionSet, QMatrix, QVector, Rational};
use crate::solver::ParamSet;

pub const PIC_H: usize = 58;
pub const PIC_HT: usize = 165;
pub const PIC_YC: usize = 53;
pub const PIC_Z: usize = 64;
pub const CURVES: usize = 49;

fn labels() -> [LineLabel; 16] {
    LineLabel::all()
}

fn label_pos(l: LineLabel) -> usize {
    l.index()
}

fn delta(l: LineLabel, i: usize) -> Rational {
    Rational::int(i64::from(l.contains(i as u8)))
}

pub mod h {
    //! Indices into `Pic(H)`.
    pub fn lp(i: usize) -> usize {
        i
    }
    pub fn lq(i: usize) -> usize {
        16 + i
    }
    pub fn llc(i: usize) -> usize {
        32 + i
    }
    /// `R_{1,i}` for `i = 1..5`.
    pub fn r1(i: usize) -> usize {
        47 + i
    }
    pub fn r2(i: usize) -> usize {
        52 + i
    }
}

pub mod ht {
    //! Indices into `Pic(H̃)`.
    pub fn s(i: usize) -> usize {
        i
    }
    pub fn ec(i: usize) -> usize {
        16 + i
    }
    pub fn gc(i: usize) -> usize {
        32 + i
    }
    pub fn n(i: usize) -> usize {
        48 + i
    }
    pub fn yp(i: usize) -> usize {
        63 + i
    }
    /// `M_{I,i}` for `i = 1..6`.
    pub fn m(label: usize, i: usize) -> usize {
        69 + 6 * label + (i - 1)
    }
}

pub mod yc {
    //! Indices into `Pic(Y × C̃)`.
    pub fn theta(i: usize) -> usize {
        i
    }
    pub fn ec(i: usize) -> usize {
        16 + i
    }
    pub fn gc(i: usize) -> usize {
        32 + i
    }
    pub fn yp(i: usize) -> usize {
        47 + i
    }
}

pub mod z {
    //! Indices into the divisors of `Z`.
    pub fn lpe(i: usize) -> usize {
        i
    }
    pub fn lpg(i: usize) -> usize {
        16 + i
    }
    pub fn lle(i: usize) -> usize {
        32 + i
    }
    pub fn llg(i: usize) -> usize {
        48 + i
    }
}

fn unit(n: usize, i: usize) -> QVector {
    QVector::unit(n, i)
}

fn add_at(v: &mut QVector, i: usize, c: &Rational) {
    v[i] = &v[i] + c;
}

/// A divisor class on `H`, by its 58 coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicHClass(pub QVector);

impl PicHClass {
    pub fn from_parts(lp: &QVector, lq: &QVector, llc: &QVector, r1: &QVector, r2: &QVector) -> Self {
        PicHClass(lp.concat(lq).concat(llc).concat(r1).concat(r2))
    }

    pub fn lp(&self) -> QVector {
        self.0.slice(0, 16)
    }
    pub fn lq(&self) -> QVector {
        self.0.slice(16, 32)
    }
    pub fn llc(&self) -> QVector {
        self.0.slice(32, 48)
    }
    pub fn r1(&self) -> QVector {
        self.0.slice(48, 53)
    }
    pub fn r2(&self) -> QVector {
        self.0.slice(53, 58)
    }
}

/// `p^* L_I = Lp_I + LLC_I`.
pub fn pullback_p(label: LineLabel) -> PicHClass {
    let i = label_pos(label);
    PicHClass(&unit(PIC_H, h::lp(i)) + &unit(PIC_H, h::llc(i)))
}

/// `q^*(L_I × C) = Lq_I + LLC_I`.
pub fn pullback_q_line(label: LineLabel) -> PicHClass {
    let i = label_pos(label);
    PicHClass(&unit(PIC_H, h::lq(i)) + &unit(PIC_H, h::llc(i)))
}

/// `q^*(X × p_i) = R_{1,i} + R_{2,i}`.
pub fn pullback_q_point(i: usize) -> PicHClass {
    PicHClass(&unit(PIC_H, h::r1(i)) + &unit(PIC_H, h::r2(i)))
}

/// Rows `L_I × pt`, `pt × L_I`, `Δ̂_pt`, `Σ_I` against the 58 generators.
pub fn curve_table() -> QMatrix {
    let ii = intersection_matrix();
    let ls = labels();
    let mut m = QMatrix::zeros(CURVES, PIC_H);
    for (r, l) in ls.iter().enumerate() {
        for j in 0..16 {
            m.set(r, h::lp(j), ii.get(r, j).clone());
            m.set(16 + r, h::lq(j), ii.get(r, j).clone());
        }
        m.set(33 + r, h::lp(r), Rational::one());
        m.set(33 + r, h::lq(r), Rational::one());
        m.set(33 + r, h::llc(r), q(-1, 1));
        for i in 1..=5 {
            let dl = delta(*l, i);
            let cl = Rational::one() - &dl;
            for row in [r, 16 + r] {
                m.set(row, h::r1(i), cl.clone());
                m.set(row, h::r2(i), dl.clone());
            }
            m.set(33 + r, h::r1(i), dl.clone());
            m.set(33 + r, h::r2(i), cl.clone());
        }
    }
    for i in 1..=5 {
        m.set(32, h::r1(i), Rational::one());
        m.set(32, h::r2(i), Rational::one());
    }
    m
}

/// Intersections of the 49 curves with `Δ̂`.
pub fn delta_hat_column() -> QVector {
    let mut v = QVector::zeros(CURVES);
    v[32] = q(-1, 1);
    v
}

/// The curve table with the `Δ̂` column in front.
pub fn curve_table_with_delta() -> QMatrix {
    let col = QMatrix::from_columns(&[delta_hat_column()]).expect("one column");
    col.hstack(&curve_table()).expect("49 rows")
}

/// Pairings of a class with the 49 curves.
pub fn curve_pairings(c: &PicHClass) -> QVector {
    curve_table().mul_vec(&c.0)
}

/// Vanishing in `Pic(H) ⊗ Q`, detected on the spanning curves.
pub fn is_numerically_zero(c: &PicHClass) -> bool {
    curve_pairings(c).is_zero()
}

fn sym_class(lp: Rational, lq: Rational, llc: Rational, rr: Rational) -> PicHClass {
    PicHClass::from_parts(
        &QVector::constant(16, lp),
        &QVector::constant(16, lq),
        &QVector::constant(16, llc),
        &QVector::constant(5, rr.clone()),
        &QVector::constant(5, rr),
    )
}

/// `Δ̂ = ⅛ Lp + ⅛ Lq - ¼ LLC - 1/10 RR`.
pub fn delta_hat_class() -> PicHClass {
    sym_class(q(1, 8), q(1, 8), q(-1, 4), q(-1, 10))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaHatSolve {
    pub solutions: AffineSolutionSet,
    /// Rank of the curve table, i.e. of the numerical Picard group.
    pub rank: usize,
    /// The closed form solves the system.
    pub closed_form_solves: bool,
    /// Every solution has the same curve pairings as the closed form, so
    /// the class is determined up to numerical equivalence.
    pub unique_numerical_class: bool,
}

/// Solves `table · c = (Δ̂ · curves)` for the coefficients of `Δ̂`.
pub fn solve_delta_hat() -> DeltaHatSolve {
    let table = curve_table();
    let rhs = delta_hat_column();
    let solutions = solve_linear(&table, &rhs).expect("49x58 system");
    let closed = delta_hat_class();
    let closed_form_solves = solutions.consistent && solutions.contains(&closed.0);
    let unique_numerical_class = solutions.kernel.iter().all(|k| table.mul_vec(k).is_zero());
    DeltaHatSolve {
        rank: table.rank(),
        solutions,
        closed_form_solves,
        unique_numerical_class,
    }
}

/// `ω_q = -¼ Lp + ¾ LLC + ⅖ RR + Δ̂`.
pub fn omega_q_class() -> PicHClass {
    let base = sym_class(q(-1, 4), Rational::zero(), q(3, 4), q(2, 5));
    PicHClass(&base.0 + &delta_hat_class().0)
}

/// `-⅛ Lp + ⅛ Lq + ½ LLC + 3/10 RR`.
pub fn omega_q_expected() -> PicHClass {
    sym_class(q(-1, 8), q(1, 8), q(1, 2), q(3, 10))
}

/// `g^*: Pic(H) -> Pic(H̃)` as a 165x58 matrix.
pub fn g_star() -> QMatrix {
    let ls = labels();
    let mut m = QMatrix::zeros(PIC_HT, PIC_H);
    let two = q(2, 1);
    for (r, l) in ls.iter().enumerate() {
        // Lp_I -> S_I + N_I + 2 sum_i M_{I+i,i}
        m.set(ht::s(r), h::lp(r), Rational::one());
        m.set(ht::n(r), h::lp(r), Rational::one());
        for i in 1..=5 {
            let j = label_pos(l.add(i as u8).expect("1..5"));
            m.set(ht::m(j, i), h::lp(r), two.clone());
        }
        // Lq_I -> EC_I + GC_I + 2 sum_i M_{I,i}
        m.set(ht::ec(r), h::lq(r), Rational::one());
        m.set(ht::gc(r), h::lq(r), Rational::one());
        for i in 1..=5 {
            m.set(ht::m(r, i), h::lq(r), two.clone());
        }
        // LLC_I -> EC_I + N_I + 2 M_{I,6}
        m.set(ht::ec(r), h::llc(r), Rational::one());
        m.set(ht::n(r), h::llc(r), Rational::one());
        m.set(ht::m(r, 6), h::llc(r), two.clone());
    }
    for i in 1..=5 {
        m.set(ht::yp(i), h::r1(i), Rational::one());
        m.set(ht::yp(i), h::r2(i), Rational::one());
        for (r, l) in ls.iter().enumerate() {
            let dl = delta(*l, i);
            m.set(ht::m(r, i), h::r1(i), &two * &dl);
            m.set(ht::m(r, i), h::r2(i), &two * (Rational::one() - &dl));
        }
    }
    m
}

/// `g_Z^*: Z -> Pic(H̃) ⊗ Q` on `LpE, LpG, LLE, LLG`.
pub fn gz_star() -> QMatrix {
    let ls = labels();
    let half = q(1, 2);
    let mut m = QMatrix::zeros(PIC_HT, PIC_Z);
    for (r, l) in ls.iter().enumerate() {
        m.set(ht::n(r), z::lpe(r), half.clone());
        for i in 1..=5 {
            let j = label_pos(l.add(i as u8).expect("1..5"));
            m.set(ht::m(j, i), z::lpe(r), Rational::one());
        }
        m.set(ht::n(r), z::lle(r), half.clone());
        m.set(ht::m(r, 6), z::lle(r), Rational::one());
        m.set(ht::s(r), z::lpg(r), Rational::one());
        m.set(ht::ec(r), z::llg(r), Rational::one());
    }
    m
}

/// `f_Z^*` on the `Lp` and `LLC` families: `Lp = 2 LpE + LpG`,
/// `LLC = 2 LLE + LLG`. Other columns are zero (not tabulated).
pub fn fz_star_lp_llc() -> QMatrix {
    let mut m = QMatrix::zeros(PIC_Z, PIC_H);
    for r in 0..16 {
        m.set(z::lpe(r), h::lp(r), q(2, 1));
        m.set(z::lpg(r), h::lp(r), Rational::one());
        m.set(z::lle(r), h::llc(r), q(2, 1));
        m.set(z::llg(r), h::llc(r), Rational::one());
    }
    m
}

/// `p̃^*` on `E_I, G_I` (32 columns, `E` first).
pub fn p_tilde_star() -> QMatrix {
    let mut m = QMatrix::zeros(PIC_HT, 32);
    for r in 0..16 {
        m.set(ht::n(r), r, Rational::one());
        for i in 1..=6 {
            m.set(ht::m(r, i), r, Rational::one());
        }
        m.set(ht::s(r), 16 + r, Rational::one());
        m.set(ht::ec(r), 16 + r, Rational::one());
    }
    m
}

/// `q̃^*` on `E_I × C̃`, `G_I × C̃`, `Y × p̃_i` (37 columns in that order).
pub fn q_tilde_star() -> QMatrix {
    let mut m = QMatrix::zeros(PIC_HT, 37);
    for r in 0..16 {
        m.set(ht::ec(r), r, Rational::one());
        for i in 1..=6 {
            m.set(ht::m(r, i), r, Rational::one());
        }
        m.set(ht::gc(r), 16 + r, Rational::one());
        m.set(ht::n(r), 16 + r, Rational::one());
    }
    for i in 1..=5 {
        m.set(ht::yp(i), 31 + i, Rational::one());
        for r in 0..16 {
            m.set(ht::m(r, i), 31 + i, Rational::one());
        }
    }
    m
}

/// Columns of `g^*` and `g_Z^* ∘ f_Z^*` agree on `Lp_I` and `LLC_I`.
pub fn g_factors_through_z() -> bool {
    let g = g_star();
    let composed = gz_star().try_mul(&fz_star_lp_llc()).expect("165x64 * 64x58");
    (0..16).all(|r| g.col(h::lp(r)) == composed.col(h::lp(r)) && g.col(h::llc(r)) == composed.col(h::llc(r)))
}

/// The printed combination for `g_Z^* H̃`.
pub fn gz_pullback_abh() -> QVector {
    let mut v = QVector::zeros(PIC_HT);
    for r in 0..16 {
        v[ht::s(r)] = q(-1, 8);
        v[ht::ec(r)] = q(5, 8);
        v[ht::gc(r)] = q(1, 8);
        v[ht::n(r)] = q(3, 8);
        for i in 1..=5 {
            v[ht::m(r, i)] = q(3, 5);
        }
        v[ht::m(r, 6)] = Rational::one();
    }
    for i in 1..=5 {
        v[ht::yp(i)] = q(3, 5);
    }
    v
}

/// `g^* ω_q`.
pub fn g_star_omega_q() -> QVector {
    g_star().mul_vec(&omega_q_class().0)
}

/// `g_Z^* LpE` with `LpE = Σ_I LpE_I`.
pub fn gz_star_lpe() -> QVector {
    let lpe = QVector(
        (0..PIC_Z)
            .map(|k| if k < 16 { Rational::one() } else { Rational::zero() })
            .collect(),
    );
    gz_star().mul_vec(&lpe)
}

/// `g^* ω_q + g_Z^* LpE`, from `H̃ = f_Z^* ω_q + LpE` on `Z`.
pub fn derived_abh() -> QVector {
    &g_star_omega_q() + &gz_star_lpe()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbhAudit {
    pub g_factors: bool,
    pub boxed_equals_g_omega: bool,
    pub boxed_equals_derived: bool,
    /// `derived - boxed`.
    pub residual: QVector,
}

pub fn abh_audit() -> AbhAudit {
    let boxed = gz_pullback_abh();
    let derived = derived_abh();
    AbhAudit {
        g_factors: g_factors_through_z(),
        boxed_equals_g_omega: boxed == g_star_omega_q(),
        boxed_equals_derived: boxed == derived,
        residual: &derived - &boxed,
    }
}

/// A class on `Y × C̃`, by its 53 coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicYCClass(pub QVector);

/// The 34 relation differences: `R1_I - R1_∅`, `R2_I - R2_∅` over the 15
/// nonempty labels, and `Y×p̃_i - Y×p̃_1` for `i = 2..5`, where
/// `R1_I = G_I×C̃ + E_I×C̃ + Σ_{J adj I} E_J×C̃` and
/// `R2_I = AJ*Θ_I + E_I×C̃`.
pub fn relation_differences() -> Vec<QVector> {
    let ii = intersection_matrix();
    let r1 = |r: usize| {
        let mut v = unit(PIC_YC, yc::gc(r));
        add_at(&mut v, yc::ec(r), &Rational::one());
        for j in 0..16 {
            if j != r && !ii.get(r, j).is_zero() {
                add_at(&mut v, yc::ec(j), &Rational::one());
            }
        }
        v
    };
    let r2 = |r: usize| &unit(PIC_YC, yc::theta(r)) + &unit(PIC_YC, yc::ec(r));
    let mut out = Vec::with_capacity(34);
    for r in 1..16 {
        out.push(&r1(r) - &r1(0));
    }
    for r in 1..16 {
        out.push(&r2(r) - &r2(0));
    }
    for i in 2..=5 {
        out.push(&unit(PIC_YC, yc::yp(i)) - &unit(PIC_YC, yc::yp(1)));
    }
    out
}

/// Membership in the span of the relation differences.
pub fn quotient_is_zero(c: &PicYCClass) -> bool {
    let m = QMatrix::from_columns(&relation_differences()).expect("34 columns");
    solve_linear(&m, &c.0).expect("53 rows").consistent
}

/// The Hecke divisor at level `(T, t)`.
pub fn hecke_divisor_class(p: &ParamSet, big_t: &QVector, t: &QVector) -> PicYCClass {
    let fl = |x: &Rational| x.floor();
    let mut v = QVector::zeros(PIC_YC);
    for r in 0..16 {
        let tr = &big_t[r];
        v[yc::theta(r)] = fl(&(&p.lp[r] + &p.d[r])) - q(1, 8);
        v[yc::ec(r)] = fl(&(tr + &p.llc[r] + &p.d[r])) + fl(&(tr + &p.lq[r])) + q(5, 8)
            - fl(&(tr + &p.e[r]))
            - fl(&(tr + &p.d[r]));
        v[yc::gc(r)] = fl(&(tr + &p.lq[r])) + q(1, 8) - fl(&(tr + &p.d[r]));
    }
    for i in 1..=5 {
        let ti = &t[i - 1];
        v[yc::yp(i)] = fl(&(ti + &p.r1[i - 1])) + fl(&(ti + &p.r2[i - 1])) + q(3, 5)
            - fl(&(ti + &p.a[i - 1]))
            - fl(&(ti + &p.b[i - 1]));
    }
    PicYCClass(v)
}

/// The representative level `T = -d`, `t = 0`.
pub fn representative_level(p: &ParamSet) -> (QVector, QVector) {
    (-&p.d, QVector::zeros(5))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LevelCoord {
    /// A line coordinate `T_I`, by canonical position.
    Line(usize),
    /// A point coordinate `t_i`, `i = 1..5`.
    Point(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallCheck {
    pub coord: LevelCoord,
    pub at: Rational,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpAudit {
    pub representative_zero: bool,
    pub walls: Vec<WallCheck>,
}

impl JumpAudit {
    pub fn all_ok(&self) -> bool {
        self.representative_zero && self.walls.iter().all(|w| w.ok)
    }
}

/// Walls `n - x` of the floors `⌊s + x⌋` in the window `(lo, lo + 1]`.
fn walls_in_window(shifts: &[Rational], lo: &Rational) -> Vec<Rational> {
    let mut out: Vec<Rational> = shifts
        .iter()
        .map(|x| {
            // smallest n - x > lo
            let n = (lo + x).floor() + Rational::one();
            n - x
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn safe_epsilon(walls: &[Rational], lo: &Rational) -> Rational {
    let mut pts = vec![lo.clone()];
    pts.extend(walls.iter().cloned());
    let gap = pts
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .filter(|g| g.is_positive())
        .min()
        .unwrap_or_else(Rational::one);
    gap * q(1, 3)
}

/// The Hecke class is a sum of functions of single level coordinates, so
/// vanishing at one level plus zero jumps across every wall in one period
/// of every coordinate gives vanishing at all levels.
pub fn jump_audit(p: &ParamSet) -> JumpAudit {
    let (t0, s0) = representative_level(p);
    let base = hecke_divisor_class(p, &t0, &s0);
    let mut walls = Vec::new();
    for r in 0..16 {
        let lo = t0[r].clone();
        let shifts = [&p.llc[r] + &p.d[r], p.lq[r].clone(), p.e[r].clone(), p.d[r].clone()];
        let ws = walls_in_window(&shifts, &lo);
        let eps = safe_epsilon(&ws, &lo);
        for w in ws {
            let mut before = t0.clone();
            before[r] = &w - &eps;
            let mut after = t0.clone();
            after[r] = w.clone();
            let jump = &hecke_divisor_class(p, &after, &s0).0 - &hecke_divisor_class(p, &before, &s0).0;
            walls.push(WallCheck {
                coord: LevelCoord::Line(r),
                ok: quotient_is_zero(&PicYCClass(jump)),
                at: w,
            });
        }
    }
    for i in 0..5 {
        let lo = s0[i].clone();
        let shifts = [p.r1[i].clone(), p.r2[i].clone(), p.a[i].clone(), p.b[i].clone()];
        let ws = walls_in_window(&shifts, &lo);
        let eps = safe_epsilon(&ws, &lo);
        for w in ws {
            let mut before = s0.clone();
            before[i] = &w - &eps;
            let mut after = s0.clone();
            after[i] = w.clone();
            let jump = &hecke_divisor_class(p, &t0, &after).0 - &hecke_divisor_class(p, &t0, &before).0;
            walls.push(WallCheck {
                coord: LevelCoord::Point(i + 1),
                ok: quotient_is_zero(&PicYCClass(jump)),
                at: w,
            });
        }
    }
    JumpAudit {
        representative_zero: quotient_is_zero(&base),
        walls,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Alternative {
    AltI,
    AltII,
    Neither,
}

/// (i): `lp + d` and `lp + e` integral; (ii): `lp + d` integral, `lp + e`
/// not; otherwise neither.
pub fn alternative_classify(lp: &QVector, d: &QVector, e: &QVector) -> Alternative {
    if !(lp + d).is_integral() {
        Alternative::Neither
    } else if (lp + e).is_integral() {
        Alternative::AltI
    } else {
        Alternative::AltII
    }
}

/// The kernel class `Lp·lp + Lq·lq + LLC·llc + R_1·r_1 + R_2·r_2`.
pub fn kernel_class(p: &ParamSet) -> PicHClass {
    PicHClass::from_parts(&p.lp, &p.lq, &p.llc, &p.r1, &p.r2)
}

fn label_tag(l: LineLabel) -> String {
    l.elems().iter().map(|e| e.to_string()).collect()
}

/// Column names for `Pic(H)`.
pub fn pic_h_names() -> Vec<String> {
    let mut out = Vec::with_capacity(PIC_H);
    for fam in ["Lp", "Lq", "LLC"] {
        out.extend(labels().iter().map(|l| format!("{fam}[{}]", label_tag(*l))));
    }
    for fam in ["R1", "R2"] {
        out.extend((1..=5).map(|i| format!("{fam}[{i}]")));
    }
    out
}

/// Row names of the curve table.
pub fn curve_names() -> Vec<String> {
    let mut out: Vec<String> = labels().iter().map(|l| format!("L[{}]xpt", label_tag(*l))).collect();
    out.extend(labels().iter().map(|l| format!("ptxL[{}]", label_tag(*l))));
    out.push("DeltaHat_pt".into());
    out.extend(labels().iter().map(|l| format!("Sigma[{}]", label_tag(*l))));
    out
}

/// Column names for `Pic(H̃)`.
pub fn pic_ht_names() -> Vec<String> {
    let mut out = Vec::with_capacity(PIC_HT);
    for fam in ["S", "EC", "GC", "N"] {
        out.extend(labels().iter().map(|l| format!("{fam}[{}]", label_tag(*l))));
    }
    out.extend((1..=5).map(|i| format!("Yp[{i}]")));
    for l in labels() {
        out.extend((1..=6).map(|i| format!("M[{}|{i}]", label_tag(l))));
    }
    out
}

/// A matrix as CSV with a header row and a leading name column.
pub fn matrix_csv(m: &QMatrix, row_names: &[String], col_names: &[String]) -> String {
    let mut s = String::from("curve");
    for c in col_names {
        write!(s, ",{c}").expect("string write");
    }
    s.push('\n');
    for (r, name) in row_names.iter().enumerate() {
        s.push_str(name);
        for c in 0..m.ncols() {
            write!(s, ",{}", m.get(r, c)).expect("string write");
        }
        s.push('\n');
    }
    s
}

pub fn curve_table_csv(with_delta: bool) -> String {
    let mut cols = pic_h_names();
    let m = if with_delta {
        cols.insert(0, "DeltaHat".into());
        curve_table_with_delta()
    } else {
        curve_table()
    };
    matrix_csv(&m, &curve_names(), &cols)
}

/// `g^*` with one row per `Pic(H)` generator and one column per `Pic(H̃)`
/// generator.
pub fn g_star_csv() -> String {
    matrix_csv(&g_star().transpose(), &pic_h_names(), &pic_ht_names()).replacen("curve", "divisor", 1)
}
