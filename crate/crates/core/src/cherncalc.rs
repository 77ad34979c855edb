//! Cohomology classes on the spectral cover `Y` and on `X`, the Chern
//! characters of `M_{T,T}` and `F_T = f_* M_{T,T}`, and the parabolic Chern
//! character of `F_•` by exact integration over the level cube.
//!
//! Divisor parts are coefficient vectors: on `Y` over `(E_I, G_I)` (32
//! entries), on `X` over the lines `L_I` (16 entries).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lines16::{intersection_matrix, lines_combination, PicXClass};
use crate::qcore::{q, QMatrix, QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("cannot combine classes on {0:?} and {1:?}")]
    TagMismatch(Surface, Surface),
    #[error("expected a class on {expected:?}, got {got:?}")]
    WrongSurface { expected: Surface, got: Surface },
    #[error("divisor part has length {got}, expected {expected}")]
    BadLength { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Surface {
    Y,
    X,
}

impl Surface {
    pub fn divisor_len(self) -> usize {
        match self {
            Surface::Y => 32,
            Surface::X => 16,
        }
    }

    /// Intersection form on the divisor generators.
    pub fn pairing(self) -> QMatrix {
        let ii = intersection_matrix();
        match self {
            Surface::X => ii,
            Surface::Y => {
                let one = QMatrix::identity(16);
                let ee = one.scale(&q(-1, 1));
                let ge = &one.scale(&q(2, 1)) + &ii;
                let gg = one.scale(&q(-4, 1));
                let top = ee.hstack(&ge).expect("16 rows");
                let bottom = ge.hstack(&gg).expect("16 rows");
                top.vstack(&bottom).expect("32 columns")
            }
        }
    }
}

/// `rank * 1 + divisor + pt * [pt]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub surface: Surface,
    pub rank: Rational,
    pub divisor: QVector,
    pub pt: Rational,
}

impl SurfaceClass {
    pub fn new(surface: Surface, rank: Rational, divisor: QVector, pt: Rational) -> Result<Self, ChernError> {
        if divisor.len() != surface.divisor_len() {
            return Err(ChernError::BadLength {
                expected: surface.divisor_len(),
                got: divisor.len(),
            });
        }
        Ok(SurfaceClass {
            surface,
            rank,
            divisor,
            pt,
        })
    }

    pub fn one(surface: Surface) -> Self {
        SurfaceClass {
            surface,
            rank: Rational::one(),
            divisor: QVector::zeros(surface.divisor_len()),
            pt: Rational::zero(),
        }
    }

    /// Class of the divisor `E a + G b` on `Y`.
    pub fn y_divisor(e_part: &QVector, g_part: &QVector) -> Self {
        SurfaceClass {
            surface: Surface::Y,
            rank: Rational::zero(),
            divisor: e_part.concat(g_part),
            pt: Rational::zero(),
        }
    }

    /// Class of the divisor `L v` on `X`.
    pub fn x_divisor(v: &QVector) -> Self {
        SurfaceClass {
            surface: Surface::X,
            rank: Rational::zero(),
            divisor: v.clone(),
            pt: Rational::zero(),
        }
    }

    pub fn add(&self, o: &SurfaceClass) -> Result<SurfaceClass, ChernError> {
        if self.surface != o.surface {
            return Err(ChernError::TagMismatch(self.surface, o.surface));
        }
        Ok(SurfaceClass {
            surface: self.surface,
            rank: &self.rank + &o.rank,
            divisor: &self.divisor + &o.divisor,
            pt: &self.pt + &o.pt,
        })
    }

    pub fn scale(&self, c: &Rational) -> SurfaceClass {
        SurfaceClass {
            surface: self.surface,
            rank: &self.rank * c,
            divisor: self.divisor.scale(c),
            pt: &self.pt * c,
        }
    }

    /// Equality in cohomology: on `X` the lines are dependent, so divisor
    /// parts are compared through the intersection form.
    pub fn same_class(&self, o: &SurfaceClass) -> bool {
        if self.surface != o.surface || self.rank != o.rank || self.pt != o.pt {
            return false;
        }
        let diff = &self.divisor - &o.divisor;
        match self.surface {
            Surface::Y => diff.is_zero(),
            Surface::X => intersection_matrix().mul_vec(&diff).is_zero(),
        }
    }

    /// The divisor part of a class on `X` in the blow-up basis.
    pub fn divisor_class(&self) -> Option<PicXClass> {
        (self.surface == Surface::X).then(|| lines_combination(&self.divisor))
    }
}

/// Degree-graded product, truncated at the point class.
pub fn mult_surface(a: &SurfaceClass, b: &SurfaceClass) -> Result<SurfaceClass, ChernError> {
    if a.surface != b.surface {
        return Err(ChernError::TagMismatch(a.surface, b.surface));
    }
    let form = a.surface.pairing();
    let dd = a.divisor.dot(&form.mul_vec(&b.divisor));
    Ok(SurfaceClass {
        surface: a.surface,
        rank: &a.rank * &b.rank,
        divisor: &a.divisor.scale(&b.rank) + &b.divisor.scale(&a.rank),
        pt: &a.rank * &b.pt + &b.rank * &a.pt + dd,
    })
}

/// `exp(D) = 1 + D + D^2/2` for a divisor class `D`.
pub fn exp_divisor(d: &SurfaceClass) -> Result<SurfaceClass, ChernError> {
    let sq = mult_surface(d, d)?;
    let mut out = SurfaceClass::one(d.surface).add(d)?;
    out.pt = &out.pt + &sq.pt * q(1, 2);
    Ok(out)
}

fn sigma() -> QVector {
    QVector::constant(16, Rational::one())
}

/// `Td(Y) = 1 - E sigma / 2`.
pub fn todd_y() -> SurfaceClass {
    SurfaceClass::y_divisor(&sigma().scale(&q(-1, 2)), &QVector::zeros(16))
        .add(&SurfaceClass::one(Surface::Y))
        .expect("same surface")
}

/// `Td(X)^{-1} = 1 - L sigma / 8`.
pub fn todd_x_inv() -> SurfaceClass {
    SurfaceClass::x_divisor(&sigma().scale(&q(-1, 8)))
        .add(&SurfaceClass::one(Surface::X))
        .expect("same surface")
}

/// Pushforward along the degree-4 cover `f: Y -> X`: `E_I -> L_I`,
/// `G_I -> 2 L_I`.
pub fn pushforward_f(c: &SurfaceClass) -> Result<SurfaceClass, ChernError> {
    if c.surface != Surface::Y {
        return Err(ChernError::WrongSurface {
            expected: Surface::Y,
            got: c.surface,
        });
    }
    let e = c.divisor.slice(0, 16);
    let g = c.divisor.slice(16, 32);
    Ok(SurfaceClass {
        surface: Surface::X,
        rank: &c.rank * q(4, 1),
        divisor: &e + &g.scale(&q(2, 1)),
        pt: c.pt.clone(),
    })
}

fn floors(t: &QVector, x: &QVector) -> QVector {
    (t + x).floor()
}

/// `ch(M_{T,T})` as printed.
pub fn ch_m(e: &QVector, d: &QVector, t: &QVector) -> SurfaceClass {
    let fe = floors(t, e);
    let fd = floors(t, d);
    let ii = intersection_matrix();
    let diff = &fe - &fd;
    let pt = (-diff.dot(&diff) + q(2, 1) * (&fe + &fd).dot(&ii.mul_vec(&fd))) * q(1, 2);
    SurfaceClass {
        surface: Surface::Y,
        rank: Rational::one(),
        divisor: (&fe + &fd).concat(&fd),
        pt,
    }
}

/// `ch(M_{T,T})` computed as the exponential of `E 𝖊 + (E + G) 𝖉`.
pub fn ch_m_exp(e: &QVector, d: &QVector, t: &QVector) -> SurfaceClass {
    let fe = floors(t, e);
    let fd = floors(t, d);
    exp_divisor(&SurfaceClass::y_divisor(&(&fe + &fd), &fd)).expect("class on Y")
}

/// `ch(F_T)` as printed.
pub fn ch_f(e: &QVector, d: &QVector, t: &QVector) -> SurfaceClass {
    let fe = floors(t, e);
    let fd = floors(t, d);
    let s = sigma();
    let ii = intersection_matrix();
    let diff = &fe - &fd;
    let pt =
        (q(-8, 1) * fd.dot(&s) - diff.dot(&diff) + q(2, 1) * (&fe + &fd).dot(&ii.mul_vec(&fd)) + q(8, 1)) * q(1, 2);
    SurfaceClass {
        surface: Surface::X,
        rank: q(4, 1),
        divisor: &(&fe + &fd.scale(&q(3, 1))) - &s,
        pt,
    }
}

/// `Td(X)^{-1} f_*[ch(M_{T,T}) Td(Y)]`.
pub fn ch_f_grr(e: &QVector, d: &QVector, t: &QVector) -> SurfaceClass {
    let up = mult_surface(&ch_m_exp(e, d, t), &todd_y()).expect("classes on Y");
    let down = pushforward_f(&up).expect("class on Y");
    mult_surface(&todd_x_inv(), &down).expect("classes on X")
}

/// Per-coordinate integrands on `[-d_I, 1 - d_I]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Atom {
    One,
    T,
    FloorE,
    FloorD,
}

/// `∫_{-d}^{1-d} prod(atoms)(t) dt`, split at every floor discontinuity.
pub fn interval_integral(atoms: &[Atom], e: &Rational, d: &Rational) -> Rational {
    let lo = -d;
    let hi = Rational::one() - d;
    let mut cuts = vec![lo.clone(), hi.clone()];
    for shift in [e, d] {
        // t + shift is an integer at t = n - shift
        let mut n = (&lo + shift).floor() + Rational::one();
        while &n - shift < hi {
            cuts.push(&n - shift);
            n += Rational::one();
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut total = Rational::zero();
    for w in cuts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let mid = (a + b) * q(1, 2);
        let mut coef = Rational::one();
        let mut degree = 0u32;
        for atom in atoms {
            match atom {
                Atom::One => {}
                Atom::T => degree += 1,
                Atom::FloorE => coef = coef * (&mid + e).floor(),
                Atom::FloorD => coef = coef * (&mid + d).floor(),
            }
        }
        let k = Rational::int(i64::from(degree) + 1);
        total += coef * (b.pow(degree + 1) - a.pow(degree + 1)) / k;
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Moment {
    One,
    T,
    T2,
    Floor,
    Floor2,
    FloorT,
}

/// Closed-form moments over `[-d, 1-d]`, where `⌊t + e⌋` jumps once, at
/// `t* = ⌊e - d⌋ + 1 - e`.
pub fn cube_moment(kind: Moment, e: &Rational, d: &Rational) -> Rational {
    let one = Rational::one();
    let lo = -d;
    let hi = &one - d;
    let k = (e - d).floor();
    let k1 = &k + &one;
    let ts = &k1 - e;
    match kind {
        Moment::One => one,
        Moment::T => q(1, 2) - d,
        Moment::T2 => (hi.pow(3) - lo.pow(3)) / q(3, 1),
        Moment::Floor => &k * (&ts - &lo) + &k1 * (&hi - &ts),
        Moment::Floor2 => &k * &k * (&ts - &lo) + &k1 * &k1 * (&hi - &ts),
        Moment::FloorT => (&k * (ts.pow(2) - lo.pow(2)) + &k1 * (hi.pow(2) - ts.pow(2))) * q(1, 2),
    }
}

/// A monomial `coef * prod (coordinate, atom)` in the 16 level variables.
#[derive(Debug, Clone)]
struct Term {
    coef: Rational,
    factors: Vec<(usize, Atom)>,
}

fn term(coef: Rational, factors: &[(usize, Atom)]) -> Term {
    Term {
        coef,
        factors: factors.to_vec(),
    }
}

fn integrate_terms(terms: &[Term], e: &QVector, d: &QVector) -> Rational {
    let mut cache: HashMap<(usize, Vec<Atom>), Rational> = HashMap::new();
    let mut total = Rational::zero();
    for t in terms {
        if t.coef.is_zero() {
            continue;
        }
        let mut coords: Vec<usize> = t.factors.iter().map(|f| f.0).collect();
        coords.sort_unstable();
        coords.dedup();
        let mut v = t.coef.clone();
        for c in coords {
            let mut atoms: Vec<Atom> = t.factors.iter().filter(|f| f.0 == c).map(|f| f.1).collect();
            atoms.sort_unstable();
            let m = cache
                .entry((c, atoms))
                .or_insert_with_key(|(c, atoms)| interval_integral(atoms, &e[*c], &d[*c]));
            v *= &*m;
        }
        total += v;
    }
    total
}

/// Point coefficient of `ch(F_T) exp(-L T)` expanded into monomials.
fn degree_two_terms() -> Vec<Term> {
    use Atom::*;
    let ii = intersection_matrix();
    let mut out = vec![term(q(4, 1), &[])];
    for i in 0..16 {
        out.push(term(q(-4, 1), &[(i, FloorD)]));
        out.push(term(q(-1, 2), &[(i, FloorE), (i, FloorE)]));
        out.push(term(q(1, 1), &[(i, FloorE), (i, FloorD)]));
        out.push(term(q(-1, 2), &[(i, FloorD), (i, FloorD)]));
        for j in 0..16 {
            let c = ii.get(i, j).clone();
            if c.is_zero() {
                continue;
            }
            out.push(term(c.clone(), &[(i, FloorE), (j, FloorD)]));
            out.push(term(c.clone(), &[(i, FloorD), (j, FloorD)]));
            out.push(term(-c.clone(), &[(i, FloorE), (j, T)]));
            out.push(term(&c * q(-3, 1), &[(i, FloorD), (j, T)]));
            out.push(term(c.clone(), &[(j, T)]));
            out.push(term(&c * q(2, 1), &[(i, T), (j, T)]));
        }
    }
    out
}

fn t_it_terms() -> Vec<Term> {
    let ii = intersection_matrix();
    let mut out = Vec::new();
    for i in 0..16 {
        for j in 0..16 {
            let c = ii.get(i, j).clone();
            if !c.is_zero() {
                out.push(term(c, &[(i, Atom::T), (j, Atom::T)]));
            }
        }
    }
    out
}

/// `∫_{C(d)} T^t 𝕀 T` by factorized exact integration.
pub fn integral_t_it(d: &QVector) -> Rational {
    integrate_terms(&t_it_terms(), d, d)
}

/// `∫_{C(d)} ⌊T + e⌋` and `∫_{C(d)} T`, per coordinate.
pub fn integral_floor_and_t(e: &QVector, d: &QVector) -> (QVector, QVector) {
    let fe = (0..16)
        .map(|i| interval_integral(&[Atom::FloorE], &e[i], &d[i]))
        .collect();
    let t = (0..16).map(|i| interval_integral(&[Atom::T], &e[i], &d[i])).collect();
    (QVector(fe), QVector(t))
}

/// Exact values of `∫ 2 T^t 𝕀 T`, `∫ -½ 𝖊^2` and `∫ -(𝖊 - σ)^t 𝕀 T` over `C(d)`.
pub fn cube_integrals(e: &QVector, d: &QVector) -> [Rational; 3] {
    use Atom::*;
    let ii = intersection_matrix();
    let tit = integral_t_it(d) * q(2, 1);
    let a2: Vec<Term> = (0..16).map(|i| term(q(-1, 2), &[(i, FloorE), (i, FloorE)])).collect();
    let mut ams = Vec::new();
    for i in 0..16 {
        for j in 0..16 {
            let c = ii.get(i, j).clone();
            if !c.is_zero() {
                ams.push(term(-c.clone(), &[(i, FloorE), (j, T)]));
                ams.push(term(c, &[(j, T)]));
            }
        }
    }
    [tit, integrate_terms(&a2, e, d), integrate_terms(&ams, e, d)]
}

/// `88/3 - 8 σ^t d + 2 d^t 𝕀 d`.
pub fn eq_tit(d: &QVector) -> Rational {
    let s = sigma();
    let ii = intersection_matrix();
    q(88, 3) - q(8, 1) * s.dot(d) + q(2, 1) * d.dot(&ii.mul_vec(d))
}

/// `½⌊e-d⌋^2 - ½⌊e-d⌋^t(2e - 2d - σ) - ½(e-d)^t σ`.
pub fn eq_a2(e: &QVector, d: &QVector) -> Rational {
    let s = sigma();
    let diff = e - d;
    let fl = diff.floor();
    let w = &diff.scale(&q(2, 1)) - &s;
    (fl.dot(&fl) - fl.dot(&w) - diff.dot(&s)) * q(1, 2)
}

/// Closed form of `∫ -(𝖊 - σ)^t 𝕀 T` over `C(d)`.
pub fn eq_aminussigma(e: &QVector, d: &QVector) -> Rational {
    let s = sigma();
    let ii = intersection_matrix();
    let diff = e - d;
    let fl = diff.floor();
    let w = &diff.scale(&q(2, 1)) - &s;
    (-fl.dot(&fl) + fl.dot(&w) - diff.dot(&diff)) * q(1, 2) + e.dot(&ii.mul_vec(d))
        - d.dot(&ii.mul_vec(d))
        - q(3, 2) * e.dot(&s)
        - q(5, 2) * d.dot(&s)
        + q(32, 1)
}

/// Parabolic Chern character of `F_•` against its target `4 · 1_X`:
/// `parch0` is the rank, `parch1` and `parch2` are the degree-one and
/// degree-two discrepancies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parch {
    pub parch0: Rational,
    /// Coefficients over the lines.
    pub parch1: QVector,
    pub parch2: Rational,
}

impl Parch {
    pub fn parch1_class(&self) -> PicXClass {
        lines_combination(&self.parch1)
    }

    pub fn parch1_vanishes(&self) -> bool {
        intersection_matrix().mul_vec(&self.parch1).is_zero()
    }

    pub fn is_target(&self) -> bool {
        self.parch0 == q(4, 1) && self.parch1_vanishes() && self.parch2.is_zero()
    }
}

/// Integrates `ch(F_T) exp(-LT)` over `C(d)` and subtracts `4` times the
/// integral of `exp(-LT)` over `[0,1]^16`.
pub fn parch(e: &QVector, d: &QVector) -> Parch {
    let zero = QVector::zeros(16);
    let rank: Rational = (0..16)
        .map(|i| interval_integral(&[Atom::One], &e[i], &d[i]))
        .fold(q(4, 1), |acc, x| acc * x);
    let lhs1: QVector = QVector(
        (0..16)
            .map(|i| {
                let (ei, di) = (&e[i], &d[i]);
                interval_integral(&[Atom::FloorE], ei, di) + q(3, 1) * interval_integral(&[Atom::FloorD], ei, di)
                    - Rational::one()
                    - q(4, 1) * interval_integral(&[Atom::T], ei, di)
            })
            .collect(),
    );
    let (_, t0) = integral_floor_and_t(&zero, &zero);
    let rhs1 = t0.scale(&q(-4, 1));
    let lhs2 = integrate_terms(&degree_two_terms(), e, d);
    let rhs2 = integral_t_it(&zero) * q(2, 1);
    Parch {
        parch0: rank,
        parch1: &lhs1 - &rhs1,
        parch2: lhs2 - rhs2,
    }
}

/// `36 - ½(e-d)^2 + e^t 𝕀 d + d^t 𝕀 d - (2e + 10d)^t σ`.
pub fn parch2_unsimplified(e: &QVector, d: &QVector) -> Rational {
    let s = sigma();
    let ii = intersection_matrix();
    let diff = e - d;
    let id = ii.mul_vec(d);
    q(36, 1) - diff.dot(&diff) * q(1, 2) + e.dot(&id) + d.dot(&id) - (&e.scale(&q(2, 1)) + &d.scale(&q(10, 1))).dot(&s)
}

/// `36 - ½(e-d)^2 - 2 d^t 𝕀 d - (2e + 6d)^t σ`.
pub fn parch2_simplified(e: &QVector, d: &QVector) -> Rational {
    let s = sigma();
    let ii = intersection_matrix();
    let diff = e - d;
    q(36, 1)
        - diff.dot(&diff) * q(1, 2)
        - q(2, 1) * d.dot(&ii.mul_vec(d))
        - (&e.scale(&q(2, 1)) + &d.scale(&q(6, 1))).dot(&s)
}

/// `𝕀(e + 3d - σ)`.
pub fn parch1_vector(e: &QVector, d: &QVector) -> QVector {
    intersection_matrix().mul_vec(&(&(e + &d.scale(&q(3, 1))) - &sigma()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParchConditions {
    pub linear: bool,
    pub quadratic: bool,
    /// Simplified and unsimplified quadratics agree (only meaningful when
    /// the linear condition holds).
    pub forms_agree: bool,
}

pub fn parch_conditions(e: &QVector, d: &QVector) -> ParchConditions {
    let linear = parch1_vector(e, d).is_zero();
    let simplified = parch2_simplified(e, d);
    ParchConditions {
        linear,
        quadratic: simplified.is_zero(),
        forms_agree: !linear || simplified == parch2_unsimplified(e, d),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicParams {
    pub e: QVector,
    pub d: QVector,
}

/// Weights `(a, b)` of the eigenvalue line bundle; the level `(s, t)` bundle
/// has divisor coefficients `(⌊s + a⌋, ⌊t + b⌋)` at the marked points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralLevelData {
    pub a: QVector,
    pub b: QVector,
}

impl SpectralLevelData {
    pub fn level(&self, s: &QVector, t: &QVector) -> (QVector, QVector) {
        ((s + &self.a).floor(), (t + &self.b).floor())
    }
}

/// `Σ (a_i + b_i) = 3`.
pub fn spectral_parch_ok(a: &QVector, b: &QVector) -> bool {
    (a + b).sum() == q(3, 1)
}
