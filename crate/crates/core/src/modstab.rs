//! Stability of rank-2 parabolic bundles on the projective line with five
//! marked points, for balanced weights, in each weight chamber.
//!
//! Degree 0, `V = O + O`: a configuration is five points `(p_i, f_i)` of
//! `P^1 x P^1`; irreducible (1,1) curves are graphs of Möbius maps.
//! Degree 1, `V = O + O(1)`: `P(V)` is the plane blown up at `pt`; flags are
//! points `F_i` on five distinct lines through `pt`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::projective::{det3, on_graph, MoebiusMap, ProjError, P1, P2};
use crate::qcore::{q, QMatrix, QVector, Rational};

pub use crate::projective::moebius_through;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabError {
    #[error("q = {0} is outside (0, 1)")]
    OutOfRange(Rational),
    #[error("q = {0} lies on a wall; only chamber interiors are decided")]
    Wall(Rational),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("weights are not balanced")]
    Unbalanced,
    #[error("configuration is not stable at q = 1/2")]
    NotStable,
    #[error(transparent)]
    Proj(#[from] ProjError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Chamber {
    C1,
    C2,
    C3,
    C4,
    Wall,
}

/// Even-degree chambers `(0,2/5], (2/5,2/3], (2/3,4/5], (4/5,1)`; the three
/// boundary values are reported as `Wall`.
pub fn chamber_of(qv: &Rational) -> Result<Chamber, StabError> {
    if !qv.is_positive() || *qv >= Rational::one() {
        return Err(StabError::OutOfRange(qv.clone()));
    }
    let walls = [q(2, 5), q(2, 3), q(4, 5)];
    if walls.contains(qv) {
        return Ok(Chamber::Wall);
    }
    Ok(if *qv < walls[0] {
        Chamber::C1
    } else if *qv < walls[1] {
        Chamber::C2
    } else if *qv < walls[2] {
        Chamber::C3
    } else {
        Chamber::C4
    })
}

/// Degree and weight vectors of a parabolic bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTriple {
    pub d: i64,
    pub a: QVector,
    pub b: QVector,
}

impl WeightTriple {
    pub fn balanced(d: i64, a: Rational, b: Rational) -> Self {
        WeightTriple {
            d,
            a: QVector::constant(5, a),
            b: QVector::constant(5, b),
        }
    }
}

/// The equivalent degree-0 parameter `q` with weights `(0, q)`: `b - a` for
/// even degree and `a - b + 1` for odd degree.
pub fn normalize_moduli(w: &WeightTriple) -> Result<Rational, StabError> {
    if w.a.len() != 5 || w.b.len() != 5 {
        return Err(StabError::InvalidConfig("weights need five entries".into()));
    }
    let a = &w.a[0];
    let b = &w.b[0];
    if w.a.iter().any(|x| x != a) || w.b.iter().any(|x| x != b) {
        return Err(StabError::Unbalanced);
    }
    Ok(if w.d.rem_euclid(2) == 0 {
        b - a
    } else {
        a - b + Rational::one()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Stable,
    Unstable(Violation),
}

impl Verdict {
    pub fn is_stable(&self) -> bool {
        matches!(self, Verdict::Stable)
    }
}

/// The first violated condition, in table order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Three or more flags on one (1,0) ruling.
    ThreeOnRuling(Vec<usize>),
    /// All five points on one Möbius graph.
    FiveOnGraph,
    /// Four points on one Möbius graph.
    FourOnGraph(Vec<usize>),
    /// No stable configurations exist in this chamber.
    EmptyChamber,
    /// Degree 1: some flag equals the base point.
    FlagAtBasePoint(Vec<usize>),
    /// Degree 1: more than one flag equals the base point.
    TwoFlagsAtBasePoint(Vec<usize>),
    /// Degree 1: all five flags collinear.
    FiveCollinear,
    /// Degree 1: four flags collinear.
    FourCollinear(Vec<usize>),
    /// Degree 1: all five flags on a smooth conic through the base point.
    FiveOnConicThroughBase,
    /// Degree 0, `O(-1)+O(1)`: a flag on the (-2)-curve.
    OnNegativeCurve(Vec<usize>),
    /// Degree 0, `O(-1)+O(1)`: five flags on one irreducible section curve.
    FiveOnSection,
    /// Degree 0, `O(-1)+O(1)`: four flags on one irreducible section curve.
    FourOnSection(Vec<usize>),
}

/// Five marked points and five flags for `V = O + O`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagConfig0 {
    pub points: [P1; 5],
    pub flags: [P1; 5],
}

impl FlagConfig0 {
    pub fn new(points: [P1; 5], flags: [P1; 5]) -> Result<Self, StabError> {
        for i in 0..5 {
            for j in i + 1..5 {
                if points[i] == points[j] {
                    return Err(StabError::InvalidConfig(format!(
                        "marked points {} and {} coincide",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(FlagConfig0 { points, flags })
    }

    /// Applies `g` to every flag.
    pub fn reparametrize_flags(&self, g: &MoebiusMap) -> FlagConfig0 {
        FlagConfig0 {
            points: self.points.clone(),
            flags: std::array::from_fn(|i| g.apply(&self.flags[i])),
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn three_coincident_flags(cfg: &FlagConfig0) -> Option<Vec<usize>> {
    subsets(5, 3)
        .into_iter()
        .find(|s| cfg.flags[s[0]] == cfg.flags[s[1]] && cfg.flags[s[1]] == cfg.flags[s[2]])
}

/// Whether the points with indices `idx` all lie on the graph of one Möbius
/// map. Needs distinct flags (the marked points are distinct already).
fn on_common_graph(cfg: &FlagConfig0, idx: &[usize]) -> bool {
    for (n, &i) in idx.iter().enumerate() {
        for &j in &idx[n + 1..] {
            if cfg.flags[i] == cfg.flags[j] {
                return false;
            }
        }
    }
    let src = [
        cfg.points[idx[0]].clone(),
        cfg.points[idx[1]].clone(),
        cfg.points[idx[2]].clone(),
    ];
    let dst = [
        cfg.flags[idx[0]].clone(),
        cfg.flags[idx[1]].clone(),
        cfg.flags[idx[2]].clone(),
    ];
    let g = moebius_through(&src, &dst).expect("distinct points and distinct flags");
    idx[3..].iter().all(|&k| on_graph(&g, &cfg.points[k], &cfg.flags[k]))
}

pub fn four_on_graph(cfg: &FlagConfig0) -> Option<Vec<usize>> {
    subsets(5, 4).into_iter().find(|s| on_common_graph(cfg, s))
}

pub fn five_on_graph(cfg: &FlagConfig0) -> bool {
    on_common_graph(cfg, &[0, 1, 2, 3, 4])
}

/// Stability for degree 0, weights `(0, q)`, `V = O + O`.
pub fn is_stable_deg0_k0(cfg: &FlagConfig0, qv: &Rational) -> Result<Verdict, StabError> {
    let ch = chamber_of(qv)?;
    if ch == Chamber::Wall {
        return Err(StabError::Wall(qv.clone()));
    }
    if ch == Chamber::C4 {
        return Ok(Verdict::Unstable(Violation::EmptyChamber));
    }
    if let Some(s) = three_coincident_flags(cfg) {
        return Ok(Verdict::Unstable(Violation::ThreeOnRuling(s)));
    }
    if ch == Chamber::C1 {
        return Ok(Verdict::Stable);
    }
    if five_on_graph(cfg) {
        return Ok(Verdict::Unstable(Violation::FiveOnGraph));
    }
    if ch == Chamber::C3 {
        if let Some(s) = four_on_graph(cfg) {
            return Ok(Verdict::Unstable(Violation::FourOnGraph(s)));
        }
    }
    Ok(Verdict::Stable)
}

/// Degree-0 configurations on `V = O(-1) + O(1)`, in an affine chart where
/// irreducible curves of `|O_V(1) x O_C(1)|` are graphs of polynomials of
/// degree at most 2 and the (-2)-curve is the section at infinity. Marked
/// points must be finite in this encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagConfigK1 {
    pub points: [Rational; 5],
    /// `Infinity` marks a flag on the (-2)-curve.
    pub flags: [P1; 5],
}

fn on_common_quadratic(points: &[Rational; 5], flags: &[P1; 5], idx: &[usize]) -> bool {
    if idx.iter().any(|&i| flags[i].is_infinity()) {
        return false;
    }
    let rows: Vec<Vec<Rational>> = idx
        .iter()
        .map(|&i| {
            let x = &points[i];
            vec![
                Rational::one(),
                x.clone(),
                x * x,
                flags[i].finite().expect("finite").clone(),
            ]
        })
        .collect();
    // the points lie on one quadratic graph iff [1 x x^2 y] is rank deficient
    QMatrix::from_rows(rows).expect("rectangular").rank() <= 3
}

/// Stability for degree 0 on the `O(-1) + O(1)` stratum. Unstable in the
/// first and last chambers.
pub fn is_stable_deg0_k1(cfg: &FlagConfigK1, qv: &Rational) -> Result<Verdict, StabError> {
    let ch = chamber_of(qv)?;
    let on_neg: Vec<usize> = (0..5).filter(|&i| cfg.flags[i].is_infinity()).collect();
    match ch {
        Chamber::Wall => Err(StabError::Wall(qv.clone())),
        Chamber::C1 | Chamber::C4 => Ok(Verdict::Unstable(Violation::EmptyChamber)),
        Chamber::C2 => {
            if !on_neg.is_empty() {
                return Ok(Verdict::Unstable(Violation::OnNegativeCurve(on_neg)));
            }
            if on_common_quadratic(&cfg.points, &cfg.flags, &[0, 1, 2, 3, 4]) {
                return Ok(Verdict::Unstable(Violation::FiveOnSection));
            }
            Ok(Verdict::Stable)
        }
        Chamber::C3 => {
            if on_neg.len() > 1 {
                return Ok(Verdict::Unstable(Violation::OnNegativeCurve(on_neg)));
            }
            if let Some(s) = subsets(5, 4)
                .into_iter()
                .find(|s| on_common_quadratic(&cfg.points, &cfg.flags, s))
            {
                return Ok(Verdict::Unstable(Violation::FourOnSection(s)));
            }
            Ok(Verdict::Stable)
        }
    }
}

/// Degree-1 configuration in the plane model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagConfig1 {
    pub base: P2,
    /// A point other than `base` on each line.
    pub directions: [P2; 5],
    pub flags: [P2; 5],
}

impl FlagConfig1 {
    pub fn new(base: P2, directions: [P2; 5], flags: [P2; 5]) -> Result<Self, StabError> {
        for i in 0..5 {
            if directions[i] == base {
                return Err(StabError::InvalidConfig(format!("line {} has no direction", i + 1)));
            }
            if !det3(&base, &directions[i], &flags[i]).is_zero() {
                return Err(StabError::InvalidConfig(format!("flag {} is off its line", i + 1)));
            }
            for j in 0..i {
                if det3(&base, &directions[i], &directions[j]).is_zero() {
                    return Err(StabError::InvalidConfig(format!(
                        "lines {} and {} coincide",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(FlagConfig1 {
            base,
            directions,
            flags,
        })
    }
}

/// Degree-1 chambers `[0,1/5), [1/5,1/3), [1/3,3/5), (3/5,1)`; the values
/// 1/5, 1/3 and 3/5 are treated as walls.
pub fn chamber_of_deg1(qv: &Rational) -> Result<usize, StabError> {
    if qv.is_negative() || *qv >= Rational::one() {
        return Err(StabError::OutOfRange(qv.clone()));
    }
    let walls = [q(1, 5), q(1, 3), q(3, 5)];
    if walls.contains(qv) {
        return Err(StabError::Wall(qv.clone()));
    }
    Ok(walls.iter().filter(|w| *qv > **w).count() + 1)
}

fn collinear_subset(flags: &[P2; 5], k: usize) -> Option<Vec<usize>> {
    subsets(5, k).into_iter().find(|s| {
        // all points of the subset on one line: rank of their coordinates <= 2
        let rows = s.iter().map(|&i| flags[i].0.to_vec()).collect();
        QMatrix::from_rows(rows).expect("rectangular").rank() <= 2
    })
}

/// Whether the five flags and the base point lie on a smooth conic.
fn five_on_smooth_conic_through_base(cfg: &FlagConfig1) -> bool {
    let mut pts: Vec<&P2> = cfg.flags.iter().collect();
    pts.push(&cfg.base);
    let rows: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| {
            let [x, y, z] = &p.0;
            vec![x * x, y * y, z * z, x * y, x * z, y * z]
        })
        .collect();
    let kernel = QMatrix::from_rows(rows).expect("rectangular").kernel();
    // six points on two independent conics share a line, so every member of
    // a larger family is singular
    if kernel.len() != 1 {
        return false;
    }
    let k = &kernel[0];
    let h = q(1, 2);
    let sym = QMatrix::from_rows(vec![
        vec![k[0].clone(), &k[3] * &h, &k[4] * &h],
        vec![&k[3] * &h, k[1].clone(), &k[5] * &h],
        vec![&k[4] * &h, &k[5] * &h, k[2].clone()],
    ])
    .expect("3x3");
    !sym.det().expect("square").is_zero()
}

/// Stability for degree 1, weights `(0, q)`, `V = O + O(1)`.
pub fn is_stable_deg1(cfg: &FlagConfig1, qv: &Rational) -> Result<Verdict, StabError> {
    let ch = chamber_of_deg1(qv)?;
    let at_base: Vec<usize> = (0..5).filter(|&i| cfg.flags[i] == cfg.base).collect();
    match ch {
        1 => Ok(Verdict::Unstable(Violation::EmptyChamber)),
        2 => {
            if !at_base.is_empty() {
                return Ok(Verdict::Unstable(Violation::FlagAtBasePoint(at_base)));
            }
            if collinear_subset(&cfg.flags, 5).is_some() {
                return Ok(Verdict::Unstable(Violation::FiveCollinear));
            }
            Ok(Verdict::Stable)
        }
        _ => {
            if at_base.len() > 1 {
                return Ok(Verdict::Unstable(Violation::TwoFlagsAtBasePoint(at_base)));
            }
            if let Some(s) = collinear_subset(&cfg.flags, 4) {
                return Ok(Verdict::Unstable(Violation::FourCollinear(s)));
            }
            if ch == 4 && five_on_smooth_conic_through_base(cfg) {
                return Ok(Verdict::Unstable(Violation::FiveOnConicThroughBase));
            }
            Ok(Verdict::Stable)
        }
    }
}

/// Binary form `sum c_k s^k t^(n-k)` on the marked curve, coefficients by
/// increasing power of `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryForm(pub Vec<Rational>);

impl BinaryForm {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// The linear form vanishing at `p`.
    pub fn vanishing_at(p: &P1) -> BinaryForm {
        let (x, y) = p.homogeneous();
        // y s - x t vanishes at (s:t) = (x:y)
        BinaryForm(vec![-x, y])
    }

    pub fn mul(&self, o: &BinaryForm) -> BinaryForm {
        BinaryForm(crate::qcore::poly_mul(&self.0, &o.0))
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm(self.0.iter().map(|x| x * c).collect())
    }

    pub fn sub(&self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.0.len(), o.0.len(), "forms of different degree");
        BinaryForm(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.0.len(), o.0.len(), "forms of different degree");
        BinaryForm(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn eval(&self, p: &P1) -> Rational {
        let (s, t) = p.homogeneous();
        let n = self.degree() as u32;
        self.0
            .iter()
            .enumerate()
            .map(|(k, c)| c * &s.pow(k as u32) * t.pow(n - k as u32))
            .sum()
    }
}

/// A traceless nilpotent Higgs field `theta = a * [[bc, -b^2], [c^2, -bc]]`
/// with a cubic `a` and constants `b, c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentField {
    pub a: BinaryForm,
    pub b: Rational,
    pub c: Rational,
    /// The coincident flag pair used to build the field.
    pub pair: (usize, usize),
}

impl NilpotentField {
    /// Entries `[[t11, t12], [t21, t22]]` as cubic forms.
    pub fn theta(&self) -> [[BinaryForm; 2]; 2] {
        let (b, c) = (&self.b, &self.c);
        [
            [self.a.scale(&(b * c)), self.a.scale(&-(b * b))],
            [self.a.scale(&(c * c)), self.a.scale(&-(b * c))],
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum WobblyWitness {
    /// Two coincident flags: an explicit nilpotent field.
    Case1(NilpotentField),
    /// Four points on a Möbius graph: a linear-`a` nilpotent field exists.
    Case2 {
        four: Vec<usize>,
    },
    VeryStableCandidate,
}

/// Looks for a nonzero nilpotent Higgs field on a configuration stable at
/// `q = 1/2`.
pub fn wobbly_witness(cfg: &FlagConfig0) -> Result<WobblyWitness, StabError> {
    if !is_stable_deg0_k0(cfg, &q(1, 2))?.is_stable() {
        return Err(StabError::NotStable);
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if cfg.flags[i] == cfg.flags[j] {
                let (b, c) = cfg.flags[i].homogeneous();
                let a = (0..5)
                    .filter(|&k| k != i && k != j)
                    .map(|k| BinaryForm::vanishing_at(&cfg.points[k]))
                    .fold(BinaryForm(vec![Rational::one()]), |acc, f| acc.mul(&f));
                return Ok(WobblyWitness::Case1(NilpotentField { a, b, c, pair: (i, j) }));
            }
        }
    }
    if let Some(four) = four_on_graph(cfg) {
        return Ok(WobblyWitness::Case2 { four });
    }
    Ok(WobblyWitness::VeryStableCandidate)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub nonzero: bool,
    pub det_vanishes: bool,
    pub square_vanishes: bool,
    pub preserves_flags: bool,
}

impl WitnessCheck {
    pub fn ok(&self) -> bool {
        self.nonzero && self.det_vanishes && self.square_vanishes && self.preserves_flags
    }
}

/// Checks a Case-1 field against a configuration, on the polynomial data.
pub fn verify_witness(cfg: &FlagConfig0, w: &NilpotentField) -> WitnessCheck {
    let t = w.theta();
    let nonzero = t.iter().flatten().any(|f| !f.is_zero());
    let det = t[0][0].mul(&t[1][1]).sub(&t[0][1].mul(&t[1][0]));
    let mut square_vanishes = true;
    for r in 0..2 {
        for c in 0..2 {
            let e = t[r][0].mul(&t[0][c]).add(&t[r][1].mul(&t[1][c]));
            square_vanishes &= e.is_zero();
        }
    }
    let preserves_flags = (0..5).all(|k| {
        let (x, y) = cfg.flags[k].homogeneous();
        let p = &cfg.points[k];
        let r0 = t[0][0].eval(p) * &x + t[0][1].eval(p) * &y;
        let r1 = t[1][0].eval(p) * &x + t[1][1].eval(p) * &y;
        r0.is_zero() && r1.is_zero()
    });
    WitnessCheck {
        nonzero,
        det_vanishes: det.is_zero(),
        square_vanishes,
        preserves_flags,
    }
}
