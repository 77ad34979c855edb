//! Parameter solving: the Chern family, the Hecke integrality and kernel
//! vanishing conditions, the end-to-end pipeline with its certificate, and
//! audits of closed forms that do not satisfy the conditions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cherncalc::{parch, parch1_vector, parch2_simplified, parch_conditions, spectral_parch_ok};
use crate::divcalc::{self, alternative_classify, Alternative};
use crate::lines16::{delta_matrix, eigen_project, intersection_matrix, ones_16x5, sigma16, LinesError};
use crate::okamoto::okamoto_weights;
use crate::qcore::{q, solve_integer, solve_linear, AffineSolutionSet, QError, QMatrix, QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("infeasible: {constraint}")]
    Infeasible { constraint: String },
    #[error("expected length {expected}, got {got} for {what}")]
    BadLength {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Q(#[from] QError),
    #[error(transparent)]
    Lines(#[from] LinesError),
}

fn check_len(what: &'static str, v: &QVector, expected: usize) -> Result<(), SolverError> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(SolverError::BadLength {
            what,
            expected,
            got: v.len(),
        })
    }
}

fn infeasible(c: &str) -> SolverError {
    SolverError::Infeasible {
        constraint: c.to_string(),
    }
}

/// `δ a` as a 16-vector.
fn delta_of(v: &QVector) -> QVector {
    delta_matrix().mul_vec(v)
}

/// `(1̲ - δ) v`.
fn codelta_of(v: &QVector) -> QVector {
    (&ones_16x5() - &delta_matrix()).mul_vec(v)
}

/// Every quantity the conditions mention. `lp, lq, llc, r1, r2` and `C` are
/// determined by the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSet {
    pub a: QVector,
    pub b: QVector,
    pub n1: QVector,
    pub n2: QVector,
    #[serde(rename = "A")]
    pub big_a: QVector,
    #[serde(rename = "B")]
    pub big_b: QVector,
    #[serde(rename = "C")]
    pub big_c: QVector,
    pub d: QVector,
    pub e: QVector,
    pub lp: QVector,
    pub lq: QVector,
    pub llc: QVector,
    pub r1: QVector,
    pub r2: QVector,
}

/// The core unknowns; everything else in [`ParamSet`] is derived.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamCore {
    pub a: QVector,
    pub b: QVector,
    pub n1: QVector,
    pub n2: QVector,
    #[serde(rename = "A")]
    pub big_a: QVector,
    #[serde(rename = "B")]
    pub big_b: QVector,
    pub d: QVector,
    pub e: QVector,
}

/// `C = A + (𝕀 + 1) B`.
pub fn c_from(big_a: &QVector, big_b: &QVector) -> QVector {
    let ii = intersection_matrix();
    &(big_a + &ii.mul_vec(big_b)) + big_b
}

/// `(𝕀 + 1) B` written as `Σ_{J adj I} B_J`.
pub fn neighbor_sum_form(big_b: &QVector) -> QVector {
    let ii = intersection_matrix();
    QVector(
        (0..16)
            .map(|r| {
                (0..16)
                    .filter(|&j| j != r && !ii.get(r, j).is_zero())
                    .map(|j| big_b[j].clone())
                    .sum()
            })
            .collect(),
    )
}

impl ParamSet {
    pub fn from_core(c: &ParamCore) -> Result<ParamSet, SolverError> {
        for (w, v, n) in [
            ("a", &c.a, 5),
            ("b", &c.b, 5),
            ("n1", &c.n1, 5),
            ("n2", &c.n2, 5),
            ("A", &c.big_a, 16),
            ("B", &c.big_b, 16),
            ("d", &c.d, 16),
            ("e", &c.e, 16),
        ] {
            check_len(w, v, n)?;
        }
        let big_c = c_from(&c.big_a, &c.big_b);
        Ok(ParamSet {
            lp: &c.big_a - &c.d,
            lq: &c.big_b + &c.d,
            llc: &(&big_c + &c.e) - &c.d,
            r1: &c.a + &c.n1,
            r2: &c.b + &c.n2,
            a: c.a.clone(),
            b: c.b.clone(),
            n1: c.n1.clone(),
            n2: c.n2.clone(),
            big_a: c.big_a.clone(),
            big_b: c.big_b.clone(),
            big_c,
            d: c.d.clone(),
            e: c.e.clone(),
        })
    }

    /// `w = (1̲ - δ)(a + n_1) + δ(b + n_2)`.
    pub fn w(&self) -> QVector {
        weight_vector(&self.a, &self.b, &self.n1, &self.n2)
    }
}

/// `w = (1̲ - δ)(a + n_1) + δ(b + n_2)`.
pub fn weight_vector(a: &QVector, b: &QVector, n1: &QVector, n2: &QVector) -> QVector {
    &codelta_of(&(a + n1)) + &delta_of(&(b + n2))
}

/// Member of the Chern family: `d = σ/8 + d_5 + d_10`,
/// `e = d_10 - 3 d_5 + 5σ/8`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernSample {
    pub e: QVector,
    pub d: QVector,
    /// Inputs that had to be projected onto their eigenspace.
    pub projected_d5: bool,
    pub projected_d10: bool,
}

pub fn chern_family_sample(d5: &QVector, d10: &QVector) -> Result<ChernSample, SolverError> {
    check_len("d5", d5, 16)?;
    check_len("d10", d10, 16)?;
    let p5 = eigen_project(d5, &q(-4, 1))?;
    let p10 = eigen_project(d10, &Rational::zero())?;
    let s8 = sigma16().scale(&q(1, 8));
    let d = &(&s8 + &p5) + &p10;
    let e = &(&p10 - &p5.scale(&q(3, 1))) + &sigma16().scale(&q(5, 8));
    Ok(ChernSample {
        e,
        d,
        projected_d5: &p5 != d5,
        projected_d10: &p10 != d10,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeIntegrality {
    pub a_integral: bool,
    pub b_integral: bool,
    pub c_integral: bool,
    pub n1_integral: bool,
    pub n2_integral: bool,
    /// `A^t σ = 2`.
    pub a_sum: bool,
    /// `B^t σ = -2`.
    pub b_sum: bool,
    /// `Σ(n_1 + n_2) = -3`.
    pub n_sum: bool,
    /// Stored `C` equals `A + (𝕀 + 1)B`, and that equals the neighbor-sum form.
    pub c_consistent: bool,
    /// `lp = A - d`, `lq = B + d`, `llc = C + e - d`, `r_j = a/b + n_j`.
    pub definitions: bool,
    pub alternative: Alternative,
}

impl HeckeIntegrality {
    pub fn all_ok(&self) -> bool {
        self.a_integral
            && self.b_integral
            && self.c_integral
            && self.n1_integral
            && self.n2_integral
            && self.a_sum
            && self.b_sum
            && self.n_sum
            && self.c_consistent
            && self.definitions
            && self.alternative == Alternative::AltII
    }
}

pub fn hecke_integrality_check(p: &ParamSet) -> HeckeIntegrality {
    let s = sigma16();
    let c = c_from(&p.big_a, &p.big_b);
    let nb = &p.big_a + &neighbor_sum_form(&p.big_b);
    HeckeIntegrality {
        a_integral: p.big_a.is_integral(),
        b_integral: p.big_b.is_integral(),
        c_integral: p.big_c.is_integral(),
        n1_integral: p.n1.is_integral(),
        n2_integral: p.n2.is_integral(),
        a_sum: p.big_a.dot(&s) == q(2, 1),
        b_sum: p.big_b.dot(&s) == q(-2, 1),
        n_sum: (&p.n1 + &p.n2).sum() == q(-3, 1),
        c_consistent: p.big_c == c && c == nb,
        definitions: p.lp == &p.big_a - &p.d
            && p.lq == &p.big_b + &p.d
            && p.llc == &(&p.big_c + &p.e) - &p.d
            && p.r1 == &p.a + &p.n1
            && p.r2 == &p.b + &p.n2,
        alternative: alternative_classify(&p.lp, &p.d, &p.e),
    }
}

/// The 49 kernel conditions in the unknowns `(lp, lq, llc, r_1, r_2)`:
/// `𝕀 lp + (1̲-δ) r_1 + δ r_2`, `𝕀 lq + (1̲-δ) r_1 + δ r_2`, `Σ(r_1 + r_2)`,
/// `lp + lq - llc + δ r_1 + (1̲-δ) r_2`. This is the curve table.
pub fn kernel_constraints_matrix() -> QMatrix {
    divcalc::curve_table()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelSolution {
    pub w: QVector,
    /// `w` lies in the image of `𝕀`.
    pub w_in_image: bool,
    /// All `d` with `𝕀(A - d) + w = 0` and `𝕀(B + d) + w = 0`.
    pub d: AffineSolutionSet,
}

/// Solves the kernel system for `d` given the rest. The scalar condition
/// `Σ(a + n_1 + b + n_2) = 0` is checked first.
pub fn kernel_vanishing_solve(
    a: &QVector,
    b: &QVector,
    n1: &QVector,
    n2: &QVector,
    big_a: &QVector,
    big_b: &QVector,
) -> Result<KernelSolution, SolverError> {
    for (w, v, n) in [
        ("a", a, 5),
        ("b", b, 5),
        ("n1", n1, 5),
        ("n2", n2, 5),
        ("A", big_a, 16),
        ("B", big_b, 16),
    ] {
        check_len(w, v, n)?;
    }
    let scalar = &(&(a + n1) + b) + n2;
    if !scalar.sum().is_zero() {
        return Err(SolverError::Inconsistent(format!(
            "sum(a + n1 + b + n2) = {}, must be 0",
            scalar.sum()
        )));
    }
    let w = weight_vector(a, b, n1, n2);
    let ii = intersection_matrix();
    let m = ii.vstack(&ii)?;
    let rhs = (&ii.mul_vec(big_a) + &w).concat(&-(&ii.mul_vec(big_b) + &w));
    let d = solve_linear(&m, &rhs)?;
    let w_in_image = solve_linear(&ii, &w)?.consistent;
    Ok(KernelSolution { w, w_in_image, d })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AuditStatus {
    Pass,
    Discrepancy,
}

/// One audited closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub id: String,
    pub description: String,
    pub status: AuditStatus,
    pub residual: String,
}

impl AuditEntry {
    fn new(id: &str, description: &str, residual: &QVector) -> AuditEntry {
        AuditEntry {
            id: id.into(),
            description: description.into(),
            status: if residual.is_zero() {
                AuditStatus::Pass
            } else {
                AuditStatus::Discrepancy
            },
            residual: residual.to_string(),
        }
    }
}

/// Residual of both kernel equations at `(A, B, d)`, stacked.
fn kernel_residual(big_a: &QVector, big_b: &QVector, d: &QVector, w: &QVector) -> QVector {
    let ii = intersection_matrix();
    (&ii.mul_vec(&(big_a - d)) + w).concat(&(&ii.mul_vec(&(big_b + d)) + w))
}

/// Substitutes the printed readings of the kernel solution into the
/// kernel system, with `A_4 = σ/8`, `B_4 = -σ/8` and `A_0 = B_0 = 0`.
pub fn stated_solution_audit(a: &QVector, b: &QVector, n1: &QVector, n2: &QVector) -> Vec<AuditEntry> {
    let w = weight_vector(a, b, n1, n2);
    let s8 = sigma16().scale(&q(1, 8));
    let quarter = q(1, 4);
    // exact: A_5 + B_5 = ½w, d_5 = ½(A_5 - B_5)
    let exact_a5 = w.scale(&quarter);
    let exact = kernel_residual(
        &(&s8 + &exact_a5),
        &(&-&s8 + &exact_a5),
        &(&s8 + &QVector::zeros(16)),
        &w,
    );

    // printed sum, read as ¼ w
    let sum_quarter = w.scale(&quarter);
    let a5 = sum_quarter.scale(&q(1, 2));
    let r_quarter = kernel_residual(&(&s8 + &a5), &(&-&s8 + &a5), &s8, &w);

    // printed sum, read as ¼(1̲-δ)(a+n_1) + δ(b+n_2)
    let mixed = &codelta_of(&(a + n1)).scale(&quarter) + &delta_of(&(b + n2));
    let a5m = mixed.scale(&q(1, 2));
    let r_mixed = kernel_residual(&(&s8 + &a5m), &(&-&s8 + &a5m), &s8, &w);

    // exact A_5 = B_5 = ¼w with the printed d_5 = ½(A_5 + B_5)
    let d5_half_sum = &exact_a5 + &QVector::zeros(16);
    let r_d5 = kernel_residual(&(&s8 + &exact_a5), &(&-&s8 + &exact_a5), &(&s8 + &d5_half_sum), &w);

    vec![
        AuditEntry::new("kernel.exact-solution", "A5+B5 = w/2, d5 = (A5-B5)/2", &exact),
        AuditEntry::new(
            "kernel.stated-sum-quarter",
            "A5+B5 = w/4 with d5 = (A5-B5)/2",
            &r_quarter,
        ),
        AuditEntry::new(
            "kernel.stated-sum-mixed",
            "A5+B5 = (1-delta)(a+n1)/4 + delta(b+n2) with d5 = (A5-B5)/2",
            &r_mixed,
        ),
        AuditEntry::new("kernel.stated-d5-half-sum", "A5 = B5 = w/4 with d5 = (A5+B5)/2", &r_d5),
    ]
}

/// The simplified `d_5 = ⅛(1̲ - 5δ)a` is compared against the −4 eigenspace.
pub fn okamoto_d5_audit(a: &QVector) -> AuditEntry {
    let v = okamoto_weights(a);
    let r = &intersection_matrix().mul_vec(&v) + &v.scale(&q(4, 1));
    AuditEntry::new("okamoto.d5-eigenvector", "I d5 + 4 d5 for d5 = (1 - 5 delta) a / 8", &r)
}

/// With `n_1 = 0`, `n_2 = -(a + b)` the variant `Σ(n_2 - n_1) = 3` is
/// compared against `Σ(n_1 + n_2) = -3`, which the pipeline uses.
pub fn n_sum_variant_audit(a: &QVector, b: &QVector) -> AuditEntry {
    let n2 = -(a + b);
    let variant = n2.sum() - q(3, 1);
    let used = n2.sum() + q(3, 1);
    AuditEntry {
        id: "hecke.sum-n-variant".into(),
        description: "sum(n2 - n1) - 3 at n1 = 0, n2 = -(a+b)".into(),
        status: if variant.is_zero() {
            AuditStatus::Pass
        } else {
            AuditStatus::Discrepancy
        },
        residual: format!("{variant} (sum(n1 + n2) + 3 = {used})"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thm14Report {
    pub e: QVector,
    pub d: QVector,
    /// `𝕀(e + 3d - σ)`.
    pub linear_residual: QVector,
    /// `-3δā + 12(1̲-δ)b̄`.
    pub predicted_residual: QVector,
    pub matches_prediction: bool,
    pub quadratic_residual: Rational,
    pub linear_ok: bool,
    pub quadratic_ok: bool,
    /// `P_4 d = σ/8`.
    pub d_spectral_part_ok: bool,
    /// `e - d` has a non-integral coordinate, as alternative (ii) needs.
    pub e_minus_d_nonintegral: bool,
    pub entry: AuditEntry,
}

fn fract(v: &QVector) -> QVector {
    v.map(Rational::fract_part)
}

/// `e = 5σ/8 - ⅜(1̲-δ)ā + 3/2 δb̄`, `d = σ/8 - ⅛(1̲-δ)ā + ½ δb̄` with
/// `ā = a - ⌊a⌋`, tested against the parabolic Chern and Hecke conditions.
pub fn thm14_audit(a: &QVector, b: &QVector) -> Result<Thm14Report, SolverError> {
    check_len("a", a, 5)?;
    check_len("b", b, 5)?;
    let (ab, bb) = (fract(a), fract(b));
    let s = sigma16();
    let ca = codelta_of(&ab);
    let db = delta_of(&bb);
    let e = &(&s.scale(&q(5, 8)) - &ca.scale(&q(3, 8))) + &db.scale(&q(3, 2));
    let d = &(&s.scale(&q(1, 8)) - &ca.scale(&q(1, 8))) + &db.scale(&q(1, 2));
    let linear_residual = parch1_vector(&e, &d);
    let predicted_residual = &delta_of(&ab).scale(&q(-3, 1)) + &codelta_of(&bb).scale(&q(12, 1));
    let quadratic_residual = parch2_simplified(&e, &d);
    let conds = parch_conditions(&e, &d);
    let p4 = eigen_project(&d, &q(4, 1))?;
    let entry = AuditEntry::new(
        "thm14.linear-residual",
        "I(e + 3d - sigma) for the closed-form e, d",
        &linear_residual,
    );
    Ok(Thm14Report {
        matches_prediction: linear_residual == predicted_residual,
        linear_ok: conds.linear,
        quadratic_ok: conds.quadratic,
        d_spectral_part_ok: p4 == s.scale(&q(1, 8)),
        e_minus_d_nonintegral: !(&e - &d).is_integral(),
        e,
        d,
        linear_residual,
        predicted_residual,
        quadratic_residual,
        entry,
    })
}

/// Optional inputs to the pipeline; `None` selects the default.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineChoices {
    /// Default `0`.
    pub n1: Option<QVector>,
    /// Default `-(a + b)`, which needs `a + b` integral.
    pub n2: Option<QVector>,
    #[serde(rename = "A")]
    pub big_a: Option<QVector>,
    #[serde(rename = "B")]
    pub big_b: Option<QVector>,
    /// Eigenspace-0 part of `d`, default `0`.
    pub d10: Option<QVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub checks: Vec<CertificateCheck>,
}

impl Certificate {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Every check the pipeline certifies, on a given parameter set.
pub fn certify(p: &ParamSet) -> Certificate {
    let mut checks = Vec::new();
    let mut push = |name: &str, ok: bool| checks.push(CertificateCheck { name: name.into(), ok });
    push("spectral parch: sum(a + b) = 3", spectral_parch_ok(&p.a, &p.b));
    let conds = parch_conditions(&p.e, &p.d);
    push("parch linear: I(e + 3d - sigma) = 0", conds.linear);
    push("parch quadratic", conds.quadratic);
    push("parch by integration equals 4", parch(&p.e, &p.d).is_target());
    let hi = hecke_integrality_check(p);
    push(
        "A, B, C, n1, n2 integral",
        hi.a_integral && hi.b_integral && hi.c_integral && hi.n1_integral && hi.n2_integral,
    );
    push("sigma sums of A, B, n", hi.a_sum && hi.b_sum && hi.n_sum);
    push("C and derived quantities consistent", hi.c_consistent && hi.definitions);
    push("alternative (ii)", hi.alternative == Alternative::AltII);
    push(
        "kernel class vanishes on the 49 curves",
        divcalc::is_numerically_zero(&divcalc::kernel_class(p)),
    );
    let ja = divcalc::jump_audit(p);
    push("Hecke divisor zero at the representative level", ja.representative_zero);
    push("Hecke divisor constant across all walls", ja.walls.iter().all(|w| w.ok));
    Certificate { checks }
}

/// From spectral weights to a full parameter set with a certificate.
pub fn pipeline(a: &QVector, b: &QVector, choices: &PipelineChoices) -> Result<(ParamSet, Certificate), SolverError> {
    check_len("a", a, 5)?;
    check_len("b", b, 5)?;
    if !spectral_parch_ok(a, b) {
        return Err(infeasible("sum(a + b) = 3"));
    }
    let n1 = choices.n1.clone().unwrap_or_else(|| QVector::zeros(5));
    let n2 = match &choices.n2 {
        Some(v) => v.clone(),
        None => {
            let ab = a + b;
            if !ab.is_integral() {
                return Err(infeasible("a + b integral for the default n2 = -(a + b)"));
            }
            -ab
        }
    };
    check_len("n1", &n1, 5)?;
    check_len("n2", &n2, 5)?;
    if !(n1.is_integral() && n2.is_integral()) {
        return Err(infeasible("n1, n2 integral"));
    }
    if (&n1 + &n2).sum() != q(-3, 1) {
        return Err(infeasible("sum(n1 + n2) = -3"));
    }
    let w = weight_vector(a, b, &n1, &n2);
    let ii = intersection_matrix();
    let target = w.scale(&q(-2, 1));
    let (big_a, big_b) = match (&choices.big_a, &choices.big_b) {
        (Some(x), Some(y)) => (x.clone(), y.clone()),
        (x, y) => {
            let (s, _) =
                solve_integer(&ii, &target)?.ok_or_else(|| infeasible("A + B integral with I(A + B) = -2w"))?;
            match (x, y) {
                (Some(x), None) => (x.clone(), &s - x),
                (None, Some(y)) => (&s - y, y.clone()),
                _ => {
                    let mut a0 = QVector::zeros(16);
                    a0[0] = q(2, 1);
                    let b0 = &s - &a0;
                    (a0, b0)
                }
            }
        }
    };
    check_len("A", &big_a, 16)?;
    check_len("B", &big_b, 16)?;
    if !(big_a.is_integral() && big_b.is_integral()) {
        return Err(infeasible("A, B integral"));
    }
    if big_a.dot(&sigma16()) != q(2, 1) {
        return Err(infeasible("A^t sigma = 2"));
    }
    if big_b.dot(&sigma16()) != q(-2, 1) {
        return Err(infeasible("B^t sigma = -2"));
    }
    if ii.mul_vec(&(&big_a + &big_b)) != target {
        return Err(infeasible("I(A + B) = -2w"));
    }
    let ks = kernel_vanishing_solve(a, b, &n1, &n2, &big_a, &big_b)?;
    if !ks.d.consistent {
        return Err(infeasible("kernel system for d"));
    }
    let d10 = match &choices.d10 {
        Some(v) => {
            check_len("d10", v, 16)?;
            eigen_project(v, &Rational::zero())?
        }
        None => QVector::zeros(16),
    };
    let p = &ks.d.particular;
    let d5 = eigen_project(p, &q(-4, 1))?;
    let d = &(&eigen_project(p, &q(4, 1))? + &d5) + &d10;
    let e = &(&d10 - &d5.scale(&q(3, 1))) + &sigma16().scale(&q(5, 8));
    let ps = ParamSet::from_core(&ParamCore {
        a: a.clone(),
        b: b.clone(),
        n1,
        n2,
        big_a,
        big_b,
        d,
        e,
    })?;
    let cert = certify(&ps);
    Ok((ps, cert))
}

/// Weights `a = (½,½,½,⅓,⅓)`, `b = (½,½,½,-⅓,-⅓)`.
pub fn worked_weights() -> (QVector, QVector) {
    let h = q(1, 2);
    let t = q(1, 3);
    (
        QVector(vec![h.clone(), h.clone(), h.clone(), t.clone(), t.clone()]),
        QVector(vec![h.clone(), h.clone(), h, -&t, -&t]),
    )
}

/// Ids of every entry [`audit_registry`] is expected to flag.
pub const DOCUMENTED_DISCREPANCIES: [&str; 8] = [
    "thm14.linear-residual",
    "kernel.stated-sum-quarter",
    "kernel.stated-sum-mixed",
    "kernel.stated-d5-half-sum",
    "okamoto.d5-eigenvector",
    "hecke.sum-n-variant",
    "divisors.abh-identity",
    "pipeline.worked-weights",
];

/// Runs every audit at the worked weights.
pub fn audit_registry() -> Result<Vec<AuditEntry>, SolverError> {
    let (a, b) = worked_weights();
    let n1 = QVector::zeros(5);
    let n2 = -(&a + &b);
    let mut out = vec![thm14_audit(&a, &b)?.entry];
    out.extend(stated_solution_audit(&a, &b, &n1, &n2));
    out.push(okamoto_d5_audit(&a));
    out.push(n_sum_variant_audit(&a, &b));
    let abh = divcalc::abh_audit();
    out.push(AuditEntry::new(
        "divisors.abh-identity",
        "g*omega_q + g_Z*LpE minus the printed g_Z* pullback",
        &abh.residual,
    ));
    out.push(match pipeline(&a, &b, &PipelineChoices::default()) {
        Ok((_, cert)) => AuditEntry {
            id: "pipeline.worked-weights".into(),
            description: "pipeline at the worked weights".into(),
            status: if cert.all_ok() {
                AuditStatus::Pass
            } else {
                AuditStatus::Discrepancy
            },
            residual: format!("certificate all_ok = {}", cert.all_ok()),
        },
        Err(e) => AuditEntry {
            id: "pipeline.worked-weights".into(),
            description: "pipeline at the worked weights".into(),
            status: AuditStatus::Discrepancy,
            residual: e.to_string(),
        },
    });
    Ok(out)
}
