//! Projective geometry behind the Hecke correspondence: the identification
//! of the curve with the dual conic of the branch lines, Hecke lines on
//! `P^1 x P^1` blown up in four points, and their anchor values.
//!
//! Coordinates: the quadric is `P^1 x P^1` with affine `(u, v)`; the four
//! blown-up points are `(0,0), (1,1), (inf,inf), (p4,p5)`, and a bundle is
//! the point `x = (f4, f5)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::projective::{moebius_through, slope_at, MoebiusMap, ProjError, P1, P2};
use crate::qcore::{QMatrix, QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Proj(#[from] ProjError),
}

fn degenerate(msg: impl Into<String>) -> HeckeError {
    HeckeError::Degenerate(msg.into())
}

/// Singular-fiber parameters `{0, inf, 1, l4, l5}` of the quadric pencil.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilConfig {
    pub l4: Rational,
    pub l5: Rational,
}

impl PencilConfig {
    pub fn new(l4: Rational, l5: Rational) -> Result<Self, HeckeError> {
        let bad = [Rational::zero(), Rational::one()];
        if bad.contains(&l4) || bad.contains(&l5) || l4 == l5 {
            return Err(degenerate("need l4 != l5, both outside {0, 1}"));
        }
        Ok(PencilConfig { l4, l5 })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IotaResult {
    /// Dual conic `alpha y z + beta x z + gamma x y = 0`, scaled so that
    /// `alpha = l5 - l4`.
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    /// Parameter `v = s/t` of the five dual points under
    /// `(s:t) -> (alpha t (t-s) : beta s (s-t) : gamma s t)`.
    pub v: [P1; 5],
    /// The coordinate `u` as a function of `v`.
    pub u: MoebiusMap,
    /// `u` at the five dual points.
    pub images: [P1; 5],
}

fn conic_monomials(p: &P2) -> Vec<Rational> {
    let [x, y, z] = &p.0;
    vec![x * x, y * y, z * z, x * y, x * z, y * z]
}

fn conic_param(alpha: &Rational, beta: &Rational, gamma: &Rational, v: &P1) -> P2 {
    let (s, t) = v.homogeneous();
    P2([alpha * &t * (&t - &s), beta * &s * (&s - &t), gamma * &s * &t])
}

fn conic_preimage(alpha: &Rational, beta: &Rational, gamma: &Rational, p: &P2) -> Result<P1, HeckeError> {
    let [x, y, z] = &p.0;
    let mut candidates = vec![P1::int(0), P1::Infinity, P1::int(1)];
    if !z.is_zero() && !beta.is_zero() {
        candidates.push(P1::Finite(Rational::one() + gamma * y / (beta * z)));
    }
    let den = alpha * z + gamma * x;
    if !den.is_zero() {
        candidates.push(P1::Finite(alpha * z / den));
    }
    candidates
        .into_iter()
        .find(|v| conic_param(alpha, beta, gamma, v) == *p)
        .ok_or_else(|| degenerate(format!("{p:?} is not on the parametrized conic")))
}

/// Builds the dual conic through `(1:1:1), (1:l4:l5)` and the coordinate
/// points, parametrizes it, and returns the coordinate `u` with
/// `u(l1) = 0, u(l2) = inf, u(l3) = 1`. Fails unless `u(l4) = l4` and
/// `u(l5) = l5`.
pub fn iota_map(cfg: &PencilConfig) -> Result<IotaResult, HeckeError> {
    let one = Rational::one();
    let zero = Rational::zero();
    let pts = [
        P2([one.clone(), one.clone(), one.clone()]),
        P2([one.clone(), cfg.l4.clone(), cfg.l5.clone()]),
        P2([one.clone(), zero.clone(), zero.clone()]),
        P2([zero.clone(), one.clone(), zero.clone()]),
        P2([zero.clone(), zero.clone(), one.clone()]),
    ];
    let m = QMatrix::from_rows(pts.iter().map(conic_monomials).collect()).expect("5x6");
    let kernel = m.kernel();
    if kernel.len() != 1 {
        return Err(degenerate("dual points do not determine a unique conic"));
    }
    let k = &kernel[0];
    if !(k[0].is_zero() && k[1].is_zero() && k[2].is_zero()) {
        return Err(HeckeError::Postcondition("conic has square terms".into()));
    }
    let (gamma, beta, alpha) = (k[3].clone(), k[4].clone(), k[5].clone());
    if alpha.is_zero() {
        return Err(degenerate("conic degenerates"));
    }
    let scale = (&cfg.l5 - &cfg.l4) / &alpha;
    let (alpha, beta, gamma) = (&alpha * &scale, &beta * &scale, &gamma * &scale);

    let mut v = Vec::with_capacity(5);
    for p in &pts {
        v.push(conic_preimage(&alpha, &beta, &gamma, p)?);
    }
    let v: [P1; 5] = v.try_into().expect("five points");
    let u = moebius_through(
        &[v[0].clone(), v[1].clone(), v[2].clone()],
        &[P1::int(0), P1::Infinity, P1::int(1)],
    )?;
    let images: [P1; 5] = std::array::from_fn(|i| u.apply(&v[i]));
    if images[3] != P1::Finite(cfg.l4.clone()) || images[4] != P1::Finite(cfg.l5.clone()) {
        return Err(HeckeError::Postcondition(format!(
            "u(l4) = {}, u(l5) = {}",
            images[3], images[4]
        )));
    }
    Ok(IotaResult {
        alpha,
        beta,
        gamma,
        v,
        u,
        images,
    })
}

/// Marked points `p4, p5` (the others are `0, 1, inf`) and the bundle
/// `x = (f4, f5)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeInput {
    pub p4: Rational,
    pub p5: Rational,
    pub f4: Rational,
    pub f5: Rational,
}

impl HeckeInput {
    pub fn new(p4: Rational, p5: Rational, f4: Rational, f5: Rational) -> Result<Self, HeckeError> {
        let zero = Rational::zero();
        let one = Rational::one();
        if [&zero, &one].contains(&&p4) || [&zero, &one].contains(&&p5) || p4 == p5 {
            return Err(degenerate("marked points 0, 1, inf, p4, p5 must be distinct"));
        }
        if [&zero, &one, &p4].contains(&&f4) || [&zero, &one, &p5].contains(&&f5) {
            return Err(degenerate("need f4 outside {0, 1, p4} and f5 outside {0, 1, p5}"));
        }
        Ok(HeckeInput { p4, p5, f4, f5 })
    }

    fn x(&self) -> (P1, P1) {
        (P1::Finite(self.f4.clone()), P1::Finite(self.f5.clone()))
    }

    fn p45(&self) -> (P1, P1) {
        (P1::Finite(self.p4.clone()), P1::Finite(self.p5.clone()))
    }
}

/// The irreducible (1,1) curve through three points, as the graph of a
/// Möbius map from the first factor to the second.
pub fn one_one_through(pts: &[(P1, P1); 3]) -> Result<MoebiusMap, HeckeError> {
    let src = [pts[0].0.clone(), pts[1].0.clone(), pts[2].0.clone()];
    let dst = [pts[0].1.clone(), pts[1].1.clone(), pts[2].1.clone()];
    for i in 0..3 {
        for j in i + 1..3 {
            if src[i] == src[j] || dst[i] == dst[j] {
                return Err(degenerate("no irreducible (1,1) curve: repeated coordinate"));
            }
        }
    }
    Ok(moebius_through(&src, &dst)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchors {
    pub h0: Rational,
    pub h1: Rational,
    pub hinf: Rational,
}

fn origin() -> (P1, P1) {
    (P1::int(0), P1::int(0))
}

/// Anchor values from tangent slopes at the origin of the components
/// through `(0,0)` of the reducible members over `0`, `1`, `inf`.
pub fn hecke_anchor_values(input: &HeckeInput) -> Result<Anchors, HeckeError> {
    let x = input.x();
    let one = (P1::int(1), P1::int(1));
    let inf = (P1::Infinity, P1::Infinity);
    let zero = Rational::zero();
    let over0 = one_one_through(&[x.clone(), origin(), input.p45()])?;
    let over1 = one_one_through(&[x.clone(), origin(), inf])?;
    let over_inf = one_one_through(&[x, origin(), one])?;
    Ok(Anchors {
        h0: slope_at(&over0, &zero)?,
        h1: slope_at(&over1, &zero)?,
        hinf: slope_at(&over_inf, &zero)?,
    })
}

/// The closed forms the slope computation must reproduce.
pub fn closed_form_anchors(input: &HeckeInput) -> Result<Anchors, HeckeError> {
    let HeckeInput { p4, p5, f4, f5 } = input;
    let one = Rational::one();
    let h0 = ((p4 - f4) * p5 * f5)
        .checked_div(&(f4 * (p5 - f5) * p4))
        .map_err(|_| degenerate("h(0) pole"))?;
    let h1 = f5.checked_div(f4).map_err(|_| degenerate("h(1) pole"))?;
    let hinf = ((f4 - &one) * f5)
        .checked_div(&(f4 * (f5 - &one)))
        .map_err(|_| degenerate("h(inf) pole"))?;
    Ok(Anchors { h0, h1, hinf })
}

/// The Möbius map `p -> h(p)` through the three anchors.
pub fn hecke_line_map(input: &HeckeInput) -> Result<MoebiusMap, HeckeError> {
    let a = hecke_anchor_values(input)?;
    Ok(moebius_through(
        &[P1::int(0), P1::int(1), P1::Infinity],
        &[P1::Finite(a.h0), P1::Finite(a.h1), P1::Finite(a.hinf)],
    )?)
}

/// Monomials `u^i v^j`, `i <= m`, `j <= n`, in the order `(i, j)` lexicographic.
fn bimonomials(m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=m {
        for j in 0..=n {
            out.push((i, j));
        }
    }
    out
}

/// Values of the bihomogenized monomials at a point of `P^1 x P^1`.
fn bieval(m: usize, n: usize, u: &P1, v: &P1) -> Vec<Rational> {
    let (ux, uy) = u.homogeneous();
    let (vx, vy) = v.homogeneous();
    bimonomials(m, n)
        .into_iter()
        .map(|(i, j)| ux.pow(i as u32) * uy.pow((m - i) as u32) * vx.pow(j as u32) * vy.pow((n - j) as u32))
        .collect()
}

/// Tangent slope at the origin of the curve with the given coefficients
/// (as a point of `P^1`, so vertical tangents are `inf`).
fn slope_at_origin(m: usize, n: usize, coeffs: &QVector) -> Result<P1, HeckeError> {
    let mons = bimonomials(m, n);
    let at = |i: usize, j: usize| coeffs[mons.iter().position(|&x| x == (i, j)).expect("monomial")].clone();
    if !at(0, 0).is_zero() {
        return Err(degenerate("curve misses the origin"));
    }
    let (a10, a01) = (at(1, 0), at(0, 1));
    P1::from_homogeneous(&-a10, &a01).map_err(|_| degenerate("curve singular at the origin"))
}

/// The member over `p4` (`which = 4`) or `p5` (`which = 5`) of the pencil of
/// (2,2) curves singular at `x`: its component through the origin is the
/// (2,1), resp. (1,2), curve through `x`, the three diagonal points and
/// `(p4, p5)`. Returns that component's slope at the origin.
pub fn t_pencil_anchor(input: &HeckeInput, which: u8) -> Result<P1, HeckeError> {
    let (m, n) = match which {
        4 => (2, 1),
        5 => (1, 2),
        _ => return Err(degenerate("which must be 4 or 5")),
    };
    let x = input.x();
    let pts = [
        x,
        origin(),
        (P1::int(1), P1::int(1)),
        (P1::Infinity, P1::Infinity),
        input.p45(),
    ];
    let rows = pts.iter().map(|(u, v)| bieval(m, n, u, v)).collect();
    let kernel = QMatrix::from_rows(rows).expect("rectangular").kernel();
    if kernel.len() != 1 {
        return Err(degenerate("component not unique"));
    }
    slope_at_origin(m, n, &kernel[0])
}

/// The Hecke transform of the bundle `x` at the point `p` of the curve in
/// the direction `f`: blow up `(p, f)`, take the pencil of (3,1) curves
/// through the six points, and read off where the fibers over `p4` and
/// `p5` sit in the coordinate normalized by the fibers over `0, 1, inf`.
pub fn hecke_point(input: &HeckeInput, p: &P1, f: &P1) -> Result<(P1, P1), HeckeError> {
    let base: [(P1, P1); 6] = [
        (p.clone(), f.clone()),
        origin(),
        (P1::int(1), P1::int(1)),
        (P1::Infinity, P1::Infinity),
        (P1::Finite(input.p4.clone()), P1::Finite(input.f4.clone())),
        (P1::Finite(input.p5.clone()), P1::Finite(input.f5.clone())),
    ];
    for i in 0..6 {
        for j in i + 1..6 {
            if base[i].0 == base[j].0 {
                return Err(degenerate("two base points on one ruling"));
            }
        }
    }
    let rows = base.iter().map(|(u, v)| bieval(3, 1, u, v)).collect();
    let pencil = QMatrix::from_rows(rows).expect("rectangular").kernel();
    if pencil.len() != 2 {
        return Err(degenerate("base points do not cut out a pencil"));
    }
    // pencil coordinate of the member containing the ruling through base[k]
    let member = |k: usize| -> Result<P1, HeckeError> {
        let (c, fc) = &base[k];
        let other = match fc {
            P1::Finite(z) => P1::Finite(z + &Rational::one()),
            P1::Infinity => P1::int(0),
        };
        let ev = QVector(bieval(3, 1, c, &other));
        let (l0, l1) = (ev.dot(&pencil[0]), ev.dot(&pencil[1]));
        P1::from_homogeneous(&l1, &-l0).map_err(|_| degenerate("ruling in every member"))
    };
    let d0 = member(1)?;
    let d1 = member(2)?;
    let dinf = member(3)?;
    let phi = moebius_through(&[d0, d1, dinf], &[P1::int(0), P1::int(1), P1::Infinity])?;
    Ok((phi.apply(&member(4)?), phi.apply(&member(5)?)))
}

fn sample_directions(input: &HeckeInput, p: &P1, count: usize) -> Vec<(P1, (P1, P1))> {
    let mut out = Vec::new();
    let mut k = 1i64;
    while out.len() < count && k < 400 {
        let f = P1::Finite(Rational::new(k, 7) + Rational::new(1, 3));
        k += 1;
        if let Ok(pt) = hecke_point(input, p, &f) {
            if !out.iter().any(|(_, q): &(P1, (P1, P1))| *q == pt) {
                out.push((f, pt));
            }
        }
    }
    out
}

/// Implicit equation of the Hecke line `H_{x,p}` as a (2,2) curve, fitted
/// through exact points of the Hecke parametrization.
pub fn hecke_line_curve(input: &HeckeInput, p: &P1) -> Result<QVector, HeckeError> {
    let pts = sample_directions(input, p, 14);
    if pts.len() < 10 {
        return Err(degenerate("too few Hecke points"));
    }
    let rows = pts.iter().map(|(_, (u, v))| bieval(2, 2, u, v)).collect();
    let kernel = QMatrix::from_rows(rows).expect("rectangular").kernel();
    if kernel.len() != 1 {
        return Err(degenerate("Hecke points do not lie on a unique (2,2) curve"));
    }
    Ok(kernel[0].clone())
}

/// Independent value of `h(p)`: tangent slope at the origin of the Hecke
/// line `H_{x,p}`.
pub fn hecke_line_slope(input: &HeckeInput, p: &P1) -> Result<P1, HeckeError> {
    slope_at_origin(2, 2, &hecke_line_curve(input, p)?)
}

/// Quadratic polynomial coefficients `[c0, c1, c2]`.
pub type Quadratic = [Rational; 3];

/// Writes the two components of `f -> hecke_point(p, f)` as ratios of
/// quadratics `(A/B, C/D)` by exact interpolation.
pub fn hecke_parametrization(input: &HeckeInput, p: &P1) -> Result<[Quadratic; 4], HeckeError> {
    let pts = sample_directions(input, p, 9);
    if pts.len() < 7 {
        return Err(degenerate("too few Hecke points"));
    }
    let fit = |coord: usize| -> Result<(Quadratic, Quadratic), HeckeError> {
        let rows = pts
            .iter()
            .map(|(f, q)| {
                let fz = f.finite().expect("finite samples").clone();
                let val = if coord == 0 { &q.0 } else { &q.1 };
                let (y0, y1) = val.homogeneous();
                let pw = [Rational::one(), fz.clone(), &fz * &fz];
                // y1 * A(f) - y0 * B(f) = 0
                let mut r: Vec<Rational> = pw.iter().map(|x| x * &y1).collect();
                r.extend(pw.iter().map(|x| -(x * &y0)));
                r
            })
            .collect();
        let kernel = QMatrix::from_rows(rows).expect("rectangular").kernel();
        if kernel.len() != 1 {
            return Err(degenerate("component is not a ratio of quadratics"));
        }
        let k = &kernel[0];
        Ok((
            [k[0].clone(), k[1].clone(), k[2].clone()],
            [k[3].clone(), k[4].clone(), k[5].clone()],
        ))
    };
    let (a, b) = fit(0)?;
    let (c, d) = fit(1)?;
    Ok([a, b, c, d])
}

/// For `f -> (A/B, C/D)` with quadratic `A, B, C, D`, the image is a (2,2)
/// curve singular at `(-b/a, -d/c)` where `aA + bB + cC + dD = 0`.
pub fn singular_point_of_22(polys: &[Quadratic; 4]) -> Result<(Rational, Rational), HeckeError> {
    let cols: Vec<QVector> = polys.iter().map(|p| QVector(p.to_vec())).collect();
    let m = QMatrix::from_columns(&cols).expect("four columns of length three");
    let kernel = m.kernel();
    if kernel.len() != 1 {
        return Err(degenerate(format!("kernel has dimension {}", kernel.len())));
    }
    let k = &kernel[0];
    if k[0].is_zero() || k[2].is_zero() {
        return Err(degenerate("kernel vector has a * c = 0"));
    }
    Ok((-(&k[1] / &k[0]), -(&k[3] / &k[2])))
}
