//! Rational points of the projective line and fractional-linear maps.
//! Infinity is the homogeneous point `(1:0)`; a finite `z` is `(z:1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::qcore::{QError, QMatrix, QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjError {
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("point {0} is a pole")]
    Pole(P1),
    #[error(transparent)]
    Q(#[from] QError),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum P1 {
    Finite(Rational),
    Infinity,
}

impl P1 {
    pub fn fin(x: Rational) -> P1 {
        P1::Finite(x)
    }

    pub fn int(n: i64) -> P1 {
        P1::Finite(Rational::int(n))
    }

    /// From homogeneous coordinates `(x:y)`, meaning `x/y`.
    pub fn from_homogeneous(x: &Rational, y: &Rational) -> Result<P1, ProjError> {
        if y.is_zero() {
            if x.is_zero() {
                return Err(ProjError::Degenerate("(0:0) is not a point".into()));
            }
            Ok(P1::Infinity)
        } else {
            Ok(P1::Finite(x / y))
        }
    }

    /// Homogeneous coordinates `(x, y)` with value `x/y`.
    pub fn homogeneous(&self) -> (Rational, Rational) {
        match self {
            P1::Finite(z) => (z.clone(), Rational::one()),
            P1::Infinity => (Rational::one(), Rational::zero()),
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            P1::Finite(z) => Some(z),
            P1::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, P1::Infinity)
    }
}

impl fmt::Display for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Finite(z) => write!(f, "{z}"),
            P1::Infinity => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for P1 {
    type Err = QError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            Ok(P1::Infinity)
        } else {
            t.parse().map(P1::Finite)
        }
    }
}

impl From<Rational> for P1 {
    fn from(x: Rational) -> Self {
        P1::Finite(x)
    }
}

impl Serialize for P1 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for P1 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(P1::int(n)),
        }
    }
}

/// `z -> (a z + b) / (c z + d)` with `ad - bc != 0`. Equality is projective.
#[derive(Clone, Serialize, Deserialize)]
pub struct MoebiusMap {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl MoebiusMap {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, ProjError> {
        let m = MoebiusMap { a, b, c, d };
        if m.det().is_zero() {
            return Err(ProjError::Degenerate("singular Möbius matrix".into()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        MoebiusMap {
            a: Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    pub fn det(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, z: &P1) -> P1 {
        let (x, y) = z.homogeneous();
        let nx = &self.a * &x + &self.b * &y;
        let ny = &self.c * &x + &self.d * &y;
        P1::from_homogeneous(&nx, &ny).expect("nonsingular map sends points to points")
    }

    pub fn compose(&self, inner: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: &self.a * &inner.a + &self.b * &inner.c,
            b: &self.a * &inner.b + &self.b * &inner.d,
            c: &self.c * &inner.a + &self.d * &inner.c,
            d: &self.c * &inner.b + &self.d * &inner.d,
        }
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Same map up to scale.
    pub fn equivalent(&self, o: &MoebiusMap) -> bool {
        let s = [&self.a, &self.b, &self.c, &self.d];
        let t = [&o.a, &o.b, &o.c, &o.d];
        (0..4).all(|i| (0..4).all(|j| s[i] * t[j] == s[j] * t[i]))
    }

    /// Scaled so the first nonzero of `(c, d)` equals 1.
    pub fn normalized(&self) -> MoebiusMap {
        let s = if !self.c.is_zero() {
            self.c.clone()
        } else {
            self.d.clone()
        };
        let inv = s.recip().expect("c and d are not both zero");
        MoebiusMap {
            a: &self.a * &inv,
            b: &self.b * &inv,
            c: &self.c * &inv,
            d: &self.d * &inv,
        }
    }
}

impl fmt::Debug for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        write!(f, "z -> ({} z + {}) / ({} z + {})", n.a, n.b, n.c, n.d)
    }
}

impl PartialEq for MoebiusMap {
    fn eq(&self, o: &Self) -> bool {
        self.equivalent(o)
    }
}

/// Map sending `0, 1, inf` to `z1, z2, z3`.
fn frame(z: &[P1; 3]) -> Result<MoebiusMap, ProjError> {
    let (x1, y1) = z[0].homogeneous();
    let (x2, y2) = z[1].homogeneous();
    let (x3, y3) = z[2].homogeneous();
    // alpha * Z1 + beta * Z3 = Z2
    let det = &x1 * &y3 - &x3 * &y1;
    if det.is_zero() {
        return Err(ProjError::Degenerate("coincident points".into()));
    }
    let alpha = (&x2 * &y3 - &x3 * &y2) / &det;
    let beta = (&x1 * &y2 - &x2 * &y1) / &det;
    let m = MoebiusMap {
        a: &beta * &x3,
        b: &alpha * &x1,
        c: &beta * &y3,
        d: &alpha * &y1,
    };
    if m.det().is_zero() {
        return Err(ProjError::Degenerate("coincident points".into()));
    }
    Ok(m)
}

/// The unique Möbius map with `src[k] -> dst[k]` for k = 0, 1, 2.
pub fn moebius_through(src: &[P1; 3], dst: &[P1; 3]) -> Result<MoebiusMap, ProjError> {
    let s = frame(src)?;
    let t = frame(dst)?;
    Ok(t.compose(&s.inverse()))
}

/// Derivative of a Möbius map at a finite non-pole point.
pub fn slope_at(m: &MoebiusMap, z: &Rational) -> Result<Rational, ProjError> {
    let den = &m.c * z + &m.d;
    if den.is_zero() {
        return Err(ProjError::Pole(P1::Finite(z.clone())));
    }
    Ok(m.det() / (&den * &den))
}

/// Whether `(x, y)` lies on the graph `y = m(x)`.
pub fn on_graph(m: &MoebiusMap, x: &P1, y: &P1) -> bool {
    &m.apply(x) == y
}

/// Points of the projective plane, up to scale.
#[derive(Clone, Serialize, Deserialize)]
pub struct P2(pub [Rational; 3]);

impl P2 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Result<P2, ProjError> {
        if x.is_zero() && y.is_zero() && z.is_zero() {
            return Err(ProjError::Degenerate("(0:0:0) is not a point".into()));
        }
        Ok(P2([x, y, z]))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<P2, ProjError> {
        Self::new(Rational::int(x), Rational::int(y), Rational::int(z))
    }

    pub fn to_vector(&self) -> QVector {
        QVector(self.0.to_vec())
    }
}

impl PartialEq for P2 {
    fn eq(&self, o: &Self) -> bool {
        let a = &self.0;
        let b = &o.0;
        (0..3).all(|i| (0..3).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }
}

impl Eq for P2 {}

impl fmt::Debug for P2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Determinant of three points of the plane; zero iff they are collinear.
pub fn det3(a: &P2, b: &P2, c: &P2) -> Rational {
    let m = QMatrix::from_rows(vec![a.0.to_vec(), b.0.to_vec(), c.0.to_vec()]).expect("three rows of length three");
    m.det().expect("square")
}
