//! Labels of the 16 lines on the quartic del Pezzo surface X, the
//! intersection matrix, its spectral projectors, and a Picard model of X as
//! the blow-up of the plane in five points.
//!
//! Labels are even subsets of {1..5}, encoded as 5-bit masks (bit i-1 for
//! element i). The odd labels used for the same lines elsewhere are their
//! complements.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::qcore::{q, QMatrix, QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinesError {
    #[error("label {0:?} is not a subset of {{1..5}}")]
    OutOfRange(Vec<u8>),
    #[error("label {0:?} has odd cardinality")]
    OddParity(Vec<u8>),
    #[error("index {0} is outside 1..=6")]
    BadIndex(u8),
    #[error("no eigenvalue {0} in the spectrum {{4, -4, 0}}")]
    NotAnEigenvalue(Rational),
}

/// An even-cardinality subset of {1,..,5}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineLabel(u8);

/// An odd-cardinality subset of {1,..,5}; the complement of a [`LineLabel`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddLabel(u8);

fn elems_of(mask: u8) -> Vec<u8> {
    (1..=5).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

fn mask_of(elems: &[u8]) -> Result<u8, LinesError> {
    let mut m = 0u8;
    for &e in elems {
        if !(1..=5).contains(&e) {
            return Err(LinesError::OutOfRange(elems.to_vec()));
        }
        m ^= 1 << (e - 1);
    }
    Ok(m)
}

impl LineLabel {
    pub const EMPTY: LineLabel = LineLabel(0);

    pub fn from_mask(mask: u8) -> Result<Self, LinesError> {
        if mask >= 32 {
            return Err(LinesError::OutOfRange(elems_of(mask & 31)));
        }
        if !mask.count_ones().is_multiple_of(2) {
            return Err(LinesError::OddParity(elems_of(mask)));
        }
        Ok(LineLabel(mask))
    }

    /// Repeated elements cancel, as in symmetric difference.
    pub fn from_elems(elems: &[u8]) -> Result<Self, LinesError> {
        Self::from_mask(mask_of(elems)?)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn elems(self) -> Vec<u8> {
        elems_of(self.0)
    }

    pub fn contains(self, i: u8) -> bool {
        (1..=5).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// All 16 labels in canonical order (increasing mask value).
    pub fn all() -> [LineLabel; 16] {
        let mut out = [LineLabel(0); 16];
        let mut k = 0;
        for m in 0u8..32 {
            if m.count_ones() % 2 == 0 {
                out[k] = LineLabel(m);
                k += 1;
            }
        }
        out
    }

    /// Position in the canonical order.
    pub fn index(self) -> usize {
        (0..self.0).filter(|m: &u8| m.count_ones().is_multiple_of(2)).count()
    }

    pub fn from_index(i: usize) -> LineLabel {
        Self::all()[i]
    }

    pub fn xor(self, other: LineLabel) -> LineLabel {
        LineLabel(self.0 ^ other.0)
    }

    pub fn complement(self) -> OddLabel {
        OddLabel(self.0 ^ 31)
    }

    /// `I + i`: symmetric difference with `underline(i)`.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, i: u8) -> Result<LineLabel, LinesError> {
        Ok(self.xor(underline(i)?))
    }
}

impl OddLabel {
    pub fn from_elems(elems: &[u8]) -> Result<Self, LinesError> {
        let m = mask_of(elems)?;
        if m.count_ones() % 2 == 0 {
            return Err(LinesError::OddParity(elems_of(m)));
        }
        Ok(OddLabel(m))
    }

    pub fn elems(self) -> Vec<u8> {
        elems_of(self.0)
    }

    pub fn complement(self) -> LineLabel {
        LineLabel(self.0 ^ 31)
    }
}

impl fmt::Debug for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elems())
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.elems();
        if e.is_empty() {
            write!(f, "{{}}")
        } else {
            let s: Vec<String> = e.iter().map(u8::to_string).collect();
            write!(f, "{{{}}}", s.join(","))
        }
    }
}

impl fmt::Debug for OddLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elems())
    }
}

impl Serialize for LineLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elems().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<u8>::deserialize(d)?;
        LineLabel::from_elems(&v).map_err(serde::de::Error::custom)
    }
}

/// `underline(i)`: zero for i = 6, otherwise the set {1..5} minus {i}.
pub fn underline(i: u8) -> Result<LineLabel, LinesError> {
    match i {
        1..=5 => Ok(LineLabel(31 ^ (1 << (i - 1)))),
        6 => Ok(LineLabel(0)),
        _ => Err(LinesError::BadIndex(i)),
    }
}

pub fn label_add(label: LineLabel, i: u8) -> Result<LineLabel, LinesError> {
    label.add(i)
}

/// 1 if `i` is in `label`, else 0.
pub fn incidence_delta(label: LineLabel, i: u8) -> Result<u8, LinesError> {
    if !(1..=5).contains(&i) {
        return Err(LinesError::BadIndex(i));
    }
    Ok(u8::from(label.contains(i)))
}

/// The 16x5 incidence matrix with entries `incidence_delta(I, i)`.
pub fn delta_matrix() -> QMatrix {
    let labels = LineLabel::all();
    QMatrix::from_fn(16, 5, |r, c| Rational::int(i64::from(labels[r].contains(c as u8 + 1))))
}

/// The 16x5 all-ones matrix.
pub fn ones_16x5() -> QMatrix {
    QMatrix::from_fn(16, 5, |_, _| Rational::one())
}

/// `J` is adjacent to `I` when `J = I + i` for some `i` in 1..5.
pub fn adjacent(a: LineLabel, b: LineLabel) -> bool {
    (1..=5).any(|i| a.add(i).map(|x| x == b).unwrap_or(false))
}

/// The intersection matrix: -1 on the diagonal, 1 for adjacent labels.
pub fn intersection_matrix() -> QMatrix {
    let labels = LineLabel::all();
    QMatrix::from_fn(16, 16, |r, c| {
        if r == c {
            Rational::int(-1)
        } else if adjacent(labels[r], labels[c]) {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

pub fn sigma16() -> QVector {
    QVector::constant(16, Rational::one())
}

/// Spectral projector of the intersection matrix onto the eigenvalue
/// 4, -4 or 0, by Lagrange interpolation on the spectrum.
pub fn projector(eigenvalue: &Rational) -> Result<QMatrix, LinesError> {
    let m = intersection_matrix();
    let id = QMatrix::identity(16);
    let m2 = &m * &m;
    let p = if *eigenvalue == Rational::int(4) {
        (&m2 + &m.scale(&Rational::int(4))).scale(&q(1, 32))
    } else if *eigenvalue == Rational::int(-4) {
        (&m2 - &m.scale(&Rational::int(4))).scale(&q(1, 32))
    } else if eigenvalue.is_zero() {
        (&id.scale(&Rational::int(16)) - &m2).scale(&q(1, 16))
    } else {
        return Err(LinesError::NotAnEigenvalue(eigenvalue.clone()));
    };
    Ok(p)
}

pub fn eigen_project(v: &QVector, eigenvalue: &Rational) -> Result<QVector, LinesError> {
    Ok(projector(eigenvalue)?.mul_vec(v))
}

/// Class in the Picard group of X, in the blow-up basis `(h; x1..x5)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PicXClass(pub [Rational; 6]);

impl PicXClass {
    pub fn zero() -> Self {
        PicXClass(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        PicXClass(c.map(Rational::int))
    }

    pub fn h() -> Self {
        Self::from_ints([1, 0, 0, 0, 0, 0])
    }

    /// Exceptional class `x_i`, i in 1..5.
    pub fn x(i: usize) -> Self {
        let mut c = [0; 6];
        c[i] = 1;
        Self::from_ints(c)
    }

    pub fn add(&self, o: &PicXClass) -> PicXClass {
        PicXClass(std::array::from_fn(|k| &self.0[k] + &o.0[k]))
    }

    pub fn sub(&self, o: &PicXClass) -> PicXClass {
        PicXClass(std::array::from_fn(|k| &self.0[k] - &o.0[k]))
    }

    pub fn scale(&self, c: &Rational) -> PicXClass {
        PicXClass(std::array::from_fn(|k| &self.0[k] * c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn to_vector(&self) -> QVector {
        QVector(self.0.to_vec())
    }

    pub fn from_vector(v: &QVector) -> PicXClass {
        assert_eq!(v.len(), 6, "PicX vectors have 6 coordinates");
        PicXClass(std::array::from_fn(|k| v[k].clone()))
    }
}

impl fmt::Debug for PicXClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {}, {}, {}, {}, {})",
            self.0[0], self.0[1], self.0[2], self.0[3], self.0[4], self.0[5]
        )
    }
}

/// Intersection form `diag(1, -1, -1, -1, -1, -1)`.
pub fn pic_pair(a: &PicXClass, b: &PicXClass) -> Rational {
    let mut s = &a.0[0] * &b.0[0];
    for k in 1..6 {
        s -= &a.0[k] * &b.0[k];
    }
    s
}

/// `K_X = -3h + x1 + .. + x5`.
pub fn canonical_class() -> PicXClass {
    PicXClass::from_ints([-3, 1, 1, 1, 1, 1])
}

/// Class of the line with an even label: the empty label is the conic
/// `2h - sum x`, the complement of `{i}` is the exceptional curve `x_i`, and
/// `{i,j}` is the line `h - x_i - x_j`.
pub fn line_class(label: LineLabel) -> PicXClass {
    let e = label.elems();
    match e.len() {
        0 => PicXClass::from_ints([2, -1, -1, -1, -1, -1]),
        2 => PicXClass::h()
            .sub(&PicXClass::x(e[0] as usize))
            .sub(&PicXClass::x(e[1] as usize)),
        4 => {
            let missing = (1..=5u8).find(|i| !e.contains(i)).expect("one element missing");
            PicXClass::x(missing as usize)
        }
        _ => unreachable!("even labels have 0, 2 or 4 elements"),
    }
}

/// Class of the line with an odd label, via complementation.
pub fn odd_line_class(label: OddLabel) -> PicXClass {
    line_class(label.complement())
}

/// `sum_I v_I L_I` for a vector indexed by canonical label order.
pub fn lines_combination(v: &QVector) -> PicXClass {
    assert_eq!(v.len(), 16, "line combinations take 16 coefficients");
    LineLabel::all()
        .iter()
        .zip(v.iter())
        .fold(PicXClass::zero(), |acc, (l, c)| acc.add(&line_class(*l).scale(c)))
}
