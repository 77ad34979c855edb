//! Exact rational scalars, vectors and matrices, with the linear solvers the
//! rest of the crate is built on.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Index, IndexMut, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Arbitrary-precision rational number, always in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Greatest integer not exceeding `self`.
    pub fn floor(&self) -> Rational {
        Rational(self.0.floor())
    }

    pub fn ceil(&self) -> Rational {
        Rational(self.0.ceil())
    }

    /// Fractional part, in `[0, 1)`.
    pub fn fract_part(&self) -> Rational {
        self - &self.floor()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rational, QError> {
        if self.is_zero() {
            Err(QError::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational, QError> {
        if other.is_zero() {
            Err(QError::DivisionByZero)
        } else {
            Ok(Rational(&self.0 / &other.0))
        }
    }

    pub fn pow(&self, k: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_bigint().and_then(|n| n.to_i64())
    }

    /// Lossy, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || QError::Parse(s.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                Rational::from_big(n, d).map_err(|_| bad())
            }
            None => BigInt::from_str(t).map(Rational::from_bigint).map_err(|_| bad()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Rational::int(n)),
        }
    }
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);
rational_binop!(Div, div, /);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |a, b| a + b)
    }
}

/// Shorthand for `Rational::new`.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Dense rational vector. Index sets are positional; callers agree on the
/// label order (see `lines16::LineLabel::all` for the 16-line order).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVector(pub Vec<Rational>);

impl QVector {
    pub fn zeros(n: usize) -> Self {
        QVector(vec![Rational::zero(); n])
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        QVector(vec![value; n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        QVector(v.iter().map(|&x| Rational::int(x)).collect())
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = QVector::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot: dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &Rational) -> QVector {
        QVector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(Rational::is_integer)
    }

    pub fn floor(&self) -> QVector {
        floor_vec(self)
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> QVector {
        QVector(self.0.iter().map(f).collect())
    }

    pub fn concat(&self, other: &QVector) -> QVector {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        QVector(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> QVector {
        QVector(self.0[start..end].to_vec())
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Index<usize> for QVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut Rational {
        &mut self.0[i]
    }
}

impl Add<&QVector> for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        assert_eq!(self.len(), rhs.len(), "add: dimension mismatch");
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&QVector> for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        assert_eq!(self.len(), rhs.len(), "sub: dimension mismatch");
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add<QVector> for QVector {
    type Output = QVector;
    fn add(self, rhs: QVector) -> QVector {
        &self + &rhs
    }
}

impl Sub<QVector> for QVector {
    type Output = QVector;
    fn sub(self, rhs: QVector) -> QVector {
        &self - &rhs
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        -&self
    }
}

/// Componentwise floor.
pub fn floor_vec(v: &QVector) -> QVector {
    v.map(Rational::floor)
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        Self::from_fn(n, n, |i, j| if i == j { d[i].clone() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, QError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(QError::DimensionMismatch {
                    context: "ragged rows",
                    left: c,
                    right: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(QMatrix { rows: r, cols: c, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::int(x)).collect())
                .collect(),
        )
        .expect("ragged integer rows")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[QVector]) -> Result<Self, QError> {
        let n = cols.first().map_or(0, QVector::len);
        if let Some(bad) = cols.iter().find(|c| c.len() != n) {
            return Err(QError::DimensionMismatch {
                context: "columns of unequal length",
                left: n,
                right: bad.len(),
            });
        }
        Ok(Self::from_fn(n, cols.len(), |i, j| cols[j][i].clone()))
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> QVector {
        QVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> QVector {
        QVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn try_mul(&self, rhs: &QMatrix) -> Result<QMatrix, QError> {
        if self.cols != rhs.rows {
            return Err(QError::DimensionMismatch {
                context: "matrix product",
                left: self.cols,
                right: rhs.rows,
            });
        }
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_mul_vec(&self, v: &QVector) -> Result<QVector, QError> {
        if self.cols != v.len() {
            return Err(QError::DimensionMismatch {
                context: "matrix-vector product",
                left: self.cols,
                right: v.len(),
            });
        }
        Ok(QVector(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .filter(|&j| !self.get(i, j).is_zero())
                        .map(|j| self.get(i, j) * &v[j])
                        .sum()
                })
                .collect(),
        ))
    }

    /// Panics on dimension mismatch; use `try_mul_vec` for untrusted shapes.
    pub fn mul_vec(&self, v: &QVector) -> QVector {
        self.try_mul_vec(v).expect("matrix-vector product")
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &QMatrix) -> Result<QMatrix, QError> {
        if self.rows != rhs.rows {
            return Err(QError::DimensionMismatch {
                context: "hstack",
                left: self.rows,
                right: rhs.rows,
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, rhs: &QMatrix) -> Result<QMatrix, QError> {
        if self.cols != rhs.cols {
            return Err(QError::DimensionMismatch {
                context: "vstack",
                left: self.cols,
                right: rhs.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Ok(QMatrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis read off the reduced echelon form: one vector per free
    /// column, in increasing column order, with a 1 in that column.
    pub fn kernel(&self) -> Vec<QVector> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots, self.cols)
    }

    pub fn det(&self) -> Result<Rational, QError> {
        if self.rows != self.cols {
            return Err(QError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &piv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }
}

fn kernel_from_rref(r: &QMatrix, pivots: &[usize], ncols: usize) -> Vec<QVector> {
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = QVector::zeros(ncols);
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r.get(row, free);
        }
        basis.push(v);
    }
    basis
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Add<&QMatrix> for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "add: shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&QMatrix> for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "sub: shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&QMatrix> for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

/// Solution set `particular + span(kernel)` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineSolutionSet {
    pub consistent: bool,
    pub particular: QVector,
    pub kernel: Vec<QVector>,
}

impl AffineSolutionSet {
    /// `particular + sum coeffs[k] * kernel[k]`.
    pub fn member(&self, coeffs: &[Rational]) -> QVector {
        assert_eq!(coeffs.len(), self.kernel.len(), "member: wrong number of coefficients");
        let mut v = self.particular.clone();
        for (c, k) in coeffs.iter().zip(&self.kernel) {
            v = &v + &k.scale(c);
        }
        v
    }

    pub fn contains(&self, v: &QVector) -> bool {
        if !self.consistent || v.len() != self.particular.len() {
            return false;
        }
        let diff = v - &self.particular;
        if self.kernel.is_empty() {
            return diff.is_zero();
        }
        let basis = QMatrix::from_columns(&self.kernel).expect("kernel vectors share a length");
        solve_linear(&basis, &diff).map(|s| s.consistent).unwrap_or(false)
    }
}

/// Solves `m x = b` exactly. Free variables are set to zero in the
/// particular solution; the kernel basis follows reduced echelon order.
pub fn solve_linear(m: &QMatrix, b: &QVector) -> Result<AffineSolutionSet, QError> {
    if m.nrows() != b.len() {
        return Err(QError::DimensionMismatch {
            context: "solve_linear rows vs rhs",
            left: m.nrows(),
            right: b.len(),
        });
    }
    let n = m.ncols();
    let aug = m.hstack(&QMatrix::from_columns(std::slice::from_ref(b))?)?;
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return Ok(AffineSolutionSet {
            consistent: false,
            particular: QVector::zeros(n),
            kernel: Vec::new(),
        });
    }
    let mut particular = QVector::zeros(n);
    for (row, &pc) in pivots.iter().enumerate() {
        particular[pc] = r.get(row, n).clone();
    }
    let kernel = kernel_from_rref(&r, &pivots, n);
    Ok(AffineSolutionSet {
        consistent: true,
        particular,
        kernel,
    })
}

/// Characteristic polynomial `det(x I - M)`, coefficients in increasing
/// degree (the last entry is the leading 1). Faddeev-LeVerrier recursion.
pub fn char_poly_on(m: &QMatrix) -> Result<Vec<Rational>, QError> {
    if m.nrows() != m.ncols() {
        return Err(QError::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let n = m.nrows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let id = QMatrix::identity(n);
    let mut mk = QMatrix::zeros(n, n);
    for k in 1..=n {
        let shifted = &mk + &id.scale(&coeffs[n - k + 1]);
        mk = m * &shifted;
        coeffs[n - k] = -(mk.trace() / Rational::int(k as i64));
    }
    Ok(coeffs)
}

/// Multiplies polynomials given as increasing-degree coefficient lists.
pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn poly_eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Integer solutions of `m x = b` for an integer matrix `m`: a particular
/// solution and a lattice basis of the homogeneous solutions, or `None`
/// when no integral solution exists. Column Hermite reduction.
pub fn solve_integer(m: &QMatrix, b: &QVector) -> Result<Option<(QVector, Vec<QVector>)>, QError> {
    if m.nrows() != b.len() {
        return Err(QError::DimensionMismatch {
            context: "solve_integer rows vs rhs",
            left: m.nrows(),
            right: b.len(),
        });
    }
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut h: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for j in 0..cols {
            match m.get(i, j).to_bigint() {
                Some(x) => row.push(x),
                None => {
                    return Err(QError::Parse(format!(
                        "solve_integer needs an integer matrix, found {} at ({i},{j})",
                        m.get(i, j)
                    )))
                }
            }
        }
        h.push(row);
    }
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let col_op = |mat: &mut Vec<Vec<BigInt>>, dst: usize, src: usize, f: &BigInt| {
        for row in mat.iter_mut() {
            let v = &row[src] * f;
            row[dst] -= v;
        }
    };
    let swap_cols = |mat: &mut Vec<Vec<BigInt>>, a: usize, c: usize| {
        for row in mat.iter_mut() {
            row.swap(a, c);
        }
    };

    let mut k = 0;
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; rows];
    for r in 0..rows {
        if k == cols {
            break;
        }
        loop {
            let nz: Vec<usize> = (k..cols).filter(|&j| !h[r][j].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by_key(|&&j| h[r][j].abs()).expect("nonempty");
            swap_cols(&mut h, k, best);
            swap_cols(&mut u, k, best);
            let mut done = true;
            for j in k + 1..cols {
                if h[r][j].is_zero() {
                    continue;
                }
                let f = h[r][j].div_floor(&h[r][k]);
                col_op(&mut h, j, k, &f);
                col_op(&mut u, j, k, &f);
                if !h[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !h[r][k].is_zero() {
            pivot_of_row[r] = Some(k);
            k += 1;
        }
    }

    let mut bz = Vec::with_capacity(rows);
    for x in b.iter() {
        match x.to_bigint() {
            Some(v) => bz.push(v),
            None => return Ok(None),
        }
    }
    let mut y: Vec<BigInt> = vec![BigInt::zero(); cols];
    for r in 0..rows {
        let upto = pivot_of_row[r].unwrap_or(k);
        let mut acc = bz[r].clone();
        for (j, yj) in y.iter().enumerate().take(upto) {
            acc -= &h[r][j] * yj;
        }
        match pivot_of_row[r] {
            Some(p) => {
                let (qt, rem) = acc.div_rem(&h[r][p]);
                if !rem.is_zero() {
                    return Ok(None);
                }
                y[p] = qt;
            }
            None => {
                if !acc.is_zero() {
                    return Ok(None);
                }
            }
        }
    }
    let to_vec =
        |coeffs: &dyn Fn(usize) -> BigInt| QVector((0..cols).map(|i| Rational::from_bigint(coeffs(i))).collect());
    let x = to_vec(&|i| (0..cols).map(|j| &u[i][j] * &y[j]).sum());
    let lattice = (k..cols).map(|j| to_vec(&|i| u[i][j].clone())).collect();
    Ok(Some((x, lattice)))
}
