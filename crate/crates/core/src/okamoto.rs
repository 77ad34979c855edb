//! The basis `(ϑ, 𝖋_1..𝖋_5)` of `H^2(X)` coming from the normalized
//! universal bundle, and the reduced Okamoto map into `H^2(X)/⟨K_X⟩`.

use serde::{Deserialize, Serialize};

use crate::lines16::{canonical_class, delta_matrix, line_class, lines_combination, ones_16x5, LineLabel, PicXClass};
use crate::qcore::{q, QMatrix, QVector, Rational};

/// `ϑ = -L_∅` and `𝖋_i = L_∅ - L_{i^c}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaFBasis {
    pub theta: PicXClass,
    pub f: [PicXClass; 5],
}

impl ThetaFBasis {
    pub fn new() -> Self {
        let l_empty = line_class(LineLabel::EMPTY);
        let f = std::array::from_fn(|i| {
            let ic = crate::lines16::underline(i as u8 + 1).expect("1..5");
            l_empty.sub(&line_class(ic))
        });
        ThetaFBasis {
            theta: l_empty.scale(&q(-1, 1)),
            f,
        }
    }

    /// Columns `ϑ, 𝖋_1, .., 𝖋_5` in the blow-up basis.
    pub fn matrix(&self) -> QMatrix {
        let mut cols = vec![self.theta.to_vector()];
        cols.extend(self.f.iter().map(PicXClass::to_vector));
        QMatrix::from_columns(&cols).expect("six columns of length six")
    }

    /// Coordinates `(c_ϑ, c_1..c_5)` of a class.
    pub fn coordinates(&self, c: &PicXClass) -> QVector {
        let sol = crate::qcore::solve_linear(&self.matrix(), &c.to_vector()).expect("6x6 system");
        assert!(sol.consistent && sol.kernel.is_empty(), "ϑ, 𝖋 form a basis");
        sol.particular
    }

    pub fn class_of(&self, coords: &QVector) -> PicXClass {
        PicXClass::from_vector(&self.matrix().mul_vec(coords))
    }
}

impl Default for ThetaFBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// Coordinates of `L_I` over `(ϑ, 𝖋)`.
pub fn line_in_theta_basis(label: LineLabel) -> QVector {
    ThetaFBasis::new().coordinates(&line_class(label))
}

/// The printed expansion of `L_I`: `L_∅ = -ϑ`, `L_{i^c} = -ϑ - 𝖋_i`,
/// `L_{ij} = -ϑ + 𝖋_i + 𝖋_j - ½ Σ 𝖋_k`.
pub fn line_expansion_table(label: LineLabel) -> QVector {
    let mut v = QVector::zeros(6);
    v[0] = q(-1, 1);
    let e = label.elems();
    match e.len() {
        0 => {}
        4 => {
            let i = (1..=5u8).find(|i| !e.contains(i)).expect("one missing") as usize;
            v[i] = q(-1, 1);
        }
        _ => {
            for k in 1..=5 {
                v[k] = q(-1, 2);
            }
            for &i in &e {
                v[i as usize] = &v[i as usize] + Rational::one();
            }
        }
    }
    v
}

/// `-K_X` over `(ϑ, 𝖋)`: `(-4, -½, .., -½)`.
pub fn minus_kx_in_basis() -> QVector {
    ThetaFBasis::new().coordinates(&canonical_class().scale(&q(-1, 1)))
}

/// Coordinates over `(𝖋̲_1..𝖋̲_5)` of a class in `H^2(X)/⟨K_X⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedClass(pub QVector);

/// Reduction modulo `K_X`, using `ϑ̲ = -⅛ Σ 𝖋̲_k`.
pub fn reduce(c: &PicXClass) -> ReducedClass {
    let coords = ThetaFBasis::new().coordinates(c);
    let shift = &coords[0] * q(1, 8);
    ReducedClass(QVector((1..6).map(|k| &coords[k] - &shift).collect()))
}

/// `⅛ (1̲ - 5δ) a`, the eigenspace(-4) part of `d` at the simplified choice
/// of integer shifts.
pub fn okamoto_weights(a: &QVector) -> QVector {
    let m = &ones_16x5() - &delta_matrix().scale(&q(5, 1));
    m.mul_vec(a).scale(&q(1, 8))
}

/// `⅛ L (1̲ - 5δ) a  mod K_X`.
pub fn reduced_okamoto(a: &QVector) -> ReducedClass {
    reduce(&lines_combination(&okamoto_weights(a)))
}

/// Matrix of the reduced Okamoto map, assembled column by column.
pub fn okamoto_matrix() -> QMatrix {
    let cols: Vec<QVector> = (0..5).map(|i| reduced_okamoto(&QVector::unit(5, i)).0).collect();
    QMatrix::from_columns(&cols).expect("five columns")
}

/// `(5/8)(J - 4 Id)`.
pub fn okamoto_matrix_expected() -> QMatrix {
    QMatrix::from_fn(5, 5, |r, c| if r == c { q(-15, 8) } else { q(5, 8) })
}
