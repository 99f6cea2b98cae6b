//! Linear operators on the algebra and the Rota-type identity checkers.

mod constraints;
mod identity;
mod printed;

pub use constraints::{reduce_to_psi_equations, symbolic_columns, Constraint};
pub use identity::{check_identity, identity_sides, CheckReport, IdentityKind, Verdict, Witness};
pub use printed::{printed_satisfied, printed_system, PrintedConstraint, PrintedEquation};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraDims, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense operator, row-major: `matrix[r][c]` is the coefficient of
/// `e_{r+1}` in the image of `e_{c+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct MatrixOperator {
    n: usize,
    matrix: Vec<Vec<Scalar>>,
}

#[derive(Deserialize)]
struct RawMatrix {
    n: usize,
    matrix: Vec<Vec<Scalar>>,
}

impl TryFrom<RawMatrix> for MatrixOperator {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        if raw.matrix.len() != raw.n {
            return Err(Error::InvalidParameter(format!(
                "matrix has {} rows for n = {}",
                raw.matrix.len(),
                raw.n
            )));
        }
        if let Some(r) = raw.matrix.iter().position(|row| row.len() != raw.n) {
            return Err(Error::InvalidParameter(format!(
                "matrix[{r}] has {} entries for n = {}",
                raw.matrix[r].len(),
                raw.n
            )));
        }
        MatrixOperator::new(AlgebraDims::new(raw.n)?, raw.matrix)
    }
}

impl MatrixOperator {
    pub fn new(dims: AlgebraDims, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = dims.n();
        if matrix.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: matrix.len(),
            });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: row.len(),
            });
        }
        Ok(MatrixOperator { n, matrix })
    }

    pub fn zero(dims: AlgebraDims) -> Self {
        let n = dims.n();
        MatrixOperator {
            n,
            matrix: vec![vec![Scalar::zero(); n]; n],
        }
    }

    pub fn identity(dims: AlgebraDims) -> Self {
        let mut m = MatrixOperator::zero(dims);
        for i in 0..m.n {
            m.matrix[i][i] = Scalar::one();
        }
        m
    }

    /// Builds the operator from the images of `e_1..e_n`.
    pub fn from_columns(columns: &[AlgebraElement]) -> Result<Self> {
        let dims = AlgebraDims::new(columns.len())?;
        let n = dims.n();
        let mut m = MatrixOperator::zero(dims);
        for (c, col) in columns.iter().enumerate() {
            if col.dims().n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: col.dims().n(),
                });
            }
            for r in 0..n {
                m.matrix[r][c] = col.coeffs()[r].clone();
            }
        }
        Ok(m)
    }

    pub fn dims(&self) -> AlgebraDims {
        AlgebraDims::new(self.n).expect("n >= 1")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    /// Coefficient of `e_row` in the image of `e_col` (1-based).
    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.matrix[row - 1][col - 1]
    }

    /// Image coordinates of each basis vector, in order.
    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.n)
            .map(|c| (0..self.n).map(|r| self.matrix[r][c].clone()).collect())
            .collect()
    }

    /// Image of `e_i`.
    pub fn image(&self, i: usize) -> AlgebraElement {
        let coeffs = (0..self.n).map(|r| self.matrix[r][i - 1].clone()).collect();
        AlgebraElement::new(self.dims(), coeffs).expect("length n")
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Scalar::is_zero)
    }

    fn zip(&self, other: &MatrixOperator, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
            .collect();
        Ok(MatrixOperator { n: self.n, matrix })
    }

    pub fn add(&self, other: &MatrixOperator) -> Result<Self> {
        self.zip(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &MatrixOperator) -> Result<Self> {
        self.zip(other, |x, y| x - y)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        MatrixOperator {
            n: self.n,
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MatrixOperator) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut matrix = vec![vec![Scalar::zero(); n]; n];
        for (r, row) in matrix.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = (0..n).map(|m| &self.matrix[r][m] * &other.matrix[m][c]).sum();
            }
        }
        Ok(MatrixOperator { n, matrix })
    }
}

/// Degree-`k` operator `P(e_i) = ψ(i) e_{i+k}`, wrapping to `e_{i+k-n}`
/// once `i + k > n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHomogeneous")]
pub struct HomogeneousOperator {
    n: usize,
    degree: usize,
    psi: Vec<Scalar>,
}

#[derive(Deserialize)]
struct RawHomogeneous {
    n: usize,
    degree: usize,
    psi: Vec<Scalar>,
}

impl TryFrom<RawHomogeneous> for HomogeneousOperator {
    type Error = Error;

    fn try_from(raw: RawHomogeneous) -> Result<Self> {
        if raw.psi.len() != raw.n {
            return Err(Error::InvalidParameter(format!(
                "psi has {} entries for n = {}",
                raw.psi.len(),
                raw.n
            )));
        }
        HomogeneousOperator::new(AlgebraDims::new(raw.n)?, raw.degree, raw.psi)
    }
}

impl HomogeneousOperator {
    pub fn new(dims: AlgebraDims, degree: usize, psi: Vec<Scalar>) -> Result<Self> {
        let n = dims.n();
        if degree >= n {
            return Err(Error::InvalidParameter(format!(
                "degree {degree} outside 0..={}",
                n - 1
            )));
        }
        if psi.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: psi.len(),
            });
        }
        Ok(HomogeneousOperator { n, degree, psi })
    }

    pub fn dims(&self) -> AlgebraDims {
        AlgebraDims::new(self.n).expect("n >= 1")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn psi(&self) -> &[Scalar] {
        &self.psi
    }

    /// `ψ(i)`, 1-based.
    pub fn psi_at(&self, i: usize) -> &Scalar {
        &self.psi[i - 1]
    }

    /// Index of the basis vector that `e_i` is sent to.
    pub fn target(&self, i: usize) -> usize {
        target_index(self.n, self.degree, i)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        HomogeneousOperator {
            n: self.n,
            degree: self.degree,
            psi: self.psi.iter().map(|x| x * c).collect(),
        }
    }
}

/// `i + k`, or `i + k - n` on the wrap branch.
pub fn target_index(n: usize, k: usize, i: usize) -> usize {
    if i + k <= n {
        i + k
    } else {
        i + k - n
    }
}

/// Column `i` carries the single entry `ψ(i)` at row `target(i)`.
pub fn hom_to_matrix(h: &HomogeneousOperator) -> MatrixOperator {
    let mut m = MatrixOperator::zero(h.dims());
    for i in 1..=h.n {
        m.matrix[h.target(i) - 1][i - 1] = h.psi[i - 1].clone();
    }
    m
}

pub fn apply(op: &MatrixOperator, x: &AlgebraElement) -> Result<AlgebraElement> {
    if op.n != x.dims().n() {
        return Err(Error::DimensionMismatch {
            left: op.n,
            right: x.dims().n(),
        });
    }
    let coeffs = op
        .matrix
        .iter()
        .map(|row| row.iter().zip(x.coeffs()).map(|(a, b)| a * b).sum())
        .collect();
    AlgebraElement::new(op.dims(), coeffs)
}

/// `P / λ`: a Rota-Baxter operator of weight `λ` becomes one of weight 1.
pub fn normalize_rota_baxter(op: &MatrixOperator, weight: &Scalar) -> Result<MatrixOperator> {
    Ok(op.scale(&weight.recip()?))
}

/// `λ d`: a differential operator of weight `λ` becomes one of weight 1.
pub fn normalize_differential(op: &MatrixOperator, weight: &Scalar) -> Result<MatrixOperator> {
    if weight.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(op.scale(weight))
}
