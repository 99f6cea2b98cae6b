//! The n-dimensional null-filiform associative algebra with basis
//! `e_1..e_n`, `e_i e_j = e_{i+j}` for `i + j <= n` and zero otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::product;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AlgebraDims {
    n: usize,
}

impl AlgebraDims {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(AlgebraDims { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }
}

/// Dense coordinates; `coeffs[i - 1]` is the coefficient of `e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement")]
pub struct AlgebraElement {
    n: usize,
    coeffs: Vec<Scalar>,
}

#[derive(Deserialize)]
struct RawElement {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl TryFrom<RawElement> for AlgebraElement {
    type Error = Error;

    fn try_from(raw: RawElement) -> Result<Self> {
        AlgebraElement::new(AlgebraDims::new(raw.n)?, raw.coeffs)
    }
}

impl AlgebraElement {
    pub fn new(dims: AlgebraDims, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != dims.n {
            return Err(Error::DimensionMismatch {
                left: dims.n,
                right: coeffs.len(),
            });
        }
        Ok(AlgebraElement { n: dims.n, coeffs })
    }

    pub fn zero(dims: AlgebraDims) -> Self {
        AlgebraElement {
            n: dims.n,
            coeffs: vec![Scalar::zero(); dims.n],
        }
    }

    /// The basis vector `e_i`.
    pub fn basis(i: usize, dims: AlgebraDims) -> Result<Self> {
        dims.check_index(i)?;
        let mut x = AlgebraElement::zero(dims);
        x.coeffs[i - 1] = Scalar::one();
        Ok(x)
    }

    pub fn dims(&self) -> AlgebraDims {
        AlgebraDims { n: self.n }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `e_i` (1-based).
    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn check_dims(&self, other: &AlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_dims(other)?;
        Ok(AlgebraElement {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_dims(other)?;
        Ok(AlgebraElement {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        AlgebraElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// `e_i e_j`.
pub fn basis_product(i: usize, j: usize, dims: AlgebraDims) -> Result<AlgebraElement> {
    dims.check_index(i)?;
    dims.check_index(j)?;
    if i + j <= dims.n {
        AlgebraElement::basis(i + j, dims)
    } else {
        Ok(AlgebraElement::zero(dims))
    }
}

/// Bilinear product: the coefficient of `e_m` is the sum of `x_i y_j` over `i + j = m`.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.check_dims(y)?;
    Ok(AlgebraElement {
        n: x.n,
        coeffs: product(&x.coeffs, &y.coeffs),
    })
}

/// `x^k` for `k >= 1`; there is no unit, so `k = 0` is an error.
pub fn power(x: &AlgebraElement, k: u32) -> Result<AlgebraElement> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let mut acc = x.clone();
    for _ in 1..k {
        acc = multiply(&acc, x)?;
    }
    Ok(acc)
}

/// Smallest index with a nonzero coefficient; `None` for the zero element.
pub fn grading_degree(x: &AlgebraElement) -> Option<usize> {
    x.coeffs.iter().position(|c| !c.is_zero()).map(|p| p + 1)
}

/// True when at most one coefficient is nonzero.
pub fn is_homogeneous(x: &AlgebraElement) -> bool {
    x.coeffs.iter().filter(|c| !c.is_zero()).count() <= 1
}
