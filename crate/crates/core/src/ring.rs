//! Coefficient rings shared by the concrete checkers and the symbolic
//! constraint extraction.

use crate::error::Result;
use crate::mpoly::MPoly;
use crate::mrat::MultiRat;
use crate::scalar::Scalar;

pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_scalar(c: &Scalar) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

/// A ring with checked division.
pub trait Field: Ring {
    fn div(&self, other: &Self) -> Result<Self>;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_scalar(c: &Scalar) -> Self {
        c.clone()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Scalar {
    fn div(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn from_scalar(c: &Scalar) -> Self {
        MPoly::constant(c.clone())
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
}

impl Ring for MultiRat {
    fn zero() -> Self {
        MultiRat::zero()
    }
    fn one() -> Self {
        MultiRat::one()
    }
    fn from_scalar(c: &Scalar) -> Self {
        MultiRat::constant(c.clone())
    }
    fn is_zero(&self) -> bool {
        MultiRat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MultiRat::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiRat::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiRat::mul(self, other)
    }
    fn neg(&self) -> Self {
        MultiRat::neg(self)
    }
}

impl Field for MultiRat {
    fn div(&self, other: &Self) -> Result<Self> {
        MultiRat::div(self, other)
    }
}

/// Product in the null-filiform algebra on dense coefficient vectors:
/// `e_i e_j = e_{i+j}` when `i + j <= n`, else zero.
pub fn product<R: Ring>(x: &[R], y: &[R]) -> Vec<R> {
    let n = x.len();
    let mut out = vec![R::zero(); n];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        // 0-based: e_{i+1} e_{j+1} = e_{i+j+2}, stored at i + j + 1
        for (j, yj) in y.iter().enumerate().take(n.saturating_sub(i + 1)) {
            if !yj.is_zero() {
                out[i + j + 1] = out[i + j + 1].add(&xi.mul(yj));
            }
        }
    }
    out
}
