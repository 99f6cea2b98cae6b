//! Polynomial constraints on `ψ(1..n)` obtained by expanding an identity
//! symbolically on a degree-`k` homogeneous operator.

use super::identity::{identity_sides, IdentityKind};
use super::target_index;
use crate::algebra::AlgebraDims;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;

/// `relation = 0` must hold; it is the coefficient of `e_target` in
/// `lhs - rhs` at the basis pair `(e_i, e_j)`. Variable `v` stands for `ψ(v+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub i: usize,
    pub j: usize,
    pub target: usize,
    pub relation: MPoly,
}

/// Images of the basis under the generic degree-`k` operator.
pub fn symbolic_columns(n: usize, k: usize) -> Vec<Vec<MPoly>> {
    (1..=n)
        .map(|i| {
            let mut col = vec![MPoly::zero(); n];
            col[target_index(n, k, i) - 1] = MPoly::var(i - 1);
            col
        })
        .collect()
}

/// The full system equivalent to the identity holding for a degree-`k`
/// operator, in row-major pair order. Identically zero relations are dropped.
pub fn reduce_to_psi_equations(
    kind: &IdentityKind,
    dims: AlgebraDims,
    k: usize,
) -> Result<Vec<Constraint>> {
    match kind {
        IdentityKind::RotaBaxter(_)
        | IdentityKind::Reynolds
        | IdentityKind::Nijenhuis
        | IdentityKind::Average => {}
        other => return Err(Error::UnsupportedIdentity(other.to_string())),
    }
    let n = dims.n();
    if k >= n {
        return Err(Error::InvalidParameter(format!(
            "degree {k} outside 0..={}",
            n - 1
        )));
    }
    let cols = symbolic_columns(n, k);
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let (lhs, rhs) = identity_sides(kind, &cols, i, j);
            for (m, (l, r)) in lhs.iter().zip(&rhs).enumerate() {
                let relation = l.sub(r);
                if !relation.is_zero() {
                    out.push(Constraint {
                        i,
                        j,
                        target: m + 1,
                        relation,
                    });
                }
            }
        }
    }
    Ok(out)
}
