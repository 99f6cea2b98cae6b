//! Exact checkers for the operator identities.
//!
//! Every identity has the form `L(x, y) = R(x, y)` with both sides bilinear
//! in `(x, y)` once the operator is fixed. Two bilinear maps agree everywhere
//! iff they agree on all pairs of basis vectors, so checking the `n²` pairs
//! `(e_i, e_j)` is a complete decision procedure.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::MatrixOperator;
use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::ring::{product, Ring};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Homomorphism,
    RotaBaxter(Scalar),
    Reynolds,
    Nijenhuis,
    Average,
    Derivation,
    Differential(Scalar),
}

impl IdentityKind {
    pub const NAMES: [&'static str; 7] = [
        "homomorphism",
        "rota-baxter",
        "reynolds",
        "nijenhuis",
        "average",
        "derivation",
        "differential",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityKind::Homomorphism => "homomorphism",
            IdentityKind::RotaBaxter(_) => "rota-baxter",
            IdentityKind::Reynolds => "reynolds",
            IdentityKind::Nijenhuis => "nijenhuis",
            IdentityKind::Average => "average",
            IdentityKind::Derivation => "derivation",
            IdentityKind::Differential(_) => "differential",
        }
    }

    pub fn weight(&self) -> Option<&Scalar> {
        match self {
            IdentityKind::RotaBaxter(w) | IdentityKind::Differential(w) => Some(w),
            _ => None,
        }
    }

    /// Builds a kind from its name. The weight defaults to 0 where one is
    /// carried and is rejected elsewhere.
    pub fn from_parts(name: &str, weight: Option<Scalar>) -> Result<Self> {
        let weighted = matches!(name, "rota-baxter" | "differential");
        if weight.is_some() && !weighted {
            return Err(Error::InvalidParameter(format!(
                "identity `{name}` takes no weight"
            )));
        }
        let w = weight.unwrap_or_else(Scalar::zero);
        Ok(match name {
            "homomorphism" => IdentityKind::Homomorphism,
            "rota-baxter" => IdentityKind::RotaBaxter(w),
            "reynolds" => IdentityKind::Reynolds,
            "nijenhuis" => IdentityKind::Nijenhuis,
            "average" => IdentityKind::Average,
            "derivation" => IdentityKind::Derivation,
            "differential" => IdentityKind::Differential(w),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown identity `{other}` (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.weight() {
            Some(w) => write!(f, "{}({w})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// First violating basis pair `(e_i, e_j)` with both sides of the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: Verdict,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn apply_cols<R: Ring>(cols: &[Vec<R>], v: &[R]) -> Vec<R> {
    let n = v.len();
    let mut out = vec![R::zero(); n];
    for (c, vc) in v.iter().enumerate() {
        if vc.is_zero() {
            continue;
        }
        for (r, slot) in out.iter_mut().enumerate() {
            let a = &cols[c][r];
            if !a.is_zero() {
                *slot = slot.add(&a.mul(vc));
            }
        }
    }
    out
}

fn basis<R: Ring>(n: usize, i: usize) -> Vec<R> {
    let mut v = vec![R::zero(); n];
    v[i - 1] = R::one();
    v
}

fn vadd<R: Ring>(x: &[R], y: &[R]) -> Vec<R> {
    x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
}

fn vsub<R: Ring>(x: &[R], y: &[R]) -> Vec<R> {
    x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
}

fn vscale<R: Ring>(x: &[R], c: &R) -> Vec<R> {
    x.iter().map(|a| a.mul(c)).collect()
}

/// Both sides of the identity at `(e_i, e_j)` (1-based), where `cols[c]` is
/// the image of `e_{c+1}`.
pub fn identity_sides<R: Ring>(
    kind: &IdentityKind,
    cols: &[Vec<R>],
    i: usize,
    j: usize,
) -> (Vec<R>, Vec<R>) {
    let n = cols.len();
    let (x, y) = (basis::<R>(n, i), basis::<R>(n, j));
    let (px, py) = (&cols[i - 1], &cols[j - 1]);
    let p = |v: &[R]| apply_cols(cols, v);
    let xy = product(&x, &y);
    match kind {
        IdentityKind::Homomorphism => (product(px, py), p(&xy)),
        IdentityKind::RotaBaxter(w) => {
            let inner = vadd(&vadd(&product(&x, py), &product(px, &y)), &vscale(&xy, &R::from_scalar(w)));
            (product(px, py), p(&inner))
        }
        IdentityKind::Reynolds => {
            let pp = product(px, py);
            let inner = vsub(&vadd(&product(&x, py), &product(px, &y)), &pp);
            (pp, p(&inner))
        }
        IdentityKind::Nijenhuis => {
            let inner = vsub(&vadd(&product(&x, py), &product(px, &y)), &p(&xy));
            (product(px, py), p(&inner))
        }
        IdentityKind::Average => (product(px, py), p(&product(&x, py))),
        IdentityKind::Derivation => (p(&xy), vadd(&product(px, &y), &product(&x, py))),
        IdentityKind::Differential(w) => {
            let rhs = vadd(
                &vadd(&product(px, &y), &product(&x, py)),
                &vscale(&product(px, py), &R::from_scalar(w)),
            );
            (p(&xy), rhs)
        }
    }
}

/// Checks every ordered basis pair in row-major order and reports the first
/// violation.
pub fn check_identity(kind: &IdentityKind, op: &MatrixOperator) -> CheckReport {
    let cols = op.columns();
    let n = op.n();
    for i in 1..=n {
        for j in 1..=n {
            let (lhs, rhs) = identity_sides(kind, &cols, i, j);
            if lhs != rhs {
                let dims = op.dims();
                return CheckReport {
                    verdict: Verdict::Fail,
                    witness: Some(Witness {
                        i,
                        j,
                        lhs: AlgebraElement::new(dims, lhs).expect("length n"),
                        rhs: AlgebraElement::new(dims, rhs).expect("length n"),
                    }),
                };
            }
        }
    }
    CheckReport::pass()
}
