//! The functional equations on `ψ` exactly as displayed alongside each
//! classification, kept separate from the identity-derived system so the two
//! can be compared. A mutant flips one sign in one equation form.

use std::fmt;
use std::str::FromStr;

use super::identity::IdentityKind;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::scalar::Scalar;

/// Equation forms, named by shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrintedEquation {
    /// `ψ(i)ψ(j) = (ψ(i)+ψ(j))ψ(i+j)`
    Harmonic,
    /// `ψ(i)ψ(j) = (ψ(i)+ψ(j))ψ(i+j+k)`
    Shift,
    /// `ψ(i)ψ(j) = (ψ(i)+ψ(j)+1)ψ(i+j)`
    Weighted,
    /// `ψ(i)ψ(j) = (ψ(i)+ψ(j)-ψ(i)ψ(j))ψ(i+j)`
    Reynolds,
    /// `ψ(i)ψ(j)ψ(i+j+2k) = 0`
    Cubic,
    /// `ψ(i)ψ(j) = (ψ(i)+ψ(j)-ψ(i+j))ψ(i+j)`
    Nijenhuis,
    /// `ψ(i)ψ(j) = ψ(j)ψ(i+j)`
    Average,
    /// `ψ(i+j) = 0` for `i+j <= n-k`
    VanishShift,
    /// `ψ(i) = 0` for `n-k+1 <= i <= n`
    Tail,
}

impl PrintedEquation {
    pub const ALL: [PrintedEquation; 9] = [
        PrintedEquation::Harmonic,
        PrintedEquation::Shift,
        PrintedEquation::Weighted,
        PrintedEquation::Reynolds,
        PrintedEquation::Cubic,
        PrintedEquation::Nijenhuis,
        PrintedEquation::Average,
        PrintedEquation::VanishShift,
        PrintedEquation::Tail,
    ];

    /// Forms with a sign that a mutant can flip.
    pub const MUTABLE: [PrintedEquation; 6] = [
        PrintedEquation::Harmonic,
        PrintedEquation::Shift,
        PrintedEquation::Weighted,
        PrintedEquation::Reynolds,
        PrintedEquation::Nijenhuis,
        PrintedEquation::Average,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            PrintedEquation::Harmonic => "harmonic",
            PrintedEquation::Shift => "shift",
            PrintedEquation::Weighted => "weighted",
            PrintedEquation::Reynolds => "reynolds",
            PrintedEquation::Cubic => "cubic",
            PrintedEquation::Nijenhuis => "nijenhuis",
            PrintedEquation::Average => "average",
            PrintedEquation::VanishShift => "vanish-shift",
            PrintedEquation::Tail => "tail",
        }
    }

    pub fn is_mutable(&self) -> bool {
        Self::MUTABLE.contains(self)
    }
}

impl fmt::Display for PrintedEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PrintedEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|e| e.label() == s)
            .ok_or_else(|| Error::Parse(format!("unknown equation form `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedConstraint {
    pub equation: PrintedEquation,
    /// `(i, j)` for the pair forms, `(i, 0)` for the vanishing forms.
    pub indices: (usize, usize),
    pub relation: MPoly,
}

struct Builder {
    mutant: Option<PrintedEquation>,
    out: Vec<PrintedConstraint>,
}

fn psi(i: usize) -> MPoly {
    MPoly::var(i - 1)
}

impl Builder {
    /// Sign applied to the flipped term.
    fn sign(&self, eq: PrintedEquation) -> Scalar {
        if self.mutant == Some(eq) {
            Scalar::from_int(-1)
        } else {
            Scalar::one()
        }
    }

    fn push(&mut self, equation: PrintedEquation, indices: (usize, usize), relation: MPoly) {
        if !relation.is_zero() {
            self.out.push(PrintedConstraint {
                equation,
                indices,
                relation,
            });
        }
    }

    /// Ordered pairs with `2 <= i + j <= bound`.
    fn pairs(bound: isize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if bound < 2 {
            return out;
        }
        let bound = bound as usize;
        for i in 1..bound {
            for j in 1..=(bound - i) {
                out.push((i, j));
            }
        }
        out
    }

    /// `ψ(i)ψ(j) - (ψ(i) + s·ψ(j) + extra)·ψ(t)`.
    fn quadratic(&mut self, eq: PrintedEquation, i: usize, j: usize, t: usize, extra: MPoly) {
        let s = self.sign(eq);
        let lhs = psi(i).mul(&psi(j));
        let factor = psi(i).add(&psi(j).scale(&s)).add(&extra);
        self.push(eq, (i, j), lhs.sub(&factor.mul(&psi(t))));
    }

    fn tail(&mut self, n: usize, k: usize) {
        for i in (n - k + 1)..=n {
            self.push(PrintedEquation::Tail, (i, 0), psi(i));
        }
    }
}

/// The displayed system for `(kind, n, k)`, or `None` where no system is
/// displayed (Nijenhuis and average operators with `1 <= k < ⌊n/2⌋`,
/// Rota-Baxter weights other than 0 and 1, non-operator identities).
pub fn printed_system(
    kind: &IdentityKind,
    n: usize,
    k: usize,
    mutant: Option<PrintedEquation>,
) -> Option<Vec<PrintedConstraint>> {
    if n == 0 || k >= n {
        return None;
    }
    let mut b = Builder {
        mutant,
        out: Vec::new(),
    };
    let (n_i, k_i) = (n as isize, k as isize);
    match kind {
        IdentityKind::RotaBaxter(w) if w.is_zero() => {
            if k == 0 {
                for (i, j) in Builder::pairs(n_i) {
                    b.quadratic(PrintedEquation::Harmonic, i, j, i + j, MPoly::zero());
                }
            } else {
                b.tail(n, k);
                for (i, j) in Builder::pairs(n_i - 2 * k_i) {
                    b.quadratic(PrintedEquation::Shift, i, j, i + j + k, MPoly::zero());
                }
            }
        }
        IdentityKind::RotaBaxter(w) if w.is_one() => {
            if k == 0 {
                for (i, j) in Builder::pairs(n_i) {
                    b.quadratic(PrintedEquation::Weighted, i, j, i + j, MPoly::one());
                }
            } else {
                b.tail(n, k);
                for (i, j) in Builder::pairs(n_i - 2 * k_i) {
                    b.quadratic(PrintedEquation::Shift, i, j, i + j + k, MPoly::zero());
                }
                for s in 2..=(n - k) {
                    b.push(PrintedEquation::VanishShift, (s, 0), psi(s));
                }
            }
        }
        IdentityKind::Reynolds => {
            if k == 0 {
                for (i, j) in Builder::pairs(n_i) {
                    let extra = psi(i).mul(&psi(j)).neg();
                    b.quadratic(PrintedEquation::Reynolds, i, j, i + j, extra);
                }
            } else {
                b.tail(n, k);
                for (i, j) in Builder::pairs(n_i - 2 * k_i) {
                    b.quadratic(PrintedEquation::Shift, i, j, i + j + k, MPoly::zero());
                }
                for (i, j) in Builder::pairs(n_i - 3 * k_i) {
                    let rel = psi(i).mul(&psi(j)).mul(&psi(i + j + 2 * k));
                    b.push(PrintedEquation::Cubic, (i, j), rel);
                }
            }
        }
        IdentityKind::Nijenhuis => {
            if k == 0 {
                for (i, j) in Builder::pairs(n_i) {
                    let extra = psi(i + j).neg();
                    b.quadratic(PrintedEquation::Nijenhuis, i, j, i + j, extra);
                }
            } else if k >= n / 2 {
                b.tail(n, k);
            } else {
                return None;
            }
        }
        IdentityKind::Average => {
            if k == 0 {
                for (i, j) in Builder::pairs(n_i) {
                    let s = b.sign(PrintedEquation::Average);
                    let rel = psi(i).mul(&psi(j)).sub(&psi(j).mul(&psi(i + j)).scale(&s));
                    b.push(PrintedEquation::Average, (i, j), rel);
                }
            } else if k >= n / 2 {
                b.tail(n, k);
            } else {
                return None;
            }
        }
        _ => return None,
    }
    Some(b.out)
}

/// True when every relation vanishes at `psi`.
pub fn printed_satisfied(system: &[PrintedConstraint], psi: &[Scalar]) -> bool {
    let point = psi.iter().cloned().enumerate().collect();
    system
        .iter()
        .all(|c| c.relation.eval(&point).map(|v| v.is_zero()).unwrap_or(false))
}
