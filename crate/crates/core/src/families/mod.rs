//! Closed-form constructors for every classified operator family.
//!
//! Index bounds follow the classification statements verbatim. Degree-one
//! constructors zero the top index `ψ(n)` even where the displayed case
//! formula does not restate it.

mod descriptor;
pub mod formulas;
mod theorems;

pub use descriptor::{construct, sample_constructions, ConstructedOperator, FamilyDescriptor, Params};
pub use theorems::{classified_regime, theorem_families, Regime, TheoremFamily};

use crate::algebra::{power, AlgebraDims, AlgebraElement};
use crate::error::{Error, Result};
use crate::operators::{HomogeneousOperator, MatrixOperator};
use crate::scalar::Scalar;

fn dims(n: usize) -> Result<AlgebraDims> {
    AlgebraDims::new(n)
}

fn hom(n: usize, k: usize, psi: Vec<Scalar>) -> Result<HomogeneousOperator> {
    HomogeneousOperator::new(dims(n)?, k, psi)
}

fn in_range(name: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        let range = if lo > hi {
            "an empty range".to_string()
        } else {
            format!("{lo}..={hi}")
        };
        return Err(Error::InvalidParameter(format!(
            "{name} = {value} outside {range}"
        )));
    }
    Ok(())
}

fn nonzero(name: &str, v: &Scalar) -> Result<()> {
    if v.is_zero() {
        return Err(Error::InvalidParameter(format!("{name} must be nonzero")));
    }
    Ok(())
}

fn degree_one_dims(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "degree 1 needs n >= 2".to_string(),
        ));
    }
    Ok(())
}

/// Largest `t` of the degree-one multiple-of-`(t+1)` cases: `⌊(n-2)/2⌋`.
pub fn degree_one_split(n: usize) -> usize {
    n.saturating_sub(2) / 2
}

fn check_alpha(n: usize, alpha: &[Scalar]) -> Result<AlgebraDims> {
    let d = dims(n)?;
    if alpha.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: alpha.len(),
        });
    }
    Ok(d)
}

/// `D(e_k) = k Σ_{i=1}^{n-k+1} α_i e_{k-1+i}`.
pub fn derivation_family(n: usize, alpha: &[Scalar]) -> Result<MatrixOperator> {
    let d = check_alpha(n, alpha)?;
    let mut columns = Vec::with_capacity(n);
    for k in 1..=n {
        let mut coeffs = vec![Scalar::zero(); n];
        let kk = Scalar::from_int(k as i64);
        for i in 1..=(n - k + 1) {
            coeffs[k + i - 2] = &kk * &alpha[i - 1];
        }
        columns.push(AlgebraElement::new(d, coeffs)?);
    }
    MatrixOperator::from_columns(&columns)
}

/// `φ(e_1) = Σ α_i e_i` and `φ(e_k) = φ(e_1)^k`, expanded in the algebra.
pub fn homomorphism_family(n: usize, alpha: &[Scalar]) -> Result<MatrixOperator> {
    let d = check_alpha(n, alpha)?;
    let gen = AlgebraElement::new(d, alpha.to_vec())?;
    let columns = (1..=n as u32)
        .map(|k| power(&gen, k))
        .collect::<Result<Vec<_>>>()?;
    MatrixOperator::from_columns(&columns)
}

/// `homomorphism_family(n, α) - id`, a differential operator of weight 1.
pub fn differential1_family(n: usize, alpha: &[Scalar]) -> Result<MatrixOperator> {
    let phi = homomorphism_family(n, alpha)?;
    phi.sub(&MatrixOperator::identity(phi.dims()))
}

/// Rota-Baxter weight 0, degree 0, case (a): `ψ(i) = t v / i` on multiples of `t`.
pub fn rb0_deg0(n: usize, t: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    in_range("t", t, 1, n / 2)?;
    nonzero("v", v)?;
    hom(n, 0, formulas::harmonic_multiples(n, t, v)?)
}

/// Single weight `ψ(r) = v` above `⌊n/2⌋`, degree 0.
pub fn rb0_deg0_spike(n: usize, r: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    spike0(n, r, v)
}

fn spike0(n: usize, r: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    in_range("r", r, n / 2 + 1, n)?;
    hom(n, 0, formulas::spikes(n, &[(r, v.clone())]))
}

/// Parameters of the degree-one cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degree1Params {
    /// Keyed by `ψ(1)`.
    Psi1(Scalar),
    /// Keyed by `ψ(1)` and `ψ(2)`.
    Seeds(Scalar, Scalar),
    /// Multiples pattern starting at `t`.
    Multiple { t: usize, v: Scalar },
    /// One spike at `r`.
    Spike { r: usize, v: Scalar },
    /// Two adjacent spikes at `r, r+1`.
    TwoSpike { r: usize, v1: Scalar, v2: Scalar },
}

fn wrong_params(case: char, p: &Degree1Params) -> Error {
    Error::InvalidParameter(format!("case ({case}) does not take {p:?}"))
}

/// Rota-Baxter weight 0, degree 1, cases (a)-(d).
pub fn rb0_deg1(n: usize, case: char, params: &Degree1Params) -> Result<HomogeneousOperator> {
    degree_one_dims(n)?;
    let split = degree_one_split(n);
    let psi = match (case, params) {
        ('a', Degree1Params::Psi1(p)) | ('b', Degree1Params::Psi1(p)) => {
            nonzero("psi1", p)?;
            formulas::degree_one_harmonic(n, p, case == 'b')?
        }
        ('c', Degree1Params::Multiple { t, v }) => {
            in_range("t", *t, 2, split)?;
            nonzero("v", v)?;
            formulas::shifted_harmonic(n, *t, v)?
        }
        ('d', Degree1Params::TwoSpike { r, v1, v2 }) => {
            in_range("r", *r, split + 1, n - 2)?;
            formulas::spikes(n, &[(*r, v1.clone()), (*r + 1, v2.clone())])
        }
        _ => return Err(wrong_params(case, params)),
    };
    hom(n, 1, psi)
}

/// Rota-Baxter weight 1, degree 0: `ψ(s) = a^s/((a+1)^s - a^s)`.
pub fn rb1_deg0(n: usize, a: &Scalar) -> Result<HomogeneousOperator> {
    hom(n, 0, formulas::rb1_geometric(n, a)?)
}

/// Rota-Baxter weight 1, degree `k >= 1`: zero below `⌊n/2⌋`, else `ψ(1) = v` only.
pub fn rb1_degk(n: usize, k: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    in_range("k", k, 1, n.saturating_sub(1))?;
    let psi = if k < n / 2 {
        vec![Scalar::zero(); n]
    } else {
        formulas::spikes(n, &[(1, v.clone())])
    };
    hom(n, k, psi)
}

/// Reynolds, degree 0, case (a): `ψ(mt) = v/(m - (m-1)v)`.
pub fn reynolds_deg0(n: usize, t: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    in_range("t", t, 1, n / 2)?;
    nonzero("v", v)?;
    hom(n, 0, formulas::reynolds_multiples(n, t, v)?)
}

pub fn reynolds_deg0_spike(n: usize, r: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    spike0(n, r, v)
}

/// Reynolds, degree 1, cases (a) and (b).
pub fn reynolds_deg1(n: usize, case: char, params: &Degree1Params) -> Result<HomogeneousOperator> {
    degree_one_dims(n)?;
    let split = degree_one_split(n);
    let psi = match (case, params) {
        ('a', Degree1Params::Multiple { t, v }) => {
            in_range("t", *t, 1, split)?;
            nonzero("v", v)?;
            formulas::shifted_harmonic(n, *t, v)?
        }
        ('b', Degree1Params::TwoSpike { r, v1, v2 }) => {
            in_range("r", *r, split + 1, n - 2)?;
            formulas::spikes(n, &[(*r, v1.clone()), (*r + 1, v2.clone())])
        }
        _ => return Err(wrong_params(case, params)),
    };
    hom(n, 1, psi)
}

/// Nijenhuis, degree 0: `ψ(i) = a`.
pub fn nijenhuis_deg0(n: usize, a: &Scalar) -> Result<HomogeneousOperator> {
    hom(n, 0, vec![a.clone(); n])
}

/// Nijenhuis, degree 1, cases (a)-(c). Case (a) takes both seeds `ψ(1)`, `ψ(2)`;
/// at `n = 2` the seed `ψ(2)` is the top index and must be 0.
pub fn nijenhuis_deg1(n: usize, case: char, params: &Degree1Params) -> Result<HomogeneousOperator> {
    degree_one_dims(n)?;
    let split = degree_one_split(n);
    let psi = match (case, params) {
        ('a', Degree1Params::Seeds(p1, p2)) => {
            nonzero("psi1", p1)?;
            if n == 2 && !p2.is_zero() {
                return Err(Error::InvalidParameter(
                    "psi2 is the top index at n = 2 and must be 0".to_string(),
                ));
            }
            formulas::nijenhuis_recurrence(n, p1, p2)?
        }
        ('b', Degree1Params::Multiple { t, v }) => {
            in_range("t", *t, 2, split)?;
            nonzero("v", v)?;
            formulas::shifted_harmonic(n, *t, v)?
        }
        ('c', Degree1Params::Spike { r, v }) => {
            in_range("r", *r, split + 1, n - 1)?;
            formulas::spikes(n, &[(*r, v.clone())])
        }
        _ => return Err(wrong_params(case, params)),
    };
    hom(n, 1, psi)
}

/// Average, degree 0, case (a): `ψ = v` on multiples of `t`.
pub fn average_deg0(n: usize, t: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    in_range("t", t, 1, n / 2)?;
    nonzero("v", v)?;
    hom(n, 0, formulas::constant_multiples(n, t, v))
}

pub fn average_deg0_spike(n: usize, r: usize, v: &Scalar) -> Result<HomogeneousOperator> {
    spike0(n, r, v)
}

/// Average, degree 1, cases (a)-(d). In case (d) with `r = n-1` the second
/// spike sits on the top index and is forced to 0.
pub fn average_deg1(n: usize, case: char, params: &Degree1Params) -> Result<HomogeneousOperator> {
    degree_one_dims(n)?;
    let split = degree_one_split(n);
    let psi = match (case, params) {
        ('a', Degree1Params::Psi1(p)) => {
            nonzero("psi1", p)?;
            formulas::degree_one_constant(n, 0, p)
        }
        ('b', Degree1Params::Psi1(p)) => {
            nonzero("psi1", p)?;
            formulas::degree_one_odd(n, p)
        }
        ('c', Degree1Params::Multiple { t, v }) => {
            in_range("t", *t, 2, split)?;
            nonzero("v", v)?;
            formulas::degree_one_constant(n, *t, v)
        }
        ('d', Degree1Params::TwoSpike { r, v1, v2 }) => {
            in_range("r", *r, split + 1, n - 1)?;
            let mut entries = vec![(*r, v1.clone())];
            if *r + 1 < n {
                entries.push((*r + 1, v2.clone()));
            }
            formulas::spikes(n, &entries)
        }
        _ => return Err(wrong_params(case, params)),
    };
    hom(n, 1, psi)
}

/// Arbitrary `ψ(1..n-k) = head`, zero tail, for `k >= max(1, ⌊n/2⌋)`.
/// The same family serves the Rota-Baxter weight 0, Reynolds, Nijenhuis and
/// average corollaries.
pub fn degk_head(n: usize, k: usize, psi_head: &[Scalar]) -> Result<HomogeneousOperator> {
    in_range("k", k, (n / 2).max(1), n.saturating_sub(1))?;
    if psi_head.len() != n - k {
        return Err(Error::DimensionMismatch {
            left: n - k,
            right: psi_head.len(),
        });
    }
    hom(n, k, formulas::head(n, psi_head))
}

pub fn rb0_degk(n: usize, k: usize, psi_head: &[Scalar]) -> Result<HomogeneousOperator> {
    degk_head(n, k, psi_head)
}

pub fn reynolds_degk(n: usize, k: usize, psi_head: &[Scalar]) -> Result<HomogeneousOperator> {
    degk_head(n, k, psi_head)
}

pub fn nijenhuis_degk(n: usize, k: usize, psi_head: &[Scalar]) -> Result<HomogeneousOperator> {
    degk_head(n, k, psi_head)
}

pub fn average_degk(n: usize, k: usize, psi_head: &[Scalar]) -> Result<HomogeneousOperator> {
    degk_head(n, k, psi_head)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    fn qs(v: &[&str]) -> Vec<Scalar> {
        v.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn named_values() {
        assert_eq!(rb1_deg0(4, &q("1")).unwrap().psi(), qs(&["1", "1/3", "1/7", "1/15"]));
        assert_eq!(rb0_deg0(4, 1, &q("1")).unwrap().psi(), qs(&["1", "1/2", "1/3", "1/4"]));
        assert_eq!(reynolds_deg0(3, 1, &q("1/2")).unwrap().psi(), qs(&["1/2", "1/3", "1/4"]));
        assert_eq!(rb0_deg0(5, 2, &q("3")).unwrap().psi(), qs(&["0", "3", "0", "3/2", "0"]));
    }

    #[test]
    fn singular_parameters_name_the_index() {
        match reynolds_deg0(4, 1, &q("2")) {
            Err(Error::SingularParameter { index, .. }) => assert_eq!(index, 2),
            other => panic!("{other:?}"),
        }
        match rb1_deg0(3, &q("-1/2")) {
            Err(Error::SingularParameter { index, .. }) => assert_eq!(index, 2),
            other => panic!("{other:?}"),
        }
        assert!(rb1_deg0(1, &q("-1/2")).is_ok());
        assert!(rb1_deg0(4, &q("0")).unwrap().psi().iter().all(Scalar::is_zero));
    }

    #[test]
    fn range_checks() {
        assert!(rb0_deg0(4, 3, &q("1")).is_err());
        assert!(rb0_deg0_spike(4, 2, &q("1")).is_err());
        assert!(degk_head(6, 2, &qs(&["1", "2", "3", "4"])).is_err());
        assert!(reynolds_deg1(4, 'a', &Degree1Params::Multiple { t: 2, v: q("1") }).is_err());
    }

    #[test]
    fn matrix_families() {
        let d = derivation_family(3, &qs(&["0", "1", "0"])).unwrap();
        assert_eq!(d.entry(2, 1), &q("1"));
        assert_eq!(d.entry(3, 2), &q("2"));
        assert!(d.image(3).is_zero());
        let phi = homomorphism_family(2, &qs(&["2", "0"])).unwrap();
        assert_eq!(phi.entry(2, 2), &q("4"));
        assert!(differential1_family(3, &qs(&["1", "0", "0"])).unwrap().is_zero());
    }
}
