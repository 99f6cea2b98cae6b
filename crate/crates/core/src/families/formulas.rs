//! Closed-form weight functions, generic over the coefficient field so the
//! same code yields concrete operators and symbolic families.

use crate::error::{Error, Result};
use crate::ring::Field;
use crate::scalar::Scalar;

fn int<F: Field>(v: i64) -> F {
    F::from_scalar(&Scalar::from_int(v))
}

fn zeros<F: Field>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

fn checked_div<F: Field>(num: &F, den: &F, index: usize) -> Result<F> {
    if den.is_zero() {
        return Err(Error::SingularParameter {
            index,
            detail: "denominator vanishes".to_string(),
        });
    }
    num.div(den)
}

/// `ψ(mt) = v/m`, zero off the multiples of `t`.
pub fn harmonic_multiples<F: Field>(n: usize, t: usize, v: &F) -> Result<Vec<F>> {
    let mut psi = zeros(n);
    for m in 1..=n / t {
        psi[m * t - 1] = v.div(&int(m as i64))?;
    }
    Ok(psi)
}

/// `ψ(mt) = v/(m - (m-1)v)`, zero off the multiples of `t`.
pub fn reynolds_multiples<F: Field>(n: usize, t: usize, v: &F) -> Result<Vec<F>> {
    let mut psi = zeros(n);
    for m in 1..=n / t {
        let den = int::<F>(m as i64).sub(&int::<F>(m as i64 - 1).mul(v));
        psi[m * t - 1] = checked_div(v, &den, m * t).map_err(|e| match e {
            Error::SingularParameter { index, .. } => Error::SingularParameter {
                index,
                detail: format!(
                    "v = {} is a pole: {m} - {}v vanishes",
                    Scalar::new(m as i64, m as i64 - 1).expect("m >= 2"),
                    if m == 2 { String::new() } else { (m - 1).to_string() }
                ),
            },
            other => other,
        })?;
    }
    Ok(psi)
}

/// `ψ(mt) = v`, zero off the multiples of `t`.
pub fn constant_multiples<F: Field>(n: usize, t: usize, v: &F) -> Vec<F> {
    let mut psi = zeros(n);
    for m in 1..=n / t {
        psi[m * t - 1] = v.clone();
    }
    psi
}

/// Degree-one pattern: `ψ(i) = (t+1)v/(i+1)` where `t+1` divides `i+1`,
/// for `i <= n-1`; `ψ(n) = 0`.
pub fn shifted_harmonic<F: Field>(n: usize, t: usize, v: &F) -> Result<Vec<F>> {
    let mut psi = zeros(n);
    let step = t + 1;
    let tv = v.mul(&int(step as i64));
    for i in 1..n {
        if (i + 1) % step == 0 {
            psi[i - 1] = tv.div(&int((i + 1) as i64))?;
        }
    }
    Ok(psi)
}

/// `ψ(i) = 2ψ(1)/(i+1)` for `i <= n-1` (all `i`, or odd `i` only).
pub fn degree_one_harmonic<F: Field>(n: usize, psi1: &F, odd_only: bool) -> Result<Vec<F>> {
    let mut psi = zeros(n);
    let two = psi1.mul(&int(2));
    for i in 1..n {
        if !odd_only || i % 2 == 1 {
            psi[i - 1] = two.div(&int((i + 1) as i64))?;
        }
    }
    Ok(psi)
}

/// `ψ(i) = v` where `t+1` divides `i+1` (or every `i` when `t = 0`), for
/// `i <= n-1`.
pub fn degree_one_constant<F: Field>(n: usize, t: usize, v: &F) -> Vec<F> {
    let mut psi = zeros(n);
    for i in 1..n {
        if t == 0 || (i + 1) % (t + 1) == 0 {
            psi[i - 1] = v.clone();
        }
    }
    psi
}

/// `ψ(i) = v` for odd `i <= n-1`.
pub fn degree_one_odd<F: Field>(n: usize, v: &F) -> Vec<F> {
    let mut psi = zeros(n);
    for i in (1..n).step_by(2) {
        psi[i - 1] = v.clone();
    }
    psi
}

/// `ψ(s) = a^s/((a+1)^s - a^s)`.
pub fn rb1_geometric<F: Field>(n: usize, a: &F) -> Result<Vec<F>> {
    let a1 = a.add(&F::one());
    let (mut pa, mut pa1) = (F::one(), F::one());
    let mut psi = Vec::with_capacity(n);
    for s in 1..=n {
        pa = pa.mul(a);
        pa1 = pa1.mul(&a1);
        let den = pa1.sub(&pa);
        psi.push(checked_div(&pa, &den, s).map_err(|e| match e {
            Error::SingularParameter { index, .. } => Error::SingularParameter {
                index,
                detail: format!("(a+1)^{s} = a^{s}"),
            },
            other => other,
        })?);
    }
    Ok(psi)
}

/// `ψ(i) = ψ(1)ψ(i-2)/(ψ(1) + ψ(i-2) - ψ(i-1))` for `3 <= i <= n-1`, seeded
/// by `ψ(1), ψ(2)`; `ψ(n) = 0`.
pub fn nijenhuis_recurrence<F: Field>(n: usize, psi1: &F, psi2: &F) -> Result<Vec<F>> {
    let mut psi = zeros(n);
    psi[0] = psi1.clone();
    if n >= 3 {
        psi[1] = psi2.clone();
    }
    for i in 3..n {
        let den = psi1.add(&psi[i - 3]).sub(&psi[i - 2]);
        let num = psi1.mul(&psi[i - 3]);
        psi[i - 1] = checked_div(&num, &den, i).map_err(|e| match e {
            Error::SingularParameter { index, .. } => Error::SingularParameter {
                index,
                detail: format!("ψ(1) + ψ({}) - ψ({}) vanishes", i - 2, i - 1),
            },
            other => other,
        })?;
    }
    Ok(psi)
}

/// Nonzero values only at the listed `(index, value)` positions.
pub fn spikes<F: Field>(n: usize, entries: &[(usize, F)]) -> Vec<F> {
    let mut psi = zeros(n);
    for (i, v) in entries {
        psi[i - 1] = v.clone();
    }
    psi
}

/// `ψ(1..len) = head`, zero above.
pub fn head<F: Field>(n: usize, head: &[F]) -> Vec<F> {
    let mut psi = zeros(n);
    psi[..head.len()].clone_from_slice(head);
    psi
}
