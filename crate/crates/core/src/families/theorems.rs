//! The classified families in symbolic form, one entry per case and per
//! discrete choice of `t` or `r`. Every free parameter is a coordinate: the
//! variable `v` stands for `ψ(v+1)` and the family takes the value `x_v` there.

use super::{degree_one_split, formulas};
use crate::error::{Error, Result};
use crate::mrat::MultiRat;
use crate::operators::IdentityKind;

/// Which classification applies to `(identity, n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Degree0,
    /// `k = 1` below the arbitrary-head threshold.
    Degree1,
    /// `k >= max(1, ⌊n/2⌋)`. At `k = 1` the degree-one cases apply as well.
    Head,
    /// Rota-Baxter weight 1 with `1 <= k < ⌊n/2⌋`: only the zero operator.
    Vanishing,
    /// Rota-Baxter weight 1 with `k >= ⌊n/2⌋`: only `ψ(1)` survives.
    FirstOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremFamily {
    pub label: String,
    pub psi: Vec<MultiRat>,
}

impl TheoremFamily {
    fn new(label: String, psi: Vec<MultiRat>) -> Self {
        TheoremFamily { label, psi }
    }
}

fn supported(kind: &IdentityKind) -> Result<()> {
    match kind {
        IdentityKind::RotaBaxter(w) if w.is_zero() || w.is_one() => Ok(()),
        IdentityKind::Reynolds | IdentityKind::Nijenhuis | IdentityKind::Average => Ok(()),
        other => Err(Error::UnclassifiedRegime(format!(
            "no classification for {other}"
        ))),
    }
}

/// The regime for `(kind, n, k)`, or an unclassified-regime error.
pub fn classified_regime(kind: &IdentityKind, n: usize, k: usize) -> Result<Regime> {
    supported(kind)?;
    if n == 0 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "degree {k} outside 0..={}",
            n.saturating_sub(1)
        )));
    }
    let half = n / 2;
    let rb1 = matches!(kind, IdentityKind::RotaBaxter(w) if w.is_one());
    Ok(match k {
        0 => Regime::Degree0,
        _ if rb1 && k < half => Regime::Vanishing,
        _ if rb1 => Regime::FirstOnly,
        _ if k >= half.max(1) => Regime::Head,
        1 => Regime::Degree1,
        _ => {
            return Err(Error::UnclassifiedRegime(format!(
                "{kind} with degree {k} at n = {n} (2 <= k < {half})"
            )))
        }
    })
}

fn x(v: usize) -> MultiRat {
    MultiRat::var(v)
}

fn zeros(n: usize) -> Vec<MultiRat> {
    vec![MultiRat::zero(); n]
}

/// Every classified family for `(kind, n, k)`, without removing overlaps.
pub fn theorem_families(kind: &IdentityKind, n: usize, k: usize) -> Result<Vec<TheoremFamily>> {
    let regime = classified_regime(kind, n, k)?;
    let mut out = Vec::new();
    let half = n / 2;
    let split = degree_one_split(n);
    let spikes0 = |out: &mut Vec<TheoremFamily>| {
        for r in half + 1..=n {
            out.push(TheoremFamily::new(
                format!("case (b) r={r}"),
                formulas::spikes(n, &[(r, x(r - 1))]),
            ));
        }
    };
    let two_spikes = |out: &mut Vec<TheoremFamily>, case: char, hi: usize| {
        for r in split + 1..=hi {
            let mut entries = vec![(r, x(r - 1))];
            if r + 1 < n {
                entries.push((r + 1, x(r)));
            }
            out.push(TheoremFamily::new(
                format!("case ({case}) r={r}"),
                formulas::spikes(n, &entries),
            ));
        }
    };
    match regime {
        Regime::Vanishing => out.push(TheoremFamily::new("case (b)".into(), zeros(n))),
        Regime::FirstOnly => out.push(TheoremFamily::new(
            "case (c)".into(),
            formulas::spikes(n, &[(1, x(0))]),
        )),
        Regime::Degree0 => match kind {
            IdentityKind::RotaBaxter(w) if w.is_zero() => {
                for t in 1..=half {
                    out.push(TheoremFamily::new(
                        format!("case (a) t={t}"),
                        formulas::harmonic_multiples(n, t, &x(t - 1))?,
                    ));
                }
                spikes0(&mut out);
            }
            IdentityKind::RotaBaxter(_) => out.push(TheoremFamily::new(
                "case (a)".into(),
                formulas::rb1_geometric(n, &x(0))?,
            )),
            IdentityKind::Reynolds => {
                for t in 1..=half {
                    out.push(TheoremFamily::new(
                        format!("case (a) t={t}"),
                        formulas::reynolds_multiples(n, t, &x(t - 1))?,
                    ));
                }
                spikes0(&mut out);
            }
            IdentityKind::Nijenhuis => out.push(TheoremFamily::new(
                "constant".into(),
                vec![x(0); n],
            )),
            _ => {
                for t in 1..=half {
                    out.push(TheoremFamily::new(
                        format!("case (a) t={t}"),
                        formulas::constant_multiples(n, t, &x(t - 1)),
                    ));
                }
                spikes0(&mut out);
            }
        },
        Regime::Degree1 | Regime::Head => {
            if k == 1 {
                degree_one(kind, n, split, &mut out, &two_spikes)?;
            }
            if regime == Regime::Head {
                let head: Vec<_> = (0..n - k).map(x).collect();
                out.push(TheoremFamily::new(
                    "arbitrary head".into(),
                    formulas::head(n, &head),
                ));
            }
        }
    }
    Ok(out)
}

fn degree_one(
    kind: &IdentityKind,
    n: usize,
    split: usize,
    out: &mut Vec<TheoremFamily>,
    two_spikes: &dyn Fn(&mut Vec<TheoremFamily>, char, usize),
) -> Result<()> {
    let multiples = |out: &mut Vec<TheoremFamily>, case: char, lo: usize, constant: bool| {
        for t in lo..=split {
            let psi = if constant {
                formulas::degree_one_constant(n, t, &x(t - 1))
            } else {
                formulas::shifted_harmonic(n, t, &x(t - 1)).expect("integer denominators")
            };
            out.push(TheoremFamily::new(format!("case ({case}) t={t}"), psi));
        }
    };
    match kind {
        IdentityKind::RotaBaxter(_) => {
            out.push(TheoremFamily::new(
                "case (a)".into(),
                formulas::degree_one_harmonic(n, &x(0), false)?,
            ));
            out.push(TheoremFamily::new(
                "case (b)".into(),
                formulas::degree_one_harmonic(n, &x(0), true)?,
            ));
            multiples(out, 'c', 2, false);
            two_spikes(out, 'd', n - 2);
        }
        IdentityKind::Reynolds => {
            multiples(out, 'a', 1, false);
            two_spikes(out, 'b', n - 2);
        }
        IdentityKind::Nijenhuis => {
            let seed2 = if n >= 3 { x(1) } else { MultiRat::zero() };
            out.push(TheoremFamily::new(
                "case (a)".into(),
                formulas::nijenhuis_recurrence(n, &x(0), &seed2)?,
            ));
            multiples(out, 'b', 2, false);
            for r in split + 1..n {
                out.push(TheoremFamily::new(
                    format!("case (c) r={r}"),
                    formulas::spikes(n, &[(r, x(r - 1))]),
                ));
            }
        }
        _ => {
            out.push(TheoremFamily::new(
                "case (a)".into(),
                formulas::degree_one_constant(n, 0, &x(0)),
            ));
            out.push(TheoremFamily::new(
                "case (b)".into(),
                formulas::degree_one_odd(n, &x(0)),
            ));
            multiples(out, 'c', 2, true);
            two_spikes(out, 'd', n - 1);
        }
    }
    Ok(())
}
