//! Randomized family equality and the solver-versus-theorem comparison.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{classify, random_rational, Classification, SolutionFamily};
use crate::error::{Error, Result};
use crate::families::theorem_families;
use crate::operators::IdentityKind;
use crate::scalar::Scalar;

/// Largest accepted probability that unequal families pass every trial.
pub const MAX_FALSE_EQUAL: f64 = 1e-9;

/// Numerator and denominator bound of the sampled parameter values.
pub const SAMPLE_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityWitness {
    pub point: Vec<Scalar>,
    pub index: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub equal: bool,
    /// Unequal parameter counts; no sampling was done.
    pub structural: bool,
    pub trials: usize,
    /// Bound on the probability that unequal families agree at every trial.
    pub error_bound: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<EqualityWitness>,
}

/// Per-trial miss probability. A nonzero polynomial of total degree `d` in
/// independent coordinates vanishes with probability at most `d·μ`, where
/// `μ = 1/(2B+1)` bounds the mass of any single value `p/q`. Redrawing
/// points on the pole set (degree `poles`) inflates this by `1/(1 - poles·μ)`.
fn miss_probability(d: u32, poles: u32) -> f64 {
    let mu = 1.0 / (2.0 * SAMPLE_BOUND as f64 + 1.0);
    let p = f64::from(d) * mu / (1.0 - f64::from(poles) * mu);
    p.min(1.0)
}

fn degree_bounds(lhs: &SolutionFamily, rhs: &SolutionFamily) -> (u32, u32) {
    let mut d = 0;
    let mut poles = 0;
    for (a, b) in lhs.psi().iter().zip(rhs.psi()) {
        let (na, da) = (a.numer().total_degree(), a.denom().total_degree());
        let (nb, db) = (b.numer().total_degree(), b.denom().total_degree());
        d = d.max((na + db).max(nb + da));
        poles += da + db;
    }
    (d, poles)
}

/// Compares two families with parameters matched in order, by evaluation at
/// random rational points.
pub fn verify_equality<R: Rng + ?Sized>(
    lhs: &SolutionFamily,
    rhs: &SolutionFamily,
    trials: usize,
    rng: &mut R,
) -> Result<EqualityReport> {
    if lhs.identity() != rhs.identity() || lhs.degree() != rhs.degree() || lhs.n() != rhs.n() {
        return Err(Error::InvalidParameter(
            "families belong to different regimes".to_string(),
        ));
    }
    if lhs.params().len() != rhs.params().len() {
        return Ok(EqualityReport {
            equal: false,
            structural: true,
            trials: 0,
            error_bound: 0.0,
            witness: None,
        });
    }
    let (d, poles) = degree_bounds(lhs, rhs);
    let per_trial = miss_probability(d, poles);
    let mut needed = trials.max(1);
    if d > 0 {
        while per_trial.powi(needed as i32) > MAX_FALSE_EQUAL && needed < 10_000 {
            needed += 1;
        }
    }
    let count = lhs.params().len();
    for _ in 0..needed {
        let (point, a, b) = loop {
            let point: Vec<Scalar> = (0..count)
                .map(|_| random_rational(rng, SAMPLE_BOUND))
                .collect();
            if let (Ok(a), Ok(b)) = (lhs.specialize(&point), rhs.specialize(&point)) {
                break (point, a, b);
            }
        };
        if let Some(i) = (0..a.len()).find(|&i| a[i] != b[i]) {
            return Ok(EqualityReport {
                equal: false,
                structural: false,
                trials: needed,
                error_bound: 0.0,
                witness: Some(EqualityWitness {
                    point,
                    index: i + 1,
                    lhs: a[i].clone(),
                    rhs: b[i].clone(),
                }),
            });
        }
    }
    let error_bound = if d == 0 { 0.0 } else { per_trial.powi(needed as i32) };
    Ok(EqualityReport {
        equal: true,
        structural: false,
        trials: needed,
        error_bound,
        witness: None,
    })
}

/// The classified families for the regime, labelled, with equal entries
/// collapsed into one label.
pub fn theorem_solution_families(
    kind: &IdentityKind,
    n: usize,
    k: usize,
) -> Result<Vec<(String, SolutionFamily)>> {
    let mut out: Vec<(String, SolutionFamily)> = Vec::new();
    for fam in theorem_families(kind, n, k)? {
        let sf = SolutionFamily::from_values(kind.clone(), k, fam.psi)?;
        match out.iter_mut().find(|(_, g)| g.psi() == sf.psi()) {
            Some((label, _)) => {
                label.push_str(" = ");
                label.push_str(&fam.label);
            }
            None => out.push((fam.label, sf)),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchedPair {
    pub theorem: String,
    pub solver: usize,
    pub error_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub identity: String,
    pub degree: usize,
    pub n: usize,
    pub matched: Vec<MatchedPair>,
    /// Theorem families with no equal solver family.
    pub unmatched_theorem: Vec<String>,
    /// Solver families with no equal theorem family, rendered.
    pub unmatched_solver: Vec<Vec<String>>,
    /// Theorem families contained in another theorem family.
    pub subsumed: Vec<String>,
    /// Branches the solver could not follow.
    pub notes: Vec<String>,
    /// Every theorem family lies inside some solver family.
    pub theorem_covered: bool,
    pub max_error_bound: f64,
    pub perfect: bool,
}

/// Matches solver output against the maximal theorem families.
pub fn verify_completeness<R: Rng + ?Sized>(
    kind: &IdentityKind,
    degree: usize,
    n: usize,
    trials: usize,
    rng: &mut R,
) -> Result<CompletenessReport> {
    let solved = classify(kind, degree, n)?;
    compare_with_theorems(&solved, trials, rng)
}

/// [`verify_completeness`] on an existing classification.
pub fn compare_with_theorems<R: Rng + ?Sized>(
    solved: &Classification,
    trials: usize,
    rng: &mut R,
) -> Result<CompletenessReport> {
    let theorem = theorem_solution_families(&solved.identity, solved.n, solved.degree)?;
    let mut subsumed = Vec::new();
    let mut maximal: Vec<(String, SolutionFamily)> = Vec::new();
    for (i, (label, fam)) in theorem.iter().enumerate() {
        let inside = theorem
            .iter()
            .enumerate()
            .any(|(j, (_, g))| j != i && g.contains(fam) && !fam.contains(g));
        if inside {
            subsumed.push(label.clone());
        } else {
            maximal.push((label.clone(), fam.clone()));
        }
    }
    let theorem_covered = theorem
        .iter()
        .all(|(_, t)| solved.families.iter().any(|s| s.contains(t)));
    let mut used = vec![false; solved.families.len()];
    let mut matched = Vec::new();
    let mut unmatched_theorem = Vec::new();
    let mut max_error_bound: f64 = 0.0;
    for (label, fam) in &maximal {
        let hit = solved
            .families
            .iter()
            .enumerate()
            .find(|(j, s)| !used[*j] && s.contains(fam) && fam.contains(s));
        let confirmed = match hit {
            Some((j, s)) => {
                let report = verify_equality(fam, s, trials, rng)?;
                report.equal.then_some((j, report.error_bound))
            }
            None => None,
        };
        match confirmed {
            Some((j, bound)) => {
                used[j] = true;
                max_error_bound = max_error_bound.max(bound);
                matched.push(MatchedPair {
                    theorem: label.clone(),
                    solver: j,
                    error_bound: bound,
                });
            }
            None => unmatched_theorem.push(label.clone()),
        }
    }
    let unmatched_solver: Vec<Vec<String>> = solved
        .families
        .iter()
        .zip(&used)
        .filter(|(_, u)| !**u)
        .map(|(s, _)| s.render_psi())
        .collect();
    let perfect = unmatched_theorem.is_empty()
        && unmatched_solver.is_empty()
        && solved.notes.is_empty()
        && max_error_bound <= MAX_FALSE_EQUAL;
    Ok(CompletenessReport {
        identity: solved.identity.to_string(),
        degree: solved.degree,
        n: solved.n,
        matched,
        unmatched_theorem,
        unmatched_solver,
        subsumed,
        notes: solved.notes.clone(),
        theorem_covered,
        max_error_bound,
        perfect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mrat::MultiRat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn self_equality_and_witness() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let rb = classify(&IdentityKind::RotaBaxter(Scalar::zero()), 0, 3).unwrap();
        let re = classify(&IdentityKind::Reynolds, 0, 3).unwrap();
        let f = &rb.families[0];
        let r = verify_equality(f, f, 5, &mut rng).unwrap();
        assert!(r.equal && r.error_bound <= MAX_FALSE_EQUAL);
        // same regime required
        assert!(verify_equality(f, &re.families[0], 5, &mut rng).is_err());
        let g = SolutionFamily::from_values(
            f.identity().clone(),
            0,
            vec![MultiRat::var(0), MultiRat::var(0), MultiRat::zero()],
        )
        .unwrap();
        let r = verify_equality(f, &g, 5, &mut rng).unwrap();
        assert!(!r.equal);
        assert_eq!(r.witness.unwrap().index, 2);
    }

    #[test]
    fn average_degree_zero_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = verify_completeness(&IdentityKind::Average, 0, 6, 3, &mut rng).unwrap();
        assert!(r.perfect, "{r:?}");
        assert_eq!(r.matched.len(), 6);
    }
}
