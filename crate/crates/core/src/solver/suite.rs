//! The theorem-verification suite: one row per check, subject and dimension.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{classify, compare_with_theorems, random_rational, solve_system, Classification};
use crate::algebra::{basis_product, multiply, power, AlgebraDims, AlgebraElement};
use crate::error::Result;
use crate::families::{classified_regime, sample_constructions};
use crate::mpoly::MPoly;
use crate::mrat::MultiRat;
use crate::operators::{
    check_identity, printed_system, reduce_to_psi_equations, IdentityKind, MatrixOperator,
    PrintedEquation,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub n_max: usize,
    /// Random draws per constructor and random points per solver family.
    pub samples: usize,
    pub seed: u64,
    /// Trials per randomized family comparison (raised as the bound requires).
    pub trials: usize,
    /// Flips one sign in the displayed equations.
    pub mutant: Option<PrintedEquation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 8,
            samples: 20,
            seed: 42,
            trials: 3,
            mutant: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Pass,
    /// Everything computed is sound but the classification differs from the
    /// solver's: the solver finds solutions the statement does not list.
    Finding,
    Fail,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            RowStatus::Pass => "PASS",
            RowStatus::Finding => "FINDING",
            RowStatus::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub check: String,
    pub subject: String,
    pub n: usize,
    pub status: RowStatus,
    pub detail: String,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<7}  {:<14}  {:<40}  n={:<2}  {}",
            self.status, self.check, self.subject, self.n, self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub rows: Vec<Row>,
    pub passed: usize,
    pub findings: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.findings == 0 && self.failed == 0
    }
}

fn row(check: &str, subject: impl Into<String>, n: usize, status: RowStatus, detail: String) -> Row {
    Row {
        check: check.to_string(),
        subject: subject.into(),
        n,
        status,
        detail,
    }
}

fn pass_fail(ok: bool) -> RowStatus {
    if ok {
        RowStatus::Pass
    } else {
        RowStatus::Fail
    }
}

const KINDS: usize = 5;

fn kind(i: usize) -> IdentityKind {
    match i {
        0 => IdentityKind::RotaBaxter(Scalar::zero()),
        1 => IdentityKind::RotaBaxter(Scalar::one()),
        2 => IdentityKind::Reynolds,
        3 => IdentityKind::Nijenhuis,
        _ => IdentityKind::Average,
    }
}

#[derive(Debug, Clone)]
enum Cell {
    Algebra(usize),
    Soundness(usize),
    Correspondence(usize),
    Regime(usize, usize, usize),
}

/// Runs every cell, in parallel, with per-cell seeds; rows come back in cell
/// order regardless of scheduling.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let mut cells = Vec::new();
    for n in 1..=config.n_max {
        cells.push(Cell::Algebra(n));
        cells.push(Cell::Soundness(n));
        cells.push(Cell::Correspondence(n));
        for ki in 0..KINDS {
            for k in 0..n {
                if classified_regime(&kind(ki), n, k).is_ok() {
                    cells.push(Cell::Regime(ki, k, n));
                }
            }
        }
    }
    let rows: Vec<Row> = cells
        .par_iter()
        .enumerate()
        .map(|(i, cell)| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i as u64);
            run_cell(cell, config, &mut rng)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let count = |s| rows.iter().filter(|r| r.status == s).count();
    SuiteReport {
        passed: count(RowStatus::Pass),
        findings: count(RowStatus::Finding),
        failed: count(RowStatus::Fail),
        rows,
    }
}

fn run_cell(cell: &Cell, config: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Row> {
    match *cell {
        Cell::Algebra(n) => vec![algebra_row(n)],
        Cell::Soundness(n) => soundness_rows(n, config.samples, rng),
        Cell::Correspondence(n) => vec![correspondence_row(n, config.samples, rng)],
        Cell::Regime(ki, k, n) => regime_rows(&kind(ki), k, n, config, rng),
    }
}

fn algebra_row(n: usize) -> Row {
    let dims = AlgebraDims::new(n).expect("n >= 1");
    let mut ok = true;
    'outer: for i in 1..=n {
        for j in 1..=n {
            let ij = basis_product(i, j, dims).expect("in range");
            if ij != basis_product(j, i, dims).expect("in range") {
                ok = false;
                break 'outer;
            }
            for k in 1..=n {
                let ek = AlgebraElement::basis(k, dims).expect("in range");
                let ei = AlgebraElement::basis(i, dims).expect("in range");
                let left = multiply(&ij, &ek).expect("same n");
                let jk = basis_product(j, k, dims).expect("in range");
                if left != multiply(&ei, &jk).expect("same n") {
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    let e1 = AlgebraElement::basis(1, dims).expect("n >= 1");
    for k in 1..=(n + 1) as u32 {
        let p = power(&e1, k).expect("k >= 1");
        let expected = if k as usize <= n {
            AlgebraElement::basis(k as usize, dims).expect("in range")
        } else {
            AlgebraElement::zero(dims)
        };
        ok &= p == expected;
    }
    row(
        "algebra",
        "associative, commutative, e1^k = ek",
        n,
        pass_fail(ok),
        format!("{} triples", n * n * n),
    )
}

fn soundness_rows(n: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<Row> {
    let mut rows: Vec<(String, usize, Option<String>)> = Vec::new();
    for _ in 0..samples {
        for (desc, op) in sample_constructions(n, rng) {
            let name = desc.constructor();
            let idx = match rows.iter().position(|(r, _, _)| *r == name) {
                Some(i) => i,
                None => {
                    rows.push((name, 0, None));
                    rows.len() - 1
                }
            };
            let kind = desc.kind().expect("sampled descriptors are valid");
            let report = check_identity(&kind, &op.to_matrix());
            rows[idx].1 += 1;
            if !report.passed() && rows[idx].2.is_none() {
                let w = report.witness.expect("failures carry a witness");
                rows[idx].2 = Some(format!(
                    "{} fails at (e{}, e{}): {}",
                    serde_json::to_string(&desc).unwrap_or_default(),
                    w.i,
                    w.j,
                    serde_json::to_string(&w.lhs.coeffs()).unwrap_or_default()
                ));
            }
        }
    }
    rows.into_iter()
        .map(|(name, count, failure)| {
            let status = pass_fail(failure.is_none());
            let detail = failure.unwrap_or_else(|| format!("{count} draws pass"));
            row("soundness", name, n, status, detail)
        })
        .collect()
}

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> MatrixOperator {
    let dims = AlgebraDims::new(n).expect("n >= 1");
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        Scalar::zero()
                    } else {
                        random_rational(rng, 3)
                    }
                })
                .collect()
        })
        .collect();
    MatrixOperator::new(dims, rows).expect("square")
}

fn correspondence_row(n: usize, samples: usize, rng: &mut ChaCha8Rng) -> Row {
    let dims = AlgebraDims::new(n).expect("n >= 1");
    let id = MatrixOperator::identity(dims);
    let mut operators: Vec<MatrixOperator> = (0..samples).map(|_| random_matrix(n, rng)).collect();
    for _ in 0..samples {
        for (desc, op) in sample_constructions(n, rng) {
            let m = op.to_matrix();
            match desc.identity.as_str() {
                "homomorphism" => operators.push(m.sub(&id).expect("same n")),
                "differential" => operators.push(m),
                _ => {}
            }
        }
    }
    let diff = IdentityKind::Differential(Scalar::one());
    let mut both = 0;
    let mut disagreement = None;
    for m in &operators {
        let d = check_identity(&diff, m).passed();
        let h = check_identity(&IdentityKind::Homomorphism, &m.add(&id).expect("same n")).passed();
        both += usize::from(d);
        if d != h && disagreement.is_none() {
            disagreement = Some(serde_json::to_string(m).unwrap_or_default());
        }
    }
    let status = pass_fail(disagreement.is_none());
    let detail = match disagreement {
        Some(m) => format!("verdicts differ on {m}"),
        None => format!("{} operators agree, {both} pass both", operators.len()),
    };
    row("correspondence", "differential(1) vs homomorphism(M + I)", n, status, detail)
}

/// `true` when every relation vanishes identically on the family.
fn satisfies(psi: &[MultiRat], relations: &[MPoly]) -> bool {
    let map = psi.iter().cloned().enumerate().collect();
    relations.iter().all(|r| {
        MultiRat::from_poly(r.clone())
            .substitute_all(&map)
            .map(|v| v.is_zero())
            .unwrap_or(false)
    })
}

fn family_soundness(c: &Classification, samples: usize, rng: &mut ChaCha8Rng) -> Option<String> {
    for f in &c.families {
        for _ in 0..samples {
            let point = f.random_point(rng, 1000);
            let m = f.matrix_at(&point).expect("random points avoid poles");
            let report = check_identity(&c.identity, &m);
            if !report.passed() {
                return Some(format!(
                    "solver family ({}) fails at {:?}",
                    f.render_psi().join(", "),
                    point.iter().map(|p| p.to_string()).collect::<Vec<_>>()
                ));
            }
        }
    }
    None
}

fn regime_rows(
    kind: &IdentityKind,
    k: usize,
    n: usize,
    config: &SuiteConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<Row> {
    let subject = format!("{kind} degree {k}");
    let mut rows = Vec::new();
    let solved = match classify(kind, k, n) {
        Ok(c) => c,
        Err(e) => return vec![row("completeness", subject, n, RowStatus::Fail, e.to_string())],
    };
    rows.push(completeness_row(&solved, &subject, config, rng));
    if let Some(r) = printed_row(&solved, kind, k, n, config.mutant) {
        rows.push(r);
    }
    rows
}

fn completeness_row(
    solved: &Classification,
    subject: &str,
    config: &SuiteConfig,
    rng: &mut ChaCha8Rng,
) -> Row {
    let n = solved.n;
    if let Some(failure) = family_soundness(solved, config.samples.min(10), rng) {
        return row("completeness", subject, n, RowStatus::Fail, failure);
    }
    let report = match compare_with_theorems(solved, config.trials, rng) {
        Ok(r) => r,
        Err(e) => return row("completeness", subject, n, RowStatus::Fail, e.to_string()),
    };
    let fmt_families = |fs: &[Vec<String>]| {
        fs.iter()
            .map(|f| format!("({})", f.join(", ")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut detail = format!(
        "{} matched, bound {:.1e}",
        report.matched.len(),
        report.max_error_bound
    );
    if !report.subsumed.is_empty() {
        detail.push_str(&format!("; subsumed: {}", report.subsumed.join(", ")));
    }
    if !report.unmatched_theorem.is_empty() {
        detail.push_str(&format!(
            "; theorem only: {}",
            report.unmatched_theorem.join(", ")
        ));
    }
    if !report.unmatched_solver.is_empty() {
        detail.push_str(&format!(
            "; solver only: {}",
            fmt_families(&report.unmatched_solver)
        ));
    }
    if !report.notes.is_empty() {
        detail.push_str(&format!("; unresolved: {}", report.notes.join(" | ")));
    }
    let status = if report.perfect {
        RowStatus::Pass
    } else if report.theorem_covered && report.notes.is_empty() {
        RowStatus::Finding
    } else {
        RowStatus::Fail
    };
    row("completeness", subject, n, status, detail)
}

/// Compares the displayed system with the identity. Identity solutions that
/// violate a displayed equation fail the row; displayed-system solutions that
/// violate the identity are a finding.
fn printed_row(
    solved: &Classification,
    kind: &IdentityKind,
    k: usize,
    n: usize,
    mutant: Option<PrintedEquation>,
) -> Option<Row> {
    let system = printed_system(kind, n, k, mutant)?;
    let mut forms: Vec<&str> = system.iter().map(|c| c.equation.label()).collect();
    forms.dedup();
    forms.sort_unstable();
    forms.dedup();
    let subject = format!("{kind} degree {k} [{}]", forms.join(", "));
    let printed: Vec<MPoly> = system.into_iter().map(|c| c.relation).collect();
    let violating = solved
        .families
        .iter()
        .find(|f| !satisfies(f.psi(), &printed));
    if let Some(f) = violating {
        let detail = format!(
            "identity solution ({}) violates the displayed system",
            f.render_psi().join(", ")
        );
        return Some(row("printed", subject, n, RowStatus::Fail, detail));
    }
    let dims = AlgebraDims::new(n).expect("n >= 1");
    let identity: Vec<MPoly> = match reduce_to_psi_equations(kind, dims, k) {
        Ok(cs) => cs.into_iter().map(|c| c.relation).collect(),
        Err(e) => return Some(row("printed", subject, n, RowStatus::Fail, e.to_string())),
    };
    let result: Result<Classification> = solve_system(kind.clone(), k, n, printed);
    let displayed = match result {
        Ok(c) => c,
        Err(e) => return Some(row("printed", subject, n, RowStatus::Fail, e.to_string())),
    };
    let extra: Vec<String> = displayed
        .families
        .iter()
        .filter(|f| !satisfies(f.psi(), &identity))
        .map(|f| format!("({})", f.render_psi().join(", ")))
        .collect();
    let (status, detail) = if !extra.is_empty() {
        (
            RowStatus::Finding,
            format!("displayed system also admits {}", extra.join(" ")),
        )
    } else if !displayed.notes.is_empty() {
        (
            RowStatus::Fail,
            format!("unresolved: {}", displayed.notes.join(" | ")),
        )
    } else {
        (RowStatus::Pass, "equivalent to the identity".to_string())
    };
    Some(row("printed", subject, n, status, detail))
}
