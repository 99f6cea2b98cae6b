//! Re-derivation of the classifications by exhaustive branching over the
//! `ψ` constraint systems, and comparison with the closed-form families.

mod engine;
mod suite;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::classified_regime;
use crate::mpoly::MPoly;
use crate::mrat::{primitive_factor, MultiRat};
use crate::operators::{
    hom_to_matrix, printed_system, reduce_to_psi_equations, HomogeneousOperator, IdentityKind,
    MatrixOperator, PrintedEquation,
};
use crate::scalar::Scalar;
use crate::algebra::AlgebraDims;

pub use suite::{run_suite, Row, RowStatus, SuiteConfig, SuiteReport};
pub use verify::{
    compare_with_theorems, theorem_solution_families, verify_completeness, verify_equality, CompletenessReport,
    EqualityReport, MAX_FALSE_EQUAL,
};

/// One entry of a family's assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymbolicValue {
    Zero,
    FreeParam(String),
    Expr(String),
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicValue::Zero => f.write_str("0"),
            SymbolicValue::FreeParam(s) | SymbolicValue::Expr(s) => f.write_str(s),
        }
    }
}

/// A parametric set of weight functions. Each free parameter is the value of
/// `ψ` at its own index, so `psi[p] = x_p` for every parameter `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFamily {
    identity: IdentityKind,
    degree: usize,
    psi: Vec<MultiRat>,
    params: Vec<usize>,
    excluded: Vec<(usize, Scalar)>,
    singular: Vec<MPoly>,
}

/// `a, b, ..., z, a1, b1, ...` in parameter order.
pub fn param_name(rank: usize) -> String {
    let letter = (b'a' + (rank % 26) as u8) as char;
    match rank / 26 {
        0 => letter.to_string(),
        k => format!("{letter}{k}"),
    }
}

impl SolutionFamily {
    /// Builds a family from values in coordinate parameters, deriving the
    /// exclusions from the denominators.
    pub fn from_values(identity: IdentityKind, degree: usize, psi: Vec<MultiRat>) -> Result<Self> {
        let mut params = std::collections::BTreeSet::new();
        for v in &psi {
            params.extend(v.vars());
        }
        for &p in &params {
            if p >= psi.len() || psi[p] != MultiRat::var(p) {
                return Err(Error::InvalidParameter(format!(
                    "parameter x{p} is not a coordinate of the family"
                )));
            }
        }
        let mut excluded: Vec<(usize, Scalar)> = Vec::new();
        let mut singular: Vec<MPoly> = Vec::new();
        for v in &psi {
            let den = v.denom();
            if den.is_constant() {
                continue;
            }
            let vars = den.vars();
            if vars.len() == 1 {
                let p = *vars.iter().next().expect("one variable");
                let poly = den.to_polynomial(p, "x").expect("univariate");
                for r in poly.rational_roots() {
                    if !excluded.contains(&(p, r.clone())) {
                        excluded.push((p, r));
                    }
                }
            } else if !singular.contains(den) {
                singular.push(den.clone());
            }
        }
        Ok(SolutionFamily {
            identity,
            degree,
            psi,
            params: params.into_iter().collect(),
            excluded,
            singular,
        })
    }

    pub fn identity(&self) -> &IdentityKind {
        &self.identity
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn n(&self) -> usize {
        self.psi.len()
    }

    pub fn psi(&self) -> &[MultiRat] {
        &self.psi
    }

    /// Coordinates of the free parameters, ascending.
    pub fn params(&self) -> &[usize] {
        &self.params
    }

    pub fn free_names(&self) -> Vec<String> {
        (0..self.params.len()).map(param_name).collect()
    }

    fn namer(&self) -> impl Fn(usize) -> String + '_ {
        move |v| {
            self.params
                .iter()
                .position(|&p| p == v)
                .map(param_name)
                .unwrap_or_else(|| format!("x{v}"))
        }
    }

    pub fn render_psi(&self) -> Vec<String> {
        let names = self.namer();
        self.psi.iter().map(|v| v.render(&names)).collect()
    }

    pub fn assignment(&self) -> Vec<SymbolicValue> {
        let names = self.namer();
        self.psi
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if v.is_zero() {
                    SymbolicValue::Zero
                } else if self.params.contains(&i) {
                    SymbolicValue::FreeParam(names(i))
                } else {
                    SymbolicValue::Expr(v.render(&names))
                }
            })
            .collect()
    }

    /// Rational poles `(name, value)` of single-parameter denominators.
    pub fn excluded(&self) -> Vec<(String, Scalar)> {
        let names = self.namer();
        self.excluded
            .iter()
            .map(|(p, r)| (names(*p), r.clone()))
            .collect()
    }

    /// Denominators in several parameters; their zero sets are excluded.
    pub fn singular(&self) -> Vec<String> {
        let names = self.namer();
        self.singular
            .iter()
            .map(|d| d.scale(&primitive_factor(d)).render(&names))
            .collect()
    }

    fn bind(&self, values: &[Scalar]) -> Result<BTreeMap<usize, Scalar>> {
        if values.len() != self.params.len() {
            return Err(Error::DimensionMismatch {
                left: self.params.len(),
                right: values.len(),
            });
        }
        Ok(self.params.iter().copied().zip(values.iter().cloned()).collect())
    }

    /// `ψ` at the given parameter values (in parameter order).
    pub fn specialize(&self, values: &[Scalar]) -> Result<Vec<Scalar>> {
        let point = self.bind(values)?;
        self.psi
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.eval(&point).map_err(|_| Error::SingularParameter {
                    index: i + 1,
                    detail: "denominator vanishes at this point".to_string(),
                })
            })
            .collect()
    }

    pub fn operator_at(&self, values: &[Scalar]) -> Result<HomogeneousOperator> {
        HomogeneousOperator::new(
            AlgebraDims::new(self.n())?,
            self.degree,
            self.specialize(values)?,
        )
    }

    pub fn matrix_at(&self, values: &[Scalar]) -> Result<MatrixOperator> {
        Ok(hom_to_matrix(&self.operator_at(values)?))
    }

    /// Fixes one named parameter.
    pub fn specialize_param(&self, name: &str, value: &Scalar) -> Result<SolutionFamily> {
        let rank = self
            .free_names()
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidParameter(format!("no parameter `{name}`")))?;
        let p = self.params[rank];
        let mut map = BTreeMap::new();
        map.insert(p, MultiRat::constant(value.clone()));
        let psi = self
            .psi
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.substitute_all(&map).map_err(|_| Error::SingularParameter {
                    index: i + 1,
                    detail: format!("{name} = {value} is a pole"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SolutionFamily::from_values(self.identity.clone(), self.degree, psi)
    }

    /// True when every member of `other` is a member of `self`: the only
    /// candidate parameter values are `other`'s coordinates.
    pub fn contains(&self, other: &SolutionFamily) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let map: BTreeMap<usize, MultiRat> = self
            .params
            .iter()
            .map(|&p| (p, other.psi[p].clone()))
            .collect();
        self.psi.iter().zip(&other.psi).all(|(mine, theirs)| {
            mine.substitute_all(&map)
                .map(|v| &v == theirs)
                .unwrap_or(false)
        })
    }

    /// A uniformly drawn point (numerators and denominators bounded by
    /// `bound`) avoiding every pole.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Vec<Scalar> {
        loop {
            let point: Vec<Scalar> = self
                .params
                .iter()
                .map(|_| random_rational(rng, bound))
                .collect();
            if self.specialize(&point).is_ok() {
                return point;
            }
        }
    }

    fn sort_key(&self) -> (Vec<u8>, Vec<String>) {
        (
            self.psi.iter().map(|v| u8::from(v.is_zero())).collect(),
            self.render_psi(),
        )
    }

    pub fn to_json(&self) -> FamilyJson {
        FamilyJson {
            psi: self.render_psi(),
            free: self.free_names(),
            excluded: self.excluded(),
            singular: self.singular(),
        }
    }

    pub fn from_json(identity: IdentityKind, degree: usize, json: &FamilyJson) -> Result<Self> {
        let coordinate = |name: &str| json.psi.iter().position(|s| s.trim() == name);
        let mut lookup = BTreeMap::new();
        for name in &json.free {
            let p = coordinate(name).ok_or_else(|| {
                Error::Parse(format!("free parameter `{name}` is not a coordinate"))
            })?;
            lookup.insert(name.clone(), p);
        }
        let psi = json
            .psi
            .iter()
            .map(|s| MultiRat::parse(s, &|name| lookup.get(name).copied()))
            .collect::<Result<Vec<_>>>()?;
        SolutionFamily::from_values(identity, degree, psi)
    }
}

/// `p/q` with `|p| <= bound`, `1 <= q <= bound`, uniform over the pairs.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Scalar {
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound);
    Scalar::new(p, q).expect("q >= 1")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub psi: Vec<String>,
    pub free: Vec<String>,
    pub excluded: Vec<(String, Scalar)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub singular: Vec<String>,
}

/// Canonically ordered, merged output of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub identity: IdentityKind,
    pub degree: usize,
    pub n: usize,
    pub families: Vec<SolutionFamily>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub identity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Scalar>,
    pub degree: usize,
    pub n: usize,
    pub families: Vec<FamilyJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Classification {
    pub fn to_json(&self) -> ClassificationJson {
        ClassificationJson {
            identity: self.identity.name().to_string(),
            weight: self.identity.weight().cloned(),
            degree: self.degree,
            n: self.n,
            families: self.families.iter().map(SolutionFamily::to_json).collect(),
            notes: self.notes.clone(),
        }
    }
}

impl ClassificationJson {
    pub fn parse_families(&self) -> Result<Vec<SolutionFamily>> {
        let kind = IdentityKind::from_parts(&self.identity, self.weight.clone())?;
        self.families
            .iter()
            .map(|f| SolutionFamily::from_json(kind.clone(), self.degree, f))
            .collect()
    }
}

/// Drops families contained in another, keeping the first of equal ones, and
/// sorts canonically: zero pattern (nonzero first), then rendering.
pub fn merge_families(families: Vec<SolutionFamily>) -> Vec<SolutionFamily> {
    let mut unique: Vec<SolutionFamily> = Vec::new();
    for f in families {
        if !unique.iter().any(|g| g.psi == f.psi) {
            unique.push(f);
        }
    }
    let keep: Vec<bool> = (0..unique.len())
        .map(|i| {
            !unique.iter().enumerate().any(|(j, g)| {
                j != i && g.contains(&unique[i]) && (j < i || !unique[i].contains(g))
            })
        })
        .collect();
    let mut out: Vec<SolutionFamily> = unique
        .into_iter()
        .zip(keep)
        .filter_map(|(f, k)| k.then_some(f))
        .collect();
    out.sort_by_cached_key(SolutionFamily::sort_key);
    out
}

/// Solves an arbitrary system in `ψ(1..n)` (variable `v` is `ψ(v+1)`).
pub fn solve_system(
    identity: IdentityKind,
    degree: usize,
    n: usize,
    relations: impl IntoIterator<Item = MPoly>,
) -> Result<Classification> {
    let out = engine::Engine::new(n, relations).run();
    let families = out
        .families
        .into_iter()
        .map(|psi| SolutionFamily::from_values(identity.clone(), degree, psi))
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification {
        identity,
        degree,
        n,
        families: merge_families(families),
        notes: out.notes,
    })
}

/// All degree-`k` solutions of the identity, as maximal families.
pub fn classify(identity: &IdentityKind, degree: usize, n: usize) -> Result<Classification> {
    classified_regime(identity, n, degree)?;
    let dims = AlgebraDims::new(n)?;
    let rels = reduce_to_psi_equations(identity, dims, degree)?;
    solve_system(identity.clone(), degree, n, rels.into_iter().map(|c| c.relation))
}

/// Solutions of the displayed system, optionally with one sign flipped.
pub fn classify_printed(
    identity: &IdentityKind,
    degree: usize,
    n: usize,
    mutant: Option<PrintedEquation>,
) -> Result<Option<Classification>> {
    match printed_system(identity, n, degree, mutant) {
        None => Ok(None),
        Some(sys) => solve_system(
            identity.clone(),
            degree,
            n,
            sys.into_iter().map(|c| c.relation),
        )
        .map(Some),
    }
}
