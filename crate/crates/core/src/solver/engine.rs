//! Branch-and-prune enumeration of the rational solutions of a polynomial
//! system in `x_0, ..., x_{n-1}`.
//!
//! Unknowns are decided in index order. A branch holds the values of the
//! decided prefix as rational functions of the free parameters introduced so
//! far; a parameter is always the coordinate it was introduced at, so the
//! value at index `p` of a surviving parameter is `x_p` itself. Free
//! parameters are taken nonzero; the zero value is its own branch.

use std::collections::{BTreeMap, BTreeSet};

use crate::mpoly::MPoly;
use crate::mrat::MultiRat;

pub(crate) struct Engine {
    n: usize,
    /// Relations grouped by their highest variable.
    buckets: Vec<Vec<MPoly>>,
    inconsistent: bool,
}

#[derive(Debug, Default)]
pub(crate) struct Exploration {
    pub families: Vec<Vec<MultiRat>>,
    /// Branches abandoned because a root could not be expressed rationally.
    pub notes: Vec<String>,
}

enum Branch {
    Value(MultiRat),
    Relation(MPoly),
}

/// Removes monomial factors in the parameters listed as nonzero.
fn strip_content(p: &MPoly, keep: Option<usize>) -> (MPoly, u32) {
    let content = p.monomial_content();
    let kept = keep.map_or(0, |v| content.exp(v));
    let mut exps = content.exponents().to_vec();
    if let Some(v) = keep {
        if v < exps.len() {
            exps[v] = 0;
        }
    }
    let m = crate::mpoly::Monomial::new(exps);
    (p.div_monomial(&m).expect("content divides"), kept)
}

fn quotient(num: &MPoly, den: &MPoly) -> Option<MultiRat> {
    MultiRat::new(num.clone(), den.clone()).ok()
}

impl Engine {
    pub fn new(n: usize, relations: impl IntoIterator<Item = MPoly>) -> Self {
        let mut buckets = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        let mut inconsistent = false;
        for rel in relations {
            if rel.is_zero() {
                continue;
            }
            match rel.max_var() {
                None => inconsistent = true,
                Some(v) => {
                    let key = rel.monic().render(&|i| format!("x{i}"));
                    if seen.insert(key) {
                        buckets[v.min(n - 1)].push(rel);
                    }
                }
            }
        }
        Engine {
            n,
            buckets,
            inconsistent,
        }
    }

    pub fn run(&self) -> Exploration {
        let mut out = Exploration::default();
        if !self.inconsistent {
            self.explore(Vec::new(), &mut out);
        }
        out
    }

    /// Numerator of `rel` at the decided values; undecided variables stay.
    fn residual(rel: &MPoly, map: &BTreeMap<usize, MultiRat>) -> MPoly {
        if map.is_empty() {
            return rel.clone();
        }
        if map.values().all(|v| v.denom().is_constant()) {
            let polys: BTreeMap<usize, MPoly> =
                map.iter().map(|(k, v)| (*k, v.numer().clone())).collect();
            return rel.substitute_all(&polys);
        }
        let r = MultiRat::from_poly(rel.clone())
            .substitute_all(map)
            .expect("polynomial substitution has no poles");
        r.numer().clone()
    }

    fn binding(values: &[MultiRat]) -> BTreeMap<usize, MultiRat> {
        values
            .iter()
            .enumerate()
            .filter(|(i, v)| **v != MultiRat::var(*i))
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }

    fn explore(&self, values: Vec<MultiRat>, out: &mut Exploration) {
        let v = values.len();
        let map = Self::binding(&values);
        if v > 0 {
            for rel in &self.buckets[v - 1] {
                let r = Self::residual(rel, &map);
                if !r.is_zero() {
                    for next in self.solve_relation(&values, &r, out) {
                        self.explore(next, out);
                    }
                    return;
                }
            }
        }
        if v == self.n {
            out.families.push(values);
            return;
        }
        let mut equations = Vec::new();
        for rel in &self.buckets[v] {
            let r = Self::residual(rel, &map);
            if r.is_zero() {
                continue;
            }
            if r.degree_in(v) == 0 {
                for next in self.solve_relation(&values, &r, out) {
                    self.explore(next, out);
                }
                return;
            }
            equations.push(r);
        }
        if equations.is_empty() {
            for value in [MultiRat::zero(), MultiRat::var(v)] {
                let mut next = values.clone();
                next.push(value);
                self.explore(next, out);
            }
            return;
        }
        let eq = equations
            .iter()
            .min_by_key(|e| (e.degree_in(v), e.total_degree()))
            .expect("nonempty");
        for branch in self.roots(eq, v, out) {
            match branch {
                Branch::Value(root) => {
                    let mut next = values.clone();
                    next.push(root);
                    self.explore(next, out);
                }
                Branch::Relation(rel) => {
                    for next in self.solve_relation(&values, &rel, out) {
                        self.explore(next, out);
                    }
                }
            }
        }
    }

    /// Roots of `eq` in `x_v` over the parameter field, plus the parameter
    /// relations under which the generic solution degenerates.
    fn roots(&self, eq: &MPoly, v: usize, out: &mut Exploration) -> Vec<Branch> {
        let (e, zero_mult) = strip_content(eq, Some(v));
        let mut branches = Vec::new();
        if zero_mult > 0 {
            branches.push(Branch::Value(MultiRat::zero()));
        }
        let d = e.degree_in(v);
        if d == 0 {
            if !e.is_constant() {
                branches.push(Branch::Relation(e));
            }
            return branches;
        }
        let cs = e.coeffs_in(v);
        let lc = &cs[d as usize];
        if !lc.is_constant() {
            branches.push(Branch::Relation(lc.clone()));
        }
        match quadratic_roots(&cs) {
            Some(roots) => branches.extend(roots.into_iter().map(Branch::Value)),
            None => {
                if cs.iter().all(MPoly::is_constant) {
                    let p = e.to_polynomial(v, "x").expect("univariate");
                    let roots = p.rational_roots();
                    if (roots.len() as u32) < d {
                        out.notes.push(format!(
                            "x{v}: dropped non-rational roots of {}",
                            e.render(&|i| format!("x{i}"))
                        ));
                    }
                    branches.extend(
                        roots
                            .into_iter()
                            .filter(|r| !r.is_zero())
                            .map(|r| Branch::Value(MultiRat::constant(r))),
                    );
                } else {
                    out.notes.push(format!(
                        "x{v}: no rational parametric root of {}",
                        e.render(&|i| format!("x{i}"))
                    ));
                }
            }
        }
        branches
    }

    /// Branches on which the parameter relation `rel = 0` holds, each with one
    /// parameter eliminated.
    fn solve_relation(
        &self,
        values: &[MultiRat],
        rel: &MPoly,
        out: &mut Exploration,
    ) -> Vec<Vec<MultiRat>> {
        let (rel, _) = strip_content(rel, None);
        if rel.is_constant() {
            return if rel.is_zero() { vec![values.to_vec()] } else { Vec::new() };
        }
        let vars: Vec<usize> = rel.vars().into_iter().rev().collect();
        let substitute = |p: usize, value: &MultiRat| -> Option<Vec<MultiRat>> {
            let mut map = BTreeMap::new();
            map.insert(p, value.clone());
            values
                .iter()
                .map(|x| {
                    if x.vars().contains(&p) {
                        x.substitute_all(&map).ok()
                    } else {
                        Some(x.clone())
                    }
                })
                .collect()
        };
        let linear_const = vars
            .iter()
            .find(|&&p| rel.degree_in(p) == 1 && rel.lc_in(p).is_constant());
        if let Some(&p) = linear_const {
            let cs = rel.coeffs_in(p);
            let value = quotient(&cs[0].neg(), &cs[1]).expect("constant leading coefficient");
            return substitute(p, &value).into_iter().collect();
        }
        let mut branches = Vec::new();
        let pick = vars
            .iter()
            .find(|&&p| rel.degree_in(p) == 1)
            .or_else(|| vars.iter().find(|&&p| rel.degree_in(p) == 2))
            .copied();
        if let Some(p) = pick {
            let cs = rel.coeffs_in(p);
            let lc = cs.last().expect("degree >= 1");
            if !lc.is_constant() {
                branches.extend(self.solve_relation(values, lc, out));
            }
            match quadratic_roots(&cs) {
                Some(roots) => {
                    for root in roots {
                        branches.extend(substitute(p, &root));
                    }
                }
                None => match self.binary_form(values, &rel) {
                    Some(more) => branches.extend(more),
                    None => out.notes.push(format!(
                        "relation {} has no rational parametric root",
                        rel.render(&|i| format!("x{i}"))
                    )),
                },
            }
            return branches;
        }
        if let Some(more) = self.binary_form(values, &rel) {
            return more;
        }
        if vars.len() == 1 {
            let p = vars[0];
            let poly = rel.to_polynomial(p, "x").expect("univariate");
            for r in poly.rational_roots() {
                branches.extend(substitute(p, &MultiRat::constant(r)));
            }
            return branches;
        }
        out.notes.push(format!(
            "relation {} is beyond the supported forms",
            rel.render(&|i| format!("x{i}"))
        ));
        branches
    }
}

impl Engine {
    /// A homogeneous relation in two nonzero parameters `u > w` holds exactly
    /// on the lines `u = r w` for the rational roots `r` of `F(u, 1)`.
    fn binary_form(&self, values: &[MultiRat], rel: &MPoly) -> Option<Vec<Vec<MultiRat>>> {
        let vars: Vec<usize> = rel.vars().into_iter().collect();
        let degrees: BTreeSet<u32> = rel.terms().map(|(m, _)| m.degree()).collect();
        if vars.len() != 2 || degrees.len() != 1 {
            return None;
        }
        let (w, u) = (vars[0], vars[1]);
        let f = rel.substitute(w, &MPoly::one()).to_polynomial(u, "x")?;
        let mut out = Vec::new();
        for r in f.rational_roots() {
            let mut map = BTreeMap::new();
            map.insert(u, MultiRat::var(w).scale(&r));
            let next: Option<Vec<MultiRat>> = values
                .iter()
                .map(|x| x.substitute_all(&map).ok())
                .collect();
            out.extend(next);
        }
        Some(out)
    }
}

/// Roots of `c_0 + c_1 x (+ c_2 x^2)` with the leading coefficient taken
/// nonzero, when they are rational in the parameters. `None` for higher
/// degree or a non-square discriminant.
fn quadratic_roots(cs: &[MPoly]) -> Option<Vec<MultiRat>> {
    match cs.len() {
        2 => Some(vec![quotient(&cs[0].neg(), &cs[1])?]),
        3 => {
            let (c0, c1, c2) = (&cs[0], &cs[1], &cs[2]);
            let four = crate::scalar::Scalar::from_int(4);
            let disc = c1.mul(c1).sub(&c0.mul(c2).scale(&four));
            let two_c2 = c2.add(c2);
            if disc.is_zero() {
                return Some(vec![quotient(&c1.neg(), &two_c2)?]);
            }
            match disc.sqrt() {
                Some(s) => Some(vec![
                    quotient(&c1.neg().sub(&s), &two_c2)?,
                    quotient(&c1.neg().add(&s), &two_c2)?,
                ]),
                None if disc.is_constant() => Some(Vec::new()),
                None => None,
            }
        }
        _ => None,
    }
}
