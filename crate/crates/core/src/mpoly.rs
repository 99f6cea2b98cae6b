//! Sparse multivariate polynomials over [`Scalar`] in numbered variables.
//!
//! Terms are kept in graded-lexicographic order with variable 0 largest.
//! The gcd is the recursive primitive pseudo-remainder sequence.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{parse_terms, render_terms, Polynomial};
use crate::scalar::Scalar;

/// Exponent vector, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize, e: u32) -> Self {
        let mut exps = vec![0; v + 1];
        exps[v] = e;
        Monomial::new(exps)
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        Monomial::new((0..len).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            out.push(self.exp(i).checked_sub(other.exp(i))?);
        }
        Some(Monomial::new(out))
    }

    fn gcd(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().min(other.0.len());
        Monomial::new((0..len).map(|i| self.exp(i).min(other.exp(i))).collect())
    }

    fn without(&self, v: usize) -> Monomial {
        let mut e = self.0.clone();
        if v < e.len() {
            e[v] = 0;
        }
        Monomial::new(e)
    }

    fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| crate::poly::power_name(&names(v), e as usize))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        MPoly::term(Monomial::one(), c)
    }

    pub fn var(v: usize) -> Self {
        MPoly::term(Monomial::var(v, 1), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    out.insert(v);
                }
            }
        }
        out
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|m| m.0.len().checked_sub(1))
            .max()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Graded-lex leading term.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Scalar {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    fn mul_term(&self, m: &Monomial, c: &Scalar) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m1, c1)| (m1.mul(m), c1 * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut out = MPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => {
                let inv = c.recip().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Coefficients of `v^0, v^1, ...`, each free of `v`.
    pub fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.without(v), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_term(&Monomial::var(v, d as u32), &Scalar::one()));
        }
        out
    }

    /// Leading coefficient as a polynomial in `v`.
    pub fn lc_in(&self, v: usize) -> MPoly {
        self.coeffs_in(v).pop().unwrap_or_default()
    }

    /// Simultaneous substitution of the mapped variables.
    pub fn substitute_all(&self, map: &BTreeMap<usize, MPoly>) -> MPoly {
        let mut out = MPoly::zero();
        let mut cache: BTreeMap<(usize, u32), MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = MPoly::constant(c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    kept.push(0);
                    continue;
                }
                match map.get(&v) {
                    Some(p) => {
                        kept.push(0);
                        let pw = cache.entry((v, e)).or_insert_with(|| p.pow(e));
                        acc = acc.mul(pw);
                    }
                    None => kept.push(e),
                }
            }
            let rest = Monomial::new(kept);
            out = out.add(&acc.mul_term(&rest, &Scalar::one()));
        }
        out
    }

    pub fn substitute(&self, v: usize, value: &MPoly) -> MPoly {
        let mut map = BTreeMap::new();
        map.insert(v, value.clone());
        self.substitute_all(&map)
    }

    /// Value with every variable bound by `point`; unbound variables are an error.
    pub fn eval(&self, point: &BTreeMap<usize, Scalar>) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let x = point
                        .get(&v)
                        .ok_or_else(|| Error::InvalidParameter(format!("unbound variable {v}")))?;
                    t *= x.pow(e);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (dm, dc) = d.leading()?;
        let dinv = dc.recip().ok()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(dm)?;
            let c = rc * &dinv;
            rem = rem.sub(&d.mul_term(&m, &c));
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<MPoly> {
        let mut terms = BTreeMap::new();
        for (tm, c) in &self.terms {
            terms.insert(tm.div(m)?, c.clone());
        }
        Some(MPoly { terms })
    }

    fn prem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
        let db = b.degree_in(v);
        let lb = b.lc_in(v);
        let mut r = a.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lr = r.lc_in(v);
            let shift = MPoly::term(Monomial::var(v, dr - db), Scalar::one());
            r = lb.mul(&r).sub(&lr.mul(&shift).mul(b));
        }
        r
    }

    /// Gcd of the coefficients in `v`.
    pub fn content_in(&self, v: usize) -> MPoly {
        self.coeffs_in(v)
            .iter()
            .fold(MPoly::zero(), |acc, c| mpoly_gcd(&acc, c))
    }

    fn primitive_in(&self, v: usize) -> MPoly {
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides")
    }

    /// Exact square root when `self` is the square of a polynomial.
    pub fn sqrt(&self) -> Option<MPoly> {
        let (lm, lc) = self.leading()?;
        if lm.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        let rm = Monomial::new(lm.0.iter().map(|e| e / 2).collect());
        let rc = lc.sqrt_exact()?;
        let two_lead_inv = (&rc + &rc).recip().ok()?;
        let mut root = MPoly::term(rm.clone(), rc);
        let mut last = rm.clone();
        loop {
            let rem = self.sub(&root.mul(&root));
            let Some((m, c)) = rem.leading() else {
                return Some(root);
            };
            let tm = m.div(&rm)?;
            if tm >= last {
                return None;
            }
            root.add_term(tm.clone(), c * &two_lead_inv);
            last = tm;
        }
    }

    /// Univariate view when only `v` (or nothing) occurs.
    pub fn to_polynomial(&self, v: usize, name: &str) -> Option<Polynomial> {
        if self.vars().iter().any(|&w| w != v) {
            return None;
        }
        let coeffs = self
            .coeffs_in(v)
            .iter()
            .map(|c| c.as_constant().unwrap_or_default())
            .collect();
        Some(Polynomial::new(name, coeffs))
    }

    pub fn from_polynomial(p: &Polynomial, v: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (d, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial::var(v, d as u32), c.clone());
        }
        out
    }

    /// Ascending graded-lex rendering, e.g. `1 - a + a*b^2`.
    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        let terms: Vec<(Scalar, String)> = self
            .terms
            .iter()
            .map(|(m, c)| (c.clone(), m.render(names)))
            .collect();
        render_terms(&terms)
    }

    /// Parses a rendering; `lookup` maps a variable name to its number.
    pub fn parse(s: &str, lookup: &dyn Fn(&str) -> Option<usize>) -> Result<MPoly> {
        let mut out = MPoly::zero();
        for (c, powers) in parse_terms(s)? {
            let mut m = Monomial::one();
            for (name, e) in powers {
                let v = lookup(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                m = m.mul(&Monomial::var(v, e));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }
}

/// Monic gcd over the rationals; `gcd(0, 0) = 0`.
pub fn mpoly_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let v = a.max_var().max(b.max_var()).expect("nonconstant");
    if a.degree_in(v) == 0 {
        return mpoly_gcd(a, &b.content_in(v));
    }
    if b.degree_in(v) == 0 {
        return mpoly_gcd(&a.content_in(v), b);
    }
    let (ca, cb) = (a.content_in(v), b.content_in(v));
    let c = mpoly_gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = MPoly::prem(&p, &q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            q = MPoly::one();
            break;
        }
        p = q;
        q = r.primitive_in(v).monic();
    }
    c.mul(&q.primitive_in(v)).monic()
}

fn default_name(v: usize) -> String {
    format!("x{v}")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_name))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}
