//! Multivariate rational functions `num/den` over [`MPoly`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mpoly::{mpoly_gcd, MPoly};
use crate::ratfunc::RationalFunction;
use crate::scalar::Scalar;

/// Reduced quotient with a monic (graded-lex) denominator, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiRat {
    num: MPoly,
    den: MPoly,
}

impl MultiRat {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(MultiRat::zero());
        }
        let g = mpoly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let inv = den.leading_coeff().recip()?;
        Ok(MultiRat {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        MultiRat::from_poly(MPoly::zero())
    }

    pub fn one() -> Self {
        MultiRat::from_poly(MPoly::one())
    }

    pub fn constant(c: Scalar) -> Self {
        MultiRat::from_poly(MPoly::constant(c))
    }

    pub fn var(v: usize) -> Self {
        MultiRat::from_poly(MPoly::var(v))
    }

    pub fn from_poly(p: MPoly) -> Self {
        MultiRat {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.den.is_constant() {
            let d = self.den.as_constant()?;
            return self.num.as_constant()?.checked_div(&d).ok();
        }
        None
    }

    pub fn vars(&self) -> std::collections::BTreeSet<usize> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v
    }

    pub fn add(&self, other: &MultiRat) -> MultiRat {
        if self.den == other.den {
            return MultiRat::new(self.num.add(&other.num), self.den.clone())
                .expect("nonzero denominator");
        }
        MultiRat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero denominator")
    }

    pub fn neg(&self) -> MultiRat {
        MultiRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &MultiRat) -> MultiRat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiRat) -> MultiRat {
        if self.is_zero() || other.is_zero() {
            return MultiRat::zero();
        }
        MultiRat::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator")
    }

    pub fn div(&self, other: &MultiRat) -> Result<MultiRat> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        MultiRat::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: &Scalar) -> MultiRat {
        if c.is_zero() {
            return MultiRat::zero();
        }
        MultiRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiRat {
        MultiRat {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Simultaneous substitution. Fails when the denominator vanishes
    /// identically under the substitution.
    pub fn substitute_all(&self, map: &BTreeMap<usize, MultiRat>) -> Result<MultiRat> {
        let num = substitute_poly(&self.num, map);
        let den = substitute_poly(&self.den, map);
        num.div(&den)
    }

    /// Value at a point binding every variable that occurs.
    pub fn eval(&self, point: &BTreeMap<usize, Scalar>) -> Result<Scalar> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            let at = point.values().next().cloned().unwrap_or_default();
            return Err(Error::Pole { point: at });
        }
        self.num.eval(point)?.checked_div(&d)
    }

    /// Univariate view when at most `v` occurs.
    pub fn to_ratfunc(&self, v: usize, name: &str) -> Option<RationalFunction> {
        let n = self.num.to_polynomial(v, name)?;
        let d = self.den.to_polynomial(v, name)?;
        RationalFunction::new(n, d).ok()
    }

    pub fn from_ratfunc(f: &RationalFunction, v: usize) -> MultiRat {
        MultiRat::new(
            MPoly::from_polynomial(f.numerator(), v),
            MPoly::from_polynomial(f.denominator(), v),
        )
        .expect("nonzero denominator")
    }

    /// `num` alone when the denominator is 1, else `(num)/(den)` with the
    /// denominator scaled to primitive integer coefficients and a positive
    /// lowest term.
    pub fn render(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.den == MPoly::one() {
            return self.num.render(names);
        }
        let factor = primitive_factor(&self.den);
        format!(
            "({})/({})",
            self.num.scale(&factor).render(names),
            self.den.scale(&factor).render(names)
        )
    }

    pub fn parse(s: &str, lookup: &dyn Fn(&str) -> Option<usize>) -> Result<MultiRat> {
        let t = s.trim();
        match crate::ratfunc::split_quotient(t) {
            Some((n, d)) => MultiRat::new(MPoly::parse(n, lookup)?, MPoly::parse(d, lookup)?),
            None => Ok(MultiRat::from_poly(MPoly::parse(t, lookup)?)),
        }
    }
}

/// The scalar that makes `p` have coprime integer coefficients with a
/// positive lowest term.
pub fn primitive_factor(p: &MPoly) -> Scalar {
    let coeffs: Vec<Scalar> = p.terms().map(|(_, c)| c.clone()).collect();
    if coeffs.is_empty() {
        return Scalar::one();
    }
    let lcm = Scalar::denominator_lcm(&coeffs);
    let content = coeffs
        .iter()
        .fold(BigInt::zero(), |g, c| g.gcd(&(c * Scalar::from_bigint(lcm.clone())).numer().clone()));
    let factor = Scalar::from_parts(lcm, content).expect("nonzero content");
    if coeffs[0].is_negative() {
        -factor
    } else {
        factor
    }
}

/// Maps a polynomial through `map`, with the result in the rational field.
fn substitute_poly(p: &MPoly, map: &BTreeMap<usize, MultiRat>) -> MultiRat {
    // Collect the common denominator per variable power, then work over
    // polynomials to avoid repeated gcds.
    let mut deg: BTreeMap<usize, u32> = BTreeMap::new();
    for v in map.keys() {
        let d = p.degree_in(*v);
        if d > 0 {
            deg.insert(*v, d);
        }
    }
    if deg.is_empty() {
        return MultiRat::from_poly(p.clone());
    }
    let mut num_map = BTreeMap::new();
    let mut common = MPoly::one();
    for (v, d) in &deg {
        let r = &map[v];
        num_map.insert(*v, r.clone());
        common = common.mul(&r.den.pow(*d));
    }
    // Each term c * prod x_v^e becomes c * prod num_v^e * den_v^(d_v - e).
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        let mut acc = MPoly::constant(c.clone());
        let mut kept = m.exponents().to_vec();
        for (v, d) in &deg {
            let e = m.exp(*v);
            if *v < kept.len() {
                kept[*v] = 0;
            }
            let r = &num_map[v];
            acc = acc.mul(&r.num.pow(e)).mul(&r.den.pow(d - e));
        }
        let rest = MPoly::term(crate::mpoly::Monomial::new(kept), Scalar::one());
        out = out.add(&acc.mul(&rest));
    }
    MultiRat::new(out, common).expect("denominators are nonzero")
}

impl fmt::Display for MultiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|v| format!("x{v}")))
    }
}

impl fmt::Debug for MultiRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lookup(name: &str) -> Option<usize> {
        name.strip_prefix('x').and_then(|d| d.parse().ok())
    }

    fn r(s: &str) -> MultiRat {
        MultiRat::parse(s, &lookup).unwrap()
    }

    #[test]
    fn normalizes_and_cancels() {
        let x = r("(x0^2 - x1^2)/(2*x0 + 2*x1)");
        assert_eq!(x, r("1/2*x0 - 1/2*x1"));
        assert_eq!(r("(x0)/(2 - x0)").to_string(), "(x0)/(2 - x0)");
        assert_eq!(r("(x0)/(x0 - 2)").to_string(), "(-x0)/(2 - x0)");
        assert_eq!(r("(x0)/(2 - x0)").denom(), &MPoly::parse("x0 - 2", &|s| s[1..].parse().ok()).unwrap());
    }

    #[test]
    fn field_operations() {
        let a = r("(x0)/(1 + x1)");
        let b = r("(x1)/(x0)");
        let s = a.add(&b);
        assert_eq!(s.sub(&b), a);
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    #[test]
    fn substitution_and_poles() {
        let a = r("(x0)/(x1 - 1)");
        let mut map = BTreeMap::new();
        map.insert(1, r("(x0 + 1)/(x0)"));
        assert_eq!(a.substitute_all(&map).unwrap(), r("x0^2"));
        map.insert(1, MultiRat::one());
        assert!(a.substitute_all(&map).is_err());
    }
}
