//! Normalized univariate rational functions over [`Scalar`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{poly_gcd, Polynomial};
use crate::scalar::Scalar;

/// `numerator / denominator` with the gcd cancelled and a monic denominator,
/// so two equal functions are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.var() != den.var() {
            return Err(Error::VariableMismatch {
                left: num.var().to_string(),
                right: den.var().to_string(),
            });
        }
        let var = num.var().to_string();
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Polynomial::constant(var, Scalar::one()),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().recip()?;
        Ok(RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let var = p.var().to_string();
        RationalFunction {
            num: p,
            den: Polynomial::constant(var, Scalar::one()),
        }
    }

    pub fn constant(var: impl Into<String>, c: Scalar) -> Self {
        Self::from_polynomial(Polynomial::constant(var, c))
    }

    pub fn variable(var: impl Into<String>) -> Self {
        Self::from_polynomial(Polynomial::variable(var))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn var(&self) -> &str {
        self.num.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?;
        Self::new(n, self.den.mul(&other.den)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Self::new(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&other.den)?, self.den.mul(&other.num)?)
    }

    /// Exact value at `point`; a vanishing denominator is a pole error.
    pub fn eval(&self, point: &Scalar) -> Result<Scalar> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::Pole {
                point: point.clone(),
            });
        }
        self.num.eval(point).checked_div(&d)
    }

    /// Rational points where the denominator vanishes.
    pub fn rational_poles(&self) -> Vec<Scalar> {
        self.den.rational_roots()
    }

    /// Parses `(num)/(den)` or a bare polynomial in `var`.
    pub fn parse(s: &str, var: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((num, den)) = split_quotient(t) {
            return Self::new(Polynomial::parse(num, var)?, Polynomial::parse(den, var)?);
        }
        Ok(Self::from_polynomial(Polynomial::parse(t, var)?))
    }
}

/// Splits `(A)/(B)` at the top-level slash; `None` for anything else.
pub(crate) fn split_quotient(t: &str) -> Option<(&str, &str)> {
    if !t.starts_with('(') || !t.ends_with(')') {
        return None;
    }
    let mut depth = 0i32;
    for (i, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    let rest = &t[i + 1..];
                    let den = rest.strip_prefix("/(")?.strip_suffix(')')?;
                    return Some((&t[1..i], den));
                }
            }
            _ => {}
        }
    }
    None
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.leading().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction[{}]({})", self.var(), self)
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let var: String = t
            .chars()
            .skip_while(|c| !c.is_ascii_alphabetic())
            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
            .collect();
        let var = if var.is_empty() { "a".to_string() } else { var };
        Self::parse(t, &var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s, "a").unwrap()
    }

    fn q(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(rf("(a)/(2*a + 1)").eval(&q("1")).unwrap(), q("1/3"));
        assert_eq!(rf("a").eval(&q("0")).unwrap(), q("0"));
        assert_eq!(
            rf("(1)/(a)").eval(&q("0")),
            Err(Error::Pole { point: q("0") })
        );
    }

    #[test]
    fn normalization_is_structural() {
        let x = rf("(a^2 - 1)/(2*a - 2)");
        assert_eq!(x, rf("(1/2 + 1/2*a)/(1)"));
        assert_eq!(x.to_string(), "1/2 + 1/2*a");
        let y = rf("(a)/(2 - a)");
        assert_eq!(y.to_string(), "(-a)/(-2 + a)");
        assert!(y.denominator().leading().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::parse("(a)/(0)", "a").is_err());
        assert!(matches!(
            rf("a").div(&rf("0")),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn from_str_infers_variable() {
        let x: RationalFunction = "(t)/(1 + t^2)".parse().unwrap();
        assert_eq!(x.var(), "t");
        assert_eq!(x.to_string(), "(t)/(1 + t^2)");
    }
}
