//! Dense univariate polynomials over [`Scalar`] and their Euclidean gcd.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `coeffs[d]` is the coefficient of `var^d`. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var: String,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(var: impl Into<String>, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { var: var.into(), coeffs }
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Polynomial::new(var, Vec::new())
    }

    pub fn constant(var: impl Into<String>, c: Scalar) -> Self {
        Polynomial::new(var, vec![c])
    }

    /// The polynomial `var` itself.
    pub fn variable(var: impl Into<String>) -> Self {
        Polynomial::new(var, vec![Scalar::zero(), Scalar::one()])
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> Scalar {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    fn check_var(&self, other: &Polynomial) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch {
                left: self.var.clone(),
                right: other.var.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Polynomial::new(self.var.clone(), coeffs))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.var.clone()));
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Polynomial::new(self.var.clone(), out))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial::new(self.var.clone(), self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_var(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                for (k, b) in divisor.coeffs.iter().enumerate() {
                    let t = &c * b;
                    rem[top - dd + k] -= t;
                }
            }
            quot[top - dd] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        Ok((
            Polynomial::new(self.var.clone(), quot),
            Polynomial::new(self.var.clone(), rem),
        ))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading().recip() {
            Ok(inv) => self.scale(&inv),
            Err(_) => self.clone(),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, c)| c * Scalar::from_int(d as i64))
            .collect();
        Polynomial::new(self.var.clone(), coeffs)
    }

    /// All distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        if self.is_zero() {
            return Vec::new();
        }
        let ints = integer_coefficients(&self.coeffs);
        let mut roots = crate::roots::rational_roots(&ints);
        roots.sort();
        roots
    }
}

/// Clears denominators, returning integer coefficients in the same order.
pub(crate) fn integer_coefficients(coeffs: &[Scalar]) -> Vec<num_bigint::BigInt> {
    let l = Scalar::denominator_lcm(coeffs);
    coeffs
        .iter()
        .map(|c| (c * Scalar::from_bigint(l.clone())).numer().clone())
        .collect()
}

/// Monic greatest common divisor; `gcd(0, q) = monic(q)`.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    p.check_var(q)?;
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Renders `terms` (ascending degree) as `c0 + c1*x + c2*x^2`, dropping zero
/// terms and unit coefficients and folding signs into the separators.
pub(crate) fn render_terms(terms: &[(Scalar, String)]) -> String {
    let mut out = String::new();
    for (c, mono) in terms.iter().filter(|(c, _)| !c.is_zero()) {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn power_name(var: &str, d: usize) -> String {
    match d {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{d}"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, c)| (c.clone(), power_name(&self.var, d)))
            .collect();
        f.write_str(&render_terms(&terms))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.var, self)
    }
}

/// One parsed term: coefficient and the exponent of each named variable.
pub(crate) type ParsedTerm = (Scalar, Vec<(String, u32)>);

/// Parses a sum of terms such as `2 - a + 1/2*a^2` or `a*b - 3*b^2`.
pub(crate) fn parse_terms(s: &str) -> Result<Vec<ParsedTerm>> {
    let err = || Error::Parse(format!("invalid polynomial `{s}`"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err());
    }
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (idx, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && idx > 0 {
            if current.is_empty() {
                return Err(err());
            }
            chunks.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if ch == '-' && idx == 0 {
            negative = true;
        } else if ch == '+' {
            return Err(err());
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(err());
    }
    chunks.push((negative, current));

    let mut terms = Vec::new();
    for (neg, body) in chunks {
        let mut coeff = Scalar::one();
        let mut powers = Vec::new();
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(err());
            }
            let first = factor.chars().next().ok_or_else(err)?;
            if first.is_ascii_digit() {
                coeff *= factor.parse::<Scalar>().map_err(|_| err())?;
            } else if first.is_ascii_alphabetic() || first == '_' {
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err())?),
                    None => (factor, 1),
                };
                if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(err());
                }
                powers.push((name.to_string(), exp));
            } else {
                return Err(err());
            }
        }
        if neg {
            coeff = -coeff;
        }
        terms.push((coeff, powers));
    }
    Ok(terms)
}

impl Polynomial {
    /// Parses the rendering produced by `Display` in the named variable.
    pub fn parse(s: &str, var: &str) -> Result<Polynomial> {
        let mut coeffs: Vec<Scalar> = Vec::new();
        for (c, powers) in parse_terms(s)? {
            let mut d = 0usize;
            for (name, e) in powers {
                if name != var {
                    return Err(Error::VariableMismatch {
                        left: var.to_string(),
                        right: name,
                    });
                }
                d += e as usize;
            }
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Scalar::zero());
            }
            coeffs[d] += c;
        }
        Ok(Polynomial::new(var, coeffs))
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Infers the variable from the text; defaults to `a` for constants.
    fn from_str(s: &str) -> Result<Polynomial> {
        let var = parse_terms(s)?
            .into_iter()
            .flat_map(|(_, p)| p.into_iter().map(|(n, _)| n))
            .next()
            .unwrap_or_else(|| "a".to_string());
        Polynomial::parse(s, &var)
    }
}
