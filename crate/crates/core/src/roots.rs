//! Rational roots of integer polynomials via the rational root theorem.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

const TRIAL_LIMIT: u64 = 2_000_000;

/// Positive divisors of `n != 0`. The cofactor left after trial division up to
/// [`TRIAL_LIMIT`] is treated as prime.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p: u64 = 2;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc *= &prime;
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    divs
}

/// Distinct rational roots of `sum coeffs[i] x^i` (unordered).
pub(crate) fn rational_roots(coeffs: &[BigInt]) -> Vec<Scalar> {
    let mut c: Vec<BigInt> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let shift = c.iter().take_while(|x| x.is_zero()).count();
    if shift > 0 {
        roots.push(Scalar::zero());
        c.drain(..shift);
    }
    if c.len() <= 1 {
        return roots;
    }
    let g = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in c.iter_mut() {
        *x /= &g;
    }
    let lead = c.last().cloned().unwrap_or_else(BigInt::one);
    let ps = divisors(&c[0]);
    let qs = divisors(&lead);
    let deg = c.len() - 1;
    for p in &ps {
        for q in &qs {
            if !p.gcd(q).is_one() {
                continue;
            }
            for sign in [1i32, -1] {
                let num = if sign == 1 { p.clone() } else { -p.clone() };
                // sum c_i num^i q^(deg - i) == 0
                let mut acc = BigInt::zero();
                let mut qpow = BigInt::one();
                let mut terms = vec![BigInt::zero(); deg + 1];
                for (i, t) in terms.iter_mut().enumerate().rev() {
                    *t = qpow.clone();
                    if i > 0 {
                        qpow *= q;
                    }
                }
                let mut npow = BigInt::one();
                for (i, ci) in c.iter().enumerate() {
                    acc += ci * &npow * &terms[i];
                    npow *= &num;
                }
                if acc.is_zero() {
                    let r = Scalar::from_parts(num, q.clone()).expect("q is a nonzero divisor");
                    if !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots
}
