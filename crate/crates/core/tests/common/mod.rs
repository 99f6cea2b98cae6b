//! Independent brute-force oracle: applies a weight vector directly and
//! compares both sides of an identity on every basis pair, using
//! `BigRational` rather than the library's scalar type.

#![allow(dead_code)]

use nullfil::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Q = BigRational;

pub fn q(s: &str) -> Scalar {
    s.parse().unwrap()
}

pub fn qs(items: &[&str]) -> Vec<Scalar> {
    items.iter().map(|s| q(s)).collect()
}

pub fn to_q(s: &Scalar) -> Q {
    Q::new(s.numer().clone(), s.denom().clone())
}

#[derive(Clone, Copy, Debug)]
pub enum Law {
    RotaBaxter(i64),
    Reynolds,
    Nijenhuis,
    Average,
}

fn apply(k: usize, psi: &[Q], x: &[Q]) -> Vec<Q> {
    let n = x.len();
    let mut out = vec![Q::zero(); n];
    for i in 1..=n {
        let target = if i + k <= n { i + k } else { i + k - n };
        out[target - 1] += &x[i - 1] * &psi[i - 1];
    }
    out
}

fn mul(x: &[Q], y: &[Q]) -> Vec<Q> {
    let n = x.len();
    let mut out = vec![Q::zero(); n];
    for i in 1..n {
        for j in 1..=n - i {
            out[i + j - 1] += &x[i - 1] * &y[j - 1];
        }
    }
    out
}

fn add(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn basis(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i - 1] = Q::from_integer(BigInt::from(1));
    v
}

/// First basis pair `(i, j)` where the identity fails, if any.
pub fn first_violation(law: Law, k: usize, psi: &[Scalar]) -> Option<(usize, usize)> {
    let n = psi.len();
    let psi: Vec<Q> = psi.iter().map(to_q).collect();
    let p = |x: &[Q]| apply(k, &psi, x);
    for i in 1..=n {
        for j in 1..=n {
            let (x, y) = (basis(n, i), basis(n, j));
            let (px, py) = (p(&x), p(&y));
            let lhs = mul(&px, &py);
            let cross = add(&mul(&x, &py), &mul(&px, &y));
            let inner = match law {
                Law::RotaBaxter(w) => {
                    let xy: Vec<Q> = mul(&x, &y)
                        .iter()
                        .map(|c| c * Q::from_integer(BigInt::from(w)))
                        .collect();
                    add(&cross, &xy)
                }
                Law::Reynolds => sub(&cross, &lhs),
                Law::Nijenhuis => sub(&cross, &p(&mul(&x, &y))),
                Law::Average => mul(&x, &py),
            };
            if lhs != p(&inner) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn holds(law: Law, k: usize, psi: &[Scalar]) -> bool {
    first_violation(law, k, psi).is_none()
}
