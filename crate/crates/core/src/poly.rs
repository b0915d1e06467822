//! Monomials, binomials and sparse integer polynomials in the variables
//! `u, v, u_1, ..., u_k` (indices 0, 1, 2, ...).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// Builds a monomial from `(variable, exponent)` pairs; exponents may be
    /// computed expressions and are rejected when negative.
    pub fn from_pairs(nvars: usize, pairs: &[(usize, i64)]) -> Result<Self> {
        let mut e = vec![0u32; nvars];
        for &(var, exp) in pairs {
            if exp < 0 {
                return Err(Error::NegativeExponent(format!(
                    "{}^{exp}",
                    variable_name(var)
                )));
            }
            e[var] += u32::try_from(exp).expect("exponent fits in u32");
        }
        Ok(Monomial(e))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| i64::from(e) * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_coprime_to(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

pub fn variable_name(i: usize) -> String {
    match i {
        0 => "u".into(),
        1 => "v".into(),
        k => format!("u{}", k - 1),
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    variable_name(i)
                } else {
                    format!("{}^{e}", variable_name(i))
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// `plus - minus`, normalized so that `plus` is the lexicographically larger
/// exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
    pub degree: i64,
}

impl Binomial {
    /// Returns `None` for the zero binomial.
    pub fn new(a: Monomial, b: Monomial, weights: &[i64]) -> Result<Option<Self>> {
        let (da, db) = (a.degree(weights), b.degree(weights));
        if da != db {
            return Err(Error::NotHomogeneous {
                plus: da,
                minus: db,
            });
        }
        if a == b {
            return Ok(None);
        }
        let (plus, minus) = if a > b { (a, b) } else { (b, a) };
        Ok(Some(Binomial {
            plus,
            minus,
            degree: da,
        }))
    }

    /// The sign relating `a - b` to the normalized form.
    pub fn orientation(a: &Monomial, b: &Monomial) -> i64 {
        if a > b {
            1
        } else {
            -1
        }
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero();
        p.add_term(self.plus.clone(), 1);
        p.add_term(self.minus.clone(), -1);
        p
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedTerm {
    pub sign: i64,
    pub exponents: Monomial,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(m: Monomial, coeff: i64) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, coeff: i64) {
        let c = self.terms.entry(m.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Degrees of the terms, deduplicated; homogeneous iff at most one.
    pub fn degrees(&self, weights: &[i64]) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|m| m.degree(weights)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn has_unit_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.abs() == 1)
    }

    pub fn signed_terms(&self) -> Vec<SignedTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(m, &c)| SignedTerm {
                sign: c,
                exponents: m.clone(),
            })
            .collect()
    }

    /// Value at an integer point modulo a prime.
    pub fn eval_mod(&self, point: &[u64], prime: u64) -> u64 {
        let mut total = 0u64;
        for (m, c) in self.terms() {
            let mut v = 1u64;
            for (&e, &x) in m.0.iter().zip(point) {
                v = mulmod(v, powmod(x % prime, u64::from(e), prime), prime);
            }
            let c = c.rem_euclid(prime as i64) as u64;
            total = (total + mulmod(v, c, prime)) % prime;
        }
        total
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.signed_terms().iter().enumerate() {
            let mag = t.sign.abs();
            let body = if mag == 1 {
                t.exponents.to_string()
            } else {
                format!("{mag}*{}", t.exponents)
            };
            match (k, t.sign < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    r
}

pub type PolyMatrix = Vec<Vec<Poly>>;

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Poly::zero(), |acc, k| acc.add(&row[k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

/// Rank of a matrix of residues modulo a prime.
pub fn rank_mod(mut m: Vec<Vec<u64>>, prime: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = powmod(m[r][c], prime - 2, prime);
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = mulmod(m[i][c], inv, prime);
                for j in c..cols {
                    let sub = mulmod(f, m[r][j], prime);
                    m[i][j] = (m[i][j] + prime - sub) % prime;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn binomial_normalization() {
        let w = [5, 7, 11];
        let b = Binomial::new(mono(&[0, 3, 0]), mono(&[2, 0, 1]), &w)
            .unwrap()
            .unwrap();
        assert_eq!(b.plus, mono(&[2, 0, 1]));
        assert_eq!(b.degree, 21);
        assert_eq!(b.to_string(), "u^2*u1 - v^3");
        assert!(Binomial::new(mono(&[1, 0, 0]), mono(&[1, 0, 0]), &w)
            .unwrap()
            .is_none());
        assert_eq!(
            Binomial::new(mono(&[1, 0, 0]), mono(&[0, 1, 0]), &w),
            Err(Error::NotHomogeneous { plus: 5, minus: 7 })
        );
    }

    #[test]
    fn negative_exponent_rejected() {
        assert!(matches!(
            Monomial::from_pairs(3, &[(0, 2), (2, -1)]),
            Err(Error::NegativeExponent(_))
        ));
    }

    #[test]
    fn polynomial_product_cancels() {
        // (u - v)(u + v) = u^2 - v^2
        let u = Poly::monomial(mono(&[1, 0]), 1);
        let v = Poly::monomial(mono(&[0, 1]), 1);
        let prod = u.add(&v.neg()).mul(&u.add(&v));
        assert_eq!(prod.to_string(), "u^2 - v^2");
        assert!(prod.add(&prod.neg()).is_zero());
    }

    #[test]
    fn evaluation_mod_prime() {
        let p = Poly::monomial(mono(&[2, 1]), 1).add(&Poly::monomial(mono(&[0, 0]), -1));
        // 3^2 * 4 - 1 = 35 = 35 mod 101
        assert_eq!(p.eval_mod(&[3, 4], 101), 35);
        assert_eq!(p.eval_mod(&[3, 4], 7), 0);
    }

    #[test]
    fn rank_mod_examples() {
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 4]], 101), 1);
        assert_eq!(rank_mod(vec![vec![1, 2], vec![3, 4]], 101), 2);
        assert_eq!(rank_mod(vec![vec![0, 0]], 101), 0);
    }
}
