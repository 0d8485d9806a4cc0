use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x_1^{u_1} ... x_n^{u_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Degree with respect to a grading vector (one weight per variable).
    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Product; panics on exponent overflow or mismatched variable counts.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials from different rings");
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if self.nvars() != other.nvars() {
            return None;
        }
        let mut out = SmallVec::with_capacity(self.nvars());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials from different rings");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomials from different rings");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|e| e.checked_mul(k).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Drops or appends trailing variables.
    pub fn resized(&self, n: usize) -> Monomial {
        let mut v = self.0.clone();
        v.resize(n, 0);
        Monomial(v)
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }

    /// Degree reverse lexicographic comparison (greater = larger monomial).
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    pub fn cmp_deglex(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }

    /// All monomials of degree `d` in `n` variables, in degrevlex-descending order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::from_exponents(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp_degrevlex(a));
        out
    }
}

/// Least common multiple of two monomials of the same ring.
pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    if a.nvars() != b.nvars() {
        return Err(Error::Context(format!(
            "monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(a.lcm(b))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(mono_lcm(&m(&[1, 1]), &m(&[0, 2])).unwrap(), m(&[1, 2]));
        assert_eq!(mono_lcm(&m(&[3, 1]), &m(&[0, 0])).unwrap(), m(&[3, 1]));
        assert_eq!(
            mono_lcm(&m(&[0, 0, 1, 0]), &m(&[0, 0, 0, 1])).unwrap(),
            m(&[0, 0, 1, 1])
        );
        assert!(matches!(
            mono_lcm(&m(&[1]), &m(&[1, 0])),
            Err(Error::Context(_))
        ));
    }

    #[test]
    fn degrevlex_basic() {
        // x1 > x2 > x3, and x2^2 > x1*x3 in degrevlex
        assert_eq!(m(&[1, 0, 0]).cmp_degrevlex(&m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(m(&[0, 2, 0]).cmp_degrevlex(&m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(m(&[0, 0, 2]).cmp_degrevlex(&m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn enumerate_degree() {
        let ms = Monomial::all_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], m(&[2, 0, 0]));
        assert_eq!(ms[5], m(&[0, 0, 2]));
        assert_eq!(Monomial::all_of_degree(4, 0).len(), 1);
    }
}
