use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Monomial;

/// Sparse polynomial in a fixed number of variables.
///
/// Terms are kept in degrevlex-descending order with no zero coefficients,
/// so equality is structural and printing is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    nvars: usize,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            Self::zero(nvars)
        } else {
            Poly {
                nvars,
                terms: vec![(m, c)],
            }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, F::one())
    }

    /// The variable with zero-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(nvars: usize, terms: I) -> Self {
        let mut v: Vec<(Monomial, F)> = terms.into_iter().collect();
        for (m, _) in &v {
            assert_eq!(m.nvars(), nvars, "monomial from a different ring");
        }
        v.sort_by(|a, b| b.0.cmp_degrevlex(&a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.clone() + c;
                }
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { nvars, terms: out }
    }

    /// Terms must already be strictly degrevlex-descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_degrevlex(&w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    /// Leading term in degrevlex.
    pub fn leading(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(t, _)| m.cmp_degrevlex(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree of the leading term (the maximum degree), `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    /// Degree of a homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::Degenerate("zero polynomial has no degree"));
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous("standard"));
        }
        Ok(self.terms[0].0.degree())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        // multiplication by a monomial preserves degrevlex order
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Exact division by the term `c * m`.
    pub fn div_term(&self, m: &Monomial, c: &F) -> Result<Self> {
        let inv = c.inv().ok_or(Error::InexactDivision)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, a) in &self.terms {
            let q = t.quotient(m).ok_or(Error::InexactDivision)?;
            terms.push((q, a.clone() * inv.clone()));
        }
        Ok(Poly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Context(format!(
                "polynomials in {} and {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_degrevlex(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        a[i].1.clone() - b[j].1.clone()
                    } else {
                        a[i].1.clone() + b[j].1.clone()
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for (m, c) in &b[j..] {
            out.push((m.clone(), if subtract { -c.clone() } else { c.clone() }));
        }
        Poly {
            nvars: self.nvars,
            terms: out,
        }
    }

    fn product(&self, other: &Self) -> Self {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Poly::zero(self.nvars);
        for (m, c) in &small.terms {
            acc = acc.combine(&big.mul_term(m, c), false);
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    pub fn map_terms<G: FnMut(&Monomial) -> Monomial>(&self, nvars: usize, mut g: G) -> Self {
        Poly::from_terms(nvars, self.terms.iter().map(|(m, c)| (g(m), c.clone())))
    }

    /// Reinterprets the polynomial in a ring with `n` variables; variables
    /// beyond `n` must not occur.
    pub fn resized(&self, n: usize) -> Self {
        assert!(
            self.terms
                .iter()
                .all(|(m, _)| m.exponents().iter().skip(n).all(|&e| e == 0)),
            "dropping a variable that occurs"
        );
        self.map_terms(n, |m| m.resized(n))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a, F> {
        PolyDisplay { poly: self, names }
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -(self.clone())
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        self.combine(rhs, false)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        self.combine(rhs, true)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials from different rings");
        self.product(rhs)
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        &self * &rhs
    }
}

/// Default variable names `x1, ..., xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub struct PolyDisplay<'a, F> {
    poly: &'a Poly<F>,
    names: &'a [String],
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &[String]) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        match names.get(i) {
            Some(name) => write!(f, "{name}")?,
            None => write!(f, "x{}", i + 1)?,
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl<F: Field> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative_repr();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m, self.names)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        write!(f, "{}", self.display_with(&names))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
