//! The ring `S[y]` with bidegrees `deg(x_i) = (1, omega_i)` and `deg(y) = (0, 1)`.
//!
//! Elements are stored as polynomials in `n + 1` variables with `y` last.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::order::WeightOrder;
use crate::poly::{Monomial, Poly};

/// A bihomogeneous element of `S[y]` together with the weight in force.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly<F: Field> {
    poly: Poly<F>,
    omega: WeightOrder,
}

fn bidegree_of(m: &Monomial, omega: &WeightOrder) -> (u32, u64) {
    let n = omega.nvars();
    let ex = m.exponents();
    let dx: u32 = ex[..n].iter().sum();
    let w: u64 = ex[..n]
        .iter()
        .zip(omega.omega())
        .map(|(&e, &o)| e as u64 * o)
        .sum::<u64>()
        + ex[n] as u64;
    (dx, w)
}

impl<F: Field> HPoly<F> {
    /// Checks bihomogeneity of `poly` (in `n + 1` variables).
    pub fn new(poly: Poly<F>, omega: WeightOrder) -> Result<Self> {
        if poly.nvars() != omega.nvars() + 1 {
            return Err(Error::Context(format!(
                "S[y] element in {} variables for a weight of length {}",
                poly.nvars(),
                omega.nvars()
            )));
        }
        {
            let mut it = poly.support().map(|m| bidegree_of(m, &omega));
            if let Some(first) = it.next() {
                if let Some(other) = it.find(|d| *d != first) {
                    return Err(Error::NotBihomogeneous(
                        format!("{first:?}"),
                        format!("{other:?}"),
                    ));
                }
            }
        }
        Ok(HPoly { poly, omega })
    }

    pub fn zero(omega: WeightOrder) -> Self {
        HPoly {
            poly: Poly::zero(omega.nvars() + 1),
            omega,
        }
    }

    /// Number of `x` variables.
    pub fn n(&self) -> usize {
        self.omega.nvars()
    }

    pub fn poly(&self) -> &Poly<F> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<F> {
        self.poly
    }

    pub fn omega(&self) -> &WeightOrder {
        &self.omega
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `(deg_x, omega-weight + y-degree)`.
    pub fn bidegree(&self) -> Option<(u32, u64)> {
        self.poly.support().next().map(|m| bidegree_of(m, &self.omega))
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.bidegree().map(|d| d.0)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.omega != other.omega {
            return Err(Error::Context("elements of S[y] for different weights".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Self::new(&self.poly + &other.poly, self.omega.clone())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Self::new(&self.poly - &other.poly, self.omega.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(HPoly {
            poly: &self.poly * &other.poly,
            omega: self.omega.clone(),
        })
    }

    /// Multiplies by `y^a`.
    pub fn mul_y(&self, a: u32) -> Self {
        let mut e = vec![0u32; self.n() + 1];
        e[self.n()] = a;
        HPoly {
            poly: self.poly.mul_term(&Monomial::from_exponents(&e), &F::one()),
            omega: self.omega.clone(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        HPoly {
            poly: self.poly.scale(c),
            omega: self.omega.clone(),
        }
    }

    pub fn monic(&self) -> Self {
        HPoly {
            poly: self.poly.monic(),
            omega: self.omega.clone(),
        }
    }

    /// Smallest exponent of `y` over the support.
    pub fn y_order(&self) -> Option<u32> {
        let n = self.n();
        self.poly.support().map(|m| m.exponent(n)).min()
    }
}

impl<F: Field> fmt::Debug for HPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.poly)
    }
}

/// Display names for `S[y]`: the ring's names followed by `y`.
pub fn names_with_y(names: &[String]) -> Vec<String> {
    let mut v = names.to_vec();
    v.push(if names.iter().any(|s| s == "y") { "y_".into() } else { "y".into() });
    v
}

/// `y^d * sum c_u y^{-omega.u} X^u` with `d` the maximal weight on the support.
pub fn homogenize<F: Field>(g: &Poly<F>, w: &WeightOrder) -> Result<HPoly<F>> {
    if g.is_zero() {
        return Err(Error::Degenerate("homogenizing the zero polynomial"));
    }
    if !g.is_homogeneous() {
        return Err(Error::NotHomogeneous("standard"));
    }
    lift_weight(g, w)
}

/// Homogenizes with respect to `w` only; `g` need not be standard homogeneous
/// but then the result is only weight-homogeneous.
pub(crate) fn lift_weight<F: Field>(g: &Poly<F>, w: &WeightOrder) -> Result<HPoly<F>> {
    let n = w.nvars();
    if g.nvars() != n {
        return Err(Error::Context(format!(
            "polynomial in {} variables for a weight of length {n}",
            g.nvars()
        )));
    }
    let d = w.max_weight(g).unwrap_or(0);
    let mut terms = Vec::with_capacity(g.len());
    for (m, c) in g.terms() {
        let a = u32::try_from(d - w.weight(m))
            .map_err(|_| Error::Resource("y-exponent exceeds u32".into()))?;
        let mut e = m.exponents().to_vec();
        e.push(a);
        terms.push((Monomial::from_exponents(&e), c.clone()));
    }
    Ok(HPoly {
        poly: Poly::from_terms(n + 1, terms),
        omega: w.clone(),
    })
}

fn eval_y<F: Field>(f: &HPoly<F>, keep_y_free_only: bool) -> Poly<F> {
    let n = f.n();
    let terms = f
        .poly
        .terms()
        .iter()
        .filter(|(m, _)| !keep_y_free_only || m.exponent(n) == 0)
        .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[..n]), c.clone()));
    Poly::from_terms(n, terms)
}

/// Substitutes `y = 0`.
pub fn eval_y0<F: Field>(f: &HPoly<F>) -> Poly<F> {
    eval_y(f, true)
}

/// Substitutes `y = 1`.
pub fn eval_y1<F: Field>(f: &HPoly<F>) -> Poly<F> {
    eval_y(f, false)
}

/// `f = y^a * psi` with `psi` not divisible by `y`.
pub fn strip_y<F: Field>(f: &HPoly<F>) -> Result<(u32, HPoly<F>)> {
    let a = f
        .y_order()
        .ok_or(Error::Degenerate("stripping y from the zero polynomial"))?;
    if a == 0 {
        return Ok((0, f.clone()));
    }
    let n = f.n();
    let mut e = vec![0u32; n + 1];
    e[n] = a;
    let psi = f.poly.div_term(&Monomial::from_exponents(&e), &F::one())?;
    Ok((
        a,
        HPoly {
            poly: psi,
            omega: f.omega.clone(),
        },
    ))
}
