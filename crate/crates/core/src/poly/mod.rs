//! Sparse polynomials, ring contexts and the split `N x N^{n-h}` grading.

mod monomial;
mod parse;
mod polynomial;

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

pub use monomial::{mono_lcm, Monomial};
pub use parse::parse_poly;
pub use polynomial::{default_names, Poly, PolyDisplay};

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};

/// The ambient ring `S = k[x_1..x_n]` together with the split index `h`
/// singling out `S̄ = k[x_1..x_h]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingCtx {
    pub var_names: Vec<String>,
    pub h: usize,
    pub field: FieldKind,
}

impl RingCtx {
    pub fn new(var_names: Vec<String>, h: usize, field: FieldKind) -> Result<Self> {
        let n = var_names.len();
        if n == 0 {
            return Err(Error::Context("a ring needs at least one variable".into()));
        }
        if h == 0 || h > n {
            return Err(Error::Context(format!("split index h = {h} outside 1..={n}")));
        }
        for (i, v) in var_names.iter().enumerate() {
            if var_names[..i].contains(v) {
                return Err(Error::Context(format!("duplicate variable name '{v}'")));
            }
        }
        Ok(RingCtx {
            var_names,
            h,
            field,
        })
    }

    /// Ring with variables `x1..xn`.
    pub fn standard(n: usize, h: usize, field: FieldKind) -> Result<Self> {
        Self::new(default_names(n), h, field)
    }

    pub fn n(&self) -> usize {
        self.var_names.len()
    }

    pub fn parse<F: Field>(&self, src: &str) -> Result<Poly<F>> {
        parse_poly(src, &self.var_names)
    }

    pub fn print<F: Field>(&self, f: &Poly<F>) -> String {
        f.display_with(&self.var_names).to_string()
    }
}

/// Degree in the `N x N^{n-h}` grading: `e` counts the first `h`
/// variables, `eps` is the exponent vector of the last `n - h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiDegree {
    pub e: u32,
    pub eps: Vec<u32>,
}

impl BiDegree {
    pub fn of_monomial(m: &Monomial, h: usize) -> Self {
        let ex = m.exponents();
        BiDegree {
            e: ex[..h].iter().sum(),
            eps: ex[h..].to_vec(),
        }
    }

    pub fn total(&self) -> u32 {
        self.e + self.eps.iter().sum::<u32>()
    }

    /// The tail monomial `x_{h+1}^{eps_1} ... x_n^{eps_{n-h}}` in `n` variables.
    pub fn tail_monomial(&self, n: usize) -> Monomial {
        let h = n - self.eps.len();
        let mut ex = vec![0u32; h];
        ex.extend_from_slice(&self.eps);
        Monomial::from_exponents(&ex)
    }
}

impl std::ops::Add for &BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: &BiDegree) -> BiDegree {
        BiDegree {
            e: self.e + rhs.e,
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.e, self.eps)
    }
}

/// The split bidegree of `f`, which must be `N x N^{n-h}`-homogeneous.
pub fn bidegree<F: Field>(f: &Poly<F>, h: usize) -> Result<BiDegree> {
    let mut it = f.support();
    let first = it
        .next()
        .ok_or(Error::Degenerate("zero polynomial has no bidegree"))?;
    if h == 0 || h > f.nvars() {
        return Err(Error::Context(format!("split index {h} outside 1..={}", f.nvars())));
    }
    let d = BiDegree::of_monomial(first, h);
    for m in it {
        let e = BiDegree::of_monomial(m, h);
        if e != d {
            return Err(Error::NotBihomogeneous(d.to_string(), e.to_string()));
        }
    }
    Ok(d)
}

/// `dim_k S̄_d` for `S̄` a polynomial ring in `h` variables.
pub fn dim_graded(h: usize, d: i64) -> BigUint {
    assert!(h >= 1, "dim_graded needs h >= 1");
    if d < 0 {
        return BigUint::from(0u32);
    }
    let d = BigUint::from(d as u64);
    let hm1 = BigUint::from(h as u64 - 1);
    binomial(&d + &hm1, hm1)
}
