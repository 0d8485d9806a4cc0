//! The free module `Λ(Γ)` over `S̄ = k[x_1..x_h]` attached to a list of
//! split bihomogeneous elements, and the dimensions `λ_j`.

use std::collections::HashSet;

use num_bigint::BigUint;
use rand::Rng;
use serde::Serialize;

use crate::betti::truncated_betti;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::height;
use crate::json::serialize_big;
use crate::poly::{bidegree, dim_graded, Monomial, Poly};
use crate::sample;

/// `γ = γ̄ · m` with `γ̄ ∈ S̄` homogeneous and `m` a monomial in the last
/// `n - h` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGenerator<F: Field> {
    pub gbar: Poly<F>,
    pub m: Monomial,
    pub index: usize,
}

impl<F: Field> SplitGenerator<F> {
    pub fn new(gbar: Poly<F>, m: Monomial, h: usize, index: usize) -> Result<Self> {
        if gbar.is_zero() {
            return Err(Error::Degenerate("split generator with zero S̄-part"));
        }
        let n = gbar.nvars();
        if m.nvars() != n || h == 0 || h > n {
            return Err(Error::Context(format!("split index {h} for {n} variables")));
        }
        gbar.homogeneous_degree()?;
        if gbar.support().any(|u| u.exponents()[h..].iter().any(|&e| e > 0)) {
            return Err(Error::Input("S̄-part involves a tail variable".into()));
        }
        if m.exponents()[..h].iter().any(|&e| e > 0) {
            return Err(Error::Input("tail monomial involves a variable of S̄".into()));
        }
        Ok(SplitGenerator { gbar, m, index })
    }

    /// Splits an `N x N^{n-h}`-homogeneous polynomial.
    pub fn split(gamma: &Poly<F>, h: usize, index: usize) -> Result<Self> {
        let bd = bidegree(gamma, h)?;
        let m = bd.tail_monomial(gamma.nvars());
        let gbar = gamma.div_term(&m, &F::one())?;
        Self::new(gbar, m, h, index)
    }

    pub fn gbar_degree(&self) -> u32 {
        self.gbar.degree().unwrap_or(0)
    }

    /// Total degree of `γ`.
    pub fn degree(&self) -> u32 {
        self.gbar_degree() + self.m.degree()
    }

    pub fn product(&self) -> Poly<F> {
        self.gbar.mul_term(&self.m, &F::one())
    }
}

/// Basis element `e_m^r` with its degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaBasis {
    pub r: usize,
    pub m: Vec<u32>,
    pub degree: u32,
}

#[derive(Clone, Debug)]
pub struct LambdaModule<F: Field> {
    pub basis: Vec<LambdaBasis>,
    pub gamma: Vec<SplitGenerator<F>>,
    pub h: usize,
}

fn sorted(set: HashSet<Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = set.into_iter().collect();
    v.sort_by(|a, b| a.cmp_degrevlex(b));
    v
}

/// The sets `L_1, ..., L_t`, with `lcm(∅, m_r) = m_r`.
pub fn lcm_sets(ms: &[Monomial]) -> Vec<Vec<Monomial>> {
    let Some(first) = ms.first() else { return Vec::new() };
    // lcms of all subsets of the monomials seen so far, the empty one included
    let mut closure: HashSet<Monomial> = HashSet::from([Monomial::one(first.nvars())]);
    let mut out = Vec::with_capacity(ms.len());
    for m in ms {
        let l: HashSet<Monomial> = closure.iter().map(|c| c.lcm(m)).collect();
        closure.extend(l.iter().cloned());
        out.push(sorted(l));
    }
    out
}

pub fn build_lambda<F: Field>(gamma: &[SplitGenerator<F>], h: usize) -> LambdaModule<F> {
    let ms: Vec<Monomial> = gamma.iter().map(|g| g.m.clone()).collect();
    let mut basis = Vec::new();
    for (r, l) in lcm_sets(&ms).into_iter().enumerate() {
        let e = gamma[r].gbar_degree();
        for m in l {
            basis.push(LambdaBasis {
                r: r + 1,
                degree: m.degree() + e,
                m: m.exponents().to_vec(),
            });
        }
    }
    LambdaModule {
        basis,
        gamma: gamma.to_vec(),
        h,
    }
}

impl<F: Field> LambdaModule<F> {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}

/// `λ_j = dim_k Λ(Γ)_j`.
pub fn lambda_dim<F: Field>(l: &LambdaModule<F>, j: i64) -> BigUint {
    l.basis
        .iter()
        .map(|b| dim_graded(l.h, j - i64::from(b.degree)))
        .sum()
}

/// `2 λ² + (2h - 1) λ`.
pub fn recurrence_rhs(lam: &BigUint, h: usize) -> BigUint {
    assert!(h >= 1, "recurrence needs h >= 1");
    BigUint::from(2u32) * lam * lam + BigUint::from(2 * h as u64 - 1) * lam
}

/// Both sides of the append inequality for `Γ = Γ1 ++ Γ2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaCountReport {
    pub j: u32,
    #[serde(serialize_with = "serialize_big")]
    pub lambda_j_gamma1: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub lambda_next: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub rhs: BigUint,
    pub ok: bool,
}

pub fn lambda_count_check<F: Field>(
    gamma1: &[SplitGenerator<F>],
    gamma2: &[SplitGenerator<F>],
    j: u32,
    h: usize,
) -> Result<LambdaCountReport> {
    if let Some(g) = gamma1.iter().find(|g| g.degree() >= j) {
        return Err(Error::Precondition(format!("Γ1 has an element of degree {} >= {j}", g.degree())));
    }
    if let Some(g) = gamma2.iter().find(|g| g.degree() != j) {
        return Err(Error::Precondition(format!("Γ2 has an element of degree {} != {j}", g.degree())));
    }
    let lam = lambda_dim(&build_lambda(gamma1, h), i64::from(j));
    if BigUint::from(gamma2.len()) > lam {
        return Err(Error::Precondition(format!("|Γ2| = {} exceeds λ_j(Γ1) = {lam}", gamma2.len())));
    }
    let all: Vec<SplitGenerator<F>> = gamma1.iter().chain(gamma2).cloned().collect();
    let next = lambda_dim(&build_lambda(&all, h), i64::from(j) + 1);
    let rhs = recurrence_rhs(&lam, h);
    Ok(LambdaCountReport {
        j,
        ok: next <= rhs,
        lambda_j_gamma1: lam,
        lambda_next: next,
        rhs,
    })
}

/// `β_{1,D+j+1}(J)` against `λ_{D+j+1}(Γ)` for `J = (φ, Γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop33Report {
    pub degree: u32,
    pub beta1: u64,
    #[serde(serialize_with = "serialize_big")]
    pub lambda: BigUint,
    pub ok: bool,
}

pub fn prop33_check<F: Field>(
    phi: &[Poly<F>],
    gamma: &[SplitGenerator<F>],
    d: u32,
    j: u32,
    h: usize,
) -> Result<Prop33Report> {
    if phi.len() != h {
        return Err(Error::Precondition(format!("φ must have h = {h} elements, got {}", phi.len())));
    }
    let mut degs = Vec::with_capacity(h);
    for p in phi {
        if p.is_zero() {
            return Err(Error::Precondition("φ contains zero".into()));
        }
        degs.push(p.homogeneous_degree()?);
        if p.support().any(|u| u.exponents()[h..].iter().any(|&e| e > 0)) {
            return Err(Error::Precondition("φ is not contained in S̄".into()));
        }
    }
    if height(phi)? != h as i64 {
        return Err(Error::Precondition("φ is not a regular sequence".into()));
    }
    let mut syz_top = None;
    for a in 0..h {
        for b in a + 1..h {
            syz_top = syz_top.max(Some(degs[a] + degs[b]));
        }
    }
    if let Some(s) = syz_top.filter(|&s| d <= s) {
        return Err(Error::Precondition(format!("D = {d} must exceed the first syzygy degree {s} of φ")));
    }
    if let Some(g) = gamma.iter().find(|g| g.degree() < d || g.degree() > d + j) {
        return Err(Error::Precondition(format!("γ of degree {} outside [{d}, {}]", g.degree(), d + j)));
    }
    let top = d + j + 1;
    let mut gens: Vec<Poly<F>> = phi.to_vec();
    gens.extend(gamma.iter().map(|g| g.product()));
    let beta1 = truncated_betti(&gens, 1, top)?.get(1, top).unwrap_or(0);
    let lambda = lambda_dim(&build_lambda(gamma, h), i64::from(top));
    Ok(Prop33Report {
        degree: top,
        ok: BigUint::from(beta1) <= lambda,
        beta1,
        lambda,
    })
}

fn random_split<F: Field, R: Rng + ?Sized>(n: usize, h: usize, deg: u32, index: usize, rng: &mut R) -> SplitGenerator<F> {
    let tail_deg = rng.gen_range(0..=deg.min(3));
    let e = deg - tail_deg;
    let gbar = sample::random_sparse_form::<F, R>(h, e, 2, rng).resized(n);
    let mut ex = vec![0u32; h];
    ex.extend_from_slice(sample::random_monomial(n - h, tail_deg, rng).exponents());
    SplitGenerator::new(gbar, Monomial::from_exponents(&ex), h, index).expect("well-formed by construction")
}

/// A pair `(Γ1, Γ2)` meeting the hypotheses of [`lambda_count_check`].
pub fn sample_lambda_pair<F: Field, R: Rng + ?Sized>(
    n: usize,
    h: usize,
    j: u32,
    rng: &mut R,
) -> (Vec<SplitGenerator<F>>, Vec<SplitGenerator<F>>) {
    assert!(h >= 1 && h < n && j >= 1);
    let t = rng.gen_range(1..=4);
    let g1: Vec<SplitGenerator<F>> = (0..t)
        .map(|r| {
            let d = rng.gen_range(0..j);
            random_split(n, h, d, r, rng)
        })
        .collect();
    let lam = lambda_dim(&build_lambda(&g1, h), i64::from(j));
    let cap = usize::try_from(lam).unwrap_or(usize::MAX).min(6);
    let s = rng.gen_range(0..=cap);
    let g2 = (0..s).map(|r| random_split(n, h, j, t + r, rng)).collect();
    (g1, g2)
}

/// `(φ, Γ, D, j)` meeting the hypotheses of [`prop33_check`].
pub fn sample_prop33_instance<F: Field, R: Rng + ?Sized>(
    n: usize,
    h: usize,
    rng: &mut R,
) -> (Vec<Poly<F>>, Vec<SplitGenerator<F>>, u32, u32) {
    assert!(h >= 1 && h < n);
    let degs: Vec<u32> = (0..h).map(|_| rng.gen_range(1..=2)).collect();
    let change = sample::random_linear_change::<F, R>(h, rng);
    let phi: Vec<Poly<F>> = degs
        .iter()
        .enumerate()
        .map(|(i, &di)| change[i].pow(di).resized(n))
        .collect();
    let mut syz = 0;
    for a in 0..h {
        for b in a + 1..h {
            syz = syz.max(degs[a] + degs[b]);
        }
    }
    let d = syz + 1 + rng.gen_range(0..=1);
    let j = rng.gen_range(0..=1);
    let t = rng.gen_range(1..=3);
    let gamma = (0..t)
        .map(|r| {
            let deg = d + rng.gen_range(0..=j);
            random_split(n, h, deg, r, rng)
        })
        .collect();
    (phi, gamma, d, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::poly::{default_names, parse_poly};

    type F = Fp<32003>;

    fn p(s: &str, n: usize) -> Poly<F> {
        parse_poly(s, &default_names(n)).unwrap()
    }

    fn sg(gbar: &str, m: &str, idx: usize) -> SplitGenerator<F> {
        let mm = p(m, 4).terms()[0].0.clone();
        SplitGenerator::new(p(gbar, 4), mm, 2, idx).unwrap()
    }

    #[test]
    fn single_generator() {
        let g = vec![sg("x1^2 + x2^2", "x3", 0)];
        let l = build_lambda(&g, 2);
        assert_eq!(l.len(), 1);
        assert_eq!(l.basis[0].degree, 3);
        assert_eq!(lambda_dim(&l, 4), BigUint::from(2u32));
        assert_eq!(lambda_dim(&l, 2), BigUint::from(0u32));
    }

    #[test]
    fn two_generators() {
        // γ̄ of degree D - 1 = 2
        let g = vec![sg("x1^2", "x3", 0), sg("x1*x2", "x4", 1)];
        let l = build_lambda(&g, 2);
        let sets: Vec<(usize, Vec<u32>)> = l.basis.iter().map(|b| (b.r, b.m.clone())).collect();
        assert_eq!(sets, vec![(1, vec![0, 0, 1, 0]), (2, vec![0, 0, 0, 1]), (2, vec![0, 0, 1, 1])]);
        assert_eq!(lambda_dim(&l, 4), BigUint::from(2u32 + 2 + 1));
    }

    #[test]
    fn equal_tails_stay_distinct() {
        let g = vec![sg("x1", "x3", 0), sg("x2", "x3", 1)];
        let l = build_lambda(&g, 2);
        assert_eq!(l.len(), 2);
        assert_eq!(l.basis[0].m, l.basis[1].m);
        assert!(build_lambda::<F>(&[], 2).is_empty());
    }

    #[test]
    fn splitting() {
        let s = SplitGenerator::split(&p("x1^2*x3*x4 - 3*x1*x2*x3*x4", 4), 2, 0).unwrap();
        assert_eq!(s.gbar, p("x1^2 - 3*x1*x2", 4));
        assert_eq!(s.degree(), 4);
        assert!(SplitGenerator::split(&p("x1*x3 + x2*x4", 4), 2, 0).is_err());
    }

    #[test]
    fn recurrence_values() {
        assert_eq!(recurrence_rhs(&BigUint::from(2u32), 2), BigUint::from(14u32));
        assert_eq!(recurrence_rhs(&BigUint::from(0u32), 5), BigUint::from(0u32));
    }

    #[test]
    fn prop33_example() {
        let phi = vec![p("x1^2", 3), p("x2^2", 3)];
        let d = 5;
        let x = p(&format!("x3^{d}"), 3).terms()[0].0.clone();
        let gamma = vec![SplitGenerator::new(p("x1", 3), x, 2, 0).unwrap()];
        let r = prop33_check(&phi, &gamma, d, 1, 2).unwrap();
        assert!(r.ok);
        let empty = prop33_check::<F>(&phi, &[], d, 0, 2).unwrap();
        assert_eq!(empty.beta1, 0);
        assert!(prop33_check(&phi, &gamma, 4, 2, 2).is_err());
    }
}
