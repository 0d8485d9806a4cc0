//! Graded Betti numbers of ideals.
//!
//! Monomial ideals go through the Taylor complex, everything else through
//! Koszul homology of `S/I` computed degree by degree from a truncated
//! Gröbner basis. Numbers are those of the ideal: `beta_{0,j}(I)` counts
//! minimal generators of degree `j`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{
    buchberger, colon_ideal, groebner_basis, height, intersection, same_ideal, GbConfig, GroebnerBasis,
};
use crate::linalg::{sparse_rank, SparseVec};
use crate::order::{MonomialOrder, WeightOrder};
use crate::poly::{Monomial, Poly};
use crate::relative::{relative_gb, RelGbConfig};
use crate::sample;

/// `beta_{i,j}` for `0 <= i <= max_i`, `0 <= j <= max_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub max_i: u32,
    pub max_j: u32,
    pub exact_within_window: bool,
    /// `rows[i][j]`.
    rows: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn new(max_i: u32, max_j: u32) -> Self {
        BettiTable {
            max_i,
            max_j,
            exact_within_window: false,
            rows: vec![vec![0; max_j as usize + 1]; max_i as usize + 1],
        }
    }

    pub fn set(&mut self, i: u32, j: u32, v: u64) {
        self.rows[i as usize][j as usize] = v;
    }

    /// `None` outside the window.
    pub fn get(&self, i: u32, j: u32) -> Option<u64> {
        self.rows.get(i as usize)?.get(j as usize).copied()
    }

    /// `beta_{i,<=j}`.
    pub fn get_le(&self, i: u32, j: u32) -> Option<u64> {
        if j > self.max_j {
            return None;
        }
        Some(self.rows.get(i as usize)?[..=j as usize].iter().sum())
    }

    pub fn row(&self, i: u32) -> Option<&[u64]> {
        self.rows.get(i as usize).map(|r| r.as_slice())
    }

    pub fn total(&self, i: u32) -> Option<u64> {
        self.row(i).map(|r| r.iter().sum())
    }

    /// Nonzero entries `(i, j, beta)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(move |(j, v)| (i as u32, j as u32, *v))
        })
    }

    /// Restriction to a smaller window.
    pub fn restrict(&self, max_i: u32, max_j: u32) -> BettiTable {
        let mut t = BettiTable::new(max_i.min(self.max_i), max_j.min(self.max_j));
        for i in 0..=t.max_i {
            for j in 0..=t.max_j {
                t.set(i, j, self.get(i, j).unwrap_or(0));
            }
        }
        t.exact_within_window = self.exact_within_window;
        t
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<u32> = (0..=self.max_j).collect();
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(self.max_j.to_string().len());
        write!(f, "{:>4}", "i\\j")?;
        for j in &cols {
            write!(f, " {:>width$}", j)?;
        }
        writeln!(f)?;
        for (i, r) in self.rows.iter().enumerate() {
            write!(f, "{:>4}", i)?;
            for v in r {
                if *v == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {:>width$}", v)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn nonzero_homogeneous<F: Field>(gens: &[Poly<F>]) -> Result<(usize, Vec<Poly<F>>)> {
    let n = gens
        .first()
        .map(|g| g.nvars())
        .ok_or(Error::Degenerate("empty generator list"))?;
    let mut out = Vec::new();
    for g in gens {
        if g.nvars() != n {
            return Err(Error::Context("generators from different rings".into()));
        }
        if g.is_zero() {
            continue;
        }
        g.homogeneous_degree()?;
        out.push(g.clone());
    }
    Ok((n, out))
}

/// Minimal monomial generators: duplicates and multiples removed.
pub fn minimal_monomials(mons: &[Monomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = mons.to_vec();
    v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp_degrevlex(b)));
    v.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in v {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Exact Betti numbers of a monomial ideal from the Taylor complex.
pub fn monomial_betti<F: Field>(gens: &[Poly<F>], max_i: u32, max_j: u32) -> Result<BettiTable> {
    let (_, gens) = nonzero_homogeneous(gens)?;
    let mut mons = Vec::with_capacity(gens.len());
    for g in &gens {
        if !g.is_monomial() {
            return Err(Error::Precondition("monomial_betti needs monomial generators".into()));
        }
        mons.push(g.terms()[0].0.clone());
    }
    Ok(taylor_betti::<F>(&minimal_monomials(&mons), max_i, max_j))
}

/// Subsets of `mons` (as sorted index lists) of size `1..=max_size` with
/// lcm of degree at most `max_deg`, grouped by lcm.
fn lcm_classes(mons: &[Monomial], max_size: usize, max_deg: u32) -> HashMap<Monomial, Vec<Vec<usize>>> {
    let mut out: HashMap<Monomial, Vec<Vec<usize>>> = HashMap::new();
    let mut stack: Vec<(usize, Vec<usize>, Monomial)> = Vec::new();
    for (i, m) in mons.iter().enumerate() {
        if m.degree() <= max_deg {
            stack.push((i + 1, vec![i], m.clone()));
        }
    }
    while let Some((next, set, l)) = stack.pop() {
        if set.len() < max_size {
            for (k, m) in mons.iter().enumerate().skip(next) {
                let l2 = l.lcm(m);
                if l2.degree() <= max_deg {
                    let mut s2 = set.clone();
                    s2.push(k);
                    stack.push((k + 1, s2, l2));
                }
            }
        }
        out.entry(l).or_default().push(set);
    }
    out
}

fn taylor_betti<F: Field>(mons: &[Monomial], max_i: u32, max_j: u32) -> BettiTable {
    let mut t = BettiTable::new(max_i, max_j);
    t.exact_within_window = true;
    // beta_i(J) = beta_{i+1}(S/J) needs Taylor ranks up to i + 2
    let top = max_i as usize + 2;
    for (alpha, sets) in lcm_classes(mons, top, max_j) {
        let mut by_size: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); top + 1];
        for s in &sets {
            by_size[s.len()].push(s);
        }
        let index: Vec<HashMap<&Vec<usize>, usize>> = by_size
            .iter()
            .map(|v| v.iter().enumerate().map(|(k, s)| (*s, k)).collect())
            .collect();
        // rank of the boundary from size k to size k - 1 within the class
        let rank = |k: usize| -> usize {
            if k < 2 || k > top {
                return 0;
            }
            let rows = by_size[k].iter().map(|s| {
                let mut v: SparseVec<F> = Vec::new();
                for pos in 0..s.len() {
                    let mut face = (*s).clone();
                    face.remove(pos);
                    if let Some(&c) = index[k - 1].get(&face) {
                        let sign = if pos % 2 == 0 { F::one() } else { -F::one() };
                        v.push((c, sign));
                    }
                }
                v.sort_by_key(|e| e.0);
                v
            });
            sparse_rank(rows.collect::<Vec<_>>())
        };
        let ranks: Vec<usize> = (0..=top + 1).map(rank).collect();
        let deg = alpha.degree();
        for i in 0..=max_i as usize {
            let k = i + 1;
            let dim = by_size[k].len();
            if dim == 0 {
                continue;
            }
            let b = dim - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0);
            let cur = t.get(i as u32, deg).unwrap_or(0);
            t.set(i as u32, deg, cur + b as u64);
        }
    }
    t
}

/// Standard monomials of `S/I` in one degree, with normal forms of their
/// variable multiples computed on demand.
struct Quotient<F: Field> {
    n: usize,
    gb: GroebnerBasis<F>,
    lms: Vec<Monomial>,
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl<F: Field> Quotient<F> {
    fn new(n: usize, gb: GroebnerBasis<F>, max_d: u32) -> Self {
        let lms = gb.leading_monomials();
        let mut basis = Vec::new();
        let mut index = Vec::new();
        for d in 0..=max_d {
            let std: Vec<Monomial> = Monomial::all_of_degree(n, d)
                .into_iter()
                .filter(|m| !lms.iter().any(|l| l.divides(m)))
                .collect();
            index.push(std.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect());
            basis.push(std);
        }
        Quotient {
            n,
            gb,
            lms,
            basis,
            index,
        }
    }

    fn dim(&self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.basis.get(d as usize).map_or(0, |b| b.len())
        }
    }

    /// Coordinates of `x_k * b` in degree `d + 1`, where `b` is the `idx`-th
    /// standard monomial of degree `d`.
    fn times_var(&self, d: u32, idx: usize, k: usize) -> Vec<(usize, F)> {
        let m = self.basis[d as usize][idx].mul(&Monomial::var(self.n, k));
        let target = &self.index[d as usize + 1];
        if let Some(&i) = target.get(&m) {
            return vec![(i, F::one())];
        }
        debug_assert!(self.lms.iter().any(|l| l.divides(&m)));
        let nf = self.gb.normal_form(&Poly::monomial(m));
        nf.terms()
            .iter()
            .map(|(mm, c)| (target[mm], c.clone()))
            .collect()
    }
}

const KOSZUL_LIMIT: usize = 4_000_000;

/// Betti numbers of the ideal generated by `gens` within the window, from
/// the Koszul complex on the variables tensored with `S/I`.
pub fn truncated_betti<F: Field>(gens: &[Poly<F>], max_i: u32, max_j: u32) -> Result<BettiTable> {
    let (n, gens) = nonzero_homogeneous(gens)?;
    if n > 63 {
        return Err(Error::Resource(format!("{n} variables exceed the Koszul subset encoding")));
    }
    let gens: Vec<Poly<F>> = gens
        .into_iter()
        .filter(|g| g.degree().unwrap_or(0) <= max_j)
        .collect();
    let mut t = BettiTable::new(max_i, max_j);
    t.exact_within_window = true;
    if gens.is_empty() {
        return Ok(t);
    }
    if gens.iter().any(|g| g.degree() == Some(0)) {
        return Err(Error::Precondition("the unit ideal has no graded resolution here".into()));
    }
    let gb = groebner_basis(n, &gens, GbConfig::new(MonomialOrder::DegRevLex).capped(Some(u64::from(max_j))))?;
    let q = Quotient::new(n, gb, max_j);
    let top = (max_i as usize + 2).min(n);
    let subsets: Vec<Vec<u64>> = (0..=n)
        .map(|p| {
            if p > top + 1 {
                return Vec::new();
            }
            let mut v: Vec<u64> = (0u64..(1u64 << n)).filter(|s| s.count_ones() as usize == p).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let sub_index: Vec<HashMap<u64, usize>> = subsets
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, s)| (*s, i)).collect())
        .collect();
    let size = |p: usize, j: u32| -> usize {
        if p > n {
            return 0;
        }
        subsets[p].len() * q.dim(j as i64 - p as i64)
    };
    let mut work = 0usize;
    for p in 0..=top {
        for j in 0..=max_j {
            work += size(p, j);
        }
    }
    if work > KOSZUL_LIMIT {
        return Err(Error::Resource(format!(
            "Koszul window of {work} basis elements exceeds the limit {KOSZUL_LIMIT}"
        )));
    }
    // rank of d_p : (K_p ⊗ A)_j -> (K_{p-1} ⊗ A)_j
    let rank = |p: usize, j: u32| -> usize {
        if p == 0 || p > n || j < p as u32 {
            return 0;
        }
        let d = j - p as u32;
        let tdim = q.dim(d as i64 + 1);
        if tdim == 0 || q.dim(d as i64) == 0 {
            return 0;
        }
        let mut rows = Vec::with_capacity(size(p, j));
        for &s in &subsets[p] {
            for b in 0..q.dim(d as i64) {
                let mut v: SparseVec<F> = Vec::new();
                let mut pos = 0;
                for k in 0..n {
                    if s & (1 << k) == 0 {
                        continue;
                    }
                    let face = sub_index[p - 1][&(s & !(1 << k))];
                    let sign_neg = pos % 2 == 1;
                    pos += 1;
                    for (c, x) in q.times_var(d, b, k) {
                        let x = if sign_neg { -x } else { x };
                        v.push((face * tdim + c, x));
                    }
                }
                v.sort_by_key(|e| e.0);
                rows.push(v);
            }
        }
        sparse_rank(rows)
    };
    for j in 0..=max_j {
        let ranks: Vec<usize> = (0..=top).map(|p| rank(p, j)).collect();
        for i in 0..=max_i as usize {
            let p = i + 1;
            if p > n {
                break;
            }
            let b = size(p, j) - ranks[p] - ranks.get(p + 1).copied().unwrap_or(0);
            t.set(i as u32, j, b as u64);
        }
    }
    Ok(t)
}

/// Monomial inputs go through the Taylor complex, the rest through Koszul
/// homology.
pub fn betti_table<F: Field>(gens: &[Poly<F>], max_i: u32, max_j: u32) -> Result<BettiTable> {
    if !gens.is_empty() && gens.iter().all(|g| g.is_zero() || g.is_monomial()) {
        monomial_betti(gens, max_i, max_j)
    } else {
        truncated_betti(gens, max_i, max_j)
    }
}

/// An almost complete intersection linked to `I`: `a = f + (g)` with
/// `I = f : g`.
#[derive(Clone, Debug)]
pub struct AciInstance<F: Field> {
    pub f: Vec<Poly<F>>,
    pub g: Poly<F>,
    /// `deg(g)`.
    pub d: u32,
    pub d0: u32,
    pub g0: Poly<F>,
    pub ell: Poly<F>,
    pub source: Vec<Poly<F>>,
    pub h: usize,
    pub attempts: usize,
}

impl<F: Field> AciInstance<F> {
    /// Generators of `a`.
    pub fn ideal(&self) -> Vec<Poly<F>> {
        let mut v = self.f.clone();
        v.push(self.g.clone());
        v
    }
}

pub const DEFAULT_ATTEMPTS: usize = 16;

/// Builds the linkage of `I` (declared radical and unmixed) with an almost
/// complete intersection. An empty `f` asks for a random regular sequence
/// inside `I`.
pub fn aci_construct<F: Field>(i_gens: &[Poly<F>], f: &[Poly<F>], d: Option<u32>, seed: u64) -> Result<AciInstance<F>> {
    aci_construct_with(i_gens, f, d, seed, DEFAULT_ATTEMPTS)
}

pub fn aci_construct_with<F: Field>(
    i_gens: &[Poly<F>],
    f: &[Poly<F>],
    d: Option<u32>,
    seed: u64,
    attempts: usize,
) -> Result<AciInstance<F>> {
    let ord = MonomialOrder::DegRevLex;
    let (n, i_gens) = nonzero_homogeneous(i_gens)?;
    if i_gens.is_empty() {
        return Err(Error::Precondition("the zero ideal has no linkage".into()));
    }
    let h = height(&i_gens)?;
    if h < 1 || h as usize >= n {
        return Err(Error::Precondition(format!("need 1 <= height < n, got height {h} in {n} variables")));
    }
    let h = h as usize;
    let gb_i = buchberger(&i_gens, ord)?;
    let mut rng = sample::rng(seed);
    let mut used = 0usize;

    let f: Vec<Poly<F>> = if f.is_empty() {
        let mut deg = i_gens.iter().filter_map(|g| g.degree()).max().unwrap_or(1);
        let mut found = None;
        for _ in 0..attempts {
            used += 1;
            let cand: Vec<Poly<F>> = (0..h).filter_map(|_| sample::random_element(&i_gens, deg, &mut rng)).collect();
            if cand.len() == h && height(&cand)? == h as i64 {
                if same_ideal(&cand, &i_gens, ord)? {
                    deg += 1;
                    continue;
                }
                found = Some(cand);
                break;
            }
        }
        found.ok_or(Error::SearchFailure {
            what: "regular sequence",
            attempts: used,
            seed,
        })?
    } else {
        let (_, f) = nonzero_homogeneous(f)?;
        if f.len() != h {
            return Err(Error::Precondition(format!("regular sequence must have {h} elements, got {}", f.len())));
        }
        if let Some(k) = f.iter().position(|p| !gb_i.contains(p)) {
            return Err(Error::Precondition(format!("element {k} of the regular sequence is not in I")));
        }
        if height(&f)? != h as i64 {
            return Err(Error::Precondition("the given sequence is not regular of height h".into()));
        }
        f
    };
    if same_ideal(&f, &i_gens, ord)? {
        return Err(Error::Precondition("I is already generated by the regular sequence".into()));
    }
    let gb_f = buchberger(&f, ord)?;

    // K = f : I
    let mut k = colon_ideal(&f, &i_gens[0], ord)?;
    for g in &i_gens[1..] {
        let c = colon_ideal(&f, g, ord)?;
        k = intersection(&k, &c, ord)?;
    }
    let d_k = k
        .iter()
        .filter(|p| !gb_f.contains(p))
        .filter_map(|p| p.degree())
        .min()
        .ok_or_else(|| Error::Consistency("f : I lies inside f".into()))?;
    let mut g0 = None;
    for _ in 0..attempts {
        used += 1;
        let Some(c) = sample::random_element(&k, d_k, &mut rng) else { continue };
        if gb_f.contains(&c) {
            continue;
        }
        if same_ideal(&colon_ideal(&f, &c, ord)?, &i_gens, ord)? {
            g0 = Some(c);
            break;
        }
    }
    let g0 = g0.ok_or(Error::SearchFailure {
        what: "linking element",
        attempts: used,
        seed,
    })?;

    let degs: Vec<u32> = f.iter().filter_map(|p| p.degree()).collect();
    let mut d_prime = degs.iter().copied().max().unwrap_or(0);
    for a in 0..degs.len() {
        for b in a + 1..degs.len() {
            d_prime = d_prime.max(degs[a] + degs[b]);
        }
    }
    let d0 = d_prime.max(d_k);
    let d = match d {
        Some(d) if d <= d0 => return Err(Error::Precondition(format!("D = {d} must exceed D0 = {d0}"))),
        Some(d) => d,
        None => d0 + 1,
    };

    let mut ell = None;
    for _ in 0..attempts {
        used += 1;
        let l: Poly<F> = sample::random_linear_form(n, &mut rng);
        if same_ideal(&colon_ideal(&i_gens, &l, ord)?, &i_gens, ord)? {
            ell = Some(l);
            break;
        }
    }
    let ell = ell.ok_or(Error::SearchFailure {
        what: "regular linear form",
        attempts: used,
        seed,
    })?;
    let g = &g0 * &ell.pow(d - d_k);
    let inst = AciInstance {
        f,
        g,
        d,
        d0,
        g0,
        ell,
        source: i_gens,
        h,
        attempts: used,
    };
    if height(&inst.ideal())? != h as i64 || gb_f.contains(&inst.g) {
        return Err(Error::Consistency("constructed ideal is not an almost complete intersection".into()));
    }
    Ok(inst)
}

/// `(j, beta_{0,j}(I), beta_{1,D+j}(a))` for `j <= max_j`.
pub fn aci_comparison<F: Field>(inst: &AciInstance<F>, max_j: u32) -> Result<Vec<(u32, u64, u64)>> {
    let left = betti_table(&inst.source, 0, max_j)?;
    let right = truncated_betti(&inst.ideal(), 1, inst.d + max_j)?;
    Ok((0..=max_j)
        .map(|j| (j, left.get(0, j).unwrap_or(0), right.get(1, inst.d + j).unwrap_or(0)))
        .collect())
}

/// Entrywise comparison of the Betti tables of `I` and `in_w(I)`.
#[derive(Clone, Debug, Serialize)]
pub struct SemicontinuityReport {
    pub ideal: BettiTable,
    pub initial: BettiTable,
    /// Entries `(i, j)` with `beta_{i,j}(I) > beta_{i,j}(in_w(I))`.
    pub violations: Vec<(u32, u32)>,
}

impl SemicontinuityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn semicontinuity_check<F: Field>(
    gens: &[Poly<F>],
    w: &WeightOrder,
    max_i: u32,
    max_j: u32,
) -> Result<SemicontinuityReport> {
    let rel = relative_gb(gens, w, &RelGbConfig::capped(Some(max_j)))?;
    let ideal = betti_table(gens, max_i, max_j)?;
    let initial = betti_table(&rel.initial_gens, max_i, max_j)?;
    let mut violations = Vec::new();
    for i in 0..=max_i {
        for j in 0..=max_j {
            if ideal.get(i, j) > initial.get(i, j) {
                violations.push((i, j));
            }
        }
    }
    Ok(SemicontinuityReport {
        ideal,
        initial,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::poly::{default_names, parse_poly};

    type F = Fp<32003>;

    fn ps<K: Field>(v: &[&str], n: usize) -> Vec<Poly<K>> {
        v.iter().map(|s| parse_poly(s, &default_names(n)).unwrap()).collect()
    }

    #[test]
    fn taylor_small_cases() {
        let t = monomial_betti(&ps::<F>(&["x1"], 2), 2, 4).unwrap();
        assert_eq!(t.nonzero().collect::<Vec<_>>(), vec![(0, 1, 1)]);
        let t = monomial_betti(&ps::<F>(&["x1", "x2"], 2), 2, 4).unwrap();
        assert_eq!(t.nonzero().collect::<Vec<_>>(), vec![(0, 1, 2), (1, 2, 1)]);
        let t = monomial_betti(&ps::<F>(&["x1*x3", "x1*x4", "x2*x3", "x2*x4"], 4), 3, 6).unwrap();
        assert_eq!(t.get(0, 2), Some(4));
        assert_eq!(t.get(1, 3), Some(4));
        assert_eq!(t.get(2, 4), Some(1));
    }

    #[test]
    fn koszul_small_cases() {
        let t = truncated_betti(&ps::<F>(&["x1^2", "x2^2"], 2), 2, 6).unwrap();
        assert_eq!(t.nonzero().collect::<Vec<_>>(), vec![(0, 2, 2), (1, 4, 1)]);
        let t = truncated_betti(&ps::<F>(&["x1*x3", "x1*x4", "x2*x3", "x2*x4"], 4), 3, 6).unwrap();
        assert_eq!(t, monomial_betti(&ps::<F>(&["x1*x3", "x1*x4", "x2*x3", "x2*x4"], 4), 3, 6).unwrap());
    }

    #[test]
    fn real_prime_example() {
        let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let gens: Vec<Poly<Rational>> = ["a^2+c^2", "b^2+d^2", "a*d-b*c", "a*b+c*d"]
            .iter()
            .map(|s| parse_poly(s, &names).unwrap())
            .collect();
        let t = truncated_betti(&gens, 1, 3).unwrap();
        assert_eq!(t.get(0, 1), Some(0));
        assert_eq!(t.get(0, 2), Some(4));
    }

    #[test]
    fn table_display() {
        let t = truncated_betti(&ps::<F>(&["x1^2", "x2^2"], 2), 1, 4).unwrap();
        let s = t.to_string();
        assert!(s.lines().count() == 3);
        assert!(s.contains('2'));
        assert_eq!(t.get_le(0, 4), Some(2));
        assert_eq!(t.get(2, 0), None);
    }

    #[test]
    fn aci_rejects_complete_intersections() {
        let gens = ps::<F>(&["x1", "x2"], 3);
        assert!(matches!(
            aci_construct(&gens, &gens, None, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn aci_on_two_planes() {
        let i = ps::<F>(&["x1*x3", "x1*x4", "x2*x3", "x2*x4"], 4);
        let f = ps::<F>(&["x1*x3", "x2*x4"], 4);
        let inst = aci_construct(&i, &f, None, 3).unwrap();
        assert_eq!(inst.d0, 4);
        assert_eq!(inst.d, 5);
        for (j, l, r) in aci_comparison(&inst, 3).unwrap() {
            assert_eq!(l, r, "degree {j}");
        }
    }
}
