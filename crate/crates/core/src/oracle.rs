//! Brute-force graded linear algebra on Macaulay matrices.
//!
//! Every quantity here is read off spans of monomial multiples in a single
//! degree; nothing uses Gröbner bases. These routines are slow and serve as
//! ground truth for the faster algorithms.

use std::collections::HashMap;

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{sparse_kernel, SparseEchelon, SparseVec};
use crate::order::WeightOrder;
use crate::poly::{Monomial, Poly};

/// A subspace of `S_d` kept in echelon form over a fixed column order.
#[derive(Clone, Debug)]
pub struct Space<F: Field> {
    n: usize,
    d: u32,
    mons: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ech: SparseEchelon<F>,
}

impl<F: Field> Space<F> {
    /// Columns are sorted by decreasing weight, ties by decreasing degrevlex.
    pub fn new(n: usize, d: u32, w: Option<&WeightOrder>) -> Self {
        let mut mons = Monomial::all_of_degree(n, d);
        mons.sort_by(|a, b| {
            let by_w = match w {
                Some(w) => w.compare(b, a),
                None => std::cmp::Ordering::Equal,
            };
            by_w.then_with(|| b.cmp_degrevlex(a))
        });
        let index = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Space {
            n,
            d,
            mons,
            index,
            ech: SparseEchelon::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.mons.len()
    }

    fn to_vec(&self, f: &Poly<F>) -> Result<SparseVec<F>> {
        let mut v = Vec::with_capacity(f.len());
        for (m, c) in f.terms() {
            let &i = self.index.get(m).ok_or_else(|| {
                Error::Context(format!("term of degree {} in a degree-{} space", m.degree(), self.d))
            })?;
            v.push((i, c.clone()));
        }
        v.sort_by_key(|x| x.0);
        Ok(v)
    }

    fn to_poly(&self, v: &SparseVec<F>) -> Poly<F> {
        Poly::from_terms(self.n, v.iter().map(|(i, c)| (self.mons[*i].clone(), c.clone())))
    }

    pub fn insert(&mut self, f: &Poly<F>) -> Result<bool> {
        if f.is_zero() {
            return Ok(false);
        }
        let v = self.to_vec(f)?;
        Ok(self.ech.insert(v))
    }

    pub fn contains(&self, f: &Poly<F>) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.ech.contains(self.to_vec(f)?))
    }

    /// Reduced echelon basis.
    pub fn basis(&self) -> Vec<Poly<F>> {
        self.ech.reduced_rows().iter().map(|v| self.to_poly(v)).collect()
    }

    /// Initial forms of an echelon basis; they form a basis of the initial
    /// space for the weight the columns were sorted by.
    pub fn initial_basis(&self, w: &WeightOrder) -> Vec<Poly<F>> {
        self.ech
            .rows()
            .map(|v| {
                let top = w.weight(&self.mons[v[0].0]);
                Poly::from_terms(
                    self.n,
                    v.iter()
                        .filter(|(i, _)| w.weight(&self.mons[*i]) == top)
                        .map(|(i, c)| (self.mons[*i].clone(), c.clone())),
                )
            })
            .collect()
    }
}

type Graded<'a, F> = Vec<(u32, &'a Poly<F>)>;

fn check_gens<F: Field>(gens: &[Poly<F>]) -> Result<(usize, Graded<'_, F>)> {
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
        out.push((g.homogeneous_degree()?, g));
    }
    Ok((n, out))
}

/// The components `I_0, ..., I_{max_d}` of the ideal, each as a [`Space`]
/// with columns sorted for `w`.
pub fn ideal_components<F: Field>(gens: &[Poly<F>], max_d: u32, w: Option<&WeightOrder>) -> Result<Vec<Space<F>>> {
    let (n, gens) = check_gens(gens)?;
    let mut out: Vec<Space<F>> = Vec::with_capacity(max_d as usize + 1);
    for d in 0..=max_d {
        let mut sp = Space::new(n, d, w);
        if let Some(prev) = out.last() {
            for b in prev.basis() {
                for k in 0..n {
                    sp.insert(&b.mul_term(&Monomial::var(n, k), &F::one()))?;
                }
            }
        }
        for (dg, g) in &gens {
            if *dg == d {
                sp.insert(g)?;
            }
        }
        out.push(sp);
    }
    Ok(out)
}

/// Basis of `in_w(I)_d`.
pub fn initial_component<F: Field>(gens: &[Poly<F>], w: &WeightOrder, d: u32) -> Result<Vec<Poly<F>>> {
    let comps = ideal_components(gens, d, Some(w))?;
    Ok(comps[d as usize].initial_basis(w))
}

/// `dim_k I_d` for `d = 0..=max_d`.
pub fn ideal_dims<F: Field>(gens: &[Poly<F>], max_d: u32) -> Result<Vec<usize>> {
    Ok(ideal_components(gens, max_d, None)?.iter().map(|s| s.dim()).collect())
}

/// Hilbert function of `S/I` in degrees `0..=max_d`.
pub fn hilbert_function<F: Field>(gens: &[Poly<F>], max_d: u32) -> Result<Vec<usize>> {
    Ok(ideal_components(gens, max_d, None)?
        .iter()
        .map(|s| s.ambient_dim() - s.dim())
        .collect())
}

/// Whether two families of degree-`d` forms span the same subspace.
pub fn same_span<F: Field>(n: usize, d: u32, a: &[Poly<F>], b: &[Poly<F>]) -> Result<bool> {
    let mut sa = Space::new(n, d, None);
    for f in a {
        sa.insert(f)?;
    }
    let mut sb = sa.clone();
    for f in b {
        sb.insert(f)?;
    }
    let mut only_b = Space::new(n, d, None);
    for f in b {
        only_b.insert(f)?;
    }
    Ok(sa.dim() == sb.dim() && only_b.dim() == sb.dim())
}

/// Degree-`d` part of the ideal generated by `polys`, as a basis.
pub fn ideal_component_basis<F: Field>(polys: &[Poly<F>], d: u32) -> Result<Vec<Poly<F>>> {
    if polys.iter().all(|p| p.is_zero()) {
        return Ok(Vec::new());
    }
    Ok(ideal_components(polys, d, None)?.swap_remove(d as usize).basis())
}

/// Minimal generators by degree: elements of `gens` (then of the component
/// bases) extending `S_1 I_{d-1}`, for degrees up to `max_d`.
pub fn minimal_generators<F: Field>(gens: &[Poly<F>], max_d: u32) -> Result<Vec<Poly<F>>> {
    let (n, hg) = check_gens(gens)?;
    let comps = ideal_components(gens, max_d, None)?;
    let mut out = Vec::new();
    for d in 0..=max_d {
        let mut lower = Space::new(n, d, None);
        if d > 0 {
            for b in comps[d as usize - 1].basis() {
                for k in 0..n {
                    lower.insert(&b.mul_term(&Monomial::var(n, k), &F::one()))?;
                }
            }
        }
        for (dg, g) in &hg {
            if *dg == d && lower.insert(g)? {
                out.push((*g).clone());
            }
        }
    }
    Ok(out)
}

/// The free module `⊕ S(-d_i)` in degree `d`, indexed by `(i, m)`.
struct FreeDegree {
    cells: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl FreeDegree {
    fn new(n: usize, degs: &[u32], d: u32) -> Self {
        let mut cells = Vec::new();
        for (i, &di) in degs.iter().enumerate() {
            if di <= d {
                for m in Monomial::all_of_degree(n, d - di) {
                    cells.push((i, m));
                }
            }
        }
        let index = cells.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
        FreeDegree { cells, index }
    }
}

/// Basis of the degree-`d` syzygies of `gens`, as sparse vectors over the
/// returned cells `(i, m)`.
fn syzygy_space<F: Field>(n: usize, gens: &[(u32, &Poly<F>)], d: u32) -> Result<(FreeDegree, Vec<SparseVec<F>>)> {
    let degs: Vec<u32> = gens.iter().map(|g| g.0).collect();
    let free = FreeDegree::new(n, &degs, d);
    let target = Space::<F>::new(n, d, None);
    let mut rows = Vec::with_capacity(free.cells.len());
    for (i, m) in &free.cells {
        rows.push(target.to_vec(&gens[*i].1.mul_term(m, &F::one()))?);
    }
    let ker = sparse_kernel(target.ambient_dim(), rows);
    Ok((free, ker))
}

/// `dim syz_d` and `beta_{0,d}(syz)` for the listed generators.
pub fn syzygy_counts<F: Field>(gens: &[Poly<F>], d: u32) -> Result<(usize, usize)> {
    let (n, hg) = check_gens(gens)?;
    if hg.is_empty() {
        return Ok((0, 0));
    }
    let (free, ker) = syzygy_space(n, &hg, d)?;
    if d == 0 {
        return Ok((ker.len(), ker.len()));
    }
    let (prev, pker) = syzygy_space(n, &hg, d - 1)?;
    let mut lower = SparseEchelon::new();
    for v in &pker {
        for k in 0..n {
            let x = Monomial::var(n, k);
            let mut w: SparseVec<F> = v
                .iter()
                .map(|(c, a)| {
                    let (i, m) = &prev.cells[*c];
                    (free.index[&(*i, m.mul(&x))], a.clone())
                })
                .collect();
            w.sort_by_key(|e| e.0);
            lower.insert(w);
        }
    }
    Ok((ker.len(), ker.len() - lower.rank()))
}

/// `beta_{0,d}` of the syzygy module of the list `gens`.
pub fn syzygy_beta0<F: Field>(gens: &[Poly<F>], d: u32) -> Result<usize> {
    Ok(syzygy_counts(gens, d)?.1)
}

/// Rows 0 and 1 of the Betti table of the ideal, degrees `0..=max_j`.
pub fn oracle_betti<F: Field>(gens: &[Poly<F>], max_j: u32) -> Result<BettiTable> {
    let mut t = BettiTable::new(1, max_j);
    let (_, hg) = check_gens(gens)?;
    if hg.is_empty() {
        for j in 0..=max_j {
            t.set(0, j, 0);
            t.set(1, j, 0);
        }
        return Ok(t);
    }
    let mins = minimal_generators(gens, max_j)?;
    for j in 0..=max_j {
        let b0 = mins.iter().filter(|g| g.degree() == Some(j)).count();
        t.set(0, j, b0 as u64);
        let b1 = if mins.is_empty() { 0 } else { syzygy_beta0(&mins, j)? };
        t.set(1, j, b1 as u64);
    }
    t.exact_within_window = true;
    Ok(t)
}

/// Minimal generators of `in_w(I)` in degrees up to `cap`, from the
/// initial components alone.
pub fn initial_ideal_generators<F: Field>(gens: &[Poly<F>], w: &WeightOrder, cap: u32) -> Result<Vec<Poly<F>>> {
    let (n, _) = check_gens(gens)?;
    let comps = ideal_components(gens, cap, Some(w))?;
    let mut out = Vec::new();
    let mut prev: Vec<Poly<F>> = Vec::new();
    for (d, sp) in comps.iter().enumerate() {
        let init = sp.initial_basis(w);
        let mut lower = Space::new(n, d as u32, None);
        for b in &prev {
            for k in 0..n {
                lower.insert(&b.mul_term(&Monomial::var(n, k), &F::one()))?;
            }
        }
        for f in &init {
            if lower.insert(f)? {
                out.push(f.clone());
            }
        }
        prev = init;
    }
    Ok(out)
}
