//! Buchberger's algorithm for monomial orders.
//!
//! The engine tracks, on request, how every basis element is built from the
//! input list. From that transformation matrix it produces Schreyer syzygies
//! of the *input* list, which in turn give colon ideals, intersections and
//! lifts. All runs accept an optional degree cap with respect to a grading
//! vector; below the cap the output is exact for graded-homogeneous input.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Poly};

/// Terms in ascending order for the engine's monomial order.
type Terms<F> = Vec<(Monomial, F)>;

/// Options for a Buchberger run.
#[derive(Clone, Debug, Default)]
pub struct GbConfig {
    pub order: MonomialOrder,
    /// One weight per variable; defaults to the standard grading.
    pub grading: Option<Vec<u32>>,
    /// S-pairs whose lcm has larger degree are never processed.
    pub degree_cap: Option<u64>,
    /// Record how each basis element is built from the inputs.
    pub track: bool,
}

impl GbConfig {
    pub fn new(order: MonomialOrder) -> Self {
        GbConfig {
            order,
            ..Default::default()
        }
    }

    pub fn capped(mut self, cap: Option<u64>) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn graded(mut self, grading: Vec<u32>) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn tracked(mut self) -> Self {
        self.track = true;
        self
    }
}

#[derive(Clone, Debug)]
struct Elem<F: Field> {
    poly: Terms<F>,
    lm: Monomial,
    /// `poly = sum_i cof[i] * input[i]`; empty when not tracking.
    cof: Vec<Poly<F>>,
}

fn sort_terms<F: Field>(f: &Poly<F>, ord: MonomialOrder) -> Terms<F> {
    let mut t = f.terms().to_vec();
    match ord {
        MonomialOrder::DegRevLex => t.reverse(),
        _ => t.sort_by(|a, b| ord.compare(&a.0, &b.0)),
    }
    t
}

fn terms_to_poly<F: Field>(n: usize, mut t: Terms<F>, ord: MonomialOrder) -> Poly<F> {
    match ord {
        MonomialOrder::DegRevLex => {
            t.reverse();
            Poly::from_sorted_terms(n, t)
        }
        _ => Poly::from_terms(n, t),
    }
}

/// `p - c * m * g` for ascending term lists.
fn sub_mul<F: Field>(p: &Terms<F>, c: &F, m: &Monomial, g: &Terms<F>, ord: MonomialOrder) -> Terms<F> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let next_g = |j: usize| (g[j].0.mul(m), c.clone() * g[j].1.clone());
    let mut pending = if g.is_empty() { None } else { Some(next_g(0)) };
    while i < p.len() {
        let Some((gm, gc)) = pending.clone() else { break };
        match ord.compare(&p[i].0, &gm) {
            Ordering::Less => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((gm, -gc));
                j += 1;
                pending = if j < g.len() { Some(next_g(j)) } else { None };
            }
            Ordering::Equal => {
                let v = p[i].1.clone() - gc;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
                pending = if j < g.len() { Some(next_g(j)) } else { None };
            }
        }
    }
    out.extend(p[i..].iter().cloned());
    if let Some((gm, gc)) = pending {
        out.push((gm, -gc));
        for k in j + 1..g.len() {
            let (gm, gc) = next_g(k);
            out.push((gm, -gc));
        }
    }
    out
}

/// One reduction step `coef * mono * basis[index]` subtracted from the dividend.
type Step<F> = (usize, Monomial, F);

fn find_reducer<F: Field>(basis: &[Elem<F>], m: &Monomial) -> Option<usize> {
    basis.iter().position(|e| e.lm.divides(m))
}

/// Full reduction of `p` by monic `basis`; returns the remainder (ascending)
/// and the steps taken.
fn reduce<F: Field>(basis: &[Elem<F>], mut p: Terms<F>, ord: MonomialOrder) -> (Terms<F>, Vec<Step<F>>) {
    let mut rem: Terms<F> = Vec::new();
    let mut steps = Vec::new();
    while let Some((m, c)) = p.last().cloned() {
        match find_reducer(basis, &m) {
            Some(k) => {
                let g = &basis[k];
                let q = m.quotient(&g.lm).expect("divisor");
                p = sub_mul(&p, &c, &q, &g.poly, ord);
                steps.push((k, q, c));
            }
            None => {
                p.pop();
                rem.push((m, c));
            }
        }
    }
    rem.reverse();
    (rem, steps)
}

/// Collects reduction steps into one quotient polynomial per basis element.
fn quotients<F: Field>(n: usize, len: usize, steps: Vec<Step<F>>) -> Vec<Poly<F>> {
    let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); len];
    for (k, q, c) in steps {
        buckets[k].push((q, c));
    }
    buckets.into_iter().map(|b| Poly::from_terms(n, b)).collect()
}

/// `base - sum_k q_k * rows_k` on cofactor vectors.
fn combine_cofactors<F: Field>(base: Vec<Poly<F>>, qs: &[Poly<F>], rows: &[&[Poly<F>]]) -> Vec<Poly<F>> {
    let mut out = base;
    for (q, row) in qs.iter().zip(rows) {
        if q.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row.iter()) {
            if !r.is_zero() {
                *o = &*o - &(q * r);
            }
        }
    }
    out
}

/// Incremental Buchberger engine.
#[derive(Clone, Debug)]
pub struct Buchberger<F: Field> {
    n: usize,
    cfg: GbConfig,
    grading: Vec<u32>,
    inputs: Vec<Poly<F>>,
    basis: Vec<Elem<F>>,
    heap: BinaryHeap<Reverse<(u64, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

impl<F: Field> Buchberger<F> {
    pub fn new(n: usize, cfg: GbConfig) -> Result<Self> {
        let grading = match &cfg.grading {
            Some(g) if g.len() != n => {
                return Err(Error::Context(format!("grading of length {} in {n} variables", g.len())))
            }
            Some(g) => g.clone(),
            None => vec![1; n],
        };
        Ok(Buchberger {
            n,
            cfg,
            grading,
            inputs: Vec::new(),
            basis: Vec::new(),
            heap: BinaryHeap::new(),
            pending: HashSet::new(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    fn order(&self) -> MonomialOrder {
        self.cfg.order
    }

    fn degree_of(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.grading)
    }

    fn is_graded_homogeneous(&self, f: &Poly<F>) -> bool {
        let mut it = f.support().map(|m| self.degree_of(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Adds an input generator; the basis is not completed until [`Self::complete`].
    /// Returns whether the basis grew.
    pub fn add_generator(&mut self, f: &Poly<F>) -> Result<bool> {
        if f.nvars() != self.n {
            return Err(Error::Context(format!(
                "generator in {} variables, ring has {}",
                f.nvars(),
                self.n
            )));
        }
        if self.cfg.degree_cap.is_some() && !self.is_graded_homogeneous(f) {
            return Err(Error::NotHomogeneous("truncation"));
        }
        let idx = self.inputs.len();
        self.inputs.push(f.clone());
        if self.cfg.track {
            for e in &mut self.basis {
                e.cof.push(Poly::zero(self.n));
            }
        }
        if f.is_zero() {
            return Ok(false);
        }
        let mut cof = Vec::new();
        if self.cfg.track {
            cof = vec![Poly::zero(self.n); idx + 1];
            cof[idx] = Poly::one(self.n);
        }
        let (rem, steps) = reduce(&self.basis, sort_terms(f, self.order()), self.order());
        if rem.is_empty() {
            return Ok(false);
        }
        if self.cfg.track {
            let qs = quotients(self.n, self.basis.len(), steps);
            let rows: Vec<&[Poly<F>]> = self.basis.iter().map(|e| e.cof.as_slice()).collect();
            cof = combine_cofactors(cof, &qs, &rows);
        }
        self.insert(rem, cof);
        Ok(true)
    }

    fn insert(&mut self, poly: Terms<F>, cof: Vec<Poly<F>>) {
        let lc = poly.last().expect("nonzero").1.clone();
        let inv = lc.inv().expect("nonzero");
        let poly: Terms<F> = poly.into_iter().map(|(m, c)| (m, c * inv.clone())).collect();
        let cof = cof.into_iter().map(|c| c.scale(&inv)).collect();
        let lm = poly.last().expect("nonzero").0.clone();
        let j = self.basis.len();
        for (i, e) in self.basis.iter().enumerate() {
            if e.lm.is_coprime(&lm) {
                continue;
            }
            let l = e.lm.lcm(&lm);
            self.heap.push(Reverse((self.degree_of(&l), j, i)));
            self.pending.insert((i, j));
        }
        self.basis.push(Elem { poly, lm, cof });
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    fn chain_criterion(&self, i: usize, j: usize, l: &Monomial) -> bool {
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.basis[k].lm.divides(l)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    /// Processes S-pairs up to the degree cap.
    pub fn complete(&mut self) {
        while let Some(&Reverse((deg, j, i))) = self.heap.peek() {
            if self.cfg.degree_cap.is_some_and(|c| deg > c) {
                break;
            }
            self.heap.pop();
            self.pending.remove(&(i, j));
            let l = self.basis[i].lm.lcm(&self.basis[j].lm);
            if self.chain_criterion(i, j, &l) {
                continue;
            }
            let (s, cof) = self.spoly(i, j, &l);
            let (rem, steps) = reduce(&self.basis, s, self.order());
            if rem.is_empty() {
                continue;
            }
            let mut cof = cof;
            if self.cfg.track {
                let qs = quotients(self.n, self.basis.len(), steps);
                let rows: Vec<&[Poly<F>]> = self.basis.iter().map(|e| e.cof.as_slice()).collect();
                cof = combine_cofactors(cof, &qs, &rows);
            }
            self.insert(rem, cof);
        }
    }

    fn spoly(&self, i: usize, j: usize, l: &Monomial) -> (Terms<F>, Vec<Poly<F>>) {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let qa = l.quotient(&a.lm).expect("lcm");
        let qb = l.quotient(&b.lm).expect("lcm");
        let one = F::one();
        let pa: Terms<F> = a.poly.iter().map(|(m, c)| (m.mul(&qa), c.clone())).collect();
        let s = sub_mul(&pa, &one, &qb, &b.poly, self.order());
        let mut cof = Vec::new();
        if self.cfg.track {
            cof = a
                .cof
                .iter()
                .zip(&b.cof)
                .map(|(ca, cb)| &ca.mul_term(&qa, &one) - &cb.mul_term(&qb, &one))
                .collect();
        }
        (s, cof)
    }

    /// Normal form with respect to the current (possibly incomplete) basis.
    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        let (rem, _) = reduce(&self.basis, sort_terms(f, self.order()), self.order());
        terms_to_poly(self.n, rem, self.order())
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Cofactors expressing `f` in the inputs, using the current basis.
    pub fn lift(&self, f: &Poly<F>) -> Option<Vec<Poly<F>>> {
        assert!(self.cfg.track, "lift needs a tracked engine");
        let (rem, steps) = reduce(&self.basis, sort_terms(f, self.order()), self.order());
        if !rem.is_empty() {
            return None;
        }
        let qs: Vec<Poly<F>> = quotients(self.n, self.basis.len(), steps).iter().map(|q| -q).collect();
        let rows: Vec<&[Poly<F>]> = self.basis.iter().map(|e| e.cof.as_slice()).collect();
        Some(combine_cofactors(vec![Poly::zero(self.n); self.inputs.len()], &qs, &rows))
    }

    /// Minimal, interreduced, monic basis.
    pub fn finish(&self) -> GroebnerBasis<F> {
        let keep: Vec<usize> = (0..self.basis.len())
            .filter(|&j| {
                !(0..self.basis.len()).any(|k| {
                    k != j
                        && self.basis[k].lm.divides(&self.basis[j].lm)
                        && (self.basis[k].lm != self.basis[j].lm || k < j)
                })
            })
            .collect();
        let mut elems: Vec<Elem<F>> = keep.iter().map(|&k| self.basis[k].clone()).collect();
        elems.sort_by(|a, b| self.order().compare(&a.lm, &b.lm));
        for idx in 0..elems.len() {
            let others: Vec<Elem<F>> = elems
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, e)| e.clone())
                .collect();
            let mut p = elems[idx].poly.clone();
            let top = p.pop().expect("nonzero");
            let (rem, steps) = reduce(&others, p, self.order());
            let mut poly = rem;
            poly.push(top);
            if self.cfg.track && !steps.is_empty() {
                let qs = quotients(self.n, others.len(), steps);
                let rows: Vec<&[Poly<F>]> = others.iter().map(|e| e.cof.as_slice()).collect();
                let cof = combine_cofactors(elems[idx].cof.clone(), &qs, &rows);
                elems[idx].cof = cof;
            }
            elems[idx].poly = poly;
        }
        let gens = elems
            .iter()
            .map(|e| terms_to_poly(self.n, e.poly.clone(), self.order()))
            .collect();
        GroebnerBasis {
            n: self.n,
            gens,
            order: self.order(),
            grading: self.grading.clone(),
            degree_cap: self.cfg.degree_cap,
            tracked: self.cfg.track,
            inputs: self.inputs.clone(),
            elems,
        }
    }
}

/// A reduced Gröbner basis, exact up to `degree_cap` when one is set.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    n: usize,
    gens: Vec<Poly<F>>,
    order: MonomialOrder,
    grading: Vec<u32>,
    degree_cap: Option<u64>,
    tracked: bool,
    inputs: Vec<Poly<F>>,
    elems: Vec<Elem<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Monic generators, sorted by ascending leading monomial.
    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn reduced(&self) -> bool {
        true
    }

    pub fn degree_cap(&self) -> Option<u64> {
        self.degree_cap
    }

    pub fn grading(&self) -> &[u32] {
        &self.grading
    }

    pub fn inputs(&self) -> &[Poly<F>] {
        &self.inputs
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lm.clone()).collect()
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        let (rem, _) = reduce(&self.elems, sort_terms(f, self.order), self.order);
        terms_to_poly(self.n, rem, self.order)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Row `k` expresses `gens()[k]` in terms of the inputs.
    pub fn transformation(&self) -> Option<Vec<Vec<Poly<F>>>> {
        self.tracked.then(|| self.elems.iter().map(|e| e.cof.clone()).collect())
    }

    /// Remainder and one quotient per generator.
    pub fn divide(&self, f: &Poly<F>) -> (Poly<F>, Vec<Poly<F>>) {
        let (rem, steps) = reduce(&self.elems, sort_terms(f, self.order), self.order);
        (terms_to_poly(self.n, rem, self.order), quotients(self.n, self.elems.len(), steps))
    }

    /// Cofactors `c` with `f = sum_i c_i * input_i`, if `f` lies in the ideal.
    pub fn lift(&self, f: &Poly<F>) -> Option<Vec<Poly<F>>> {
        assert!(self.tracked, "lift needs a tracked basis");
        let (rem, qs) = self.divide(f);
        if !rem.is_zero() {
            return None;
        }
        let zero = vec![Poly::zero(self.n); self.inputs.len()];
        let rows: Vec<&[Poly<F>]> = self.elems.iter().map(|e| e.cof.as_slice()).collect();
        let neg: Vec<Poly<F>> = qs.iter().map(|q| -q).collect();
        Some(combine_cofactors(zero, &neg, &rows))
    }

    /// Schreyer generators of the syzygies of the input list (degrees up to the cap).
    pub fn input_syzygies(&self) -> Result<SyzygyList<F>> {
        assert!(self.tracked, "syzygies need a tracked basis");
        let t = self.inputs.len();
        let zero_row = || vec![Poly::zero(self.n); t];
        let within = |d: u64| self.degree_cap.is_none_or(|c| d <= c);
        let mut rows = Vec::new();
        let one = F::one();
        for j in 0..self.elems.len() {
            for i in 0..j {
                let (a, b) = (&self.elems[i], &self.elems[j]);
                let l = a.lm.lcm(&b.lm);
                if !within(l.weighted_degree(&self.grading)) {
                    continue;
                }
                let qa = l.quotient(&a.lm).expect("lcm");
                let qb = l.quotient(&b.lm).expect("lcm");
                let pa: Terms<F> = a.poly.iter().map(|(m, c)| (m.mul(&qa), c.clone())).collect();
                let s = sub_mul(&pa, &one, &qb, &b.poly, self.order);
                let (rem, steps) = reduce(&self.elems, s, self.order);
                if !rem.is_empty() {
                    return Err(Error::Consistency("S-pair of a finished basis does not reduce to zero".into()));
                }
                // tau = qa e_i - qb e_j - sum q_k e_k, pushed to the inputs
                let mut tau = quotients(self.n, self.elems.len(), steps);
                for q in &mut tau {
                    *q = -&*q;
                }
                tau[i] = &tau[i] + &Poly::monomial(qa);
                tau[j] = &tau[j] - &Poly::monomial(qb);
                rows.push(self.push_to_inputs(&tau, zero_row()));
            }
        }
        for (i, g) in self.inputs.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::Degenerate("zero entry in a syzygy input list"));
            }
            let d = g.leading().map(|(m, _)| m.weighted_degree(&self.grading)).unwrap_or(0);
            if !within(d) {
                continue;
            }
            let (rem, qs) = self.divide(g);
            if !rem.is_zero() {
                return Err(Error::Consistency("input does not reduce to zero".into()));
            }
            let mut base = zero_row();
            base[i] = Poly::one(self.n);
            let neg: Vec<Poly<F>> = qs.iter().map(|q| -q).collect();
            rows.push(self.push_to_inputs(&neg, base));
        }
        rows.retain(|r: &Vec<Poly<F>>| r.iter().any(|p| !p.is_zero()));
        Ok(SyzygyList::new(rows, &self.inputs, &self.grading))
    }

    /// `base + sum_k coeffs_k * A_k`.
    fn push_to_inputs(&self, coeffs: &[Poly<F>], base: Vec<Poly<F>>) -> Vec<Poly<F>> {
        let neg: Vec<Poly<F>> = coeffs.iter().map(|q| -q).collect();
        let rows: Vec<&[Poly<F>]> = self.elems.iter().map(|e| e.cof.as_slice()).collect();
        combine_cofactors(base, &neg, &rows)
    }
}

/// Generators of the syzygy module of a fixed list `gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyList<F: Field> {
    pub rows: Vec<Vec<Poly<F>>>,
    /// Degree of each row in the grading used to compute it.
    pub degrees: Vec<u64>,
}

impl<F: Field> SyzygyList<F> {
    fn new(rows: Vec<Vec<Poly<F>>>, gamma: &[Poly<F>], grading: &[u32]) -> Self {
        let degrees = rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(gamma)
                    .find(|(s, _)| !s.is_zero())
                    .map(|(s, g)| {
                        let ds = s.leading().map(|(m, _)| m.weighted_degree(grading)).unwrap_or(0);
                        let dg = g.leading().map(|(m, _)| m.weighted_degree(grading)).unwrap_or(0);
                        ds + dg
                    })
                    .unwrap_or(0)
            })
            .collect();
        SyzygyList { rows, degrees }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// `sum_i row_i * gamma_i`.
pub fn apply_row<F: Field>(row: &[Poly<F>], gamma: &[Poly<F>]) -> Poly<F> {
    let n = gamma.first().map(|g| g.nvars()).unwrap_or(0);
    row.iter()
        .zip(gamma)
        .fold(Poly::zero(n), |acc, (s, g)| if s.is_zero() { acc } else { &acc + &(s * g) })
}

fn check_ring<F: Field>(gens: &[Poly<F>]) -> Result<usize> {
    let n = gens
        .first()
        .map(|g| g.nvars())
        .ok_or(Error::Degenerate("empty generator list"))?;
    if gens.iter().any(|g| g.nvars() != n) {
        return Err(Error::Context("generators from different rings".into()));
    }
    Ok(n)
}

/// Runs the engine on `gens` with the given options.
pub fn groebner_basis<F: Field>(n: usize, gens: &[Poly<F>], cfg: GbConfig) -> Result<GroebnerBasis<F>> {
    let mut e = Buchberger::new(n, cfg)?;
    for g in gens {
        e.add_generator(g)?;
    }
    e.complete();
    Ok(e.finish())
}

/// Reduced Gröbner basis of `gens`.
pub fn buchberger<F: Field>(gens: &[Poly<F>], ord: MonomialOrder) -> Result<GroebnerBasis<F>> {
    if gens.is_empty() {
        return Buchberger::new(0, GbConfig::new(ord)).map(|e| e.finish());
    }
    let n = check_ring(gens)?;
    groebner_basis(n, gens, GbConfig::new(ord))
}

pub fn normal_form<F: Field>(f: &Poly<F>, g: &GroebnerBasis<F>) -> Poly<F> {
    g.normal_form(f)
}

pub fn ideal_membership<F: Field>(f: &Poly<F>, gens: &[Poly<F>], ord: MonomialOrder) -> Result<bool> {
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(f.is_zero());
    }
    Ok(buchberger(gens, ord)?.contains(f))
}

/// Syzygies of `gamma`, up to degree `cap` in the standard grading.
pub fn syzygy_generators_capped<F: Field>(
    gamma: &[Poly<F>],
    ord: MonomialOrder,
    cap: Option<u64>,
) -> Result<SyzygyList<F>> {
    let n = check_ring(gamma)?;
    if gamma.iter().any(|g| g.is_zero()) {
        return Err(Error::Degenerate("zero entry in a syzygy input list"));
    }
    let cfg = GbConfig::new(ord).capped(cap).tracked();
    groebner_basis(n, gamma, cfg)?.input_syzygies()
}

/// Generators of the full syzygy module of the given list.
pub fn syzygy_generators<F: Field>(gamma: &[Poly<F>], ord: MonomialOrder) -> Result<SyzygyList<F>> {
    syzygy_generators_capped(gamma, ord, None)
}

/// Generators of `(J : g)`, read off the last syzygy coordinate of `(J, g)`.
pub fn colon_ideal<F: Field>(j: &[Poly<F>], g: &Poly<F>, ord: MonomialOrder) -> Result<Vec<Poly<F>>> {
    if g.is_zero() {
        return Err(Error::Degenerate("colon by the zero polynomial"));
    }
    let list: Vec<Poly<F>> = j.iter().filter(|f| !f.is_zero()).cloned().chain([g.clone()]).collect();
    let syz = syzygy_generators(&list, ord)?;
    let mut out: Vec<Poly<F>> = syz
        .rows
        .into_iter()
        .filter_map(|r| r.last().cloned())
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    dedup(&mut out);
    Ok(out)
}

/// Generators of `I ∩ J`.
pub fn intersection<F: Field>(i: &[Poly<F>], j: &[Poly<F>], ord: MonomialOrder) -> Result<Vec<Poly<F>>> {
    let a: Vec<Poly<F>> = i.iter().filter(|f| !f.is_zero()).cloned().collect();
    let b: Vec<Poly<F>> = j.iter().filter(|f| !f.is_zero()).cloned().collect();
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let list: Vec<Poly<F>> = a.iter().chain(&b).cloned().collect();
    let syz = syzygy_generators(&list, ord)?;
    let mut out: Vec<Poly<F>> = syz
        .rows
        .iter()
        .map(|r| apply_row(&r[..a.len()], &a))
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    dedup(&mut out);
    Ok(out)
}

fn dedup<F: Field>(v: &mut Vec<Poly<F>>) {
    let mut seen = HashSet::new();
    v.retain(|p| seen.insert(p.clone()));
}

/// Cofactors expressing `f` in terms of `gens`, if `f` lies in their ideal.
pub fn lift<F: Field>(f: &Poly<F>, gens: &[Poly<F>], ord: MonomialOrder) -> Result<Option<Vec<Poly<F>>>> {
    let n = check_ring(gens)?;
    let cap = (f.is_homogeneous() && gens.iter().all(|g| g.is_homogeneous())).then(|| f.degree().unwrap_or(0) as u64);
    let gb = groebner_basis(n, gens, GbConfig::new(ord).capped(cap).tracked())?;
    Ok(gb.lift(f))
}

/// Two ideals agree (two-sided membership of generators).
pub fn same_ideal<F: Field>(a: &[Poly<F>], b: &[Poly<F>], ord: MonomialOrder) -> Result<bool> {
    let ga = buchberger(a, ord)?;
    let gb = buchberger(b, ord)?;
    Ok(b.iter().all(|f| ga.contains(f)) && a.iter().all(|f| gb.contains(f)))
}

/// Krull dimension of `S / (leading monomials)`; `-1` for the unit ideal.
pub fn krull_dimension<F: Field>(gb: &GroebnerBasis<F>) -> i64 {
    let n = gb.nvars();
    let supports: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    if supports.contains(&0) {
        return -1;
    }
    assert!(n < 64, "dimension search supports fewer than 64 variables");
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as i64;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

/// Height of the ideal generated by `gens` (`n - dim`).
pub fn height<F: Field>(gens: &[Poly<F>]) -> Result<i64> {
    let n = check_ring(gens)?;
    let gb = buchberger(gens, MonomialOrder::DegRevLex)?;
    Ok(n as i64 - krull_dimension(&gb))
}
