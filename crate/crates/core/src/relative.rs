//! Gröbner bases for a weight preorder through `S[y]`.
//!
//! Generators are homogenized; each iteration pushes syzygies of their
//! `y = 0` evaluations forward and adjoins the results that are new to the
//! ideal. A final descent pass extracts a minimal Gröbner basis.

use serde::Serialize;

use crate::betti::truncated_betti;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, syzygy_generators_capped, Buchberger, GbConfig};
use crate::homog::{eval_y0, eval_y1, homogenize, lift_weight, strip_y, HPoly};
use crate::oracle;
use crate::order::{initial_form_weight, MonomialOrder, WeightOrder};
use crate::poly::Poly;

/// Run options.
#[derive(Clone, Debug)]
pub struct RelGbConfig {
    /// Only x-degrees up to the cap are computed.
    pub degree_cap: Option<u32>,
    pub max_iterations: usize,
}

impl Default for RelGbConfig {
    fn default() -> Self {
        RelGbConfig {
            degree_cap: None,
            max_iterations: 64,
        }
    }
}

impl RelGbConfig {
    pub fn capped(cap: Option<u32>) -> Self {
        RelGbConfig {
            degree_cap: cap,
            ..Default::default()
        }
    }
}

/// What one iteration did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IterationRecord {
    pub iteration: usize,
    pub syzygies: usize,
    pub pushed: usize,
    pub added: usize,
    /// `(a_i, deg_x psi_i)` for every pushed element, in syzygy order.
    pub pushed_degrees: Vec<(u32, u32)>,
    pub added_degrees: Vec<u32>,
}

/// Generators of the current ideal `J_k` in `S[y]` and the run history.
#[derive(Clone, Debug)]
pub struct RelGbState<F: Field> {
    j: Vec<HPoly<F>>,
    omega: WeightOrder,
    iteration: usize,
    history: Vec<IterationRecord>,
    cap: Option<u32>,
    parked: Vec<Poly<F>>,
    engine: Buchberger<F>,
}

fn tilde_config(n: usize, cap: Option<u32>) -> GbConfig {
    let mut grading = vec![1u32; n];
    grading.push(0);
    GbConfig::new(MonomialOrder::DegRevLex)
        .graded(grading)
        .capped(cap.map(u64::from))
}

impl<F: Field> RelGbState<F> {
    /// Homogenizes `gens`; generators above the cap are parked.
    pub fn new(gens: &[Poly<F>], w: &WeightOrder, cap: Option<u32>) -> Result<Self> {
        let n = w.nvars();
        let mut engine = Buchberger::new(n + 1, tilde_config(n, cap))?;
        let mut j = Vec::new();
        let mut parked = Vec::new();
        for g in gens {
            if g.nvars() != n {
                return Err(Error::Context(format!(
                    "generator in {} variables for a weight of length {n}",
                    g.nvars()
                )));
            }
            if g.is_zero() {
                continue;
            }
            let d = g.homogeneous_degree()?;
            if cap.is_some_and(|c| d > c) {
                parked.push(g.clone());
                continue;
            }
            let h = homogenize(g, w)?;
            engine.add_generator(h.poly())?;
            j.push(h);
        }
        engine.complete();
        Ok(RelGbState {
            j,
            omega: w.clone(),
            iteration: 0,
            history: Vec::new(),
            cap,
            parked,
            engine,
        })
    }

    pub fn generators(&self) -> &[HPoly<F>] {
        &self.j
    }

    pub fn omega(&self) -> &WeightOrder {
        &self.omega
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn history(&self) -> &[IterationRecord] {
        &self.history
    }

    pub fn parked(&self) -> &[Poly<F>] {
        &self.parked
    }

    /// Membership in the current ideal of `S[y]` (exact up to the cap).
    pub fn contains(&self, f: &HPoly<F>) -> bool {
        self.engine.contains(f.poly())
    }

    /// One iteration; returns the pushed-forward elements and whether the
    /// ideal was already stable.
    pub fn iterate(&mut self) -> Result<(Vec<HPoly<F>>, bool)> {
        self.iteration += 1;
        let gamma: Vec<Poly<F>> = self.j.iter().map(eval_y0).collect();
        let mut nsyz = 0;
        let mut pushed = Vec::new();
        if !gamma.is_empty() {
            let syz = syzygy_generators_capped(&gamma, MonomialOrder::DegRevLex, self.cap.map(u64::from))?;
            nsyz = syz.len();
            for row in &syz.rows {
                if let Some(p) = self.push_forward(row)? {
                    pushed.push(p);
                }
            }
        }
        let mut added_degrees = Vec::new();
        let mut psis = Vec::with_capacity(pushed.len());
        for (_, psi) in &pushed {
            if !self.engine.contains(psi.poly()) {
                self.engine.add_generator(psi.poly())?;
                self.engine.complete();
                added_degrees.push(psi.deg_x().unwrap_or(0));
                self.j.push(psi.clone());
            }
            psis.push(psi.clone());
        }
        let stabilized = added_degrees.is_empty();
        self.history.push(IterationRecord {
            iteration: self.iteration,
            syzygies: nsyz,
            pushed: pushed.len(),
            added: added_degrees.len(),
            pushed_degrees: pushed
                .iter()
                .map(|(a, p)| (*a, p.deg_x().unwrap_or(0)))
                .collect(),
            added_degrees,
        });
        Ok((psis, stabilized))
    }

    /// Lifts a syzygy row of `eval_y0(J)` and applies it to `J`.
    fn push_forward(&self, row: &[Poly<F>]) -> Result<Option<(u32, HPoly<F>)>> {
        let mut parts = Vec::new();
        for (s, jf) in row.iter().zip(&self.j) {
            if s.is_zero() {
                continue;
            }
            let lifted = lift_weight(s, &self.omega)?;
            parts.push(lifted.try_mul(jf)?);
        }
        let top = parts
            .iter()
            .filter_map(|p| p.bidegree().map(|d| d.1))
            .max();
        let Some(top) = top else { return Ok(None) };
        let mut acc = HPoly::zero(self.omega.clone());
        for p in parts {
            let Some((_, w)) = p.bidegree() else { continue };
            let pad = u32::try_from(top - w).map_err(|_| Error::Resource("y-exponent exceeds u32".into()))?;
            acc = acc
                .try_add(&p.mul_y(pad))
                .map_err(|e| Error::Consistency(format!("pushed-forward syzygy is not bihomogeneous: {e}")))?;
        }
        if acc.is_zero() {
            return Ok(None);
        }
        let (a, psi) = strip_y(&acc)?;
        Ok(Some((a, psi)))
    }

    /// Iterates until stable.
    pub fn run(&mut self, max_iterations: usize) -> Result<()> {
        loop {
            if self.iteration >= max_iterations {
                return Err(Error::Resource(format!(
                    "no stabilization after {max_iterations} iterations ({} generators)",
                    self.j.len()
                )));
            }
            let (_, stable) = self.iterate()?;
            if stable {
                return Ok(());
            }
        }
    }
}

/// Engine over `eval_y0` of accepted elements, used by the descent.
struct Descent<F: Field> {
    survivors: Vec<HPoly<F>>,
    engine: Buchberger<F>,
}

impl<F: Field> Descent<F> {
    fn new(n: usize, cap: Option<u32>) -> Result<Self> {
        let cfg = GbConfig::new(MonomialOrder::DegRevLex)
            .capped(cap.map(u64::from))
            .tracked();
        Ok(Descent {
            survivors: Vec::new(),
            engine: Buchberger::new(n, cfg)?,
        })
    }

    fn accept(&mut self, g: HPoly<F>) -> Result<()> {
        self.engine.add_generator(&eval_y0(&g))?;
        self.engine.complete();
        self.survivors.push(g);
        Ok(())
    }

    fn reduce(&self, f: &HPoly<F>) -> Result<HPoly<F>> {
        let mut g = f.clone();
        loop {
            let Some((d, w)) = g.bidegree() else { return Ok(g) };
            let g0 = eval_y0(&g);
            let Some(cof) = self.engine.lift(&g0) else { return Ok(g) };
            let mut acc = g.clone();
            for (s, jf) in cof.iter().zip(&self.survivors) {
                if s.is_zero() {
                    continue;
                }
                let (dj, wj) = jf.bidegree().expect("survivors are nonzero");
                let omega = jf.omega();
                let part = Poly::from_terms(
                    s.nvars(),
                    s.terms()
                        .iter()
                        .filter(|(m, _)| m.degree() + dj == d && omega.weight(m) + wj == w)
                        .cloned(),
                );
                if part.is_zero() {
                    continue;
                }
                acc = acc.try_sub(&lift_weight(&part, omega)?.try_mul(jf)?)?;
            }
            if acc.is_zero() {
                return Ok(acc);
            }
            if !eval_y0(&acc).is_zero() {
                return Err(Error::Consistency("descent step left a y-free remainder".into()));
            }
            g = strip_y(&acc)?.1;
        }
    }
}

/// Descent through weights: returns `g` with the same saturation as `(J, f)`
/// and either `g = 0` or `eval_y0(g)` outside `ideal(eval_y0(J))`.
pub fn minimal_reduce<F: Field>(j: &[HPoly<F>], f: &HPoly<F>) -> Result<HPoly<F>> {
    let n = f.n();
    let mut d = Descent::new(n, f.deg_x())?;
    for g in j {
        if g.omega() != f.omega() {
            return Err(Error::Context("elements of S[y] for different weights".into()));
        }
        d.engine.add_generator(&eval_y0(g))?;
        d.survivors.push(g.clone());
    }
    d.engine.complete();
    d.reduce(f)
}

/// Result of [`relative_gb`].
#[derive(Clone, Debug)]
pub struct RelativeGb<F: Field> {
    /// `eval_y1` of the survivors: a minimal Gröbner basis of `I`.
    pub gb: Vec<Poly<F>>,
    /// `eval_y0` of the survivors: minimal generators of `in_omega(I)`.
    pub initial_gens: Vec<Poly<F>>,
    pub survivors: Vec<HPoly<F>>,
    pub minimal: bool,
    pub degree_cap: Option<u32>,
    /// Input generators above the cap, left untouched.
    pub parked: Vec<Poly<F>>,
    pub history: Vec<IterationRecord>,
}

/// Minimal Gröbner basis of `(gens)` for the weight `w`.
pub fn relative_gb<F: Field>(gens: &[Poly<F>], w: &WeightOrder, cfg: &RelGbConfig) -> Result<RelativeGb<F>> {
    let mut state = RelGbState::new(gens, w, cfg.degree_cap)?;
    state.run(cfg.max_iterations)?;
    let mut order: Vec<usize> = (0..state.j.len()).collect();
    order.sort_by_key(|&i| (state.j[i].deg_x(), i));
    let mut descent = Descent::new(w.nvars(), cfg.degree_cap)?;
    for i in order {
        let g = descent.reduce(&state.j[i])?;
        if !g.is_zero() {
            descent.accept(g.monic())?;
        }
    }
    let survivors = descent.survivors;
    Ok(RelativeGb {
        gb: survivors.iter().map(|s| eval_y1(s).monic()).collect(),
        initial_gens: survivors.iter().map(|s| eval_y0(s).monic()).collect(),
        survivors,
        minimal: true,
        degree_cap: cfg.degree_cap,
        parked: state.parked,
        history: state.history,
    })
}

/// Both sides of the degree `d_t + 1` comparison for a generating set whose
/// initial forms generate `in_w(I)` through degree `d_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop24Report {
    pub degree: u32,
    pub beta0: u64,
    pub beta1: u64,
    pub syz_beta0: u64,
    pub ok: bool,
}

pub fn prop24_check<F: Field>(gens: &[Poly<F>], w: &WeightOrder) -> Result<Prop24Report> {
    let gens: Vec<Poly<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut dt = 0;
    for g in &gens {
        dt = dt.max(g.homogeneous_degree()?);
    }
    if gens.is_empty() {
        return Err(Error::Degenerate("prop24_check on the zero ideal"));
    }
    let gamma: Vec<Poly<F>> = gens
        .iter()
        .map(|g| initial_form_weight(g, w))
        .collect::<Result<_>>()?;
    let top = dt + 1;
    let rel = relative_gb(&gens, w, &RelGbConfig::capped(Some(top)))?;
    let gb_gamma = buchberger(&gamma, MonomialOrder::DegRevLex)?;
    if let Some(k) = rel
        .initial_gens
        .iter()
        .position(|p| p.degree().unwrap_or(0) <= dt && !gb_gamma.contains(p))
    {
        return Err(Error::Precondition(format!(
            "initial forms of the generators miss the initial generator {k} of degree <= {dt}"
        )));
    }
    let t = truncated_betti(&rel.initial_gens, 1, top)?;
    let beta0 = t.get(0, top).unwrap_or(0);
    let beta1 = t.get(1, top).unwrap_or(0);
    let syz_beta0 = oracle::syzygy_beta0(&gamma, top)? as u64;
    Ok(Prop24Report {
        degree: top,
        ok: beta0.max(beta1) <= syz_beta0,
        beta0,
        beta1,
        syz_beta0,
    })
}
