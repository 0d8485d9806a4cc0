//! Weight preorders, matrix preorders and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Poly};

/// Preorder `u <= v  iff  omega . u <= omega . v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightOrder {
    omega: Vec<u64>,
}

impl WeightOrder {
    pub fn new(omega: Vec<u64>) -> Self {
        WeightOrder { omega }
    }

    pub fn omega(&self) -> &[u64] {
        &self.omega
    }

    pub fn nvars(&self) -> usize {
        self.omega.len()
    }

    pub fn weight(&self, m: &Monomial) -> u64 {
        debug_assert_eq!(m.nvars(), self.omega.len());
        m.exponents()
            .iter()
            .zip(&self.omega)
            .map(|(&e, &w)| e as u64 * w)
            .sum()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.weight(a).cmp(&self.weight(b))
    }

    /// Largest weight in the support of `f`.
    pub fn max_weight<F: Field>(&self, f: &Poly<F>) -> Option<u64> {
        f.support().map(|m| self.weight(m)).max()
    }

    pub fn is_homogeneous<F: Field>(&self, f: &Poly<F>) -> bool {
        let mut it = f.support().map(|m| self.weight(m));
        match it.next() {
            None => true,
            Some(w) => it.all(|v| v == w),
        }
    }
}

/// Standalone form of [`WeightOrder::compare`].
pub fn weight_compare(a: &Monomial, b: &Monomial, w: &WeightOrder) -> Ordering {
    w.compare(a, b)
}

/// Lexicographic refinement by the rows of a non-negative integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MatrixOrder {
    rows: Vec<WeightOrder>,
}

impl MatrixOrder {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.is_empty() || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Input("matrix order rows must be nonempty and of equal length".into()));
        }
        Ok(MatrixOrder {
            rows: rows.into_iter().map(WeightOrder::new).collect(),
        })
    }

    pub fn rows(&self) -> &[WeightOrder] {
        &self.rows
    }

    pub fn nvars(&self) -> usize {
        self.rows[0].nvars()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for row in &self.rows {
            match row.compare(a, b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// The `(n-h) x n` matrix whose `k`-th row has ones in columns `1..=n-k`.
pub fn omega_h_matrix(n: usize, h: usize) -> Result<MatrixOrder> {
    if h == 0 || h >= n {
        return Err(Error::Precondition(format!(
            "Omega_h needs 1 <= h < n (got n = {n}, h = {h})"
        )));
    }
    let rows = (1..=n - h)
        .map(|k| (0..n).map(|c| u64::from(c < n - k)).collect())
        .collect();
    MatrixOrder::new(rows)
}

/// Total monomial orders used by the Buchberger engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    DegLex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.cmp_degrevlex(b),
            MonomialOrder::DegLex => a.cmp_deglex(b),
        }
    }
}

fn initial_form_by<F: Field, K: Ord, W: Fn(&Monomial) -> K>(f: &Poly<F>, key: W) -> Result<Poly<F>> {
    let best = f
        .support()
        .map(&key)
        .max()
        .ok_or(Error::Degenerate("initial form of the zero polynomial"))?;
    let terms: Vec<_> = f
        .terms()
        .iter()
        .filter(|(m, _)| key(m) == best)
        .cloned()
        .collect();
    Ok(Poly::from_terms(f.nvars(), terms))
}

/// Sum of the terms of `f` of maximal weight.
pub fn initial_form_weight<F: Field>(f: &Poly<F>, w: &WeightOrder) -> Result<Poly<F>> {
    initial_form_by(f, |m| w.weight(m))
}

/// Terms of `f` surviving row-by-row maximal-weight filtering.
pub fn initial_form_matrix<F: Field>(f: &Poly<F>, order: &MatrixOrder) -> Result<Poly<F>> {
    initial_form_by(f, |m| order.rows.iter().map(|r| r.weight(m)).collect::<Vec<_>>())
}

/// A single weight inducing the same preorder as `order` on `mons`.
///
/// Rows are combined positionally in base `B = 1 + max row-weight spread`,
/// then the result is checked on every pair.
pub fn refine_to_weight(order: &MatrixOrder, mons: &[Monomial]) -> Result<WeightOrder> {
    if mons.is_empty() {
        return Err(Error::Degenerate("refine_to_weight needs at least one monomial"));
    }
    let rows = order.rows();
    if rows.len() == 1 {
        return Ok(rows[0].clone());
    }
    let spread = rows
        .iter()
        .map(|r| {
            let ws = mons.iter().map(|m| r.weight(m));
            let (lo, hi) = ws.fold((u64::MAX, 0), |(lo, hi), w| (lo.min(w), hi.max(w)));
            hi - lo
        })
        .max()
        .unwrap_or(0);
    let base = spread + 1;
    let n = order.nvars();
    let mut omega = vec![0u64; n];
    let mut scale = 1u64;
    for row in rows.iter().rev() {
        for (o, &r) in omega.iter_mut().zip(row.omega()) {
            *o = r
                .checked_mul(scale)
                .and_then(|v| o.checked_add(v))
                .ok_or_else(|| Error::Resource("refined weight overflows u64".into()))?;
        }
        scale = scale
            .checked_mul(base)
            .ok_or_else(|| Error::Resource("refined weight overflows u64".into()))?;
    }
    let w = WeightOrder::new(omega);
    for a in mons {
        for b in mons {
            if order.compare(a, b) != w.compare(a, b) {
                return Err(Error::Consistency(format!(
                    "refined weight disagrees on {a:?} vs {b:?}"
                )));
            }
        }
    }
    Ok(w)
}

/// All monomials of degree at most `d` in `n` variables.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| Monomial::all_of_degree(n, k)).collect()
}

/// The weight refining `Omega_h` on all monomials of degree at most `cap`.
pub fn omega_h_weight(n: usize, h: usize, cap: u32) -> Result<WeightOrder> {
    refine_to_weight(&omega_h_matrix(n, h)?, &monomials_up_to(n, cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::{default_names, parse_poly};

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn p(s: &str, n: usize) -> Poly<Rational> {
        parse_poly(s, &default_names(n)).unwrap()
    }

    #[test]
    fn weight_compare_examples() {
        let w = WeightOrder::new(vec![1, 1, 0]);
        assert_eq!(weight_compare(&m(&[1, 0, 1]), &m(&[0, 2, 0]), &w), Ordering::Less);
        assert_eq!(weight_compare(&m(&[1, 0, 1]), &m(&[1, 0, 1]), &w), Ordering::Equal);
        let w2 = WeightOrder::new(vec![1, 1]);
        assert_eq!(weight_compare(&m(&[1, 0]), &m(&[0, 1]), &w2), Ordering::Equal);
    }

    #[test]
    fn initial_form_weight_examples() {
        let w = WeightOrder::new(vec![1, 1, 0]);
        assert_eq!(initial_form_weight(&p("x1*x3 + x2^2", 3), &w).unwrap(), p("x2^2", 3));
        assert_eq!(initial_form_weight(&p("3*x1*x3", 3), &w).unwrap(), p("3*x1*x3", 3));
        let w2 = WeightOrder::new(vec![1, 1]);
        assert_eq!(initial_form_weight(&p("x1 + x2", 2), &w2).unwrap(), p("x1 + x2", 2));
        assert!(matches!(
            initial_form_weight(&Poly::<Rational>::zero(3), &w),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn omega_h_layout() {
        let o = omega_h_matrix(5, 2).unwrap();
        let rows: Vec<&[u64]> = o.rows().iter().map(|r| r.omega()).collect();
        assert_eq!(rows, vec![&[1, 1, 1, 1, 0][..], &[1, 1, 1, 0, 0], &[1, 1, 0, 0, 0]]);
        let o = omega_h_matrix(3, 2).unwrap();
        assert_eq!(o.rows().len(), 1);
        assert_eq!(o.rows()[0].omega(), &[1, 1, 0]);
        assert!(omega_h_matrix(3, 3).is_err());
    }

    #[test]
    fn omega_one_is_degrevlex_in_each_degree() {
        let o = omega_h_matrix(3, 1).unwrap();
        for d in 0..=4 {
            let ms = Monomial::all_of_degree(3, d);
            for a in &ms {
                for b in &ms {
                    assert_eq!(o.compare(a, b), a.cmp_degrevlex(b));
                }
            }
        }
    }

    #[test]
    fn initial_form_matrix_examples() {
        let o = omega_h_matrix(3, 2).unwrap();
        assert_eq!(
            initial_form_matrix(&p("x1*x3 + x2*x3", 3), &o).unwrap(),
            p("x1*x3 + x2*x3", 3)
        );
        assert_eq!(initial_form_matrix(&p("x1*x3 + x2^2", 3), &o).unwrap(), p("x2^2", 3));
        assert_eq!(initial_form_matrix(&p("x1^5", 3), &o).unwrap(), p("x1^5", 3));
    }

    #[test]
    fn refine_examples() {
        let o = omega_h_matrix(3, 2).unwrap();
        let w = refine_to_weight(&o, &[m(&[1, 0, 1])]).unwrap();
        assert_eq!(w.omega(), o.rows()[0].omega());
        let pair = [m(&[1, 0, 1]), m(&[0, 2, 0])];
        let w = refine_to_weight(&o, &pair).unwrap();
        assert_eq!(w.compare(&pair[0], &pair[1]), Ordering::Less);
        let o5 = omega_h_matrix(5, 2).unwrap();
        let all = monomials_up_to(5, 3);
        let w = refine_to_weight(&o5, &all).unwrap();
        for a in &all {
            for b in &all {
                assert_eq!(w.compare(a, b), o5.compare(a, b));
            }
        }
        assert!(refine_to_weight(&o, &[]).is_err());
    }
}
