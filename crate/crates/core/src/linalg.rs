//! Dense linear algebra over a field: echelon forms, ranks and kernels.

use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(p) = (lead..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            self.swap_rows(lead, p);
            let inv = self.get(lead, c).inv().expect("nonzero pivot");
            for k in c..self.cols {
                let v = self.get(lead, k).clone() * inv.clone();
                self.set(lead, k, v);
            }
            for r in 0..self.rows {
                if r == lead || self.get(r, c).is_zero() {
                    continue;
                }
                let factor = self.get(r, c).clone();
                for k in c..self.cols {
                    let src = self.get(lead, k).clone();
                    if src.is_zero() {
                        continue;
                    }
                    let v = self.get(r, k).clone() - factor.clone() * src;
                    self.set(r, k, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the smaller dimension
        if self.rows > self.cols {
            self.transpose().rank()
        } else {
            self.clone().rref().len()
        }
    }

    /// Basis of the right kernel `{ v : A v = 0 }`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_space(&self) -> (Vec<Vec<F>>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref();
        let rows = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        (rows, pivots)
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of<F: Field>(cols: usize, rows: Vec<Vec<F>>) -> usize {
    Matrix::from_rows(cols, rows).rank()
}

/// Sparse vector: strictly increasing column indices with nonzero entries.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Incrementally built echelon basis of a subspace spanned by sparse rows.
///
/// Each stored row is monic at its leading (smallest) column and no two
/// stored rows share a leading column.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F> {
    pivots: std::collections::BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for SparseEchelon<F> {
    fn default() -> Self {
        SparseEchelon {
            pivots: Default::default(),
        }
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.pivots.values()
    }

    /// Reduces `v` against the stored rows until its leading column is free.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut start = 0;
        while start < v.len() {
            let (col, coef) = v[start].clone();
            match self.pivots.get(&col) {
                Some(p) => {
                    v = axpy(&v, &coef, p);
                    // columns before `col` are untouched by the pivot row
                    start = v.iter().position(|(c, _)| *c >= col).unwrap_or(v.len());
                }
                None => start += 1,
            }
        }
        v
    }

    /// Reduces only leading entries; returns the remainder's leading data.
    fn reduce_head(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        while let Some((col, coef)) = v.first().cloned() {
            match self.pivots.get(&col) {
                Some(p) => v = axpy(&v, &coef, p),
                None => break,
            }
        }
        v
    }

    /// Inserts `v`; returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let v = self.reduce_head(v);
        let Some((col, lead)) = v.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero");
        let v: SparseVec<F> = v.into_iter().map(|(c, x)| (c, x * inv.clone())).collect();
        self.pivots.insert(col, v);
        true
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce_head(v).is_empty()
    }

    /// Fully reduced basis (reduced row echelon form).
    pub fn reduced_rows(&self) -> Vec<SparseVec<F>> {
        let mut out: Vec<SparseVec<F>> = Vec::with_capacity(self.pivots.len());
        let mut done = SparseEchelon::new();
        // back substitution from the last pivot column
        for (col, row) in self.pivots.iter().rev() {
            let r = done.reduce(row.clone());
            debug_assert_eq!(r.first().map(|x| x.0), Some(*col));
            done.pivots.insert(*col, r);
        }
        out.extend(done.pivots.into_values());
        out
    }
}

/// `v - c * p` for sparse vectors.
fn axpy<F: Field>(v: &SparseVec<F>, c: &F, p: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() && j < p.len() {
        match v[i].0.cmp(&p[j].0) {
            std::cmp::Ordering::Less => {
                out.push(v[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((p[j].0, -(c.clone() * p[j].1.clone())));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let x = v[i].1.clone() - c.clone() * p[j].1.clone();
                if !x.is_zero() {
                    out.push((v[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(v[i..].iter().cloned());
    out.extend(p[j..].iter().map(|(k, x)| (*k, -(c.clone() * x.clone()))));
    out
}

/// Rank of a family of sparse rows.
pub fn sparse_rank<F: Field, I: IntoIterator<Item = SparseVec<F>>>(rows: I) -> usize {
    let mut e = SparseEchelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of the left kernel `{ c : sum c_i rows_i = 0 }` of sparse rows with
/// `ncols` columns, as sparse vectors indexed by row.
pub fn sparse_kernel<F: Field>(ncols: usize, rows: Vec<SparseVec<F>>) -> Vec<SparseVec<F>> {
    let mut e = SparseEchelon::new();
    for (i, mut r) in rows.into_iter().enumerate() {
        debug_assert!(r.last().is_none_or(|x| x.0 < ncols));
        r.push((ncols + i, F::one()));
        e.insert(r);
    }
    e.reduced_rows()
        .into_iter()
        .filter(|r| r.first().is_some_and(|x| x.0 >= ncols))
        .map(|r| r.into_iter().map(|(c, x)| (c - ncols, x)).collect())
        .collect()
}
