//! Dense matrices over a `Field` with exact Gaussian elimination.

use crate::field::{Field, Poly};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

#[inline]
fn axpy<F: Field>(dst: &mut [F], src: &[F], c: F) {
    // dst -= c * src
    for (d, &s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= c * s;
        }
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn scalar(n: usize, a: F) -> Self {
        Self::identity(n).scale(a)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Rows given as slices; an empty list yields a `0 x cols` matrix.
    pub fn from_row_slices(cols: usize, rows: &[&[F]]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend_from_slice(row);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(&rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect::<Vec<_>>())
    }

    pub fn column_vector(v: &[F]) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == if i == j { F::one() } else { F::zero() }))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn scale(&self, a: F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&v| v * a).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(&a, &b)| a - b).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(-F::one())
    }

    pub fn add_assign_scaled(&mut self, o: &Self, a: F) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        if a.is_zero() {
            return;
        }
        for (d, &s) in self.data.iter_mut().zip(&o.data) {
            if !s.is_zero() {
                *d += a * s;
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        let oc = o.cols;
        for i in 0..self.rows {
            let dst = &mut out.data[i * oc..(i + 1) * oc];
            for l in 0..self.cols {
                let a = self.data[i * self.cols + l];
                if a.is_zero() {
                    continue;
                }
                let src = &o.data[l * oc..(l + 1) * oc];
                for (d, &s) in dst.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *d += a * s;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, &b) in self.row(i).iter().zip(v) {
                    if !b.is_zero() {
                        acc += *a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![F::zero(); self.cols];
        for (i, &c) in v.iter().enumerate() {
            if !c.is_zero() {
                for (d, &s) in out.iter_mut().zip(self.row(i)) {
                    *d += c * s;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| if j < self.cols { self.get(i, j) } else { o.get(i, j - self.cols) })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    pub fn block_diag(&self, o: &Self) -> Self {
        let mut m = Self::zeros(self.rows + o.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, o);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn push_row(&mut self, v: &[F]) {
        assert_eq!(v.len(), self.cols);
        self.data.extend_from_slice(v);
        self.rows += 1;
    }

    /// In-place reduced row echelon form; returns pivot columns.  Zero rows
    /// end up at the bottom.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else { continue };
            if piv != r {
                for j in c..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv().unwrap();
            let mut hi = c + 1;
            for j in c..cols {
                let v = self.data[r * cols + j];
                if !v.is_zero() {
                    self.data[r * cols + j] = v * inv;
                    hi = j + 1;
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let src = &prow[c..hi];
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let row = if i < r {
                    &mut before[i * cols..(i + 1) * cols]
                } else {
                    let o = (i - r - 1) * cols;
                    &mut after[o..o + cols]
                };
                let f = row[c];
                if !f.is_zero() {
                    axpy(&mut row[c..hi], src, f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon basis of the row space and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place();
        m.data.truncate(piv.len() * m.cols);
        m.rows = piv.len();
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.rows > self.cols {
            return self.transpose().rank();
        }
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis, in reduced echelon form, of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Self {
        let (r, piv) = self.rref();
        let n = self.cols;
        let mut is_piv = vec![false; n];
        for &c in &piv {
            is_piv[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_piv[c]).collect();
        let mut k = Self::zeros(free.len(), n);
        for (t, &f) in free.iter().enumerate() {
            k.set(t, f, F::one());
            for (row, &pc) in piv.iter().enumerate() {
                let v = r.get(row, f);
                if !v.is_zero() {
                    k.set(t, pc, -v);
                }
            }
        }
        k.rref().0
    }

    /// Basis of `{v : v * self = 0}` (row vectors).
    pub fn left_kernel(&self) -> Self {
        self.transpose().kernel()
    }

    /// Some solution of `self * x = b`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Self::column_vector(b));
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &c) in piv.iter().enumerate() {
            x[c] = r.get(row, self.cols);
        }
        Some(x)
    }

    /// Some solution `X` of `self * X = b`, column by column.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let (r, piv) = aug.rref();
        if piv.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (row, &c) in piv.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, r.get(row, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = self.hstack(&Self::identity(n));
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Characteristic polynomial `det(t I - A)` via Hessenberg reduction.
    pub fn charpoly(&self) -> Poly<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else { continue };
            if i != m {
                for j in 0..n {
                    let t = h.get(i, j);
                    h.set(i, j, h.get(m, j));
                    h.set(m, j, t);
                }
                for j in 0..n {
                    let t = h.get(j, i);
                    h.set(j, i, h.get(j, m));
                    h.set(j, m, t);
                }
            }
            let inv = h.get(m, m - 1).inv().unwrap();
            for i in m + 1..n {
                let u = h.get(i, m - 1) * inv;
                if u.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = h.get(i, j) - u * h.get(m, j);
                    h.set(i, j, v);
                }
                for j in 0..n {
                    let v = h.get(j, m) + u * h.get(j, i);
                    h.set(j, m, v);
                }
            }
        }
        // p_m = (t - h_mm) p_{m-1} - sum_i h_{m-i,m} prod_{j} h_{j,j-1} p_{m-i-1}
        let mut ps: Vec<Poly<F>> = vec![Poly::one()];
        for m in 1..=n {
            let mut pm = Poly::new(vec![-h.get(m - 1, m - 1), F::one()]).mul(&ps[m - 1]);
            let mut t = F::one();
            for i in 1..m {
                t *= h.get(m - i, m - i - 1);
                if t.is_zero() {
                    break;
                }
                let c = t * h.get(m - i - 1, m - 1);
                if !c.is_zero() {
                    pm = pm.sub(&ps[m - i - 1].scale(c));
                }
            }
            ps.push(pm);
        }
        ps.pop().unwrap()
    }

    /// Evaluate a polynomial at this matrix.
    pub fn poly_eval(&self, f: &Poly<F>) -> Self {
        let n = self.rows;
        let mut acc = Self::zeros(n, n);
        for &c in f.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&v| f(v)).collect() }
    }

    /// Integer entries using each element's index.
    pub fn to_ints(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| v.index() as i64).collect()).collect()
    }
}

/// Incremental span with reduced echelon rows, used for closures.
#[derive(Clone, Debug)]
pub struct Span<F: Field> {
    n: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Span<F> {
    pub fn new(n: usize) -> Self {
        Span { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Reduce `v` against the span in place; returns true when it becomes zero.
    pub fn reduce(&self, v: &mut [F]) -> bool {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if !f.is_zero() {
                axpy(v, row, f);
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w)
    }

    /// Adds `v`; returns true if the span grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        if self.reduce(&mut w) {
            return false;
        }
        let pc = w.iter().position(|x| !x.is_zero()).unwrap();
        let inv = w[pc].inv().unwrap();
        for x in w.iter_mut() {
            *x *= inv;
        }
        for row in self.rows.iter_mut() {
            let f = row[pc];
            if !f.is_zero() {
                axpy(row, &w, f);
            }
        }
        let pos = self.pivots.partition_point(|&c| c < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> Matrix<F> {
        let refs: Vec<&[F]> = self.rows.iter().map(|r| r.as_slice()).collect();
        Matrix::from_row_slices(self.n, &refs)
    }
}
