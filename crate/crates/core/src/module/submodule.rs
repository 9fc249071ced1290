use super::Module;
use crate::field::Field;
use crate::linalg::{Matrix, Span};

/// An `x`,`y`-stable subspace, stored as its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Submodule<F> {
    /// The subspace spanned by the rows of `rows`; stability is not checked.
    pub fn from_rows_unchecked(ambient: usize, rows: &Matrix<F>) -> Self {
        assert_eq!(rows.cols(), ambient);
        let (basis, pivots) = rows.rref();
        Submodule { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Submodule { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Self {
        Submodule { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    fn from_span(s: &Span<F>) -> Self {
        Submodule { ambient: s.ambient(), basis: s.basis(), pivots: s.pivots().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vector(&self, i: usize) -> &[F] {
        self.basis.row(i)
    }

    /// Columns outside the pivots, indexing a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ambient];
        for &c in &self.pivots {
            is_piv[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_piv[c]).collect()
    }

    /// Subtracts the span from `v`, leaving zeros at the pivots.
    pub fn reduce(&self, v: &mut [F]) {
        for (i, &c) in self.pivots.iter().enumerate() {
            let f = v[c];
            if !f.is_zero() {
                for (d, &s) in v.iter_mut().zip(self.basis.row(i)) {
                    *d -= f * s;
                }
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Coordinates of a member in the echelon basis.
    pub fn coords(&self, v: &[F]) -> Vec<F> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    pub fn is_subset_of(&self, o: &Self) -> bool {
        (0..self.dim()).all(|i| o.contains(self.vector(i)))
    }

    pub fn sum(&self, o: &Self) -> Self {
        Self::from_rows_unchecked(self.ambient, &self.basis.vstack(&o.basis))
    }

    pub fn intersection(&self, o: &Self) -> Self {
        // v = sum a_i s_i = sum b_j o_j
        let st = self.basis.vstack(&o.basis).transpose();
        let k = st.kernel();
        let a = k.block(0, 0, k.rows(), self.dim());
        Self::from_rows_unchecked(self.ambient, &a.mul(&self.basis))
    }

    pub fn is_stable(&self, m: &Module<F>) -> bool {
        (0..self.dim()).all(|i| {
            let v = self.vector(i);
            self.contains(&m.x().mul_vec(v)) && self.contains(&m.y().mul_vec(v))
        })
    }

    /// Whether every basis vector is homogeneous for the grading.
    pub fn is_homogeneous(&self, grading: &[i64]) -> bool {
        (0..self.dim()).all(|i| {
            let degs: Vec<i64> = self.vector(i).iter().zip(grading).filter(|(v, _)| !v.is_zero()).map(|(_, &d)| d).collect();
            degs.windows(2).all(|w| w[0] == w[1])
        })
    }
}

impl<F: Field> Module<F> {
    /// Least submodule containing the generators.
    pub fn submodule_generated(&self, gens: &[Vec<F>]) -> Submodule<F> {
        let mut span = Span::new(self.dim());
        let mut queue: Vec<Vec<F>> = gens.to_vec();
        while let Some(v) = queue.pop() {
            if span.insert(&v) {
                queue.push(self.x().mul_vec(&v));
                queue.push(self.y().mul_vec(&v));
            }
        }
        Submodule::from_span(&span)
    }

    /// `Rad^j M = sum_{a+b=j} X^a Y^b M`.
    pub fn radical_power(&self, j: usize) -> Submodule<F> {
        let mut cur = Submodule::whole(self.dim());
        for _ in 0..j {
            if cur.dim() == 0 {
                break;
            }
            let b = cur.basis();
            let next = self.x().mul(&b.transpose()).transpose().vstack(&self.y().mul(&b.transpose()).transpose());
            cur = Submodule::from_rows_unchecked(self.dim(), &next);
        }
        cur
    }

    pub fn radical(&self) -> Submodule<F> {
        let n = self.dim();
        Submodule::from_rows_unchecked(n, &self.x().transpose().vstack(&self.y().transpose()))
    }

    /// `Soc_j M = {m : X^a Y^b m = 0 for a+b = j}`.
    pub fn socle_layer(&self, j: usize) -> Submodule<F> {
        let n = self.dim();
        if j == 0 {
            return Submodule::zero(n);
        }
        let p = F::CHAR as usize;
        let mut stack = Matrix::zeros(0, n);
        for a in 0..=j {
            let b = j - a;
            if a >= p || b >= p {
                continue;
            }
            stack = stack.vstack(&self.monomial(a, b));
        }
        if stack.rows() == 0 {
            return Submodule::whole(n);
        }
        Submodule::from_rows_unchecked(n, &stack.kernel())
    }

    pub fn socle(&self) -> Submodule<F> {
        self.socle_layer(1)
    }

    /// Least `d` with `Rad^d M = 0`.
    pub fn loewy_length(&self) -> usize {
        let mut d = 0;
        while self.radical_power(d).dim() > 0 {
            d += 1;
        }
        d
    }

    /// `(Rad^j, Soc_j)` for `j = 0..=2p-2` and the Loewy length.
    pub fn radical_socle_series(&self) -> (Vec<Submodule<F>>, Vec<Submodule<F>>, usize) {
        let top = 2 * F::CHAR as usize - 2;
        let rads: Vec<_> = (0..=top).map(|j| self.radical_power(j)).collect();
        let socs: Vec<_> = (0..=top).map(|j| self.socle_layer(j)).collect();
        let ll = rads.iter().position(|r| r.dim() == 0).unwrap_or(top + 1);
        (rads, socs, ll)
    }

    /// Action of `x` and `y` on a submodule, in its echelon basis.
    pub fn restrict(&self, s: &Submodule<F>) -> Module<F> {
        let k = s.dim();
        let act = |m: &Matrix<F>| {
            let mut out = Matrix::zeros(k, k);
            for i in 0..k {
                let c = s.coords(&m.mul_vec(s.vector(i)));
                for (r, v) in c.into_iter().enumerate() {
                    out.set(r, i, v);
                }
            }
            out
        };
        let grading = self.grading().map(|g| {
            (0..k)
                .map(|i| {
                    let j = s.vector(i).iter().position(|v| !v.is_zero()).unwrap();
                    g[j]
                })
                .collect()
        });
        let grading = grading.filter(|_| self.grading().is_some_and(|g| s.is_homogeneous(g)));
        Module::from_parts(act(self.x()), act(self.y()), grading)
    }

    /// Inclusion of a submodule as an `ambient x dim` matrix.
    pub fn inclusion(&self, s: &Submodule<F>) -> Matrix<F> {
        s.basis().transpose()
    }

    /// `M / S` on the coordinate complement of the pivots.
    pub fn quotient(&self, s: &Submodule<F>) -> Module<F> {
        let free = s.free_columns();
        let k = free.len();
        let act = |m: &Matrix<F>| {
            let mut out = Matrix::zeros(k, k);
            for (i, &c) in free.iter().enumerate() {
                let mut v = m.column(c);
                s.reduce(&mut v);
                for (r, &fc) in free.iter().enumerate() {
                    out.set(r, i, v[fc]);
                }
            }
            out
        };
        let grading = self
            .grading()
            .filter(|g| s.is_homogeneous(g))
            .map(|g| free.iter().map(|&c| g[c]).collect());
        Module::from_parts(act(self.x()), act(self.y()), grading)
    }

    /// The projection `M -> M / S` as a `(n - dim S) x n` matrix.
    pub fn quotient_map(&self, s: &Submodule<F>) -> Matrix<F> {
        let free = s.free_columns();
        let n = self.dim();
        let mut q = Matrix::zeros(free.len(), n);
        for c in 0..n {
            let mut v = vec![F::zero(); n];
            v[c] = F::one();
            s.reduce(&mut v);
            for (r, &fc) in free.iter().enumerate() {
                q.set(r, c, v[fc]);
            }
        }
        q
    }

    /// Image of a module map as a submodule of its codomain.
    pub fn image_of(a: &Matrix<F>) -> Submodule<F> {
        Submodule::from_rows_unchecked(a.rows(), &a.transpose())
    }

    pub fn kernel_of(a: &Matrix<F>) -> Submodule<F> {
        Submodule::from_rows_unchecked(a.cols(), &a.kernel())
    }
}
