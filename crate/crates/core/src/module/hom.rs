use super::Module;
use crate::field::Field;
use crate::linalg::{Matrix, Span};
use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

/// A presentation of a module: generators, a spanning tree of monomial
/// words on them forming a basis, and the relations at the border of the
/// tree.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    /// Coordinate indices of the generators `e_c`.
    pub gens: Vec<usize>,
    /// Tree words `(generator, a, b)` meaning `x^a y^b e_g`.
    pub tree: Vec<(usize, usize, usize)>,
    /// Border words with their expansion in the tree basis.
    pub border: Vec<((usize, usize, usize), Vec<(usize, F)>)>,
    /// Inverse of the matrix whose columns are the tree vectors.
    pub tree_inv: Matrix<F>,
}

impl<F: Field> Presentation<F> {
    pub fn new(m: &Module<F>) -> Self {
        let n = m.dim();
        let p = F::CHAR as usize;
        let rad = m.radical();
        let gens = rad.free_columns();
        let mut span = Span::new(n);
        let mut vecs: Vec<Vec<F>> = Vec::new();
        let mut tree = Vec::new();
        let mut seen: HashMap<(usize, usize, usize), ()> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut border_raw = Vec::new();
        for (g, &c) in gens.iter().enumerate() {
            let mut v = vec![F::zero(); n];
            v[c] = F::one();
            let grew = span.insert(&v);
            debug_assert!(grew);
            seen.insert((g, 0, 0), ());
            tree.push((g, 0, 0));
            vecs.push(v);
            queue.push_back(tree.len() - 1);
        }
        while let Some(t) = queue.pop_front() {
            let (g, a, b) = tree[t];
            for (w, mat) in [((g, a + 1, b), m.x()), ((g, a, b + 1), m.y())] {
                if w.1 >= p || w.2 >= p || seen.contains_key(&w) {
                    continue;
                }
                seen.insert(w, ());
                let v = mat.mul_vec(&vecs[t]);
                if span.insert(&v) {
                    tree.push(w);
                    vecs.push(v);
                    queue.push_back(tree.len() - 1);
                } else {
                    border_raw.push((w, v));
                }
            }
        }
        assert_eq!(tree.len(), n, "generators must span the module");
        let b = Matrix::from_fn(n, n, |i, j| vecs[j][i]);
        let tree_inv = b.inverse().expect("tree vectors form a basis");
        let border = border_raw
            .into_iter()
            .map(|(w, v)| {
                let c = tree_inv.mul_vec(&v);
                (w, c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            })
            .collect();
        Presentation { gens, tree, border, tree_inv }
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }
}

/// Basis of `Hom(M, N)` together with the data needed for coordinates.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub basis: Vec<Matrix<F>>,
    dom: usize,
    cod: usize,
    gens: Vec<usize>,
    /// Echelon basis of the generator images `(phi e_g)_g`, flattened.
    w: Matrix<F>,
    w_pivots: Vec<usize>,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn domain_dim(&self) -> usize {
        self.dom
    }

    pub fn codomain_dim(&self) -> usize {
        self.cod
    }

    /// Generator images of a map, flattened generator by generator.
    pub fn generator_images(&self, phi: &Matrix<F>) -> Vec<F> {
        let mut out = Vec::with_capacity(self.gens.len() * self.cod);
        for &c in &self.gens {
            out.extend(phi.column(c));
        }
        out
    }

    /// Coordinates of a module map in `basis`.
    pub fn coords(&self, phi: &Matrix<F>) -> Vec<F> {
        let w = self.generator_images(phi);
        self.w_pivots.iter().map(|&c| w[c]).collect()
    }

    pub fn combination(&self, c: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.cod, self.dom);
        for (b, &ci) in self.basis.iter().zip(c) {
            out.add_assign_scaled(b, ci);
        }
        out
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Matrix<F> {
        let c: Vec<F> = (0..self.dim()).map(|_| F::random(rng)).collect();
        self.combination(&c)
    }

    /// Echelon rows of generator images, one per basis element.
    pub fn generator_basis(&self) -> &Matrix<F> {
        &self.w
    }
}

/// `Hom(M, N)` with an echelon-canonical basis.
pub fn hom_space<F: Field>(m: &Module<F>, n: &Module<F>) -> HomSpace<F> {
    let pres = m.presentation();
    hom_with(&pres, m.dim(), n)
}

fn hom_with<F: Field>(pres: &Arc<Presentation<F>>, mdim: usize, n: &Module<F>) -> HomSpace<F> {
    let p = F::CHAR as usize;
    let nd = n.dim();
    let t = pres.num_gens();
    let unknowns = t * nd;
    let mons = n.monomials();
    // Each border word gives nd scalar equations in W = (w_1..w_t).
    let mut rows: Vec<Vec<(usize, F)>> = Vec::new();
    let mut acc = vec![F::zero(); unknowns];
    let mut touched: Vec<usize> = Vec::new();
    for ((g, a, b), coeffs) in &pres.border {
        let mut terms: Vec<(usize, &Matrix<F>, F)> = vec![(*g, &mons[a * p + b], F::one())];
        for &(j, c) in coeffs {
            let (gj, aj, bj) = pres.tree[j];
            terms.push((gj, &mons[aj * p + bj], -c));
        }
        for i in 0..nd {
            for &(gen, mat, c) in &terms {
                let row = mat.row(i);
                for (k, &v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        let idx = gen * nd + k;
                        if acc[idx].is_zero() {
                            touched.push(idx);
                        }
                        acc[idx] += c * v;
                    }
                }
            }
            let mut r: Vec<(usize, F)> = Vec::new();
            touched.sort_unstable();
            touched.dedup();
            for &idx in &touched {
                if !acc[idx].is_zero() {
                    r.push((idx, acc[idx]));
                }
                acc[idx] = F::zero();
            }
            touched.clear();
            if !r.is_empty() {
                rows.push(r);
            }
        }
    }
    // Split unknowns into independent blocks.
    let mut parent: Vec<usize> = (0..unknowns).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for r in &rows {
        for &(c, _) in &r[1..] {
            let (a, b) = (find(&mut parent, r[0].0), find(&mut parent, c));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut block_of = vec![usize::MAX; unknowns];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut local = vec![0usize; unknowns];
    for u in 0..unknowns {
        let r = find(&mut parent, u);
        if block_of[r] == usize::MAX {
            block_of[r] = blocks.len();
            blocks.push(Vec::new());
        }
        let bi = block_of[r];
        local[u] = blocks[bi].len();
        blocks[bi].push(u);
    }
    let mut block_rows: Vec<Vec<&Vec<(usize, F)>>> = vec![Vec::new(); blocks.len()];
    for r in &rows {
        let bi = block_of[find(&mut parent, r[0].0)];
        block_rows[bi].push(r);
    }
    let mut span_rows: Vec<Vec<F>> = Vec::new();
    for (bi, cols) in blocks.iter().enumerate() {
        let sys = &block_rows[bi];
        let mut a = Matrix::zeros(sys.len(), cols.len());
        for (ri, r) in sys.iter().enumerate() {
            for &(c, v) in r.iter() {
                a.set(ri, local[c], v);
            }
        }
        let k = a.kernel();
        for i in 0..k.rows() {
            let mut full = vec![F::zero(); unknowns];
            for (li, &v) in k.row(i).iter().enumerate() {
                full[cols[li]] = v;
            }
            span_rows.push(full);
        }
    }
    let wm = if span_rows.is_empty() { Matrix::zeros(0, unknowns) } else { Matrix::from_rows(&span_rows) };
    let (w, w_pivots) = wm.rref();
    let basis = (0..w.rows()).map(|i| assemble(pres, mdim, n, &mons, w.row(i))).collect();
    HomSpace { basis, dom: mdim, cod: nd, gens: pres.gens.clone(), w, w_pivots }
}

/// The module map with generator images `w`.
fn assemble<F: Field>(pres: &Presentation<F>, mdim: usize, n: &Module<F>, mons: &[Matrix<F>], w: &[F]) -> Matrix<F> {
    let p = F::CHAR as usize;
    let nd = n.dim();
    let mut c = Matrix::zeros(nd, mdim);
    for (j, &(g, a, b)) in pres.tree.iter().enumerate() {
        let v = mons[a * p + b].mul_vec(&w[g * nd..(g + 1) * nd]);
        for (i, x) in v.into_iter().enumerate() {
            c.set(i, j, x);
        }
    }
    c.mul(&pres.tree_inv)
}

impl<F: Field> Module<F> {
    /// The module map `M -> N` sending the generators to `w` (flattened),
    /// assuming the images satisfy the relations.
    pub fn map_from_generator_images(&self, n: &Module<F>, w: &[F]) -> Matrix<F> {
        let pres = self.presentation();
        assemble(&pres, self.dim(), n, &n.monomials(), w)
    }

    pub fn generators(&self) -> Vec<usize> {
        self.presentation().gens.clone()
    }
}
