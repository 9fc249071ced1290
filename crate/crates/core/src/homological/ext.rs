use super::syzygy_step;
use crate::field::Field;
use crate::linalg::{Matrix, Span};
use crate::module::{hom_space, HomSpace, Module, Submodule};

/// `Ext^n(M, N) = Hom(Ω^n M, N)` modulo restrictions of maps `P_{n-1} -> N`.
#[derive(Clone, Debug)]
pub struct ExtSpace<F: Field> {
    pub degree: usize,
    /// `Ω^n M`.
    pub omega: Module<F>,
    pub hom: HomSpace<F>,
    /// Coordinates (in `hom`) of the maps that factor through `P_{n-1}`.
    pub trivial: Span<F>,
    /// `hom` coordinates indexing a basis of the quotient.
    pub classes: Vec<usize>,
}

impl<F: Field> ExtSpace<F> {
    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    /// Representatives `Ω^n M -> N` of a basis of `Ext^n`.
    pub fn basis(&self) -> Vec<Matrix<F>> {
        self.classes.iter().map(|&c| self.hom.basis[c].clone()).collect()
    }

    /// Coordinates of a map `Ω^n M -> N` in [`Self::basis`].
    pub fn class_coords(&self, phi: &Matrix<F>) -> Vec<F> {
        let mut v = self.hom.coords(phi);
        self.trivial.reduce(&mut v);
        self.classes.iter().map(|&c| v[c]).collect()
    }
}

/// Restrictions to `sub ⊆ P` of the maps `P -> N` sending one free generator
/// to one basis vector of `N`.
pub(crate) fn restricted_free_maps<F: Field>(sub: &Submodule<F>, rank: usize, n: &Module<F>) -> Vec<Matrix<F>> {
    let p2 = (F::CHAR * F::CHAR) as usize;
    let mons = n.monomials();
    let mut out = Vec::with_capacity(rank * n.dim());
    for i in 0..rank {
        let om = sub.basis().block(0, i * p2, sub.dim(), p2);
        for l in 0..n.dim() {
            let c = Matrix::from_fn(n.dim(), p2, |r, ab| mons[ab].get(r, l));
            out.push(c.mul(&om.transpose()));
        }
    }
    out
}

pub fn ext<F: Field>(m: &Module<F>, n: &Module<F>, degree: usize) -> ExtSpace<F> {
    assert!(degree >= 1);
    let mut cur = m.clone();
    for _ in 1..degree {
        cur = syzygy_step(&cur).module;
    }
    let step = syzygy_step(&cur);
    let hom = hom_space(&step.module, n);
    let mut trivial = Span::new(hom.dim());
    for r in restricted_free_maps(&step.kernel, step.cover.rank(), n) {
        trivial.insert(&hom.coords(&r));
    }
    let piv = trivial.pivots().to_vec();
    let classes = (0..hom.dim()).filter(|c| !piv.contains(c)).collect();
    ExtSpace { degree, omega: step.module, hom, trivial, classes }
}

pub fn ext1<F: Field>(m: &Module<F>, n: &Module<F>) -> ExtSpace<F> {
    ext(m, n, 1)
}
