//! Modules over `k[x,y]/(x^p,y^p)` given by commuting p-nilpotent pairs.

mod decompose;
mod hom;
mod json;
mod ops;
mod sl2;
mod submodule;

pub use decompose::{
    endomorphism_test, fitting_decompose, fitting_decompose_seeded, is_isomorphic, is_isomorphic_seeded, EndTest, IsoCertificate,
    IsoResult, Summand,
};
pub use ops::TwistError;
pub use hom::{hom_space, HomSpace, Presentation};
pub use json::{ModuleJson, SchemaError, Sl2Json};
pub use sl2::{Sl2Error, Sl2Module};
pub use submodule::Submodule;

use crate::field::Field;
use crate::linalg::Matrix;
use std::sync::{Arc, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("{which} is {rows}x{cols}, expected {dim}x{dim}")]
    Shape { which: char, rows: usize, cols: usize, dim: usize },
    #[error("XY - YX is nonzero at entry ({row}, {col})")]
    CommutatorNonzero { row: usize, col: usize },
    #[error("{which}^p is nonzero at entry ({row}, {col})")]
    NotPNilpotent { which: char, row: usize, col: usize },
    #[error("grading has {found} labels for dimension {dim}")]
    GradingLength { found: usize, dim: usize },
    #[error("{which} entry ({row}, {col}) maps degree {from} to degree {to}")]
    GradingNotHomogeneous { which: char, row: usize, col: usize, from: i64, to: i64 },
}

/// A module over `k[x,y]/(x^p,y^p)`: the actions of `x` and `y` on column
/// vectors, optionally with a grading in which both have degree one.
#[derive(Clone, Debug)]
pub struct Module<F: Field> {
    x: Matrix<F>,
    y: Matrix<F>,
    grading: Option<Vec<i64>>,
    name: Option<String>,
    pres: OnceLock<Arc<Presentation<F>>>,
}

impl<F: Field> PartialEq for Module<F> {
    fn eq(&self, o: &Self) -> bool {
        self.x == o.x && self.y == o.y && self.grading == o.grading
    }
}

impl<F: Field> Eq for Module<F> {}

fn check_homogeneous(which: char, m: &Matrix<impl Field>, g: &[i64]) -> Result<(), ModuleError> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() && g[i] != g[j] + 1 {
                return Err(ModuleError::GradingNotHomogeneous { which, row: i, col: j, from: g[j], to: g[i] });
            }
        }
    }
    Ok(())
}

fn first_nonzero<F: Field>(m: &Matrix<F>) -> Option<(usize, usize)> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).find(|&(i, j)| !m.get(i, j).is_zero())
}

impl<F: Field> Module<F> {
    /// Validates and builds a module.
    pub fn new(x: Matrix<F>, y: Matrix<F>, grading: Option<Vec<i64>>) -> Result<Self, ModuleError> {
        let n = x.rows();
        for (which, m) in [('X', &x), ('Y', &y)] {
            if m.rows() != n || m.cols() != n {
                return Err(ModuleError::Shape { which, rows: m.rows(), cols: m.cols(), dim: n });
            }
        }
        if let Some((row, col)) = first_nonzero(&x.mul(&y).sub(&y.mul(&x))) {
            return Err(ModuleError::CommutatorNonzero { row, col });
        }
        for (which, m) in [('X', &x), ('Y', &y)] {
            if let Some((row, col)) = first_nonzero(&m.pow(F::CHAR as u64)) {
                return Err(ModuleError::NotPNilpotent { which, row, col });
            }
        }
        if let Some(g) = &grading {
            if g.len() != n {
                return Err(ModuleError::GradingLength { found: g.len(), dim: n });
            }
            check_homogeneous('X', &x, g)?;
            check_homogeneous('Y', &y, g)?;
        }
        Ok(Self::from_parts(x, y, grading))
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(x: Matrix<F>, y: Matrix<F>, grading: Option<Vec<i64>>) -> Self {
        debug_assert!(x.mul(&y) == y.mul(&x));
        Module { x, y, grading, name: None, pres: OnceLock::new() }
    }

    pub fn zero() -> Self {
        Self::from_parts(Matrix::zeros(0, 0), Matrix::zeros(0, 0), Some(Vec::new()))
    }

    /// The trivial module `k`, concentrated in degree 0.
    pub fn trivial() -> Self {
        Self::from_parts(Matrix::zeros(1, 1), Matrix::zeros(1, 1), Some(vec![0])).named("k")
    }

    /// The regular module `kG` on the monomial basis `x^a y^b`, index `a p + b`.
    pub fn regular() -> Self {
        Self::free(&[0]).named("kG")
    }

    /// `kG^t` with generators in the given degrees.
    pub fn free(degrees: &[i64]) -> Self {
        let p = F::CHAR as usize;
        let n = degrees.len() * p * p;
        let mut x = Matrix::zeros(n, n);
        let mut y = Matrix::zeros(n, n);
        let mut g = vec![0; n];
        for (i, &d) in degrees.iter().enumerate() {
            for a in 0..p {
                for b in 0..p {
                    let c = i * p * p + a * p + b;
                    g[c] = d + (a + b) as i64;
                    if a + 1 < p {
                        x.set(c + p, c, F::one());
                    }
                    if b + 1 < p {
                        y.set(c + 1, c, F::one());
                    }
                }
            }
        }
        Self::from_parts(x, y, Some(g))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn p(&self) -> u32 {
        F::CHAR
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn x(&self) -> &Matrix<F> {
        &self.x
    }

    pub fn y(&self) -> &Matrix<F> {
        &self.y
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.grading.is_some()
    }

    pub fn without_grading(&self) -> Self {
        let mut m = Self::from_parts(self.x.clone(), self.y.clone(), None);
        m.name = self.name.clone();
        m
    }

    /// Adds `s` to every degree.
    pub fn shift_grading(&self, s: i64) -> Self {
        let g = self.grading.as_ref().map(|g| g.iter().map(|d| d + s).collect());
        let mut m = Self::from_parts(self.x.clone(), self.y.clone(), g);
        m.name = self.name.clone();
        m
    }

    /// Degrees occurring, as `(min, max)`.
    pub fn support(&self) -> Option<(i64, i64)> {
        let g = self.grading.as_ref()?;
        Some((*g.iter().min()?, *g.iter().max()?))
    }

    /// `X^a Y^b`.
    pub fn monomial(&self, a: usize, b: usize) -> Matrix<F> {
        self.x.pow(a as u64).mul(&self.y.pow(b as u64))
    }

    /// All `X^a Y^b` for `a, b < p`, indexed `a p + b`.
    pub fn monomials(&self) -> Vec<Matrix<F>> {
        let p = F::CHAR as usize;
        let mut xs = vec![Matrix::identity(self.dim())];
        for a in 1..p {
            xs.push(xs[a - 1].mul(&self.x));
        }
        let mut out = Vec::with_capacity(p * p);
        for xa in &xs {
            let mut cur = xa.clone();
            out.push(cur.clone());
            for _ in 1..p {
                cur = cur.mul(&self.y);
                out.push(cur.clone());
            }
        }
        out
    }

    /// Module with the basis given by the columns of the invertible `q`.
    pub fn transport(&self, q: &Matrix<F>) -> Self {
        let qi = q.inverse().expect("change of basis must be invertible");
        Self::from_parts(qi.mul(&self.x).mul(q), qi.mul(&self.y).mul(q), None)
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let g = match (&self.grading, &o.grading) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Self::from_parts(self.x.block_diag(&o.x), self.y.block_diag(&o.y), g)
    }

    pub fn direct_sum_all<'a>(ms: impl IntoIterator<Item = &'a Self>) -> Self {
        ms.into_iter().fold(Self::zero(), |acc, m| acc.direct_sum(m))
    }

    /// `self ⊕ ... ⊕ self`, `t` copies.
    pub fn power(&self, t: usize) -> Self {
        (0..t).fold(Self::zero(), |acc, _| acc.direct_sum(self))
    }

    /// Whether `a` intertwines the actions of `self` and `codomain`.
    pub fn is_hom_to(&self, codomain: &Self, a: &Matrix<F>) -> bool {
        a.rows() == codomain.dim()
            && a.cols() == self.dim()
            && a.mul(&self.x) == codomain.x.mul(a)
            && a.mul(&self.y) == codomain.y.mul(a)
    }

    pub(crate) fn presentation(&self) -> Arc<Presentation<F>> {
        self.pres.get_or_init(|| Arc::new(Presentation::new(self))).clone()
    }

    /// Dimension of `M / Rad M`, the number of generators.
    pub fn top_dim(&self) -> usize {
        self.dim() - self.radical().dim()
    }
}
