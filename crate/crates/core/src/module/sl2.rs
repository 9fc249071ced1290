use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Sl2Error {
    #[error("characteristic must be at least 3")]
    SmallCharacteristic,
    #[error("{which} has the wrong shape")]
    Shape { which: char },
    #[error("relation {relation} fails at entry ({row}, {col})")]
    Relation { relation: &'static str, row: usize, col: usize },
}

/// A module for the restricted enveloping algebra of `sl(2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Module<F: Field> {
    e: Matrix<F>,
    f: Matrix<F>,
    h: Matrix<F>,
    name: Option<String>,
}

impl<F: Field> Sl2Module<F> {
    pub fn new(e: Matrix<F>, f: Matrix<F>, h: Matrix<F>) -> Result<Self, Sl2Error> {
        if F::CHAR < 3 {
            return Err(Sl2Error::SmallCharacteristic);
        }
        let n = e.rows();
        for (which, m) in [('e', &e), ('f', &f), ('h', &h)] {
            if m.rows() != n || m.cols() != n {
                return Err(Sl2Error::Shape { which });
            }
        }
        let two = F::from_i64(2);
        let p = F::CHAR as u64;
        let rels = [
            ("[h,e] = 2e", h.mul(&e).sub(&e.mul(&h)), e.scale(two)),
            ("[h,f] = -2f", h.mul(&f).sub(&f.mul(&h)), f.scale(-two)),
            ("[e,f] = h", e.mul(&f).sub(&f.mul(&e)), h.clone()),
            ("e^p = 0", e.pow(p), Matrix::zeros(n, n)),
            ("f^p = 0", f.pow(p), Matrix::zeros(n, n)),
            ("h^p = h", h.pow(p), h.clone()),
        ];
        for (relation, l, r) in rels {
            let d = l.sub(&r);
            if let Some((row, col)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !d.get(i, j).is_zero()) {
                return Err(Sl2Error::Relation { relation, row, col });
            }
        }
        Ok(Sl2Module { e, f, h, name: None })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.e.rows()
    }

    pub fn e(&self) -> &Matrix<F> {
        &self.e
    }

    pub fn f(&self) -> &Matrix<F> {
        &self.f
    }

    pub fn h(&self) -> &Matrix<F> {
        &self.h
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        Sl2Module { e: self.e.block_diag(&o.e), f: self.f.block_diag(&o.f), h: self.h.block_diag(&o.h), name: None }
    }

    /// The image of `u^2 e + uv h - v^2 f`, a nilpotent element for every `[u:v]`.
    pub fn nullcone_operator(&self, u: F, v: F) -> Matrix<F> {
        self.e.scale(u * u).add(&self.h.scale(u * v)).sub(&self.f.scale(v * v))
    }
}
