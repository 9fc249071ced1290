//! The named modules: `W_{n,d}`, Kronecker images, socle quotient families
//! and simple and baby Verma modules for `sl(2)`.

mod catalog;

pub use catalog::{catalog, eip_catalog, CatalogEntry};

use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{Module, Sl2Module, Submodule};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("W_{{n,d}} needs 1 <= d <= p and n >= d, got n = {n}, d = {d}")]
    WParameters { n: usize, d: usize },
    #[error("Kronecker maps must both be {rows}x{cols}")]
    KroneckerShape { rows: usize, cols: usize },
    #[error("the chosen subspace is not contained in the socle")]
    NotInSocle,
    #[error("parameter matrix is {found:?}, expected {expected:?}")]
    FamilyShape { found: (usize, usize), expected: (usize, usize) },
    #[error("highest weight {lambda} outside 0..p")]
    WeightOutOfRange { lambda: i64 },
    #[error("sl(2) modules need p >= 3")]
    SmallCharacteristic,
}

/// `W_{n,d} = kG^n / N_{n,d}`, graded with generators in degree 0.
pub fn w_module<F: Field>(n: usize, d: usize) -> Result<Module<F>, ConstructionError> {
    let p = F::CHAR as usize;
    if d == 0 || d > p || n < d {
        return Err(ConstructionError::WParameters { n, d });
    }
    let free = Module::<F>::free(&vec![0; n]);
    let idx = |i: usize, a: usize, b: usize| i * p * p + a * p + b;
    let dim = free.dim();
    let unit = |c: usize| {
        let mut v = vec![F::zero(); dim];
        v[c] = F::one();
        v
    };
    let mut rels: Vec<Vec<F>> = vec![unit(idx(0, 1, 0)), unit(idx(n - 1, 0, 1))];
    if d < p {
        for i in 1..n {
            rels.push(unit(idx(i, d, 0)));
        }
    }
    for i in 0..n - 1 {
        let mut v = unit(idx(i, 0, 1));
        v[idx(i + 1, 1, 0)] = -F::one();
        rels.push(v);
    }
    let rel = free.submodule_generated(&rels);
    Ok(free.quotient(&rel).named(format!("W_{{{n},{d}}}")))
}

/// `dim W_{n,d}`.
pub fn w_dim(n: usize, d: usize) -> usize {
    (n - d + 1) * d + d * (d - 1) / 2
}

/// A representation of the Kronecker quiver `V1 ⇉ V2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerRep<F: Field> {
    pub phi_x: Matrix<F>,
    pub phi_y: Matrix<F>,
}

impl<F: Field> KroneckerRep<F> {
    pub fn new(phi_x: Matrix<F>, phi_y: Matrix<F>) -> Result<Self, ConstructionError> {
        if phi_x.rows() != phi_y.rows() || phi_x.cols() != phi_y.cols() {
            return Err(ConstructionError::KroneckerShape { rows: phi_x.rows(), cols: phi_x.cols() });
        }
        Ok(KroneckerRep { phi_x, phi_y })
    }

    /// `(dim V1, dim V2)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.phi_x.cols(), self.phi_x.rows())
    }

    /// `(n+1, n)` with `φx = [I | 0]`, `φy = [0 | I]`.
    pub fn preinjective(n: usize) -> Self {
        let phi_x = Matrix::from_fn(n, n + 1, |i, j| if i == j { F::one() } else { F::zero() });
        let phi_y = Matrix::from_fn(n, n + 1, |i, j| if j == i + 1 { F::one() } else { F::zero() });
        KroneckerRep { phi_x, phi_y }
    }

    /// `(n, n+1)`, the transposes of the preinjective maps.
    pub fn preprojective(n: usize) -> Self {
        let inj = Self::preinjective(n);
        KroneckerRep { phi_x: inj.phi_x.transpose(), phi_y: inj.phi_y.transpose() }
    }

    /// `(n, n)` with `φx = I`, `φy = J_n(λ)`.
    pub fn regular(n: usize, lambda: F) -> Self {
        let phi_y = Matrix::from_fn(n, n, |i, j| {
            if i == j {
                lambda
            } else if i == j + 1 {
                F::one()
            } else {
                F::zero()
            }
        });
        KroneckerRep { phi_x: Matrix::identity(n), phi_y }
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        KroneckerRep { phi_x: self.phi_x.block_diag(&o.phi_x), phi_y: self.phi_y.block_diag(&o.phi_y) }
    }

    /// The module on `V1 ⊕ V2`, `V1` in degree 0 and `V2` in degree 1.
    pub fn module(&self) -> Module<F> {
        let (n1, n2) = self.dims();
        let n = n1 + n2;
        let mut x = Matrix::zeros(n, n);
        let mut y = Matrix::zeros(n, n);
        x.set_block(n1, 0, &self.phi_x);
        y.set_block(n1, 0, &self.phi_y);
        let g = (0..n).map(|i| if i < n1 { 0 } else { 1 }).collect();
        Module::new(x, y, Some(g)).expect("square-zero modules are valid")
    }
}

/// The family `f -> M / U_f` of quotients by complements of `Γ` in the socle.
#[derive(Clone, Debug)]
pub struct QuotientFamily<F: Field> {
    base: Module<F>,
    gamma: Submodule<F>,
    /// Socle vectors spanning the echelon complement of `Γ`.
    complement: Vec<Vec<F>>,
}

impl<F: Field> QuotientFamily<F> {
    pub fn new(base: &Module<F>, gamma: &Submodule<F>) -> Result<Self, ConstructionError> {
        let soc = base.socle();
        if gamma.ambient_dim() != base.dim() || !gamma.is_subset_of(&soc) {
            return Err(ConstructionError::NotInSocle);
        }
        // Γ in socle coordinates, then unit vectors off its pivots
        let rows: Vec<Vec<F>> = (0..gamma.dim()).map(|i| soc.coords(gamma.vector(i))).collect();
        let g_soc = if rows.is_empty() { Matrix::zeros(0, soc.dim()) } else { Matrix::from_rows(&rows) };
        let (_, piv) = g_soc.rref();
        let complement = (0..soc.dim())
            .filter(|c| !piv.contains(c))
            .map(|c| soc.vector(c).to_vec())
            .collect();
        Ok(QuotientFamily { base: base.clone(), gamma: gamma.clone(), complement })
    }

    pub fn base(&self) -> &Module<F> {
        &self.base
    }

    pub fn gamma(&self) -> &Submodule<F> {
        &self.gamma
    }

    /// Shape `(dim Γ, dim Soc/Γ)` of the parameter matrices.
    pub fn parameter_shape(&self) -> (usize, usize) {
        (self.gamma.dim(), self.complement.len())
    }

    /// `U_f`; column `i` of `f` is the image of the `i`-th complement vector in
    /// the echelon basis of `Γ`.
    pub fn u(&self, f: &Matrix<F>) -> Result<Submodule<F>, ConstructionError> {
        let shape = self.parameter_shape();
        if (f.rows(), f.cols()) != shape {
            return Err(ConstructionError::FamilyShape { found: (f.rows(), f.cols()), expected: shape });
        }
        let n = self.base.dim();
        let mut rows = Matrix::zeros(0, n);
        for (i, c) in self.complement.iter().enumerate() {
            let mut v = c.clone();
            for l in 0..self.gamma.dim() {
                let s = f.get(l, i);
                if !s.is_zero() {
                    for (dst, &g) in v.iter_mut().zip(self.gamma.vector(l)) {
                        *dst += s * g;
                    }
                }
            }
            rows.push_row(&v);
        }
        Ok(Submodule::from_rows_unchecked(n, &rows))
    }

    /// `M / U_f`.
    pub fn point(&self, f: &Matrix<F>) -> Result<Module<F>, ConstructionError> {
        let u = self.u(f)?;
        Ok(self.base.quotient(&u))
    }

    pub fn random_parameter<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Matrix<F> {
        let (r, c) = self.parameter_shape();
        Matrix::from_fn(r, c, |_, _| F::random(rng))
    }
}

fn check_weight<F: Field>(lambda: i64) -> Result<usize, ConstructionError> {
    if F::CHAR < 3 {
        return Err(ConstructionError::SmallCharacteristic);
    }
    if lambda < 0 || lambda >= F::CHAR as i64 {
        return Err(ConstructionError::WeightOutOfRange { lambda });
    }
    Ok(lambda as usize)
}

/// The simple module `L(λ)` on `v_0..v_λ`.
pub fn sl2_simple<F: Field>(lambda: i64) -> Result<Sl2Module<F>, ConstructionError> {
    let l = check_weight::<F>(lambda)?;
    let n = l + 1;
    let c = |v: usize| F::from_i64(v as i64);
    let mut e = Matrix::zeros(n, n);
    let mut f = Matrix::zeros(n, n);
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        h.set(i, i, F::from_i64(lambda - 2 * i as i64));
        if i > 0 {
            e.set(i - 1, i, c(i));
        }
        if i + 1 < n {
            f.set(i + 1, i, c(l - i));
        }
    }
    Ok(Sl2Module::new(e, f, h).expect("L(λ) satisfies the relations").named(format!("L({lambda})")))
}

/// The baby Verma module `Z(λ)` on `f^i ⊗ 1`, `i < p`.
pub fn sl2_baby_verma<F: Field>(lambda: i64) -> Result<Sl2Module<F>, ConstructionError> {
    check_weight::<F>(lambda)?;
    let n = F::CHAR as usize;
    let mut e = Matrix::zeros(n, n);
    let mut f = Matrix::zeros(n, n);
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        let ii = i as i64;
        h.set(i, i, F::from_i64(lambda - 2 * ii));
        if i > 0 {
            e.set(i - 1, i, F::from_i64(ii * (lambda - ii + 1)));
        }
        if i + 1 < n {
            f.set(i + 1, i, F::one());
        }
    }
    Ok(Sl2Module::new(e, f, h).expect("Z(λ) satisfies the relations").named(format!("Z({lambda})")))
}

/// The trivial `sl(2)`-module.
pub fn sl2_trivial<F: Field>() -> Sl2Module<F> {
    sl2_simple::<F>(0).expect("p >= 3").named("k")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F3;

    #[test]
    fn w_dimensions() {
        for (n, d) in [(2, 2), (3, 2), (3, 3), (5, 3), (4, 1)] {
            let w = w_module::<F3>(n, d).unwrap();
            assert_eq!(w.dim(), w_dim(n, d), "W_{n},{d}");
            assert_eq!(w.loewy_length(), d);
        }
        assert!(w_module::<F3>(2, 3).is_err());
        assert!(w_module::<F3>(4, 4).is_err());
    }

    #[test]
    fn kronecker_shapes() {
        let m = KroneckerRep::<F3>::preinjective(2).module();
        assert_eq!(m.dim(), 5);
        assert_eq!(m.top_dim(), 3);
    }

    #[test]
    fn simple_and_verma_dims() {
        assert_eq!(sl2_simple::<F3>(2).unwrap().dim(), 3);
        assert_eq!(sl2_baby_verma::<F3>(0).unwrap().dim(), 3);
        assert!(sl2_simple::<F3>(3).is_err());
    }
}
