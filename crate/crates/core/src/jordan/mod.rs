//! Jordan types of the operators `aX + bY`, certificates for constant rank,
//! equal images and equal kernels, and the generic kernels `𝔎_d`.

mod certificate;
mod kernel;
mod types;

pub use certificate::{
    constancy_certificates, is_eip, is_eip_family, is_ekp, is_ekp_family, sl2_generic_jordan_type, sl2_is_eip,
    Certificate, CertificateKind, ConstancyReport, EipResult, RankCertificate,
};
pub use kernel::{generic_kernel, generic_kernel_with};
pub use types::{JordanType, PiPoint};

use crate::field::{binomial, Field, FormMatrix, ResField};
use crate::linalg::Matrix;
use crate::module::{Module, Sl2Module};

/// The powers `θ^j`, `1 <= j < p`, of a linear family of p-nilpotent
/// operators, as matrices of binary forms.
#[derive(Clone, Debug)]
pub struct OperatorFamily<F: Field> {
    dim: usize,
    powers: Vec<FormMatrix<F>>,
    /// Degree of `θ` in the parameters.
    step: usize,
}

impl<F: Field> OperatorFamily<F> {
    /// `θ = aX + bY`.
    pub fn for_module(m: &Module<F>) -> Self {
        let p = F::CHAR as usize;
        let mons = m.monomials();
        let powers = (1..p)
            .map(|j| {
                let cs: Vec<Matrix<F>> = (0..=j).map(|k| mons[(j - k) * p + k].scale(binomial::<F>(j, k))).collect();
                FormMatrix::from_coefficients(&cs)
            })
            .collect();
        OperatorFamily { dim: m.dim(), powers, step: 1 }
    }

    /// `θ = u²E + uvH − v²F` over the nullcone of `sl(2)`.
    pub fn for_sl2(m: &Sl2Module<F>) -> Self {
        let p = F::CHAR as usize;
        let theta = FormMatrix::from_coefficients(&[m.e().clone(), m.h().clone(), m.f().neg()]);
        let mut powers = vec![theta.clone()];
        for _ in 2..p {
            let next = powers.last().unwrap().mul(&theta);
            powers.push(next);
        }
        OperatorFamily { dim: m.dim(), powers, step: 2 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `θ^j` for `1 <= j < p`.
    pub fn power(&self, j: usize) -> &FormMatrix<F> {
        &self.powers[j - 1]
    }

    pub fn step(&self) -> usize {
        self.step
    }

    /// `θ` at a rational point.
    pub fn operator_at(&self, a: F, b: F) -> Matrix<F> {
        self.powers[0].eval(a, b)
    }

    /// Ranks of `θ^j` at a rational point, `j = 1..p-1`.
    pub fn ranks_at(&self, a: F, b: F) -> Vec<usize> {
        let t = self.operator_at(a, b);
        let mut cur = Matrix::identity(self.dim);
        self.powers
            .iter()
            .map(|_| {
                cur = cur.mul(&t);
                cur.rank()
            })
            .collect()
    }

    /// Ranks over an extension, at `[a:b]` with coordinates in `k`.
    pub fn ranks_at_ext(&self, k: &ResField<F>, a: &[F], b: &[F]) -> Vec<usize> {
        self.powers.iter().map(|m| m.eval_ext(k, a, b).rank(k)).collect()
    }

    /// `dim Σ_k im C_k` for the coefficient matrices `C_k` of `θ^j`.
    pub fn image_sum_dim(&self, j: usize) -> usize {
        let m = self.power(j);
        let mut acc = Matrix::zeros(self.dim, 0);
        for k in 0..=m.degree() {
            acc = acc.hstack(&m.coefficient(k));
        }
        acc.rank()
    }

    /// `∩_k ker C_k`: the vectors killed by `θ^j` identically.
    pub fn common_kernel(&self, j: usize) -> Matrix<F> {
        let m = self.power(j);
        let mut acc = Matrix::zeros(0, self.dim);
        for k in 0..=m.degree() {
            acc = acc.vstack(&m.coefficient(k));
        }
        acc.kernel()
    }
}

/// Jordan type of `M` at a π-point.
pub fn jordan_type_at<F: Field>(m: &Module<F>, pt: &PiPoint<F>) -> JordanType {
    family_jordan_type_at(&OperatorFamily::for_module(m), pt)
}

pub fn family_jordan_type_at<F: Field>(fam: &OperatorFamily<F>, pt: &PiPoint<F>) -> JordanType {
    let ranks = match pt {
        PiPoint::Closed { a, b } => fam.ranks_at(*a, *b),
        PiPoint::Extension { modulus, a, b } => fam.ranks_at_ext(&ResField::new(modulus), a, b),
        PiPoint::Generic => (1..F::CHAR as usize).map(|j| crate::field::ffge_rank(fam.power(j)).0).collect(),
    };
    JordanType::from_ranks(F::CHAR, fam.dim(), &ranks)
}

/// Jordan type at the generic point.
pub fn generic_jordan_type<F: Field>(m: &Module<F>) -> JordanType {
    jordan_type_at(m, &PiPoint::Generic)
}

/// Every rational point of the projective line, normalised.
pub fn rational_points<F: Field>() -> Vec<(F, F)> {
    let mut pts = vec![(F::one(), F::zero())];
    pts.extend(F::elements().map(|t| (t, F::one())));
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::w_module;
    use crate::F3;

    #[test]
    fn free_module_is_free_everywhere() {
        let kg = Module::<F3>::regular();
        for (a, b) in rational_points::<F3>() {
            let jt = jordan_type_at(&kg, &PiPoint::closed(a, b));
            assert_eq!(jt.multiplicities(), &[0, 0, 3]);
        }
        assert_eq!(generic_jordan_type(&kg).multiplicities(), &[0, 0, 3]);
    }

    #[test]
    fn w32_generic() {
        let w = w_module::<F3>(3, 2).unwrap();
        assert_eq!(generic_jordan_type(&w).to_string(), "[1]⊕2[2]");
    }
}
