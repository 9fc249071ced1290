use crate::constructions::w_module;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{hom_space, Module, Submodule};

/// `𝔎_d(M)`: the sum of the images of all maps `W_{N,d} -> M` with
/// `N = max(d, dim M)`.
pub fn generic_kernel<F: Field>(m: &Module<F>, d: usize) -> Submodule<F> {
    generic_kernel_with(m, d, d.max(m.dim()))
}

/// As [`generic_kernel`] with `N` given; smaller `N` may miss summands.
pub fn generic_kernel_with<F: Field>(m: &Module<F>, d: usize, n: usize) -> Submodule<F> {
    assert!(d >= 1 && d <= F::CHAR as usize, "class must lie in 1..=p");
    if m.dim() == 0 {
        return Submodule::zero(0);
    }
    let w = w_module::<F>(n.max(d), d).expect("parameters checked");
    let hom = hom_space(&w, m);
    let mut rows = Matrix::zeros(0, m.dim());
    for phi in &hom.basis {
        rows = rows.vstack(&phi.transpose());
    }
    Submodule::from_rows_unchecked(m.dim(), &rows)
}
