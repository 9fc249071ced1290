//! Exact computations with modules over `k[x,y]/(x^p,y^p)` and the restricted
//! enveloping algebra of `sl(2)` in characteristic `p`.

pub mod constructions;
pub mod field;
pub mod homological;
pub mod jordan;
pub mod linalg;
pub mod module;

pub use field::{Field, Fp, Gf};
pub use linalg::Matrix;
pub use module::{Module, Sl2Module, Submodule};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F9 = Gf<3, 2>;
pub type F25 = Gf<5, 2>;
pub type F27 = Gf<3, 3>;

pub type Module3 = Module<F3>;
pub type Module5 = Module<F5>;
