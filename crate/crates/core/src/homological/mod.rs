//! Projective covers, Heller shifts, resolutions, Ext, almost split
//! sequences and windows of Auslander–Reiten components.

mod ar;
mod ext;
mod slice;

pub use ar::{ar_sequence, ArChecks, ArError, ArSequence};
pub use ext::{ext, ext1, ExtSpace};
pub use slice::{component_slice, ComponentSlice, EdgeKind, SliceVertex};

use crate::constructions::ConstructionError;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{Module, Submodule};
use serde::Serialize;

/// `π : P -> M` with `P` free on lifts of a basis of the top.
#[derive(Clone, Debug)]
pub struct ProjectiveCover<F: Field> {
    pub free: Module<F>,
    /// Degree of each free generator (0 for ungraded modules).
    pub degrees: Vec<i64>,
    pub pi: Matrix<F>,
}

impl<F: Field> ProjectiveCover<F> {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }
}

pub fn projective_cover<F: Field>(m: &Module<F>) -> ProjectiveCover<F> {
    let p = F::CHAR as usize;
    let gens = m.generators();
    let degrees: Vec<i64> = gens.iter().map(|&c| m.grading().map_or(0, |g| g[c])).collect();
    let mut free = Module::<F>::free(&degrees);
    if !m.is_graded() {
        free = free.without_grading();
    }
    let mons = m.monomials();
    let mut pi = Matrix::zeros(m.dim(), free.dim());
    for (i, &c) in gens.iter().enumerate() {
        for (ab, mon) in mons.iter().enumerate() {
            let col = i * p * p + ab;
            for r in 0..m.dim() {
                pi.set(r, col, mon.get(r, c));
            }
        }
    }
    ProjectiveCover { free, degrees, pi }
}

/// `Ω(M)` as the kernel of its projective cover.
#[derive(Clone, Debug)]
pub struct SyzygyStep<F: Field> {
    pub cover: ProjectiveCover<F>,
    pub kernel: Submodule<F>,
    pub module: Module<F>,
}

pub fn syzygy_step<F: Field>(m: &Module<F>) -> SyzygyStep<F> {
    let cover = projective_cover(m);
    let kernel = Module::<F>::kernel_of(&cover.pi);
    let module = cover.free.restrict(&kernel);
    SyzygyStep { cover, kernel, module }
}

/// `M` modulo its free summands.
pub fn projective_free_part<F: Field>(m: &Module<F>) -> Module<F> {
    let p = F::CHAR as u64;
    let s = m.x().pow(p - 1).mul(&m.y().pow(p - 1));
    let n = m.dim();
    let mut socs = crate::linalg::Span::new(n);
    let mut gens = Vec::new();
    for c in 0..n {
        if socs.insert(&s.column(c)) {
            let mut v = vec![F::zero(); n];
            v[c] = F::one();
            gens.push(v);
        }
    }
    if gens.is_empty() {
        return m.clone();
    }
    let free = m.submodule_generated(&gens);
    m.quotient(&free)
}

/// The Heller shift `Ω^n(M)`; negative `n` through the sign dual.
pub fn syzygy<F: Field>(m: &Module<F>, n: i64) -> Module<F> {
    if n == 0 {
        return projective_free_part(m);
    }
    if n < 0 {
        return syzygy(&m.sign_dual(), -n).sign_dual();
    }
    let mut cur = m.clone();
    for _ in 0..n {
        cur = syzygy_step(&cur).module;
    }
    cur
}

/// `τ(M) = Ω²(M)`.
pub fn tau<F: Field>(m: &Module<F>) -> Module<F> {
    syzygy(m, 2)
}

/// Minimal free resolution `P_len -> ... -> P_0 -> M`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    pub ranks: Vec<usize>,
    pub degrees: Vec<Vec<i64>>,
    /// `∂_0 = π : P_0 -> M`, then `∂_m : P_m -> P_{m-1}`.
    pub differentials: Vec<Matrix<F>>,
    pub syzygies: Vec<Module<F>>,
}

pub fn resolution<F: Field>(m: &Module<F>, len: usize) -> Resolution<F> {
    let mut ranks = Vec::new();
    let mut degrees = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut incl = Matrix::identity(m.dim());
    let mut cur = m.clone();
    for _ in 0..=len {
        let step = syzygy_step(&cur);
        ranks.push(step.cover.rank());
        degrees.push(step.cover.degrees.clone());
        differentials.push(incl.mul(&step.cover.pi));
        incl = step.cover.free.inclusion(&step.kernel);
        cur = step.module;
        syzygies.push(cur.clone());
    }
    Resolution { ranks, degrees, differentials, syzygies }
}

/// Serialisable form: each generator's image as `(generator, a, b, coefficient)`
/// terms, meaning `coefficient x^a y^b g`.
#[derive(Clone, Debug, Serialize)]
pub struct ResolutionJson {
    pub ranks: Vec<usize>,
    pub degrees: Vec<Vec<i64>>,
    pub differentials: Vec<Vec<Vec<(usize, usize, usize, u64)>>>,
}

impl<F: Field> Resolution<F> {
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `∂_m ∘ ∂_{m+1} = 0` for all `m`.
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// Images of generators have no component on generators of the target.
    pub fn is_minimal(&self) -> bool {
        let p2 = (F::CHAR * F::CHAR) as usize;
        self.differentials.iter().skip(1).all(|d| {
            (0..d.cols() / p2).all(|i| (0..d.rows() / p2).all(|j| d.get(j * p2, i * p2).is_zero()))
        })
    }

    /// Whether every generator of `P_m` has degree `δ(m)`.
    pub fn generated_in_koszul_degrees(&self, upto: usize) -> bool {
        let p = F::CHAR as i64;
        (0..=upto.min(self.len() - 1)).all(|m| {
            let mi = m as i64;
            let delta = if m % 2 == 0 { mi / 2 * p } else { (mi - 1) / 2 * p + 1 };
            self.degrees[m].iter().all(|&d| d == delta)
        })
    }

    pub fn to_json(&self) -> ResolutionJson {
        let p = F::CHAR as usize;
        let p2 = p * p;
        let differentials = self
            .differentials
            .iter()
            .enumerate()
            .skip(1)
            .map(|(_, d)| {
                (0..d.cols() / p2)
                    .map(|i| {
                        let mut terms = Vec::new();
                        for r in 0..d.rows() {
                            let v = d.get(r, i * p2);
                            if !v.is_zero() {
                                terms.push((r / p2, (r % p2) / p, r % p, v.index()));
                            }
                        }
                        terms
                    })
                    .collect()
            })
            .collect();
        ResolutionJson { ranks: self.ranks.clone(), degrees: self.degrees.clone(), differentials }
    }
}

/// The explicit first differential of `W_{n,d}` and its kernel `Ω²(W_{n,d})`.
#[derive(Clone, Debug)]
pub struct GradedPresentation<F: Field> {
    /// `∂_1 : kG^{n+1}[1] ⊕ kG^{n-d}[d] -> kG^n`.
    pub d1: Matrix<F>,
    pub source: Module<F>,
    pub target: Module<F>,
    pub source_degrees: Vec<i64>,
    pub omega2: Module<F>,
}

pub fn graded_presentation<F: Field>(n: usize, d: usize) -> Result<GradedPresentation<F>, ConstructionError> {
    let p = F::CHAR as usize;
    if d < 2 || d > p || n < d {
        return Err(ConstructionError::WParameters { n, d });
    }
    let target = Module::<F>::free(&vec![0; n]);
    let mut source_degrees = vec![1; n + 1];
    let u_count = if d < p { n - d } else { 0 };
    source_degrees.extend(std::iter::repeat(d as i64).take(u_count));
    let source = Module::<F>::free(&source_degrees);
    let idx = |i: usize, a: usize, b: usize| i * p * p + a * p + b;
    let dim = target.dim();
    let mut images: Vec<Vec<F>> = Vec::new();
    for j in 0..=n {
        let mut v = vec![F::zero(); dim];
        if j > 0 {
            v[idx(j - 1, 0, 1)] += F::one();
        }
        if j < n {
            v[idx(j, 1, 0)] -= F::one();
        }
        if j == 0 {
            v[idx(0, 1, 0)] = F::one();
        }
        images.push(v);
    }
    for i in 0..u_count {
        let mut v = vec![F::zero(); dim];
        v[idx(i + d, d, 0)] = F::one();
        images.push(v);
    }
    let mons = target.monomials();
    let mut d1 = Matrix::zeros(dim, source.dim());
    for (g, img) in images.iter().enumerate() {
        for (ab, mon) in mons.iter().enumerate() {
            let col = mon.mul_vec(img);
            for (r, v) in col.into_iter().enumerate() {
                d1.set(r, g * p * p + ab, v);
            }
        }
    }
    let ker = Module::<F>::kernel_of(&d1);
    let omega2 = source.restrict(&ker).named(format!("Ω²(W_{{{n},{d}}})"));
    Ok(GradedPresentation { d1, source, target, source_degrees, omega2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::F3;

    #[test]
    fn omega_of_trivial() {
        let k = Module::<F3>::trivial();
        assert_eq!(syzygy(&k, 1).dim(), 8);
        assert_eq!(syzygy(&k, 2).dim(), 10);
        assert_eq!(syzygy(&k, -1).dim(), 8);
    }

    #[test]
    fn resolution_of_trivial_is_minimal() {
        let r = resolution(&Module::<F3>::trivial(), 3);
        assert_eq!(r.ranks, vec![1, 2, 3, 4]);
        assert!(r.is_complex());
        assert!(r.is_minimal());
    }
}
