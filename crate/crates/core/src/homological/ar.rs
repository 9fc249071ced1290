use super::ext::restricted_free_maps;
use super::syzygy_step;
use crate::field::Field;
use crate::linalg::{Matrix, Span};
use crate::module::{endomorphism_test, hom_space, EndTest, Module, Submodule};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArError {
    #[error("the zero module has no almost split sequence")]
    ZeroInput,
    #[error("projective modules have no almost split sequence")]
    ProjectiveInput,
    #[error("module splits into summands of dimensions {first} and {second}")]
    DecomposableInput { first: usize, second: usize },
    #[error("middle term over quasi-length {quasi_length} is not of the form Z ⊕ τZ'")]
    MiddleTermShape { quasi_length: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArChecks {
    pub exact: bool,
    pub composition_zero: bool,
    pub right_non_split: bool,
    pub left_non_split: bool,
}

impl ArChecks {
    pub fn all(&self) -> bool {
        self.exact && self.composition_zero && self.right_non_split && self.left_non_split
    }
}

/// `0 -> τM -α-> E -β-> M -> 0`.
#[derive(Clone, Debug)]
pub struct ArSequence<F: Field> {
    pub tau: Module<F>,
    pub middle: Module<F>,
    pub end: Module<F>,
    pub alpha: Matrix<F>,
    pub beta: Matrix<F>,
    pub checks: ArChecks,
}

/// Whether some `s` in the span of `maps` satisfies `Σ c_i maps_i = target`.
fn in_span<F: Field>(maps: &[Matrix<F>], target: &Matrix<F>) -> bool {
    let len = target.rows() * target.cols();
    let a = Matrix::from_fn(len, maps.len(), |r, c| maps[c].data()[r]);
    a.solve(target.data()).is_some()
}

pub fn ar_sequence<F: Field>(m: &Module<F>) -> Result<ArSequence<F>, ArError> {
    let n = m.dim();
    if n == 0 {
        return Err(ArError::ZeroInput);
    }
    let radical = match endomorphism_test(m, 0) {
        EndTest::Split { first, second } => {
            return Err(ArError::DecomposableInput { first: first.dim(), second: second.dim() })
        }
        EndTest::Local { radical, .. } => radical,
    };
    let p = F::CHAR as u64;
    if !m.x().pow(p - 1).mul(&m.y().pow(p - 1)).is_zero() {
        return Err(ArError::ProjectiveInput);
    }
    let s0 = syzygy_step(m);
    let omega1 = &s0.module;
    let tau = syzygy_step(omega1).module;
    let p0 = &s0.cover.free;
    let k1 = &s0.kernel;

    // Ext^1(M, τM) as Hom(Ω M, τM) modulo maps through P_0
    let hom = hom_space(omega1, &tau);
    let mut trivial = Span::new(hom.dim());
    for r in restricted_free_maps(k1, s0.cover.rank(), &tau) {
        trivial.insert(&hom.coords(&r));
    }
    let piv = trivial.pivots().to_vec();
    let classes: Vec<usize> = (0..hom.dim()).filter(|c| !piv.contains(c)).collect();
    assert!(!classes.is_empty(), "non-projective indecomposable with Ext^1(M, τM) = 0");
    let class_of = |phi: &Matrix<F>| {
        let mut v = hom.coords(phi);
        trivial.reduce(&mut v);
        classes.iter().map(|&c| v[c]).collect::<Vec<F>>()
    };

    // lifts of radical endomorphisms to Ω M
    let pmons = p0.monomials();
    let p2 = (p * p) as usize;
    let mut cond = Matrix::zeros(0, classes.len());
    for phi in &radical {
        let mut lift = Matrix::zeros(p0.dim(), p0.dim());
        for i in 0..s0.cover.rank() {
            let target = phi.mul_vec(&s0.cover.pi.column(i * p2));
            let q = s0.cover.pi.solve(&target).expect("cover is onto");
            for (ab, mon) in pmons.iter().enumerate() {
                for (r, v) in mon.mul_vec(&q).into_iter().enumerate() {
                    lift.set(r, i * p2 + ab, v);
                }
            }
        }
        let mut l = Matrix::zeros(k1.dim(), k1.dim());
        for k in 0..k1.dim() {
            let img = lift.mul_vec(k1.vector(k));
            for (r, v) in k1.coords(&img).into_iter().enumerate() {
                l.set(r, k, v);
            }
        }
        let mut block = Matrix::zeros(classes.len(), classes.len());
        for (e, &c) in classes.iter().enumerate() {
            for (r, v) in class_of(&hom.basis[c].mul(&l)).into_iter().enumerate() {
                block.set(r, e, v);
            }
        }
        cond = cond.vstack(&block);
    }
    let socle = if cond.rows() == 0 { Matrix::identity(classes.len()) } else { cond.kernel() };
    assert!(socle.rows() > 0, "Ext^1(M, τM) has zero socle over End(M)");
    let lambda = socle.row(0);
    let mut xi = Matrix::zeros(tau.dim(), omega1.dim());
    for (&c, &l) in classes.iter().zip(lambda) {
        xi.add_assign_scaled(&hom.basis[c], l);
    }

    // grading shift making ξ homogeneous of degree 0
    let shift = match (tau.grading(), omega1.grading()) {
        (Some(gt), Some(go)) => {
            let mut s: Option<i64> = None;
            let mut ok = true;
            for i in 0..xi.rows() {
                for k in 0..xi.cols() {
                    if !xi.get(i, k).is_zero() {
                        let d = go[k] - gt[i];
                        ok &= s.is_none_or(|t| t == d);
                        s = Some(d);
                    }
                }
            }
            if ok {
                s
            } else {
                None
            }
        }
        _ => None,
    };
    let (tau_g, p0_g) = match shift {
        Some(s) => (tau.shift_grading(s), p0.clone()),
        None => (tau.without_grading(), p0.without_grading()),
    };

    // pushout E = (τM ⊕ P_0) / {(ξ u, -u) : u ∈ Ω M}
    let amb = tau_g.direct_sum(&p0_g);
    let t = tau.dim();
    let mut rows = Matrix::zeros(0, amb.dim());
    for k in 0..k1.dim() {
        let mut v: Vec<F> = xi.column(k);
        v.extend(k1.vector(k).iter().map(|&a| -a));
        rows.push_row(&v);
    }
    let kmod = Submodule::from_rows_unchecked(amb.dim(), &rows);
    debug_assert!(kmod.is_stable(&amb));
    let middle = amb.quotient(&kmod);
    let q = amb.quotient_map(&kmod);
    let alpha = q.block(0, 0, q.rows(), t);
    let free = kmod.free_columns();
    let beta = Matrix::from_fn(n, free.len(), |r, c| {
        let col = free[c];
        if col < t {
            F::zero()
        } else {
            s0.cover.pi.get(r, col - t)
        }
    });

    let exact = alpha.rank() == t && beta.rank() == n && middle.dim() == t + n;
    let composition_zero = beta.mul(&alpha).is_zero();
    let sections: Vec<Matrix<F>> = hom_space(m, &middle).basis.iter().map(|s| beta.mul(s)).collect();
    let right_non_split = !in_span(&sections, &Matrix::identity(n));
    let retractions: Vec<Matrix<F>> = hom_space(&middle, &tau_g).basis.iter().map(|r| r.mul(&alpha)).collect();
    let left_non_split = !in_span(&retractions, &Matrix::identity(t));
    let checks = ArChecks { exact, composition_zero, right_non_split, left_non_split };
    Ok(ArSequence { tau: tau_g, middle, end: m.clone(), alpha, beta, checks })
}
