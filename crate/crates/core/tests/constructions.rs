use pnil_core::constructions::{sl2_baby_verma, sl2_simple, sl2_trivial, w_module, KroneckerRep, QuotientFamily};
use pnil_core::field::Field;
use pnil_core::jordan::{family_jordan_type_at, generic_jordan_type, is_eip, sl2_generic_jordan_type, sl2_is_eip, OperatorFamily, PiPoint};
use pnil_core::linalg::Matrix;
use pnil_core::module::{fitting_decompose, hom_space, is_isomorphic};
use pnil_core::{Module, Submodule, F3, F5};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn w_support_and_chain_surjections() {
    for (n, d) in [(3, 2), (4, 3), (5, 3)] {
        let w = w_module::<F3>(n, d).unwrap();
        assert_eq!(w.support(), Some((0, d as i64 - 1)));
        if n > d {
            // v_i -> v_i, v_n -> 0 respects the relations of W_{n,d}
            let target = w_module::<F3>(n - 1, d).unwrap();
            let gens = w.generators();
            assert_eq!(gens.len(), n);
            let tg = target.generators();
            let mut images = vec![F3::from_index(0); n * target.dim()];
            for i in 0..n - 1 {
                images[i * target.dim() + tg[i]] = F3::from_index(1);
            }
            let phi = w.map_from_generator_images(&target, &images);
            assert!(w.is_hom_to(&target, &phi));
            assert_eq!(phi.rank(), target.dim());
        }
    }
}

#[test]
fn preinjective_is_w() {
    for n in 1..=3 {
        let f = KroneckerRep::<F3>::preinjective(n).module();
        assert_eq!(f.dim(), 2 * n + 1);
        assert_eq!(f.top_dim(), n + 1);
        assert!(is_isomorphic(&f, &w_module::<F3>(n + 1, 2).unwrap()).isomorphic);
    }
}

#[test]
fn regular_is_indecomposable() {
    let f = KroneckerRep::<F3>::regular(1, F3::from_index(1)).module();
    assert_eq!(f.dim(), 2);
    assert_eq!(fitting_decompose(&f).len(), 1);
}

fn w53_family() -> QuotientFamily<F3> {
    let w = w_module::<F3>(5, 3).unwrap();
    let soc = w.socle();
    assert_eq!(soc.dim(), 3);
    let gamma = Submodule::from_rows_unchecked(w.dim(), &soc.basis().block(0, 0, 2, w.dim()));
    QuotientFamily::new(&w, &gamma).unwrap()
}

#[test]
fn quotient_family_points() {
    let fam = w53_family();
    assert_eq!(fam.parameter_shape(), (2, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5 {
        let f = fam.random_parameter(&mut rng);
        let q = fam.point(&f).unwrap();
        assert_eq!(q.dim(), 11);
        assert_eq!(generic_jordan_type(&q).to_string(), "[1]⊕2[2]⊕2[3]");
        assert_eq!(fitting_decompose(&q).len(), 1);
    }
    let f = Matrix::<F3>::from_ints(&[vec![1], vec![0]]);
    let g = Matrix::<F3>::from_ints(&[vec![0], vec![1]]);
    assert!(!is_isomorphic(&fam.point(&f).unwrap(), &fam.point(&g).unwrap()).isomorphic);
    let zero = Matrix::<F3>::zeros(2, 1);
    assert_eq!(fam.point(&zero).unwrap().dim(), 11);
}

#[test]
fn quotient_family_rejects_non_socle() {
    let w = w_module::<F3>(3, 2).unwrap();
    let whole = Submodule::whole(w.dim());
    assert!(QuotientFamily::new(&w, &whole).is_err());
}

#[test]
fn gl2_stability() {
    let w = w_module::<F3>(3, 2).unwrap();
    let swap = Matrix::<F3>::from_ints(&[vec![0, 1], vec![1, 0]]);
    assert!(is_isomorphic(&w.twist(&swap).unwrap(), &w).isomorphic);
    assert!(w.twist(&Matrix::<F3>::zeros(2, 2)).is_err());
    assert_eq!(w.twist(&Matrix::identity(2)).unwrap(), w);
}

#[test]
fn duals() {
    let w = w_module::<F3>(3, 2).unwrap();
    assert!(is_isomorphic(&w.dual().dual(), &w).isomorphic);
    let k = Module::<F3>::trivial();
    assert_eq!(hom_space(&k, &w).dim(), hom_space(&w.dual(), &k.dual()).dim());
}

#[test]
fn sl2_lab() {
    let e_dir = PiPoint::closed(F5::from_index(1), F5::from_index(0));
    let f_dir = PiPoint::closed(F5::from_index(0), F5::from_index(1));
    for lambda in 0..5 {
        let l = sl2_simple::<F5>(lambda).unwrap();
        let (jt, cert) = sl2_generic_jordan_type(&l);
        assert!(cert.verdict);
        assert_eq!(jt.to_string(), format!("[{}]", lambda + 1));
        assert_eq!(sl2_is_eip(&l).eip, lambda == 0);
    }
    let z = sl2_baby_verma::<F5>(0).unwrap();
    let fam = OperatorFamily::for_sl2(&z);
    assert_eq!(family_jordan_type_at(&fam, &f_dir).to_string(), "[5]");
    assert_eq!(family_jordan_type_at(&fam, &e_dir).to_string(), "[1]⊕[4]");
    assert!(!sl2_generic_jordan_type(&z).1.verdict);
    assert!(sl2_is_eip(&sl2_trivial::<F5>().direct_sum(&sl2_trivial())).eip);
    assert!(sl2_simple::<F5>(5).is_err());
}

#[test]
fn eip_kronecker_preinjective() {
    assert!(is_eip(&KroneckerRep::<F3>::preinjective(2).module()).eip);
}
