use pnil_core::constructions::w_module;
use pnil_core::homological::{
    ar_sequence, component_slice, ext, ext1, graded_presentation, projective_cover, resolution, syzygy, ArError,
};
use pnil_core::jordan::{generic_jordan_type, is_eip};
use pnil_core::module::{fitting_decompose, is_isomorphic};
use pnil_core::{Module, F3};

fn w(n: usize, d: usize) -> Module<F3> {
    w_module::<F3>(n, d).unwrap()
}

#[test]
fn heller_examples() {
    let k = Module::<F3>::trivial();
    let o1 = syzygy(&k, 1);
    assert_eq!(o1.dim(), 8);
    assert_eq!(generic_jordan_type(&o1).to_string(), "[2]⊕2[3]");
    assert_eq!(syzygy(&k, 2).dim(), 10);
    let m = w(3, 2).direct_sum(&Module::regular());
    let back = syzygy(&syzygy(&m, 1), -1);
    assert!(is_isomorphic(&back, &w(3, 2)).isomorphic);
}

#[test]
fn presentation_examples() {
    let g = graded_presentation::<F3>(3, 3).unwrap();
    assert_eq!(g.omega2.dim(), 15);
    assert!(is_isomorphic(&g.omega2, &w(6, 3)).isomorphic);
    let g = graded_presentation::<F3>(2, 2).unwrap();
    assert_eq!(g.omega2.dim(), 12);
    assert!(is_isomorphic(&g.omega2, &w(5, 3)).isomorphic);
    let g = graded_presentation::<F3>(3, 2).unwrap();
    assert_eq!(generic_jordan_type(&g.omega2).to_string(), "[1]⊕2[2]⊕6[3]");
    assert_eq!(g.omega2.support(), Some((3, 6)));
    assert!(!is_eip(&g.omega2).eip);
    // the image of the explicit differential is the relation module
    let cover = projective_cover(&w(3, 2));
    assert_eq!(cover.rank(), 3);
    assert_eq!(g.d1.rank(), g.target.dim() - w(3, 2).dim());
}

#[test]
fn ext_examples() {
    let k = Module::<F3>::trivial();
    assert_eq!(ext1(&k, &k).dim(), 2);
    assert_eq!(ext1(&Module::regular(), &w(3, 2)).dim(), 0);
    for m in [k.clone(), w(3, 2), w(3, 3)] {
        for n in 1..=3 {
            let d = ext(&m, &m, 2 * n).dim();
            assert!(d >= n + 1, "{:?} n={n}: {d}", m.name());
        }
    }
}

#[test]
fn koszul_degrees() {
    for m in [w(3, 3), w(2, 2)] {
        let r = resolution(&m, 4);
        assert!(r.is_complex() && r.is_minimal());
        assert!(r.generated_in_koszul_degrees(4), "{:?}", r.degrees);
    }
}

#[test]
fn ar_examples() {
    let s = ar_sequence(&w(3, 3)).unwrap();
    assert!(s.checks.all());
    assert!(is_isomorphic(&s.tau, &w(6, 3)).isomorphic);
    assert_eq!(s.middle.dim(), 21);
    assert_eq!(generic_jordan_type(&s.middle).to_string(), "2[1]⊕2[2]⊕5[3]");
    assert!(is_eip(&s.middle).eip);
    assert_eq!(fitting_decompose(&s.middle).len(), 1);

    let s = ar_sequence(&Module::<F3>::trivial()).unwrap();
    assert!(s.checks.all());
    assert_eq!(s.tau.dim(), 10);
    assert_eq!(s.middle.dim(), 11);

    assert_eq!(ar_sequence(&Module::<F3>::regular()).unwrap_err(), ArError::ProjectiveInput);
    assert!(matches!(ar_sequence(&w(2, 2).direct_sum(&w(2, 2))), Err(ArError::DecomposableInput { .. })));
}

#[test]
fn slices() {
    let s = component_slice(&w(3, 3), 2, 3).unwrap();
    for m in 0..=2 {
        let v = s.module(m, 1).unwrap();
        assert!(is_isomorphic(v, &w(3 + 3 * m as usize, 3)).isomorphic);
        assert!(s.vertex(m, 1).unwrap().eip);
    }
    for &i in &s.wing(0, 3) {
        assert!(s.vertices[i].eip, "{}", s.vertices[i].label);
    }
    let s = component_slice(&w(3, 2), 2, 2).unwrap();
    let e = s.eip_vertices();
    assert_eq!(e, vec![s.index(0, 1).unwrap()]);
    let s = component_slice(&Module::<F3>::trivial(), 1, 2).unwrap();
    assert_eq!(s.eip_vertices(), vec![s.index(0, 1).unwrap()]);
}
