use pnil_core::constructions::w_module;
use pnil_core::field::Field;
use pnil_core::linalg::Matrix;
use pnil_core::module::{endomorphism_test, fitting_decompose, hom_space, is_isomorphic, EndTest, ModuleError, ModuleJson, SchemaError};
use pnil_core::{Module, F3};

fn m(rows: &[Vec<i64>]) -> Matrix<F3> {
    Matrix::from_ints(rows)
}

#[test]
fn make_module_validation() {
    let k = Module::<F3>::new(m(&[vec![0]]), m(&[vec![0]]), None).unwrap();
    assert_eq!(k.dim(), 1);
    let kxy2 = Module::<F3>::new(Matrix::zeros(2, 2), m(&[vec![0, 0], vec![1, 0]]), None).unwrap();
    assert_eq!(kxy2.loewy_length(), 2);
    let x = m(&[vec![0, 0], vec![1, 0]]);
    let y = m(&[vec![0, 1], vec![0, 0]]);
    assert!(matches!(Module::new(x.clone(), y, None), Err(ModuleError::CommutatorNonzero { .. })));
    let big = Matrix::<F3>::from_fn(4, 4, |i, j| if i == j + 1 { F3::from_index(1) } else { F3::from_index(0) });
    assert!(matches!(Module::new(big, Matrix::zeros(4, 4), None), Err(ModuleError::NotPNilpotent { which: 'X', .. })));
    assert!(matches!(
        Module::new(Matrix::zeros(2, 2), x, Some(vec![0, 0])),
        Err(ModuleError::GradingNotHomogeneous { which: 'Y', row: 1, col: 0, .. })
    ));
    let kg = Module::<F3>::regular();
    assert_eq!(kg.grading().unwrap(), &[0, 1, 2, 1, 2, 3, 2, 3, 4]);
}

#[test]
fn radical_socle_series() {
    let kg = Module::<F3>::regular();
    let (rads, socs, ll) = kg.radical_socle_series();
    let dims: Vec<usize> = rads.iter().map(|r| r.dim()).collect();
    assert_eq!(dims, vec![9, 8, 6, 3, 1]);
    assert_eq!(ll, 5);
    assert_eq!(socs[1].dim(), 1);
    let w22 = w_module::<F3>(2, 2).unwrap();
    assert_eq!(w22.radical().dim(), 1);
    assert_eq!(w22.loewy_length(), 2);
    assert_eq!(w22.socle(), w22.radical());
    assert_eq!(w22.socle().dim(), 1);
    let k = Module::<F3>::trivial();
    assert_eq!(k.radical().dim(), 0);
    assert_eq!(k.loewy_length(), 1);
}

#[test]
fn sub_and_quotient() {
    let kg = Module::<F3>::regular();
    let p = 3;
    for d in 1..=3usize {
        let gens: Vec<Vec<F3>> = (0..9)
            .filter(|c| c / p + c % p >= 2 * p - d - 1)
            .map(|c| (0..9).map(|i| F3::from_index((i == c) as u64)).collect())
            .collect();
        let s = kg.submodule_generated(&gens);
        assert_eq!(s.dim(), d * (d + 1) / 2);
        assert!(s.is_stable(&kg));
        assert!(is_isomorphic(&kg.restrict(&s), &w_module::<F3>(d, d).unwrap()).isomorphic);
    }
    assert_eq!(kg.quotient(&pnil_core::Submodule::whole(9)).dim(), 0);
    let w53 = w_module::<F3>(5, 3).unwrap();
    let u = pnil_core::Submodule::from_rows_unchecked(w53.dim(), &w53.socle().basis().block(0, 0, 1, w53.dim()));
    assert_eq!(w53.quotient(&u).dim(), 11);
}

#[test]
fn hom_examples() {
    let k = Module::<F3>::trivial();
    assert_eq!(hom_space(&k, &k).dim(), 1);
    assert_eq!(hom_space(&k, &Module::regular()).dim(), 1);
    let w = w_module::<F3>(3, 2).unwrap();
    let end = hom_space(&w, &w);
    for b in &end.basis {
        assert!(w.is_hom_to(&w, b));
    }
    assert!(matches!(endomorphism_test(&w, 0), EndTest::Local { residue_degree: 1, .. }));
}

#[test]
fn fitting_examples() {
    let kg = Module::<F3>::regular();
    let d = fitting_decompose(&kg);
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].end_dim, 9);
    let kk = Module::<F3>::trivial().power(2);
    let d = fitting_decompose(&kk);
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].multiplicity, 2);
}

#[test]
fn iso_examples() {
    let w = w_module::<F3>(3, 2).unwrap();
    let r = is_isomorphic(&w, &w);
    assert!(r.isomorphic);
    assert!(w.is_hom_to(&w, r.witness.as_ref().unwrap()));
    let s = w.direct_sum(&Module::trivial());
    let t = Module::<F3>::trivial().direct_sum(&w);
    let r = is_isomorphic(&s, &t);
    assert!(r.isomorphic && r.witness.unwrap().is_invertible());
    assert!(!is_isomorphic(&w, &w_module::<F3>(3, 3).unwrap()).isomorphic);
}

#[test]
fn json_roundtrip_and_errors() {
    let w = w_module::<F3>(3, 2).unwrap();
    let s = serde_json::to_string(&w.to_json()).unwrap();
    let back = Module::<F3>::from_json(&serde_json::from_str::<ModuleJson>(&s).unwrap()).unwrap();
    assert_eq!(back, w);
    assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), s);

    let bad: ModuleJson = serde_json::from_str(r#"{"p":3,"dim":2,"x":[[0,0]],"y":[[0,0],[0,0]]}"#).unwrap();
    match Module::<F3>::from_json(&bad) {
        Err(SchemaError::Field { field, .. }) => assert_eq!(field, "x"),
        other => panic!("{other:?}"),
    }
    let inhom: ModuleJson = serde_json::from_str(r#"{"p":3,"dim":2,"x":[[0,0],[0,0]],"y":[[0,0],[1,0]],"grading":[0,0]}"#).unwrap();
    assert!(matches!(
        Module::<F3>::from_json(&inhom),
        Err(SchemaError::Invariant(ModuleError::GradingNotHomogeneous { .. }))
    ));
}
