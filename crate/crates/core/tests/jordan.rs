use pnil_core::constructions::{w_module, KroneckerRep};
use pnil_core::field::{ffge_rank, Field};
use pnil_core::jordan::{
    constancy_certificates, generic_jordan_type, generic_kernel, is_eip, is_ekp, jordan_type_at, JordanType,
    OperatorFamily, PiPoint,
};
use pnil_core::linalg::Matrix;
use pnil_core::{Module, F25, F27, F3, F5};

fn w_formula(p: u32, n: usize, d: usize) -> JordanType {
    let mut blocks: Vec<(usize, usize)> = (1..d).map(|i| (i, 1)).collect();
    blocks.push((d, n - d + 1));
    JordanType::from_blocks(p, &blocks)
}

/// Rank of `θ` maximised over all rational points of `P^1(K)`.
fn max_rank_over<K: Field>(m: &Module<K>) -> usize {
    let mut best = m.x().rank();
    for t in K::elements() {
        best = best.max(m.x().scale(t).add(m.y()).rank());
    }
    best
}

fn embed3(m: &Module<F3>) -> Module<F27> {
    let lift = |a: &Matrix<F3>| a.map(|v| F27::from_index(v.index()));
    Module::new(lift(m.x()), lift(m.y()), None).unwrap()
}

#[test]
fn w32_generic_rank_matches_scan_over_f27() {
    let w = w_module::<F3>(3, 2).unwrap();
    let fam = OperatorFamily::for_module(&w);
    let (r, _) = ffge_rank(fam.power(1));
    assert_eq!(r, max_rank_over(&embed3(&w)));
    assert_eq!(r, w.radical().dim());
}

#[test]
fn w_jordan_types_small() {
    assert_eq!(generic_jordan_type(&w_module::<F3>(2, 2).unwrap()).to_string(), "[1]⊕[2]");
    assert_eq!(generic_jordan_type(&w_module::<F3>(5, 3).unwrap()).to_string(), "[1]⊕[2]⊕3[3]");
    let w55 = w_module::<F5>(5, 5).unwrap();
    assert_eq!(w55.dim(), 15);
    assert_eq!(generic_jordan_type(&w55).to_string(), "[1]⊕[2]⊕[3]⊕[4]⊕[5]");
}

#[test]
fn w55_constant_over_f25_scan() {
    // every point of P^1(F_25) has the same Jordan type
    let w = w_module::<F5>(5, 5).unwrap();
    let lift = |a: &Matrix<F5>| a.map(|v| F25::from_index(v.index()));
    let x = lift(w.x());
    let y = lift(w.y());
    let mut pts = vec![(F25::from_index(1), F25::from_index(0))];
    pts.extend(F25::elements().map(|t| (t, F25::from_index(1))));
    for (a, b) in pts {
        let t = x.scale(a).add(&y.scale(b));
        let ranks: Vec<usize> = (1..5).map(|j| t.pow(j).rank()).collect();
        assert_eq!(JordanType::from_ranks(5, 15, &ranks), w_formula(5, 5, 5));
    }
}

#[test]
fn eip_examples() {
    for (n, d) in [(3, 2), (3, 3)] {
        let r = is_eip(&w_module::<F3>(n, d).unwrap());
        assert!(r.eip && r.class == d, "W_{n},{d}");
    }
    let r = is_eip(&w_module::<F5>(7, 3).unwrap());
    assert!(r.eip && r.class == 3);
}

#[test]
fn jordan_type_examples() {
    let kg = Module::<F3>::regular();
    assert_eq!(jordan_type_at(&kg, &PiPoint::closed(F3::from_index(1), F3::from_index(2))).to_string(), "3[3]");
    let rad = kg.restrict(&kg.radical());
    assert_eq!(generic_jordan_type(&rad).to_string(), "[2]⊕2[3]");
}

#[test]
fn kronecker_families() {
    let preproj = KroneckerRep::<F3>::preprojective(2).module();
    let rep = constancy_certificates(&preproj);
    assert!(rep.cjt);
    assert_eq!(rep.generic_jordan_type.to_string(), "[1]⊕2[2]");
    assert!(is_ekp(&preproj).verdict);
    assert!(!is_eip(&preproj).eip);

    let reg = KroneckerRep::<F3>::regular(1, F3::from_index(1)).module();
    let rep = constancy_certificates(&reg);
    assert!(!rep.constant_rank(1));
    assert!(rep.constant_rank(2));

    assert!(!is_ekp(&w_module::<F3>(3, 2).unwrap()).verdict);
}

#[test]
fn generic_kernel_examples() {
    let kg = Module::<F3>::regular();
    let k2 = generic_kernel(&kg, 2);
    assert_eq!(k2, kg.radical_power(3));
    assert_eq!(k2.dim(), 3);
    let m = Module::<F3>::new(Matrix::zeros(2, 2), Matrix::from_ints(&[vec![0, 0], vec![1, 0]]), None).unwrap();
    let k = generic_kernel(&m, 3);
    assert_eq!(k, m.socle());
    assert_eq!(k.dim(), 1);
    let w = w_module::<F3>(3, 2).unwrap();
    assert_eq!(generic_kernel(&w, 2).dim(), w.dim());
}
