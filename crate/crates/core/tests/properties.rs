use pnil_core::constructions::{catalog, eip_catalog, sl2_baby_verma, sl2_simple, w_module, KroneckerRep, QuotientFamily};
use pnil_core::field::{
    drop_locus, ffge, ffge_rank, form_gcd_factor, BinaryForm, ClosedPoint, Field, FormMatrix, One, Poly, ResField, Zero,
};
use pnil_core::homological::{ar_sequence, resolution, syzygy};
use pnil_core::jordan::{
    constancy_certificates, family_jordan_type_at, generic_jordan_type, generic_kernel, is_eip, is_ekp,
    jordan_type_at, JordanType, OperatorFamily, PiPoint,
};
use pnil_core::linalg::Matrix;
use pnil_core::module::{endomorphism_test, fitting_decompose, hom_space, is_isomorphic, EndTest};
use pnil_core::{Module, Submodule, F3, F5};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn cat3() -> &'static [pnil_core::constructions::CatalogEntry<F3>] {
    static C: OnceLock<Vec<pnil_core::constructions::CatalogEntry<F3>>> = OnceLock::new();
    C.get_or_init(catalog::<F3>)
}

fn eip3() -> &'static [pnil_core::constructions::CatalogEntry<F3>] {
    static C: OnceLock<Vec<pnil_core::constructions::CatalogEntry<F3>>> = OnceLock::new();
    C.get_or_init(|| eip_catalog::<F3>(3))
}

fn random_form<R: Rng>(rng: &mut R, deg: usize, density: f64) -> BinaryForm<F3> {
    if rng.gen_bool(1.0 - density) {
        return BinaryForm::zero(deg);
    }
    BinaryForm::new((0..=deg).map(|_| F3::random(rng)).collect())
}

fn random_form_matrix(seed: u64) -> FormMatrix<F3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = rng.gen_range(1..=4);
    let cols = rng.gen_range(1..=4);
    let deg = rng.gen_range(1..=3);
    // products of linear forms give rank drops at rational points
    if rng.gen_bool(0.5) {
        let l: Vec<BinaryForm<F3>> = (0..rows.max(cols)).map(|_| random_form(&mut rng, 1, 1.0)).collect();
        FormMatrix::from_fn(rows, cols, deg, |i, j| {
            let mut f = random_form(&mut rng, deg - 1, 0.8);
            if i == j || rng.gen_bool(0.3) {
                f = if f.is_zero() { BinaryForm::zero(deg) } else { f.mul(&l[i.max(j)]) };
            } else {
                f = random_form(&mut rng, deg, 0.7);
            }
            f
        })
    } else {
        FormMatrix::from_fn(rows, cols, deg, |_, _| random_form(&mut rng, deg, 0.6))
    }
}

fn ext_point(k: &ResField<F3>, rng: &mut ChaCha8Rng) -> (Vec<F3>, Vec<F3>) {
    if rng.gen_bool(0.1) {
        (k.one(), k.zero())
    } else {
        (k.random(rng), k.one())
    }
}

fn independent_rank(m: &FormMatrix<F3>, pt: &ClosedPoint<F3>) -> usize {
    match pt {
        ClosedPoint::Infinity => m.eval(F3::one(), F3::zero()).rank(),
        ClosedPoint::Root { minpoly } => {
            let k = ResField::new(minpoly);
            // t = class of the indeterminate is a root of the minimal polynomial
            let t = k.generator();
            m.eval_ext(&k, &t, &k.one()).rank(&k)
        }
    }
}

fn random_submodule(m: &Module<F3>, rng: &mut ChaCha8Rng) -> Submodule<F3> {
    let g = rng.gen_range(0..=2);
    let gens: Vec<Vec<F3>> = (0..g).map(|_| (0..m.dim()).map(|_| F3::random(rng)).collect()).collect();
    m.submodule_generated(&gens)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn field_semicontinuity(seed in any::<u64>(), e in 1usize..=3) {
        let m = random_form_matrix(seed);
        let (r, _) = ffge_rank(&m);
        let k = ResField::<F3>::of_degree(e);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        for _ in 0..20 {
            let (a, b) = ext_point(&k, &mut rng);
            prop_assert!(m.eval_ext(&k, &a, &b).rank(&k) <= r);
        }
    }

    #[test]
    fn field_drop_locus_sound_and_complete(seed in any::<u64>()) {
        let m = random_form_matrix(seed);
        if m.is_zero() {
            return Ok(());
        }
        let res = ffge(&m);
        let r = res.rank;
        let locus = drop_locus(&m, r, &res.minor).unwrap();
        for ev in &locus {
            prop_assert_eq!(independent_rank(&m, &ev.point), ev.rank);
            prop_assert!(ev.rank < r);
        }
        let k = ResField::<F3>::of_degree(3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        let minor = &res.minor;
        for _ in 0..20 {
            let (a, b) = ext_point(&k, &mut rng);
            let val = minor
                .coeffs()
                .iter()
                .enumerate()
                .fold(k.zero(), |acc, (i, &c)| {
                    let term = k.mul(&k.pow(&a, (minor.degree() - i) as u64), &k.pow(&b, i as u64));
                    k.add(&acc, &k.mul(&k.constant(c), &term))
                });
            if !ResField::is_zero(&val) {
                prop_assert_eq!(m.eval_ext(&k, &a, &b).rank(&k), r);
            }
        }
    }

    #[test]
    fn field_gcd_factorisation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cd = rng.gen_range(0..=3);
        let common = random_form(&mut rng, cd, 1.0);
        let forms: Vec<BinaryForm<F3>> = (0..3)
            .map(|_| {
                let d = rng.gen_range(0..=4);
                common.mul(&random_form(&mut rng, d, 0.9))
            })
            .collect();
        let Ok((g, factors)) = form_gcd_factor(&forms) else { return Ok(()); };
        let prod = factors
            .iter()
            .fold(BinaryForm::one(), |acc, (h, e)| (0..*e).fold(acc, |a, _| a.mul(h)));
        prop_assert_eq!(prod.normalized(), g.normalized());
        for f in &forms {
            if !f.is_zero() {
                prop_assert!(g.dehomogenize().divides(&f.dehomogenize()));
            }
        }
        for (h, _) in &factors {
            let u = h.dehomogenize();
            if u.deg() <= 8 {
                for d in 1..=u.deg() / 2 {
                    for q in Poly::<F3>::monic_of_degree(d) {
                        prop_assert!(!q.divides(&u), "{:?} divides {:?}", q, u);
                    }
                }
            }
        }
    }

    #[test]
    fn field_determinism(seed in any::<u64>()) {
        let m = random_form_matrix(seed);
        let a = ffge(&m);
        let b = ffge(&m.clone());
        prop_assert_eq!(a.rank, b.rank);
        prop_assert_eq!(a.minor, b.minor);
        prop_assert_eq!(a.pivot_cols, b.pivot_cols);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn submodules_are_canonical(ix in 0usize..64, seed in any::<u64>()) {
        let m = &cat3()[ix % cat3().len()].module;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_submodule(m, &mut rng);
        // regenerate from random combinations of the basis plus the basis reversed
        let mut gens: Vec<Vec<F3>> = (0..s.dim()).rev().map(|i| s.vector(i).to_vec()).collect();
        for _ in 0..2 {
            let mut v = vec![F3::zero(); m.dim()];
            for i in 0..s.dim() {
                let c = F3::random(&mut rng);
                for (vj, &sj) in v.iter_mut().zip(s.vector(i)) {
                    *vj += c * sj;
                }
            }
            gens.push(v);
        }
        let t = m.submodule_generated(&gens);
        prop_assert!(t == s);
        prop_assert_eq!(t.basis(), s.basis());
        let u = random_submodule(m, &mut rng);
        prop_assert_eq!(u == s, u.basis() == s.basis());
    }

    #[test]
    fn sub_and_quotient_are_modules(ix in 0usize..64, seed in any::<u64>()) {
        let m = &cat3()[ix % cat3().len()].module;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_submodule(m, &mut rng);
        prop_assert!(s.is_stable(m));
        let q = m.quotient(&s);
        prop_assert_eq!(q.dim(), m.dim() - s.dim());
        prop_assert!(Module::new(q.x().clone(), q.y().clone(), q.grading().map(|g| g.to_vec())).is_ok());
        let r = m.restrict(&s);
        prop_assert!(Module::new(r.x().clone(), r.y().clone(), r.grading().map(|g| g.to_vec())).is_ok());
    }

    #[test]
    fn twist_functoriality(ix in 0usize..64, seed in any::<u64>()) {
        let m = &cat3()[ix % cat3().len()].module;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g2 = || loop {
            let g = Matrix::<F3>::from_fn(2, 2, |_, _| F3::random(&mut rng));
            if g.is_invertible() {
                break g;
            }
        };
        let (g, h) = (g2(), g2());
        let lhs = m.twist(&g).unwrap().twist(&h).unwrap();
        let rhs = m.twist(&g.mul(&h)).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let cjt = |n: &Module<F3>| constancy_certificates(n).cjt;
        prop_assert_eq!(cjt(m), cjt(&m.twist(&g).unwrap()));
    }
}

#[test]
fn hom_dimension_duality() {
    let c = cat3();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let a = &c[rng.gen_range(0..c.len())].module;
        let b = &c[rng.gen_range(0..c.len())].module;
        assert_eq!(hom_space(a, b).dim(), hom_space(&b.dual(), &a.dual()).dim());
    }
}

fn idempotents_trivial(m: &Module<F3>) -> bool {
    let h = hom_space(m, m);
    let n = h.dim();
    let id = Matrix::<F3>::identity(m.dim());
    let mut c = vec![F3::zero(); n];
    loop {
        let e = h.combination(&c);
        if e.mul(&e) == e && !e.is_zero() && e != id {
            return false;
        }
        let mut i = 0;
        loop {
            if i == n {
                return true;
            }
            c[i] = F3::from_index((c[i].index() + 1) % 3);
            if !c[i].is_zero() {
                break;
            }
            i += 1;
        }
    }
}

#[test]
fn fitting_completeness() {
    let mut mods: Vec<Module<F3>> = cat3().iter().map(|e| e.module.clone()).collect();
    mods.push(w_module::<F3>(3, 2).unwrap().direct_sum(&Module::trivial()).direct_sum(&Module::regular()));
    mods.push(KroneckerRep::<F3>::preprojective(1).module().power(2));
    for m in &mods {
        let parts = fitting_decompose(m);
        let mut all: Vec<Module<F3>> = Vec::new();
        for s in &parts {
            for _ in 0..s.multiplicity {
                all.push(s.module.clone());
            }
            let h = hom_space(&s.module, &s.module).dim();
            if s.module.dim() <= 12 && h <= 9 {
                assert!(idempotents_trivial(&s.module), "{:?}", m.name());
            } else {
                match endomorphism_test(&s.module, 3) {
                    EndTest::Local { end_dim, residue_degree, radical } => {
                        assert_eq!(end_dim - radical.len(), residue_degree);
                        assert_eq!(residue_degree, 1);
                    }
                    EndTest::Split { .. } => panic!("summand splits"),
                }
            }
        }
        let sum = Module::direct_sum_all(all.iter());
        assert!(is_isomorphic(&sum.without_grading(), &m.without_grading()).isomorphic, "{:?}", m.name());
    }
}

#[test]
fn graded_radical_layers_are_homogeneous() {
    for e in cat3() {
        let m = &e.module;
        let Some(g) = m.grading() else { continue };
        for j in 0..=m.loewy_length() {
            assert!(m.radical_power(j).is_homogeneous(g), "{} Rad^{j}", e.name);
        }
        assert!(m.socle().is_homogeneous(g));
    }
}

fn check_jordan_type_at_points(m: &Module<F3>, jt_dim: usize, pts: &[PiPoint<F3>]) {
    let generic = generic_jordan_type(m);
    for pt in pts {
        let jt = jordan_type_at(m, pt);
        assert_eq!((1..=3).map(|i| i * jt.a(i)).sum::<usize>(), jt_dim);
        let mut r = vec![m.dim()];
        r.extend(jt.ranks());
        r.push(0);
        for w in r.windows(3) {
            assert!(w[0] + w[2] >= 2 * w[1]);
        }
        assert!(jt.dominated_by(&generic));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn jordan_types_at_points(ix in 0usize..64, a in 0u64..3, b in 0u64..3, ext in any::<bool>(), seed in any::<u64>()) {
        let m = &cat3()[ix % cat3().len()].module;
        let pt = if ext {
            let k = ResField::<F3>::of_degree(2);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            PiPoint::Extension { modulus: k.modulus().clone(), a: k.random(&mut rng), b: k.one() }
        } else if a == 0 && b == 0 {
            PiPoint::closed(F3::one(), F3::zero())
        } else {
            PiPoint::closed(F3::from_index(a), F3::from_index(b))
        };
        check_jordan_type_at_points(m, m.dim(), &[pt]);
    }

    #[test]
    fn eip_closure_under_quotients(ix in 0usize..64, seed in any::<u64>()) {
        let e = &eip3()[ix % eip3().len()];
        let r = is_eip(&e.module);
        prop_assert!(r.eip, "{}", e.name);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_submodule(&e.module, &mut rng);
        let q = e.module.quotient(&s);
        if q.dim() > 0 {
            let rq = is_eip(&q);
            prop_assert!(rq.eip && rq.class <= r.class, "{} / random", e.name);
        }
    }

    #[test]
    fn generic_kernel_functorial(i in 0usize..64, j in 0usize..64, d in 1usize..=3, seed in any::<u64>()) {
        let c = cat3();
        let m = &c[i % c.len()].module;
        let n = &c[j % c.len()].module;
        let h = hom_space(m, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = h.random(&mut rng);
        let km = generic_kernel(m, d);
        let kn = generic_kernel(n, d);
        for r in 0..km.dim() {
            prop_assert!(kn.contains(&phi.mul_vec(km.vector(r))));
        }
    }

    #[test]
    fn generic_kernel_maximal(ix in 0usize..64, nn in 1usize..=4, d in 1usize..=3, seed in any::<u64>()) {
        let c = cat3();
        let m = &c[ix % c.len()].module;
        let n = nn.max(d);
        let w = w_module::<F3>(n, d).unwrap();
        let h = hom_space(&w, m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = h.random(&mut rng);
        let k = generic_kernel(m, d);
        for col in 0..w.dim() {
            prop_assert!(k.contains(&phi.column(col)));
        }
    }
}

#[test]
fn eip_ekp_certificate_consistency() {
    for e in cat3().iter().chain(eip3()) {
        let r = is_eip(&e.module);
        let k = is_ekp(&e.module);
        let c = constancy_certificates(&e.module);
        if r.eip {
            assert!(c.cjt, "{}", e.name);
        }
        if r.eip && k.verdict {
            assert_eq!(generic_jordan_type(&e.module), JordanType::from_blocks(3, &[(1, e.module.dim())]), "{}", e.name);
        }
    }
}

#[test]
fn eip_summands_projective_free_and_shape() {
    for e in eip3() {
        let r = is_eip(&e.module);
        let jt = generic_jordan_type(&e.module);
        for i in 1..=r.class {
            assert!(jt.a(i) >= 1, "{} a_{i}", e.name);
        }
        for s in fitting_decompose(&e.module) {
            // a summand is free iff x^{p-1}y^{p-1} acts nonzero
            assert!(s.module.monomial(2, 2).is_zero(), "{}", e.name);
            let rs = is_eip(&s.module);
            assert!(rs.eip && rs.class <= r.class, "{}", e.name);
        }
    }
}

#[test]
fn w_modules_support_and_chain() {
    for d in 1..=3usize {
        for n in d..=d + 4 {
            let w = w_module::<F3>(n, d).unwrap();
            assert_eq!(w.support(), Some((0, d as i64 - 1)));
            let g = w.grading().unwrap();
            for i in 0..w.dim() {
                for j in 0..w.dim() {
                    if !w.x().get(i, j).is_zero() || !w.y().get(i, j).is_zero() {
                        assert_eq!(g[i], g[j] + 1);
                    }
                }
            }
            if n > d {
                let t = w_module::<F3>(n - 1, d).unwrap();
                let tg = t.generators();
                let mut images = vec![F3::zero(); n * t.dim()];
                for i in 0..n - 1 {
                    images[i * t.dim() + tg[i]] = F3::one();
                }
                let phi = w.map_from_generator_images(&t, &images);
                let h = hom_space(&w, &t);
                assert!(w.is_hom_to(&t, &phi));
                let _ = h.coords(&phi);
                assert_eq!(phi.rank(), t.dim());
            }
        }
    }
}

#[test]
fn kronecker_dimension_vectors() {
    for n in 1..=4 {
        let f = KroneckerRep::<F3>::preinjective(n).module();
        assert_eq!(f.dim(), 2 * n + 1);
        assert_eq!(f.top_dim(), n + 1);
        assert_eq!(generic_jordan_type(&f), JordanType::from_blocks(3, &[(1, 1), (2, n)]));
        let g = KroneckerRep::<F3>::preprojective(n).module();
        assert_eq!(g.dim(), 2 * n + 1);
        assert_eq!(g.top_dim(), n);
        assert_eq!(generic_jordan_type(&g), JordanType::from_blocks(3, &[(1, 1), (2, n)]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 20, ..ProptestConfig::default() })]

    #[test]
    fn quotient_family_constant(seed in any::<u64>()) {
        let w = w_module::<F3>(5, 3).unwrap();
        let soc = w.socle();
        let gamma = Submodule::from_rows_unchecked(w.dim(), &soc.basis().block(0, 0, 2, w.dim()));
        let fam = QuotientFamily::new(&w, &gamma).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = fam.random_parameter(&mut rng);
        let q = fam.point(&f).unwrap();
        prop_assert_eq!(q.dim(), 11);
        prop_assert_eq!(generic_jordan_type(&q).to_string(), "[1]⊕2[2]⊕2[3]");
        prop_assert_eq!(fitting_decompose(&q).len(), 1);
        prop_assert_eq!(fitting_decompose(&q)[0].multiplicity, 1);
    }
}

#[test]
fn sl2_nullcone_parametrisation() {
    // natural representation: x(u,v)^2 = 0 as a matrix of forms
    let l1 = sl2_simple::<F5>(1).unwrap();
    let fam = OperatorFamily::for_sl2(&l1);
    let x = fam.power(1);
    assert!(x.mul(x).is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut mods: Vec<_> = (0..5).map(|l| sl2_simple::<F5>(l).unwrap()).collect();
    mods.extend((0..5).map(|l| sl2_baby_verma::<F5>(l).unwrap()));
    for m in &mods {
        for _ in 0..50 {
            let (u, v) = (F5::random(&mut rng), F5::random(&mut rng));
            assert!(m.nullcone_operator(u, v).pow(5).is_zero());
        }
    }
    // the e-direction of Z(0) has a size-1 block
    let z = sl2_baby_verma::<F5>(0).unwrap();
    let jt = family_jordan_type_at(&OperatorFamily::for_sl2(&z), &PiPoint::closed(F5::one(), F5::zero()));
    assert_eq!(jt.a(1), 1);
}

#[test]
fn resolutions_are_minimal() {
    for e in cat3() {
        let r = resolution(&e.module, 2);
        assert!(r.is_complex() && r.is_minimal(), "{}", e.name);
        assert_eq!(r.ranks[0], e.module.top_dim(), "{}", e.name);
        for (m, s) in r.syzygies.iter().enumerate().take(r.len()) {
            assert_eq!(r.ranks[m], s.top_dim());
        }
    }
}

#[test]
fn stable_jordan_types_under_syzygy() {
    for e in cat3() {
        let jt = generic_jordan_type(&e.module);
        let o1 = generic_jordan_type(&syzygy(&e.module, 1));
        let o2 = generic_jordan_type(&syzygy(&e.module, 2));
        assert_eq!(o2.stable(), jt.stable(), "{}", e.name);
        for i in 1..3 {
            assert_eq!(o1.a(i), jt.a(3 - i), "{} a_{i}", e.name);
        }
    }
}

#[test]
fn omega_two_exclusion_p3() {
    let c = eip_catalog::<F3>(1);
    assert!(c.len() >= 8);
    for e in &c {
        for n in [2, -2] {
            assert!(!is_eip(&syzygy(&e.module, n)).eip, "Ω^{n} {}", e.name);
        }
    }
}

#[test]
fn ar_validity_and_local_splitting() {
    for e in cat3() {
        let m = &e.module;
        if m.dim() == 9 || fitting_decompose(m).iter().map(|s| s.multiplicity).sum::<usize>() != 1 {
            continue;
        }
        let s = ar_sequence(m).unwrap();
        assert!(s.checks.all(), "{}", e.name);
        assert!(is_isomorphic(&s.end, m).isomorphic);
        assert!(is_isomorphic(&s.tau, &syzygy(m, 2)).isomorphic);
    }
    for m in [w_module::<F3>(3, 3).unwrap(), w_module::<F3>(6, 3).unwrap(), w_module::<F3>(2, 2).unwrap()] {
        let s = ar_sequence(&m).unwrap();
        let lhs = generic_jordan_type(&s.middle);
        let rhs = generic_jordan_type(&m).direct_sum(&generic_jordan_type(&s.tau));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn koszul_generation_degrees() {
    for m in [w_module::<F3>(3, 3).unwrap(), w_module::<F3>(4, 3).unwrap(), w_module::<F3>(2, 2).unwrap()] {
        assert!(resolution(&m, 4).generated_in_koszul_degrees(4));
    }
    for m in [w_module::<F5>(5, 5).unwrap(), w_module::<F5>(4, 4).unwrap()] {
        assert!(resolution(&m, 2).generated_in_koszul_degrees(2));
    }
}
