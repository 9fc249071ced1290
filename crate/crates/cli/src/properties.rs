//! Seeded randomized batteries, one record per property.

use crate::report::{Checks, Source, Verdict};
use crate::suites::{anchor, Params, CRITERIA};
use pnil_core::constructions::{catalog, eip_catalog, sl2_baby_verma, sl2_simple, w_module, CatalogEntry, KroneckerRep, QuotientFamily};
use pnil_core::field::{
    drop_locus, ffge, form_gcd_factor, BinaryForm, ClosedPoint, Field, FormMatrix, Poly, ResField,
};
use pnil_core::homological::{ar_sequence, resolution, syzygy, ArSequence};
use pnil_core::jordan::{
    constancy_certificates, generic_jordan_type, generic_kernel, is_eip, is_ekp, jordan_type_at, JordanType,
    OperatorFamily, PiPoint,
};
use pnil_core::linalg::Matrix;
use pnil_core::module::{endomorphism_test, fitting_decompose, hom_space, is_isomorphic, EndTest};
use pnil_core::{Module, Submodule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::HashMap;

type Case<'a> = Box<dyn FnMut(&mut ChaCha8Rng) -> Result<(), String> + 'a>;

fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn battery(c: &mut Checks, id: &str, params: &Params, mut case: Case<'_>) {
    let cases = params.cases;
    let seed = params.seed;
    c.custom(format!("c13.{id}"), &anchor(13), json!({"cases": cases, "seed": seed}), Source::Definition, format!("{cases}/{cases} cases"), || {
        for i in 0..cases {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv(id) ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            if let Err(e) = case(&mut rng) {
                return (Verdict::Fail, format!("case {i}: {e}"));
            }
        }
        (Verdict::Pass, format!("{cases}/{cases} cases"))
    });
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn random_form<F: Field, R: Rng>(rng: &mut R, deg: usize, density: f64) -> BinaryForm<F> {
    if rng.gen_bool(1.0 - density) {
        return BinaryForm::zero(deg);
    }
    BinaryForm::new((0..=deg).map(|_| F::random(rng)).collect())
}

fn random_form_matrix<F: Field>(rng: &mut ChaCha8Rng) -> FormMatrix<F> {
    let rows = rng.gen_range(1..=4);
    let cols = rng.gen_range(1..=4);
    let deg = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        // shared linear factors force rank drops
        let l: Vec<BinaryForm<F>> = (0..rows.max(cols)).map(|_| random_form(rng, 1, 1.0)).collect();
        FormMatrix::from_fn(rows, cols, deg, |i, j| {
            if i == j || rng.gen_bool(0.3) {
                let f: BinaryForm<F> = random_form(rng, deg - 1, 0.8);
                if f.is_zero() { BinaryForm::zero(deg) } else { f.mul(&l[i.max(j)]) }
            } else {
                random_form(rng, deg, 0.7)
            }
        })
    } else {
        FormMatrix::from_fn(rows, cols, deg, |_, _| random_form(rng, deg, 0.6))
    }
}

fn ext_point<F: Field>(k: &ResField<F>, rng: &mut ChaCha8Rng) -> (Vec<F>, Vec<F>) {
    if rng.gen_bool(0.1) { (k.one(), k.zero()) } else { (k.random(rng), k.one()) }
}

fn eval_form_ext<F: Field>(k: &ResField<F>, f: &BinaryForm<F>, a: &[F], b: &[F]) -> Vec<F> {
    let d = f.degree();
    f.coeffs().iter().enumerate().fold(k.zero(), |acc, (i, &c)| {
        let term = k.mul(&k.pow(a, (d - i) as u64), &k.pow(b, i as u64));
        k.add(&acc, &k.mul(&k.constant(c), &term))
    })
}

fn random_submodule<F: Field>(m: &Module<F>, rng: &mut ChaCha8Rng) -> Submodule<F> {
    let g = rng.gen_range(0..=2);
    let gens: Vec<Vec<F>> = (0..g).map(|_| (0..m.dim()).map(|_| F::random(rng)).collect()).collect();
    m.submodule_generated(&gens)
}

fn random_gl2<F: Field>(rng: &mut ChaCha8Rng) -> Matrix<F> {
    loop {
        let g = Matrix::<F>::from_fn(2, 2, |_, _| F::random(rng));
        if g.is_invertible() {
            return g;
        }
    }
}

fn pick<'a, T>(v: &'a [T], rng: &mut ChaCha8Rng) -> &'a T {
    &v[rng.gen_range(0..v.len())]
}

fn summand_count<F: Field>(m: &Module<F>) -> usize {
    fitting_decompose(m).iter().map(|s| s.multiplicity).sum()
}

pub fn run<F: Field>(c: &mut Checks, params: &Params) {
    let p = F::CHAR as usize;
    let cat = catalog::<F>();
    let eips = eip_catalog::<F>(p);

    field_batteries::<F>(c, params);
    module_batteries::<F>(c, params, &cat);
    jordan_batteries::<F>(c, params, &cat, &eips);
    construction_batteries::<F>(c, params);
    homological_batteries::<F>(c, params, &cat);

    // reports are reproducible and cite known criteria
    c.custom("c13.cli.reproducible", &anchor(13), json!({"suite": "generic-kernel"}), Source::Definition, "identical records", || {
        let q = Params { p: F::CHAR, ..params.clone() };
        let strip = |r: crate::report::SuiteReport| -> Vec<String> {
            r.records.into_iter().map(|x| format!("{}|{}|{}|{:?}", x.claim_id, x.expected, x.computed, x.verdict)).collect()
        };
        let a = strip(crate::suites::run_suite("generic-kernel", &q).unwrap());
        let b = strip(crate::suites::run_suite("generic-kernel", &q).unwrap());
        if a == b { (Verdict::Pass, "identical records".into()) } else { (Verdict::Fail, "records differ".into()) }
    });
    let ids: Vec<(String, String)> = c.records.iter().map(|r| (r.claim_id.clone(), r.anchor.clone())).collect();
    c.custom("c13.cli.anchors", &anchor(13), json!({"records": ids.len()}), Source::Definition, "every record cites one criterion", || {
        let ok = ids.iter().all(|(id, an)| {
            let n: usize = id[1..3].parse().unwrap_or(0);
            (1..=CRITERIA.len()).contains(&n) && *an == anchor(n)
        });
        (if ok { Verdict::Pass } else { Verdict::Fail }, format!("{} records checked", ids.len()))
    });
}

fn field_batteries<F: Field>(c: &mut Checks, params: &Params) {
    battery(c, "field.semicontinuity", params, Box::new(|rng| {
        let m = random_form_matrix::<F>(rng);
        let r = ffge(&m).rank;
        let k = ResField::<F>::of_degree(rng.gen_range(1..=3));
        for _ in 0..200 {
            let (a, b) = ext_point(&k, rng);
            let rk = m.eval_ext(&k, &a, &b).rank(&k);
            ensure!(rk <= r, "rank {rk} above generic {r}");
        }
        Ok(())
    }));
    battery(c, "field.drop-locus", params, Box::new(|rng| {
        let m = random_form_matrix::<F>(rng);
        if m.is_zero() {
            return Ok(());
        }
        let res = ffge(&m);
        let locus = drop_locus(&m, res.rank, &res.minor).map_err(|e| e.to_string())?;
        for ev in &locus {
            let direct = match &ev.point {
                ClosedPoint::Infinity => m.eval(F::one(), F::zero()).rank(),
                ClosedPoint::Root { minpoly } => {
                    let k = ResField::new(minpoly);
                    m.eval_ext(&k, &k.generator(), &k.one()).rank(&k)
                }
            };
            ensure!(direct == ev.rank && direct < res.rank, "reported drop at {} not confirmed", ev.point.describe());
        }
        let k = ResField::<F>::of_degree(3);
        for _ in 0..200 {
            let (a, b) = ext_point(&k, rng);
            if !ResField::is_zero(&eval_form_ext(&k, &res.minor, &a, &b)) {
                ensure!(m.eval_ext(&k, &a, &b).rank(&k) == res.rank, "rank drop off the minor's roots");
            }
        }
        Ok(())
    }));
    battery(c, "field.gcd-factor", params, Box::new(|rng| {
        let cd = rng.gen_range(0..=3);
        let common: BinaryForm<F> = random_form(rng, cd, 1.0);
        let forms: Vec<BinaryForm<F>> = (0..3)
            .map(|_| {
                let d = rng.gen_range(0..=4);
                common.mul(&random_form(rng, d, 0.9))
            })
            .collect();
        let Ok((g, factors)) = form_gcd_factor(&forms) else { return Ok(()) };
        let prod = factors.iter().fold(BinaryForm::one(), |acc, (h, e)| (0..*e).fold(acc, |a, _| a.mul(h)));
        ensure!(prod.normalized() == g.normalized(), "factor product differs from gcd");
        for (h, _) in &factors {
            let u = h.dehomogenize();
            if u.deg() <= 8 {
                for d in 1..=u.deg() / 2 {
                    for q in Poly::<F>::monic_of_degree(d) {
                        ensure!(!q.divides(&u), "factor has a divisor of degree {d}");
                    }
                }
            }
        }
        Ok(())
    }));
    battery(c, "field.determinism", params, Box::new(|rng| {
        let m = random_form_matrix::<F>(rng);
        let (a, b) = (ffge(&m), ffge(&m.clone()));
        ensure!(a.rank == b.rank && a.minor == b.minor && a.pivot_rows == b.pivot_rows && a.pivot_cols == b.pivot_cols, "elimination differs between runs");
        Ok(())
    }));
}

fn module_batteries<F: Field>(c: &mut Checks, params: &Params, cat: &[CatalogEntry<F>]) {
    battery(c, "module.canonical", params, Box::new(|rng| {
        let m = &pick(cat, rng).module;
        let s = random_submodule(m, rng);
        let mut gens: Vec<Vec<F>> = (0..s.dim()).rev().map(|i| s.vector(i).to_vec()).collect();
        let mut v = vec![F::zero(); m.dim()];
        for i in 0..s.dim() {
            let a = F::random(rng);
            for (vj, &sj) in v.iter_mut().zip(s.vector(i)) {
                *vj += a * sj;
            }
        }
        gens.push(v);
        let t = m.submodule_generated(&gens);
        ensure!(t == s && t.basis() == s.basis(), "same span, different echelon basis");
        let u = random_submodule(m, rng);
        ensure!((u == s) == (u.basis() == s.basis()), "equality disagrees with basis identity");
        Ok(())
    }));
    battery(c, "module.sub-quotient", params, Box::new(|rng| {
        let e = pick(cat, rng);
        let s = random_submodule(&e.module, rng);
        ensure!(s.is_stable(&e.module), "{}: generated submodule not stable", e.name);
        for q in [e.module.quotient(&s), e.module.restrict(&s)] {
            ensure!(Module::new(q.x().clone(), q.y().clone(), q.grading().map(|g| g.to_vec())).is_ok(), "{}: result violates module invariants", e.name);
        }
        Ok(())
    }));
    battery(c, "module.hom-duality", params, Box::new(|rng| {
        let a = &pick(cat, rng).module;
        let b = &pick(cat, rng).module;
        let (l, r) = (hom_space(a, b).dim(), hom_space(&b.dual(), &a.dual()).dim());
        ensure!(l == r, "dim Hom {l} vs dual {r}");
        Ok(())
    }));
    battery(c, "module.fitting", params, Box::new(|rng| {
        let a = &pick(cat, rng).module;
        let b = &pick(cat, rng).module;
        let m = a.without_grading().direct_sum(&b.without_grading());
        let parts = fitting_decompose(&m);
        let mut all = Vec::new();
        for s in &parts {
            all.extend(std::iter::repeat(s.module.clone()).take(s.multiplicity));
            match endomorphism_test(&s.module, rng.gen()) {
                EndTest::Local { end_dim, radical, .. } => {
                    ensure!(end_dim - radical.len() == 1, "residue field larger than k");
                }
                EndTest::Split { .. } => return Err("summand splits".into()),
            }
        }
        ensure!(is_isomorphic(&Module::direct_sum_all(all.iter()), &m).isomorphic, "sum of summands not isomorphic to M");
        Ok(())
    }));
    battery(c, "module.twist", params, Box::new(|rng| {
        let m = &pick(cat, rng).module;
        let (g, h) = (random_gl2::<F>(rng), random_gl2::<F>(rng));
        let lhs = m.twist(&g).unwrap().twist(&h).unwrap();
        ensure!(lhs == m.twist(&g.mul(&h)).unwrap(), "twist is not functorial");
        ensure!(constancy_certificates(m).cjt == constancy_certificates(&m.twist(&g).unwrap()).cjt, "CJT changed under twist");
        Ok(())
    }));
    battery(c, "module.graded-radical", params, Box::new(|rng| {
        let e = pick(cat, rng);
        let Some(g) = e.module.grading() else { return Ok(()) };
        for j in 0..=e.module.loewy_length() {
            ensure!(e.module.radical_power(j).is_homogeneous(g), "{}: Rad^{j} not homogeneous", e.name);
        }
        Ok(())
    }));
}

fn jordan_batteries<F: Field>(c: &mut Checks, params: &Params, cat: &[CatalogEntry<F>], eips: &[CatalogEntry<F>]) {
    let p = F::CHAR as usize;
    battery(c, "jordan.points", params, Box::new(|rng| {
        let e = pick(cat, rng);
        let m = &e.module;
        let generic = generic_jordan_type(m);
        let pt = if rng.gen_bool(0.5) {
            let k = ResField::<F>::of_degree(2);
            PiPoint::Extension { modulus: k.modulus().clone(), a: k.random(rng), b: k.one() }
        } else {
            let (a, b) = *pick(&pnil_core::jordan::rational_points::<F>(), rng);
            PiPoint::closed(a, b)
        };
        let jt = jordan_type_at(m, &pt);
        ensure!((1..=p).map(|i| i * jt.a(i)).sum::<usize>() == m.dim(), "{}: Σ i a_i ≠ dim", e.name);
        let mut r = vec![m.dim()];
        r.extend(jt.ranks());
        r.push(0);
        ensure!(r.windows(3).all(|w| w[0] + w[2] >= 2 * w[1]), "{}: rank sequence not convex", e.name);
        ensure!(jt.dominated_by(&generic), "{}: point type above generic", e.name);
        Ok(())
    }));
    let mut verdicts: HashMap<usize, (bool, bool, bool, usize)> = HashMap::new();
    let all: Vec<&CatalogEntry<F>> = cat.iter().chain(eips.iter()).collect();
    battery(c, "jordan.certificates", params, Box::new(|rng| {
        let i = rng.gen_range(0..all.len());
        let e = all[i];
        let (eip, ekp, cjt, _) = *verdicts.entry(i).or_insert_with(|| {
            let r = is_eip(&e.module);
            (r.eip, is_ekp(&e.module).verdict, constancy_certificates(&e.module).cjt, r.class)
        });
        ensure!(!eip || cjt, "{}: EIP without CJT", e.name);
        if eip && ekp {
            ensure!(generic_jordan_type(&e.module) == JordanType::from_blocks(F::CHAR, &[(1, e.module.dim())]), "{}: EIP and EKP but not trivial type", e.name);
        }
        Ok(())
    }));
    battery(c, "jordan.closure", params, Box::new(|rng| {
        let e = pick(eips, rng);
        let r = is_eip(&e.module);
        ensure!(r.eip, "{} not EIP", e.name);
        let q = e.module.quotient(&random_submodule(&e.module, rng));
        if q.dim() > 0 {
            let rq = is_eip(&q);
            ensure!(rq.eip && rq.class <= r.class, "{}: quotient leaves EIP class {}", e.name, r.class);
        }
        if rng.gen_bool(0.3) {
            for s in fitting_decompose(&e.module) {
                let rs = is_eip(&s.module);
                ensure!(rs.eip && rs.class <= r.class, "{}: summand leaves EIP", e.name);
            }
        }
        Ok(())
    }));
    battery(c, "jordan.kernel-functorial", params, Box::new(|rng| {
        let m = &pick(cat, rng).module;
        let n = &pick(cat, rng).module;
        let d = rng.gen_range(1..=p);
        let phi = hom_space(m, n).random(rng);
        let (km, kn) = (generic_kernel(m, d), generic_kernel(n, d));
        ensure!((0..km.dim()).all(|r| kn.contains(&phi.mul_vec(km.vector(r)))), "φ(K_d(M)) ⊄ K_d(N)");
        Ok(())
    }));
    battery(c, "jordan.kernel-maximal", params, Box::new(|rng| {
        let m = &pick(cat, rng).module;
        let d = rng.gen_range(1..=p);
        let n = rng.gen_range(d..=d + 2);
        let w = w_module::<F>(n, d).unwrap();
        let phi = hom_space(&w, m).random(rng);
        let k = generic_kernel(m, d);
        ensure!((0..w.dim()).all(|col| k.contains(&phi.column(col))), "image of W_{{{n},{d}}} not inside K_{d}");
        Ok(())
    }));
    battery(c, "jordan.projective-free", params, Box::new(|rng| {
        let e = pick(eips, rng);
        for s in fitting_decompose(&e.module) {
            ensure!(s.module.monomial(p - 1, p - 1).is_zero(), "{} has a free summand", e.name);
        }
        Ok(())
    }));
    battery(c, "jordan.shape", params, Box::new(|rng| {
        let e = pick(eips, rng);
        let r = is_eip(&e.module);
        let jt = generic_jordan_type(&e.module);
        ensure!((1..=r.class).all(|i| jt.a(i) >= 1), "{}: {jt} has a gap below class {}", e.name, r.class);
        Ok(())
    }));
}

fn construction_batteries<F: Field>(c: &mut Checks, params: &Params) {
    let p = F::CHAR as usize;
    battery(c, "constructions.w-grading", params, Box::new(|rng| {
        let d = rng.gen_range(1..=p);
        let n = rng.gen_range(d..=d + 4);
        let w = w_module::<F>(n, d).unwrap();
        ensure!(w.support() == Some((0, d as i64 - 1)), "support of W_{{{n},{d}}}");
        let g = w.grading().unwrap();
        for i in 0..w.dim() {
            for j in 0..w.dim() {
                if !w.x().get(i, j).is_zero() || !w.y().get(i, j).is_zero() {
                    ensure!(g[i] == g[j] + 1, "X or Y not of degree 1");
                }
            }
        }
        Ok(())
    }));
    battery(c, "constructions.chain-surjection", params, Box::new(|rng| {
        let d = rng.gen_range(1..=p);
        let n = rng.gen_range(d + 1..=d + 4);
        let (w, t) = (w_module::<F>(n, d).unwrap(), w_module::<F>(n - 1, d).unwrap());
        let tg = t.generators();
        let mut images = vec![F::zero(); n * t.dim()];
        for i in 0..n - 1 {
            images[i * t.dim() + tg[i]] = F::one();
        }
        let phi = w.map_from_generator_images(&t, &images);
        ensure!(w.is_hom_to(&t, &phi) && phi.rank() == t.dim(), "W_{{{n},{d}}} -> W_{{{},{d}}} not a surjective map", n - 1);
        Ok(())
    }));
    battery(c, "constructions.kronecker", params, Box::new(|rng| {
        let n = rng.gen_range(1..=4);
        let jt = JordanType::from_blocks(F::CHAR, &[(1, 1), (2, n)]);
        let f = KroneckerRep::<F>::preinjective(n).module();
        ensure!(f.dim() == 2 * n + 1 && f.top_dim() == n + 1, "preinjective {n} dimensions");
        ensure!(generic_jordan_type(&f) == jt && constancy_certificates(&f).cjt, "preinjective {n} Jordan type");
        Ok(())
    }));
    if p >= 3 {
        let base = w_module::<F>(5, 3).unwrap();
        let soc = base.socle();
        let gamma = Submodule::from_rows_unchecked(base.dim(), &soc.basis().block(0, 0, 2, base.dim()));
        let fam = QuotientFamily::new(&base, &gamma).unwrap();
        let jt0 = generic_jordan_type(&fam.point(&Matrix::zeros(2, 1)).unwrap());
        battery(c, "constructions.family", params, Box::new(|rng| {
            let q = fam.point(&fam.random_parameter(rng)).unwrap();
            ensure!(q.dim() == 11 && generic_jordan_type(&q) == jt0, "dimension or Jordan type varies");
            ensure!(summand_count(&q) == 1, "decomposable member");
            Ok(())
        }));
        let l1 = sl2_simple::<F>(1).unwrap();
        let x = OperatorFamily::for_sl2(&l1).power(1).clone();
        let mut mods: Vec<_> = (0..p as i64).map(|l| sl2_simple::<F>(l).unwrap()).collect();
        mods.extend((0..p as i64).map(|l| sl2_baby_verma::<F>(l).unwrap()));
        battery(c, "constructions.sl2-nullcone", params, Box::new(|rng| {
            ensure!(x.mul(&x).is_zero(), "x(u,v)^2 ≠ 0");
            let m = pick(&mods, rng);
            for _ in 0..50 {
                let (u, v) = (F::random(rng), F::random(rng));
                ensure!(m.nullcone_operator(u, v).pow(p as u64).is_zero(), "ρ(x)^p ≠ 0");
            }
            Ok(())
        }));
    }
}

fn homological_batteries<F: Field>(c: &mut Checks, params: &Params, cat: &[CatalogEntry<F>]) {
    let p = F::CHAR as usize;
    battery(c, "homological.minimal", params, Box::new(|rng| {
        let e = pick(cat, rng);
        let r = resolution(&e.module, 2);
        ensure!(r.is_complex() && r.is_minimal(), "{}: not a minimal complex", e.name);
        for m in 0..r.len() {
            ensure!(r.ranks[m] == r.syzygies[m].top_dim(), "{}: cover rank ≠ dim Top", e.name);
        }
        Ok(())
    }));
    battery(c, "homological.stable-jt", params, Box::new(|rng| {
        let e = pick(cat, rng);
        let jt = generic_jordan_type(&e.module);
        let o1 = generic_jordan_type(&syzygy(&e.module, 1));
        let o2 = generic_jordan_type(&syzygy(&e.module, 2));
        ensure!(o2.stable() == jt.stable(), "{}: Ω² changes the stable type", e.name);
        ensure!((1..p).all(|i| o1.a(i) == jt.a(p - i)), "{}: a_i(ΩM) ≠ a_(p-i)(M)", e.name);
        Ok(())
    }));
    if p >= 3 {
        let low = eip_catalog::<F>(p - 2);
        battery(c, "homological.omega2-exclusion", params, Box::new(|rng| {
            let e = pick(&low, rng);
            let s = if rng.gen_bool(0.5) { 2 } else { -2 };
            ensure!(!is_eip(&syzygy(&e.module, s)).eip, "Ω^{s} {} is EIP", e.name);
            Ok(())
        }));
    }
    let mut ar_cache: HashMap<usize, Option<(bool, bool, bool)>> = HashMap::new();
    battery(c, "homological.ar-validity", params, Box::new(|rng| {
        let i = rng.gen_range(0..cat.len());
        let e = &cat[i];
        let res = *ar_cache.entry(i).or_insert_with(|| {
            if !e.module.monomial(p - 1, p - 1).is_zero() || summand_count(&e.module) != 1 {
                return None;
            }
            let s = ar_sequence(&e.module).ok()?;
            Some((s.checks.all(), is_isomorphic(&s.end, &e.module).isomorphic, is_isomorphic(&s.tau, &syzygy(&e.module, 2)).isomorphic))
        });
        if let Some((checks, end, tau)) = res {
            ensure!(checks && end && tau, "{}: invalid almost split sequence", e.name);
        }
        Ok(())
    }));
    let mut ws: Vec<Module<F>> = (p..=2 * p).map(|n| w_module::<F>(n, p).unwrap()).collect();
    if p >= 2 {
        ws.push(w_module::<F>(p - 1, p - 1).unwrap());
    }
    let mut seqs: HashMap<usize, Option<ArSequence<F>>> = HashMap::new();
    battery(c, "homological.locally-split", params, Box::new(|rng| {
        let i = rng.gen_range(0..ws.len());
        let s = seqs.entry(i).or_insert_with(|| ar_sequence(&ws[i]).ok());
        let Some(s) = s else { return Err("no almost split sequence".into()) };
        let lhs = generic_jordan_type(&s.middle);
        let rhs = generic_jordan_type(&s.end).direct_sum(&generic_jordan_type(&s.tau));
        ensure!(lhs == rhs, "Jt(E) = {lhs} but Jt(M) ⊕ Jt(τM) = {rhs}");
        Ok(())
    }));
    let mut kos: HashMap<usize, bool> = HashMap::new();
    let kmods: Vec<Module<F>> = ws.clone();
    battery(c, "homological.koszul", params, Box::new(|rng| {
        let i = rng.gen_range(0..kmods.len());
        let upto = if p <= 3 { 4 } else { 2 };
        let ok = *kos.entry(i).or_insert_with(|| resolution(&kmods[i], upto).generated_in_koszul_degrees(upto));
        ensure!(ok, "W module #{i} has generators off δ(m)");
        Ok(())
    }));
}
