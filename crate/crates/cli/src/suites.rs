use crate::properties;
use crate::report::{Checks, Source, SuiteReport, Verdict};
use pnil_core::constructions::{
    catalog, eip_catalog, sl2_baby_verma, sl2_simple, sl2_trivial, w_module, KroneckerRep, QuotientFamily,
};
use pnil_core::field::{Field, ResField};
use pnil_core::homological::{ar_sequence, component_slice, ext, graded_presentation, resolution, syzygy};
use pnil_core::jordan::{
    constancy_certificates, family_jordan_type_at, generic_jordan_type, generic_kernel, is_eip, is_ekp,
    sl2_generic_jordan_type, sl2_is_eip, JordanType, OperatorFamily, PiPoint,
};
use pnil_core::linalg::Matrix;
use pnil_core::module::{fitting_decompose, is_isomorphic};
use pnil_core::{Module, Sl2Module, Submodule, F3, F5, F7};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub const SUITES: [&str; 8] =
    ["w-jordan", "generic-kernel", "heller", "families", "kronecker", "sl2", "ar-components", "properties"];

/// Short titles of the acceptance criteria, indexed from 1.
pub const CRITERIA: [&str; 13] = [
    "Jordan types and EIP class of W_{n,d}",
    "W_{d,d} is a radical power of kG",
    "generic kernels of kG and k[x,y]/(x,y^2)",
    "Heller shifts of W modules",
    "socle quotient families of W_{5,3}",
    "Kronecker trichotomy",
    "EIP is destroyed by even Heller shifts",
    "growth of even Ext groups",
    "windows of AR components",
    "sl(2) lab",
    "GL2 twists of W_{n,d}",
    "generation degrees of graded resolutions",
    "property batteries",
];

pub fn anchor(criterion: usize) -> String {
    format!("criterion {criterion}: {}", CRITERIA[criterion - 1])
}

#[derive(Clone, Debug)]
pub struct Params {
    pub p: u32,
    pub seed: u64,
    /// Largest extension degree used by closed-point scans.
    pub ext_degree: usize,
    /// Override for the largest `n` in the `w-jordan` table.
    pub n_max: Option<usize>,
    /// Random instances per property in the `properties` suite.
    pub cases: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params { p: 3, seed: 0, ext_degree: 3, n_max: None, cases: 100 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (expected one of {list})", list = SUITES.join(", "))]
    Unknown(String),
    #[error("malformed parameters: {0}")]
    Malformed(String),
}

pub fn run_suite(name: &str, params: &Params) -> Result<SuiteReport, SuiteError> {
    if !SUITES.contains(&name) {
        return Err(SuiteError::Unknown(name.to_string()));
    }
    if !(1..=4).contains(&params.ext_degree) {
        return Err(SuiteError::Malformed(format!("ext degree {} outside 1..=4", params.ext_degree)));
    }
    if params.cases == 0 {
        return Err(SuiteError::Malformed("cases must be positive".into()));
    }
    let records = match params.p {
        3 => run_in::<F3>(name, params),
        5 => run_in::<F5>(name, params),
        7 => run_in::<F7>(name, params),
        p => return Err(SuiteError::Malformed(format!("p = {p} is not supported by the suites (use 3, 5 or 7)"))),
    };
    Ok(SuiteReport::new(name, params.p, params.seed, params.ext_degree, records))
}

fn run_in<F: Field>(name: &str, params: &Params) -> Vec<crate::report::Record> {
    let mut c = Checks::default();
    match name {
        "w-jordan" => w_jordan::<F>(&mut c, params),
        "generic-kernel" => generic_kernel_suite::<F>(&mut c),
        "heller" => heller::<F>(&mut c),
        "families" => families::<F>(&mut c, params),
        "kronecker" => kronecker::<F>(&mut c),
        "sl2" => sl2::<F>(&mut c),
        "ar-components" => ar_components::<F>(&mut c),
        "properties" => properties::run::<F>(&mut c, params),
        _ => unreachable!(),
    }
    c.records
}

fn w<F: Field>(n: usize, d: usize) -> Module<F> {
    w_module::<F>(n, d).expect("valid W parameters")
}

fn iso<F: Field>(a: &Module<F>, b: &Module<F>) -> String {
    if is_isomorphic(a, b).isomorphic { "isomorphic".into() } else { "not isomorphic".into() }
}

fn yes(b: bool) -> &'static str {
    if b { "true" } else { "false" }
}

/// `⊕_{i<d} [i] ⊕ (n-d+1)[d]`.
fn w_jordan_type(p: u32, n: usize, d: usize) -> JordanType {
    let mut blocks: Vec<(usize, usize)> = (1..d).map(|i| (i, 1)).collect();
    blocks.push((d, n - d + 1));
    JordanType::from_blocks(p, &blocks)
}

/// Jordan types at every point of `P^1(F_{p^e})`, `e <= max_e`.  Degree one
/// uses powers of `aX + bY` directly.
fn scan_jordan_types<F: Field>(m: &Module<F>, max_e: usize) -> Vec<(String, JordanType)> {
    let p = F::CHAR;
    let mut out = Vec::new();
    for (a, b) in pnil_core::jordan::rational_points::<F>() {
        let t = m.x().scale(a).add(&m.y().scale(b));
        let mut cur = Matrix::identity(m.dim());
        let ranks: Vec<usize> = (1..p)
            .map(|_| {
                cur = cur.mul(&t);
                cur.rank()
            })
            .collect();
        out.push((format!("[{}:{}]", a.index(), b.index()), JordanType::from_ranks(p, m.dim(), &ranks)));
    }
    let fam = OperatorFamily::for_module(m);
    for e in 2..=max_e {
        let k = ResField::<F>::of_degree(e);
        let q = k.order().expect("small extension");
        for idx in 0..q {
            let mut a = k.zero();
            let mut r = idx;
            for c in a.iter_mut() {
                *c = F::from_index(r % F::order());
                r /= F::order();
            }
            let ranks = fam.ranks_at_ext(&k, &a, &k.one());
            out.push((format!("e{e}#{idx}"), JordanType::from_ranks(p, m.dim(), &ranks)));
        }
    }
    out
}

fn w_jordan<F: Field>(c: &mut Checks, params: &Params) {
    let p = F::CHAR as usize;
    let an = anchor(1);
    for d in 2..=p {
        let n_hi = params.n_max.unwrap_or(d + 4);
        for n in d..=n_hi {
            let m = w::<F>(n, d);
            let jt = w_jordan_type(F::CHAR, n, d);
            let id = format!("c01.w-jordan.d{d}.n{n:02}");
            let inputs = json!({"n": n, "d": d});
            c.eq(format!("{id}.certified"), &an, inputs.clone(), Source::Formula, format!("{jt}; constant"), || {
                let rep = constancy_certificates(&m);
                format!("{}; {}", rep.generic_jordan_type, if rep.cjt { "constant" } else { "not constant" })
            });
            c.custom(format!("{id}.scan"), &an, json!({"n": n, "d": d, "e": params.ext_degree}), Source::Formula, jt.to_string(), || {
                let pts = scan_jordan_types(&m, params.ext_degree);
                match pts.iter().find(|(_, j)| *j != jt) {
                    None => (Verdict::Pass, format!("{jt} at all {} points", pts.len())),
                    Some((pt, j)) => (Verdict::Fail, format!("{j} at {pt}")),
                }
            });
            c.eq(format!("{id}.eip"), &an, inputs, Source::Formula, format!("eip, class {d}"), || {
                let r = is_eip(&m);
                format!("{}, class {}", if r.eip { "eip" } else { "not eip" }, r.class)
            });
        }
    }
}

fn generic_kernel_suite<F: Field>(c: &mut Checks) {
    let p = F::CHAR as usize;
    let kg = Module::<F>::regular();
    for d in 1..=p {
        let rad = kg.radical_power(2 * p - d - 1);
        c.eq(format!("c02.radical.d{d}"), &anchor(2), json!({"d": d, "radical_power": 2 * p - d - 1}), Source::Formula, "isomorphic", || {
            iso(&w::<F>(d, d), &kg.restrict(&rad))
        });
        c.eq(format!("c03.kG.d{d}"), &anchor(3), json!({"d": d}), Source::Formula, format!("equal, dim {}", rad.dim()), || {
            let k = generic_kernel(&kg, d);
            format!("{}, dim {}", if k == rad { "equal" } else { "different" }, k.dim())
        });
    }
    let m = Module::<F>::new(Matrix::zeros(2, 2), Matrix::from_ints(&[vec![0, 0], vec![1, 0]]), None).unwrap();
    for d in 1..=p {
        c.eq(format!("c03.kxy2.d{d}"), &anchor(3), json!({"module": "k[x,y]/(x,y^2)", "d": d}), Source::Definition, "socle, dim 1", || {
            let k = generic_kernel(&m, d);
            format!("{}, dim {}", if k == m.socle() { "socle" } else { "not socle" }, k.dim())
        });
    }
}

fn heller<F: Field>(c: &mut Checks) {
    let p = F::CHAR as usize;
    let an4 = anchor(4);
    for n in p..=p + 2 {
        c.eq(format!("c04.omega2.w{n}p"), &an4, json!({"n": n, "d": p}), Source::Formula, "isomorphic", || {
            iso(&syzygy(&w::<F>(n, p), 2), &w::<F>(n + p, p))
        });
    }
    c.eq("c04.omega2.wp1p1", &an4, json!({"n": p - 1, "d": p - 1}), Source::Formula, "isomorphic", || {
        iso(&syzygy(&w::<F>(p - 1, p - 1), 2), &w::<F>(2 * p - 1, p))
    });
    for n in p..=p + 1 {
        let expected = format!("not eip, support [{}, {}]", p, 3 * p - 3);
        c.eq(format!("c04.omega2.w{n}pm1"), &an4, json!({"n": n, "d": p - 1}), Source::Formula, expected, || {
            let m = syzygy(&w::<F>(n, p - 1), 2);
            let (lo, hi) = m.support().unwrap_or((0, -1));
            format!("{}, support [{lo}, {hi}]", if is_eip(&m).eip { "eip" } else { "not eip" })
        });
        c.eq(format!("c04.presentation.w{n}pm1"), &an4, json!({"n": n, "d": p - 1}), Source::Oracle, "isomorphic", || {
            let g = graded_presentation::<F>(n, p - 1).expect("valid parameters");
            iso(&g.omega2, &syzygy(&w::<F>(n, p - 1), 2))
        });
    }
    for d in 2..=p {
        for n in d..=d + 2 {
            let mut blocks: Vec<(usize, usize)> = (1..d).map(|i| (i, 1)).collect();
            if d < p {
                blocks.push((d, n - d + 1));
                blocks.push((p, (n - d + 1) * p));
            } else {
                blocks.push((p, n + 1));
            }
            let jt = JordanType::from_blocks(F::CHAR, &blocks);
            c.eq(format!("c04.jt.d{d}.n{n:02}"), &an4, json!({"n": n, "d": d}), Source::Formula, jt.to_string(), || {
                generic_jordan_type(&syzygy(&w::<F>(n, d), 2)).to_string()
            });
        }
    }

    let an7 = anchor(7);
    if p >= 3 {
        let cat = eip_catalog::<F>(p - 2);
        c.custom("c07.catalog-size", &an7, json!({"max_class": p - 2}), Source::Definition, ">= 8 modules", || {
            let v = if cat.len() >= 8 { Verdict::Pass } else { Verdict::Fail };
            (v, format!("{} modules", cat.len()))
        });
        for e in &cat {
            for s in [2i64, -2] {
                c.eq(format!("c07.exclusion.{}.omega{s:+}", e.name), &an7, json!({"module": e.name, "shift": s}), Source::Formula, "eip false", || {
                    format!("eip {}", yes(is_eip(&syzygy(&e.module, s)).eip))
                });
            }
        }
    }
    if p >= 5 {
        for e in eip_catalog::<F>(2).iter().filter(|e| is_eip(&e.module).class == 2) {
            for s in [-4i64, -2, 2, 4] {
                c.eq(format!("c07.class2.{}.omega{s:+}", e.name), &an7, json!({"module": e.name, "shift": s}), Source::Formula, "eip false", || {
                    format!("eip {}", yes(is_eip(&syzygy(&e.module, s)).eip))
                });
            }
        }
    }
    for e in catalog::<F>() {
        let st = generic_jordan_type(&e.module).stable().to_vec();
        c.eq(format!("c07.stable.{}", e.name), &an7, json!({"module": e.name}), Source::Oracle, format!("{st:?} {st:?}"), || {
            let a = generic_jordan_type(&syzygy(&e.module, 2)).stable().to_vec();
            let b = generic_jordan_type(&syzygy(&e.module, -2)).stable().to_vec();
            format!("{a:?} {b:?}")
        });
    }

    let an8 = anchor(8);
    let mods: Vec<(&str, Module<F>)> =
        vec![("k", Module::trivial()), ("W_{3,2}", w::<F>(3, 2)), ("W_{3,3}", w::<F>(3, 3))];
    for (name, m) in &mods {
        for n in 1..=3usize {
            c.custom(format!("c08.ext.{name}.deg{}", 2 * n), &an8, json!({"module": name, "degree": 2 * n}), Source::Formula, format!(">= {}", n + 1), || {
                let d = ext(m, m, 2 * n).dim();
                (if d > n { Verdict::Pass } else { Verdict::Fail }, d.to_string())
            });
        }
    }

    let an12 = anchor(12);
    for (name, m) in [(format!("W_{{{p},{p}}}"), w::<F>(p, p)), (format!("W_{{{},{}}}", p - 1, p - 1), w::<F>(p - 1, p - 1))] {
        c.custom(format!("c12.koszul.{name}"), &an12, json!({"module": name, "upto": 4}), Source::Formula, "generated in degree δ(m), m <= 4", || {
            let r = resolution(&m, 4);
            let ok = r.is_complex() && r.is_minimal() && r.generated_in_koszul_degrees(4);
            (if ok { Verdict::Pass } else { Verdict::Fail }, format!("degrees {:?}", r.degrees.iter().map(|d| d.first().copied()).collect::<Vec<_>>()))
        });
    }
}

fn families<F: Field>(c: &mut Checks, params: &Params) {
    let an = anchor(5);
    let base = w::<F>(5, 3);
    let soc = base.socle();
    let gamma = Submodule::from_rows_unchecked(base.dim(), &soc.basis().block(0, 0, 2, base.dim()));
    let fam = QuotientFamily::new(&base, &gamma).expect("Γ lies in the socle");
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let expected_jt = JordanType::from_blocks(F::CHAR, &[(1, 1), (2, 2), (3, 2)]);
    for s in 0..20 {
        let f = fam.random_parameter(&mut rng);
        let inputs = json!({"sample": s, "f": f.to_ints()});
        c.eq(format!("c05.sample{s:02}"), &an, inputs, Source::Formula, format!("indecomposable, {expected_jt}"), || {
            let q = fam.point(&f).unwrap();
            let parts = fitting_decompose(&q);
            let count: usize = parts.iter().map(|s| s.multiplicity).sum();
            format!("{}, {}", if count == 1 { "indecomposable" } else { "decomposable" }, generic_jordan_type(&q))
        });
    }
    for s in 0..10 {
        let f = fam.random_parameter(&mut rng);
        let g = loop {
            let g = fam.random_parameter(&mut rng);
            if g != f {
                break g;
            }
        };
        c.eq(format!("c05.pair{s:02}"), &an, json!({"f": f.to_ints(), "g": g.to_ints()}), Source::Formula, "not isomorphic", || {
            iso(&fam.point(&f).unwrap(), &fam.point(&g).unwrap())
        });
    }

    let an11 = anchor(11);
    for (n, d) in [(3, 2), (3, 3), (5, 3)] {
        let m = w::<F>(n, d);
        for s in 0..10 {
            let g = loop {
                let g = Matrix::<F>::from_fn(2, 2, |_, _| F::random(&mut rng));
                if g.is_invertible() {
                    break g;
                }
            };
            c.eq(format!("c11.gl2.w{n}{d}.g{s:02}"), &an11, json!({"n": n, "d": d, "g": g.to_ints()}), Source::Formula, "isomorphic", || {
                iso(&m.twist(&g).unwrap(), &m)
            });
        }
    }
}

fn kronecker<F: Field>(c: &mut Checks) {
    let an = anchor(6);
    for n in 1..=3usize {
        let f = KroneckerRep::<F>::preinjective(n).module();
        c.eq(format!("c06.preinj{n}"), &an, json!({"kind": "preinjective", "n": n}), Source::Formula, "eip true, ≅ W", || {
            let ok = is_isomorphic(&f, &w::<F>(n + 1, 2)).isomorphic;
            format!("eip {}, {}", yes(is_eip(&f).eip), if ok { "≅ W" } else { "≇ W" })
        });
        let g = KroneckerRep::<F>::preprojective(n).module();
        let jt = JordanType::from_blocks(F::CHAR, &[(1, 1), (2, n)]);
        c.eq(format!("c06.preproj{n}"), &an, json!({"kind": "preprojective", "n": n}), Source::Formula, format!("cjt {jt}, ekp true, eip false"), || {
            let rep = constancy_certificates(&g);
            let cj = if rep.cjt { rep.generic_jordan_type.to_string() } else { "none".into() };
            format!("cjt {cj}, ekp {}, eip {}", yes(is_ekp(&g).verdict), yes(is_eip(&g).eip))
        });
        for l in 0..3u64 {
            let r = KroneckerRep::<F>::regular(n, F::from_index(l)).module();
            c.eq(format!("c06.regular{n}.l{l}"), &an, json!({"kind": "regular", "n": n, "lambda": l}), Source::Formula, "2-rank constant true, 1-rank constant false", || {
                let rep = constancy_certificates(&r);
                let two = F::CHAR < 3 || rep.constant_rank(2);
                format!("2-rank constant {}, 1-rank constant {}", yes(two), yes(rep.constant_rank(1)))
            });
        }
    }
}

fn is_trivial_sum<F: Field>(m: &Sl2Module<F>) -> bool {
    m.e().is_zero() && m.f().is_zero() && m.h().is_zero()
}

/// Jordan type of `e` on `Z(λ)` from `e v_i = i(λ-i+1) v_{i-1}`: the chain
/// breaks wherever the coefficient vanishes mod p.
fn verma_e_jordan_type(p: u32, lambda: i64) -> JordanType {
    let mut blocks = Vec::new();
    let mut len = 1;
    for i in 1..p as i64 {
        if (i * (lambda - i + 1)).rem_euclid(p as i64) == 0 {
            blocks.push((len, 1));
            len = 1;
        } else {
            len += 1;
        }
    }
    blocks.push((len, 1));
    JordanType::from_blocks(p, &blocks)
}

fn sl2<F: Field>(c: &mut Checks) {
    let an = anchor(10);
    let p = F::CHAR as i64;
    for l in 0..p {
        let m = sl2_simple::<F>(l).unwrap();
        c.eq(format!("c10.simple{l}"), &an, json!({"lambda": l}), Source::Formula, format!("[{}] over the nullcone", l + 1), || {
            let (jt, cert) = sl2_generic_jordan_type(&m);
            if cert.verdict && cert.domain.contains("nullcone") {
                format!("{jt} over the nullcone")
            } else {
                format!("{jt}, not certified constant")
            }
        });
    }
    let z = sl2_baby_verma::<F>(0).unwrap();
    let fam = OperatorFamily::for_sl2(&z);
    let e_dir = PiPoint::closed(F::one(), F::zero());
    let f_dir = PiPoint::closed(F::zero(), F::one());
    let ef = format!("cjt false, e {}, f [{p}]", verma_e_jordan_type(F::CHAR, 0));
    c.eq("c10.verma0", &an, json!({"lambda": 0}), Source::Oracle, ef, || {
        format!(
            "cjt {}, e {}, f {}",
            yes(sl2_generic_jordan_type(&z).1.verdict),
            family_jordan_type_at(&fam, &e_dir),
            family_jordan_type_at(&fam, &f_dir)
        )
    });
    let mut lab: Vec<Sl2Module<F>> = Vec::new();
    lab.extend((0..p).map(|l| sl2_simple::<F>(l).unwrap()));
    lab.extend((0..p).map(|l| sl2_baby_verma::<F>(l).unwrap()));
    let k = sl2_trivial::<F>();
    lab.push(k.direct_sum(&k).named("k^2"));
    lab.push(k.direct_sum(&k).direct_sum(&k).named("k^3"));
    lab.push(k.direct_sum(&sl2_simple::<F>(1).unwrap()).named("k+L(1)"));
    lab.push(sl2_simple::<F>(1).unwrap().direct_sum(&sl2_simple::<F>(1).unwrap()).named("L(1)^2"));
    for m in &lab {
        let name = m.name().unwrap_or("?").to_string();
        let exp = yes(is_trivial_sum(m));
        c.eq(format!("c10.eip.{name}"), &an, json!({"module": name}), Source::Definition, format!("eip {exp}"), || {
            format!("eip {}", yes(sl2_is_eip(m).eip))
        });
    }
}

fn ar_components<F: Field>(c: &mut Checks) {
    let an = anchor(9);
    let p = F::CHAR as usize;
    let wpp = w::<F>(p, p);
    match component_slice(&wpp, 2, 3) {
        Ok(s) => {
            for m in 0..=2i64 {
                let n = p + p * m as usize;
                c.eq(format!("c09.wpp.bottom.m{m}"), &an, json!({"tau_power": m}), Source::Formula, "≅ W, eip true", || {
                    let ok = is_isomorphic(s.module(m, 1).unwrap(), &w::<F>(n, p)).isomorphic;
                    format!("{}, eip {}", if ok { "≅ W" } else { "≇ W" }, yes(s.vertex(m, 1).unwrap().eip))
                });
            }
            let wing = s.wing(0, 3);
            c.custom("c09.wpp.wing", &an, json!({"width": 2, "height": 3}), Source::Formula, "all eip", || {
                let bad: Vec<&str> = wing.iter().filter(|&&i| !s.vertices[i].eip).map(|&i| s.vertices[i].label.as_str()).collect();
                if bad.is_empty() {
                    (Verdict::Pass, format!("{} vertices eip", wing.len()))
                } else {
                    (Verdict::Fail, format!("not eip: {}", bad.join(", ")))
                }
            });
        }
        Err(e) => c.custom("c09.wpp.slice", &an, json!({}), Source::Formula, "slice", || (Verdict::Fail, e.to_string())),
    }
    for (name, m, width, height) in [("W_{3,2}", w::<F>(3, 2), 2i64, 2usize), ("k", Module::<F>::trivial(), 2, 2)] {
        c.custom(format!("c09.eip-vertices.{name}"), &an, json!({"module": name, "width": width, "height": height}), Source::Formula, format!("{{{name}}}"), || {
            match component_slice(&m, width, height) {
                Ok(s) => {
                    let labels: Vec<String> = s.eip_vertices().iter().map(|&i| s.vertices[i].label.clone()).collect();
                    let ok = s.eip_vertices() == vec![s.index(0, 1).unwrap()];
                    (if ok { Verdict::Pass } else { Verdict::Fail }, format!("{{{}}}", labels.join(", ")))
                }
                Err(e) => (Verdict::Fail, e.to_string()),
            }
        });
    }
    c.eq("c09.middle.wpp", &an, json!({"module": format!("W_{{{p},{p}}}")}), Source::Formula, "exact, non-split, eip true", || {
        match ar_sequence(&wpp) {
            Ok(s) => format!("{}, eip {}", if s.checks.all() { "exact, non-split" } else { "checks failed" }, yes(is_eip(&s.middle).eip)),
            Err(e) => e.to_string(),
        }
    });
    c.custom("c09.window-coincidence", &an, json!({"n": [p, 2 * p - 1], "window": coincidence_window(p)}), Source::Formula, "two components Θ(W_{n,p}), p <= n < 2p, coincide", || {
        window_coincidence::<F>()
    });
}

/// Search window `(width, height)` for the coincidence search; slices grow
/// quickly with p.
fn coincidence_window(p: usize) -> (i64, usize) {
    if p <= 3 { (2, 3) } else { (1, 2) }
}

/// Looks for a module shared by the windows of `Θ(W_{n,p})`, `p <= n < 2p`.
fn window_coincidence<F: Field>() -> (Verdict, String) {
    let p = F::CHAR as usize;
    let (width, height) = coincidence_window(p);
    let mut slices = Vec::new();
    for n in p..2 * p {
        match component_slice(&w::<F>(n, p), width, height) {
            Ok(s) => slices.push((n, s)),
            Err(e) => return (Verdict::InconclusiveWindow, format!("no window for W_{{{n},{p}}}: {e}")),
        }
    }
    for i in 0..slices.len() {
        for j in i + 1..slices.len() {
            let (a, sa) = &slices[i];
            let (b, sb) = &slices[j];
            for (u, mu) in sa.modules.iter().enumerate() {
                for (v, mv) in sb.modules.iter().enumerate() {
                    if mu.dim() == mv.dim() && is_isomorphic(mu, mv).isomorphic {
                        return (
                            Verdict::Pass,
                            format!("W_{{{a},{p}}} window {} ≅ W_{{{b},{p}}} window {}", sa.vertices[u].label, sb.vertices[v].label),
                        );
                    }
                }
            }
        }
    }
    (Verdict::InconclusiveWindow, format!("no shared vertex within width {width}, height {height}"))
}
