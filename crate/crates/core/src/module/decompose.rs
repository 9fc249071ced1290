use super::{hom_space, HomSpace, Module, Submodule};
use crate::field::{factor, Field, Poly};
use crate::linalg::{Matrix, Span};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of examining `End(M)`.
#[derive(Clone, Debug)]
pub enum EndTest<F: Field> {
    /// `End(M)` is local with residue field of the given degree over `F`.
    /// `radical` spans the Jacobson radical of `End(M)`.
    Local { end_dim: usize, residue_degree: usize, radical: Vec<Matrix<F>> },
    /// `M = first ⊕ second` with both nonzero.
    Split { first: Submodule<F>, second: Submodule<F> },
}

/// Splits `M` along the primary decomposition of `f` when its
/// characteristic polynomial has two coprime factors.
fn try_split<F: Field>(m: &Module<F>, f: &Matrix<F>) -> Result<(Submodule<F>, Submodule<F>), Poly<F>> {
    let chi = f.charpoly();
    let fs = factor(&chi);
    if fs.len() == 1 {
        return Err(fs[0].0.clone());
    }
    let (g, e) = &fs[0];
    let ge = (0..*e).fold(Poly::one(), |acc, _| acc.mul(g));
    let rest = chi.exact_div(&ge);
    let first = Module::<F>::kernel_of(&f.poly_eval(&ge));
    let second = Module::<F>::kernel_of(&f.poly_eval(&rest));
    debug_assert_eq!(first.dim() + second.dim(), m.dim());
    Ok((first, second))
}

/// `a ∘ b` for endomorphisms given as matrices, in the coordinates of `end`.
fn product_coords<F: Field>(end: &HomSpace<F>, a: &Matrix<F>, b: &Matrix<F>) -> Vec<F> {
    end.coords(&a.mul(b))
}

fn is_nilpotent_family<F: Field>(n: usize, elems: &[Matrix<F>]) -> bool {
    // descending chain M ⊇ I M ⊇ I^2 M ⊇ ...
    let mut cur = Matrix::identity(n);
    for _ in 0..=n {
        if cur.rows() == 0 {
            return true;
        }
        let mut rows = Matrix::zeros(0, n);
        for e in elems {
            rows = rows.vstack(&e.mul(&cur.transpose()).transpose());
        }
        let (next, _) = rows.rref();
        if next.rows() == cur.rows() {
            return false;
        }
        cur = next;
    }
    cur.rows() == 0
}

/// Minimal polynomial of `r` acting by multiplication, with elements given
/// by coordinates modulo `span`.
fn min_poly_mod<F: Field>(end: &HomSpace<F>, ideal: &Span<F>, r: &Matrix<F>) -> Poly<F> {
    let n = end.domain_dim();
    let mut powers = Span::new(end.dim());
    let mut cur = Matrix::identity(n);
    let mut reduced: Vec<Vec<F>> = Vec::new();
    loop {
        let mut v = end.coords(&cur);
        ideal.reduce(&mut v);
        if powers.contains(&v) {
            // solve for the dependency
            let k = reduced.len();
            let a = Matrix::from_fn(end.dim(), k, |i, j| reduced[j][i]);
            let c = a.solve(&v).expect("dependent vector lies in the span");
            let mut coeffs: Vec<F> = c.into_iter().map(|x| -x).collect();
            coeffs.push(F::one());
            return Poly::new(coeffs);
        }
        powers.insert(&v);
        reduced.push(v);
        cur = cur.mul(r);
    }
}

/// Decides whether `End(M)` is local, or finds a decomposition.
pub fn endomorphism_test<F: Field>(m: &Module<F>, seed: u64) -> EndTest<F> {
    let n = m.dim();
    assert!(n > 0, "the zero module has no endomorphism test");
    let end = hom_space(m, m);
    let h = end.dim();
    let mut eig: Vec<Poly<F>> = Vec::with_capacity(h);
    for b in &end.basis {
        match try_split(m, b) {
            Ok((first, second)) => return EndTest::Split { first, second },
            Err(g) => eig.push(g),
        }
    }
    if eig.iter().all(|g| g.deg() == 1) {
        // S = span{b - λ}; S·S ⊆ S forces S = J and End/J = k.
        let nil: Vec<Matrix<F>> = end
            .basis
            .iter()
            .zip(&eig)
            .map(|(b, g)| b.sub(&Matrix::scalar(n, -g.coeff(0))))
            .collect();
        let mut s = Span::new(h);
        for x in &nil {
            s.insert(&end.coords(x));
        }
        let closed = s.dim() + 1 == h
            && nil.iter().all(|a| nil.iter().all(|b| s.contains(&product_coords(&end, a, b))));
        if closed {
            let radical = (0..s.dim()).map(|i| end.combination(s.basis().row(i))).collect();
            return EndTest::Local { end_dim: h, residue_degree: 1, radical };
        }
    } else if let Some(t) = general_local_test(m, &end, &eig, seed) {
        return t;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..400 {
        let f = if attempt % 4 == 3 && h > 0 {
            let i = attempt % h;
            let j = (attempt / 4) % h;
            end.basis[i].mul(&end.basis[j]).add(&end.random(&mut rng))
        } else {
            end.random(&mut rng)
        };
        if let Ok((first, second)) = try_split(m, &f) {
            return EndTest::Split { first, second };
        }
    }
    panic!("no splitting endomorphism found for a non-local endomorphism ring");
}

/// Locality certificate through a nilpotent ideal with field quotient.
fn general_local_test<F: Field>(m: &Module<F>, end: &HomSpace<F>, eig: &[Poly<F>], seed: u64) -> Option<EndTest<F>> {
    let n = m.dim();
    let h = end.dim();
    let q = F::order();
    let lcm_deg = eig.iter().fold(1usize, |acc, g| {
        let d = g.deg();
        let mut a = acc;
        let mut b = d;
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        acc / a * d
    });
    let mut e = lcm_deg;
    while q.checked_pow(e as u32).is_some_and(|v| v < n as u64) {
        e += lcm_deg;
    }
    let qe = q.checked_pow(e as u32)?;
    let mut gens: Vec<Matrix<F>> = end.basis.iter().map(|b| b.sub(&b.pow(qe))).collect();
    for i in 0..h {
        for j in i + 1..h {
            let (a, b) = (&end.basis[i], &end.basis[j]);
            gens.push(a.mul(b).sub(&b.mul(a)));
        }
    }
    // two-sided ideal generated by gens
    let mut ideal = Span::new(h);
    let mut members: Vec<Matrix<F>> = Vec::new();
    let mut queue = gens;
    while let Some(g) = queue.pop() {
        if ideal.insert(&end.coords(&g)) {
            for b in &end.basis {
                queue.push(b.mul(&g));
                queue.push(g.mul(b));
            }
            members.push(g);
        }
    }
    if !is_nilpotent_family(n, &members) {
        return None;
    }
    let rdim = h - ideal.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xf1e1d);
    for _ in 0..64 {
        let r = end.random(&mut rng);
        let mu = min_poly_mod(end, &ideal, &r);
        let fs = factor(&mu);
        if fs.len() == 1 && fs[0].1 == 1 && mu.deg() == rdim {
            let radical = (0..ideal.dim()).map(|i| end.combination(ideal.basis().row(i))).collect();
            return Some(EndTest::Local { end_dim: h, residue_degree: rdim, radical });
        }
        if fs.len() > 1 {
            if let Ok((first, second)) = try_split(m, &r) {
                return Some(EndTest::Split { first, second });
            }
        }
    }
    None
}

/// An indecomposable summand class.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Module<F>,
    pub multiplicity: usize,
    /// One inclusion into the decomposed module per copy.
    pub embeddings: Vec<Matrix<F>>,
    pub end_dim: usize,
    pub residue_degree: usize,
}

struct Piece<F: Field> {
    module: Module<F>,
    incl: Matrix<F>,
    end_dim: usize,
    residue_degree: usize,
}

fn split_rec<F: Field>(m: Module<F>, incl: Matrix<F>, seed: u64, out: &mut Vec<Piece<F>>) {
    if m.dim() == 0 {
        return;
    }
    match endomorphism_test(&m, seed) {
        EndTest::Local { end_dim, residue_degree, .. } => out.push(Piece { module: m, incl, end_dim, residue_degree }),
        EndTest::Split { first, second } => {
            for s in [first, second] {
                let sub = m.restrict(&s);
                let i = incl.mul(&m.inclusion(&s));
                split_rec(sub, i, seed.wrapping_add(1), out);
            }
        }
    }
}

/// Krull–Schmidt decomposition with each summand certified indecomposable.
pub fn fitting_decompose<F: Field>(m: &Module<F>) -> Vec<Summand<F>> {
    fitting_decompose_seeded(m, 0)
}

pub fn fitting_decompose_seeded<F: Field>(m: &Module<F>, seed: u64) -> Vec<Summand<F>> {
    let mut pieces = Vec::new();
    split_rec(m.clone(), Matrix::identity(m.dim()), seed, &mut pieces);
    let mut classes: Vec<Summand<F>> = Vec::new();
    'outer: for pc in pieces {
        for cl in classes.iter_mut() {
            if let Some(w) = indecomposable_iso(&pc.module, &cl.module) {
                // express the copy through the class representative
                cl.multiplicity += 1;
                cl.embeddings.push(pc.incl.mul(&w.inverse().unwrap()));
                continue 'outer;
            }
        }
        classes.push(Summand {
            module: pc.module,
            multiplicity: 1,
            embeddings: vec![pc.incl],
            end_dim: pc.end_dim,
            residue_degree: pc.residue_degree,
        });
    }
    classes
}

/// For `M` with local endomorphism ring: an isomorphism `M -> N` if one
/// exists.  Non-invertible maps form a proper subspace, so some basis
/// element of `Hom(M,N)` is invertible whenever `M ≅ N`.
fn indecomposable_iso<F: Field>(m: &Module<F>, n: &Module<F>) -> Option<Matrix<F>> {
    if m.dim() != n.dim() {
        return None;
    }
    let h = hom_space(m, n);
    h.basis.iter().find(|b| b.is_invertible()).cloned()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IsoCertificate {
    Witness,
    DimensionMismatch { left: usize, right: usize },
    HomDimensionMismatch { which: String, left: usize, right: usize },
    /// `M` is indecomposable and no basis element of `Hom(M,N)` is invertible.
    NoInvertibleOverLocal,
    /// The indecomposable summands differ.
    SummandsDiffer,
}

#[derive(Clone, Debug)]
pub struct IsoResult<F: Field> {
    pub isomorphic: bool,
    pub witness: Option<Matrix<F>>,
    pub certificate: IsoCertificate,
}

pub fn is_isomorphic<F: Field>(m: &Module<F>, n: &Module<F>) -> IsoResult<F> {
    is_isomorphic_seeded(m, n, 0)
}

/// Exact isomorphism test; the seed only affects which witness is found.
pub fn is_isomorphic_seeded<F: Field>(m: &Module<F>, n: &Module<F>, seed: u64) -> IsoResult<F> {
    let no = |c| IsoResult { isomorphic: false, witness: None, certificate: c };
    if m.dim() != n.dim() {
        return no(IsoCertificate::DimensionMismatch { left: m.dim(), right: n.dim() });
    }
    if m.dim() == 0 {
        return IsoResult { isomorphic: true, witness: Some(Matrix::zeros(0, 0)), certificate: IsoCertificate::Witness };
    }
    for (which, a, b) in [("top", m.top_dim(), n.top_dim()), ("socle", m.socle().dim(), n.socle().dim())] {
        if a != b {
            return no(IsoCertificate::HomDimensionMismatch { which: which.into(), left: a, right: b });
        }
    }
    let hmn = hom_space(m, n);
    let checks = [
        ("Hom(M,N) vs End(M)", hmn.dim(), hom_space(m, m).dim()),
        ("Hom(N,M) vs End(N)", hom_space(n, m).dim(), hom_space(n, n).dim()),
        ("End(M) vs End(N)", hom_space(m, m).dim(), hom_space(n, n).dim()),
    ];
    for (which, a, b) in checks {
        if a != b {
            return no(IsoCertificate::HomDimensionMismatch { which: which.into(), left: a, right: b });
        }
    }
    let found = |w: Matrix<F>| IsoResult { isomorphic: true, witness: Some(w), certificate: IsoCertificate::Witness };
    if let Some(b) = hmn.basis.iter().find(|b| b.is_invertible()) {
        return found(b.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..12 {
        let c = hmn.random(&mut rng);
        if c.is_invertible() {
            return found(c);
        }
    }
    let dm = fitting_decompose_seeded(m, seed);
    if dm.len() == 1 && dm[0].multiplicity == 1 {
        return no(IsoCertificate::NoInvertibleOverLocal);
    }
    let dn = fitting_decompose_seeded(n, seed);
    let mut used = vec![false; dn.len()];
    let mut w = Matrix::zeros(n.dim(), m.dim());
    for sm in &dm {
        let hit = dn.iter().enumerate().find_map(|(j, sn)| {
            if used[j] || sn.multiplicity != sm.multiplicity {
                return None;
            }
            indecomposable_iso(&sm.module, &sn.module).map(|iso| (j, iso))
        });
        let Some((j, iso)) = hit else { return no(IsoCertificate::SummandsDiffer) };
        used[j] = true;
        let sn = &dn[j];
        // w restricted to copy t of sm: incl_n[t] ∘ iso ∘ (projection onto copy t)
        for t in 0..sm.multiplicity {
            let proj = projection(m, &dm, sm, t);
            w = w.add(&sn.embeddings[t].mul(&iso).mul(&proj));
        }
    }
    if used.iter().any(|u| !u) {
        return no(IsoCertificate::SummandsDiffer);
    }
    debug_assert!(m.is_hom_to(n, &w) && w.is_invertible());
    found(w)
}

/// Projection of `M` onto copy `t` of summand class `sm`, along the others.
fn projection<F: Field>(m: &Module<F>, all: &[Summand<F>], sm: &Summand<F>, t: usize) -> Matrix<F> {
    let mut cols = Matrix::zeros(m.dim(), 0);
    let mut offset = 0;
    let mut start = 0;
    for s in all {
        for (k, e) in s.embeddings.iter().enumerate() {
            if std::ptr::eq(s, sm) && k == t {
                start = offset;
            }
            cols = cols.hstack(e);
            offset += e.cols();
        }
    }
    let inv = cols.inverse().expect("summands span the module");
    inv.block(start, 0, sm.module.dim(), m.dim())
}
