use super::{w_module, KroneckerRep, QuotientFamily};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::module::{Module, Submodule};

#[derive(Clone, Debug)]
pub struct CatalogEntry<F: Field> {
    pub name: String,
    pub module: Module<F>,
}

fn entry<F: Field>(name: impl Into<String>, module: Module<F>) -> CatalogEntry<F> {
    let name = name.into();
    CatalogEntry { module: module.named(name.clone()), name }
}

fn swap<F: Field>() -> Matrix<F> {
    Matrix::from_ints(&[vec![0, 1], vec![1, 0]])
}

fn shear<F: Field>() -> Matrix<F> {
    Matrix::from_ints(&[vec![1, 1], vec![0, 1]])
}

/// Equal-images modules whose Jordan blocks have size at most `max_class`.
pub fn eip_catalog<F: Field>(max_class: usize) -> Vec<CatalogEntry<F>> {
    let p = F::CHAR as usize;
    let c = max_class.min(p);
    let mut out = Vec::new();
    for m in 1..=8 {
        out.push(entry(format!("k^{m}"), Module::<F>::trivial().power(m)));
    }
    for d in 2..=c {
        for n in d..=d + 2 {
            out.push(entry(format!("W_{{{n},{d}}}"), w_module::<F>(n, d).unwrap()));
        }
        let w = w_module::<F>(d + 1, d).unwrap();
        out.push(entry(format!("W_{{{},{d}}}^swap", d + 1), w.twist(&swap()).unwrap()));
        out.push(entry(format!("W_{{{},{d}}}^shear", d + 1), w.twist(&shear()).unwrap()));
        let wd = w_module::<F>(d, d).unwrap();
        out.push(entry(format!("W_{{{d},{d}}}+k"), wd.direct_sum(&Module::trivial())));
        // a socle quotient of W_{d+2,d}
        let base = w_module::<F>(d + 2, d).unwrap();
        let soc = base.socle();
        if soc.dim() >= 2 {
            let gamma = Submodule::from_rows_unchecked(base.dim(), &soc.basis().block(0, 0, 1, base.dim()));
            let fam = QuotientFamily::new(&base, &gamma).unwrap();
            let (r, cc) = fam.parameter_shape();
            let f = Matrix::from_fn(r, cc, |_, _| F::one());
            out.push(entry(format!("W_{{{},{d}}}/U", d + 2), fam.point(&f).unwrap()));
        }
    }
    if c >= 2 {
        out.push(entry("F(preinj 1)", KroneckerRep::<F>::preinjective(1).module()));
    }
    out
}

/// A spread of modules for property batteries: all small `W_{n,d}`,
/// Kronecker images, free and radical modules, and a few sums.
pub fn catalog<F: Field>() -> Vec<CatalogEntry<F>> {
    let p = F::CHAR as usize;
    let mut out = vec![
        entry("k", Module::<F>::trivial()),
        entry("kG", Module::<F>::regular()),
    ];
    let kg = Module::<F>::regular();
    out.push(entry("Rad kG", kg.restrict(&kg.radical())));
    out.push(entry(
        "k[x,y]/(x,y^2)",
        Module::new(Matrix::zeros(2, 2), Matrix::from_ints(&[vec![0, 0], vec![1, 0]]), Some(vec![0, 1])).unwrap(),
    ));
    for d in 1..=p {
        for n in d..=d + 1 {
            out.push(entry(format!("W_{{{n},{d}}}"), w_module::<F>(n, d).unwrap()));
        }
    }
    for n in 1..=2 {
        out.push(entry(format!("F(preinj {n})"), KroneckerRep::<F>::preinjective(n).module()));
        out.push(entry(format!("F(preproj {n})"), KroneckerRep::<F>::preprojective(n).module()));
    }
    for lambda in [F::zero(), F::one()] {
        out.push(entry(format!("F(reg 1,{})", lambda.index()), KroneckerRep::<F>::regular(1, lambda).module()));
    }
    out.push(entry("F(reg 2,0)", KroneckerRep::<F>::regular(2, F::zero()).module()));
    let w22 = w_module::<F>(2, 2).unwrap();
    out.push(entry("W_{2,2}+k", w22.direct_sum(&Module::trivial())));
    out.push(entry("W_{3,2}^shear", w_module::<F>(3, 2).unwrap().twist(&shear()).unwrap()));
    out
}
