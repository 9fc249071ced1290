use super::{Field, Poly, ResField, ResMatrix};
use crate::linalg::Matrix;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Homogeneous form `c_0 a^d + c_1 a^{d-1} b + ... + c_d b^d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm<F: Field> {
    deg: usize,
    coeffs: Vec<F>,
}

impl<F: Field> BinaryForm<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { deg: coeffs.len() - 1, coeffs }
    }

    pub fn zero(deg: usize) -> Self {
        BinaryForm { deg, coeffs: vec![F::zero(); deg + 1] }
    }

    pub fn one() -> Self {
        BinaryForm { deg: 0, coeffs: vec![F::one()] }
    }

    pub fn a() -> Self {
        Self::new(vec![F::one(), F::zero()])
    }

    pub fn b() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `f(t, 1)` as a polynomial in `t`.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new((0..=self.deg).map(|k| self.coeffs[self.deg - k]).collect())
    }

    /// Inverse of `dehomogenize` for a chosen degree `deg >= u.deg()`.
    pub fn homogenize(u: &Poly<F>, deg: usize) -> Self {
        assert!(u.is_zero() || u.deg() <= deg);
        BinaryForm { deg, coeffs: (0..=deg).map(|i| u.coeff(deg - i)).collect() }
    }

    /// Multiplicity of `b` as a factor, i.e. of the root `[1:0]`.
    pub fn b_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut c = vec![F::zero(); self.deg + o.deg + 1];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in o.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        BinaryForm { deg: self.deg + o.deg, coeffs: c }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.deg, o.deg, "adding forms of different degree");
        BinaryForm {
            deg: self.deg,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(&x, &y)| x + y).collect(),
        }
    }

    pub fn eval(&self, a: F, b: F) -> F {
        let mut acc = F::zero();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * a.pow((self.deg - i) as u64) * b.pow(i as u64);
            }
        }
        acc
    }

    /// Normalise so that the first nonzero coefficient is one.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(&lead) => {
                let inv = lead.inv().unwrap();
                BinaryForm { deg: self.deg, coeffs: self.coeffs.iter().map(|&c| c * inv).collect() }
            }
        }
    }
}

impl<F: Field> Serialize for BinaryForm<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<u64> = self.coeffs.iter().map(|c| c.index()).collect();
        v.serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for BinaryForm<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        if v.is_empty() {
            return Err(serde::de::Error::custom("empty coefficient list"));
        }
        Ok(Self::new(v.into_iter().map(F::from_i64).collect()))
    }
}

/// Matrix of forms sharing one degree, stored dehomogenised at `b = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormMatrix<F: Field> {
    rows: usize,
    cols: usize,
    deg: usize,
    entries: Vec<Poly<F>>,
}

impl<F: Field> FormMatrix<F> {
    pub fn from_fn(rows: usize, cols: usize, deg: usize, mut f: impl FnMut(usize, usize) -> BinaryForm<F>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.degree(), deg, "entry degree mismatch");
                entries.push(e.dehomogenize());
            }
        }
        FormMatrix { rows, cols, deg, entries }
    }

    /// `sum_k a^{deg-k} b^k C_k` from coefficient matrices `C_0..C_deg`.
    pub fn from_coefficients(cs: &[Matrix<F>]) -> Self {
        assert!(!cs.is_empty());
        let deg = cs.len() - 1;
        let (rows, cols) = (cs[0].rows(), cs[0].cols());
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(Poly::new((0..=deg).map(|t| cs[deg - t].get(i, j)).collect()));
            }
        }
        FormMatrix { rows, cols, deg, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn entry(&self, i: usize, j: usize) -> BinaryForm<F> {
        BinaryForm::homogenize(&self.entries[i * self.cols + j], self.deg)
    }

    pub(crate) fn poly(&self, i: usize, j: usize) -> &Poly<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Coefficient matrix of `a^{deg-k} b^k`.
    pub fn coefficient(&self, k: usize) -> Matrix<F> {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.entries[i * self.cols + j].coeff(self.deg - k))
    }

    /// Specialisation at a point of the base field.
    pub fn eval(&self, a: F, b: F) -> Matrix<F> {
        let pa: Vec<F> = (0..=self.deg).map(|k| a.pow(k as u64)).collect();
        let pb: Vec<F> = (0..=self.deg).map(|k| b.pow(k as u64)).collect();
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            let u = &self.entries[i * self.cols + j];
            let mut acc = F::zero();
            for (k, &c) in u.coeffs().iter().enumerate() {
                acc += c * pa[k] * pb[self.deg - k];
            }
            acc
        })
    }

    /// Specialisation at `[a:b]` with coordinates in a residue field.
    pub fn eval_ext(&self, k: &ResField<F>, a: &[F], b: &[F]) -> ResMatrix<F> {
        let mut pa = vec![k.one()];
        let mut pb = vec![k.one()];
        for t in 0..self.deg {
            pa.push(k.mul(&pa[t], a));
            pb.push(k.mul(&pb[t], b));
        }
        let w: Vec<Vec<F>> = (0..=self.deg).map(|t| k.mul(&pa[t], &pb[self.deg - t])).collect();
        let mut m = ResMatrix::zeros(k, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let u = &self.entries[i * self.cols + j];
                if u.is_zero() {
                    continue;
                }
                let mut acc = k.zero();
                for (t, &c) in u.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        for (s, &wv) in w[t].iter().enumerate() {
                            acc[s] += c * wv;
                        }
                    }
                }
                m.set(i, j, &acc);
            }
        }
        m
    }

    /// Specialisation at `[t:1]` where `t` generates `k` over the base field.
    pub fn eval_root(&self, k: &ResField<F>) -> ResMatrix<F> {
        let mut m = ResMatrix::zeros(k, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let u = &self.entries[i * self.cols + j];
                if !u.is_zero() {
                    m.set(i, j, &k.from_poly(u));
                }
            }
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut entries = vec![Poly::zero(); self.rows * o.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self.entries[i * self.cols + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.entries[l * o.cols + j];
                    if !b.is_zero() {
                        let e = &mut entries[i * o.cols + j];
                        *e = e.add(&a.mul(b));
                    }
                }
            }
        }
        FormMatrix { rows: self.rows, cols: o.cols, deg: self.deg + o.deg, entries }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.entries[i * self.cols + j].clone());
            }
        }
        FormMatrix { rows: rows.len(), cols: cols.len(), deg: self.deg, entries }
    }
}

#[derive(Serialize, Deserialize)]
struct FormMatrixJson {
    p: u32,
    deg: usize,
    entries: Vec<Vec<Vec<i64>>>,
}

impl<F: Field> Serialize for FormMatrix<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.entry(i, j).coeffs().iter().map(|c| c.index() as i64).collect())
                    .collect()
            })
            .collect();
        FormMatrixJson { p: F::CHAR, deg: self.deg, entries }.serialize(s)
    }
}

impl<'de, F: Field> Deserialize<'de> for FormMatrix<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = FormMatrixJson::deserialize(d)?;
        if j.p != F::CHAR {
            return Err(D::Error::custom(format!("field p: expected {}, found {}", F::CHAR, j.p)));
        }
        let rows = j.entries.len();
        let cols = j.entries.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, row) in j.entries.iter().enumerate() {
            if row.len() != cols {
                return Err(D::Error::custom(format!("field entries: row {i} has wrong length")));
            }
            for e in row {
                if e.len() != j.deg + 1 {
                    return Err(D::Error::custom(format!("field entries: row {i} has an entry of wrong degree")));
                }
                let f = BinaryForm::new(e.iter().map(|&c| F::from_i64(c)).collect());
                entries.push(f.dehomogenize());
            }
        }
        Ok(FormMatrix { rows, cols, deg: j.deg, entries })
    }
}
