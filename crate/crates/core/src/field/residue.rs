use super::{Field, Poly};

/// The field `F[t]/(h)` for a monic irreducible `h`, chosen at run time.
/// Elements are coefficient vectors of length `deg h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResField<F: Field> {
    modulus: Poly<F>,
    d: usize,
}

impl<F: Field> ResField<F> {
    pub fn new(modulus: &Poly<F>) -> Self {
        let modulus = modulus.monic();
        let d = modulus.deg();
        assert!(d >= 1, "residue field needs a non-constant modulus");
        ResField { modulus, d }
    }

    /// The extension of degree `e` defined by the lex-least irreducible.
    pub fn of_degree(e: usize) -> Self {
        Self::new(&super::lex_least_irreducible::<F>(e))
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> Option<u64> {
        F::order().checked_pow(self.d as u32)
    }

    pub fn zero(&self) -> Vec<F> {
        vec![F::zero(); self.d]
    }

    pub fn one(&self) -> Vec<F> {
        self.constant(F::one())
    }

    pub fn constant(&self, a: F) -> Vec<F> {
        let mut v = self.zero();
        v[0] = a;
        v
    }

    /// Class of the variable `t`.
    pub fn generator(&self) -> Vec<F> {
        self.from_poly(&Poly::x())
    }

    pub fn from_poly(&self, f: &Poly<F>) -> Vec<F> {
        let r = f.rem(&self.modulus);
        let mut v = self.zero();
        for (i, &c) in r.coeffs().iter().enumerate() {
            v[i] = c;
        }
        v
    }

    pub fn to_poly(&self, a: &[F]) -> Poly<F> {
        Poly::new(a.to_vec())
    }

    pub fn is_zero(a: &[F]) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &[F], b: &[F]) -> Vec<F> {
        a.iter().zip(b).map(|(&x, &y)| x + y).collect()
    }

    pub fn sub(&self, a: &[F], b: &[F]) -> Vec<F> {
        a.iter().zip(b).map(|(&x, &y)| x - y).collect()
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = self.zero();
        self.mul_into(a, b, &mut out);
        out
    }

    fn mul_into(&self, a: &[F], b: &[F], out: &mut [F]) {
        let d = self.d;
        let mut prod = vec![F::zero(); 2 * d];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let m = self.modulus.coeffs();
        for k in (d..2 * d).rev() {
            let lead = prod[k];
            if lead.is_zero() {
                continue;
            }
            for i in 0..d {
                prod[k - d + i] -= lead * m[i];
            }
            prod[k] = F::zero();
        }
        out.copy_from_slice(&prod[..d]);
    }

    pub fn inv(&self, a: &[F]) -> Option<Vec<F>> {
        let pa = self.to_poly(a);
        if pa.is_zero() {
            return None;
        }
        let (g, s, _) = pa.ext_gcd(&self.modulus);
        debug_assert!(g.is_one());
        Some(self.from_poly(&s))
    }

    pub fn pow(&self, a: &[F], mut e: u64) -> Vec<F> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Vec<F> {
        (0..self.d).map(|_| F::random(rng)).collect()
    }

    /// Embedding of the base field.
    pub fn embed(&self, a: F) -> Vec<F> {
        self.constant(a)
    }
}

/// Dense matrix over a `ResField`, stored entry after entry.
#[derive(Clone, Debug)]
pub struct ResMatrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    d: usize,
    data: Vec<F>,
}

impl<F: Field> ResMatrix<F> {
    pub fn zeros(k: &ResField<F>, rows: usize, cols: usize) -> Self {
        ResMatrix { rows, cols, d: k.d, data: vec![F::zero(); rows * cols * k.d] }
    }

    pub fn entry(&self, i: usize, j: usize) -> &[F] {
        let o = (i * self.cols + j) * self.d;
        &self.data[o..o + self.d]
    }

    pub fn set(&mut self, i: usize, j: usize, v: &[F]) {
        let o = (i * self.cols + j) * self.d;
        self.data[o..o + self.d].copy_from_slice(v);
    }

    /// Rank by Gaussian elimination over the residue field.
    pub fn rank(mut self, k: &ResField<F>) -> usize {
        let d = self.d;
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut tmp = vec![F::zero(); d];
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let piv = (rank..rows).find(|&r| !ResField::is_zero(self.entry(r, col)));
            let Some(piv) = piv else { continue };
            if piv != rank {
                for j in 0..cols {
                    for t in 0..d {
                        self.data.swap((piv * cols + j) * d + t, (rank * cols + j) * d + t);
                    }
                }
            }
            let inv = k.inv(self.entry(rank, col)).unwrap();
            for j in col..cols {
                let v = k.mul(self.entry(rank, j), &inv);
                self.set(rank, j, &v);
            }
            for r in rank + 1..rows {
                let f = self.entry(r, col).to_vec();
                if ResField::is_zero(&f) {
                    continue;
                }
                for j in col..cols {
                    let pr = self.entry(rank, j);
                    if ResField::is_zero(pr) {
                        continue;
                    }
                    k.mul_into(pr, &f, &mut tmp);
                    let o = (r * cols + j) * d;
                    for t in 0..d {
                        self.data[o + t] -= tmp[t];
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    #[test]
    fn f9_arithmetic() {
        let k = ResField::<Fp<3>>::of_degree(2);
        let t = k.generator();
        // t^2 = -1 in F_3[t]/(t^2+1)
        assert_eq!(k.mul(&t, &t), k.constant(Fp::new(2)));
        let inv = k.inv(&t).unwrap();
        assert_eq!(k.mul(&t, &inv), k.one());
        assert_eq!(k.pow(&t, 8), k.one());
    }
}
