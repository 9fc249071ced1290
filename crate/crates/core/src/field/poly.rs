use super::Field;
use std::cmp::Ordering;

/// Dense univariate polynomial, constant coefficient first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F: Field> {
    c: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { c: vec![F::one()] }
    }

    pub fn constant(a: F) -> Self {
        Self::new(vec![a])
    }

    /// The monomial `t`.
    pub fn x() -> Self {
        Poly { c: vec![F::zero(), F::one()] }
    }

    pub fn monomial(a: F, d: usize) -> Self {
        let mut c = vec![F::zero(); d + 1];
        c[d] = a;
        Self::new(c)
    }

    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).copied().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> F {
        self.c.last().copied().unwrap_or_else(F::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().unwrap();
        self.scale(inv)
    }

    pub fn scale(&self, a: F) -> Self {
        Self::new(self.c.iter().map(|&v| v * a).collect())
    }

    pub fn eval(&self, x: F) -> F {
        self.c.iter().rev().fold(F::zero(), |acc, &v| acc * x + v)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.c.iter().map(|&v| -v).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![F::zero(); k];
        c.extend_from_slice(&self.c);
        Poly { c }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let inv = d.lead().inv().unwrap();
        let mut r = self.c.clone();
        let mut q = vec![F::zero(); self.c.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = r[k + dd] * inv;
            if coef.is_zero() {
                continue;
            }
            q[k] = coef;
            for (j, &b) in d.c.iter().enumerate() {
                r[k + j] -= coef * b;
            }
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.rem(self).is_zero()
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
            let s = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lead().inv().unwrap();
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one().rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &v)| F::from_i64(i as i64) * v)
                .collect(),
        )
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        self.c
            .iter()
            .rev()
            .fold(Self::zero(), |acc, &v| acc.mul(g).add(&Self::constant(v)))
    }

    /// Deterministic total order: by degree, then coefficients from the top.
    pub fn canonical_cmp(&self, o: &Self) -> Ordering {
        self.c.len().cmp(&o.c.len()).then_with(|| {
            for i in (0..self.c.len()).rev() {
                match self.c[i].index().cmp(&o.c[i].index()) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }

    /// Enumerates monic polynomials of degree `d` in lexicographic order of
    /// `(c_{d-1}, ..., c_0)`.
    pub fn monic_of_degree(d: usize) -> impl Iterator<Item = Self> {
        let q = F::order();
        let count = q.checked_pow(d as u32).expect("enumeration too large");
        (0..count).map(move |mut code| {
            let mut c = vec![F::zero(); d + 1];
            for v in c.iter_mut().take(d) {
                *v = F::from_index(code % q);
                code /= q;
            }
            c[d] = F::one();
            Poly { c }
        })
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    type F = Fp<5>;

    fn p(v: &[i64]) -> Poly<F> {
        Poly::new(v.iter().map(|&x| F::from_i64(x)).collect())
    }

    #[test]
    fn division_identity() {
        let a = p(&[1, 2, 3, 4, 1]);
        let b = p(&[2, 0, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.deg() < 2);
    }

    #[test]
    fn bezout() {
        let a = p(&[1, 1]).mul(&p(&[2, 1]));
        let b = p(&[1, 1]).mul(&p(&[3, 0, 1]));
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
