use num_traits::{One, Zero};
use super::Field;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

const MAXE: usize = 32;

/// The field of order `P^E`, realised as `F_P[t]/(m)` where `m` is the
/// lexicographically least monic irreducible of degree `E`.  Polynomials are
/// ordered by their coefficient vectors read from `t^{E-1}` down to `t^0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf<const P: u32, const E: usize>([u16; E]);

const fn rem_is_zero(f: &[u32; MAXE + 1], e: usize, g: &[u32; MAXE + 1], k: usize, p: u32) -> bool {
    // f and g are monic of degrees e and k; coefficient i is stored at index i.
    let mut r = *f;
    let mut d = e;
    loop {
        if d < k {
            break;
        }
        let lead = r[d];
        if lead != 0 {
            let mut i = 0;
            while i <= k {
                let idx = d - k + i;
                r[idx] = (r[idx] + p - (lead * g[i]) % p) % p;
                i += 1;
            }
        }
        if d == 0 {
            break;
        }
        d -= 1;
    }
    let mut i = 0;
    while i < k {
        if r[i] != 0 {
            return false;
        }
        i += 1;
    }
    true
}

const fn digits(mut code: u64, p: u32, len: usize) -> [u32; MAXE + 1] {
    let mut out = [0u32; MAXE + 1];
    let mut i = 0;
    while i < len {
        out[i] = (code % p as u64) as u32;
        code /= p as u64;
        i += 1;
    }
    out
}

const fn const_irreducible(f: &[u32; MAXE + 1], e: usize, p: u32) -> bool {
    let mut k = 1;
    while 2 * k <= e {
        let count = (p as u64).pow(k as u32);
        let mut c = 0;
        while c < count {
            let mut g = digits(c, p, k);
            g[k] = 1;
            if rem_is_zero(f, e, &g, k, p) {
                return false;
            }
            c += 1;
        }
        k += 1;
    }
    true
}

/// Lower coefficients of the lexicographically least monic irreducible.
const fn least_irreducible(p: u32, e: usize) -> [u32; MAXE + 1] {
    let count = (p as u64).pow(e as u32);
    let mut code = 0;
    while code < count {
        // lexicographic on (c_{e-1}, ..., c_0) equals numeric order of code
        // when c_{e-1} is the most significant digit
        let mut f = digits(code, p, e);
        f[e] = 1;
        if const_irreducible(&f, e, p) {
            return f;
        }
        code += 1;
    }
    panic!("no irreducible polynomial found")
}

impl<const P: u32, const E: usize> Gf<P, E> {
    const MODULUS: [u32; MAXE + 1] = {
        assert!(E >= 1 && E <= MAXE && P >= 2 && P < 256);
        least_irreducible(P, E)
    };

    /// Coefficients of the defining polynomial, constant term first, monic.
    pub fn modulus() -> Vec<u32> {
        Self::MODULUS[..=E].to_vec()
    }

    pub fn from_coeffs(c: [u16; E]) -> Self {
        let mut out = c;
        for v in out.iter_mut() {
            *v %= P as u16;
        }
        Gf(out)
    }

    pub fn coeffs(self) -> [u16; E] {
        self.0
    }

    /// The class of `t`.
    pub fn generator() -> Self {
        if E == 1 {
            // t is congruent to minus the constant term
            return Self::from_index(((P - Self::MODULUS[0]) % P) as u64);
        }
        let mut c = [0u16; E];
        c[1] = 1;
        Gf(c)
    }
}

impl<const P: u32, const E: usize> fmt::Debug for Gf<P, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

impl<const P: u32, const E: usize> Zero for Gf<P, E> {
    fn zero() -> Self {
        Gf([0; E])
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl<const P: u32, const E: usize> One for Gf<P, E> {
    fn one() -> Self {
        let mut c = [0; E];
        c[0] = 1;
        Gf(c)
    }
}

impl<const P: u32, const E: usize> Add for Gf<P, E> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut c = self.0;
        for i in 0..E {
            c[i] = ((c[i] as u32 + o.0[i] as u32) % P) as u16;
        }
        Gf(c)
    }
}

impl<const P: u32, const E: usize> Sub for Gf<P, E> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let mut c = self.0;
        for i in 0..E {
            c[i] = ((c[i] as u32 + P - o.0[i] as u32) % P) as u16;
        }
        Gf(c)
    }
}

impl<const P: u32, const E: usize> Neg for Gf<P, E> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::zero() - self
    }
}

impl<const P: u32, const E: usize> Mul for Gf<P, E> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let m = &Self::MODULUS;
        let mut prod = [0u32; 2 * MAXE];
        for i in 0..E {
            let a = self.0[i] as u32;
            if a == 0 {
                continue;
            }
            for j in 0..E {
                prod[i + j] = (prod[i + j] + a * o.0[j] as u32) % P;
            }
        }
        for d in (E..2 * E - 1).rev() {
            let lead = prod[d];
            if lead == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..E {
                let idx = d - E + i;
                prod[idx] = (prod[idx] + (P - lead) * m[i]) % P;
            }
        }
        let mut c = [0u16; E];
        for i in 0..E {
            c[i] = prod[i] as u16;
        }
        Gf(c)
    }
}

impl<const P: u32, const E: usize> AddAssign for Gf<P, E> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u32, const E: usize> SubAssign for Gf<P, E> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const P: u32, const E: usize> MulAssign for Gf<P, E> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u32, const E: usize> Field for Gf<P, E> {
    const CHAR: u32 = P;
    const DEGREE: u32 = E as u32;

    fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(Self::order() - 2))
        }
    }

    fn from_index(mut i: u64) -> Self {
        let mut c = [0u16; E];
        for v in c.iter_mut() {
            *v = (i % P as u64) as u16;
            i /= P as u64;
        }
        Gf(c)
    }

    fn index(self) -> u64 {
        self.0
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * P as u64 + c as u64)
    }
}

impl<const P: u32, const E: usize> From<super::Fp<P>> for Gf<P, E> {
    fn from(a: super::Fp<P>) -> Self {
        Self::from_index(a.value() as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn least_irreducibles() {
        assert_eq!(Gf::<3, 2>::modulus(), vec![1, 0, 1]);
        assert_eq!(Gf::<3, 3>::modulus(), vec![1, 2, 0, 1]);
        assert_eq!(Gf::<2, 2>::modulus(), vec![1, 1, 1]);
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_right_order() {
        type K = Gf<5, 2>;
        let mut seen = 0;
        for x in K::elements().skip(1) {
            assert_eq!(x.pow(24), K::one());
            assert_eq!(x * x.inv().unwrap(), K::one());
            seen += 1;
        }
        assert_eq!(seen, 24);
    }

    #[test]
    fn frobenius_is_additive() {
        type K = Gf<3, 3>;
        for a in K::elements() {
            for b in K::elements().step_by(5) {
                assert_eq!((a + b).pow(3), a.pow(3) + b.pow(3));
            }
        }
    }
}
