//! Finite fields, univariate polynomials, binary forms and the symbolic
//! rank machinery built on them.

mod bareiss;
mod factor;
mod forms;
mod fp;
mod gf;
mod locus;
mod poly;
mod residue;

pub use bareiss::{ffge, ffge_rank, FfgeResult};
pub use factor::{factor, factor_seeded, is_irreducible, lex_least_irreducible};
pub use forms::{BinaryForm, FormMatrix};
pub use fp::Fp;
pub use gf::Gf;
pub use locus::{
    drop_locus, drop_locus_seeded, form_gcd_factor, rank_at, root_evaluations, ClosedPoint,
    LocusError, RootEvaluation,
};
pub(crate) use locus::check_generic_rank;
pub use poly::Poly;
pub use residue::{ResField, ResMatrix};

pub use num_traits::{One, Zero};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Element of a finite field whose parameters are fixed at compile time.
///
/// Every element has an integer index in `0..order()`; index 0 is zero and
/// index 1 is one.  Indices below the characteristic are the prime subfield.
pub trait Field:
    Copy
    + Eq
    + Hash
    + Ord
    + Debug
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// The characteristic p.
    const CHAR: u32;
    /// Degree over the prime field.
    const DEGREE: u32;

    fn inv(self) -> Option<Self>;
    fn from_index(i: u64) -> Self;
    fn index(self) -> u64;

    fn order() -> u64 {
        (Self::CHAR as u64).pow(Self::DEGREE)
    }

    /// Image of an integer.
    fn from_i64(n: i64) -> Self {
        let p = Self::CHAR as i64;
        Self::from_index(n.rem_euclid(p) as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// The unique p-th root.
    fn pth_root(self) -> Self {
        self.pow(Self::order() / Self::CHAR as u64)
    }

    fn div(self, other: Self) -> Self {
        self * other.inv().expect("division by zero")
    }

    /// Integer value when the element lies in the prime subfield.
    fn prime_value(self) -> Option<u32> {
        let i = self.index();
        (i < Self::CHAR as u64).then_some(i as u32)
    }

    fn random<R: rand::Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_index(rng.gen_range(0..Self::order()))
    }

    fn random_nonzero<R: rand::Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_index(rng.gen_range(1..Self::order()))
    }

    fn elements() -> Box<dyn Iterator<Item = Self>> {
        Box::new((0..Self::order()).map(Self::from_index))
    }
}

/// Binomial coefficient reduced into the field.
pub fn binomial<F: Field>(n: usize, k: usize) -> F {
    if k > n {
        return F::zero();
    }
    let p = F::CHAR as u64;
    // Lucas' theorem keeps the computation in small integers.
    let (mut n, mut k) = (n as u64, k as u64);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return F::zero();
        }
        let mut c = 1u64;
        for i in 0..ki {
            c = c * (ni - i) / (i + 1);
        }
        acc = acc * (c % p) % p;
        n /= p;
        k /= p;
    }
    F::from_index(acc)
}
