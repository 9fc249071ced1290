use crate::field::{Field, Poly};
use serde::Serialize;
use std::fmt;

/// Block multiplicities `a_1, ..., a_p` of a nilpotent operator with `θ^p = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanType {
    p: u32,
    mult: Vec<usize>,
}

impl JordanType {
    /// From `rk θ^j` for `j = 1..p-1`.
    pub fn from_ranks(p: u32, dim: usize, ranks: &[usize]) -> Self {
        let p_us = p as usize;
        assert_eq!(ranks.len(), p_us - 1);
        let rk = |j: usize| -> i64 {
            if j == 0 {
                dim as i64
            } else if j >= p_us {
                0
            } else {
                ranks[j - 1] as i64
            }
        };
        let mult = (1..=p_us)
            .map(|i| {
                let a = rk(i - 1) - 2 * rk(i) + rk(i + 1);
                assert!(a >= 0, "rank sequence is not that of a nilpotent operator");
                a as usize
            })
            .collect();
        JordanType { p, mult }
    }

    /// From `(block size, multiplicity)` pairs.
    pub fn from_blocks(p: u32, blocks: &[(usize, usize)]) -> Self {
        let mut mult = vec![0; p as usize];
        for &(size, m) in blocks {
            assert!(size >= 1 && size <= p as usize);
            mult[size - 1] += m;
        }
        JordanType { p, mult }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `a_1, ..., a_p`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    /// `a_i`.
    pub fn a(&self, i: usize) -> usize {
        self.mult[i - 1]
    }

    pub fn dim(&self) -> usize {
        self.mult.iter().enumerate().map(|(i, a)| (i + 1) * a).sum()
    }

    /// `a_1, ..., a_{p-1}`.
    pub fn stable(&self) -> &[usize] {
        &self.mult[..self.mult.len() - 1]
    }

    /// Largest block size, 0 for the zero operator on the zero space.
    pub fn max_block(&self) -> usize {
        self.mult.iter().rposition(|&a| a > 0).map_or(0, |i| i + 1)
    }

    /// `rk θ^j` for `j = 1..p-1`.
    pub fn ranks(&self) -> Vec<usize> {
        (1..self.p as usize)
            .map(|j| self.mult.iter().enumerate().map(|(i, a)| (i + 1).saturating_sub(j) * a).sum())
            .collect()
    }

    /// Whether every rank of `self` is at most the corresponding rank of `o`.
    pub fn dominated_by(&self, o: &Self) -> bool {
        self.ranks().iter().zip(o.ranks()).all(|(a, b)| *a <= b)
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        assert_eq!(self.p, o.p);
        JordanType { p: self.p, mult: self.mult.iter().zip(&o.mult).map(|(a, b)| a + b).collect() }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .mult
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| if a == 1 { format!("[{}]", i + 1) } else { format!("{a}[{}]", i + 1) })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("⊕"))
        }
    }
}

impl Serialize for JordanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("JordanType", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("multiplicities", &self.mult)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

/// A point `[a:b]` of the projective line, or the generic point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PiPoint<F: Field> {
    /// Rational point, first nonzero coordinate 1.
    Closed { a: F, b: F },
    /// Point over `F[t]/(modulus)`, coordinates as residue vectors.
    Extension { modulus: Poly<F>, a: Vec<F>, b: Vec<F> },
    Generic,
}

impl<F: Field> PiPoint<F> {
    pub fn closed(a: F, b: F) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "[0:0] is not a point");
        if !a.is_zero() {
            let i = a.inv().unwrap();
            PiPoint::Closed { a: F::one(), b: b * i }
        } else {
            PiPoint::Closed { a: F::zero(), b: F::one() }
        }
    }
}
