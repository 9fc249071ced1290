use super::bareiss::blocks;
use super::{factor_seeded, BinaryForm, Field, FormMatrix, Poly, ResField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LocusError {
    #[error("all forms are zero")]
    AllZero,
    #[error("pivot minor is the zero form")]
    ZeroMinor,
    #[error("claimed rank {claimed} but rank {witnessed} at a point off the minor's roots")]
    RankMismatch { claimed: usize, witnessed: usize },
}

/// A closed point of the projective line over the base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(bound = "")]
pub enum ClosedPoint<F: Field> {
    /// `[1:0]`.
    Infinity,
    /// `[t:1]` with `t` a root of the monic irreducible `minpoly`.
    Root { minpoly: Poly<F> },
}

impl<F: Field> ClosedPoint<F> {
    /// Degree of the residue field over the base field.
    pub fn degree(&self) -> usize {
        match self {
            ClosedPoint::Infinity => 1,
            ClosedPoint::Root { minpoly } => minpoly.deg(),
        }
    }

    /// The homogeneous irreducible form vanishing at this point.
    pub fn form(&self) -> BinaryForm<F> {
        match self {
            ClosedPoint::Infinity => BinaryForm::b(),
            ClosedPoint::Root { minpoly } => BinaryForm::homogenize(minpoly, minpoly.deg()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            ClosedPoint::Infinity => "[1:0]".to_string(),
            ClosedPoint::Root { minpoly } => {
                let c: Vec<u64> = minpoly.coeffs().iter().map(|v| v.index()).collect();
                format!("[t:1], t root of {c:?}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct RootEvaluation<F: Field> {
    pub point: ClosedPoint<F>,
    pub multiplicity: usize,
    pub rank: usize,
}

impl<F: Field> Serialize for Poly<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<u64> = self.coeffs().iter().map(|c| c.index()).collect();
        v.serialize(s)
    }
}

/// Monic gcd of a list of forms and its factorisation into irreducibles.
pub fn form_gcd_factor<F: Field>(
    forms: &[BinaryForm<F>],
) -> Result<(BinaryForm<F>, Vec<(BinaryForm<F>, usize)>), LocusError> {
    let nz: Vec<&BinaryForm<F>> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nz.is_empty() {
        return Err(LocusError::AllZero);
    }
    let bmult = nz.iter().map(|f| f.b_multiplicity()).min().unwrap();
    let g = nz.iter().fold(Poly::zero(), |acc, f| acc.gcd(&f.dehomogenize()));
    let gcd = BinaryForm::homogenize(&g, g.deg() + bmult);
    let mut factors: Vec<(BinaryForm<F>, usize)> = if g.deg() > 0 {
        factor_seeded(&g, 0).into_iter().map(|(h, m)| (BinaryForm::homogenize(&h, h.deg()), m)).collect()
    } else {
        Vec::new()
    };
    if bmult > 0 {
        factors.push((BinaryForm::b(), bmult));
    }
    Ok((gcd, factors))
}

fn block_rank_at<F: Field>(m: &FormMatrix<F>, bl: &[(Vec<usize>, Vec<usize>)], pt: &ClosedPoint<F>) -> usize {
    bl.iter()
        .map(|(r, c)| {
            let sub = m.submatrix(r, c);
            match pt {
                ClosedPoint::Infinity => sub.eval(F::one(), F::zero()).rank(),
                ClosedPoint::Root { minpoly } => {
                    if minpoly.deg() == 1 {
                        sub.eval(-minpoly.coeff(0), F::one()).rank()
                    } else {
                        let k = ResField::new(minpoly);
                        sub.eval_root(&k).rank(&k)
                    }
                }
            }
        })
        .sum()
}

/// Rank of `m` at a closed point.
pub fn rank_at<F: Field>(m: &FormMatrix<F>, pt: &ClosedPoint<F>) -> usize {
    block_rank_at(m, &blocks(m), pt)
}

/// Rank of `m` at every root of `minor`.
pub fn root_evaluations<F: Field>(m: &FormMatrix<F>, minor: &BinaryForm<F>) -> Result<Vec<RootEvaluation<F>>, LocusError> {
    if minor.is_zero() {
        return Err(LocusError::ZeroMinor);
    }
    let bl = blocks(m);
    let (_, factors) = form_gcd_factor(std::slice::from_ref(minor))?;
    Ok(factors
        .into_iter()
        .map(|(h, mult)| {
            let point = if h == BinaryForm::b() {
                ClosedPoint::Infinity
            } else {
                ClosedPoint::Root { minpoly: h.dehomogenize() }
            };
            let rank = block_rank_at(m, &bl, &point);
            RootEvaluation { point, multiplicity: mult, rank }
        })
        .collect())
}

/// Checks `r` against the rank at a few points where `minor` is nonzero.
pub(crate) fn check_generic_rank<F: Field>(m: &FormMatrix<F>, r: usize, minor: &BinaryForm<F>, seed: u64) -> Result<(), LocusError> {
    let bl = blocks(m);
    let u = minor.dehomogenize();
    // pick an extension with more points than the minor has roots
    let need = minor.degree() as u64 + 4;
    let mut e = 1usize;
    while F::order().saturating_pow(e as u32) < need {
        e += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_10c5);
    let mut checked = 0;
    let mut tries = 0;
    while checked < 2 && tries < 64 {
        tries += 1;
        let witnessed = if e == 1 {
            let t = F::random(&mut rng);
            if u.eval(t).is_zero() {
                continue;
            }
            bl.iter().map(|(rs, cs)| m.submatrix(rs, cs).eval(t, F::one()).rank()).sum()
        } else {
            let k = ResField::<F>::of_degree(e);
            let t = k.random(&mut rng);
            let ut = u.coeffs().iter().rev().fold(k.zero(), |acc, &c| k.add(&k.mul(&acc, &t), &k.constant(c)));
            if ResField::is_zero(&ut) {
                continue;
            }
            bl.iter().map(|(rs, cs)| m.submatrix(rs, cs).eval_ext(&k, &t, &k.one()).rank(&k)).sum()
        };
        if witnessed != r {
            return Err(LocusError::RankMismatch { claimed: r, witnessed });
        }
        checked += 1;
    }
    Ok(())
}

/// Every closed point where the rank of `m` falls below `r`, with the rank
/// there.  An empty list means constant rank over the algebraic closure.
pub fn drop_locus_seeded<F: Field>(
    m: &FormMatrix<F>,
    r: usize,
    minor: &BinaryForm<F>,
    seed: u64,
) -> Result<Vec<RootEvaluation<F>>, LocusError> {
    if minor.is_zero() {
        return Err(LocusError::ZeroMinor);
    }
    check_generic_rank(m, r, minor, seed)?;
    let evals = root_evaluations(m, minor)?;
    if let Some(e) = evals.iter().find(|e| e.rank > r) {
        return Err(LocusError::RankMismatch { claimed: r, witnessed: e.rank });
    }
    Ok(evals.into_iter().filter(|e| e.rank < r).collect())
}

pub fn drop_locus<F: Field>(m: &FormMatrix<F>, r: usize, minor: &BinaryForm<F>) -> Result<Vec<RootEvaluation<F>>, LocusError> {
    drop_locus_seeded(m, r, minor, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ffge_rank, Fp};
    type F = Fp<3>;

    fn form(c: &[i64]) -> BinaryForm<F> {
        BinaryForm::new(c.iter().map(|&v| F::from_i64(v)).collect())
    }

    #[test]
    fn single_b_entry_drops_at_infinity() {
        let m = FormMatrix::from_fn(1, 1, 1, |_, _| form(&[0, 1]));
        let (r, minor) = ffge_rank(&m);
        let d = drop_locus(&m, r, &minor).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].point, ClosedPoint::Infinity);
        assert_eq!(d[0].rank, 0);
    }

    #[test]
    fn gcd_examples() {
        let (g, f) = form_gcd_factor(&[form(&[1, 0, 0]).mul(&form(&[0, 1])), form(&[1, 0]).mul(&form(&[0, 0, 1]))]).unwrap();
        assert_eq!(g, form(&[0, 1, 0]));
        assert_eq!(f.len(), 2);
        let (g, f) = form_gcd_factor(&[form(&[1, 0, 1])]).unwrap();
        assert_eq!(g, form(&[1, 0, 1]));
        assert_eq!(f, vec![(form(&[1, 0, 1]), 1)]);
        let (g, _) = form_gcd_factor(&[form(&[1, 0]), form(&[0, 1])]).unwrap();
        assert_eq!(g, BinaryForm::one());
        assert!(form_gcd_factor(&[BinaryForm::<F>::zero(2)]).is_err());
    }

    #[test]
    fn wrong_rank_is_rejected() {
        let m = FormMatrix::from_fn(2, 2, 1, |i, j| if i == j { form(&[1, 0]) } else { form(&[0, 1]) });
        let (_, minor) = ffge_rank(&m);
        assert!(matches!(drop_locus(&m, 1, &minor), Err(LocusError::RankMismatch { .. })));
    }
}
