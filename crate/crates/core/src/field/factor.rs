use super::{Field, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pth_root_poly<F: Field>(f: &Poly<F>) -> Poly<F> {
    let p = F::CHAR as usize;
    let c = f.coeffs();
    Poly::new(
        (0..=f.deg() / p)
            .map(|k| c.get(k * p).copied().unwrap_or_else(F::zero).pth_root())
            .collect(),
    )
}

/// Square-free decomposition of a monic polynomial: pairs `(g, m)` with the
/// `g` square-free, pairwise coprime, and `f = prod g^m`.
pub(crate) fn squarefree<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.exact_div(&c).monic();
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y).monic();
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w).monic();
        i += 1;
    }
    if c.deg() > 0 {
        let r = pth_root_poly(&c).monic();
        for (g, m) in squarefree(&r) {
            out.push((g, m * F::CHAR as usize));
        }
    }
    out
}

/// x^(q^k) mod f by repeated q-th powering.
fn frobenius_iter<F: Field>(h: &Poly<F>, f: &Poly<F>) -> Poly<F> {
    h.powmod(F::order(), f)
}

/// Distinct-degree factorisation of a monic square-free polynomial.
fn distinct_degree<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = Poly::x();
    let mut h = x.rem(&f);
    let mut i = 0;
    while f.deg() >= 2 * (i + 1) {
        i += 1;
        h = frobenius_iter(&h, &f);
        let g = h.sub(&x).gcd(&f);
        if g.deg() > 0 {
            f = f.exact_div(&g).monic();
            h = h.rem(&f);
            out.push((g, i));
        }
    }
    if f.deg() > 0 {
        let d = f.deg();
        out.push((f, d));
    }
    out
}

fn random_poly<F: Field, R: Rng>(deg_bound: usize, rng: &mut R) -> Poly<F> {
    Poly::new((0..deg_bound).map(|_| F::random(rng)).collect())
}

/// Splitting element for equal-degree factorisation.
fn split_candidate<F: Field, R: Rng>(f: &Poly<F>, d: usize, rng: &mut R) -> Poly<F> {
    let r = random_poly::<F, _>(f.deg(), rng);
    let q = F::order();
    if F::CHAR == 2 {
        // absolute trace r + r^2 + ... + r^(2^(kd-1))
        let steps = F::DEGREE as usize * d;
        let mut t = r.rem(f);
        let mut acc = t.clone();
        for _ in 1..steps {
            t = t.mulmod(&t, f);
            acc = acc.add(&t);
        }
        acc
    } else {
        // r^((q^d - 1)/2) = (r^(1 + q + ... + q^(d-1)))^((q-1)/2)
        let mut t = r.rem(f);
        let mut norm = t.clone();
        for _ in 1..d {
            t = t.powmod(q, f);
            norm = norm.mulmod(&t, f);
        }
        norm.powmod((q - 1) / 2, f).sub(&Poly::one())
    }
}

fn equal_degree<F: Field, R: Rng>(f: &Poly<F>, d: usize, rng: &mut R, out: &mut Vec<Poly<F>>) {
    if f.deg() == d {
        out.push(f.clone());
        return;
    }
    loop {
        let g = split_candidate(f, d, rng).gcd(f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = f.exact_div(&g).monic();
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Complete factorisation into monic irreducibles with multiplicities,
/// sorted by degree and then coefficients.  The leading coefficient is
/// discarded.  Randomised splitting draws from a ChaCha stream seeded by
/// `seed`; the output itself does not depend on the seed.
pub fn factor_seeded<F: Field>(f: &Poly<F>, seed: u64) -> Vec<(Poly<F>, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, m) in squarefree(&f.monic()) {
        for (h, d) in distinct_degree(&g) {
            let mut parts = Vec::new();
            equal_degree(&h, d, &mut rng, &mut parts);
            out.extend(parts.into_iter().map(|q| (q, m)));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

pub fn factor<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    factor_seeded(f, 0)
}

/// Rabin-style test: f divides x^(q^n) - x and shares no factor with
/// x^(q^(n/r)) - x for prime divisors r of n.
pub fn is_irreducible<F: Field>(f: &Poly<F>) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let f = f.monic();
    let x = Poly::x();
    let mut powers = vec![x.rem(&f)];
    for _ in 0..n {
        let next = frobenius_iter(powers.last().unwrap(), &f);
        powers.push(next);
    }
    if !powers[n].sub(&x).rem(&f).is_zero() {
        return false;
    }
    let mut m = n;
    let mut r = 2;
    let mut primes = Vec::new();
    while r * r <= m {
        if m % r == 0 {
            primes.push(r);
            while m % r == 0 {
                m /= r;
            }
        }
        r += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    primes
        .into_iter()
        .all(|r| powers[n / r].sub(&x).gcd(&f).is_one())
}

/// The lexicographically least monic irreducible of degree `d` over `F`.
pub fn lex_least_irreducible<F: Field>(d: usize) -> Poly<F> {
    Poly::monic_of_degree(d)
        .find(is_irreducible)
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn p<const P: u32>(v: &[i64]) -> Poly<Fp<P>> {
        Poly::new(v.iter().map(|&x| Fp::<P>::from_i64(x)).collect())
    }

    #[test]
    fn factor_reproduces_input() {
        // (x+1)^3 (x^2+1) x over F_3
        let f = p::<3>(&[1, 1]).mul(&p::<3>(&[1, 1])).mul(&p::<3>(&[1, 1]));
        let f = f.mul(&p::<3>(&[1, 0, 1])).mul(&p::<3>(&[0, 1]));
        let fs = factor(&f);
        assert_eq!(fs.len(), 3);
        let prod = fs
            .iter()
            .fold(Poly::one(), |acc, (g, m)| (0..*m).fold(acc, |a, _| a.mul(g)));
        assert_eq!(prod, f.monic());
        assert!(fs.contains(&(p::<3>(&[1, 1]), 3)));
        assert!(fs.contains(&(p::<3>(&[1, 0, 1]), 1)));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&p::<3>(&[1, 0, 1])));
        assert!(!is_irreducible(&p::<5>(&[1, 0, 1])));
        assert_eq!(lex_least_irreducible::<Fp<3>>(3), p::<3>(&[1, 2, 0, 1]));
    }

    #[test]
    fn characteristic_two_splitting() {
        // x^4 + x over F_2 = x (x+1) (x^2+x+1)
        let f = p::<2>(&[0, 1, 0, 0, 1]);
        let fs = factor(&f);
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn high_multiplicity_in_char_p() {
        // (x^2+1)^3 over F_3 has derivative zero after the cube
        let g = p::<3>(&[1, 0, 1]);
        let f = g.mul(&g).mul(&g);
        assert_eq!(factor(&f), vec![(g, 3)]);
    }
}
