use super::{BinaryForm, Field, FormMatrix, Poly};
use serde::Serialize;

/// Outcome of fraction-free elimination on a matrix of forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct FfgeResult<F: Field> {
    pub rank: usize,
    /// A nonzero `rank x rank` minor on `pivot_rows x pivot_cols` (up to sign).
    pub minor: BinaryForm<F>,
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
    /// Number of connected blocks the matrix was split into.
    pub blocks: usize,
}

/// Connected components of the bipartite graph on rows and columns whose
/// edges are the nonzero entries.  Empty rows and columns are dropped.
pub(crate) fn blocks<F: Field>(m: &FormMatrix<F>) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (r, c) = (m.rows(), m.cols());
    let mut parent: Vec<usize> = (0..r + c).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut used = vec![false; r + c];
    for i in 0..r {
        for j in 0..c {
            if !m.poly(i, j).is_zero() {
                used[i] = true;
                used[r + j] = true;
                let (a, b) = (find(&mut parent, i), find(&mut parent, r + j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut idx = vec![usize::MAX; r + c];
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for v in 0..r + c {
        if !used[v] {
            continue;
        }
        let root = find(&mut parent, v);
        if idx[root] == usize::MAX {
            idx[root] = out.len();
            out.push((Vec::new(), Vec::new()));
        }
        let b = &mut out[idx[root]];
        if v < r {
            b.0.push(v);
        } else {
            b.1.push(v - r);
        }
    }
    out
}

/// Bareiss elimination with full pivoting on one block.  Returns the rank,
/// the last pivot and the pivot rows/columns in original numbering.
fn bareiss_block<F: Field>(
    mut a: Vec<Vec<Poly<F>>>,
    mut rperm: Vec<usize>,
    mut cperm: Vec<usize>,
) -> (usize, Poly<F>, Vec<usize>, Vec<usize>) {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    let mut prev: Poly<F> = Poly::one();
    let mut k = 0;
    while k < n.min(m) {
        let mut best: Option<(usize, usize, usize, usize, usize)> = None;
        for i in k..n {
            for j in k..m {
                let e = &a[i][j];
                if e.is_zero() {
                    continue;
                }
                let key = (e.deg(), rperm[i], cperm[j]);
                if best.is_none_or(|b| key < (b.0, b.1, b.2)) {
                    best = Some((key.0, key.1, key.2, i, j));
                }
            }
        }
        let Some((_, _, _, pi, pj)) = best else { break };
        a.swap(k, pi);
        rperm.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            cperm.swap(k, pj);
        }
        let pivot = a[k][k].clone();
        let prev_const = (prev.deg() == 0).then(|| prev.lead().inv().unwrap());
        for i in k + 1..n {
            let lik = std::mem::take(&mut a[i][k]);
            for j in k + 1..m {
                let t = if lik.is_zero() || a[k][j].is_zero() {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    pivot.mul(&a[i][j])
                } else {
                    pivot.mul(&a[i][j]).sub(&lik.mul(&a[k][j]))
                };
                a[i][j] = match prev_const {
                    Some(c) => t.scale(c),
                    None => t.exact_div(&prev),
                };
            }
        }
        prev = pivot;
        k += 1;
    }
    rperm.truncate(k);
    cperm.truncate(k);
    (k, prev, rperm, cperm)
}

/// Fraction-free elimination over `F[a,b]`.
pub fn ffge<F: Field>(m: &FormMatrix<F>) -> FfgeResult<F> {
    let bl = blocks(m);
    let mut rank = 0;
    let mut minor = Poly::one();
    let mut pivot_rows = Vec::new();
    let mut pivot_cols = Vec::new();
    for (rows, cols) in &bl {
        let a: Vec<Vec<Poly<F>>> = rows.iter().map(|&i| cols.iter().map(|&j| m.poly(i, j).clone()).collect()).collect();
        let (r, pv, pr, pc) = bareiss_block(a, rows.clone(), cols.clone());
        rank += r;
        minor = minor.mul(&pv);
        pivot_rows.extend(pr);
        pivot_cols.extend(pc);
    }
    FfgeResult {
        rank,
        minor: BinaryForm::homogenize(&minor, rank * m.degree()).normalized(),
        pivot_rows,
        pivot_cols,
        blocks: bl.len(),
    }
}

/// Generic rank and a nonzero maximal minor.
pub fn ffge_rank<F: Field>(m: &FormMatrix<F>) -> (usize, BinaryForm<F>) {
    let r = ffge(m);
    (r.rank, r.minor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    type F = Fp<3>;

    fn form(c: &[i64]) -> BinaryForm<F> {
        BinaryForm::new(c.iter().map(|&v| F::from_i64(v)).collect())
    }

    #[test]
    fn two_by_two_determinant() {
        let a = form(&[1, 0]);
        let b = form(&[0, 1]);
        let m = FormMatrix::from_fn(2, 2, 1, |i, j| if i == j { a.clone() } else { b.clone() });
        let (r, minor) = ffge_rank(&m);
        assert_eq!(r, 2);
        assert_eq!(minor, form(&[1, 0, -1]));
    }

    #[test]
    fn zero_matrix() {
        let m = FormMatrix::from_fn(1, 1, 0, |_, _| BinaryForm::<F>::zero(0));
        assert_eq!(ffge_rank(&m), (0, BinaryForm::one()));
    }

    #[test]
    fn minor_is_a_minor() {
        // rank 2 matrix of linear forms with 3 rows
        let (a, b) = (form(&[1, 0]), form(&[0, 1]));
        let z = BinaryForm::zero(1);
        let e = [[a.clone(), b.clone(), z.clone()], [z.clone(), a.clone(), b.clone()], [a.clone(), a.add(&b), b.clone()]];
        let m = FormMatrix::from_fn(3, 3, 1, |i, j| e[i][j].clone());
        let res = ffge(&m);
        assert_eq!(res.rank, 2);
        let sub = m.submatrix(&res.pivot_rows, &res.pivot_cols);
        let det = sub.poly(0, 0).mul(sub.poly(1, 1)).sub(&sub.poly(0, 1).mul(sub.poly(1, 0)));
        let det = BinaryForm::homogenize(&det, 2).normalized();
        assert_eq!(det, res.minor);
    }
}
