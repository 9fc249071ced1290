use super::Module;
use crate::field::Field;
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwistError {
    #[error("twisting matrix must be 2x2")]
    Shape,
    #[error("twisting matrix is singular")]
    Singular,
}

fn antipode<F: Field>(x: &Matrix<F>) -> Matrix<F> {
    // (1 + x)^{-1} - 1 = sum_{i >= 1} (-x)^i
    let n = x.rows();
    let mut acc = Matrix::zeros(n, n);
    let mut pw = Matrix::identity(n);
    for i in 1..F::CHAR {
        pw = pw.mul(x);
        let s = if i % 2 == 1 { -F::one() } else { F::one() };
        acc.add_assign_scaled(&pw, s);
    }
    acc
}

impl<F: Field> Module<F> {
    /// Dual under the group antipode: `X* = (sum_{i>=1} (-1)^i X^i)^T`.
    /// The result is ungraded.
    pub fn dual(&self) -> Self {
        Self::from_parts(antipode(&self.x).transpose(), antipode(&self.y).transpose(), None)
    }

    /// Dual under the antipode `x -> -x`: `X* = -X^T`, degrees negated.
    pub fn sign_dual(&self) -> Self {
        let g = self.grading.as_ref().map(|g| g.iter().map(|d| -d).collect());
        Self::from_parts(self.x.transpose().neg(), self.y.transpose().neg(), g)
    }

    /// `M^{(g)}`: `(X', Y')` is `g^{-1}` applied to the column `(X, Y)`.
    /// Twisting by `g` then `h` equals twisting by `gh`.
    pub fn twist(&self, g: &Matrix<F>) -> Result<Self, TwistError> {
        if g.rows() != 2 || g.cols() != 2 {
            return Err(TwistError::Shape);
        }
        let h = g.inverse().ok_or(TwistError::Singular)?;
        let x = self.x.scale(h.get(0, 0)).add(&self.y.scale(h.get(0, 1)));
        let y = self.x.scale(h.get(1, 0)).add(&self.y.scale(h.get(1, 1)));
        Ok(Self::from_parts(x, y, self.grading.clone()))
    }
}
