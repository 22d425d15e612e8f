use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tridiagonal matrix stored by diagonals. `lower[i]` is entry `(i+1, i)`,
/// `upper[i]` is entry `(i, i+1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub lower: Vec<Complex64>,
    pub diag: Vec<Complex64>,
    pub upper: Vec<Complex64>,
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// `y = M x`.
    pub fn apply(&self, x: &[Complex64], y: &mut [Complex64]) {
        let n = self.len();
        debug_assert_eq!(x.len(), n);
        debug_assert_eq!(y.len(), n);
        for i in 0..n {
            let mut acc = self.diag[i] * x[i];
            if i > 0 {
                acc += self.lower[i - 1] * x[i - 1];
            }
            if i + 1 < n {
                acc += self.upper[i] * x[i + 1];
            }
            y[i] = acc;
        }
    }

    /// LU factorization without pivoting (Thomas algorithm).
    pub fn factor(&self) -> Result<ThomasFactor> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Numerical("empty tridiagonal system".into()));
        }
        let mut inv_pivot = Vec::with_capacity(n);
        let mut upper_scaled = Vec::with_capacity(n.saturating_sub(1));
        let mut prev = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let pivot = if i == 0 {
                self.diag[0]
            } else {
                self.diag[i] - self.lower[i - 1] * prev
            };
            let usable = pivot.norm() > f64::MIN_POSITIVE && pivot.re.is_finite() && pivot.im.is_finite();
            if !usable {
                return Err(Error::Numerical(format!("zero pivot at row {i} of tridiagonal solve")));
            }
            let inv = pivot.inv();
            inv_pivot.push(inv);
            if i + 1 < n {
                prev = self.upper[i] * inv;
                upper_scaled.push(prev);
            }
        }
        Ok(ThomasFactor {
            lower: self.lower.clone(),
            inv_pivot,
            upper_scaled,
        })
    }
}

/// Reusable factorization of a [`Tridiagonal`].
#[derive(Debug, Clone, PartialEq)]
pub struct ThomasFactor {
    lower: Vec<Complex64>,
    inv_pivot: Vec<Complex64>,
    upper_scaled: Vec<Complex64>,
}

impl ThomasFactor {
    /// Overwrites `rhs` with the solution.
    pub fn solve_in_place(&self, rhs: &mut [Complex64]) {
        let n = self.inv_pivot.len();
        debug_assert_eq!(rhs.len(), n);
        rhs[0] *= self.inv_pivot[0];
        for i in 1..n {
            let carry = self.lower[i - 1] * rhs[i - 1];
            rhs[i] = (rhs[i] - carry) * self.inv_pivot[i];
        }
        for i in (0..n - 1).rev() {
            let carry = self.upper_scaled[i] * rhs[i + 1];
            rhs[i] -= carry;
        }
    }
}
