use crate::error::{Error, Result};

use super::IntPolynomial;

/// Dense row-major matrix of integer polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<IntPolynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> IntPolynomial,
    ) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, size, |i, j| {
            if i == j {
                IntPolynomial::one()
            } else {
                IntPolynomial::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> &IntPolynomial {
        &self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[IntPolynomial] {
        &self.entries
    }

    /// Deletes the listed (zero-based) rows and columns.
    pub fn minor(&self, drop_rows: &[usize], drop_cols: &[usize]) -> Self {
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !drop_rows.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !drop_cols.contains(j)).collect();
        Self::from_fn(keep_r.len(), keep_c.len(), |i, j| {
            self.get(keep_r[i], keep_c[j]).clone()
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination over `Z[x]`.
    ///
    /// A 0x0 matrix has determinant 1.
    pub fn det(&self) -> Result<IntPolynomial> {
        det_fraction_free(self)
    }
}

/// Bareiss elimination: after step `k` every entry of the trailing block is a
/// `(k+1)`-minor of the input, so each division by the previous pivot is exact.
pub fn det_fraction_free(m: &PolyMatrix) -> Result<IntPolynomial> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let mut a: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(IntPolynomial::zero());
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly by the previous pivot");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
