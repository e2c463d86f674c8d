use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;

use super::IntPolynomial;

pub type GaussInt = Complex<BigInt>;

/// Polynomial over the Gaussian integers, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussIntPolynomial {
    coeffs: Vec<GaussInt>,
}

/// `(-i)^n` as a Gaussian integer.
fn neg_i_pow(n: usize) -> GaussInt {
    match n % 4 {
        0 => Complex::new(1.into(), 0.into()),
        1 => Complex::new(0.into(), (-1).into()),
        2 => Complex::new((-1).into(), 0.into()),
        _ => Complex::new(0.into(), 1.into()),
    }
}

/// `i^n` as a Gaussian integer.
pub fn i_pow(n: usize) -> GaussInt {
    neg_i_pow((4 - n % 4) % 4)
}

impl GaussIntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<GaussInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im.is_zero())
    }

    /// The integer polynomial, if every imaginary part vanishes.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        self.is_real()
            .then(|| IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c.re.clone()).collect()))
    }

    pub fn real_part(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c.re.clone()).collect())
    }

    pub fn imag_part(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c.im.clone()).collect())
    }

    pub fn scale(&self, factor: &GaussInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// `q(x) = p(-ix)`: coefficient `c_n` becomes `c_n (-i)^n`.
    pub fn substitute_neg_ix(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * neg_i_pow(n))
                .collect(),
        )
    }
}

impl From<&IntPolynomial> for GaussIntPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        Self {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| Complex::new(c.clone(), BigInt::zero()))
                .collect(),
        }
    }
}

impl Sub<&GaussIntPolynomial> for &GaussIntPolynomial {
    type Output = GaussIntPolynomial;
    fn sub(self, rhs: &GaussIntPolynomial) -> GaussIntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        GaussIntPolynomial::from_coeffs(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Complex::zero);
                    match rhs.coeffs.get(i) {
                        Some(b) => a - b,
                        None => a,
                    }
                })
                .collect(),
        )
    }
}

impl Mul<&GaussIntPolynomial> for &GaussIntPolynomial {
    type Output = GaussIntPolynomial;
    fn mul(self, rhs: &GaussIntPolynomial) -> GaussIntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return GaussIntPolynomial::zero();
        }
        let mut out = vec![Complex::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        GaussIntPolynomial::from_coeffs(out)
    }
}

/// `p(-ix)` for an integer polynomial.
pub fn substitute_neg_ix(p: &IntPolynomial) -> GaussIntPolynomial {
    GaussIntPolynomial::from(p).substitute_neg_ix()
}
