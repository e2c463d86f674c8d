//! Independent oracles used by the integration tests. None of these call the
//! fraction-free determinant, the subresultant resultant or the Sturm chain.

#![allow(dead_code)]

use hermite_wronskian::{IntPolynomial, PolyMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &PolyMatrix) -> IntPolynomial {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return IntPolynomial::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = IntPolynomial::zero();
    for j in 0..n {
        let sub = m.minor(&[0], &[j]);
        let term = m.get(0, j) * &cofactor_det(&sub);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Determinant of an integer matrix by Gaussian elimination over `Q`.
pub fn rational_det(rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            a.swap(piv, k);
            det = -det;
        }
        det *= a[k][k].clone();
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot = &top[k];
        for row in rest.iter_mut() {
            let f = row[k].clone() / pivot[k].clone();
            for (x, y) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x -= y.clone() * &f;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Sylvester matrix: `deg q` rows of `p`'s coefficients then `deg p` rows of
/// `q`'s, highest power first.
pub fn sylvester_resultant(p: &IntPolynomial, q: &IntPolynomial) -> BigInt {
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let desc =
        |poly: &IntPolynomial| -> Vec<BigInt> { poly.coeffs().iter().rev().cloned().collect() };
    let (pc, qc) = (desc(p), desc(q));
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in pc.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in qc.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rational_det(rows)
}

/// Remainder over `Q` (returned as a rational coefficient vector).
fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let top = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        let f = top / b[db].clone();
        for (j, c) in b.iter().enumerate() {
            let t = c.clone() * &f;
            r[shift + j] -= t;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Euclid over `Q`; returns the degree of the gcd (None when both are zero).
pub fn rational_gcd_degree(p: &IntPolynomial, q: &IntPolynomial) -> Option<usize> {
    let conv = |x: &IntPolynomial| -> Vec<BigRational> {
        x.coeffs()
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect()
    };
    let (mut a, mut b) = (conv(p), conv(q));
    while !b.is_empty() {
        let r = rational_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().checked_sub(1)
}

/// Sign changes of `p` sampled at `(2j+1)/48` for integers `j` covering
/// `[lo, hi]`. Roots with denominator 1, 2 or 3 never land on a sample, and
/// distinct such roots are at least 1/6 apart, so each simple root in range
/// shows up as exactly one change.
pub fn grid_sign_changes(p: &IntPolynomial, lo: i64, hi: i64) -> usize {
    let signs: Vec<i8> = (24 * lo..24 * hi)
        .map(|j| {
            let r = BigRational::new(BigInt::from(2 * j + 1), BigInt::from(48));
            let v = eval_rational(p, &r);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .collect();
    signs.windows(2).filter(|w| w[0] * w[1] < 0).count()
}

pub fn eval_rational(p: &IntPolynomial, r: &BigRational) -> BigRational {
    p.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * r + BigRational::from_integer(c.clone())
    })
}
