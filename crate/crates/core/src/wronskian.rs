//! Index sets, Hermite Wronskians `Omega_F` and the exceptional Hermite family.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermite::hermite_derivative;
use crate::poly::{IntPolynomial, PolyMatrix, RationalConstant};

/// Finite set of distinct positive integers, stored strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Validates an already-ordered list.
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.contains(&0) {
            return Err(Error::InvalidIndexSet("elements must be positive".into()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(
                "elements must be strictly increasing".into(),
            ));
        }
        Ok(Self(elements))
    }

    /// Sorts, then rejects duplicates and zeros.
    pub fn from_unordered(mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndexSet(format!(
                "duplicate element {}",
                w[0]
            )));
        }
        Self::new(elements)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Consecutive elements.
    pub fn is_segment(&self) -> bool {
        self.0.windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// `w_F = sum(F) - k(k-1)/2`, the degree of `Omega_F`.
    pub fn wronskian_degree(&self) -> usize {
        let k = self.len();
        self.sum() - k * k.saturating_sub(1) / 2
    }

    /// `u_F = sum(F) - k(k+1)/2`, the offset of the exceptional spectrum.
    pub fn spectrum_offset(&self) -> usize {
        let k = self.len();
        self.sum() - k * (k + 1) / 2
    }

    /// Every non-empty subset of `{1, ..., max_element}` with at most
    /// `max_size` elements, ordered by (max element, size, lexicographic).
    pub fn enumerate(max_element: usize, max_size: usize) -> Vec<IndexSet> {
        let mut out = Vec::new();
        for top in 1..=max_element {
            for size in 1..=max_size.min(top) {
                let mut rest = Vec::new();
                combinations(top - 1, size - 1, 1, &mut rest, &mut |c| {
                    let mut v = c.to_vec();
                    v.push(top);
                    out.push(IndexSet(v));
                });
            }
        }
        out
    }
}

fn combinations(
    n: usize,
    r: usize,
    start: usize,
    cur: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if cur.len() == r {
        emit(cur);
        return;
    }
    for x in start..=n {
        if n - x + 1 < r - cur.len() {
            break;
        }
        cur.push(x);
        combinations(n, r, x + 1, cur, emit);
        cur.pop();
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        IndexSet::new(v).map_err(serde::de::Error::custom)
    }
}

/// `S(p, q) = {p, ..., p+q-1}`; empty when `q = 0`.
pub fn segment(p: usize, q: usize) -> Result<IndexSet> {
    if p < 1 {
        return Err(Error::SegmentStart(p as u64));
    }
    Ok(IndexSet((p..p + q).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WronskianResult {
    pub set: IndexSet,
    pub polynomial: IntPolynomial,
    pub predicted_degree: usize,
}

/// Rows are the functions `H_{f_i}`, columns the derivative orders `0..cols`.
pub fn hermite_wronskian_matrix(rows: &[usize], cols: usize) -> PolyMatrix {
    PolyMatrix::from_fn(rows.len(), cols, |i, j| hermite_derivative(rows[i], j))
}

/// `Omega_F = det(H_{f_i}^{(j-1)})`, with `Omega_{{}} = 1`.
pub fn omega(set: &IndexSet) -> WronskianResult {
    let k = set.len();
    let polynomial = hermite_wronskian_matrix(set.elements(), k)
        .det()
        .expect("Wronskian matrix is square");
    WronskianResult {
        set: set.clone(),
        polynomial,
        predicted_degree: set.wronskian_degree(),
    }
}

/// `Omega_F` alone.
pub fn omega_poly(set: &IndexSet) -> IntPolynomial {
    omega(set).polynomial
}

/// `I(F) = {1, ..., max F} \ {max F - f : f in F}`.
pub fn involution(set: &IndexSet) -> Result<IndexSet> {
    let m = set.max().ok_or(Error::EmptySet)?;
    let removed: Vec<usize> = set.elements().iter().map(|f| m - f).collect();
    Ok(IndexSet((1..=m).filter(|x| !removed.contains(x)).collect()))
}

/// `c_F = 1 / (2^(k(k-1)/2) prod f!)`.
pub fn duality_constant(set: &IndexSet) -> RationalConstant {
    RationalConstant::new(BigInt::one(), duality_denominator(set))
}

/// Reciprocal of [`duality_constant`].
pub fn duality_denominator(set: &IndexSet) -> BigInt {
    let k = set.len();
    let pow2 = BigInt::one() << (k * k.saturating_sub(1) / 2);
    set.elements()
        .iter()
        .map(|&f| (1..=f).map(BigInt::from).product::<BigInt>())
        .fold(pow2, |acc, fact| acc * fact)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalIndexData {
    pub set: IndexSet,
    pub u: usize,
    pub spectrum_head: Vec<usize>,
}

impl ExceptionalIndexData {
    /// Membership in `sigma_F = {u, u+1, ...} \ {u + f}`.
    pub fn in_spectrum(&self, n: usize) -> bool {
        spectrum_contains(&self.set, n)
    }
}

fn spectrum_contains(set: &IndexSet, n: usize) -> bool {
    let u = set.spectrum_offset();
    n >= u && !set.elements().contains(&(n - u))
}

/// `u_F` and the first `m` members of `sigma_F`.
pub fn exceptional_index_data(set: &IndexSet, m: usize) -> Result<ExceptionalIndexData> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if m == 0 {
        return Err(Error::Precondition(
            "spectrum head length must be positive".into(),
        ));
    }
    let u = set.spectrum_offset();
    let spectrum_head = (u..)
        .filter(|&n| spectrum_contains(set, n))
        .take(m)
        .collect();
    Ok(ExceptionalIndexData {
        set: set.clone(),
        u,
        spectrum_head,
    })
}

/// The bordered `(k+1) x (k+1)` Wronskian with `H_{n-u_F}` as its first row
/// and `H_{f_1}, ..., H_{f_k}` below, derivative orders `0..=k`.
///
/// Degree `n` for `n` in `sigma_F`, zero otherwise.
pub fn exceptional_hermite(set: &IndexSet, n: usize) -> Result<IntPolynomial> {
    let u = set.spectrum_offset();
    if n < u {
        return Err(Error::BelowSpectrumOffset {
            n: n as i64,
            u: u as i64,
        });
    }
    let mut rows = Vec::with_capacity(set.len() + 1);
    rows.push(n - u);
    rows.extend_from_slice(set.elements());
    hermite_wronskian_matrix(&rows, rows.len()).det()
}

/// Both sides of `Omega_{S(p,q+1)} = H^{S(p+1,q)}_{p+pq}`.
///
/// With `u_{S(p+1,q)} = pq` the bordered determinant has rows
/// `H_p, H_{p+1}, ..., H_{p+q}`, the same matrix as `Omega_{S(p,q+1)}`, so the
/// two sides agree with factor exactly 1.
pub fn connection_segment(p: usize, q: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    let lhs = omega_poly(&segment(p, q + 1)?);
    let rhs = exceptional_hermite(&segment(p + 1, q)?, p + p * q)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::hermite;

    fn set(v: &[usize]) -> IndexSet {
        IndexSet::new(v.to_vec()).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(vec![1, 1]).is_err());
        assert!(IndexSet::new(vec![2, 1]).is_err());
        assert!(IndexSet::new(vec![0, 1]).is_err());
        assert_eq!(
            IndexSet::from_unordered(vec![5, 1, 2]).unwrap(),
            set(&[1, 2, 5])
        );
        assert!(IndexSet::from_unordered(vec![3, 3]).is_err());
        assert_eq!(set(&[1, 2, 5]).to_string(), "{1,2,5}");
    }

    #[test]
    fn segments() {
        assert_eq!(segment(2, 3).unwrap(), set(&[2, 3, 4]));
        assert_eq!(segment(5, 0).unwrap(), IndexSet::empty());
        assert_eq!(segment(1, 1).unwrap(), set(&[1]));
        assert_eq!(segment(0, 2), Err(Error::SegmentStart(0)));
        assert!(segment(3, 4).unwrap().is_segment());
        assert!(!set(&[1, 3]).is_segment());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_poly(&IndexSet::empty()), p(&[1]));
        assert_eq!(omega_poly(&set(&[4])), hermite(4));
        assert_eq!(omega_poly(&set(&[1, 2])), p(&[4, 0, 8]));
        let w = omega(&set(&[1, 2, 3]));
        assert_eq!(w.polynomial, p(&[0, 192, 0, 128]));
        assert_eq!(w.predicted_degree, 3);
    }

    #[test]
    fn involution_examples() {
        assert_eq!(involution(&set(&[1])).unwrap(), set(&[1]));
        assert_eq!(involution(&set(&[2])).unwrap(), set(&[1, 2]));
        assert_eq!(involution(&set(&[1, 3])).unwrap(), set(&[1, 3]));
        assert_eq!(involution(&IndexSet::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn duality_constants() {
        assert_eq!(duality_denominator(&set(&[2])), BigInt::from(2));
        assert_eq!(duality_denominator(&set(&[1, 2])), BigInt::from(4));
        // 2^3 * 1! * 2! * 3!
        assert_eq!(duality_denominator(&set(&[1, 2, 3])), BigInt::from(96));
        assert_eq!(
            duality_constant(&IndexSet::empty()),
            RationalConstant::one()
        );
    }

    #[test]
    fn spectrum_data() {
        let d = exceptional_index_data(&set(&[1, 2]), 4).unwrap();
        assert_eq!(d.u, 0);
        assert_eq!(d.spectrum_head, vec![0, 3, 4, 5]);
        let d = exceptional_index_data(&set(&[1]), 3).unwrap();
        assert_eq!((d.u, d.spectrum_head), (0, vec![0, 2, 3]));
        for (a, b) in [(1, 1), (2, 3), (3, 2), (4, 4)] {
            assert_eq!(segment(a + 1, b).unwrap().spectrum_offset(), a * b);
        }
        assert!(exceptional_index_data(&IndexSet::empty(), 3).is_err());
        assert!(exceptional_index_data(&set(&[1]), 0).is_err());
    }

    #[test]
    fn exceptional_examples() {
        let f = set(&[1, 2]);
        assert_eq!(exceptional_hermite(&f, 0).unwrap(), p(&[16]));
        assert!(exceptional_hermite(&f, 1).unwrap().is_zero());
        assert!(exceptional_hermite(&f, 2).unwrap().is_zero());
        assert_eq!(exceptional_hermite(&f, 3).unwrap().degree(), Some(3));
        let g = set(&[2, 3]);
        assert_eq!(
            exceptional_hermite(&g, 1),
            Err(Error::BelowSpectrumOffset { n: 1, u: 2 })
        );
    }

    #[test]
    fn connection_examples() {
        for (a, b) in [(1, 0), (1, 1), (2, 1), (3, 2)] {
            let (lhs, rhs) = connection_segment(a, b).unwrap();
            assert_eq!(lhs, rhs, "p={a} q={b}");
        }
        assert_eq!(connection_segment(1, 1).unwrap().0, p(&[4, 0, 8]));
    }

    #[test]
    fn enumeration_order_and_count() {
        let all = IndexSet::enumerate(3, 3);
        let shown: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(
            shown,
            ["{1}", "{2}", "{1,2}", "{3}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
        assert_eq!(IndexSet::enumerate(10, 10).len(), 1023);
        assert_eq!(IndexSet::enumerate(6, 3).len(), 6 + 15 + 20);
        assert_eq!(IndexSet::enumerate(1, 5), vec![set(&[1])]);
    }
}
