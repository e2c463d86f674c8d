use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

use super::IntPolynomial;

/// An interval endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Bound {
    pub fn integer(n: i64) -> Self {
        Bound::Finite(BigRational::from_integer(BigInt::from(n)))
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` computed over the integers.
///
/// Each step uses the pseudo-remainder scaled by `|lc|^e` so that signs
/// agree with the rational remainder, then divides by the positive content.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial("sturm chain"));
        }
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if d.is_zero() {
            return Ok(Self { chain });
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let e = a.degree().unwrap() + 1 - b.degree().unwrap();
            let mut r = a.pseudo_rem(b);
            // prem multiplies by lc(b)^e; undo a negative sign
            if b.leading_coeff().unwrap().is_negative() && e % 2 == 1 {
                r = -r;
            }
            if r.is_zero() {
                break;
            }
            let c = r.content();
            let next = -r.div_scalar_exact(&c).unwrap();
            chain.push(next);
        }
        Ok(Self { chain })
    }

    pub fn polynomials(&self) -> &[IntPolynomial] {
        &self.chain
    }

    /// Sign variations at `at`, zeros skipped.
    pub fn variations(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().map(|q| match at {
            Bound::NegInfinity => q.sign_at_infinity(false),
            Bound::PosInfinity => q.sign_at_infinity(true),
            Bound::Finite(r) => q.sign_at(r),
        });
        let mut last = Sign::NoSign;
        let mut count = 0;
        for s in signs.filter(|s| *s != Sign::NoSign) {
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots of the (squarefree) base polynomial in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Distinct real roots of squarefree `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, lo: &Bound, hi: &Bound) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    Ok(chain.count(lo, hi))
}

/// Distinct real roots of squarefree `p` on the whole line.
pub fn real_root_count(p: &IntPolynomial) -> Result<usize> {
    sturm_count(p, &Bound::NegInfinity, &Bound::PosInfinity)
}
