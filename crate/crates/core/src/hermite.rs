//! Physicists' Hermite polynomials, `H_n(x) = 2^n x^n + ...`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::poly::IntPolynomial;

/// Grow-only table of `H_0, H_1, ...` built by the three-term recurrence
/// `H_{n+1} = 2x H_n - 2n H_{n-1}`.
///
/// Reads take a shared lock; growth takes the write lock once per call and
/// fills every missing degree, so each entry is written exactly once.
#[derive(Debug, Default)]
pub struct HermiteCache {
    table: RwLock<Vec<IntPolynomial>>,
}

impl HermiteCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize) -> IntPolynomial {
        if let Some(h) = self.table.read().unwrap().get(n) {
            return h.clone();
        }
        let mut table = self.table.write().unwrap();
        if table.is_empty() {
            table.push(IntPolynomial::one());
        }
        if table.len() == 1 {
            table.push(IntPolynomial::monomial(2, 1));
        }
        let two_x = IntPolynomial::monomial(2, 1);
        while table.len() <= n {
            let m = table.len() - 1;
            let next = &(&two_x * &table[m]) - &table[m - 1].scale(&BigInt::from(2 * m));
            table.push(next);
        }
        table[n].clone()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn shared() -> &'static HermiteCache {
    static CACHE: OnceLock<HermiteCache> = OnceLock::new();
    CACHE.get_or_init(HermiteCache::new)
}

/// `H_n` from the process-wide cache.
pub fn hermite(n: usize) -> IntPolynomial {
    shared().get(n)
}

/// `d^order/dx^order H_n`, via `H_n' = 2n H_{n-1}`:
/// `H_n^(r) = 2^r n!/(n-r)! H_{n-r}`, and zero when `r > n`.
pub fn hermite_derivative(n: usize, order: usize) -> IntPolynomial {
    if order > n {
        return IntPolynomial::zero();
    }
    let falling: BigInt = ((n - order + 1)..=n).map(BigInt::from).product();
    let factor = falling << order;
    hermite(n - order).scale(&factor)
}
