//! Zero-structure certificates for Hermite Wronskians.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{
    complex_roots_float, coprime, is_monomial, real_root_count, squarefree_part, IntPolynomial,
};
use crate::wronskian::{omega_poly, segment, IndexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroCertificate {
    pub set: IndexSet,
    pub degree: usize,
    pub squarefree: bool,
    pub gcd_with_derivative: IntPolynomial,
    pub origin_multiplicity: usize,
    /// Distinct real roots.
    pub real_root_count: usize,
    /// `gcd(Omega, Omega')` is a constant times a power of `x`: every zero
    /// away from the origin is simple.
    pub veselov_ok: bool,
}

pub fn certify(set: &IndexSet) -> Result<ZeroCertificate> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let w = omega_poly(set);
    let split = squarefree_part(&w)?;
    Ok(ZeroCertificate {
        set: set.clone(),
        degree: w.degree().unwrap_or(0),
        squarefree: split.is_squarefree(),
        origin_multiplicity: w.origin_multiplicity(),
        real_root_count: real_root_count(&split.squarefree)?,
        veselov_ok: is_monomial(&split.gcd_with_derivative),
        gcd_with_derivative: split.gcd_with_derivative,
    })
}

/// The three segment properties: coprimality with the shorter shifted
/// segment, simple zeros, coprimality with the shifted segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentCertificate {
    pub p: usize,
    pub q: usize,
    /// `Omega_{S(p,q)}` and `Omega_{S(p+1,q-1)}` share no zero.
    pub a1_coprime: bool,
    /// `Omega_{S(p,q)}` is squarefree.
    pub a2_squarefree: bool,
    /// `Omega_{S(p,q)}` and `Omega_{S(p+1,q)}` share no zero.
    pub a3_coprime: bool,
}

impl SegmentCertificate {
    pub fn all_hold(&self) -> bool {
        self.a1_coprime && self.a2_squarefree && self.a3_coprime
    }
}

pub fn certify_segment(p: usize, q: usize) -> Result<SegmentCertificate> {
    if q < 1 {
        return Err(Error::Precondition(format!(
            "segment length must be >= 1, got {q}"
        )));
    }
    let base = omega_poly(&segment(p, q)?);
    let shorter = omega_poly(&segment(p + 1, q - 1)?);
    let shifted = omega_poly(&segment(p + 1, q)?);
    Ok(SegmentCertificate {
        p,
        q,
        a1_coprime: coprime(&base, &shorter)?,
        a2_squarefree: squarefree_part(&base)?.is_squarefree(),
        a3_coprime: coprime(&base, &shifted)?,
    })
}

/// Real-root count of `Omega_{S(n,k)}` against the classical prediction:
/// none for even `k`, exactly `n` simple ones for odd `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KarlinSzego {
    pub n: usize,
    pub k: usize,
    pub expected: usize,
    pub actual: usize,
    pub degree: usize,
    pub squarefree: bool,
}

impl KarlinSzego {
    pub fn holds(&self) -> bool {
        self.expected == self.actual && self.degree == self.k * self.n && self.squarefree
    }
}

pub fn karlin_szego_count(n: usize, k: usize) -> Result<KarlinSzego> {
    if n < 1 || k < 1 {
        return Err(Error::Precondition(format!(
            "need n, k >= 1, got n={n} k={k}"
        )));
    }
    let w = omega_poly(&segment(n, k)?);
    let split = squarefree_part(&w)?;
    Ok(KarlinSzego {
        n,
        k,
        expected: if k.is_multiple_of(2) { 0 } else { n },
        actual: real_root_count(&split.squarefree)?,
        degree: w.degree().unwrap_or(0),
        squarefree: split.is_squarefree(),
    })
}

/// Certificates for every non-empty `F` within the bounds, in enumeration
/// order regardless of how the work is spread over threads.
pub fn veselov_scan(max_element: usize, max_size: usize) -> Result<Vec<ZeroCertificate>> {
    if max_element < 1 || max_size < 1 {
        return Err(Error::Precondition("scan bounds must be >= 1".into()));
    }
    IndexSet::enumerate(max_element, max_size)
        .par_iter()
        .map(certify)
        .collect()
}

/// Certificates with `veselov_ok == false`.
pub fn counterexamples(certs: &[ZeroCertificate]) -> Vec<&ZeroCertificate> {
    certs.iter().filter(|c| !c.veselov_ok).collect()
}

/// Float roots of `Omega_F`, for plotting. Not certified.
pub fn root_cloud(set: &IndexSet) -> Result<Vec<Complex64>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    complex_roots_float(&omega_poly(set))
}

/// Distinct real roots seen in [`root_cloud`], treating `|im| < im_tol` as
/// real. Roots at the origin are exact and counted once.
pub fn float_real_root_count(roots: &[Complex64], im_tol: f64) -> usize {
    let has_origin = roots.iter().any(|z| z.re == 0.0 && z.im == 0.0);
    let others = roots
        .iter()
        .filter(|z| !(z.re == 0.0 && z.im == 0.0) && z.im.abs() < im_tol)
        .count();
    others + usize::from(has_origin)
}
