//! Exact Wronskians of Hermite polynomials.
//!
//! `Omega_F(x) = det(H_{f_i}^{(j-1)}(x))` for a finite set `F` of positive
//! integers, the exceptional Hermite polynomials built from the same
//! determinants, instance checks of the identities they satisfy, and exact
//! certificates of their zero structure (simplicity, coprimality, real-root
//! counts).
//!
//! All polynomial arithmetic is over arbitrary-precision integers; the only
//! floating-point paths are [`complex_roots_float`] / [`root_cloud`] and the
//! orthogonality quadrature, and no certificate depends on them.
//!
//! ```
//! use hermite_wronskian::{certify, omega, IndexSet};
//!
//! let f = IndexSet::new(vec![1, 2, 3])?;
//! let w = omega(&f);
//! assert_eq!(w.polynomial.to_string(), "128x^3 + 192x");
//! let cert = certify(&f)?;
//! assert!(cert.squarefree && cert.veselov_ok);
//! assert_eq!(cert.real_root_count, 1);
//! # Ok::<(), hermite_wronskian::Error>(())
//! ```

pub mod error;
pub mod hermite;
pub mod identities;
pub mod poly;
pub mod quadrature;
pub mod wronskian;
pub mod zeros;

pub use error::{Error, Result};
pub use hermite::{hermite, hermite_derivative, HermiteCache};
pub use identities::{
    admissible, duality_check, duality_sides, eigen_ode_check, krein_adler, krein_adler_check,
    orthogonality_numeric_check, orthogonality_report, recurrence_sign, segment_ode_check,
    segment_ode_with_constant, signed_recurrence_check, sylvester_check,
    wronskian_recurrence_check, IdentityVerdict, KreinAdler, OrthogonalityReport,
};
pub use poly::{
    complex_roots_float, det_fraction_free, gcd, real_root_count, resultant, squarefree_part,
    sturm_count, substitute_neg_ix, Bound, GaussIntPolynomial, IntPolynomial, PolyMatrix,
    RationalConstant, SquarefreeSplit,
};
pub use wronskian::{
    connection_segment, duality_constant, exceptional_hermite, exceptional_index_data,
    hermite_wronskian_matrix, involution, omega, omega_poly, segment, ExceptionalIndexData,
    IndexSet, WronskianResult,
};
pub use zeros::{
    certify, certify_segment, counterexamples, float_real_root_count, karlin_szego_count,
    root_cloud, veselov_scan, KarlinSzego, SegmentCertificate, ZeroCertificate,
};
