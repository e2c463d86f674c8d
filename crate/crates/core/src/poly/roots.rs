//! Floating-point root finding. Nothing here is certified; the exact kernels
//! never depend on it.

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

use super::IntPolynomial;

const NEWTON_STEPS: usize = 4;
const SCHUR_ITERATIONS_PER_ROOT: usize = 60;

/// Approximate complex roots as eigenvalues of the companion matrix of the
/// monic float copy of `p`, each polished by a few Newton steps.
///
/// Roots at the origin are split off exactly before the float stage, so a
/// multiple root at zero comes back as exact zeros. A polynomial in `x^2`
/// is solved in `y = x^2` and the square roots taken afterwards. If the
/// Schur iteration does not converge the roots come from Aberth iteration.
pub fn complex_roots_float(p: &IntPolynomial) -> Result<Vec<Complex64>> {
    let degree = match p.degree() {
        None => return Err(Error::ZeroPolynomial("complex_roots_float")),
        Some(0) => return Err(Error::ConstantPolynomial("complex_roots_float")),
        Some(d) => d,
    };
    let m = p.origin_multiplicity();
    let mut roots = vec![Complex64::zero(); m];
    let rest = p.strip_origin();
    if rest.degree().unwrap_or(0) > 0 {
        if rest.has_parity(0) {
            let halved =
                IntPolynomial::from_coeffs(rest.coeffs().iter().step_by(2).cloned().collect());
            for y in float_roots(&halved) {
                let r = y.sqrt();
                roots.push(r);
                roots.push(-r);
            }
        } else {
            roots.extend(float_roots(&rest));
        }
    }
    debug_assert_eq!(roots.len(), degree);
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(roots)
}

fn float_roots(p: &IntPolynomial) -> Vec<Complex64> {
    let monic = monic_f64(p);
    let raw = companion_eigenvalues(&monic).unwrap_or_else(|| aberth(&monic));
    raw.into_iter().map(|z| polish(&monic, z)).collect()
}

fn monic_f64(p: &IntPolynomial) -> Vec<f64> {
    // divide exactly before rounding so huge coefficients stay finite
    let lc = p.leading_coeff().unwrap();
    p.coeffs()
        .iter()
        .map(|c| {
            BigRational::new(c.clone(), lc.clone())
                .to_f64()
                .unwrap_or(0.0)
        })
        .collect()
}

fn companion_eigenvalues(monic: &[f64]) -> Option<Vec<Complex64>> {
    let n = monic.len() - 1;
    let mut c = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        c[(i, n - 1)] = -monic[i];
    }
    let schur = Schur::try_new(c, f64::EPSILON, SCHUR_ITERATIONS_PER_ROOT * n)?;
    Some(schur.complex_eigenvalues().iter().copied().collect())
}

/// Simultaneous Aberth-Ehrlich iteration from points on a circle.
fn aberth(monic: &[f64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    // Cauchy bound on root moduli
    let radius = 1.0 + monic[..n].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(
                radius / 2.0,
                0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64,
            )
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval_with_derivative(monic, z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                moved = moved.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn eval_with_derivative(monic: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let (mut v, mut d) = (Complex64::zero(), Complex64::zero());
    for &c in monic.iter().rev() {
        d = d * z + v;
        v = v * z + c;
    }
    (v, d)
}

fn polish(monic: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..NEWTON_STEPS {
        let (v, d) = eval_with_derivative(monic, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = v / d;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        let next = z - step;
        // only accept steps that do not increase the residual
        if eval(monic, next).norm() > v.norm() {
            break;
        }
        z = next;
    }
    z
}

fn eval(monic: &[f64], z: Complex64) -> Complex64 {
    monic
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * z + c)
}
