use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

use super::IntPolynomial;

/// Greatest common divisor over `Z[x]`, primitive with positive leading coefficient.
///
/// Uses the primitive remainder sequence; a constant gcd is reported as 1.
pub fn gcd(p: &IntPolynomial, q: &IntPolynomial) -> Result<IntPolynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    if q.is_zero() {
        return Ok(p.primitive_part());
    }
    if p.is_zero() {
        return Ok(q.primitive_part());
    }
    let (mut a, mut b) = if p.degree() >= q.degree() {
        (p.primitive_part(), q.primitive_part())
    } else {
        (q.primitive_part(), p.primitive_part())
    };
    while !b.is_zero() {
        let r = a.pseudo_rem(&b);
        a = b;
        b = r.primitive_part();
    }
    // a is primitive; the integer gcd of the contents is dropped by convention
    Ok(a.primitive_part())
}

/// Resultant `Res(p, q)` by the subresultant algorithm.
///
/// Sign convention: the determinant of the Sylvester matrix whose first
/// `deg q` rows hold the coefficients of `p` (highest power first) and whose
/// last `deg p` rows hold those of `q`. With this convention
/// `Res(x - a, x - b) = a - b`.
pub fn resultant(p: &IntPolynomial, q: &IntPolynomial) -> Result<BigInt> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroPolynomial("resultant"));
    };
    if dp == 0 {
        return Ok(Pow::pow(p.coeff(0), dq));
    }
    if dq == 0 {
        return Ok(Pow::pow(q.coeff(0), dp));
    }

    let ca = p.content();
    let cb = q.content();
    let mut a = p.div_scalar_exact(&ca).unwrap();
    let mut b = q.div_scalar_exact(&cb).unwrap();
    let t = Pow::pow(&ca, dq) * Pow::pow(&cb, dp);
    let mut s = BigInt::one();
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            s = -s;
        }
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = &g * Pow::pow(&h, delta);
        b = r
            .div_scalar_exact(&divisor)
            .expect("subresultant scaling is exact");
        g = a.leading_coeff().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            let num: BigInt = Pow::pow(&g, delta);
            let den: BigInt = Pow::pow(&h, delta - 1);
            let (quot, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            quot
        };
        match b.degree() {
            None => return Ok(BigInt::zero()),
            Some(0) => {
                let da = a.degree().unwrap();
                // h <- lc(b)^deg(a) / h^(deg(a) - 1)
                let lb = b.coeff(0);
                let num: BigInt = Pow::pow(&lb, da);
                let den: BigInt = Pow::pow(&h, da - 1);
                let (fin, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                return Ok(s * t * fin);
            }
            Some(_) => {}
        }
    }
}

/// `gcd(p, p')` and the squarefree part `p / gcd(p, p')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeSplit {
    pub squarefree: IntPolynomial,
    pub gcd_with_derivative: IntPolynomial,
}

impl SquarefreeSplit {
    /// All complex roots of the input are simple.
    pub fn is_squarefree(&self) -> bool {
        self.gcd_with_derivative.is_constant()
    }
}

pub fn squarefree_part(p: &IntPolynomial) -> Result<SquarefreeSplit> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    let g = gcd(p, &p.derivative())?;
    let squarefree = p
        .div_exact(&g)
        .expect("primitive gcd divides over the integers");
    Ok(SquarefreeSplit {
        squarefree,
        gcd_with_derivative: g,
    })
}

/// True when `p` is a nonzero constant times a power of `x`.
pub fn is_monomial(p: &IntPolynomial) -> bool {
    !p.is_zero() && p.strip_origin().is_constant()
}

/// No common complex root, decided by `resultant(p, q) != 0`.
pub fn coprime(p: &IntPolynomial, q: &IntPolynomial) -> Result<bool> {
    Ok(!resultant(p, q)?.is_zero())
}
