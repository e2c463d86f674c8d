use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored ascending by power with no trailing zeros. The zero
/// polynomial is the empty coefficient vector and has no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^power` (zero beyond the degree).
    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * BigInt::from(n))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        if order >= self.coeffs.len() {
            return Self::zero();
        }
        // c_n x^n -> n!/(n-order)! c_n x^(n-order)
        let coeffs = (order..self.coeffs.len())
            .map(|n| {
                let falling: BigInt = ((n - order + 1)..=n).map(BigInt::from).product();
                &self.coeffs[n] * falling
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift_up(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Multiplicity of the root at zero: the largest `m` with `x^m | p`.
    /// Returns 0 for the zero polynomial.
    pub fn origin_multiplicity(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^m` where `m` is [`origin_multiplicity`](Self::origin_multiplicity).
    pub fn strip_origin(&self) -> Self {
        let m = self.origin_multiplicity();
        Self {
            coeffs: self.coeffs[m..].to_vec(),
        }
    }

    /// `p(a x + b)`.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> Self {
        let lin = Self::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(r)` for a rational `r`, computed without leaving the integers.
    pub fn sign_at(&self, r: &BigRational) -> Sign {
        let (num, den) = (r.numer(), r.denom());
        let n = self.coeffs.len();
        if n == 0 {
            return Sign::NoSign;
        }
        // den^(deg) * p(num/den) = sum c_i num^i den^(deg-i); den > 0
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content and fixes a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            g = -g;
        }
        self.div_scalar_exact(&g)
            .expect("content divides every coefficient")
    }

    /// Divides every coefficient by `d`, or `None` if some division is inexact.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Self { coeffs })
    }

    /// Exact quotient `self / divisor` over the integers, or `None` when the
    /// division leaves a remainder or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dn = self.degree()?;
        if dn < dd {
            return None;
        }
        let lead = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (0..=dn - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder: the remainder of `lc(divisor)^(deg a - deg b + 1) * a`
    /// on division by `divisor`. Returns `self` unchanged when its degree is
    /// already below the divisor's.
    ///
    /// Panics on a zero divisor.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let db = divisor.degree().expect("pseudo_rem by zero polynomial");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        for i in (0..=da - db).rev() {
            let top = rem[i + db].clone();
            for c in rem.iter_mut() {
                *c *= lead;
            }
            if !top.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &top * dc;
                }
            }
            rem.truncate(i + db);
        }
        Self::from_coeffs(rem)
    }

    /// Sign of `p(x)` as `x -> +inf` (`positive`) or `x -> -inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> Sign {
        match (self.leading_coeff(), self.degree()) {
            (Some(lc), Some(d)) => {
                let s = lc.sign();
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => Sign::NoSign,
        }
    }

    /// True when only powers of the given parity (0 even, 1 odd) occur.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, c)| n % 2 == parity % 2 || c.is_zero())
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Ascending decimal strings, the interchange form used in reports.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, String> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<BigInt>()
                    .map_err(|e| format!("bad coefficient {:?}: {e}", s.as_ref()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_coeffs)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

fn mul_coeffs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                IntPolynomial::from_coeffs($body(&self.coeffs, &rhs.coeffs))
            }
        }
        impl $trait<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_coeffs(a, b, false));
forward_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
forward_binop!(Mul, mul, mul_coeffs);

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl From<BigInt> for IntPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = n == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match n {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        Self::from_decimal_strings(&items).map_err(D::Error::custom)
    }
}
