//! Dense exact-integer polynomial arithmetic: schoolbook multiplication,
//! exact long division with a remainder check, geometric quotients
//! (1−x^{ab})/(1−x^b) and residue-class coefficient sums.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial with exact integer coefficients, stored densely with the
/// index equal to the exponent. The zero polynomial is the empty coefficient
/// list; any nonzero polynomial has a nonzero trailing coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from coefficients c₀, c₁, …; trailing zeros are
    /// trimmed so the degree invariant holds.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Test / construction convenience.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// 1 − x^n.
    pub fn one_minus_x_pow(n: u64) -> Self {
        let n = n as usize;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        coeffs[n] = -BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Exact quotient `self / den`; any nonzero remainder (or a leading
    /// coefficient that does not divide) is reported as a divisibility
    /// violation because it always means a broken gcd assumption upstream.
    ///
    /// The divisors used in this crate are monic up to sign, so the integer
    /// long division below is exact whenever the quotient exists.
    pub fn exact_div(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num_deg = self.degree().unwrap();
        let den_deg = den.degree().unwrap();
        if num_deg < den_deg {
            return Err(Error::DivisibilityViolation(format!(
                "numerator degree {num_deg} below denominator degree {den_deg}"
            )));
        }
        let lead = den.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); num_deg - den_deg + 1];
        for k in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[k + den_deg]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::div_rem(top, lead.clone());
            if !r.is_zero() {
                return Err(Error::DivisibilityViolation(format!(
                    "leading coefficient does not divide at exponent {}",
                    k + den_deg
                )));
            }
            for (i, d) in den.coeffs.iter().take(den_deg).enumerate() {
                if !d.is_zero() {
                    rem[k + i] -= &q * d;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::DivisibilityViolation(
                "nonzero remainder after long division".into(),
            ));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// The geometric quotient (1−x^{ab})/(1−x^b) = Σ_{k=0}^{a−1} x^{kb}.
    /// All coefficients are 0 or 1; the degree is (a−1)·b.
    pub fn geometric_quotient(a: u64, b: u64) -> Self {
        assert!(a >= 1 && b >= 1, "geometric quotient needs a, b >= 1");
        let (a, b) = (a as usize, b as usize);
        let mut coeffs = vec![BigInt::zero(); (a - 1) * b + 1];
        for k in 0..a {
            coeffs[k * b] = BigInt::one();
        }
        IntPolynomial { coeffs }
    }

    /// S_r = Σ_{k ≡ r (mod m)} c_k for r = 0…m−1.
    pub fn residue_class_sums(&self, m: u64) -> Vec<BigInt> {
        residue_class_sums(&self.coeffs, m)
    }

    /// Sum of all coefficients, i.e. the value at x = 1.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

/// Residue-class sums of a raw coefficient slice: S_r = Σ_{k ≡ r (mod m)} c_k.
///
/// A unit-step profile is orthogonal to every nonzero-frequency exponential of
/// integer period m exactly when these m sums coincide.
pub fn residue_class_sums(coeffs: &[BigInt], m: u64) -> Vec<BigInt> {
    assert!(m >= 1, "modulus must be positive");
    let m = m as usize;
    let mut sums = vec![BigInt::zero(); m];
    for (k, c) in coeffs.iter().enumerate() {
        sums[k % m] += c;
    }
    sums
}

/// Multiplies out (1−x^e) for every exponent in `numerator`, then divides by
/// (1−x^e) for every exponent in `denominator`, each division exact.
///
/// Every partial quotient along the way is a polynomial whenever the full
/// quotient is (the factors split into cyclotomics, and the denominator's
/// multiplicities never exceed the numerator's), so the division order does
/// not matter.
pub fn product_quotient(numerator: &[u64], denominator: &[u64]) -> Result<IntPolynomial> {
    let mut acc = IntPolynomial::one();
    for &e in numerator {
        acc = acc.mul(&IntPolynomial::one_minus_x_pow(e));
    }
    for &e in denominator {
        acc = acc.exact_div(&IntPolynomial::one_minus_x_pow(e))?;
    }
    Ok(acc)
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::mul(self, rhs)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
