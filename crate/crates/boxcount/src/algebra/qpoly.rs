//! Dense polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! These carry every generating function in the crate: the coefficient of
//! `q^k` in a box polynomial is the number of plane partitions with `k`
//! cubes, so coefficients must never overflow and arithmetic must stay
//! exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Polynomial in `q`, dense coefficient vector indexed by exponent.
///
/// Invariant: the last stored coefficient is nonzero; the zero polynomial
/// stores an empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Add `c * q^k` in place.
    pub fn add_term(&mut self, k: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        self.normalize();
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Value at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Value at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Value at `q = 1` (sum of coefficients).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at `q = -1` (alternating coefficient sum).
    pub fn eval_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// coeff(k) == coeff(deg - k) for all k.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Exact division, erroring unless the remainder is zero.
    ///
    /// The divisors used in this crate are q-integers, which are monic, so
    /// long division stays in integer coefficients. A nonzero remainder or
    /// a non-monic divisor is reported as an integrity error rather than
    /// approximated.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        if divisor.is_zero() {
            return Err(Error::Integrity("division by zero polynomial".into()));
        }
        if !divisor.coeffs.last().unwrap().is_one() {
            return Err(Error::Integrity(format!(
                "exact division requires a monic divisor, got leading coefficient {}",
                divisor.coeffs.last().unwrap()
            )));
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() - 1 < dd {
            return Err(Error::Integrity(format!(
                "non-exact division: degree {} by degree {}",
                self.coeffs.len() - 1,
                dd
            )));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            quot[k] = c.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Integrity(
                "non-exact division: nonzero remainder".into(),
            ));
        }
        Ok(QPoly::from_coeffs(quot))
    }

    /// Sum of the absolute values of the coefficients (test support).
    pub fn coeff_abs_sum(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Serializable form `{"var":"q","coeffs":["1","1",...]}` with decimal
    /// strings, lowest degree first.
    pub fn to_json(&self) -> QPolyJson {
        QPolyJson {
            var: "q",
            coeffs: if self.is_zero() {
                vec!["0".to_string()]
            } else {
                self.coeffs.iter().map(|c| c.to_string()).collect()
            },
        }
    }
}

/// JSON mirror of a [`QPoly`].
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct QPolyJson {
    pub var: &'static str,
    pub coeffs: Vec<String>,
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for QPoly {
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
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn ring_ops() {
        let a = p(&[1, 1]);
        let b = p(&[1, 0, 1]);
        assert_eq!(&a * &b, p(&[1, 1, 1, 1]));
        assert_eq!(&a + &b, p(&[2, 1, 1]));
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
    }

    #[test]
    fn evaluation() {
        let f = p(&[1, 1, 1, 1]);
        assert_eq!(f.eval_one(), BigInt::from(4));
        assert_eq!(f.eval_minus_one(), BigInt::zero());
        assert_eq!(f.eval_int(&BigInt::from(2)), BigInt::from(15));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        assert_eq!(
            f.eval_rational(&half),
            BigRational::new(BigInt::from(15), BigInt::from(8))
        );
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[1, 1, 1]);
        let b = p(&[1, 2, 2, 1]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn non_exact_division_is_an_error() {
        // (2)_q / (3)_q leaves a remainder.
        let two = p(&[1, 1]);
        let three = p(&[1, 1, 1]);
        assert!(matches!(two.exact_div(&three), Err(Error::Integrity(_))));
    }

    #[test]
    fn palindromic() {
        assert!(p(&[1, 2, 1]).is_palindromic());
        assert!(!p(&[1, 2, 3]).is_palindromic());
        assert!(QPoly::zero().is_palindromic());
    }

    #[test]
    fn json_form() {
        let f = p(&[1, 1]);
        let js = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(js, r#"{"var":"q","coeffs":["1","1"]}"#);
    }
}
