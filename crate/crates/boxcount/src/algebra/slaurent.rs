//! Laurent polynomials in `s`, where `s^2 = q`.
//!
//! Half-integer powers of `q` (such as the diagonal-operator prefactor
//! `q^{(1-a-b)/2}` and the chain eigenvalue `q^{|T|-abc/2}`) never enter
//! [`QPoly`](super::QPoly); they live here as integer powers of `s`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul};

use super::cyclo::Cyclo8;
use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Laurent polynomial in `s`; `low` is the exponent of `coeffs[0]`.
///
/// Invariant: first and last coefficients are nonzero; zero is the empty
/// vector with `low = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SLaurent {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl SLaurent {
    pub fn zero() -> Self {
        SLaurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        SLaurent::monomial(0)
    }

    /// `s^k` (k may be negative).
    pub fn monomial(k: i64) -> Self {
        SLaurent { low: k, coeffs: vec![BigInt::one()] }
    }

    pub fn term(k: i64, c: BigInt) -> Self {
        let mut p = SLaurent { low: k, coeffs: vec![c] };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest_exponent(&self) -> Option<i64> {
        if self.is_zero() { None } else { Some(self.low) }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if self.is_zero() || k < self.low {
            return BigInt::zero();
        }
        self.coeffs
            .get((k - self.low) as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.is_zero() {
            self.low = k;
            self.coeffs = vec![c.clone()];
            return;
        }
        if k < self.low {
            let pad = (self.low - k) as usize;
            let mut coeffs = vec![BigInt::zero(); pad];
            coeffs.extend(self.coeffs.drain(..));
            self.coeffs = coeffs;
            self.low = k;
        }
        let idx = (k - self.low) as usize;
        if self.coeffs.len() <= idx {
            self.coeffs.resize(idx + 1, BigInt::zero());
        }
        self.coeffs[idx] += c;
        self.normalize();
    }

    /// Reinterpret as a polynomial in `q = s^2`. Fails if any odd power of
    /// `s` is present or if a negative power survives.
    pub fn to_qpoly(&self) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.low + idx as i64;
            if k % 2 != 0 || k < 0 {
                return Err(Error::Integrity(format!(
                    "exponent s^{k} has no image in q-polynomials"
                )));
            }
            out.add_term((k / 2) as usize, c);
        }
        Ok(out)
    }

    /// Substitute a nonzero exact value for `s`. Ring homomorphism.
    pub fn eval_cyclo(&self, s0: &Cyclo8) -> Result<Cyclo8> {
        if self.is_zero() {
            return Ok(Cyclo8::zero());
        }
        let mut result = Cyclo8::zero();
        let mut power = if self.low < 0 {
            s0.inv()?.pow(self.low.unsigned_abs() as u32)
        } else {
            s0.pow(self.low as u32)
        };
        for c in &self.coeffs {
            result = &result + &power.scale_int(c);
            power = power.mul(s0);
        }
        Ok(result)
    }
}

impl Add<&SLaurent> for &SLaurent {
    type Output = SLaurent;
    fn add(self, rhs: &SLaurent) -> SLaurent {
        let mut out = self.clone();
        for (idx, c) in rhs.coeffs.iter().enumerate() {
            out.add_term(rhs.low + idx as i64, c);
        }
        out
    }
}

impl Mul<&SLaurent> for &SLaurent {
    type Output = SLaurent;
    fn mul(self, rhs: &SLaurent) -> SLaurent {
        if self.is_zero() || rhs.is_zero() {
            return SLaurent::zero();
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
        let mut out = SLaurent { low: self.low + rhs.low, coeffs };
        out.normalize();
        out
    }
}

impl fmt::Display for SLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.low + idx as i64;
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
                        write!(f, "s")?;
                    } else {
                        write!(f, "s^{k}")?;
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

    #[test]
    fn monomial_products_add_exponents() {
        let a = SLaurent::monomial(-3);
        let b = SLaurent::monomial(5);
        assert_eq!(&a * &b, SLaurent::monomial(2));
    }

    #[test]
    fn to_qpoly_even_exponents() {
        let mut f = SLaurent::zero();
        f.add_term(0, &BigInt::one());
        f.add_term(2, &BigInt::from(3));
        let q = f.to_qpoly().unwrap();
        assert_eq!(q.coeff(0), BigInt::one());
        assert_eq!(q.coeff(1), BigInt::from(3));

        let odd = SLaurent::monomial(1);
        assert!(odd.to_qpoly().is_err());
        let neg = SLaurent::monomial(-2);
        assert!(neg.to_qpoly().is_err());
    }

    #[test]
    fn eval_at_i_is_homomorphic() {
        // (s + s^-1)^2 evaluated at s = i equals (i - i)^2 = 0.
        let f = &SLaurent::monomial(1) + &SLaurent::monomial(-1);
        let sq = &f * &f;
        let at_i = sq.eval_cyclo(&Cyclo8::i()).unwrap();
        assert!(at_i.is_zero());
        let also = f.eval_cyclo(&Cyclo8::i()).unwrap();
        assert!(also.is_zero());
    }
}
