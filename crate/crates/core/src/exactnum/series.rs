//! Truncated formal power series over exact rationals.

use super::Rat;
use num_traits::{One, Zero};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series exponential requires a zero constant term")]
    NonzeroConstantTerm,
}

/// A formal power series truncated at a fixed order: coefficients c_0..c_N
/// of t^0..t^N. Arithmetic never silently extends or shrinks the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Build from explicit coefficients c_0..c_N (so the order is `len - 1`).
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        TruncatedSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        Self::from_fn(order, |k| if k == 0 { c.clone() } else { Rat::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn check_orders(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_orders(other)?;
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Formal exponential of a series with zero constant term, via the ODE
    /// recurrence (k+1) e_{k+1} = sum_{j<=k} (j+1) a_{j+1} e_{k-j}.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut e = vec![Rat::zero(); n + 1];
        e[0] = Rat::one();
        for k in 0..n {
            let mut acc = Rat::zero();
            for j in 0..=k {
                let a = &self.coeffs[j + 1];
                if !a.is_zero() {
                    acc += Rat::from_integer((j as i64 + 1).into()) * a * &e[k - j];
                }
            }
            e[k + 1] = acc / Rat::from_integer((k as i64 + 1).into());
        }
        Ok(TruncatedSeries { coeffs: e })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    #[test]
    fn mul_truncates() {
        let a = TruncatedSeries::new(vec![rat_int(1), rat_int(1), rat_int(0)]);
        let b = TruncatedSeries::new(vec![rat_int(1), rat_int(-1), rat_int(0)]);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coeffs(), &[rat_int(1), rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = TruncatedSeries::constant(rat_int(1), 2);
        let b = TruncatedSeries::constant(rat_int(1), 3);
        assert_eq!(
            a.mul(&b).unwrap_err(),
            SeriesError::OrderMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn exp_of_t() {
        let t = TruncatedSeries::from_fn(3, |k| if k == 1 { rat_int(1) } else { rat_int(0) });
        let e = t.exp().unwrap();
        assert_eq!(e.coeffs(), &[rat_int(1), rat_int(1), rat(1, 2), rat(1, 6)]);
    }

    #[test]
    fn exp_requires_zero_constant() {
        let s = TruncatedSeries::constant(rat_int(1), 4);
        assert_eq!(s.exp().unwrap_err(), SeriesError::NonzeroConstantTerm);
    }
}
