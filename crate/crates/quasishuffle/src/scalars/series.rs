//! Truncated power series over Q, exact through a fixed degree.

use super::Rat;
use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// A power series known exactly through degree `trunc`; higher terms are
/// discarded by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    trunc: usize,
    coeffs: Vec<Rat>, // length trunc + 1, index n = x^n coefficient
}

impl TruncSeries {
    pub fn zero(trunc: usize) -> Self {
        TruncSeries {
            trunc,
            coeffs: vec![Rat::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = Rat::one();
        s
    }

    /// Build from explicit coefficients (padded or truncated to `trunc`).
    pub fn from_coeffs(trunc: usize, coeffs: Vec<Rat>) -> Self {
        let mut c = coeffs;
        c.resize(trunc + 1, Rat::zero());
        TruncSeries { trunc, coeffs: c }
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, v: Rat) {
        self.coeffs[n] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let coeffs = (0..=trunc)
            .map(|n| &self.coeffs[n] + &other.coeffs[n])
            .collect();
        TruncSeries { trunc, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let coeffs = (0..=trunc)
            .map(|n| &self.coeffs[n] - &other.coeffs[n])
            .collect();
        TruncSeries { trunc, coeffs }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        TruncSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = vec![Rat::zero(); trunc + 1];
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=trunc - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        TruncSeries { trunc, coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut inv = vec![Rat::zero(); self.trunc + 1];
        inv[0] = Rat::one() / &self.coeffs[0];
        for n in 1..=self.trunc {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv[n - k];
            }
            inv[n] = -acc / &self.coeffs[0];
        }
        Ok(TruncSeries {
            trunc: self.trunc,
            coeffs: inv,
        })
    }

    pub fn derivative(&self) -> Self {
        let mut coeffs = vec![Rat::zero(); self.trunc + 1];
        for n in 1..=self.trunc {
            coeffs[n - 1] = &self.coeffs[n] * Rat::from_integer(n.into());
        }
        TruncSeries {
            trunc: self.trunc,
            coeffs,
        }
    }

    /// Substitute `inner` (which must have zero constant term) into `self`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let trunc = self.trunc.min(inner.trunc);
        let mut acc = TruncSeries::zero(trunc);
        // Horner evaluation from the top coefficient down.
        for n in (0..=trunc).rev() {
            acc = acc.mul(inner);
            let c = &self.coeffs[n] + acc.coeff(0);
            acc.set_coeff(0, c);
        }
        Ok(acc)
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        // E' = A' E, solved coefficientwise with E(0) = 1.
        let mut e = vec![Rat::zero(); self.trunc + 1];
        e[0] = Rat::one();
        for n in 1..=self.trunc {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * Rat::from_integer(k.into()) * &e[n - k];
            }
            e[n] = acc / Rat::from_integer(n.into());
        }
        Ok(TruncSeries {
            trunc: self.trunc,
            coeffs: e,
        })
    }

    /// Coefficients c_1..c_N of the logarithmic derivative x A'(x) / A(x).
    ///
    /// Requires a nonzero constant term.
    pub fn c_sequence(&self) -> Result<Vec<Rat>> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let ld = self.derivative().mul(&self.invert()?);
        // x * ld: coefficient of x^n in the result is ld[n-1]
        Ok((1..=self.trunc).map(|n| ld.coeff(n - 1).clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int, rat_pow};

    /// (1 - x) / (1 - 2x) through degree n.
    fn qsym_poincare(n: usize) -> TruncSeries {
        let num = TruncSeries::from_coeffs(n, vec![rat_int(1), rat_int(-1)]);
        let den = TruncSeries::from_coeffs(n, vec![rat_int(1), rat_int(-2)]);
        num.mul(&den.invert().unwrap())
    }

    #[test]
    fn c_sequence_of_rational_function() {
        // A = (1-x)/(1-2x) has c_n = 2^n - 1
        let c = qsym_poincare(8).c_sequence().unwrap();
        for (i, cn) in c.iter().enumerate() {
            let n = (i + 1) as u32;
            assert_eq!(*cn, rat_int(2i64.pow(n) - 1));
        }
    }

    #[test]
    fn c_sequence_of_geometric() {
        // A = 1/(1-x) has c_n = 1 for all n
        let a = TruncSeries::from_coeffs(6, vec![rat_int(1), rat_int(-1)])
            .invert()
            .unwrap();
        assert_eq!(a.c_sequence().unwrap(), vec![rat_int(1); 6]);
    }

    #[test]
    fn c_sequence_of_constant() {
        assert_eq!(TruncSeries::one(5).c_sequence().unwrap(), vec![rat_int(0); 5]);
    }

    #[test]
    fn c_sequence_needs_nonzero_constant() {
        assert!(matches!(
            TruncSeries::zero(4).c_sequence(),
            Err(Error::ZeroConstantTerm)
        ));
    }

    #[test]
    fn inversion_round_trip() {
        let a = TruncSeries::from_coeffs(7, vec![rat_int(2), rat(1, 3), rat_int(-5), rat(7, 2)]);
        assert_eq!(a.mul(&a.invert().unwrap()), TruncSeries::one(7));
    }

    #[test]
    fn exp_reconstructs_series_from_c_sequence() {
        // A = exp(sum c_n x^n / n) whenever A(0) = 1
        let a = qsym_poincare(8);
        let c = a.c_sequence().unwrap();
        let mut integrand = TruncSeries::zero(8);
        for (i, cn) in c.iter().enumerate() {
            let n = i + 1;
            integrand.set_coeff(n, cn / rat_int(n as i64));
        }
        assert_eq!(integrand.exp().unwrap(), a);
    }

    #[test]
    fn composition_matches_substitution() {
        // f(t) = t/(1-t), g(t) = t/(1+t): f(g(t)) = t
        let n = 9;
        let f = TruncSeries::from_coeffs(n, (0..=n).map(|k| if k == 0 { rat_int(0) } else { rat_int(1) }).collect());
        let g = TruncSeries::from_coeffs(
            n,
            (0..=n)
                .map(|k| {
                    if k == 0 {
                        rat_int(0)
                    } else {
                        rat_pow(&rat_int(-1), (k - 1) as u64)
                    }
                })
                .collect(),
        );
        let mut t = TruncSeries::zero(n);
        t.set_coeff(1, rat_int(1));
        assert_eq!(f.compose(&g).unwrap(), t);
    }
}
