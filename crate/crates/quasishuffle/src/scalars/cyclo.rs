//! Exact arithmetic in the cyclotomic field Q(w), where w = e^{2*pi*i/r}.
//!
//! Elements are polynomials in w reduced modulo the r-th cyclotomic
//! polynomial, so equality in the field is coefficientwise equality.

use super::{divisors, Rat};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Coefficients of the monic r-th cyclotomic polynomial, index i = x^i term.
///
/// Computed by dividing x^r - 1 by the product of the d-th cyclotomic
/// polynomials over the proper divisors d of r.
pub fn cyclotomic_polynomial(r: u32) -> Vec<Rat> {
    assert!(r >= 1);
    if r == 1 {
        return vec![-Rat::one(), Rat::one()]; // x - 1
    }
    // x^r - 1
    let mut num = vec![Rat::zero(); r as usize + 1];
    num[0] = -Rat::one();
    num[r as usize] = Rat::one();
    let mut den = vec![Rat::one()];
    for d in divisors(r as u64) {
        if (d as u32) < r {
            den = poly_mul(&den, &cyclotomic_polynomial(d as u32));
        }
    }
    let (q, rem) = poly_divmod(&num, &den);
    debug_assert!(rem.iter().all(Rat::is_zero));
    q
}

pub(crate) fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division with remainder; `b` must have a nonzero leading coefficient.
pub(crate) fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    assert!(!b[db].is_zero());
    let mut rem: Vec<Rat> = a.to_vec();
    if rem.len() <= db {
        return (vec![Rat::zero()], rem);
    }
    let mut quot = vec![Rat::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = &rem[i] / &b[db];
        if c.is_zero() {
            continue;
        }
        quot[i - db] = c.clone();
        for j in 0..=db {
            let t = &c * &b[j];
            rem[i - db + j] -= t;
        }
    }
    rem.truncate(db);
    (quot, rem)
}

/// An element of Q(w_r), stored as a polynomial in w of degree < deg(Phi_r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<Rat>, // length = deg(Phi_order); index i = coefficient of w^i
}

impl CycloNum {
    fn degree_of(order: u32) -> usize {
        cyclotomic_polynomial(order).len() - 1
    }

    pub fn zero(order: u32) -> Self {
        CycloNum {
            order,
            coeffs: vec![Rat::zero(); Self::degree_of(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rat(order, Rat::one())
    }

    pub fn from_rat(order: u32, value: Rat) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = value;
        c
    }

    /// The generator w = e^{2*pi*i/order} (reduced, so w = 1 when order = 1).
    pub fn omega(order: u32) -> Self {
        Self::omega_pow(order, 1)
    }

    /// w^k for any integer k (k may exceed the order; it is reduced mod order).
    pub fn omega_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rat::zero(); e + 1];
        poly[e] = Rat::one();
        Self::reduce(order, poly)
    }

    fn reduce(order: u32, poly: Vec<Rat>) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let deg = modulus.len() - 1;
        let coeffs = if poly.len() > deg {
            let (_, rem) = poly_divmod(&poly, &modulus);
            rem
        } else {
            poly
        };
        let mut out = vec![Rat::zero(); deg];
        for (i, c) in coeffs.into_iter().enumerate() {
            out[i] = c;
        }
        CycloNum { order, coeffs: out }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Some(q) when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(Rat::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycloNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycloNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let prod = poly_mul(&self.coeffs, &other.coeffs);
        Ok(Self::reduce(self.order, prod))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            let body = if var.is_empty() {
                c.to_string()
            } else if c.is_one() {
                var
            } else if (-c).is_one() {
                format!("-{var}")
            } else {
                format!("{c} {var}")
            };
            if parts.is_empty() {
                parts.push(body);
            } else if let Some(stripped) = body.strip_prefix('-') {
                parts.push(format!("- {stripped}"));
            } else {
                parts.push(format!("+ {body}"));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" "))
    }
}
