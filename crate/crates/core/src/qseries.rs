//! Dense truncated power series in one variable `q` with exact integer coefficients.
//!
//! A [`SeriesQ`] of order `N` stores `c_0, ..., c_N` and represents the class of a
//! power series modulo `q^(N+1)`. Every operation is checked: an `i64` overflow is
//! reported as [`Error::Overflow`], never wrapped.

use std::fmt;

use crate::error::{Error, Result};

pub type Coeff = i64;

/// Truncation order `N`: series are computed modulo `q^(N+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(usize);

impl Order {
    pub const fn new(n: usize) -> Self {
        Self(n)
    }

    pub const fn value(self) -> usize {
        self.0
    }

    /// Number of stored coefficients, `N + 1`.
    #[allow(clippy::len_without_is_empty)]
    pub const fn len(self) -> usize {
        self.0 + 1
    }
}

impl From<usize> for Order {
    fn from(n: usize) -> Self {
        Self(n)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// First coefficient at which two series disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub left: Coeff,
    pub right: Coeff,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of q^{}: left = {}, right = {}",
            self.index, self.left, self.right
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesQ {
    coeffs: Vec<Coeff>,
}

impl SeriesQ {
    /// Series whose order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Coeff>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: Order) -> Self {
        Self {
            coeffs: vec![0; order.len()],
        }
    }

    pub fn constant(c: Coeff, order: Order) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: Order) -> Self {
        Self::constant(1, order)
    }

    /// `c * q^exponent`, or zero when the exponent is beyond the order.
    pub fn monomial(c: Coeff, exponent: usize, order: Order) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order.value() {
            s.coeffs[exponent] = c;
        }
        s
    }

    pub fn order(&self) -> Order {
        Order(self.coeffs.len() - 1)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coeff> {
        self.coeffs
    }

    /// Coefficient of `q^k`; zero beyond the order.
    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Adds `c` to the coefficient of `q^k`; a no-op beyond the order.
    pub fn add_to_coeff(&mut self, k: usize, c: Coeff) -> Result<()> {
        if let Some(slot) = self.coeffs.get_mut(k) {
            *slot = slot.checked_add(c).ok_or(Error::Overflow("add_to_coeff"))?;
        }
        Ok(())
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::OrderMismatch {
                left: self.order().value(),
                right: other.order().value(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("add")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow("sub")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn try_neg(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow("neg")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn try_scale(&self, c: Coeff) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c).ok_or(Error::Overflow("scale")))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated to the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.coeffs.len();
        let mut out = vec![0 as Coeff; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..n - i].iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let term = a.checked_mul(b).ok_or(Error::Overflow("mul"))?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow("mul"))?;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies by `q^k`, dropping whatever falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![0; n];
        if k < n {
            out[k..].copy_from_slice(&self.coeffs[..n - k]);
        }
        Self { coeffs: out }
    }

    /// Same series at a smaller (or equal) order.
    ///
    /// # Panics
    /// If `order` exceeds the current order.
    pub fn truncate(&self, order: Order) -> Self {
        assert!(
            order <= self.order(),
            "cannot truncate order {} series to order {}",
            self.order(),
            order
        );
        Self {
            coeffs: self.coeffs[..order.len()].to_vec(),
        }
    }

    /// In-place multiplication by `1 - q^j`.
    pub fn mul_one_minus_in_place(&mut self, j: usize) -> Result<()> {
        if j == 0 {
            return Err(Error::ZeroExponent);
        }
        for k in (j..self.coeffs.len()).rev() {
            self.coeffs[k] = self.coeffs[k]
                .checked_sub(self.coeffs[k - j])
                .ok_or(Error::Overflow("product_one_minus"))?;
        }
        Ok(())
    }

    /// In-place multiplication by `1 / (1 - q^j) = 1 + q^j + q^2j + ...`.
    pub fn div_one_minus_in_place(&mut self, j: usize) -> Result<()> {
        if j == 0 {
            return Err(Error::ZeroExponent);
        }
        for k in j..self.coeffs.len() {
            self.coeffs[k] = self.coeffs[k]
                .checked_add(self.coeffs[k - j])
                .ok_or(Error::Overflow("inverse_one_minus"))?;
        }
        Ok(())
    }

    /// Compares coefficients `0..=upto`.
    ///
    /// # Panics
    /// If `upto` exceeds either order.
    pub fn eq_to_order(&self, other: &Self, upto: Order) -> std::result::Result<(), Mismatch> {
        assert!(
            upto <= self.order() && upto <= other.order(),
            "comparison order {} exceeds series orders {} / {}",
            upto,
            self.order(),
            other.order()
        );
        match (0..upto.len()).find(|&k| self.coeffs[k] != other.coeffs[k]) {
            None => Ok(()),
            Some(index) => Err(Mismatch {
                index,
                left: self.coeffs[index],
                right: other.coeffs[index],
            }),
        }
    }
}

/// Truncation of `∏_{j ∈ exponents} (1 - q^j)`.
///
/// Each listed exponent contributes one factor, so a repeated exponent squares its
/// factor. Exponents beyond the order are no-ops; zero is rejected.
pub fn product_one_minus<I>(exponents: I, order: Order) -> Result<SeriesQ>
where
    I: IntoIterator<Item = usize>,
{
    let mut s = SeriesQ::one(order);
    for j in exponents {
        s.mul_one_minus_in_place(j)?;
    }
    Ok(s)
}

/// Truncation of `∏_{j ∈ exponents} 1 / (1 - q^j)`. The coefficient of `q^n` counts
/// partitions of `n` into parts drawn from `exponents`.
pub fn inverse_one_minus<I>(exponents: I, order: Order) -> Result<SeriesQ>
where
    I: IntoIterator<Item = usize>,
{
    let mut s = SeriesQ::one(order);
    for j in exponents {
        s.div_one_minus_in_place(j)?;
    }
    Ok(s)
}

impl fmt::Display for SeriesQ {
    /// `1 - q + 2*q^3 + O(q^6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.unsigned_abs();
            match (k, abs) {
                (0, _) => write!(f, "{abs}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{abs}*q")?,
                (_, 1) => write!(f, "q^{k}")?,
                _ => write!(f, "{abs}*q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.coeffs.len())
    }
}
