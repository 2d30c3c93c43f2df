use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::lattice::DenseAccumulator;
use super::{LatticePoly, LefschetzPoly};
use crate::error::{Error, Result};

/// A power series in `s` truncated after `s^order`, with [`LatticePoly`]
/// coefficients.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiscSeries {
    order: usize,
    coeffs: Vec<LatticePoly>,
}

impl DiscSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![LatticePoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, LatticePoly::one())
    }

    pub fn constant(order: usize, c: LatticePoly) -> Self {
        Self::monomial(order, c, 0)
    }

    /// `c * s^s_exp`, which is zero when `s_exp > order`.
    pub fn monomial(order: usize, c: LatticePoly, s_exp: usize) -> Self {
        let mut out = Self::zero(order);
        if s_exp <= order {
            out.coeffs[s_exp] = c;
        }
        out
    }

    /// Builds a series from its first coefficients; missing entries are zero
    /// and entries past `order` are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = LatticePoly>) -> Self {
        let mut out = Self::zero(order);
        for (slot, c) in out.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[LatticePoly] {
        &self.coeffs
    }

    /// Coefficient of `s^n`; zero past the truncation order.
    pub fn coeff(&self, n: usize) -> LatticePoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, n: usize) -> Option<&LatticePoly> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LatticePoly::is_zero)
    }

    /// Lowest `s`-degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn nonzero_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    /// Re-truncates to a smaller order, or pads with zeros for a larger one.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    pub fn scale(&self, c: &LatticePoly) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_lefschetz(&self, c: &LefschetzPoly) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Multiplies by `s^k`, dropping what falls past the order.
    pub fn shift_s(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for n in 0..=self.order.saturating_sub(k) {
            if n + k <= self.order {
                out.coeffs[n + k] = self.coeffs[n].clone();
            }
        }
        out
    }

    /// Substitutes `u = 1` coefficientwise, keeping the `L`-dependence.
    pub fn at_u_one(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| LatticePoly::constant(c.at_u_one()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `1 / (1 - self)` as the geometric series `sum_m self^m`.
    ///
    /// Requires a zero constant term, otherwise `1 - self` is not a unit of
    /// the truncated ring.
    pub fn one_minus_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotUnitComplement);
        }
        // r_0 = 1, r_n = sum_{i=1..n} y_i r_{n-i}
        let mut out = Self::one(self.order);
        for n in 1..=self.order {
            let mut acc = DenseAccumulator::new();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !out.coeffs[n - i].is_zero() {
                    acc.add_product(&self.coeffs[i], &out.coeffs[n - i]);
                }
            }
            out.coeffs[n] = acc.finish();
        }
        Ok(out)
    }
}

impl fmt::Debug for DiscSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiscSeries[order {}]({self})", self.order)
    }
}

impl fmt::Display for DiscSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]*s^{n}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(s^{})", self.order + 1)
    }
}

impl Neg for &DiscSeries {
    type Output = DiscSeries;
    fn neg(self) -> DiscSeries {
        DiscSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for DiscSeries {
    type Output = DiscSeries;
    fn neg(self) -> DiscSeries {
        -&self
    }
}

impl Add<&DiscSeries> for &DiscSeries {
    type Output = DiscSeries;
    fn add(self, rhs: &DiscSeries) -> DiscSeries {
        let order = self.order.min(rhs.order);
        DiscSeries {
            order,
            coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl Sub<&DiscSeries> for &DiscSeries {
    type Output = DiscSeries;
    fn sub(self, rhs: &DiscSeries) -> DiscSeries {
        let order = self.order.min(rhs.order);
        DiscSeries {
            order,
            coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl Mul<&DiscSeries> for &DiscSeries {
    type Output = DiscSeries;
    fn mul(self, rhs: &DiscSeries) -> DiscSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = DenseAccumulator::new();
                for i in 0..=n {
                    let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                acc.finish()
            })
            .collect();
        DiscSeries { order, coeffs }
    }
}

crate::algebra::forward_binops!(DiscSeries);
