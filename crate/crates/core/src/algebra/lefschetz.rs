use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in the Lefschetz class `L` with arbitrary-precision
/// integer coefficients.
///
/// Stored sparsely as `exponent -> coefficient`; zero coefficients are never
/// stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LefschetzPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LefschetzPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The class `L` of the affine line.
    pub fn lefschetz() -> Self {
        Self::l_pow(1)
    }

    /// `L^exp`.
    pub fn l_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0)
    }

    pub fn monomial(coef: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (exp, coef) in terms {
            out.add_term(exp, coef.into());
        }
        out
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.min_exp().is_some_and(|e| e < 0)
    }

    pub(crate) fn add_term(&mut self, exp: i64, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `L^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a rational value for `L`.
    pub fn eval(&self, l: &BigRational) -> Result<BigRational> {
        if l.is_zero() && self.has_negative_exponents() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += rational_pow(l, *e) * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }
}

/// `x^e` for a possibly negative exponent; the caller guarantees `x != 0` when `e < 0`.
pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    let k = u32::try_from(e.unsigned_abs()).expect("exponent fits in u32");
    // numerator and denominator stay coprime under powers
    BigRational::new_raw(base.numer().pow(k), base.denom().pow(k))
}

impl From<i64> for LefschetzPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for LefschetzPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LefschetzPoly({self})")
    }
}

impl fmt::Display for LefschetzPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "L")?,
                (1, false) => write!(f, "{mag}*L")?,
                (e, true) => write!(f, "L^{e}")?,
                (e, false) => write!(f, "{mag}*L^{e}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&LefschetzPoly> for LefschetzPoly {
    fn add_assign(&mut self, rhs: &LefschetzPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LefschetzPoly> for LefschetzPoly {
    fn sub_assign(&mut self, rhs: &LefschetzPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Neg for &LefschetzPoly {
    type Output = LefschetzPoly;
    fn neg(self) -> LefschetzPoly {
        LefschetzPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LefschetzPoly {
    type Output = LefschetzPoly;
    fn neg(mut self) -> LefschetzPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add<&LefschetzPoly> for &LefschetzPoly {
    type Output = LefschetzPoly;
    fn add(self, rhs: &LefschetzPoly) -> LefschetzPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LefschetzPoly> for &LefschetzPoly {
    type Output = LefschetzPoly;
    fn sub(self, rhs: &LefschetzPoly) -> LefschetzPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LefschetzPoly> for &LefschetzPoly {
    type Output = LefschetzPoly;
    fn mul(self, rhs: &LefschetzPoly) -> LefschetzPoly {
        let (Some(a_lo), Some(a_hi), Some(b_lo), Some(b_hi)) =
            (self.min_exp(), self.max_exp(), rhs.min_exp(), rhs.max_exp())
        else {
            return LefschetzPoly::zero();
        };
        // dense accumulation over the exponent window
        let lo = a_lo + b_lo;
        let width = (a_hi - a_lo + b_hi - b_lo + 1) as usize;
        let mut buf = vec![BigInt::zero(); width];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                buf[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LefschetzPoly {
            terms: buf
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }
}

crate::algebra::forward_binops!(LefschetzPoly);

#[cfg(test)]
mod tests {
    use super::*;

    fn l(e: i64) -> LefschetzPoly {
        LefschetzPoly::l_pow(e)
    }

    #[test]
    fn difference_of_squares() {
        let one = LefschetzPoly::one();
        let p = (&one + &l(1)) * (&one - &l(1));
        assert_eq!(p, &one - &l(2));
    }

    #[test]
    fn localization_identity() {
        assert_eq!(l(-1) * l(1), LefschetzPoly::one());
    }

    #[test]
    fn times_one_keeps_table_coefficient() {
        let a = l(12) - l(11);
        assert_eq!(&a * &LefschetzPoly::one(), a);
        assert_eq!(a.coeff(12), BigInt::from(1));
        assert_eq!(a.coeff(11), BigInt::from(-1));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = l(3) + l(-2);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn eval_rejects_zero_with_negative_powers() {
        let a = l(-1) + l(2);
        assert_eq!(a.eval(&BigRational::zero()), Err(Error::DivisionByZero));
        let b = l(2) + l(0);
        assert_eq!(b.eval(&BigRational::zero()).unwrap(), BigRational::one());
    }

    #[test]
    fn eval_handles_negative_exponents() {
        let a = l(-2) * LefschetzPoly::constant(8);
        let v = a.eval(&BigRational::from_integer(2.into())).unwrap();
        assert_eq!(v, BigRational::from_integer(2.into()));
    }

    #[test]
    fn display() {
        let a = l(12) - l(11) + LefschetzPoly::constant(-3);
        assert_eq!(a.to_string(), "-3 - L^11 + L^12");
        assert_eq!(LefschetzPoly::zero().to_string(), "0");
        assert_eq!((l(1) * LefschetzPoly::constant(2)).to_string(), "2*L");
    }
}
