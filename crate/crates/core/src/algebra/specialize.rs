use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lefschetz::rational_pow;
use super::DiscSeries;
use crate::error::{Error, Result};

/// A polynomial in `u` and Laurent in `L` with rational coefficients, keyed by
/// `(u_exp, l_exp)`. Substituted variables only ever appear with exponent 0.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct RationalPoly {
    terms: BTreeMap<(u32, i64), BigRational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: BigRational) -> Self {
        let mut out = Self::zero();
        out.add_term(0, 0, c);
        out
    }

    pub fn add_term(&mut self, u_exp: u32, l_exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let key = (u_exp, l_exp);
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Iterates `(u_exp, l_exp, coef)` sorted by `(u, L)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64, &BigRational)> + '_ {
        self.terms.iter().map(|((u, l), c)| (*u, *l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when no variable survives, `None` otherwise.
    pub fn as_scalar(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }
}

impl Mul<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = RationalPoly::zero();
        for ((ua, la), ca) in &self.terms {
            for ((ub, lb), cb) in &rhs.terms {
                out.add_term(ua + ub, la + lb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((u, l), c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut vars = Vec::new();
            match u {
                0 => {}
                1 => vars.push("u".to_string()),
                u => vars.push(format!("u^{u}")),
            }
            match l {
                0 => {}
                1 => vars.push("L".to_string()),
                l => vars.push(format!("L^{l}")),
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A truncated `s`-series after substituting values for `u` and/or `L`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    order: usize,
    coeffs: Vec<RationalPoly>,
}

impl RationalSeries {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[RationalPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> RationalPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// Every coefficient as a plain rational, when both `u` and `L` were
    /// substituted.
    pub fn scalars(&self) -> Option<Vec<BigRational>> {
        self.coeffs.iter().map(RationalPoly::as_scalar).collect()
    }
}

impl Mul<&RationalSeries> for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = RationalPoly::zero();
                for i in 0..=n {
                    for (u, l, c) in (&self.coeffs[i] * &rhs.coeffs[n - i]).terms() {
                        acc.add_term(u, l, c.clone());
                    }
                }
                acc
            })
            .collect();
        RationalSeries { order, coeffs }
    }
}

/// Substitutes optional rational values for `u` and `L`.
///
/// With no substitutions the coefficients are carried over unchanged (as
/// integers). Substituting `L = 0` fails when a negative `L`-power is present.
pub fn specialize(
    p: &DiscSeries,
    u_val: Option<&BigRational>,
    l_val: Option<&BigRational>,
) -> Result<RationalSeries> {
    if let Some(l) = l_val {
        let negative = p
            .coeffs()
            .iter()
            .any(|c| c.monomials().any(|(_, le, _)| le < 0));
        if l.is_zero() && negative {
            return Err(Error::DivisionByZero);
        }
    }
    let mut u_powers: HashMap<i64, BigRational> = HashMap::new();
    let mut l_powers: HashMap<i64, BigRational> = HashMap::new();
    let mut coeffs = Vec::with_capacity(p.order() + 1);
    for c in p.coeffs() {
        // integer-valued terms are summed without rational normalization
        let mut integral: BTreeMap<(u32, i64), BigInt> = BTreeMap::new();
        let mut out = RationalPoly::zero();
        for (ue, le, x) in c.monomials() {
            let mut factor = BigRational::one();
            let mut key = (ue, le);
            if let Some(u) = u_val {
                factor *= &*u_powers
                    .entry(i64::from(ue))
                    .or_insert_with(|| rational_pow(u, i64::from(ue)));
                key.0 = 0;
            }
            if let Some(l) = l_val {
                factor *= &*l_powers.entry(le).or_insert_with(|| rational_pow(l, le));
                key.1 = 0;
            }
            if factor.is_integer() {
                *integral.entry(key).or_default() += x * factor.numer();
            } else {
                out.add_term(key.0, key.1, factor * BigRational::from_integer(x.clone()));
            }
        }
        for ((ue, le), v) in integral {
            out.add_term(ue, le, BigRational::from_integer(v));
        }
        coeffs.push(out);
    }
    Ok(RationalSeries {
        order: p.order(),
        coeffs,
    })
}

impl RationalSeries {
    /// Lifts an unspecialized series for comparisons.
    pub fn from_series(p: &DiscSeries) -> Self {
        specialize(p, None, None).expect("identity substitution cannot fail")
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![RationalPoly::zero(); order + 1];
        coeffs[0] = RationalPoly::scalar(BigRational::one());
        Self { order, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{LatticePoly, LefschetzPoly};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn constant_term_at_u1_l2() {
        let p = DiscSeries::constant(0, LatticePoly::monomial(LefschetzPoly::lefschetz(), 2));
        let r = specialize(&p, Some(&q(1)), Some(&q(2))).unwrap();
        assert_eq!(r.scalars().unwrap(), vec![q(2)]);
    }

    #[test]
    fn no_substitution_is_identity() {
        let p = DiscSeries::from_coeffs(
            2,
            [
                LatticePoly::from_monomials([(2, 1, 1)]),
                LatticePoly::from_monomials([(2, 17, 1), (2, 18, 1)]),
            ],
        );
        let r = specialize(&p, None, None).unwrap();
        let flat: Vec<_> = r.coeff(1).terms().map(|(u, l, c)| (u, l, c.clone())).collect();
        assert_eq!(flat, vec![(2, 17, q(1)), (2, 18, q(1))]);
        assert!(r.coeff(2).is_zero());
        assert!(r.scalars().is_none());
    }

    #[test]
    fn table_monomial_at_l3() {
        let a = LefschetzPoly::from_terms([(12, 1), (11, -1)]);
        let p = DiscSeries::monomial(6, LatticePoly::monomial(a, 4), 6);
        let r = specialize(&p, Some(&q(1)), Some(&q(3))).unwrap();
        let expect = 3i64.pow(12) - 3i64.pow(11);
        assert_eq!(expect, 354294);
        assert_eq!(r.coeff(6).as_scalar().unwrap(), q(expect));
    }

    #[test]
    fn zero_l_with_negative_powers_fails() {
        let p = DiscSeries::constant(0, LatticePoly::from_monomials([(0, -1, 1)]));
        assert_eq!(
            specialize(&p, None, Some(&BigRational::zero())),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn display() {
        let mut p = RationalPoly::zero();
        p.add_term(0, 1, q(1));
        p.add_term(2, -1, BigRational::new((-3).into(), 2.into()));
        p.add_term(0, 0, q(5));
        assert_eq!(p.to_string(), "5 + L - 3/2*u^2*L^-1");
        assert_eq!(RationalPoly::zero().to_string(), "0");
    }

    #[test]
    fn u_only_keeps_lefschetz_variable() {
        let p = DiscSeries::constant(0, LatticePoly::from_monomials([(3, 5, 2), (1, 5, 1)]));
        let r = specialize(&p, Some(&q(1)), None).unwrap();
        let flat: Vec<_> = r.coeff(0).terms().map(|(u, l, c)| (u, l, c.clone())).collect();
        assert_eq!(flat, vec![(0, 5, q(3))]);
    }
}
