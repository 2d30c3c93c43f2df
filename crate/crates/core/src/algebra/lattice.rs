use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::Zero;

use super::LefschetzPoly;

/// A polynomial in `u` whose coefficients are [`LefschetzPoly`]s.
///
/// `u` carries the trivial-lattice grading, so exponents are non-negative.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LatticePoly {
    terms: BTreeMap<u32, LefschetzPoly>,
}

impl LatticePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LefschetzPoly::one())
    }

    pub fn constant(c: LefschetzPoly) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * u^u_exp`.
    pub fn monomial(c: LefschetzPoly, u_exp: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u_exp, c);
        }
        Self { terms }
    }

    /// `u^k`.
    pub fn u_pow(k: u32) -> Self {
        Self::monomial(LefschetzPoly::one(), k)
    }

    /// Builds a polynomial from flat `(u_exp, l_exp, coef)` monomials.
    pub fn from_monomials<I, C>(monomials: I) -> Self
    where
        I: IntoIterator<Item = (u32, i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (ue, le, c) in monomials {
            out.add_at(ue, &LefschetzPoly::monomial(c.into(), le));
        }
        out
    }

    /// Iterates `(u_exp, coefficient)` in increasing `u` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &LefschetzPoly)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Iterates flat monomials `(u_exp, l_exp, coef)` sorted by `(u, L)`.
    pub fn monomials(&self) -> impl Iterator<Item = (u32, i64, &BigInt)> + '_ {
        self.terms
            .iter()
            .flat_map(|(ue, p)| p.terms().map(move |(le, c)| (*ue, le, c)))
    }

    pub fn coeff(&self, u_exp: u32) -> LefschetzPoly {
        self.terms.get(&u_exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(LefschetzPoly::is_one)
    }

    pub fn max_u(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub(crate) fn add_at(&mut self, u_exp: u32, c: &LefschetzPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(u_exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&u_exp);
        }
    }

    /// Multiplies by `u^k`.
    pub fn shift_u(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by a Lefschetz class.
    pub fn scale(&self, c: &LefschetzPoly) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_at(*e, &(x * c));
        }
        out
    }

    /// Sum of `u`-coefficients, i.e. the value at `u = 1`.
    pub fn at_u_one(&self) -> LefschetzPoly {
        let mut acc = LefschetzPoly::zero();
        for c in self.terms.values() {
            acc += c;
        }
        acc
    }

    fn l_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.values().filter_map(LefschetzPoly::min_exp).min()?;
        let hi = self.terms.values().filter_map(LefschetzPoly::max_exp).max()?;
        Some((lo, hi))
    }
}

/// Dense `(u, L)` accumulator used by the multiplication kernels.
pub(crate) struct DenseAccumulator {
    l_lo: i64,
    l_width: usize,
    rows: Vec<Vec<BigInt>>,
}

impl DenseAccumulator {
    pub(crate) fn new() -> Self {
        Self {
            l_lo: 0,
            l_width: 0,
            rows: Vec::new(),
        }
    }

    fn reserve(&mut self, u_hi: u32, l_lo: i64, l_hi: i64) {
        if self.rows.len() <= u_hi as usize {
            self.rows.resize_with(u_hi as usize + 1, Vec::new);
        }
        if self.l_width == 0 {
            self.l_lo = l_lo;
            self.l_width = (l_hi - l_lo + 1) as usize;
        } else {
            let new_lo = self.l_lo.min(l_lo);
            let new_hi = (self.l_lo + self.l_width as i64 - 1).max(l_hi);
            let shift = (self.l_lo - new_lo) as usize;
            if shift > 0 {
                for row in &mut self.rows {
                    if !row.is_empty() {
                        let mut fresh = vec![BigInt::zero(); shift];
                        fresh.append(row);
                        *row = fresh;
                    }
                }
            }
            self.l_lo = new_lo;
            self.l_width = (new_hi - new_lo + 1) as usize;
        }
        for row in &mut self.rows {
            if !row.is_empty() && row.len() < self.l_width {
                row.resize(self.l_width, BigInt::zero());
            }
        }
    }

    /// Adds `a * b` into the buffer.
    pub(crate) fn add_product(&mut self, a: &LatticePoly, b: &LatticePoly) {
        let (Some((alo, ahi)), Some((blo, bhi))) = (a.l_range(), b.l_range()) else {
            return;
        };
        let u_hi = a.max_u().unwrap_or(0) + b.max_u().unwrap_or(0);
        self.reserve(u_hi, alo + blo, ahi + bhi);
        let width = self.l_width;
        for (ua, pa) in &a.terms {
            for (ub, pb) in &b.terms {
                let row = &mut self.rows[(ua + ub) as usize];
                if row.is_empty() {
                    row.resize(width, BigInt::zero());
                }
                for (la, ca) in pa.terms() {
                    for (lb, cb) in pb.terms() {
                        row[(la + lb - self.l_lo) as usize] += ca * cb;
                    }
                }
            }
        }
    }

    pub(crate) fn finish(self) -> LatticePoly {
        let l_lo = self.l_lo;
        let mut terms = BTreeMap::new();
        for (ue, row) in self.rows.into_iter().enumerate() {
            let p = LefschetzPoly::from_terms(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (l_lo + i as i64, c)),
            );
            if !p.is_zero() {
                terms.insert(ue as u32, p);
            }
        }
        LatticePoly { terms }
    }
}

impl From<LefschetzPoly> for LatticePoly {
    fn from(c: LefschetzPoly) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for LatticePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePoly({self})")
    }
}

impl fmt::Display for LatticePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let u = match e {
                0 => String::new(),
                1 => "u".to_string(),
                e => format!("u^{e}"),
            };
            match (u.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{u}")?,
                (false, false) => write!(f, "{u}*({c})")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&LatticePoly> for LatticePoly {
    fn add_assign(&mut self, rhs: &LatticePoly) {
        for (e, c) in &rhs.terms {
            self.add_at(*e, c);
        }
    }
}

impl SubAssign<&LatticePoly> for LatticePoly {
    fn sub_assign(&mut self, rhs: &LatticePoly) {
        for (e, c) in &rhs.terms {
            self.add_at(*e, &-c);
        }
    }
}

impl Neg for &LatticePoly {
    type Output = LatticePoly;
    fn neg(self) -> LatticePoly {
        LatticePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LatticePoly {
    type Output = LatticePoly;
    fn neg(self) -> LatticePoly {
        -&self
    }
}

impl Add<&LatticePoly> for &LatticePoly {
    type Output = LatticePoly;
    fn add(self, rhs: &LatticePoly) -> LatticePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LatticePoly> for &LatticePoly {
    type Output = LatticePoly;
    fn sub(self, rhs: &LatticePoly) -> LatticePoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LatticePoly> for &LatticePoly {
    type Output = LatticePoly;
    fn mul(self, rhs: &LatticePoly) -> LatticePoly {
        let mut acc = DenseAccumulator::new();
        acc.add_product(self, rhs);
        acc.finish()
    }
}

crate::algebra::forward_binops!(LatticePoly);
