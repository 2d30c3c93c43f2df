use std::collections::BTreeMap;
use std::ops::Mul;

use super::DiscSeries;

/// Exponent vector over the mark variables `x_alpha`.
pub type MarkExponent = Vec<u32>;

/// A polynomial in finitely many mark variables `x_alpha` with [`DiscSeries`]
/// coefficients.
///
/// Each mark variable carries an `s`-weight. A term `x^e s^n` is kept only
/// while `n + sum_i weight_i * e_i <= order`; this is the truncation that
/// survives substituting each `x_i` by a series of valuation `>= weight_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkVariablePoly {
    order: usize,
    weights: Vec<usize>,
    terms: BTreeMap<MarkExponent, DiscSeries>,
}

impl MarkVariablePoly {
    pub fn zero(order: usize, weights: Vec<usize>) -> Self {
        Self {
            order,
            weights,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: usize, weights: Vec<usize>) -> Self {
        let n = weights.len();
        let mut out = Self::zero(order, weights);
        out.add_term(vec![0; n], DiscSeries::one(order));
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight_of(&self, e: &[u32]) -> usize {
        e.iter()
            .zip(&self.weights)
            .map(|(x, w)| *x as usize * w)
            .sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MarkExponent, &DiscSeries)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient series of `x^e`; zero when absent.
    pub fn coeff(&self, e: &[u32]) -> DiscSeries {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| DiscSeries::zero(self.order))
    }

    /// Adds `series * x^e`, applying the weighted truncation.
    pub fn add_term(&mut self, e: MarkExponent, series: DiscSeries) {
        assert_eq!(e.len(), self.weights.len(), "exponent length mismatch");
        let w = self.weight_of(&e);
        if w > self.order {
            return;
        }
        let budget = self.order - w;
        let cut = DiscSeries::from_coeffs(
            self.order,
            series.coeffs().iter().take(budget + 1).cloned(),
        );
        let slot = self
            .terms
            .entry(e.clone())
            .or_insert_with(|| DiscSeries::zero(self.order));
        *slot = &*slot + &cut;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Substitutes a series for every mark variable and sums.
    ///
    /// Exact modulo `s^(order+1)` whenever `values[i]` has valuation at least
    /// `weights[i]`.
    pub fn substitute(&self, values: &[DiscSeries]) -> DiscSeries {
        assert_eq!(values.len(), self.weights.len(), "one value per mark variable");
        let mut acc = DiscSeries::zero(self.order);
        // memoize powers per variable
        let mut powers: Vec<Vec<DiscSeries>> = values
            .iter()
            .map(|v| vec![DiscSeries::one(self.order), v.with_order(self.order)])
            .collect();
        for (e, series) in &self.terms {
            let mut term = series.clone();
            for (i, k) in e.iter().enumerate() {
                let k = *k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &powers[i][1];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k];
                }
            }
            acc = &acc + &term;
        }
        acc
    }
}

impl Mul<&MarkVariablePoly> for &MarkVariablePoly {
    type Output = MarkVariablePoly;
    fn mul(self, rhs: &MarkVariablePoly) -> MarkVariablePoly {
        assert_eq!(self.weights, rhs.weights, "mark variable sets differ");
        let order = self.order.min(rhs.order);
        let mut out = MarkVariablePoly::zero(order, self.weights.clone());
        for (ea, sa) in &self.terms {
            for (eb, sb) in &rhs.terms {
                let e: MarkExponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if out.weight_of(&e) > order {
                    continue;
                }
                out.add_term(e, sa * sb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LatticePoly;

    fn s(order: usize, k: usize) -> DiscSeries {
        DiscSeries::monomial(order, LatticePoly::one(), k)
    }

    #[test]
    fn weighted_truncation_drops_heavy_terms() {
        let mut p = MarkVariablePoly::zero(5, vec![2, 0]);
        p.add_term(vec![3, 0], DiscSeries::one(5));
        assert_eq!(p.num_terms(), 0);
        p.add_term(vec![2, 1], &s(5, 1) + &s(5, 2));
        // weight 4 leaves room for s^1 only
        assert_eq!(p.coeff(&[2, 1]), s(5, 1));
    }

    #[test]
    fn substitution_matches_direct_product() {
        // (1 + x s) * (1 + x) with x -> s^2, weights [2]
        let order = 8;
        let mut a = MarkVariablePoly::one(order, vec![2]);
        a.add_term(vec![1], s(order, 1));
        let mut b = MarkVariablePoly::one(order, vec![2]);
        b.add_term(vec![1], DiscSeries::one(order));
        let x = s(order, 2);
        let lhs = (&a * &b).substitute(std::slice::from_ref(&x));
        let rhs = &a.substitute(std::slice::from_ref(&x)) * &b.substitute(std::slice::from_ref(&x));
        assert_eq!(lhs, rhs);
    }
}
