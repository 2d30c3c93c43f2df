#![allow(dead_code)]

use proptest::prelude::*;
use ztriv::algebra::{DiscSeries, LatticePoly, LefschetzPoly};

pub fn lefschetz() -> impl Strategy<Value = LefschetzPoly> {
    prop::collection::vec((-6i64..=6, -9i64..=9), 0..5).prop_map(LefschetzPoly::from_terms)
}

pub fn lattice() -> impl Strategy<Value = LatticePoly> {
    prop::collection::vec((0u32..=3, -4i64..=4, -5i64..=5), 0..5)
        .prop_map(LatticePoly::from_monomials)
}

/// Series of a fixed order with sparse random coefficients.
pub fn series(order: usize) -> impl Strategy<Value = DiscSeries> {
    prop::collection::vec(
        prop_oneof![2 => Just(LatticePoly::zero()), 1 => lattice()],
        order + 1,
    )
    .prop_map(move |cs| DiscSeries::from_coeffs(order, cs))
}

/// Same as [`series`] but with zero constant term.
pub fn positive_valuation_series(order: usize) -> impl Strategy<Value = DiscSeries> {
    series(order).prop_map(move |s| {
        let mut cs = s.coeffs().to_vec();
        cs[0] = LatticePoly::zero();
        DiscSeries::from_coeffs(order, cs)
    })
}
