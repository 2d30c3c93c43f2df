mod common;

use num_rational::BigRational;
use proptest::prelude::*;
use ztriv::algebra::{
    motive_sym_p1, specialize, DiscSeries, LatticePoly, LefschetzPoly, RationalSeries,
};

use common::{lattice, lefschetz, positive_valuation_series, series};

fn rational() -> impl Strategy<Value = BigRational> {
    (-5i64..=5, 1i64..=4)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lefschetz_ring_axioms(a in lefschetz(), b in lefschetz(), c in lefschetz()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a * &LefschetzPoly::one(), a.clone());
        prop_assert!(a.terms().all(|(_, c)| c != &0.into()));
    }

    #[test]
    fn lattice_ring_axioms(a in lattice(), b in lattice(), c in lattice()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn series_ring_axioms(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn mixed_order_truncates_to_minimum(a in series(4), b in series(7)) {
        prop_assert_eq!(&a * &b, &a * &b.with_order(4));
        prop_assert_eq!((&a + &b).order(), 4);
    }

    #[test]
    fn geometric_inverse_multiplies_back(d in 0usize..=30, seed in positive_valuation_series(30)) {
        let y = seed.with_order(d);
        let r = y.one_minus_inverse().unwrap();
        prop_assert_eq!(&(&DiscSeries::one(d) - &y) * &r, DiscSeries::one(d));
    }

    #[test]
    fn kapranov_identity(y in positive_valuation_series(8)) {
        let d = y.order();
        let mut lhs = DiscSeries::zero(d);
        let mut power = DiscSeries::one(d);
        for n in 0..=d as u32 {
            lhs = &lhs + &power.scale_lefschetz(&motive_sym_p1(n));
            power = &power * &y;
        }
        let ly = y.scale_lefschetz(&LefschetzPoly::lefschetz());
        let rhs = &y.one_minus_inverse().unwrap() * &ly.one_minus_inverse().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialize_commutes_with_products(
        a in series(5),
        b in series(5),
        u in prop::option::of(rational()),
        l in prop::option::of(rational()),
    ) {
        let prod = specialize(&(&a * &b), u.as_ref(), l.as_ref()).unwrap();
        let sa = specialize(&a, u.as_ref(), l.as_ref()).unwrap();
        let sb = specialize(&b, u.as_ref(), l.as_ref()).unwrap();
        prop_assert_eq!(prod, &sa * &sb);
    }

    #[test]
    fn identity_specialization(a in series(5)) {
        let r = specialize(&a, None, None).unwrap();
        prop_assert_eq!(r.clone(), RationalSeries::from_series(&a));
        for (n, c) in a.coeffs().iter().enumerate() {
            let flat: Vec<_> = c.monomials().map(|(u, l, x)| (u, l, BigRational::from_integer(x.clone()))).collect();
            let got: Vec<_> = r.coeff(n).terms().map(|(u, l, x)| (u, l, x.clone())).collect();
            prop_assert_eq!(flat, got);
        }
    }
}

#[test]
fn inverse_of_cusp_weight_matches_symmetric_power_sum() {
    // Y = L^16 s / (1 - us), built as an explicit k-sum
    let d = 12;
    let y = DiscSeries::from_coeffs(
        d,
        (0..=d).map(|k| {
            if k == 0 {
                LatticePoly::zero()
            } else {
                LatticePoly::monomial(LefschetzPoly::l_pow(16), k as u32 - 1)
            }
        }),
    );
    let mut sym = DiscSeries::zero(d);
    let mut power = DiscSeries::one(d);
    for n in 0..=d as u32 {
        sym = &sym + &power.scale_lefschetz(&motive_sym_p1(n));
        power = &power * &y;
    }
    let ly = y.scale_lefschetz(&LefschetzPoly::lefschetz());
    assert_eq!(sym, &y.one_minus_inverse().unwrap() * &ly.one_minus_inverse().unwrap());
}
