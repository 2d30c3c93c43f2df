use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use ztriv::algebra::{DiscSeries, LatticePoly, LefschetzPoly};
use ztriv::kodaira::{catalog, CatalogName};
use ztriv::oracle::configuration_census;
use ztriv_cli::json::{
    emit, parse, CatalogPayload, CensusPayload, ComputePayload, LefschetzJson, SeriesJson,
    SpecializePayload,
};

fn big() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        (-50i64..50).prop_map(BigInt::from),
        (any::<i64>(), 1u32..6).prop_map(|(x, k)| BigInt::from(x).pow(k)),
    ]
}

fn lefschetz() -> impl Strategy<Value = LefschetzPoly> {
    prop::collection::vec((-20i64..40, big()), 0..6).prop_map(LefschetzPoly::from_terms)
}

fn lattice() -> impl Strategy<Value = LatticePoly> {
    prop::collection::vec((0u32..8, -5i64..30, big()), 0..6).prop_map(LatticePoly::from_monomials)
}

fn series() -> impl Strategy<Value = DiscSeries> {
    (0usize..6)
        .prop_flat_map(|order| (Just(order), prop::collection::vec(lattice(), 0..=order + 1)))
        .prop_map(|(order, c)| DiscSeries::from_coeffs(order, c))
}

proptest! {
    #[test]
    fn lefschetz_roundtrip(p in lefschetz()) {
        let j = LefschetzJson::from(&p);
        let back: LefschetzJson = parse(&emit(&j)).unwrap();
        prop_assert_eq!(&back, &j);
        prop_assert_eq!(LefschetzPoly::from(&back), p);
    }

    #[test]
    fn series_roundtrip(p in series()) {
        let j = SeriesJson::from(&p);
        let back: SeriesJson = parse(&emit(&j)).unwrap();
        prop_assert_eq!(&back, &j);
        prop_assert_eq!(DiscSeries::from(&back), p);
    }

    #[test]
    fn compute_payload_roundtrip(p in series(), check in prop::option::of(any::<bool>())) {
        let payload = ComputePayload {
            catalog: "full".into(),
            order: p.order(),
            prefactor: ztriv_cli::json::lattice_to_json(&p.coeff(0)),
            series: SeriesJson::from(&p),
            t_series: vec![ztriv_cli::json::lattice_to_json(&p.coeff(0))],
            residual_degrees: p.nonzero_degrees().filter(|n| n % 12 != 0).collect(),
            oracle_match: check,
        };
        let text = emit(&payload);
        let back: ComputePayload = parse(&text).unwrap();
        prop_assert_eq!(&back, &payload);
        prop_assert_eq!(emit(&back), text);
    }
}

#[test]
fn census_payload_roundtrip() {
    for name in CatalogName::ALL {
        let payload = CensusPayload::from(&configuration_census(&catalog(name), 12));
        let back: CensusPayload = parse(&emit(&payload)).unwrap();
        assert_eq!(back, payload);
    }
}

#[test]
fn catalog_payload_roundtrip() {
    for name in CatalogName::ALL {
        let payload = CatalogPayload::from(&catalog(name));
        let back: CatalogPayload = parse(&emit(&payload)).unwrap();
        assert_eq!(back, payload);
    }
}

#[test]
fn specialize_payload_roundtrip() {
    let payload = SpecializePayload {
        catalog: "gamma1_2".into(),
        order: 2,
        u: Some("1".into()),
        l: None,
        coeffs: vec![vec![ztriv_cli::json::RationalMonomial {
            u: 0,
            l: -2,
            c: "-7/3".into(),
        }]],
        values: None,
    };
    let back: SpecializePayload = parse(&emit(&payload)).unwrap();
    assert_eq!(back, payload);
    let with_values = SpecializePayload {
        values: Some(vec!["5".into()]),
        ..payload
    };
    let back: SpecializePayload = parse(&emit(&with_values)).unwrap();
    assert_eq!(back, with_values);
    let _: BTreeMap<String, serde_json::Value> = parse(&emit(&with_values)).unwrap();
}
