//! `H(s; x)` specialized by the mark substitutions equals the Euler product,
//! and `u = 1` may be applied before or after the product.

use ztriv::algebra::{DiscSeries, LatticePoly};
use ztriv::kodaira::{catalog, CatalogName, FiberLabel};
use ztriv::zeta::{build_factor, euler_factor, multivariate_h, specialize_marks, z_triv};

#[test]
fn specialized_h_equals_euler_product() {
    for name in CatalogName::ALL {
        let cat = catalog(name);
        for order in [0, 1, 7, 18] {
            let h = multivariate_h(&cat, order);
            let z = z_triv(&cat, order, Some(LatticePoly::one()));
            assert_eq!(specialize_marks(&h), z.series, "{name} order {order}");
        }
    }
}

#[test]
fn h_constant_term_is_one() {
    for name in CatalogName::ALL {
        let h = multivariate_h(&catalog(name), 10);
        let zero = vec![0; FiberLabel::COUNT];
        assert_eq!(h.coeff(&zero).coeff(0), LatticePoly::one());
        // no prefactor at the H level; only the cusp marks (weighted, with
        // c_j = 0) can sit at s^0
        for (e, s) in h.terms() {
            if e != &zero && h.weight_of(e) == 0 {
                assert!(s.coeff(0).is_zero());
            }
        }
    }
}

#[test]
fn h_marks_only_catalog_labels() {
    let cat = catalog(CatalogName::Gamma1_3);
    let h = multivariate_h(&cat, 16);
    let allowed: Vec<_> = cat.labels().map(FiberLabel::index).collect();
    for (e, _) in h.terms() {
        for (i, x) in e.iter().enumerate() {
            assert!(*x == 0 || allowed.contains(&i));
        }
    }
}

#[test]
fn u_one_before_or_after_the_product() {
    let order = 16;
    for name in CatalogName::ALL {
        let cat = catalog(name);
        let after = z_triv(&cat, order, Some(LatticePoly::one())).series.at_u_one();
        let mut before = DiscSeries::one(order);
        for ft in &cat.types {
            let mut fs = build_factor(ft, order);
            fs.y = fs.y.at_u_one();
            before = &before * &euler_factor(&fs).unwrap();
        }
        assert_eq!(before, after, "{name}");
    }
}

#[test]
fn full_catalog_at_u_one_via_h() {
    // x_beta -> 1 for non-cusp labels and the cusp weights at u = 1
    let order = 12;
    let cat = catalog(CatalogName::Full);
    let h = specialize_marks(&multivariate_h(&cat, order)).at_u_one();
    let mut product = DiscSeries::one(order);
    for ft in &cat.types {
        product = &product * &euler_factor(&build_factor(ft, order)).unwrap();
    }
    assert_eq!(h, product.at_u_one());
}
