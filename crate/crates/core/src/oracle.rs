//! Independent recomputation of the Euler product and the configuration
//! census.
//!
//! Nothing here calls [`DiscSeries::one_minus_inverse`] or the `zeta`
//! module: local factors are expanded as explicit symmetric-power sums of an
//! explicit cusp sum, using only addition and truncated multiplication.

use std::collections::BTreeMap;

use crate::algebra::{motive_sym_p1, DiscSeries, LatticePoly};
use crate::kodaira::{visit_configurations, Catalog, CatalogName, FiberConfiguration, FiberType};

/// The local monomial built term by term: `A u^(m-1) s^v` for non-cusp
/// types, `sum_{k=1..order} A u^(m(k)-1) s^(v(k))` for the cusp families.
pub fn explicit_local_weight(ft: &FiberType, order: usize) -> DiscSeries {
    let mut y = DiscSeries::zero(order);
    let ks = if ft.is_cusp_family() { order as u32 } else { 1 };
    for k in 1..=ks {
        let v = ft.disc_valuation().eval(k);
        let m = ft.components_minus_one().eval(k);
        if v as usize > order {
            break;
        }
        y = &y
            + &DiscSeries::monomial(
                order,
                LatticePoly::monomial(ft.motive.clone(), m as u32),
                v as usize,
            );
    }
    y
}

/// `sum_{N=0..order} {Sym^N P^1} Y^N` with `Y` from [`explicit_local_weight`].
/// Terms with `N > order` vanish because `Y` has positive valuation.
pub fn oracle_factor_expansion(ft: &FiberType, order: usize) -> DiscSeries {
    let y = explicit_local_weight(ft, order);
    let mut power = DiscSeries::one(order);
    let mut acc = DiscSeries::zero(order);
    for n in 0..=order as u32 {
        acc = &acc + &power.scale(&LatticePoly::constant(motive_sym_p1(n)));
        power = &power * &y;
        if power.is_zero() {
            break;
        }
    }
    acc
}

/// `prefactor * prod_j oracle_factor_expansion(j)`.
pub fn oracle_z_triv(cat: &Catalog, order: usize, prefactor: &LatticePoly) -> DiscSeries {
    cat.types.iter().fold(
        DiscSeries::constant(order, prefactor.clone()),
        |acc, ft| &acc * &oracle_factor_expansion(ft, order),
    )
}

/// Census of formal fiber configurations at one discriminant degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub degree: u32,
    pub count: u64,
    /// Trivial lattice rank `T` -> number of configurations.
    pub t_values: BTreeMap<i64, u64>,
    pub max_contact_order: Option<u32>,
    /// Configurations at height `n >= 1` with `T > 10n`.
    pub flagged: Vec<(FiberConfiguration, i64)>,
    /// Configurations whose re-summed Euler numbers disagree with the degree.
    /// Always empty unless enumeration is broken.
    pub euler_mismatches: u64,
}

impl CensusRow {
    pub fn height(&self) -> Option<u32> {
        self.degree.is_multiple_of(12).then_some(self.degree / 12)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub catalog: CatalogName,
    pub max_degree: u32,
    pub rows: Vec<CensusRow>,
}

/// Enumerates every configuration of degree `0..=max_degree` and tabulates
/// counts, `T`-distributions, contact orders and bound violations.
pub fn configuration_census(cat: &Catalog, max_degree: u32) -> CensusReport {
    let rows = (0..=max_degree)
        .map(|degree| {
            let mut row = CensusRow {
                degree,
                count: 0,
                t_values: BTreeMap::new(),
                max_contact_order: None,
                flagged: Vec::new(),
                euler_mismatches: 0,
            };
            visit_configurations(cat, degree, |c| {
                row.count += 1;
                let t = c.trivial_lattice_rank();
                *row.t_values.entry(t).or_default() += 1;
                row.max_contact_order = row.max_contact_order.max(c.max_contact_order());
                let e: i64 = c.entries().iter().map(crate::kodaira::euler_number).sum();
                if e != i64::from(degree) {
                    row.euler_mismatches += 1;
                }
                if c.exceeds_lefschetz_bound() {
                    row.flagged.push((c.clone(), t));
                }
            });
            row
        })
        .collect();
    CensusReport {
        catalog: cat.name,
        max_degree,
        rows,
    }
}
