//! Local Euler factors, cusp resummation, the multivariate series `H(s; x)`
//! and the finite Euler product for `Z_Triv(u; t)`, `t = s^12`.

use crate::algebra::{
    motive_sym_p1, DiscSeries, LatticePoly, LefschetzPoly, MarkVariablePoly,
};
use crate::error::{Error, Result};
use crate::kodaira::{Catalog, CatalogName, FiberLabel, FiberType};

/// Default truncation order in `s`; covers heights `n = 0, 1, 2`.
pub const DEFAULT_ORDER: usize = 24;

fn u_s(order: usize, u_exp: u32, s_exp: usize) -> DiscSeries {
    DiscSeries::monomial(order, LatticePoly::u_pow(u_exp), s_exp)
}

/// `1 / (1 - u s)`, the inverse of the cusp denominator `Delta(s)`.
fn inverse_delta(order: usize) -> DiscSeries {
    u_s(order, 1, 1)
        .one_minus_inverse()
        .expect("u*s has positive valuation")
}

/// Closed-form weight of one cusp marking after summing over the contact
/// order: `s / (1 - us)` for `I_cusp` and `u^5 s^7 / (1 - us)` for `I*_cusp`.
/// Non-cusp labels have no resummed weight and yield zero.
pub fn cusp_resummed_weight(shape: FiberLabel, order: usize) -> DiscSeries {
    let lead = match shape {
        FiberLabel::ICusp => u_s(order, 0, 1),
        FiberLabel::IStarCusp => u_s(order, 5, 7),
        _ => return DiscSeries::zero(order),
    };
    &lead * &inverse_delta(order)
}

/// Closed form of `sum_{k>=1} A u^(ak+b) s^(ck+d)`, namely
/// `A u^(a+b) s^(c+d) / (1 - u^a s^c)`.
pub fn geometric_resummation(
    coef: &LefschetzPoly,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    order: usize,
) -> Result<DiscSeries> {
    geometric_resummation_power(coef, a, b, c, d, 1, order)
}

/// Closed form of the `M`-fold independent sum
/// `sum_{k_1..k_M >= 1} A prod_i u^(a k_i + b) s^(c k_i + d)`, which is
/// `A (u^(a+b) s^(c+d))^M / (1 - u^a s^c)^M`.
pub fn geometric_resummation_power(
    coef: &LefschetzPoly,
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    markings: u32,
    order: usize,
) -> Result<DiscSeries> {
    if a < 1 || c < 1 || b < 0 || d < 0 {
        return Err(Error::InvalidExponents { a, b, c, d });
    }
    let m = i64::from(markings);
    let (ue, se) = ((a + b) * m, (c + d) * m);
    let lead = if se as usize > order {
        DiscSeries::zero(order)
    } else {
        DiscSeries::monomial(
            order,
            LatticePoly::monomial(coef.clone(), ue as u32),
            se as usize,
        )
    };
    let step = u_s(order, a as u32, c as usize).one_minus_inverse()?;
    Ok(&lead * &step.pow(markings))
}

/// Monomial data of a reduced factor `1 / (1 - A u^B s^C Delta(s)^(-m))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFactor {
    pub coefficient: LefschetzPoly,
    pub u_exp: u32,
    pub s_exp: u32,
    /// Power of the cusp denominator `Delta(s) = 1 - us`.
    pub cusp_multiplicity: u32,
}

/// A local factor type with its markings and fully specialized monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSpec {
    pub source: FiberType,
    /// Number of markings per label, indexed by [`FiberLabel::index`].
    pub markings: [u32; FiberLabel::COUNT],
    /// Stable-height increment `c_j` carried outside the mark variables.
    pub height_increment: u32,
    /// `b_j = sum over non-cusp labels of markings * (m - 1)`.
    pub lattice_increment: u32,
    pub reduced: ReducedFactor,
    /// `Y = A u^B s^C (1 - us)^(-m)` truncated at the build order.
    pub y: DiscSeries,
}

impl FactorSpec {
    /// Assembles a factor from its markings:
    /// `B = b + 5 beta(I*)`, `C = c + beta(I) + 7 beta(I*)`,
    /// `m = beta(I) + beta(I*)`.
    pub fn from_markings(
        source: FiberType,
        coefficient: LefschetzPoly,
        markings: [u32; FiberLabel::COUNT],
        height_increment: u32,
        order: usize,
    ) -> Self {
        let lattice_increment: u32 = FiberLabel::ALL
            .iter()
            .filter(|l| !l.is_cusp())
            .map(|l| markings[l.index()] * l.components_minus_one().eval(1) as u32)
            .sum();
        let b_mult = markings[FiberLabel::ICusp.index()];
        let b_add = markings[FiberLabel::IStarCusp.index()];
        let reduced = ReducedFactor {
            coefficient,
            u_exp: lattice_increment + 5 * b_add,
            s_exp: height_increment + b_mult + 7 * b_add,
            cusp_multiplicity: b_mult + b_add,
        };
        let lead = DiscSeries::monomial(
            order,
            LatticePoly::monomial(reduced.coefficient.clone(), reduced.u_exp),
            reduced.s_exp as usize,
        );
        let y = &lead * &inverse_delta(order).pow(reduced.cusp_multiplicity);
        Self {
            source,
            markings,
            height_increment,
            lattice_increment,
            reduced,
            y,
        }
    }

    pub fn order(&self) -> usize {
        self.y.order()
    }
}

/// The local factor of a catalog row: one marking of the row's own label,
/// with `c_j = v(Delta)` for non-cusp types and `c_j = 0` for cusp shapes
/// (their discriminant degree comes from the resummed cusp weight).
pub fn build_factor(ft: &FiberType, order: usize) -> FactorSpec {
    let mut markings = [0; FiberLabel::COUNT];
    markings[ft.label.index()] = 1;
    let c = if ft.is_cusp_family() {
        0
    } else {
        ft.disc_valuation().eval(1) as u32
    };
    FactorSpec::from_markings(ft.clone(), ft.motive.clone(), markings, c, order)
}

/// The full `P^1`-factor `1 / ((1 - Y)(1 - L Y))`.
pub fn euler_factor(fs: &FactorSpec) -> Result<DiscSeries> {
    let reduced = fs.y.one_minus_inverse()?;
    let twisted = fs
        .y
        .scale_lefschetz(&LefschetzPoly::lefschetz())
        .one_minus_inverse()?;
    Ok(&reduced * &twisted)
}

/// `s`-weight of each mark variable: the valuation of the series it is
/// specialized to. Non-cusp labels carry their discriminant degree in `s^c`
/// instead.
pub fn mark_weights() -> Vec<usize> {
    FiberLabel::ALL
        .iter()
        .map(|l| match l {
            FiberLabel::ICusp => 1,
            FiberLabel::IStarCusp => 7,
            _ => 0,
        })
        .collect()
}

/// `H(s; x) = prod_j (1 - A_j x_j s^(c_j))^(-{P^1})` with formal mark
/// variables, expanded as `sum_N {Sym^N P^1} Y_j^N`.
///
/// Truncation is weighted (see [`MarkVariablePoly`]) so that substituting the
/// cusp series for `x_I` and `x_I*` is exact modulo `s^(order+1)`.
pub fn multivariate_h(cat: &Catalog, order: usize) -> MarkVariablePoly {
    let weights = mark_weights();
    let mut acc = MarkVariablePoly::one(order, weights.clone());
    for ft in &cat.types {
        let fs = build_factor(ft, order);
        let idx = ft.label.index();
        let step = weights[idx] + fs.height_increment as usize;
        let mut factor = MarkVariablePoly::zero(order, weights.clone());
        let mut n = 0u32;
        while n as usize * step <= order {
            let mut e = vec![0; FiberLabel::COUNT];
            e[idx] = n;
            let coef = &motive_sym_p1(n) * &fs.reduced.coefficient.pow(n);
            factor.add_term(
                e,
                DiscSeries::monomial(
                    order,
                    LatticePoly::constant(coef),
                    (n * fs.height_increment) as usize,
                ),
            );
            n += 1;
        }
        acc = &acc * &factor;
    }
    acc
}

/// The substitutions turning `H(s; x)` into the Euler product:
/// `x_beta = u^(m(beta)-1)` for non-cusp labels and the resummed cusp weights
/// for the two cusp shapes.
pub fn mark_substitutions(order: usize) -> Vec<DiscSeries> {
    FiberLabel::ALL
        .iter()
        .map(|l| {
            if l.is_cusp() {
                cusp_resummed_weight(*l, order)
            } else {
                u_s(order, l.components_minus_one().eval(1) as u32, 0)
            }
        })
        .collect()
}

/// Applies [`mark_substitutions`] to `H`.
pub fn specialize_marks(h: &MarkVariablePoly) -> DiscSeries {
    h.substitute(&mark_substitutions(h.order()))
}

/// Height-zero prefactor used when none is given: `u^2 L` for the full
/// catalog (the class of `M_{1,1}` is `L`).
///
/// For the level-structure catalogs the height-zero class is not known, so
/// the default is `u^2` alone. Pass an explicit prefactor to override it.
pub fn default_prefactor(name: CatalogName) -> LatticePoly {
    match name {
        CatalogName::Full => LatticePoly::monomial(LefschetzPoly::lefschetz(), 2),
        _ => LatticePoly::u_pow(2),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaResult {
    pub catalog: CatalogName,
    pub prefactor: LatticePoly,
    /// Full `s`-graded expansion.
    pub series: DiscSeries,
    /// Coefficients at `s^0, s^12, s^24, ...`, i.e. of `t^0, t^1, ...`.
    pub t_series: Vec<LatticePoly>,
    /// `s`-degrees not divisible by 12 with nonzero coefficient.
    pub residual_degrees: Vec<usize>,
}

impl ZetaResult {
    fn from_series(catalog: CatalogName, prefactor: LatticePoly, series: DiscSeries) -> Self {
        let t_series = t_subsequence(&series);
        let residual_degrees = series.nonzero_degrees().filter(|n| n % 12 != 0).collect();
        Self {
            catalog,
            prefactor,
            series,
            t_series,
            residual_degrees,
        }
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

fn t_subsequence(series: &DiscSeries) -> Vec<LatticePoly> {
    series.coeffs().iter().step_by(12).cloned().collect()
}

/// `prefactor * prod_j 1 / ((1 - Y_j)(1 - L Y_j))` over the catalog rows.
pub fn z_triv(cat: &Catalog, order: usize, prefactor: Option<LatticePoly>) -> ZetaResult {
    let prefactor = prefactor.unwrap_or_else(|| default_prefactor(cat.name));
    let mut acc = DiscSeries::constant(order, prefactor.clone());
    for ft in &cat.types {
        let factor =
            euler_factor(&build_factor(ft, order)).expect("catalog factors have positive valuation");
        acc = &acc * &factor;
    }
    ZetaResult::from_series(cat.name, prefactor, acc)
}

/// The coefficients of `t^n = s^(12n)` up to the truncation order.
pub fn extract_t_series(z: &ZetaResult) -> Vec<LatticePoly> {
    t_subsequence(&z.series)
}
