//! Kodaira fiber types, the four local-factor catalogs and fiber
//! configurations.
//!
//! The catalogs are compiled in. Every catalog lists, per reduction type, the
//! inertia stabilizer `(r, a)`, the component count minus one, the
//! discriminant valuation and the normalized one-fiber class `A`.

mod config;

use std::fmt;
use std::str::FromStr;

use crate::algebra::LefschetzPoly;
use crate::error::{Error, Result};

pub use config::{
    enumerate_configurations, euler_number, trivial_lattice_rank, visit_configurations,
    FiberConfiguration, FiberEntry,
};

/// Inertia/evaluation labels: eight non-cusp labels followed by the two cusp
/// shapes. The declaration order is the canonical order of mark variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiberLabel {
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
    /// `I0*` with `j != 0, 1728`.
    I0StarGenericJ,
    /// `I0*` with `j in {0, 1728}`.
    I0StarSpecialJ,
    /// Multiplicative cusp shape, fibers `I_k`.
    ICusp,
    /// Additive cusp shape, fibers `I_k*`.
    IStarCusp,
}

impl FiberLabel {
    pub const ALL: [FiberLabel; 10] = [
        FiberLabel::II,
        FiberLabel::III,
        FiberLabel::IV,
        FiberLabel::IIStar,
        FiberLabel::IIIStar,
        FiberLabel::IVStar,
        FiberLabel::I0StarGenericJ,
        FiberLabel::I0StarSpecialJ,
        FiberLabel::ICusp,
        FiberLabel::IStarCusp,
    ];

    pub const COUNT: usize = 10;

    /// Position in [`FiberLabel::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_cusp(self) -> bool {
        matches!(self, FiberLabel::ICusp | FiberLabel::IStarCusp)
    }

    /// Machine-readable name.
    pub fn name(self) -> &'static str {
        match self {
            FiberLabel::II => "II",
            FiberLabel::III => "III",
            FiberLabel::IV => "IV",
            FiberLabel::IIStar => "II*",
            FiberLabel::IIIStar => "III*",
            FiberLabel::IVStar => "IV*",
            FiberLabel::I0StarGenericJ => "I0*_generic_j",
            FiberLabel::I0StarSpecialJ => "I0*_special_j",
            FiberLabel::ICusp => "I_cusp",
            FiberLabel::IStarCusp => "I*_cusp",
        }
    }

    /// Number of fiber components minus one, as an affine function of the
    /// contact order.
    pub fn components_minus_one(self) -> AffineInK {
        match self {
            FiberLabel::II => AffineInK::constant(0),
            FiberLabel::III => AffineInK::constant(1),
            FiberLabel::IV => AffineInK::constant(2),
            FiberLabel::I0StarGenericJ | FiberLabel::I0StarSpecialJ => AffineInK::constant(4),
            FiberLabel::IVStar => AffineInK::constant(6),
            FiberLabel::IIIStar => AffineInK::constant(7),
            FiberLabel::IIStar => AffineInK::constant(8),
            FiberLabel::ICusp => AffineInK::slope_one(-1),
            FiberLabel::IStarCusp => AffineInK::slope_one(4),
        }
    }

    /// Discriminant valuation (equal to the Euler number of the fiber).
    pub fn disc_valuation(self) -> AffineInK {
        match self {
            FiberLabel::II => AffineInK::constant(2),
            FiberLabel::III => AffineInK::constant(3),
            FiberLabel::IV => AffineInK::constant(4),
            FiberLabel::I0StarGenericJ | FiberLabel::I0StarSpecialJ => AffineInK::constant(6),
            FiberLabel::IVStar => AffineInK::constant(8),
            FiberLabel::IIIStar => AffineInK::constant(9),
            FiberLabel::IIStar => AffineInK::constant(10),
            FiberLabel::ICusp => AffineInK::slope_one(0),
            FiberLabel::IStarCusp => AffineInK::slope_one(6),
        }
    }

    /// Inertia stabilizer order and character `(r, a)`.
    pub fn stabilizer(self) -> (u32, u32) {
        match self {
            FiberLabel::ICusp => (0, 0),
            FiberLabel::II => (6, 1),
            FiberLabel::III => (4, 1),
            FiberLabel::IV => (3, 1),
            FiberLabel::IStarCusp | FiberLabel::I0StarGenericJ | FiberLabel::I0StarSpecialJ => {
                (2, 1)
            }
            FiberLabel::IVStar => (3, 2),
            FiberLabel::IIIStar => (4, 3),
            FiberLabel::IIStar => (6, 5),
        }
    }

    /// Kodaira symbol of a fiber with this label at contact order `k`.
    pub fn symbol(self, k: u32) -> String {
        match self {
            FiberLabel::ICusp => format!("I{k}"),
            FiberLabel::IStarCusp => format!("I{k}*"),
            FiberLabel::I0StarGenericJ => "I0*(j!=0,1728)".to_string(),
            FiberLabel::I0StarSpecialJ => "I0*(j=0,1728)".to_string(),
            other => other.name().to_string(),
        }
    }
}

impl fmt::Display for FiberLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `slope * k + offset`; slope is 0 for non-cusp types and 1 for cusp
/// families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineInK {
    pub slope: i64,
    pub offset: i64,
}

impl AffineInK {
    pub const fn constant(offset: i64) -> Self {
        Self { slope: 0, offset }
    }

    pub const fn slope_one(offset: i64) -> Self {
        Self { slope: 1, offset }
    }

    pub fn eval(self, k: u32) -> i64 {
        self.slope * i64::from(k) + self.offset
    }
}

/// One row of a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberType {
    pub label: FiberLabel,
    /// Locus of the `j`-invariant as printed in the table (`inf`, `0`, ...).
    pub j_locus: &'static str,
    /// Normalized one-fiber class `A`.
    pub motive: LefschetzPoly,
}

impl FiberType {
    pub fn is_cusp_family(&self) -> bool {
        self.label.is_cusp()
    }

    pub fn stabilizer(&self) -> (u32, u32) {
        self.label.stabilizer()
    }

    pub fn components_minus_one(&self) -> AffineInK {
        self.label.components_minus_one()
    }

    pub fn disc_valuation(&self) -> AffineInK {
        self.label.disc_valuation()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogName {
    Full,
    Gamma1_2,
    Gamma1_3,
    Gamma1_4,
}

impl CatalogName {
    pub const ALL: [CatalogName; 4] = [
        CatalogName::Full,
        CatalogName::Gamma1_2,
        CatalogName::Gamma1_3,
        CatalogName::Gamma1_4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Full => "full",
            CatalogName::Gamma1_2 => "gamma1_2",
            CatalogName::Gamma1_3 => "gamma1_3",
            CatalogName::Gamma1_4 => "gamma1_4",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CatalogName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCatalog(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub name: CatalogName,
    pub types: Vec<FiberType>,
    /// How the one-fiber classes were normalized.
    pub normalization_note: &'static str,
}

impl Catalog {
    pub fn get(&self, label: FiberLabel) -> Option<&FiberType> {
        self.types.iter().find(|t| t.label == label)
    }

    pub fn labels(&self) -> impl Iterator<Item = FiberLabel> + '_ {
        self.types.iter().map(|t| t.label)
    }
}

fn l(e: i64) -> LefschetzPoly {
    LefschetzPoly::l_pow(e)
}

fn l_minus(e: i64) -> LefschetzPoly {
    &l(e) - &l(e - 1)
}

fn row(label: FiberLabel, j_locus: &'static str, motive: LefschetzPoly) -> FiberType {
    FiberType {
        label,
        j_locus,
        motive,
    }
}

/// The compiled-in catalog with the given name. Rows follow the printed
/// table order.
pub fn catalog(name: CatalogName) -> Catalog {
    use FiberLabel::*;
    let (types, normalization_note) = match name {
        CatalogName::Full => (
            vec![
                row(ICusp, "inf", l(16)),
                row(II, "0", l(15)),
                row(III, "1728", l(14)),
                row(IV, "0", l(13)),
                row(IStarCusp, "inf", l_minus(12)),
                row(I0StarGenericJ, "!=0,1728", l_minus(12)),
                row(I0StarSpecialJ, "0,1728", l(11)),
                row(IVStar, "0", l(10)),
                row(IIIStar, "1728", l(9)),
                row(IIStar, "0", l(8)),
            ],
            "A = {W_n^Theta} / ({PGL_2} * L^(10n-18))",
        ),
        CatalogName::Gamma1_2 => (
            vec![
                row(ICusp, "inf", l(8)),
                row(III, "1728", l(7)),
                row(IStarCusp, "inf", l_minus(6)),
                row(I0StarGenericJ, "!=0,1728", l_minus(6)),
                row(I0StarSpecialJ, "0,1728", l(5)),
                row(IIIStar, "1728", l(4)),
            ],
            "A = {W_n^(Gamma1(2),Theta)} / ({PGL_2} * L^(6n-10))",
        ),
        CatalogName::Gamma1_3 => (
            vec![
                row(ICusp, "inf", l(4)),
                row(IV, "0", l(3)),
                row(IVStar, "0", l(2)),
            ],
            "A = {W_n^(Gamma1(3),Theta)} / ({PGL_2} * L^(4n-6))",
        ),
        CatalogName::Gamma1_4 => (
            vec![row(ICusp, "inf", l(2)), row(I0StarSpecialJ, "0", l(1))],
            "A = {W_n^(Gamma1(4),Theta)} / ({PGL_2} * L^(3n-4))",
        ),
    };
    Catalog {
        name,
        types,
        normalization_note,
    }
}

/// Looks a catalog up by its textual name.
pub fn catalog_by_name(name: &str) -> Result<Catalog> {
    Ok(catalog(name.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_counts() {
        let counts: Vec<_> = CatalogName::ALL
            .iter()
            .map(|n| catalog(*n).types.len())
            .collect();
        assert_eq!(counts, vec![10, 6, 3, 2]);
    }

    #[test]
    fn full_iii_row() {
        let cat = catalog(CatalogName::Full);
        let t = cat.get(FiberLabel::III).unwrap();
        assert_eq!(t.stabilizer(), (4, 1));
        assert_eq!(t.components_minus_one().eval(1), 1);
        assert_eq!(t.motive, l(14));
    }

    #[test]
    fn gamma1_3_ivstar_row() {
        let cat = catalog(CatalogName::Gamma1_3);
        let t = cat.get(FiberLabel::IVStar).unwrap();
        assert_eq!(t.stabilizer(), (3, 2));
        assert_eq!(t.components_minus_one().eval(1), 6);
        assert_eq!(t.motive, l(2));
    }

    #[test]
    fn gamma1_4_has_two_types() {
        let labels: Vec<_> = catalog(CatalogName::Gamma1_4).labels().collect();
        assert_eq!(labels, vec![FiberLabel::ICusp, FiberLabel::I0StarSpecialJ]);
    }

    #[test]
    fn full_catalog_motives() {
        let cat = catalog(CatalogName::Full);
        let got: Vec<_> = cat.types.iter().map(|t| (t.label, t.motive.clone())).collect();
        use FiberLabel::*;
        assert_eq!(
            got,
            vec![
                (ICusp, l(16)),
                (II, l(15)),
                (III, l(14)),
                (IV, l(13)),
                (IStarCusp, &l(12) - &l(11)),
                (I0StarGenericJ, &l(12) - &l(11)),
                (I0StarSpecialJ, l(11)),
                (IVStar, l(10)),
                (IIIStar, l(9)),
                (IIStar, l(8)),
            ]
        );
    }

    #[test]
    fn non_cusp_valuations_are_the_standard_set() {
        let mut v: Vec<_> = FiberLabel::ALL
            .iter()
            .filter(|l| !l.is_cusp())
            .map(|l| l.disc_valuation().eval(1))
            .collect();
        v.sort();
        v.dedup();
        assert_eq!(v, vec![2, 3, 4, 6, 8, 9, 10]);
    }

    #[test]
    fn cusp_families_have_slope_one() {
        for lab in [FiberLabel::ICusp, FiberLabel::IStarCusp] {
            assert_eq!(lab.components_minus_one().slope, 1);
            assert_eq!(lab.disc_valuation().slope, 1);
        }
        assert_eq!(FiberLabel::ICusp.disc_valuation().eval(7), 7);
        assert_eq!(FiberLabel::IStarCusp.disc_valuation().eval(1), 7);
        assert_eq!(FiberLabel::IStarCusp.components_minus_one().eval(1), 5);
    }

    #[test]
    fn unknown_catalog_name() {
        assert_eq!(
            catalog_by_name("gamma1_5"),
            Err(Error::UnknownCatalog("gamma1_5".into()))
        );
        assert_eq!(catalog_by_name("gamma1_2").unwrap().types.len(), 6);
    }

    #[test]
    fn labels_index_in_order() {
        for (i, lab) in FiberLabel::ALL.iter().enumerate() {
            assert_eq!(lab.index(), i);
        }
    }
}
