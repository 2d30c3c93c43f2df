//! JSON schema for every payload the CLI emits.
//!
//! * `LefschetzPoly`: `{"terms":[{"exp":12,"coef":"1"},{"exp":11,"coef":"-1"}]}`
//!   with decimal-string coefficients.
//! * `LatticePoly`: a list of flat monomials `{"u":2,"L":1,"c":1}` sorted by
//!   `(u, L)`; `c` is a JSON integer of arbitrary size.
//! * `DiscSeries`: `{"order":D,"coeffs":[<LatticePoly>; D+1]}`.
//!
//! Payloads are emitted through `serde_json::Value`, whose maps are sorted,
//! so output bytes depend only on the payload.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use ztriv::algebra::{DiscSeries, LatticePoly, LefschetzPoly, RationalPoly};
use ztriv::kodaira::{AffineInK, Catalog};
use ztriv::oracle::CensusReport;

mod bigint_number {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        let n = serde_json::Number::from_str(&x.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        BigInt::from_str(&n.to_string()).map_err(serde::de::Error::custom)
    }
}

mod bigint_string {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        BigInt::from_str(&text).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzTerm {
    pub exp: i64,
    #[serde(with = "bigint_string")]
    pub coef: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzJson {
    pub terms: Vec<LefschetzTerm>,
}

impl From<&LefschetzPoly> for LefschetzJson {
    fn from(p: &LefschetzPoly) -> Self {
        Self {
            terms: p
                .terms()
                .map(|(exp, c)| LefschetzTerm {
                    exp,
                    coef: c.clone(),
                })
                .collect(),
        }
    }
}

impl From<&LefschetzJson> for LefschetzPoly {
    fn from(j: &LefschetzJson) -> Self {
        LefschetzPoly::from_terms(j.terms.iter().map(|t| (t.exp, t.coef.clone())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub u: u32,
    #[serde(rename = "L")]
    pub l: i64,
    #[serde(with = "bigint_number")]
    pub c: BigInt,
}

pub fn lattice_to_json(p: &LatticePoly) -> Vec<Monomial> {
    p.monomials()
        .map(|(u, l, c)| Monomial { u, l, c: c.clone() })
        .collect()
}

pub fn lattice_from_json(m: &[Monomial]) -> LatticePoly {
    LatticePoly::from_monomials(m.iter().map(|x| (x.u, x.l, x.c.clone())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<Vec<Monomial>>,
}

impl From<&DiscSeries> for SeriesJson {
    fn from(p: &DiscSeries) -> Self {
        Self {
            order: p.order(),
            coeffs: p.coeffs().iter().map(lattice_to_json).collect(),
        }
    }
}

impl From<&SeriesJson> for DiscSeries {
    fn from(j: &SeriesJson) -> Self {
        DiscSeries::from_coeffs(j.order, j.coeffs.iter().map(|c| lattice_from_json(c)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputePayload {
    pub catalog: String,
    pub order: usize,
    pub prefactor: Vec<Monomial>,
    pub series: SeriesJson,
    /// Coefficients of `t^n = s^(12n)`.
    pub t_series: Vec<Vec<Monomial>>,
    pub residual_degrees: Vec<usize>,
    /// Present only when the oracle comparison was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_match: Option<bool>,
}

/// A monomial of a specialized coefficient; `c` is an exact rational
/// written as `"p"` or `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalMonomial {
    pub u: u32,
    #[serde(rename = "L")]
    pub l: i64,
    pub c: String,
}

pub fn rational_poly_to_json(p: &RationalPoly) -> Vec<RationalMonomial> {
    p.terms()
        .map(|(u, l, c)| RationalMonomial {
            u,
            l,
            c: c.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializePayload {
    pub catalog: String,
    pub order: usize,
    #[serde(default)]
    pub u: Option<String>,
    #[serde(rename = "L", default)]
    pub l: Option<String>,
    pub coeffs: Vec<Vec<RationalMonomial>>,
    /// Plain values per `s`-degree when both `u` and `L` were substituted.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<String>>,
}

pub fn rational_to_string(x: &BigRational) -> String {
    x.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlaggedJson {
    pub configuration: Vec<String>,
    pub t: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRowJson {
    pub degree: u32,
    pub height: Option<u32>,
    pub count: u64,
    pub t_distribution: BTreeMap<i64, u64>,
    pub max_contact_order: Option<u32>,
    pub flagged_count: usize,
    pub flagged: Vec<FlaggedJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusPayload {
    pub catalog: String,
    pub max_degree: u32,
    pub rows: Vec<CensusRowJson>,
}

impl From<&CensusReport> for CensusPayload {
    fn from(r: &CensusReport) -> Self {
        Self {
            catalog: r.catalog.to_string(),
            max_degree: r.max_degree,
            rows: r
                .rows
                .iter()
                .map(|row| CensusRowJson {
                    degree: row.degree,
                    height: row.height(),
                    count: row.count,
                    t_distribution: row.t_values.clone(),
                    max_contact_order: row.max_contact_order,
                    flagged_count: row.flagged.len(),
                    flagged: row
                        .flagged
                        .iter()
                        .map(|(c, t)| FlaggedJson {
                            configuration: c.entries().iter().map(|e| e.symbol()).collect(),
                            t: *t,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineJson {
    pub slope: i64,
    pub offset: i64,
}

impl From<AffineInK> for AffineJson {
    fn from(a: AffineInK) -> Self {
        Self {
            slope: a.slope,
            offset: a.offset,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberTypeJson {
    pub label: String,
    pub j: String,
    pub cusp_family: bool,
    pub stabilizer: (u32, u32),
    /// `m - 1` as `slope * k + offset`.
    pub components_minus_one: AffineJson,
    /// `v(Delta)` as `slope * k + offset`.
    pub disc_valuation: AffineJson,
    pub motive: LefschetzJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogPayload {
    pub catalog: String,
    pub normalization: String,
    pub types: Vec<FiberTypeJson>,
}

impl From<&Catalog> for CatalogPayload {
    fn from(cat: &Catalog) -> Self {
        Self {
            catalog: cat.name.to_string(),
            normalization: cat.normalization_note.to_string(),
            types: cat
                .types
                .iter()
                .map(|t| FiberTypeJson {
                    label: t.label.name().to_string(),
                    j: t.j_locus.to_string(),
                    cusp_family: t.is_cusp_family(),
                    stabilizer: t.stabilizer(),
                    components_minus_one: t.components_minus_one().into(),
                    disc_valuation: t.disc_valuation().into(),
                    motive: (&t.motive).into(),
                })
                .collect(),
        }
    }
}

/// Pretty JSON with sorted object keys and a trailing newline.
pub fn emit<T: Serialize>(payload: &T) -> String {
    let value = serde_json::to_value(payload).expect("payloads serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

pub fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> serde_json::Result<T> {
    serde_json::from_str(text)
}
