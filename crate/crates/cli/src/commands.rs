//! The four subcommands as pure functions from arguments to output text.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::Zero;

use ztriv::algebra::{specialize, LatticePoly};
use ztriv::kodaira::{catalog, CatalogName};
use ztriv::oracle::{configuration_census, oracle_z_triv};
use ztriv::zeta::z_triv;

use crate::json::{
    self, lattice_to_json, rational_poly_to_json, CatalogPayload, CensusPayload, ComputePayload,
    SeriesJson, SpecializePayload,
};
use crate::prefactor::parse_prefactor;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// What a command prints and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_ORACLE_MISMATCH: u8 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Prefactor(#[from] crate::prefactor::ParseError),
    #[error("L must be nonzero")]
    ZeroLefschetz,
    #[error(transparent)]
    Core(#[from] ztriv::Error),
}

#[derive(Clone, Debug)]
pub struct ComputeArgs {
    pub catalog: CatalogName,
    pub order: usize,
    pub prefactor: Option<String>,
    pub format: Format,
    pub check_oracle: bool,
}

pub fn cmd_compute(args: &ComputeArgs) -> Result<Output, CommandError> {
    let prefactor = args.prefactor.as_deref().map(parse_prefactor).transpose()?;
    let cat = catalog(args.catalog);
    let z = z_triv(&cat, args.order, prefactor);
    let oracle_match = args
        .check_oracle
        .then(|| oracle_z_triv(&cat, args.order, &z.prefactor) == z.series);

    let payload = ComputePayload {
        catalog: args.catalog.to_string(),
        order: args.order,
        prefactor: lattice_to_json(&z.prefactor),
        series: SeriesJson::from(&z.series),
        t_series: z.t_series.iter().map(lattice_to_json).collect(),
        residual_degrees: z.residual_degrees.clone(),
        oracle_match,
    };
    let stdout = match args.format {
        Format::Json => json::emit(&payload),
        Format::Csv => compute_csv(&z.series),
        Format::Table => compute_table(args, &z.prefactor, &z.series, &z.residual_degrees, oracle_match),
    };
    let mut out = Output::ok(stdout);
    if oracle_match == Some(false) {
        out.stderr = "oracle mismatch\n".into();
        out.code = EXIT_ORACLE_MISMATCH;
    }
    Ok(out)
}

fn compute_csv(series: &ztriv::algebra::DiscSeries) -> String {
    let mut s = String::from("s,t,u,L,c\n");
    for (n, c) in series.coeffs().iter().enumerate() {
        let t = if n % 12 == 0 { (n / 12).to_string() } else { String::new() };
        for (u, l, x) in c.monomials() {
            writeln!(s, "{n},{t},{u},{l},{x}").unwrap();
        }
    }
    s
}

fn compute_table(
    args: &ComputeArgs,
    prefactor: &LatticePoly,
    series: &ztriv::algebra::DiscSeries,
    residual: &[usize],
    oracle_match: Option<bool>,
) -> String {
    let mut s = String::new();
    writeln!(s, "catalog:   {}", args.catalog).unwrap();
    writeln!(s, "order:     {}", args.order).unwrap();
    writeln!(s, "prefactor: {prefactor}").unwrap();
    if let Some(ok) = oracle_match {
        writeln!(s, "oracle:    {}", if ok { "match" } else { "MISMATCH" }).unwrap();
    }
    writeln!(s).unwrap();
    writeln!(s, "{:>4} {:>4}  coefficient", "s^n", "t^n").unwrap();
    for (n, c) in series.coeffs().iter().enumerate() {
        let t = if n % 12 == 0 { (n / 12).to_string() } else { String::new() };
        writeln!(s, "{n:>4} {t:>4}  {c}").unwrap();
    }
    let residual: Vec<String> = residual.iter().map(usize::to_string).collect();
    writeln!(s).unwrap();
    writeln!(s, "residual degrees: {}", residual.join(", ")).unwrap();
    s
}

#[derive(Clone, Debug)]
pub struct SpecializeArgs {
    pub catalog: CatalogName,
    pub order: usize,
    pub prefactor: Option<String>,
    pub u: Option<BigRational>,
    pub l: Option<BigRational>,
    pub format: Format,
}

pub fn cmd_specialize(args: &SpecializeArgs) -> Result<Output, CommandError> {
    if args.l.as_ref().is_some_and(Zero::is_zero) {
        return Err(CommandError::ZeroLefschetz);
    }
    let prefactor = args.prefactor.as_deref().map(parse_prefactor).transpose()?;
    let z = z_triv(&catalog(args.catalog), args.order, prefactor);
    let r = specialize(&z.series, args.u.as_ref(), args.l.as_ref())?;
    let values = r
        .scalars()
        .map(|v| v.iter().map(json::rational_to_string).collect::<Vec<_>>());

    let stdout = match args.format {
        Format::Json => json::emit(&SpecializePayload {
            catalog: args.catalog.to_string(),
            order: args.order,
            u: args.u.as_ref().map(json::rational_to_string),
            l: args.l.as_ref().map(json::rational_to_string),
            coeffs: r.coeffs().iter().map(rational_poly_to_json).collect(),
            values,
        }),
        Format::Csv => {
            let mut s = String::from("s,u,L,c\n");
            for (n, c) in r.coeffs().iter().enumerate() {
                for (u, l, x) in c.terms() {
                    writeln!(s, "{n},{u},{l},{x}").unwrap();
                }
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            let show = |q: &Option<BigRational>| q.as_ref().map_or("-".to_string(), |q| q.to_string());
            writeln!(s, "catalog: {}", args.catalog).unwrap();
            writeln!(s, "order:   {}", args.order).unwrap();
            writeln!(s, "u = {}, L = {}", show(&args.u), show(&args.l)).unwrap();
            writeln!(s).unwrap();
            for (n, c) in r.coeffs().iter().enumerate() {
                writeln!(s, "{n:>4}  {c}").unwrap();
            }
            s
        }
    };
    Ok(Output::ok(stdout))
}

#[derive(Clone, Debug)]
pub struct CensusArgs {
    pub catalog: CatalogName,
    pub max_degree: u32,
    pub format: Format,
}

pub fn cmd_census(args: &CensusArgs) -> Output {
    let report = configuration_census(&catalog(args.catalog), args.max_degree);
    let stdout = match args.format {
        Format::Json => json::emit(&CensusPayload::from(&report)),
        Format::Csv => {
            let mut s = String::from("degree,count,T,configurations_with_T,flagged\n");
            for row in &report.rows {
                for (t, k) in &row.t_values {
                    let flagged = row.flagged.iter().filter(|(_, ft)| ft == t).count();
                    writeln!(s, "{},{},{t},{k},{flagged}", row.degree, row.count).unwrap();
                }
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "catalog: {}", args.catalog).unwrap();
            writeln!(s).unwrap();
            writeln!(s, "{:>4} {:>10} {:>6} {:>8}  T-distribution", "D'", "count", "max k", "flagged").unwrap();
            for row in &report.rows {
                let dist: Vec<String> = row.t_values.iter().map(|(t, k)| format!("{t}:{k}")).collect();
                let k = row.max_contact_order.map_or("-".to_string(), |k| k.to_string());
                writeln!(
                    s,
                    "{:>4} {:>10} {:>6} {:>8}  {}",
                    row.degree,
                    row.count,
                    k,
                    row.flagged.len(),
                    dist.join(" ")
                )
                .unwrap();
            }
            let flagged: Vec<_> = report.rows.iter().flat_map(|r| &r.flagged).collect();
            if !flagged.is_empty() {
                writeln!(s).unwrap();
                writeln!(s, "configurations with T > 10n:").unwrap();
                for (c, t) in flagged {
                    writeln!(s, "  {c}  T={t}").unwrap();
                }
            }
            s
        }
    };
    Output::ok(stdout)
}

#[derive(Clone, Debug)]
pub struct ExportArgs {
    pub catalog: CatalogName,
    pub format: Format,
}

pub fn cmd_export(args: &ExportArgs) -> Output {
    let cat = catalog(args.catalog);
    let stdout = match args.format {
        Format::Json => json::emit(&CatalogPayload::from(&cat)),
        Format::Csv => {
            let mut s = String::from("label,j,r,a,m_minus_1,v_disc,motive\n");
            for t in &cat.types {
                let (r, a) = t.stabilizer();
                writeln!(
                    s,
                    "{},{},{r},{a},{},{},{}",
                    t.label.name(),
                    t.j_locus,
                    affine(t.components_minus_one()),
                    affine(t.disc_valuation()),
                    t.motive
                )
                .unwrap();
            }
            s
        }
        Format::Table => {
            let mut s = String::new();
            writeln!(s, "catalog: {}", cat.name).unwrap();
            writeln!(s, "normalization: {}", cat.normalization_note).unwrap();
            writeln!(s).unwrap();
            writeln!(s, "{:<14} {:<9} {:>6} {:>6} {:>6}  A", "label", "j", "(r,a)", "m-1", "v").unwrap();
            for t in &cat.types {
                let (r, a) = t.stabilizer();
                writeln!(
                    s,
                    "{:<14} {:<9} {:>6} {:>6} {:>6}  {}",
                    t.label.name(),
                    t.j_locus,
                    format!("({r},{a})"),
                    affine(t.components_minus_one()),
                    affine(t.disc_valuation()),
                    t.motive
                )
                .unwrap();
            }
            s
        }
    };
    Output::ok(stdout)
}

fn affine(a: ztriv::kodaira::AffineInK) -> String {
    match (a.slope, a.offset) {
        (0, c) => c.to_string(),
        (1, 0) => "k".into(),
        (1, c) if c > 0 => format!("k+{c}"),
        (1, c) => format!("k{c}"),
        (m, c) => format!("{m}k+{c}"),
    }
}
