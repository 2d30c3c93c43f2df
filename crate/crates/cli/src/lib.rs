//! Command-line front end for `ztriv`: argument parsing, the subcommands and
//! the JSON schema of their output.

pub mod commands;
pub mod json;
pub mod prefactor;

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use ztriv::kodaira::CatalogName;

use commands::{
    cmd_census, cmd_compute, cmd_export, cmd_specialize, CensusArgs, ComputeArgs, ExportArgs,
    Format, Output, SpecializeArgs, EXIT_USAGE,
};

#[derive(Debug, Parser)]
#[command(name = "ztriv", version, about = "Trivial-lattice-weighted height zeta functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand the Euler product as an s-series.
    Compute {
        #[command(flatten)]
        common: Common,
        /// Recompute with the independent oracle and compare.
        #[arg(long)]
        check_oracle: bool,
    },
    /// Substitute rational values for u and/or L.
    Specialize {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_rational, allow_negative_numbers = true)]
        u: Option<BigRational>,
        #[arg(long = "L", value_parser = parse_rational, allow_negative_numbers = true)]
        l: Option<BigRational>,
    },
    /// Count formal fiber configurations per discriminant degree.
    Census {
        #[arg(long, value_parser = parse_catalog, default_value = "full")]
        catalog: CatalogName,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print a compiled-in catalog of local factors.
    Export {
        #[arg(long, value_parser = parse_catalog, default_value = "full")]
        catalog: CatalogName,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_parser = parse_catalog, default_value = "full")]
    pub catalog: CatalogName,
    /// Truncation order in s.
    #[arg(long, env = "ZTRIV_ORDER", default_value_t = ztriv::zeta::DEFAULT_ORDER)]
    pub order: usize,
    /// Height-zero prefactor, e.g. `u^2*L`.
    #[arg(long)]
    pub prefactor: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

fn parse_catalog(s: &str) -> Result<CatalogName, String> {
    CatalogName::from_str(s).map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|_| format!("not a rational number: {s}"))
}

pub fn execute(cli: Cli) -> Output {
    let result = match cli.command {
        Command::Compute {
            common,
            check_oracle,
        } => cmd_compute(&ComputeArgs {
            catalog: common.catalog,
            order: common.order,
            prefactor: common.prefactor,
            format: common.format,
            check_oracle,
        }),
        Command::Specialize { common, u, l } => cmd_specialize(&SpecializeArgs {
            catalog: common.catalog,
            order: common.order,
            prefactor: common.prefactor,
            u,
            l,
            format: common.format,
        }),
        Command::Census {
            catalog,
            max_degree,
            format,
        } => Ok(cmd_census(&CensusArgs {
            catalog,
            max_degree,
            format,
        })),
        Command::Export { catalog, format } => Ok(cmd_export(&ExportArgs { catalog, format })),
    };
    result.unwrap_or_else(|e| Output {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: EXIT_USAGE,
    })
}

/// Parses `args` (including the program name) and runs the command. Help
/// and version requests exit 0; any other parse failure is a usage error.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}
