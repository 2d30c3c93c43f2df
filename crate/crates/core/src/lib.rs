//! Exact computation of the trivial-lattice-rank weighted motivic height zeta
//! function `Z_Triv(u; t)` of elliptic surfaces over `P^1`.
//!
//! The crate evaluates the finite Euler product over Kodaira fiber types as a
//! truncated power series in `s` (with `t = s^12`), and provides independent
//! recomputations of the same coefficients for cross-checking:
//!
//! * [`algebra`]: Laurent polynomials in `L`, polynomials in `u`, truncated
//!   `s`-series and the standard motivic classes.
//! * [`kodaira`]: fiber-type catalogs, trivial lattice rank, configuration
//!   enumeration.
//! * [`zeta`]: local factors, cusp resummation, the multivariate series
//!   `H(s; x)` and the Euler product.
//! * [`oracle`]: symmetric-power expansions and configuration census that
//!   share no code path with [`zeta`].

pub mod algebra;
mod error;
pub mod kodaira;
pub mod oracle;
pub mod zeta;

pub use error::{Error, Result};
