//! Exact arithmetic for the nested coefficient rings: Laurent polynomials in
//! `L`, polynomials in `u` over those, and truncated power series in `s`.

mod lattice;
mod lefschetz;
mod mark;
mod motive;
mod series;
mod specialize;

pub use lattice::LatticePoly;
pub use lefschetz::LefschetzPoly;
pub use mark::{MarkExponent, MarkVariablePoly};
pub use motive::{motive_p1, motive_pgl2, motive_sym_p1};
pub use series::DiscSeries;
pub use specialize::{specialize, RationalPoly, RationalSeries};

/// Derives the owned/borrowed operator variants from the `&T op &T` impls.
macro_rules! forward_binops {
    ($t:ty) => {
        $crate::algebra::forward_binops!(@op $t, Add, add);
        $crate::algebra::forward_binops!(@op $t, Sub, sub);
        $crate::algebra::forward_binops!(@op $t, Mul, mul);
    };
    (@op $t:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binops;
