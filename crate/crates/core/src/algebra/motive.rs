//! Standard motivic classes, all Laurent polynomials in `L`.

use super::LefschetzPoly;

/// Class of `Sym^N(P^1) = P^N`, i.e. `1 + L + ... + L^N`.
pub fn motive_sym_p1(n: u32) -> LefschetzPoly {
    LefschetzPoly::from_terms((0..=i64::from(n)).map(|e| (e, 1)))
}

/// Class of `P^1`, `1 + L`.
pub fn motive_p1() -> LefschetzPoly {
    motive_sym_p1(1)
}

/// Class of `PGL_2`, `L(L^2 - 1) = L^3 - L`.
pub fn motive_pgl2() -> LefschetzPoly {
    LefschetzPoly::from_terms([(3, 1), (1, -1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{DiscSeries, LatticePoly};
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn sym_p1_small_cases() {
        assert_eq!(motive_sym_p1(0), LefschetzPoly::one());
        assert_eq!(motive_sym_p1(1), LefschetzPoly::from_terms([(0, 1), (1, 1)]));
        assert_eq!(motive_p1(), motive_sym_p1(1));
    }

    #[test]
    fn sym_p1_two_from_rational_generating_function() {
        // Y^2 coefficient of 1/((1-Y)(1-LY)), with Y = s
        let y = DiscSeries::monomial(2, LatticePoly::one(), 1);
        let ly = y.scale_lefschetz(&LefschetzPoly::lefschetz());
        let f = &y.one_minus_inverse().unwrap() * &ly.one_minus_inverse().unwrap();
        assert_eq!(f.coeff(2), LatticePoly::constant(motive_sym_p1(2)));
        assert_eq!(
            motive_sym_p1(2),
            LefschetzPoly::from_terms([(0, 1), (1, 1), (2, 1)])
        );
    }

    #[test]
    fn pgl2_values() {
        let p = motive_pgl2();
        assert_eq!(p, &LefschetzPoly::lefschetz() * &(&LefschetzPoly::l_pow(2) - &LefschetzPoly::one()));
        assert_eq!(p.eval(&q(2)).unwrap(), q(6));
        assert_eq!(p.eval(&q(1)).unwrap(), q(0));
    }
}
