use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has a nonzero constant term, so 1 - Y is not a unit")]
    NotUnitComplement,
    #[error("division by zero while substituting L = 0 into a negative power")]
    DivisionByZero,
    #[error("unknown catalog `{0}` (expected full, gamma1_2, gamma1_3 or gamma1_4)")]
    UnknownCatalog(String),
    #[error("invalid resummation exponents: need a, c >= 1 and b, d >= 0 (got a={a}, b={b}, c={c}, d={d})")]
    InvalidExponents { a: i64, b: i64, c: i64, d: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
