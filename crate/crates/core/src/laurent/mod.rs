//! Exact scalars: Laurent polynomials over the integers, rational
//! functions in q, truncated Laurent series and quantum numbers.

mod poly;
pub mod quantum;
mod rational;
mod series;
mod zpoly;

pub use poly::LaurentPoly;
pub use quantum::{qbinom, qfact, qfact_renorm, qint, qint_renorm, qmultinom};
pub use rational::RationalQ;
pub use series::LaurentSeries;

/// Default q-adic truncation order for series.
pub const DEFAULT_Q_ORDER: i64 = 40;
/// Default truncation in the homological variable t.
pub const DEFAULT_T_ORDER: usize = 20;

/// Convenience: `q^e` as a polynomial.
pub fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}
