use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, RationalQ};
use crate::error::{Error, Result};

/// Truncated element of Z[[q]][q^-1]: coefficients are exact for every
/// exponent below `order` and unknown from `order` on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentSeries {
    min_exponent: i64,
    #[serde(with = "bigint_strings")]
    coefficients: Vec<BigInt>,
    order: i64,
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        raw.iter().map(|c| c.parse().map_err(D::Error::custom)).collect()
    }
}

impl LaurentSeries {
    /// Series with the given coefficients starting at `min_exponent`, known
    /// up to (excluding) `order`. Entries at or beyond `order` are dropped;
    /// missing entries below it are zero.
    pub fn new(min_exponent: i64, mut coefficients: Vec<BigInt>, order: i64) -> Self {
        let min_exponent = min_exponent.min(order);
        coefficients.resize((order - min_exponent) as usize, BigInt::zero());
        let lead = coefficients.iter().take_while(|c| c.is_zero()).count();
        coefficients.drain(..lead);
        LaurentSeries {
            min_exponent: min_exponent + lead as i64,
            coefficients,
            order,
        }
    }

    pub fn from_poly(p: &LaurentPoly, order: i64) -> Self {
        match p.low_exp() {
            None => Self::new(order, Vec::new(), order),
            Some(low) => {
                let high = p.high_exp().unwrap();
                let coeffs = (low..=high).map(|e| p.coeff(e)).collect();
                Self::new(low, coeffs, order)
            }
        }
    }

    pub fn one(order: i64) -> Self {
        Self::from_poly(&LaurentPoly::one(), order)
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `q^e`, `None` when `e` is beyond the known order.
    pub fn coeff(&self, e: i64) -> Option<BigInt> {
        if e >= self.order {
            return None;
        }
        if e < self.min_exponent {
            return Some(BigInt::zero());
        }
        Some(self.coefficients[(e - self.min_exponent) as usize].clone())
    }

    /// The known part as a polynomial.
    pub fn truncated(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(self.min_exponent, self.coefficients.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Self::new(self.min_exponent, self.coefficients.clone(), order)
    }

    pub fn add(&self, other: &LaurentSeries) -> Self {
        let order = self.order.min(other.order);
        Self::from_poly(&(self.truncated() + other.truncated()), order)
    }

    pub fn neg(&self) -> Self {
        Self::from_poly(&-self.truncated(), self.order)
    }

    pub fn mul(&self, other: &LaurentSeries) -> Self {
        let order = (self.order + other.min_exponent).min(other.order + self.min_exponent);
        Self::from_poly(&(self.truncated() * other.truncated()), order)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        match p.low_exp() {
            None => Self::new(self.order, Vec::new(), self.order),
            Some(low) => Self::from_poly(&(self.truncated() * p), self.order + low),
        }
    }

    /// Multiplicative inverse; the lowest known coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let Some(u) = self.coefficients.first() else {
            return Err(Error::DivisionByZero);
        };
        if !u.abs().is_one() {
            return Err(Error::NonUnitDenominator(u.to_string()));
        }
        let m = self.min_exponent;
        let len = (self.order - m) as usize;
        let inv = unit_series_inverse(&self.coefficients, len);
        Ok(Self::new(-m, inv, -m + len as i64))
    }

    /// Expansion of `r` exact below `order`.
    pub fn from_ratfun(r: &RationalQ, order: i64) -> Result<Self> {
        let (dlow, dcoef) = r.den().raw();
        debug_assert_eq!(dlow, 0);
        if !dcoef[0].abs().is_one() {
            return Err(Error::NonUnitDenominator(r.den().to_string()));
        }
        let Some(nlow) = r.num().low_exp() else {
            return Ok(Self::new(order, Vec::new(), order));
        };
        if nlow >= order {
            return Ok(Self::new(order, Vec::new(), order));
        }
        let len = (order - nlow) as usize;
        let inv = unit_series_inverse(dcoef, len);
        let inv = Self::new(0, inv, len as i64);
        Ok(inv.mul_poly(r.num()).truncate(order))
    }
}

/// First `len` coefficients of `1/d` for a power series `d` with `d[0] = ±1`.
fn unit_series_inverse(d: &[BigInt], len: usize) -> Vec<BigInt> {
    let u = d[0].clone();
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = if n == 0 { BigInt::one() } else { BigInt::zero() };
        for k in 1..=n.min(d.len().saturating_sub(1)) {
            acc -= &d[k] * &out[n - k];
        }
        // u = ±1, so dividing is multiplying
        out.push(acc * &u);
    }
    out
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = self.truncated();
        if head.is_zero() {
            write!(f, "O(q^{})", self.order)
        } else {
            write!(f, "{} + O(q^{})", head, self.order)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::quantum::{qfact_renorm, qint_renorm};

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_of_one_plus_q2() {
        let r = RationalQ::new(LaurentPoly::one(), p("1 + q^2")).unwrap();
        let s = LaurentSeries::from_ratfun(&r, 8).unwrap();
        assert_eq!(s.truncated(), p("1 - q^2 + q^4 - q^6"));
        assert_eq!(s.order(), 8);
    }

    #[test]
    fn inverse_of_renormalized_qint() {
        for n in 2..6i64 {
            let r = RationalQ::new(LaurentPoly::one(), qint_renorm(n as usize)).unwrap();
            let s = LaurentSeries::from_ratfun(&r, 4 * n + 2).unwrap();
            let expect = LaurentPoly::from_terms([(0, 1), (2, -1), (2 * n, 1), (2 * n + 2, -1), (4 * n, 1)]);
            assert_eq!(s.truncated(), expect, "n={n}");
        }
    }

    #[test]
    fn polynomial_is_truncated() {
        let s = LaurentSeries::from_ratfun(&RationalQ::from_poly(p("q^-1 + 3*q^5")), 3).unwrap();
        assert_eq!(s.truncated(), p("q^-1"));
        assert_eq!(s.coeff(2), Some(BigInt::zero()));
        assert_eq!(s.coeff(3), None);
    }

    #[test]
    fn series_times_denominator_is_numerator() {
        let d = qfact_renorm(4);
        let r = RationalQ::new(p("q^-2 + 5"), d.clone()).unwrap();
        let s = LaurentSeries::from_ratfun(&r, 30).unwrap();
        let back = s.mul_poly(&d);
        assert_eq!(back.truncate(30).truncated(), p("q^-2 + 5"));
    }

    #[test]
    fn inverse_round_trip() {
        let s = LaurentSeries::from_poly(&p("-q^-1 + 2 + q^3"), 10);
        let t = s.inverse().unwrap();
        let prod = s.mul(&t);
        assert_eq!(prod.truncated(), LaurentPoly::one());
        assert!(LaurentSeries::from_poly(&p("2 + q"), 5).inverse().is_err());
    }

    #[test]
    fn non_unit_denominator_rejected() {
        let r = RationalQ::new(LaurentPoly::one(), p("2 + q")).unwrap();
        assert!(LaurentSeries::from_ratfun(&r, 5).is_err());
    }
}
