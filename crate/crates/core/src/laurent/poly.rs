use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::zpoly;
use crate::error::{Error, Result};

/// Element of Z[q, q^-1].
///
/// Stored densely from the lowest to the highest nonzero exponent; both ends
/// are nonzero, so the representation is canonical and `==` is equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds `sum coeffs[m] q^(low+m)`, trimming zeros at both ends.
    pub fn from_coeffs(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        zpoly::trim(&mut coeffs);
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            low: low + lead as i64,
            coeffs,
        }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out += &Self::monomial(c, e);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(m, c)| (self.low + m as i64, c))
    }

    /// `(coefficient, exponent)` if this is a single term.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0].clone(), self.low))
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// The involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(h) => LaurentPoly {
                low: -h,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact quotient in Z[q, q^-1].
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        match zpoly::div_exact(&self.coeffs, &d.coeffs) {
            Some(qc) => Ok(Self::from_coeffs(self.low - d.low, qc)),
            None => Err(Error::InexactDivision(format!("({self}) / ({d})"))),
        }
    }

    pub(crate) fn raw(&self) -> (i64, &[BigInt]) {
        (self.low, &self.coeffs)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn add_into(acc: &LaurentPoly, other: &LaurentPoly, sign: bool) -> LaurentPoly {
    if other.is_zero() {
        return acc.clone();
    }
    if acc.is_zero() {
        return if sign { other.clone() } else { -other };
    }
    let low = acc.low.min(other.low);
    let high = acc.high_exp().unwrap().max(other.high_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (m, c) in acc.coeffs.iter().enumerate() {
        coeffs[(acc.low - low) as usize + m] += c;
    }
    for (m, c) in other.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(other.low - low) as usize + m];
        if sign {
            *slot += c;
        } else {
            *slot -= c;
        }
    }
    LaurentPoly::from_coeffs(low, coeffs)
}

fn mul_polys(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (m, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (n, y) in b.coeffs.iter().enumerate() {
            coeffs[m + n] += x * y;
        }
    }
    LaurentPoly::from_coeffs(a.low + b.low, coeffs)
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_into(a, b, true));
forward_binop!(Sub, sub, |a, b| add_into(a, b, false));
forward_binop!(Mul, mul, mul_polys);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_into(self, rhs, true);
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = add_into(self, &rhs, true);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_into(self, rhs, false);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = mul_polys(self, rhs);
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Accepts the canonical form plus the obvious relaxations:
/// `q`, `-q^3`, `2*q - 1`, arbitrary whitespace.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::PolyParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input"));
        }
        let chars: Vec<char> = compact.chars().collect();
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (idx, &ch) in chars.iter().enumerate() {
            let prev = if idx == 0 { None } else { Some(chars[idx - 1]) };
            let splits = match ch {
                '+' => true,
                '-' => !matches!(prev, None | Some('^') | Some('+') | Some('-') | Some('*')),
                _ => false,
            };
            if splits {
                pieces.push(std::mem::take(&mut cur));
                if ch == '-' {
                    cur.push('-');
                }
            } else {
                cur.push(ch);
            }
        }
        pieces.push(cur);
        let mut out = LaurentPoly::zero();
        for piece in pieces {
            if piece.is_empty() || piece == "-" {
                return Err(fail("dangling sign"));
            }
            out += &parse_term(&piece).ok_or_else(|| fail(&format!("bad term {piece:?}")))?;
        }
        Ok(out)
    }
}

fn parse_term(t: &str) -> Option<LaurentPoly> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (coef, qpart) = match body.find('q') {
        None => (body, None),
        Some(pos) => {
            let head = &body[..pos];
            let coef = if head.is_empty() {
                "1"
            } else {
                head.strip_suffix('*')?
            };
            (coef, Some(&body[pos + 1..]))
        }
    };
    if coef.is_empty() || !coef.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut c: BigInt = coef.parse().ok()?;
    if neg {
        c = -c;
    }
    let e = match qpart {
        None => 0,
        Some("") => 1,
        Some(rest) => rest.strip_prefix('^')?.parse::<i64>().ok()?,
    };
    Some(LaurentPoly::monomial(c, e))
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, String)> = self.terms().map(|(e, c)| (e, c.to_string())).collect();
        pairs.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, String)> = Vec::deserialize(de)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_text_form() {
        let x = LaurentPoly::from_terms([(4, 2), (-2, -1), (0, 3)]);
        assert_eq!(x.to_string(), "-1*q^-2 + 3 + 2*q^4");
        assert_eq!(LaurentPoly::from_terms([(1, 5)]).to_string(), "5*q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_terms([(-1, -1), (1, -1)]).to_string(), "-1*q^-1 + -1*q");
    }

    #[test]
    fn parse_relaxed_forms() {
        assert_eq!(p("q"), LaurentPoly::q_pow(1));
        assert_eq!(p("-q^-2 + 3 + 2*q^4"), p("-1*q^-2 + 3 + 2*q^4"));
        assert_eq!(p("2*q - 1"), LaurentPoly::from_terms([(0, -1), (1, 2)]));
        assert_eq!(p("0"), LaurentPoly::zero());
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("3*".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = p("1*q^-1 + 1*q");
        assert_eq!(&a * &a, p("q^-2 + 2 + q^2"));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!((&a * &a).div_exact(&a).unwrap(), a);
        assert!(p("1 + q").div_exact(&p("1 + q^2")).is_err());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("q^2").bar(), p("q^-2"));
        assert_eq!(p("q^-1 + 2*q^3").bar(), p("q + 2*q^-3"));
    }

    #[test]
    fn json_round_trip() {
        let x = p("-1*q^-2 + 3 + 2*q^4");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"[[-2,"-1"],[0,"3"],[4,"2"]]"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
