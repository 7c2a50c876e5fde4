use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{zpoly, LaurentPoly};
use crate::error::{Error, Result};

/// Element of Q(q) in reduced form `num / den`.
///
/// `den` is an ordinary polynomial with nonzero constant term and positive
/// leading coefficient; powers of `q` live in `num`. Numerator and
/// denominator are coprime and the integer contents of the pair are coprime,
/// which makes the representation unique.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr", into = "RationalRepr")]
pub struct RationalQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl TryFrom<RationalRepr> for RationalQ {
    type Error = Error;
    fn try_from(r: RationalRepr) -> Result<Self> {
        RationalQ::new(r.num, r.den)
    }
}

impl From<RationalQ> for RationalRepr {
    fn from(r: RationalQ) -> Self {
        RationalRepr {
            num: r.num,
            den: r.den,
        }
    }
}

impl RationalQ {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalQ {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this value equals, if it is one.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.is_laurent().then(|| self.num.clone())
    }

    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar())
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RationalQ) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        if self.is_laurent() {
            return Self::from_poly(&self.num * p);
        }
        Self::normalize(&self.num * p, self.den.clone())
    }

    /// Multiplication by `q^e`; never needs renormalization.
    pub fn shift(&self, e: i64) -> Self {
        RationalQ {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        let (nlow, ncoef) = num.raw();
        let (dlow, dcoef) = den.raw();
        let g = zpoly::gcd(ncoef, dcoef);
        let (mut n, mut d) = if g.len() > 1 {
            (
                zpoly::div_exact(ncoef, &g).expect("gcd divides numerator"),
                zpoly::div_exact(dcoef, &g).expect("gcd divides denominator"),
            )
        } else {
            (ncoef.to_vec(), dcoef.to_vec())
        };
        let c = zpoly::content(&n).gcd(&zpoly::content(&d));
        let negate = d.last().is_some_and(|x| x.is_negative());
        if !c.is_one() || negate {
            let c = if negate { -c } else { c };
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x = &*x / &c;
            }
        }
        RationalQ {
            num: LaurentPoly::from_coeffs(nlow - dlow, n),
            den: LaurentPoly::from_coeffs(0, d),
        }
    }

    /// Value at q = 1 as a reduced integer fraction `(num, den)`.
    pub fn at_one(&self) -> Result<(BigInt, BigInt)> {
        let n = self.num.at_one();
        let d = self.den.at_one();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = (n / &g, d / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Ok((n, d))
    }
}

impl From<LaurentPoly> for RationalQ {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalQ {
    fn from(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }
}

fn add_rat(a: &RationalQ, b: &RationalQ, sign: bool) -> RationalQ {
    let bn = if sign { b.num.clone() } else { -&b.num };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return RationalQ {
            num: bn,
            den: b.den.clone(),
        };
    }
    if a.den == b.den {
        let num = &a.num + &bn;
        if a.den.is_one() {
            return RationalQ::from_poly(num);
        }
        return RationalQ::normalize(num, a.den.clone());
    }
    RationalQ::normalize(&a.num * &b.den + &bn * &a.den, &a.den * &b.den)
}

fn mul_rat(a: &RationalQ, b: &RationalQ) -> RationalQ {
    if a.is_zero() || b.is_zero() {
        return RationalQ::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RationalQ::from_poly(&a.num * &b.num);
    }
    RationalQ::normalize(&a.num * &b.num, &a.den * &b.den)
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        -&self
    }
}

macro_rules! forward_rat {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&RationalQ> for &RationalQ {
            type Output = RationalQ;
            fn $method(self, rhs: &RationalQ) -> RationalQ {
                $body(self, rhs)
            }
        }
        impl $tr<RationalQ> for RationalQ {
            type Output = RationalQ;
            fn $method(self, rhs: RationalQ) -> RationalQ {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RationalQ> for RationalQ {
            type Output = RationalQ;
            fn $method(self, rhs: &RationalQ) -> RationalQ {
                $body(&self, rhs)
            }
        }
    };
}

forward_rat!(Add, add, |a, b| add_rat(a, b, true));
forward_rat!(Sub, sub, |a, b| add_rat(a, b, false));
forward_rat!(Mul, mul, mul_rat);

/// Panics on division by zero, like integer division; use
/// [`RationalQ::checked_div`] when the divisor may vanish.
impl Div<&RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self.checked_div(rhs).expect("division by zero RationalQ")
    }
}

impl Div<RationalQ> for RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: RationalQ) -> RationalQ {
        &self / &rhs
    }
}

impl std::ops::AddAssign<&RationalQ> for RationalQ {
    fn add_assign(&mut self, rhs: &RationalQ) {
        *self = add_rat(self, rhs, true);
    }
}

impl std::iter::Sum for RationalQ {
    fn sum<I: Iterator<Item = RationalQ>>(iter: I) -> Self {
        iter.fold(RationalQ::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
