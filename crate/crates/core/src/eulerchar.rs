//! Fractional graded Euler characteristics.
//!
//! For a graded complete intersection with generators in degrees `g_m` and
//! relations in degrees `r_m`, the minimal resolution of the trivial module
//! has bigraded Poincaré series `Π(1 + q^{g} t) / Π(1 - q^{r} t²)`. Setting
//! `t = -1` converges q-adically to the inverse of the Poincaré polynomial.
//! All Poincaré polynomials here start in degree 0.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{qbinom, LaurentPoly, LaurentSeries};

/// A series in `t` with Laurent polynomial coefficients in `q`, exact for
/// t-degrees below `t_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedSeries {
    pub coefficients: BTreeMap<usize, LaurentPoly>,
    pub t_order: usize,
}

impl BigradedSeries {
    /// Coefficient of `t^m`; `None` past the known order.
    pub fn coeff(&self, m: usize) -> Option<LaurentPoly> {
        (m < self.t_order).then(|| self.coefficients.get(&m).cloned().unwrap_or_else(LaurentPoly::zero))
    }

    /// Specialization `q = 1`, as a power series in `t`.
    pub fn at_q_one(&self) -> LaurentSeries {
        let coeffs = (0..self.t_order)
            .map(|m| self.coeff(m).map(|p| p.at_one()).unwrap_or_default())
            .collect();
        LaurentSeries::new(0, coeffs, self.t_order as i64)
    }

    /// Lowest q-degree of the `t^m` coefficient.
    pub fn min_q_degree(&self, m: usize) -> Option<i64> {
        self.coefficients.get(&m).and_then(|p| p.low_exp())
    }
}

fn check_degrees(what: &'static str, degrees: &[usize]) -> Result<()> {
    match degrees.iter().find(|&&d| d == 0 || d % 2 != 0) {
        Some(d) => Err(Error::range(what, format!("degree {d} is not a positive even integer"))),
        None => Ok(()),
    }
}

/// `Π(1 + q^g t) / Π(1 - q^r t²)` up to `t^{t_order - 1}`.
pub fn ci_poincare(gen_degrees: &[usize], rel_degrees: &[usize], t_order: usize) -> Result<BigradedSeries> {
    check_degrees("generator degree", gen_degrees)?;
    check_degrees("relation degree", rel_degrees)?;
    let mut c = vec![LaurentPoly::zero(); t_order];
    if t_order > 0 {
        c[0] = LaurentPoly::one();
    }
    for &g in gen_degrees {
        for m in (1..t_order).rev() {
            let lower = c[m - 1].shift(g as i64);
            c[m] += &lower;
        }
    }
    for &r in rel_degrees {
        for m in 2..t_order {
            let lower = c[m - 2].shift(r as i64);
            c[m] += &lower;
        }
    }
    Ok(BigradedSeries {
        coefficients: c.into_iter().enumerate().filter(|(_, p)| !p.is_zero()).collect(),
        t_order,
    })
}

/// Degrees for the coinvariant algebra of `S_n` (cohomology of the full flag
/// variety): `n-1` generators of degree 2, relations of degrees `4, 6, ..., 2n`.
pub fn flag_degrees(n: usize) -> (Vec<usize>, Vec<usize>) {
    if n <= 1 {
        return (Vec::new(), Vec::new());
    }
    (vec![2; n - 1], (2..=n).map(|m| 2 * m).collect())
}

/// Degrees for `H*(Gr(k,n))`: Chern classes in degrees `2, ..., 2k`, relations
/// in degrees `2(n-k+1), ..., 2n`.
pub fn grassmannian_degrees(k: usize, n: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if k > n {
        return Err(Error::range("Grassmannian", format!("k={k} > n={n}")));
    }
    Ok(((1..=k).map(|m| 2 * m).collect(), (n - k + 1..=n).map(|m| 2 * m).collect()))
}

/// The alternating sum `Σ_m (-1)^m P_m(q)` of the t-coefficients, exact below
/// `q^{q_order}`.
pub fn euler_inverse(gen_degrees: &[usize], rel_degrees: &[usize], q_order: i64) -> Result<LaurentSeries> {
    check_degrees("generator degree", gen_degrees)?;
    check_degrees("relation degree", rel_degrees)?;
    // every power of t carries at least q^slope
    let slope = gen_degrees
        .iter()
        .copied()
        .chain(rel_degrees.iter().map(|r| r / 2))
        .min()
        .unwrap_or(1) as i64;
    let t_order = if q_order <= 0 { 1 } else { (q_order / slope + 1) as usize };
    let p = ci_poincare(gen_degrees, rel_degrees, t_order)?;
    let mut sum = LaurentPoly::zero();
    for (m, c) in &p.coefficients {
        if m % 2 == 0 {
            sum += c;
        } else {
            sum -= c;
        }
    }
    Ok(LaurentSeries::from_poly(&sum, q_order))
}

pub fn euler_inverse_flag(n: usize, q_order: i64) -> LaurentSeries {
    let (g, r) = flag_degrees(n);
    euler_inverse(&g, &r, q_order).expect("flag degrees are positive and even")
}

pub fn euler_inverse_grassmannian(k: usize, n: usize, q_order: i64) -> Result<LaurentSeries> {
    let (g, r) = grassmannian_degrees(k, n)?;
    euler_inverse(&g, &r, q_order)
}

/// Exponents `c_1, ..., c_M` with `P = Π (1+t^{odd})^{c} / Π (1-t^{even})^{c}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviationProfile {
    pub c: Vec<i64>,
}

impl DeviationProfile {
    pub fn get(&self, m: usize) -> i64 {
        if m == 0 {
            return 0;
        }
        self.c.get(m - 1).copied().unwrap_or(0)
    }
}

/// `(1 + t^m)^c` for odd `m`, `(1 - t^m)^{-c}` for even `m`, exact below `t^order`.
fn factor_power(m: usize, c: i64, order: i64) -> Result<LaurentSeries> {
    let one = LaurentPoly::one();
    let tm = LaurentPoly::q_pow(m as i64);
    let (base, exp) = if m % 2 == 1 { (one + tm, c) } else { (one - tm, -c) };
    let base = LaurentSeries::from_poly(&base, order);
    let base = if exp < 0 { base.inverse()? } else { base };
    let mut acc = LaurentSeries::one(order);
    for _ in 0..exp.unsigned_abs() {
        acc = acc.mul(&base);
    }
    Ok(acc)
}

/// Peels off one factor per degree: `c_m` is the `t^m` coefficient of `P`
/// minus that of the product of the factors found so far.
pub fn deviations(p: &LaurentSeries, max_m: usize) -> Result<DeviationProfile> {
    let order = max_m as i64 + 1;
    if p.order() < order {
        return Err(Error::range(
            "deviation depth",
            format!("series known below t^{}, need t^{max_m}", p.order()),
        ));
    }
    if p.min_exponent() < 0 || p.coeff(0) != Some(BigInt::one()) {
        return Err(Error::range("deviation input", "constant term must be 1".to_string()));
    }
    let target = p.truncate(order);
    let mut current = LaurentSeries::one(order);
    let mut c = Vec::with_capacity(max_m);
    for m in 1..=max_m {
        let diff = target.coeff(m as i64).unwrap_or_default() - current.coeff(m as i64).unwrap_or_default();
        let cm = diff
            .to_i64()
            .ok_or_else(|| Error::range("deviation", format!("c_{m} = {diff} does not fit in i64")))?;
        c.push(cm);
        if cm != 0 {
            current = current.mul(&factor_power(m, cm, order)?);
        }
    }
    debug_assert!(current.truncated() == target.truncated());
    Ok(DeviationProfile { c })
}

/// The product of the factors, exact below `t^{max_m + 1}`.
pub fn reconstruct(prof: &DeviationProfile, max_m: usize) -> LaurentSeries {
    let order = max_m as i64 + 1;
    let mut acc = LaurentSeries::one(order);
    for (idx, &c) in prof.c.iter().enumerate().take(max_m) {
        if c != 0 {
            acc = acc.mul(&factor_power(idx + 1, c, order).expect("factors have unit constant term"));
        }
    }
    acc
}

/// Poincaré polynomial of `H*(Gr(k,n))`: `q^{k(n-k)} [n, k]`.
pub fn grassmannian_poincare(k: usize, n: usize) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::range("Grassmannian", format!("k={k} > n={n}")));
    }
    Ok(qbinom(n as i64, k as i64).shift((k * (n - k)) as i64))
}

/// Graded dimension of `H*(Gr(k_1,d_1)) ⊗ ... ⊗ H*(Gr(k_r,d_r))`.
pub fn endring_graded_dim(kd: &[(usize, usize)]) -> Result<LaurentPoly> {
    kd.iter()
        .map(|&(k, d)| grassmannian_poincare(k, d))
        .product::<Result<LaurentPoly>>()
}

/// `1 / Π ⟦d_m, k_m⟧` expanded below `q^{q_order}`.
pub fn standard_ext_euler(kd: &[(usize, usize)], q_order: i64) -> Result<LaurentSeries> {
    LaurentSeries::from_poly(&endring_graded_dim(kd)?, q_order).inverse()
}

/// Ungraded resolution series `(1+t)^{n-1} / (1-t²)^{n-1}` of the flag case,
/// obtained from [`ci_poincare`] at `q = 1`.
pub fn flag_ungraded(n: usize, t_order: usize) -> LaurentSeries {
    let (g, r) = flag_degrees(n);
    ci_poincare(&g, &r, t_order)
        .expect("flag degrees are positive and even")
        .at_q_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{qfact_renorm, qint_renorm, RationalQ};

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn flag3_low_ranks() {
        let (g, r) = flag_degrees(3);
        let s = ci_poincare(&g, &r, 6).unwrap();
        assert_eq!(s.coeff(0).unwrap(), p(&[(0, 1)]));
        assert_eq!(s.coeff(1).unwrap(), p(&[(2, 2)]));
        assert_eq!(s.coeff(2).unwrap(), p(&[(4, 2), (6, 1)]));
        assert_eq!(s.coeff(3).unwrap(), p(&[(6, 2), (8, 2)]));
        assert_eq!(s.coeff(4).unwrap(), p(&[(8, 2), (10, 2), (12, 1)]));
        assert_eq!(s.coeff(5).unwrap(), p(&[(10, 2), (12, 2), (14, 2)]));
        assert!(s.coeff(6).is_none());
    }

    #[test]
    fn empty_degrees() {
        let s = ci_poincare(&[], &[], 5).unwrap();
        assert_eq!(s.coefficients.len(), 1);
        assert_eq!(euler_inverse(&[], &[], 10).unwrap(), LaurentSeries::one(10));
        assert!(ci_poincare(&[3], &[], 4).is_err());
    }

    #[test]
    fn hypersurface_shifts() {
        let s = ci_poincare(&[2], &[8], 6).unwrap();
        let lows: Vec<i64> = (1..6).map(|m| s.min_q_degree(m).unwrap()).collect();
        assert_eq!(lows, vec![2, 8, 10, 16, 18]);
    }

    #[test]
    fn inverse_quantum_numbers() {
        for n in 1..=5 {
            let e = euler_inverse_flag(n, 30);
            let prod = e.mul_poly(&qfact_renorm(n));
            assert_eq!(prod.truncate(30).truncated(), LaurentPoly::one());
            let expect =
                LaurentSeries::from_ratfun(&RationalQ::new(LaurentPoly::one(), qfact_renorm(n)).unwrap(), 30).unwrap();
            assert_eq!(e, expect);
        }
        let g = euler_inverse_grassmannian(1, 3, 14).unwrap();
        assert_eq!(g.truncated(), p(&[(0, 1), (2, -1), (6, 1), (8, -1), (12, 1)]));
        let inv = RationalQ::new(LaurentPoly::one(), qint_renorm(3)).unwrap();
        assert_eq!(g, LaurentSeries::from_ratfun(&inv, 14).unwrap());
    }

    #[test]
    fn deviation_examples() {
        let s = flag_ungraded(3, 13);
        assert_eq!(deviations(&s, 12).unwrap().c, {
            let mut v = vec![2, 2];
            v.extend([0; 10]);
            v
        });
        assert_eq!(deviations(&LaurentSeries::one(9), 8).unwrap().c, vec![0; 8]);
        let geo = LaurentSeries::new(0, (0..9).map(|m| BigInt::from((m % 2 == 0) as i64)).collect(), 9);
        let d = deviations(&geo, 8).unwrap();
        assert_eq!(d.get(2), 1);
        assert_eq!(d.c.iter().filter(|&&c| c != 0).count(), 1);
        assert_eq!(reconstruct(&d, 8), geo);
    }

    #[test]
    fn grassmannians() {
        assert_eq!(grassmannian_poincare(1, 2).unwrap(), p(&[(0, 1), (2, 1)]));
        assert_eq!(
            grassmannian_poincare(2, 4).unwrap(),
            p(&[(0, 1), (2, 1), (4, 2), (6, 1), (8, 1)])
        );
        assert_eq!(endring_graded_dim(&[(1, 2), (1, 2)]).unwrap(), p(&[(0, 1), (2, 2), (4, 1)]));
        assert_eq!(endring_graded_dim(&[(0, 4)]).unwrap(), LaurentPoly::one());
        let e = standard_ext_euler(&[(1, 2), (1, 2)], 6).unwrap();
        assert_eq!(e.truncated(), p(&[(0, 1), (2, -2), (4, 3)]));
        assert!(grassmannian_poincare(3, 2).is_err());
    }
}
