//! Quantum integers, factorials and binomials.

use super::LaurentPoly;
use crate::error::{Error, Result};

/// `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`, with `[0] = 0`.
pub fn qint(n: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|j| (n as i64 - 2 * j - 1, 1)))
}

/// `⟦n⟧ = 1 + q^2 + ... + q^(2(n-1)) = q^(n-1) [n]`.
pub fn qint_renorm(n: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|j| (2 * j, 1)))
}

pub fn qfact(n: usize) -> LaurentPoly {
    (1..=n).map(qint).product()
}

pub fn qfact_renorm(n: usize) -> LaurentPoly {
    (1..=n).map(qint_renorm).product()
}

/// Balanced quantum binomial; zero outside `0 <= k <= n`.
pub fn qbinom(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || n < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k);
    // partial products are again binomials, so every division is exact
    let mut acc = LaurentPoly::one();
    for m in 1..=k {
        acc = (&acc * &qint((n - k + m) as usize))
            .div_exact(&qint(m as usize))
            .expect("quantum binomial partial products are integral");
    }
    acc
}

/// `[n]! / ([p1]! ... [pr]! [n - sum p]!)`.
pub fn qmultinom(n: usize, parts: &[usize]) -> Result<LaurentPoly> {
    let used: usize = parts.iter().sum();
    if used > n {
        return Err(Error::range(
            "multinomial parts",
            format!("parts sum to {used} > {n}"),
        ));
    }
    let mut rest = n as i64;
    let mut acc = LaurentPoly::one();
    for &p in parts {
        acc = &acc * &qbinom(rest, p as i64);
        rest -= p as i64;
    }
    Ok(acc)
}
