//! Ungraded projective resolutions of standard modules `Δ(r,i|s,j)`: the
//! multiplicity numbers, their identities, the resolution table and the
//! class of `Δ` in terms of projectives.
//!
//! Everything here is at `q = 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bases::{branch, BasisExpansion, BasisTag, Branch};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::tensor_rep::compositions;

pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for m in 0..k {
        acc = acc * BigInt::from(n - m) / BigInt::from(m + 1);
    }
    acc
}

/// Compositions of `total` into `parts` positive parts, lexicographic.
pub fn positive_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts > total {
        return Vec::new();
    }
    compositions(total - parts, parts)
        .into_iter()
        .map(|c| c.into_iter().map(|d| d + 1).collect())
        .collect()
}

/// `Σ_{d_1+...+d_m = m+n, d_p > 0} C(B+m+n, d_1) C(B+m+n-d_1, d_2) ... C(B+d_m, d_m)`.
fn resolution_number(base: usize, n: usize, m: usize) -> BigInt {
    let total = m + n;
    positive_compositions(total, m)
        .iter()
        .map(|d| {
            let mut top = base + total;
            let mut acc = BigInt::one();
            for &dp in d {
                acc *= binom(top, dp);
                top -= dp;
            }
            acc
        })
        .sum()
}

/// `C(B+m+n, m+n) Σ_d (m+n)! / (d_1! ... d_m!)`.
fn resolution_number_closed(base: usize, n: usize, m: usize) -> BigInt {
    let total = m + n;
    let multinomials: BigInt = positive_compositions(total, m)
        .iter()
        .map(|d| {
            let mut rest = total;
            let mut acc = BigInt::one();
            for &dp in d {
                acc *= binom(rest, dp);
                rest -= dp;
            }
            acc
        })
        .sum();
    binom(base + total, total) * multinomials
}

/// `a_{n,m}^{r,s}`; it does not depend on `s`. `a_{n,0}` is 1 for `n = 0`
/// and 0 otherwise.
pub fn a_num(n: usize, m: usize, r: usize) -> BigInt {
    resolution_number(r, n, m)
}

/// `a_{n,m}^{r,s}` through the multinomial closed form.
pub fn a_num_closed(n: usize, m: usize, r: usize) -> BigInt {
    resolution_number_closed(r, n, m)
}

/// `b_{n,m}^{r,s}`: as `a` with `r` replaced by `j - s`.
pub fn b_num(n: usize, m: usize, s: usize, j: usize) -> Result<BigInt> {
    let base = j
        .checked_sub(s)
        .ok_or_else(|| Error::range("b-number", format!("s={s} > j={j}")))?;
    Ok(resolution_number(base, n, m))
}

pub fn b_num_closed(n: usize, m: usize, s: usize, j: usize) -> Result<BigInt> {
    let base = j
        .checked_sub(s)
        .ok_or_else(|| Error::range("b-number", format!("s={s} > j={j}")))?;
    Ok(resolution_number_closed(base, n, m))
}

fn alternating(base: usize, n: usize) -> BigInt {
    (1..=n + 1)
        .map(|m| {
            let x = resolution_number(base, n + 1 - m, m);
            if m % 2 == 1 {
                x
            } else {
                -x
            }
        })
        .sum()
}

/// `a_{n,1} - a_{n-1,2} + ... + (-1)^n a_{0,n+1}`, which equals
/// `(-1)^n C(r+n+1, n+1)`.
pub fn alternating_sum_check(n: usize, r: usize) -> BigInt {
    alternating(r, n)
}

/// The b-analogue, equal to `(-1)^n C(j-s+n+1, n+1)`.
pub fn alternating_sum_check_b(n: usize, s: usize, j: usize) -> Result<BigInt> {
    let base = j
        .checked_sub(s)
        .ok_or_else(|| Error::range("b-number", format!("s={s} > j={j}")))?;
    Ok(alternating(base, n))
}

/// `(-1)^n C(base+n+1, n+1)`.
pub fn alternating_closed(base: usize, n: usize) -> BigInt {
    let c = binom(base + n + 1, n + 1);
    if n % 2 == 0 {
        c
    } else {
        -c
    }
}

fn recursion_holds(base: usize, n: usize, m: usize) -> bool {
    if m == 0 {
        return false;
    }
    let rhs: BigInt = (0..=n)
        .map(|g| binom(base + g + 1, g + 1) * resolution_number(base + g + 1, n - g, m - 1))
        .sum();
    resolution_number(base, n, m) == rhs
}

/// Checks `a_{n,m}^{r,s} = Σ_γ C(r+γ+1, γ+1) a_{n-γ,m-1}^{r+γ+1,s-γ-1}` and the
/// b-analogue with `j-s` in place of `r`. Needs `m >= 1`.
pub fn recursion_check(n: usize, m: usize, r: usize, s: usize, j: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::range("recursion depth", "m must be at least 1".to_string()));
    }
    let jb = j
        .checked_sub(s)
        .ok_or_else(|| Error::range("b-number", format!("s={s} > j={j}")))?;
    Ok(recursion_holds(r, n, m) && recursion_holds(jb, n, m))
}

/// A projective `P(r',i|s',j)` appearing `multiplicity` times in one term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveTerm {
    pub r: usize,
    pub s: usize,
    pub multiplicity: BigInt,
}

/// `Q_0, Q_1, ..., Q_l` of the minimal projective resolution of `Δ(r,i|s,j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionTable {
    pub r: usize,
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub rows: Vec<Vec<ProjectiveTerm>>,
}

impl ResolutionTable {
    /// Length `l` of the resolution.
    pub fn length(&self) -> usize {
        self.rows.len() - 1
    }

    /// `Σ_m (-1)^m [Q_m]` as a combination of projective classes.
    pub fn euler_sum(&self) -> BasisExpansion {
        let mut e = BasisExpansion::new(BasisTag::ProjectiveClass);
        for (m, row) in self.rows.iter().enumerate() {
            for term in row {
                let c = LaurentPoly::constant(if m % 2 == 0 {
                    term.multiplicity.clone()
                } else {
                    -term.multiplicity.clone()
                });
                e.add(vec![term.r, term.s], &c);
            }
        }
        e
    }
}

fn check(r: usize, s: usize, i: usize, j: usize) -> Result<()> {
    if r > i || s > j {
        return Err(Error::range("standard label", format!("(r,s)=({r},{s}) with (i,j)=({i},{j})")));
    }
    Ok(())
}

/// `Q_m = ⊕_{n=0}^{s-m} P(r+m+n, i | s-m-n, j)^{⊕ a_{n,m}}` (b-numbers when
/// `r+s > j`) for `1 <= m <= l`, keeping only projectives with `r+m+n <= i`.
/// The length is `l = min(s, i-r)`: the last degree whose terms exist.
pub fn resolution_table(r: usize, s: usize, i: usize, j: usize) -> Result<ResolutionTable> {
    check(r, s, i, j)?;
    let base = match branch(r, s, j) {
        Branch::Low => r,
        Branch::High => j - s,
    };
    let l = s.min(i - r);
    let mut rows = vec![vec![ProjectiveTerm {
        r,
        s,
        multiplicity: BigInt::one(),
    }]];
    for m in 1..=l {
        let row = (0..=s - m)
            .filter(|n| r + m + n <= i)
            .map(|n| ProjectiveTerm {
                r: r + m + n,
                s: s - m - n,
                multiplicity: resolution_number(base, n, m),
            })
            .filter(|t| !t.multiplicity.is_zero())
            .collect();
        rows.push(row);
    }
    Ok(ResolutionTable { r, s, i, j, rows })
}

/// `[Δ(r,i|s,j)] = Σ_γ (-1)^γ C(B+γ, γ) [P(r+γ,i|s-γ,j)]` with `B = r` when
/// `r+s <= j` and `B = j-s` otherwise.
pub fn delta_in_projectives(r: usize, s: usize, i: usize, j: usize) -> Result<BasisExpansion> {
    check(r, s, i, j)?;
    let base = match branch(r, s, j) {
        Branch::Low => r,
        Branch::High => j - s,
    };
    let mut e = BasisExpansion::new(BasisTag::ProjectiveClass);
    for g in 0..=s {
        if r + g > i {
            break;
        }
        let c = binom(base + g, g);
        let c = if g % 2 == 0 { c } else { -c };
        e.add(vec![r + g, s - g], &LaurentPoly::constant(c));
    }
    Ok(e)
}
