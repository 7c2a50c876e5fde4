//! Combinatorics of 0/1 sequences: inversion statistics, cup diagrams and
//! the dimension counts read off from them.
//!
//! A 1 is drawn as ∧ and a 0 as ∨. Positions are 1-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Number of pairs `i < j` with `a_i < a_j`.
pub fn stat_l(a: &[u8]) -> usize {
    let mut zeros = 0;
    let mut count = 0;
    for &x in a {
        if x == 0 {
            zeros += 1;
        } else {
            count += zeros;
        }
    }
    count
}

/// Number of pairs `i < j` with `a_i > a_j`, i.e. `|a|(n-|a|) - l(a)`.
pub fn stat_b(a: &[u8]) -> usize {
    let mut ones = 0;
    let mut count = 0;
    for &x in a {
        if x == 1 {
            ones += 1;
        } else {
            count += ones;
        }
    }
    count
}

pub fn ones(a: &[u8]) -> usize {
    a.iter().filter(|&&x| x == 1).count()
}

/// All 0/1 sequences of length `n` with exactly `k` ones, lexicographic.
pub fn sequences_with_ones(n: usize, k: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, k: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            if k == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let left = n - prefix.len();
        if left > k {
            prefix.push(0);
            rec(n, k, prefix, out);
            prefix.pop();
        }
        if k > 0 {
            prefix.push(1);
            rec(n, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Ray {
    Up,
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupDiagram {
    pub n: usize,
    /// Cups `(left, right)`, sorted by left endpoint.
    pub cups: Vec<(usize, usize)>,
    /// Unmatched positions with their orientation, increasing.
    pub rays: Vec<(usize, Ray)>,
}

impl CupDiagram {
    pub fn cup_count(&self) -> usize {
        self.cups.len()
    }

    /// No two cups interleave.
    pub fn is_noncrossing(&self) -> bool {
        self.cups.iter().all(|&(a, b)| {
            self.cups
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// No ray sits strictly inside a cup.
    pub fn rays_unenclosed(&self) -> bool {
        self.rays
            .iter()
            .all(|&(r, _)| self.cups.iter().all(|&(a, b)| !(a < r && r < b)))
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cups: Vec<String> = self.cups.iter().map(|(a, b)| format!("({a},{b})")).collect();
        let rays: Vec<String> = self.rays.iter().map(|(r, _)| r.to_string()).collect();
        write!(f, "cups={} rays={}", cups.join(";"), rays.join(","))
    }
}

/// Matches each ∨ with the nearest unmatched ∧ to its left. A ∨ that finds
/// no open ∧ becomes a ray and walls off everything before it; a ∧ left open
/// at the end is a ray.
pub fn cup_diagram(a: &[u8]) -> CupDiagram {
    let mut open: Vec<usize> = Vec::new();
    let mut cups = Vec::new();
    let mut rays = Vec::new();
    for (pos, &x) in a.iter().enumerate() {
        let p = pos + 1;
        if x == 1 {
            open.push(p);
        } else if let Some(l) = open.pop() {
            cups.push((l, p));
        } else {
            rays.push((p, Ray::Down));
        }
    }
    rays.extend(open.into_iter().map(|p| (p, Ray::Up)));
    cups.sort();
    rays.sort();
    CupDiagram {
        n: a.len(),
        cups,
        rays,
    }
}

/// Gelfand-Kirillov dimension `n(n-1)/2 - c` of the simple module labelled by `a`.
pub fn gk_dim(a: &[u8]) -> usize {
    let n = a.len();
    n * n.saturating_sub(1) / 2 - cup_diagram(a).cup_count()
}

/// Gelfand-Kirillov dimension `n(n-1) - 2c` of the corresponding bimodule.
pub fn gk_dim_bimodule(a: &[u8]) -> usize {
    2 * gk_dim(a)
}

/// Multiplicity of `V_{n-2r}` in `V_1^{⊗n}`: the number of cup diagrams on `n`
/// points with `r` cups and no ray enclosed by a cup.
pub fn isotypic_multiplicity(n: usize, r: usize) -> Result<u64> {
    if 2 * r > n {
        return Err(Error::range("cup count", format!("r={r} with n={n}")));
    }
    let binom = |n: usize, k: usize| -> u64 {
        let mut acc: u64 = 1;
        for m in 0..k {
            acc = acc * (n - m) as u64 / (m as u64 + 1);
        }
        acc
    };
    let below = if r == 0 { 0 } else { binom(n, r - 1) };
    Ok(binom(n, r) - below)
}

/// `sum_w q^{2 b(w) - mn}` over all sequences with `m` ones and `n` zeros.
pub fn quantum_coset_identity_check(m: usize, n: usize) -> LaurentPoly {
    let mn = (m * n) as i64;
    LaurentPoly::from_terms(
        sequences_with_ones(m + n, m)
            .iter()
            .map(|w| (2 * stat_b(w) as i64 - mn, 1)),
    )
}
