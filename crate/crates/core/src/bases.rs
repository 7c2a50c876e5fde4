//! The twisted canonical basis `v_r ♠ v_s` of `V_i ⊗ V_j`, its inverse, and
//! the Grothendieck-group classes it decategorifies.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{q, qbinom, LaurentPoly, RationalQ};
use crate::tensor_rep::{act_divided, Generator, ModuleShape, TensorVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisTag {
    Standard,
    TwistedCanonical,
    ProperStandardClass,
    ProjectiveClass,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisTag::Standard => "standard",
            BasisTag::TwistedCanonical => "twisted_canonical",
            BasisTag::ProperStandardClass => "proper_standard_class",
            BasisTag::ProjectiveClass => "projective_class",
        })
    }
}

/// A linear combination of basis elements indexed by tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ExpansionJson", try_from = "ExpansionJson")]
pub struct BasisExpansion {
    basis: BasisTag,
    coefficients: BTreeMap<Vec<usize>, LaurentPoly>,
}

#[derive(Serialize, Deserialize)]
struct ExpansionTerm {
    index: Vec<usize>,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    basis: BasisTag,
    terms: Vec<ExpansionTerm>,
}

impl From<BasisExpansion> for ExpansionJson {
    fn from(e: BasisExpansion) -> Self {
        ExpansionJson {
            basis: e.basis,
            terms: e
                .coefficients
                .into_iter()
                .map(|(index, coeff)| ExpansionTerm { index, coeff })
                .collect(),
        }
    }
}

impl TryFrom<ExpansionJson> for BasisExpansion {
    type Error = String;

    fn try_from(j: ExpansionJson) -> std::result::Result<Self, String> {
        let mut e = BasisExpansion::new(j.basis);
        for t in j.terms {
            if t.coeff.is_zero() {
                return Err(format!("zero coefficient stored at {:?}", t.index));
            }
            e.add(t.index, &t.coeff);
        }
        Ok(e)
    }
}

impl BasisExpansion {
    pub fn new(basis: BasisTag) -> Self {
        BasisExpansion {
            basis,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn add(&mut self, idx: Vec<usize>, c: &LaurentPoly) {
        let entry = self.coefficients.entry(idx).or_insert_with(LaurentPoly::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coeff(&self, idx: &[usize]) -> LaurentPoly {
        self.coefficients.get(idx).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &LaurentPoly)> {
        self.coefficients.iter()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Coefficients specialized at `q = 1`, zeros dropped.
    pub fn at_one(&self) -> BTreeMap<Vec<usize>, BigInt> {
        self.coefficients
            .iter()
            .map(|(k, v)| (k.clone(), v.at_one()))
            .filter(|(_, v)| *v != BigInt::from(0))
            .collect()
    }
}

impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coefficients
            .iter()
            .map(|(k, v)| {
                let idx: Vec<String> = k.iter().map(|x| x.to_string()).collect();
                format!("({v})*[{}]", idx.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn check(r: usize, s: usize, i: usize, j: usize) -> Result<()> {
    if r > i || s > j {
        return Err(Error::range("basis index", format!("(r,s)=({r},{s}) in V_{i}⊗V_{j}")));
    }
    Ok(())
}

/// The branch of the ♠ definition: `r+s <= j` uses `E^(s) F^(i-r)`, and
/// `r+s >= j` uses `F^(i-r) E^(s)`. Both apply on the wall `r+s = j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Low,
    High,
}

pub fn branch(r: usize, s: usize, j: usize) -> Branch {
    if r + s <= j {
        Branch::Low
    } else {
        Branch::High
    }
}

/// `v_r ♠ v_s` from divided powers applied to `v_i ⊗ v_0`.
pub fn twisted_canonical(r: usize, s: usize, i: usize, j: usize) -> Result<TensorVector> {
    check(r, s, i, j)?;
    twisted_canonical_branch(r, s, i, j, branch(r, s, j))
}

pub fn twisted_canonical_branch(r: usize, s: usize, i: usize, j: usize, b: Branch) -> Result<TensorVector> {
    check(r, s, i, j)?;
    let v = TensorVector::basis(ModuleShape(vec![i, j]), &[i, 0])?;
    match b {
        Branch::Low => act_divided(Generator::E, s, &act_divided(Generator::F, i - r, &v)?),
        Branch::High => act_divided(Generator::F, i - r, &act_divided(Generator::E, s, &v)?),
    }
}

/// The closed sums
///
/// * low: `Σ_{p=0}^{s} q^{p(p-s+j)} [p+r, p] v_{r+p} ⊗ v_{s-p}`
/// * high: `Σ_{p=0}^{i-r} q^{p(p+r)} [j-s+p, p] v_{r+p} ⊗ v_{s-p}`
///
/// with terms outside `V_i ⊗ V_j` dropped.
pub fn twisted_canonical_closed_branch(r: usize, s: usize, i: usize, j: usize, b: Branch) -> Result<TensorVector> {
    check(r, s, i, j)?;
    let mut out = TensorVector::zero(ModuleShape(vec![i, j]));
    let top = match b {
        Branch::Low => s,
        Branch::High => i - r,
    };
    for p in 0..=top {
        if r + p > i || p > s {
            break;
        }
        let (pi, ri, si, ji) = (p as i64, r as i64, s as i64, j as i64);
        let c = match b {
            Branch::Low => q(pi * (pi - si + ji)) * qbinom(pi + ri, pi),
            Branch::High => q(pi * (pi + ri)) * qbinom(ji - si + pi, pi),
        };
        out.add_term(vec![r + p, s - p], &RationalQ::from_poly(c));
    }
    Ok(out)
}

pub fn twisted_canonical_closed(r: usize, s: usize, i: usize, j: usize) -> Result<TensorVector> {
    twisted_canonical_closed_branch(r, s, i, j, branch(r, s, j))
}

/// `v_r ⊗ v_s` in the ♠ basis:
/// `Σ_γ (-1)^γ q^{γ(j-s+1)} [r+γ, γ] v_{r+γ} ♠ v_{s-γ}` when `r+s <= j`, and
/// `Σ_γ (-1)^γ q^{γ(r+1)} [j-s+γ, γ] v_{r+γ} ♠ v_{s-γ}` when `r+s >= j`.
pub fn standard_in_twisted(r: usize, s: usize, i: usize, j: usize) -> Result<BasisExpansion> {
    check(r, s, i, j)?;
    let mut e = BasisExpansion::new(BasisTag::TwistedCanonical);
    let (ri, si, ji) = (r as i64, s as i64, j as i64);
    for g in 0..=s {
        if r + g > i {
            break;
        }
        let gi = g as i64;
        let c = match branch(r, s, j) {
            Branch::Low => q(gi * (ji - si + 1)) * qbinom(ri + gi, gi),
            Branch::High => q(gi * (ri + 1)) * qbinom(ji - si + gi, gi),
        };
        let c = if g % 2 == 0 { c } else { -c };
        e.add(vec![r + g, s - g], &c);
    }
    Ok(e)
}

/// Substitutes ♠ vectors into a ♠-basis expansion.
pub fn twisted_to_standard(e: &BasisExpansion, i: usize, j: usize) -> Result<TensorVector> {
    if e.basis != BasisTag::TwistedCanonical {
        return Err(Error::ShapeMismatch(format!("expected a ♠ expansion, got {}", e.basis)));
    }
    let mut out = TensorVector::zero(ModuleShape(vec![i, j]));
    for (idx, c) in e.terms() {
        let v = twisted_canonical(idx[0], idx[1], i, j)?.scale_poly(c);
        out = out.plus(&v)?;
    }
    Ok(out)
}

/// `[Δ̂(k_1,d_1|...)] = Π [d_m, k_m] · [proper standard]`: returns the product
/// of binomials.
pub fn standard_class_in_proper(kd: &[(usize, usize)]) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for &(k, d) in kd {
        if k > d {
            return Err(Error::range("class label", format!("k={k} > d={d}")));
        }
        acc = acc * qbinom(d as i64, k as i64);
    }
    Ok(acc)
}

/// `[P̂(r,i|s,j)] = v_r ♠ v_s`, read as a combination of standard classes
/// `[Δ̂(r',i|s',j)]`.
pub fn projective_class_in_standard(r: usize, s: usize, i: usize, j: usize) -> Result<BasisExpansion> {
    let v = twisted_canonical(r, s, i, j)?;
    let mut e = BasisExpansion::new(BasisTag::Standard);
    for (idx, c) in v.terms() {
        let p = c
            .to_laurent()
            .ok_or_else(|| Error::Internal(format!("♠ coefficient {c} is not Laurent")))?;
        e.add(idx.clone(), &p);
    }
    Ok(e)
}
