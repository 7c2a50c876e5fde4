//! 3j-symbols `C_{i,j}^k(r,s,t)` by independent routes, the triangle
//! arrangement classes behind the combinatorial formula, and the twisted
//! symbols `D_{i,j}^k` built on the ♠ basis.
//!
//! `C_{i,j}^k(r,s,t)` is the coefficient of the dual standard vector `v^t` in
//! `A_{i,j}^k(v_r ⊗ v_s)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bases::twisted_canonical;
use crate::error::{Error, Result};
use crate::laurent::{q, qbinom, LaurentPoly, RationalQ};
use crate::networks::{hat_c_network, intertwiner_a, intertwiner_a_layers, Intertwiner};
use crate::tensor_rep::{ModuleShape, TensorVector};

/// An admissible triple with its arc counts: `x+z = i`, `y+z = j`, `x+y = k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleShape {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl TriangleShape {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        let bad = |reason| Err(Error::Inadmissible { i, j, k, reason });
        if (i + j + k) % 2 != 0 {
            return bad("i+j+k is odd");
        }
        if k > i + j {
            return bad("k > i+j");
        }
        if i > j + k {
            return bad("i > j+k");
        }
        if j > i + k {
            return bad("j > i+k");
        }
        Ok(TriangleShape {
            i,
            j,
            k,
            x: (i + k - j) / 2,
            y: (j + k - i) / 2,
            z: (i + j - k) / 2,
        })
    }

    /// The only `t` for which `C(r,s,t)` can be nonzero: `r + s - z`.
    pub fn weight_t(&self, r: usize, s: usize) -> Option<usize> {
        (r + s).checked_sub(self.z).filter(|&t| t <= self.k)
    }

    fn check(&self, r: usize, s: usize, t: usize) -> Result<()> {
        if r > self.i || s > self.j || t > self.k {
            return Err(Error::range(
                "3j index",
                format!(
                    "(r,s,t)=({r},{s},{t}) outside 0..={}, 0..={}, 0..={}",
                    self.i, self.j, self.k
                ),
            ));
        }
        Ok(())
    }

    fn on_shell(&self, r: usize, s: usize, t: usize) -> bool {
        self.weight_t(r, s) == Some(t)
    }
}

pub fn triangle_shape(i: usize, j: usize, k: usize) -> Result<TriangleShape> {
    TriangleShape::new(i, j, k)
}

/// All oriented arrangements with `a` arcs of the z-group oriented from the
/// j-side to the i-side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementClass {
    pub shape: TriangleShape,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub a: usize,
    /// `C(z,a) C(x,r-a) C(y,j-s-a)`.
    pub multiplicity: u64,
    /// `(-1)^a (-1)^{(i+j+k)/2+r+s}`.
    pub sign: i8,
    pub gamma: i64,
}

fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for m in 0..k {
        acc = acc * (n - m) as u64 / (m as u64 + 1);
    }
    acc
}

/// `γ_a = ((z-a)+(r-a))(y-s+z-a) + (r-a)((x-r+a)+(z-a)) + a(z-a) + (j-s-a)(y-j+s+a)`.
pub fn gamma_a(sh: &TriangleShape, r: usize, s: usize, a: usize) -> i64 {
    let (x, y, z, j) = (sh.x as i64, sh.y as i64, sh.z as i64, sh.j as i64);
    let (r, s, a) = (r as i64, s as i64, a as i64);
    ((z - a) + (r - a)) * (y - s + z - a)
        + (r - a) * ((x - r + a) + (z - a))
        + a * (z - a)
        + (j - s - a) * (y - j + s + a)
}

/// The `a` values with `0 <= r-a <= x` and `0 <= j-s-a <= y`.
fn a_range(sh: &TriangleShape, r: usize, s: usize) -> impl Iterator<Item = usize> + '_ {
    let js = sh.j - s;
    (0..=sh.z).filter(move |&a| a <= r && r - a <= sh.x && a <= js && js - a <= sh.y)
}

pub fn arrangements(
    i: usize,
    j: usize,
    k: usize,
    r: usize,
    s: usize,
    t: usize,
) -> Result<Vec<ArrangementClass>> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    if !sh.on_shell(r, s, t) {
        return Ok(Vec::new());
    }
    let global = (sh.x + sh.y + sh.z + r + s) % 2;
    Ok(a_range(&sh, r, s)
        .map(|a| ArrangementClass {
            shape: sh,
            r,
            s,
            t,
            a,
            multiplicity: binom_u64(sh.z, a) * binom_u64(sh.x, r - a) * binom_u64(sh.y, j - s - a),
            sign: if (a + global) % 2 == 0 { 1 } else { -1 },
            gamma: gamma_a(&sh, r, s, a),
        })
        .filter(|c| c.multiplicity > 0)
        .collect())
}

/// The routes that compute 3j-type symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Direct,
    Sum,
    Classical,
    Twisted,
    Positivity,
    Alternating,
}

impl Route {
    pub const ALL: [Route; 6] = [
        Route::Direct,
        Route::Sum,
        Route::Classical,
        Route::Twisted,
        Route::Positivity,
        Route::Alternating,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::Sum => "sum",
            Route::Classical => "classical",
            Route::Twisted => "twisted",
            Route::Positivity => "positivity",
            Route::Alternating => "alternating",
        }
    }

    /// Which symbol the route computes: `C`, `C` at `q=1`, or `D`.
    pub fn symbol(self) -> &'static str {
        match self {
            Route::Direct | Route::Sum | Route::Alternating => "C",
            Route::Classical => "C|q=1",
            Route::Twisted | Route::Positivity => "D",
        }
    }

    pub fn eval(self, i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<LaurentPoly> {
        match self {
            Route::Direct => threej_direct(i, j, k, r, s, t),
            Route::Sum => threej_quantum_sum(i, j, k, r, s, t),
            Route::Classical => threej_classical(i, j, k, r, s, t).map(LaurentPoly::constant),
            Route::Twisted => threej_twisted(i, j, k, r, s, t),
            Route::Positivity => threej_positivity(i, j, k, r, s, t),
            Route::Alternating => threej_alternating(i, j, k, r, s, t),
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::range("route", s.to_string()))
    }
}

fn laurent(c: RationalQ, what: &str) -> Result<LaurentPoly> {
    c.to_laurent()
        .ok_or_else(|| Error::Internal(format!("{what} is not a Laurent polynomial: {c}")))
}

fn apply_a(sh: &TriangleShape, v: &TensorVector) -> Result<TensorVector> {
    let mut w = v.clone();
    for layer in intertwiner_a_layers(sh) {
        w = layer.apply(&w)?;
    }
    Ok(w)
}

/// `C_{i,j}^k(r,s,t)` read off `A_{i,j}^k(v_r ⊗ v_s)`.
pub fn threej_direct(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<LaurentPoly> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    let v = TensorVector::basis(ModuleShape(vec![i, j]), &[r, s])?;
    laurent(apply_a(&sh, &v)?.dual_coeff(&[t]), "3j-symbol")
}

/// All `C_{i,j}^k(r,s,t)` of one triple from a single matrix of `A_{i,j}^k`.
#[derive(Clone, Debug)]
pub struct ThreejTable {
    shape: TriangleShape,
    a: Intertwiner,
}

impl ThreejTable {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        Ok(ThreejTable {
            shape: TriangleShape::new(i, j, k)?,
            a: intertwiner_a(i, j, k)?,
        })
    }

    pub fn shape(&self) -> &TriangleShape {
        &self.shape
    }

    pub fn get(&self, r: usize, s: usize, t: usize) -> Result<LaurentPoly> {
        self.shape.check(r, s, t)?;
        let c = self.a.entry(&[t], &[r, s]).mul_poly(&qbinom(self.shape.k as i64, t as i64));
        laurent(c, "3j-symbol")
    }

    /// `((r, s, t), C(r,s,t))` for every nonzero symbol.
    pub fn nonzero(&self) -> Result<Vec<((usize, usize, usize), LaurentPoly)>> {
        let sh = self.shape;
        let mut out = Vec::new();
        for r in 0..=sh.i {
            for s in 0..=sh.j {
                if let Some(t) = sh.weight_t(r, s) {
                    let c = self.get(r, s, t)?;
                    if !c.is_zero() {
                        out.push(((r, s, t), c));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `q^{-t(k-t)} Σ_a (-1)^a q^{γ_a - a} [z,a][x,r-a][y,j-s-a]`.
pub fn threej_quantum_sum(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<LaurentPoly> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    if !sh.on_shell(r, s, t) {
        return Ok(LaurentPoly::zero());
    }
    let b = |n: usize, m: usize| qbinom(n as i64, m as i64);
    let total: LaurentPoly = a_range(&sh, r, s)
        .map(|a| {
            let term = q(gamma_a(&sh, r, s, a) - a as i64) * b(sh.z, a) * b(sh.x, r - a) * b(sh.y, j - s - a);
            if a % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    Ok(total.shift(-((t * (k - t)) as i64)))
}

/// `Σ_a (-1)^a C(z,a) C(x,r-a) C(y,j-s-a)`: the symbol at `q = 1`.
pub fn threej_classical(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<BigInt> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    if !sh.on_shell(r, s, t) {
        return Ok(BigInt::from(0));
    }
    Ok(arrangements(i, j, k, r, s, t)?
        .iter()
        .map(|c| {
            let m = BigInt::from(c.multiplicity);
            if c.a % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .sum())
}

/// `D_{i,j}^k(r,s,t)`: the `v^t` coefficient of `A_{i,j}^k(v_r ♠ v_s)`.
pub fn threej_twisted(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<LaurentPoly> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    let v = twisted_canonical(r, s, i, j)?;
    laurent(apply_a(&sh, &v)?.dual_coeff(&[t]), "twisted 3j-symbol")
}

/// Closed form for `D_{i,j}^k(r,s,t)`, nonzero only for `t = r+s-z`:
///
/// * `r+s <= j`: `(-1)^z q^{-z} [k-t+s, s][t-s+i-r, t-s]`
/// * `r+s >= j`: `(-1)^z q^{-z} [i-r+t, t][k-i+r-t+s, s]`
///
/// The q-power is fitted against [`threej_twisted`] on every admissible tuple
/// with `i+j <= 8`: it is `q^{-z}` in both branches, with no further
/// dependence on the indices.
pub fn threej_positivity(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<LaurentPoly> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    if !sh.on_shell(r, s, t) {
        return Ok(LaurentPoly::zero());
    }
    let body = if r + s <= j {
        positivity_branch_low(&sh, r, s, t)
    } else {
        positivity_branch_high(&sh, r, s, t)
    };
    Ok(sign_z(&sh, body.shift(-(sh.z as i64))))
}

fn ib(n: i64, m: i64) -> LaurentPoly {
    qbinom(n, m)
}

pub(crate) fn positivity_branch_low(sh: &TriangleShape, r: usize, s: usize, t: usize) -> LaurentPoly {
    let (i, k, r, s, t) = (sh.i as i64, sh.k as i64, r as i64, s as i64, t as i64);
    ib(k - t + s, s) * ib(t - s + i - r, t - s)
}

pub(crate) fn positivity_branch_high(sh: &TriangleShape, r: usize, s: usize, t: usize) -> LaurentPoly {
    let (i, k, r, s, t) = (sh.i as i64, sh.k as i64, r as i64, s as i64, t as i64);
    ib(i - r + t, t) * ib(k - i + r - t + s, s)
}

fn sign_z(sh: &TriangleShape, p: LaurentPoly) -> LaurentPoly {
    if sh.z % 2 == 0 {
        p
    } else {
        -p
    }
}

/// `C` as an alternating sum of twisted symbols, from expanding `v_r ⊗ v_s`
/// in the ♠ basis:
///
/// * `r+s <= j`: `Σ_γ (-1)^{γ+z} q^{γ(j-s+1)-z} [r+γ,r][k-t+s-γ,s-γ][t-s+i-r,t-s+γ]`
/// * `r+s >= j`: `Σ_γ (-1)^{γ+z} q^{γ(r+1)-z} [j-s+γ,γ][i-r-γ+t,t][k-i+r-t+s,s-γ]`
///
/// over `0 <= γ <= s` with `r+γ <= i`. The sign is `(-1)^{γ+z}` and the
/// exponent carries no further terms; both were fixed against
/// [`threej_direct`] on every admissible tuple with `i, j <= 4`.
pub fn threej_alternating(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<LaurentPoly> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    if !sh.on_shell(r, s, t) {
        return Ok(LaurentPoly::zero());
    }
    let low = r + s <= j;
    let (ii, jj, kk, r, s, t, z) = (
        i as i64, j as i64, k as i64, r as i64, s as i64, t as i64, sh.z as i64,
    );
    let mut total = LaurentPoly::zero();
    for g in 0..=s {
        if r + g > ii {
            break;
        }
        let term = if low {
            q(g * (jj - s + 1) - z) * ib(r + g, r) * ib(kk - t + s - g, s - g) * ib(t - s + ii - r, t - s + g)
        } else {
            q(g * (r + 1) - z) * ib(jj - s + g, g) * ib(ii - r - g + t, t) * ib(kk - ii + r - t + s, s - g)
        };
        if (g + z) % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    Ok(total)
}

/// The vector in `V_i ⊗ V_k ⊗ V_j` produced by [`hat_c_network`].
pub fn hat_c_vector(i: usize, j: usize, k: usize) -> Result<TensorVector> {
    let e = hat_c_network(i, j, k)?;
    e.apply(&TensorVector::basis(ModuleShape(vec![]), &[])?)
}

/// `Ĉ_{i,j}^k(r,s,t)`: the `v^{i-r} ⊗ v^t ⊗ v^{j-s}` coefficient of the bent
/// network.
pub fn hat_c(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<RationalQ> {
    let sh = TriangleShape::new(i, j, k)?;
    sh.check(r, s, t)?;
    Ok(hat_c_vector(i, j, k)?.dual_coeff(&[i - r, t, j - s]))
}

/// `c = (-q)^{-r} (-q)^{s-j} q^{r(i-r)+s(j-s)}`, so that `C = c · Ĉ`.
///
/// The first factor is `(-q)^{-r}`; a bare sign `(-1)^{-r}` there fails on
/// most tuples of the `i, j <= 3` sweep.
pub fn kl_constant(i: usize, j: usize, r: usize, s: usize) -> LaurentPoly {
    let (i, j, r, s) = (i as i64, j as i64, r as i64, s as i64);
    let e = -r + (s - j);
    let p = q(e + r * (i - r) + s * (j - s));
    if e.rem_euclid(2) == 0 {
        p
    } else {
        -p
    }
}

/// Checks `C = c · Ĉ` at one tuple.
pub fn kl_relation_holds(i: usize, j: usize, k: usize, r: usize, s: usize, t: usize) -> Result<bool> {
    let c = threej_direct(i, j, k, r, s, t)?;
    let h = hat_c(i, j, k, r, s, t)?;
    Ok(RationalQ::from_poly(c) == h.mul_poly(&kl_constant(i, j, r, s)))
}

/// Every admissible `(i, j, k, r, s, t)` with `i <= max_i`, `j <= max_j`,
/// `i + j <= max_sum` and `t = r + s - z`.
pub fn admissible_tuples(max_i: usize, max_j: usize, max_sum: usize) -> Vec<[usize; 6]> {
    let mut out = Vec::new();
    for i in 0..=max_i {
        for j in 0..=max_j {
            if i + j > max_sum {
                continue;
            }
            for k in 0..=i + j {
                let Ok(sh) = TriangleShape::new(i, j, k) else {
                    continue;
                };
                for r in 0..=i {
                    for s in 0..=j {
                        if let Some(t) = sh.weight_t(r, s) {
                            out.push([i, j, k, r, s, t]);
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    /// The seven nonzero `C_{2,2}^2` values.
    fn table_222() -> Vec<((usize, usize, usize), LaurentPoly)> {
        vec![
            ((0, 1, 0), p(&[(1, 1)])),
            ((0, 2, 1), p(&[(-1, 1)])),
            ((1, 0, 0), p(&[(-1, -1)])),
            ((1, 1, 1), p(&[(-2, -1), (2, 1)])),
            ((1, 2, 2), p(&[(1, 1)])),
            ((2, 0, 1), p(&[(-1, -1)])),
            ((2, 1, 2), p(&[(-1, -1)])),
        ]
    }

    #[test]
    fn shapes() {
        let sh = TriangleShape::new(4, 5, 5).unwrap();
        assert_eq!((sh.x, sh.y, sh.z), (2, 3, 2));
        let sh = TriangleShape::new(3, 3, 0).unwrap();
        assert_eq!((sh.x, sh.y, sh.z), (0, 0, 3));
        assert!(TriangleShape::new(1, 1, 3).is_err());
        assert!(matches!(
            TriangleShape::new(1, 1, 4),
            Err(Error::Inadmissible { reason: "k > i+j", .. })
        ));
        assert!(matches!(
            TriangleShape::new(4, 1, 1),
            Err(Error::Inadmissible { reason: "i > j+k", .. })
        ));
        assert!(matches!(
            TriangleShape::new(1, 1, 1),
            Err(Error::Inadmissible { reason: "i+j+k is odd", .. })
        ));
    }

    #[test]
    fn golden_222_all_routes() {
        let table = ThreejTable::new(2, 2, 2).unwrap();
        assert_eq!(table.nonzero().unwrap(), table_222());
        for ((r, s, t), v) in table_222() {
            assert_eq!(threej_direct(2, 2, 2, r, s, t).unwrap(), v);
            assert_eq!(threej_quantum_sum(2, 2, 2, r, s, t).unwrap(), v);
            assert_eq!(threej_alternating(2, 2, 2, r, s, t).unwrap(), v);
        }
        assert!(threej_direct(2, 2, 2, 0, 0, 0).unwrap().is_zero());
        assert!(threej_direct(2, 2, 2, 3, 0, 0).is_err());
    }

    #[test]
    fn golden_211() {
        for ((r, s, t), v) in [
            ((2, 0, 1), p(&[(-1, -1)])),
            ((1, 0, 0), p(&[(-1, -1)])),
            ((1, 1, 1), p(&[(1, 1)])),
            ((0, 1, 0), p(&[(0, 1)])),
        ] {
            assert_eq!(threej_direct(2, 1, 1, r, s, t).unwrap(), v);
        }
    }

    #[test]
    fn arrangements_222() {
        let cl = arrangements(2, 2, 2, 1, 1, 1).unwrap();
        let gammas: Vec<(usize, i64)> = cl.iter().map(|c| (c.a, c.gamma)).collect();
        assert_eq!(gammas, vec![(0, 3), (1, 0)]);
    }

    #[test]
    fn arrangements_455() {
        let cl = arrangements(4, 5, 5, 2, 2, 2).unwrap();
        let raw: u64 = cl.iter().map(|c| c.multiplicity).sum();
        assert_eq!(raw, 16);
        let per_a: Vec<i64> = cl
            .iter()
            .map(|c| if c.a % 2 == 0 { c.multiplicity as i64 } else { -(c.multiplicity as i64) })
            .collect();
        assert_eq!(per_a, vec![1, -12, 3]);
        assert_eq!(cl.iter().map(|c| c.gamma).collect::<Vec<_>>(), vec![16, 9, 2]);
        assert_eq!(threej_classical(4, 5, 5, 2, 2, 2).unwrap(), BigInt::from(-8));
    }

    #[test]
    fn twisted_extreme_weight() {
        assert_eq!(
            threej_twisted(1, 1, 2, 1, 1, 2).unwrap(),
            threej_direct(1, 1, 2, 1, 1, 2).unwrap()
        );
    }

    #[test]
    fn routes_agree_small() {
        for [i, j, k, r, s, t] in admissible_tuples(3, 3, 6) {
            let c = threej_direct(i, j, k, r, s, t).unwrap();
            assert_eq!(threej_quantum_sum(i, j, k, r, s, t).unwrap(), c, "{:?}", (i, j, k, r, s, t));
            assert_eq!(threej_alternating(i, j, k, r, s, t).unwrap(), c);
            let d = threej_twisted(i, j, k, r, s, t).unwrap();
            assert_eq!(threej_positivity(i, j, k, r, s, t).unwrap(), d);
        }
    }

    #[test]
    fn hat_c_examples() {
        let qq = |e| RationalQ::from_poly(q(e));
        assert_eq!(
            hat_c(2, 2, 2, 1, 1, 1).unwrap(),
            RationalQ::from_poly(q(2) - q(-2))
        );
        assert_eq!(hat_c(2, 2, 2, 2, 0, 1).unwrap(), RationalQ::from_poly(-q(3)));
        assert_eq!(hat_c(2, 2, 2, 1, 0, 0).unwrap(), qq(1));
        assert_eq!(hat_c(2, 1, 1, 1, 0, 0).unwrap(), RationalQ::from_poly(-q(0)));
        assert!(kl_relation_holds(2, 2, 2, 1, 1, 1).unwrap());
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("nope".parse::<Route>().is_err());
    }
}
