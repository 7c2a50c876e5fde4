//! The irreducible modules V_d and their tensor products: standard basis
//! vectors, the E/F/K action through the iterated coproduct, divided powers
//! and the three natural forms.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{qbinom, qfact, qint, LaurentPoly, RationalQ};

/// Dimensions `(d_1, ..., d_r)` of the tensor factors `V_{d_1} ⊗ ... ⊗ V_{d_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleShape(pub Vec<usize>);

impl ModuleShape {
    pub fn new(d: Vec<usize>) -> Self {
        ModuleShape(d)
    }

    /// `V_1^{⊗n}`.
    pub fn ones(n: usize) -> Self {
        ModuleShape(vec![1; n])
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the factor dimensions.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(|d| d + 1).product()
    }

    pub fn contains(&self, idx: &[usize]) -> bool {
        idx.len() == self.0.len() && idx.iter().zip(&self.0).all(|(a, d)| a <= d)
    }

    pub fn check_index(&self, idx: &[usize]) -> Result<()> {
        if self.contains(idx) {
            Ok(())
        } else {
            Err(Error::range(
                "basis index",
                format!("{idx:?} for shape {:?}", self.0),
            ))
        }
    }

    /// All basis indices in lexicographic order.
    pub fn basis(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &d in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=d).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Weight exponent `sum (2 a_i - d_i)` of `v_a`.
    pub fn weight(&self, idx: &[usize]) -> i64 {
        idx.iter()
            .zip(&self.0)
            .map(|(&a, &d)| 2 * a as i64 - d as i64)
            .sum()
    }

    /// `prod q^{a_i (d_i - a_i)}`: the value of the evaluation form on `(v_a, v^a)`.
    pub fn dual_norm_exponent(&self, idx: &[usize]) -> i64 {
        idx.iter()
            .zip(&self.0)
            .map(|(&a, &d)| (a * (d - a)) as i64)
            .sum()
    }

    /// `prod [d_i, a_i]`: the factor relating `v_a` to `v^a`.
    pub fn dual_scale(&self, idx: &[usize]) -> LaurentPoly {
        idx.iter()
            .zip(&self.0)
            .map(|(&a, &d)| qbinom(d as i64, a as i64))
            .product()
    }
}

impl fmt::Display for ModuleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| format!("V{d}")).collect();
        if parts.is_empty() {
            f.write_str("C")
        } else {
            f.write_str(&parts.join("⊗"))
        }
    }
}

/// A vector in a tensor module, as a sparse map from multi-indices to
/// nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    shape: ModuleShape,
    coeffs: BTreeMap<Vec<usize>, RationalQ>,
}

#[derive(Serialize, Deserialize)]
struct TensorVectorRepr {
    shape: ModuleShape,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    index: Vec<usize>,
    coeff: RationalQ,
}

impl Serialize for TensorVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorVectorRepr {
            shape: self.shape.clone(),
            terms: self
                .coeffs
                .iter()
                .map(|(index, coeff)| TermRepr {
                    index: index.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TensorVectorRepr::deserialize(d)?;
        let mut v = TensorVector::zero(repr.shape);
        for t in repr.terms {
            v.shape.check_index(&t.index).map_err(D::Error::custom)?;
            v.add_term(t.index, &t.coeff);
        }
        Ok(v)
    }
}

impl TensorVector {
    pub fn zero(shape: ModuleShape) -> Self {
        TensorVector {
            shape,
            coeffs: BTreeMap::new(),
        }
    }

    /// Standard basis vector `v_a`.
    pub fn basis(shape: ModuleShape, idx: &[usize]) -> Result<Self> {
        shape.check_index(idx)?;
        let mut v = Self::zero(shape);
        v.coeffs.insert(idx.to_vec(), RationalQ::one());
        Ok(v)
    }

    /// Dual standard basis vector `v^a = v_a / prod [d_i, a_i]`.
    pub fn dual_basis(shape: ModuleShape, idx: &[usize]) -> Result<Self> {
        shape.check_index(idx)?;
        let c = RationalQ::new(LaurentPoly::one(), shape.dual_scale(idx))?;
        let mut v = Self::zero(shape);
        v.coeffs.insert(idx.to_vec(), c);
        Ok(v)
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &RationalQ)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> RationalQ {
        self.coeffs.get(idx).cloned().unwrap_or_else(RationalQ::zero)
    }

    /// Coefficient of the dual standard vector `v^a` in this vector.
    pub fn dual_coeff(&self, idx: &[usize]) -> RationalQ {
        self.coeff(idx).mul_poly(&self.shape.dual_scale(idx))
    }

    /// Adds `c · v_idx`; the index must lie in the shape.
    pub fn add_term(&mut self, idx: Vec<usize>, c: &RationalQ) {
        debug_assert!(self.shape.contains(&idx));
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut out = Self::zero(self.shape.clone());
        if c.is_zero() {
            return out;
        }
        for (idx, x) in &self.coeffs {
            out.coeffs.insert(idx.clone(), x * c);
        }
        out
    }

    pub fn scale_poly(&self, c: &LaurentPoly) -> Self {
        self.scale(&RationalQ::from_poly(c.clone()))
    }

    pub fn plus(&self, other: &TensorVector) -> Result<Self> {
        same_shape(&self.shape, &other.shape)?;
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term(idx.clone(), c);
        }
        Ok(out)
    }

    pub fn minus(&self, other: &TensorVector) -> Result<Self> {
        self.plus(&other.scale(&RationalQ::from(-1)))
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &TensorVector) -> Self {
        let mut dims = self.shape.0.clone();
        dims.extend_from_slice(&other.shape.0);
        let mut out = Self::zero(ModuleShape(dims));
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, &(x * y));
            }
        }
        out
    }

    /// Applies `bar` to every coefficient.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero(self.shape.clone());
        for (idx, c) in &self.coeffs {
            out.coeffs.insert(idx.clone(), c.bar());
        }
        out
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(idx, c)| {
                let name: Vec<String> = idx.iter().map(|a| format!("v{a}")).collect();
                format!("({c})*{}", name.join("⊗"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn same_shape(a: &ModuleShape, b: &ModuleShape) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("{a} vs {b}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    K,
    Kinv,
}

/// Action of a generator through the iterated coproduct
/// `Δ(E) = 1⊗E + E⊗K^-1`, `Δ(F) = K⊗F + F⊗1`, `Δ(K) = K⊗K`.
pub fn act(g: Generator, v: &TensorVector) -> TensorVector {
    let dims = v.shape.0.clone();
    let mut out = TensorVector::zero(v.shape.clone());
    for (idx, c) in &v.coeffs {
        let wt: Vec<i64> = idx
            .iter()
            .zip(&dims)
            .map(|(&a, &d)| 2 * a as i64 - d as i64)
            .collect();
        match g {
            Generator::K | Generator::Kinv => {
                let total: i64 = wt.iter().sum();
                let e = if g == Generator::K { total } else { -total };
                out.add_term(idx.clone(), &c.shift(e));
            }
            Generator::E => {
                for p in 0..idx.len() {
                    if idx[p] == dims[p] {
                        continue;
                    }
                    let right: i64 = wt[p + 1..].iter().sum();
                    let coef = qint(idx[p] + 1).shift(-right);
                    let mut next = idx.clone();
                    next[p] += 1;
                    out.add_term(next, &c.mul_poly(&coef));
                }
            }
            Generator::F => {
                for p in 0..idx.len() {
                    if idx[p] == 0 {
                        continue;
                    }
                    let left: i64 = wt[..p].iter().sum();
                    let coef = qint(dims[p] - idx[p] + 1).shift(left);
                    let mut next = idx.clone();
                    next[p] -= 1;
                    out.add_term(next, &c.mul_poly(&coef));
                }
            }
        }
    }
    out
}

/// Divided power `E^(r)` or `F^(r)`: the r-fold action divided by `[r]!`.
pub fn act_divided(g: Generator, r: usize, v: &TensorVector) -> Result<TensorVector> {
    if !matches!(g, Generator::E | Generator::F) {
        return Err(Error::range("divided power generator", format!("{g:?}")));
    }
    let mut w = v.clone();
    for _ in 0..r {
        w = act(g, &w);
    }
    let f = qfact(r);
    let mut out = TensorVector::zero(v.shape.clone());
    for (idx, c) in &w.coeffs {
        let c = match c.to_laurent() {
            Some(p) => RationalQ::from_poly(p.div_exact(&f).map_err(|e| {
                Error::Internal(format!("divided power not integral: {e}"))
            })?),
            None => c.checked_div(&RationalQ::from_poly(f.clone()))?,
        };
        out.coeffs.insert(idx.clone(), c);
    }
    Ok(out)
}

/// Divided power computed factor by factor from the divided-power coproduct
/// `Δ(E^(r)) = Σ q^{-r'r''} E^(r') ⊗ E^(r'') K^{-r'}` and
/// `Δ(F^(r)) = Σ q^{-r'r''} F^(r') K^{r''} ⊗ F^(r'')`.
pub fn act_divided_comult(g: Generator, r: usize, v: &TensorVector) -> Result<TensorVector> {
    if !matches!(g, Generator::E | Generator::F) {
        return Err(Error::range("divided power generator", format!("{g:?}")));
    }
    let dims = v.shape.0.clone();
    let n = dims.len();
    let mut out = TensorVector::zero(v.shape.clone());
    if n == 0 {
        if r == 0 {
            return Ok(v.clone());
        }
        return Ok(out);
    }
    let parts_list = compositions(r, n);
    for (idx, c) in &v.coeffs {
        for parts in &parts_list {
            let mut exp: i64 = 0;
            for a in 0..n {
                for b in a + 1..n {
                    exp -= (parts[a] * parts[b]) as i64;
                }
            }
            let mut coef = LaurentPoly::one();
            let mut next = idx.clone();
            let mut ok = true;
            for p in 0..n {
                let (a, d, m) = (idx[p] as i64, dims[p] as i64, parts[p] as i64);
                let wt = 2 * a - d;
                match g {
                    Generator::E => {
                        let before: i64 = parts[..p].iter().map(|&x| x as i64).sum();
                        exp -= before * wt;
                        if a + m > d {
                            ok = false;
                            break;
                        }
                        coef = &coef * &qbinom(a + m, m);
                        next[p] = (a + m) as usize;
                    }
                    _ => {
                        let after: i64 = parts[p + 1..].iter().map(|&x| x as i64).sum();
                        exp += after * wt;
                        if a - m < 0 {
                            ok = false;
                            break;
                        }
                        coef = &coef * &qbinom(d - a + m, m);
                        next[p] = (a - m) as usize;
                    }
                }
            }
            if ok {
                out.add_term(next, &c.mul_poly(&coef.shift(exp)));
            }
        }
    }
    Ok(out)
}

/// Weak compositions of `r` into `n` nonnegative parts, lexicographic.
pub(crate) fn compositions(r: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if r == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if n == 1 {
        return vec![vec![r]];
    }
    let mut out = Vec::new();
    for first in 0..=r {
        for mut rest in compositions(r - first, n - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The bilinear form on a single `V_n` with `<v_k, v_l>' = δ q^{k(n-k)} [n, k]`.
pub fn form_irr(v: &TensorVector, w: &TensorVector) -> Result<RationalQ> {
    same_shape(&v.shape, &w.shape)?;
    if v.shape.len() != 1 {
        return Err(Error::ShapeMismatch(format!(
            "bilinear form needs a single factor, got {}",
            v.shape
        )));
    }
    let mut acc = RationalQ::zero();
    for (idx, x) in &v.coeffs {
        if let Some(y) = w.coeffs.get(idx) {
            let norm = v.shape.dual_scale(idx).shift(v.shape.dual_norm_exponent(idx));
            acc += &(x * y).mul_poly(&norm);
        }
    }
    Ok(acc)
}

/// Evaluation form: anti-linear in the first slot, linear in the second, with
/// `<v_a, v^b> = δ prod q^{a_i(d_i-a_i)}`.
pub fn form_eval(v: &TensorVector, w: &TensorVector) -> Result<RationalQ> {
    same_shape(&v.shape, &w.shape)?;
    let mut acc = RationalQ::zero();
    for (idx, x) in &v.coeffs {
        if let Some(y) = w.coeffs.get(idx) {
            let norm = v.shape.dual_scale(idx).shift(v.shape.dual_norm_exponent(idx));
            acc += &(&x.bar() * y).mul_poly(&norm);
        }
    }
    Ok(acc)
}

/// Pairing: anti-linear in both slots, same basis values as [`form_eval`].
pub fn form_pair(v: &TensorVector, w: &TensorVector) -> Result<RationalQ> {
    same_shape(&v.shape, &w.shape)?;
    let mut acc = RationalQ::zero();
    for (idx, x) in &v.coeffs {
        if let Some(y) = w.coeffs.get(idx) {
            let norm = v.shape.dual_scale(idx).shift(v.shape.dual_norm_exponent(idx));
            acc += &(&x.bar() * &y.bar()).mul_poly(&norm);
        }
    }
    Ok(acc)
}

/// `v^k ∈ V_n`.
pub fn dual_standard(k: usize, n: usize) -> Result<TensorVector> {
    TensorVector::dual_basis(ModuleShape(vec![n]), &[k])
}

/// `q^e` as a scalar.
#[cfg(test)]
pub(crate) fn qs(e: i64) -> RationalQ {
    RationalQ::from_poly(crate::laurent::q(e))
}
