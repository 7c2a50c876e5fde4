//! Intertwiners as sparse matrices, the diagram generators (cup, cap,
//! projection, inclusion, Jones-Wenzl) and network evaluation.
//!
//! Diagrams are read bottom to top. Every generator is implemented as an
//! action on vectors; matrices are assembled column by column from it.

mod closed;
mod dsl;

use std::collections::BTreeMap;

use crate::diagrams::{sequences_with_ones, stat_b, stat_l};
use crate::error::{Error, Result};
use crate::laurent::{q, qbinom, LaurentPoly, RationalQ};
use crate::tensor_rep::{ModuleShape, TensorVector};
use crate::threej::TriangleShape;

pub use closed::{
    hat_c_network, theta_formula, theta_network, theta_network_expr, unknot_contributions,
    unknot_ext_euler, unknot_network_expr, unknot_value,
};
pub use dsl::{eval_network, parse_network, NetworkExpr};

/// A linear map between tensor modules, stored by columns: the image of
/// each domain basis vector with a nonzero image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    domain: ModuleShape,
    codomain: ModuleShape,
    columns: BTreeMap<Vec<usize>, TensorVector>,
}

impl Intertwiner {
    pub fn zero(domain: ModuleShape, codomain: ModuleShape) -> Self {
        Intertwiner {
            domain,
            codomain,
            columns: BTreeMap::new(),
        }
    }

    pub fn identity(shape: ModuleShape) -> Self {
        let mut m = Self::zero(shape.clone(), shape.clone());
        for idx in shape.basis() {
            let v = TensorVector::basis(shape.clone(), &idx).unwrap();
            m.columns.insert(idx, v);
        }
        m
    }

    /// Matrix of a vector-level map, one basis vector at a time.
    pub fn from_fn<F>(domain: ModuleShape, codomain: ModuleShape, f: F) -> Result<Self>
    where
        F: Fn(&TensorVector) -> Result<TensorVector>,
    {
        let mut m = Self::zero(domain.clone(), codomain.clone());
        for idx in domain.basis() {
            let image = f(&TensorVector::basis(domain.clone(), &idx)?)?;
            if image.shape() != &codomain {
                return Err(Error::ShapeMismatch(format!(
                    "image in {} but codomain is {}",
                    image.shape(),
                    codomain
                )));
            }
            if !image.is_zero() {
                m.columns.insert(idx, image);
            }
        }
        Ok(m)
    }

    pub fn domain(&self) -> &ModuleShape {
        &self.domain
    }

    pub fn codomain(&self) -> &ModuleShape {
        &self.codomain
    }

    pub fn is_zero(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column(&self, idx: &[usize]) -> TensorVector {
        self.columns
            .get(idx)
            .cloned()
            .unwrap_or_else(|| TensorVector::zero(self.codomain.clone()))
    }

    pub fn entry(&self, out: &[usize], input: &[usize]) -> RationalQ {
        self.columns
            .get(input)
            .map(|c| c.coeff(out))
            .unwrap_or_else(RationalQ::zero)
    }

    /// Nonzero entries `(out, in, value)`, ordered by out-index then in-index.
    pub fn entries(&self) -> Vec<(Vec<usize>, Vec<usize>, RationalQ)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .flat_map(|(i, col)| col.terms().map(move |(o, c)| (o.clone(), i.clone(), c.clone())))
            .collect();
        out.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        out
    }

    /// The value of a map `C -> C`.
    pub fn scalar(&self) -> Option<RationalQ> {
        if !self.domain.is_empty() || !self.codomain.is_empty() {
            return None;
        }
        Some(self.entry(&[], &[]))
    }

    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector> {
        if v.shape() != &self.domain {
            return Err(Error::ShapeMismatch(format!(
                "vector in {} applied to map from {}",
                v.shape(),
                self.domain
            )));
        }
        let mut out = TensorVector::zero(self.codomain.clone());
        for (idx, c) in v.terms() {
            if let Some(col) = self.columns.get(idx) {
                for (o, x) in col.terms() {
                    out.add_term(o.clone(), &(x * c));
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Intertwiner) -> Result<Intertwiner> {
        if inner.codomain != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.domain, self.codomain, inner.domain, inner.codomain
            )));
        }
        let mut m = Self::zero(inner.domain.clone(), self.codomain.clone());
        for (idx, col) in &inner.columns {
            let image = self.apply(col)?;
            if !image.is_zero() {
                m.columns.insert(idx.clone(), image);
            }
        }
        Ok(m)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Intertwiner) -> Result<Intertwiner> {
        next.compose(self)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn tensor(&self, other: &Intertwiner) -> Intertwiner {
        let cat = |a: &ModuleShape, b: &ModuleShape| {
            let mut d = a.0.clone();
            d.extend_from_slice(&b.0);
            ModuleShape(d)
        };
        let mut m = Self::zero(
            cat(&self.domain, &other.domain),
            cat(&self.codomain, &other.codomain),
        );
        for (a, x) in &self.columns {
            for (b, y) in &other.columns {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                m.columns.insert(idx, x.tensor(y));
            }
        }
        m
    }

    /// Entries only connect basis vectors of equal weight.
    pub fn is_weight_graded(&self) -> bool {
        self.columns.iter().all(|(i, col)| {
            let w = self.domain.weight(i);
            col.terms().all(|(o, _)| self.codomain.weight(o) == w)
        })
    }
}

/// One elementary diagram layer acting on a tensor of V_1 strands.
/// Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Layer {
    Cup(usize),
    Cap(usize),
    Proj(Vec<usize>),
    Incl(Vec<usize>),
    Jw(Vec<usize>),
}

impl Layer {
    pub fn name(&self) -> String {
        let list = |v: &[usize]| {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        match self {
            Layer::Cup(i) => format!("cup {i}"),
            Layer::Cap(i) => format!("cap {i}"),
            Layer::Proj(d) => format!("proj {}", list(d)),
            Layer::Incl(d) => format!("incl {}", list(d)),
            Layer::Jw(d) => format!("jw {}", list(d)),
        }
    }

    /// Shape after this layer, or a description of why it does not fit.
    pub fn out_shape(&self, shape: &ModuleShape) -> std::result::Result<ModuleShape, String> {
        let d = shape.dims();
        let all_ones = |what: &str| -> std::result::Result<(), String> {
            if d.iter().all(|&x| x == 1) {
                Ok(())
            } else {
                Err(format!("{what} needs V1 strands, current shape is {shape}"))
            }
        };
        match self {
            Layer::Cup(i) => {
                if *i < 1 || *i > d.len() + 1 {
                    return Err(format!("cup position {i} outside 1..={}", d.len() + 1));
                }
                let mut out = d.to_vec();
                out.splice(i - 1..i - 1, [1, 1]);
                Ok(ModuleShape(out))
            }
            Layer::Cap(i) => {
                if *i < 1 || i + 1 > d.len() {
                    return Err(format!(
                        "cap position {i} needs strands {i},{} but width is {}",
                        i + 1,
                        d.len()
                    ));
                }
                if d[i - 1] != 1 || d[*i] != 1 {
                    return Err(format!("cap {i} joins non-V1 factors of {shape}"));
                }
                let mut out = d.to_vec();
                out.drain(i - 1..i + 1);
                Ok(ModuleShape(out))
            }
            Layer::Proj(blocks) => {
                all_ones("proj")?;
                let total: usize = blocks.iter().sum();
                if total != d.len() {
                    return Err(format!("proj blocks sum to {total} but width is {}", d.len()));
                }
                Ok(ModuleShape(blocks.clone()))
            }
            Layer::Incl(blocks) => {
                if d != blocks.as_slice() {
                    return Err(format!("incl expects shape {blocks:?}, current shape is {shape}"));
                }
                Ok(ModuleShape::ones(blocks.iter().sum()))
            }
            Layer::Jw(blocks) => {
                all_ones("jw")?;
                let total: usize = blocks.iter().sum();
                if total != d.len() {
                    return Err(format!("jw blocks sum to {total} but width is {}", d.len()));
                }
                Ok(shape.clone())
            }
        }
    }

    /// Applies the layer to a vector whose shape it fits.
    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector> {
        let out_shape = self
            .out_shape(v.shape())
            .map_err(|m| Error::ShapeMismatch(format!("{}: {m}", self.name())))?;
        Ok(match self {
            Layer::Cup(i) => apply_cup(v, *i, out_shape),
            Layer::Cap(i) => apply_cap(v, *i, out_shape),
            Layer::Proj(blocks) => apply_proj(v, blocks, out_shape),
            Layer::Incl(blocks) => apply_incl(v, blocks, out_shape),
            Layer::Jw(blocks) => {
                let mid = apply_proj(v, blocks, ModuleShape(blocks.clone()));
                apply_incl(&mid, blocks, out_shape)
            }
        })
    }

    pub fn matrix(&self, domain: &ModuleShape) -> Result<Intertwiner> {
        let codomain = self
            .out_shape(domain)
            .map_err(|m| Error::ShapeMismatch(format!("{}: {m}", self.name())))?;
        Intertwiner::from_fn(domain.clone(), codomain, |v| self.apply(v))
    }
}

/// `∪(1) = v1⊗v0 - q v0⊗v1`, inserted at positions `i, i+1`.
fn apply_cup(v: &TensorVector, i: usize, out_shape: ModuleShape) -> TensorVector {
    let mut out = TensorVector::zero(out_shape);
    let minus_q = RationalQ::from_poly(-q(1));
    for (idx, c) in v.terms() {
        let mut a = idx.clone();
        a.splice(i - 1..i - 1, [1, 0]);
        out.add_term(a, c);
        let mut b = idx.clone();
        b.splice(i - 1..i - 1, [0, 1]);
        out.add_term(b, &(c * &minus_q));
    }
    out
}

/// `∩(v0⊗v1) = 1`, `∩(v1⊗v0) = -q^-1`, zero otherwise, on strands `i, i+1`.
fn apply_cap(v: &TensorVector, i: usize, out_shape: ModuleShape) -> TensorVector {
    let mut out = TensorVector::zero(out_shape);
    let minus_qinv = RationalQ::from_poly(-q(-1));
    for (idx, c) in v.terms() {
        let pair = (idx[i - 1], idx[i]);
        let mut rest = idx.clone();
        rest.drain(i - 1..i + 1);
        match pair {
            (0, 1) => out.add_term(rest, c),
            (1, 0) => out.add_term(rest, &(c * &minus_qinv)),
            _ => {}
        }
    }
    out
}

/// `π(v_a) = q^{-l(a)} v_{|a|} / [n, |a|]` on each block.
fn apply_proj(v: &TensorVector, blocks: &[usize], out_shape: ModuleShape) -> TensorVector {
    // group by target index first so each denominator is divided out once
    let mut sums: BTreeMap<Vec<usize>, RationalQ> = BTreeMap::new();
    for (idx, c) in v.terms() {
        let mut target = Vec::with_capacity(blocks.len());
        let mut shift = 0i64;
        let mut pos = 0;
        for &n in blocks {
            let seg: Vec<u8> = idx[pos..pos + n].iter().map(|&x| x as u8).collect();
            pos += n;
            target.push(seg.iter().filter(|&&x| x == 1).count());
            shift -= stat_l(&seg) as i64;
        }
        let term = c.shift(shift);
        match sums.get_mut(&target) {
            Some(acc) => *acc += &term,
            None => {
                sums.insert(target, term);
            }
        }
    }
    let mut out = TensorVector::zero(out_shape.clone());
    for (target, num) in sums {
        let den = out_shape.dual_scale(&target);
        let c = &num * &RationalQ::new(LaurentPoly::one(), den).expect("binomials are nonzero");
        out.add_term(target, &c);
    }
    out
}

/// `ι(v_k) = Σ_{|a|=k} q^{b(a)} v_a` on each block.
fn apply_incl(v: &TensorVector, blocks: &[usize], out_shape: ModuleShape) -> TensorVector {
    let mut out = TensorVector::zero(out_shape);
    for (idx, c) in v.terms() {
        let mut partial: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 0)];
        for (&n, &k) in blocks.iter().zip(idx) {
            let expansions: Vec<(Vec<usize>, i64)> = sequences_with_ones(n, k)
                .into_iter()
                .map(|s| {
                    let b = stat_b(&s) as i64;
                    (s.into_iter().map(usize::from).collect(), b)
                })
                .collect();
            partial = partial
                .into_iter()
                .flat_map(|(pre, e)| {
                    expansions.iter().map(move |(s, b)| {
                        let mut v = pre.clone();
                        v.extend_from_slice(s);
                        (v, e + b)
                    })
                })
                .collect();
        }
        for (a, e) in partial {
            out.add_term(a, &c.shift(e));
        }
    }
    out
}

/// `cap_{i,n}: V_1^{⊗n} -> V_1^{⊗(n-2)}`.
pub fn cap_matrix(i: usize, n: usize) -> Result<Intertwiner> {
    if i < 1 || i + 1 > n {
        return Err(Error::range("cap position", format!("i={i} with n={n}")));
    }
    Layer::Cap(i).matrix(&ModuleShape::ones(n))
}

/// `cup_{i,n}: V_1^{⊗n} -> V_1^{⊗(n+2)}`.
pub fn cup_matrix(i: usize, n: usize) -> Result<Intertwiner> {
    if i < 1 || i > n + 1 {
        return Err(Error::range("cup position", format!("i={i} with n={n}")));
    }
    Layer::Cup(i).matrix(&ModuleShape::ones(n))
}

/// Blockwise projection `V_1^{⊗Σd} -> V_{d_1} ⊗ ... ⊗ V_{d_r}`.
pub fn proj_matrix(d: &[usize]) -> Intertwiner {
    Layer::Proj(d.to_vec())
        .matrix(&ModuleShape::ones(d.iter().sum()))
        .expect("projection fits its own domain")
}

/// Blockwise inclusion `V_{d_1} ⊗ ... ⊗ V_{d_r} -> V_1^{⊗Σd}`.
pub fn incl_matrix(d: &[usize]) -> Intertwiner {
    Layer::Incl(d.to_vec())
        .matrix(&ModuleShape(d.to_vec()))
        .expect("inclusion fits its own domain")
}

/// Jones-Wenzl projector `p_n = ι_n ∘ π_n` on `V_1^{⊗n}`.
pub fn jw(n: usize) -> Intertwiner {
    jw_blocks(&[n])
}

/// `p_{n_1} ⊗ ... ⊗ p_{n_r}`.
pub fn jw_blocks(blocks: &[usize]) -> Intertwiner {
    Layer::Jw(blocks.to_vec())
        .matrix(&ModuleShape::ones(blocks.iter().sum()))
        .expect("projector fits its own domain")
}

/// Layers of `Φ_{i,j}^k`: `z` nested caps joining the last strands of the
/// first group to the first strands of the second, innermost first.
pub fn phi_layers(shape: &TriangleShape) -> Vec<Layer> {
    (0..shape.z).map(|c| Layer::Cap(shape.x + shape.z - c)).collect()
}

pub fn phi(i: usize, j: usize, k: usize) -> Result<Intertwiner> {
    let shape = TriangleShape::new(i, j, k)?;
    let mut m = Intertwiner::identity(ModuleShape::ones(i + j));
    for layer in phi_layers(&shape) {
        let next = layer.matrix(m.codomain())?;
        m = m.then(&next)?;
    }
    Ok(m)
}

/// Layers of `A_{i,j}^k = π_k ∘ Φ_{i,j}^k ∘ (ι_i ⊗ ι_j)`.
pub fn intertwiner_a_layers(shape: &TriangleShape) -> Vec<Layer> {
    let mut layers = vec![Layer::Incl(vec![shape.i, shape.j])];
    layers.extend(phi_layers(shape));
    layers.push(Layer::Proj(vec![shape.k]));
    layers
}

/// The canonical intertwiner `V_i ⊗ V_j -> V_k`.
pub fn intertwiner_a(i: usize, j: usize, k: usize) -> Result<Intertwiner> {
    let shape = TriangleShape::new(i, j, k)?;
    let layers = intertwiner_a_layers(&shape);
    Intertwiner::from_fn(ModuleShape(vec![i, j]), ModuleShape(vec![k]), |v| {
        let mut w = v.clone();
        for layer in &layers {
            w = layer.apply(&w)?;
        }
        Ok(w)
    })
}

/// The cup-cap composite `C_i = cup_{i,n-2} ∘ cap_{i,n}` on `V_1^{⊗n}`.
pub fn cup_cap(i: usize, n: usize) -> Result<Intertwiner> {
    let cap = cap_matrix(i, n)?;
    let cup = cup_matrix(i, n - 2)?;
    cap.then(&cup)
}

/// Single-block `ι_n(v_k)` coefficients, used by tests as an independent oracle.
pub fn inclusion_coefficient(bits: &[u8]) -> LaurentPoly {
    q(stat_b(bits) as i64)
}

/// `q^{-l(a)} / [n, |a|]`: the single-block projection coefficient.
pub fn projection_coefficient(bits: &[u8]) -> RationalQ {
    let n = bits.len() as i64;
    let k = bits.iter().filter(|&&x| x == 1).count() as i64;
    RationalQ::new(q(-(stat_l(bits) as i64)), qbinom(n, k)).expect("nonzero binomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qint;

    fn basis(d: &[usize], a: &[usize]) -> TensorVector {
        TensorVector::basis(ModuleShape(d.to_vec()), a).unwrap()
    }

    #[test]
    fn cap_values() {
        let cap = cap_matrix(1, 2).unwrap();
        assert_eq!(cap.entry(&[], &[1, 0]), RationalQ::from_poly(-q(-1)));
        assert_eq!(cap.entry(&[], &[0, 1]), RationalQ::one());
        assert!(cap.entry(&[], &[0, 0]).is_zero());
        assert!(cap_matrix(2, 2).is_err());
        assert!(cup_matrix(3, 1).is_err());
    }

    #[test]
    fn circle() {
        let c = cup_matrix(1, 0).unwrap().then(&cap_matrix(1, 2).unwrap()).unwrap();
        assert_eq!(c.scalar().unwrap(), RationalQ::from_poly(-qint(2)));
    }

    #[test]
    fn projection_and_inclusion_examples() {
        let p = proj_matrix(&[2]);
        let expect = RationalQ::new(q(-1), qint(2)).unwrap();
        assert_eq!(p.apply(&basis(&[1, 1], &[0, 1])).unwrap().coeff(&[1]), expect);
        let i = incl_matrix(&[2]);
        let img = i.apply(&basis(&[2], &[1])).unwrap();
        assert_eq!(img.coeff(&[1, 0]), RationalQ::from_poly(q(1)));
        assert_eq!(img.coeff(&[0, 1]), RationalQ::one());
        let img = incl_matrix(&[3]).apply(&basis(&[3], &[0])).unwrap();
        assert_eq!(img, basis(&[1, 1, 1], &[0, 0, 0]));
    }

    #[test]
    fn jw_small() {
        assert_eq!(jw(1), Intertwiner::identity(ModuleShape::ones(1)));
        let p2 = jw(2);
        let img = p2.apply(&basis(&[1, 1], &[1, 0])).unwrap();
        let inv2 = RationalQ::new(LaurentPoly::one(), qint(2)).unwrap();
        assert_eq!(img.coeff(&[1, 0]), inv2.shift(1));
        assert_eq!(img.coeff(&[0, 1]), inv2);
        assert_eq!(p2.compose(&p2).unwrap(), p2);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(2, 1, 3).unwrap(), Intertwiner::identity(ModuleShape::ones(3)));
        assert_eq!(phi(1, 1, 0).unwrap(), cap_matrix(1, 2).unwrap());
        // the single cap sits on strands 2,3
        let p222 = phi(2, 2, 2).unwrap();
        let img = p222.apply(&basis(&[1; 4], &[0, 1, 0, 0])).unwrap();
        assert_eq!(img, basis(&[1, 1], &[0, 0]).scale(&RationalQ::from_poly(-q(-1))));
        assert!(p222.apply(&basis(&[1; 4], &[0, 1, 1, 0])).unwrap().is_zero());
        assert!(phi(1, 1, 3).is_err());
    }

    #[test]
    fn intertwiner_a_top_weight() {
        for (i, j) in [(1, 1), (2, 1), (2, 3)] {
            let a = intertwiner_a(i, j, i + j).unwrap();
            assert_eq!(a.entry(&[i + j], &[i, j]), RationalQ::one());
            assert!(a.is_weight_graded());
        }
    }

    #[test]
    fn tensor_of_identities() {
        let a = Intertwiner::identity(ModuleShape(vec![1]));
        let b = Intertwiner::identity(ModuleShape(vec![2]));
        assert_eq!(a.tensor(&b), Intertwiner::identity(ModuleShape(vec![1, 2])));
    }
}
