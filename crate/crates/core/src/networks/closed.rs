//! Closed networks: theta graphs, the colored unknot and the bent 3j network.

use super::{eval_network, Layer, NetworkExpr};
use crate::bases::standard_class_in_proper;
use crate::error::{Error, Result};
use crate::eulerchar::endring_graded_dim;
use crate::laurent::{qfact, qint, qint_renorm, LaurentPoly, RationalQ};
use crate::threej::TriangleShape;

/// Turns a planar perfect matching of `0..n` into the cup layers creating it
/// from nothing and the cap layers closing it off.
///
/// Arcs are peeled innermost first; caps follow the peeling order and cups
/// the reverse one.
pub(crate) fn matching_layers(n: usize, arcs: &[(usize, usize)]) -> Result<(Vec<Layer>, Vec<Layer>)> {
    let mut partner = vec![usize::MAX; n];
    for &(a, b) in arcs {
        if a >= n || b >= n || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
            return Err(Error::Internal(format!("not a matching on {n} points: {arcs:?}")));
        }
        partner[a] = b;
        partner[b] = a;
    }
    if partner.contains(&usize::MAX) {
        return Err(Error::Internal(format!("matching leaves points of 0..{n} free")));
    }
    let mut alive: Vec<usize> = (0..n).collect();
    let mut removal = Vec::with_capacity(n / 2);
    while !alive.is_empty() {
        let p = (0..alive.len() - 1)
            .find(|&p| partner[alive[p]] == alive[p + 1])
            .ok_or_else(|| Error::Internal(format!("matching {arcs:?} is not planar")))?;
        removal.push(p + 1);
        alive.drain(p..p + 2);
    }
    let caps = removal.iter().map(|&p| Layer::Cap(p)).collect();
    let cups = removal.iter().rev().map(|&p| Layer::Cup(p)).collect();
    Ok((cups, caps))
}

/// `(-1)^{x+y+z} [x]![y]![z]![x+y+z+1]! / ([i]![j]![k]!)`.
///
/// For even colors `i=2a, j=2b, k=2c` this is the usual
/// `(-1)^{a+b+c}[a+b-c]![a-b+c]![-a+b+c]![a+b+c+1]!/([2a]![2b]![2c]!)`;
/// the same expression is used for every admissible triple.
pub fn theta_formula(i: usize, j: usize, k: usize) -> Result<RationalQ> {
    let sh = TriangleShape::new(i, j, k)?;
    let m = sh.x + sh.y + sh.z;
    let num = qfact(sh.x) * qfact(sh.y) * qfact(sh.z) * qfact(m + 1);
    let num = if m % 2 == 0 { num } else { -num };
    RationalQ::new(num, qfact(i) * qfact(j) * qfact(k))
}

/// The theta graph: nested arcs on `i+j+k` points (z arcs joining the first
/// two blocks, y arcs the last two, x arcs the outer blocks), projectors on
/// the three blocks, then the same arcs closed off by caps.
pub fn theta_network_expr(i: usize, j: usize, k: usize) -> Result<NetworkExpr> {
    let sh = TriangleShape::new(i, j, k)?;
    let n = i + j + k;
    let mut arcs = Vec::with_capacity(n / 2);
    arcs.extend((0..sh.z).map(|m| (i - 1 - m, i + m)));
    arcs.extend((0..sh.y).map(|m| (i + j - 1 - m, i + j + m)));
    arcs.extend((0..sh.x).map(|m| (m, n - 1 - m)));
    let (cups, caps) = matching_layers(n, &arcs)?;
    let mut layers = cups;
    layers.push(Layer::Jw(vec![i, j, k]));
    layers.extend(caps);
    NetworkExpr::from_layers(0, layers)
}

pub fn theta_network(i: usize, j: usize, k: usize) -> Result<RationalQ> {
    closed_value(&theta_network_expr(i, j, k)?)
}

/// `n` nested cups, `p_n` on the left strands, `n` nested caps.
pub fn unknot_network_expr(n: usize) -> NetworkExpr {
    let mut layers: Vec<Layer> = (1..=n).map(Layer::Cup).collect();
    if n > 0 {
        let mut blocks = vec![n];
        blocks.extend(std::iter::repeat(1).take(n));
        layers.push(Layer::Jw(blocks));
    }
    layers.extend((1..=n).rev().map(Layer::Cap));
    NetworkExpr::from_layers(0, layers).expect("nested unknot layers always fit")
}

/// Evaluates the colored unknot network; equals `(-1)^n [n+1]`.
pub fn unknot_value(n: usize) -> RationalQ {
    closed_value(&unknot_network_expr(n)).expect("unknot network is closed")
}

/// Graded Euler characteristic contributions of the standard modules
/// `Δ(n-m, n | m, n)`, `m = 0..=n`: each is
/// `q^{2m} q^{-2m(n-m)} dim_q End / (binomial product)`, which is `q^{2m}`.
pub fn unknot_contributions(n: usize) -> Result<Vec<LaurentPoly>> {
    (0..=n)
        .map(|m| {
            let kd = [(n - m, n), (m, n)];
            let shift = 2 * m as i64 - 2 * (m * (n - m)) as i64;
            let end = endring_graded_dim(&kd)?.shift(shift);
            end.div_exact(&standard_class_in_proper(&kd)?)
        })
        .collect()
}

/// `⟦n+1⟧`, assembled from [`unknot_contributions`].
pub fn unknot_ext_euler(n: usize) -> LaurentPoly {
    let total: LaurentPoly = unknot_contributions(n)
        .expect("contributions are exact for every n")
        .into_iter()
        .sum();
    debug_assert_eq!(total, qint_renorm(n + 1));
    debug_assert_eq!(total.shift(-(n as i64)), qint(n + 1));
    total
}

/// The bent network for `Ĉ_{i,j}^k`: cups bending the `V_i` and `V_j` inputs
/// upward, the caps of `Φ_{i,j}^k` in the middle, projections onto
/// `V_i ⊗ V_k ⊗ V_j`.
pub fn hat_c_network(i: usize, j: usize, k: usize) -> Result<NetworkExpr> {
    let sh = TriangleShape::new(i, j, k)?;
    let mut layers: Vec<Layer> = (1..=i).map(Layer::Cup).collect();
    layers.extend((1..=j).map(|m| Layer::Cup(2 * i + m)));
    layers.extend((0..sh.z).map(|c| Layer::Cap(i + sh.x + sh.z - c)));
    layers.push(Layer::Proj(vec![i, k, j]));
    NetworkExpr::from_layers(0, layers)
}

fn closed_value(e: &NetworkExpr) -> Result<RationalQ> {
    eval_network(e)?
        .scalar()
        .ok_or_else(|| Error::ShapeMismatch(format!("network ends in {}, not a scalar", e.output_shape())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::q;

    fn signed(n: usize, p: LaurentPoly) -> LaurentPoly {
        if n % 2 == 0 {
            p
        } else {
            -p
        }
    }

    #[test]
    fn matching_peels_innermost_first() {
        let (cups, caps) = matching_layers(4, &[(0, 3), (1, 2)]).unwrap();
        assert_eq!(caps, vec![Layer::Cap(2), Layer::Cap(1)]);
        assert_eq!(cups, vec![Layer::Cup(1), Layer::Cup(2)]);
        assert!(matching_layers(4, &[(0, 2), (1, 3)]).is_err());
    }

    #[test]
    fn unknot_small() {
        assert_eq!(unknot_value(0), RationalQ::one());
        for n in 1..=3 {
            assert_eq!(unknot_value(n), RationalQ::from_poly(signed(n, qint(n + 1))));
        }
    }

    #[test]
    fn unknot_euler() {
        assert_eq!(unknot_ext_euler(2), LaurentPoly::from_terms([(0, 1), (2, 1), (4, 1)]));
        assert_eq!(
            unknot_contributions(3).unwrap(),
            vec![q(0), q(2), q(4), q(6)]
        );
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_network(0, 0, 0).unwrap(), RationalQ::one());
        for n in 1..=3 {
            let expect = RationalQ::from_poly(signed(n, qint(n + 1)));
            assert_eq!(theta_formula(n, n, 0).unwrap(), expect);
            assert_eq!(theta_network(n, n, 0).unwrap(), expect);
        }
        let f = theta_formula(2, 2, 2).unwrap();
        let expect = RationalQ::new(-qfact(4), qfact(2).pow(3)).unwrap();
        assert_eq!(f, expect);
        assert_eq!(theta_network(2, 2, 2).unwrap(), f);
        assert!(theta_network(1, 1, 1).is_err());
    }

    #[test]
    fn hat_c_network_shape() {
        let e = hat_c_network(2, 2, 2).unwrap();
        assert_eq!(e.output_shape().dims(), &[2, 2, 2]);
    }
}
