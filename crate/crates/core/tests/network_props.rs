use proptest::prelude::*;
use qsl2::networks::{
    cap_matrix, cup_matrix, eval_network, incl_matrix, intertwiner_a, jw, jw_blocks, parse_network, phi,
    proj_matrix, Intertwiner, Layer, NetworkExpr,
};
use qsl2::tensor_rep::{act, Generator, ModuleShape, TensorVector};
use qsl2::threej::TriangleShape;

fn commutes(f: &Intertwiner) -> Result<(), String> {
    for idx in f.domain().basis() {
        let v = TensorVector::basis(f.domain().clone(), &idx).unwrap();
        for g in [Generator::E, Generator::F, Generator::K] {
            let lhs = f.apply(&act(g, &v)).unwrap();
            let rhs = act(g, &f.apply(&v).unwrap());
            if lhs != rhs {
                return Err(format!("{g:?} on {idx:?}: {lhs} vs {rhs}"));
            }
        }
    }
    Ok(())
}

/// Turns raw choices into layers on V_1 strands, keeping width in 0..=6.
fn build_layers(start: usize, choices: &[(u8, usize)]) -> Vec<Layer> {
    let mut w = start;
    let mut out = Vec::new();
    for &(kind, p) in choices {
        match kind % 3 {
            0 if w <= 4 => {
                out.push(Layer::Cup(1 + p % (w + 1)));
                w += 2;
            }
            1 if w >= 2 => {
                out.push(Layer::Cap(1 + p % (w - 1)));
                w -= 2;
            }
            2 if w >= 1 => {
                let first = 1 + p % w;
                let mut blocks = vec![first];
                if first < w {
                    blocks.push(w - first);
                }
                out.push(Layer::Jw(blocks));
            }
            _ => {}
        }
    }
    out
}

fn arb_network() -> impl Strategy<Value = (usize, Vec<Layer>)> {
    (0usize..=4, prop::collection::vec((any::<u8>(), any::<usize>()), 0..7))
        .prop_map(|(w, choices)| (w, build_layers(w, &choices)))
}

fn split3(input: usize, layers: &[Layer], a: usize, b: usize) -> (NetworkExpr, NetworkExpr, NetworkExpr) {
    let n = layers.len();
    let (a, b) = (a % (n + 1), b % (n + 1));
    let (a, b) = (a.min(b), a.max(b));
    let x = NetworkExpr::from_layers(input, layers[..a].iter().cloned()).unwrap();
    let y = NetworkExpr::from_layers(x.output_shape().len(), layers[a..b].iter().cloned()).unwrap();
    let z = NetworkExpr::from_layers(y.output_shape().len(), layers[b..].iter().cloned()).unwrap();
    (x, y, z)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stacking_is_associative((input, layers) in arb_network(), a in any::<usize>(), b in any::<usize>()) {
        let (x, y, z) = split3(input, &layers, a, b);
        let left = x.then(&y).unwrap().then(&z).unwrap();
        let right = x.then(&y.then(&z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let whole = NetworkExpr::from_layers(input, layers.iter().cloned()).unwrap();
        prop_assert_eq!(left.layers().collect::<Vec<_>>(), whole.layers().collect::<Vec<_>>());
        let composed = eval_network(&x).unwrap()
            .then(&eval_network(&y).unwrap()).unwrap()
            .then(&eval_network(&z).unwrap()).unwrap();
        prop_assert_eq!(composed, eval_network(&whole).unwrap());
    }

    #[test]
    fn text_round_trip((input, layers) in arb_network()) {
        let e = NetworkExpr::from_layers(input, layers).unwrap();
        let back = parse_network(&e.to_string()).unwrap();
        prop_assert_eq!(back.to_string(), e.to_string());
        prop_assert_eq!(eval_network(&back).unwrap(), eval_network(&e).unwrap());
    }

    #[test]
    fn networks_are_intertwiners((input, layers) in arb_network()) {
        let e = NetworkExpr::from_layers(input, layers).unwrap();
        prop_assert_eq!(commutes(&eval_network(&e).unwrap()), Ok(()));
    }

    #[test]
    fn projection_after_inclusion(blocks in prop::collection::vec(0usize..=3, 1..=3)) {
        let id = proj_matrix(&blocks).compose(&incl_matrix(&blocks)).unwrap();
        prop_assert_eq!(id, Intertwiner::identity(ModuleShape(blocks.clone())));
        let p = jw_blocks(&blocks);
        prop_assert_eq!(p.compose(&p).unwrap(), p);
    }
}

#[test]
fn generators_commute_with_the_action() {
    for n in 0..=5 {
        commutes(&jw(n)).unwrap();
        for i in 1..=n + 1 {
            commutes(&cup_matrix(i, n).unwrap()).unwrap();
        }
        for i in 1..n {
            commutes(&cap_matrix(i, n).unwrap()).unwrap();
        }
    }
    for i in 0..=3 {
        for j in 0..=3 {
            for k in 0..=i + j {
                if TriangleShape::new(i, j, k).is_ok() {
                    commutes(&phi(i, j, k).unwrap()).unwrap();
                    commutes(&intertwiner_a(i, j, k).unwrap()).unwrap();
                }
            }
        }
    }
}

#[test]
fn straightening() {
    // cap_{i+1} ∘ cup_i = id on V_1^{⊗n}
    for n in 1..=4 {
        for i in 1..=n {
            let zig = cup_matrix(i, n).unwrap().then(&cap_matrix(i + 1, n + 2).unwrap()).unwrap();
            assert_eq!(zig, Intertwiner::identity(ModuleShape::ones(n)), "n={n} i={i}");
        }
    }
}
