use proptest::prelude::*;
use qsl2::diagrams::{
    cup_diagram, gk_dim, gk_dim_bimodule, isotypic_multiplicity, ones, sequences_with_ones, stat_b, stat_l, Ray,
};

fn arb_sequence(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..=1, 0..=max)
}

/// Cancels adjacent ∧∨ pairs among the unmatched positions in an order driven
/// by `seed`. The result does not depend on the order, so it serves as an
/// oracle for the left-to-right stack.
fn peel_in_any_order(a: &[u8], mut seed: u64) -> (Vec<(usize, usize)>, Vec<(usize, Ray)>) {
    let mut alive: Vec<usize> = (0..a.len()).collect();
    let mut cups = Vec::new();
    loop {
        let cands: Vec<usize> = (0..alive.len().saturating_sub(1))
            .filter(|&p| a[alive[p]] == 1 && a[alive[p + 1]] == 0)
            .collect();
        if cands.is_empty() {
            break;
        }
        let p = cands[(seed % cands.len() as u64) as usize];
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407) >> 7;
        cups.push((alive[p] + 1, alive[p + 1] + 1));
        alive.drain(p..p + 2);
    }
    cups.sort();
    let rays = alive
        .into_iter()
        .map(|p| (p + 1, if a[p] == 1 { Ray::Up } else { Ray::Down }))
        .collect();
    (cups, rays)
}

/// Noncrossing partial matchings on `n` points with `r` cups and no free point
/// inside a cup, counted by brute force.
fn count_cup_diagrams(n: usize, r: usize) -> u64 {
    fn rec(left: usize, depth: usize, cups_left: usize) -> u64 {
        if left == 0 {
            return u64::from(depth == 0 && cups_left == 0);
        }
        let mut total = 0;
        if depth == 0 {
            total += rec(left - 1, 0, cups_left);
        }
        if cups_left > 0 {
            total += rec(left - 1, depth + 1, cups_left - 1);
        }
        if depth > 0 {
            total += rec(left - 1, depth - 1, cups_left);
        }
        total
    }
    rec(n, 0, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn inversions_split(a in arb_sequence(12)) {
        let k = ones(&a);
        prop_assert_eq!(stat_l(&a) + stat_b(&a), k * (a.len() - k));
    }

    #[test]
    fn matching_is_order_free(a in arb_sequence(8), seed in any::<u64>()) {
        let d = cup_diagram(&a);
        let (cups, rays) = peel_in_any_order(&a, seed);
        prop_assert_eq!(&d.cups, &cups);
        prop_assert_eq!(&d.rays, &rays);
        prop_assert!(d.is_noncrossing());
        prop_assert!(d.rays_unenclosed());
        prop_assert_eq!(2 * d.cup_count() + d.rays.len(), a.len());
    }

    #[test]
    fn gk_dimension_bounds(a in arb_sequence(10)) {
        let n = a.len();
        let g = gk_dim(&a);
        prop_assert!(g <= n * n.saturating_sub(1) / 2);
        prop_assert!(g + n / 2 >= n * n.saturating_sub(1) / 2);
        prop_assert_eq!(gk_dim_bimodule(&a), 2 * g);
    }
}

#[test]
fn isotypic_counts_match_brute_force() {
    for n in 0..=10 {
        let mut dim = 0u64;
        for r in 0..=n / 2 {
            let m = isotypic_multiplicity(n, r).unwrap();
            assert_eq!(m, count_cup_diagrams(n, r), "n={n} r={r}");
            dim += m * (n - 2 * r + 1) as u64;
        }
        assert_eq!(dim, 1 << n);
        assert!(isotypic_multiplicity(n, n / 2 + 1).is_err());
    }
}

#[test]
fn sequences_are_complete() {
    for n in 0..=8 {
        let total: usize = (0..=n).map(|k| sequences_with_ones(n, k).len()).sum();
        assert_eq!(total, 1 << n);
    }
    assert!(sequences_with_ones(2, 3).is_empty());
}
