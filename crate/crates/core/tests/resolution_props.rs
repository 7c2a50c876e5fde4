use proptest::prelude::*;
use qsl2::resolutions::{delta_in_projectives, resolution_table};

fn arb_label() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(i, j)| (0..=i, 0..=j, Just(i), Just(j)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn row_counts((r, s, i, j) in arb_label()) {
        let t = resolution_table(r, s, i, j).unwrap();
        prop_assert_eq!(t.length(), s.min(i - r));
        prop_assert_eq!(t.rows[0].len(), 1);
        for (m, row) in t.rows.iter().enumerate().skip(1) {
            prop_assert!(row.len() <= s - m + 1);
            for term in row {
                prop_assert!(term.r <= i && term.s <= j);
                prop_assert_eq!(term.r + term.s, r + s);
                prop_assert!(term.r >= r + m);
            }
        }
        prop_assert_eq!(t.euler_sum(), delta_in_projectives(r, s, i, j).unwrap());
    }
}

#[test]
fn rejects_bad_labels() {
    assert!(resolution_table(3, 0, 2, 2).is_err());
    assert!(delta_in_projectives(0, 3, 2, 2).is_err());
}
