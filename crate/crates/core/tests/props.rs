//! Property tests over randomly generated inputs.

use proptest::prelude::*;

use schur_core::flow::{decompose_pattern, optimal_bound};
use schur_core::{DenseMatrix, Pattern};

fn arb_pattern() -> impl Strategy<Value = Pattern> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(rows, cols)| {
            let cells = proptest::collection::vec(proptest::bool::ANY, rows * cols);
            (Just(rows), Just(cols), cells)
        })
        .prop_map(|(rows, cols, cells)| {
            let entries = cells
                .iter()
                .enumerate()
                .filter(|(_, &on)| on)
                .map(|(k, _)| (k / cols, k % cols));
            Pattern::new(rows, cols, entries).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pattern_json_round_trips(p in arb_pattern()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: Pattern = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn matrix_json_round_trips(
        rows in 1usize..5,
        cols in 1usize..5,
        data in proptest::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 16),
    ) {
        let mut m = DenseMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let (re, im) = data[(i * cols + j) % data.len()];
                m.set(i, j, num_complex::Complex64::new(re, im));
            }
        }
        let text = serde_json::to_string(&m).unwrap();
        let back: DenseMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn feasibility_is_monotone_in_the_bounds(p in arb_pattern(), extra_m in 0usize..3, extra_n in 0usize..3) {
        let (m, _) = optimal_bound(&p);
        // anything at or above the optimum stays feasible, asymmetric or not
        prop_assert!(decompose_pattern(&p, m + extra_m, m + extra_n).is_split());
        // strictly below the symmetric optimum is infeasible
        if m > 0 {
            prop_assert!(!decompose_pattern(&p, m - 1, m - 1).is_split());
        }
    }

    #[test]
    fn splits_self_validate(p in arb_pattern(), slack in 0usize..2) {
        let (m, _) = optimal_bound(&p);
        if let Some(split) = decompose_pattern(&p, m + slack, m).split() {
            prop_assert!(split.validate(&p).is_ok());
        }
    }
}
