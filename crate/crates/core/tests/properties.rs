mod common;

use blockeq::bounds::{alpha, alpha_min, is_well_covered};
use blockeq::verifier::canonical_code;
use blockeq::wellcovered::{
    color_well_covered, decompose, dominates, gale_ryser_transform, generate, modified_ferrers, semi_balanced,
    target_vector,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Row sums as they arise when extending a coloring: pendant clique sizes
/// (at least 2) non-increasing with a trailing 1, and a semi-balanced
/// target over `y >= l` columns with the same total.
fn ferrers_case() -> impl Strategy<Value = (Vec<usize>, usize, Vec<usize>)> {
    (1usize..8, 0usize..6)
        .prop_flat_map(|(l, extra)| {
            let y = l + extra;
            (Just(y), prop::collection::vec(2..=y.max(2), l - 1), 0usize..=y, any::<bool>())
        })
        .prop_filter_map("row longer than y", |(y, mut q, shift, bump)| {
            if q.iter().any(|&x| x > y) {
                return None;
            }
            q.sort_unstable_by(|a, b| b.cmp(a));
            q.push(1);
            let total: usize = q.iter().sum();
            let (base, rem) = (total / y, total % y);
            let mut b: Vec<usize> = (0..y).map(|j| base + usize::from(j < rem)).collect();
            // optionally move one unit from the last nonzero column to the first
            if bump && shift > 0 && y > 1 {
                if let Some(j) = (1..y).rev().find(|&j| b[j] > 0) {
                    b[j] -= 1;
                    b[0] += 1;
                    b.sort_unstable_by(|a, b| b.cmp(a));
                }
            }
            semi_balanced(&b, q.len()).then_some((q, y, b))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ferrers_rebalancing((q, y, b) in ferrers_case()) {
        let m = modified_ferrers(&q, y).unwrap();
        prop_assert!(m.is_modified_ferrers());
        prop_assert_eq!(m.row_sums(), q.clone());
        prop_assert!(dominates(&m.col_sums(), &b).unwrap());
        let t = gale_ryser_transform(&m, &b).unwrap();
        prop_assert_eq!(t.row_sums(), q);
        prop_assert_eq!(t.col_sums(), b);
        prop_assert!(t.has_anti_diagonal());
    }
}

fn equitable_counts() -> impl Strategy<Value = (Vec<usize>, usize, usize)> {
    (2usize..8, 1usize..40, 1usize..30).prop_flat_map(|(k, h, new_total)| {
        let counts: Vec<usize> = (0..k).map(|c| h / k + usize::from(c < h % k)).collect();
        (Just(counts).prop_shuffle(), 1..=k, Just(new_total))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn target_vector_properties((counts, v_color, new_total) in equitable_counts()) {
        prop_assume!(counts[v_color - 1] > 0);
        let k = counts.len();
        let (p, col) = target_vector(&counts, v_color, new_total).unwrap();
        prop_assert_eq!(p.iter().sum::<usize>(), new_total);
        prop_assert!(p.windows(2).all(|w| w[0] >= w[1]));
        let mut sorted = col.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=k).collect::<Vec<_>>());
        // final totals: H without v, plus the new part including v
        let mut total = vec![0; k];
        for (i, &c) in col.iter().enumerate() {
            total[c - 1] = counts[c - 1] - usize::from(c == v_color) + p[i];
        }
        let (lo, hi) = (total.iter().min().unwrap(), total.iter().max().unwrap());
        prop_assert!(hi - lo <= 1);
        // v's color must appear at least once in the new part
        prop_assert!(p[col.iter().position(|&c| c == v_color).unwrap()] >= 1);
    }

    #[test]
    fn random_recipes_are_well_covered(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let recipe = common::random_recipe(&mut rng, 40, 5);
        let g = generate(&recipe).unwrap();
        prop_assert_eq!(g.n(), recipe.vertex_count());
        prop_assert!(is_well_covered(&g).unwrap());
        prop_assert_eq!(alpha(&g).unwrap(), alpha_min(&g).unwrap());
        let d = decompose(&g).unwrap().unwrap();
        let back = generate(&d.recipe).unwrap();
        prop_assert_eq!(canonical_code(&back).unwrap(), canonical_code(&g).unwrap());
        let omega = recipe.omega();
        for k in omega..=omega + 3 {
            let c = color_well_covered(&g, k).unwrap();
            prop_assert!(common::is_equitable_coloring(&g, k, c.assignment()));
        }
    }
}

#[test]
fn small_recipes_against_brute_force() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let recipe = common::random_recipe(&mut rng, 14, 4);
        let g = generate(&recipe).unwrap();
        let a = common::brute_alpha(&g);
        assert_eq!(a, common::brute_alpha_min(&g), "{recipe:?}");
        assert_eq!(alpha(&g).unwrap(), a);
    }
}
