use proptest::prelude::*;

use qgrass::bimodule::{dim_vector_e, dim_vector_f, CanonicalBimodule, QuiverGrassmannian};
use qgrass::fixedpoints::euler_characteristic;
use qgrass::quiver::{PathQuiver, Quiver};

/// A random acyclic quiver: arrows only go from smaller to larger vertices.
fn dag() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..7)))
        .prop_map(|(n, raw)| (n, raw.into_iter().filter(|(s, t)| s < t).collect()))
}

fn build(n: usize, arrows: &[(usize, usize)]) -> Quiver {
    Quiver::new(
        (1..=n).map(|v| v.to_string()),
        arrows
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| (format!("x{i}"), (s + 1).to_string(), (t + 1).to_string())),
    )
    .unwrap()
}

/// Number of paths from every vertex, including the lazy one, by walking
/// arrows out of each vertex from the top down.
fn paths_oracle(n: usize, arrows: &[(usize, usize)]) -> usize {
    let mut from = vec![1usize; n];
    for v in (0..n).rev() {
        from[v] = 1 + arrows
            .iter()
            .filter(|a| a.0 == v)
            .map(|a| from[a.1])
            .sum::<usize>();
    }
    from.iter().sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn path_quiver_has_one_vertex_per_path((n, arrows) in dag()) {
        let pq = PathQuiver::build(&build(n, &arrows));
        prop_assert_eq!(pq.vertex_count(), paths_oracle(n, &arrows));
    }

    #[test]
    fn bimodule_is_f_plus_e((n, arrows) in dag(), seed in prop::collection::vec(0usize..3, 5)) {
        let pq = PathQuiver::build(&build(n, &arrows));
        let dims = &seed[..n];
        let m = CanonicalBimodule::build(&pq, dims).unwrap();
        let (f, e) = (dim_vector_f(&pq, dims), dim_vector_e(&pq, dims));
        let sum: Vec<usize> = f.iter().zip(&e).map(|(a, b)| a + b).collect();
        prop_assert_eq!(m.rep().dims(), sum);
    }

    #[test]
    fn every_grassmannian_has_a_fixed_point((n, arrows) in dag(), seed in prop::collection::vec(0usize..2, 5)) {
        // The sum of the arrow images is always a point.
        let q = build(n, &arrows);
        prop_assume!(PathQuiver::build(&q).vertex_count() <= 12);
        let gr = QuiverGrassmannian::of_bimodule(&PathQuiver::build(&q), &seed[..n]).unwrap();
        prop_assert!(euler_characteristic(&gr) >= 1);
    }
}
