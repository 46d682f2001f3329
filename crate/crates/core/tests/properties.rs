use circtrans::charpoly::{charpoly_direct, charpoly_exact, charpoly_faddeev_leverrier, int_matrix};
use circtrans::circulant::{build_strong_stack, enumerate_states, Boundary, CirculantSpec, ExplicitGraph};
use circtrans::oracle::{brute_independence_polynomial, layered_equivalence_check};
use circtrans::symmetry::{dihedral_orbits, is_equivariant, orbit_transfer, rotation_orbits};
use circtrans::transfer::{
    build_transfer, strip_count, strip_polynomial, strip_polynomial_orbit, torus_count, torus_polynomial, WeightedTransfer,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn spec_strategy(max_n: usize) -> impl Strategy<Value = CirculantSpec> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1..n, 1..=2).prop_map(move |gens| CirculantSpec::from_generators(n, &gens).unwrap())
    })
}

fn graph_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..=14).prop_flat_map(|n| {
        let edges = proptest::collection::vec((0..n, 0..n), 0..=3 * n)
            .prop_map(|es| es.into_iter().filter(|(a, b)| a != b).collect::<Vec<_>>());
        (Just(n), edges)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_is_relabeling_invariant((n, edges) in graph_strategy(), seed in any::<u64>()) {
        let g = ExplicitGraph::from_edges(n, edges).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = brute_independence_polynomial(&g, 64).unwrap().coefficients;
        let b = brute_independence_polynomial(&g.permuted(&perm).unwrap(), 64).unwrap().coefficients;
        prop_assert_eq!(a.coeff(1), BigInt::from(n));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn charpoly_routes_agree(rows in proptest::collection::vec(proptest::collection::vec(-9i64..=9, 5), 5)) {
        let m = int_matrix(&rows).unwrap();
        let fl = charpoly_faddeev_leverrier(&m).unwrap();
        prop_assert_eq!(&charpoly_exact(&m).unwrap(), &fl);
        prop_assert_eq!(&charpoly_direct(&m).unwrap(), &fl);
    }

    #[test]
    fn transfer_is_symmetric_and_equivariant(spec in spec_strategy(10)) {
        let t = build_transfer(&enumerate_states(&spec), &spec.kernel()).unwrap();
        prop_assert!(t.to_int_matrix().is_symmetric());
        prop_assert!(is_equivariant(&t));
    }

    #[test]
    fn strip_routes_agree(spec in spec_strategy(9), d in 1usize..=5) {
        let t = build_transfer(&enumerate_states(&spec), &spec.kernel()).unwrap();
        let wt = WeightedTransfer::new(&t);
        let full = strip_polynomial(&t, &wt, d).unwrap();
        let orb = orbit_transfer(&dihedral_orbits(t.states()).unwrap(), &spec.kernel()).unwrap();
        let reduced = strip_polynomial_orbit(&spec, &orb, d).unwrap();
        prop_assert_eq!(&full.coefficients, &reduced.coefficients);
        prop_assert_eq!(full.value_at_one(), strip_count(&t, d).unwrap());
    }

    #[test]
    fn torus_matches_trace_count(spec in spec_strategy(9), d in 2usize..=5) {
        let t = build_transfer(&enumerate_states(&spec), &spec.kernel()).unwrap();
        let wt = WeightedTransfer::new(&t);
        let tor = torus_polynomial(&t, &wt, d).unwrap();
        prop_assert_eq!(tor.value_at_one(), torus_count(&t, d).unwrap());
    }

    #[test]
    fn orbit_sizes_partition_states(spec in spec_strategy(12)) {
        let states = enumerate_states(&spec);
        let dih = dihedral_orbits(&states).unwrap();
        let rot = rotation_orbits(&states).unwrap();
        prop_assert_eq!(dih.sizes().iter().sum::<usize>(), states.len());
        prop_assert_eq!(rot.sizes().iter().sum::<usize>(), states.len());
        prop_assert!(dih.len() <= rot.len());
    }
}

#[test]
fn layered_sequences_match_oracle_for_other_circulants() {
    for (n, gens) in [(8usize, vec![1, 2]), (9, vec![2]), (10, vec![1, 3])] {
        let spec = CirculantSpec::from_generators(n, &gens).unwrap();
        for boundary in [Boundary::Strip, Boundary::Torus] {
            let check = layered_equivalence_check(&spec, 3, boundary, 50).unwrap();
            assert!(check.equal, "n = {n}, {boundary:?}");
        }
    }
}

#[test]
fn transfer_polynomials_match_oracle_beyond_cycles() {
    for (n, gens) in [(8usize, vec![1, 2]), (9, vec![3]), (12, vec![1, 5])] {
        let spec = CirculantSpec::from_generators(n, &gens).unwrap();
        let t = build_transfer(&enumerate_states(&spec), &spec.kernel()).unwrap();
        let wt = WeightedTransfer::new(&t);
        for d in 2..=3 {
            let g = build_strong_stack(&spec, d, Boundary::Torus).unwrap();
            let oracle = brute_independence_polynomial(&g, 50).unwrap();
            assert_eq!(oracle.coefficients, torus_polynomial(&t, &wt, d).unwrap().coefficients, "n = {n}, d = {d}");
        }
    }
}
