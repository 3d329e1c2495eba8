//! Structural properties of built root systems, including property-based
//! sweeps over randomly assembled (block-permuted, reducible) Cartan
//! matrices of the named finite types.

use chevalley_core::rootsys::{build_root_system, CartanMatrix, RootSystem};
use chevalley_core::Error;
use proptest::prelude::*;

const NAMES: &[&str] = &[
    "A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4",
];

/// Expected number of roots for each named type in `NAMES`.
fn expected_roots(name: &str) -> usize {
    match name {
        "A1" => 2,
        "A2" => 6,
        "A3" => 12,
        "B2" | "C2" => 8,
        "B3" | "C3" => 18,
        "D4" => 24,
        "G2" => 12,
        "F4" => 48,
        _ => unreachable!(),
    }
}

/// Block-diagonal sum of named Cartan matrices, conjugated by a random
/// permutation of the simple-root indices.
fn assembled(names: &[&str], seed: u64) -> (Vec<Vec<i64>>, usize, usize) {
    let blocks: Vec<CartanMatrix> =
        names.iter().map(|n| CartanMatrix::from_name(n).unwrap()).collect();
    let rank: usize = blocks.iter().map(|b| b.rank()).sum();
    let mut m = vec![vec![0i64; rank]; rank];
    let mut off = 0;
    for b in &blocks {
        for i in 0..b.rank() {
            for j in 0..b.rank() {
                m[off + i][off + j] = b.entry(i, j);
            }
        }
        off += b.rank();
    }
    // Cheap deterministic permutation from the seed.
    let mut perm: Vec<usize> = (0..rank).collect();
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    for i in (1..rank).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        perm.swap(i, j);
    }
    let mut pm = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            pm[i][j] = m[perm[i]][perm[j]];
        }
    }
    let total: usize = names.iter().map(|n| expected_roots(n)).sum();
    (pm, rank, total)
}

fn structural_invariants(sys: &RootSystem) {
    let n = sys.n_roots();
    assert_eq!(n, 2 * sys.n_pos());
    for idx in 0..n {
        // Negation is a fixed-point-free involution matching coordinates.
        let neg = sys.negate(idx);
        assert_ne!(neg, idx);
        assert_eq!(sys.negate(neg), idx);
        let negated: Vec<i64> = sys.root(idx).coords.iter().map(|&v| -v).collect();
        assert_eq!(sys.is_root(&negated), Some(neg));
        // Coordinate lookup round-trips.
        assert_eq!(sys.is_root(&sys.root(idx).coords), Some(idx));
        // Height is the coordinate sum and fixes the sign convention.
        let h: i64 = sys.root(idx).coords.iter().sum();
        assert_eq!(sys.root(idx).height, h);
        assert_eq!(sys.is_positive(idx), h > 0);
        for i in 0..sys.rank() {
            // Reflections are involutions and preserve squared length.
            let r = sys.reflect(i, idx);
            assert_eq!(sys.reflect(i, r), idx);
            assert_eq!(sys.root(r).sq_length, sys.root(idx).sq_length);
            // ⟨λ − ⟨λ,α_i∨⟩α_i⟩ is exactly the reflected coordinate vector.
            let mut coords = sys.root(idx).coords.clone();
            coords[i] -= sys.pairing(idx, i);
            assert_eq!(sys.is_root(&coords), Some(r));
        }
    }
    for lambda in 0..sys.n_pos() {
        // Chains replay from their base with height strictly increasing.
        let (base, letters) = sys.depth_chain(lambda);
        assert!(base < sys.rank());
        let mut cur = base;
        let mut height = 1;
        for &j in letters {
            cur = sys.reflect(j, cur);
            let h = sys.root(cur).height;
            assert!(h > height, "chain height must strictly increase");
            height = h;
        }
        assert_eq!(cur, lambda);
        assert_eq!(letters.len(), sys.depth(lambda));
    }
}

#[test]
fn named_types_satisfy_all_structural_invariants() {
    for name in NAMES {
        let sys = build_root_system(CartanMatrix::from_name(name).unwrap()).unwrap();
        assert_eq!(sys.n_roots(), expected_roots(name), "{name}");
        structural_invariants(&sys);
    }
}

#[test]
fn affine_and_indefinite_matrices_are_rejected() {
    // Affine A1: the closure never terminates.
    let affine = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
    assert!(matches!(build_root_system(affine), Err(Error::InfiniteType { .. })));
    // Affine G2-like rank 3.
    let g2aff = CartanMatrix::new(vec![
        vec![2, -1, 0],
        vec![-3, 2, -1],
        vec![0, -1, 2],
    ])
    .unwrap();
    assert!(matches!(build_root_system(g2aff), Err(Error::InfiniteType { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_reducible_assemblies_build_correctly(
        picks in proptest::collection::vec(0usize..NAMES.len(), 1..4),
        seed in any::<u64>(),
    ) {
        let names: Vec<&str> = picks.iter().map(|&i| NAMES[i]).collect();
        let (m, rank, total) = assembled(&names, seed);
        let cartan = CartanMatrix::new(m).unwrap();
        prop_assert_eq!(cartan.rank(), rank);
        let sys = build_root_system(cartan).unwrap();
        prop_assert_eq!(sys.n_roots(), total);
        structural_invariants(&sys);
    }

    #[test]
    fn pairing_table_matches_definition(
        pick in 0usize..NAMES.len(),
    ) {
        let sys = build_root_system(CartanMatrix::from_name(NAMES[pick]).unwrap()).unwrap();
        for idx in 0..sys.n_roots() {
            for i in 0..sys.rank() {
                let direct: i64 = sys
                    .root(idx)
                    .coords
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| c * sys.cartan().entry(k, i))
                    .sum();
                prop_assert_eq!(sys.pairing(idx, i), direct);
            }
        }
    }
}
