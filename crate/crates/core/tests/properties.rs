//! Property tests for the combinatorial layer.

use charlevel_core::qcomb::{gauss_binom, gauss_binom_eval, partitions_of, Partition, QPoly};
use charlevel_core::Int;
use proptest::prelude::*;

fn arb_partition(max_n: u32) -> impl Strategy<Value = Partition> {
    (0..=max_n)
        .prop_flat_map(move |n| {
            let count = partitions_of(n).count();
            (Just(n), 0..count.max(1))
        })
        .prop_map(|(n, idx)| partitions_of(n).nth(idx).unwrap())
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in arb_partition(24)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn conjugate_preserves_size_and_swaps_stats(lam in arb_partition(24)) {
        let conj = lam.conjugate();
        prop_assert_eq!(lam.size(), conj.size());
        // a and the arm-count swap roles under transposition, so the hook
        // multisets agree.
        let mut h1 = lam.hook_lengths();
        let mut h2 = conj.hook_lengths();
        h1.sort_unstable();
        h2.sort_unstable();
        prop_assert_eq!(h1, h2);
    }

    #[test]
    fn qpoly_mul_matches_evaluation(a in proptest::collection::vec(-9i64..=9, 0..6),
                                    b in proptest::collection::vec(-9i64..=9, 0..6),
                                    z in -4i64..=4) {
        let pa = QPoly::from_coeffs(a.into_iter().map(Int::from).collect());
        let pb = QPoly::from_coeffs(b.into_iter().map(Int::from).collect());
        let z = Int::from(z);
        let prod = &pa * &pb;
        prop_assert_eq!(prod.eval(&z), pa.eval(&z) * pb.eval(&z));
        let sum = &pa + &pb;
        prop_assert_eq!(sum.eval(&z), pa.eval(&z) + pb.eval(&z));
    }

    #[test]
    fn gauss_binom_pascal_recursion(m in 1u32..=9, k in 0u32..=9) {
        prop_assume!(k <= m);
        // binom(m,k)_q = binom(m-1,k)_q + q^{m-k} binom(m-1,k-1)_q.
        let lhs = gauss_binom(m, k);
        let rhs = if k == 0 || k == m {
            QPoly::one()
        } else {
            &gauss_binom(m - 1, k) + &(&QPoly::monomial(Int::from(1), (m - k) as usize) * &gauss_binom(m - 1, k - 1))
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gauss_binom_eval_agrees_with_poly(m in 0u32..=7, k in 0u32..=7, z in 2i64..=5, sign in proptest::bool::ANY) {
        prop_assume!(k <= m);
        let z = Int::from(if sign { z } else { -z });
        prop_assert_eq!(gauss_binom_eval(m, k, &z), gauss_binom(m, k).eval(&z));
    }
}
