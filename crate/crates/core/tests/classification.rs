//! Cross-checks of the classification and duality layers against
//! independent brute-force routes.

use sympart::dual::enumerate_jord_sn;
use sympart::partition::{enumerate_partitions, OrderRelation, Partition};
use sympart::symplectic::{enumerate_symplectic, is_symplectic};
use sympart::{bv_dual, OddOrthogonalPartition};

/// Counts strongly negative data of rank n by scanning bitmask subsets of
/// the odd numbers; a different algorithm from the library's recursive
/// generator.
fn brute_force_jord_sn_count(n: u32) -> usize {
    let target = 2 * n + 1;
    let odds: Vec<u32> = (0..)
        .map(|i| 2 * i + 1)
        .take_while(|&v| v <= target)
        .collect();
    let subsets = 1usize << odds.len();
    let describe = |mask: usize| -> (u32, usize) {
        let mut sum = 0;
        let mut card = 0;
        for (i, &v) in odds.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum += v;
                card += 1;
            }
        }
        (sum, card)
    };
    let mut count = 0;
    for lambda_mask in 0..subsets {
        let (lambda_sum, lambda_card) = describe(lambda_mask);
        if lambda_card % 2 != 0 || lambda_sum > target {
            continue;
        }
        for trivial_mask in 0..subsets {
            let (trivial_sum, trivial_card) = describe(trivial_mask);
            if trivial_card % 2 == 1 && lambda_sum + trivial_sum == target {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn jord_sn_enumeration_matches_brute_force_count() {
    for n in 0..=12u32 {
        assert_eq!(
            enumerate_jord_sn(n).unwrap().len(),
            brute_force_jord_sn_count(n),
            "rank {n}"
        );
    }
}

#[test]
fn jord_sn_entries_are_distinct() {
    for n in 0..=10u32 {
        let all = enumerate_jord_sn(n).unwrap();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
            assert_eq!(a.rank(), n);
        }
    }
}

/// Every odd-orthogonal partition of total <= 21 has a symplectic duality
/// image: each one is realizable as the orbit partition of a point with an
/// all-trivial-character core, where the image agrees with a collapsed
/// bound.
#[test]
fn bv_dual_is_symplectic_on_all_valid_inputs_up_to_21() {
    for total in (1..=21u64).step_by(2) {
        for p in enumerate_partitions(total).unwrap() {
            if let Ok(q) = OddOrthogonalPartition::new(p.clone()) {
                let image = bv_dual(&q);
                assert!(is_symplectic(&image), "eta({p}) = {image} not symplectic");
            }
        }
    }
}

/// For the rectangular bound [(2n)^(2m)], every symplectic partition of the
/// same total that is dominance-incomparable to the bound is automatically
/// bigger in the lexicographic order.
#[test]
fn rectangular_bounds_leave_no_lex_smaller_incomparables() {
    for m in 1..=3u32 {
        for n in 1..=3u32 {
            let bound = Partition::new(vec![2 * n; 2 * m as usize]);
            for candidate in enumerate_symplectic(bound.total()).unwrap() {
                if candidate.dominance_compare(&bound) == OrderRelation::Incomparable {
                    assert_eq!(
                        candidate.lex_compare(&bound),
                        OrderRelation::Greater,
                        "candidate {candidate} vs bound {bound}"
                    );
                }
            }
        }
    }
}
