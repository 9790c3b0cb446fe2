//! Deterministic generators for test and verification campaigns:
//! exhaustive and random unitary-dual points for the duality-identity
//! check, and random valid Arthur parameters with matching local data.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arthur::{
    free_slots, ArthurParameter, DualType, LocalSatakeData, SatakeEntry, SimpleParameter,
};
use crate::character::UnramifiedCharacter;
use crate::dual::{
    enumerate_jord_sn, ETriple, JordanBlock, NegativeData, StronglyNegativeData, UnitaryDualPoint,
};
use crate::partition::enumerate_partitions;
use crate::squareclass::SquareClass;
use crate::Rational;

/// A seeded RNG for reproducible campaigns.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every unitary-dual point of ambient rank <= max_n whose strongly
/// negative core uses a single character (the shapes covered by the bound
/// formulas), with all splits of the remaining rank into GL blocks and
/// e-triples. Exponents and characters are chosen canonically; the duality
/// identity does not depend on them. Errors past the enumeration cap.
pub fn exhaustive_identity_points(max_n: u32) -> crate::Result<Vec<UnitaryDualPoint>> {
    let mut points = Vec::new();
    for n in 0..=max_n {
        for core_rank in 0..=n {
            for sn in enumerate_jord_sn(core_rank)? {
                let lambda_only = sn.lambda0_sizes().is_empty();
                let trivial_one = sn.trivial_sizes() == [1];
                if !lambda_only && !trivial_one {
                    continue; // mixed cores have no bound formula
                }
                let rest = n - core_rank;
                for gl_total in 0..=rest {
                    let e_total = rest - gl_total;
                    for gl_sizes in enumerate_partitions(u64::from(gl_total))? {
                        for e_sizes in enumerate_partitions(u64::from(e_total))? {
                            let gl_blocks = assign_gl_characters(gl_sizes.parts());
                            let e = assign_e_triples(e_sizes.parts());
                            let point = UnitaryDualPoint::new(
                                n,
                                e,
                                NegativeData::new(sn.clone(), gl_blocks),
                            )
                            .expect("generated point is structurally valid");
                            points.push(point);
                        }
                    }
                }
            }
        }
    }
    Ok(points)
}

fn assign_gl_characters(sizes: &[u32]) -> Vec<JordanBlock> {
    sizes
        .iter()
        .enumerate()
        .map(|(i, &size)| {
            let character = match i % 3 {
                0 => UnramifiedCharacter::generic(format!("g{i}")),
                1 => UnramifiedCharacter::Trivial,
                _ => UnramifiedCharacter::Lambda0,
            };
            JordanBlock::new(character, size)
        })
        .collect()
}

fn assign_e_triples(sizes: &[u32]) -> Vec<ETriple> {
    sizes
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let character = if i % 2 == 0 {
                UnramifiedCharacter::Trivial
            } else {
                UnramifiedCharacter::Lambda0
            };
            ETriple::new(character, m, Rational::new(1, 4))
        })
        .collect()
}

/// A random point of ambient rank <= max_n with a single-character
/// strongly negative core, for the randomized identity campaign.
pub fn random_identity_point(rng: &mut impl Rng, max_n: u32) -> UnitaryDualPoint {
    let n = rng.gen_range(0..=max_n);
    let core_rank = rng.gen_range(0..=n);
    let sn = if core_rank >= 2 && rng.gen_bool(0.4) {
        // lambda0 core: an even number of distinct odd sizes summing to
        // 2*core_rank, next to the forced trivial 1.
        let lambda0 = random_distinct_odds(rng, 2 * core_rank, true);
        StronglyNegativeData::new(lambda0, vec![1]).expect("valid lambda0 core")
    } else {
        let trivial = random_distinct_odds(rng, 2 * core_rank + 1, false);
        StronglyNegativeData::new(vec![], trivial).expect("valid trivial core")
    };
    let rest = n - core_rank;
    let gl_total = rng.gen_range(0..=rest);
    let e_total = rest - gl_total;
    let gl_blocks = assign_gl_characters(&random_composition(rng, gl_total));
    let e = assign_e_triples(&random_composition(rng, e_total));
    UnitaryDualPoint::new(n, e, NegativeData::new(sn, gl_blocks))
        .expect("generated point is structurally valid")
}

/// A random strictly increasing list of odd numbers with the given sum;
/// even cardinality when `even_count` is set, odd otherwise. Falls back to
/// the shortest admissible list when random splitting fails.
fn random_distinct_odds(rng: &mut impl Rng, target: u32, even_count: bool) -> Vec<u32> {
    if target == 0 {
        return Vec::new();
    }
    for _ in 0..24 {
        let want = if even_count {
            [2, 4][usize::from(rng.gen_bool(0.3))]
        } else {
            [1, 3, 5][rng.gen_range(0..3usize)]
        };
        if let Some(list) = try_distinct_odds(rng, target, want) {
            return list;
        }
    }
    if even_count {
        // target is even and >= 4 here, so {1, target-1} is a distinct pair.
        vec![1, target - 1]
    } else {
        vec![target]
    }
}

fn try_distinct_odds(rng: &mut impl Rng, target: u32, count: usize) -> Option<Vec<u32>> {
    // count odd numbers summing to target exist only when parities match.
    if count == 0 {
        return if target == 0 { Some(vec![]) } else { None };
    }
    if target % 2 != (count % 2) as u32 {
        return None;
    }
    let minimum: u32 = (0..count as u32).map(|i| 2 * i + 1).sum();
    if target < minimum {
        return None;
    }
    let mut picks = std::collections::BTreeSet::new();
    for _ in 0..64 {
        picks.clear();
        let mut budget = target;
        let mut ok = true;
        for remaining in (1..=count).rev() {
            let tail: u32 = (0..remaining as u32 - 1).map(|i| 2 * i + 1).sum();
            if budget < tail + 1 {
                ok = false;
                break;
            }
            if remaining == 1 {
                if budget % 2 == 1 && picks.insert(budget) {
                    budget = 0;
                } else {
                    ok = false;
                }
                break;
            }
            let hi = budget - tail;
            let choice = 2 * rng.gen_range(0..=(hi - 1) / 2) + 1;
            if !picks.insert(choice) {
                ok = false;
                break;
            }
            budget -= choice;
        }
        if ok && budget == 0 {
            let list: Vec<u32> = picks.iter().copied().collect();
            if list.len() == count {
                return Some(list);
            }
        }
    }
    None
}

/// A random multiset of positive sizes with the given sum.
fn random_composition(rng: &mut impl Rng, total: u32) -> Vec<u32> {
    let mut sizes = Vec::new();
    let mut left = total;
    while left > 0 {
        let piece = rng.gen_range(1..=left);
        sizes.push(piece);
        left -= piece;
    }
    sizes
}

/// A random valid Arthur parameter with every central class trivial,
/// together with local Satake data whose assembled point is accepted by the
/// membership test.
pub fn random_parameter_with_local(rng: &mut impl Rng) -> (ArthurParameter, LocalSatakeData) {
    let psi = loop {
        let psi = random_trivial_class_parameter(rng);
        if psi.n >= 1 {
            break psi;
        }
    };
    psi.validate().expect("generated parameter is valid");
    let local = random_local_data(rng, &psi);
    (psi, local)
}

fn random_trivial_class_parameter(rng: &mut impl Rng) -> ArthurParameter {
    let mut blocks = Vec::new();
    let mut label = 0u32;
    let fresh = |label: &mut u32| {
        let id = format!("tau{label}");
        *label += 1;
        id
    };

    for _ in 0..rng.gen_range(0..=2) {
        blocks.push(SimpleParameter {
            tau_id: fresh(&mut label),
            gl_rank: 2 * rng.gen_range(1..=2),
            b: 2 * rng.gen_range(1..=2),
            dual_type: DualType::Symplectic,
            central_class: SquareClass::TRIVIAL,
        });
    }
    for _ in 0..rng.gen_range(0..=1) {
        blocks.push(SimpleParameter {
            tau_id: fresh(&mut label),
            gl_rank: 2 * rng.gen_range(1..=2),
            b: 2 * rng.gen_range(0..=1) + 1,
            dual_type: DualType::Orthogonal,
            central_class: SquareClass::TRIVIAL,
        });
    }
    // An odd number of odd-GL-rank orthogonal blocks keeps the rank sum odd.
    let odd_blocks = [1, 3][usize::from(rng.gen_bool(0.3))];
    let mut used_pairs = std::collections::BTreeSet::new();
    for _ in 0..odd_blocks {
        loop {
            let gl_rank = 2 * rng.gen_range(0..=2) + 1;
            let b = 2 * rng.gen_range(0..=1) + 1;
            if used_pairs.insert((gl_rank, b)) {
                blocks.push(SimpleParameter {
                    tau_id: fresh(&mut label),
                    gl_rank,
                    b,
                    dual_type: DualType::Orthogonal,
                    central_class: SquareClass::TRIVIAL,
                });
                break;
            }
        }
    }
    blocks.shuffle(rng);

    let rank_sum: u64 = blocks
        .iter()
        .map(|b| u64::from(b.gl_rank) * u64::from(b.b))
        .sum();
    ArthurParameter::new(((rank_sum - 1) / 2) as u32, blocks)
}

/// Random local data for a validated parameter, shaped so that the
/// assembled point always passes the membership test: positive exponents on
/// odd-b blocks come in same-character pairs or lean on a zero-exponent
/// sibling that lands the block in the Jordan set.
pub fn random_local_data(rng: &mut impl Rng, psi: &ArthurParameter) -> LocalSatakeData {
    let mut data = Vec::new();
    for block in &psi.blocks {
        let slots = free_slots(block);
        let mut entries = Vec::new();
        if block.b % 2 == 0 {
            // Even sizes carry no parity obstruction: free mix of self-dual
            // singletons, mirrored generic pairs and zero exponents.
            let mut slot = 0;
            while slot < slots {
                if slot + 1 < slots && rng.gen_bool(0.3) {
                    let chi = UnramifiedCharacter::generic(format!("p{}_{slot}", block.tau_id));
                    let beta = random_exponent(rng);
                    entries.push(SatakeEntry::new(chi.clone(), beta));
                    entries.push(SatakeEntry::new(chi.inverse(), beta));
                    slot += 2;
                } else {
                    entries.push(random_single_entry(rng, true));
                    slot += 1;
                }
            }
        } else {
            let mut slot = 0;
            while slot < slots {
                if slot + 1 < slots && rng.gen_bool(0.4) {
                    let chi = random_self_dual(rng);
                    if rng.gen_bool(0.5) {
                        // Same-character pair: the exponent group has even size.
                        entries.push(SatakeEntry::new(chi.clone(), random_exponent(rng)));
                        entries.push(SatakeEntry::new(chi, random_exponent(rng)));
                    } else {
                        // Jordan-backed singleton: the zero-exponent slot puts
                        // (chi, b) into the Jordan set of the negative part.
                        entries.push(SatakeEntry::new(chi.clone(), Rational::new(0, 1)));
                        entries.push(SatakeEntry::new(chi, random_exponent(rng)));
                    }
                    slot += 2;
                } else {
                    entries.push(random_single_entry(rng, false));
                    slot += 1;
                }
            }
        }
        data.push(entries);
    }
    LocalSatakeData::new(data)
}

fn random_self_dual(rng: &mut impl Rng) -> UnramifiedCharacter {
    if rng.gen_bool(0.5) {
        UnramifiedCharacter::Trivial
    } else {
        UnramifiedCharacter::Lambda0
    }
}

fn random_exponent(rng: &mut impl Rng) -> Rational {
    let choices = [
        Rational::new(1, 10),
        Rational::new(1, 5),
        Rational::new(1, 4),
        Rational::new(3, 10),
        Rational::new(2, 5),
    ];
    choices[rng.gen_range(0..choices.len())]
}

fn random_single_entry(rng: &mut impl Rng, allow_positive: bool) -> SatakeEntry {
    if allow_positive && rng.gen_bool(0.5) {
        SatakeEntry::new(random_self_dual(rng), random_exponent(rng))
    } else {
        let character = match rng.gen_range(0..3) {
            0 => UnramifiedCharacter::Trivial,
            1 => UnramifiedCharacter::Lambda0,
            _ => UnramifiedCharacter::generic(format!("z{}", rng.gen_range(0..4))),
        };
        SatakeEntry::new(character, Rational::new(0, 1))
    }
}
