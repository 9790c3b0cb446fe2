//! Classification data for the unramified unitary dual of p-adic Sp_2n,
//! after Muic-Tadic: strongly negative data (Jordan blocks with the trivial
//! character and with lambda0, distinct odd sizes, parity-constrained
//! counts), negative data (a strongly negative core plus GL blocks), and
//! general points (a multiset of exponent triples over a negative
//! representation). The membership test reproduces the defining conditions
//! of the unitary subset, and the orbit partition reads off the attached
//! nilpotent orbit.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::character::UnramifiedCharacter;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::Rational;

/// Cap on `enumerate_jord_sn`.
pub const JORD_SN_CAP: u32 = 12;

/// A pair (character, positive size): the building block of the
/// classification data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JordanBlock {
    pub character: UnramifiedCharacter,
    pub size: u32,
}

impl JordanBlock {
    pub fn new(character: UnramifiedCharacter, size: u32) -> Self {
        JordanBlock { character, size }
    }
}

impl fmt::Display for JordanBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.character, self.size)
    }
}

/// Jordan data of a strongly negative unramified representation: strictly
/// increasing odd sizes, an even number of lambda0 blocks and an odd number
/// of trivial-character blocks, with sizes summing to 2n+1 for the ambient
/// rank n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StronglyNegativeData {
    lambda0_sizes: Vec<u32>,
    trivial_sizes: Vec<u32>,
}

impl StronglyNegativeData {
    pub fn new(lambda0_sizes: Vec<u32>, trivial_sizes: Vec<u32>) -> Result<Self> {
        let shape_error = |msg: &str| {
            Err(Error::InvalidData(format!(
                "strongly negative data lambda0={lambda0_sizes:?} trivial={trivial_sizes:?}: {msg}"
            )))
        };
        if lambda0_sizes.len() % 2 != 0 {
            return shape_error("lambda0 block count must be even");
        }
        if trivial_sizes.len() % 2 != 1 {
            return shape_error("trivial block count must be odd");
        }
        for sizes in [&lambda0_sizes, &trivial_sizes] {
            if sizes.iter().any(|&s| s % 2 == 0) {
                return shape_error("all sizes must be odd");
            }
            if sizes.windows(2).any(|w| w[0] >= w[1]) {
                return shape_error("sizes must be strictly increasing");
            }
        }
        Ok(StronglyNegativeData {
            lambda0_sizes,
            trivial_sizes,
        })
    }

    /// The data of the trivial representation of Sp_2n.
    pub fn trivial_representation(n: u32) -> Self {
        StronglyNegativeData {
            lambda0_sizes: Vec::new(),
            trivial_sizes: vec![2 * n + 1],
        }
    }

    pub fn lambda0_sizes(&self) -> &[u32] {
        &self.lambda0_sizes
    }

    pub fn trivial_sizes(&self) -> &[u32] {
        &self.trivial_sizes
    }

    /// Ambient rank n, from the size sum 2n+1.
    pub fn rank(&self) -> u32 {
        let sum: u32 =
            self.lambda0_sizes.iter().sum::<u32>() + self.trivial_sizes.iter().sum::<u32>();
        (sum - 1) / 2
    }

    pub fn jordan_blocks(&self) -> Vec<JordanBlock> {
        let mut blocks: Vec<JordanBlock> = self
            .lambda0_sizes
            .iter()
            .map(|&s| JordanBlock::new(UnramifiedCharacter::Lambda0, s))
            .collect();
        blocks.extend(
            self.trivial_sizes
                .iter()
                .map(|&s| JordanBlock::new(UnramifiedCharacter::Trivial, s)),
        );
        blocks
    }
}

/// Checks the strongly-negative shape of raw size lists against an ambient
/// rank: odd strictly increasing sizes, even lambda0 count, odd trivial
/// count, sum 2n+1.
pub fn validate_jord_sn(lambda0_sizes: &[u32], trivial_sizes: &[u32], n: u32) -> bool {
    match StronglyNegativeData::new(lambda0_sizes.to_vec(), trivial_sizes.to_vec()) {
        Ok(data) => data.rank() == n,
        Err(_) => false,
    }
}

/// All strongly negative data of rank n, ordered by (lambda0, trivial) size
/// lists.
pub fn enumerate_jord_sn(n: u32) -> Result<Vec<StronglyNegativeData>> {
    if n > JORD_SN_CAP {
        return Err(Error::CapExceeded {
            total: u64::from(n),
            cap: u64::from(JORD_SN_CAP),
        });
    }
    let target = 2 * n + 1;
    let odds: Vec<u32> = (0..)
        .map(|i| 2 * i + 1)
        .take_while(|&v| v <= target)
        .collect();
    let mut even_card: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    let mut odd_card: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    let mut subset = Vec::new();
    collect_subsets(&odds, 0, target, &mut subset, &mut |chosen| {
        let sum: u32 = chosen.iter().sum();
        let bucket = if chosen.len() % 2 == 0 {
            &mut even_card
        } else {
            &mut odd_card
        };
        bucket.entry(sum).or_default().push(chosen.to_vec());
    });

    let mut results = Vec::new();
    for (&lambda_sum, lambda_sets) in &even_card {
        if lambda_sum > target {
            continue;
        }
        if let Some(trivial_sets) = odd_card.get(&(target - lambda_sum)) {
            for lambda in lambda_sets {
                for trivial in trivial_sets {
                    results.push(StronglyNegativeData {
                        lambda0_sizes: lambda.clone(),
                        trivial_sizes: trivial.clone(),
                    });
                }
            }
        }
    }
    results.sort_by(|a, b| {
        (&a.lambda0_sizes, &a.trivial_sizes).cmp(&(&b.lambda0_sizes, &b.trivial_sizes))
    });
    Ok(results)
}

fn collect_subsets(
    odds: &[u32],
    start: usize,
    budget: u32,
    current: &mut Vec<u32>,
    emit: &mut impl FnMut(&[u32]),
) {
    emit(current);
    for i in start..odds.len() {
        if odds[i] > budget {
            break;
        }
        current.push(odds[i]);
        collect_subsets(odds, i + 1, budget - odds[i], current, emit);
        current.pop();
    }
}

/// Data of a negative unramified representation: a strongly negative core
/// plus a multiset of GL blocks (chi_i, n_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeData {
    pub sn: StronglyNegativeData,
    pub gl_blocks: Vec<JordanBlock>,
}

impl NegativeData {
    pub fn new(sn: StronglyNegativeData, gl_blocks: Vec<JordanBlock>) -> Self {
        NegativeData { sn, gl_blocks }
    }

    /// A strongly negative representation viewed as negative with no GL part.
    pub fn from_sn(sn: StronglyNegativeData) -> Self {
        NegativeData {
            sn,
            gl_blocks: Vec::new(),
        }
    }

    /// Ambient rank: the strongly negative rank plus the GL block sizes.
    pub fn rank(&self) -> u32 {
        self.sn.rank() + self.gl_blocks.iter().map(|b| b.size).sum::<u32>()
    }
}

/// Jordan blocks of a negative representation: the strongly negative blocks
/// together with both chi and chi^-1 copies of every GL block.
pub fn jord_of_negative(neg: &NegativeData) -> Vec<JordanBlock> {
    let mut blocks = neg.sn.jordan_blocks();
    for gl in &neg.gl_blocks {
        blocks.push(gl.clone());
        blocks.push(JordanBlock::new(gl.character.inverse(), gl.size));
    }
    blocks.sort();
    blocks
}

/// One exponent triple (chi, m, alpha) of a unitary-dual point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETriple {
    pub character: UnramifiedCharacter,
    pub m: u32,
    pub alpha: Rational,
}

impl ETriple {
    pub fn new(character: UnramifiedCharacter, m: u32, alpha: Rational) -> Self {
        ETriple {
            character,
            m,
            alpha,
        }
    }
}

/// A point of the unramified dual: the multiset **e** of exponent triples
/// over a negative representation, with the rank bookkeeping
/// sum of m's + rank(neg) = n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryDualPoint {
    pub n: u32,
    pub e: Vec<ETriple>,
    pub neg: NegativeData,
}

impl UnitaryDualPoint {
    pub fn new(n: u32, e: Vec<ETriple>, neg: NegativeData) -> Result<Self> {
        let point = UnitaryDualPoint { n, e, neg };
        point.validate_structure()?;
        Ok(point)
    }

    /// Structural validity: positive exponents and exact rank bookkeeping.
    /// The finer unitarity conditions live in [`check_uunr`].
    pub fn validate_structure(&self) -> Result<()> {
        if self.e.iter().any(|t| t.alpha <= Rational::from_integer(0)) {
            return Err(Error::InvalidData("exponents in e must be positive".into()));
        }
        if self.e.iter().any(|t| t.m == 0) {
            return Err(Error::InvalidData(
                "block sizes in e must be positive".into(),
            ));
        }
        let e_rank: u32 = self.e.iter().map(|t| t.m).sum();
        let rank = e_rank + self.neg.rank();
        if rank != self.n {
            return Err(Error::InvalidData(format!(
                "rank bookkeeping failed: e contributes {e_rank}, negative data {}, ambient n = {}",
                self.neg.rank(),
                self.n
            )));
        }
        Ok(())
    }
}

/// Coarse shape of a point, read off the strongly negative core: all
/// trivial-character blocks gives Type III (Type I when e and the GL part
/// are empty); lambda0 blocks beside a single size-1 trivial block give
/// Type IV (Type II when e and the GL part are empty); any other mixture of
/// the two characters is Mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReprType {
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
    Mixed,
}

impl fmt::Display for ReprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ReprType::TypeI => "I",
            ReprType::TypeII => "II",
            ReprType::TypeIII => "III",
            ReprType::TypeIV => "IV",
            ReprType::Mixed => "mixed",
        };
        write!(f, "{name}")
    }
}

pub fn classify_type(point: &UnitaryDualPoint) -> ReprType {
    let sn = &point.neg.sn;
    let bare = point.e.is_empty() && point.neg.gl_blocks.is_empty();
    if sn.lambda0_sizes().is_empty() {
        if bare {
            ReprType::TypeI
        } else {
            ReprType::TypeIII
        }
    } else if sn.trivial_sizes() == [1] {
        if bare {
            ReprType::TypeII
        } else {
            ReprType::TypeIV
        }
    } else {
        ReprType::Mixed
    }
}

/// Label of a violated membership condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    Range1,
    Range2,
    Range3,
    A,
    B,
    C,
    D,
    E,
    F,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Condition::Range1 => "1",
            Condition::Range2 => "2",
            Condition::Range3 => "3",
            Condition::A => "a",
            Condition::B => "b",
            Condition::C => "c",
            Condition::D => "d",
            Condition::E => "e",
            Condition::F => "f",
        };
        write!(f, "{label}")
    }
}

/// Outcome of the membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Accept,
    Reject(Condition),
}

impl Membership {
    pub fn is_accept(self) -> bool {
        matches!(self, Membership::Accept)
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Accept => write!(f, "accept"),
            Membership::Reject(c) => write!(f, "reject({c})"),
        }
    }
}

/// Membership test for the unitary subset of the unramified dual, evaluated
/// on a structurally valid point.
///
/// The exponent multiset of each group e(chi, m) is checked first against
/// the range conditions: (1) a character with non-trivial square needs the
/// mirrored group e(chi^-1, m) equal as a multiset and exponents in
/// (0, 1/2); (2) self-dual chi with even m needs exponents in (0, 1/2);
/// (3) self-dual chi with odd m needs exponents in (0, 1).
///
/// Each group is then split as alpha_1 <= ... <= alpha_k <= 1/2 <
/// beta_1 <= ... <= beta_l < 1 and checked against:
/// (a) for odd m, if (chi, m) is not a Jordan block of the negative part,
///     k+l must be even — for even m the complementary range already closes
///     at 1/2 and no parity obstruction applies;
/// (b) if k >= 2 then alpha_{k-1} != 1/2;
/// (c) if l >= 2 the betas are strictly increasing;
/// (d) alpha_i + beta_j != 1 for all i, j;
/// (e) if l >= 1, #{i : 1 - beta_1 < alpha_i <= 1/2} is even;
/// (f) if l >= 2, #{i : 1 - beta_{j+1} < alpha_i < beta_j} is odd for
///     1 <= j <= l-1.
///
/// The first violated condition is reported.
pub fn check_uunr(point: &UnitaryDualPoint) -> Membership {
    let half = Rational::new(1, 2);
    let one = Rational::one();

    let mut groups: BTreeMap<(UnramifiedCharacter, u32), Vec<Rational>> = BTreeMap::new();
    for triple in &point.e {
        groups
            .entry((triple.character.clone(), triple.m))
            .or_default()
            .push(triple.alpha);
    }
    for alphas in groups.values_mut() {
        alphas.sort();
    }

    let empty: Vec<Rational> = Vec::new();
    for ((chi, m), alphas) in &groups {
        if !chi.is_self_dual() {
            let mirror = groups.get(&(chi.inverse(), *m)).unwrap_or(&empty);
            if alphas != mirror || alphas.iter().any(|a| *a >= half) {
                return Membership::Reject(Condition::Range1);
            }
        } else if m % 2 == 0 {
            if alphas.iter().any(|a| *a >= half) {
                return Membership::Reject(Condition::Range2);
            }
        } else if alphas.iter().any(|a| *a >= one) {
            return Membership::Reject(Condition::Range3);
        }
    }

    let jord = jord_of_negative(&point.neg);
    for ((chi, m), alphas) in &groups {
        let split = alphas
            .iter()
            .position(|a| *a > half)
            .unwrap_or(alphas.len());
        let (k_list, l_list) = alphas.split_at(split);

        if m % 2 == 1 && !jord.contains(&JordanBlock::new(chi.clone(), *m)) && alphas.len() % 2 == 1
        {
            return Membership::Reject(Condition::A);
        }
        if k_list.len() >= 2 && k_list[k_list.len() - 2] == half {
            return Membership::Reject(Condition::B);
        }
        if l_list.len() >= 2 && l_list.windows(2).any(|w| w[0] == w[1]) {
            return Membership::Reject(Condition::C);
        }
        if k_list.iter().any(|a| l_list.iter().any(|b| *a + *b == one)) {
            return Membership::Reject(Condition::D);
        }
        if let Some(beta_1) = l_list.first() {
            let threshold = one - *beta_1;
            let count = k_list
                .iter()
                .filter(|a| **a > threshold && **a <= half)
                .count();
            if count % 2 != 0 {
                return Membership::Reject(Condition::E);
            }
        }
        for j in 0..l_list.len().saturating_sub(1) {
            let lower = one - l_list[j + 1];
            let upper = l_list[j];
            let count = k_list.iter().filter(|a| **a > lower && **a < upper).count();
            if count % 2 != 1 {
                return Membership::Reject(Condition::F);
            }
        }
    }
    Membership::Accept
}

/// The nilpotent orbit attached to a point: every GL block size twice,
/// every e-triple size twice, every strongly negative size once; a
/// partition of 2n+1.
pub fn orbit_partition(point: &UnitaryDualPoint) -> Partition {
    let mut parts = Vec::new();
    for gl in &point.neg.gl_blocks {
        parts.push(gl.size);
        parts.push(gl.size);
    }
    for triple in &point.e {
        parts.push(triple.m);
        parts.push(triple.m);
    }
    parts.extend_from_slice(point.neg.sn.lambda0_sizes());
    parts.extend_from_slice(point.neg.sn.trivial_sizes());
    let orbit = Partition::new(parts);
    debug_assert_eq!(orbit.total(), 2 * u64::from(point.n) + 1);
    orbit
}
