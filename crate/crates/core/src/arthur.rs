//! Arthur parameters for Sp_2n and their local classification data.
//!
//! A parameter is a formal sum of pairwise distinct simple blocks (tau_i,
//! b_i) whose GL ranks weighted by the b_i sum to 2n+1, subject to the
//! parity rules (symplectic-type tau forces even b, orthogonal-type odd b)
//! and triviality of the product of central square classes. From a
//! parameter and per-block Satake data at an unramified place, the local
//! assembly produces a point of the unramified unitary dual; its attached
//! orbit recovers the partition of the parameter whenever all central
//! classes are trivial.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bv::{bv_dual, OddOrthogonalPartition};
use crate::character::UnramifiedCharacter;
use crate::dual::{
    check_uunr, ETriple, JordanBlock, Membership, NegativeData, StronglyNegativeData,
    UnitaryDualPoint,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::squareclass::{class_product, SquareClass};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualType {
    Symplectic,
    Orthogonal,
}

/// One simple block (tau, b): an opaque cuspidal label with its full GL
/// rank, self-duality type and central square class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleParameter {
    pub tau_id: String,
    pub gl_rank: u32,
    pub b: u32,
    pub dual_type: DualType,
    pub central_class: SquareClass,
}

/// A discrete Arthur parameter for Sp_2n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArthurParameter {
    pub n: u32,
    pub blocks: Vec<SimpleParameter>,
}

impl ArthurParameter {
    pub fn new(n: u32, blocks: Vec<SimpleParameter>) -> Self {
        ArthurParameter { n, blocks }
    }

    /// Accepts iff the rank sum, the parity constraints, pairwise
    /// distinctness of (tau_id, b), label coherence and the central
    /// square-class product condition all hold. The error names the first
    /// violated requirement.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParameter(msg));
        if self.n == 0 {
            return fail("ambient rank n must be positive".into());
        }
        if self.blocks.is_empty() {
            return fail("parameter has no blocks".into());
        }
        for block in &self.blocks {
            if block.gl_rank == 0 || block.b == 0 {
                return fail(format!(
                    "block {}: gl_rank and b must be positive",
                    block.tau_id
                ));
            }
            match block.dual_type {
                DualType::Symplectic => {
                    if block.b % 2 != 0 {
                        return fail(format!(
                            "block {}: symplectic type requires even b, got {}",
                            block.tau_id, block.b
                        ));
                    }
                    if block.gl_rank % 2 != 0 {
                        return fail(format!(
                            "block {}: symplectic type requires even GL rank, got {}",
                            block.tau_id, block.gl_rank
                        ));
                    }
                }
                DualType::Orthogonal => {
                    if block.b % 2 != 1 {
                        return fail(format!(
                            "block {}: orthogonal type requires odd b, got {}",
                            block.tau_id, block.b
                        ));
                    }
                }
            }
        }
        let rank_sum: u64 = self
            .blocks
            .iter()
            .map(|b| u64::from(b.gl_rank) * u64::from(b.b))
            .sum();
        let expected = 2 * u64::from(self.n) + 1;
        if rank_sum != expected {
            return fail(format!(
                "rank sum {rank_sum} differs from 2n+1 = {expected}"
            ));
        }
        for (i, a) in self.blocks.iter().enumerate() {
            for b in &self.blocks[i + 1..] {
                if a.tau_id == b.tau_id && a.b == b.b {
                    return fail(format!(
                        "blocks ({}, b={}) are not pairwise distinct",
                        a.tau_id, a.b
                    ));
                }
                if a.tau_id == b.tau_id
                    && (a.gl_rank, a.dual_type, a.central_class)
                        != (b.gl_rank, b.dual_type, b.central_class)
                {
                    return fail(format!(
                        "label {} reused with inconsistent rank, type or class",
                        a.tau_id
                    ));
                }
            }
        }
        let pairs: Vec<(SquareClass, u64)> = self
            .blocks
            .iter()
            .map(|b| (b.central_class, u64::from(b.b)))
            .collect();
        let product = class_product(&pairs);
        if !product.is_trivial() {
            return fail(format!(
                "central character condition fails: class product is {product}"
            ));
        }
        Ok(())
    }

    /// The partition attached to the parameter: b_i repeated gl_rank_i
    /// times; a partition of 2n+1 whose even parts automatically occur with
    /// even multiplicity.
    pub fn psi_partition(&self) -> Result<OddOrthogonalPartition> {
        self.validate()?;
        let mut parts = Vec::new();
        for block in &self.blocks {
            for _ in 0..block.gl_rank {
                parts.push(block.b);
            }
        }
        OddOrthogonalPartition::new(Partition::new(parts))
    }

    /// The global vanishing bound: the duality image of the attached
    /// partition. Any symplectic partition strictly above it supports no
    /// nonzero Fourier coefficient for the packet of this parameter.
    pub fn fc_bound(&self) -> Result<Partition> {
        Ok(bv_dual(&self.psi_partition()?))
    }
}

/// Shape of a block's local factor at the modeled place. A non-trivial
/// central square class restricts to the quadratic character lambda0 there;
/// a trivial class restricts to the trivial character.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockFamily {
    /// Symplectic type (even b): gl_rank/2 free slots, nothing forced.
    Symplectic,
    /// Orthogonal, even GL rank, trivial class: gl_rank/2 free slots.
    OrthogonalEvenTrivial,
    /// Orthogonal, even GL rank, non-trivial class: gl_rank/2 - 1 free
    /// slots plus the forced lambda0 and trivial characters.
    OrthogonalEvenNontrivial,
    /// Orthogonal, odd GL rank, trivial class: (gl_rank-1)/2 free slots
    /// plus the forced trivial character.
    OrthogonalOddTrivial,
    /// Orthogonal, odd GL rank, non-trivial class: (gl_rank-1)/2 free slots
    /// plus the forced lambda0.
    OrthogonalOddNontrivial,
}

/// Family of a block in a validated parameter.
pub fn block_family(block: &SimpleParameter) -> BlockFamily {
    match (
        block.dual_type,
        block.gl_rank % 2,
        block.central_class.is_trivial(),
    ) {
        (DualType::Symplectic, _, _) => BlockFamily::Symplectic,
        (DualType::Orthogonal, 0, true) => BlockFamily::OrthogonalEvenTrivial,
        (DualType::Orthogonal, 0, false) => BlockFamily::OrthogonalEvenNontrivial,
        (DualType::Orthogonal, _, true) => BlockFamily::OrthogonalOddTrivial,
        (DualType::Orthogonal, _, false) => BlockFamily::OrthogonalOddNontrivial,
    }
}

/// Number of free (character, exponent) slots the local data must supply
/// for a block.
pub fn free_slots(block: &SimpleParameter) -> usize {
    match block_family(block) {
        BlockFamily::Symplectic | BlockFamily::OrthogonalEvenTrivial => block.gl_rank as usize / 2,
        BlockFamily::OrthogonalEvenNontrivial => block.gl_rank as usize / 2 - 1,
        BlockFamily::OrthogonalOddTrivial | BlockFamily::OrthogonalOddNontrivial => {
            (block.gl_rank as usize - 1) / 2
        }
    }
}

/// One free slot of a block's local factor: the factor contributes the pair
/// nu^{beta} chi x nu^{-beta} chi^{-1}, recorded by its representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeEntry {
    pub character: UnramifiedCharacter,
    pub exponent: Rational,
}

impl SatakeEntry {
    pub fn new(character: UnramifiedCharacter, exponent: Rational) -> Self {
        SatakeEntry {
            character,
            exponent,
        }
    }
}

/// Per-block local Satake data, parallel to the parameter's block list.
/// Forced characters of the non-trivial-class and odd-rank families are
/// implicit and must not be listed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LocalSatakeData {
    pub blocks: Vec<Vec<SatakeEntry>>,
}

impl LocalSatakeData {
    pub fn new(blocks: Vec<Vec<SatakeEntry>>) -> Self {
        LocalSatakeData { blocks }
    }
}

/// Assembles the unitary-dual point of the unramified local component cut
/// out by a parameter and its Satake data.
///
/// The forced characters of each block land in a multiset of (character, b)
/// blocks; those with odd multiplicity form the strongly negative core, the
/// even-multiplicity residue and the zero-exponent slots pair off into GL
/// blocks of the negative part, and the positive-exponent slots become the
/// triples of **e**. The assembled point must pass the unitary membership
/// test; a rejection signals inconsistent local data.
pub fn build_local_data(
    psi: &ArthurParameter,
    local: &LocalSatakeData,
) -> Result<UnitaryDualPoint> {
    psi.validate()?;
    if local.blocks.len() != psi.blocks.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} local blocks for {} parameter blocks",
            local.blocks.len(),
            psi.blocks.len()
        )));
    }

    let half = Rational::new(1, 2);
    let mut forced: BTreeMap<JordanBlock, usize> = BTreeMap::new();
    let mut paired: BTreeMap<JordanBlock, usize> = BTreeMap::new();
    let mut e = Vec::new();

    for (block, entries) in psi.blocks.iter().zip(&local.blocks) {
        let expected = free_slots(block);
        if entries.len() != expected {
            return Err(Error::ShapeMismatch(format!(
                "block {} expects {expected} slots, got {}",
                block.tau_id,
                entries.len()
            )));
        }
        for entry in entries {
            if entry.exponent < Rational::zero() || entry.exponent >= half {
                return Err(Error::ShapeMismatch(format!(
                    "block {}: exponent {} outside [0, 1/2)",
                    block.tau_id, entry.exponent
                )));
            }
            if entry.exponent.is_zero() {
                *paired
                    .entry(JordanBlock::new(entry.character.clone(), block.b))
                    .or_default() += 1;
                *paired
                    .entry(JordanBlock::new(entry.character.inverse(), block.b))
                    .or_default() += 1;
            } else {
                e.push(ETriple::new(
                    entry.character.clone(),
                    block.b,
                    entry.exponent,
                ));
            }
        }
        let forced_chars: &[UnramifiedCharacter] = match block_family(block) {
            BlockFamily::Symplectic | BlockFamily::OrthogonalEvenTrivial => &[],
            BlockFamily::OrthogonalEvenNontrivial => {
                &[UnramifiedCharacter::Lambda0, UnramifiedCharacter::Trivial]
            }
            BlockFamily::OrthogonalOddTrivial => &[UnramifiedCharacter::Trivial],
            BlockFamily::OrthogonalOddNontrivial => &[UnramifiedCharacter::Lambda0],
        };
        for chi in forced_chars {
            *forced
                .entry(JordanBlock::new(chi.clone(), block.b))
                .or_default() += 1;
        }
    }

    // Odd-multiplicity forced blocks form the strongly negative core.
    let mut lambda0_sizes = Vec::new();
    let mut trivial_sizes = Vec::new();
    for (block, count) in &forced {
        if count % 2 == 1 {
            if block.character.is_lambda0() {
                lambda0_sizes.push(block.size);
            } else {
                trivial_sizes.push(block.size);
            }
        }
    }
    lambda0_sizes.sort_unstable();
    trivial_sizes.sort_unstable();
    let sn = StronglyNegativeData::new(lambda0_sizes, trivial_sizes).map_err(|e| {
        Error::ShapeMismatch(format!(
            "forced central characters do not assemble into strongly negative data ({e})"
        ))
    })?;

    // The even residue of the forced multiset joins the zero-exponent pairs.
    for (block, count) in forced {
        if count > 1 {
            *paired.entry(block).or_default() += count & !1;
        }
    }
    let gl_blocks = halve_into_gl_blocks(paired)?;

    let point = UnitaryDualPoint::new(psi.n, e, NegativeData::new(sn, gl_blocks))
        .map_err(|e| Error::ShapeMismatch(format!("assembled point is inconsistent ({e})")))?;
    match check_uunr(&point) {
        Membership::Accept => Ok(point),
        Membership::Reject(condition) => Err(Error::MembershipRejected(condition)),
    }
}

/// Pairs a multiset of Jordan blocks with their inverses, one GL block per
/// pair, oriented toward the smaller character key.
fn halve_into_gl_blocks(mut counts: BTreeMap<JordanBlock, usize>) -> Result<Vec<JordanBlock>> {
    let keys: Vec<JordanBlock> = counts.keys().cloned().collect();
    let mut gl = Vec::new();
    for key in keys {
        loop {
            let available = counts.get(&key).copied().unwrap_or(0);
            if available == 0 {
                break;
            }
            let partner = JordanBlock::new(key.character.inverse(), key.size);
            if partner == key {
                if available % 2 != 0 {
                    return Err(Error::ShapeMismatch(format!(
                        "self-inverse block {key} left with odd multiplicity"
                    )));
                }
                counts.insert(key.clone(), 0);
                for _ in 0..available / 2 {
                    gl.push(key.clone());
                }
            } else {
                let partner_count = counts.get(&partner).copied().unwrap_or(0);
                if partner_count == 0 {
                    return Err(Error::ShapeMismatch(format!(
                        "block {key} has no inverse partner {partner}"
                    )));
                }
                *counts.get_mut(&key).unwrap() -= 1;
                *counts.get_mut(&partner).unwrap() -= 1;
                gl.push(key.clone().min(partner));
            }
        }
    }
    gl.sort();
    Ok(gl)
}
