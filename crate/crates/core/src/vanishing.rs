//! Vanishing-bound partitions for Fourier coefficients and the verdict
//! engine.
//!
//! For a point of the unramified dual whose strongly negative core uses a
//! single character, the bound partition is assembled from the GL block
//! sizes (squared), the e-triple sizes (squared) and a collapsed block-size
//! product, then transposed and collapsed. The duality identity states that
//! this equals the Barbasch-Vogan dual of the point's orbit partition; it
//! is checked here literally, together with the closed exponent form of the
//! pure trivial-character case and a transpose-of-collapse identity used to
//! telescope block sizes.

use crate::bv::bv_dual_of;
use crate::dual::{classify_type, orbit_partition, ReprType, UnitaryDualPoint};
use crate::error::{Error, Result};
use crate::partition::{OrderRelation, Partition};
use crate::symplectic::{is_symplectic, sp_collapse};

/// Which bound construction produced a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    TypeI,
    TypeII,
    TypeIII,
    TypeIV,
}

/// A vanishing bound: a symplectic partition of 2n. Any symplectic
/// partition strictly dominating it supports no nonzero Fourier
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingBound {
    pub bound: Partition,
    pub source: BoundSource,
}

fn finish(bound: Partition, source: BoundSource) -> VanishingBound {
    debug_assert!(is_symplectic(&bound));
    VanishingBound { bound, source }
}

fn check_strictly_increasing(list: &[u32], name: &str) -> Result<()> {
    if list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedList(format!(
            "{name} must be strictly increasing, got {list:?}"
        )));
    }
    Ok(())
}

/// Bound for a pure trivial-character strongly negative core with block
/// sizes 2m_i+1: the duality image of that size partition. The closed
/// exponent form is asserted against the duality route.
pub fn bound_type_i(m_list: &[u32]) -> Result<VanishingBound> {
    if m_list.len() % 2 != 1 {
        return Err(Error::MalformedList(format!(
            "expected an odd number of entries, got {}",
            m_list.len()
        )));
    }
    check_strictly_increasing(m_list, "m-list")?;
    let sizes: Vec<u32> = m_list.iter().map(|&m| 2 * m + 1).collect();
    let bound = bv_dual_of(&Partition::new(sizes))?;
    debug_assert_eq!(bound, type_i_closed_form(m_list)?);
    Ok(finish(bound, BoundSource::TypeI))
}

/// Closed exponent form of the type-I bound: with l = 2s+1 entries,
/// [(2s+1)^(2m_1) (2s)^(2m_2+2-2m_1) (2s-1)^(2m_3-2m_2-2) ... down to
/// 1^(2m_l-2m_{l-1}-2)], alternating the +2/-2 correction.
pub fn type_i_closed_form(m_list: &[u32]) -> Result<Partition> {
    if m_list.len() % 2 != 1 {
        return Err(Error::MalformedList(format!(
            "expected an odd number of entries, got {}",
            m_list.len()
        )));
    }
    check_strictly_increasing(m_list, "m-list")?;
    let s = (m_list.len() - 1) / 2;
    let mut parts = Vec::new();
    let mut push = |value: usize, exponent: i64| {
        debug_assert!(exponent >= 0);
        for _ in 0..exponent {
            parts.push(value as u32);
        }
    };
    push(2 * s + 1, 2 * i64::from(m_list[0]));
    for j in 1..=2 * s {
        let prev = i64::from(m_list[j - 1]);
        let here = i64::from(m_list[j]);
        let exponent = if j % 2 == 1 {
            2 * here + 2 - 2 * prev
        } else {
            2 * here - 2 * prev - 2
        };
        push(2 * s + 1 - j, exponent);
    }
    Ok(Partition::new(parts))
}

/// Bound for a pure lambda0 strongly negative core with sizes 2n_i+1 next
/// to the forced trivial size-1 block: the duality image of the size
/// partition with the extra 1.
pub fn bound_type_ii(n_list: &[u32]) -> Result<VanishingBound> {
    if n_list.len() % 2 != 0 {
        return Err(Error::MalformedList(format!(
            "expected an even number of entries, got {}",
            n_list.len()
        )));
    }
    check_strictly_increasing(n_list, "n-list")?;
    let mut sizes: Vec<u32> = n_list.iter().map(|&n| 2 * n + 1).collect();
    sizes.push(1);
    let bound = bv_dual_of(&Partition::new(sizes))?;
    Ok(finish(bound, BoundSource::TypeII))
}

/// Bound for a point whose strongly negative core uses only the trivial
/// character (sizes 2m_1+1 < ... < 2m_l+1): collapse the sizes above the
/// smallest, adjoin the squared GL and e sizes and the even part 2m_1,
/// transpose and collapse.
pub fn bound_type_iii(point: &UnitaryDualPoint) -> Result<VanishingBound> {
    let repr = classify_type(point);
    if !matches!(repr, ReprType::TypeI | ReprType::TypeIII) {
        return Err(Error::WrongType {
            expected: "I or III".into(),
            found: repr.to_string(),
        });
    }
    let trivial = point.neg.sn.trivial_sizes();
    let upper = Partition::new(trivial[1..].to_vec());
    let mut parts = squared_sizes(point);
    parts.extend_from_slice(sp_collapse(&upper)?.parts());
    if trivial[0] > 1 {
        parts.push(trivial[0] - 1);
    }
    let bound = sp_collapse(&Partition::new(parts).transpose())?;
    let source = if repr == ReprType::TypeI {
        BoundSource::TypeI
    } else {
        BoundSource::TypeIII
    };
    Ok(finish(bound, source))
}

/// Bound for a point whose strongly negative core is lambda0 blocks next to
/// the single trivial size-1 block: collapse the lambda0 sizes, adjoin the
/// squared GL and e sizes, transpose and collapse.
pub fn bound_type_iv(point: &UnitaryDualPoint) -> Result<VanishingBound> {
    let repr = classify_type(point);
    if !matches!(repr, ReprType::TypeII | ReprType::TypeIV) {
        return Err(Error::WrongType {
            expected: "II or IV".into(),
            found: repr.to_string(),
        });
    }
    let lambda = Partition::new(point.neg.sn.lambda0_sizes().to_vec());
    let mut parts = squared_sizes(point);
    parts.extend_from_slice(sp_collapse(&lambda)?.parts());
    let bound = sp_collapse(&Partition::new(parts).transpose())?;
    let source = if repr == ReprType::TypeII {
        BoundSource::TypeII
    } else {
        BoundSource::TypeIV
    };
    Ok(finish(bound, source))
}

/// Each GL block size twice and each e-triple size twice.
fn squared_sizes(point: &UnitaryDualPoint) -> Vec<u32> {
    let mut parts = Vec::new();
    for gl in &point.neg.gl_blocks {
        parts.push(gl.size);
        parts.push(gl.size);
    }
    for triple in &point.e {
        parts.push(triple.m);
        parts.push(triple.m);
    }
    parts
}

/// The type-appropriate bound of a point of type I-IV.
pub fn bound_for(point: &UnitaryDualPoint) -> Result<VanishingBound> {
    match classify_type(point) {
        ReprType::TypeI | ReprType::TypeIII => bound_type_iii(point),
        ReprType::TypeII | ReprType::TypeIV => bound_type_iv(point),
        ReprType::Mixed => Err(Error::WrongType {
            expected: "I-IV".into(),
            found: "mixed".into(),
        }),
    }
}

/// The duality identity: the type-appropriate bound equals the
/// Barbasch-Vogan dual of the orbit partition. For types II and IV the
/// forced size-1 block is already part of the orbit partition.
pub fn verify_duality_identity(point: &UnitaryDualPoint) -> Result<bool> {
    let bound = bound_for(point)?;
    let orbit = orbit_partition(point);
    Ok(bound.bound == bv_dual_of(&orbit)?)
}

/// Transpose-of-collapse identity for shifted odd sizes. For a strictly
/// increasing list m_1 < ... < m_l of odd length l = 2s+1 >= 5, the
/// transpose of the collapse of [prod_{i>=4}(2m_i-2m_2-1)] joined with
/// (2m_3-2m_2-2) equals
/// [(2s-1)^(2m_3-2m_2-2) (2s-2)^(2m_4+2-2m_3) ... 1^(2m_l-2m_{l-1}-2)].
/// Returns whether the two sides agree.
pub fn eq424_identity(m_list: &[u32]) -> Result<bool> {
    if m_list.len() % 2 != 1 || m_list.len() < 5 {
        return Err(Error::MalformedList(format!(
            "expected an odd number of entries >= 5, got {}",
            m_list.len()
        )));
    }
    check_strictly_increasing(m_list, "m-list")?;
    let s = (m_list.len() - 1) / 2;
    let m = |i: usize| i64::from(m_list[i - 1]); // 1-based

    let shifted: Vec<u32> = (4..=m_list.len())
        .map(|i| (2 * m(i) - 2 * m(2) - 1) as u32)
        .collect();
    let mut parts = sp_collapse(&Partition::new(shifted))?.parts().to_vec();
    let extra = 2 * m(3) - 2 * m(2) - 2;
    if extra > 0 {
        parts.push(extra as u32);
    }
    let lhs = Partition::new(parts).transpose();

    let mut rhs_parts = Vec::new();
    for j in 0..=(2 * s - 2) {
        let value = (2 * s - 1 - j) as u32;
        let exponent = if j % 2 == 0 {
            2 * m(j + 3) - 2 * m(j + 2) - 2
        } else {
            2 * m(j + 3) + 2 - 2 * m(j + 2)
        };
        debug_assert!(exponent >= 0);
        for _ in 0..exponent {
            rhs_parts.push(value);
        }
    }
    Ok(lhs == Partition::new(rhs_parts))
}

/// Ruling mode for a candidate partition against a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictMode {
    Dominance,
    Lex,
}

/// Outcome of the vanishing test. The lex verdict is only issued for
/// candidates dominance-incomparable to the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    ForcedVanishDominance,
    ForcedVanishLex,
    NotDetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Verdict::ForcedVanishDominance => "ForcedVanishDominance",
            Verdict::ForcedVanishLex => "ForcedVanishLex",
            Verdict::NotDetermined => "NotDetermined",
        };
        write!(f, "{name}")
    }
}

/// Tests whether a symplectic candidate partition is forced to vanish
/// against a bound of the same total: strict dominance in `Dominance` mode;
/// dominance-incomparability plus strict lexicographic excess in `Lex`
/// mode. Everything else is undetermined.
pub fn verdict(candidate: &Partition, bound: &Partition, mode: VerdictMode) -> Result<Verdict> {
    if !is_symplectic(candidate) {
        return Err(Error::NotSymplectic(candidate.to_string()));
    }
    if candidate.total() != bound.total() {
        return Err(Error::MalformedList(format!(
            "candidate total {} differs from bound total {}",
            candidate.total(),
            bound.total()
        )));
    }
    let dom = candidate.dominance_compare(bound);
    Ok(match mode {
        VerdictMode::Dominance => {
            if dom == OrderRelation::Greater {
                Verdict::ForcedVanishDominance
            } else {
                Verdict::NotDetermined
            }
        }
        VerdictMode::Lex => {
            if dom == OrderRelation::Incomparable
                && candidate.lex_compare(bound) == OrderRelation::Greater
            {
                Verdict::ForcedVanishLex
            } else {
                Verdict::NotDetermined
            }
        }
    })
}
