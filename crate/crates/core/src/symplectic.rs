//! Symplectic partitions and the collapse/expansion recipes.
//!
//! Partitions of 2n whose odd parts occur with even multiplicity parameterize
//! the nilpotent orbits of sp_2n; the *special* ones additionally have an
//! even number of even parts between consecutive odd parts and above the
//! largest odd part. The collapse of an arbitrary partition of 2n is the
//! dominance-largest symplectic partition below it; the expansion of a
//! symplectic partition is the dominance-smallest special symplectic
//! partition above it. Both are computed by the pairwise replacement recipes
//! of Collingwood-McGovern (Theorems 6.3.8 and 6.3.9) and are cross-checked
//! against exhaustive-search oracles.

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Cap on the brute-force oracles; every partition of the total is scanned.
pub const ORACLE_CAP: u64 = 24;

/// True iff the total is even and every odd part has even multiplicity.
pub fn is_symplectic(p: &Partition) -> bool {
    if p.total() % 2 != 0 {
        return false;
    }
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let value = parts[i];
        let mut mult = 1;
        while i + mult < parts.len() && parts[i + mult] == value {
            mult += 1;
        }
        if value % 2 == 1 && mult % 2 == 1 {
            return false;
        }
        i += mult;
    }
    true
}

/// True iff a symplectic partition is special: an even number of even parts
/// lies between any two consecutive odd parts, and an even number of even
/// parts exceeds the largest odd part. Both conditions are vacuous when
/// there are no odd parts.
pub fn is_special_symplectic(p: &Partition) -> Result<bool> {
    if !is_symplectic(p) {
        return Err(Error::NotSymplectic(p.to_string()));
    }
    let odds: Vec<u32> = p.parts().iter().copied().filter(|v| v % 2 == 1).collect();
    if odds.is_empty() {
        return Ok(true);
    }
    let evens_above = |lo: u32, hi: Option<u32>| -> usize {
        p.parts()
            .iter()
            .filter(|&&v| v % 2 == 0 && v > lo && hi.is_none_or(|h| v < h))
            .count()
    };
    if evens_above(odds[0], None) % 2 != 0 {
        return Ok(false);
    }
    for w in odds.windows(2) {
        if evens_above(w[1], Some(w[0])) % 2 != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Symplectic collapse: list the odd parts in non-increasing order with
/// multiplicity, pair them consecutively, and replace each unequal pair
/// (a, b) by (a-1, b+1). Requires an even total; idempotent on symplectic
/// input.
pub fn sp_collapse(p: &Partition) -> Result<Partition> {
    if p.total() % 2 != 0 {
        return Err(Error::OddTotal(p.total()));
    }
    let mut out: Vec<u32> = p.parts().iter().copied().filter(|v| v % 2 == 0).collect();
    let odds: Vec<u32> = p.parts().iter().copied().filter(|v| v % 2 == 1).collect();
    // An even total forces an even number of odd parts.
    debug_assert_eq!(odds.len() % 2, 0);
    for pair in odds.chunks(2) {
        if pair[0] > pair[1] {
            out.push(pair[0] - 1);
            out.push(pair[1] + 1);
        } else {
            out.extend_from_slice(pair);
        }
    }
    Ok(Partition::new(out))
}

/// Symplectic expansion: with parts p_1 >= p_2 >= ... (1-indexed), find every
/// i such that p_2i = p_2i+1 is odd and p_2i-1 differs, and replace that pair
/// by (p_2i + 1, p_2i+1 - 1). All replacements are read off the original
/// sequence; zeros are erased. Identity on special input.
pub fn sp_expand(p: &Partition) -> Result<Partition> {
    if !is_symplectic(p) {
        return Err(Error::NotSymplectic(p.to_string()));
    }
    let parts = p.parts();
    let mut out = parts.to_vec();
    let mut i = 1;
    // 1-indexed pair (p_{2i}, p_{2i+1}) sits at 0-indexed (2i-1, 2i).
    while 2 * i < parts.len() {
        let a = parts[2 * i - 1];
        let b = parts[2 * i];
        if a == b && a % 2 == 1 && parts[2 * i - 2] != a {
            out[2 * i - 1] = a + 1;
            out[2 * i] = b - 1;
        }
        i += 1;
    }
    Ok(Partition::new(out))
}

/// Exhaustive-search reference for [`sp_collapse`]: the unique
/// dominance-largest symplectic partition weakly below `p`. Errors if the
/// extremum is not unique, which would contradict the theory.
pub fn sp_collapse_oracle(p: &Partition) -> Result<Partition> {
    if p.total() % 2 != 0 {
        return Err(Error::OddTotal(p.total()));
    }
    check_oracle_cap(p.total())?;
    let candidates: Vec<Partition> = enumerate_partitions(p.total())?
        .filter(|q| is_symplectic(q) && p.dominates(q))
        .collect();
    unique_extremum(p, &candidates, |a, b| a.dominates(b))
}

/// Exhaustive-search reference for [`sp_expand`]: the unique
/// dominance-smallest special symplectic partition weakly above `p`.
pub fn sp_expand_oracle(p: &Partition) -> Result<Partition> {
    if !is_symplectic(p) {
        return Err(Error::NotSymplectic(p.to_string()));
    }
    check_oracle_cap(p.total())?;
    let mut candidates = Vec::new();
    for q in enumerate_partitions(p.total())? {
        if is_symplectic(&q) && is_special_symplectic(&q)? && q.dominates(p) {
            candidates.push(q);
        }
    }
    unique_extremum(p, &candidates, |a, b| b.dominates(a))
}

fn check_oracle_cap(total: u64) -> Result<()> {
    if total > ORACLE_CAP {
        return Err(Error::CapExceeded {
            total,
            cap: ORACLE_CAP,
        });
    }
    Ok(())
}

/// Picks the unique candidate related to every other one under `beats`
/// (weak dominance for a maximum, reversed for a minimum).
fn unique_extremum(
    input: &Partition,
    candidates: &[Partition],
    beats: impl Fn(&Partition, &Partition) -> bool,
) -> Result<Partition> {
    let extrema: Vec<&Partition> = candidates
        .iter()
        .filter(|c| candidates.iter().all(|other| beats(c, other)))
        .collect();
    match extrema[..] {
        [unique] => Ok(unique.clone()),
        _ => Err(Error::NonUniqueExtremum {
            input: input.to_string(),
            found: extrema.len(),
        }),
    }
}

/// All symplectic partitions of the even number `two_n`, in decreasing
/// lexicographic order.
pub fn enumerate_symplectic(two_n: u64) -> Result<impl Iterator<Item = Partition>> {
    if two_n % 2 != 0 {
        return Err(Error::OddTotal(two_n));
    }
    Ok(enumerate_partitions(two_n)?.filter(is_symplectic))
}
