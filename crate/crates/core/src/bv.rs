//! Barbasch-Vogan duality from so_2n+1-type partitions to sp_2n-type
//! partitions: eta(q) = ((q^-)_Sp)^t, where q^- decrements the smallest part
//! and the collapse is symplectic. The collapse-then-transpose order follows
//! the duality's definition for this pair of Lie types.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symplectic::sp_collapse;

/// A partition of an odd number whose even parts occur with even
/// multiplicity; these parameterize nilpotent orbits of so_2n+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddOrthogonalPartition(Partition);

impl OddOrthogonalPartition {
    pub fn new(p: Partition) -> Result<Self> {
        if p.total() % 2 == 0 {
            return Err(Error::NotOddOrthogonal(p.to_string()));
        }
        let parts = p.parts();
        let mut i = 0;
        while i < parts.len() {
            let value = parts[i];
            let mut mult = 1;
            while i + mult < parts.len() && parts[i + mult] == value {
                mult += 1;
            }
            if value % 2 == 0 && mult % 2 == 1 {
                return Err(Error::NotOddOrthogonal(p.to_string()));
            }
            i += mult;
        }
        Ok(OddOrthogonalPartition(p))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.total()
    }
}

impl std::fmt::Display for OddOrthogonalPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Decrements the smallest part by one; a resulting zero is erased. The
/// total drops from 2n+1 to 2n.
pub fn q_minus(q: &OddOrthogonalPartition) -> Partition {
    let mut parts = q.partition().parts().to_vec();
    if let Some(last) = parts.last_mut() {
        *last -= 1;
    }
    Partition::new(parts)
}

/// The duality map: transpose of the symplectic collapse of q^-. Sends a
/// partition of 2n+1 to a partition of 2n.
pub fn bv_dual(q: &OddOrthogonalPartition) -> Partition {
    let collapsed = sp_collapse(&q_minus(q)).expect("q^- always has even total");
    collapsed.transpose()
}

/// Convenience: validate and apply `bv_dual` in one step.
pub fn bv_dual_of(p: &Partition) -> Result<Partition> {
    Ok(bv_dual(&OddOrthogonalPartition::new(p.clone())?))
}
