//! Integer partitions: the universal currency of nilpotent-orbit combinatorics.
//!
//! A partition is a non-increasing sequence of positive integers. Two
//! orderings are provided: the dominance (natural) ordering, a partial order
//! compared through prefix sums of the Young diagram rows, and the
//! lexicographic ordering, which is total and refines dominance within a
//! fixed total.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Cap on `enumerate_partitions`; p(40) = 37338 keeps exhaustive scans cheap.
pub const ENUMERATION_CAP: u64 = 40;

/// A partition: non-increasing positive parts with a cached total.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    total: u64,
}

impl Partition {
    /// Builds the canonical partition from arbitrary parts: zeros are
    /// dropped and the remainder is sorted non-increasingly.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let total = parts.iter().map(|&p| u64::from(p)).sum();
        Partition { parts, total }
    }

    /// The unique partition of 0.
    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            total: 0,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-indexed), with zero padding past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of `value` among the parts.
    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Column-conjugate partition of the Young diagram.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let width = self.parts[0] as usize;
        let mut cols = Vec::with_capacity(width);
        for j in 0..width {
            let count = self.parts.iter().take_while(|&&p| p as usize > j).count();
            cols.push(count as u32);
        }
        Partition::new(cols)
    }

    /// Multiset union of the parts; totals add.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Componentwise sum with zero padding; the result of adding two
    /// non-increasing sequences is again non-increasing.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts: Vec<u32> = (0..len).map(|i| self.part(i) + other.part(i)).collect();
        Partition::new(parts)
    }

    /// Dominance comparison via prefix sums, zero-padded to a common length.
    /// `Greater` means every prefix sum of `self` is >= that of `other` with
    /// at least one strict inequality; crossed prefix sums give
    /// `Incomparable`. Totals need not agree.
    pub fn dominance_compare(&self, other: &Partition) -> OrderRelation {
        let len = self.len().max(other.len());
        let mut sum_self = 0u64;
        let mut sum_other = 0u64;
        let mut some_greater = false;
        let mut some_less = false;
        for i in 0..len {
            sum_self += u64::from(self.part(i));
            sum_other += u64::from(other.part(i));
            if sum_self > sum_other {
                some_greater = true;
            } else if sum_self < sum_other {
                some_less = true;
            }
        }
        match (some_greater, some_less) {
            (false, false) => OrderRelation::Equal,
            (true, false) => OrderRelation::Greater,
            (false, true) => OrderRelation::Less,
            (true, true) => OrderRelation::Incomparable,
        }
    }

    /// True when `self` dominates `other` weakly (Greater or Equal).
    pub fn dominates(&self, other: &Partition) -> bool {
        matches!(
            self.dominance_compare(other),
            OrderRelation::Greater | OrderRelation::Equal
        )
    }

    /// Lexicographic comparison: the first differing part decides; a proper
    /// prefix is smaller. This is a total order, so the result is never
    /// `Incomparable`.
    pub fn lex_compare(&self, other: &Partition) -> OrderRelation {
        match self.parts.cmp(&other.parts) {
            std::cmp::Ordering::Less => OrderRelation::Less,
            std::cmp::Ordering::Equal => OrderRelation::Equal,
            std::cmp::Ordering::Greater => OrderRelation::Greater,
        }
    }
}

/// `Ord` on `Partition` is the lexicographic (total) ordering. Dominance is
/// only available through [`Partition::dominance_compare`].
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Outcome of a partition comparison. `Incomparable` only arises from
/// dominance comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderRelation {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl fmt::Display for Partition {
    /// Exponent notation with repeated parts collapsed: `[5^2 4^4 2^3 1^2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let value = self.parts[i];
            let mut mult = 1;
            while i + mult < self.parts.len() && self.parts[i + mult] == value {
                mult += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            if mult == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{mult}")?;
            }
            first = false;
            i += mult;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts either a comma list `5,5,4,1` or exponent notation
    /// `[5^2 4 1]`; both forms of the same multiset parse identically.
    fn from_str(text: &str) -> Result<Partition> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        if let Some(inner) = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
        {
            let mut parts = Vec::new();
            for token in inner.split_whitespace() {
                let (value, mult) = match token.split_once('^') {
                    Some((v, m)) => (parse_part(v)?, parse_exponent(m)?),
                    None => (parse_part(token)?, 1),
                };
                for _ in 0..mult {
                    parts.push(value);
                }
            }
            return Ok(Partition::new(parts));
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            parts.push(parse_part(token.trim())?);
        }
        Ok(Partition::new(parts))
    }
}

fn parse_part(token: &str) -> Result<u32> {
    let value: i64 = token
        .parse()
        .map_err(|_| Error::Parse(format!("bad part {token:?}")))?;
    if value <= 0 {
        return Err(Error::Parse(format!("part must be positive, got {value}")));
    }
    u32::try_from(value).map_err(|_| Error::Parse(format!("part {value} out of range")))
}

fn parse_exponent(token: &str) -> Result<usize> {
    let value: i64 = token
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent {token:?}")))?;
    if value <= 0 {
        return Err(Error::Parse(format!(
            "exponent must be positive, got {value}"
        )));
    }
    Ok(value as usize)
}

/// All partitions of `n` in decreasing lexicographic order, each exactly
/// once, starting from `[n]` and ending at `[1^n]`.
pub fn enumerate_partitions(n: u64) -> Result<PartitionIter> {
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            total: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(PartitionIter {
        next: Some(if n == 0 { Vec::new() } else { vec![n as u32] }),
    })
}

/// Iterator over partitions in decreasing lexicographic order.
pub struct PartitionIter {
    next: Option<Vec<u32>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = lex_successor(&current);
        let total = current.iter().map(|&p| u64::from(p)).sum();
        Some(Partition {
            parts: current,
            total,
        })
    }
}

/// The next partition below `parts` in lexicographic order: decrement the
/// last part exceeding 1 and greedily refill the freed weight.
fn lex_successor(parts: &[u32]) -> Option<Vec<u32>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let mut next: Vec<u32> = parts[..pivot].to_vec();
    let cap = parts[pivot] - 1;
    let mut remaining = u64::from(parts[pivot]) + (parts.len() - pivot - 1) as u64;
    while remaining > 0 {
        let piece = remaining.min(u64::from(cap)) as u32;
        next.push(piece);
        remaining -= u64::from(piece);
    }
    Some(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn parse_exponent_notation() {
        let q = p("[5^2 4^4 2^3 1^2]");
        assert_eq!(q.parts(), &[5, 5, 4, 4, 4, 4, 2, 2, 2, 1, 1]);
        assert_eq!(q.total(), 34);
    }

    #[test]
    fn parse_empty_and_comma_forms() {
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("[]"), Partition::empty());
        assert_eq!(p("3,1,2").parts(), &[3, 2, 1]);
        assert_eq!(p("5,5,4,1"), p("[5^2 4 1]"));
    }

    #[test]
    fn parse_rejects_nonpositive_parts() {
        assert!("0,1".parse::<Partition>().is_err());
        assert!("[3 -1]".parse::<Partition>().is_err());
        assert!("[2^0]".parse::<Partition>().is_err());
        assert!("[x]".parse::<Partition>().is_err());
    }

    #[test]
    fn display_collapses_repeats() {
        assert_eq!(p("5,5,4,4,4,4,2,2,2,1,1").to_string(), "[5^2 4^4 2^3 1^2]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!(p("3,2,1").to_string(), "[3 2 1]");
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("4").transpose(), p("1,1,1,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("4,4").transpose(), p("2,2,2,2"));
        assert_eq!(p("3,2").transpose(), p("2,2,1"));
    }

    #[test]
    fn concat_and_add() {
        assert_eq!(p("3,3").concat(&p("2")), p("3,3,2"));
        assert_eq!(p("4,1").concat(&Partition::empty()), p("4,1"));
        assert_eq!(p("4,1").concat(&p("3,3")), p("4,3,3,1"));
        assert_eq!(p("1,1,1").add(&p("1,1")), p("2,2,1"));
        assert_eq!(p("3,1").add(&Partition::empty()), p("3,1"));
        assert_eq!(p("3,1").add(&p("2,2,2")), p("5,3,2"));
    }

    #[test]
    fn dominance_cases() {
        assert_eq!(
            p("4,2").dominance_compare(&p("3,3")),
            OrderRelation::Greater
        );
        assert_eq!(p("3,3").dominance_compare(&p("3,3")), OrderRelation::Equal);
        // Prefix sums cross: 4 > 2 at k=1 but 7 < 8 at k=4.
        assert_eq!(
            p("4,1,1,1,1").dominance_compare(&p("2,2,2,2")),
            OrderRelation::Incomparable
        );
        assert_eq!(
            p("2,2,2,1,1").dominance_compare(&p("2,2,2,2")),
            OrderRelation::Less
        );
    }

    #[test]
    fn lex_cases() {
        assert_eq!(
            p("4,1,1,1,1").lex_compare(&p("2,2,2,2")),
            OrderRelation::Greater
        );
        assert_eq!(p("2,2").lex_compare(&p("2,2")), OrderRelation::Equal);
        assert_eq!(p("2,2").lex_compare(&p("2,2,1")), OrderRelation::Less);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let all: Vec<Partition> = enumerate_partitions(4).unwrap().collect();
        assert_eq!(all.len(), 5);
        let shown: Vec<String> = all.iter().map(|q| q.to_string()).collect();
        assert_eq!(shown, ["[4]", "[3 1]", "[2^2]", "[2 1^2]", "[1^4]"]);

        assert_eq!(enumerate_partitions(0).unwrap().count(), 1);
        assert_eq!(enumerate_partitions(10).unwrap().count(), 42);
        assert!(enumerate_partitions(ENUMERATION_CAP + 1).is_err());
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        let all: Vec<Partition> = enumerate_partitions(9).unwrap().collect();
        for w in all.windows(2) {
            assert_eq!(w[0].lex_compare(&w[1]), OrderRelation::Greater);
        }
    }
}
