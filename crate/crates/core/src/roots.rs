//! Positive roots of `A_n` as integer intervals.
//!
//! The root `e_i + e_{i+1} + ... + e_j` is stored as the closed interval
//! `[i, j]` together with the ambient rank `n`, so that mixing roots of
//! different lattices is reported instead of silently computed.

use std::fmt;

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    lo: usize,
    hi: usize,
    rank: usize,
}

impl Root {
    pub fn new(lo: usize, hi: usize, rank: usize) -> Result<Self> {
        if lo == 0 || lo > hi || hi > rank {
            return Err(Error::InvalidRoot { lo, hi, rank });
        }
        Ok(Self { lo, hi, rank })
    }

    /// The simple root `e_i`.
    pub fn simple(i: usize, rank: usize) -> Result<Self> {
        Self::new(i, i, rank)
    }

    /// Start of the support, i.e. the initial point of the root.
    pub fn lo(&self) -> usize {
        self.lo
    }

    /// End of the support.
    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simple(&self) -> bool {
        self.lo == self.hi
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains(&self, i: usize) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn support(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    /// Coefficients in the simple-root basis, indexed `0..rank`.
    pub fn coefficients(&self) -> Vec<i64> {
        (1..=self.rank).map(|i| i64::from(self.contains(i))).collect()
    }

    /// The same root viewed in a lattice of a different rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self> {
        Self::new(self.lo, self.hi, rank)
    }

    fn check_rank(&self, other: &Root) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_simple() {
            write!(f, "e_{}", self.lo)
        } else {
            write!(f, "e_{{{},{}}}", self.lo, self.hi)
        }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(2)?;
        tup.serialize_element(&self.lo)?;
        tup.serialize_element(&self.hi)?;
        tup.end()
    }
}

/// A root together with a sign, produced transiently by mutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedRoot {
    pub root: Root,
    pub sign: i8,
}

impl SignedRoot {
    /// Recognizes `±(e_i + ... + e_j)` from simple-root coefficients.
    pub fn from_coefficients(coeffs: &[i64]) -> Option<Self> {
        let rank = coeffs.len();
        let first = coeffs.iter().position(|&c| c != 0)?;
        let sign = coeffs[first];
        if sign != 1 && sign != -1 {
            return None;
        }
        let last = coeffs.iter().rposition(|&c| c != 0)?;
        if coeffs[first..=last].iter().any(|&c| c != sign) {
            return None;
        }
        let root = Root::new(first + 1, last + 1, rank).ok()?;
        Some(Self { root, sign: sign as i8 })
    }

    /// Drops the sign.
    pub fn positive(self) -> Root {
        self.root
    }
}

/// Value of the Seifert form on two positive roots.
///
/// Uses the closed case table: `1` when `b.lo <= a.lo <= b.hi <= a.hi`,
/// `-1` when `a.lo <= b.lo - 1 <= a.hi < b.hi`, and `0` otherwise.
pub fn seifert(a: &Root, b: &Root) -> Result<i32> {
    a.check_rank(b)?;
    Ok(seifert_unchecked(a, b))
}

pub(crate) fn seifert_unchecked(a: &Root, b: &Root) -> i32 {
    if b.lo <= a.lo && a.lo <= b.hi && b.hi <= a.hi {
        1
    } else if a.lo < b.lo && b.lo - 1 <= a.hi && a.hi < b.hi {
        -1
    } else {
        0
    }
}

/// Symmetrized Seifert form, the Cartan pairing.
pub fn cartan(a: &Root, b: &Root) -> Result<i32> {
    a.check_rank(b)?;
    Ok(seifert_unchecked(a, b) + seifert_unchecked(b, a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportRelation {
    Disjoint,
    AContainsB,
    BContainsA,
    Equal,
    Crossing,
}

impl fmt::Display for SupportRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Disjoint => "disjoint",
            Self::AContainsB => "nested (first contains second)",
            Self::BContainsA => "nested (second contains first)",
            Self::Equal => "equal",
            Self::Crossing => "crossing",
        };
        f.write_str(s)
    }
}

pub fn support_relation(a: &Root, b: &Root) -> Result<SupportRelation> {
    a.check_rank(b)?;
    Ok(support_relation_unchecked(a, b))
}

pub(crate) fn support_relation_unchecked(a: &Root, b: &Root) -> SupportRelation {
    if a.lo == b.lo && a.hi == b.hi {
        SupportRelation::Equal
    } else if a.hi < b.lo || b.hi < a.lo {
        SupportRelation::Disjoint
    } else if a.lo <= b.lo && b.hi <= a.hi {
        SupportRelation::AContainsB
    } else if b.lo <= a.lo && a.hi <= b.hi {
        SupportRelation::BContainsA
    } else {
        SupportRelation::Crossing
    }
}

/// All positive roots of `A_n`, ordered by `(lo, hi)`.
pub fn positive_roots(rank: usize) -> Vec<Root> {
    let mut out = Vec::with_capacity(rank * (rank + 1) / 2);
    for lo in 1..=rank {
        for hi in lo..=rank {
            out.push(Root { lo, hi, rank });
        }
    }
    out
}
