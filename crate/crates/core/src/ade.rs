//! ADE labels shared by the group side and the singularity side.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest rank accepted for the infinite A and D families.
pub const MAX_RANK: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    D,
    E6,
    E7,
    E8,
}

/// A validated family/rank pair such as `A3`, `D5` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdeType {
    family: Family,
    rank: u32,
}

impl AdeType {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_RANK).contains(&rank),
            Family::D => (4..=MAX_RANK).contains(&rank),
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
        };
        if !ok {
            return Err(Error::usage(format!(
                "rank {rank} out of range for family {family:?}"
            )));
        }
        Ok(AdeType { family, rank })
    }

    pub fn a(rank: u32) -> Result<Self> {
        Self::new(Family::A, rank)
    }

    pub fn d(rank: u32) -> Result<Self> {
        Self::new(Family::D, rank)
    }

    pub fn e6() -> Self {
        AdeType { family: Family::E6, rank: 6 }
    }

    pub fn e7() -> Self {
        AdeType { family: Family::E7, rank: 7 }
    }

    pub fn e8() -> Self {
        AdeType { family: Family::E8, rank: 8 }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Order of the corresponding binary polyhedral group.
    pub fn group_order(&self) -> usize {
        let n = self.rank as usize;
        match self.family {
            Family::A => n + 1,
            Family::D => 4 * (n - 2),
            Family::E6 => 24,
            Family::E7 => 48,
            Family::E8 => 120,
        }
    }

    /// Coxeter number of the root system.
    pub fn coxeter_number(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => n + 1,
            Family::D => 2 * n - 2,
            Family::E6 => 12,
            Family::E7 => 18,
            Family::E8 => 30,
        }
    }

    /// Every type with rank at most `max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: u32) -> Vec<AdeType> {
        let max_rank = max_rank.min(MAX_RANK);
        let mut out: Vec<AdeType> = (1..=max_rank).map(|n| AdeType { family: Family::A, rank: n }).collect();
        out.extend((4..=max_rank).map(|n| AdeType { family: Family::D, rank: n }));
        for e in [Self::e6(), Self::e7(), Self::e8()] {
            if e.rank <= max_rank {
                out.push(e);
            }
        }
        out
    }

    /// Parses a family name with an optional separate rank: `("A", Some(3))`,
    /// `("E8", None)`, `("e", Some(7))`.
    pub fn from_parts(family: &str, rank: Option<u32>) -> Result<Self> {
        let f = family.trim().to_ascii_uppercase();
        match (f.as_str(), rank) {
            ("A", Some(r)) => Self::a(r),
            ("D", Some(r)) => Self::d(r),
            ("E", Some(6)) | ("E6", None | Some(6)) => Ok(Self::e6()),
            ("E", Some(7)) | ("E7", None | Some(7)) => Ok(Self::e7()),
            ("E", Some(8)) | ("E8", None | Some(8)) => Ok(Self::e8()),
            ("A" | "D", None) => Err(Error::usage(format!("family {f} needs a rank"))),
            _ => f.parse::<AdeType>().and_then(|t| match rank {
                Some(r) if r != t.rank => Err(Error::usage(format!("rank mismatch for {t}"))),
                _ => Ok(t),
            }),
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::E6 => f.write_str("E6"),
            Family::E7 => f.write_str("E7"),
            Family::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::usage(format!("unknown ADE type {s:?}"));
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let rank: u32 = tail.parse().map_err(|_| bad())?;
        match head.to_ascii_uppercase().as_str() {
            "A" => Self::a(rank),
            "D" => Self::d(rank),
            "E" => match rank {
                6 => Ok(Self::e6()),
                7 => Ok(Self::e7()),
                8 => Ok(Self::e8()),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

impl Serialize for AdeType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
