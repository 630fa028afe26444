//! Resource caps.
//!
//! Every potentially explosive computation takes a [`Caps`] value and fails
//! with [`crate::Error::CapExceeded`] instead of exhausting memory or time.
//! The defaults are sized so that the whole default verification roster runs
//! comfortably on a desktop machine.

use bipoly::FactorCaps;

/// Limits applied to group construction and path enumeration.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Maximum number of group elements that will be constructed.
    pub max_group_size: u64,
    /// Maximum diagram rank (number of generators).
    pub max_rank: usize,
    /// Maximum number of paths visited by a single enumeration or closure.
    pub max_paths: u64,
    /// Maximum number of elements in an explicitly materialised interval.
    pub max_interval: usize,
    /// Maximum number of distinct path vertices allowed in an isomorphism
    /// search between two flipclasses.
    pub max_iso_elements: usize,
    /// Caps forwarded to polynomial factoring.
    pub factor: FactorCaps,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_group_size: 1_000_000,
            max_rank: 7,
            max_paths: 10_000_000,
            max_interval: 10_000,
            max_iso_elements: 200,
            factor: FactorCaps::default(),
        }
    }
}

impl Caps {
    /// Caps with every limit raised far enough to be irrelevant in tests.
    pub fn unlimited() -> Self {
        Caps {
            max_group_size: u64::MAX,
            max_rank: usize::MAX,
            max_paths: u64::MAX,
            max_interval: usize::MAX,
            max_iso_elements: usize::MAX,
            factor: FactorCaps {
                max_total_degree: u32::MAX,
                max_division_attempts: u64::MAX,
            },
        }
    }
}
