//! Interval-level combinatorial-invariance experiments: bucket Bruhat
//! intervals across a pool of groups by poset isomorphism type and
//! compare their R̃-polynomials.
//!
//! For crystallographic pools, all polynomials in a bucket must agree
//! modulo q⁷, exactly when the interval length is at most 8; for pools
//! of type A only, the bounds sharpen to q⁸ and length 10.

use crate::coxgroup::{CoxGroup, ElemId, IntervalPoset};
use crate::paths::{rtilde_recurrence, QPoly, RtildeTable};
use crate::{Caps, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A pair of intervals with isomorphic posets whose R̃-polynomials
/// violate the applicable congruence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CongruenceDiscrepancy {
    pub group_a: String,
    pub u_a: ElemId,
    pub v_a: ElemId,
    pub group_b: String,
    pub u_b: ElemId,
    pub v_b: ElemId,
    pub rtilde_a: String,
    pub rtilde_b: String,
    pub length: u32,
    /// "exact" or "mod q^m".
    pub mode: String,
}

/// Outcome of a congruence sweep over a pool of groups.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub pool: Vec<String>,
    pub max_length: u32,
    /// Congruence modulus guaranteed by the pool's type.
    pub modulus: usize,
    /// Interval lengths up to which agreement must be exact.
    pub exact_length_bound: u32,
    pub intervals_checked: u64,
    pub buckets: u64,
    /// Buckets containing at least two intervals.
    pub nontrivial_buckets: u64,
    pub comparisons: u64,
    pub discrepancies: Vec<CongruenceDiscrepancy>,
}

struct BucketEntry {
    group: usize,
    u: ElemId,
    v: ElemId,
    rtilde: QPoly,
}

/// Buckets every interval of length 1..=max_length across the pool by
/// poset canonical form and compares R̃ within each bucket: exactly up
/// to the pool's exact-length bound, modulo the pool's modulus above
/// it. All discrepancies are reported, none suppressed.
pub fn congruence_check(
    groups: &[&CoxGroup],
    max_length: u32,
    caps: &Caps,
) -> Result<CongruenceReport> {
    if groups.is_empty() {
        return Err(Error::Diagram("empty congruence pool".into()));
    }
    if !groups.iter().all(|g| g.diagram().is_crystallographic()) {
        return Err(Error::Diagram(
            "congruence pools must consist of crystallographic groups".into(),
        ));
    }
    let type_a_pool = groups.iter().all(|g| g.diagram().is_type_a());
    let (modulus, exact_length_bound) = if type_a_pool { (8, 10) } else { (7, 8) };

    let mut buckets: HashMap<(u32, String), Vec<BucketEntry>> = HashMap::new();
    let mut intervals_checked = 0u64;

    for (gi, g) in groups.iter().enumerate() {
        let mut table = RtildeTable::new();
        for v in 0..g.size() as ElemId {
            let below = g.down_set(v);
            for u in below.iter() {
                let u = u as ElemId;
                let len = g.length(v) - g.length(u);
                if len == 0 || len > max_length {
                    continue;
                }
                let poset = IntervalPoset::new(g, u, v, caps)?;
                let cert = poset.certificate()?;
                let rtilde = rtilde_recurrence(g, u, v, &mut table);
                buckets
                    .entry((len, cert))
                    .or_default()
                    .push(BucketEntry { group: gi, u, v, rtilde });
                intervals_checked += 1;
            }
        }
    }

    let mut comparisons = 0u64;
    let mut nontrivial_buckets = 0u64;
    let mut discrepancies = Vec::new();
    // Deterministic report order.
    let mut keyed: Vec<(&(u32, String), &Vec<BucketEntry>)> = buckets.iter().collect();
    keyed.sort_by(|a, b| a.0.cmp(b.0));
    for ((len, _), entries) in keyed {
        if entries.len() < 2 {
            continue;
        }
        nontrivial_buckets += 1;
        let first = &entries[0];
        let exact = *len <= exact_length_bound;
        for other in &entries[1..] {
            comparisons += 1;
            let ok = if exact {
                first.rtilde == other.rtilde
            } else {
                first.rtilde.congruent_mod(&other.rtilde, modulus)
            };
            if !ok {
                discrepancies.push(CongruenceDiscrepancy {
                    group_a: groups[first.group].diagram().to_string(),
                    u_a: first.u,
                    v_a: first.v,
                    group_b: groups[other.group].diagram().to_string(),
                    u_b: other.u,
                    v_b: other.v,
                    rtilde_a: first.rtilde.to_string(),
                    rtilde_b: other.rtilde.to_string(),
                    length: *len,
                    mode: if exact {
                        "exact".to_string()
                    } else {
                        format!("mod q^{modulus}")
                    },
                });
            }
        }
    }

    Ok(CongruenceReport {
        pool: groups.iter().map(|g| g.diagram().to_string()).collect(),
        max_length,
        modulus,
        exact_length_bound,
        intervals_checked,
        buckets: buckets.len() as u64,
        nontrivial_buckets,
        comparisons,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_weyl_pool_is_clean() {
        let caps = Caps::default();
        let a3 = CoxGroup::from_name("A3", &caps).unwrap();
        let b2 = CoxGroup::from_name("B2", &caps).unwrap();
        let report = congruence_check(&[&a3, &b2], 4, &caps).unwrap();
        assert_eq!(report.modulus, 7);
        assert_eq!(report.exact_length_bound, 8);
        assert!(report.discrepancies.is_empty(), "{:?}", report.discrepancies);
        assert!(report.nontrivial_buckets > 0);
        assert!(report.comparisons > 0);
    }

    #[test]
    fn type_a_pool_uses_sharper_bounds() {
        let caps = Caps::default();
        let a2 = CoxGroup::from_name("A2", &caps).unwrap();
        let a3 = CoxGroup::from_name("A3", &caps).unwrap();
        let report = congruence_check(&[&a2, &a3], 3, &caps).unwrap();
        assert_eq!(report.modulus, 8);
        assert_eq!(report.exact_length_bound, 10);
        assert!(report.discrepancies.is_empty());
    }

    #[test]
    fn length_one_intervals_form_a_single_clean_bucket() {
        let caps = Caps::default();
        let b2 = CoxGroup::from_name("B2", &caps).unwrap();
        let report = congruence_check(&[&b2], 1, &caps).unwrap();
        // Every edge of the Bruhat graph with a length-1 gap is a cover,
        // a two-element chain: one bucket, all R̃ = q.
        assert_eq!(report.buckets, 1);
        assert!(report.discrepancies.is_empty());
    }

    #[test]
    fn non_crystallographic_pools_are_rejected() {
        let caps = Caps::default();
        let h3 = CoxGroup::from_name("H3", &caps).unwrap();
        assert!(congruence_check(&[&h3], 2, &caps).is_err());
    }

    #[test]
    fn dihedral_buckets_match_across_b3_and_g2() {
        // Dihedral intervals of equal length are isomorphic posets and
        // must share the closed-form R̃ wherever they occur.
        let caps = Caps::default();
        let b3 = CoxGroup::from_name("B3", &caps).unwrap();
        let g2 = CoxGroup::from_name("G2", &caps).unwrap();
        let report = congruence_check(&[&b3, &g2], 6, &caps).unwrap();
        assert!(report.discrepancies.is_empty(), "{:?}", report.discrepancies);
        assert!(report.intervals_checked > 100);
    }
}
