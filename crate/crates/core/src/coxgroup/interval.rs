//! Explicit Bruhat intervals as graded posets.

use super::canon::poset_certificate;
use super::group::{CoxGroup, ElemId};
use crate::caps::Caps;
use crate::error::Error;
use crate::Result;
use std::collections::HashMap;

/// The interval `[u, v]` in Bruhat order, materialised with its cover
/// relations. Local vertex indices are sorted by (length, element id), so
/// vertex 0 is `u` and the last vertex is `v`.
#[derive(Debug)]
pub struct IntervalPoset {
    elements: Vec<ElemId>,
    index: HashMap<ElemId, usize>,
    covers_up: Vec<Vec<usize>>,
    covers_down: Vec<Vec<usize>>,
    base_length: u32,
}

impl IntervalPoset {
    /// Build `[u, v]`; fails when `u` is not below `v` or the interval
    /// exceeds the cap.
    pub fn new(g: &CoxGroup, u: ElemId, v: ElemId, caps: &Caps) -> Result<IntervalPoset> {
        if !g.bruhat_leq(u, v) {
            return Err(Error::Element(format!(
                "interval is empty: {} is not below {}",
                g.display_word(u),
                g.display_word(v)
            )));
        }
        let below = g.down_set(v);
        let above = g.up_set(u);
        let mut elements: Vec<ElemId> = below
            .iter()
            .filter(|&e| above.contains(e))
            .map(|e| e as ElemId)
            .collect();
        if elements.len() > caps.max_interval {
            return Err(Error::CapExceeded(format!(
                "interval [{}, {}] has {} elements, cap is {}",
                g.display_word(u),
                g.display_word(v),
                elements.len(),
                caps.max_interval
            )));
        }
        elements.sort_by_key(|&e| (g.length(e), e));
        let index: HashMap<ElemId, usize> =
            elements.iter().copied().zip(0..).collect();
        let mut covers_up = vec![Vec::new(); elements.len()];
        let mut covers_down = vec![Vec::new(); elements.len()];
        for (i, &x) in elements.iter().enumerate() {
            for &(_, y) in g.up_edges(x) {
                if g.length(y) == g.length(x) + 1 {
                    if let Some(&j) = index.get(&y) {
                        covers_up[i].push(j);
                        covers_down[j].push(i);
                    }
                }
            }
        }
        for list in covers_up.iter_mut().chain(covers_down.iter_mut()) {
            list.sort_unstable();
        }
        Ok(IntervalPoset {
            elements,
            index,
            covers_up,
            covers_down,
            base_length: g.length(u),
        })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Group elements in local vertex order.
    pub fn elements(&self) -> &[ElemId] {
        &self.elements
    }

    /// Local index of a group element, if present.
    pub fn index_of(&self, e: ElemId) -> Option<usize> {
        self.index.get(&e).copied()
    }

    /// Rank of a local vertex above the interval bottom.
    pub fn rank_of(&self, g: &CoxGroup, local: usize) -> u32 {
        g.length(self.elements[local]) - self.base_length
    }

    /// Upward covers of a local vertex.
    pub fn covers_up(&self, local: usize) -> &[usize] {
        &self.covers_up[local]
    }

    /// Downward covers of a local vertex.
    pub fn covers_down(&self, local: usize) -> &[usize] {
        &self.covers_down[local]
    }

    /// Total number of cover relations.
    pub fn cover_count(&self) -> usize {
        self.covers_up.iter().map(Vec::len).sum()
    }

    /// Canonical certificate of the abstract poset; equal certificates
    /// mean isomorphic posets.
    pub fn certificate(&self) -> Result<String> {
        poset_certificate(self.elements.len(), |i| &self.covers_up[i])
    }

    /// Atoms: elements covering the bottom.
    pub fn atoms(&self) -> &[usize] {
        &self.covers_up[0]
    }

    /// Coatoms: elements covered by the top.
    pub fn coatoms(&self) -> &[usize] {
        &self.covers_down[self.elements.len() - 1]
    }
}
