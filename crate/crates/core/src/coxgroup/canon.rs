//! Canonical forms for finite posets given by cover lists.
//!
//! Two posets receive the same certificate exactly when they are
//! isomorphic. The algorithm is colour refinement (colours fed by the
//! colour multisets of upper and lower covers) with individualisation and
//! backtracking when refinement stalls, taking the minimum serialised
//! adjacency over all canonical labelings. Colour values are
//! isomorphism-invariant by construction, so the branch selection is too;
//! the certificate is the actual relabelled cover structure, never a hash.

use crate::error::Error;
use crate::Result;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

/// Budget on explored branch nodes; certificates are meant for posets of
/// at most a few thousand vertices where refinement almost always
/// discretises immediately.
const MAX_BRANCH_NODES: usize = 50_000;

/// Compute the canonical certificate of a poset with `n` vertices whose
/// upward cover lists are given by `covers_up`.
pub fn poset_certificate<'a, F>(n: usize, covers_up: F) -> Result<String>
where
    F: Fn(usize) -> &'a [usize],
{
    if n == 0 {
        return Ok(String::from("0;"));
    }
    let up: Vec<Vec<usize>> = (0..n).map(|i| covers_up(i).to_vec()).collect();
    let mut down: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, targets) in up.iter().enumerate() {
        for &j in targets {
            down[j].push(i);
        }
    }

    // Initial colour: height (longest chain from a minimal vertex), an
    // isomorphism invariant that usually splits layers immediately.
    // Computed by relaxation; cover DAGs are acyclic so this terminates.
    let mut height = vec![0u64; n];
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for &j in &up[i] {
                if height[j] < height[i] + 1 {
                    height[j] = height[i] + 1;
                    changed = true;
                }
            }
        }
    }

    let mut search = Search {
        up: &up,
        down: &down,
        best: None,
        nodes: 0,
    };
    search.explore(height)?;
    let canonical = search.best.expect("search visits at least one leaf");

    // Serialise: vertex count, then each vertex's relabelled up-covers.
    let mut out = format!("{n};");
    for targets in &canonical {
        let mut sorted = targets.clone();
        sorted.sort_unstable();
        let parts: Vec<String> = sorted.iter().map(|t| t.to_string()).collect();
        out.push_str(&parts.join(","));
        out.push(';');
    }
    Ok(out)
}

struct Search<'a> {
    up: &'a [Vec<usize>],
    down: &'a [Vec<usize>],
    best: Option<Vec<Vec<usize>>>,
    nodes: usize,
}

impl Search<'_> {
    fn explore(&mut self, colours: Vec<u64>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > MAX_BRANCH_NODES {
            return Err(Error::CapExceeded(
                "poset certificate search exceeded its branching budget".into(),
            ));
        }
        let colours = refine(self.up, self.down, colours);
        // Group vertices by colour.
        let n = colours.len();
        let mut by_colour: Vec<(u64, usize)> =
            colours.iter().copied().zip(0..n).collect();
        by_colour.sort_unstable();
        // Find the first colour class with more than one vertex.
        let mut split: Option<(usize, usize)> = None;
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j < n && by_colour[j].0 == by_colour[i].0 {
                j += 1;
            }
            if j - i > 1 {
                split = Some((i, j));
                break;
            }
            i = j;
        }
        match split {
            None => {
                // Discrete colouring: read off the labelling and keep the
                // minimum serialisation.
                let mut label = vec![0usize; n];
                for (rank, &(_, v)) in by_colour.iter().enumerate() {
                    label[v] = rank;
                }
                let mut relabelled: Vec<Vec<usize>> = vec![Vec::new(); n];
                for v in 0..n {
                    relabelled[label[v]] = self.up[v].iter().map(|&t| label[t]).collect();
                    relabelled[label[v]].sort_unstable();
                }
                if self.best.as_ref().is_none_or(|b| relabelled < *b) {
                    self.best = Some(relabelled);
                }
                Ok(())
            }
            Some((lo, hi)) => {
                // Individualise each member of the class in turn.
                for k in lo..hi {
                    let v = by_colour[k].1;
                    let mut branched = colours.clone();
                    branched[v] = branched[v] ^ 0x9E3779B97F4A7C15;
                    self.explore(branched)?;
                }
                Ok(())
            }
        }
    }
}

/// Run colour refinement to a fixpoint: each round mixes a vertex's colour
/// with the sorted colour multisets of its upper and lower covers.
fn refine(up: &[Vec<usize>], down: &[Vec<usize>], mut colours: Vec<u64>) -> Vec<u64> {
    let n = colours.len();
    loop {
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut ups: Vec<u64> = up[v].iter().map(|&t| colours[t]).collect();
            let mut downs: Vec<u64> = down[v].iter().map(|&t| colours[t]).collect();
            ups.sort_unstable();
            downs.sort_unstable();
            let mut hasher = DefaultHasher::new();
            colours[v].hash(&mut hasher);
            ups.hash(&mut hasher);
            0xACABu16.hash(&mut hasher);
            downs.hash(&mut hasher);
            next.push(hasher.finish());
        }
        // Compare the partitions induced by old and new colours: stop when
        // no class splits further.
        let classes = |cs: &[u64]| -> usize {
            let mut sorted = cs.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len()
        };
        let stop = classes(&colours) == classes(&next);
        colours = next;
        if stop {
            return colours;
        }
    }
}
