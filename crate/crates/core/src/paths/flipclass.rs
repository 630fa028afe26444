//! Flipclasses: orbits of paths under the flip operators.

use super::flip::flip_path;
use super::path::Path;
use crate::caps::Caps;
use crate::coxgroup::{reflection_subgroup, CoxGroup, ElemId, ReflId, Scalar};
use crate::error::Error;
use crate::Result;
use std::collections::BTreeSet;

/// The flip orbit of a path: the smallest set of paths from `u` to `v`
/// containing it and closed under all flips. Paths are kept sorted by
/// their vertex sequences, which makes the path list itself the canonical
/// key of the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flipclass {
    u: ElemId,
    v: ElemId,
    h: usize,
    paths: Vec<Path>,
}

impl Flipclass {
    /// Compute the flip orbit of `seed` by breadth-first closure.
    pub fn of(g: &CoxGroup, seed: &Path, caps: &Caps) -> Result<Flipclass> {
        let u = seed.start();
        let v = seed.end(g);
        let h = seed.len();
        let mut seen: BTreeSet<Vec<ElemId>> = BTreeSet::new();
        seen.insert(seed.vertices(g));
        let mut queue: Vec<Path> = vec![seed.clone()];
        while let Some(p) = queue.pop() {
            for i in 1..h {
                let flipped = flip_path(g, &p, i)?;
                if seen.insert(flipped.vertices(g)) {
                    if seen.len() as u64 > caps.max_paths {
                        return Err(Error::CapExceeded(format!(
                            "flip closure at {} exceeded {} paths",
                            g.display_word(u),
                            caps.max_paths
                        )));
                    }
                    queue.push(flipped);
                }
            }
        }
        let paths = seen
            .into_iter()
            .map(|vs| Path::from_vertices(g, &vs).expect("closure paths are valid"))
            .collect();
        Ok(Flipclass { u, v, h, paths })
    }

    /// Assemble a flipclass from paths already known to form one (used by
    /// the shuffle product and the longest-element transforms, which map
    /// flipclasses onto flipclasses). Verifies shared endpoints, sorts,
    /// and dedups; closure itself is the caller's theorem.
    pub(crate) fn from_paths(g: &CoxGroup, paths: Vec<Path>) -> Flipclass {
        assert!(!paths.is_empty(), "a flipclass has at least one path");
        let u = paths[0].start();
        let v = paths[0].end(g);
        let h = paths[0].len();
        let mut keyed: Vec<(Vec<ElemId>, Path)> = paths
            .into_iter()
            .map(|p| {
                assert_eq!(p.start(), u, "paths share a start");
                assert_eq!(p.end(g), v, "paths share an end");
                assert_eq!(p.len(), h, "paths share a length");
                (p.vertices(g), p)
            })
            .collect();
        keyed.sort();
        keyed.dedup_by(|a, b| a.0 == b.0);
        Flipclass {
            u,
            v,
            h,
            paths: keyed.into_iter().map(|(_, p)| p).collect(),
        }
    }

    /// Common start of all paths.
    pub fn u(&self) -> ElemId {
        self.u
    }

    /// Common end of all paths.
    pub fn v(&self) -> ElemId {
        self.v
    }

    /// Path length (number of edges).
    pub fn h(&self) -> usize {
        self.h
    }

    /// Number of paths.
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Paths in canonical (vertex-sequence) order.
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// Canonical key: the sorted vertex sequences of all paths. Two
    /// flipclasses are equal exactly when their keys are.
    pub fn canonical_key(&self, g: &CoxGroup) -> Vec<Vec<ElemId>> {
        self.paths.iter().map(|p| p.vertices(g)).collect()
    }

    /// All vertices visited by paths of the class, sorted.
    pub fn vertex_set(&self, g: &CoxGroup) -> Vec<ElemId> {
        let mut out: BTreeSet<ElemId> = BTreeSet::new();
        for p in &self.paths {
            out.extend(p.vertices(g));
        }
        out.into_iter().collect()
    }

    /// All edge labels used by paths of the class, sorted.
    pub fn label_set(&self) -> Vec<ReflId> {
        let mut out: BTreeSet<ReflId> = BTreeSet::new();
        for p in &self.paths {
            out.extend(p.labels().iter().copied());
        }
        out.into_iter().collect()
    }

    /// Dimension of the linear span of the label roots.
    pub fn span_dim(&self, g: &CoxGroup) -> usize {
        let labels = self.label_set();
        let rows: Vec<Vec<Scalar>> =
            labels.iter().map(|&t| g.root(t).to_vec()).collect();
        rank_of(rows)
    }

    /// A class is dihedral when its labels span a plane.
    pub fn is_dihedral(&self, g: &CoxGroup) -> bool {
        self.span_dim(g) == 2
    }

    /// A class is reducible when the non-commuting graph on its labels is
    /// disconnected, i.e. the labels split into two mutually commuting
    /// nonempty parts.
    pub fn is_reducible(&self, g: &CoxGroup) -> bool {
        let labels = self.label_set();
        if labels.len() <= 1 {
            return false;
        }
        let n = labels.len();
        let elems: Vec<ElemId> =
            labels.iter().map(|&t| g.reflection_elem(t)).collect();
        let mut component = vec![usize::MAX; n];
        let mut queue = vec![0usize];
        component[0] = 0;
        while let Some(i) = queue.pop() {
            for j in 0..n {
                if component[j] == usize::MAX
                    && g.mult(elems[i], elems[j]) != g.mult(elems[j], elems[i])
                {
                    component[j] = 0;
                    queue.push(j);
                }
            }
        }
        component.contains(&usize::MAX)
    }

    /// The reflection subgroup generated by the labels.
    pub fn label_subgroup(&self, g: &CoxGroup) -> Vec<ElemId> {
        let elems: Vec<ElemId> = self
            .label_set()
            .iter()
            .map(|&t| g.reflection_elem(t))
            .collect();
        reflection_subgroup(g, &elems)
    }

    /// Number of paths whose labels increase strictly in the given
    /// reflection order (evaluated via positions).
    pub fn count_increasing(&self, positions: impl Fn(ReflId) -> u32) -> u64 {
        self.paths
            .iter()
            .filter(|p| p.is_increasing(&positions))
            .count() as u64
    }

    /// The increasing paths themselves.
    pub fn increasing_paths(&self, positions: impl Fn(ReflId) -> u32) -> Vec<&Path> {
        self.paths
            .iter()
            .filter(|p| p.is_increasing(&positions))
            .collect()
    }
}

/// Rank of a list of vectors over the field of scalars, by Gaussian
/// elimination with exact arithmetic.
fn rank_of(mut rows: Vec<Vec<Scalar>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows.len()).find(|&r| !rows[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone().inverse();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..cols {
                let delta = factor.clone() * rows[rank][c].clone();
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
