//! Labelled directed paths in the Bruhat graph.

use crate::coxgroup::{CoxGroup, ElemId, ReflId};
use crate::error::Error;
use crate::Result;

/// A directed path in the Bruhat graph, stored as its start element and
/// edge labels; vertices are recomputed on demand by multiplying labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    start: ElemId,
    labels: Vec<ReflId>,
}

impl Path {
    /// The empty path at `start`.
    pub fn empty(start: ElemId) -> Path {
        Path {
            start,
            labels: Vec::new(),
        }
    }

    /// Path from a start element and its edge labels. Fails when some step
    /// does not go strictly up in length.
    pub fn new(g: &CoxGroup, start: ElemId, labels: Vec<ReflId>) -> Result<Path> {
        let mut x = start;
        for &t in &labels {
            let y = g.left_mult_refl(t, x);
            if g.length(y) <= g.length(x) {
                return Err(Error::Element(format!(
                    "label {t} does not go up from {}",
                    g.display_word(x)
                )));
            }
            x = y;
        }
        Ok(Path { start, labels })
    }

    /// Path through the given vertices; labels are read off the Bruhat
    /// graph. Fails when consecutive vertices are not joined by an edge.
    pub fn from_vertices(g: &CoxGroup, vertices: &[ElemId]) -> Result<Path> {
        assert!(!vertices.is_empty(), "a path has at least one vertex");
        let mut labels = Vec::with_capacity(vertices.len() - 1);
        for pair in vertices.windows(2) {
            match g.edge_label(pair[0], pair[1]) {
                Some(t) => labels.push(t),
                None => {
                    return Err(Error::Element(format!(
                        "no Bruhat edge from {} to {}",
                        g.display_word(pair[0]),
                        g.display_word(pair[1])
                    )))
                }
            }
        }
        Ok(Path {
            start: vertices[0],
            labels,
        })
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// First vertex.
    pub fn start(&self) -> ElemId {
        self.start
    }

    /// Edge labels in order.
    pub fn labels(&self) -> &[ReflId] {
        &self.labels
    }

    /// All vertices, recomputed by applying the labels to the start.
    pub fn vertices(&self, g: &CoxGroup) -> Vec<ElemId> {
        let mut out = Vec::with_capacity(self.labels.len() + 1);
        let mut x = self.start;
        out.push(x);
        for &t in &self.labels {
            x = g.left_mult_refl(t, x);
            out.push(x);
        }
        out
    }

    /// Last vertex.
    pub fn end(&self, g: &CoxGroup) -> ElemId {
        let mut x = self.start;
        for &t in &self.labels {
            x = g.left_mult_refl(t, x);
        }
        x
    }

    /// True when the labels rise strictly in the given order of
    /// reflections.
    pub fn is_increasing(&self, positions: impl Fn(ReflId) -> u32) -> bool {
        self.labels
            .windows(2)
            .all(|w| positions(w[0]) < positions(w[1]))
    }
}
