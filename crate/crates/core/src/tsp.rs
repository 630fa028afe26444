//! Time-support posets and valence polynomials of path families.
//!
//! The time-support poset of a family of `h`-step paths records which
//! element each path visits at which time: vertices are the occupied
//! `(element, time)` pairs, and each consecutive pair of path entries
//! contributes a cover. An element may appear at several times and then
//! yields several vertices. The poset is graded by time, with one
//! minimal and one maximal vertex when all paths share their endpoints.
//!
//! The valence polynomial sums `x^in(a,b) y^out(a,b)` over ordered pairs
//! `a <= b`, where `out(a,b)` counts covers entering `a` plus covers
//! leaving `b`, and `in(a,b)` counts covers leaving `a` into `[a,b]`
//! plus covers entering `b` from `[a,b]` — two counts added, so a chain
//! `a` below `c` below `b` of covers counts `c` twice. That convention
//! makes the polynomial multiplicative over products of posets and hence
//! over shuffle products of path families. Pure powers of `y` arise
//! exactly from the diagonal pairs `a = b`, where the exponent is the
//! full valence of `a`.

use crate::bitset::BitSet;
use crate::coxgroup::{poset_certificate, CoxGroup, ElemId};
use crate::error::Error;
use crate::paths::Flipclass;
use crate::Result;
use bipoly::BiPoly;
use num_bigint::BigInt;
use num_traits::One;

/// The time-support poset of a family of equal-length vertex sequences.
#[derive(Debug, Clone)]
pub struct TimeSupport {
    /// Occupied `(element, time)` pairs, sorted by `(time, element)`.
    verts: Vec<(ElemId, u32)>,
    covers_up: Vec<Vec<usize>>,
    covers_down: Vec<Vec<usize>>,
    h: usize,
}

impl TimeSupport {
    /// Builds the poset from explicit vertex sequences, which must be
    /// non-empty and all of the same length.
    pub fn from_vertex_seqs(seqs: &[Vec<ElemId>]) -> Result<TimeSupport> {
        let Some(first) = seqs.first() else {
            return Err(Error::Element(
                "time-support poset of an empty path family".into(),
            ));
        };
        if first.is_empty() {
            return Err(Error::Element(
                "time-support poset needs sequences with at least one vertex".into(),
            ));
        }
        if seqs.iter().any(|s| s.len() != first.len()) {
            return Err(Error::Element(
                "time-support poset needs sequences of equal length".into(),
            ));
        }
        let h = first.len() - 1;
        let mut verts: Vec<(ElemId, u32)> = seqs
            .iter()
            .flat_map(|s| s.iter().enumerate().map(|(i, &x)| (x, i as u32)))
            .map(|(x, i)| (x, i))
            .collect();
        verts.sort_unstable_by_key(|&(x, i)| (i, x));
        verts.dedup();
        let index = |x: ElemId, i: u32| -> usize {
            verts
                .binary_search_by_key(&(i, x), |&(y, j)| (j, y))
                .expect("occupied pair is a vertex")
        };
        let mut covers_up = vec![Vec::new(); verts.len()];
        let mut covers_down = vec![Vec::new(); verts.len()];
        let mut edges: Vec<(usize, usize)> = seqs
            .iter()
            .flat_map(|s| {
                s.windows(2)
                    .enumerate()
                    .map(|(i, w)| (index(w[0], i as u32), index(w[1], i as u32 + 1)))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        for (a, b) in edges {
            covers_up[a].push(b);
            covers_down[b].push(a);
        }
        Ok(TimeSupport {
            verts,
            covers_up,
            covers_down,
            h,
        })
    }

    /// The time-support poset of a flipclass.
    pub fn from_flipclass(g: &CoxGroup, f: &Flipclass) -> TimeSupport {
        let seqs: Vec<Vec<ElemId>> = f.paths().iter().map(|p| p.vertices(g)).collect();
        TimeSupport::from_vertex_seqs(&seqs).expect("a flipclass is a non-empty path family")
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.covers_up.iter().map(Vec::len).sum()
    }

    /// The common path length; vertices occupy times `0..=h`.
    pub fn h(&self) -> usize {
        self.h
    }

    pub fn vertices(&self) -> &[(ElemId, u32)] {
        &self.verts
    }

    /// Number of vertices at each time slot.
    pub fn level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.h + 1];
        for &(_, i) in &self.verts {
            sizes[i as usize] += 1;
        }
        sizes
    }

    /// Vertices covering the minimum.
    pub fn atom_count(&self) -> usize {
        self.level_sizes().get(1).copied().unwrap_or(0)
    }

    /// Vertices covered by the maximum.
    pub fn coatom_count(&self) -> usize {
        if self.h == 0 {
            0
        } else {
            self.level_sizes()[self.h - 1]
        }
    }

    /// For each vertex, the set of vertices above it (inclusive).
    /// Vertex order is topological, so one backward sweep suffices.
    fn reach_up(&self) -> Vec<BitSet> {
        let n = self.verts.len();
        let mut reach = vec![BitSet::new(n); n];
        for i in (0..n).rev() {
            // Split off the finished tail so reach[i] and reach[c] with
            // c > i can be borrowed together.
            let (head, tail) = reach.split_at_mut(i + 1);
            let r = &mut head[i];
            r.insert(i);
            for &c in &self.covers_up[i] {
                r.union_with(&tail[c - i - 1]);
            }
        }
        reach
    }

    /// Order relation of the poset (reflexive).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.reach_up()[a].contains(b)
    }

    /// The valence polynomial of the poset.
    pub fn valence_polynomial(&self) -> BiPoly {
        let reach = self.reach_up();
        let mut p = BiPoly::zero();
        for a in 0..self.verts.len() {
            for b in reach[a].iter() {
                let in_count = self.covers_up[a]
                    .iter()
                    .filter(|&&c| reach[c].contains(b))
                    .count()
                    + self.covers_down[b]
                        .iter()
                        .filter(|&&c| reach[a].contains(c))
                        .count();
                let out_count = self.covers_down[a].len() + self.covers_up[b].len();
                p.add_term(BigInt::one(), (in_count as u32, out_count as u32));
            }
        }
        p
    }

    /// Whether `y^4` appears in the valence polynomial, i.e. whether some
    /// vertex has total valence four. This tracks an observed (but not
    /// exact) correlation with dihedrality and is reported, never used as
    /// a decision criterion.
    pub fn has_y4_monomial(&self) -> bool {
        use num_traits::Zero;
        !self.valence_polynomial().coeff(0, 4).is_zero()
    }

    /// Canonical isomorphism certificate; equal strings exactly for
    /// isomorphic posets.
    pub fn certificate(&self) -> Result<String> {
        poset_certificate(self.verts.len(), |i| &self.covers_up[i])
    }

    /// Certificate of the dual poset (every cover reversed). Two posets
    /// are anti-isomorphic exactly when one's [`Self::certificate`]
    /// equals the other's dual certificate.
    pub fn dual_certificate(&self) -> Result<String> {
        poset_certificate(self.verts.len(), |i| &self.covers_down[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::coxgroup::IntervalPoset;
    use crate::paths::{enumerate_flipclasses, shuffle_product, Path};
    use crate::coxgroup::ReflectionOrdering;

    fn group(name: &str) -> CoxGroup {
        CoxGroup::from_name(name, &Caps::default()).unwrap()
    }

    fn edge_class(g: &CoxGroup) -> Flipclass {
        let p =
            Path::new(g, g.identity(), vec![g.reflection_of(g.generator(0)).unwrap()]).unwrap();
        Flipclass::of(g, &p, &Caps::default()).unwrap()
    }

    /// A 12-vertex poset arising from eight abstract 4-paths in a graph
    /// with two long edges; one graph vertex is occupied at two times.
    #[test]
    fn element_repeated_at_two_times_splits_into_two_vertices() {
        // Graph vertices: 0=u 1,2=first level 3,4=second level 5=c
        // 6,7=fourth level 8,9=fifth level 10=top; long edges 0->5, 5->10.
        let mut seqs = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                seqs.push(vec![0, a, b, 5, 10]);
            }
        }
        for d in [6, 7] {
            for e in [8, 9] {
                seqs.push(vec![0, 5, d, e, 10]);
            }
        }
        let ts = TimeSupport::from_vertex_seqs(&seqs).unwrap();
        assert_eq!(ts.len(), 12);
        assert_eq!(ts.edge_count(), 18);
        assert_eq!(ts.level_sizes(), vec![1, 3, 4, 3, 1]);
        // Vertex 5 occurs at times 1 and 3.
        let times: Vec<u32> = ts
            .vertices()
            .iter()
            .filter(|&&(x, _)| x == 5)
            .map(|&(_, i)| i)
            .collect();
        assert_eq!(times, vec![1, 3]);
    }

    #[test]
    fn single_edge_valence_polynomial() {
        let g = group("A1");
        let f = edge_class(&g);
        let ts = TimeSupport::from_flipclass(&g, &f);
        assert_eq!(ts.valence_polynomial().to_string(), "x^2 + 2*y");
    }

    #[test]
    fn diamond_valence_polynomial_is_the_square_of_an_edge() {
        let g = group("A1xA1");
        let p = Path::from_vertices(&g, &[g.identity(), g.generator(0), g.w0()]).unwrap();
        let f = Flipclass::of(&g, &p, &Caps::default()).unwrap();
        let ts = TimeSupport::from_flipclass(&g, &f);
        let edge = BiPoly::from_terms([(1, 2u32, 0u32), (2, 0, 1)]);
        assert_eq!(ts.valence_polynomial(), &edge * &edge);
    }

    #[test]
    fn valence_polynomial_is_multiplicative_over_shuffles() {
        let g1 = group("A2");
        let caps = Caps::default();
        let ordering = ReflectionOrdering::default_for(&g1);
        let f1 = enumerate_flipclasses(&g1, &ordering, g1.identity(), 3, &caps, |v| {
            v == g1.w0()
        })
        .unwrap()
        .remove(0);
        let g2 = group("A1");
        let f2 = edge_class(&g2);
        let gp = group("A2xA1");
        let prod = shuffle_product(&g1, &f1, &g2, &f2, &gp).unwrap();
        let d1 = TimeSupport::from_flipclass(&g1, &f1).valence_polynomial();
        let d2 = TimeSupport::from_flipclass(&g2, &f2).valence_polynomial();
        let dp = TimeSupport::from_flipclass(&gp, &prod).valence_polynomial();
        assert_eq!(dp, &d1 * &d2);
    }

    #[test]
    fn maximal_flipclass_poset_matches_the_interval() {
        // When h equals the length gap, the flipclass consists of all
        // maximal chains and its poset is the interval itself.
        for name in ["I2(5)", "A3"] {
            let g = group(name);
            let caps = Caps::default();
            let ordering = ReflectionOrdering::default_for(&g);
            let h = g.length(g.w0()) as usize;
            let f = enumerate_flipclasses(&g, &ordering, g.identity(), h, &caps, |v| {
                v == g.w0()
            })
            .unwrap()
            .remove(0);
            let ts = TimeSupport::from_flipclass(&g, &f);
            let interval = IntervalPoset::new(&g, g.identity(), g.w0(), &caps).unwrap();
            assert_eq!(
                ts.certificate().unwrap(),
                interval.certificate().unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn y4_monomials_track_valence_four_vertices() {
        let caps = Caps::default();
        // Dihedral classes of height 2 and 3 have no valence-4 vertex.
        let g = group("B2");
        let ordering = ReflectionOrdering::default_for(&g);
        for (h, gap_end) in [(2, 2), (3, 3)] {
            let classes = enumerate_flipclasses(&g, &ordering, g.identity(), h, &caps, |v| {
                g.length(v) == gap_end
            })
            .unwrap();
            for f in &classes {
                let ts = TimeSupport::from_flipclass(&g, &f);
                assert!(f.is_dihedral(&g));
                assert!(!ts.has_y4_monomial(), "h={h}");
            }
        }
        // Dihedral classes of height 4 and up do: interior vertices have
        // valence 4.
        let f4 = enumerate_flipclasses(&g, &ordering, g.identity(), 4, &caps, |v| v == g.w0())
            .unwrap()
            .remove(0);
        assert!(f4.is_dihedral(&g));
        assert!(TimeSupport::from_flipclass(&g, &f4).has_y4_monomial());
        // And a non-dihedral class can have one too, so the monomial is
        // not a dihedrality test.
        let ga = group("A3");
        let ordering = ReflectionOrdering::default_for(&ga);
        let v = ga.elem_from_one_line(&[4, 2, 3, 1]).unwrap();
        let f5 = enumerate_flipclasses(&ga, &ordering, ga.identity(), 5, &caps, |x| x == v)
            .unwrap()
            .remove(0);
        assert!(!f5.is_dihedral(&ga));
        assert!(TimeSupport::from_flipclass(&ga, &f5).has_y4_monomial());
    }

    #[test]
    fn degenerate_families_are_rejected() {
        assert!(TimeSupport::from_vertex_seqs(&[]).is_err());
        assert!(TimeSupport::from_vertex_seqs(&[vec![]]).is_err());
        assert!(TimeSupport::from_vertex_seqs(&[vec![0, 1], vec![0, 1, 2]]).is_err());
    }
}
