//! The in-memory group: element tables, lengths, reflections, Bruhat edges.

use super::diagram::Diagram;
use super::scalar::Scalar;
use crate::bitset::BitSet;
use crate::caps::Caps;
use crate::error::Error;
use crate::Result;
use std::collections::HashMap;

/// Dense element identifier, ordered by (length, ShortLex normal form).
/// The identity is always 0.
pub type ElemId = u32;

/// Dense reflection identifier: index into the sorted reflection list.
pub type ReflId = u32;

pub(super) const NO_REFL: ReflId = ReflId::MAX;

/// A fully built finite Coxeter group.
///
/// All products, lengths and Bruhat edges are table lookups after
/// construction. Ids are deterministic across runs: elements are numbered
/// by (length, ShortLex normal form).
pub struct CoxGroup {
    pub(super) diagram: Diagram,
    pub(super) size: usize,
    pub(super) rank: usize,
    pub(super) dim: usize,
    pub(super) root_dim: usize,
    /// Flat element states, stride `dim`.
    pub(super) states: Vec<i32>,
    pub(super) lookup: HashMap<Vec<i32>, ElemId>,
    pub(super) lengths: Vec<u32>,
    pub(super) nf: Vec<Vec<u8>>,
    /// `right[e * rank + s] = e * s`.
    pub(super) right: Vec<ElemId>,
    /// `left[e * rank + s] = s * e`.
    pub(super) left: Vec<ElemId>,
    pub(super) inverse: Vec<ElemId>,
    pub(super) gen_ids: Vec<ElemId>,
    /// Sorted element ids of the reflections; `ReflId` indexes this.
    pub(super) reflections: Vec<ElemId>,
    pub(super) refl_of: Vec<ReflId>,
    /// Root coordinates per reflection, stride `root_dim` vectors.
    pub(super) roots: Vec<Vec<Scalar>>,
    pub(super) w0: ElemId,
    /// Bruhat edges upward: `(t, t * v)` sorted by reflection id.
    pub(super) up_edges: Vec<Vec<(ReflId, ElemId)>>,
    /// Bruhat edges downward, same layout.
    pub(super) down_edges: Vec<Vec<(ReflId, ElemId)>>,
}

impl std::fmt::Debug for CoxGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoxGroup")
            .field("diagram", &self.diagram.to_string())
            .field("size", &self.size)
            .finish_non_exhaustive()
    }
}

impl CoxGroup {
    /// Build the group for `diagram`, honouring `caps`.
    pub fn build(diagram: &Diagram, caps: &Caps) -> Result<CoxGroup> {
        super::build::build_group(diagram, caps)
    }

    /// Parse and build in one step.
    pub fn from_name(name: &str, caps: &Caps) -> Result<CoxGroup> {
        CoxGroup::build(&Diagram::parse(name)?, caps)
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The identity element.
    pub fn identity(&self) -> ElemId {
        0
    }

    /// The longest element.
    pub fn w0(&self) -> ElemId {
        self.w0
    }

    /// Coxeter length.
    pub fn length(&self, e: ElemId) -> u32 {
        self.lengths[e as usize]
    }

    /// Element id of generator `s` (0-based).
    pub fn generator(&self, s: usize) -> ElemId {
        self.gen_ids[s]
    }

    /// Product `a * b`.
    pub fn mult(&self, a: ElemId, b: ElemId) -> ElemId {
        let mut scratch = Vec::with_capacity(self.dim);
        self.compose_states(a, b, &mut scratch);
        self.lookup[scratch.as_slice()]
    }

    /// Inverse.
    pub fn inverse(&self, e: ElemId) -> ElemId {
        self.inverse[e as usize]
    }

    /// `e * s` for a generator index.
    pub fn right_mult_gen(&self, e: ElemId, s: usize) -> ElemId {
        self.right[e as usize * self.rank + s]
    }

    /// `s * e` for a generator index.
    pub fn left_mult_gen(&self, s: usize, e: ElemId) -> ElemId {
        self.left[e as usize * self.rank + s]
    }

    /// `t * e` for a reflection id.
    pub fn left_mult_refl(&self, t: ReflId, e: ElemId) -> ElemId {
        self.mult(self.reflections[t as usize], e)
    }

    /// Element of a word in 0-based generator indices.
    pub fn elem_from_word(&self, word: &[usize]) -> Result<ElemId> {
        let mut e = self.identity();
        for &s in word {
            if s >= self.rank {
                return Err(Error::Element(format!(
                    "generator index {} out of range for {} (rank {})",
                    s + 1,
                    self.diagram,
                    self.rank
                )));
            }
            e = self.right_mult_gen(e, s);
        }
        Ok(e)
    }

    /// ShortLex normal form as 0-based generator indices.
    pub fn normal_form(&self, e: ElemId) -> &[u8] {
        &self.nf[e as usize]
    }

    /// Render an element as a word `s1 s2 s1`, or `e` for the identity.
    pub fn display_word(&self, e: ElemId) -> String {
        let nf = self.normal_form(e);
        if nf.is_empty() {
            "e".to_string()
        } else {
            nf.iter()
                .map(|&s| format!("s{}", s + 1))
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Left descent set as 0-based generator indices.
    pub fn left_descents(&self, e: ElemId) -> Vec<usize> {
        (0..self.rank)
            .filter(|&s| self.length(self.left_mult_gen(s, e)) < self.length(e))
            .collect()
    }

    /// Right descent set as 0-based generator indices.
    pub fn right_descents(&self, e: ElemId) -> Vec<usize> {
        (0..self.rank)
            .filter(|&s| self.length(self.right_mult_gen(e, s)) < self.length(e))
            .collect()
    }

    /// Number of reflections.
    pub fn reflection_count(&self) -> usize {
        self.reflections.len()
    }

    /// Element id of a reflection.
    pub fn reflection_elem(&self, t: ReflId) -> ElemId {
        self.reflections[t as usize]
    }

    /// Reflection id of an element, if it is a reflection.
    pub fn reflection_of(&self, e: ElemId) -> Option<ReflId> {
        match self.refl_of[e as usize] {
            NO_REFL => None,
            t => Some(t),
        }
    }

    /// Root coordinates of a reflection (exact, in block coordinates).
    pub fn root(&self, t: ReflId) -> &[Scalar] {
        &self.roots[t as usize]
    }

    /// Dimension of the root coordinate space.
    pub fn root_dim(&self) -> usize {
        self.root_dim
    }

    /// Upward Bruhat edges `(t, t * v)` from `v`, sorted by reflection id.
    pub fn up_edges(&self, v: ElemId) -> &[(ReflId, ElemId)] {
        &self.up_edges[v as usize]
    }

    /// Downward Bruhat edges `(t, t * v)` from `v`, sorted by reflection id.
    pub fn down_edges(&self, v: ElemId) -> &[(ReflId, ElemId)] {
        &self.down_edges[v as usize]
    }

    /// Label of the Bruhat edge from `x` up to `y`, if there is one.
    pub fn edge_label(&self, x: ElemId, y: ElemId) -> Option<ReflId> {
        self.up_edges[x as usize]
            .iter()
            .find(|&&(_, target)| target == y)
            .map(|&(t, _)| t)
    }

    /// Conjugate by the longest element.
    pub fn conj_by_w0(&self, e: ElemId) -> ElemId {
        self.mult(self.mult(self.w0, e), self.w0)
    }

    /// Bruhat order comparison via the lifting property: for a left
    /// descent `s` of `v`, `u <= v` iff `min(u, su) <= sv`.
    pub fn bruhat_leq(&self, u: ElemId, v: ElemId) -> bool {
        let mut u = u;
        let mut v = v;
        loop {
            if u == v || u == self.identity() {
                return true;
            }
            if self.length(u) >= self.length(v) {
                return false;
            }
            let s = match (0..self.rank)
                .find(|&s| self.length(self.left_mult_gen(s, v)) < self.length(v))
            {
                Some(s) => s,
                None => return false, // v = e and u != e
            };
            v = self.left_mult_gen(s, v);
            let su = self.left_mult_gen(s, u);
            if self.length(su) < self.length(u) {
                u = su;
            }
        }
    }

    /// All elements `<= v`, as a bitset over element ids.
    pub fn down_set(&self, v: ElemId) -> BitSet {
        let mut set = BitSet::new(self.size);
        let mut queue = vec![v];
        set.insert(v as usize);
        while let Some(x) = queue.pop() {
            for &(_, y) in self.down_edges(x) {
                if set.insert(y as usize) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// All elements `>= u`, as a bitset over element ids.
    pub fn up_set(&self, u: ElemId) -> BitSet {
        let mut set = BitSet::new(self.size);
        let mut queue = vec![u];
        set.insert(u as usize);
        while let Some(x) = queue.pop() {
            for &(_, y) in self.up_edges(x) {
                if set.insert(y as usize) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Elements `x` with Bruhat-graph edges `u -> x -> v`, sorted by id.
    pub fn middles(&self, u: ElemId, v: ElemId) -> Vec<ElemId> {
        let mut ups: Vec<ElemId> =
            self.up_edges(u).iter().map(|&(_, x)| x).collect();
        ups.sort_unstable();
        let mut downs: Vec<ElemId> =
            self.down_edges(v).iter().map(|&(_, x)| x).collect();
        downs.sort_unstable();
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < ups.len() && j < downs.len() {
            match ups[i].cmp(&downs[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(ups[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// One-line notation for single-factor type A groups: the image vector
    /// of the permutation the element represents.
    pub fn one_line(&self, e: ElemId) -> Option<Vec<usize>> {
        if !self.diagram.is_type_a() || self.diagram.factors().len() != 1 {
            return None;
        }
        let n = self.rank + 1;
        let mut perm: Vec<usize> = (1..=n).collect();
        for &s in self.normal_form(e) {
            perm.swap(s as usize, s as usize + 1);
        }
        Some(perm)
    }

    /// Element with the given one-line notation (single-factor type A only).
    pub fn elem_from_one_line(&self, perm: &[usize]) -> Result<ElemId> {
        if !self.diagram.is_type_a() || self.diagram.factors().len() != 1 {
            return Err(Error::Element(format!(
                "one-line notation only applies to a single type A factor, not {}",
                self.diagram
            )));
        }
        let n = self.rank + 1;
        let mut seen = vec![false; n + 1];
        if perm.len() != n {
            return Err(Error::Element(format!(
                "one-line notation for {} needs {n} entries, got {}",
                self.diagram,
                perm.len()
            )));
        }
        for &p in perm {
            if p < 1 || p > n || seen[p] {
                return Err(Error::Element(format!(
                    "not a permutation of 1..{n}: {perm:?}"
                )));
            }
            seen[p] = true;
        }
        // Undo adjacent swaps greedily; the letters come out in reverse.
        let mut p = perm.to_vec();
        let mut word_rev = Vec::new();
        loop {
            match (0..n - 1).find(|&i| p[i] > p[i + 1]) {
                Some(i) => {
                    p.swap(i, i + 1);
                    word_rev.push(i);
                }
                None => break,
            }
        }
        word_rev.reverse();
        self.elem_from_word(&word_rev)
    }

    /// Compose the states of `a` and `b` into `out`.
    pub(super) fn compose_states(&self, a: ElemId, b: ElemId, out: &mut Vec<i32>) {
        let sa = &self.states[a as usize * self.dim..(a as usize + 1) * self.dim];
        let sb = &self.states[b as usize * self.dim..(b as usize + 1) * self.dim];
        out.clear();
        out.extend(sb.iter().map(|&bk| {
            let idx = (bk.unsigned_abs() - 1) as usize;
            if bk > 0 {
                sa[idx]
            } else {
                -sa[idx]
            }
        }));
    }

    /// Structural self-checks: associativity on seeded random triples,
    /// length behaviour under generators, reflection parity, duality of
    /// length and inversion counts, and longest-element properties. Cheap
    /// enough to run in tests on every roster group.
    pub fn validate(&self) -> Result<()> {
        let n = self.size as u64;
        // Deterministic pseudo-random triples (splitmix64).
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state = state.wrapping_add(0x9E3779B97F4A7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
            (z ^ (z >> 31)) % n
        };
        for _ in 0..1000 {
            let (a, b, c) = (next() as ElemId, next() as ElemId, next() as ElemId);
            let left = self.mult(self.mult(a, b), c);
            let right = self.mult(a, self.mult(b, c));
            if left != right {
                return Err(Error::Element(format!(
                    "associativity failure at ({a}, {b}, {c})"
                )));
            }
        }
        for e in 0..self.size as ElemId {
            for s in 0..self.rank {
                let le = self.length(e) as i64;
                let ls = self.length(self.right_mult_gen(e, s)) as i64;
                if (le - ls).abs() != 1 {
                    return Err(Error::Element(format!(
                        "length of {e} * s{} is not one off", s + 1
                    )));
                }
            }
            let inv = self.inverse(e);
            if self.mult(e, inv) != self.identity() || self.length(inv) != self.length(e) {
                return Err(Error::Element(format!("bad inverse for {e}")));
            }
        }
        // Length equals the number of reflections taken down by left
        // multiplication (inversion count), elementwise.
        for e in 0..self.size as ElemId {
            let inversions = self.down_edges(e).len() as u32;
            if inversions != self.length(e) {
                return Err(Error::Element(format!(
                    "element {e}: length {} but {inversions} inversions",
                    self.length(e)
                )));
            }
        }
        for t in 0..self.reflection_count() as ReflId {
            let elem = self.reflection_elem(t);
            if self.mult(elem, elem) != self.identity() {
                return Err(Error::Element(format!("reflection {t} is not an involution")));
            }
        }
        if self.mult(self.w0, self.w0) != self.identity() {
            return Err(Error::Element("longest element is not an involution".into()));
        }
        if self.length(self.w0) as usize != self.reflection_count() {
            return Err(Error::Element(
                "longest element length differs from reflection count".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgroup::Diagram;

    fn group(name: &str) -> CoxGroup {
        CoxGroup::from_name(name, &Caps::default()).unwrap()
    }

    #[test]
    fn small_groups_build_and_validate() {
        for name in ["A1", "A3", "B2", "B3", "G2", "H3", "I2(7)", "A2xA1"] {
            let g = group(name);
            assert_eq!(g.size() as u64, Diagram::parse(name).unwrap().order().unwrap());
            g.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn identity_is_element_zero_and_w0_is_last() {
        let g = group("B3");
        assert_eq!(g.identity(), 0);
        assert_eq!(g.length(g.identity()), 0);
        assert_eq!(g.w0(), (g.size() - 1) as ElemId);
        assert_eq!(g.length(g.w0()), 9);
    }

    #[test]
    fn one_line_notation_round_trips_and_matches_words() {
        let g = group("A3");
        // s1 s2 s3 s2 s1 is the transposition 4231 in one-line notation.
        let v = g.elem_from_word(&[0, 1, 2, 1, 0]).unwrap();
        assert_eq!(g.one_line(v).unwrap(), vec![4, 2, 3, 1]);
        assert_eq!(g.elem_from_one_line(&[4, 2, 3, 1]).unwrap(), v);
        for e in 0..g.size() as ElemId {
            let line = g.one_line(e).unwrap();
            assert_eq!(g.elem_from_one_line(&line).unwrap(), e);
        }
    }

    #[test]
    fn bruhat_order_on_a2_is_the_weak_chain() {
        let g = group("A2");
        let e = g.identity();
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        let s1s2 = g.mult(s1, s2);
        let w0 = g.w0();
        assert!(g.bruhat_leq(e, w0));
        assert!(g.bruhat_leq(s1, s1s2));
        assert!(g.bruhat_leq(s2, s1s2));
        assert!(!g.bruhat_leq(s1s2, s1));
        assert!(!g.bruhat_leq(s1, s2));
        assert_eq!(g.down_set(w0).len(), 6);
        assert_eq!(g.up_set(s1).len(), 4); // s1, s1s2, s2s1, w0
    }

    #[test]
    fn edges_carry_reflection_labels_with_odd_length_jumps() {
        let g = group("B3");
        for v in 0..g.size() as ElemId {
            for &(t, target) in g.up_edges(v) {
                assert_eq!(g.left_mult_refl(t, v), target);
                let diff = g.length(target) as i64 - g.length(v) as i64;
                assert!(diff > 0 && diff % 2 == 1);
            }
        }
        // Edge labels are recovered by lookup.
        let s1 = g.generator(0);
        let t = g.edge_label(g.identity(), s1).unwrap();
        assert_eq!(g.reflection_elem(t), s1);
    }

    #[test]
    fn middles_are_common_neighbours() {
        // In A2 the middles between e and s1s2 are exactly s1 and s2;
        // between e and w0 there are none, because paths from e to w0
        // all have odd length.
        let g = group("A2");
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        let s1s2 = g.mult(s1, s2);
        assert_eq!(g.middles(g.identity(), s1s2), vec![s1.min(s2), s1.max(s2)]);
        assert!(g.middles(g.identity(), g.w0()).is_empty());
    }

    #[test]
    fn polygon_and_geometric_dihedral_groups_agree_in_structure() {
        // I2(5) is geometric, I2(7) polygonal; both must expose the same
        // combinatorial shape: 2m elements, m reflections, w0 of length m.
        for (name, m) in [("I2(5)", 5u32), ("I2(7)", 7)] {
            let g = group(name);
            assert_eq!(g.size(), 2 * m as usize);
            assert_eq!(g.reflection_count(), m as usize);
            assert_eq!(g.length(g.w0()), m);
            g.validate().unwrap();
            // Two elements of every length strictly between 0 and m.
            for len in 1..m {
                let count = (0..g.size() as ElemId)
                    .filter(|&e| g.length(e) == len)
                    .count();
                assert_eq!(count, 2, "{name} length {len}");
            }
        }
    }

    #[test]
    fn caps_reject_oversized_requests() {
        let caps = Caps {
            max_group_size: 100,
            ..Caps::default()
        };
        let err = CoxGroup::from_name("A4", &caps).unwrap_err();
        assert!(err.is_cap_exceeded());
        let caps = Caps {
            max_rank: 3,
            ..Caps::default()
        };
        let err = CoxGroup::from_name("A4", &caps).unwrap_err();
        assert!(err.is_cap_exceeded());
    }

    #[test]
    fn normal_forms_are_shortlex_minimal_reduced_words() {
        let g = group("B2");
        // Elements in id order: e, s1, s2, s1s2, s2s1, s1s2s1, s2s1s2, w0.
        let words: Vec<String> = (0..g.size() as ElemId)
            .map(|e| g.display_word(e))
            .collect();
        assert_eq!(
            words,
            vec![
                "e",
                "s1",
                "s2",
                "s1 s2",
                "s2 s1",
                "s1 s2 s1",
                "s2 s1 s2",
                "s1 s2 s1 s2"
            ]
        );
    }
}
