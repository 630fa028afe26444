//! Reflection orderings.
//!
//! A total order on the reflections is a reflection ordering when its
//! restriction to every dihedral reflection subgroup runs monotonically
//! along that subgroup's canonical chain `a, aba, ababa, .., bab, b`.
//! Reduced words for the longest element produce such orderings: the word
//! `s1 s2 .. sN` yields `t_i = s1 s2 .. s_i .. s2 s1`, and every reflection
//! ordering arises this way from exactly one reduced word.

use super::group::{CoxGroup, ElemId, ReflId};
use super::subgroup::{chi, reflection_subgroup, reflection_subgroup_reflections};
use crate::error::Error;
use crate::Result;

/// A total order on the reflections of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionOrdering {
    /// Position `i` holds the reflection at rank `i` in the order.
    order: Vec<ReflId>,
    /// Inverse permutation: `pos[t]` is the rank of reflection `t`.
    pos: Vec<u32>,
}

impl ReflectionOrdering {
    /// Ordering induced by a reduced word for the longest element:
    /// the `i`-th reflection is `s1 s2 .. s_i .. s2 s1`.
    pub fn from_reduced_word(g: &CoxGroup, word: &[usize]) -> Result<Self> {
        let n = g.reflection_count();
        // Check the word is reduced by stepping: length must rise by one
        // at every letter.
        let mut prefix = g.identity();
        let mut prefixes = Vec::with_capacity(word.len() + 1);
        prefixes.push(prefix);
        for &s in word {
            if s >= g.rank() {
                return Err(Error::Ordering(format!(
                    "generator index {} out of range",
                    s + 1
                )));
            }
            let next = g.right_mult_gen(prefix, s);
            if g.length(next) <= g.length(prefix) {
                return Err(Error::Ordering(
                    "word is not reduced, so it induces no reflection ordering".into(),
                ));
            }
            prefix = next;
            prefixes.push(prefix);
        }
        if word.len() != n || prefix != g.w0() {
            return Err(Error::Ordering(format!(
                "word is reduced but is not a word for the longest element \
                 (length {} of {n})",
                word.len()
            )));
        }
        let mut order = Vec::with_capacity(n);
        let mut pos = vec![u32::MAX; n];
        for (i, &s) in word.iter().enumerate() {
            // t_i = prefix_{i} * s * prefix_{i}^{-1} where prefix_i has i letters.
            let p = prefixes[i];
            let t_elem = g.mult(g.right_mult_gen(p, s), g.inverse(p));
            let t = g
                .reflection_of(t_elem)
                .expect("prefix conjugates of generators are reflections");
            assert_eq!(pos[t as usize], u32::MAX, "reduced word repeats a reflection");
            pos[t as usize] = i as u32;
            order.push(t);
        }
        Ok(ReflectionOrdering { order, pos })
    }

    /// The ordering induced by the ShortLex normal form of the longest
    /// element; used whenever no explicit ordering is requested.
    pub fn default_for(g: &CoxGroup) -> Self {
        let word: Vec<usize> =
            g.normal_form(g.w0()).iter().map(|&s| s as usize).collect();
        ReflectionOrdering::from_reduced_word(g, &word)
            .expect("the normal form of w0 is a reduced word for w0")
    }

    /// Number of reflections ordered.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Rank of a reflection in this order (0-based).
    pub fn position(&self, t: ReflId) -> u32 {
        self.pos[t as usize]
    }

    /// True when `a` comes strictly before `b`.
    pub fn before(&self, a: ReflId, b: ReflId) -> bool {
        self.position(a) < self.position(b)
    }

    /// Reflections in order.
    pub fn reflections_in_order(&self) -> &[ReflId] {
        &self.order
    }

    /// Full structural check: the restriction to every dihedral reflection
    /// subgroup spanned by a pair of reflections must be monotone along
    /// the subgroup's canonical chain. Quadratic in the number of
    /// reflections, so meant for tests and diagnostics.
    pub fn validate(&self, g: &CoxGroup) -> Result<()> {
        let n = g.reflection_count();
        for i in 0..n {
            for j in i + 1..n {
                let t1 = g.reflection_elem(i as ReflId);
                let t2 = g.reflection_elem(j as ReflId);
                let sub = reflection_subgroup(g, &[t1, t2]);
                let canonical = chi(g, &sub);
                if canonical.len() != 2 {
                    return Err(Error::Ordering(format!(
                        "dihedral subgroup of reflections {i}, {j} has {} canonical \
                         generators",
                        canonical.len()
                    )));
                }
                let chain = dihedral_chain(g, canonical[0], canonical[1]);
                debug_assert_eq!(
                    chain.len(),
                    reflection_subgroup_reflections(g, &sub).len()
                );
                let ranks: Vec<u32> = chain
                    .iter()
                    .map(|&t| self.position(g.reflection_of(t).unwrap()))
                    .collect();
                let increasing = ranks.windows(2).all(|w| w[0] < w[1]);
                let decreasing = ranks.windows(2).all(|w| w[0] > w[1]);
                if !increasing && !decreasing {
                    return Err(Error::Ordering(format!(
                        "restriction to the dihedral subgroup of reflections \
                         {i}, {j} is not monotone"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The canonical chain `a, aba, ababa, .., b` of the dihedral group
/// generated by reflections `a` and `b`: element `k` is `(a b)^k a`.
pub(crate) fn dihedral_chain(g: &CoxGroup, a: ElemId, b: ElemId) -> Vec<ElemId> {
    let ab = g.mult(a, b);
    let mut chain = Vec::new();
    let mut rotator = g.identity();
    loop {
        chain.push(g.mult(rotator, a));
        rotator = g.mult(rotator, ab);
        if rotator == g.identity() {
            break;
        }
    }
    debug_assert_eq!(*chain.last().unwrap(), b);
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    fn group(name: &str) -> CoxGroup {
        CoxGroup::from_name(name, &Caps::default()).unwrap()
    }

    #[test]
    fn a2_orderings_from_both_reduced_words_of_w0() {
        let g = group("A2");
        // s1 s2 s1 gives t1 = s1, t2 = s1 s2 s1, t3 = s2.
        let o = ReflectionOrdering::from_reduced_word(&g, &[0, 1, 0]).unwrap();
        let elems: Vec<ElemId> = o
            .reflections_in_order()
            .iter()
            .map(|&t| g.reflection_elem(t))
            .collect();
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        let s1s2s1 = g.elem_from_word(&[0, 1, 0]).unwrap();
        assert_eq!(elems, vec![s1, s1s2s1, s2]);
        o.validate(&g).unwrap();
        // The other word gives the reverse.
        let o2 = ReflectionOrdering::from_reduced_word(&g, &[1, 0, 1]).unwrap();
        let elems2: Vec<ElemId> = o2
            .reflections_in_order()
            .iter()
            .map(|&t| g.reflection_elem(t))
            .collect();
        assert_eq!(elems2, vec![s2, s1s2s1, s1]);
    }

    #[test]
    fn non_reduced_and_non_longest_words_are_rejected() {
        let g = group("A2");
        let err = ReflectionOrdering::from_reduced_word(&g, &[0, 0, 1]).unwrap_err();
        assert!(err.to_string().contains("not reduced"), "{err}");
        let err = ReflectionOrdering::from_reduced_word(&g, &[0, 1]).unwrap_err();
        assert!(err.to_string().contains("longest element"), "{err}");
    }

    #[test]
    fn default_orderings_validate_on_several_types() {
        for name in ["A3", "B3", "H3", "I2(7)", "A2xA1"] {
            let g = group(name);
            let o = ReflectionOrdering::default_for(&g);
            assert_eq!(o.len(), g.reflection_count());
            o.validate(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn orderings_biject_with_reduced_words_of_w0_in_b2() {
        // w0 = s1s2s1s2 has exactly two reduced words, hence exactly two
        // induced orderings, mutual reverses.
        let g = group("B2");
        let o1 = ReflectionOrdering::from_reduced_word(&g, &[0, 1, 0, 1]).unwrap();
        let o2 = ReflectionOrdering::from_reduced_word(&g, &[1, 0, 1, 0]).unwrap();
        let forward: Vec<ReflId> = o1.reflections_in_order().to_vec();
        let mut backward: Vec<ReflId> = o2.reflections_in_order().to_vec();
        backward.reverse();
        assert_eq!(forward, backward);
        o1.validate(&g).unwrap();
        o2.validate(&g).unwrap();
    }

    #[test]
    fn validation_rejects_a_scrambled_order() {
        // Swap two adjacent reflections in a valid ordering of A2: the
        // canonical chain s1 < s1s2s1 < s2 must break.
        let g = group("A2");
        let o = ReflectionOrdering::from_reduced_word(&g, &[0, 1, 0]).unwrap();
        let mut order = o.reflections_in_order().to_vec();
        order.swap(0, 1);
        let mut pos = vec![u32::MAX; order.len()];
        for (i, &t) in order.iter().enumerate() {
            pos[t as usize] = i as u32;
        }
        let scrambled = ReflectionOrdering { order, pos };
        assert!(scrambled.validate(&g).is_err());
    }
}
