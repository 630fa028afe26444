//! Sorting words with respect to a Coxeter element `c`, i.e. a total
//! order on the generators.
//!
//! Scanning the infinite word `c c c ..` from the left and greedily taking
//! letters that shorten the remaining element produces the lexicographically
//! leftmost reduced word for an element as a subword of `c^infinity`. The
//! recorded 1-based positions give a total order on the group: distinct
//! elements have distinct position sequences because the positions determine
//! the word.

use super::group::{CoxGroup, ElemId};
use std::cmp::Ordering;

/// 1-based positions in `c^infinity` of the greedy reduced word for `w`,
/// where `c` multiplies the generators in the given order (a permutation
/// of `0..rank`).
pub fn csort_key_in(g: &CoxGroup, gen_order: &[usize], w: ElemId) -> Vec<u64> {
    debug_assert_eq!(gen_order.len(), g.rank());
    let n = g.rank();
    let mut key = Vec::with_capacity(g.length(w) as usize);
    let mut rest = w;
    let mut position: u64 = 0;
    while rest != g.identity() {
        let s = gen_order[(position % n as u64) as usize];
        let shorter = g.left_mult_gen(s, rest);
        if g.length(shorter) < g.length(rest) {
            key.push(position + 1);
            rest = shorter;
        }
        position += 1;
    }
    key
}

/// [`csort_key_in`] for the default Coxeter element `s1 s2 .. sn`.
pub fn csort_key(g: &CoxGroup, w: ElemId) -> Vec<u64> {
    let order: Vec<usize> = (0..g.rank()).collect();
    csort_key_in(g, &order, w)
}

/// Compare two elements by their sorting keys, lexicographically.
pub fn csort_cmp_in(g: &CoxGroup, gen_order: &[usize], a: ElemId, b: ElemId) -> Ordering {
    csort_key_in(g, gen_order, a).cmp(&csort_key_in(g, gen_order, b))
}

/// [`csort_cmp_in`] for the default Coxeter element `s1 s2 .. sn`.
pub fn csort_cmp(g: &CoxGroup, a: ElemId, b: ElemId) -> Ordering {
    csort_key(g, a).cmp(&csort_key(g, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    fn group(name: &str) -> CoxGroup {
        CoxGroup::from_name(name, &Caps::default()).unwrap()
    }

    #[test]
    fn key_of_longest_element_in_a2_is_contiguous() {
        // w0 = s1 s2 s1 is already a subword of c c = s1 s2 s1 s2 at
        // positions 1, 2, 3.
        let g = group("A2");
        assert_eq!(csort_key(&g, g.w0()), vec![1, 2, 3]);
        assert_eq!(csort_key(&g, g.identity()), Vec::<u64>::new());
        // s2 alone sits at position 2 of c.
        assert_eq!(csort_key(&g, g.generator(1)), vec![2]);
        // s2 s1 needs the second copy of c for its final letter.
        let s2s1 = g.elem_from_word(&[1, 0]).unwrap();
        assert_eq!(csort_key(&g, s2s1), vec![2, 3]);
    }

    #[test]
    fn keys_give_a_total_order() {
        let g = group("B3");
        let mut keys: Vec<Vec<u64>> =
            (0..g.size() as ElemId).map(|e| csort_key(&g, e)).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), g.size(), "keys are distinct");
    }

    #[test]
    fn keys_reconstruct_reduced_words() {
        // Reading letter (position - 1) mod n at each recorded position
        // must multiply out to the element, using exactly length(w) letters.
        let g = group("A3");
        let n = g.rank() as u64;
        for e in 0..g.size() as ElemId {
            let key = csort_key(&g, e);
            assert_eq!(key.len(), g.length(e) as usize);
            let word: Vec<usize> =
                key.iter().map(|&p| ((p - 1) % n) as usize).collect();
            assert_eq!(g.elem_from_word(&word).unwrap(), e);
        }
    }

    #[test]
    fn comparison_is_consistent_with_keys() {
        let g = group("A2");
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        // Key of s1 is [1], key of s2 is [2].
        assert_eq!(csort_cmp(&g, s1, s2), std::cmp::Ordering::Less);
        assert_eq!(csort_cmp(&g, s1, s1), std::cmp::Ordering::Equal);
        // The identity's empty key precedes everything else.
        assert_eq!(csort_cmp(&g, g.identity(), s1), std::cmp::Ordering::Less);
    }
}
