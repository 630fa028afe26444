//! The flip operators.
//!
//! Between two elements `u < v`, the interior vertices of length-2 paths
//! come in canonical pairs: all two-path middles lie in one coset of the
//! dihedral reflection subgroup spanned by the labels, where exactly the
//! two middles of equal subgroup length pair up. Sorting middles by
//! ambient length recovers that pairing, because the coset isomorphism
//! preserves Bruhat direction and distinct subgroup levels are strictly
//! comparable: the two partners are always adjacent in the ambient sort.

use super::path::Path;
use crate::coxgroup::{CoxGroup, ElemId};
use crate::error::Error;
use crate::Result;

/// Middles of length-2 paths from `u` to `v`, sorted by (length, id).
pub fn two_path_middles(g: &CoxGroup, u: ElemId, v: ElemId) -> Vec<ElemId> {
    let mut mid = g.middles(u, v);
    mid.sort_by_key(|&x| (g.length(x), x));
    mid
}

/// The fixed-point-free involution pairing the two-path middles between
/// `u` and `v`: consecutive elements of the sorted middle list. Fails if
/// the middle count is odd, which would contradict the evenness lemma.
pub fn flip2_pairing(g: &CoxGroup, u: ElemId, v: ElemId) -> Result<Vec<(ElemId, ElemId)>> {
    let mid = two_path_middles(g, u, v);
    if mid.len() % 2 != 0 {
        return Err(Error::OddMiddleCount {
            u,
            v,
            count: mid.len(),
        });
    }
    Ok(mid.chunks(2).map(|pair| (pair[0], pair[1])).collect())
}

/// Partner of `x` under the two-path pairing between `u` and `v`.
pub fn flip2_partner(g: &CoxGroup, u: ElemId, v: ElemId, x: ElemId) -> Result<ElemId> {
    for (a, b) in flip2_pairing(g, u, v)? {
        if a == x {
            return Ok(b);
        }
        if b == x {
            return Ok(a);
        }
    }
    Err(Error::Element(format!(
        "{} is not a two-path middle between {} and {}",
        g.display_word(x),
        g.display_word(u),
        g.display_word(v)
    )))
}

/// Apply the `i`-th flip (1-based, `1 <= i <= len - 1`): replace vertex
/// `x_i` by its partner between `x_{i-1}` and `x_{i+1}`.
pub fn flip_path(g: &CoxGroup, path: &Path, i: usize) -> Result<Path> {
    assert!(
        i >= 1 && i < path.len(),
        "flip index {i} out of range for a path of length {}",
        path.len()
    );
    let mut vertices = path.vertices(g);
    vertices[i] = flip2_partner(g, vertices[i - 1], vertices[i + 1], vertices[i])?;
    Path::from_vertices(g, &vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    #[test]
    fn a2_middles_between_e_and_s1s2_swap() {
        let g = CoxGroup::from_name("A2", &Caps::default()).unwrap();
        let s1 = g.generator(0);
        let s2 = g.generator(1);
        let v = g.mult(s1, s2);
        let pairing = flip2_pairing(&g, g.identity(), v).unwrap();
        assert_eq!(pairing, vec![(s1.min(s2), s1.max(s2))]);
        assert_eq!(flip2_partner(&g, g.identity(), v, s1).unwrap(), s2);
        assert_eq!(flip2_partner(&g, g.identity(), v, s2).unwrap(), s1);
    }

    #[test]
    fn flips_are_involutive_on_a3_paths() {
        let g = CoxGroup::from_name("A3", &Caps::default()).unwrap();
        // Walk the maximal chain e < s1 < s1s2 < s1s2s3 and flip inside it.
        let chain = [
            g.identity(),
            g.elem_from_word(&[0]).unwrap(),
            g.elem_from_word(&[0, 1]).unwrap(),
            g.elem_from_word(&[0, 1, 2]).unwrap(),
        ];
        let p = Path::from_vertices(&g, &chain).unwrap();
        for i in 1..p.len() {
            let q = flip_path(&g, &p, i).unwrap();
            assert_ne!(q, p, "flip {i} moves the path");
            assert_eq!(flip_path(&g, &q, i).unwrap(), p, "flip {i} is an involution");
            assert_eq!(q.start(), p.start());
            assert_eq!(q.end(&g), p.end(&g));
        }
    }

    #[test]
    fn b2_interval_of_length_two_has_two_middles() {
        // Between e and the rotation s1s2 the middles are s1 and s2.
        let g = CoxGroup::from_name("B2", &Caps::default()).unwrap();
        let v = g.elem_from_word(&[0, 1]).unwrap();
        let mids = two_path_middles(&g, g.identity(), v);
        assert_eq!(mids.len(), 2);
        let pairing = flip2_pairing(&g, g.identity(), v).unwrap();
        assert_eq!(pairing.len(), 1);
    }

    #[test]
    fn middle_counts_are_always_even_on_small_groups() {
        for name in ["A3", "B3", "H3", "I2(7)"] {
            let g = CoxGroup::from_name(name, &Caps::default()).unwrap();
            for u in 0..g.size() as ElemId {
                for &(_, x) in g.up_edges(u) {
                    for &(_, v) in g.up_edges(x) {
                        let mids = g.middles(u, v);
                        assert!(
                            mids.len() % 2 == 0,
                            "{name}: odd middle count between {u} and {v}"
                        );
                    }
                }
            }
        }
    }
}
