//! Reflection subgroups and their canonical generators.

use super::group::{CoxGroup, ElemId};
use std::collections::BTreeSet;

/// Closure of the given elements under multiplication, as a sorted vector.
pub fn reflection_subgroup(g: &CoxGroup, generators: &[ElemId]) -> Vec<ElemId> {
    let mut members: BTreeSet<ElemId> = BTreeSet::new();
    members.insert(g.identity());
    let mut queue: Vec<ElemId> = vec![g.identity()];
    while let Some(x) = queue.pop() {
        for &t in generators {
            let y = g.mult(x, t);
            if members.insert(y) {
                queue.push(y);
            }
        }
    }
    members.into_iter().collect()
}

/// The reflections of the ambient group lying in the given subgroup,
/// sorted by element id. For a reflection subgroup these are exactly its
/// own reflections.
pub fn reflection_subgroup_reflections(g: &CoxGroup, members: &[ElemId]) -> Vec<ElemId> {
    members
        .iter()
        .copied()
        .filter(|&x| g.reflection_of(x).is_some())
        .collect()
}

/// Canonical generators of a reflection subgroup: the reflections `t` in
/// the subgroup such that the only reflection `r` of the subgroup with
/// `len(r t) < len(t)` is `t` itself (lengths taken in the ambient group).
pub fn chi(g: &CoxGroup, subgroup_members: &[ElemId]) -> Vec<ElemId> {
    let refls = reflection_subgroup_reflections(g, subgroup_members);
    refls
        .iter()
        .copied()
        .filter(|&t| {
            refls.iter().all(|&r| {
                r == t || g.length(g.mult(r, t)) > g.length(t)
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    #[test]
    fn chi_of_the_full_group_is_the_simple_generators() {
        // The canonical generators of W inside W are the simple
        // reflections, for several ambient types.
        for name in ["A3", "B3", "H3"] {
            let g = CoxGroup::from_name(name, &Caps::default()).unwrap();
            let all: Vec<ElemId> = (0..g.size() as ElemId).collect();
            let canonical = chi(&g, &all);
            let mut simples: Vec<ElemId> =
                (0..g.rank()).map(|s| g.generator(s)).collect();
            simples.sort_unstable();
            assert_eq!(canonical, simples, "{name}");
        }
    }

    #[test]
    fn chi_of_a_dihedral_pair_has_two_elements() {
        // Take two reflections of B3 and close them up: the canonical
        // generator set of the dihedral subgroup they generate has size 2.
        let g = CoxGroup::from_name("B3", &Caps::default()).unwrap();
        let t1 = g.reflection_elem(2);
        let t2 = g.reflection_elem(5);
        let sub = reflection_subgroup(&g, &[t1, t2]);
        let canonical = chi(&g, &sub);
        assert_eq!(canonical.len(), 2);
        // The canonical generators generate the same subgroup.
        let regenerated = reflection_subgroup(&g, &canonical);
        assert_eq!(regenerated, sub);
    }

    #[test]
    fn subgroup_closure_of_two_commuting_reflections() {
        let g = CoxGroup::from_name("A3", &Caps::default()).unwrap();
        let s1 = g.generator(0);
        let s3 = g.generator(2);
        let sub = reflection_subgroup(&g, &[s1, s3]);
        assert_eq!(sub.len(), 4);
        let refls = reflection_subgroup_reflections(&g, &sub);
        assert_eq!(refls, vec![s1.min(s3), s1.max(s3)]);
    }
}
