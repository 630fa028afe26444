//! Path and flipclass enumeration.
//!
//! Flipclass enumeration rests on the greedy-path fact: in every flipclass
//! the lexicographically least path is increasing, so walking all
//! label-increasing paths out of a start element and closing each under
//! flips visits every flipclass at that start. Already-seen increasing
//! paths are skipped, which computes each closure exactly once.

use super::flipclass::Flipclass;
use super::path::Path;
use crate::caps::Caps;
use crate::coxgroup::{CoxGroup, ElemId, ReflectionOrdering};
use crate::error::Error;
use crate::Result;
use std::collections::HashSet;

/// All paths of exactly `h` edges from `u` to `v`, by depth-first search
/// with length, parity and interval pruning. Paths come out in
/// lexicographic vertex order.
pub fn enumerate_paths(
    g: &CoxGroup,
    u: ElemId,
    v: ElemId,
    h: usize,
    caps: &Caps,
) -> Result<Vec<Path>> {
    let gap = g.length(v) as i64 - g.length(u) as i64;
    if gap < h as i64 || (gap - h as i64) % 2 != 0 || !g.bruhat_leq(u, v) {
        // Each step raises length by an odd amount, so h steps raise it
        // by at least h and by exactly h modulo 2.
        if u == v && h == 0 {
            return Ok(vec![Path::empty(u)]);
        }
        return Ok(Vec::new());
    }
    let below = g.down_set(v);
    let mut out = Vec::new();
    let mut stack: Vec<ElemId> = vec![u];
    let mut visits: u64 = 0;
    dfs_paths(g, v, h, &below, &mut stack, &mut visits, caps, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_paths(
    g: &CoxGroup,
    v: ElemId,
    remaining: usize,
    below: &crate::bitset::BitSet,
    stack: &mut Vec<ElemId>,
    visits: &mut u64,
    caps: &Caps,
    out: &mut Vec<Path>,
) -> Result<()> {
    *visits += 1;
    if *visits > caps.max_paths {
        return Err(Error::CapExceeded(format!(
            "path enumeration exceeded {} visited nodes",
            caps.max_paths
        )));
    }
    let x = *stack.last().unwrap();
    if remaining == 0 {
        if x == v {
            out.push(Path::from_vertices(g, stack).expect("stack is a path"));
        }
        return Ok(());
    }
    let gap = g.length(v) as i64 - g.length(x) as i64;
    for &(_, y) in g.up_edges(x) {
        if !below.contains(y as usize) {
            continue;
        }
        let step = g.length(y) as i64 - g.length(x) as i64;
        let rest = gap - step;
        if rest < (remaining - 1) as i64 || (rest - (remaining - 1) as i64) % 2 != 0 {
            continue;
        }
        stack.push(y);
        dfs_paths(g, v, remaining - 1, below, stack, visits, caps, out)?;
        stack.pop();
    }
    Ok(())
}

/// All `h`-edge paths out of `u` whose labels increase strictly in the
/// given reflection ordering, regardless of endpoint.
pub fn enumerate_increasing_paths(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    u: ElemId,
    h: usize,
    caps: &Caps,
) -> Result<Vec<Path>> {
    let mut out = Vec::new();
    let mut stack = vec![u];
    let mut visits = 0u64;
    dfs_increasing(g, ordering, h, None, &mut stack, &mut visits, caps, &mut |p| {
        out.push(p)
    })?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs_increasing(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    remaining: usize,
    floor: Option<u32>,
    stack: &mut Vec<ElemId>,
    visits: &mut u64,
    caps: &Caps,
    sink: &mut impl FnMut(Path),
) -> Result<()> {
    *visits += 1;
    if *visits > caps.max_paths {
        return Err(Error::CapExceeded(format!(
            "increasing-path enumeration exceeded {} visited nodes",
            caps.max_paths
        )));
    }
    if remaining == 0 {
        sink(Path::from_vertices(g, stack).expect("stack is a path"));
        return Ok(());
    }
    let x = *stack.last().unwrap();
    for &(t, y) in g.up_edges(x) {
        let pos = ordering.position(t);
        if floor.is_some_and(|f| pos <= f) {
            continue;
        }
        stack.push(y);
        dfs_increasing(g, ordering, remaining - 1, Some(pos), stack, visits, caps, sink)?;
        stack.pop();
    }
    Ok(())
}

/// All flipclasses of `h`-paths starting at `u` whose endpoint passes the
/// filter, each computed once and returned sorted by canonical key.
///
/// Every flipclass contains at least one increasing path, so closing each
/// fresh increasing path under flips is exhaustive; increasing paths
/// found inside an earlier closure are skipped.
pub fn enumerate_flipclasses(
    g: &CoxGroup,
    ordering: &ReflectionOrdering,
    u: ElemId,
    h: usize,
    caps: &Caps,
    mut accept_end: impl FnMut(ElemId) -> bool,
) -> Result<Vec<Flipclass>> {
    let mut classes: Vec<Flipclass> = Vec::new();
    let mut covered: HashSet<Vec<ElemId>> = HashSet::new();
    let mut stack = vec![u];
    let mut visits = 0u64;
    let mut pending: Vec<Path> = Vec::new();
    dfs_increasing(g, ordering, h, None, &mut stack, &mut visits, caps, &mut |p| {
        pending.push(p)
    })?;
    for path in pending {
        if !accept_end(path.end(g)) {
            continue;
        }
        if covered.contains(&path.vertices(g)) {
            continue;
        }
        let class = Flipclass::of(g, &path, caps)?;
        for member in class.increasing_paths(|t| ordering.position(t)) {
            covered.insert(member.vertices(g));
        }
        classes.push(class);
    }
    classes.sort_by(|a, b| a.canonical_key(g).cmp(&b.canonical_key(g)));
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> CoxGroup {
        CoxGroup::from_name(name, &Caps::default()).unwrap()
    }

    #[test]
    fn a2_paths_from_e_to_w0() {
        let g = group("A2");
        let caps = Caps::default();
        // One direct edge, four maximal chains (both middle levels are
        // fully connected), nothing of even length.
        assert_eq!(enumerate_paths(&g, g.identity(), g.w0(), 1, &caps).unwrap().len(), 1);
        assert_eq!(enumerate_paths(&g, g.identity(), g.w0(), 2, &caps).unwrap().len(), 0);
        assert_eq!(enumerate_paths(&g, g.identity(), g.w0(), 3, &caps).unwrap().len(), 4);
        // Length-0 paths exist exactly from an element to itself.
        assert_eq!(enumerate_paths(&g, g.w0(), g.w0(), 0, &caps).unwrap().len(), 1);
        assert_eq!(enumerate_paths(&g, g.identity(), g.w0(), 0, &caps).unwrap().len(), 0);
    }

    #[test]
    fn increasing_paths_pick_one_per_two_path_class() {
        // Between e and s1s2 in A2 there are two 2-paths but only one has
        // increasing labels, whatever the ordering.
        let g = group("A2");
        let caps = Caps::default();
        let ordering = ReflectionOrdering::default_for(&g);
        let all = enumerate_increasing_paths(&g, &ordering, g.identity(), 2, &caps).unwrap();
        let v = g.elem_from_word(&[0, 1]).unwrap();
        let to_v: Vec<&Path> = all.iter().filter(|p| p.end(&g) == v).collect();
        assert_eq!(to_v.len(), 1);
    }

    #[test]
    fn flipclass_enumeration_finds_the_maximal_chain_class() {
        let g = group("A2");
        let caps = Caps::default();
        let ordering = ReflectionOrdering::default_for(&g);
        let classes =
            enumerate_flipclasses(&g, &ordering, g.identity(), 3, &caps, |_| true).unwrap();
        // Only endpoint w0 admits 3-paths from e; its class holds all
        // four maximal chains.
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].v(), g.w0());
        assert_eq!(classes[0].len(), 4);
    }

    #[test]
    fn endpoint_filter_prunes_classes() {
        let g = group("A2");
        let caps = Caps::default();
        let ordering = ReflectionOrdering::default_for(&g);
        let classes =
            enumerate_flipclasses(&g, &ordering, g.identity(), 1, &caps, |_| true).unwrap();
        assert_eq!(classes.len(), 3, "one single-edge class per reflection");
        let none =
            enumerate_flipclasses(&g, &ordering, g.identity(), 1, &caps, |_| false).unwrap();
        assert!(none.is_empty());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let g = group("A3");
        let caps = Caps {
            max_paths: 5,
            ..Caps::default()
        };
        let err = enumerate_paths(&g, g.identity(), g.w0(), 6, &caps).unwrap_err();
        assert!(err.is_cap_exceeded());
    }
}
