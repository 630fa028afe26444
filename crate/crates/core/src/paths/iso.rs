//! Combinatorial isomorphism of flipclasses.
//!
//! Two flipclasses are combinatorially isomorphic when some bijection of
//! their vertex sets carries the one path set onto the other and commutes
//! with every flip; anti-isomorphic when it carries paths onto reversed
//! paths and swaps flip `i` with flip `h - i`. Because middle sets can
//! have more than two elements, carrying paths to paths does not by
//! itself force flip compatibility, so the search re-verifies it
//! explicitly on every complete candidate.

use super::flip::flip_path;
use super::flipclass::Flipclass;
use crate::caps::Caps;
use crate::coxgroup::{CoxGroup, ElemId};
use crate::error::Error;
use crate::Result;
use std::collections::HashMap;

/// Searches for a combinatorial isomorphism from `f1` to `f2`; returns
/// the vertex bijection as sorted pairs if one exists.
pub fn comb_isomorphic(
    g1: &CoxGroup,
    f1: &Flipclass,
    g2: &CoxGroup,
    f2: &Flipclass,
    caps: &Caps,
) -> Result<Option<Vec<(ElemId, ElemId)>>> {
    search(g1, f1, g2, f2, false, caps)
}

/// Searches for a combinatorial anti-isomorphism from `f1` to `f2`.
pub fn comb_anti_isomorphic(
    g1: &CoxGroup,
    f1: &Flipclass,
    g2: &CoxGroup,
    f2: &Flipclass,
    caps: &Caps,
) -> Result<Option<Vec<(ElemId, ElemId)>>> {
    search(g1, f1, g2, f2, true, caps)
}

fn search(
    g1: &CoxGroup,
    f1: &Flipclass,
    g2: &CoxGroup,
    f2: &Flipclass,
    anti: bool,
    caps: &Caps,
) -> Result<Option<Vec<(ElemId, ElemId)>>> {
    if f1.h() != f2.h() || f1.len() != f2.len() {
        return Ok(None);
    }
    let verts1 = f1.vertex_set(g1);
    let verts2 = f2.vertex_set(g2);
    if verts1.len() != verts2.len() {
        return Ok(None);
    }
    if verts1.len() > caps.max_iso_elements {
        return Err(Error::CapExceeded(format!(
            "isomorphism search limited to {} vertices, class has {}",
            caps.max_iso_elements,
            verts1.len()
        )));
    }
    let h = f1.h();
    let source: Vec<Vec<ElemId>> = f1.paths().iter().map(|p| p.vertices(g1)).collect();
    // For an anti-isomorphism the image of a path, read backwards, must
    // be a path of f2; equivalently the bijection carries each source
    // sequence onto a reversed target sequence.
    let target: Vec<Vec<ElemId>> = f2
        .paths()
        .iter()
        .map(|p| {
            let mut v = p.vertices(g2);
            if anti {
                v.reverse();
            }
            v
        })
        .collect();

    // Elements must occupy matching time slots, up to the reversal.
    let profile = |seqs: &[Vec<ElemId>], rev: bool| -> HashMap<ElemId, Vec<u32>> {
        let mut prof: HashMap<ElemId, Vec<u32>> = HashMap::new();
        for seq in seqs {
            for (i, &x) in seq.iter().enumerate() {
                let slot = if rev { h - i } else { i } as u32;
                prof.entry(x).or_default().push(slot);
            }
        }
        for times in prof.values_mut() {
            times.sort_unstable();
        }
        prof
    };
    let prof1 = profile(&source, false);
    let prof2 = profile(&target, false);
    {
        let mut counts1: Vec<&Vec<u32>> = prof1.values().collect();
        let mut counts2: Vec<&Vec<u32>> = prof2.values().collect();
        counts1.sort();
        counts2.sort();
        if counts1 != counts2 {
            return Ok(None);
        }
    }

    let mut state = State {
        fwd: HashMap::new(),
        bwd: HashMap::new(),
        used: vec![false; target.len()],
        assignment: Vec::with_capacity(source.len()),
    };
    if assign_paths(&source, &target, &prof1, &prof2, 0, &mut state)
        && flips_commute(g1, f1, g2, f2, anti, &state.fwd)?
    {
        let mut pairs: Vec<(ElemId, ElemId)> = state.fwd.into_iter().collect();
        pairs.sort_unstable();
        return Ok(Some(pairs));
    }
    Ok(None)
}

struct State {
    fwd: HashMap<ElemId, ElemId>,
    bwd: HashMap<ElemId, ElemId>,
    used: Vec<bool>,
    assignment: Vec<usize>,
}

/// Extends the partial vertex bijection path by path, backtracking on
/// conflicts. On success `state.fwd` is total on the source vertex set.
fn assign_paths(
    source: &[Vec<ElemId>],
    target: &[Vec<ElemId>],
    prof1: &HashMap<ElemId, Vec<u32>>,
    prof2: &HashMap<ElemId, Vec<u32>>,
    k: usize,
    state: &mut State,
) -> bool {
    if k == source.len() {
        return true;
    }
    'candidates: for (idx, cand) in target.iter().enumerate() {
        if state.used[idx] {
            continue;
        }
        let mut added: Vec<ElemId> = Vec::new();
        for (&x, &y) in source[k].iter().zip(cand.iter()) {
            match (state.fwd.get(&x), state.bwd.get(&y)) {
                (Some(&y0), _) if y0 != y => {
                    undo(state, &added);
                    continue 'candidates;
                }
                (_, Some(&x0)) if x0 != x => {
                    undo(state, &added);
                    continue 'candidates;
                }
                (None, None) => {
                    if prof1[&x] != prof2[&y] {
                        undo(state, &added);
                        continue 'candidates;
                    }
                    state.fwd.insert(x, y);
                    state.bwd.insert(y, x);
                    added.push(x);
                }
                _ => {}
            }
        }
        state.used[idx] = true;
        state.assignment.push(idx);
        if assign_paths(source, target, prof1, prof2, k + 1, state) {
            return true;
        }
        state.assignment.pop();
        state.used[idx] = false;
        undo(state, &added);
    }
    false
}

fn undo(state: &mut State, added: &[ElemId]) {
    for &x in added {
        let y = state.fwd.remove(&x).expect("added pair present");
        state.bwd.remove(&y);
    }
}

/// Checks that the candidate bijection commutes with every flip: the
/// image of `flip_i(p)` must equal `flip_i` (or `flip_{h-i}` for an
/// anti-isomorphism) of the image of `p`.
fn flips_commute(
    g1: &CoxGroup,
    f1: &Flipclass,
    g2: &CoxGroup,
    f2: &Flipclass,
    anti: bool,
    fwd: &HashMap<ElemId, ElemId>,
) -> Result<bool> {
    let h = f1.h();
    let image_of = |p: &super::path::Path| -> Vec<ElemId> {
        let mut v: Vec<ElemId> = p.vertices(g1).iter().map(|x| fwd[x]).collect();
        if anti {
            v.reverse();
        }
        v
    };
    let index2: HashMap<Vec<ElemId>, usize> = f2
        .paths()
        .iter()
        .enumerate()
        .map(|(i, p)| (p.vertices(g2), i))
        .collect();
    for p in f1.paths() {
        let Some(&q_idx) = index2.get(&image_of(p)) else {
            return Ok(false);
        };
        let q = &f2.paths()[q_idx];
        for i in 1..h {
            let flipped = flip_path(g1, p, i)?;
            let i2 = if anti { h - i } else { i };
            let q_flipped = flip_path(g2, q, i2)?;
            if image_of(&flipped) != q_flipped.vertices(g2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{w0_transform, Path, W0Transform};

    fn group(name: &str) -> CoxGroup {
        CoxGroup::from_name(name, &Caps::default()).unwrap()
    }

    fn class_of_chain(g: &CoxGroup, word: &[usize]) -> Flipclass {
        let mut verts = vec![g.identity()];
        for k in 1..=word.len() {
            verts.push(g.elem_from_word(&word[..k]).unwrap());
        }
        let p = Path::from_vertices(g, &verts).unwrap();
        Flipclass::of(g, &p, &Caps::default()).unwrap()
    }

    #[test]
    fn every_class_is_isomorphic_to_itself() {
        let g = group("B2");
        let f = class_of_chain(&g, &[0, 1, 0, 1]);
        let iso = comb_isomorphic(&g, &f, &g, &f, &Caps::default()).unwrap();
        assert!(iso.is_some());
        let pairs = iso.unwrap();
        assert_eq!(pairs.len(), f.vertex_set(&g).len());
    }

    #[test]
    fn two_path_squares_agree_across_groups() {
        // The class of 2-paths from e to s1 s2 in A2 and the full diamond
        // of A1 x A1 have the same abstract shape.
        let g1 = group("A2");
        let p1 = Path::from_vertices(
            &g1,
            &[
                g1.identity(),
                g1.generator(0),
                g1.elem_from_word(&[0, 1]).unwrap(),
            ],
        )
        .unwrap();
        let f1 = Flipclass::of(&g1, &p1, &Caps::default()).unwrap();
        let g2 = group("A1xA1");
        let p2 = Path::from_vertices(&g2, &[g2.identity(), g2.generator(0), g2.w0()]).unwrap();
        let f2 = Flipclass::of(&g2, &p2, &Caps::default()).unwrap();
        let iso = comb_isomorphic(&g1, &f1, &g2, &f2, &Caps::default()).unwrap();
        assert!(iso.is_some());
        // Both classes are also anti-isomorphic: a square is self-dual.
        let anti = comb_anti_isomorphic(&g1, &f1, &g2, &f2, &Caps::default()).unwrap();
        assert!(anti.is_some());
    }

    #[test]
    fn size_mismatch_is_rejected_without_search() {
        let g1 = group("A2");
        let f1 = class_of_chain(&g1, &[0, 1, 0]);
        let g2 = group("A1xA1xA1");
        let f2 = class_of_chain(&g2, &[0, 1, 2]);
        assert_eq!(f1.h(), f2.h());
        assert_ne!(f1.len(), f2.len());
        let iso = comb_isomorphic(&g1, &f1, &g2, &f2, &Caps::default()).unwrap();
        assert!(iso.is_none());
    }

    #[test]
    fn right_mult_transform_is_an_anti_isomorphism() {
        let g = group("A3");
        let f = class_of_chain(&g, &[0, 1, 2]);
        let image = w0_transform(&g, &f, W0Transform::RightMult).unwrap();
        let anti = comb_anti_isomorphic(&g, &f, &g, &image, &Caps::default())
            .unwrap()
            .expect("right multiplication by w0 reverses paths");
        // The witness found need not be x -> x w0 itself, but that map is
        // one valid witness; check it satisfies the path condition.
        let w0 = g.w0();
        let explicit: HashMap<ElemId, ElemId> = f
            .vertex_set(&g)
            .into_iter()
            .map(|x| (x, g.mult(x, w0)))
            .collect();
        assert!(flips_commute(&g, &f, &g, &image, true, &explicit).unwrap());
        assert!(!anti.is_empty());
    }

    #[test]
    fn iso_search_respects_the_vertex_cap() {
        let g = group("A2");
        let f = class_of_chain(&g, &[0, 1, 0]);
        let caps = Caps {
            max_iso_elements: 2,
            ..Caps::default()
        };
        let err = comb_isomorphic(&g, &f, &g, &f, &caps).unwrap_err();
        assert!(err.is_cap_exceeded());
    }
}
