//! Construction of a finite Coxeter group from its diagram.
//!
//! Elements are stored as the signed permutation they induce on a basis of
//! tracked objects: for a geometric factor these are its positive roots
//! (with sign recording when a root is sent to a negative root), for a
//! polygonal dihedral factor the vertices of the regular `m`-gon. The
//! representation is faithful, composition is index chasing, and lengths
//! fall out of a breadth-first search of the right Cayley graph.

use super::diagram::{Diagram, Realization};
use super::group::{CoxGroup, ElemId, ReflId, NO_REFL};
use super::scalar::Scalar;
use crate::caps::Caps;
use crate::error::Error;
use crate::Result;
use std::collections::HashMap;

/// Signed one-based index: `+(k + 1)` means basis item `k` with sign `+`.
type SignedIdx = i32;

/// Per-factor layout and generator actions.
struct FactorData {
    /// Width of this factor's block in element states.
    state_width: usize,
    /// Width of this factor's block in root coordinates.
    root_dim: usize,
    /// For each local generator, its action on the factor's basis items.
    gen_actions: Vec<Vec<SignedIdx>>,
    /// Positive-root coordinates (length `root_dim` each) for geometric
    /// factors, indexed like the state block; empty for polygon factors.
    positive_roots: Vec<Vec<Scalar>>,
    /// True when this factor stores roots rather than polygon vertices.
    geometric: bool,
}

/// Enumerate the positive roots of a geometric factor, sorted by their
/// coordinate vectors for determinism, and return the simple-reflection
/// actions on them.
fn geometric_factor(cartan: &[Vec<Scalar>], expected_roots: usize) -> FactorData {
    let rank = cartan.len();
    let apply = |s: usize, v: &[Scalar]| -> Vec<Scalar> {
        // Simple reflection in simple-root coordinates: only entry `s`
        // changes, by subtracting the pairing with row `s` of the Cartan
        // matrix.
        let mut out = v.to_vec();
        let mut pairing = Scalar::zero();
        for (j, coord) in v.iter().enumerate() {
            pairing += cartan[s][j].clone() * coord.clone();
        }
        out[s] = out[s].clone() - pairing;
        out
    };
    let is_nonneg = |v: &[Scalar]| v.iter().all(|c| !c.is_negative());
    let is_nonpos = |v: &[Scalar]| v.iter().all(|c| !c.is_positive());

    let mut roots: Vec<Vec<Scalar>> = Vec::new();
    let mut seen: HashMap<Vec<Scalar>, usize> = HashMap::new();
    for s in 0..rank {
        let mut simple = vec![Scalar::zero(); rank];
        simple[s] = Scalar::one();
        seen.insert(simple.clone(), roots.len());
        roots.push(simple);
    }
    let mut head = 0;
    while head < roots.len() {
        let current = roots[head].clone();
        head += 1;
        for s in 0..rank {
            let image = apply(s, &current);
            if is_nonpos(&image) {
                continue; // the negative of a known positive root
            }
            assert!(is_nonneg(&image), "root image is neither positive nor negative");
            if !seen.contains_key(&image) {
                seen.insert(image.clone(), roots.len());
                roots.push(image);
            }
        }
    }
    assert_eq!(
        roots.len(),
        expected_roots,
        "positive root count disagrees with the classification"
    );

    roots.sort();
    let index: HashMap<Vec<Scalar>, usize> =
        roots.iter().cloned().zip(0..).collect();

    let mut gen_actions = Vec::with_capacity(rank);
    for s in 0..rank {
        let mut action = Vec::with_capacity(roots.len());
        for root in &roots {
            let image = apply(s, root);
            if let Some(&k) = index.get(&image) {
                action.push((k + 1) as SignedIdx);
            } else {
                let negated: Vec<Scalar> =
                    image.iter().map(|c| -c.clone()).collect();
                let k = index[&negated];
                action.push(-((k + 1) as SignedIdx));
            }
        }
        gen_actions.push(action);
    }

    FactorData {
        state_width: roots.len(),
        root_dim: rank,
        gen_actions,
        positive_roots: roots,
        geometric: true,
    }
}

/// The dihedral group `I_2(m)` acting on the vertices `0..m` of a regular
/// `m`-gon: generator 0 is the reflection fixing vertex 0's axis, generator
/// 1 the reflection through the axis between vertices 0 and 1.
fn polygon_factor(m: u32) -> FactorData {
    let m = m as usize;
    let refl = |offset: usize| -> Vec<SignedIdx> {
        (0..m)
            .map(|k| (((offset + m - k) % m) + 1) as SignedIdx)
            .collect()
    };
    FactorData {
        state_width: m,
        root_dim: 2,
        gen_actions: vec![refl(0), refl(1)],
        positive_roots: Vec::new(),
        geometric: false,
    }
}

/// Compose signed index maps: `(a . b)(k) = a(b(k))` with sign transfer.
fn compose_into(a: &[SignedIdx], b: &[SignedIdx], out: &mut Vec<SignedIdx>) {
    out.clear();
    out.extend(b.iter().map(|&bk| {
        let idx = (bk.unsigned_abs() - 1) as usize;
        if bk > 0 {
            a[idx]
        } else {
            -a[idx]
        }
    }));
}

/// Invert a signed index map.
fn invert_state(state: &[SignedIdx], out: &mut Vec<SignedIdx>) {
    out.clear();
    out.resize(state.len(), 0);
    for (j, &img) in state.iter().enumerate() {
        let idx = (img.unsigned_abs() - 1) as usize;
        let signed_j = (j + 1) as SignedIdx;
        out[idx] = if img > 0 { signed_j } else { -signed_j };
    }
}

pub(super) fn build_group(diagram: &Diagram, caps: &Caps) -> Result<CoxGroup> {
    let rank = diagram.rank();
    if rank > caps.max_rank {
        return Err(Error::CapExceeded(format!(
            "rank {rank} of {diagram} exceeds cap {}",
            caps.max_rank
        )));
    }
    let order = diagram.order()?;
    if order > caps.max_group_size {
        return Err(Error::CapExceeded(format!(
            "order {order} of {diagram} exceeds cap {}",
            caps.max_group_size
        )));
    }
    let size = order as usize;

    // Per-factor layout.
    let factors: Vec<FactorData> = diagram
        .factors()
        .iter()
        .map(|f| match f.realization() {
            Realization::Geometric { cartan } => {
                geometric_factor(&cartan, f.reflection_count())
            }
            Realization::Polygon { m } => polygon_factor(m),
        })
        .collect();
    let dim: usize = factors.iter().map(|f| f.state_width).sum();
    let root_dim: usize = factors.iter().map(|f| f.root_dim).sum();

    // Global generator states.
    let mut gen_states: Vec<Vec<SignedIdx>> = Vec::with_capacity(rank);
    {
        let mut state_base = 0;
        for f in &factors {
            for action in &f.gen_actions {
                let mut state: Vec<SignedIdx> =
                    (1..=dim as SignedIdx).collect();
                for (k, &img) in action.iter().enumerate() {
                    let global = if img > 0 {
                        img + state_base as SignedIdx
                    } else {
                        img - state_base as SignedIdx
                    };
                    state[state_base + k] = global;
                }
                gen_states.push(state);
            }
            state_base += f.state_width;
        }
    }

    // Breadth-first search of the right Cayley graph. Depth is the length
    // function because each generator step changes length by exactly one
    // and the identity has depth zero.
    let identity: Vec<SignedIdx> = (1..=dim as SignedIdx).collect();
    let mut states: Vec<SignedIdx> = Vec::with_capacity(size * dim);
    let mut lengths: Vec<u32> = Vec::with_capacity(size);
    let mut right: Vec<ElemId> = Vec::with_capacity(size * rank);
    let mut lookup: HashMap<Vec<SignedIdx>, ElemId> = HashMap::with_capacity(size * 2);

    states.extend_from_slice(&identity);
    lengths.push(0);
    lookup.insert(identity, 0);

    let mut scratch: Vec<SignedIdx> = Vec::with_capacity(dim);
    let mut head: usize = 0;
    while head < lengths.len() {
        // `right` grows in lockstep with the queue: row `head` is filled
        // here, after which `head` is never revisited.
        let row_base = right.len();
        right.resize(row_base + rank, 0);
        for (s, gen_state) in gen_states.iter().enumerate() {
            let state = &states[head * dim..(head + 1) * dim];
            compose_into(state, gen_state, &mut scratch);
            let id = match lookup.get(scratch.as_slice()) {
                Some(&id) => id,
                None => {
                    let id = lengths.len() as ElemId;
                    states.extend_from_slice(&scratch);
                    lengths.push(lengths[head] + 1);
                    lookup.insert(scratch.clone(), id);
                    id
                }
            };
            right[row_base + s] = id;
        }
        head += 1;
    }
    assert_eq!(lengths.len(), size, "group order disagrees with the classification");

    // ShortLex normal forms, computed in length order: the least reduced
    // word starts with the smallest left descent.
    let mut by_length: Vec<ElemId> = (0..size as ElemId).collect();
    by_length.sort_by_key(|&e| lengths[e as usize]);
    let mut nf: Vec<Vec<u8>> = vec![Vec::new(); size];
    for &e in &by_length {
        if lengths[e as usize] == 0 {
            continue;
        }
        let state = &states[e as usize * dim..(e as usize + 1) * dim];
        let mut chosen = None;
        for (s, gen_state) in gen_states.iter().enumerate() {
            compose_into(gen_state, state, &mut scratch);
            let down = lookup[scratch.as_slice()];
            if lengths[down as usize] < lengths[e as usize] {
                chosen = Some((s, down));
                break;
            }
        }
        let (s, down) = chosen.expect("non-identity element has a left descent");
        let mut word = Vec::with_capacity(nf[down as usize].len() + 1);
        word.push(s as u8);
        word.extend_from_slice(&nf[down as usize]);
        nf[e as usize] = word;
    }

    // Re-number elements by (length, ShortLex word), the order used for all
    // reported ids. The identity keeps id 0.
    let mut perm: Vec<ElemId> = (0..size as ElemId).collect();
    perm.sort_by(|&a, &b| {
        lengths[a as usize]
            .cmp(&lengths[b as usize])
            .then_with(|| nf[a as usize].cmp(&nf[b as usize]))
    });
    let mut new_id: Vec<ElemId> = vec![0; size];
    for (fresh, &old) in perm.iter().enumerate() {
        new_id[old as usize] = fresh as ElemId;
    }

    let mut final_states: Vec<SignedIdx> = vec![0; size * dim];
    let mut final_lengths: Vec<u32> = vec![0; size];
    let mut final_nf: Vec<Vec<u8>> = vec![Vec::new(); size];
    let mut final_right: Vec<ElemId> = vec![0; size * rank];
    for old in 0..size {
        let fresh = new_id[old] as usize;
        final_states[fresh * dim..(fresh + 1) * dim]
            .copy_from_slice(&states[old * dim..(old + 1) * dim]);
        final_lengths[fresh] = lengths[old];
        final_nf[fresh] = std::mem::take(&mut nf[old]);
        for s in 0..rank {
            final_right[fresh * rank + s] = new_id[right[old * rank + s] as usize];
        }
    }
    drop(states);
    drop(right);
    let mut lookup: HashMap<Vec<SignedIdx>, ElemId> = lookup
        .into_iter()
        .map(|(state, id)| (state, new_id[id as usize]))
        .collect();
    lookup.shrink_to_fit();

    let states = final_states;
    let lengths = final_lengths;
    let nf = final_nf;
    let right = final_right;
    let state_of = |e: ElemId| &states[e as usize * dim..(e as usize + 1) * dim];

    // Left multiplication table and inverses.
    let gen_ids: Vec<ElemId> = (0..rank)
        .map(|s| lookup[gen_states[s].as_slice()])
        .collect();
    let mut left: Vec<ElemId> = vec![0; size * rank];
    let mut inverse: Vec<ElemId> = vec![0; size];
    for e in 0..size {
        for (s, gen_state) in gen_states.iter().enumerate() {
            compose_into(gen_state, state_of(e as ElemId), &mut scratch);
            left[e * rank + s] = lookup[scratch.as_slice()];
        }
        invert_state(state_of(e as ElemId), &mut scratch);
        inverse[e] = lookup[scratch.as_slice()];
    }

    // Reflections: closure of the generators under conjugation by
    // generators. The count must match the classification.
    let mut is_reflection = vec![false; size];
    let mut refl_queue: Vec<ElemId> = Vec::new();
    for &g in &gen_ids {
        if !is_reflection[g as usize] {
            is_reflection[g as usize] = true;
            refl_queue.push(g);
        }
    }
    let mut head = 0;
    while head < refl_queue.len() {
        let t = refl_queue[head];
        head += 1;
        for s in 0..rank {
            let st = left[t as usize * rank + s];
            let sts = right[st as usize * rank + s];
            if !is_reflection[sts as usize] {
                is_reflection[sts as usize] = true;
                refl_queue.push(sts);
            }
        }
    }
    let mut reflections: Vec<ElemId> =
        (0..size as ElemId).filter(|&e| is_reflection[e as usize]).collect();
    reflections.sort_unstable();
    assert_eq!(
        reflections.len(),
        diagram.reflection_count(),
        "reflection count disagrees with the classification"
    );
    for &t in &reflections {
        debug_assert_eq!(lengths[t as usize] % 2, 1, "reflections have odd length");
    }
    let mut refl_of: Vec<ReflId> = vec![NO_REFL; size];
    for (tid, &t) in reflections.iter().enumerate() {
        refl_of[t as usize] = tid as ReflId;
    }

    // Root coordinates per reflection. A reflection lives in exactly one
    // factor: the block where its state differs from the identity. In a
    // geometric block it negates exactly one tracked positive root, which
    // is its root; in a polygon block the image of vertex 0 identifies it,
    // and a synthetic planar vector keeps distinct reflections of the same
    // dihedral factor linearly independent, which is all the span
    // computations need.
    let state_bases: Vec<usize> = factors
        .iter()
        .scan(0, |acc, f| {
            let base = *acc;
            *acc += f.state_width;
            Some(base)
        })
        .collect();
    let root_bases: Vec<usize> = factors
        .iter()
        .scan(0, |acc, f| {
            let base = *acc;
            *acc += f.root_dim;
            Some(base)
        })
        .collect();
    let mut roots: Vec<Vec<Scalar>> = Vec::with_capacity(reflections.len());
    for &t in &reflections {
        let state = state_of(t);
        let mut root = vec![Scalar::zero(); root_dim];
        let mut owner = None;
        for (fi, f) in factors.iter().enumerate() {
            let base = state_bases[fi];
            let block = &state[base..base + f.state_width];
            // State entries are global signed indices, so the identity on
            // this block reads base + k + 1 at offset k.
            let moved = block
                .iter()
                .enumerate()
                .any(|(k, &img)| img != (base + k + 1) as SignedIdx);
            if !moved {
                continue;
            }
            assert!(owner.is_none(), "reflection acts in more than one factor");
            owner = Some(fi);
            if f.geometric {
                let negated: Vec<usize> = block
                    .iter()
                    .enumerate()
                    .filter(|&(k, &img)| img == -((base + k + 1) as SignedIdx))
                    .map(|(k, _)| k)
                    .collect();
                assert_eq!(negated.len(), 1, "reflection negates exactly one positive root");
                let coords = &f.positive_roots[negated[0]];
                root[root_bases[fi]..root_bases[fi] + f.root_dim]
                    .clone_from_slice(coords);
            } else {
                let j = block[0] as usize - base - 1;
                root[root_bases[fi]] = Scalar::one();
                root[root_bases[fi] + 1] = Scalar::from_int(j as i64);
            }
        }
        assert!(owner.is_some(), "reflection is not the identity");
        roots.push(root);
    }

    // Longest element: unique element of maximal length, an involution.
    let max_len = diagram.reflection_count() as u32;
    let longest: Vec<ElemId> = (0..size as ElemId)
        .filter(|&e| lengths[e as usize] == max_len)
        .collect();
    assert_eq!(longest.len(), 1, "longest element is unique");
    let w0 = longest[0];
    assert_eq!(inverse[w0 as usize], w0, "longest element is an involution");

    // Bruhat graph edges: for every element and every reflection, the left
    // product goes either up or down in length.
    let mut up_edges: Vec<Vec<(ReflId, ElemId)>> = vec![Vec::new(); size];
    let mut down_edges: Vec<Vec<(ReflId, ElemId)>> = vec![Vec::new(); size];
    for v in 0..size {
        let lv = lengths[v];
        for (tid, &t) in reflections.iter().enumerate() {
            compose_into(state_of(t), state_of(v as ElemId), &mut scratch);
            let tv = lookup[scratch.as_slice()];
            let ltv = lengths[tv as usize];
            debug_assert_ne!(ltv, lv, "reflection multiples change length");
            if ltv > lv {
                up_edges[v].push((tid as ReflId, tv));
            } else {
                down_edges[v].push((tid as ReflId, tv));
            }
        }
    }

    Ok(CoxGroup {
        diagram: diagram.clone(),
        size,
        rank,
        dim,
        root_dim,
        states,
        lookup,
        lengths,
        nf,
        right,
        left,
        inverse,
        gen_ids,
        reflections,
        refl_of,
        roots,
        w0,
        up_edges,
        down_edges,
    })
}
