//! Symmetry reductions that shrink the sweep space.
//!
//! Conjugation by the longest element, as well as left and right
//! multiplication by it, map flipclasses to flipclasses with the same
//! valence polynomial and increasing-path count. It therefore suffices
//! to sweep start elements in the lower half of the length range that
//! are minimal in their conjugation orbit, and to keep only one
//! endpoint out of each `{v, w0 v w0}` pair when the start is fixed by
//! conjugation. Orbit minimality is broken by the sorting-word order
//! associated with a Coxeter element (a fixed order on the generators).

use crate::coxgroup::{csort_cmp_in, CoxGroup, ElemId};
use crate::paths::{w0_transform, Flipclass, W0Transform};
use crate::verifier::sweep::flipclass_digest;
use crate::verifier::{ViolationKind, ViolationRecord};
use crate::Result;
use std::cmp::Ordering;
use std::collections::HashMap;

/// Start elements surviving the symmetry reductions for gap `h`:
/// all `u` with `2ℓ(u) ≤ ℓ(w0) − h` that are minimal (or alone) in
/// their `{u, w0 u w0}` pair under the sorting-word order for the
/// Coxeter element given by `gen_order`.
pub fn reduced_start_elements(g: &CoxGroup, h: usize, gen_order: &[usize]) -> Vec<ElemId> {
    let max_len = g.length(g.w0()) as i64 - h as i64;
    let mut out = Vec::new();
    for u in 0..g.size() as ElemId {
        if 2 * g.length(u) as i64 > max_len {
            continue;
        }
        let mate = g.conj_by_w0(u);
        if u == mate || csort_cmp_in(g, gen_order, u, mate) == Ordering::Less {
            out.push(u);
        }
    }
    out
}

/// Whether the flipclass from `u` to `v` survives the endpoint-side
/// reductions: `ℓ(u) ≤ ℓ(w0) − ℓ(v)`, and when `u` is fixed by
/// conjugation, `v` must not come strictly after `w0 v w0` in the
/// sorting-word order.
pub fn flipclass_admissible(
    g: &CoxGroup,
    gen_order: &[usize],
    u: ElemId,
    v: ElemId,
) -> bool {
    let w0_len = g.length(g.w0());
    if g.length(u) + g.length(v) > w0_len {
        return false;
    }
    if g.conj_by_w0(u) == u {
        let mate = g.conj_by_w0(v);
        if v != mate && csort_cmp_in(g, gen_order, v, mate) == Ordering::Greater {
            return false;
        }
    }
    true
}

/// Checks that the reductions lose nothing: every flipclass excluded by
/// them must have an image under one of the longest-element symmetries
/// that *is* admitted, with equal valence polynomial and equal
/// increasing-path count. Returns one violation per unaccounted class.
pub fn verify_reduction_soundness(
    g: &CoxGroup,
    ordering: &crate::coxgroup::ReflectionOrdering,
    gen_order: &[usize],
    h: usize,
    caps: &crate::Caps,
) -> Result<Vec<ViolationRecord>> {
    use crate::paths::enumerate_flipclasses;
    use crate::tsp::TimeSupport;

    // Full enumeration, no reductions.
    let mut all: Vec<(bool, Flipclass)> = Vec::new();
    let reduced_starts: std::collections::HashSet<ElemId> =
        reduced_start_elements(g, h, gen_order).into_iter().collect();
    for u in 0..g.size() as ElemId {
        for f in enumerate_flipclasses(g, ordering, u, h, caps, |_| true)? {
            let admitted =
                reduced_starts.contains(&u) && flipclass_admissible(g, gen_order, f.u(), f.v());
            all.push((admitted, f));
        }
    }

    // Index the admitted classes by digest, remembering their data.
    let mut admitted_data: HashMap<String, (String, u64)> = HashMap::new();
    for (admitted, f) in &all {
        if *admitted {
            let dpoly = TimeSupport::from_flipclass(g, f)
                .valence_polynomial()
                .to_string();
            let c = f.count_increasing(|t| ordering.position(t));
            admitted_data.insert(flipclass_digest(g, f), (dpoly, c));
        }
    }

    let transforms = [
        W0Transform::RightMult,
        W0Transform::LeftMult,
        W0Transform::Conjugate,
    ];
    let mut violations = Vec::new();
    for (admitted, f) in &all {
        if *admitted {
            continue;
        }
        let dpoly = TimeSupport::from_flipclass(g, f)
            .valence_polynomial()
            .to_string();
        let c = f.count_increasing(|t| ordering.position(t));
        let accounted = transforms.iter().any(|&t| {
            let image = match w0_transform(g, f, t) {
                Ok(img) => img,
                Err(_) => return false,
            };
            admitted_data
                .get(&flipclass_digest(g, &image))
                .is_some_and(|(d, cc)| *d == dpoly && *cc == c)
        });
        if !accounted {
            violations.push(ViolationRecord {
                kind: ViolationKind::AntiIsoMismatch,
                provenance: vec![crate::verifier::Provenance {
                    group: g.diagram().to_string(),
                    u: f.u(),
                    v: f.v(),
                    h,
                    flipclass: flipclass_digest(g, f),
                }],
                expected: format!("({dpoly}, {c}) among admitted images"),
                found: "no admitted symmetry image with equal invariants".into(),
                note: "excluded flipclass unaccounted for by the reductions".into(),
            });
        }
    }
    Ok(violations)
}
