//! Shuffle products of flipclasses across direct-product groups.
//!
//! A path in `W1` and a path in `W2` combine, inside `W1 x W2`, into one
//! path per interleaving of their step sequences. Applied to whole
//! flipclasses this yields a flipclass of the product group with
//! `|F1| * |F2| * C(h1 + h2, h1)` paths, and the numerical invariants
//! multiply accordingly.

use super::flipclass::Flipclass;
use super::path::Path;
use crate::coxgroup::{CoxGroup, ElemId, ReflId};
use crate::error::Error;
use crate::Result;

/// Embeds an element of a factor group into the product group, shifting
/// generator indices by `shift`.
fn embed_elem(small: &CoxGroup, product: &CoxGroup, shift: usize, x: ElemId) -> Result<ElemId> {
    let word: Vec<usize> = small
        .normal_form(x)
        .iter()
        .map(|&s| s as usize + shift)
        .collect();
    product.elem_from_word(&word)
}

/// Embeds a reflection of a factor group into the product group.
fn embed_refl(small: &CoxGroup, product: &CoxGroup, shift: usize, t: ReflId) -> Result<ReflId> {
    let elem = embed_elem(small, product, shift, small.reflection_elem(t))?;
    product.reflection_of(elem).ok_or_else(|| {
        Error::Element("embedded reflection is not a reflection of the product group".into())
    })
}

/// Forms the flipclass of all shuffles of paths from `f1` (in `g1`) with
/// paths from `f2` (in `g2`), inside the product group `product`, whose
/// diagram must be exactly the factors of `g1` followed by those of `g2`.
pub fn shuffle_product(
    g1: &CoxGroup,
    f1: &Flipclass,
    g2: &CoxGroup,
    f2: &Flipclass,
    product: &CoxGroup,
) -> Result<Flipclass> {
    let mut want = g1.diagram().factors().to_vec();
    want.extend(g2.diagram().factors().iter().cloned());
    if product.diagram().factors() != want.as_slice() {
        return Err(Error::Diagram(format!(
            "product group {} does not match factor groups {} and {}",
            product.diagram(),
            g1.diagram(),
            g2.diagram()
        )));
    }
    let shift = g1.rank();

    let start = product.mult(
        embed_elem(g1, product, 0, f1.u())?,
        embed_elem(g2, product, shift, f2.u())?,
    );
    let mut paths = Vec::new();
    for p1 in f1.paths() {
        let labels1: Vec<ReflId> = p1
            .labels()
            .iter()
            .map(|&t| embed_refl(g1, product, 0, t))
            .collect::<Result<_>>()?;
        for p2 in f2.paths() {
            let labels2: Vec<ReflId> = p2
                .labels()
                .iter()
                .map(|&t| embed_refl(g2, product, shift, t))
                .collect::<Result<_>>()?;
            let h = labels1.len() + labels2.len();
            // Each interleaving is encoded by the set of positions taken
            // by steps of the first path.
            let mut mask_positions = vec![false; h];
            shuffle_rec(
                product,
                start,
                &labels1,
                &labels2,
                0,
                0,
                &mut mask_positions,
                &mut paths,
            )?;
        }
    }
    Ok(Flipclass::from_paths(product, paths))
}

#[allow(clippy::too_many_arguments)]
fn shuffle_rec(
    g: &CoxGroup,
    start: ElemId,
    labels1: &[ReflId],
    labels2: &[ReflId],
    i: usize,
    j: usize,
    taken_from_first: &mut [bool],
    out: &mut Vec<Path>,
) -> Result<()> {
    let pos = i + j;
    if pos == taken_from_first.len() {
        let mut labels = Vec::with_capacity(pos);
        let (mut a, mut b) = (0, 0);
        for &first in taken_from_first.iter() {
            if first {
                labels.push(labels1[a]);
                a += 1;
            } else {
                labels.push(labels2[b]);
                b += 1;
            }
        }
        out.push(Path::new(g, start, labels)?);
        return Ok(());
    }
    if i < labels1.len() {
        taken_from_first[pos] = true;
        shuffle_rec(g, start, labels1, labels2, i + 1, j, taken_from_first, out)?;
    }
    if j < labels2.len() {
        taken_from_first[pos] = false;
        shuffle_rec(g, start, labels1, labels2, i, j + 1, taken_from_first, out)?;
    }
    Ok(())
}
