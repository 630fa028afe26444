//! Symmetries of the set of flipclasses induced by the longest element.
//!
//! Right multiplication by `w0` reverses Bruhat order and sends a path to
//! its reversed image with the same labels; left multiplication reverses
//! as well but conjugates the labels; conjugation by `w0` preserves order
//! and conjugates the labels. All three carry flipclasses to flipclasses
//! and preserve path counts and label spans.

use super::flipclass::Flipclass;
use super::path::Path;
use crate::coxgroup::{CoxGroup, ElemId};
use crate::Result;

/// The three transforms induced by the longest element `w0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum W0Transform {
    /// `x -> x w0`, an anti-automorphism; paths reverse.
    RightMult,
    /// `x -> w0 x`, an anti-automorphism; paths reverse.
    LeftMult,
    /// `x -> w0 x w0`, an automorphism; paths keep their direction.
    Conjugate,
}

/// Applies a `w0` transform to every path of a flipclass.
pub fn w0_transform(g: &CoxGroup, f: &Flipclass, t: W0Transform) -> Result<Flipclass> {
    let w0 = g.w0();
    let map = |x: ElemId| match t {
        W0Transform::RightMult => g.mult(x, w0),
        W0Transform::LeftMult => g.mult(w0, x),
        W0Transform::Conjugate => g.mult(g.mult(w0, x), w0),
    };
    let reverse = matches!(t, W0Transform::RightMult | W0Transform::LeftMult);
    let mut paths = Vec::with_capacity(f.len());
    for p in f.paths() {
        let mut verts: Vec<ElemId> = p.vertices(g).into_iter().map(map).collect();
        if reverse {
            verts.reverse();
        }
        paths.push(Path::from_vertices(g, &verts)?);
    }
    Ok(Flipclass::from_paths(g, paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;

    fn setup() -> (CoxGroup, Flipclass) {
        let g = CoxGroup::from_name("A3", &Caps::default()).unwrap();
        // A 3-path class inside [s2, s2 w0-ish]: start from a maximal
        // chain of the interval [e, s1 s2 s3].
        let verts = [
            g.identity(),
            g.generator(0),
            g.elem_from_word(&[0, 1]).unwrap(),
            g.elem_from_word(&[0, 1, 2]).unwrap(),
        ];
        let p = Path::from_vertices(&g, &verts).unwrap();
        let f = Flipclass::of(&g, &p, &Caps::default()).unwrap();
        (g, f)
    }

    #[test]
    fn transforms_preserve_class_structure() {
        let (g, f) = setup();
        for t in [
            W0Transform::RightMult,
            W0Transform::LeftMult,
            W0Transform::Conjugate,
        ] {
            let image = w0_transform(&g, &f, t).unwrap();
            assert_eq!(image.len(), f.len(), "{t:?}");
            assert_eq!(image.h(), f.h(), "{t:?}");
            assert_eq!(image.span_dim(&g), f.span_dim(&g), "{t:?}");
            // The image is itself closed under flips.
            let closure = Flipclass::of(&g, &image.paths()[0], &Caps::default()).unwrap();
            assert_eq!(image, closure, "{t:?}");
        }
    }

    #[test]
    fn endpoints_move_as_expected() {
        let (g, f) = setup();
        let w0 = g.w0();
        let right = w0_transform(&g, &f, W0Transform::RightMult).unwrap();
        assert_eq!(right.u(), g.mult(f.v(), w0));
        assert_eq!(right.v(), g.mult(f.u(), w0));
        let conj = w0_transform(&g, &f, W0Transform::Conjugate).unwrap();
        assert_eq!(conj.u(), g.mult(g.mult(w0, f.u()), w0));
        assert_eq!(conj.v(), g.mult(g.mult(w0, f.v()), w0));
    }

    #[test]
    fn each_transform_is_an_involution() {
        let (g, f) = setup();
        for t in [
            W0Transform::RightMult,
            W0Transform::LeftMult,
            W0Transform::Conjugate,
        ] {
            let twice = w0_transform(&g, &w0_transform(&g, &f, t).unwrap(), t).unwrap();
            assert_eq!(twice, f, "{t:?}");
        }
    }

    #[test]
    fn right_mult_keeps_labels_left_mult_conjugates_them() {
        let (g, f) = setup();
        let p = &f.paths()[0];
        let w0 = g.w0();
        let right = w0_transform(&g, &f, W0Transform::RightMult).unwrap();
        // Find the image of p: its reversed, multiplied vertex sequence.
        let mut verts: Vec<ElemId> = p.vertices(&g).iter().map(|&x| g.mult(x, w0)).collect();
        verts.reverse();
        let image = right
            .paths()
            .iter()
            .find(|q| q.vertices(&g) == verts)
            .expect("image path is in the class");
        let mut reversed_labels = p.labels().to_vec();
        reversed_labels.reverse();
        assert_eq!(image.labels(), &reversed_labels[..]);

        let left = w0_transform(&g, &f, W0Transform::LeftMult).unwrap();
        let mut verts: Vec<ElemId> = p.vertices(&g).iter().map(|&x| g.mult(w0, x)).collect();
        verts.reverse();
        let image = left
            .paths()
            .iter()
            .find(|q| q.vertices(&g) == verts)
            .expect("image path is in the class");
        let conj: Vec<_> = reversed_labels
            .iter()
            .map(|&t| {
                g.reflection_of(g.mult(g.mult(w0, g.reflection_elem(t)), w0))
                    .unwrap()
            })
            .collect();
        assert_eq!(image.labels(), &conj[..]);
    }
}
