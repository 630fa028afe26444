//! Paths in the Bruhat graph and their flip structure.
//!
//! A path here always means a directed path `u -> x1 -> .. -> v` in the
//! Bruhat graph, each edge labelled by the reflection carrying one end to
//! the other. The flip operators replace the interior vertex of a length-2
//! subpath by its canonical partner; orbits of paths under flips are
//! flipclasses, the central objects of the crate.

mod dihedral;
mod enumerate;
mod flip;
mod flipclass;
mod iso;
mod path;
mod product;
mod rtilde;
mod transform;

pub use dihedral::{dihedral_flipclass_count, dihedral_rtilde, odd_compositions};
pub use enumerate::{enumerate_flipclasses, enumerate_increasing_paths, enumerate_paths};
pub use flip::{flip2_pairing, flip2_partner, flip_path, two_path_middles};
pub use flipclass::Flipclass;
pub use iso::{comb_anti_isomorphic, comb_isomorphic};
pub use path::Path;
pub use product::shuffle_product;
pub use rtilde::{rtilde_dyer, rtilde_recurrence, QPoly, RtildeTable};
pub use transform::{w0_transform, W0Transform};
