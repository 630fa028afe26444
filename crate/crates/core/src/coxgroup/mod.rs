//! Finite Coxeter groups: construction, Bruhat graph, reflection orderings.

mod build;
mod canon;
mod csort;
mod diagram;
mod group;
mod interval;
mod ordering;
mod scalar;
mod subgroup;

pub use canon::poset_certificate;
pub use csort::{csort_cmp, csort_cmp_in, csort_key, csort_key_in};
pub use diagram::{Diagram, Family};
pub use group::{CoxGroup, ElemId, ReflId};
pub use interval::IntervalPoset;
pub use ordering::ReflectionOrdering;
pub use scalar::Scalar;
pub use subgroup::{chi, reflection_subgroup, reflection_subgroup_reflections};
