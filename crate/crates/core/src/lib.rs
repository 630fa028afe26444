//! Exact combinatorics of Bruhat graphs in finite Coxeter groups.
//!
//! The crate is organised in four layers, each building on the previous one:
//!
//! * [`coxgroup`] — construction of finite Coxeter groups from a diagram
//!   string such as `"B3"` or `"A2xI2(7)"`: multiplication tables, lengths,
//!   reflections, root data, the Bruhat graph, reflection orderings and
//!   interval posets.
//! * [`paths`] — paths in the Bruhat graph, the flip operators on them,
//!   flipclasses and their invariants (increasing-path count, label span,
//!   dihedrality, shuffle products, longest-element symmetries,
//!   combinatorial isomorphism) and R-tilde polynomials.
//! * [`tsp`] — the time-support poset of a flipclass and its valence
//!   polynomial.
//! * [`verifier`] — the sweep/verify pipeline: enumerate flipclasses over a
//!   roster of groups, assign gamma values to valence polynomials, check
//!   refinement and congruence properties, and write report files.
//!
//! All arithmetic is exact: group elements are permutation-like states,
//! scalars live in `Q(sqrt 5)`, and polynomials have big-integer
//! coefficients. There are no floating-point numbers anywhere.

pub mod bitset;
pub mod caps;
pub mod coxgroup;
pub mod error;
pub mod paths;
pub mod tsp;
pub mod verifier;

pub use caps::Caps;
pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
