//! Construction and verification of the flag-transitive 2-(36,6,λ) designs
//! whose points are the 36 secants of a conic in PG(2,8), under the action of
//! PΓL₂(8) ≅ ²G₂(3).
//!
//! The pipeline runs bottom-up: [`field`] arithmetic, the plane and conic in
//! [`geometry`], the permutation-group engine in [`perm`], the group model in
//! [`ree`], designs in [`design`], isomorphism testing in [`iso`], and the
//! completeness search in [`search`]. [`cli`] wires it to the command line.

pub mod cli;
pub mod design;
pub mod field;
pub mod geometry;
pub mod iso;
pub mod perm;
pub mod ree;
pub mod search;
