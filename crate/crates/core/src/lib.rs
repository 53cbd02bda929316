//! Permutrees decorated by words over `{none, down, up, updown}`: the
//! rotation lattice on their inversion sets, the vector coordinates of
//! each tree, and the polytope and cubical realizations built from them.

pub mod decoration;
pub mod error;
pub mod geometry;
pub mod inversion;
pub mod lattice;
pub mod oracle;
pub mod permutree;
pub mod vertex_set;

pub use decoration::{normalize_decoration, Decoration, Kind, Normalized, MAX_VERTICES};
pub use error::{Error, Result};
pub use inversion::{transitive_closure, InversionSet};
pub use lattice::{
    check_lattice, covers, enumerate, enumerate_with_bound, is_valid_inversion_set, join, leq,
    meet, meet_components, meet_filter, tree_from_inversion_set, Cover, Lattice, LatticeReport,
};
pub use oracle::{OracleReport, Family};
pub use permutree::{EdgeCut, Extreme, Permutree, Slot};
pub use vertex_set::VertexSet;
pub use geometry::{
    build_cubical, build_polytope, check_cube, extremal_permutree, verify_polytope,
    CubicalRealization, PolytopeRealization,
};
