//! Exact-arithmetic discrete Morse theory over the integers.
//!
//! The crate turns the combinatorics of gradient vector fields into
//! executable integer checks:
//!
//! - simplicial complexes, chains, boundary operators, inner products
//!   ([`complex`], [`chain`]);
//! - discrete vector fields, acyclicity certificates, critical and
//!   co-critical chains via path-weight dynamic programming, and the
//!   modified chain-group basis ([`dvf`], [`morse`]);
//! - chain maps, maps induced by simplicial maps, the subdivision chain
//!   map, and both sides of the combinatorial Hopf trace formula
//!   ([`chain_map`]);
//! - combinatorial spheres with certified witnesses, orientations,
//!   fundamental cycles, and the combinatorial degree of `Z_p`-equivariant
//!   simplicial maps ([`sphere`], [`action`]);
//! - constructive sphere builders: skeleta, cones, barycentric subdivision,
//!   joins, and greedy collapses ([`collapse`], [`subdivision`]).
//!
//! Every coefficient is an overflow-checked 64-bit integer; nothing in the
//! crate approximates. See the `examples/` directory for runnable tours of
//! each capability, and the `hopftrace` binary for the file-driven CLI.

pub mod action;
pub mod chain;
pub mod chain_map;
pub mod cli;
pub mod collapse;
pub mod complex;
pub mod dvf;
pub mod error;
pub mod generate;
pub mod io;
pub mod linalg;
pub mod morse;
pub mod report;
pub mod simplex;
pub mod simplicial_map;
pub mod sphere;
pub mod subdivision;

pub use action::{
    build_zp_circle, odd_dimension_check, verify_degree_mod_p, verify_equivariance,
    DegreeModPReport, GroupAction,
};
pub use chain::{inner_product, BasisElement, BasisQ, Chain};
pub use chain_map::{
    cone_chain, hopf_rhs, subdivision_chain_map, subdivision_step, verify_hopf, ChainMap,
    HopfReport,
};
pub use collapse::{
    circle_witness, derive_sphere_witness, greedy_collapse, gvf_cone_transfer, gvf_join,
    gvf_skeleton_minus_facet, skeleton_sphere_witness, sphere_witness_bd, CollapseStuck,
};
pub use complex::{
    cone, cycle_complex, fresh_vertex, is_pseudomanifold, join, skeleton_of_simplex, ComplexHandle,
    JoinEmbedding, PseudomanifoldFailure, SimplicialComplex,
};
pub use dvf::{
    ClosedTrajectory, Direction, DiscreteVectorField, DvfViolation, GradientCertificate,
    MatchingCensus, Trajectory,
};
pub use error::{Error, Result};
pub use morse::{co_critical_chain, critical_chain, modified_basis};
pub use simplex::{incidence_number, Simplex, Vertex};
pub use simplicial_map::SimplicialMap;
pub use sphere::{
    combinatorial_degree, cone_lemma_check, degree_of_chain_map, degree_oracle_preimage,
    orientation_from_witness, orientation_pair, transported_orientation, OrientationVector,
    SphereWitness,
};
pub use subdivision::{barycentric_subdivision, BdMap, SubdivisionTower};
