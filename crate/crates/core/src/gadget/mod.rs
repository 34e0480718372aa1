//! Cylinder gadgets, spill sets, and the reductions built from them.

pub mod cyl;
pub mod reduce;
pub mod spill;

pub use cyl::{build_cyl, verify_dagger, CylGadget, DaggerReport};
pub use reduce::{
    connectify, reduce_base_i, reduce_base_ii, reduce_components, reduce_general_i,
    reduce_general_ii, reduce_general_ii_chain_only, Case, Claim, EmbeddedSubgraph, Origin,
    Problem, Recipe, ReductionInstance, Soundness,
};
pub use spill::{
    build_f, reach_of_cylinder, spill, spill_by_position, spill_within, FDigraph, Spill, SpillWitness,
};
