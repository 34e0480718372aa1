//! Exact solvers and structure analysis for homomorphism problems on small
//! digraphs, with a focus on surjective colouring of reflexive tournaments.

pub mod catalogue;
pub mod checks;
pub mod classify;
pub mod digraph;
pub mod endo;
pub mod enumerate;
pub mod error;
pub mod figures;
pub mod gadget;
pub mod glue;
pub mod hom;
pub mod instances;
pub mod io;
pub mod iso;
pub mod limits;
pub mod map;
pub mod poly;
pub mod product;

pub use digraph::{Digraph, HamiltonCycle};
pub use error::{Error, Result};
pub use glue::{glue, induced_subgraph, Glued, Slot};
pub use hom::{
    find_compaction, find_homomorphism, find_list_homomorphism, find_retraction,
    find_surjective_homomorphism, HomSearch, ListAssignment, RetractionInstance, Variant,
};
pub use map::VertexMap;
pub use product::{direct_power, direct_product, TupleCodec};
