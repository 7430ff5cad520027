//! Framed partial orders for deciding when circuit diagrams embed into
//! background causal structures.

#![allow(clippy::needless_range_loop)]

pub mod canon;
pub mod diagram;
pub mod enumerate;
pub mod fop;
pub mod fpo;
pub mod gen;
pub mod markov;
pub mod named;
pub mod quantum;
pub mod relation;
pub mod search;
pub mod spacetime;
pub mod structure;

pub use canon::{canonical_form, canonicalize, is_relabelling_isomorphic, CanonicalForm};
pub use diagram::{
    coarse_grain, convert_diagram, diagram_to_fpo, diagram_to_fpo_with_provenance, g_normalize, substitute,
    validate_diagram, Converted, Diagram, DiagramError, Endpoint, GResult,
};
pub use enumerate::{
    enumerate_fpo_types, enumerate_minimal_representatives, enumerate_minimal_representatives_with, Catalog,
    CatalogEntry, Filter, Flags,
};
pub use fop::{
    classify_map, embeds, find_fop_map, find_fop_map_with, is_equivalent, is_minimal_representative,
    minimal_representative, minimal_representative_with, projection_to_minrep, Classification, FopMap, MapClass,
    MinimalityStrategy, SearchError,
};
pub use fpo::{parallel_compose, transitive_closure, validate_fpo, Fpo, FpoClass, FpoData, FpoError, Role};
pub use markov::{exogenise, exogenise_with, ExogeniseError};
pub use named::{catalog_named, NamedError, ZigzagFamily, ZigzagSpec};
pub use relation::BitRelation;
pub use search::{BudgetExceeded, DEFAULT_BUDGET};
pub use spacetime::{
    c_local_embed, c_local_embed_with, disjoint_union, minkowski_lattice, site_window_fpo, CausalSite, Embedding,
    Localisation, LocalisationError,
};
