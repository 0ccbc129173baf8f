//! Comparability graphs, partial order dimension, and containment
//! representations.
//!
//! The crate is organized around a small set of immutable values:
//! [`Graph`] (undirected, simple, labeled), [`Poset`] (strict partial
//! order, stored transitively closed), [`Orientation`] (a direction for
//! every edge of a graph), and the representation types ([`SetFamily`],
//! [`IntervalRep`], [`BoxRep`], [`StarSubtreeRep`]).
//!
//! On top of those sit four engines:
//!
//! * [`comparability`] — recognize comparability graphs, produce a
//!   transitive orientation or an odd-walk obstruction certificate,
//!   and orient nested graph sequences coherently.
//! * [`dimension`] — linear extension enumeration and exact partial
//!   order dimension by minimum realizer search, with a polynomial
//!   fast path for dimension ≤ 2.
//! * [`represent`] — constructive builders: downset families, star
//!   subtrees, intervals from a 2-realizer, boxes in d-space from a
//!   2d-realizer, composition posets, and the overlap transform.
//! * [`verify`] — independent checkers that a representation realizes
//!   a graph or poset under containment, intersection, overlap, or
//!   disjointedness semantics.

pub mod comparability;
pub mod dimension;
pub mod error;
pub mod graph;
pub mod orientation;
pub mod poset;
pub mod represent;
pub mod verify;

pub use comparability::{
    all_transitive_orientations, coherent_orient, find_odd_cycle_certificate, is_comparability,
    transitive_orient, validate_certificate, OddCycleCertificate,
};
pub use dimension::{
    box_dimension, default_budget, dimension, dimension_with_extension_cap, find_realizer_of_size,
    graph_dimension, hiraguchi_bound, is_two_dimensional, linear_extensions, verify_realizer,
    DimensionResult, LinearOrder, Realizer, DEFAULT_EXTENSION_CAP,
};
pub use error::{Error, Result};
pub use graph::{Graph, ReduceMode};
pub use orientation::Orientation;
pub use poset::Poset;
pub use represent::{
    box_representation, boxes_to_embedding, composition_poset, disjointedness_complement,
    downset_representation, embedding_order, interval_representation, overlap_from_intersection,
    star_subtree_representation, BoxRep, IntervalRep, SetFamily, StarSubtreeRep,
};
pub use verify::{
    derive_containment_order, injectivity_audit, verify_containment_graph,
    verify_containment_poset, verify_disjointedness, verify_intersection, verify_overlap,
    InjectivityReport, Representation, SetRelation, Verdict, Violation, WantedRelation,
};
