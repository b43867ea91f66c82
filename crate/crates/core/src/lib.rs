//! Computations with almost gentle algebras given by quiver
//! presentations with quadratic monomial relations: validation, maximal
//! paths and dimension, the star algebra presenting the trivial
//! extension, admissible cuts, and the Brauer-style hypergraph
//! invariants that classify trivial extensions up to isomorphism.

pub mod brauer;
pub mod cli;
pub mod cut;
pub mod hypergraph;
pub mod iso;
pub mod pair;
pub mod presentation;
pub mod quiver;
pub mod render;
pub mod sample;
pub mod star;
pub mod text;
pub mod trivial;

pub use brauer::{configuration_of_pair, BrauerConfiguration};
pub use hypergraph::{
    check_hypergraph_iso, hypergraph_of, hypergraphs_isomorphic, reduce_to_configuration,
    signature, truncation_vertices, HVertex, HVertexKind, Hyperedge, HypergraphIso,
    HypergraphSignature, OrientedHypergraph,
};
pub use cut::{
    admissible_cut_count, admissible_cuts, canonical_cut, cut_algebra, AdmissibleCut, CutError,
};
pub use iso::{
    check_pair_iso, check_presentation_iso, pairs_isomorphic, presentations_isomorphic,
    IsoOutcome, PresentationIso, DEFAULT_BUDGET,
};
pub use pair::{
    relations_of_pair, validate_pair, CycleClass, CycleError, DefiningPair, PairRelations,
    PairReport, PairViolation, SimpleCycle, Type1Relation, Type2Relation,
};
pub use presentation::{
    AlgebraError, MaximalPath, Presentation, PresentationError, S1Violation, Side,
    StructuralError, ValidationReport,
};
pub use quiver::{Arrow, ArrowId, Path, PathError, Quiver, QuiverError, VertexId};
pub use star::{star, star_dimension, StarAlgebra};
pub use text::{parse, print_pair, print_presentation, PairInput, ParseError, SourceFile};
pub use trivial::{arrow_images, tmult, verify_star_iso, StarIsoReport, TBasisElement, TrivialExtension};
