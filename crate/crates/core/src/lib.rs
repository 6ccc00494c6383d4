//! Paley 4-graphs on the projective line, tournament 4-graphs, switching,
//! realizability search and exhaustive design verifiers.
//!
//! Vertices are always `0..n`. For the projective line over GF(q) the
//! finite point `[x:1]` is vertex `rank(x)` in the field's canonical order
//! and `[1:0]` is vertex `q`.

pub mod bitset;
pub mod designs;
pub mod field;
pub mod hypergraph;
pub mod projective;
pub mod subsets;
pub mod tournament;

pub use bitset::BitSet;
pub use designs::{
    load_m11, non_tournament_example, two_graph_example, two_graph_from_graph, verify_two_graph,
    EmbeddedDesign,
};
pub use field::{FieldElement, FieldError, FieldSpec};
pub use hypergraph::{
    build_paley_hypergraph, check_de_caen, check_gamma, de_caen_bound, design_parameters,
    fingerprint, gamma_graph, independent_set_count, is_bipartite, link_graph, verify_span,
    Bipartiteness, DeCaenReport, DesignReport, Fingerprint, GammaReport, HypergraphError,
    HypergraphK, LinkGraph, SimpleGraph, SpanMode, SpanReport,
};
pub use projective::{det_pair, pgl_enumerate, s_value, PglElement, ProjPoint, ProjectiveError};
pub use tournament::{
    baber_density, baber_hypergraph, extended_paley_tournament, normalize_to_sink,
    odd_cycle_obstruction, oriented_two_graph, paley_tournament, random_tournament,
    realize_as_tournament, switch, switching_equivalent, DensityReport, Obstruction,
    OrientedTwoGraph, RealizeOutcome, SwitchCertificate, Tournament, TournamentError,
};
