//! Exact arithmetic for minimal linear codes over Z_n: canonical submodule
//! forms, orthogonal-module structure, minimality deciders, explicit
//! constructions, length bounds, and exhaustive minimum-length search.
//!
//! Indexing convention: coordinates are 0-based everywhere in the API;
//! user-facing text (CLI messages, reports) uses 1-based positions.

pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod io;
pub mod linalg;
pub mod perp;
pub mod ring;
pub mod search;

pub use bounds::{bounds_report, incidence_sum, BoundsReport};
pub use code::{
    is_minimal_code, is_minimal_code_oracle, is_minimal_codeword, is_minimal_codeword_oracle,
    orthogonal_columns, unit_orbit_representatives, ColumnMultiset, LinearCode, MinimalityReport,
};
pub use error::{Error, Result};
pub use linalg::{
    enumerate_vectors, howell_form, is_linearly_independent, kernel, span_of, Submodule, ZnMatrix,
    ZnVec, DEFAULT_THRESHOLD,
};
pub use perp::{
    classify_root_word, count_root_words, double_perp, perp_basis, root_words_mod_units, PerpBasis,
};
pub use ring::{factorize, RingShape, RingSpec};
pub use search::{monotonicity_check, search_m_min, SearchConstraints, SearchReport};
