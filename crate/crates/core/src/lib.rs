//! Generalized Ramsey numbers for stars.
//!
//! `R_{s,t}(K_{1,n})` is the least `p` such that every `t`-coloring of the
//! edges of `K_p` contains an `n`-edge star using at most `s` colors. This
//! crate computes the exact value for `s = t - 1` and `s = t - 2`, builds
//! edge colorings certifying the matching lower bounds, checks them, and
//! cross-checks the closed forms with an exhaustive search on small graphs.
//!
//! Vertex and color indices are 1-based throughout.

pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod verify;

pub use constructions::{witness_coloring, RecipeTag, WitnessRecipe};
pub use error::{Error, Result};
pub use formulas::{
    classify_only, general_bounds, ramsey_star_s_eq_t_minus_1, ramsey_star_s_eq_t_minus_2,
    BoundsInterval, CaseData, CaseTag, CaseVerdict, Query,
};
pub use graph::{Color, ColorDegreeProfile, Edge, EdgeColoring, VertexId};
pub use matching::{near_one_factorization, one_factorization, OrderedMatching};
pub use oracle::{oracle_max_min_star_colors, oracle_ramsey, OracleConfig, SearchStats};
pub use verify::{check_certificate, min_star_colors, sample_upper_check, Certificate, StarColors};
