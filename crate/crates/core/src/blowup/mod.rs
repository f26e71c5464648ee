//! The tautological ring of the blow-up `U_{n-1}` of `C^{n-1}` along the
//! diagonal loci `X_I`.
//!
//! Elements use ambient `n`: `a_i`, `b_{j,k}` carry indices in `1..n-1`,
//! exceptional classes `E_I` need `I ⊆ {1..n}` with `|I| <= n - 3`.

pub mod forest;
pub mod index;
pub mod oracle;
pub mod pairing;
pub mod reduce;
pub mod relations;
pub mod standard;

pub use forest::{build_forest, Forest};
pub use index::{admissible_sets, is_admissible, star_compatible, subset_less};
pub use oracle::brute_force_betti;
pub use pairing::{
    identity5_eval, pairing_matrix_blowup, pairing_matrix_full, verify_gorenstein,
    verify_gorenstein_with, PairingReport,
};
pub use reduce::{blowup_reduce, blowup_socle_eval, Reducer};
pub use relations::{relation_generators, CenterPresentation, Relation, RelationKind};
pub use standard::{
    blowup_dual, enumerate_standard_blowup, filtration_level, is_standard, EPart,
    StandardBlowupMonomial,
};
