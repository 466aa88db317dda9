//! Double-branched-cover invariants of tunnel number one knots.
//!
//! Computes the Seifert invariants of the double branched covers of torus
//! and Montesinos knots, lifts of 2-bridge links, and the JSJ pieces of
//! satellite covers, and decides for each family whether a knot is
//! determined by its double branched cover. When it is not, the 2-twin is
//! produced explicitly.
//!
//! All arithmetic is exact and generic over the integer type: `i64` (the
//! default, with overflow reported as an error), `i128`, or `BigInt`.

pub mod branched_covers;
pub mod error;
pub mod exact_arith;
pub mod knot_types;
pub mod notation;
pub mod seifert;
pub mod twin_classifier;

pub use num_bigint::BigInt;

pub use branched_covers::{
    cover_jsj_satellite, cover_of_montesinos, cover_of_torus_knot, cover_of_torus_knot_with,
    lift_two_bridge, CoverDerivation, JsjGraph, JsjPiece, LiftResult, TorusCoverCase,
};
pub use error::{Error, Result};
pub use exact_arith::{
    constrained_cf, egcd, eval_cf, solve_bezout_neg1, Bezout, CfExpansion, CfForm, Int, Rational,
};
pub use knot_types::{
    bridge_index_torus, normalize_montesinos, normalize_torus, two_bridge_equivalent, Chirality,
    KnotPresentation, MontesinosKnot, SatelliteTn1, Tangle, Torus, TorusKnot, TwoBridge,
};
pub use notation::{parse_presentation, parse_presentation_capped};
pub use seifert::{normalize_sfs, sfs_equivalent, Fiber, Orientation, SfsInvariants};
pub use twin_classifier::{
    brute_force_twin_search, classify_by_bridge_data, classify_montesinos, classify_satellite,
    classify_torus, decide, is_tn1_montesinos, oracle_verdict, seifert_cover, verify_twin,
    BridgeVerdict, ConditionTag, Determination, Evidence, Tn1Case, TorusCoverIndex, TwinClass,
    Verdict,
};

pub type Rational64 = Rational<i64>;
pub type RationalBig = Rational<BigInt>;
pub type Knot64 = KnotPresentation<i64>;
pub type KnotBig = KnotPresentation<BigInt>;
pub type Sfs64 = SfsInvariants<i64>;
pub type SfsBig = SfsInvariants<BigInt>;
pub type Determination64 = Determination<i64>;
pub type DeterminationBig = Determination<BigInt>;
