//! Exact q-series workbench for the parts-weighted crank statistic of
//! k-colored partitions.
//!
//! The crate computes `NB_k(r, m, n)`, the total first-color part count
//! over k-colored partitions of `n` whose two-color crank is `r` mod `m`,
//! by two independent routes (group-ring power series and literal
//! enumeration), evaluates infinite-product and Lambert-series
//! expressions exactly to any truncation order, and mechanically verifies
//! a registry of dissection identities and congruences about them.
//!
//! Everything is exact: coefficients are arbitrary-precision integers or
//! rationals, every series window carries its precision, and reading past
//! a window is an error instead of a silently wrong zero.
//!
//! Modules, bottom up:
//!
//! * [`coeff`]: coefficient rings: integers, rationals, cyclic group
//!   rings, and the degree-four field of a primitive fifth root of unity.
//! * [`series`]: truncated Laurent series with precision-tracking
//!   arithmetic, inversion, progression extraction, and `q -> q^k`
//!   substitution.
//! * [`products`]: Pochhammer symbols, theta sums, and sums-of-products
//!   expressions evaluated over the rationals.
//! * [`lambert`]: the X/Y/R Lambert-series blocks.
//! * [`colored_partitions`]: the statistic itself: series construction,
//!   enumeration oracles, tables, and a shared cache.
//! * [`identities`]: the case registry, the verifier, and the congruence
//!   checker.

pub mod coeff;
pub mod colored_partitions;
pub mod identities;
pub mod lambert;
pub mod products;
pub mod series;

pub use coeff::{
    apply_character, BigRat, CycRing5, Cyclotomic5, GroupRing, GroupRingElem, IntRing,
    RatRing, Ring, ToRational,
};
pub use colored_partitions::{
    character_series, combine_and_dissect, component_series, crank_count_series,
    nb_combo_series, nb_enumerate, nb_enumerate_literal, nb_series, partition_counts,
    CrankSeries, EnumerationError, NbCache, NbTable,
};
pub use identities::{
    congruence::{
        congruence_registry, find_congruence, verify_congruence, CongruenceCase,
        CongruenceReport, Violation, WeightKind,
    },
    find_cases, glob_match, registry, CaseClass, IdentityCase, LhsSpec, MismatchDetail,
    Status, VerificationReport, Verifier,
};
pub use lambert::{lambert_rt, lambert_x, lambert_y, LambertError, LambertExpr};
pub use products::{
    euler, euler_inverse, five_dissection_expr, five_dissection_unit, pochhammer,
    pochhammer_pow, rr_quotient, theta_plain, theta_weighted, PochFactor, ProductExpr,
    ProductTerm, ThetaKind,
};
pub use series::{SeriesError, TruncatedSeries};
