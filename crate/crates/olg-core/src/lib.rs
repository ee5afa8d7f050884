//! Steady-state analysis of a two-period dynastic OLG economy with PAYG
//! pensions and three dimensions of child quality (education, physical
//! health, mental health).
//!
//! The crate provides:
//!
//! - [`model`]: domain types, utility/technology/budget evaluators, the full
//!   first-order-condition residual system, and the closed-form steady-state
//!   wage.
//! - [`solver`]: reduction of the steady-state system to two unknowns and a
//!   bracketed bisection + Newton root finder with full re-verification.
//! - [`oracle`]: an independent brute-force check that maximizes a truncated
//!   dynastic objective over stationary policies by iterated grid refinement,
//!   never touching a first-order condition.
//! - [`statics`]: parameter sweeps, finite-difference sign estimation, and a
//!   machine-checkable comparison against the model's comparative-statics
//!   sign predictions.

// `!(x > 0.0)`-style guards reject NaN as well; keep them literal.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod model;
pub mod oracle;
pub mod solver;
pub mod statics;

pub use model::{
    allocation_ratios, budget_residuals, dynasty_value, foc_residuals, steady_state_wage,
    utility_flow, wage_technology, Allocation, AllocationRatios, BequestMode, ModelError,
    ModelParameters, ResidualVector, ShadowPrices, SteadyState, WageFixedPoint,
};
pub use oracle::{oracle_maximize, truncated_value, OracleError, OracleOptions};
pub use solver::{
    reduce_system, solve_steady_state, verify_state, PolishMode, ReducedSystem, SolveOutcome,
    SolveStatus, SolveTrace, SolverOptions, TracePoint,
};
pub use statics::{
    finite_diff_sign, sign_report, sweep, OutcomeId, ParamId, Sign, SignCell, SignReport,
    StaticsError, SweepRow,
};
