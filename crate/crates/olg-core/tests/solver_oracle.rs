//! Cross-checks between the reduced system, the solver, and the grid oracle.

use olg_core::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

fn baseline_state() -> SteadyState {
    let outcome =
        solve_steady_state(&ModelParameters::baseline(), &SolverOptions::default()).unwrap();
    assert_eq!(outcome.status, SolveStatus::Converged);
    outcome.state.unwrap()
}

/// Max relative deviation between an oracle allocation and the solver state.
fn oracle_distance(oracle: &Allocation, state: &SteadyState) -> f64 {
    let a = &state.alloc;
    [
        rel(oracle.n, a.n),
        rel(oracle.c1, a.c1),
        rel(oracle.c2, a.c2),
        rel(oracle.ph, a.ph),
        rel(oracle.s, a.s),
        rel(oracle.e, a.e),
        rel(oracle.hp, a.hp),
        rel(oracle.hm, a.hm),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

#[test]
fn reduced_residuals_dip_at_the_oracle_optimum() {
    let params = ModelParameters::baseline();
    let sys = reduce_system(&params).unwrap();
    let oracle = oracle_maximize(
        &params,
        &OracleOptions {
            horizon: 30,
            grid_points: 9,
            refine_rounds: 8,
        },
    )
    .unwrap();

    // The oracle's best point, expressed in the reduced unknowns.
    let lambda = params.gamma1 / oracle.c1;
    let n = oracle.n;

    let outer = |n: f64| {
        let l = sys.solve_lambda(n, 200).expect("feasible");
        sys.fertility_residual(l, n).expect("admissible")
    };
    let at_best = outer(n).abs();
    assert!(at_best < outer(n * 1.01).abs(), "right neighbor");
    assert!(at_best < outer(n / 1.01).abs(), "left neighbor");

    let by_best = sys.young_budget_residual(lambda, n).abs();
    assert!(by_best < sys.young_budget_residual(lambda * 1.01, n).abs());
    assert!(by_best < sys.young_budget_residual(lambda / 1.01, n).abs());
}

#[test]
fn tighter_refinement_never_moves_the_oracle_away() {
    let params = ModelParameters::baseline();
    let state = baseline_state();
    let coarse = oracle_maximize(&params, &OracleOptions::default()).unwrap();
    let fine = oracle_maximize(
        &params,
        &OracleOptions {
            refine_rounds: OracleOptions::default().refine_rounds + 2,
            ..OracleOptions::default()
        },
    )
    .unwrap();

    let d_coarse = oracle_distance(&coarse, &state);
    let d_fine = oracle_distance(&fine, &state);
    assert!(
        d_fine <= d_coarse,
        "refinement moved away: {d_fine:.3e} > {d_coarse:.3e}"
    );
}

#[test]
fn zero_horizon_oracle_disagrees_with_the_solver() {
    // Truncating at a single generation removes the altruism/pension
    // linkage, so the optimum shifts far beyond the agreement gate.
    let params = ModelParameters::baseline();
    let state = baseline_state();
    let oracle = oracle_maximize(
        &params,
        &OracleOptions {
            horizon: 0,
            grid_points: 9,
            refine_rounds: 6,
        },
    )
    .unwrap();
    assert!(
        oracle_distance(&oracle, &state) > 1e-3,
        "single-generation oracle should not reproduce the steady state"
    );
}
