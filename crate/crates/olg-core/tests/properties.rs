//! Property tests for the model invariants: identities that must hold at any
//! interior solution, for any valid parameter draw.

use olg_core::*;
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1e-300)
}

/// Valid parameter sets with enough interior room for the default bracket.
fn params_strategy() -> impl Strategy<Value = ModelParameters> {
    (
        0.5..1.5f64,   // gamma1
        0.3..1.0f64,   // gamma_ph
        0.5..1.5f64,   // gamma2
        0.5..1.2f64,   // gamma_c
        0.1..0.8f64,   // alpha
        0.15..0.45f64, // tau
        0.05..0.3f64,  // phi
        0.5..2.0f64,   // wbar
        (0.08..0.25f64, 0.08..0.25f64, 0.08..0.25f64),
        1.1..2.5f64, // R
        proptest::option::of(0.0..0.002f64),
    )
        .prop_map(
            |(gamma1, gamma_ph, gamma2, gamma_c, alpha, tau, phi, wbar, els, r_gross, b)| {
                ModelParameters {
                    gamma1,
                    gamma_ph,
                    gamma2,
                    gamma_c,
                    alpha,
                    tau,
                    phi,
                    wbar,
                    eps: els.0,
                    eta: els.1,
                    theta: els.2,
                    r_gross,
                    bequest: match b {
                        Some(v) => BequestMode::ExogenousValue(v),
                        None => BequestMode::ExogenousZero,
                    },
                }
            },
        )
        .prop_filter("keep returns-to-quality away from one", |p| {
            p.sigma() < 0.65
        })
}

fn wide_bracket() -> SolverOptions {
    SolverOptions {
        bracket: (1e-5, 10.0),
        ..SolverOptions::default()
    }
}

proptest! {
    #[test]
    fn wage_technology_is_homogeneous_of_degree_sigma(
        e in 0.01..2.0f64,
        hp in 0.01..2.0f64,
        hm in 0.01..2.0f64,
        k in 0.1..10.0f64,
        params in params_strategy(),
    ) {
        let base = wage_technology(e, hp, hm, &params).unwrap();
        let scaled = wage_technology(k * e, k * hp, k * hm, &params).unwrap();
        prop_assert!(rel(scaled, base * k.powf(params.sigma())) <= 1e-12);
    }

    #[test]
    fn allocation_ratios_are_consistent(params in params_strategy()) {
        let r = allocation_ratios(&params);
        prop_assert!(rel(r.e_over_hp * r.hp_over_hm, r.e_over_hm) <= 1e-12);
        prop_assert!(r.mental_health_share > 0.0 && r.mental_health_share < 1.0);
    }

    #[test]
    fn young_budget_residual_is_linear_in_consumption(
        params in params_strategy(),
        delta in 0.001..1.0f64,
    ) {
        let alloc = Allocation {
            c1: 1.0, c2: 1.0, ph: 0.5, s: 0.2, n: 0.5,
            e: 0.1, hp: 0.1, hm: 0.1, b: params.bequest_value(),
        };
        let (base, _) = budget_residuals(&alloc, 2.0, &params);
        let mut bumped = alloc;
        bumped.c1 += delta;
        let (shifted, _) = budget_residuals(&bumped, 2.0, &params);
        prop_assert!(rel(base - shifted, delta) <= 1e-10);
    }

    #[test]
    fn truncated_value_matches_explicit_sum(
        params in params_strategy(),
        n in 0.2..1.2f64,
        horizon in 0usize..40,
    ) {
        let alloc = Allocation {
            c1: 0.7, c2: 0.9, ph: 0.3, s: 0.0, n,
            e: 0.1, hp: 0.1, hm: 0.1, b: params.bequest_value(),
        };
        let flow = utility_flow(&alloc, &params).unwrap();
        let x = params.alpha * n;
        let mut acc = 0.0;
        let mut pow = 1.0;
        for _ in 0..=horizon {
            acc += pow * flow;
            pow *= x;
        }
        let v = truncated_value(&alloc, &params, horizon).unwrap();
        prop_assert!(rel(v, acc) <= 1e-11, "formula {} vs sum {}", v, acc);
    }

    #[test]
    fn dynasty_value_rejects_divergent_products(
        alpha in 0.5..3.0f64,
        n in 0.5..3.0f64,
    ) {
        prop_assume!(alpha * n >= 1.0);
        let mut params = ModelParameters::baseline();
        params.alpha = alpha;
        prop_assert!(dynasty_value(1.0, n, &params).is_err());
    }

    #[test]
    fn closed_form_wage_reproduces_itself(params in params_strategy()) {
        let fp = steady_state_wage(&params);
        let w = wage_technology(fp.e, fp.hp, fp.hm, &params).unwrap();
        prop_assert!((w - fp.w).abs() <= 1e-12 * fp.w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Every identity the model guarantees at an interior steady state.
    #[test]
    fn solved_states_satisfy_the_interior_identities(params in params_strategy()) {
        let outcome = solve_steady_state(&params, &wide_bracket()).unwrap();
        prop_assume!(outcome.status == SolveStatus::Converged);
        let state = outcome.state.unwrap();
        let a = &state.alloc;

        prop_assert!(state.alpha_n < 1.0);
        prop_assert!(state.residual_norm <= 1e-10);
        prop_assert!(rel(a.c2 / a.c1, (params.gamma_c / params.gamma1) * params.r_gross) <= 1e-12);
        prop_assert!(rel(a.ph, (params.gamma_ph / params.gamma1) * a.c1) <= 1e-12);
        prop_assert!(rel(a.e / a.hp, params.eps / params.eta) <= 1e-12);
        prop_assert!(rel(a.e / a.hm, params.eps / params.theta) <= 1e-12);
        prop_assert!(rel(a.hp / a.hm, params.eta / params.theta) <= 1e-12);
        prop_assert!(rel(a.mental_health_share(), params.theta / params.sigma()) <= 1e-12);

        let w_child = wage_technology(a.e, a.hp, a.hm, &params).unwrap();
        prop_assert!((state.w - w_child).abs() <= 1e-10 * state.w);

        // Independent re-verification from raw definitions.
        let residuals = verify_state(&state, &params).unwrap();
        prop_assert!(residuals.max_abs() <= 1e-10);
    }

    #[test]
    fn solves_are_deterministic(params in params_strategy()) {
        let a = solve_steady_state(&params, &wide_bracket()).unwrap();
        let b = solve_steady_state(&params, &wide_bracket()).unwrap();
        prop_assert_eq!(a, b);
    }
}
