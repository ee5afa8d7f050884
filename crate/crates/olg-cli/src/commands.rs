//! The four CLI commands and their exit-code contract.
//!
//! Exit codes: 0 ok, 2 config problem, 3 solver non-convergence, 4 invariant
//! violation after a solve, 5 oracle disagreement. Every error path prints a
//! single machine-parseable line to standard error of the form
//! `error: <kind>: <detail>`. Output files are written atomically.

use crate::config::{parse_config, ScenarioConfig};
use crate::csv::{csv_escape, fmt_num, schema_line, write_atomic};
use olg_core::{
    oracle_maximize, sign_report, solve_steady_state, verify_state, ModelParameters, OracleError,
    ParamId, Sign, SignCell, SignReport, SolveStatus, SteadyState, SweepRow,
};
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;
pub const EXIT_ORACLE_DISAGREEMENT: i32 = 5;

/// Oracle/solver agreement gate used by `verify`.
pub const VERIFY_REL_TOL: f64 = 1e-3;
/// Residual gate used by `verify`.
pub const VERIFY_RESIDUAL_TOL: f64 = 1e-10;

fn fail(code: i32, kind: &str, detail: impl std::fmt::Display) -> i32 {
    eprintln!("error: {kind}: {detail}");
    code
}

fn load_config(path: &Path) -> Result<ScenarioConfig, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        fail(
            EXIT_CONFIG,
            "config",
            format_args!("{}: {e}", path.display()),
        )
    })?;
    parse_config(&text).map_err(|e| fail(EXIT_CONFIG, "config", e))
}

/// Post-solve sanity gate: the exact identities every accepted steady state
/// must satisfy. A violation here means the solver accepted a bad state.
pub fn check_state_invariants(state: &SteadyState, params: &ModelParameters) -> Result<(), String> {
    let a = &state.alloc;
    let rel = |x: f64, y: f64| (x - y).abs() / x.abs().max(y.abs()).max(1e-300);
    if !(state.alpha_n < 1.0) {
        return Err(format!("alpha*n = {} >= 1", state.alpha_n));
    }
    let euler = (params.gamma_c / params.gamma1) * params.r_gross;
    if rel(a.c2 / a.c1, euler) > 1e-12 {
        return Err(format!("euler ratio {} != {euler}", a.c2 / a.c1));
    }
    if rel(a.ph, (params.gamma_ph / params.gamma1) * a.c1) > 1e-12 {
        return Err("parental-health identity violated".to_string());
    }
    for (lhs, rhs, label) in [
        (a.e / a.hp, params.eps / params.eta, "e/hp"),
        (a.e / a.hm, params.eps / params.theta, "e/hm"),
        (a.hp / a.hm, params.eta / params.theta, "hp/hm"),
        (
            a.mental_health_share(),
            params.theta / params.sigma(),
            "mh share",
        ),
    ] {
        if rel(lhs, rhs) > 1e-12 {
            return Err(format!("{label} identity violated: {lhs} vs {rhs}"));
        }
    }
    let w_child =
        params.wbar * a.e.powf(params.eps) * a.hp.powf(params.eta) * a.hm.powf(params.theta);
    if (state.w - w_child).abs() > 1e-10 * state.w {
        return Err(format!(
            "wage fixed point violated: {} vs {w_child}",
            state.w
        ));
    }
    Ok(())
}

pub const SOLVE_HEADER: &str = "name,gamma1,gamma_ph,gamma2,gamma_c,alpha,tau,phi,wbar,eps,eta,theta,R,bequest,n,c1,c2,ph,s,e,hp,hm,b,w,V,lambda,mu,mh_share,residual_norm";

/// One header row, one data row.
pub fn render_solve_csv(cfg: &ScenarioConfig, state: &SteadyState) -> String {
    let p = &cfg.params;
    let a = &state.alloc;
    let fields: Vec<String> = vec![
        csv_escape(&cfg.name),
        fmt_num(p.gamma1),
        fmt_num(p.gamma_ph),
        fmt_num(p.gamma2),
        fmt_num(p.gamma_c),
        fmt_num(p.alpha),
        fmt_num(p.tau),
        fmt_num(p.phi),
        fmt_num(p.wbar),
        fmt_num(p.eps),
        fmt_num(p.eta),
        fmt_num(p.theta),
        fmt_num(p.r_gross),
        fmt_num(p.bequest_value()),
        fmt_num(a.n),
        fmt_num(a.c1),
        fmt_num(a.c2),
        fmt_num(a.ph),
        fmt_num(a.s),
        fmt_num(a.e),
        fmt_num(a.hp),
        fmt_num(a.hm),
        fmt_num(a.b),
        fmt_num(state.w),
        fmt_num(state.value),
        fmt_num(state.prices.lambda),
        fmt_num(state.prices.mu),
        fmt_num(a.mental_health_share()),
        fmt_num(state.residual_norm),
    ];
    format!(
        "{}\n{}\n{}\n",
        schema_line(SOLVE_HEADER),
        SOLVE_HEADER,
        fields.join(",")
    )
}

/// Solves a scenario and writes the one-row CSV.
pub fn cmd_solve(config_path: &Path, out_path: &Path) -> i32 {
    let cfg = match load_config(config_path) {
        Ok(cfg) => cfg,
        Err(code) => return code,
    };
    let outcome = match solve_steady_state(&cfg.params, &cfg.solver) {
        Ok(outcome) => outcome,
        Err(e) => return fail(EXIT_CONFIG, "config", e),
    };
    let Some(state) = outcome.state else {
        return fail(EXIT_NO_CONVERGENCE, "solver", outcome.status.name());
    };
    if let Err(msg) = check_state_invariants(&state, &cfg.params) {
        return fail(EXIT_INVARIANT, "invariant", msg);
    }
    let content = render_solve_csv(&cfg, &state);
    match write_atomic(out_path, &content) {
        Ok(()) => EXIT_OK,
        Err(e) => fail(
            EXIT_CONFIG,
            "io",
            format_args!("{}: {e}", out_path.display()),
        ),
    }
}

/// Solves, runs the brute-force oracle, prints the comparison, and gates on
/// agreement. Flags override the config's oracle options; the printed report
/// is also written to `out_path` when one is given.
pub fn cmd_verify(
    config_path: &Path,
    horizon: Option<usize>,
    grid: Option<usize>,
    out_path: Option<&Path>,
) -> i32 {
    let cfg = match load_config(config_path) {
        Ok(cfg) => cfg,
        Err(code) => return code,
    };
    let mut oracle_opts = cfg.oracle;
    if let Some(h) = horizon {
        oracle_opts.horizon = h;
    }
    if let Some(g) = grid {
        if g < 3 {
            return fail(EXIT_CONFIG, "config", "grid must be at least 3");
        }
        oracle_opts.grid_points = g;
    }

    let outcome = match solve_steady_state(&cfg.params, &cfg.solver) {
        Ok(outcome) => outcome,
        Err(e) => return fail(EXIT_CONFIG, "config", e),
    };
    let Some(state) = outcome.state else {
        return fail(EXIT_NO_CONVERGENCE, "solver", outcome.status.name());
    };
    let residuals = match verify_state(&state, &cfg.params) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INVARIANT, "invariant", e),
    };
    let oracle = match oracle_maximize(&cfg.params, &oracle_opts) {
        Ok(alloc) => alloc,
        Err(OracleError::InfeasibleEverywhere) => {
            return fail(EXIT_ORACLE_DISAGREEMENT, "oracle", "infeasible everywhere")
        }
        Err(OracleError::Model(e)) => return fail(EXIT_CONFIG, "config", e),
    };

    let mut report = String::new();
    report.push_str(&format!("scenario: {}\n", cfg.name));
    report.push_str(&format!(
        "oracle: horizon={} grid_points={} refine_rounds={}\n",
        oracle_opts.horizon, oracle_opts.grid_points, oracle_opts.refine_rounds
    ));
    report.push_str(&format!(
        "{:<10} {:>24} {:>24} {:>12}\n",
        "variable", "solver", "oracle", "rel_diff"
    ));
    let a = &state.alloc;
    let pairs = [
        ("n", a.n, oracle.n),
        ("c1", a.c1, oracle.c1),
        ("c2", a.c2, oracle.c2),
        ("ph", a.ph, oracle.ph),
        ("s", a.s, oracle.s),
        ("e", a.e, oracle.e),
        ("hp", a.hp, oracle.hp),
        ("hm", a.hm, oracle.hm),
        ("b", a.b, oracle.b),
    ];
    let mut worst: f64 = 0.0;
    for (name, solver_v, oracle_v) in pairs {
        let denom = solver_v.abs().max(oracle_v.abs());
        let rel = if denom == 0.0 {
            0.0
        } else {
            (solver_v - oracle_v).abs() / denom
        };
        worst = worst.max(rel);
        report.push_str(&format!(
            "{name:<10} {solver_v:>24.16e} {oracle_v:>24.16e} {rel:>12.3e}\n"
        ));
    }
    report.push_str("residuals:\n");
    for (name, value) in residuals.entries() {
        report.push_str(&format!("  {name:<6} {value:>24.16e}\n"));
    }
    let norm = residuals.max_abs();
    report.push_str(&format!("residual_norm: {norm:.3e}\n"));
    report.push_str(&format!("max_rel_diff: {worst:.3e}\n"));

    let agree = worst <= VERIFY_REL_TOL && norm <= VERIFY_RESIDUAL_TOL;
    if agree {
        report.push_str(&format!(
            "verdict: agree (rel <= {VERIFY_REL_TOL:.0e}, residuals <= {VERIFY_RESIDUAL_TOL:.0e})\n"
        ));
    } else {
        report.push_str("verdict: disagree\n");
    }
    print!("{report}");
    if let Some(path) = out_path {
        if let Err(e) = write_atomic(path, &report) {
            return fail(EXIT_CONFIG, "io", format_args!("{}: {e}", path.display()));
        }
    }

    if agree {
        EXIT_OK
    } else {
        fail(
            EXIT_ORACLE_DISAGREEMENT,
            "oracle",
            format_args!("max relative difference {worst:.3e} (gate {VERIFY_REL_TOL:.0e}), residual norm {norm:.3e} (gate {VERIFY_RESIDUAL_TOL:.0e})"),
        )
    }
}

pub const SWEEP_HEADER: &str =
    "param,value,status,n,c1,c2,ph,s,e,hp,hm,b,w,V,lambda,mu,mh_share,residual_norm";

/// One CSV row per grid point; failed points keep their status and leave the
/// numeric columns empty.
pub fn render_sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = format!("{}\n{}\n", schema_line(SWEEP_HEADER), SWEEP_HEADER);
    for row in rows {
        let prefix = format!(
            "{},{},{}",
            csv_escape(row.param.name()),
            fmt_num(row.value),
            row.status.name()
        );
        match &row.state {
            Some(state) => {
                let a = &state.alloc;
                let nums = [
                    a.n,
                    a.c1,
                    a.c2,
                    a.ph,
                    a.s,
                    a.e,
                    a.hp,
                    a.hm,
                    a.b,
                    state.w,
                    state.value,
                    state.prices.lambda,
                    state.prices.mu,
                    a.mental_health_share(),
                    state.residual_norm,
                ];
                let rest: Vec<String> = nums.iter().map(|&x| fmt_num(x)).collect();
                out.push_str(&format!("{prefix},{}\n", rest.join(",")));
            }
            None => {
                out.push_str(&format!("{prefix}{}\n", ",".repeat(15)));
            }
        }
    }
    out
}

/// Sweeps one parameter over an inclusive linear grid.
pub fn cmd_sweep(
    config_path: &Path,
    param_name: &str,
    from: f64,
    to: f64,
    steps: usize,
    out_path: &Path,
) -> i32 {
    let cfg = match load_config(config_path) {
        Ok(cfg) => cfg,
        Err(code) => return code,
    };
    let Some(param) = ParamId::from_name(param_name) else {
        return fail(
            EXIT_CONFIG,
            "config",
            format_args!("unknown sweep parameter '{param_name}'"),
        );
    };
    if steps == 0 {
        return fail(EXIT_CONFIG, "config", "steps must be at least 1");
    }
    if steps > 1 && !(to > from) {
        return fail(EXIT_CONFIG, "config", "sweep requires from < to");
    }
    let grid: Vec<f64> = (0..steps)
        .map(|i| {
            if i == steps - 1 && steps > 1 {
                to
            } else {
                from + (to - from) * i as f64 / (steps.max(2) - 1) as f64
            }
        })
        .collect();

    let rows = match olg_core::sweep(&cfg.params, param, &grid, &cfg.solver) {
        Ok(rows) => rows,
        Err(e) => return fail(EXIT_CONFIG, "config", e),
    };
    let converged = rows
        .iter()
        .filter(|r| r.status == SolveStatus::Converged)
        .count();
    let content = render_sweep_csv(&rows);
    if let Err(e) = write_atomic(out_path, &content) {
        return fail(
            EXIT_CONFIG,
            "io",
            format_args!("{}: {e}", out_path.display()),
        );
    }
    if converged == 0 {
        return fail(EXIT_NO_CONVERGENCE, "solver", "no sweep point converged");
    }
    EXIT_OK
}

pub const REPORT_HEADER: &str = "parameter,outcome,expected,observed,derivative,step,agree";

/// The 4x4 sign table as CSV. Unevaluated cells leave the observed and
/// derivative columns empty.
pub fn render_report_csv(report: &SignReport) -> String {
    let mut out = format!("{}\n{}\n", schema_line(REPORT_HEADER), REPORT_HEADER);
    for cell in &report.cells {
        let observed = cell
            .observed
            .map_or(String::new(), |s| s.as_str().to_string());
        let derivative = cell.derivative.map_or(String::new(), fmt_num);
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            cell.param.name(),
            cell.outcome.name(),
            cell.expected.as_str(),
            observed,
            derivative,
            fmt_num(cell.step),
            cell.agree
        ));
    }
    out
}

/// Parses a report CSV back into cells; the inverse of [`render_report_csv`].
pub fn parse_report_csv(text: &str) -> Option<SignReport> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    if lines.next()? != REPORT_HEADER {
        return None;
    }
    let mut cells = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 7 {
            return None;
        }
        cells.push(SignCell {
            param: ParamId::from_name(parts[0])?,
            outcome: olg_core::OutcomeId::from_name(parts[1])?,
            expected: Sign::from_symbol(parts[2])?,
            observed: if parts[3].is_empty() {
                None
            } else {
                Some(Sign::from_symbol(parts[3])?)
            },
            derivative: if parts[4].is_empty() {
                None
            } else {
                parts[4].parse().ok()
            },
            step: parts[5].parse().ok()?,
            // Stability is an internal diagnostic, not part of the schema.
            stable: true,
            agree: parts[6].parse().ok()?,
        });
    }
    Some(SignReport { cells })
}

/// Evaluates the full sign table and writes it as CSV.
pub fn cmd_report(config_path: &Path, out_path: &Path) -> i32 {
    let cfg = match load_config(config_path) {
        Ok(cfg) => cfg,
        Err(code) => return code,
    };
    let report = match sign_report(
        &cfg.params,
        &cfg.solver,
        olg_core::statics::DEFAULT_REL_STEP,
    ) {
        Ok(report) => report,
        Err(e) => return fail(EXIT_CONFIG, "config", e),
    };
    let evaluated = report.cells.iter().filter(|c| c.observed.is_some()).count();
    let content = render_report_csv(&report);
    if let Err(e) = write_atomic(out_path, &content) {
        return fail(
            EXIT_CONFIG,
            "io",
            format_args!("{}: {e}", out_path.display()),
        );
    }
    if evaluated == 0 {
        return fail(
            EXIT_NO_CONVERGENCE,
            "solver",
            "every report cell unevaluated",
        );
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;
    use olg_core::solve_steady_state;

    #[test]
    fn invariant_gate_accepts_solver_output_and_catches_corruption() {
        let params = ModelParameters::baseline();
        let state = solve_steady_state(&params, &Default::default())
            .unwrap()
            .state
            .unwrap();
        assert!(check_state_invariants(&state, &params).is_ok());

        let mut broken = state;
        broken.alloc.c2 *= 1.01;
        let err = check_state_invariants(&broken, &params).unwrap_err();
        assert!(err.contains("euler"), "{err}");

        let mut broken = state;
        broken.alpha_n = 1.5;
        assert!(check_state_invariants(&broken, &params).is_err());

        let mut broken = state;
        broken.alloc.hm *= 1.0 + 1e-6;
        assert!(check_state_invariants(&broken, &params).is_err());
    }
}
