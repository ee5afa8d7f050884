//! Steady-state solver.
//!
//! The full system has twelve equations, but most of it collapses by
//! substitution: the closed-form wage pins `(w, e, hp, hm)`, the consumption
//! and parental-health conditions express `(c1, c2, ph, mu)` through the
//! young-income multiplier `lambda`, and the old budget hands back savings.
//! What remains is a two-dimensional root-finding problem in `(lambda, n)`:
//! the young budget and the fertility condition.
//!
//! The young budget is strictly monotone in `lambda` at fixed `n` (every
//! remaining term scales as `1/lambda`), so the solver runs nested bracketed
//! bisection -- an inner pass for `lambda` given `n`, an outer pass for `n` --
//! and then polishes the pair with a damped 2-D Newton iteration using the
//! analytic Jacobian. Bisection guarantees progress without derivative
//! tuning; Newton restores fast convergence at the end.

use crate::model::{
    foc_residuals, steady_state_wage, Allocation, ModelError, ModelParameters, ResidualVector,
    ShadowPrices, SteadyState,
};

/// Final stage applied after bisection has isolated the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolishMode {
    /// Damped 2-D Newton on `(lambda, n)` from the bisection root.
    NewtonPolish,
    /// Keep the bisection root as-is.
    BisectionOnly,
}

/// Solver configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Acceptance threshold on the max-abs entry of the full residual vector.
    pub residual_tol: f64,
    /// Iteration cap applied to each bisection/Newton phase.
    pub max_iter: usize,
    /// Initial fertility search interval (positive reals). The upper end is
    /// additionally capped so that `alpha * n < 1` over the whole bracket.
    pub bracket: (f64, f64),
    pub polish: PolishMode,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            residual_tol: 1e-10,
            max_iter: 200,
            bracket: (1e-3, 10.0),
            polish: PolishMode::NewtonPolish,
        }
    }
}

impl SolverOptions {
    fn validate(&self) -> Result<(), ModelError> {
        if !(self.residual_tol > 0.0) {
            return Err(ModelError::InvalidParameter {
                name: "residual_tol",
                value: self.residual_tol,
                constraint: "must be strictly positive",
            });
        }
        let (lo, hi) = self.bracket;
        if !(lo > 0.0 && hi > lo) || !lo.is_finite() || !hi.is_finite() {
            return Err(ModelError::InvalidParameter {
                name: "bracket",
                value: lo,
                constraint: "must satisfy 0 < lower < upper, both finite",
            });
        }
        if self.max_iter == 0 {
            return Err(ModelError::InvalidParameter {
                name: "max_iter",
                value: 0.0,
                constraint: "must be at least 1",
            });
        }
        Ok(())
    }
}

/// Terminal state of a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Converged,
    /// No sign change of the reduced system over the feasible bracket.
    NoBracket,
    MaxIterExceeded,
    /// Every admissible candidate (or the final root) has `alpha * n >= 1`.
    DivergentDynasty,
    /// The root drives a positivity invariant to its boundary.
    NonInterior,
}

impl SolveStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SolveStatus::Converged => "Converged",
            SolveStatus::NoBracket => "NoBracket",
            SolveStatus::MaxIterExceeded => "MaxIterExceeded",
            SolveStatus::DivergentDynasty => "DivergentDynasty",
            SolveStatus::NonInterior => "NonInterior",
        }
    }
}

/// One outer-iteration record: candidate fertility and the reduced residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub n: f64,
    pub residual: f64,
}

/// Iteration log of a solve.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SolveTrace {
    pub points: Vec<TracePoint>,
    /// Sign changes of the reduced system found by the bracket scan.
    pub sign_changes: usize,
    /// More than one root was isolated; the one with the largest dynastic
    /// value was returned.
    pub multiple_roots: bool,
}

/// Outcome of [`solve_steady_state`]; `state` is present iff `Converged`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub state: Option<SteadyState>,
    pub trace: SolveTrace,
}

// Inner bisection interval for the young-income multiplier, on a log scale.
const LAMBDA_LO: f64 = 1e-6;
const LAMBDA_HI: f64 = 1e6;
// Outer bracket partitions scanned for sign changes.
const SCAN_SUBINTERVALS: usize = 100;
// Keep alpha * n at least this far below 1.
const ALPHA_N_MARGIN: f64 = 1e-6;

/// The reduced two-equation system in `(lambda, n)`.
///
/// All eliminated equations hold exactly by construction for any admissible
/// pair, so a zero of the two retained residuals expands to a zero of the
/// full system.
#[derive(Debug, Clone, Copy)]
pub struct ReducedSystem {
    params: ModelParameters,
    /// Closed-form wage fixed point and supporting quality investments.
    pub w: f64,
    pub e: f64,
    pub hp: f64,
    pub hm: f64,
    /// Per-child outlay `phi + e + hp + hm`.
    kappa: f64,
    /// `gamma1 + gamma_ph + gamma_c`, the total weight on `1/lambda` terms.
    gamma_sum: f64,
    /// Constant part of the flow utility once `lambda` and `n` are factored
    /// out: `gamma1 ln gamma1 + gamma_ph ln gamma_ph + gamma_c ln(gamma_c R)`.
    flow_const: f64,
    /// Per-child net transfer in the savings substitution, `(b - tau w)/R`.
    pension_net: f64,
    b: f64,
}

impl ReducedSystem {
    fn new(params: &ModelParameters) -> Result<Self, ModelError> {
        params.validate()?;
        let fp = steady_state_wage(params);
        let b = params.bequest_value();
        Ok(ReducedSystem {
            params: *params,
            w: fp.w,
            e: fp.e,
            hp: fp.hp,
            hm: fp.hm,
            kappa: params.phi + fp.e + fp.hp + fp.hm,
            gamma_sum: params.gamma1 + params.gamma_ph + params.gamma_c,
            flow_const: params.gamma1 * params.gamma1.ln()
                + params.gamma_ph * params.gamma_ph.ln()
                + params.gamma_c * (params.gamma_c * params.r_gross).ln(),
            pension_net: (b - params.tau * fp.w) / params.r_gross,
            b,
        })
    }

    fn in_domain(&self, lambda: f64, n: f64) -> bool {
        lambda > 0.0
            && lambda.is_finite()
            && n > 0.0
            && n.is_finite()
            && self.params.alpha * n < 1.0
    }

    /// Young-budget residual with `(c1, ph, c2, s)` substituted out; strictly
    /// increasing in `lambda` at fixed `n`.
    pub fn young_budget_residual(&self, lambda: f64, n: f64) -> f64 {
        self.w * (1.0 - self.params.tau) + self.b
            - self.gamma_sum / lambda
            - n * self.pension_net
            - n * self.kappa
    }

    /// Flow utility of the implied allocation.
    fn flow(&self, lambda: f64, n: f64) -> f64 {
        self.flow_const - self.gamma_sum * lambda.ln() + self.params.gamma2 * n.ln()
    }

    /// Fertility-condition residual with the steady-state value substituted
    /// in. Errors with `DivergentDynasty` when `alpha * n >= 1`.
    pub fn fertility_residual(&self, lambda: f64, n: f64) -> Result<f64, ModelError> {
        let alpha_n = self.params.alpha * n;
        if alpha_n >= 1.0 {
            return Err(ModelError::DivergentDynasty { alpha_n });
        }
        let value = self.flow(lambda, n) / (1.0 - alpha_n);
        let mu = lambda / self.params.r_gross;
        Ok(self.params.gamma2 / n
            + self.params.alpha * value
            + mu * (self.params.tau * self.w - self.b)
            - lambda * self.kappa)
    }

    /// Solves the young budget for `lambda` at fixed `n` by bisection on a
    /// log scale. Returns `None` when no root lies inside the interval.
    pub fn solve_lambda(&self, n: f64, max_iter: usize) -> Option<f64> {
        let mut lo = LAMBDA_LO;
        let mut hi = LAMBDA_HI;
        let f_lo = self.young_budget_residual(lo, n);
        let f_hi = self.young_budget_residual(hi, n);
        if f_lo == 0.0 {
            return Some(lo);
        }
        if f_hi == 0.0 {
            return Some(hi);
        }
        if f_lo.signum() == f_hi.signum() {
            return None;
        }
        for _ in 0..max_iter.max(64) {
            let mid = ((lo.ln() + hi.ln()) * 0.5).exp();
            if mid <= lo || mid >= hi {
                break;
            }
            let f_mid = self.young_budget_residual(mid, n);
            if f_mid == 0.0 {
                return Some(mid);
            }
            if f_mid.signum() == f_lo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(((lo.ln() + hi.ln()) * 0.5).exp().clamp(lo, hi))
    }

    /// Reduced outer residual: the fertility condition evaluated at the
    /// inner-solved multiplier. `None` when the young budget has no
    /// admissible solution at this `n`.
    fn outer_residual(&self, n: f64, max_iter: usize) -> Option<f64> {
        let lambda = self.solve_lambda(n, max_iter)?;
        self.fertility_residual(lambda, n).ok()
    }

    /// Expands a reduced pair into the full steady state.
    pub fn expand(&self, lambda: f64, n: f64) -> (Allocation, ShadowPrices, f64, f64) {
        let p = &self.params;
        let mu = lambda / p.r_gross;
        let c2 = p.gamma_c / mu;
        let s = (c2 + n * self.b - p.tau * n * self.w) / p.r_gross;
        let alloc = Allocation {
            c1: p.gamma1 / lambda,
            c2,
            ph: p.gamma_ph / lambda,
            s,
            n,
            e: self.e,
            hp: self.hp,
            hm: self.hm,
            b: self.b,
        };
        let value = self.flow(lambda, n) / (1.0 - p.alpha * n);
        (alloc, ShadowPrices { lambda, mu }, self.w, value)
    }

    /// Residual pair and analytic Jacobian of the reduced system.
    fn newton_step(&self, lambda: f64, n: f64) -> Option<(f64, f64)> {
        let p = &self.params;
        if !self.in_domain(lambda, n) {
            return None;
        }
        let one_minus = 1.0 - p.alpha * n;
        let flow = self.flow(lambda, n);
        let r_by = self.young_budget_residual(lambda, n);
        let r_n = self.fertility_residual(lambda, n).ok()?;

        let d_by_dl = self.gamma_sum / (lambda * lambda);
        let d_by_dn = -self.pension_net - self.kappa;
        let d_n_dl = -p.alpha * self.gamma_sum / (lambda * one_minus)
            + (p.tau * self.w - self.b) / p.r_gross
            - self.kappa;
        let d_n_dn = -p.gamma2 / (n * n)
            + p.alpha * (p.gamma2 / (n * one_minus) + p.alpha * flow / (one_minus * one_minus));

        let det = d_by_dl * d_n_dn - d_by_dn * d_n_dl;
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let dl = (r_by * d_n_dn - d_by_dn * r_n) / det;
        let dn = (d_by_dl * r_n - r_by * d_n_dl) / det;
        Some((dl, dn))
    }

    /// Max-abs of the two reduced residuals, or infinity outside the domain.
    fn reduced_norm(&self, lambda: f64, n: f64) -> f64 {
        if !self.in_domain(lambda, n) {
            return f64::INFINITY;
        }
        match self.fertility_residual(lambda, n) {
            Ok(r_n) => self.young_budget_residual(lambda, n).abs().max(r_n.abs()),
            Err(_) => f64::INFINITY,
        }
    }

    /// Damped Newton iteration to a bitwise fixed point.
    fn newton_polish(
        &self,
        mut lambda: f64,
        mut n: f64,
        max_iter: usize,
        trace: &mut Vec<TracePoint>,
    ) -> (f64, f64) {
        for _ in 0..max_iter {
            let Some((dl, dn)) = self.newton_step(lambda, n) else {
                break;
            };
            let mut step = 1.0;
            let mut next = (lambda - dl, n - dn);
            // Halve the step until the iterate is admissible again.
            let mut tries = 0;
            while !self.in_domain(next.0, next.1) && tries < 60 {
                step *= 0.5;
                next = (lambda - step * dl, n - step * dn);
                tries += 1;
            }
            if !self.in_domain(next.0, next.1) {
                break;
            }
            if next.0 == lambda && next.1 == n {
                break;
            }
            lambda = next.0;
            n = next.1;
            if let Ok(r) = self.fertility_residual(lambda, n) {
                trace.push(TracePoint { n, residual: r });
            }
        }
        (lambda, n)
    }
}

/// Builds the reduced residual system for a parameter set.
pub fn reduce_system(params: &ModelParameters) -> Result<ReducedSystem, ModelError> {
    ReducedSystem::new(params)
}

fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (lln, hln) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == count - 1 {
                hi
            } else {
                (lln + (hln - lln) * i as f64 / (count - 1) as f64).exp()
            }
        })
        .collect()
}

/// Rounds to 12 significant decimal digits; used to re-seed the final Newton
/// pass from a canonical point so the result does not depend on the path the
/// bracketing took to reach the root.
fn canonical_seed(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Solves for the interior steady state.
///
/// Returns `Err` only for invalid parameters or options; every numerical
/// failure mode is reported through [`SolveStatus`]. For fixed inputs the
/// result is deterministic, and the returned state does not depend on where
/// inside the bracket the search started.
pub fn solve_steady_state(
    params: &ModelParameters,
    opts: &SolverOptions,
) -> Result<SolveOutcome, ModelError> {
    opts.validate()?;
    let sys = ReducedSystem::new(params)?;
    let mut trace = SolveTrace::default();

    if !(sys.w.is_finite() && sys.w > 0.0) {
        return Ok(SolveOutcome {
            status: SolveStatus::NonInterior,
            state: None,
            trace,
        });
    }

    // Cap the bracket so the whole search respects alpha * n < 1.
    let n_cap = (1.0 - ALPHA_N_MARGIN) / params.alpha;
    if n_cap <= opts.bracket.0 {
        return Ok(SolveOutcome {
            status: SolveStatus::DivergentDynasty,
            state: None,
            trace,
        });
    }
    let n_lo = opts.bracket.0;
    let n_hi = opts.bracket.1.min(n_cap);

    // Scan the bracket for sign changes of the reduced system.
    let scan = log_grid(n_lo, n_hi, SCAN_SUBINTERVALS + 1);
    let mut samples: Vec<(f64, Option<f64>)> = Vec::with_capacity(scan.len());
    for &n in &scan {
        let r = sys.outer_residual(n, opts.max_iter);
        if let Some(res) = r {
            trace.points.push(TracePoint { n, residual: res });
        }
        samples.push((n, r));
    }

    let mut roots: Vec<(f64, f64)> = Vec::new();
    for pair in samples.windows(2) {
        let (n_a, Some(f_a)) = pair[0] else { continue };
        let (n_b, Some(f_b)) = pair[1] else { continue };
        if f_a == 0.0 {
            if let Some(lambda) = sys.solve_lambda(n_a, opts.max_iter) {
                trace.sign_changes += 1;
                roots.push((lambda, n_a));
            }
            continue;
        }
        if f_a.signum() * f_b.signum() < 0.0 {
            trace.sign_changes += 1;
            if let Some(root) = bisect_outer(&sys, n_a, f_a, n_b, opts, &mut trace.points) {
                roots.push(root);
            }
        }
    }

    if roots.is_empty() {
        return Ok(SolveOutcome {
            status: SolveStatus::NoBracket,
            state: None,
            trace,
        });
    }

    // With several roots, keep the one with the largest dynastic value.
    trace.multiple_roots = roots.len() > 1;
    let (mut lambda, mut n) = roots[0];
    if roots.len() > 1 {
        let mut best_value = f64::NEG_INFINITY;
        for &(l, nn) in &roots {
            let (.., value) = sys.expand(l, nn);
            if value > best_value || (value == best_value && nn < n) {
                best_value = value;
                lambda = l;
                n = nn;
            }
        }
    }

    if opts.polish == PolishMode::NewtonPolish {
        let bisected = (lambda, n);
        let polished = sys.newton_polish(lambda, n, opts.max_iter, &mut trace.points);
        // Restart from a canonical nearby seed so that different brackets
        // converging to the same root finish on identical bits.
        let seeded = (canonical_seed(polished.0), canonical_seed(polished.1));
        let start = if sys.reduced_norm(seeded.0, seeded.1).is_finite() {
            seeded
        } else {
            polished
        };
        let reseeded = sys.newton_polish(start.0, start.1, 40, &mut trace.points);
        // Prefer the canonical pass, but never accept a worse point than the
        // bracketing already delivered.
        (lambda, n) = [reseeded, polished, bisected]
            .into_iter()
            .min_by(|a, b| {
                sys.reduced_norm(a.0, a.1)
                    .total_cmp(&sys.reduced_norm(b.0, b.1))
            })
            .unwrap();
    }

    let (alloc, prices, w, value) = sys.expand(lambda, n);
    let alpha_n = params.alpha * n;
    if alpha_n >= 1.0 {
        return Ok(SolveOutcome {
            status: SolveStatus::DivergentDynasty,
            state: None,
            trace,
        });
    }
    if alloc.validate_interior().is_err() || !(prices.lambda > 0.0) || !value.is_finite() {
        return Ok(SolveOutcome {
            status: SolveStatus::NonInterior,
            state: None,
            trace,
        });
    }

    let mut state = SteadyState {
        alloc,
        prices,
        w,
        value,
        residual_norm: f64::NAN,
        alpha_n,
    };
    let residuals = match verify_state(&state, params) {
        Ok(r) => r,
        Err(_) => {
            return Ok(SolveOutcome {
                status: SolveStatus::NonInterior,
                state: None,
                trace,
            })
        }
    };
    state.residual_norm = residuals.max_abs();

    if state.residual_norm <= opts.residual_tol {
        Ok(SolveOutcome {
            status: SolveStatus::Converged,
            state: Some(state),
            trace,
        })
    } else {
        Ok(SolveOutcome {
            status: SolveStatus::MaxIterExceeded,
            state: None,
            trace,
        })
    }
}

fn bisect_outer(
    sys: &ReducedSystem,
    mut lo: f64,
    f_lo: f64,
    mut hi: f64,
    opts: &SolverOptions,
    points: &mut Vec<TracePoint>,
) -> Option<(f64, f64)> {
    let mut sign_lo = f_lo.signum();
    for _ in 0..opts.max_iter.max(64) {
        let mid = ((lo.ln() + hi.ln()) * 0.5).exp();
        if mid <= lo || mid >= hi {
            break;
        }
        let Some(f_mid) = sys.outer_residual(mid, opts.max_iter) else {
            // Inner infeasibility inside the bracket: shrink toward the
            // feasible end (the feasible set in n is an interval).
            hi = mid;
            continue;
        };
        points.push(TracePoint {
            n: mid,
            residual: f_mid,
        });
        if f_mid == 0.0 {
            let lambda = sys.solve_lambda(mid, opts.max_iter)?;
            return Some((lambda, mid));
        }
        if f_mid.signum() == sign_lo {
            lo = mid;
            sign_lo = f_mid.signum();
        } else {
            hi = mid;
        }
    }
    let n = ((lo.ln() + hi.ln()) * 0.5).exp().clamp(lo, hi);
    let lambda = sys.solve_lambda(n, opts.max_iter)?;
    Some((lambda, n))
}

/// Recomputes all twelve residuals from their raw definitions, independently
/// of the reduction used by the solver.
pub fn verify_state(
    state: &SteadyState,
    params: &ModelParameters,
) -> Result<ResidualVector, ModelError> {
    params.validate()?;
    foc_residuals(&state.alloc, &state.prices, state.w, state.value, params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::BequestMode;

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
    }

    fn solve_baseline() -> SteadyState {
        let params = ModelParameters::baseline();
        let outcome = solve_steady_state(&params, &SolverOptions::default()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Converged, "{outcome:?}");
        outcome.state.unwrap()
    }

    #[test]
    fn baseline_converges_with_closed_form_wage() {
        let state = solve_baseline();
        assert!((state.w - 0.008).abs() <= 1e-10);
        assert!(rel_close(state.alloc.e, 0.00032, 1e-12));
        assert!(rel_close(state.alloc.hp, 0.00032, 1e-12));
        assert!(rel_close(state.alloc.hm, 0.00032, 1e-12));
        assert!(rel_close(state.alloc.c2 / state.alloc.c1, 1.35, 1e-12));
        assert!(rel_close(state.alloc.ph, 0.5 * state.alloc.c1, 1e-12));
        assert!(state.residual_norm <= 1e-10);
        assert!(state.alpha_n < 1.0);
    }

    #[test]
    fn baseline_scan_finds_exactly_one_sign_change() {
        let params = ModelParameters::baseline();
        let outcome = solve_steady_state(&params, &SolverOptions::default()).unwrap();
        assert_eq!(outcome.trace.sign_changes, 1);
        assert!(!outcome.trace.multiple_roots);
        assert!(!outcome.trace.points.is_empty());
    }

    #[test]
    fn expansion_zeroes_the_eliminated_equations() {
        let params = ModelParameters::baseline();
        let sys = reduce_system(&params).unwrap();
        // An arbitrary admissible pair, nowhere near the root.
        let (lambda, n) = (300.0, 0.05);
        let (alloc, prices, w, value) = sys.expand(lambda, n);
        let r = foc_residuals(&alloc, &prices, w, value, &params).unwrap();
        for (name, v) in [
            ("r_c1", r.r_c1),
            ("r_c2", r.r_c2),
            ("r_s", r.r_s),
            ("r_ph", r.r_ph),
            ("r_e", r.r_e),
            ("r_hp", r.r_hp),
            ("r_hm", r.r_hm),
            ("r_w", r.r_w),
            ("r_bo", r.r_bo),
            ("r_v", r.r_v),
        ] {
            assert!(v.abs() <= 1e-10 * lambda.max(1.0), "{name} = {v}");
        }
    }

    #[test]
    fn young_budget_residual_is_monotone_in_lambda() {
        let params = ModelParameters::baseline();
        let sys = reduce_system(&params).unwrap();
        let n = 0.02;
        let mut prev = sys.young_budget_residual(1e-4, n);
        for &lambda in &[1e-2, 1.0, 1e2, 1e4] {
            let cur = sys.young_budget_residual(lambda, n);
            assert!(cur > prev, "not monotone at lambda = {lambda}");
            prev = cur;
        }
    }

    #[test]
    fn solver_output_passes_full_verification() {
        let params = ModelParameters::baseline();
        let state = solve_baseline();
        let r = verify_state(&state, &params).unwrap();
        assert!(r.max_abs() <= 1e-10, "residuals: {:?}", r.entries());
        // Budget residuals relative to young resources.
        let scale = state.w * (1.0 - params.tau) + state.alloc.b;
        assert!(r.r_by.abs() <= 1e-10 * scale);
        assert!(r.r_bo.abs() <= 1e-10 * scale);
    }

    #[test]
    fn rerun_from_own_root_is_bit_identical() {
        let params = ModelParameters::baseline();
        let first = solve_baseline();
        let n_root = first.alloc.n;
        let opts = SolverOptions {
            bracket: (0.5 * n_root, 1.5 * n_root),
            ..SolverOptions::default()
        };
        let second = solve_steady_state(&params, &opts).unwrap();
        assert_eq!(second.status, SolveStatus::Converged);
        assert_eq!(second.state.unwrap(), first);
    }

    #[test]
    fn repeated_solves_are_deterministic() {
        let params = ModelParameters::baseline();
        let a = solve_steady_state(&params, &SolverOptions::default()).unwrap();
        let b = solve_steady_state(&params, &SolverOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bisection_only_also_converges() {
        let params = ModelParameters::baseline();
        let opts = SolverOptions {
            polish: PolishMode::BisectionOnly,
            ..SolverOptions::default()
        };
        let outcome = solve_steady_state(&params, &opts).unwrap();
        assert_eq!(outcome.status, SolveStatus::Converged);
        let state = outcome.state.unwrap();
        assert!(state.residual_norm <= 1e-10, "norm {}", state.residual_norm);
        let reference = solve_baseline();
        assert!(rel_close(state.alloc.n, reference.alloc.n, 1e-9));
    }

    #[test]
    fn divergent_bracket_is_rejected() {
        let mut params = ModelParameters::baseline();
        params.alpha = 2.0;
        let opts = SolverOptions {
            bracket: (1.0, 10.0),
            ..SolverOptions::default()
        };
        let outcome = solve_steady_state(&params, &opts).unwrap();
        assert_eq!(outcome.status, SolveStatus::DivergentDynasty);
        assert!(outcome.state.is_none());
    }

    #[test]
    fn alpha_cap_keeps_default_bracket_solvable() {
        // alpha = 2 with the default bracket still has room below 1/alpha.
        let mut params = ModelParameters::baseline();
        params.alpha = 2.0;
        let outcome = solve_steady_state(&params, &SolverOptions::default()).unwrap();
        if let Some(state) = &outcome.state {
            assert!(state.alpha_n < 1.0);
        }
    }

    #[test]
    fn underflowing_wage_reports_non_interior() {
        let mut params = ModelParameters::baseline();
        params.wbar = 1e-300;
        let outcome = solve_steady_state(&params, &SolverOptions::default()).unwrap();
        assert_eq!(outcome.status, SolveStatus::NonInterior);
    }

    #[test]
    fn tiny_iteration_budget_reports_max_iter() {
        let params = ModelParameters::baseline();
        let opts = SolverOptions {
            max_iter: 1,
            residual_tol: 1e-14,
            polish: PolishMode::BisectionOnly,
            ..SolverOptions::default()
        };
        let outcome = solve_steady_state(&params, &opts).unwrap();
        assert!(
            matches!(
                outcome.status,
                SolveStatus::MaxIterExceeded | SolveStatus::NoBracket
            ),
            "{:?}",
            outcome.status
        );
    }

    #[test]
    fn invalid_options_are_rejected() {
        let params = ModelParameters::baseline();
        let opts = SolverOptions {
            bracket: (1.0, 0.5),
            ..SolverOptions::default()
        };
        assert!(solve_steady_state(&params, &opts).is_err());
    }

    #[test]
    fn verify_state_rejects_non_interior() {
        let params = ModelParameters::baseline();
        let mut state = solve_baseline();
        state.alloc.c1 = -1.0;
        assert!(verify_state(&state, &params).is_err());
    }

    #[test]
    fn verify_state_sign_of_perturbations() {
        let params = ModelParameters::baseline();
        let mut state = solve_baseline();
        state.alloc.c1 *= 1.01;
        let r = verify_state(&state, &params).unwrap();
        assert!(r.r_c1 < 0.0);
    }

    #[test]
    fn positive_bequest_still_converges() {
        let mut params = ModelParameters::baseline();
        params.bequest = BequestMode::ExogenousValue(0.001);
        let outcome = solve_steady_state(&params, &SolverOptions::default()).unwrap();
        assert_eq!(outcome.status, SolveStatus::Converged);
        let state = outcome.state.unwrap();
        assert_eq!(state.alloc.b, 0.001);
        assert!(state.residual_norm <= 1e-10);
    }
}
