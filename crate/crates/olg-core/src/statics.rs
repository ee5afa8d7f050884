//! Comparative statics around the steady state.
//!
//! Three layers: [`sweep`] re-solves the model along a parameter grid,
//! [`finite_diff_sign`] estimates the sign of one outcome's response with a
//! central difference, and [`sign_report`] assembles the full 4x4 grid of
//! sign predictions (contribution rate, altruism, rearing cost, mental-health
//! elasticity against fertility, per-child human capital, savings, and the
//! mental-health share) and flags where the solved model agrees.
//!
//! The predicted signs are treated as hypotheses to test, not axioms: each
//! cell carries the observed sign and an agreement flag, and cells whose
//! prediction is ambiguous always pass with their observed sign recorded.
//! Share cells predicted to be flat are checked through the exact allocation
//! identity rather than a finite difference.

use crate::model::{ModelError, ModelParameters, SteadyState};
use crate::solver::{solve_steady_state, SolveStatus, SolverOptions};
use std::fmt;

/// Default relative step for central differences: large enough to clear the
/// solver's residual tolerance, small enough to keep truncation error low.
pub const DEFAULT_REL_STEP: f64 = 1e-4;

/// Relative elasticity below which a finite-difference response counts as
/// zero.
pub const ELASTICITY_ZERO_THRESHOLD: f64 = 1e-6;

/// Share-identity slack for the cells predicted to be exactly flat.
const SHARE_IDENTITY_TOL: f64 = 1e-12;

/// Relative drift allowed between the base-step and half-step derivative
/// estimates before a cell is marked unstable.
const STABILITY_REL_TOL: f64 = 0.05;

/// Sweepable scalar parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamId {
    Gamma1,
    GammaPh,
    Gamma2,
    GammaC,
    Alpha,
    Tau,
    Phi,
    Wbar,
    Eps,
    Eta,
    Theta,
    RGross,
}

impl ParamId {
    pub const ALL: [ParamId; 12] = [
        ParamId::Gamma1,
        ParamId::GammaPh,
        ParamId::Gamma2,
        ParamId::GammaC,
        ParamId::Alpha,
        ParamId::Tau,
        ParamId::Phi,
        ParamId::Wbar,
        ParamId::Eps,
        ParamId::Eta,
        ParamId::Theta,
        ParamId::RGross,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ParamId::Gamma1 => "gamma1",
            ParamId::GammaPh => "gamma_ph",
            ParamId::Gamma2 => "gamma2",
            ParamId::GammaC => "gamma_c",
            ParamId::Alpha => "alpha",
            ParamId::Tau => "tau",
            ParamId::Phi => "phi",
            ParamId::Wbar => "wbar",
            ParamId::Eps => "eps",
            ParamId::Eta => "eta",
            ParamId::Theta => "theta",
            ParamId::RGross => "R",
        }
    }

    pub fn from_name(name: &str) -> Option<ParamId> {
        ParamId::ALL.iter().copied().find(|p| p.name() == name)
    }

    pub fn get(&self, params: &ModelParameters) -> f64 {
        match self {
            ParamId::Gamma1 => params.gamma1,
            ParamId::GammaPh => params.gamma_ph,
            ParamId::Gamma2 => params.gamma2,
            ParamId::GammaC => params.gamma_c,
            ParamId::Alpha => params.alpha,
            ParamId::Tau => params.tau,
            ParamId::Phi => params.phi,
            ParamId::Wbar => params.wbar,
            ParamId::Eps => params.eps,
            ParamId::Eta => params.eta,
            ParamId::Theta => params.theta,
            ParamId::RGross => params.r_gross,
        }
    }

    pub fn set(&self, params: &mut ModelParameters, value: f64) {
        match self {
            ParamId::Gamma1 => params.gamma1 = value,
            ParamId::GammaPh => params.gamma_ph = value,
            ParamId::Gamma2 => params.gamma2 = value,
            ParamId::GammaC => params.gamma_c = value,
            ParamId::Alpha => params.alpha = value,
            ParamId::Tau => params.tau = value,
            ParamId::Phi => params.phi = value,
            ParamId::Wbar => params.wbar = value,
            ParamId::Eps => params.eps = value,
            ParamId::Eta => params.eta = value,
            ParamId::Theta => params.theta = value,
            ParamId::RGross => params.r_gross = value,
        }
    }
}

/// Steady-state outcomes tracked by the sign report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeId {
    Fertility,
    /// Operationalized as the steady-state wage, the monotone image of the
    /// per-child quality investments under the technology.
    HumanCapital,
    Savings,
    MentalHealthShare,
}

impl OutcomeId {
    pub const ALL: [OutcomeId; 4] = [
        OutcomeId::Fertility,
        OutcomeId::HumanCapital,
        OutcomeId::Savings,
        OutcomeId::MentalHealthShare,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            OutcomeId::Fertility => "fertility",
            OutcomeId::HumanCapital => "per_child_human_capital",
            OutcomeId::Savings => "savings",
            OutcomeId::MentalHealthShare => "mental_health_share",
        }
    }

    pub fn from_name(name: &str) -> Option<OutcomeId> {
        OutcomeId::ALL.iter().copied().find(|o| o.name() == name)
    }

    pub fn extract(&self, state: &SteadyState) -> f64 {
        match self {
            OutcomeId::Fertility => state.alloc.n,
            OutcomeId::HumanCapital => state.w,
            OutcomeId::Savings => state.alloc.s,
            OutcomeId::MentalHealthShare => state.alloc.mental_health_share(),
        }
    }
}

/// Sign of a comparative-static response.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
    /// The prediction is ambiguous; any observed sign is acceptable.
    Ambiguous,
}

impl Sign {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Zero => "0",
            Sign::Ambiguous => "?",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            "0" => Some(Sign::Zero),
            "?" => Some(Sign::Ambiguous),
            _ => None,
        }
    }
}

/// Parameters covered by the sign-prediction table, in row order.
pub const REPORT_PARAMS: [ParamId; 4] =
    [ParamId::Tau, ParamId::Alpha, ParamId::Phi, ParamId::Theta];

/// Predicted sign for one (parameter, outcome) pair.
///
/// Rows: contribution rate, altruism, rearing cost, mental-health elasticity.
/// Columns: fertility, per-child human capital, savings, mental-health share.
pub fn expected_sign(param: ParamId, outcome: OutcomeId) -> Option<Sign> {
    use OutcomeId::*;
    use ParamId::*;
    let sign = match (param, outcome) {
        (Tau, Fertility) => Sign::Plus,
        (Tau, HumanCapital) => Sign::Minus,
        (Tau, Savings) => Sign::Minus,
        (Tau, MentalHealthShare) => Sign::Zero,
        (Alpha, Fertility) => Sign::Plus,
        (Alpha, HumanCapital) => Sign::Plus,
        (Alpha, Savings) => Sign::Ambiguous,
        (Alpha, MentalHealthShare) => Sign::Zero,
        (Phi, Fertility) => Sign::Minus,
        (Phi, HumanCapital) => Sign::Plus,
        (Phi, Savings) => Sign::Ambiguous,
        (Phi, MentalHealthShare) => Sign::Zero,
        (Theta, Fertility) => Sign::Minus,
        (Theta, HumanCapital) => Sign::Plus,
        (Theta, Savings) => Sign::Ambiguous,
        (Theta, MentalHealthShare) => Sign::Plus,
        _ => return None,
    };
    Some(sign)
}

/// One grid point of a parameter sweep. Non-convergent points keep their
/// status instead of being dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub param: ParamId,
    pub value: f64,
    pub status: SolveStatus,
    pub state: Option<SteadyState>,
}

/// One cell of the sign report.
#[derive(Debug, Clone, PartialEq)]
pub struct SignCell {
    pub param: ParamId,
    pub outcome: OutcomeId,
    pub expected: Sign,
    /// `None` when the solver failed at a probe point (unevaluated cell).
    pub observed: Option<Sign>,
    pub derivative: Option<f64>,
    /// Relative step used for the probe.
    pub step: f64,
    /// Halving the step moved the derivative by less than 5%.
    pub stable: bool,
    pub agree: bool,
}

/// The full 4x4 comparison matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SignReport {
    pub cells: Vec<SignCell>,
}

impl SignReport {
    pub fn cell(&self, param: ParamId, outcome: OutcomeId) -> Option<&SignCell> {
        self.cells
            .iter()
            .find(|c| c.param == param && c.outcome == outcome)
    }
}

/// Errors raised by the comparative-statics layer.
#[derive(Debug, Clone, PartialEq)]
pub enum StaticsError {
    Model(ModelError),
    /// A grid value violates a parameter invariant, or the grid itself is
    /// malformed.
    InvalidGrid(String),
    /// A probe solve failed.
    Solve {
        param: &'static str,
        value: f64,
        status: SolveStatus,
    },
}

impl fmt::Display for StaticsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StaticsError::Model(e) => write!(f, "{e}"),
            StaticsError::InvalidGrid(msg) => write!(f, "InvalidGrid: {msg}"),
            StaticsError::Solve {
                param,
                value,
                status,
            } => write!(f, "solve failed at {param} = {value}: {}", status.name()),
        }
    }
}

impl std::error::Error for StaticsError {}

impl From<ModelError> for StaticsError {
    fn from(e: ModelError) -> Self {
        StaticsError::Model(e)
    }
}

/// Re-solves the steady state at every grid value of one parameter.
///
/// The grid must be strictly ascending and every value must keep the
/// parameter set valid.
pub fn sweep(
    params: &ModelParameters,
    param: ParamId,
    grid: &[f64],
    opts: &SolverOptions,
) -> Result<Vec<SweepRow>, StaticsError> {
    params.validate()?;
    if grid.is_empty() {
        return Err(StaticsError::InvalidGrid("empty grid".to_string()));
    }
    for pair in grid.windows(2) {
        if !(pair[1] > pair[0]) {
            return Err(StaticsError::InvalidGrid(format!(
                "grid must be strictly ascending, got {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    let mut probes = Vec::with_capacity(grid.len());
    for &value in grid {
        let mut point = *params;
        param.set(&mut point, value);
        if let Err(e) = point.validate() {
            return Err(StaticsError::InvalidGrid(format!(
                "{} = {value}: {e}",
                param.name()
            )));
        }
        probes.push((value, point));
    }

    let mut rows = Vec::with_capacity(probes.len());
    for (value, point) in probes {
        let outcome = solve_steady_state(&point, opts)?;
        rows.push(SweepRow {
            param,
            value,
            status: outcome.status,
            state: outcome.state,
        });
    }
    Ok(rows)
}

fn solve_outcome_at(
    params: &ModelParameters,
    param: ParamId,
    value: f64,
    outcome: OutcomeId,
    opts: &SolverOptions,
) -> Result<f64, StaticsError> {
    let mut point = *params;
    param.set(&mut point, value);
    point
        .validate()
        .map_err(|e| StaticsError::InvalidGrid(format!("{} = {value}: {e}", param.name())))?;
    let solved = solve_steady_state(&point, opts)?;
    match solved.state {
        Some(state) => Ok(outcome.extract(&state)),
        None => Err(StaticsError::Solve {
            param: param.name(),
            value,
            status: solved.status,
        }),
    }
}

/// Central-difference derivative of one outcome and its classified sign.
///
/// The sign counts as zero when the implied elasticity
/// `|derivative * param / outcome|` falls below [`ELASTICITY_ZERO_THRESHOLD`].
pub fn finite_diff_sign(
    params: &ModelParameters,
    param: ParamId,
    outcome: OutcomeId,
    h: f64,
) -> Result<(f64, Sign), StaticsError> {
    finite_diff_with(params, param, outcome, h, &SolverOptions::default())
}

fn finite_diff_with(
    params: &ModelParameters,
    param: ParamId,
    outcome: OutcomeId,
    h: f64,
    opts: &SolverOptions,
) -> Result<(f64, Sign), StaticsError> {
    params.validate()?;
    if !(h > 0.0) || !h.is_finite() {
        return Err(StaticsError::InvalidGrid(format!(
            "relative step must be positive, got {h}"
        )));
    }
    let p0 = param.get(params);
    let delta = h * p0;
    let plus = solve_outcome_at(params, param, p0 + delta, outcome, opts)?;
    let minus = solve_outcome_at(params, param, p0 - delta, outcome, opts)?;
    let derivative = (plus - minus) / (2.0 * delta);
    Ok((derivative, classify(derivative, p0, 0.5 * (plus + minus))))
}

fn classify(derivative: f64, param_value: f64, outcome_value: f64) -> Sign {
    if derivative == 0.0 {
        return Sign::Zero;
    }
    let elasticity = derivative * param_value / outcome_value;
    if elasticity.abs() < ELASTICITY_ZERO_THRESHOLD {
        Sign::Zero
    } else if derivative > 0.0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Evaluates the full 4x4 sign table at the given parameter point.
///
/// Cells whose prediction is exactly zero (the share under the contribution
/// rate, altruism, and the rearing cost) are checked through the allocation
/// identity `share = theta / (eps+eta+theta)` at perturbed parameter points;
/// every other cell is probed by central finite differences at `h` and `h/2`.
/// A cell where a probe solve fails is reported unevaluated rather than
/// aborting the report.
pub fn sign_report(
    params: &ModelParameters,
    opts: &SolverOptions,
    h: f64,
) -> Result<SignReport, StaticsError> {
    params.validate()?;
    if !(h > 0.0) || !h.is_finite() {
        return Err(StaticsError::InvalidGrid(format!(
            "relative step must be positive, got {h}"
        )));
    }
    let mut cells = Vec::with_capacity(16);
    for param in REPORT_PARAMS {
        for outcome in OutcomeId::ALL {
            let expected = expected_sign(param, outcome).expect("report cell");
            let identity_cell = if expected == Sign::Zero && outcome == OutcomeId::MentalHealthShare
            {
                share_identity_cell(params, param, expected, opts, h)
            } else {
                None
            };
            let cell = identity_cell
                .unwrap_or_else(|| finite_diff_cell(params, param, outcome, expected, opts, h));
            cells.push(cell);
        }
    }
    Ok(SignReport { cells })
}

/// Share cells asserted through the exact identity rather than differencing.
/// Returns `None` when the identity fails to hold at the probe points, in
/// which case the caller falls back to the numeric route.
fn share_identity_cell(
    params: &ModelParameters,
    param: ParamId,
    expected: Sign,
    opts: &SolverOptions,
    h: f64,
) -> Option<SignCell> {
    let p0 = param.get(params);
    let target = params.theta / params.sigma();
    for value in [p0 * (1.0 - h), p0 * (1.0 + h)] {
        match solve_outcome_at(params, param, value, OutcomeId::MentalHealthShare, opts) {
            Ok(share) => {
                if (share - target).abs() > SHARE_IDENTITY_TOL * target.max(1e-300) {
                    return None;
                }
            }
            Err(_) => {
                return Some(SignCell {
                    param,
                    outcome: OutcomeId::MentalHealthShare,
                    expected,
                    observed: None,
                    derivative: None,
                    step: h,
                    stable: false,
                    agree: false,
                });
            }
        }
    }
    Some(SignCell {
        param,
        outcome: OutcomeId::MentalHealthShare,
        expected,
        observed: Some(Sign::Zero),
        derivative: Some(0.0),
        step: h,
        stable: true,
        agree: expected == Sign::Zero,
    })
}

fn finite_diff_cell(
    params: &ModelParameters,
    param: ParamId,
    outcome: OutcomeId,
    expected: Sign,
    opts: &SolverOptions,
    h: f64,
) -> SignCell {
    let base = finite_diff_with(params, param, outcome, h, opts);
    let half = finite_diff_with(params, param, outcome, 0.5 * h, opts);
    match (base, half) {
        (Ok((d1, s1)), Ok((d2, s2))) => {
            let stable = (s1 == Sign::Zero && s2 == Sign::Zero)
                || (d1 - d2).abs() < STABILITY_REL_TOL * d1.abs().max(d2.abs());
            let agree = match expected {
                Sign::Ambiguous => true,
                other => other == s1,
            };
            SignCell {
                param,
                outcome,
                expected,
                observed: Some(s1),
                derivative: Some(d1),
                step: h,
                stable,
                agree,
            }
        }
        _ => SignCell {
            param,
            outcome,
            expected,
            observed: None,
            derivative: None,
            step: h,
            stable: false,
            agree: expected == Sign::Ambiguous,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn baseline() -> ModelParameters {
        ModelParameters::baseline()
    }

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
        (0..count)
            .map(|i| {
                if i == count - 1 {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (count - 1) as f64
                }
            })
            .collect()
    }

    #[test]
    fn tau_sweep_keeps_share_constant() {
        let rows = sweep(&baseline(), ParamId::Tau, &linspace(0.1, 0.4, 7), &opts()).unwrap();
        assert_eq!(rows.len(), 7);
        let shares: Vec<f64> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.status, SolveStatus::Converged, "tau = {}", r.value);
                r.state.unwrap().alloc.mental_health_share()
            })
            .collect();
        let max = shares.iter().cloned().fold(f64::MIN, f64::max);
        let min = shares.iter().cloned().fold(f64::MAX, f64::min);
        assert!(max - min <= 1e-12, "share drift {}", max - min);
    }

    #[test]
    fn theta_sweep_share_strictly_increases() {
        let rows = sweep(&baseline(), ParamId::Theta, &linspace(0.1, 0.3, 6), &opts()).unwrap();
        let shares: Vec<f64> = rows
            .iter()
            .map(|r| r.state.unwrap().alloc.mental_health_share())
            .collect();
        for pair in shares.windows(2) {
            assert!(pair[1] > pair[0], "share not increasing: {shares:?}");
        }
    }

    #[test]
    fn phi_sweep_records_fertility_column() {
        let rows = sweep(&baseline(), ParamId::Phi, &linspace(0.05, 0.5, 10), &opts()).unwrap();
        let fert: Vec<f64> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.status, SolveStatus::Converged);
                r.state.unwrap().alloc.n
            })
            .collect();
        // Dearer children, fewer of them: the quantity-quality prediction
        // holds numerically on the baseline.
        for pair in fert.windows(2) {
            assert!(pair[1] < pair[0], "fertility column: {fert:?}");
        }
    }

    #[test]
    fn sweep_rows_keep_ratio_identity() {
        let rows = sweep(&baseline(), ParamId::Alpha, &linspace(0.2, 0.6, 5), &opts()).unwrap();
        for row in &rows {
            let a = row.state.unwrap().alloc;
            let want = baseline().eps / baseline().eta;
            assert!(((a.e / a.hp) - want).abs() <= 1e-12 * want);
        }
    }

    #[test]
    fn sweep_rejects_invalid_grid_values() {
        let err = sweep(&baseline(), ParamId::Tau, &[0.2, 1.5], &opts()).unwrap_err();
        assert!(matches!(err, StaticsError::InvalidGrid(_)), "{err:?}");

        let err = sweep(&baseline(), ParamId::Tau, &[0.3, 0.2], &opts()).unwrap_err();
        assert!(matches!(err, StaticsError::InvalidGrid(_)));

        let err = sweep(&baseline(), ParamId::Tau, &[], &opts()).unwrap_err();
        assert!(matches!(err, StaticsError::InvalidGrid(_)));
    }

    #[test]
    fn sweep_records_failed_points_with_status() {
        let rows = sweep(&baseline(), ParamId::Wbar, &[1e-300, 1.0], &opts()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].status, SolveStatus::NonInterior);
        assert!(rows[0].state.is_none());
        assert_eq!(rows[1].status, SolveStatus::Converged);
    }

    #[test]
    fn share_is_invariant_to_tau() {
        let (derivative, sign) = finite_diff_sign(
            &baseline(),
            ParamId::Tau,
            OutcomeId::MentalHealthShare,
            DEFAULT_REL_STEP,
        )
        .unwrap();
        assert_eq!(sign, Sign::Zero, "derivative {derivative}");
    }

    #[test]
    fn share_rises_with_theta() {
        let (derivative, sign) = finite_diff_sign(
            &baseline(),
            ParamId::Theta,
            OutcomeId::MentalHealthShare,
            DEFAULT_REL_STEP,
        )
        .unwrap();
        assert_eq!(sign, Sign::Plus);
        assert!(derivative > 0.0);
    }

    #[test]
    fn wage_rises_with_tau_contradicting_the_prediction() {
        // The closed-form wage scales as (tau/R)^(sigma/(1-sigma)), so the
        // per-child human capital column disagrees with the predicted minus.
        let (derivative, sign) = finite_diff_sign(
            &baseline(),
            ParamId::Tau,
            OutcomeId::HumanCapital,
            DEFAULT_REL_STEP,
        )
        .unwrap();
        assert_eq!(sign, Sign::Plus, "derivative {derivative}");
    }

    #[test]
    fn report_has_all_sixteen_cells_exactly_once() {
        let report = sign_report(&baseline(), &opts(), DEFAULT_REL_STEP).unwrap();
        assert_eq!(report.cells.len(), 16);
        for param in REPORT_PARAMS {
            for outcome in OutcomeId::ALL {
                let found = report
                    .cells
                    .iter()
                    .filter(|c| c.param == param && c.outcome == outcome)
                    .count();
                assert_eq!(found, 1, "{} x {}", param.name(), outcome.name());
            }
        }
    }

    #[test]
    fn report_share_column_matches_predictions() {
        let report = sign_report(&baseline(), &opts(), DEFAULT_REL_STEP).unwrap();
        for param in [ParamId::Tau, ParamId::Alpha, ParamId::Phi] {
            let cell = report.cell(param, OutcomeId::MentalHealthShare).unwrap();
            assert_eq!(cell.expected, Sign::Zero);
            assert_eq!(cell.observed, Some(Sign::Zero));
            assert!(cell.agree, "{}", param.name());
            assert!(cell.stable);
        }
        let theta = report
            .cell(ParamId::Theta, OutcomeId::MentalHealthShare)
            .unwrap();
        assert_eq!(theta.expected, Sign::Plus);
        assert_eq!(theta.observed, Some(Sign::Plus));
        assert!(theta.agree);
    }

    #[test]
    fn report_ambiguous_cells_always_agree() {
        let report = sign_report(&baseline(), &opts(), DEFAULT_REL_STEP).unwrap();
        for cell in &report.cells {
            if cell.expected == Sign::Ambiguous {
                assert!(cell.agree);
                assert!(cell.observed.is_some());
            }
        }
    }

    #[test]
    fn report_emits_the_known_tension_cell() {
        let report = sign_report(&baseline(), &opts(), DEFAULT_REL_STEP).unwrap();
        let cell = report.cell(ParamId::Tau, OutcomeId::HumanCapital).unwrap();
        assert_eq!(cell.expected, Sign::Minus);
        assert_eq!(cell.observed, Some(Sign::Plus));
        assert!(!cell.agree);
        assert!(cell.stable, "derivative {:?}", cell.derivative);
    }

    #[test]
    fn report_cells_are_stable_on_baseline() {
        let report = sign_report(&baseline(), &opts(), DEFAULT_REL_STEP).unwrap();
        for cell in &report.cells {
            assert!(
                cell.observed.is_some(),
                "{} x {} unevaluated",
                cell.param.name(),
                cell.outcome.name()
            );
            assert!(
                cell.stable,
                "{} x {} unstable: {:?}",
                cell.param.name(),
                cell.outcome.name(),
                cell.derivative
            );
        }
    }

    #[test]
    fn param_names_round_trip() {
        for param in ParamId::ALL {
            assert_eq!(ParamId::from_name(param.name()), Some(param));
        }
        for outcome in OutcomeId::ALL {
            assert_eq!(OutcomeId::from_name(outcome.name()), Some(outcome));
        }
        assert_eq!(ParamId::from_name("bogus"), None);
    }
}
