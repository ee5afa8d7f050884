//! Core types and equations of the dynastic OLG economy.
//!
//! A household lives two periods. When young it earns the wage, pays the
//! PAYG contribution, consumes, spends on its own health, saves, and invests
//! in its children's education, physical health, and mental health. When old
//! it consumes out of savings and pension benefits financed by its children's
//! contributions, and leaves each child a bequest. Parents are altruistic, so
//! in steady state the dynastic value solves `V = flow + alpha * n * V`.
//!
//! Everything here is a pure function of its inputs; the solver and the
//! brute-force oracle both build on these evaluators.

use std::fmt;

/// How the per-child bequest is pinned down.
///
/// The household problem carries no first-order condition for the bequest
/// left to each child, so it enters as an exogenous constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BequestMode {
    ExogenousZero,
    ExogenousValue(f64),
}

impl BequestMode {
    /// The per-child bequest amount implied by the mode.
    pub fn value(&self) -> f64 {
        match *self {
            BequestMode::ExogenousZero => 0.0,
            BequestMode::ExogenousValue(b) => b,
        }
    }
}

/// All exogenous constants of the model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParameters {
    /// Utility weight on young-age consumption.
    pub gamma1: f64,
    /// Utility weight on parental health expenditure.
    pub gamma_ph: f64,
    /// Utility weight on fertility.
    pub gamma2: f64,
    /// Utility weight on old-age consumption.
    pub gamma_c: f64,
    /// Dynastic altruism factor.
    pub alpha: f64,
    /// PAYG contribution rate, strictly inside (0, 1).
    pub tau: f64,
    /// Fixed rearing cost per child.
    pub phi: f64,
    /// Baseline productivity of the wage technology.
    pub wbar: f64,
    /// Education elasticity of the wage technology.
    pub eps: f64,
    /// Physical-health elasticity.
    pub eta: f64,
    /// Mental-health elasticity.
    pub theta: f64,
    /// Gross interest factor per generation.
    pub r_gross: f64,
    /// Bequest treatment.
    pub bequest: BequestMode,
}

impl ModelParameters {
    /// The baseline scenario used throughout the test suite and docs.
    pub fn baseline() -> Self {
        ModelParameters {
            gamma1: 1.0,
            gamma_ph: 0.5,
            gamma2: 1.0,
            gamma_c: 0.9,
            alpha: 0.4,
            tau: 0.3,
            phi: 0.1,
            wbar: 1.0,
            eps: 0.2,
            eta: 0.2,
            theta: 0.2,
            r_gross: 1.5,
            bequest: BequestMode::ExogenousZero,
        }
    }

    /// Sum of the three quality elasticities.
    pub fn sigma(&self) -> f64 {
        self.eps + self.eta + self.theta
    }

    /// Per-child bequest amount.
    pub fn bequest_value(&self) -> f64 {
        self.bequest.value()
    }

    /// Checks every parameter restriction.
    ///
    /// `tau = 0` is rejected: quality investments earn returns only through
    /// the pension channel, so a zero contribution rate forces the corner
    /// `e = hp = hm = 0` and no interior steady state exists.
    pub fn validate(&self) -> Result<(), ModelError> {
        let positives = [
            ("gamma1", self.gamma1),
            ("gamma_ph", self.gamma_ph),
            ("gamma2", self.gamma2),
            ("gamma_c", self.gamma_c),
            ("alpha", self.alpha),
            ("phi", self.phi),
            ("wbar", self.wbar),
            ("eps", self.eps),
            ("eta", self.eta),
            ("theta", self.theta),
            ("R", self.r_gross),
        ];
        for (name, value) in positives {
            if !(value > 0.0) || !value.is_finite() {
                return Err(ModelError::InvalidParameter {
                    name,
                    value,
                    constraint: "must be strictly positive and finite",
                });
            }
        }
        if !(self.tau > 0.0 && self.tau < 1.0) {
            return Err(ModelError::InvalidParameter {
                name: "tau",
                value: self.tau,
                constraint: "must lie strictly inside (0, 1)",
            });
        }
        if !(self.sigma() < 1.0) {
            return Err(ModelError::InvalidParameter {
                name: "eps+eta+theta",
                value: self.sigma(),
                constraint: "must be strictly below 1",
            });
        }
        let b = self.bequest_value();
        if !(b >= 0.0) || !b.is_finite() {
            return Err(ModelError::InvalidParameter {
                name: "bequest",
                value: b,
                constraint: "must be nonnegative and finite",
            });
        }
        Ok(())
    }
}

/// One generation's choices.
///
/// Savings may be negative (borrowing is unconstrained); every other field
/// must be strictly positive at an interior point, except the bequest which
/// is nonnegative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Allocation {
    /// Young-age consumption.
    pub c1: f64,
    /// Old-age consumption.
    pub c2: f64,
    /// Parental health expenditure.
    pub ph: f64,
    /// Private savings.
    pub s: f64,
    /// Number of children (continuous).
    pub n: f64,
    /// Per-child education investment.
    pub e: f64,
    /// Per-child physical-health investment.
    pub hp: f64,
    /// Per-child mental-health investment.
    pub hm: f64,
    /// Steady-state bequest per child.
    pub b: f64,
}

impl Allocation {
    /// Checks the interiority invariants: strict positivity of every field
    /// the log utility or the Cobb-Douglas technology touches.
    pub fn validate_interior(&self) -> Result<(), ModelError> {
        let required = [
            ("c1", self.c1),
            ("c2", self.c2),
            ("ph", self.ph),
            ("n", self.n),
            ("e", self.e),
            ("hp", self.hp),
            ("hm", self.hm),
        ];
        for (name, value) in required {
            if !(value > 0.0) || !value.is_finite() {
                return Err(ModelError::Domain { name, value });
            }
        }
        if !self.s.is_finite() {
            return Err(ModelError::Domain {
                name: "s",
                value: self.s,
            });
        }
        if !(self.b >= 0.0) || !self.b.is_finite() {
            return Err(ModelError::Domain {
                name: "b",
                value: self.b,
            });
        }
        Ok(())
    }

    /// Share of quality spending devoted to mental health, `hm/(e+hp+hm)`.
    pub fn mental_health_share(&self) -> f64 {
        self.hm / (self.e + self.hp + self.hm)
    }
}

/// Lagrange multipliers on the two budget constraints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShadowPrices {
    /// Marginal utility of young-period income.
    pub lambda: f64,
    /// Marginal utility of old-period income.
    pub mu: f64,
}

/// A solved steady state together with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub alloc: Allocation,
    pub prices: ShadowPrices,
    /// Steady-state wage: the fixed point of the wage technology.
    pub w: f64,
    /// Dynastic value `V = flow / (1 - alpha * n)`.
    pub value: f64,
    /// Max-abs entry of the full residual vector at this state.
    pub residual_norm: f64,
    /// Product `alpha * n`; must stay below 1 for the value recursion.
    pub alpha_n: f64,
}

/// Named residuals of the full steady-state system.
///
/// The eight FOC entries follow the stationarity conditions of the household
/// Lagrangian, the two budget entries are the constraint slacks, and the two
/// fixed-point entries close the wage technology and the value recursion.
/// All twelve vanish at an interior steady state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualVector {
    pub r_c1: f64,
    pub r_c2: f64,
    pub r_s: f64,
    pub r_ph: f64,
    pub r_e: f64,
    pub r_hp: f64,
    pub r_hm: f64,
    pub r_n: f64,
    pub r_by: f64,
    pub r_bo: f64,
    pub r_w: f64,
    pub r_v: f64,
}

impl ResidualVector {
    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.entries()
            .iter()
            .map(|(_, v)| v.abs())
            .fold(0.0, f64::max)
    }

    /// All entries with their names, in fixed order.
    pub fn entries(&self) -> [(&'static str, f64); 12] {
        [
            ("r_c1", self.r_c1),
            ("r_c2", self.r_c2),
            ("r_s", self.r_s),
            ("r_ph", self.r_ph),
            ("r_e", self.r_e),
            ("r_hp", self.r_hp),
            ("r_hm", self.r_hm),
            ("r_n", self.r_n),
            ("r_by", self.r_by),
            ("r_bo", self.r_bo),
            ("r_w", self.r_w),
            ("r_v", self.r_v),
        ]
    }
}

/// Quality-investment proportions implied by the elasticities alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AllocationRatios {
    /// e : hp ratio, `eps / eta`.
    pub e_over_hp: f64,
    /// e : hm ratio, `eps / theta`.
    pub e_over_hm: f64,
    /// hp : hm ratio, `eta / theta`.
    pub hp_over_hm: f64,
    /// Mental-health share of quality spending, `theta / (eps+eta+theta)`.
    pub mental_health_share: f64,
}

/// Closed-form steady-state wage and the quality investments that support it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WageFixedPoint {
    pub w: f64,
    pub e: f64,
    pub hp: f64,
    pub hm: f64,
}

/// Errors raised by the model evaluators.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// A quantity that must be strictly positive (a log argument or a
    /// Cobb-Douglas input) was not.
    Domain { name: &'static str, value: f64 },
    /// `alpha * n >= 1`: the dynastic value recursion has no finite sum.
    DivergentDynasty { alpha_n: f64 },
    /// A parameter violates its restriction.
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Domain { name, value } => {
                write!(f, "domain error: {name} = {value} is not interior")
            }
            ModelError::DivergentDynasty { alpha_n } => {
                write!(f, "DivergentDynasty: alpha*n = {alpha_n} >= 1")
            }
            ModelError::InvalidParameter {
                name,
                value,
                constraint,
            } => write!(f, "invalid parameter {name} = {value}: {constraint}"),
        }
    }
}

impl std::error::Error for ModelError {}

/// Per-generation flow utility
/// `gamma1*ln(c1) + gamma_ph*ln(ph) + gamma2*ln(n) + gamma_c*ln(c2)`.
pub fn utility_flow(alloc: &Allocation, params: &ModelParameters) -> Result<f64, ModelError> {
    let logs = [
        ("c1", alloc.c1),
        ("ph", alloc.ph),
        ("n", alloc.n),
        ("c2", alloc.c2),
    ];
    for (name, value) in logs {
        if !(value > 0.0) || !value.is_finite() {
            return Err(ModelError::Domain { name, value });
        }
    }
    Ok(params.gamma1 * alloc.c1.ln()
        + params.gamma_ph * alloc.ph.ln()
        + params.gamma2 * alloc.n.ln()
        + params.gamma_c * alloc.c2.ln())
}

/// Cobb-Douglas wage technology `wbar * e^eps * hp^eta * hm^theta`.
pub fn wage_technology(
    e: f64,
    hp: f64,
    hm: f64,
    params: &ModelParameters,
) -> Result<f64, ModelError> {
    let inputs = [("e", e), ("hp", hp), ("hm", hm)];
    for (name, value) in inputs {
        if !(value > 0.0) || !value.is_finite() {
            return Err(ModelError::Domain { name, value });
        }
    }
    Ok(params.wbar * e.powf(params.eps) * hp.powf(params.eta) * hm.powf(params.theta))
}

/// Budget slacks `(r_by, r_bo)` at wage `w`.
///
/// The young residual is income minus spending in the working period; the old
/// residual is retirement income minus retirement spending, with the pension
/// benefit valued at the child wage implied by the quality investments.
/// Residuals are diagnostic and may take any sign.
pub fn budget_residuals(alloc: &Allocation, w: f64, params: &ModelParameters) -> (f64, f64) {
    let child_cost = params.phi + alloc.e + alloc.hp + alloc.hm;
    let r_by =
        w * (1.0 - params.tau) + alloc.b - alloc.c1 - alloc.ph - alloc.s - alloc.n * child_cost;
    let w_child = params.wbar
        * alloc.e.powf(params.eps)
        * alloc.hp.powf(params.eta)
        * alloc.hm.powf(params.theta);
    let r_bo =
        params.r_gross * alloc.s + params.tau * alloc.n * w_child - alloc.c2 - alloc.n * alloc.b;
    (r_by, r_bo)
}

/// The full residual vector at an interior point.
///
/// `v_next` is the continuation value the household takes as given; in steady
/// state it equals the dynastic value itself. The quality and fertility
/// entries price the pension return at the technology wage implied by
/// `(e, hp, hm)`, which is what the Lagrangian differentiates; `r_w` then
/// measures the gap between that wage and the steady-state wage `w`.
pub fn foc_residuals(
    alloc: &Allocation,
    prices: &ShadowPrices,
    w: f64,
    v_next: f64,
    params: &ModelParameters,
) -> Result<ResidualVector, ModelError> {
    alloc.validate_interior()?;
    if !(prices.lambda > 0.0) || !prices.lambda.is_finite() {
        return Err(ModelError::Domain {
            name: "lambda",
            value: prices.lambda,
        });
    }
    if !(prices.mu > 0.0) || !prices.mu.is_finite() {
        return Err(ModelError::Domain {
            name: "mu",
            value: prices.mu,
        });
    }
    if !(w > 0.0) || !w.is_finite() {
        return Err(ModelError::Domain {
            name: "w",
            value: w,
        });
    }

    let lambda = prices.lambda;
    let mu = prices.mu;
    let w_child = wage_technology(alloc.e, alloc.hp, alloc.hm, params)?;
    let child_cost = params.phi + alloc.e + alloc.hp + alloc.hm;
    let flow = utility_flow(alloc, params)?;
    let (r_by, r_bo) = budget_residuals(alloc, w, params);

    Ok(ResidualVector {
        r_c1: params.gamma1 / alloc.c1 - lambda,
        r_c2: params.gamma_c / alloc.c2 - mu,
        r_s: lambda - mu * params.r_gross,
        r_ph: params.gamma_ph / alloc.ph - lambda,
        r_e: lambda - mu * params.tau * params.eps * w_child / alloc.e,
        r_hp: lambda - mu * params.tau * params.eta * w_child / alloc.hp,
        r_hm: lambda - mu * params.tau * params.theta * w_child / alloc.hm,
        r_n: params.gamma2 / alloc.n + params.alpha * v_next + mu * params.tau * w_child
            - lambda * child_cost
            - mu * alloc.b,
        r_by,
        r_bo,
        r_w: w - w_child,
        r_v: flow + params.alpha * alloc.n * v_next - v_next,
    })
}

/// Quality-investment proportions; these depend only on the elasticities.
pub fn allocation_ratios(params: &ModelParameters) -> AllocationRatios {
    AllocationRatios {
        e_over_hp: params.eps / params.eta,
        e_over_hm: params.eps / params.theta,
        hp_over_hm: params.eta / params.theta,
        mental_health_share: params.theta / params.sigma(),
    }
}

/// Closed-form steady-state wage and quality investments.
///
/// Combining each quality condition `lambda = mu * tau * elasticity * w / x`
/// with the savings condition `lambda = mu * R` pins the investments at
/// `x = tau * elasticity * w / R`; feeding those back through the technology
/// gives the wage fixed point
/// `w = (wbar * (tau/R)^sigma * eps^eps * eta^eta * theta^theta)^(1/(1-sigma))`.
pub fn steady_state_wage(params: &ModelParameters) -> WageFixedPoint {
    let sigma = params.sigma();
    let ln_w = (params.wbar.ln()
        + sigma * (params.tau.ln() - params.r_gross.ln())
        + params.eps * params.eps.ln()
        + params.eta * params.eta.ln()
        + params.theta * params.theta.ln())
        / (1.0 - sigma);
    let w = ln_w.exp();
    let scale = params.tau * w / params.r_gross;
    WageFixedPoint {
        w,
        e: params.eps * scale,
        hp: params.eta * scale,
        hm: params.theta * scale,
    }
}

/// Steady-state dynastic value `flow / (1 - alpha * n)`.
pub fn dynasty_value(flow: f64, n: f64, params: &ModelParameters) -> Result<f64, ModelError> {
    let alpha_n = params.alpha * n;
    if alpha_n >= 1.0 {
        return Err(ModelError::DivergentDynasty { alpha_n });
    }
    Ok(flow / (1.0 - alpha_n))
}
