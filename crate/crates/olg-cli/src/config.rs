//! Flat `key = value` scenario configs.
//!
//! One pair per line, `#` starts a comment, blank lines are ignored. The
//! fourteen scenario keys (`gamma1`, `gamma_ph`, `gamma2`, `gamma_c`,
//! `alpha`, `tau`, `phi`, `wbar`, `eps`, `eta`, `theta`, `R`, `bequest`,
//! `name`) are all required; solver and oracle options (`residual_tol`,
//! `max_iter`, `bracket_lo`, `bracket_hi`, `polish`, `horizon`,
//! `grid_points`, `refine_rounds`) are optional and fall back to their
//! documented defaults. Unknown keys are rejected with their line number.

use olg_core::{BequestMode, ModelParameters, OracleOptions, PolishMode, SolverOptions};
use std::collections::HashMap;
use std::fmt;

/// A parsed scenario: model parameters plus solver/oracle overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub name: String,
    pub params: ModelParameters,
    pub solver: SolverOptions,
    pub oracle: OracleOptions,
}

/// Errors raised while parsing or validating a scenario config.
#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    Syntax {
        line: usize,
        msg: String,
    },
    UnknownKey {
        line: usize,
        key: String,
    },
    DuplicateKey {
        line: usize,
        key: String,
    },
    InvalidValue {
        line: usize,
        key: String,
        msg: String,
    },
    MissingKey {
        key: &'static str,
    },
    Validation {
        msg: String,
    },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Syntax { line, msg } => write!(f, "line {line}: {msg}"),
            ConfigError::UnknownKey { line, key } => {
                write!(f, "line {line}: unknown key '{key}'")
            }
            ConfigError::DuplicateKey { line, key } => {
                write!(f, "line {line}: duplicate key '{key}'")
            }
            ConfigError::InvalidValue { line, key, msg } => {
                write!(f, "line {line}: invalid value for '{key}': {msg}")
            }
            ConfigError::MissingKey { key } => write!(f, "missing required key '{key}'"),
            ConfigError::Validation { msg } => write!(f, "validation failed: {msg}"),
        }
    }
}

impl std::error::Error for ConfigError {}

const MODEL_KEYS: [&str; 14] = [
    "gamma1", "gamma_ph", "gamma2", "gamma_c", "alpha", "tau", "phi", "wbar", "eps", "eta",
    "theta", "R", "bequest", "name",
];

const OPTION_KEYS: [&str; 8] = [
    "residual_tol",
    "max_iter",
    "bracket_lo",
    "bracket_hi",
    "polish",
    "horizon",
    "grid_points",
    "refine_rounds",
];

fn parse_f64(line: usize, key: &str, raw: &str) -> Result<f64, ConfigError> {
    let value: f64 = raw.parse().map_err(|_| ConfigError::InvalidValue {
        line,
        key: key.to_string(),
        msg: format!("expected a number, got '{raw}'"),
    })?;
    if !value.is_finite() {
        return Err(ConfigError::InvalidValue {
            line,
            key: key.to_string(),
            msg: "must be finite".to_string(),
        });
    }
    Ok(value)
}

fn parse_usize(line: usize, key: &str, raw: &str) -> Result<usize, ConfigError> {
    raw.parse().map_err(|_| ConfigError::InvalidValue {
        line,
        key: key.to_string(),
        msg: format!("expected a nonnegative integer, got '{raw}'"),
    })
}

/// Parses a scenario config from text.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigError> {
    let mut entries: HashMap<String, (usize, String)> = HashMap::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let Some(eq) = line.find('=') else {
            return Err(ConfigError::Syntax {
                line: line_no,
                msg: format!("expected 'key = value', got '{line}'"),
            });
        };
        let key = line[..eq].trim();
        let value = line[eq + 1..].trim();
        if key.is_empty() {
            return Err(ConfigError::Syntax {
                line: line_no,
                msg: "empty key".to_string(),
            });
        }
        if !MODEL_KEYS.contains(&key) && !OPTION_KEYS.contains(&key) {
            return Err(ConfigError::UnknownKey {
                line: line_no,
                key: key.to_string(),
            });
        }
        if value.is_empty() {
            return Err(ConfigError::InvalidValue {
                line: line_no,
                key: key.to_string(),
                msg: "empty value".to_string(),
            });
        }
        if entries.contains_key(key) {
            return Err(ConfigError::DuplicateKey {
                line: line_no,
                key: key.to_string(),
            });
        }
        entries.insert(key.to_string(), (line_no, value.to_string()));
    }

    // Model parameters never default; report the first missing key.
    for key in MODEL_KEYS {
        if !entries.contains_key(key) {
            return Err(ConfigError::MissingKey { key });
        }
    }

    let take = |key: &str| entries.get(key).cloned().expect("required key checked");
    let num = |key: &str| -> Result<f64, ConfigError> {
        let (line, raw) = take(key);
        parse_f64(line, key, &raw)
    };

    let (bequest_line, bequest_raw) = take("bequest");
    let bequest = if bequest_raw == "zero" {
        BequestMode::ExogenousZero
    } else {
        let b = parse_f64(bequest_line, "bequest", &bequest_raw)?;
        if b < 0.0 {
            return Err(ConfigError::InvalidValue {
                line: bequest_line,
                key: "bequest".to_string(),
                msg: "must be 'zero' or a nonnegative decimal".to_string(),
            });
        }
        BequestMode::ExogenousValue(b)
    };

    let params = ModelParameters {
        gamma1: num("gamma1")?,
        gamma_ph: num("gamma_ph")?,
        gamma2: num("gamma2")?,
        gamma_c: num("gamma_c")?,
        alpha: num("alpha")?,
        tau: num("tau")?,
        phi: num("phi")?,
        wbar: num("wbar")?,
        eps: num("eps")?,
        eta: num("eta")?,
        theta: num("theta")?,
        r_gross: num("R")?,
        bequest,
    };
    params
        .validate()
        .map_err(|e| ConfigError::Validation { msg: e.to_string() })?;

    let mut solver = SolverOptions::default();
    if let Some((line, raw)) = entries.get("residual_tol") {
        solver.residual_tol = parse_f64(*line, "residual_tol", raw)?;
        if !(solver.residual_tol > 0.0) {
            return Err(ConfigError::Validation {
                msg: "residual_tol must be strictly positive".to_string(),
            });
        }
    }
    if let Some((line, raw)) = entries.get("max_iter") {
        solver.max_iter = parse_usize(*line, "max_iter", raw)?;
        if solver.max_iter == 0 {
            return Err(ConfigError::Validation {
                msg: "max_iter must be at least 1".to_string(),
            });
        }
    }
    if let Some((line, raw)) = entries.get("bracket_lo") {
        solver.bracket.0 = parse_f64(*line, "bracket_lo", raw)?;
    }
    if let Some((line, raw)) = entries.get("bracket_hi") {
        solver.bracket.1 = parse_f64(*line, "bracket_hi", raw)?;
    }
    if !(solver.bracket.0 > 0.0 && solver.bracket.1 > solver.bracket.0) {
        return Err(ConfigError::Validation {
            msg: format!(
                "bracket must satisfy 0 < lo < hi, got ({}, {})",
                solver.bracket.0, solver.bracket.1
            ),
        });
    }
    if let Some((line, raw)) = entries.get("polish") {
        solver.polish = match raw.as_str() {
            "newton" => PolishMode::NewtonPolish,
            "bisection" => PolishMode::BisectionOnly,
            other => {
                return Err(ConfigError::InvalidValue {
                    line: *line,
                    key: "polish".to_string(),
                    msg: format!("expected 'newton' or 'bisection', got '{other}'"),
                })
            }
        };
    }

    let mut oracle = OracleOptions::default();
    if let Some((line, raw)) = entries.get("horizon") {
        oracle.horizon = parse_usize(*line, "horizon", raw)?;
    }
    if let Some((line, raw)) = entries.get("grid_points") {
        oracle.grid_points = parse_usize(*line, "grid_points", raw)?;
        if oracle.grid_points < 3 {
            return Err(ConfigError::Validation {
                msg: "grid_points must be at least 3".to_string(),
            });
        }
    }
    if let Some((line, raw)) = entries.get("refine_rounds") {
        oracle.refine_rounds = parse_usize(*line, "refine_rounds", raw)?;
        if oracle.refine_rounds == 0 {
            return Err(ConfigError::Validation {
                msg: "refine_rounds must be at least 1".to_string(),
            });
        }
    }

    let (_, name) = take("name");
    Ok(ScenarioConfig {
        name,
        params,
        solver,
        oracle,
    })
}

/// Renders the baseline scenario as config text; handy for tests and docs.
pub fn baseline_config_text() -> String {
    "\
# Baseline scenario
name = baseline
gamma1 = 1.0
gamma_ph = 0.5
gamma2 = 1.0
gamma_c = 0.9
alpha = 0.4
tau = 0.3
phi = 0.1
wbar = 1.0
eps = 0.2
eta = 0.2
theta = 0.2
R = 1.5
bequest = zero
"
    .to_string()
}
