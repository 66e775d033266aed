//! Numeric checks of the explicit spectral inequalities behind the extremal
//! bounds, evaluated at `λ = sqrt(2n - 4)`.

use serde::{Deserialize, Serialize};

use super::ExtremalError;

/// The constant bounding the degree estimates.
pub const EPSILON: f64 = 1.0 / 21000.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityAudit {
    pub name: String,
    pub n: Option<u64>,
    pub lambda: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs > rhs`, and `λ > 7` for the forms involving `λ - 7`.
    pub holds: bool,
    /// Smallest `n` from which the inequality holds, when scanned.
    pub threshold_n: Option<u64>,
}

#[derive(Debug, Clone, Copy)]
enum Form {
    /// `a / (λ-7)^2` against `b / λ^2`.
    Shifted {
        a: f64,
        b: f64,
    },
    /// `a / λ^2` against `b / (λ-7)^2`.
    ShiftedRev {
        a: f64,
        b: f64,
    },
    Closing,
    Gain,
    Budget,
}

struct Spec {
    name: &'static str,
    form: Form,
    description: &'static str,
}

const SPECS: &[Spec] = &[
    Spec {
        name: "lem2.2-closing",
        form: Form::Closing,
        description: "2/(5λ) > 38400/λ²",
    },
    Spec {
        name: "eq1-gain",
        form: Form::Gain,
        description: "2((2-47ε) - 1.7) > 2/5 with ε = 1/21000",
    },
    Spec {
        name: "eq2-budget",
        form: Form::Budget,
        description: "(1-140ε)n - 2n/5 > 2",
    },
    Spec {
        name: "sec3-8-4",
        form: Form::Shifted { a: 16.0, b: 8.0 },
        description: "2(8/(λ-7)² - 4/λ²) > 0",
    },
    Spec {
        name: "sec3-12-8",
        form: Form::Shifted { a: 12.0, b: 8.0 },
        description: "12/(λ-7)² - 8/λ² > 0",
    },
    Spec {
        name: "sec3-20-20",
        form: Form::Shifted { a: 20.0, b: 20.0 },
        description: "20/(λ-7)² - 20/λ² > 0",
    },
    Spec {
        name: "sec3-32-32",
        form: Form::Shifted { a: 32.0, b: 32.0 },
        description: "32/(λ-7)² - 32/λ² > 0",
    },
    Spec {
        name: "sec5-44-40",
        form: Form::Shifted { a: 44.0, b: 40.0 },
        description: "44/(λ-7)² - 40/λ² > 0",
    },
    Spec {
        name: "sec3-8-4-corrected",
        form: Form::ShiftedRev { a: 16.0, b: 8.0 },
        description: "2(8/λ² - 4/(λ-7)²) > 0",
    },
    Spec {
        name: "sec5-44-40-corrected",
        form: Form::ShiftedRev { a: 44.0, b: 40.0 },
        description: "44/λ² - 40/(λ-7)² > 0",
    },
];

/// Names accepted by [`inequality_audit`], with a one-line formula each.
pub fn inequality_names() -> Vec<(&'static str, &'static str)> {
    SPECS.iter().map(|s| (s.name, s.description)).collect()
}

fn lookup(name: &str) -> Result<Form, ExtremalError> {
    SPECS
        .iter()
        .find(|s| s.name == name)
        .map(|s| s.form)
        .ok_or_else(|| ExtremalError::UnknownInequality(name.to_string()))
}

// (lhs, rhs, holds); `n` is only used by the budget count. The decision uses
// the cleared-denominator form so boundary cases are exact.
fn evaluate(form: Form, lambda: f64, n: f64) -> (f64, f64, bool) {
    let l2 = lambda * lambda;
    let s = lambda - 7.0;
    match form {
        Form::Shifted { a, b } => (a / (s * s), b / l2, s > 0.0 && a * l2 > b * s * s),
        Form::ShiftedRev { a, b } => (a / l2, b / (s * s), s > 0.0 && a * s * s > b * l2),
        Form::Closing => (2.0 / (5.0 * lambda), 38400.0 / l2, 2.0 * lambda > 192000.0),
        Form::Gain => {
            let lhs = 2.0 * ((2.0 - 47.0 * EPSILON) - 1.7);
            (lhs, 0.4, lhs > 0.4)
        }
        Form::Budget => {
            let lhs = (1.0 - 140.0 * EPSILON) * n - 0.4 * n;
            (lhs, 2.0, lhs > 2.0)
        }
    }
}

/// Evaluates `name` at order `n` (`n >= 3`), with `λ = sqrt(2n - 4)`.
pub fn inequality_audit(name: &str, n: u64) -> Result<InequalityAudit, ExtremalError> {
    let form = lookup(name)?;
    if n < 3 {
        return Err(ExtremalError::OrderTooSmall {
            n: n as usize,
            min: 3,
        });
    }
    let lambda = ((2 * n - 4) as f64).sqrt();
    let (lhs, rhs, holds) = evaluate(form, lambda, n as f64);
    Ok(InequalityAudit {
        name: name.to_string(),
        n: Some(n),
        lambda,
        lhs,
        rhs,
        holds,
        threshold_n: None,
    })
}

/// Evaluates `name` at a given `λ`; the budget count reads `n` from `λ`.
pub fn inequality_audit_at_lambda(
    name: &str,
    lambda: f64,
) -> Result<InequalityAudit, ExtremalError> {
    let form = lookup(name)?;
    let (lhs, rhs, holds) = evaluate(form, lambda, (lambda * lambda + 4.0) / 2.0);
    Ok(InequalityAudit {
        name: name.to_string(),
        n: None,
        lambda,
        lhs,
        rhs,
        holds,
        threshold_n: None,
    })
}

/// Smallest `n >= 3` at which `name` holds, by doubling then bisection.
/// Each form is monotone in `n` once it holds.
pub fn inequality_threshold(name: &str) -> Result<Option<u64>, ExtremalError> {
    lookup(name)?;
    let holds = |n: u64| inequality_audit(name, n).map(|a| a.holds);
    if holds(3)? {
        return Ok(Some(3));
    }
    let mut hi = 4u64;
    while !holds(hi)? {
        if hi > 1 << 60 {
            return Ok(None);
        }
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Some(hi))
}

/// The audit at the threshold itself, with `threshold_n` filled in.
pub fn inequality_scan(name: &str) -> Result<InequalityAudit, ExtremalError> {
    let threshold = inequality_threshold(name)?;
    let mut audit = inequality_audit(name, threshold.unwrap_or(3))?;
    audit.threshold_n = threshold;
    Ok(audit)
}
