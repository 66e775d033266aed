//! Head-to-head spectral comparison of the extremal candidates over a range
//! of orders.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ExtremalError;
use crate::constructions::{candidate_name, spex_candidates};
use crate::spectral::spectral_radius;

pub const DUEL_CSV_HEADER: &str = "n,t,candidate,lambda,gap,winner,complete";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateLambda {
    pub name: String,
    pub lambda: f64,
}

/// One order of the duel.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DuelRow {
    pub n: usize,
    pub t: usize,
    /// Names within `2 * tol` of the top value, joined by `|`.
    pub candidate: String,
    pub lambda: f64,
    /// Top value minus the best value outside the tied group; absent when
    /// every candidate ties.
    pub gap: Option<f64>,
    /// The single top candidate, or `tie`.
    pub winner: String,
    pub complete: bool,
    pub lambdas: Vec<CandidateLambda>,
}

impl DuelRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{:.15e},{},{},{}",
            self.n,
            self.t,
            self.candidate,
            self.lambda,
            self.gap.map_or(String::new(), |g| format!("{g:.15e}")),
            self.winner,
            self.complete
        )
    }
}

/// Spectral radii of every candidate for each order in `ns`.
pub fn candidate_duel(t: usize, ns: &[usize], tol: f64) -> Result<Vec<DuelRow>, ExtremalError> {
    ns.par_iter().map(|&n| duel_row(t, n, tol)).collect()
}

fn duel_row(t: usize, n: usize, tol: f64) -> Result<DuelRow, ExtremalError> {
    let candidates = spex_candidates(t, n)?;
    let mut lambdas = Vec::with_capacity(candidates.len());
    for (variant, (g, _)) in candidates.iter().enumerate() {
        lambdas.push(CandidateLambda {
            name: candidate_name(t, n, variant),
            lambda: spectral_radius(g, tol)?.lambda,
        });
    }
    let top = lambdas
        .iter()
        .map(|c| c.lambda)
        .fold(f64::NEG_INFINITY, f64::max);
    let tied: Vec<&CandidateLambda> = lambdas
        .iter()
        .filter(|c| top - c.lambda <= 2.0 * tol)
        .collect();
    let runner_up = lambdas
        .iter()
        .filter(|c| top - c.lambda > 2.0 * tol)
        .map(|c| c.lambda)
        .fold(None, |m: Option<f64>, l| Some(m.map_or(l, |m| m.max(l))));
    let candidate = tied
        .iter()
        .map(|c| c.name.as_str())
        .collect::<Vec<_>>()
        .join("|");
    let winner = if tied.len() == 1 {
        tied[0].name.clone()
    } else {
        "tie".to_string()
    };
    Ok(DuelRow {
        n,
        t,
        candidate,
        lambda: top,
        gap: runner_up.map(|r| top - r),
        winner,
        complete: true,
        lambdas,
    })
}

/// Header plus one line per row.
pub fn duel_csv(rows: &[DuelRow]) -> String {
    let mut out = String::from(DUEL_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_line());
        out.push('\n');
    }
    out
}
