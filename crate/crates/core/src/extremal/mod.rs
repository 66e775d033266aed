//! Brute-force extremal search, candidate duels, inequality audits and
//! rewiring replays.

use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::spectral::SpectralError;

pub mod audit;
pub mod duel;
pub mod generate;
pub mod replay;
pub mod spex;

pub use audit::{
    inequality_audit, inequality_audit_at_lambda, inequality_names, inequality_scan,
    inequality_threshold, InequalityAudit,
};
pub use duel::{candidate_duel, duel_csv, CandidateLambda, DuelRow, DUEL_CSV_HEADER};
pub use generate::graph_classes;
pub use replay::{rewiring_replay, ReplayReport, REPLAY_NAMES};
pub use spex::{spex_bruteforce, Maximizer, SpexReport, MAX_SPEX_ORDER};

#[derive(Debug, Error)]
pub enum ExtremalError {
    #[error("order {n} out of range (max {max})")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("order {n} below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("forbidden clique size must be at least 2, got {0}")]
    BadCliqueSize(usize),
    #[error("unknown inequality {0:?}")]
    UnknownInequality(String),
    #[error("unknown replay {0:?}")]
    UnknownReplay(String),
    #[error("{name} cannot be instantiated at n = {n}")]
    NotInstantiable { name: String, n: usize },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}
