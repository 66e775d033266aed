//! Exhaustive spectral extremal sets for small orders.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::graph_classes;
use super::ExtremalError;
use crate::graph::{graph6_encode, is_kt_free, Graph};
use crate::planarity::{is_one_planar, DrawingCertificate, OnePlanarVerdict};
use crate::spectral::spectral_radius;

/// Largest order the brute force accepts.
pub const MAX_SPEX_ORDER: usize = 9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Maximizer {
    pub graph6: String,
    pub lambda: f64,
    pub certificate: DrawingCertificate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpexReport {
    pub n: usize,
    pub t: usize,
    pub maximizers: Vec<Maximizer>,
    pub lambda_max: f64,
    /// `K_t`-free isomorphism classes that pass the edge bound.
    pub search_space: usize,
    /// Classes whose 1-planarity stayed undecided within the budget.
    pub unknown_count: usize,
    pub complete: bool,
}

impl SpexReport {
    pub fn maximizer_graphs(&self) -> Vec<Graph> {
        self.maximizers
            .iter()
            .map(|m| crate::graph::graph6_decode(&m.graph6).expect("encoded by this module"))
            .collect()
    }
}

/// Maximum spectral radius over `n`-vertex `K_t`-free 1-planar graphs, with
/// every maximizer up to isomorphism (ties within `2 * tol` included).
pub fn spex_bruteforce(
    n: usize,
    t: usize,
    tol: f64,
    budget: u64,
) -> Result<SpexReport, ExtremalError> {
    if n == 0 || n > MAX_SPEX_ORDER {
        return Err(ExtremalError::OrderOutOfRange {
            n,
            max: MAX_SPEX_ORDER,
        });
    }
    if t < 2 {
        return Err(ExtremalError::BadCliqueSize(t));
    }
    // Both conditions are inherited by induced subgraphs of 1-planar graphs.
    let classes = graph_classes(n, |g| {
        is_kt_free(g, t) && (g.n() < 3 || g.edge_count() <= 4 * g.n() - 8)
    });
    let mut scored: Vec<(f64, Graph)> = classes
        .par_iter()
        .map(|c| {
            let g = c.graph();
            spectral_radius(&g, tol).map(|r| (r.lambda, g))
        })
        .collect::<Result<_, _>>()?;
    // Stable sort keeps canonical order among equal values.
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));

    let mut best: Option<f64> = None;
    let mut maximizers = Vec::new();
    let mut unknown_count = 0;
    for (lambda, g) in &scored {
        if best.is_some_and(|b| *lambda < b - 2.0 * tol) {
            break;
        }
        match is_one_planar(g, budget) {
            OnePlanarVerdict::Yes { certificate } => {
                best.get_or_insert(*lambda);
                maximizers.push(Maximizer {
                    graph6: graph6_encode(g),
                    lambda: *lambda,
                    certificate,
                });
            }
            OnePlanarVerdict::Unknown { .. } => unknown_count += 1,
            OnePlanarVerdict::No { .. } => {}
        }
    }
    Ok(SpexReport {
        n,
        t,
        lambda_max: best.expect("the empty graph is planar"),
        maximizers,
        search_space: classes.len(),
        unknown_count,
        complete: unknown_count == 0,
    })
}
