//! Edge rewirings that push a near-extremal graph towards the extremal
//! structure, replayed on concrete graphs.
//!
//! Inner vertices `v_1..v_N` sit at labels `0..N-1`; the apexes `x`, `w` are
//! `N` and `N+1`. `e_i = v_i v_{i+1}` and `e'_i = v_i v_{i+2}`, indices mod N.

use serde::{Deserialize, Serialize};

use super::ExtremalError;
use crate::constructions::{apex_certificate, cycle_square, path_square_plus};
use crate::graph::{is_kt_free, join, Edge, Graph};
use crate::planarity::{is_one_planar, verify_certificate, DrawingCertificate, OnePlanarVerdict};
use crate::spectral::{quadratic_form, spectral_radius};

pub const REPLAY_NAMES: [&str; 3] = ["k4-case1-base", "k4-case1-chain", "k5-case2"];

/// Length of the swap chain in `k4-case1-chain`.
pub const CHAIN_K: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub name: String,
    pub n: usize,
    pub t: usize,
    pub before_graph6: String,
    pub after_graph6: String,
    pub added: Vec<Edge>,
    pub removed: Vec<Edge>,
    pub lambda_before: f64,
    pub lambda_after: f64,
    /// `lambda_after - lambda_before`.
    pub margin: f64,
    /// `x^T A x` for the unit Perron vector `x` of the original graph.
    pub quadratic_before: f64,
    /// `y^T A' y`, with `y` the (possibly relabelled) test vector.
    pub quadratic_after: f64,
    pub kt_free_before: bool,
    pub kt_free_after: bool,
    pub one_planar_after: bool,
    pub certificate_after: Option<DrawingCertificate>,
    /// `None` when the search ran out of budget.
    pub one_planar_before: Option<bool>,
    /// Margin above `10 * tol`, test vector gain positive, class preserved.
    pub confirmed: bool,
}

struct Rewiring {
    t: usize,
    n_inner: usize,
    before: Graph,
    apex_edge: bool,
    added: Vec<Edge>,
    removed: Vec<Edge>,
    /// Test vector entry `i` takes the Perron entry at `source[i]`.
    source: Vec<usize>,
    /// Relabelling that puts the original graph's inner vertices in circle order.
    circle: Vec<usize>,
}

fn e(i: usize, n: usize) -> Edge {
    Edge::new((i - 1) % n, i % n)
}

fn ep(i: usize, n: usize) -> Edge {
    Edge::new((i - 1) % n, (i + 1) % n)
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn instantiate(name: &str, n: usize) -> Result<Rewiring, ExtremalError> {
    let bad = || ExtremalError::NotInstantiable {
        name: name.to_string(),
        n,
    };
    let big = n.checked_sub(2).ok_or_else(bad)?;
    match name {
        // e'_1, e'_2 missing and e_2 present; G' = G + e'_1 + e'_2 - e_2.
        "k4-case1-base" => {
            if big < 8 || big % 2 == 1 {
                return Err(bad());
            }
            let mut gone = vec![ep(1, big), ep(2, big)];
            gone.extend((2..=big / 2).map(|j| e(2 * j, big)));
            let inner = cycle_square(big)?
                .with_changes(&[], &gone)
                .expect("edges in range");
            Ok(Rewiring {
                t: 4,
                n_inner: big,
                before: join(&inner, &Graph::empty(2)),
                apex_edge: false,
                added: vec![ep(1, big), ep(2, big)],
                removed: vec![e(2, big)],
                source: identity(n),
                circle: identity(n),
            })
        }
        // e'_1 and e'_{2k} missing, odd path edges e_3..e_{2k-1} missing.
        "k4-case1-chain" => {
            let k = CHAIN_K;
            if big % 2 == 1 || big < 2 * k + 4 {
                return Err(bad());
            }
            let mut gone = vec![ep(1, big), ep(2 * k, big)];
            gone.extend((1..k).map(|i| e(2 * i + 1, big)));
            gone.extend((k + 1..=big / 2).map(|j| e(2 * j, big)));
            let inner = cycle_square(big)?
                .with_changes(&[], &gone)
                .expect("edges in range");
            let mut added: Vec<Edge> = (1..k).map(|i| e(2 * i + 1, big)).collect();
            added.extend([ep(1, big), ep(2 * k, big)]);
            let removed = (1..=k).map(|i| e(2 * i, big)).collect();
            let mut source = identity(n);
            source[1] = 2 * k + 1;
            for i in (4..=2 * k + 2).step_by(2) {
                source[i - 1] = i - 3;
            }
            Ok(Rewiring {
                t: 4,
                n_inner: big,
                before: join(&inner, &Graph::empty(2)),
                apex_edge: false,
                added,
                removed,
                source,
                circle: identity(n),
            })
        }
        // x v_1 crosses w v_2, both ends inside {x, w, v_3, v_4}: G[A] has
        // v_1v_3, v_1v_4, v_2v_3 and the squared path on v_3..v_N, and
        // G'' = G - v_1v_4 + v_1v_2 + v_2v_4 + v_Nv_1 is the closed squared
        // path. With v_1, v_2 swapped, G[A] lies in the squared cycle.
        "k5-case2" => {
            if big < 8 {
                return Err(bad());
            }
            let mut edges = vec![Edge::new(0, 2), Edge::new(0, 3), Edge::new(1, 2)];
            edges.extend((2..big - 1).map(|i| Edge::new(i, i + 1)));
            edges.extend((2..big - 2).map(|i| Edge::new(i, i + 2)));
            let inner = Graph::from_edge_list(big, edges.iter().map(|e| (e.u, e.v)))
                .expect("edges in range");
            Ok(Rewiring {
                t: 5,
                n_inner: big,
                before: join(&inner, &Graph::empty(2)),
                apex_edge: false,
                added: vec![Edge::new(0, 1), Edge::new(1, 3), Edge::new(0, big - 1)],
                removed: vec![Edge::new(0, 3)],
                source: identity(n),
                circle: {
                    let mut c = identity(n);
                    c.swap(0, 1);
                    c
                },
            })
        }
        _ => Err(ExtremalError::UnknownReplay(name.to_string())),
    }
}

fn one_planar(
    g: &Graph,
    n_inner: usize,
    apex_edge: bool,
    circle: &[usize],
    budget: u64,
) -> (Option<bool>, Option<DrawingCertificate>) {
    let h = g.permuted(circle);
    let inner = h.induced(&(0..n_inner).collect::<Vec<_>>());
    if let Some(cert) = apex_certificate(&inner, apex_edge) {
        let mut back = vec![0; circle.len()];
        for (v, &c) in circle.iter().enumerate() {
            back[c] = v;
        }
        let map = |e: Edge| Edge::new(back[e.u], back[e.v]);
        let cert =
            DrawingCertificate::new(cert.pairs.iter().map(|&(a, b)| (map(a), map(b))).collect());
        if verify_certificate(g, &cert) {
            return (Some(true), Some(cert));
        }
    }
    match is_one_planar(g, budget) {
        OnePlanarVerdict::Yes { certificate } => (Some(true), Some(certificate)),
        OnePlanarVerdict::No { .. } => (Some(false), None),
        OnePlanarVerdict::Unknown { .. } => (None, None),
    }
}

/// Builds the named configuration at order `n`, applies its rewiring and
/// measures both sides. `budget` bounds each 1-planarity search.
pub fn rewiring_replay(
    name: &str,
    n: usize,
    tol: f64,
    budget: u64,
) -> Result<ReplayReport, ExtremalError> {
    let r = instantiate(name, n)?;
    let after = r
        .before
        .with_changes(&r.added, &r.removed)
        .expect("rewiring edges match the configuration");
    let sb = spectral_radius(&r.before, tol)?;
    let sa = spectral_radius(&after, tol)?;
    let x = sb.perron_unit();
    let y: Vec<f64> = r.source.iter().map(|&s| x[s]).collect();
    let quadratic_before = quadratic_form(&r.before, &x);
    let quadratic_after = quadratic_form(&after, &y);

    let (planar_after, certificate_after) =
        one_planar(&after, r.n_inner, r.apex_edge, &identity(n), budget);
    let (one_planar_before, _) = one_planar(&r.before, r.n_inner, r.apex_edge, &r.circle, budget);
    let kt_free_after = is_kt_free(&after, r.t);
    let one_planar_after = planar_after == Some(true);
    let margin = sa.lambda - sb.lambda;
    Ok(ReplayReport {
        name: name.to_string(),
        n,
        t: r.t,
        before_graph6: crate::graph::graph6_encode(&r.before),
        after_graph6: crate::graph::graph6_encode(&after),
        added: r.added,
        removed: r.removed,
        lambda_before: sb.lambda,
        lambda_after: sa.lambda,
        margin,
        quadratic_before,
        quadratic_after,
        kt_free_before: is_kt_free(&r.before, r.t),
        kt_free_after,
        one_planar_after,
        certificate_after,
        one_planar_before,
        confirmed: margin > 10.0 * tol
            && quadratic_after > quadratic_before
            && kt_free_after
            && one_planar_after,
    })
}

/// The after-graph of a replay in the same labelling, built directly: the
/// squared cycle without its even path edges, or the closed squared path.
pub fn expected_after(name: &str, n: usize) -> Result<Graph, ExtremalError> {
    let big = n
        .checked_sub(2)
        .ok_or_else(|| ExtremalError::NotInstantiable {
            name: name.to_string(),
            n,
        })?;
    let inner = match name {
        "k4-case1-base" | "k4-case1-chain" => {
            let gone: Vec<Edge> = (1..=big / 2).map(|j| e(2 * j, big)).collect();
            cycle_square(big)?
                .with_changes(&[], &gone)
                .expect("edges in range")
        }
        "k5-case2" => path_square_plus(big)?,
        _ => return Err(ExtremalError::UnknownReplay(name.to_string())),
    };
    Ok(join(&inner, &Graph::empty(2)))
}
