//! Spectral radius and Perron vector by shifted power iteration, plus the
//! Rayleigh-quotient tools used to compare graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("power iteration did not converge in {iterations} steps (lambda ~ {lambda}, residual {residual:e})")]
    NotConverged {
        lambda: f64,
        residual: f64,
        iterations: usize,
    },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("graph has no vertices")]
    Empty,
    #[error("vector has {got} entries, graph has {n} vertices")]
    Length { got: usize, n: usize },
    #[error("vector is zero")]
    ZeroVector,
    #[error("edge {0} is already present")]
    AlreadyPresent(Edge),
    #[error("edge {0} is not present")]
    NotPresent(Edge),
    #[error("apex pair does not span K_2,n-2: vertex {0} misses an apex")]
    NotSpanning(usize),
}

/// Spectral radius with its Perron vector, normalized to maximum entry 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub lambda: f64,
    pub residual: f64,
    pub iterations: usize,
    pub perron: Vec<f64>,
}

impl SpectralResult {
    /// The Perron vector rescaled to unit Euclidean norm.
    pub fn perron_unit(&self) -> Vec<f64> {
        let norm = self.perron.iter().map(|x| x * x).sum::<f64>().sqrt();
        self.perron.iter().map(|x| x / norm).collect()
    }
}

fn mul(adj: &[Vec<usize>], x: &[f64], out: &mut [f64]) {
    for (v, nbrs) in adj.iter().enumerate() {
        out[v] = nbrs.iter().map(|&w| x[w]).sum();
    }
}

fn inf_norm(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

// Power iteration on A + I for one connected component.
fn solve_component(
    adj: &[Vec<usize>],
    tol: f64,
    max_iter: usize,
) -> Result<(f64, Vec<f64>, f64, usize), SpectralError> {
    let n = adj.len();
    if n == 1 {
        return Ok((0.0, vec![1.0], 0.0, 0));
    }
    let mut x = vec![1.0; n];
    let mut ax = vec![0.0; n];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=max_iter {
        mul(adj, &x, &mut ax);
        let num: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        lambda = num / den;
        residual = x
            .iter()
            .zip(&ax)
            .fold(0.0f64, |m, (xi, axi)| m.max((axi - lambda * xi).abs()));
        if residual <= tol {
            return Ok((lambda, x, residual, it));
        }
        for (xi, axi) in x.iter_mut().zip(&ax) {
            *xi += axi;
        }
        let s = inf_norm(&x);
        x.iter_mut().for_each(|v| *v /= s);
    }
    Err(SpectralError::NotConverged {
        lambda,
        residual,
        iterations: max_iter,
    })
}

pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    spectral_radius_with(g, tol, DEFAULT_MAX_ITER)
}

/// Largest adjacency eigenvalue. Disconnected graphs take the maximum over
/// components; the Perron vector is supported on the winning component (the
/// one with the lowest label among those within `tol` of the maximum).
pub fn spectral_radius_with(
    g: &Graph,
    tol: f64,
    max_iter: usize,
) -> Result<SpectralResult, SpectralError> {
    if !(tol > 0.0) {
        return Err(SpectralError::BadTolerance(tol));
    }
    if g.n() == 0 {
        return Err(SpectralError::Empty);
    }
    let mut best: Option<(f64, Vec<usize>, Vec<f64>, f64, usize)> = None;
    let mut total_iter = 0;
    for comp in g.components() {
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let adj: Vec<Vec<usize>> = comp
            .iter()
            .map(|&v| g.neighbors(v).map(|w| local[w]).collect())
            .collect();
        let (lambda, x, residual, it) = solve_component(&adj, tol, max_iter)?;
        total_iter += it;
        if best.as_ref().is_none_or(|b| lambda > b.0 + tol) {
            best = Some((lambda, comp, x, residual, it));
        }
    }
    let (lambda, comp, x, residual, _) = best.expect("at least one component");
    let mut perron = vec![0.0; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        perron[v] = x[i];
    }
    Ok(SpectralResult {
        lambda,
        residual,
        iterations: total_iter,
        perron,
    })
}

/// `x^T A x / x^T x`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != g.n() {
        return Err(SpectralError::Length {
            got: x.len(),
            n: g.n(),
        });
    }
    let den: f64 = x.iter().map(|v| v * v).sum();
    if den == 0.0 {
        return Err(SpectralError::ZeroVector);
    }
    Ok(quadratic_form(g, x) / den)
}

/// `x^T A x = 2 * sum over edges of x_u x_v`.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> f64 {
    2.0 * g.edges().iter().map(|e| x[e.u] * x[e.v]).sum::<f64>()
}

/// Change of the quadratic form under an edge rewiring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RayleighDelta {
    pub added: Vec<Edge>,
    pub removed: Vec<Edge>,
    pub delta: f64,
}

/// `x^T A' x - x^T A x` for `A'` = `A` plus `added` minus `removed`.
/// A positive value with `x` the Perron vector of `g` certifies that the
/// rewired graph has a larger spectral radius.
pub fn rayleigh_delta(
    g: &Graph,
    x: &[f64],
    added: &[Edge],
    removed: &[Edge],
) -> Result<RayleighDelta, SpectralError> {
    if x.len() != g.n() {
        return Err(SpectralError::Length {
            got: x.len(),
            n: g.n(),
        });
    }
    for e in added {
        if e.v >= g.n() || g.has_edge(e.u, e.v) {
            return Err(SpectralError::AlreadyPresent(*e));
        }
    }
    for e in removed {
        if e.v >= g.n() || !g.has_edge(e.u, e.v) {
            return Err(SpectralError::NotPresent(*e));
        }
    }
    let plus: f64 = added.iter().map(|e| x[e.u] * x[e.v]).sum();
    let minus: f64 = removed.iter().map(|e| x[e.u] * x[e.v]).sum();
    Ok(RayleighDelta {
        added: added.to_vec(),
        removed: removed.to_vec(),
        delta: 2.0 * (plus - minus),
    })
}

/// Perron entries off an apex pair against the bounds `2/λ <= x_v <= 2/(λ-7)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerronAudit {
    pub lambda: f64,
    pub min_entry: f64,
    pub max_entry: f64,
    pub lower_bound: f64,
    /// Absent when `λ <= 7`.
    pub upper_bound: Option<f64>,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub apexes_largest: bool,
}

pub fn perron_bounds_audit(
    g: &Graph,
    apexes: (usize, usize),
    tol: f64,
) -> Result<PerronAudit, SpectralError> {
    let (a, b) = apexes;
    for v in 0..g.n() {
        if v != a && v != b && !(g.has_edge(v, a) && g.has_edge(v, b)) {
            return Err(SpectralError::NotSpanning(v));
        }
    }
    let r = spectral_radius(g, tol)?;
    let rest: Vec<f64> = (0..g.n())
        .filter(|&v| v != a && v != b)
        .map(|v| r.perron[v])
        .collect();
    let min_entry = rest.iter().copied().fold(f64::INFINITY, f64::min);
    let max_entry = rest.iter().copied().fold(0.0, f64::max);
    let lower_bound = 2.0 / r.lambda;
    let upper_bound = (r.lambda > 7.0).then(|| 2.0 / (r.lambda - 7.0));
    // Entry accuracy is limited by the eigen-residual.
    let slack = 100.0 * tol;
    Ok(PerronAudit {
        lambda: r.lambda,
        min_entry,
        max_entry,
        lower_bound,
        upper_bound,
        lower_holds: min_entry >= lower_bound - slack,
        upper_holds: upper_bound.is_some_and(|u| max_entry <= u + slack),
        apexes_largest: r.perron[a].min(r.perron[b]) + slack >= max_entry,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ordering {
    FirstLarger,
    SecondLarger,
    Indistinguishable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub lambda1: f64,
    pub lambda2: f64,
    pub ordering: Ordering,
}

/// Orders two graphs by spectral radius, refusing to order within `2 * tol`.
pub fn compare_candidates(g1: &Graph, g2: &Graph, tol: f64) -> Result<Comparison, SpectralError> {
    let lambda1 = spectral_radius(g1, tol)?.lambda;
    let lambda2 = spectral_radius(g2, tol)?.lambda;
    let ordering = if (lambda1 - lambda2).abs() <= 2.0 * tol {
        Ordering::Indistinguishable
    } else if lambda1 > lambda2 {
        Ordering::FirstLarger
    } else {
        Ordering::SecondLarger
    };
    Ok(Comparison {
        lambda1,
        lambda2,
        ordering,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite2, cycle_ladder, qp_graph};
    use crate::graph::join;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_spectra() {
        let r = spectral_radius(&Graph::complete(2), DEFAULT_TOL).unwrap();
        assert!((r.lambda - 1.0).abs() < 1e-10);
        let r = spectral_radius(&Graph::cycle(4), DEFAULT_TOL).unwrap();
        assert!((r.lambda - 2.0).abs() < 1e-10);
        for n in [6, 20, 100] {
            let r = spectral_radius(&complete_bipartite2(n).unwrap(), DEFAULT_TOL).unwrap();
            assert!((r.lambda - ((2 * n - 4) as f64).sqrt()).abs() < 1e-9);
            assert!(r.residual <= DEFAULT_TOL);
            assert!((inf_norm(&r.perron) - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn disconnected_and_edgeless() {
        let r = spectral_radius(&Graph::empty(3), DEFAULT_TOL).unwrap();
        assert_eq!(r.lambda, 0.0);
        assert_eq!(r.perron, vec![1.0, 0.0, 0.0]);
        let g = crate::graph::disjoint_union(&Graph::complete(2), &Graph::complete(3));
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        assert!((r.lambda - 2.0).abs() < 1e-10);
        assert_eq!(&r.perron[..2], &[0.0, 0.0]);
        let twins = crate::graph::disjoint_union(&Graph::cycle(5), &Graph::cycle(5));
        let r = spectral_radius(&twins, DEFAULT_TOL).unwrap();
        assert!(r.perron[..5].iter().all(|&v| v > 0.0));
        assert!(r.perron[5..].iter().all(|&v| v == 0.0));
        assert!(spectral_radius(&Graph::empty(0), DEFAULT_TOL).is_err());
        assert!(spectral_radius(&Graph::cycle(4), 0.0).is_err());
    }

    #[test]
    fn iteration_cap_reports_failure() {
        let g = Graph::path(40);
        match spectral_radius_with(&g, 1e-14, 3) {
            Err(SpectralError::NotConverged { iterations, .. }) => assert_eq!(iterations, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rayleigh_examples() {
        let c = Graph::cycle(7);
        assert!((rayleigh_quotient(&c, &[1.0; 7]).unwrap() - 2.0).abs() < 1e-15);
        let k2 = Graph::complete(2);
        assert_eq!(rayleigh_quotient(&k2, &[1.0, 0.0]).unwrap(), 0.0);
        assert!(rayleigh_quotient(&k2, &[0.0, 0.0]).is_err());
        let g = join(&Graph::empty(2), &Graph::cycle(9));
        let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
        assert!((rayleigh_quotient(&g, &r.perron).unwrap() - r.lambda).abs() < 1e-9);
    }

    #[test]
    fn delta_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n = rng.gen_range(3..12);
            let g = crate::testutil::graph_from_bits(
                n,
                &(0..n * (n - 1) / 2)
                    .map(|_| rng.gen_bool(0.5))
                    .collect::<Vec<_>>(),
            );
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let absent: Vec<Edge> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)))
                .filter(|e| !g.has_edge(e.u, e.v))
                .take(2)
                .collect();
            let present: Vec<Edge> = g.edges().iter().copied().take(2).collect();
            let d = rayleigh_delta(&g, &x, &absent, &present).unwrap();
            let h = g.with_changes(&absent, &present).unwrap();
            let direct = quadratic_form(&h, &x) - quadratic_form(&g, &x);
            let scale = quadratic_form(&g, &x).abs().max(1.0);
            assert!((d.delta - direct).abs() <= 1e-12 * scale);
        }
        let k3 = Graph::complete(3);
        let x = [0.5, 0.25, 1.0];
        let d = rayleigh_delta(&k3, &x, &[], &[Edge::new(0, 1)]).unwrap();
        assert_eq!(d.delta, -2.0 * 0.5 * 0.25);
        assert_eq!(rayleigh_delta(&k3, &x, &[], &[]).unwrap().delta, 0.0);
        assert!(rayleigh_delta(&k3, &x, &[Edge::new(0, 1)], &[]).is_err());
        assert!(rayleigh_delta(&Graph::path(3), &x, &[], &[Edge::new(0, 2)]).is_err());
    }

    #[test]
    fn edge_addition_increases_lambda() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut checked = 0;
        while checked < 100 {
            let n = rng.gen_range(4..14);
            let g = crate::testutil::graph_from_bits(
                n,
                &(0..n * (n - 1) / 2)
                    .map(|_| rng.gen_bool(0.4))
                    .collect::<Vec<_>>(),
            );
            if !g.is_connected() || g.edge_count() == n * (n - 1) / 2 {
                continue;
            }
            let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
            let e = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)))
                .find(|e| !g.has_edge(e.u, e.v))
                .unwrap();
            let h = g.with_changes(&[e], &[]).unwrap();
            let rh = spectral_radius(&h, DEFAULT_TOL).unwrap();
            assert!(rh.lambda > r.lambda + DEFAULT_TOL);
            let d = rayleigh_delta(&g, &r.perron, &[e], &[]).unwrap();
            if d.delta > 2.0 * DEFAULT_TOL {
                assert!(rh.lambda > r.lambda);
            }
            checked += 1;
        }
    }

    #[test]
    fn perron_audits() {
        let n = 50;
        let k = complete_bipartite2(n).unwrap();
        let a = perron_bounds_audit(&k, (n - 2, n - 1), DEFAULT_TOL).unwrap();
        assert!(a.lower_holds);
        assert!((a.min_entry - a.lower_bound).abs() < 1e-9);
        assert!((a.max_entry - a.lower_bound).abs() < 1e-9);

        let g = join(&cycle_ladder(48).unwrap(), &Graph::empty(2));
        let a = perron_bounds_audit(&g, (48, 49), DEFAULT_TOL).unwrap();
        assert!(a.lower_holds && a.upper_holds && a.apexes_largest);

        let g = join(&qp_graph(48).unwrap(), &Graph::complete(2));
        let a = perron_bounds_audit(&g, (48, 49), DEFAULT_TOL).unwrap();
        assert!(a.lower_holds && a.upper_holds && a.apexes_largest);

        assert!(perron_bounds_audit(&Graph::cycle(6), (0, 1), DEFAULT_TOL).is_err());
    }

    #[test]
    fn comparisons() {
        let k = complete_bipartite2(8).unwrap();
        assert_eq!(
            compare_candidates(&k, &k, DEFAULT_TOL).unwrap().ordering,
            Ordering::Indistinguishable
        );
        assert_eq!(
            compare_candidates(&Graph::cycle(4), &Graph::path(4), DEFAULT_TOL)
                .unwrap()
                .ordering,
            Ordering::FirstLarger
        );
    }
}
