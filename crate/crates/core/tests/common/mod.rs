//! Dense reference computations, independent of the library's iterative solver.
#![allow(dead_code)]

use spex1p_core::Graph;

/// Number of eigenvalues of `A` strictly below `sigma`: the negative pivots of
/// the symmetric elimination of `A - sigma I`, i.e. the sign changes in the
/// sequence of leading principal minors of the characteristic matrix.
pub fn eigenvalues_below(a: &[Vec<f64>], sigma: f64) -> usize {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= sigma;
    }
    let mut negative = 0;
    for k in 0..n {
        let mut p = m[k][k];
        if p == 0.0 {
            p = -f64::EPSILON * (1.0 + sigma.abs());
        }
        if p < 0.0 {
            negative += 1;
        }
        for i in k + 1..n {
            let f = m[i][k] / p;
            if f == 0.0 {
                continue;
            }
            for j in k + 1..n {
                m[i][j] -= f * m[k][j];
            }
        }
    }
    negative
}

pub fn adjacency(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut a = vec![vec![0.0; n]; n];
    for e in g.edges() {
        a[e.u][e.v] = 1.0;
        a[e.v][e.u] = 1.0;
    }
    a
}

/// Largest adjacency eigenvalue by bisection on the eigenvalue count.
pub fn oracle_lambda(g: &Graph) -> f64 {
    let n = g.n();
    if n == 0 {
        return 0.0;
    }
    let a = adjacency(g);
    let mut lo = 0.0;
    let mut hi = g.max_degree() as f64 + 1e-9;
    for _ in 0..200 {
        if hi - lo < 1e-14 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if eigenvalues_below(&a, mid) == n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
