//! Canonical labeling by colour refinement, individualization and
//! backtracking, with pruning by automorphisms discovered at the leaves.

use serde::{Deserialize, Serialize};

use super::{Edge, Graph, GraphError};

/// Largest order accepted by [`canonical_form`]: the upper triangle must fit
/// in a `u128`.
pub const MAX_CANON_ORDER: usize = 16;

/// Labeling-invariant code of a graph; equal iff the graphs are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `n` followed by the 16-byte big-endian code.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(17);
        out.push(self.n);
        out.extend_from_slice(&self.code.to_be_bytes());
        out
    }

    /// The graph in canonical labeling.
    pub fn graph(&self) -> Graph {
        let n = self.n();
        let pairs = n * n.saturating_sub(1) / 2;
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (pairs - 1 - k) & 1 == 1 {
                    edges.push(Edge::new(i, j));
                }
                k += 1;
            }
        }
        Graph::from_valid_edges(n, edges)
    }
}

/// Adjacency code under `lab` (position -> vertex), pairs in graph6 column
/// order with the first pair as the most significant bit.
fn code_of(rows: &[u64], lab: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..lab.len() {
        let rj = rows[lab[j]];
        for &li in &lab[..j] {
            code = code << 1 | (rj >> li & 1) as u128;
        }
    }
    code
}

// Splits every cell by neighbour counts into the current cells until stable.
fn refine(rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(rows.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks
                        .iter()
                        .map(|m| (rows[v] & m).count_ones() as u8)
                        .collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    first: Option<(u128, Vec<usize>)>,
    best: Option<(u128, Vec<usize>)>,
    // Automorphisms as vertex maps.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(self.rows, &lab);
        let Some((first_code, first_lab)) = &self.first else {
            self.first = Some((code, lab.clone()));
            self.best = Some((code, lab));
            return;
        };
        let (best_code, best_lab) = self.best.as_ref().expect("best set with first");
        let reference = if code == *first_code {
            Some(first_lab)
        } else if code == *best_code {
            Some(best_lab)
        } else {
            None
        };
        if let Some(reference) = reference {
            let mut gamma = vec![0; lab.len()];
            for (a, b) in reference.iter().zip(&lab) {
                gamma[*a] = *b;
            }
            if gamma.iter().enumerate().any(|(i, &g)| i != g) {
                self.autos.push(gamma);
            }
        } else if code > *best_code {
            self.best = Some((code, lab));
        }
    }

    // Orbit representative under automorphisms fixing `path` pointwise.
    fn same_orbit(&self, path: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.autos {
            if path.iter().any(|&p| g[p] != p) {
                continue;
            }
            for (x, &y) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        refine(self.rows, &mut cells);
        let Some(ti) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[ti].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if !tried.is_empty() && self.same_orbit(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[ti + 1..]);
            path.push(v);
            self.descend(child, path);
            path.pop();
        }
    }
}

/// Canonical labeling: returns the form and the map vertex -> canonical label.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.n();
    if n > MAX_CANON_ORDER {
        return Err(GraphError::TooLarge {
            n,
            max: MAX_CANON_ORDER,
        });
    }
    if n == 0 {
        return Ok((CanonicalForm { n: 0, code: 0 }, Vec::new()));
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
    let mut search = Search {
        rows: &rows,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.descend(vec![(0..n).collect()], &mut Vec::new());
    let (code, lab) = search.best.expect("search reaches a leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((CanonicalForm { n: n as u8, code }, perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g).map(|(c, _)| c)
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    if g1.n() != g2.n()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{all_labeled_graphs, brute_canonical, random_perm};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basic_examples() {
        assert!(is_isomorphic(&Graph::cycle(4), &Graph::complete_bipartite(2, 2)).unwrap());
        assert!(!is_isomorphic(&Graph::path(6), &Graph::cycle(6)).unwrap());
        let g = Graph::complete(5);
        assert_eq!(canonical_form(&g).unwrap().graph(), g);
    }

    #[test]
    fn labeling_maps_onto_canonical_graph() {
        let g = Graph::from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (5, 4)]).unwrap();
        let (c, perm) = canonical_labeling(&g).unwrap();
        assert_eq!(g.permuted(&perm), c.graph());
    }

    #[test]
    fn rejects_large_orders() {
        assert!(matches!(
            canonical_form(&Graph::empty(17)),
            Err(GraphError::TooLarge { n: 17, .. })
        ));
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [
            Graph::empty(16),
            Graph::complete(16),
            Graph::complete_bipartite(8, 8),
        ] {
            let c = canonical_form(&g).unwrap();
            assert_eq!(c.graph().edge_count(), g.edge_count());
        }
    }

    #[test]
    fn agrees_with_brute_force_on_all_graphs_up_to_six() {
        for n in 1..=6 {
            let graphs = all_labeled_graphs(n);
            let mut by_brute = std::collections::HashMap::new();
            let mut by_refine = std::collections::HashMap::new();
            for g in &graphs {
                let b = brute_canonical(g);
                let r = canonical_form(g).unwrap();
                let prev = by_brute.insert(b, r);
                if let Some(prev) = prev {
                    assert_eq!(prev, r, "isomorphic graphs got different forms");
                }
                let prev = by_refine.insert(r, b);
                if let Some(prev) = prev {
                    assert_eq!(prev, b, "non-isomorphic graphs share a form");
                }
            }
        }
    }

    #[test]
    fn invariant_under_random_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let sample = [
            Graph::complete_bipartite(3, 5),
            Graph::cycle(12),
            crate::constructions::path_square_plus(7).unwrap(),
            crate::constructions::cycle_square(10).unwrap(),
            crate::graph::cartesian_product(&Graph::cycle(4), &Graph::cycle(4)),
        ];
        for g in &sample {
            let c = canonical_form(g).unwrap();
            for _ in 0..100 {
                let p = random_perm(g.n(), &mut rng);
                assert_eq!(canonical_form(&g.permuted(&p)).unwrap(), c);
            }
        }
    }
}
