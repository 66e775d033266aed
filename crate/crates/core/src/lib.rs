//! Spectral extremal problems for 1-planar graphs.
//!
//! The crate builds the extremal families (squared paths and cycles, cycle
//! ladders, the triangle-destroyed squared paths), computes spectral radii and
//! Perron vectors, decides planarity and 1-planarity, and brute-forces the
//! spectral extremal sets for small orders.

pub mod constructions;
pub mod extremal;
pub mod graph;
pub mod planarity;
pub mod spectral;

pub use constructions::{ConstructionError, Family, FamilySpec};
pub use graph::{
    canonical_form, graph6_decode, graph6_encode, is_isomorphic, join, CanonicalForm, Edge, Graph,
    GraphError,
};
pub use planarity::{
    is_one_planar, is_planar, planarize, verify_certificate, DrawingCertificate, NoReason,
    OnePlanarVerdict,
};
pub use spectral::{spectral_radius, SpectralError, SpectralResult};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::{Edge, Graph};
    use rand::seq::SliceRandom;
    use rand::Rng;

    /// Graph on `n` vertices whose pair `k` (column order) is present iff `bits[k]`.
    pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    edges.push(Edge::new(i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(n, edges).unwrap()
    }

    pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
        let pairs = n * n.saturating_sub(1) / 2;
        (0u64..1 << pairs)
            .map(|mask| {
                let bits: Vec<bool> = (0..pairs).map(|k| mask >> k & 1 == 1).collect();
                graph_from_bits(n, &bits)
            })
            .collect()
    }

    pub fn random_perm(n: usize, rng: &mut impl Rng) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        p
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    /// Largest adjacency code over all n! relabelings.
    pub fn brute_canonical(g: &Graph) -> (usize, u128) {
        let n = g.n();
        let mut p: Vec<usize> = (0..n).collect();
        let mut best = 0u128;
        loop {
            // p maps position -> vertex
            let mut code = 0u128;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | g.has_edge(p[i], p[j]) as u128;
                }
            }
            best = best.max(code);
            if !next_permutation(&mut p) {
                break;
            }
        }
        (n, best)
    }
}
