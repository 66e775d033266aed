//! Planarity, planarization of crossing sets, and exact 1-planarity search.

mod lr;
mod one_planar;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

pub use one_planar::{is_one_planar, NoReason, OnePlanarVerdict, DEFAULT_BUDGET};

/// Crossing pairs witnessing a 1-planar drawing. Serialized as a list of
/// `[u1, v1, u2, v2]` quadruples.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<[usize; 4]>", into = "Vec<[usize; 4]>")]
pub struct DrawingCertificate {
    pub pairs: Vec<(Edge, Edge)>,
}

impl DrawingCertificate {
    pub fn new(pairs: Vec<(Edge, Edge)>) -> Self {
        DrawingCertificate { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Pairs whose edges both survive in `g`, as certificates restrict to subgraphs.
    pub fn restricted_to(&self, g: &Graph) -> DrawingCertificate {
        DrawingCertificate {
            pairs: self
                .pairs
                .iter()
                .copied()
                .filter(|(a, b)| g.has_edge(a.u, a.v) && g.has_edge(b.u, b.v))
                .collect(),
        }
    }
}

impl From<Vec<[usize; 4]>> for DrawingCertificate {
    fn from(quads: Vec<[usize; 4]>) -> Self {
        DrawingCertificate {
            pairs: quads
                .into_iter()
                .map(|[a, b, c, d]| (Edge::new(a, b), Edge::new(c, d)))
                .collect(),
        }
    }
}

impl From<DrawingCertificate> for Vec<[usize; 4]> {
    fn from(c: DrawingCertificate) -> Self {
        c.pairs.iter().map(|(a, b)| [a.u, a.v, b.u, b.v]).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("edge {0} is crossed more than once")]
    CrossedTwice(Edge),
    #[error("crossing edges {0} and {1} share an endpoint")]
    SharedEndpoint(Edge, Edge),
}

pub fn is_planar(g: &Graph) -> bool {
    lr::lr_planar(&g.adjacency_lists())
}

pub(crate) fn is_planar_adj(adj: &[Vec<usize>]) -> bool {
    lr::lr_planar(adj)
}

fn check_pairs(g: &Graph, cert: &DrawingCertificate) -> Result<(), CertificateError> {
    let mut used = std::collections::HashSet::new();
    for &(a, b) in &cert.pairs {
        for e in [a, b] {
            if !g.has_edge(e.u, e.v) {
                return Err(CertificateError::MissingEdge(e));
            }
            if !used.insert(e) {
                return Err(CertificateError::CrossedTwice(e));
            }
        }
        if a.shares_endpoint(&b) {
            return Err(CertificateError::SharedEndpoint(a, b));
        }
    }
    Ok(())
}

/// Replaces each crossing pair by a dummy vertex (labels `n..n + pairs`)
/// joined to the four endpoints.
pub fn planarize(g: &Graph, cert: &DrawingCertificate) -> Result<Graph, CertificateError> {
    check_pairs(g, cert)?;
    let crossed: std::collections::HashSet<Edge> =
        cert.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !crossed.contains(e))
        .collect();
    for (k, (a, b)) in cert.pairs.iter().enumerate() {
        let x = g.n() + k;
        for end in [a.u, a.v, b.u, b.v] {
            edges.push(Edge::new(end, x));
        }
    }
    Ok(Graph::from_valid_edges(g.n() + cert.len(), edges))
}

/// Whether `cert` is a valid set of crossings for `g` with a planar planarization.
pub fn verify_certificate(g: &Graph, cert: &DrawingCertificate) -> bool {
    planarize(g, cert).is_ok_and(|p| is_planar(&p))
}
