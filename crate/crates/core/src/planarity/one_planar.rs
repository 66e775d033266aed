//! Exact 1-planarity by search over crossing pairings.

use serde::{Deserialize, Serialize};

use super::{is_planar, is_planar_adj, DrawingCertificate};
use crate::graph::{contains_k37, degeneracy, Edge, Graph};

/// Node expansions allowed before the search gives up.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoReason {
    /// More than `4n - 8` edges.
    EdgeBound,
    /// Contains `K_{3,7}`.
    K37,
    /// Degeneracy above 7.
    Degeneracy,
    /// Every pairing was ruled out.
    SearchExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum OnePlanarVerdict {
    Yes { certificate: DrawingCertificate },
    No { reason: NoReason },
    Unknown { expansions: u64 },
}

impl OnePlanarVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, OnePlanarVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, OnePlanarVerdict::No { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, OnePlanarVerdict::Unknown { .. })
    }
}

const UNDECIDED: u8 = 0;
const UNCROSSED: u8 = 1;
const CROSSED: u8 = 2;

struct Search<'a> {
    n: usize,
    edges: &'a [Edge],
    order: Vec<usize>,
    // Endpoint-disjoint edges, likeliest crossing partners first.
    partners: Vec<Vec<usize>>,
    state: Vec<u8>,
    partner: Vec<usize>,
    crossings: usize,
    undecided: usize,
    // Minimum crossings any 1-planar drawing needs, from the Euler bound on
    // the planarization.
    need: usize,
    budget: u64,
    expansions: u64,
    found: Option<DrawingCertificate>,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn planarization(&self, keep_undecided: bool) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + self.crossings];
        let mut dummy = self.n;
        for (i, e) in self.edges.iter().enumerate() {
            match self.state[i] {
                UNCROSSED => {
                    adj[e.u].push(e.v);
                    adj[e.v].push(e.u);
                }
                UNDECIDED if keep_undecided => {
                    adj[e.u].push(e.v);
                    adj[e.v].push(e.u);
                }
                CROSSED if i < self.partner[i] => {
                    let f = self.edges[self.partner[i]];
                    for end in [e.u, e.v, f.u, f.v] {
                        adj[end].push(dummy);
                        adj[dummy].push(end);
                    }
                    dummy += 1;
                }
                _ => {}
            }
        }
        adj
    }

    fn certificate(&self) -> DrawingCertificate {
        let pairs = (0..self.edges.len())
            .filter(|&i| self.state[i] == CROSSED && i < self.partner[i])
            .map(|i| (self.edges[i], self.edges[self.partner[i]]))
            .collect();
        DrawingCertificate::new(pairs)
    }

    fn with_edges(
        base: &[Vec<usize>],
        edges: &[Edge],
        keep: &[usize],
        skip: usize,
    ) -> Vec<Vec<usize>> {
        let mut adj = base.to_vec();
        for (k, &i) in keep.iter().enumerate() {
            if k != skip {
                let e = edges[i];
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        adj
    }

    // A minimal set of undecided edges whose addition to the decided part is
    // non-planar. Any completion crosses at least one of them.
    fn obstruction(&self) -> Vec<usize> {
        let base = self.planarization(false);
        let mut keep: Vec<usize> = self
            .order
            .iter()
            .copied()
            .filter(|&i| self.state[i] == UNDECIDED)
            .collect();
        let mut k = keep.len();
        while k > 0 {
            k -= 1;
            if !is_planar_adj(&Self::with_edges(&base, self.edges, &keep, k)) {
                keep.remove(k);
            }
        }
        keep
    }

    fn run(&mut self) -> Outcome {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Outcome::OutOfBudget;
        }
        if self.crossings + self.undecided / 2 < self.need {
            return Outcome::Exhausted;
        }
        if !is_planar_adj(&self.planarization(false)) {
            return Outcome::Exhausted;
        }
        if is_planar_adj(&self.planarization(true)) {
            self.found = Some(self.certificate());
            return Outcome::Found;
        }
        let blockers = self.obstruction();
        let mut fixed = 0;
        let mut out = Outcome::Exhausted;
        'outer: for &e in &blockers {
            self.state[e] = CROSSED;
            self.undecided -= 1;
            for k in 0..self.partners[e].len() {
                let f = self.partners[e][k];
                if self.state[f] != UNDECIDED {
                    continue;
                }
                self.state[f] = CROSSED;
                self.partner[e] = f;
                self.partner[f] = e;
                self.crossings += 1;
                self.undecided -= 1;
                let r = self.run();
                self.crossings -= 1;
                self.undecided += 1;
                self.state[f] = UNDECIDED;
                if !matches!(r, Outcome::Exhausted) {
                    out = r;
                    self.state[e] = UNCROSSED;
                    fixed += 1;
                    break 'outer;
                }
            }
            // From here on e stays uncrossed.
            self.state[e] = UNCROSSED;
            fixed += 1;
            if self.crossings + self.undecided / 2 < self.need
                || !is_planar_adj(&self.planarization(false))
            {
                break;
            }
        }
        for &e in &blockers[..fixed] {
            self.state[e] = UNDECIDED;
            self.undecided += 1;
        }
        out
    }
}

/// Decides 1-planarity exactly unless `budget` node expansions run out.
pub fn is_one_planar(g: &Graph, budget: u64) -> OnePlanarVerdict {
    let (n, m) = (g.n(), g.edge_count());
    if n >= 3 && m > 4 * n - 8 {
        return OnePlanarVerdict::No {
            reason: NoReason::EdgeBound,
        };
    }
    if degeneracy(g).value > 7 {
        return OnePlanarVerdict::No {
            reason: NoReason::Degeneracy,
        };
    }
    if contains_k37(g) {
        return OnePlanarVerdict::No {
            reason: NoReason::K37,
        };
    }
    if is_planar(g) {
        return OnePlanarVerdict::Yes {
            certificate: DrawingCertificate::default(),
        };
    }
    let edges = g.edges();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| {
        let e = edges[i];
        (std::cmp::Reverse(g.degree(e.u) + g.degree(e.v)), i)
    });
    let rank: Vec<usize> = {
        let mut r = vec![0; m];
        for (k, &i) in order.iter().enumerate() {
            r[i] = k;
        }
        r
    };
    // Kites (all four cross pairs adjacent) first.
    let partners = (0..m)
        .map(|i| {
            let e = edges[i];
            let mut ps: Vec<usize> = (0..m).filter(|&j| !e.shares_endpoint(&edges[j])).collect();
            ps.sort_by_key(|&j| {
                let f = edges[j];
                let kite = [(e.u, f.u), (e.u, f.v), (e.v, f.u), (e.v, f.v)]
                    .iter()
                    .filter(|&&(a, b)| g.has_edge(a, b))
                    .count();
                (std::cmp::Reverse(kite), rank[j])
            });
            ps
        })
        .collect();
    let mut search = Search {
        n,
        edges,
        order,
        partners,
        state: vec![UNDECIDED; m],
        partner: vec![usize::MAX; m],
        crossings: 0,
        undecided: m,
        need: (m + 6).saturating_sub(3 * n),
        budget,
        expansions: 0,
        found: None,
    };
    match search.run() {
        Outcome::Found => OnePlanarVerdict::Yes {
            certificate: search.found.take().expect("set on success"),
        },
        Outcome::Exhausted => OnePlanarVerdict::No {
            reason: NoReason::SearchExhausted,
        },
        Outcome::OutOfBudget => OnePlanarVerdict::Unknown {
            expansions: search.expansions - 1,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::join;
    use crate::planarity::verify_certificate;

    fn yes(g: &Graph) -> DrawingCertificate {
        match is_one_planar(g, DEFAULT_BUDGET) {
            OnePlanarVerdict::Yes { certificate } => {
                assert!(verify_certificate(g, &certificate));
                certificate
            }
            other => panic!("expected Yes, got {other:?}"),
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=5 {
            yes(&Graph::complete(n));
        }
        assert_eq!(yes(&Graph::complete(6)).len(), 3);
        assert_eq!(
            is_one_planar(&Graph::complete(7), DEFAULT_BUDGET),
            OnePlanarVerdict::No {
                reason: NoReason::EdgeBound
            }
        );
    }

    #[test]
    fn k37_rejected() {
        assert!(is_one_planar(&Graph::complete_bipartite(3, 7), DEFAULT_BUDGET).is_no());
    }

    #[test]
    fn apex_square_cycle() {
        yes(&join(&Graph::empty(2), &Graph::cycle(8)));
        let c8sq =
            Graph::from_edge_list(8, (0..8).flat_map(|i| [(i, (i + 1) % 8), (i, (i + 2) % 8)]))
                .unwrap();
        yes(&join(&Graph::empty(2), &c8sq));
    }

    #[test]
    fn k7_minus_edge_exhausts() {
        // K7 - e has 20 = 4n - 8 edges but is not 1-planar.
        let g = Graph::complete(7)
            .with_changes(&[], &[Edge::new(0, 1)])
            .unwrap();
        let v = is_one_planar(&g, DEFAULT_BUDGET);
        assert_eq!(
            v,
            OnePlanarVerdict::No {
                reason: NoReason::SearchExhausted
            }
        );
    }

    #[test]
    fn tiny_budget_reports_unknown() {
        let g = Graph::complete(7)
            .with_changes(&[], &[Edge::new(0, 1)])
            .unwrap();
        assert!(is_one_planar(&g, 3).is_unknown());
    }

    #[test]
    fn verdict_json() {
        let v = OnePlanarVerdict::No {
            reason: NoReason::EdgeBound,
        };
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"status":"no","reason":"edge-bound"}"#
        );
        let y = is_one_planar(&Graph::complete(4), 10);
        assert_eq!(
            serde_json::to_string(&y).unwrap(),
            r#"{"status":"yes","certificate":[]}"#
        );
    }
}
