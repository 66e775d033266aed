//! Minimum triangle-destroying deletions from `P_n^{2+}`.

use std::collections::BTreeSet;

use super::{path_square_plus, ConstructionError};
use crate::graph::{Edge, Graph};

fn triangles(g: &Graph) -> Vec<[Edge; 3]> {
    let mut out = Vec::new();
    for e in g.edges() {
        for w in g.neighbors(e.u) {
            if w > e.v && g.has_edge(e.v, w) {
                out.push([*e, Edge::new(e.u, w), Edge::new(e.v, w)]);
            }
        }
    }
    out
}

struct HittingSets<'a> {
    tris: &'a [[Edge; 3]],
    max_hit: usize,
    limit: usize,
    found: BTreeSet<Vec<Edge>>,
}

impl HittingSets<'_> {
    fn search(&mut self, chosen: &mut Vec<Edge>) {
        let unhit: Vec<&[Edge; 3]> = self
            .tris
            .iter()
            .filter(|t| !t.iter().any(|e| chosen.contains(e)))
            .collect();
        let Some(first) = unhit.first() else {
            let mut s = chosen.clone();
            s.sort_unstable();
            self.found.insert(s);
            return;
        };
        if chosen.len() + unhit.len().div_ceil(self.max_hit) > self.limit {
            return;
        }
        for &e in first.iter() {
            chosen.push(e);
            self.search(chosen);
            chosen.pop();
        }
    }
}

fn hitting_sets(g: &Graph) -> (usize, Vec<Vec<Edge>>) {
    let tris = triangles(g);
    let max_hit = g
        .edges()
        .iter()
        .map(|e| tris.iter().filter(|t| t.contains(e)).count())
        .max()
        .unwrap_or(1)
        .max(1);
    for limit in 0..=g.edge_count() {
        let mut hs = HittingSets {
            tris: &tris,
            max_hit,
            limit,
            found: BTreeSet::new(),
        };
        hs.search(&mut Vec::new());
        if !hs.found.is_empty() {
            return (limit, hs.found.into_iter().collect());
        }
    }
    unreachable!("deleting every edge destroys all triangles")
}

/// Minimum number of edges whose deletion leaves `P_n^{2+}` triangle-free.
pub fn p2_min_deletions(n: usize) -> Result<usize, ConstructionError> {
    if n < 6 {
        return Err(ConstructionError::TooSmall {
            family: "p2_family",
            n,
            min: 6,
        });
    }
    Ok(hitting_sets(&path_square_plus(n)?).0)
}

/// All minimum deletion sets, each sorted, in lexicographic order.
pub fn p2_deletion_sets(n: usize) -> Result<Vec<Vec<Edge>>, ConstructionError> {
    if n < 6 {
        return Err(ConstructionError::TooSmall {
            family: "p2_family",
            n,
            min: 6,
        });
    }
    Ok(hitting_sets(&path_square_plus(n)?).1)
}

/// Every triangle-free graph obtained from `P_n^{2+}` by a minimum number of
/// edge deletions, in the order of [`p2_deletion_sets`].
pub fn enumerate_p2_family(n: usize) -> Result<Vec<Graph>, ConstructionError> {
    let base = path_square_plus(n.max(4))?;
    Ok(p2_deletion_sets(n)?
        .iter()
        .map(|d| base.with_changes(&[], d).expect("edges in range"))
        .collect())
}

// 1-based names: e_i = v_i v_{i+1}, e'_i = v_i v_{i+2}, with v_i at label i - 1.
fn e(i: usize) -> Edge {
    Edge::new(i - 1, i)
}

fn e_chord(i: usize) -> Edge {
    Edge::new(i - 1, i + 1)
}

fn patterns(n: usize) -> Vec<BTreeSet<Edge>> {
    let mut out = Vec::new();
    // A removed chord e'_i (i odd), with alternating path edges on both sides.
    for i in (1..=n - 2).step_by(2) {
        let mut s: BTreeSet<Edge> = (2..i).step_by(2).map(e).collect();
        s.extend((i + 2..n - 1).step_by(2).map(e));
        s.insert(e_chord(i));
        out.push(s);
    }
    // e_1 and e_{n-1} standing in for the first and last chord.
    out.push((1..n - 1).step_by(2).map(e).collect());
    let mut s: BTreeSet<Edge> = (2..n - 2).step_by(2).map(e).collect();
    s.insert(e(n - 1));
    out.push(s);
    // Even path edges up to e_{2a}, then odd ones from e_{2a+1}.
    for a in 1..=(n - 3) / 2 {
        let mut s: BTreeSet<Edge> = (2..=2 * a).step_by(2).map(e).collect();
        s.extend((2 * a + 1..n - 1).step_by(2).map(e));
        out.push(s);
    }
    out
}

/// Whether the edges `g` misses from `P_n^{2+}` (odd n) form one of the two
/// deletion schemas: a removed chord with alternating path edges around it,
/// or even path edges followed by odd ones.
pub fn p2_pattern_check(g: &Graph, n: usize) -> Result<bool, ConstructionError> {
    let base = path_square_plus(n)?;
    if g.n() != n || g.edges().iter().any(|e| !base.has_edge(e.u, e.v)) {
        return Err(ConstructionError::NotSubgraph(n));
    }
    if n.is_multiple_of(2) || n < 5 {
        return Err(ConstructionError::Parity {
            family: "p2_pattern_check",
            n,
        });
    }
    let deleted: BTreeSet<Edge> = base
        .edges()
        .iter()
        .copied()
        .filter(|e| !g.has_edge(e.u, e.v))
        .collect();
    Ok(patterns(n).contains(&deleted))
}
