//! Builders for the extremal families and their crossing certificates.
//!
//! Inner families live on `0..N` in cyclic order, vertex `i` sitting between
//! `i - 1` and `i + 1`. Apex joins put the two apexes at labels `N` and
//! `N + 1`.

mod p2;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    cartesian_product, join, split_vertex, triangle_count, Edge, Graph, VertexSplitSpec,
};
use crate::planarity::{is_planar, DrawingCertificate};

pub use p2::{enumerate_p2_family, p2_deletion_sets, p2_min_deletions, p2_pattern_check};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{family} needs n >= {min}, got {n}")]
    TooSmall {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("{family} is not defined for n = {n} of this parity")]
    Parity { family: &'static str, n: usize },
    #[error("no variant {variant} for t = {t}, n = {n}")]
    UnknownVariant { t: usize, n: usize, variant: usize },
    #[error("unsupported forbidden clique size t = {0}")]
    UnsupportedT(usize),
    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),
    #[error("graph is not a spanning subgraph of P^2+ on {0} vertices")]
    NotSubgraph(usize),
}

fn need(family: &'static str, n: usize, min: usize) -> Result<(), ConstructionError> {
    if n < min {
        Err(ConstructionError::TooSmall { family, n, min })
    } else {
        Ok(())
    }
}

fn graph_of(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edge_list(n, edges).expect("family edges are in range")
}

/// Path `0..n` with the closing edge `{0, n-1}` and every chord `{i, i+2}`.
pub fn path_square_plus(n: usize) -> Result<Graph, ConstructionError> {
    need("path_square_plus", n, 4)?;
    let path = (0..n - 1).map(|i| (i, i + 1));
    let chords = (0..n - 2).map(|i| (i, i + 2));
    Ok(graph_of(n, path.chain(chords).chain([(0, n - 1)])))
}

/// `C_{n/2} □ K2` for even n; for odd n the ladder on `n - 1` vertices with
/// vertex 0 split along its two cycle edges, both halves keeping the rung.
pub fn cycle_ladder(n: usize) -> Result<Graph, ConstructionError> {
    need("cycle_ladder", n, 6)?;
    if n.is_multiple_of(2) {
        return Ok(cartesian_product(&Graph::cycle(n / 2), &Graph::complete(2)));
    }
    let base = cycle_ladder(n - 1)?;
    let spec = VertexSplitSpec {
        target: 0,
        part_a: vec![n - 3],
        part_b: vec![2],
        shared: vec![1],
    };
    Ok(split_vertex(&base, &spec).expect("ladder vertex 0 has neighbours 1, 2, n-3"))
}

/// Odd-order ladder inside `C_n^{2-}`: the squared cycle without the chord
/// `{0, 2}` and the path edges `{2j, 2j+1 mod n}`, `1 <= j <= (n-1)/2`. It is a
/// Moebius ladder with one vertex split (vertex 1 keeps degree 4, vertices 0
/// and 2 drop to degree 2). Even n gives the ordinary ladder.
pub fn twisted_cycle_ladder(n: usize) -> Result<Graph, ConstructionError> {
    need("twisted_cycle_ladder", n, 6)?;
    if n.is_multiple_of(2) {
        return cycle_ladder(n);
    }
    let g = cycle_square_minus(n)?;
    let removed: Vec<Edge> = (1..=(n - 1) / 2)
        .map(|j| Edge::new(2 * j, (2 * j + 1) % n))
        .collect();
    Ok(g.with_changes(&[], &removed).expect("edges in range"))
}

/// `P_n^{2+}` without the path edges `{2i-1, 2i}`, `1 <= i <= (n-2)/2`.
pub fn qp_graph(n: usize) -> Result<Graph, ConstructionError> {
    need("qp_graph", n, 6)?;
    if n % 2 == 1 {
        return Err(ConstructionError::Parity {
            family: "qp_graph",
            n,
        });
    }
    let removed: Vec<Edge> = (1..=(n - 2) / 2)
        .map(|i| Edge::new(2 * i - 1, 2 * i))
        .collect();
    Ok(path_square_plus(n)?
        .with_changes(&[], &removed)
        .expect("edges in range"))
}

pub fn cycle_square(n: usize) -> Result<Graph, ConstructionError> {
    need("cycle_square", n, 5)?;
    Ok(graph_of(
        n,
        (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]),
    ))
}

/// `C_n^2` without the chord `{0, 2}`; vertices 0 and 2 drop to degree 3.
pub fn cycle_square_minus(n: usize) -> Result<Graph, ConstructionError> {
    need("cycle_square_minus", n, 5)?;
    Ok(cycle_square(n)?
        .with_changes(&[], &[Edge::new(0, 2)])
        .expect("edges in range"))
}

/// `K_{2,n-2}` with the two hubs at labels `n-2`, `n-1`.
pub fn complete_bipartite2(n: usize) -> Result<Graph, ConstructionError> {
    need("complete_bipartite2", n, 3)?;
    Ok(join(&Graph::empty(n - 2), &Graph::empty(2)))
}

fn apexes(adjacent: bool) -> Graph {
    if adjacent {
        Graph::complete(2)
    } else {
        Graph::empty(2)
    }
}

// For an inner graph inside the squared cycle on 0..n, the middle vertex of
// each chord, or None if some edge is neither a cycle edge nor a chord.
fn chord_middles(h: &Graph) -> Option<Vec<bool>> {
    let n = h.n();
    if n < 5 {
        return None;
    }
    let mut present = vec![false; n];
    for e in h.edges() {
        let d = e.v - e.u;
        if d == 1 || d == n - 1 {
            continue;
        }
        if d == 2 {
            present[e.u + 1] = true;
        } else if d == n - 2 {
            present[(e.v + 1) % n] = true;
        } else {
            return None;
        }
    }
    Some(present)
}

fn chord_with_middle(m: usize, n: usize) -> Edge {
    Edge::new((m + n - 1) % n, (m + 1) % n)
}

// Side 0 or 1 for every present chord, alternating along each maximal run of
// consecutive middles. A full run on odd n cannot alternate; the last middle
// then repeats the side of middle 0.
fn chord_sides(present: &[bool]) -> Vec<Option<u8>> {
    let n = present.len();
    let mut sides = vec![None; n];
    let start = present.iter().position(|&p| !p).unwrap_or(n - 1);
    let mut side = 0u8;
    for k in 1..=n {
        let m = (start + k) % n;
        if present[m] {
            sides[m] = Some(side);
            side ^= 1;
        } else {
            side = 0;
        }
    }
    sides
}

/// Crossings for `inner + 2K1` (or `inner + K2` when `apex_edge`): inner
/// vertices on a circle with one apex on each side, every chord crossing the
/// spoke to its middle vertex, and the apex edge crossing a cycle edge whose
/// two neighbouring chords are absent. `None` when the scheme does not apply.
pub fn apex_certificate(inner: &Graph, apex_edge: bool) -> Option<DrawingCertificate> {
    let n = inner.n();
    let present = chord_middles(inner)?;
    if present.iter().all(|&p| p) && n % 2 == 1 {
        return None;
    }
    let sides = chord_sides(&present);
    let mut pairs = Vec::new();
    for (m, side) in sides.iter().enumerate() {
        if let Some(s) = side {
            pairs.push((chord_with_middle(m, n), Edge::new(n + *s as usize, m)));
        }
    }
    if apex_edge {
        let i = (0..n)
            .rev()
            .find(|&i| !present[i] && !present[(i + 1) % n])?;
        let gap = Edge::new(i, (i + 1) % n);
        if inner.has_edge(gap.u, gap.v) {
            pairs.push((Edge::new(n, n + 1), gap));
        }
    }
    Some(DrawingCertificate::new(pairs))
}

/// Crossings for an inner family drawn alone on a circle: empty when planar,
/// otherwise chords alternate inside/outside and, on a full odd run, the two
/// chords at the seam cross each other.
pub fn circle_certificate(inner: &Graph) -> Option<DrawingCertificate> {
    if is_planar(inner) {
        return Some(DrawingCertificate::default());
    }
    let n = inner.n();
    let present = chord_middles(inner)?;
    if present.iter().all(|&p| p) && n % 2 == 1 {
        return Some(DrawingCertificate::new(vec![(
            chord_with_middle(n - 1, n),
            chord_with_middle(0, n),
        )]));
    }
    Some(DrawingCertificate::default())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PathSquarePlus,
    CycleLadder,
    #[serde(alias = "QP")]
    Qp,
    P2Member,
    CycleSquare,
    CycleSquareMinus,
    CompleteBipartite2,
    #[serde(alias = "spex")]
    SpexCandidate,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_value(serde_json::Value::String(s.to_string()))
            .map_err(|_| format!("unknown family `{s}`"))
    }
}

/// Symbolic family descriptor, serialized as `{family, n, variant}`; the
/// extremal candidates also carry `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built {
    pub graph: Graph,
    pub certificate: Option<DrawingCertificate>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            variant: None,
            t: None,
        }
    }

    pub fn build(&self) -> Result<Built, ConstructionError> {
        let n = self.n;
        let variant = self.variant.unwrap_or(0);
        let graph = match self.family {
            Family::PathSquarePlus => path_square_plus(n)?,
            Family::CycleLadder => match variant {
                0 => cycle_ladder(n)?,
                1 => twisted_cycle_ladder(n)?,
                _ => {
                    return Err(ConstructionError::UnknownVariant { t: 0, n, variant });
                }
            },
            Family::Qp => qp_graph(n)?,
            Family::P2Member => {
                let members = enumerate_p2_family(n)?;
                members
                    .into_iter()
                    .nth(variant)
                    .ok_or(ConstructionError::UnknownVariant { t: 0, n, variant })?
            }
            Family::CycleSquare => cycle_square(n)?,
            Family::CycleSquareMinus => cycle_square_minus(n)?,
            Family::CompleteBipartite2 => {
                let g = complete_bipartite2(n)?;
                return Ok(Built {
                    graph: g,
                    certificate: Some(DrawingCertificate::default()),
                });
            }
            Family::SpexCandidate => {
                let t = self.t.ok_or(ConstructionError::MissingParameter("t"))?;
                let (graph, cert) = spex_candidate(t, n, variant)?;
                return Ok(Built {
                    graph,
                    certificate: Some(cert),
                });
            }
        };
        let certificate = circle_certificate(&graph);
        Ok(Built { graph, certificate })
    }
}

/// Number of candidate variants for `(t, n)`.
pub fn candidate_count(t: usize, n: usize) -> Result<usize, ConstructionError> {
    match t {
        3 | 4 | 6 => Ok(1),
        5 if n.is_multiple_of(2) => Ok(2),
        5 => Ok(1 + enumerate_p2_family(n.saturating_sub(2))?.len()),
        _ => Err(ConstructionError::UnsupportedT(t)),
    }
}

/// Short display name of a candidate, used in duel tables.
pub fn candidate_name(t: usize, n: usize, variant: usize) -> String {
    match (t, n % 2, variant) {
        (3, _, _) => "K2,n-2".into(),
        (4, 0, _) => "2K1+ladder".into(),
        (4, _, _) => "2K1+twisted-ladder".into(),
        (5, 0, 0) => "2K1+C2".into(),
        (5, 0, _) => "K2+QP".into(),
        (5, _, 0) => "2K1+C2-".into(),
        (5, _, k) => format!("K2+P2[{}]", k - 1),
        _ => "K2+P2+".into(),
    }
}

/// The extremal candidate for forbidden `K_t` on `n` vertices, with its
/// crossing certificate.
///
/// * t = 3: `K_{2,n-2}`, n >= 4.
/// * t = 4: `2K1 + ladder(n-2)`, n >= 10 even, n >= 9 odd (twisted ladder).
/// * t = 5, even n >= 8: variant 0 is `2K1 + C^2_{n-2}`, variant 1 is `K2 + QP_{n-2}`.
/// * t = 5, odd n >= 9: variant 0 is `2K1 + C^{2-}_{n-2}`, variant k >= 1 is
///   `K2 +` the (k-1)-th member of the `P^2_{n-2}` family.
/// * t = 6: `K2 + P^{2+}_{n-2}`, n >= 6.
pub fn spex_candidate(
    t: usize,
    n: usize,
    variant: usize,
) -> Result<(Graph, DrawingCertificate), ConstructionError> {
    let unknown = ConstructionError::UnknownVariant { t, n, variant };
    let (inner, apex_edge) = match t {
        3 => {
            need("spex_candidate(t=3)", n, 4)?;
            if variant != 0 {
                return Err(unknown);
            }
            (Graph::empty(n - 2), false)
        }
        4 => {
            need("spex_candidate(t=4)", n, if n.is_multiple_of(2) { 10 } else { 9 })?;
            if variant != 0 {
                return Err(unknown);
            }
            (twisted_cycle_ladder(n - 2)?, false)
        }
        5 if n.is_multiple_of(2) => {
            need("spex_candidate(t=5)", n, 8)?;
            match variant {
                0 => (cycle_square(n - 2)?, false),
                1 => (qp_graph(n - 2)?, true),
                _ => return Err(unknown),
            }
        }
        5 => {
            need("spex_candidate(t=5)", n, 9)?;
            if variant == 0 {
                (cycle_square_minus(n - 2)?, false)
            } else {
                let member = enumerate_p2_family(n - 2)?
                    .into_iter()
                    .nth(variant - 1)
                    .ok_or(unknown)?;
                (member, true)
            }
        }
        6 => {
            need("spex_candidate(t=6)", n, 7)?;
            if variant != 0 {
                return Err(unknown);
            }
            (path_square_plus(n - 2)?, true)
        }
        _ => return Err(ConstructionError::UnsupportedT(t)),
    };
    Ok(with_apexes(&inner, apex_edge))
}

fn with_apexes(inner: &Graph, apex_edge: bool) -> (Graph, DrawingCertificate) {
    let graph = join(inner, &apexes(apex_edge));
    let cert = if inner.edge_count() == 0 {
        DrawingCertificate::default()
    } else {
        apex_certificate(inner, apex_edge).expect("candidate inner graphs fit the circle scheme")
    };
    (graph, cert)
}

/// Every variant of [`spex_candidate`] in order, sharing one family enumeration.
pub fn spex_candidates(
    t: usize,
    n: usize,
) -> Result<Vec<(Graph, DrawingCertificate)>, ConstructionError> {
    if t == 5 && n % 2 == 1 {
        let mut out = vec![spex_candidate(t, n, 0)?];
        for member in enumerate_p2_family(n - 2)? {
            out.push(with_apexes(&member, true));
        }
        return Ok(out);
    }
    (0..candidate_count(t, n)?)
        .map(|v| spex_candidate(t, n, v))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub n: usize,
    pub e: usize,
    pub degree_sequence: Vec<usize>,
    pub triangles: usize,
}

pub fn census(g: &Graph) -> Census {
    let mut degrees = g.degree_sequence();
    degrees.reverse();
    Census {
        n: g.n(),
        e: g.edge_count(),
        degree_sequence: degrees,
        triangles: triangle_count(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{contains_k37, degeneracy, is_kt_free, max_clique_size};
    use crate::planarity::verify_certificate;

    #[test]
    fn path_square_plus_examples() {
        let g = path_square_plus(5).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3, 4]);
        assert_eq!(path_square_plus(4).unwrap(), Graph::complete(4));
        for n in 4..=50 {
            // Count by listing the pairs the definition admits.
            let mut pairs = std::collections::BTreeSet::new();
            for i in 0..n {
                for j in i + 1..n {
                    if j - i <= 2 || (i == 0 && j == n - 1) {
                        pairs.insert((i, j));
                    }
                }
            }
            assert_eq!(path_square_plus(n).unwrap().edge_count(), pairs.len());
            assert_eq!(pairs.len(), 2 * n - 2);
        }
        assert!(path_square_plus(3).is_err());
    }

    #[test]
    fn ladder_census() {
        let g = cycle_ladder(12).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.girth()), (12, 18, Some(4)));
        let g = cycle_ladder(13).unwrap();
        assert_eq!((g.n(), g.edge_count()), (13, 19));
        let twos: Vec<usize> = (0..13).filter(|&v| g.degree(v) == 2).collect();
        assert_eq!(twos.len(), 2);
        assert!(!g.has_edge(twos[0], twos[1]));
        for n in 8..=40 {
            assert_eq!(triangle_count(&cycle_ladder(n).unwrap()), 0, "n = {n}");
            assert_eq!(
                triangle_count(&twisted_cycle_ladder(n).unwrap()),
                0,
                "n = {n}"
            );
        }
        // C3 □ K2 contains triangles, so the smallest ladders are not triangle-free.
        assert_eq!(triangle_count(&cycle_ladder(6).unwrap()), 2);
        assert_eq!(triangle_count(&cycle_ladder(7).unwrap()), 1);
        assert!(cycle_ladder(5).is_err());
    }

    #[test]
    fn twisted_ladder_matches_split_degrees() {
        for n in (7..=31).step_by(2) {
            let t = twisted_cycle_ladder(n).unwrap();
            let s = cycle_ladder(n).unwrap();
            assert_eq!(t.edge_count(), s.edge_count());
            assert_eq!(t.degree_sequence(), s.degree_sequence());
            assert!(chord_middles(&t).is_some());
        }
    }

    #[test]
    fn qp_examples() {
        let g = qp_graph(8).unwrap();
        assert_eq!(g.edge_count(), 11);
        assert_eq!(triangle_count(&g), 0);
        assert_eq!(qp_graph(6).unwrap().edge_count(), 8);
        let p = path_square_plus(10).unwrap();
        assert!(qp_graph(10)
            .unwrap()
            .edges()
            .iter()
            .all(|e| p.has_edge(e.u, e.v)));
        assert!(matches!(qp_graph(7), Err(ConstructionError::Parity { .. })));
    }

    #[test]
    fn squared_cycles() {
        assert_eq!(cycle_square(5).unwrap(), Graph::complete(5));
        let g = cycle_square(8).unwrap();
        assert_eq!(g.edge_count(), 16);
        assert!(g.degrees().iter().all(|&d| d == 4));
        let m = cycle_square_minus(8).unwrap();
        assert_eq!(m.edge_count(), 15);
        assert_eq!((m.degree(0), m.degree(2)), (3, 3));
        assert!(cycle_square(4).is_err());
        for n in 6..40 {
            assert!(is_kt_free(&cycle_square(n).unwrap(), 4));
            assert!(triangle_count(&cycle_square(n).unwrap()) > 0);
        }
    }

    #[test]
    fn census_counts_to_200() {
        for n in 6..=200 {
            assert_eq!(path_square_plus(n).unwrap().edge_count(), 2 * n - 2);
            let ladder = cycle_ladder(n).unwrap().edge_count();
            let expect = if n % 2 == 0 {
                3 * n / 2
            } else {
                3 * (n - 1) / 2 + 1
            };
            assert_eq!(ladder, expect);
            assert_eq!(cycle_square(n).unwrap().edge_count(), 2 * n);
            assert_eq!(cycle_square_minus(n).unwrap().edge_count(), 2 * n - 1);
            if n % 2 == 0 {
                assert_eq!(qp_graph(n).unwrap().edge_count(), (3 * n - 2) / 2);
            }
        }
    }

    fn check_candidate(t: usize, n: usize, variant: usize) {
        let (g, cert) = spex_candidate(t, n, variant).unwrap();
        assert_eq!(g.n(), n);
        assert!(is_kt_free(&g, t), "t={t} n={n} v={variant}");
        assert!(max_clique_size(&g) == t - 1 || t == 3 && n == 4 || max_clique_size(&g) < t);
        assert!(g.edge_count() <= 4 * n - 8);
        assert!(degeneracy(&g).value <= 7);
        assert!(!contains_k37(&g));
        assert!(verify_certificate(&g, &cert), "t={t} n={n} v={variant}");
    }

    #[test]
    fn candidates_are_certified() {
        for n in 4..=30 {
            check_candidate(3, n, 0);
        }
        for n in 9..=40 {
            check_candidate(4, n, 0);
        }
        for n in (8..=40).step_by(2) {
            check_candidate(5, n, 0);
            check_candidate(5, n, 1);
        }
        for n in (9..=17).step_by(2) {
            for v in 0..candidate_count(5, n).unwrap() {
                check_candidate(5, n, v);
            }
        }
        for n in 7..=30 {
            check_candidate(6, n, 0);
        }
        // K2 + P_4^{2+} is K6 itself.
        assert!(spex_candidate(6, 6, 0).is_err());
        let (g, cert) = spex_candidate(4, 14, 0).unwrap();
        assert_eq!(g, join(&cycle_ladder(12).unwrap(), &Graph::empty(2)));
        assert!(verify_certificate(&g, &cert));
        assert!(spex_candidate(5, 20, 2).is_err());
        assert!(spex_candidate(7, 20, 0).is_err());
        assert!(spex_candidate(4, 8, 0).is_err());
    }

    #[test]
    fn odd_split_ladder_is_not_a_squared_cycle_subgraph() {
        // The split ladder has no cyclic order inside C_N^2 in the labeling
        // used by the scheme; the twisted ladder does.
        assert!(chord_middles(&cycle_ladder(11).unwrap()).is_none());
        assert!(chord_middles(&twisted_cycle_ladder(11).unwrap()).is_some());
    }

    #[test]
    fn family_certificates() {
        for n in 5..=25 {
            for fam in [
                Family::PathSquarePlus,
                Family::CycleSquare,
                Family::CycleSquareMinus,
            ] {
                let b = FamilySpec::new(fam, n).build().unwrap();
                let cert = b.certificate.expect("circle scheme applies");
                assert!(verify_certificate(&b.graph, &cert), "{fam:?} {n}");
            }
        }
    }

    #[test]
    fn family_spec_json() {
        let spec: FamilySpec = serde_json::from_str(r#"{"family":"qp","n":8}"#).unwrap();
        assert_eq!(spec, FamilySpec::new(Family::Qp, 8));
        assert_eq!(spec.build().unwrap().graph, qp_graph(8).unwrap());
        let s = serde_json::to_string(&FamilySpec {
            family: Family::P2Member,
            n: 7,
            variant: Some(2),
            t: None,
        })
        .unwrap();
        assert_eq!(s, r#"{"family":"p2-member","n":7,"variant":2}"#);
        assert_eq!("spex".parse::<Family>().unwrap(), Family::SpexCandidate);
        assert_eq!(
            "cycle-square".parse::<Family>().unwrap(),
            Family::CycleSquare
        );
    }

    #[test]
    fn census_of_qp8() {
        let c = census(&qp_graph(8).unwrap());
        assert_eq!((c.n, c.e, c.triangles), (8, 11, 0));
    }

    #[test]
    fn batched_candidates_match_single_variants() {
        for (t, n) in [(3, 9), (4, 12), (5, 12), (5, 13), (6, 9)] {
            let all = spex_candidates(t, n).unwrap();
            assert_eq!(all.len(), candidate_count(t, n).unwrap());
            for (v, pair) in all.iter().enumerate() {
                assert_eq!(*pair, spex_candidate(t, n, v).unwrap());
            }
        }
    }
}
