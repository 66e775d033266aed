use super::Graph;

fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

fn popcount(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Size of a largest clique (0 for the graph on no vertices).
pub fn max_clique_size(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let words = g.words();
    let mut cand = vec![0u64; words];
    for v in 0..g.n() {
        cand[v / 64] |= 1 << (v % 64);
    }
    let mut best = 1;
    expand(g, &mut cand, 0, &mut best);
    best
}

// Branch and bound on the candidate set; `cand` is consumed.
fn expand(g: &Graph, cand: &mut [u64], size: usize, best: &mut usize) {
    while let Some(v) = first_bit(cand) {
        if size + popcount(cand) <= *best {
            return;
        }
        cand[v / 64] &= !(1 << (v % 64));
        let mut next = vec![0u64; cand.len()];
        and_into(&mut next, cand, g.row(v));
        if next.iter().all(|&w| w == 0) {
            *best = (*best).max(size + 1);
        } else {
            expand(g, &mut next, size + 1, best);
        }
    }
}

/// True iff `g` has no clique on `t` vertices. Panics if `t < 2`.
pub fn is_kt_free(g: &Graph, t: usize) -> bool {
    assert!(t >= 2, "K_t-freeness needs t >= 2");
    if g.n() < t {
        return true;
    }
    let words = g.words();
    let mut cand = vec![0u64; words];
    for v in 0..g.n() {
        cand[v / 64] |= 1 << (v % 64);
    }
    !has_clique(g, &mut cand, t)
}

fn has_clique(g: &Graph, cand: &mut [u64], need: usize) -> bool {
    if need == 0 {
        return true;
    }
    while let Some(v) = first_bit(cand) {
        if popcount(cand) < need {
            return false;
        }
        cand[v / 64] &= !(1 << (v % 64));
        if need == 1 {
            return true;
        }
        let mut next = vec![0u64; cand.len()];
        and_into(&mut next, cand, g.row(v));
        if has_clique(g, &mut next, need - 1) {
            return true;
        }
    }
    false
}

/// True iff some three vertices have at least seven common neighbours, i.e.
/// `K_{3,7}` is a (not necessarily induced) subgraph.
pub fn contains_k37(g: &Graph) -> bool {
    let heavy: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 7).collect();
    if heavy.len() < 3 {
        return false;
    }
    let words = g.words();
    let mut ab = vec![0u64; words];
    let mut abc = vec![0u64; words];
    for (i, &a) in heavy.iter().enumerate() {
        for (j, &b) in heavy.iter().enumerate().skip(i + 1) {
            and_into(&mut ab, g.row(a), g.row(b));
            if popcount(&ab) < 7 {
                continue;
            }
            for &c in &heavy[j + 1..] {
                and_into(&mut abc, &ab, g.row(c));
                if popcount(&abc) >= 7 {
                    return true;
                }
            }
        }
    }
    false
}

pub fn triangle_count(g: &Graph) -> usize {
    let words = g.words();
    let mut common = vec![0u64; words];
    let mut total = 0;
    for e in g.edges() {
        and_into(&mut common, g.row(e.u), g.row(e.v));
        total += popcount(&common);
    }
    total / 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, join};
    use proptest::prelude::*;

    // Exhaustive oracle: does some t-subset span a clique?
    fn brute_has_clique(g: &Graph, t: usize) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            mask.count_ones() as usize == t && {
                let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                vs.iter()
                    .enumerate()
                    .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            }
        })
    }

    #[test]
    fn clique_examples() {
        let k24 = Graph::complete_bipartite(2, 4);
        assert_eq!(max_clique_size(&k24), 2);
        assert!(is_kt_free(&k24, 3));
        assert_eq!(max_clique_size(&Graph::complete(7)), 7);
        assert_eq!(max_clique_size(&Graph::empty(3)), 1);
        assert_eq!(max_clique_size(&Graph::empty(0)), 0);

        let ladder = cartesian_product(&Graph::cycle(6), &Graph::complete(2));
        let g = join(&Graph::empty(2), &ladder);
        assert!(is_kt_free(&g, 4));
        assert!(!is_kt_free(&g, 3));
        assert_eq!(max_clique_size(&g), 3);
    }

    #[test]
    fn k37_examples() {
        assert!(contains_k37(&Graph::complete_bipartite(3, 7)));
        assert!(!contains_k37(&Graph::complete_bipartite(3, 6)));
        assert!(!contains_k37(&Graph::complete_bipartite(2, 100)));
        assert!(contains_k37(&Graph::complete(10)));
        assert!(!contains_k37(&Graph::complete(9)));
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(triangle_count(&Graph::complete(4)), 4);
        assert_eq!(triangle_count(&Graph::complete(5)), 10);
        assert_eq!(triangle_count(&Graph::cycle(5)), 0);
    }

    proptest! {
        #[test]
        fn clique_matches_subset_enumeration(
            n in 1usize..=10,
            bits in proptest::collection::vec(any::<bool>(), 45),
            t in 2usize..=5,
        ) {
            let g = crate::testutil::graph_from_bits(n, &bits);
            let brute = brute_has_clique(&g, t);
            prop_assert_eq!(is_kt_free(&g, t), !brute);
            prop_assert_eq!(max_clique_size(&g) >= t, brute);
        }
    }
}
