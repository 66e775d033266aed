//! Isomorphism classes of small graphs by one-vertex augmentation.
//!
//! Every graph arises from the deletion of a minimum-degree vertex, so each
//! class on `n` vertices is reached by extending some class on `n - 1`
//! vertices with a new vertex of minimum degree. Duplicates are removed by
//! canonical form.

use rayon::prelude::*;

use crate::graph::{canonical_form, CanonicalForm, Edge, Graph};

/// Canonical forms of all graphs on `n` vertices satisfying `keep`, sorted.
///
/// `keep` must be hereditary (closed under vertex deletion); classes failing
/// it are not extended, which is only complete under that assumption.
pub fn graph_classes<F>(n: usize, keep: F) -> Vec<CanonicalForm>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let mut level: Vec<CanonicalForm> = vec![canonical_form(&Graph::empty(0)).expect("order 0")];
    for order in 1..=n {
        let mut next: Vec<CanonicalForm> = level
            .par_iter()
            .flat_map_iter(|parent| {
                let mut local = extend(&parent.graph(), &keep);
                local.sort_unstable();
                local.dedup();
                local
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        debug_assert!(next.iter().all(|c| c.n() == order));
        level = next;
    }
    level
}

fn extend<F: Fn(&Graph) -> bool>(parent: &Graph, keep: &F) -> Vec<CanonicalForm> {
    let p = parent.n();
    let degrees = parent.degrees();
    let mut out = Vec::new();
    for mask in 0u32..1 << p {
        let k = mask.count_ones() as usize;
        // The new vertex must have minimum degree in the child.
        let min_other = (0..p)
            .map(|v| degrees[v] + (mask >> v & 1) as usize)
            .min()
            .unwrap_or(usize::MAX);
        if k > min_other {
            continue;
        }
        let edges = parent.edges().iter().copied().chain(
            (0..p)
                .filter(|&v| mask >> v & 1 == 1)
                .map(|v| Edge::new(v, p)),
        );
        let child = Graph::from_edge_list(p + 1, edges).expect("labels in range");
        if keep(&child) {
            out.push(canonical_form(&child).expect("order within canonical limit"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_kt_free;

    #[test]
    fn class_counts_match_known_sequence() {
        let expected = [1, 1, 2, 4, 11, 34, 156, 1044];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(graph_classes(n, |_| true).len(), want, "n = {n}");
        }
    }

    #[test]
    fn hereditary_filter_matches_post_filter() {
        for n in 1..=6 {
            let all = graph_classes(n, |_| true);
            let post: Vec<_> = all
                .into_iter()
                .filter(|c| is_kt_free(&c.graph(), 3))
                .collect();
            let pruned = graph_classes(n, |g| is_kt_free(g, 3));
            assert_eq!(post, pruned);
        }
    }

    #[test]
    fn classes_are_pairwise_non_isomorphic() {
        let cls = graph_classes(5, |_| true);
        for w in cls.windows(2) {
            assert!(w[0] < w[1]);
        }
        for c in &cls {
            assert_eq!(canonical_form(&c.graph()).unwrap(), *c);
        }
    }
}
