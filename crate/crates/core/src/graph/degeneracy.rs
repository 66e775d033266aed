use super::Graph;

/// Result of minimum-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    /// Smallest `d` such that every subgraph has a vertex of degree at most `d`.
    pub value: usize,
    /// Elimination order: `order[i]` has at most `value` neighbours among
    /// `order[i + 1..]`.
    pub order: Vec<usize>,
}

/// Repeatedly removes a vertex of minimum remaining degree (lowest label on
/// ties); the largest degree seen at removal time is the degeneracy.
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut value = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a vertex remains");
        value = value.max(deg[v]);
        removed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    Degeneracy { value, order }
}
