//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion, in Brandes'
//! formulation). Testing phase only; no embedding is built.

const NONE: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State<'a> {
    adj: &'a [Vec<usize>],
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    // Oriented edges, indexed by id.
    src: Vec<usize>,
    dst: Vec<usize>,
    out: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting: Vec<usize>,
    lowpt_edge: Vec<usize>,
    reference: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl State<'_> {
    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            self.lowpt[p.right.low]
        } else if p.right.is_empty() {
            self.lowpt[p.left.low]
        } else {
            self.lowpt[p.left.low].min(self.lowpt[p.right.low])
        }
    }

    fn orient(&mut self, root: usize) {
        // Iterative DFS: (vertex, next adjacency index).
        let mut frames = vec![(root, 0usize)];
        while let Some(&(v, idx)) = frames.last() {
            if idx < self.adj[v].len() {
                frames.last_mut().expect("frame present").1 += 1;
                let w = self.adj[v][idx];
                let pe = self.parent_edge[v];
                // Skip the tree edge to the parent and back edges already
                // oriented from a finished descendant.
                if (pe != NONE && self.src[pe] == w)
                    || (self.height[w] != NONE && self.height[w] > self.height[v])
                {
                    continue;
                }
                let id = self.src.len();
                self.src.push(v);
                self.dst.push(w);
                self.out[v].push(id);
                self.lowpt.push(self.height[v]);
                self.lowpt2.push(self.height[v]);
                self.nesting.push(0);
                if self.height[w] == NONE {
                    self.parent_edge[w] = id;
                    self.height[w] = self.height[v] + 1;
                    frames.push((w, 0));
                } else {
                    self.lowpt[id] = self.height[w];
                    self.finish_edge(id);
                }
            } else {
                frames.pop();
                let e = self.parent_edge[v];
                if e != NONE {
                    self.finish_edge(e);
                }
            }
        }
    }

    // Nesting depth of `vw` and lowpoint propagation to the parent edge of v.
    fn finish_edge(&mut self, vw: usize) {
        let v = self.src[vw];
        self.nesting[vw] = 2 * self.lowpt[vw];
        if self.lowpt2[vw] < self.height[v] {
            self.nesting[vw] += 1;
        }
        let e = self.parent_edge[v];
        if e == NONE {
            return;
        }
        if self.lowpt[vw] < self.lowpt[e] {
            self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
            self.lowpt[e] = self.lowpt[vw];
        } else if self.lowpt[vw] > self.lowpt[e] {
            self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
        } else {
            self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let mut frames = vec![(root, 0usize)];
        while let Some(&(v, idx)) = frames.last() {
            let e = self.parent_edge[v];
            if idx > 0 {
                // Returning from, or having just pushed, the edge out[v][idx - 1].
                let ei = self.out[v][idx - 1];
                if self.lowpt[ei] < self.height[v] {
                    if idx == 1 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
            }
            if idx < self.out[v].len() {
                let ei = self.out[v][idx];
                frames.last_mut().expect("frame present").1 += 1;
                self.stack_bottom[ei] = self.stack.len();
                let w = self.dst[ei];
                if ei == self.parent_edge[w] {
                    frames.push((w, 0));
                } else {
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::EMPTY,
                        right: Interval { low: ei, high: ei },
                    });
                }
                continue;
            }
            frames.pop();
            if e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are stacked");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.reference[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.reference[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
    }
}

/// Planarity of the simple graph given by symmetric adjacency lists.
pub(crate) fn lr_planar(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    let mut st = State {
        adj,
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        src: Vec::with_capacity(m),
        dst: Vec::with_capacity(m),
        out: vec![Vec::new(); n],
        lowpt: Vec::with_capacity(m),
        lowpt2: Vec::with_capacity(m),
        nesting: Vec::with_capacity(m),
        lowpt_edge: Vec::new(),
        reference: Vec::new(),
        stack_bottom: Vec::new(),
        stack: Vec::new(),
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            st.orient(v);
        }
    }
    let edges = st.src.len();
    st.lowpt_edge = vec![NONE; edges];
    st.reference = vec![NONE; edges];
    st.stack_bottom = vec![0; edges];
    let nesting = std::mem::take(&mut st.nesting);
    for list in &mut st.out {
        list.sort_by_key(|&id| nesting[id]);
    }
    st.nesting = nesting;
    roots.into_iter().all(|r| st.test(r))
}
