//! Planarity via the left-right criterion (Brandes' formulation of the
//! de Fraysseix–Rosenstiehl test).
//!
//! Two DFS passes: the first orients edges and computes lowpoints and
//! nesting depths; the second processes adjacency lists in nesting order,
//! maintaining a stack of conflict pairs of back-edge intervals. A
//! same-side conflict between intervals certifies nonplanarity.

use crate::graph::Graph;

const INF: usize = usize::MAX;

#[derive(Debug, Default, Clone, Copy)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

struct NonPlanar;

struct Lr<'a> {
    g: &'a Graph,
    height: Vec<usize>,
    /// Parent tree-edge id per vertex.
    parent: Vec<Option<usize>>,
    esrc: Vec<usize>,
    edst: Vec<usize>,
    elow: Vec<usize>,
    elow2: Vec<usize>,
    enest: Vec<u64>,
    /// Oriented out-edges per vertex; sorted by nesting depth before pass 2.
    adj: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<Option<usize>>,
    eref: Vec<Option<usize>>,
}

impl<'a> Lr<'a> {
    fn new(g: &'a Graph) -> Lr<'a> {
        let n = g.order();
        Lr {
            g,
            height: vec![INF; n],
            parent: vec![None; n],
            esrc: Vec::new(),
            edst: Vec::new(),
            elow: Vec::new(),
            elow2: Vec::new(),
            enest: Vec::new(),
            adj: vec![Vec::new(); n],
            stack: Vec::new(),
            stack_bottom: Vec::new(),
            lowpt_edge: Vec::new(),
            eref: Vec::new(),
        }
    }

    fn new_edge(&mut self, v: usize, w: usize, low: usize, low2: usize) -> usize {
        let id = self.esrc.len();
        self.esrc.push(v);
        self.edst.push(w);
        self.elow.push(low);
        self.elow2.push(low2);
        self.enest.push(0);
        self.stack_bottom.push(0);
        self.lowpt_edge.push(None);
        self.eref.push(None);
        self.adj[v].push(id);
        id
    }

    fn is_tree_edge(&self, e: usize) -> bool {
        self.parent[self.edst[e]] == Some(e)
    }

    fn dfs_orient(&mut self, v: usize) {
        let pe = self.parent[v];
        let parent_vertex = pe.map(|e| self.esrc[e]);
        for w in self.g.neighbors(v).collect::<Vec<_>>() {
            if Some(w) == parent_vertex {
                continue;
            }
            let e;
            if self.height[w] == INF {
                e = self.new_edge(v, w, self.height[v], self.height[v]);
                self.parent[w] = Some(e);
                self.height[w] = self.height[v] + 1;
                self.dfs_orient(w);
            } else if self.height[w] < self.height[v] {
                e = self.new_edge(v, w, self.height[w], self.height[v]);
            } else {
                // The reverse orientation is (or will be) the back edge.
                continue;
            }
            self.enest[e] = 2 * self.elow[e] as u64
                + u64::from(self.elow2[e] < self.height[v]);
            if let Some(pe) = pe {
                if self.elow[e] < self.elow[pe] {
                    self.elow2[pe] = self.elow[pe].min(self.elow2[e]);
                    self.elow[pe] = self.elow[e];
                } else if self.elow[e] > self.elow[pe] {
                    self.elow2[pe] = self.elow2[pe].min(self.elow[e]);
                } else {
                    self.elow2[pe] = self.elow2[pe].min(self.elow2[e]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.elow[i.high.unwrap()] > self.elow[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        let l = p.l.low.map_or(INF, |e| self.elow[e]);
        let r = p.r.low.map_or(INF, |e| self.elow[e]);
        l.min(r)
    }

    fn dfs_test(&mut self, v: usize) -> Result<(), NonPlanar> {
        let pe = self.parent[v];
        let out = self.adj[v].clone();
        for (idx, &ei) in out.iter().enumerate() {
            self.stack_bottom[ei] = self.stack.len();
            if self.is_tree_edge(ei) {
                self.dfs_test(self.edst[ei])?;
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    l: Interval::default(),
                    r: Interval { low: Some(ei), high: Some(ei) },
                });
            }
            if self.elow[ei] < self.height[v] {
                // ei has a return edge strictly above v's parent level.
                let e = pe.expect("a return edge implies a parent");
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else {
                    self.add_constraints(ei, e)?;
                }
            }
        }
        if let Some(e) = pe {
            let u = self.esrc[e];
            self.trim_back_edges(u, e);
            if self.elow[e] < self.height[u] {
                if let Some(top) = self.stack.last() {
                    let hl = top.l.high;
                    let hr = top.r.high;
                    self.eref[e] = if hl.is_some()
                        && (hr.is_none() || self.elow[hl.unwrap()] > self.elow[hr.unwrap()])
                    {
                        hl
                    } else {
                        hr
                    };
                }
            }
        }
        Ok(())
    }

    fn merge_into_right(&mut self, p: &mut ConflictPair, q: Interval) {
        if q.is_empty() {
            return;
        }
        if p.r.is_empty() {
            p.r.high = q.high;
        } else {
            self.eref[p.r.low.unwrap()] = q.high;
        }
        p.r.low = q.low;
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> Result<(), NonPlanar> {
        let mut p = ConflictPair::default();
        // Merge the return edges of ei into p.r.
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.l.is_empty() {
                std::mem::swap(&mut q.l, &mut q.r);
            }
            if !q.l.is_empty() {
                return Err(NonPlanar);
            }
            let q_low = q.r.low.expect("stacked pair has a right interval");
            if self.elow[q_low] > self.elow[e] {
                self.merge_into_right(&mut p, q.r);
            } else {
                // Constraint already satisfied below lowpt(e); record the
                // chain link for later trimming.
                self.eref[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into p.l.
        while {
            let top = self.stack.last().expect("sibling constraints exist");
            self.conflicting(&top.l, ei) || self.conflicting(&top.r, ei)
        } {
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.r, ei) {
                std::mem::swap(&mut q.l, &mut q.r);
            }
            if self.conflicting(&q.r, ei) {
                return Err(NonPlanar);
            }
            self.merge_into_right(&mut p, q.r);
            // q.l conflicts, hence is nonempty.
            if p.l.is_empty() {
                p.l.high = q.l.high;
            } else {
                self.eref[p.l.low.unwrap()] = q.l.high;
            }
            p.l.low = q.l.low;
        }
        if !(p.l.is_empty() && p.r.is_empty()) {
            self.stack.push(p);
        }
        Ok(())
    }

    fn trim_back_edges(&mut self, u: usize, e: usize) {
        // Drop whole pairs returning exactly to u.
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == self.height[u] {
                self.stack.pop();
            } else {
                break;
            }
        }
        // Partially trim the new top.
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.l.high {
                if self.edst[h] == u {
                    p.l.high = self.eref[h];
                } else {
                    break;
                }
            }
            if p.l.high.is_none() {
                if let Some(low) = p.l.low {
                    self.eref[low] = self.lowpt_edge[e];
                    p.l.low = None;
                }
            }
            while let Some(h) = p.r.high {
                if self.edst[h] == u {
                    p.r.high = self.eref[h];
                } else {
                    break;
                }
            }
            if p.r.high.is_none() {
                if let Some(low) = p.r.low {
                    self.eref[low] = self.lowpt_edge[e];
                    p.r.low = None;
                }
            }
            if !(p.l.is_empty() && p.r.is_empty()) {
                self.stack.push(p);
            }
        }
    }
}

/// Deterministic boolean planarity test.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    let m = g.size();
    if n <= 4 || m <= 3 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let mut lr = Lr::new(g);
    let mut roots = Vec::new();
    for r in 0..n {
        if lr.height[r] == INF {
            lr.height[r] = 0;
            roots.push(r);
            lr.dfs_orient(r);
        }
    }
    for v in 0..n {
        let mut order = lr.adj[v].clone();
        order.sort_by_key(|&e| (lr.enest[e], lr.edst[e]));
        lr.adj[v] = order;
    }
    for r in roots {
        if lr.dfs_test(r).is_err() {
            return false;
        }
    }
    true
}
