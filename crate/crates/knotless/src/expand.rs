//! Size-increasing expansions: edge additions and vertex splits, plus a
//! breadth-first enumeration of everything reachable at a target size.

use thiserror::Error;

use crate::canon::IsoSet;
use crate::exec::ExecMode;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpandError {
    #[error("complete graph admits no edge addition")]
    CompleteGraph,
    #[error("target size {target} is below the current size {current}")]
    TargetBelowSize { target: usize, current: usize },
}

/// All graphs `g + e` over non-edges `e`, up to isomorphism.
pub fn edge_additions(g: &Graph) -> Result<IsoSet, ExpandError> {
    let non_edges = g.non_edges();
    if non_edges.is_empty() {
        return Err(ExpandError::CompleteGraph);
    }
    Ok(non_edges.into_iter().map(|(u, v)| g.with_edge(u, v)).collect())
}

/// All single-vertex splits, up to isomorphism.
///
/// A split of v distributes N(v) over two cover sets A and B (overlap
/// allowed unless `disjoint_only`), reattaches A to v and B to a new
/// vertex v', and joins v to v'. The result has size
/// `g.size() + 1 + |A ∩ B|`. Splits that leave low-degree vertices are
/// kept; callers prune.
pub fn vertex_splits(g: &Graph, disjoint_only: bool) -> IsoSet {
    let mut out = IsoSet::new();
    let n = g.order();
    for v in 0..n {
        let nb: Vec<usize> = g.neighbors(v).collect();
        let d = nb.len();
        // Assignment per neighbor: 0 = stay with v, 1 = move to v', 2 = both.
        let choices: usize = if disjoint_only { 2 } else { 3 };
        let mut assign = vec![0usize; d];
        loop {
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .filter(|&(a, b)| a != v && b != v)
                .collect();
            for (i, &w) in nb.iter().enumerate() {
                if assign[i] == 0 || assign[i] == 2 {
                    edges.push((v, w));
                }
                if assign[i] == 1 || assign[i] == 2 {
                    edges.push((w, n));
                }
            }
            edges.push((v, n));
            out.insert(&Graph::from_edges(n + 1, &edges));
            // Next assignment in mixed radix.
            let mut i = 0;
            while i < d {
                assign[i] += 1;
                if assign[i] < choices {
                    break;
                }
                assign[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    out
}

/// Everything reachable from `g` at exactly `target` edges using edge
/// additions and disjoint vertex splits (each adds one edge).
pub fn expansions_to_size(
    g: &Graph,
    target: usize,
    mode: ExecMode,
) -> Result<IsoSet, ExpandError> {
    if target < g.size() {
        return Err(ExpandError::TargetBelowSize { target, current: g.size() });
    }
    let mut level = IsoSet::new();
    level.insert(g);
    for _ in g.size()..target {
        let reps: Vec<Graph> = level.graphs().cloned().collect();
        let batches = mode.map(reps, |rep| {
            let mut batch = match edge_additions(&rep) {
                Ok(set) => set,
                Err(_) => IsoSet::new(),
            };
            batch.merge(vertex_splits(&rep, true));
            batch
        });
        let mut next = IsoSet::new();
        for batch in batches {
            next.merge(batch);
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_additions_counts() {
        let k4_minus = Graph::complete(4).delete_edge(0, 1).unwrap();
        assert_eq!(edge_additions(&k4_minus).unwrap().len(), 1);
        assert_eq!(edge_additions(&Graph::cycle(5)).unwrap().len(), 1);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(edge_additions(&p4).unwrap().len(), 2);
        assert_eq!(edge_additions(&Graph::complete(5)), Err(ExpandError::CompleteGraph));
    }

    #[test]
    fn disjoint_splits_of_small_graphs() {
        let splits = vertex_splits(&Graph::complete(4), true);
        assert_eq!(splits.len(), 2);
        for h in splits.graphs() {
            assert_eq!(h.order(), 5);
            assert_eq!(h.size(), 7);
        }
        let c4 = vertex_splits(&Graph::cycle(4), true);
        assert_eq!(c4.len(), 2);
    }

    #[test]
    fn overlapping_splits_add_their_overlap() {
        // K4 with overlap: sizes range over 7 + |A ∩ B|.
        let all = vertex_splits(&Graph::complete(4), false);
        let disjoint = vertex_splits(&Graph::complete(4), true);
        assert!(all.len() > disjoint.len());
        for h in all.graphs() {
            assert!(h.size() >= 7 && h.size() <= 10);
        }
        for k in disjoint.keys() {
            assert!(all.contains(k));
        }
        // Full overlap at one vertex of K4 gives K5.
        assert!(all.contains(&crate::canon::canonical_key(&Graph::complete(5))));
    }

    #[test]
    fn expansion_levels_have_uniform_size() {
        let k3 = Graph::complete(3);
        let at4 = expansions_to_size(&k3, 4, ExecMode::Sequential).unwrap();
        assert_eq!(at4.len(), 2);
        for h in at4.graphs() {
            assert_eq!(h.size(), 4);
        }
        let same = expansions_to_size(&k3, 3, ExecMode::Sequential).unwrap();
        assert_eq!(same.len(), 1);
        assert_eq!(
            expansions_to_size(&k3, 2, ExecMode::Sequential),
            Err(ExpandError::TargetBelowSize { target: 2, current: 3 })
        );
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let g = Graph::complete_multipartite(&[2, 2, 1]);
        let a = expansions_to_size(&g, g.size() + 2, ExecMode::Sequential).unwrap();
        let b = expansions_to_size(&g, g.size() + 2, ExecMode::Parallel).unwrap();
        let ka: Vec<_> = a.keys().collect();
        let kb: Vec<_> = b.keys().collect();
        assert_eq!(ka, kb);
    }
}
