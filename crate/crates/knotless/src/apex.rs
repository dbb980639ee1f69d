//! Apex testing: can deleting at most k vertices make the graph planar?

use crate::graph::Graph;
use crate::planar::is_planar;

/// Vertex set whose deletion leaves a planar graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApexWitness {
    pub removed: Vec<usize>,
}

/// Searches deletion sets of size 0..=k in lexicographic order and returns
/// the first that leaves a planar graph. Supports k <= 2.
pub fn k_apex(g: &Graph, k: usize) -> Option<ApexWitness> {
    assert!(k <= 2, "apex search is implemented for k <= 2");
    let n = g.order();
    if is_planar(g) {
        return Some(ApexWitness { removed: Vec::new() });
    }
    if k >= 1 {
        for v in 0..n {
            if is_planar(&without(g, &[v])) {
                return Some(ApexWitness { removed: vec![v] });
            }
        }
    }
    if k >= 2 {
        for u in 0..n {
            for v in (u + 1)..n {
                if is_planar(&without(g, &[u, v])) {
                    return Some(ApexWitness { removed: vec![u, v] });
                }
            }
        }
    }
    None
}

fn without(g: &Graph, removed: &[usize]) -> Graph {
    let kept: Vec<usize> = (0..g.order()).filter(|v| !removed.contains(v)).collect();
    g.induced(&kept)
}
