//! Triangle-Y exchange moves.
//!
//! A triangle move replaces the edges of a triangle with a new degree-3
//! vertex joined to its corners; the inverse move contracts a degree-3
//! vertex back into a triangle and is refused when any of the three
//! required edges already exists (it would create a doubled edge).

use crate::graph::Graph;

/// Replaces triangle abc with a new vertex (labelled `g.order()`) adjacent
/// to a, b, and c.
///
/// Panics if the three vertices do not form a triangle.
pub fn tri_to_y(g: &Graph, triangle: [usize; 3]) -> Graph {
    let [a, b, c] = triangle;
    assert!(
        g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c),
        "tri_to_y requires a triangle"
    );
    let n = g.order();
    let dropped = |u: usize, v: usize| {
        let p = (u.min(v), u.max(v));
        [(a, b), (a, c), (b, c)]
            .iter()
            .any(|&(x, y)| p == (x.min(y), x.max(y)))
    };
    let mut edges: Vec<(usize, usize)> =
        g.edges().filter(|&(u, v)| !dropped(u, v)).collect();
    edges.extend([(a, n), (b, n), (c, n)]);
    Graph::from_edges(n + 1, &edges)
}

/// Contracts degree-3 vertex `center` into a triangle on its neighbors.
///
/// Returns None if `center` does not have degree 3 or if any edge between
/// its neighbors already exists. Remaining vertices keep their labels
/// except that the last vertex moves into the freed slot.
pub fn y_to_tri(g: &Graph, center: usize) -> Option<Graph> {
    if center >= g.order() || g.degree(center) != 3 {
        return None;
    }
    let nb: Vec<usize> = g.neighbors(center).collect();
    if g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) || g.has_edge(nb[1], nb[2]) {
        return None;
    }
    let last = g.order() - 1;
    let relabel = |v: usize| if v == last { center } else { v };
    let mut h = g.delete_vertex(center).expect("center checked above");
    for i in 0..3 {
        for j in (i + 1)..3 {
            h = h.with_edge(relabel(nb[i]), relabel(nb[j]));
        }
    }
    Some(h)
}

/// True when some degree-3 vertex lies on a triangle, i.e. two of its
/// neighbors are adjacent.
pub fn has_ybar(g: &Graph) -> bool {
    (0..g.order()).any(|v| {
        if g.degree(v) != 3 {
            return false;
        }
        let nb: Vec<usize> = g.neighbors(v).collect();
        g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) || g.has_edge(nb[1], nb[2])
    })
}
