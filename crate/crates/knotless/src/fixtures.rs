//! Named graphs used throughout the toolkit: classical obstruction-set
//! members, the published size-22/23 search graphs, and members of the
//! K7 family recovered structurally rather than from hard-coded tables.

use crate::canon::canonical_key;
use crate::exec::ExecMode;
use crate::family::{family_closure, Family};
use crate::graph::Graph;
use crate::graph6::decode_graph6;

pub fn petersen() -> Graph {
    // Kneser graph K(5,2): disjoint 2-subsets of a 5-set.
    let pairs: Vec<(usize, usize)> =
        (0..5).flat_map(|a| ((a + 1)..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for i in 0..10 {
        for j in (i + 1)..10 {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, &edges)
}

pub fn heawood() -> Graph {
    // Point-line incidence graph of the Fano plane: points 0..=6,
    // lines 7..=13.
    const LINES: [[usize; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let mut edges = Vec::new();
    for (i, line) in LINES.iter().enumerate() {
        for &p in line {
            edges.push((p, 7 + i));
        }
    }
    Graph::from_edges(14, &edges)
}

pub const H1_G6: &str = "J?B@xzoyEo?";
pub const H2_G6: &str = "J?bFF`wN?{?";

/// First of the two 4-regular (11,22) graphs whose expansions yield the
/// size-23 obstructions.
pub fn h1() -> Graph {
    decode_graph6(H1_G6).unwrap()
}

/// Second of the two; G2 - (0,2) and G3 / (6,11) both recover it.
pub fn h2() -> Graph {
    decode_graph6(H2_G6).unwrap()
}

pub const G1_EDGES: [(usize, usize); 23] = [
    (0, 4),
    (0, 5),
    (0, 9),
    (0, 10),
    (1, 4),
    (1, 6),
    (1, 7),
    (1, 10),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 9),
    (2, 10),
    (3, 6),
    (3, 7),
    (3, 8),
    (4, 8),
    (5, 6),
    (5, 7),
    (5, 8),
    (6, 9),
    (7, 9),
    (8, 10),
];

pub const G2_EDGES: [(usize, usize); 23] = [
    (0, 2),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 8),
    (2, 6),
    (2, 7),
    (2, 8),
    (2, 9),
    (3, 7),
    (3, 8),
    (3, 9),
    (3, 10),
    (4, 8),
    (4, 9),
    (4, 10),
    (5, 9),
    (5, 10),
    (6, 10),
];

pub const G3_EDGES: [(usize, usize); 23] = [
    (0, 4),
    (0, 5),
    (0, 7),
    (0, 11),
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 8),
    (2, 7),
    (2, 8),
    (2, 9),
    (2, 11),
    (3, 7),
    (3, 8),
    (3, 9),
    (3, 10),
    (4, 8),
    (4, 9),
    (4, 10),
    (5, 9),
    (5, 10),
    (6, 10),
    (6, 11),
];

/// Size-23 obstruction on 11 vertices; H1 + (2,5).
pub fn g1() -> Graph {
    Graph::from_edges(11, &G1_EDGES)
}

/// Size-23 obstruction on 11 vertices; H2 + (0,2).
pub fn g2() -> Graph {
    Graph::from_edges(11, &G2_EDGES)
}

/// Size-23 obstruction on 12 vertices; triangle move on G2 at (0,2,6).
pub fn g3() -> Graph {
    Graph::from_edges(12, &G3_EDGES)
}

/// The six size-22 graphs whose ancestors make up the 29 knotlessly
/// embeddable members of the H8+e family. T1 and T2 reduce to an
/// order-11 graph by contracting at their degree-2 vertex, T3-T5 to an
/// order-12 graph; T6 carries its own embedding.
pub const T_G6: [&str; 6] = [
    "KSrb`OTO?a`S",
    "KOtA`_LWCMSS",
    "LSb`@OLOASASCS",
    "LSrbP?CO?dAIAW",
    "L?tBP_SODGOS_T",
    "KSb``OMSQSAK",
];

pub fn t_graphs() -> Vec<Graph> {
    T_G6.iter().map(|s| decode_graph6(s).unwrap()).collect()
}

/// The nine order-10 obstructions found by exhaustive search, as
/// (size, graph6, edge list) exactly as published.
pub const NINE_ORDER10: [(usize, &str, &[(usize, usize)]); 9] = [
    (
        25,
        "ICrfbp{No",
        &[
            (0, 3), (0, 4), (0, 5), (0, 6), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
            (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (3, 6), (3, 7), (3, 8),
            (3, 9), (4, 7), (4, 8), (4, 9), (5, 8), (5, 9), (6, 9), (7, 9),
        ],
    ),
    (
        25,
        "ICrbrrqNg",
        &[
            (0, 3), (0, 4), (0, 5), (0, 8), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
            (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (3, 6), (3, 7), (3, 8),
            (3, 9), (4, 6), (4, 7), (4, 9), (5, 9), (6, 8), (6, 9), (8, 9),
        ],
    ),
    (
        25,
        "ICrbrriVg",
        &[
            (0, 3), (0, 4), (0, 5), (0, 8), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
            (1, 9), (2, 5), (2, 6), (2, 7), (2, 8), (3, 6), (3, 7), (3, 9),
            (4, 6), (4, 7), (4, 8), (4, 9), (5, 9), (6, 8), (6, 9), (8, 9),
        ],
    ),
    (
        25,
        "ICrbrriNW",
        &[
            (0, 3), (0, 4), (0, 5), (0, 8), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8),
            (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (3, 6), (3, 7), (3, 9),
            (4, 6), (4, 7), (4, 8), (4, 9), (5, 9), (6, 8), (7, 9), (8, 9),
        ],
    ),
    (
        27,
        "ICfvRzwfo",
        &[
            (0, 3), (0, 4), (0, 5), (0, 6), (0, 8), (0, 9), (1, 5), (1, 6), (1, 7),
            (1, 8), (2, 5), (2, 6), (2, 7), (2, 8), (3, 4), (3, 5), (3, 7), (3, 8),
            (3, 9), (4, 6), (4, 7), (4, 8), (4, 9), (5, 7), (5, 9), (6, 9), (7, 9),
        ],
    ),
    (
        29,
        "ICfvRr^vo",
        &[
            (0, 3), (0, 4), (0, 5), (0, 6), (0, 8), (0, 9), (1, 5), (1, 6), (1, 7), (1, 8),
            (1, 9), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (3, 7), (3, 8), (3, 9), (4, 6),
            (4, 7), (4, 8), (4, 9), (5, 8), (5, 9), (6, 8), (6, 9), (7, 8), (7, 9),
        ],
    ),
    (
        30,
        "IQjuvrm^o",
        &[
            (0, 2), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (1, 3), (1, 5), (1, 6), (1, 7),
            (1, 8), (1, 9), (2, 4), (2, 5), (2, 7), (2, 8), (2, 9), (3, 5), (3, 6), (3, 7),
            (3, 9), (4, 6), (4, 7), (4, 8), (4, 9), (5, 8), (5, 9), (6, 8), (6, 9), (7, 9),
        ],
    ),
    (
        31,
        "IQjur~m^o",
        &[
            (0, 2), (0, 4), (0, 5), (0, 6), (0, 8), (1, 3), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9),
            (2, 4), (2, 5), (2, 7), (2, 8), (2, 9), (3, 5), (3, 6), (3, 7), (3, 9), (4, 6),
            (4, 7), (4, 8), (4, 9), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9), (7, 9),
        ],
    ),
    (
        32,
        "IEznfvm|o",
        &[
            (0, 3), (0, 4), (0, 5), (0, 6), (0, 7), (0, 8), (0, 9), (1, 3), (1, 4), (1, 5), (1, 6),
            (1, 7), (1, 8), (1, 9), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (3, 6), (3, 7),
            (3, 9), (4, 5), (4, 7), (4, 8), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9), (7, 9),
        ],
    ),
];

pub fn nine_order_ten() -> Vec<Graph> {
    NINE_ORDER10.iter().map(|(_, s, _)| decode_graph6(s).unwrap()).collect()
}

/// The K7 family (equivalently the Heawood graph's): 20 cousins of
/// size 21.
pub fn k7_family() -> Family {
    family_closure(&Graph::complete(7), ExecMode::Parallel)
}

/// Unique order-8 member of the K7 family.
pub fn h8(fam: &Family) -> Graph {
    unique_member(fam, |g| g.order() == 8)
}

/// H8 plus an edge joining two of its three degree-5 vertices; the three
/// choices are equivalent under its symmetries.
pub fn h8_plus_e(fam: &Family) -> Graph {
    let h = h8(fam);
    let five: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) == 5).collect();
    h.with_edge(five[0], five[1])
}

/// The two order-9 members descended from K7, each with exactly two
/// degree-3 vertices. Joining those vertices puts one graph's result in
/// the H8+e family (that graph is F9) while the other (H9) starts its
/// own five-member family.
pub fn order9_ik_pair(fam: &Family) -> (Graph, Graph) {
    let desc = fam.descendants(&canonical_key(&Graph::complete(7)));
    let mut found: Vec<Graph> = fam
        .members()
        .filter(|r| r.graph.order() == 9 && desc.contains(&r.key))
        .map(|r| r.graph.clone())
        .collect();
    assert_eq!(found.len(), 2);
    let second = found.pop().unwrap();
    (found.pop().unwrap(), second)
}

/// Adds the edge joining a graph's two degree-3 vertices.
pub fn join_degree3_pair(g: &Graph) -> Graph {
    let three: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 3).collect();
    assert_eq!(three.len(), 2);
    g.with_edge(three[0], three[1])
}

/// H9 + e: seeds the five-member family. Distinguished from F9 + e by
/// not being a cousin of H8 + e.
pub fn h9_plus_e(fam: &Family) -> Graph {
    let h8e_family = family_closure(&h8_plus_e(fam), ExecMode::Parallel);
    let (a, b) = order9_ik_pair(fam);
    let ae = join_degree3_pair(&a);
    if h8e_family.contains(&canonical_key(&ae)) {
        join_degree3_pair(&b)
    } else {
        ae
    }
}

/// Heawood graph plus an edge between vertices at distance 3; seeds the
/// 110-member family. (A distance-2 edge lands in the H8+e family
/// instead.)
pub fn heawood_plus_distance3_edge() -> Graph {
    let h = heawood();
    let (u, v) = h
        .non_edges()
        .into_iter()
        .find(|&(u, v)| h.distance(u, v) == 3)
        .unwrap();
    h.with_edge(u, v)
}

/// The six members of the K7 family that are not descendants of K7 (the
/// knotlessly embeddable ones), sorted by (order, key).
pub fn six_nik_heawood(fam: &Family) -> Vec<Graph> {
    let desc = fam.descendants(&canonical_key(&Graph::complete(7)));
    let mut out: Vec<Graph> = fam
        .members()
        .filter(|r| !desc.contains(&r.key))
        .map(|r| r.graph.clone())
        .collect();
    out.sort_by_key(|g| (g.order(), canonical_key(g)));
    out
}

fn unique_member(fam: &Family, pred: impl Fn(&Graph) -> bool) -> Graph {
    let mut hits = fam.members().filter(|r| pred(&r.graph));
    let first = hits.next().expect("no member matches").graph.clone();
    assert!(hits.next().is_none(), "member is not unique");
    first
}
