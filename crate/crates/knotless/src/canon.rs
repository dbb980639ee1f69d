//! Canonical labeling by equitable-partition refinement with backtracking.
//!
//! The canonical form of a graph is the relabeling whose graph6 bit string
//! (column-major upper triangle) is lexicographically smallest among the
//! leaves of the refinement search tree. Refinement cells are individualized
//! lowest-index-first; that rule is frozen because canonical keys are
//! persisted in catalog and status files.

use crate::graph::Graph;
use crate::graph6::encode_graph6;
use std::collections::BTreeMap;

/// Canonical graph6 bytes; equal keys iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Wrap an already-canonical graph6 string (e.g. read back from a
    /// catalog file). The caller asserts canonicity.
    pub fn from_trusted(s: String) -> CanonicalKey {
        CanonicalKey(s)
    }
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// Maps each vertex of the input to its canonical label.
    pub perm: Vec<usize>,
    /// The relabeled representative the key encodes.
    pub graph: Graph,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_bits: Vec<u64>,
    best_perms: Vec<Vec<usize>>,
}

/// Bits of the column-major upper triangle for the first `k` placed
/// vertices, packed big-endian into u64 blocks.
fn packed_prefix_len(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl<'a> Search<'a> {
    fn run(g: &'a Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = g.order();
        let mut s = Search { g, n, best_bits: Vec::new(), best_perms: Vec::new() };
        let initial = refine(g, vec![(0..n).collect()]);
        s.descend(initial, Vec::new());
        let best = s.best_perms[0].clone();
        (best, s.best_perms)
    }

    /// `placed`: vertices in canonical positions 0..placed.len() so far.
    fn descend(&mut self, partition: Vec<Vec<usize>>, placed: Vec<usize>) {
        // Compare the bit prefix contributed by fully placed cells against
        // the incumbent; prune strictly worse branches.
        let mut placed = placed;
        let mut next_cell = None;
        for (ci, cell) in partition.iter().enumerate() {
            if cell.len() == 1 {
                if next_cell.is_none() {
                    placed.push(cell[0]);
                }
            } else if next_cell.is_none() {
                next_cell = Some(ci);
            }
        }
        if !self.best_perms.is_empty() {
            match self.compare_prefix(&placed) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => {}
            }
        }
        match next_cell {
            None => self.accept_leaf(&placed),
            Some(ci) => {
                let cell = partition[ci].clone();
                for &v in &cell {
                    let mut child = Vec::with_capacity(partition.len() + 1);
                    for (cj, c) in partition.iter().enumerate() {
                        if cj == ci {
                            child.push(vec![v]);
                            let rest: Vec<usize> =
                                c.iter().copied().filter(|&u| u != v).collect();
                            child.push(rest);
                        } else {
                            child.push(c.clone());
                        }
                    }
                    // The decided prefix is recomputed from the refined
                    // partition's leading singleton run on the way down.
                    self.descend(refine(self.g, child), Vec::new());
                }
            }
        }
    }

    /// Lexicographic comparison of the candidate's decided bit prefix with
    /// the incumbent best leaf.
    fn compare_prefix(&self, placed: &[usize]) -> std::cmp::Ordering {
        let nbits = packed_prefix_len(placed.len());
        for (i, chunk) in bit_blocks(self.g, placed).enumerate() {
            let have = (nbits - i * 64).min(64);
            let mask = if have == 64 { u64::MAX } else { !(u64::MAX >> have) };
            let incumbent = self.best_bits.get(i).copied().unwrap_or(0) & mask;
            match (chunk & mask).cmp(&incumbent) {
                std::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        std::cmp::Ordering::Equal
    }

    fn accept_leaf(&mut self, placed: &[usize]) {
        debug_assert_eq!(placed.len(), self.n);
        let bits: Vec<u64> = bit_blocks(self.g, placed).collect();
        let mut perm = vec![0usize; self.n];
        for (pos, &v) in placed.iter().enumerate() {
            perm[v] = pos;
        }
        if self.best_perms.is_empty() || bits < self.best_bits {
            self.best_bits = bits;
            self.best_perms = vec![perm];
        } else if bits == self.best_bits {
            self.best_perms.push(perm);
        }
    }
}

/// Column-major upper-triangle bits of g relabeled so that placed[i] sits at
/// position i, packed big-endian into u64 blocks. Only pairs with both
/// endpoints placed contribute; callers only inspect the decided prefix.
fn bit_blocks<'a>(g: &'a Graph, placed: &'a [usize]) -> impl Iterator<Item = u64> + 'a {
    let total = packed_prefix_len(placed.len());
    let nblocks = total.div_ceil(64);
    let mut bit_index = 0usize;
    let mut pairs = Vec::with_capacity(total);
    for v in 1..placed.len() {
        for u in 0..v {
            pairs.push((placed[u], placed[v]));
        }
    }
    (0..nblocks).map(move |_| {
        let mut word = 0u64;
        for k in 0..64 {
            if bit_index < total {
                let (a, b) = pairs[bit_index];
                if g.has_edge(a, b) {
                    word |= 1 << (63 - k);
                }
                bit_index += 1;
            }
        }
        word
    })
}

/// Equitable refinement: split cells by neighbor counts into every cell
/// until stable. Sub-cells are ordered by ascending count vector, so the
/// result is independent of input cell-member order.
fn refine(g: &Graph, mut partition: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> =
            partition.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(partition.len());
        let mut changed = false;
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let sig: Vec<u32> =
                    masks.iter().map(|&m| (g.neighbors_mask(v) & m).count_ones()).collect();
                groups.entry(sig).or_default().push(v);
            }
            if groups.len() > 1 {
                changed = true;
            }
            for (_, mut members) in groups {
                members.sort_unstable();
                next.push(members);
            }
        }
        partition = next;
        if !changed {
            return partition;
        }
    }
}

/// Canonical form with the relabeling that realizes it.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    if g.order() == 0 {
        return CanonicalForm {
            key: CanonicalKey(encode_graph6(g).unwrap()),
            perm: Vec::new(),
            graph: g.clone(),
        };
    }
    let (perm, _) = Search::run(g);
    let graph = g.relabel(&perm);
    CanonicalForm { key: CanonicalKey(encode_graph6(&graph).unwrap()), perm, graph }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_form(g).key
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_key(g) == canonical_key(h)
}

/// The full automorphism group as permutations (vertex -> image).
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    if g.order() == 0 {
        return vec![Vec::new()];
    }
    let (_, perms) = Search::run(g);
    let p0 = &perms[0];
    let mut inv = vec![vec![0usize; g.order()]; perms.len()];
    for (i, p) in perms.iter().enumerate() {
        for (v, &img) in p.iter().enumerate() {
            inv[i][img] = v;
        }
    }
    let mut auts: Vec<Vec<usize>> = perms
        .iter()
        .enumerate()
        .map(|(i, _)| (0..g.order()).map(|v| inv[i][p0[v]]).collect())
        .collect();
    auts.sort_unstable();
    auts.dedup();
    auts
}

/// Verify that phi maps edges onto edges bijectively.
pub fn is_automorphism(g: &Graph, phi: &[usize]) -> bool {
    if phi.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &img in phi {
        if img >= g.order() || seen[img] {
            return false;
        }
        seen[img] = true;
    }
    g.edges().all(|(u, v)| g.has_edge(phi[u], phi[v]))
}

/// Set of isomorphism classes with one canonical representative each.
/// Iteration order is lexicographic in the canonical key, so any sequence
/// of inserts producing the same class set enumerates identically.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct IsoSet {
    reps: BTreeMap<CanonicalKey, Graph>,
}

impl IsoSet {
    pub fn new() -> IsoSet {
        IsoSet::default()
    }

    /// Insert a graph; returns its key and whether the class was new.
    pub fn insert(&mut self, g: &Graph) -> (CanonicalKey, bool) {
        let form = canonical_form(g);
        let fresh = !self.reps.contains_key(&form.key);
        if fresh {
            self.reps.insert(form.key.clone(), form.graph);
        }
        (form.key, fresh)
    }

    pub fn insert_canonical(&mut self, key: CanonicalKey, rep: Graph) -> bool {
        self.reps.insert(key, rep).is_none()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.reps.contains_key(key)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<&Graph> {
        self.reps.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &Graph)> {
        self.reps.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.reps.keys()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.reps.values()
    }

    pub fn merge(&mut self, other: IsoSet) {
        for (k, g) in other.reps {
            self.reps.entry(k).or_insert(g);
        }
    }
}

impl FromIterator<Graph> for IsoSet {
    fn from_iter<I: IntoIterator<Item = Graph>>(iter: I) -> IsoSet {
        let mut s = IsoSet::new();
        for g in iter {
            s.insert(&g);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::decode_graph6;

    /// Brute-force canonical key: minimum over all n! relabelings.
    fn brute_key(g: &Graph) -> CanonicalKey {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.order())
            .into_iter()
            .map(|p| CanonicalKey(encode_graph6(&g.relabel(&p)).unwrap()))
            .min()
            .unwrap()
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let m = n * (n - 1) / 2;
        (0u64..(1 << m))
            .map(|bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits >> k & 1 == 1 {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges)
            })
            .collect()
    }

    #[test]
    fn complete_invariant_on_all_order_4_graphs() {
        // Keys must induce exactly the isomorphism partition the n!-search
        // oracle induces.
        let gs = all_graphs(4);
        let fast: Vec<_> = gs.iter().map(canonical_key).collect();
        let slow: Vec<_> = gs.iter().map(brute_key).collect();
        for i in 0..gs.len() {
            for j in (i + 1)..gs.len() {
                assert_eq!(fast[i] == fast[j], slow[i] == slow[j], "{:?} vs {:?}", gs[i], gs[j]);
            }
        }
    }

    #[test]
    fn complete_invariant_on_sampled_order_5_graphs() {
        let gs: Vec<Graph> =
            all_graphs(5).into_iter().enumerate().filter(|(i, _)| i % 11 == 0).map(|(_, g)| g).collect();
        let fast: Vec<_> = gs.iter().map(canonical_key).collect();
        let slow: Vec<_> = gs.iter().map(brute_key).collect();
        for i in 0..gs.len() {
            for j in (i + 1)..gs.len() {
                assert_eq!(fast[i] == fast[j], slow[i] == slow[j], "{:?} vs {:?}", gs[i], gs[j]);
            }
        }
    }

    #[test]
    fn k33_and_prism_have_distinct_keys() {
        let k33 = Graph::complete_multipartite(&[3, 3]);
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]);
        assert_eq!(k33.degree_sequence(), prism.degree_sequence());
        assert_ne!(canonical_key(&k33), canonical_key(&prism));
    }

    #[test]
    fn recovery_of_named_graph_under_relabeling() {
        let g2 = decode_graph6("JObFF`wN?{?").unwrap();
        let h2 = decode_graph6("J?bFF`wN?{?").unwrap();
        let minus = g2.delete_edge(0, 2).unwrap();
        assert!(is_isomorphic(&minus, &h2));
        assert!(!is_isomorphic(&g2, &h2));
    }

    #[test]
    fn automorphism_group_sizes() {
        assert_eq!(automorphisms(&Graph::complete(4)).len(), 24);
        assert_eq!(automorphisms(&Graph::cycle(5)).len(), 10);
        // Petersen graph: Kneser K(5,2) construction.
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
        let petersen = Graph::from_edges(10, &edges);
        assert_eq!(automorphisms(&petersen).len(), 120);
    }

    #[test]
    fn automorphisms_form_a_group() {
        let g = decode_graph6("J@yaig[gv@?").unwrap();
        let auts = automorphisms(&g);
        assert!(auts.len() > 1, "expected a non-trivial symmetry");
        for a in &auts {
            assert!(is_automorphism(&g, a));
            let inv: Vec<usize> = {
                let mut v = vec![0; a.len()];
                for (x, &y) in a.iter().enumerate() {
                    v[y] = x;
                }
                v
            };
            assert!(auts.contains(&inv));
            for b in &auts {
                let comp: Vec<usize> = (0..a.len()).map(|x| b[a[x]]).collect();
                assert!(auts.contains(&comp));
            }
        }
    }

    #[test]
    fn canonical_perm_realizes_key() {
        for s in ["JObFF`wN?{?", "K?bAF`wN?{SO", "KSrb`OTO?a`S"] {
            let g = decode_graph6(s).unwrap();
            let form = canonical_form(&g);
            assert_eq!(encode_graph6(&g.relabel(&form.perm)).unwrap(), form.key.as_str());
            assert_eq!(g.relabel(&form.perm), form.graph);
        }
    }

    #[test]
    fn iso_set_counts_classes() {
        let mut s = IsoSet::new();
        s.insert(&Graph::cycle(5));
        s.insert(&Graph::cycle(5).relabel(&[3, 1, 4, 0, 2]));
        s.insert(&Graph::complete(5));
        assert_eq!(s.len(), 2);
    }
}
