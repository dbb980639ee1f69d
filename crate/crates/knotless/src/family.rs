//! Closure of a graph under the triangle-Y exchange moves, with the
//! parent/child structure the moves induce.

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::{canonical_form, CanonicalKey, IsoSet};
use crate::exec::ExecMode;
use crate::graph::Graph;
use crate::moves::{tri_to_y, y_to_tri};

/// One family member, stored as its canonical representative.
///
/// `children` are the canonical keys reachable by one triangle-to-Y move,
/// `parents` those reachable by one Y-to-triangle move; the two relations
/// are mutually inverse across the family.
#[derive(Debug, Clone)]
pub struct FamilyGraphRecord {
    pub key: CanonicalKey,
    pub graph: Graph,
    pub parents: Vec<CanonicalKey>,
    pub children: Vec<CanonicalKey>,
}

#[derive(Debug, Clone)]
pub struct Family {
    seed: CanonicalKey,
    members: BTreeMap<CanonicalKey, FamilyGraphRecord>,
}

/// Closure of `seed` under both moves.
pub fn family_closure(seed: &Graph, mode: ExecMode) -> Family {
    let seed_form = canonical_form(seed);
    let seed_key = seed_form.key.clone();
    let mut members: BTreeMap<CanonicalKey, FamilyGraphRecord> = BTreeMap::new();
    let mut frontier: Vec<(CanonicalKey, Graph)> = vec![(seed_key.clone(), seed_form.graph)];
    while !frontier.is_empty() {
        let expanded = mode.map(frontier, |(key, graph)| {
            let (parents, children) = neighbors_under_moves(&graph);
            (key, graph, parents, children)
        });
        let mut next: Vec<(CanonicalKey, Graph)> = Vec::new();
        for (key, graph, parents, children) in expanded {
            for (nkey, ngraph) in parents.iter().chain(children.iter()) {
                if !members.contains_key(nkey)
                    && !next.iter().any(|(k, _)| k == nkey)
                    && *nkey != key
                {
                    next.push((nkey.clone(), ngraph.clone()));
                }
            }
            members.insert(
                key.clone(),
                FamilyGraphRecord {
                    key,
                    graph,
                    parents: dedup_keys(parents),
                    children: dedup_keys(children),
                },
            );
        }
        frontier = next.into_iter().filter(|(k, _)| !members.contains_key(k)).collect();
    }
    for rec in members.values() {
        for c in &rec.children {
            debug_assert!(members[c].parents.contains(&rec.key));
        }
        for p in &rec.parents {
            debug_assert!(members[p].children.contains(&rec.key));
        }
    }
    Family { seed: seed_key, members }
}

/// Reflexive closure of `seed` under the triangle-to-Y move alone,
/// stopping early if `until` accepts a member. Returns the members seen
/// and whether `until` fired.
pub fn descendant_closure(
    seed: &Graph,
    mode: ExecMode,
    until: impl Fn(&Graph) -> bool + Sync,
) -> (IsoSet, bool) {
    let mut out = IsoSet::new();
    let seed_form = canonical_form(seed);
    if until(&seed_form.graph) {
        out.insert_canonical(seed_form.key, seed_form.graph);
        return (out, true);
    }
    let mut frontier: Vec<(CanonicalKey, Graph)> = vec![(seed_form.key, seed_form.graph)];
    while !frontier.is_empty() {
        let expanded = mode.map(frontier, |(key, graph)| {
            let mut children = Vec::new();
            let mut hit = false;
            for t in graph.triangles() {
                let child = tri_to_y(&graph, t);
                hit = hit || until(&child);
                let form = canonical_form(&child);
                children.push((form.key, form.graph));
            }
            (key, graph, children, hit)
        });
        let mut next: Vec<(CanonicalKey, Graph)> = Vec::new();
        let mut stop = false;
        for (key, graph, children, hit) in expanded {
            stop = stop || hit;
            out.insert_canonical(key, graph);
            for (ckey, cgraph) in children {
                if !out.contains(&ckey) && !next.iter().any(|(k, _)| k == &ckey) {
                    next.push((ckey, cgraph));
                }
            }
        }
        if stop {
            for (key, graph) in next {
                out.insert_canonical(key, graph);
            }
            return (out, true);
        }
        frontier = next;
    }
    (out, false)
}

fn neighbors_under_moves(g: &Graph) -> (Vec<(CanonicalKey, Graph)>, Vec<(CanonicalKey, Graph)>) {
    let mut parents = Vec::new();
    for v in 0..g.order() {
        if let Some(p) = y_to_tri(g, v) {
            let form = canonical_form(&p);
            parents.push((form.key, form.graph));
        }
    }
    let mut children = Vec::new();
    for t in g.triangles() {
        let form = canonical_form(&tri_to_y(g, t));
        children.push((form.key, form.graph));
    }
    (parents, children)
}

fn dedup_keys(mut pairs: Vec<(CanonicalKey, Graph)>) -> Vec<CanonicalKey> {
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    pairs.dedup_by(|a, b| a.0 == b.0);
    pairs.into_iter().map(|(k, _)| k).collect()
}

impl Family {
    pub fn seed(&self) -> &CanonicalKey {
        &self.seed
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.members.contains_key(key)
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<&FamilyGraphRecord> {
        self.members.get(key)
    }

    /// Members in canonical-key order.
    pub fn members(&self) -> impl Iterator<Item = &FamilyGraphRecord> {
        self.members.values()
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.members.keys()
    }

    /// Keys reachable by repeated triangle-to-Y moves, including `key`.
    pub fn descendants(&self, key: &CanonicalKey) -> BTreeSet<CanonicalKey> {
        self.reachable(key, |r| &r.children)
    }

    /// Keys reachable by repeated Y-to-triangle moves, including `key`.
    pub fn ancestors(&self, key: &CanonicalKey) -> BTreeSet<CanonicalKey> {
        self.reachable(key, |r| &r.parents)
    }

    /// Members of `keys` with no strict descendant inside `keys`. Every
    /// member of `keys` has at least one descendant among the result.
    pub fn sinks_within(&self, keys: &BTreeSet<CanonicalKey>) -> Vec<CanonicalKey> {
        keys.iter()
            .filter(|k| {
                self.descendants(k).iter().all(|d| d == *k || !keys.contains(d))
            })
            .cloned()
            .collect()
    }

    fn reachable(
        &self,
        key: &CanonicalKey,
        step: impl Fn(&FamilyGraphRecord) -> &Vec<CanonicalKey>,
    ) -> BTreeSet<CanonicalKey> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![key.clone()];
        while let Some(k) = stack.pop() {
            let rec = self.members.get(&k).expect("key belongs to the family");
            if seen.insert(k) {
                stack.extend(step(rec).iter().cloned());
            }
        }
        seen
    }

    /// One line per member, in key order:
    /// `canonical-graph6 TAB parent-keys TAB child-keys`,
    /// keys within a field comma-separated.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for rec in self.members.values() {
            out.push_str(rec.key.as_str());
            out.push('\t');
            out.push_str(&join_keys(&rec.parents));
            out.push('\t');
            out.push_str(&join_keys(&rec.children));
            out.push('\n');
        }
        out
    }
}

fn join_keys(keys: &[CanonicalKey]) -> String {
    keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(",")
}

#[derive(Debug, thiserror::Error)]
pub enum DumpError {
    #[error("dump holds no records")]
    Empty,
    #[error("line {line}: expected three tab-separated fields")]
    BadRecord { line: usize },
    #[error("line {line}: {source}")]
    BadGraph {
        line: usize,
        source: crate::graph6::Graph6Error,
    },
    #[error("line {line}: key is not in canonical form")]
    NotCanonical { line: usize },
    #[error("line {line}: key repeats an earlier record")]
    DuplicateKey { line: usize },
    #[error("line {line}: member size differs from the first record")]
    SizeMismatch { line: usize },
    #[error("member {key} has a move neighbor outside the dump; the set is not closed")]
    NotClosed { key: String },
    #[error("member {key}: recorded parent/child keys disagree with the moves")]
    WrongLinks { key: String },
    #[error("records do not form one connected family")]
    Disconnected,
}

impl Family {
    /// Rebuilds a family from its `dump` text. Every record is revalidated:
    /// keys must be canonical and unique, all members share one size, the
    /// recorded parent/child links must match recomputed moves, every move
    /// neighbor must itself be a record, and the cousin graph must be
    /// connected. The first key in order serves as the nominal seed; any
    /// member seeds the same closure.
    pub fn from_dump(text: &str) -> Result<Family, DumpError> {
        let mut members: BTreeMap<CanonicalKey, FamilyGraphRecord> = BTreeMap::new();
        let mut size = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = raw.split('\t').collect();
            let [key_str, parents_str, children_str] = fields[..] else {
                return Err(DumpError::BadRecord { line });
            };
            let graph = crate::graph6::decode_graph6(key_str)
                .map_err(|source| DumpError::BadGraph { line, source })?;
            let key = canonical_form(&graph).key;
            if key.as_str() != key_str {
                return Err(DumpError::NotCanonical { line });
            }
            if *size.get_or_insert(graph.size()) != graph.size() {
                return Err(DumpError::SizeMismatch { line });
            }
            let record = FamilyGraphRecord {
                key: key.clone(),
                graph,
                parents: split_keys(parents_str),
                children: split_keys(children_str),
            };
            if members.insert(key, record).is_some() {
                return Err(DumpError::DuplicateKey { line });
            }
        }
        if members.is_empty() {
            return Err(DumpError::Empty);
        }

        for rec in members.values() {
            let (parents, children) = neighbors_under_moves(&rec.graph);
            let parents = dedup_keys(parents);
            let children = dedup_keys(children);
            for n in parents.iter().chain(children.iter()) {
                if !members.contains_key(n) {
                    return Err(DumpError::NotClosed { key: rec.key.as_str().to_owned() });
                }
            }
            if parents != rec.parents || children != rec.children {
                return Err(DumpError::WrongLinks { key: rec.key.as_str().to_owned() });
            }
        }

        let seed = members.keys().next().unwrap().clone();
        let mut seen = BTreeSet::new();
        let mut stack = vec![seed.clone()];
        while let Some(k) = stack.pop() {
            if !seen.insert(k.clone()) {
                continue;
            }
            let rec = &members[&k];
            stack.extend(rec.parents.iter().chain(rec.children.iter()).cloned());
        }
        if seen.len() != members.len() {
            return Err(DumpError::Disconnected);
        }
        Ok(Family { seed, members })
    }
}

fn split_keys(field: &str) -> Vec<CanonicalKey> {
    let mut keys: Vec<CanonicalKey> = field
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| CanonicalKey::from_trusted(s.to_owned()))
        .collect();
    keys.sort();
    keys
}
