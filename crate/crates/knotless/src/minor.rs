//! One-step minors, minor witnesses, and a minimality audit that tags each
//! one-step minor with the evidence that it embeds without knots.

use std::fmt::Write as _;

use thiserror::Error;

use crate::apex::{k_apex, ApexWitness};
use crate::canon::{canonical_key, CanonicalKey, IsoSet};
use crate::exec::ExecMode;
use crate::family::family_closure;
use crate::graph::Graph;
use crate::graph6::decode_graph6;

/// Every graph obtained by one edge deletion or one edge contraction,
/// isolated vertices dropped, up to isomorphism.
pub fn one_step_minors(g: &Graph) -> IsoSet {
    let mut out = IsoSet::new();
    for (u, v) in g.edges() {
        out.insert(&g.delete_edge(u, v).unwrap().drop_isolated());
        out.insert(&g.contract_edge(u, v).unwrap().drop_isolated());
    }
    out
}

/// One reduction step of a minor witness, in host-relative labels at the
/// time the step applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorOp {
    Contract(usize, usize),
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
}

/// Script demonstrating that `target` is a minor of some host: apply the
/// ops in order, then find the target as a subgraph of what remains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub ops: Vec<MinorOp>,
    pub target: Graph,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessParseError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("missing TARGET section")]
    MissingTarget,
}

impl MinorWitness {
    /// Applies the ops to `host`; None if any op is invalid there.
    pub fn apply(&self, host: &Graph) -> Option<Graph> {
        let mut g = host.clone();
        for op in &self.ops {
            g = match *op {
                MinorOp::Contract(u, v) => g.contract_edge(u, v).ok()?,
                MinorOp::DeleteVertex(v) => g.delete_vertex(v).ok()?,
                MinorOp::DeleteEdge(u, v) => g.delete_edge(u, v).ok()?,
            };
        }
        Some(g)
    }

    /// Serialize as one op per line, then the target as graph6.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for op in &self.ops {
            match *op {
                MinorOp::Contract(u, v) => writeln!(out, "CONTRACT {u} {v}").unwrap(),
                MinorOp::DeleteVertex(v) => writeln!(out, "DELETE-V {v}").unwrap(),
                MinorOp::DeleteEdge(u, v) => writeln!(out, "DELETE-E {u} {v}").unwrap(),
            }
        }
        let g6 = crate::graph6::encode_graph6(&self.target).expect("target fits graph6");
        writeln!(out, "TARGET {g6}").unwrap();
        out
    }

    pub fn parse(text: &str) -> Result<MinorWitness, WitnessParseError> {
        let mut ops = Vec::new();
        let mut target = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let head = it.next().unwrap();
            let num = |it: &mut dyn Iterator<Item = &str>| -> Result<usize, WitnessParseError> {
                it.next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| WitnessParseError::Malformed(i + 1, line.to_string()))
            };
            match head {
                "CONTRACT" => {
                    let u = num(&mut it)?;
                    let v = num(&mut it)?;
                    ops.push(MinorOp::Contract(u, v));
                }
                "DELETE-V" => {
                    let v = num(&mut it)?;
                    ops.push(MinorOp::DeleteVertex(v));
                }
                "DELETE-E" => {
                    let u = num(&mut it)?;
                    let v = num(&mut it)?;
                    ops.push(MinorOp::DeleteEdge(u, v));
                }
                "TARGET" => {
                    let g6 = it
                        .next()
                        .ok_or_else(|| WitnessParseError::Malformed(i + 1, line.to_string()))?;
                    target = Some(decode_graph6(g6).map_err(|e| {
                        WitnessParseError::Malformed(i + 1, format!("{line}: {e}"))
                    })?);
                }
                _ => return Err(WitnessParseError::Malformed(i + 1, line.to_string())),
            }
            if it.next().is_some() {
                return Err(WitnessParseError::Malformed(i + 1, line.to_string()));
            }
        }
        Ok(MinorWitness { ops, target: target.ok_or(WitnessParseError::MissingTarget)? })
    }
}

/// Injective map from `pattern` into `host` preserving pattern edges.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    if host.order() < pattern.order() || host.size() < pattern.size() {
        return false;
    }
    // Match pattern vertices in descending-degree order to fail fast.
    let mut order: Vec<usize> = (0..pattern.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    fn extend(
        host: &Graph,
        pattern: &Graph,
        order: &[usize],
        map: &mut Vec<(usize, usize)>,
        used: &mut u64,
    ) -> bool {
        if map.len() == order.len() {
            return true;
        }
        let pv = order[map.len()];
        'cand: for cand in 0..host.order() {
            if *used >> cand & 1 == 1 || host.degree(cand) < pattern.degree(pv) {
                continue;
            }
            for &(pu, hu) in map.iter() {
                if pattern.has_edge(pu, pv) && !host.has_edge(hu, cand) {
                    continue 'cand;
                }
            }
            map.push((pv, cand));
            *used |= 1 << cand;
            if extend(host, pattern, order, map, used) {
                return true;
            }
            map.pop();
            *used &= !(1 << cand);
        }
        false
    }
    extend(host, pattern, &order, &mut Vec::new(), &mut 0)
}

/// True when the ops apply cleanly and the stated target appears in the
/// reduced graph as a subgraph (up to relabeling).
pub fn verify_minor_witness(host: &Graph, witness: &MinorWitness) -> bool {
    match witness.apply(host) {
        Some(reduced) => contains_subgraph(&reduced, &witness.target),
        None => false,
    }
}

/// How a one-step minor was shown to embed knotlessly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotlessEvidence {
    /// The minor itself is 2-apex.
    TwoApex(ApexWitness),
    /// Some triangle-move descendant of the minor is 2-apex; the upward
    /// closure rule transfers knotless embeddability to the minor.
    TwoApexDescendant(CanonicalKey),
    /// The minor's canonical key appears in the supplied catalog.
    Catalog,
    Unresolved,
}

#[derive(Debug, Clone)]
pub struct MinorAudit {
    pub key: CanonicalKey,
    pub graph: Graph,
    pub evidence: KnotlessEvidence,
}

#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub minors: Vec<MinorAudit>,
}

impl MinimalityReport {
    pub fn unresolved(&self) -> impl Iterator<Item = &MinorAudit> {
        self.minors
            .iter()
            .filter(|m| m.evidence == KnotlessEvidence::Unresolved)
    }

    pub fn all_resolved(&self) -> bool {
        self.unresolved().next().is_none()
    }
}

/// Audits every one-step minor of `g` for knotless embeddability, trying
/// the direct 2-apex test, then 2-apex descendants, then the catalog.
pub fn audit_minimality(
    g: &Graph,
    nik_catalog: impl Fn(&CanonicalKey) -> bool + Sync,
    mode: ExecMode,
) -> MinimalityReport {
    let reps: Vec<(CanonicalKey, Graph)> =
        one_step_minors(g).iter().map(|(k, h)| (k.clone(), h.clone())).collect();
    let minors = mode.map(reps, |(key, graph)| {
        let evidence = if let Some(w) = k_apex(&graph, 2) {
            KnotlessEvidence::TwoApex(w)
        } else if nik_catalog(&key) {
            KnotlessEvidence::Catalog
        } else {
            let fam = family_closure(&graph, ExecMode::Sequential);
            let mut found = None;
            for d in fam.descendants(&key) {
                if d != key && k_apex(&fam.get(&d).unwrap().graph, 2).is_some() {
                    found = Some(d);
                    break;
                }
            }
            match found {
                Some(d) => KnotlessEvidence::TwoApexDescendant(d),
                None => KnotlessEvidence::Unresolved,
            }
        };
        MinorAudit { key, graph, evidence }
    });
    MinimalityReport { minors }
}

/// Reads a catalog file of `canonical-graph6 TAB evidence` lines.
pub fn parse_catalog(text: &str) -> Result<Vec<(CanonicalKey, String)>, CatalogError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (g6, evidence) = line
            .split_once('\t')
            .ok_or_else(|| CatalogError::Malformed(i + 1, line.to_string()))?;
        let g = decode_graph6(g6).map_err(|e| CatalogError::Malformed(i + 1, e.to_string()))?;
        let key = canonical_key(&g);
        if key.as_str() != g6 {
            return Err(CatalogError::NotCanonical(i + 1, g6.to_string()));
        }
        out.push((key, evidence.to_string()));
    }
    Ok(out)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("line {0}: malformed catalog entry: {1}")]
    Malformed(usize, String),
    #[error("line {0}: graph6 string is not in canonical form: {1}")]
    NotCanonical(usize, String),
    #[error("graph appears with conflicting evidence: {0}")]
    ConflictingEvidence(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_step_minor_counts_on_symmetric_graphs() {
        assert_eq!(one_step_minors(&Graph::complete(5)).len(), 2);
        assert_eq!(one_step_minors(&Graph::cycle(5)).len(), 2);
        assert_eq!(one_step_minors(&Graph::complete_multipartite(&[3, 3])).len(), 2);
    }

    #[test]
    fn isolated_vertices_are_dropped() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        for h in one_step_minors(&star).graphs() {
            assert!(h.degrees().iter().all(|&d| d > 0));
        }
    }

    #[test]
    fn witness_round_trip_and_verification() {
        let w = MinorWitness {
            ops: vec![MinorOp::Contract(0, 1), MinorOp::DeleteVertex(0)],
            target: Graph::complete(4),
        };
        let text = w.to_text();
        assert_eq!(MinorWitness::parse(&text).unwrap(), w);
        assert!(verify_minor_witness(&Graph::complete(6), &w));
        // Subgraph containment, not equality: K5 remains after one
        // contraction and contains K4.
        let loose = MinorWitness {
            ops: vec![MinorOp::Contract(0, 1)],
            target: Graph::complete(4),
        };
        assert!(verify_minor_witness(&Graph::complete(6), &loose));
        // K7 is not a minor of K6.
        let bogus = MinorWitness { ops: vec![], target: Graph::complete(7) };
        assert!(!verify_minor_witness(&Graph::complete(6), &bogus));
        // Ops must apply: (0,1) is no longer an edge after deletion.
        let stale = MinorWitness {
            ops: vec![MinorOp::DeleteEdge(0, 1), MinorOp::DeleteEdge(0, 1)],
            target: Graph::complete(3),
        };
        assert!(!verify_minor_witness(&Graph::complete(6), &stale));
    }

    #[test]
    fn witness_parse_rejects_garbage() {
        assert!(matches!(
            MinorWitness::parse("CONTRACT 0\nTARGET ?"),
            Err(WitnessParseError::Malformed(1, _))
        ));
        assert!(matches!(
            MinorWitness::parse("CONTRACT 0 1"),
            Err(WitnessParseError::MissingTarget)
        ));
        assert!(matches!(
            MinorWitness::parse("SQUASH 0 1\nTARGET ?"),
            Err(WitnessParseError::Malformed(1, _))
        ));
    }

    #[test]
    fn subgraph_containment_basics() {
        let k5 = Graph::complete(5);
        assert!(contains_subgraph(&k5, &Graph::cycle(5)));
        assert!(contains_subgraph(&k5, &Graph::complete(4)));
        assert!(!contains_subgraph(&Graph::cycle(5), &Graph::complete(3)));
        let petersen_free = Graph::complete_multipartite(&[3, 3]);
        assert!(!contains_subgraph(&petersen_free, &Graph::complete(3)));
        assert!(contains_subgraph(&petersen_free, &Graph::cycle(4)));
    }

    #[test]
    fn audit_of_k6_resolves_every_minor_directly() {
        let report = audit_minimality(&Graph::complete(6), |_| false, ExecMode::Sequential);
        assert!(report.all_resolved());
        for m in &report.minors {
            assert!(matches!(m.evidence, KnotlessEvidence::TwoApex(_)));
        }
    }

    #[test]
    fn audit_picks_up_catalog_entries() {
        let k5_key = canonical_key(&Graph::complete(5));
        let report = audit_minimality(
            &Graph::complete(6),
            |k| *k == k5_key,
            ExecMode::Sequential,
        );
        let k5_audit = report.minors.iter().find(|m| m.key == k5_key).unwrap();
        // Direct 2-apex evidence is tried before the catalog.
        assert!(matches!(k5_audit.evidence, KnotlessEvidence::TwoApex(_)));
    }

    #[test]
    fn catalog_parsing() {
        let k = canonical_key(&Graph::complete(5));
        let text = format!("{}\tknown\n", k.as_str());
        let parsed = parse_catalog(&text).unwrap();
        assert_eq!(parsed, vec![(k, "known".to_string())]);
        assert!(matches!(parse_catalog("nonsense"), Err(CatalogError::Malformed(1, _))));
    }
}
