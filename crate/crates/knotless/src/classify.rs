//! Elimination pipeline for minor-minimality: two direct criteria, status
//! propagation along the triangle moves, staged family reports, and a
//! line-oriented graph6 stream filter.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::canon::{canonical_key, CanonicalKey};
use crate::exec::ExecMode;
use crate::family::Family;
use crate::graph::Graph;
use crate::graph6::{decode_graph6, Graph6Error};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IkStatus {
    Ik,
    Nik,
    Unknown,
}

impl fmt::Display for IkStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IkStatus::Ik => "IK",
            IkStatus::Nik => "nIK",
            IkStatus::Unknown => "unknown",
        })
    }
}

/// Why a graph cannot be a minimal obstruction (it may still be IK).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Exclusion {
    /// Minimum degree below three.
    Criterion1,
    /// Deleting the recorded edge leaves a cataloged IK graph.
    Criterion2 { deleted: (usize, usize) },
    /// A strict ancestor satisfies criterion 2.
    AncestorCriterion2 { ancestor: CanonicalKey },
    /// Some descendant is knotlessly embeddable: either it is cataloged
    /// directly or suppressing its degree-2 vertices lands in the catalog.
    NikDescendant { descendant: CanonicalKey, catalog_entry: CanonicalKey },
    /// The graph itself is in the knotless catalog.
    CatalogNik,
    /// Contracting the recorded edge leaves a cataloged IK graph.
    ContractionIk { contracted: (usize, usize), catalog_entry: CanonicalKey },
}

impl Exclusion {
    pub fn tag(&self) -> &'static str {
        match self {
            Exclusion::Criterion1 => "criterion1",
            Exclusion::Criterion2 { .. } => "criterion2",
            Exclusion::AncestorCriterion2 { .. } => "ancestor-criterion2",
            Exclusion::NikDescendant { .. } => "nik-descendant",
            Exclusion::CatalogNik => "catalog",
            Exclusion::ContractionIk { .. } => "contraction-ik",
        }
    }

    fn evidence(&self) -> String {
        match self {
            Exclusion::Criterion1 => "-".to_string(),
            Exclusion::Criterion2 { deleted: (u, v) } => format!("delete ({u}, {v})"),
            Exclusion::AncestorCriterion2 { ancestor } => ancestor.as_str().to_string(),
            Exclusion::NikDescendant { descendant, catalog_entry } => {
                if descendant == catalog_entry {
                    format!("descendant {}", descendant.as_str())
                } else {
                    format!(
                        "descendant {} reduces to {}",
                        descendant.as_str(),
                        catalog_entry.as_str()
                    )
                }
            }
            Exclusion::CatalogNik => "listed".to_string(),
            Exclusion::ContractionIk { contracted: (u, v), catalog_entry } => {
                format!("contract ({u}, {v}) -> {}", catalog_entry.as_str())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatusRecord {
    pub key: CanonicalKey,
    pub ik_status: IkStatus,
    pub mmik_excluded_by: Option<Exclusion>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("status conflict at {0}: derivably both IK and nIK")]
    ConflictingStatus(String),
    #[error("seed {0} is not a family member")]
    SeedNotInFamily(String),
    #[error("seed {0} must be marked IK or nIK")]
    UnknownSeed(String),
    #[error("graph appears in both catalogs: {0}")]
    ConflictingEvidence(String),
    #[error("catalog line {line}: expected `canonical-graph6 TAB ik|nik TAB evidence`")]
    BadCatalogLine { line: usize },
}

/// Spreads seed statuses through a family: IK travels to descendants,
/// knotless embeddability to ancestors. The result is independent of
/// seed order; a key derivable both ways is an error.
pub fn propagate_status(
    family: &Family,
    seeds: &[(CanonicalKey, IkStatus)],
) -> Result<BTreeMap<CanonicalKey, StatusRecord>, ClassifyError> {
    let mut ik: BTreeSet<CanonicalKey> = BTreeSet::new();
    let mut nik: BTreeSet<CanonicalKey> = BTreeSet::new();
    for (key, status) in seeds {
        if !family.contains(key) {
            return Err(ClassifyError::SeedNotInFamily(key.as_str().to_string()));
        }
        match status {
            IkStatus::Ik => ik.extend(family.descendants(key)),
            IkStatus::Nik => nik.extend(family.ancestors(key)),
            IkStatus::Unknown => {
                return Err(ClassifyError::UnknownSeed(key.as_str().to_string()))
            }
        }
    }
    if let Some(both) = ik.intersection(&nik).next() {
        return Err(ClassifyError::ConflictingStatus(both.as_str().to_string()));
    }
    Ok(family
        .keys()
        .map(|k| {
            let status = if ik.contains(k) {
                IkStatus::Ik
            } else if nik.contains(k) {
                IkStatus::Nik
            } else {
                IkStatus::Unknown
            };
            (k.clone(), StatusRecord { key: k.clone(), ik_status: status, mmik_excluded_by: None })
        })
        .collect())
}

/// First elimination criterion: minimum degree below three.
pub fn criterion1(g: &Graph) -> bool {
    g.min_degree().map_or(true, |d| d < 3)
}

/// Second criterion: some single edge deletion lands in the IK catalog.
/// Returns the first such edge in row-major order.
pub fn criterion2(
    g: &Graph,
    ik_catalog: &BTreeMap<CanonicalKey, String>,
) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| {
        ik_catalog.contains_key(&canonical_key(&g.delete_edge(u, v).unwrap()))
    })
}

/// IK and knotless catalogs with evidence strings.
#[derive(Debug, Clone, Default)]
pub struct Catalogs {
    pub ik: BTreeMap<CanonicalKey, String>,
    pub nik: BTreeMap<CanonicalKey, String>,
}

impl Catalogs {
    /// Builds from parsed catalog entries, rejecting keys that appear in
    /// both or repeat with disagreeing evidence.
    pub fn from_entries(
        ik: Vec<(CanonicalKey, String)>,
        nik: Vec<(CanonicalKey, String)>,
    ) -> Result<Catalogs, ClassifyError> {
        let mut cat = Catalogs::default();
        for (key, ev) in ik {
            if let Some(old) = cat.ik.insert(key.clone(), ev.clone()) {
                if old != ev {
                    return Err(ClassifyError::ConflictingEvidence(key.as_str().to_string()));
                }
            }
        }
        for (key, ev) in nik {
            if cat.ik.contains_key(&key) {
                return Err(ClassifyError::ConflictingEvidence(key.as_str().to_string()));
            }
            if let Some(old) = cat.nik.insert(key.clone(), ev.clone()) {
                if old != ev {
                    return Err(ClassifyError::ConflictingEvidence(key.as_str().to_string()));
                }
            }
        }
        Ok(cat)
    }

    /// One `key TAB ik|nik TAB evidence` line per entry, keys in order
    /// within each status, knotted entries first.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (status, map) in [("ik", &self.ik), ("nik", &self.nik)] {
            for (key, ev) in map {
                out.push_str(key.as_str());
                out.push('\t');
                out.push_str(status);
                out.push('\t');
                out.push_str(ev);
                out.push('\n');
            }
        }
        out
    }

    /// Parses `to_text` output. Keys are revalidated as canonical forms;
    /// the status field must be `ik` or `nik`.
    pub fn from_text(text: &str) -> Result<Catalogs, ClassifyError> {
        let mut ik = Vec::new();
        let mut nik = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            let mut fields = raw.splitn(3, '\t');
            let (Some(key_str), Some(status), Some(ev)) =
                (fields.next(), fields.next(), fields.next())
            else {
                return Err(ClassifyError::BadCatalogLine { line });
            };
            let graph = crate::graph6::decode_graph6(key_str)
                .map_err(|_| ClassifyError::BadCatalogLine { line })?;
            let key = canonical_key(&graph);
            if key.as_str() != key_str {
                return Err(ClassifyError::BadCatalogLine { line });
            }
            match status {
                "ik" => ik.push((key, ev.to_string())),
                "nik" => nik.push((key, ev.to_string())),
                _ => return Err(ClassifyError::BadCatalogLine { line }),
            }
        }
        Catalogs::from_entries(ik, nik)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StageCounts {
    pub total: usize,
    pub criterion1: usize,
    pub criterion2: usize,
    pub ancestor_criterion2: usize,
    pub nik_descendant: usize,
    pub contraction_ik: usize,
    pub unresolved: usize,
}

#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub records: BTreeMap<CanonicalKey, StatusRecord>,
    pub counts: StageCounts,
    /// Knotless-catalog entries actually consumed whose evidence marks
    /// them as external figure axioms.
    pub axioms_used: BTreeSet<CanonicalKey>,
}

/// Runs the staged elimination over a whole family. Stages apply in a
/// fixed order and each only sees survivors of the previous ones:
/// criterion 1, criterion 2, ancestor-satisfies-criterion-2, knotless
/// descendant, contract-edge-into-catalog; the remainder is UNRESOLVED.
pub fn classify_family(family: &Family, catalogs: &Catalogs, mode: ExecMode) -> FamilyReport {
    let mut records: BTreeMap<CanonicalKey, StatusRecord> = BTreeMap::new();
    let mut counts = StageCounts { total: family.len(), ..StageCounts::default() };
    let mut axioms_used = BTreeSet::new();

    let mut live: Vec<CanonicalKey> = Vec::new();
    for rec in family.members() {
        if criterion1(&rec.graph) {
            counts.criterion1 += 1;
            records.insert(
                rec.key.clone(),
                StatusRecord {
                    key: rec.key.clone(),
                    ik_status: IkStatus::Unknown,
                    mmik_excluded_by: Some(Exclusion::Criterion1),
                },
            );
        } else {
            live.push(rec.key.clone());
        }
    }

    let probe: Vec<(CanonicalKey, Graph)> = live
        .iter()
        .map(|k| (k.clone(), family.get(k).unwrap().graph.clone()))
        .collect();
    let hits = mode.map(probe, |(key, graph)| {
        (key, criterion2(&graph, &catalogs.ik))
    });
    let mut c2set: BTreeSet<CanonicalKey> = BTreeSet::new();
    for (key, hit) in hits {
        if let Some(deleted) = hit {
            counts.criterion2 += 1;
            c2set.insert(key.clone());
            records.insert(
                key.clone(),
                StatusRecord {
                    key,
                    ik_status: IkStatus::Ik,
                    mmik_excluded_by: Some(Exclusion::Criterion2 { deleted }),
                },
            );
        }
    }
    live.retain(|k| !records.contains_key(k));

    let mut by_ancestor: BTreeMap<CanonicalKey, CanonicalKey> = BTreeMap::new();
    for a in &c2set {
        for d in family.descendants(a) {
            if d != *a {
                by_ancestor.entry(d).or_insert_with(|| a.clone());
            }
        }
    }
    for key in std::mem::take(&mut live) {
        if let Some(ancestor) = by_ancestor.get(&key) {
            counts.ancestor_criterion2 += 1;
            records.insert(
                key.clone(),
                StatusRecord {
                    key,
                    ik_status: IkStatus::Ik,
                    mmik_excluded_by: Some(Exclusion::AncestorCriterion2 {
                        ancestor: ancestor.clone(),
                    }),
                },
            );
        } else {
            live.push(key);
        }
    }

    for key in std::mem::take(&mut live) {
        let mut found: Option<Exclusion> = None;
        if catalogs.nik.contains_key(&key) {
            found = Some(Exclusion::CatalogNik);
            axioms_note(&catalogs.nik, &key, &mut axioms_used);
        } else {
            for d in family.descendants(&key) {
                let entry = if catalogs.nik.contains_key(&d) {
                    Some(d.clone())
                } else {
                    suppresses_into(&family.get(&d).unwrap().graph, &catalogs.nik)
                };
                if let Some(entry) = entry {
                    axioms_note(&catalogs.nik, &entry, &mut axioms_used);
                    found = Some(Exclusion::NikDescendant { descendant: d, catalog_entry: entry });
                    break;
                }
            }
        }
        match found {
            Some(exclusion) => {
                counts.nik_descendant += 1;
                records.insert(
                    key.clone(),
                    StatusRecord {
                        key,
                        ik_status: IkStatus::Nik,
                        mmik_excluded_by: Some(exclusion),
                    },
                );
            }
            None => live.push(key),
        }
    }

    let probe: Vec<(CanonicalKey, Graph)> = live
        .iter()
        .map(|k| (k.clone(), family.get(k).unwrap().graph.clone()))
        .collect();
    let hits = mode.map(probe, |(key, graph)| {
        let hit = graph.edges().find_map(|(u, v)| {
            let ck = canonical_key(&graph.contract_edge(u, v).unwrap());
            catalogs.ik.contains_key(&ck).then_some(((u, v), ck))
        });
        (key, hit)
    });
    for (key, hit) in hits {
        if let Some((contracted, catalog_entry)) = hit {
            counts.contraction_ik += 1;
            records.insert(
                key.clone(),
                StatusRecord {
                    key,
                    ik_status: IkStatus::Ik,
                    mmik_excluded_by: Some(Exclusion::ContractionIk { contracted, catalog_entry }),
                },
            );
        }
    }
    live.retain(|k| !records.contains_key(k));

    for key in live {
        counts.unresolved += 1;
        records.insert(
            key.clone(),
            StatusRecord { key, ik_status: IkStatus::Unknown, mmik_excluded_by: None },
        );
    }

    FamilyReport { records, counts, axioms_used }
}

fn axioms_note(
    nik: &BTreeMap<CanonicalKey, String>,
    key: &CanonicalKey,
    used: &mut BTreeSet<CanonicalKey>,
) {
    if nik.get(key).is_some_and(|ev| ev.contains("external-figure")) {
        used.insert(key.clone());
    }
}

/// Contracts degree-2 vertices with nonadjacent neighbors one at a time,
/// checking the catalog after every step; returns the first key hit.
/// Each step preserves the homeomorphism type.
pub fn suppresses_into(
    g: &Graph,
    catalog: &BTreeMap<CanonicalKey, String>,
) -> Option<CanonicalKey> {
    let mut cur = g.clone();
    loop {
        let v = (0..cur.order()).find(|&v| {
            cur.degree(v) == 2 && {
                let nb: Vec<usize> = cur.neighbors(v).collect();
                !cur.has_edge(nb[0], nb[1])
            }
        })?;
        let w = cur.neighbors(v).next().unwrap();
        cur = cur.contract_edge(v, w).unwrap();
        let key = canonical_key(&cur);
        if catalog.contains_key(&key) {
            return Some(key);
        }
    }
}

/// Contracts away degree-2 vertices whose neighbors are nonadjacent until
/// none remain; None when nothing was suppressible.
pub fn suppressed_key(g: &Graph) -> Option<CanonicalKey> {
    let mut cur = g.clone();
    let mut changed = false;
    'outer: loop {
        for v in 0..cur.order() {
            if cur.degree(v) == 2 {
                let nb: Vec<usize> = cur.neighbors(v).collect();
                if !cur.has_edge(nb[0], nb[1]) {
                    cur = cur.contract_edge(v, nb[0]).unwrap();
                    changed = true;
                    continue 'outer;
                }
            }
        }
        break;
    }
    changed.then(|| canonical_key(&cur))
}

impl FamilyReport {
    /// Re-checks every exclusion tag against its defining condition.
    pub fn validate(&self, family: &Family, catalogs: &Catalogs) -> Result<(), String> {
        for rec in self.records.values() {
            let g = &family.get(&rec.key).ok_or("record key not in family")?.graph;
            let ok = match &rec.mmik_excluded_by {
                None => rec.ik_status == IkStatus::Unknown,
                Some(Exclusion::Criterion1) => criterion1(g),
                Some(Exclusion::Criterion2 { deleted: (u, v) }) => catalogs
                    .ik
                    .contains_key(&canonical_key(&g.delete_edge(*u, *v).map_err(|e| e.to_string())?)),
                Some(Exclusion::AncestorCriterion2 { ancestor }) => {
                    ancestor != &rec.key
                        && family.descendants(ancestor).contains(&rec.key)
                        && matches!(
                            self.records.get(ancestor).and_then(|r| r.mmik_excluded_by.as_ref()),
                            Some(Exclusion::Criterion2 { .. })
                        )
                }
                Some(Exclusion::NikDescendant { descendant, catalog_entry }) => {
                    family.descendants(&rec.key).contains(descendant)
                        && catalogs.nik.contains_key(catalog_entry)
                        && (descendant == catalog_entry
                            || suppresses_into(&family.get(descendant).unwrap().graph, &catalogs.nik)
                                .as_ref()
                                == Some(catalog_entry))
                }
                Some(Exclusion::CatalogNik) => catalogs.nik.contains_key(&rec.key),
                Some(Exclusion::ContractionIk { contracted: (u, v), catalog_entry }) => {
                    let c = g.contract_edge(*u, *v).map_err(|e| e.to_string())?;
                    canonical_key(&c) == *catalog_entry && catalogs.ik.contains_key(catalog_entry)
                }
            };
            if !ok {
                return Err(format!(
                    "{}: {:?} fails its defining condition",
                    rec.key.as_str(),
                    rec.mmik_excluded_by
                ));
            }
        }
        Ok(())
    }

    /// One line per record: `key TAB status TAB tag TAB evidence`.
    pub fn status_lines(&self) -> String {
        let mut out = String::new();
        for rec in self.records.values() {
            let (tag, ev) = match &rec.mmik_excluded_by {
                Some(x) => (x.tag(), x.evidence()),
                None => ("UNRESOLVED", "-".to_string()),
            };
            out.push_str(&format!("{}\t{}\t{}\t{}\n", rec.key.as_str(), rec.ik_status, tag, ev));
        }
        out
    }
}

pub type Predicate<'a> = (&'a str, &'a (dyn Fn(&Graph) -> bool + Sync));

#[derive(Debug)]
pub struct StreamStage {
    pub name: String,
    pub kept: usize,
    pub dropped: usize,
}

#[derive(Debug)]
pub struct StreamReport {
    pub decoded: usize,
    pub stages: Vec<StreamStage>,
    /// (1-based input line, graph) pairs passing every predicate.
    pub survivors: Vec<(usize, Graph)>,
    pub errors: Vec<(usize, Graph6Error)>,
}

/// Filters a newline-delimited graph6 stream through a predicate chain,
/// counting keeps and drops per stage. Blank lines are ignored; decode
/// failures are reported with their line numbers and do not enter any
/// stage.
pub fn stream_filter(input: &str, predicates: &[Predicate<'_>]) -> StreamReport {
    let mut report = StreamReport {
        decoded: 0,
        stages: predicates
            .iter()
            .map(|(name, _)| StreamStage { name: name.to_string(), kept: 0, dropped: 0 })
            .collect(),
        survivors: Vec::new(),
        errors: Vec::new(),
    };
    'line: for (i, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let g = match decode_graph6(line) {
            Ok(g) => g,
            Err(e) => {
                report.errors.push((i + 1, e));
                continue;
            }
        };
        report.decoded += 1;
        for (j, (_, pred)) in predicates.iter().enumerate() {
            if pred(&g) {
                report.stages[j].kept += 1;
            } else {
                report.stages[j].dropped += 1;
                continue 'line;
            }
        }
        report.survivors.push((i + 1, g));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apex::k_apex;
    use crate::canon::IsoSet;
    use crate::family::family_closure;
    use crate::fixtures::petersen;
    use crate::graph6::encode_graph6;

    fn petersen_family() -> Family {
        family_closure(&Graph::complete(6), ExecMode::Sequential)
    }

    #[test]
    fn propagation_travels_the_right_way() {
        let fam = petersen_family();
        let k6 = canonical_key(&Graph::complete(6));
        let pet = canonical_key(&petersen());
        // Petersen is triangle-free: marking it IK reaches only itself.
        let up = propagate_status(&fam, &[(pet.clone(), IkStatus::Ik)]).unwrap();
        assert_eq!(up.values().filter(|r| r.ik_status == IkStatus::Ik).count(), 1);
        // K6 has no degree-3 vertex: marking it nIK reaches only itself.
        let down = propagate_status(&fam, &[(k6.clone(), IkStatus::Nik)]).unwrap();
        assert_eq!(down.values().filter(|r| r.ik_status == IkStatus::Nik).count(), 1);
        // Marking K6 IK floods its descendants.
        let flood = propagate_status(&fam, &[(k6.clone(), IkStatus::Ik)]).unwrap();
        let n = flood.values().filter(|r| r.ik_status == IkStatus::Ik).count();
        assert_eq!(n, fam.descendants(&k6).len());
        assert!(n > 1);
        // Opposing seeds on one chain conflict.
        let err = propagate_status(&fam, &[(k6, IkStatus::Ik), (pet, IkStatus::Nik)]);
        assert!(matches!(err, Err(ClassifyError::ConflictingStatus(_))));
    }

    #[test]
    fn propagation_is_confluent() {
        let fam = petersen_family();
        let k6 = canonical_key(&Graph::complete(6));
        let k331 = canonical_key(&Graph::complete_multipartite(&[3, 3, 1]));
        let a = propagate_status(&fam, &[(k6.clone(), IkStatus::Ik), (k331.clone(), IkStatus::Ik)])
            .unwrap();
        let b = propagate_status(&fam, &[(k331, IkStatus::Ik), (k6, IkStatus::Ik)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn seeds_must_belong() {
        let fam = petersen_family();
        let stray = canonical_key(&Graph::complete(4));
        assert!(matches!(
            propagate_status(&fam, &[(stray, IkStatus::Ik)]),
            Err(ClassifyError::SeedNotInFamily(_))
        ));
    }

    #[test]
    fn criterion1_is_min_degree() {
        assert!(!criterion1(&Graph::complete(4)));
        assert!(criterion1(&Graph::cycle(5)));
        assert!(criterion1(&Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])));
    }

    #[test]
    fn criterion2_finds_a_deletion_into_the_catalog() {
        let mut ik = BTreeMap::new();
        ik.insert(canonical_key(&Graph::cycle(5)), "test".to_string());
        let chorded = Graph::cycle(5).with_edge(0, 2);
        assert_eq!(criterion2(&chorded, &ik), Some((0, 2)));
        assert_eq!(criterion2(&Graph::cycle(6), &ik), None);
    }

    #[test]
    fn staged_classification_on_a_synthetic_family() {
        let fam = petersen_family();
        let k6 = canonical_key(&Graph::complete(6));
        // Catalog the one-edge-deleted K6 so that K6 meets criterion 2,
        // and Petersen as knotless so stage four catches the rest.
        let catalogs = Catalogs::from_entries(
            vec![(
                canonical_key(&Graph::complete(6).delete_edge(0, 1).unwrap()),
                "seeded".to_string(),
            )],
            vec![(canonical_key(&petersen()), "external-figure test".to_string())],
        )
        .unwrap();
        let report = classify_family(&fam, &catalogs, ExecMode::Sequential);
        report.validate(&fam, &catalogs).unwrap();
        assert_eq!(report.counts.total, 7);
        assert_eq!(report.counts.criterion1, 0);
        assert_eq!(report.counts.criterion2, 1);
        let k6_desc = fam.descendants(&k6).len() - 1;
        assert_eq!(report.counts.ancestor_criterion2, k6_desc);
        // Everything else is an ancestor of Petersen.
        assert_eq!(
            report.counts.nik_descendant,
            7 - 1 - k6_desc
        );
        assert_eq!(report.counts.unresolved, 0);
        assert_eq!(report.records[&k6].ik_status, IkStatus::Ik);
        assert!(report.axioms_used.contains(&canonical_key(&petersen())));
        let lines = report.status_lines();
        assert_eq!(lines.lines().count(), 7);
        assert!(lines.contains("criterion2"));
    }

    #[test]
    fn suppression_contracts_degree_2_chains() {
        // C6 suppresses to a triangle.
        assert_eq!(
            suppressed_key(&Graph::cycle(6)),
            Some(canonical_key(&Graph::complete(3)))
        );
        // K4 has nothing to suppress.
        assert_eq!(suppressed_key(&Graph::complete(4)), None);
        // A degree-2 vertex on a triangle stays.
        assert_eq!(suppressed_key(&Graph::complete(3)), None);
    }

    #[test]
    fn stream_filter_counts_and_line_numbers() {
        let k5 = encode_graph6(&Graph::complete(5)).unwrap();
        let c5 = encode_graph6(&Graph::cycle(5)).unwrap();
        let p4 = encode_graph6(&Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        let input = format!("{k5}\n\n{c5}\n@@@bad@@@\n{p4}\n");
        let connected = |g: &Graph| g.is_connected();
        let delta3 = |g: &Graph| !criterion1(g);
        let report = stream_filter(
            &input,
            &[("connected", &connected), ("min-degree-3", &delta3)],
        );
        assert_eq!(report.decoded, 3);
        assert_eq!(report.errors.len(), 1);
        assert_eq!(report.errors[0].0, 4);
        assert_eq!(report.stages[0].kept, 3);
        assert_eq!(report.stages[0].dropped, 0);
        assert_eq!(report.stages[1].kept, 1);
        assert_eq!(report.stages[1].dropped, 2);
        assert_eq!(report.survivors.len(), 1);
        assert_eq!(report.survivors[0].0, 1);
    }

    #[test]
    fn order_5_graphs_with_min_degree_3_are_all_2_apex() {
        // All isomorphism classes of order-5 graphs.
        let mut classes = IsoSet::new();
        for bits in 0u64..(1 << 10) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..5 {
                for v in (u + 1)..5 {
                    if bits >> k & 1 == 1 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            classes.insert(&Graph::from_edges(5, &edges));
        }
        assert_eq!(classes.len(), 34);
        let stream: String = classes
            .keys()
            .map(|k| format!("{}\n", k.as_str()))
            .collect();
        let delta3 = |g: &Graph| !criterion1(g);
        let not_2apex = |g: &Graph| k_apex(g, 2).is_none();
        let report =
            stream_filter(&stream, &[("min-degree-3", &delta3), ("not-2-apex", &not_2apex)]);
        assert_eq!(report.decoded, 34);
        assert_eq!(report.stages[0].kept, 3);
        assert_eq!(report.stages[1].kept, 0);
        assert!(report.survivors.is_empty());
    }

    #[test]
    fn catalog_text_round_trips() {
        let cats = Catalogs::from_entries(
            vec![(canonical_key(&Graph::complete(7)), "seed".to_string())],
            vec![(canonical_key(&petersen()), "external-figure test".to_string())],
        )
        .unwrap();
        let text = cats.to_text();
        let back = Catalogs::from_text(&text).unwrap();
        assert_eq!(back.ik, cats.ik);
        assert_eq!(back.nik, cats.nik);

        assert!(matches!(
            Catalogs::from_text("oops"),
            Err(ClassifyError::BadCatalogLine { line: 1 })
        ));
        let twisted = text.replace("\tik\t", "\tboth\t");
        assert!(Catalogs::from_text(&twisted).is_err());
    }
}
