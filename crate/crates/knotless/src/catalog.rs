//! Derivation of the built-in IK and knotless catalogs from first
//! principles, plus the sweep that turns one-edge additions of a seed
//! into the distinct families they generate.

use std::collections::BTreeSet;

use crate::canon::{canonical_key, CanonicalKey};
use crate::classify::{propagate_status, Catalogs, ClassifyError, IkStatus};
use crate::exec::ExecMode;
use crate::expand::{edge_additions, ExpandError};
use crate::family::{family_closure, Family};
use crate::fixtures::{
    h8_plus_e, heawood_plus_distance3_edge, join_degree3_pair, order9_ik_pair, t_graphs,
};
use crate::graph::Graph;

/// The H8+e family split into knotted and knotless halves, together with
/// the seed graphs that drive the split.
#[derive(Debug, Clone)]
pub struct SeedSplit {
    pub family: Family,
    pub ik: BTreeSet<CanonicalKey>,
    pub nik: BTreeSet<CanonicalKey>,
    pub h8_plus_e: Graph,
    pub f9_plus_e: Graph,
    pub h9_plus_e: Graph,
}

/// Builds the 125-member family of H8+e and partitions it: descendants
/// of the two knotted seeds are IK, ancestors of the six T graphs are
/// knotless. The two order-9 seeds are told apart by which one joins
/// into this family.
pub fn h8e_family_split(mode: ExecMode) -> Result<SeedSplit, ClassifyError> {
    let k7fam = family_closure(&Graph::complete(7), mode);
    let h8e = h8_plus_e(&k7fam);
    let family = family_closure(&h8e, mode);

    let (a, b) = order9_ik_pair(&k7fam);
    let ae = join_degree3_pair(&a);
    let be = join_degree3_pair(&b);
    let (f9e, h9e) = if family.contains(&canonical_key(&ae)) {
        assert!(!family.contains(&canonical_key(&be)));
        (ae, be)
    } else {
        assert!(family.contains(&canonical_key(&be)));
        (be, ae)
    };

    let mut seeds = vec![
        (canonical_key(&h8e), IkStatus::Ik),
        (canonical_key(&f9e), IkStatus::Ik),
    ];
    for t in t_graphs() {
        seeds.push((canonical_key(&t), IkStatus::Nik));
    }
    let statuses = propagate_status(&family, &seeds)?;

    let mut ik = BTreeSet::new();
    let mut nik = BTreeSet::new();
    for (key, rec) in &statuses {
        match rec.ik_status {
            IkStatus::Ik => {
                ik.insert(key.clone());
            }
            IkStatus::Nik => {
                nik.insert(key.clone());
            }
            IkStatus::Unknown => panic!("seed propagation left {} unresolved", key.as_str()),
        }
    }
    Ok(SeedSplit { family, ik, nik, h8_plus_e: h8e, f9_plus_e: f9e, h9_plus_e: h9e })
}

/// Derives the full built-in catalogs: the IK side of the H8+e family
/// plus the E9+e and H9+e families (knotted throughout), and the
/// knotless side of the H8+e family.
pub fn standard_catalogs(mode: ExecMode) -> Result<Catalogs, ClassifyError> {
    let split = h8e_family_split(mode)?;
    let mut ik: Vec<(CanonicalKey, String)> = split
        .ik
        .iter()
        .map(|k| (k.clone(), "h8+e family".to_string()))
        .collect();
    for key in family_closure(&heawood_plus_distance3_edge(), mode).keys() {
        ik.push((key.clone(), "e9+e family".to_string()));
    }
    for key in family_closure(&split.h9_plus_e, mode).keys() {
        ik.push((key.clone(), "h9+e family".to_string()));
    }
    let nik: Vec<(CanonicalKey, String)> = split
        .nik
        .iter()
        .map(|k| (k.clone(), "t-graph ancestor".to_string()))
        .collect();
    Catalogs::from_entries(ik, nik)
}

/// Distinct families generated by the one-edge additions of a set of
/// seed graphs.
#[derive(Debug, Clone)]
pub struct AdditionSweep {
    /// Addition classes in canonical-key order.
    pub seeds: Vec<CanonicalKey>,
    /// Distinct closures, in order of first discovery.
    pub families: Vec<Family>,
    /// seeds[i] belongs to families[assignment[i]].
    pub assignment: Vec<usize>,
}

impl AdditionSweep {
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.families.iter().map(|f| f.len()).collect();
        s.sort_unstable();
        s
    }
}

/// Closes every one-edge addition of every given graph and groups the
/// results into distinct families.
pub fn addition_families(graphs: &[Graph], mode: ExecMode) -> Result<AdditionSweep, ExpandError> {
    let mut reps: Vec<(CanonicalKey, Graph)> = Vec::new();
    let mut seen = BTreeSet::new();
    for g in graphs {
        let additions = edge_additions(g)?;
        for rep in additions.graphs() {
            let key = canonical_key(rep);
            if seen.insert(key.clone()) {
                reps.push((key, rep.clone()));
            }
        }
    }
    reps.sort_by(|(a, _), (b, _)| a.cmp(b));

    let mut sweep = AdditionSweep { seeds: Vec::new(), families: Vec::new(), assignment: Vec::new() };
    for (key, rep) in reps {
        let at = match sweep.families.iter().position(|f| f.contains(&key)) {
            Some(i) => i,
            None => {
                sweep.families.push(family_closure(&rep, mode));
                sweep.families.len() - 1
            }
        };
        sweep.seeds.push(key);
        sweep.assignment.push(at);
    }
    sweep
        .families
        .iter()
        .for_each(|f| debug_assert!(!f.is_empty()));
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::fixtures::{g1, g2, g3, h1, h2};

    #[test]
    fn the_h8e_family_splits_96_to_29() {
        let split = h8e_family_split(ExecMode::Parallel).unwrap();
        assert_eq!(split.family.len(), 125);
        assert_eq!(split.ik.len(), 96);
        assert_eq!(split.nik.len(), 29);
        assert_eq!(split.h8_plus_e.order(), 8);
        assert_eq!(split.f9_plus_e.order(), 9);
        assert_eq!(split.h9_plus_e.order(), 9);
        assert!(!split.family.contains(&canonical_key(&split.h9_plus_e)));
    }

    #[test]
    fn standard_catalogs_have_the_expected_sizes() {
        let cat = standard_catalogs(ExecMode::Parallel).unwrap();
        assert_eq!(cat.ik.len(), 211);
        assert_eq!(cat.nik.len(), 29);
        // Every entry is a size-22 graph.
        for key in cat.ik.keys().chain(cat.nik.keys()) {
            let g = crate::graph6::decode_graph6(key.as_str()).unwrap();
            assert_eq!(g.size(), 22);
        }
        let by_family = |needle: &str| cat.ik.values().filter(|ev| ev.contains(needle)).count();
        assert_eq!(by_family("h8+e"), 96);
        assert_eq!(by_family("e9+e"), 110);
        assert_eq!(by_family("h9+e"), 5);
    }

    #[test]
    fn h1_additions_group_into_four_families() {
        let sweep = addition_families(&[h1()], ExecMode::Parallel).unwrap();
        assert_eq!(sweep.seeds.len(), 6);
        assert_eq!(sweep.sizes(), vec![1, 2, 2, 6]);
        let six = sweep.families.iter().position(|f| f.len() == 6).unwrap();
        let in_six = sweep.assignment.iter().filter(|&&i| i == six).count();
        assert_eq!(in_six, 3);
        let lone = sweep.families.iter().find(|f| f.len() == 1).unwrap();
        let rep = &lone.members().next().unwrap().graph;
        assert!(is_isomorphic(rep, &g1()));
    }

    #[test]
    fn h2_additions_group_into_two_families() {
        let sweep = addition_families(&[h2()], ExecMode::Parallel).unwrap();
        assert_eq!(sweep.sizes(), vec![2, 4]);
        let pair = sweep.families.iter().find(|f| f.len() == 2).unwrap();
        let mut hits = 0;
        for rec in pair.members() {
            if is_isomorphic(&rec.graph, &g2()) || is_isomorphic(&rec.graph, &g3()) {
                hits += 1;
            }
        }
        assert_eq!(hits, 2);
    }
}
