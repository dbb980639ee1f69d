//! Obstruction-set search toolkit for knotless embedding of graphs:
//! ∇Y/Y∇ families, expansions, minors, apex filters, linking-number
//! certificates, and exact PL spatial invariants.

pub mod apex;
pub mod canon;
pub mod catalog;
pub mod classify;
pub mod exec;
pub mod expand;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod minor;
pub mod moves;
pub mod planar;

pub use apex::{k_apex, ApexWitness};
pub use catalog::{addition_families, h8e_family_split, standard_catalogs, AdditionSweep, SeedSplit};
pub use classify::{
    classify_family, criterion1, criterion2, propagate_status, stream_filter, suppressed_key,
    suppresses_into, Catalogs, ClassifyError, Exclusion, FamilyReport, IkStatus, StageCounts,
    StatusRecord, StreamReport, StreamStage,
};
pub use expand::{edge_additions, expansions_to_size, vertex_splits, ExpandError};
pub use family::{descendant_closure, family_closure, DumpError, Family, FamilyGraphRecord};
pub use minor::{
    audit_minimality, contains_subgraph, one_step_minors, verify_minor_witness,
    KnotlessEvidence, MinimalityReport, MinorOp, MinorWitness,
};
pub use canon::{automorphisms, canonical_form, canonical_key, is_isomorphic, CanonicalKey, IsoSet};
pub use exec::ExecMode;
pub use graph::{EdgeListError, Graph};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use moves::{has_ybar, tri_to_y, y_to_tri};
pub use planar::is_planar;
