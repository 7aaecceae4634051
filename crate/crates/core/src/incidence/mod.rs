//! Exact incidence counting (direct and partition-based), rich-point
//! extraction, and structural audits.

pub mod audit;
pub mod brute;
pub mod partitioned;
pub mod rich;

pub use audit::{
    audit_containment, audit_dof, audit_pairs, builtin_surfaces, ContainmentAudit, DofAudit,
    DofWitness, KstStatus, PairAudit, Surface,
};
pub use brute::{count_brute, incident_pairs};
pub use partitioned::{count_partitioned, CountOutcome, CountParams, LevelRecord};
pub use rich::{curve_counts, rich_points};
