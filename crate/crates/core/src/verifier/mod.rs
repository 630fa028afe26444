//! The verification pipeline: symmetry reductions, exhaustive flipclass
//! sweeps per (group, gap), the factor-dictionary algorithm with its
//! summary statistics, refinement checking, interval congruence
//! experiments, and report emission.

mod congruence;
mod crowns;
mod gamma;
mod reduce;
mod report;
mod run;
mod sweep;
mod table;

pub use congruence::{congruence_check, CongruenceDiscrepancy, CongruenceReport};
pub use crowns::five_crown_search;
pub use gamma::{GammaEntry, GammaTable, GammaValue, Provenance};
pub use reduce::{flipclass_admissible, reduced_start_elements, verify_reduction_soundness};
pub use report::{
    write_congruence_json, write_gamma_json, write_table_csv, write_violations_json,
    ReportMeta,
};
pub use run::{
    default_roster, extended_roster, parse_roster, run_gamma, verify_refinement, PoolItem,
    RosterRow, RunConfig, RunOutcome, StatsRow, ViolationKind, ViolationRecord,
};
pub use sweep::{
    flipclass_digest, fnv64, sweep, sweep_cached, Reductions, SweepItem, SweepOutput,
};
pub use table::{compare_to_paper, paper_row, PaperRow, PAPER_TABLE};
