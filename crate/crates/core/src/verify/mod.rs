//! Brute-force oracles, census families and the sweep harness that
//! compares them with the closed forms.

mod cache;
mod census;
mod oracles;
mod sweep;

pub use cache::{OracleCache, CACHE_DIR_ENV};
pub use census::{big_degree_census, edged_graphs, edged_graphs_between, with_almost_complete};
pub use oracles::{
    ass_oracle, ass_oracle_with_limit, depth_zero_oracle, depth_zero_oracle_with_limit,
    first_persistence_violation, local_v_oracle, persistence_check, stable_ass_localization,
    strong_persistence_check, v_oracle, v_oracle_with_limit, PersistenceOutcome,
    PersistenceViolation, StrongPersistenceOutcome, VWitness, ORACLE_LIMIT,
};
pub use sweep::{
    analyze_graph, exit_code, markdown_summary, read_jsonl, sweep, sweep_graphs, write_jsonl,
    AnalysisConfig, Check, CheckOutcome, PowerRecord, Status, SweepConfig, VerificationReport,
    REPORT_SCHEMA_VERSION,
};
