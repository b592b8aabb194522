//! Corpus of pairs `g ⊃ h` and modules transcribed from classification
//! tables, the module-expression grammar, parametric families and the
//! verification harness.

pub mod corpus;
pub mod expr;
pub mod families;
pub mod verify;

pub use corpus::{
    corpus_dir, load_corpus, load_pv_corpus, load_witness_corpus, AlgDesc, Annotations, DimIdentity, PairExpected,
    PairRecord, PvExpected, PvRecord, WitnessClaim, WitnessRecord,
};
pub use expr::{parse_module, parse_module_for};
pub use verify::{
    run_suite, verify_pv, verify_record, verify_witness, Report, RunReport, Status, SuiteOptions, Summary, SUITES,
};
