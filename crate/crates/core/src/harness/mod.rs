//! Corpus-driven verification: theorem campaigns, the identity suite and the
//! golden table.

pub mod campaign;
pub mod corpus;
pub mod identities;
pub mod table;

pub use campaign::{
    evaluate_corpus, evaluate_entry, verify_theorem_a, verify_theorem_b, CampaignConfig,
    CampaignReport, RowOutcome, Summary, Theorem, TheoremAStatus, TheoremBStatus, VerdictRow,
};
pub use corpus::{builtin_corpus, load_corpus, parse_corpus, CorpusEntry, Expected};
pub use identities::{identity_suite, IdentityConfig, IdentityReport};
pub use table::{golden_table, render_table, GoldenRow, Target};
