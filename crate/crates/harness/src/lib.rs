//! Exhaustive and randomized verification: corpus scans, extremal tables
//! and small Ramsey certificates.

pub mod certify;
pub mod enumerate;
pub mod extremal;
mod pool;
pub mod random;
pub mod scan;

pub use certify::{certify_small_ramsey, estimate_n0, N0Estimate, SmallRamseyCertificate};
pub use enumerate::{enumerate_graphs, enumerate_table, enumerate_up_to, ENUMERATION_CAP};
pub use extremal::{extremal_search, ExtremalRow, ExtremalTable};
pub use pool::with_jobs;
pub use scan::{parse_checks, read_corpus, scan_corpus, CheckId, CorpusReport, ScanConfig};
