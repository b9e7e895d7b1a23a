//! Extremal questions over block graph families: generalized block shifts,
//! family enumeration, min/max scans and tree experiments.

mod canon;
mod family;
mod gbs;
mod scan;
mod trees;

pub use canon::{canonical_form, CanonicalForm};
pub use family::{attach_clique, enumerate_family};
pub use gbs::{
    gbs_apply, gbs_difference, gbs_drop_exact, gbs_preimage_exists, proper_moves, GbsMove,
    GbsWitness,
};
pub use scan::{
    buckley_check, extremal_scan, is_caterpillar, problem_scan, BuckleyReport, ExtremalReport,
    ProblemMode, ProblemReport, ProblemRow, ScanRow,
};
pub use trees::{tree_from_pruefer, trees_with_degree_sequence};
