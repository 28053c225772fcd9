//! Finite groups as multiplication tables, presentations, built-in
//! families, and subgroup searches.

mod family;
mod io;
mod subgroup;
mod table;
mod witness;
mod word;

pub use family::{make_family, parse_family, Family};
pub use io::{parse_table, write_table};
pub use subgroup::{sylow, transversal, Subgroup};
pub use table::{FiniteGroup, MAX_ORDER};
pub use witness::{find_subgroup_witness, is_listed_family, BadKind, BadSubgroup, FamilyTag};
pub use word::{Letter, Presentation, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table failed audit: {0}")]
    AuditFailed(String),
    #[error("group order {0} exceeds the supported maximum of 4096")]
    OrderTooLarge(usize),
    #[error("unsupported family `{0}`")]
    UnsupportedFamily(String),
    #[error("invalid presentation: {0}")]
    BadPresentation(String),
    #[error("invalid word: {0}")]
    BadWord(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
