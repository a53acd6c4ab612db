//! Decategorified fiat 2-categories: composition multiplicity tables with an
//! involution, their cells, and the invariants of strongly regular cells.

pub mod bimodule;
pub mod cells;
pub mod cli;
pub mod constructors;
pub mod io;
pub mod iso;
pub mod lint;
pub mod model;
pub mod report;
pub mod strong;

pub use cells::{
    cells, leq_l, leq_lr, leq_r, CellKind, CellPartition, CellStructure, RegularityVerdict,
};
pub use io::{load_multicat, serialize_multicat, LoadError};
pub use iso::{find_isomorphism, Isomorphism};
pub use lint::{fiat_lint, LintReport, Status};
pub use model::{
    validate, MorphId, Morphism, MultiCat, Multiset, ObjectId, ValidationReport, Violation,
};
pub use strong::{
    cartan_blocks, cartan_matrix, cell_subcategory, check_eq62, duflo_element, m_coeff, m_table,
    CartanBlock, MTable,
};
