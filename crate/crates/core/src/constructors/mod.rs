//! Example categories: dual numbers, the sl₂ singular block, projective
//! functors `C_A`, and Hecke tables of symmetric groups.

mod basic;
pub mod hecke;
pub mod kl;
pub mod laurent;
pub mod perm;
pub mod rs;

pub use basic::{
    make_ca, make_s2, make_sl2_singular, projective_label, random_cartan_data, CartanData,
    CartanError,
};
pub use hecke::{hecke_elements, hecke_label, make_hecke, make_hecke_with_limit, HeckeError};
pub use kl::{kl_polynomial, kl_table, KlProducts, KlTable};
pub use laurent::{format_q_poly, LaurentPoly};
pub use perm::{PermError, Permutation};
pub use rs::{
    inverse_robinson_schensted, robinson_schensted, rs_cell_check, RsCellReport, Tableau,
    TableauPair, TableauSide,
};
