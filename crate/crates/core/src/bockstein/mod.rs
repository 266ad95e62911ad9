//! Mod-`p` Bockstein spectral sequences of the two model differential
//! algebras, computed page by page over `F_p` and compared with their closed
//! forms, and the admissible-word generators of `E^1` for `Q(Y)`.

mod fp;
mod generators;
mod model;
mod pages;

pub use generators::enumerate_e1_generators;
pub use model::{build_model, ModelDga, ModelKind, Monomial};
pub use pages::{
    compute_page, euler_bands_preserved, predicted_differential_rank, predicted_dim,
    verify_closed_form_pages, ClosedFormReport, PageBasis, PageDegree, PageRow,
};
