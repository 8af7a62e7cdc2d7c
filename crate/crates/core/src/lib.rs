//! Minimal graded free resolutions of monomial ideals in `k[x, y, z]`.

pub mod analysis;
pub mod batch;
pub mod compare;
pub mod error;
pub mod ideal;
pub mod io;
pub mod monomial;
pub mod par;
pub mod resolution;
pub mod scarf;
pub mod syzygy;
pub mod syzygy3;
pub mod taylor;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{grevlex_cmp, Coeff, Monomial, ScalarMonomial};
pub use resolution::{Entry, FreeResolution, SparseMatrix};
pub use taylor::{
    resolve, resolve_with, ColumnOrdering, PivotOrder, ResolveOptions, TaylorComplex,
};
