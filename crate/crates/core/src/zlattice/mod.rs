//! Exact integer linear algebra: Smith normal form, finitely generated
//! abelian groups, integer kernels and Hilbert bases.

mod group;
mod hilbert;
mod matrix;
mod snf;

pub use group::{kernel_lattice, FgAbelianGroup, GroupElement};
pub(crate) use hilbert::minimal_nonzero;
pub use hilbert::{hilbert_basis, hilbert_basis_of, LinearSystem, NVec};
pub use matrix::IntMatrix;
pub use snf::{snf, SmithDecomposition};
