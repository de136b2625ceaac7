//! Exact polynomial algebra: sparse multivariate polynomials, dense
//! univariate arithmetic with Sturm chains, and real root isolation.

pub mod roots;
pub mod sparse;
pub mod univariate;

pub use roots::{
    isolate_roots, isolate_roots_uni, merge_roots, merge_roots_uni,
    sign_at_root, IsolatedRoot, MergedRoot, RootKind,
};
pub use sparse::{Sign, SparsePolynomial};
pub use univariate::{SturmChain, UniPoly};
