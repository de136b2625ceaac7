//! Exact bounds on the number of connected components of sign conditions
//! of a polynomial family on a real variety, together with the exact
//! counting oracles used to validate them.
//!
//! Layout:
//! - [`exactmath`]: arbitrary-precision arithmetic and combinatorial kernels;
//! - [`bounds`]: the bound formulas themselves;
//! - [`polyalg`]: sparse polynomials, Sturm sequences, real root isolation;
//! - [`oracle`]: brute-force component counting on low-dimensional instances;
//! - [`constructions`]: the explicit witness families the tight cases use.
//!
//! ```
//! use signbounds::{
//!     count_univariate, main_bound_uniform, BoundParams, Int, Rat, SparsePolynomial,
//! };
//!
//! let params = BoundParams::new(1, 2, 1, 2, 1).unwrap();
//! assert_eq!(main_bound_uniform(&params).unwrap().to_string(), "82");
//!
//! // X^2 - 2 realizes signs -, 0, + in 5 components on the line.
//! let x = SparsePolynomial::var(1, 0).unwrap();
//! let two = SparsePolynomial::constant(1, Rat::from(Int::from(2)));
//! let p = &(&x * &x) - &two;
//! let report = count_univariate(&[p], None).unwrap();
//! assert_eq!(report.total, 5);
//! ```

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod exactmath;
pub mod oracle;
pub mod polyalg;

pub use bounds::{
    betti_sum_bound, bpr8_bound, bpr8_bound_in_range, bpr_tight_leading, chi, chi_bound,
    counterexample_degrees_product, f_bound, grassmannian_application_bound,
    main_bound_per_degree, main_bound_uniform, tightness_lower_bound, BoundParams, BoundReport,
    Bpr8Range, DegreeSequence,
};
pub use constructions::{
    is_transversal, make_counterexample_instance, make_tightness_instance, matrix_rank,
    moment_vector, random_subspace, random_univariate_instance, transversal_family, LinearForm,
    SubspaceBasis,
};
pub use error::{Error, Result};
pub use exactmath::{binomial, binomial_big, rat_to_decimal, Int, Nat, PrefixSymmetricTable, Rat};
pub use oracle::{
    applicable_univariate_bound, count_counterexample_instance, count_grid_2d,
    count_tightness_instance, count_tightness_instance_seeded, count_univariate,
    generic_arrangement_cells, ComponentCountReport, SignCondition,
};
pub use polyalg::{
    isolate_roots, isolate_roots_uni, merge_roots, merge_roots_uni, sign_at_root, IsolatedRoot,
    MergedRoot, RootKind, Sign, SparsePolynomial, SturmChain, UniPoly,
};
