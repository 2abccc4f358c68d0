//! Invariants of numerical semigroups and of the monomial curves they
//! parametrize: gaps, Apéry sets, effective weight and endomorphism gaps;
//! exhaustive enumeration by genus; minimal binomial presentations of the
//! semigroup ideal with an independent soundness oracle; graded dimensions
//! of the first cotangent module; and the resulting lower and upper bounds
//! for the dimension of the moduli stratum of pointed curves with prescribed
//! Weierstrass semigroup, `3g - 2 - ewt <= dim <= 2g - 2 + lambda`, with the
//! sharpened upper candidate `2g - 2 + lambda - dim T^{1,+}`.
//!
//! All arithmetic is exact: membership tables, integer lattice normal forms
//! and rational ranks by fraction-free elimination. Results are
//! deterministic and independent of the worker count.

pub mod bounds;
pub mod cotangent;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod semigroup;
pub mod tables;

pub use bounds::{bounds_report, equality_census, scan_lemma, BoundsReport};
pub use cotangent::{is_negatively_graded, t1_dimension, t1_graded, GradedT1};
pub use enumeration::{enumerate_by_genus, filter_non_negatively_graded, TreeNode};
pub use error::SemigroupError;
pub use families::{
    family_expected_invariants, family_initial_forms, family_semigroup, verify_parametrization,
    verify_syzygies,
};
pub use presentation::{
    betti_elements, factorizations, minimal_presentation, validate_presentation, Presentation,
};
pub use semigroup::{EndSet, NumericalSemigroup};
