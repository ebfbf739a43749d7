//! Exact root-string combinatorics for rational circles in rational
//! homogeneous varieties G/P.
//!
//! For a complex simple Lie algebra g, a parabolic subalgebra p given by
//! crossed Dynkin nodes, and an omitted root α, the crate computes the
//! α-string decomposition of the omitted roots and from it the splitting
//! types on the root circle P¹_α of the tangent bundle `⊕ O(d_s)^{n_s}` and
//! of the curvature bundle `g ⊗ Λ²(g/p)*`. Everything is integer arithmetic.
//!
//! ```
//! use rootcircle::{NamedModel, tangent_splitting};
//!
//! let p = NamedModel::Projective(3).to_parabolic().unwrap();
//! let alpha = p.omitted_roots()[0].clone();
//! assert_eq!(tangent_splitting(&p, &alpha).unwrap().to_string(), "O(2) + O(1)^2");
//! ```

pub mod cli;
pub mod error;
pub mod p1;
pub mod parabolic;
pub mod root_system;
pub mod splitting;
pub mod strings;

pub use error::{Error, Result};
pub use p1::{tensor_reps, BStringRep};
pub use parabolic::{FlagShape, NamedModel, Parabolic, RootClass};
pub use root_system::{Family, LieType, Root, RootSystem};
pub use splitting::{
    adjoint_splitting, audit_model, curvature_report, flatness_report, tangent_splitting,
    tangent_splitting_via_quotients, AuditModel, AuditReport, AuditRow, AuditStatus,
    CurvatureReport, FlatnessReport, SplittingType,
};
pub use strings::{alpha_string_through, oracle_degree, string_inventory, AlphaString, Node, Tag};
