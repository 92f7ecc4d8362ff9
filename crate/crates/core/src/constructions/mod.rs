//! Constructions of small generating sets up to radical.
//!
//! * [`sv`]: combining the elements of a partitioned generating set into one
//!   sum per part (Schmitt–Vogel and its radical-membership generalization).
//! * [`matrix`]: replacing `n + 1` generators by `n` combinations built from
//!   the maximal minors of a matrix with one nonzero entry per row.
//! * [`prop1`]: the recursive construction for
//!   `(a1*b1 + a2*b2) + (b1, b2)(g1, ..., g_{n-1})`.
//!
//! Every construction certifies its output with
//! [`Engine::radical_equal`](crate::Engine::radical_equal).

pub mod matrix;
pub mod prop1;
pub mod sv;

pub use matrix::{matrix_minors, Corollary1, MatrixConstruction, MatrixCriterionInput, MatrixRow};
pub use prop1::{Prop1Construction, Prop1Input};
pub use sv::{
    sv_sums, ConditionReport, SvCombination, SvElement, SvPartition, SvVariant, Violation,
};
