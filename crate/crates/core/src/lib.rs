//! Exact-arithmetic toolkit for finite-dimensional Hom-associative
//! trialgebras: construct them from structure constants, check the defining
//! axioms with witnesses, compute derivation/centroid-type subspaces as exact
//! rational nullspaces, realize the derived algebraic constructions, and
//! compare algebras through invariants and an exhaustive finite-field
//! isomorphism search.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from multiple threads.

pub mod algebra;
pub mod axioms;
pub mod catalog;
pub mod constructions;
pub mod isomorphism;
pub mod linalg;
pub mod subspaces;
