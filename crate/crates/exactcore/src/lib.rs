//! Exact dense linear algebra over small finite fields.
//!
//! This crate is the arithmetic bedrock for the workbench: finite fields
//! GF(p^m) up to 1024 elements (`field`), and dense matrices with
//! field-specialised packing plus deterministic elimination (`matrix`).
//! Everything downstream — algebras by structure constants, module theory,
//! bimodule cones — reduces to the four primitives exported here: products,
//! reduced echelon forms, kernels and right-hand solves.

mod field;
mod matrix;

pub use field::{make_field, Field, FieldError, FieldSpec, Scalar, MAX_Q};
pub use matrix::{Echelonizer, FMatrix, LinError, Quotient};
