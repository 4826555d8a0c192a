//! Exact matrix categories over involutive commutative semirings.
//!
//! Objects are finite non-empty label sets, arrows are scalar matrices, and
//! the adjoint is the involuted transpose. On top of that core the crate
//! builds unit objects and scalar actions, tensor products through their
//! universal property, direct sums as orthogonal coproducts, entangled-state
//! partial traces, and a cloning analyzer. Every algebraic law the
//! construction promises is registered in [`laws`] as an executable,
//! seed-deterministic check.
//!
//! Start with the `examples/` directory: each file is a runnable tour of one
//! capability (`cargo run --example born_rule`, etc). The `qcat` binary is a
//! thin front end over the same library surface.

pub mod arrow;
pub mod biproduct;
pub mod charpoly;
pub mod dsl;
pub mod error;
pub mod format;
pub mod laws;
pub(crate) mod linalg;
pub mod mixed;
pub mod object;
pub mod rng;
pub mod scalar;
pub mod tensor;
pub mod unit;

pub use arrow::{Arrow, UnitarityFlags};
pub use error::{QcatError, Result};
pub use object::FinObject;
pub use scalar::{Bool, CapabilitySet, Cx64, F2, F5, Gauss, Rat, Scalar, Sqrt2Ext};
