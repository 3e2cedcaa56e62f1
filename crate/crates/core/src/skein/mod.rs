//! The character algebra: trace rewriting, matrix evaluation, the
//! multicurve basis of `Σ₁,₁` and the fibers of `Σ₀,₄`.

pub mod basis;
pub mod fiber;
pub mod rep;
pub mod trace;

pub use basis::{kappa, multicurve_decompose, slope_trace, BasisKey, Decomposition};
pub use fiber::{fiber_coefficients, fiber_law, fit_fiber_at, FiberEquation, FiberLaw, Triple};
pub use rep::{AnyRep, MatrixRep};
pub use trace::{trace_reduce, TORUS_VARS};
