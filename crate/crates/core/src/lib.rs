//! Para-Grassmann calculus and coherent states for q-bosons at roots of
//! unity, `q = e^{iπ/k}`.
//!
//! The crate keeps two independent representations side by side:
//!
//! * [`fock`]: dense matrices on the truncated Fock space `C^{k^m}`, used as
//!   the ground-truth oracle;
//! * [`pg_algebra`], [`berezin`], [`coherent`]: the symbolic para-Grassmann
//!   calculus with Berezin integration, coherent-state projections and
//!   anti-Wick quantization.
//!
//! [`trace_engine`] connects them through the trace formula
//! `Tr A = ∫ :μ (θ|A|θ):`, and [`thermo`] gives closed forms for the
//! thermodynamics of free q-bosons.
//!
//! ```
//! use qboson::{fock, qnum::QContext, trace_engine::symbolic_trace};
//!
//! let ctx = QContext::new(3, 2).unwrap();
//! let n = fock::total_number_op(&ctx).unwrap();
//! let tr = symbolic_trace(&n).unwrap();
//! assert!((tr - n.matrix_trace()).norm() < 1e-12);
//! ```

pub mod berezin;
pub mod cli;
pub mod coherent;
pub mod error;
pub mod expr;
pub mod fock;
pub mod output;
pub mod pg_algebra;
pub mod qnum;
pub mod thermo;
pub mod trace_engine;
pub mod verify;

pub use error::{Error, Result};
pub use fock::FockOp;
pub use pg_algebra::{Monomial, PGElement};
pub use qnum::QContext;
