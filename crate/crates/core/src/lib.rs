//! Exact symbolic computation with induced Whittaker modules over untwisted
//! affine `sl(n)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: exact rationals, the only number type used anywhere.
//! - [`linalg`]: sparse rational row reduction (rank, nullspace).
//! - [`seqspace`]: bi-infinite sequences, translates, pairing, genericity,
//!   annihilators, size and reconstruction.
//! - [`rootdata`]: type-A root data with a parabolic decomposition and the
//!   lower-central-series strata of its nilradical.
//! - [`affine`]: the affine Lie algebra `L(g) + Cc + Cd` and its bracket.
//! - [`engine`]: PBW straightening of the module action, the Whittaker-vector
//!   solver and tensor products.
//!
//! No floating point is used; every rank and nullspace is computed over `Q`.

pub mod affine;
pub mod engine;
pub mod linalg;
pub mod rootdata;
pub mod scalar;
pub mod seqspace;

pub use affine::{AffineAlgebra, AffineElement, AffineGenerator, Cocycle};
pub use engine::{
    ModuleElement, Mode, PbwMonomial, SolveReport, TensorElement, Truncation, WhittakerSpec,
};
pub use rootdata::{ChevalleyElement, FinBasis, Root, RootDatum, RootId};
pub use scalar::Scalar;
pub use seqspace::{BiSequence, FinVector};
