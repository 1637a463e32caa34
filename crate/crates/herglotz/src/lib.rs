//! Exact decision procedures for rational Herglotz functions.
//!
//! Everything in this crate operates on rational data: arbitrary-precision
//! rationals, Gaussian rationals, polynomials and reduced rational functions
//! over them. Decisions about irrational (real-algebraic) points are made
//! through isolating intervals and certified sign tests, never through
//! floating point. The only floating-point code lives in [`numeric`] and is
//! used purely as a cross-checking oracle.
//!
//! The main entry points are:
//! * [`scalar::check_scalar_herglotz`] for scalar functions,
//! * [`matrix::verify_criterion_ii`] / [`matrix::verify_criterion_iii`] for
//!   matrix functions via principal-minor interlacing,
//! * [`debranges::check_debranges`] / [`debranges::check_hb_n`] for the
//!   de Branges / Hermite-Biehler pipeline.

pub mod cmat;
pub mod debranges;
pub mod divisor;
pub mod error;
pub mod gauss;
pub mod json;
pub mod matfn;
pub mod matrix;
pub mod numeric;
pub mod poly;
pub mod rat;
pub mod ratfn;
pub mod roots;
pub mod rpoly;
pub mod scalar;
pub mod verdict;

pub use divisor::DivisorFn;
pub use error::Error;
pub use gauss::GaussRat;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfn::RatFn;
pub use roots::{AlgebraicReal, Point, RealRoot};
pub use rpoly::RPoly;
pub use verdict::{Outcome, Verdict};

use std::sync::atomic::{AtomicU32, Ordering};

static MAX_REFINE: AtomicU32 = AtomicU32::new(64);

/// Global cap on interval halvings per sign decision. Exceeding it yields an
/// `Undecided` outcome instead of a guess.
pub fn refine_cap() -> u32 {
    MAX_REFINE.load(Ordering::Relaxed)
}

/// Overrides the refinement cap (the CLI wires `HERGLOTZ_MAX_REFINE` here).
pub fn set_refine_cap(cap: u32) {
    MAX_REFINE.store(cap.max(1), Ordering::Relaxed);
}
