//! Exact computation with differential characters of the circle.
//!
//! The crate turns circle-valued smooth functions — presented by their
//! Fourier data N·t + C + Σ (Aₖ sin(2πkt) + Bₖ cos(2πkt)) — into classes
//! of an exact ring, multiplies them three independent ways, and proves the
//! answers agree:
//!
//! * [`spark::product_closed_form`] — the closed formula
//!   NN′/2 + CN′ − C′N + Σₖ (A′ₖBₖ − AₖB′ₖ)·πk mod ℤ, evaluated in the
//!   field ℚ(π) of [`scalars::ExactScalar`]s;
//! * [`spark::product_engine`] — the cup-product representative in the
//!   Čech–de Rham bicomplex of the three-arc cover ([`bicomplex`]),
//!   reduced to ℝ/ℤ by exact antidifferentiation;
//! * [`deligne::deligne_cup`] — the cup product in smooth Deligne
//!   cohomology, carried across the explicit spark ↔ Deligne dictionary.
//!
//! A Gauss–Legendre oracle ([`quadrature`]) cross-checks the exact values
//! in floating point, and [`nerve`] provides the generic Čech machinery
//! (differential, cup, coboundary solving, flat-bundle pairing) over
//! abstract nerves.
//!
//! Start with the runnable examples: `cargo run --example
//! closed_form_product`, or see the `sparkchar` binary for file-driven use.

pub mod bicomplex;
pub mod deligne;
pub mod fuzz;
pub mod nerve;
pub mod quadrature;
pub mod report;
pub mod scalars;
pub mod spark;
pub mod trigpoly;

pub use scalars::{CircleNumber, ExactScalar, Rational};
pub use spark::{product_closed_form, product_via_engine, CircleSpark0};
