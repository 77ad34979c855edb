//! Exact-arithmetic toolkit for the parabolic Hecke eigensheaf problem on the
//! projective line with five marked points.
//!
//! Modules, bottom-up:
//! - [`qcore`]: rationals, vectors, matrices, exact solvers.
//! - [`lines16`]: the 16 lines on the quartic del Pezzo surface.
//! - [`projective`]: points of the projective line and Möbius maps.
//! - [`modstab`]: stability of parabolic bundles across weight chambers.
//! - [`heckegeo`]: Hecke-line geometry and the pencil isomorphism.
//! - [`cherncalc`]: Chern characters and cube integrals.
//! - [`solver`]: the Chern/Hecke/kernel constraint system.
//! - [`okamoto`]: the reduced Okamoto map.
//! - [`divcalc`]: divisor classes on the Hecke correspondence.
//! - [`sampling`]: seeded rational samplers for randomized checks.

pub mod cherncalc;
pub mod divcalc;
pub mod heckegeo;
pub mod lines16;
pub mod modstab;
pub mod okamoto;
pub mod projective;
pub mod qcore;
pub mod sampling;
pub mod solver;
pub mod suite;

pub use qcore::{q, QMatrix, QVector, Rational};
