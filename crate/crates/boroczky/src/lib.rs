//! Exact-arithmetic construction and analysis of Böröczky line-point
//! configurations.
//!
//! The crate builds the B12 (12 lines, 19 triple points) and B15 (15 lines,
//! 31 triple points) configurations from their parameters over a tower of
//! exact fields, classifies every degeneration of the B12 parameter space,
//! certifies that no rational B15 configuration exists via arithmetic on the
//! parameter elliptic curve, and decides the symbolic-power containment
//! `I^(3) ⊆ I^2` for the configurations' triple points.
//!
//! Heavy inner loops (incidence censuses, parameter scans, point searches,
//! interpolation matrices, modular runs) are data-parallel via rayon when the
//! `parallel` feature is enabled (default); disabling the feature, or calling
//! [`exec::set_sequential`], falls back to sequential execution with
//! identical results.

pub mod b12;
pub mod b15;
pub mod containment;
pub mod ellcurve;
pub mod exec;
pub mod polyalg;
pub mod projgeom;
pub mod render;
pub mod scalar;

#[doc(hidden)]
pub mod testutil;
