//! Exact computation of wall-and-chamber structures on the stability space
//! of a finite acyclic quiver.
//!
//! The stability space of a path algebra with `n` vertices is `ℝⁿ`, written
//! in the basis of indecomposable projectives `[P₁], …, [Pₙ]`. Every nonzero
//! dimension vector `d` cuts out a rational polyhedral cone `Θ_d` (its
//! *wall*), and the complement of all walls decomposes into finitely or
//! infinitely many open cones (*chambers*). This crate computes that
//! structure exactly, with no floating point anywhere:
//!
//! * [`quiver`] — quiver data, Euler/Tits forms, root systems;
//! * [`cone`] — a rational polyhedral cone kernel (double description);
//! * [`walls`] — the wall `Θ_d` of every dimension vector, plus the
//!   Kronecker closed-form oracle and Schur-root classification;
//! * [`stability`] — wall membership and bounded TF-equivalence decisions;
//! * [`chambers`] — exact chamber enumeration for representation-finite
//!   quivers, with unimodularity and fan-coverage verification.

pub mod chambers;
pub mod cone;
pub mod linalg;
pub mod quiver;
pub mod stability;
pub mod walls;

mod error;

pub use error::{Error, Result};

pub use chambers::{Cell, Chamber, ChamberDecomposition, CoverageReport, Sign, UnimodularReport};
pub use cone::{Cone, DimensionInfo, SegmentHit};
pub use linalg::{Int, Rat};
pub use quiver::{DimVector, Quiver, RootKind, RootLabel, Weight};
pub use stability::TfVerdict;
pub use walls::{SchurReport, WallTable};
