//! Exact-arithmetic calculus for operads of directed simple graphs and the
//! integration theory of Lie-graph algebras.
//!
//! Everything here is computed over the rationals with arbitrary-precision
//! integers; there is no floating point anywhere in the algebraic core.
//! The crate is organised around five subsystems:
//!
//! - [`graph`] — directed simple graphs, their leveled and multi-edge
//!   variants, validation, canonical forms, automorphisms, linear
//!   extensions, and enumeration;
//! - [`operad`] — partial composition products for the five graph flavors
//!   (connected, non-connected, rooted trees, ladders, multigraphs),
//!   projections between them, the distributive-law expansion, and an
//!   operad-axiom checker;
//! - [`algebra`] — weight-truncated free (dg) Lie-graph algebras on named
//!   graded generators: the arena in which all identities are verified;
//! - [`gauge`] — the integration theory: graph exponential and logarithm,
//!   the gauge product and its inverse, BCH, the bowtie gauge action, and
//!   the identity-verification suites;
//! - [`growth`] — exact counts of directed simple graphs against the
//!   lower/upper bounds that rule out finite generation.
//!
//! All values are immutable after construction and all operations are pure,
//! so shared data can be used concurrently without synchronisation.

pub mod algebra;
pub mod config;
pub mod gauge;
pub mod graph;
pub mod growth;
pub mod operad;
pub mod rational;

pub use config::EnumCaps;
pub use graph::{DirectedGraph, Flavor, GraphError, LeveledGraph, MultiGraph};
pub use rational::Rational;
