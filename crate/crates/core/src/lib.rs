//! Exact combinatorial invariants of negative-definite plumbed 3-manifolds.
//!
//! The library computes, over arbitrary-precision rationals:
//!
//! * plumbing graphs, intersection forms, signatures, Wu classes, and the
//!   Neumann–Siebenmann invariant μ̄ ([`plumbing`]);
//! * classical knot-theoretic inputs: torus-knot signatures, lens-space
//!   d-invariants, and concordance bookkeeping ([`knots`]);
//! * lattice homology data: characteristic vectors, Laufer-minimal cycles,
//!   computation sequences, and graded roots, with an independent brute-force
//!   oracle ([`lattice`]);
//! * equivariant cell models of graded roots, their fixed-point submodels,
//!   Euler characteristics, and the Miyazawa degree ([`equivariant`]);
//! * real Frøyshov invariants in the lens and even-torus-knot regimes and the
//!   Frøyshov-inequality ledger obstructing sliceness of the (2n,1)-cables of
//!   the figure-eight knot ([`obstruction`]).
//!
//! Everything is pure and deterministic; no floating point is used anywhere.

pub mod equivariant;
pub mod knots;
pub mod lattice;
pub mod matrix;
pub mod obstruction;
pub mod plumbing;

pub use matrix::Rat;
