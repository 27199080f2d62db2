//! Exact-arithmetic engine for the largest-singleton statistic of weighted
//! set partitions.
//!
//! Every block of size j in a set partition carries a weight: the symbolic
//! variable t_j, or a concrete value such as (j-1)! (cycle structures,
//! i.e. permutations), 1 for j <= 2 (involutions), or j^(j-1) (rooted
//! labeled trees). The central quantity is the total weight A(n, k) of
//! partitions of {1, ..., n+1} whose largest singleton block is {k+1}.
//!
//! The crate computes A(n, k) by three independent routes (recurrence,
//! alternating explicit sum, umbral moment evaluation), checks them against
//! a brute-force enumeration oracle, reproduces the classical triangles for
//! the permutation / involution / forest specializations, and mechanically
//! verifies a registry of related combinatorial identities over symbolic
//! weights and exact rational points.
//!
//! All arithmetic is exact; nothing in the crate rounds.

// Convolution sums are written as indexed loops to mirror the formulas.
#![allow(clippy::needless_range_loop)]

pub mod combinatorics;
pub mod egf;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod ring;
pub mod singleton;
pub mod umbral;

pub use error::{Error, Result};
