//! Exact combinatorics behind the "neighborly partition" identities.
//!
//! The crate builds every object involved in the signed neighborly-partition
//! identities and checks them against the Rogers-Ramanujan identities by
//! truncated power-series arithmetic:
//!
//! - [`qseries`]: dense truncated power series in `q` with checked `i64` coefficients.
//! - [`partitions`]: integer partitions and the neighborly / gap-two / residue families.
//! - [`graphs`]: the graphs `G_λ` and finite prefixes of the infinite ladder graph.
//! - [`signature`]: signed spanning-subgraph counts, by edge-subset enumeration and
//!   by the independence polynomial at `-1`.
//! - [`hilbert`]: weighted Hilbert series of edge ideals and monomial ideals,
//!   polarization, and the subgraph enumerating series.
//! - [`verify`]: named identity checks with witnesses, shared by the CLI and bindings.

pub mod bounds;
pub mod error;
pub mod graphs;
pub mod hilbert;
pub mod partitions;
pub mod qseries;
pub mod signature;
pub mod verify;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use graphs::{LabeledGraph, VertexKind, VertexLabel};
pub use hilbert::{MonomialIdealSpec, Variable, WeightMap};
pub use partitions::{Mode, Partition};
pub use qseries::{Coeff, Mismatch, Order, SeriesQ};
pub use signature::{SignatureRoute, SignedCount};
pub use verify::{Check, Identity, VerificationReport, Witness};
