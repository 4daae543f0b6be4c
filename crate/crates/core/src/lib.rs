//! Constructive two-forest vertex partitions for 4-cycle-free graphs on the
//! torus, together with an exact-arithmetic auditor for the discharging
//! argument that backs the bound `a(G) <= 2`.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line
//! and anything touching the filesystem live in the `arbor-cli` crate.
//!
//! Module map:
//!
//! - [`graph`]: simple graphs, 2-colorings, 4-cycles, girth, triangles, blocks.
//! - [`embedding`]: rotation systems, face tracing, genus.
//! - [`structures`]: bad vertices, the auxiliary triangle graph, and the
//!   triangular-cycle configuration search.
//! - [`partition`]: the reduction-based solver and its extension procedures.
//! - [`discharging`]: charge ledgers, the three rules, and the claim audit.
//! - [`oracle`] and [`generate`]: exhaustive ground truth and instance generators.
#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod discharging;
pub mod embedding;
pub mod generate;
pub mod graph;
pub mod maps;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod structures;

pub use discharging::{AuditReport, ChargeLedger, Phase};
pub use embedding::{EmbeddingReport, FaceSet, RotationSystem};
pub use graph::{BlockDecomposition, Color, Graph, GraphError, TwoColoring, Vertex};
pub use partition::{partition, Partition, PartitionError, PartitionOptions};
pub use rational::Rational;
pub use structures::{AuxGraph, ComponentKind, TriangularCycleConfig};
