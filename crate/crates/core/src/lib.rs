//! Memory-forensics toolkit core.
//!
//! Ingests Volatility 3 JSON plugin output into immutable [`model::Snapshot`]s,
//! runs the [`anomaly`] rule engine over them, compares snapshots with
//! [`delta`], tracks trends with [`timeline`], generates seeded synthetic
//! corpora with [`emulate`], enriches findings with [`netintel`], and emits
//! machine-readable reports plus SVG plots via [`report`].

pub mod anomaly;
pub mod delta;
pub mod emulate;
pub mod io_util;
pub mod model;
pub mod netintel;
pub mod report;
pub mod timeline;
