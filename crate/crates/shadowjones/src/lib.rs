//! Shadow state-sum engine for d-colored Jones invariants of framed links
//! and trivalent graphs in S^3 and in connected sums of S^2 x S^1, with the
//! analytic toolkit for Volume Conjecture scans at desk scale.
//!
//! Pipeline: shadows enter as combinatorial data ([`shadow::ShadowPolyhedron`]),
//! either built directly ([`builders`]) or from a planar link diagram; the
//! state-sum engine ([`statesum`]) contracts quantum 6j-symbols ([`qalg`])
//! over admissible colorings, exactly in the rational-function ring
//! ([`qring`]) or numerically at roots of unity; [`volume`] carries the
//! Lobachevsky-function side used to compare scans against hyperbolic
//! volume.
//!
//! The `examples/` directory is the primary tour — one runnable program per
//! capability (`cargo run --example unknot_identity`, `trefoil_invariants`,
//! `tetrahedron_graph`, `universal_links`, `diagram_pipeline`,
//! `rt_invariants`, `vc_scan`, `lobachevsky`, `shadow_files`). The thin
//! `shadowjones` binary exposes the same machinery as `build`, `jones`,
//! `vcscan` and `verify` subcommands.

pub mod builders;
pub mod cli;
pub mod qalg;
pub mod qring;
pub mod shadow;
pub mod statesum;
pub mod volume;

pub use qring::QringError;
