//! Combinatorial link diagrams in planar-diagram (PD) form.
//!
//! A crossing is a quadruple `X[a,b,c,d]` of arc labels read counterclockwise
//! around the crossing, starting from the incoming under-strand. The under-strand
//! therefore joins slots 0 and 2, the over-strand joins slots 1 and 3.
//!
//! ```text
//!              c (slot 2)
//!              |
//!   d (slot 3) ---|--- b (slot 1)      over-strand b-d drawn on top
//!              |
//!              a (slot 0), incoming under-strand
//! ```
//!
//! The 0-smoothing joins `(a,b)` and `(c,d)`; this is the A-smoothing of the
//! Kauffman bracket. The 1-smoothing joins `(b,c)` and `(d,a)`.

mod diagram;
pub mod gen;
mod order;
mod pd;
mod planar;

pub use diagram::{
    Component, CrossingSite, Diagram, DiagramJson, R1Report, Resolution, Smoothing, TwistRegion,
};
pub use order::{scan_order, ScanOrder};
pub use pd::parse_pd;
pub use planar::{ArcLabel, DirectedArc, End, Strand, Tangle, TangleIso, TwistInsertion};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed diagram: arc {label} occurs {count} times (expected 2)")]
    MalformedArc { label: ArcLabel, count: usize },
    #[error("empty diagram: no crossings and no loops declared")]
    Empty,
    #[error("diagram is not planar (Euler characteristic check failed)")]
    NonPlanar,
    #[error("PD syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid crossing index {index} (diagram has {count} crossings)")]
    InvalidCrossing { index: usize, count: usize },
    #[error("orientation vector has length {got}, diagram has {expected} components")]
    OrientationLength { got: usize, expected: usize },
    #[error("invalid twist site: {0}")]
    InvalidSite(String),
    #[error("tangle has {0} boundary points; a closed diagram needs none")]
    NotClosed(usize),
    #[error("invalid JSON diagram: {0}")]
    Json(String),
}
