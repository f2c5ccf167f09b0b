//! Khovanov homology: the cube-of-resolutions complex, a scanning engine that
//! reduces the complex crossing by crossing, and bigraded homology over Q, F_p
//! and Z.
//!
//! Conventions: a generator at cube height `r` has homological grading
//! `t = r - n_-` and quantum grading `q = #1 - #x + r + n_+ - 2 n_-`, so the
//! unknot has rank one at `(0, ±1)` and the graded Euler characteristic is the
//! unnormalized Jones polynomial.

mod checks;
mod complex;
mod cube;
pub mod linalg;
mod ring;
mod scan;
mod table;

use thiserror::Error;

pub use checks::{
    compare_tables, orientation_shift_check, r1_invariance_check, uct_check, Dominance, ShiftCheck, TableDiff,
    UctReport,
};
pub use complex::{ChainComplex, HomologyData};
pub use cube::{build_cube, NAIVE_THRESHOLD};
pub use ring::CoefficientRing;
pub use scan::{scan_complex, scan_compute};
pub use table::{Cell, GradedTable};

use crate::linkdiag::Diagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KhError {
    #[error("{crossings} crossings exceed the naive engine threshold of {threshold}; use the scanning engine")]
    TooManyCrossings { crossings: usize, threshold: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown coefficient ring {0:?} (expected q, z, f2, fP)")]
    BadRing(String),
    #[error("table is empty")]
    EmptyTable,
    #[error("rings differ: {0} vs {1}")]
    RingMismatch(CoefficientRing, CoefficientRing),
    #[error("invalid table JSON: {0}")]
    Json(String),
    #[error("invalid reorientation: {0}")]
    Reorientation(String),
}

/// Which complex to build before taking homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Engine {
    Naive,
    Scan,
    /// Naive up to [`NAIVE_THRESHOLD`] crossings, scanning above.
    #[default]
    Auto,
}

impl std::str::FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "naive" => Ok(Engine::Naive),
            "scan" => Ok(Engine::Scan),
            "auto" => Ok(Engine::Auto),
            _ => Err(format!("unknown engine {s:?} (expected naive, scan, auto)")),
        }
    }
}

/// Chain complex of `d` from the chosen engine (homotopy equivalent either way).
pub fn complex(d: &Diagram, engine: Engine) -> Result<ChainComplex, KhError> {
    match engine {
        Engine::Naive => build_cube(d, NAIVE_THRESHOLD),
        Engine::Scan => Ok(scan_complex(d)),
        Engine::Auto if d.num_crossings() <= NAIVE_THRESHOLD => build_cube(d, NAIVE_THRESHOLD),
        Engine::Auto => Ok(scan_complex(d)),
    }
}

/// Khovanov homology of `d` over `ring`.
pub fn khovanov(d: &Diagram, ring: CoefficientRing, engine: Engine) -> Result<GradedTable, KhError> {
    let ring = ring.validate()?;
    Ok(complex(d, engine)?.homology(ring))
}
