//! Exact construction of the exceptional root systems D4, F4, H4 and E8
//! out of the 3D root systems A3, B3 and H3.
//!
//! The construction runs entirely inside the Clifford algebra of Euclidean
//! 3-space taken over the golden field Q(tau), tau^2 = tau + 1, with no
//! floating point anywhere:
//!
//! * [`golden`]: arithmetic in Q(tau) over arbitrary-precision rationals.
//! * [`clifford`]: multivectors of Cl(3), the geometric product, reversal,
//!   reflections and versor sandwich actions.
//! * [`rootsys`]: root systems as exact vector sets: seeds for A3/B3/H3,
//!   reflection closure, axiom checks, Cartan matrices and Dynkin diagrams.
//! * [`versor`]: pinor groups generated by a root system's reflections,
//!   with canonical scaling, even (spinor) subgroups and conjugacy classes.
//! * [`induce`]: the 3D-to-4D lift: spinors read as 4D vectors turn
//!   Pin(A3), Pin(B3), Pin(H3) into the D4, F4 and H4 root systems.
//! * [`e8`]: the 8D step: the 240 pinors of H3 as 240 E8 roots under the
//!   reduced inner product, with Cartan matrix and Coxeter number.
//! * [`cli`]: the `spinor-roots` command-line front end.
//! * [`verify`]: the invariant suite behind `spinor-roots verify`.

use thiserror::Error;

pub mod golden;

pub mod clifford;

pub mod rootsys;

pub mod versor;

pub mod induce;

pub mod e8;

pub mod cli;

pub mod verify;

pub use golden::GoldenNum;

/// Default element cap for reflection closures and group generation.
pub const DEFAULT_CAP: usize = 10_000;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in the golden field")]
    DivisionByZero,

    #[error("reflection requires a nonzero root")]
    ZeroRoot,

    #[error("expected a pure vector, got `{0}`")]
    NotAVector(String),

    #[error("expected an even (spinor) element, got odd parity")]
    OddParity,

    #[error("not a versor: {0}")]
    NotAVersor(String),

    #[error("unknown root system `{0}` (expected A3, B3 or H3)")]
    UnknownSeed(String),

    #[error("closure exceeded the cap of {0} elements")]
    CapExceeded(usize),

    #[error("no nonvanishing height functional found after {0} attempts")]
    DegenerateFunctional(usize),

    #[error("bond product `{0}` does not match any supported edge label")]
    UnknownBond(String),

    #[error("versor norm `{0}` cannot be rescaled to 1 or 2 by a positive rational")]
    NonNormalizable(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("expected the order-240 pinor group of H3: {0}")]
    NotPinH3(String),

    #[error("vector has zero reduced norm")]
    ZeroReducedNorm,

    #[error("reflection image escaped the root set")]
    EscapedSet,

    #[error("induced vectors violate the root system axioms: {0}")]
    AxiomsViolated(String),

    #[error("{0}")]
    Construction(String),

    #[error("{0}")]
    Usage(String),

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),

    #[error("i/o failed: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
