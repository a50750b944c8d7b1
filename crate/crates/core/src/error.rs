use thiserror::Error;

/// Errors produced by lattice, Fock-space, and evolution routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported spatial dimension {0} (expected 1 or 3)")]
    UnsupportedDimension(usize),

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("mismatched truncation caps or lattice between states")]
    MismatchedStates,

    #[error("Green table time extent {requested} exceeds wrap-around bound {max} (L*a/4)")]
    GreenWrapAround { requested: f64, max: f64 },

    #[error("time {0} outside the tabulated Green range [{1}, {2}]")]
    GreenOutOfRange(f64, f64, f64),

    #[error("time {0} is not on the dt grid of the table")]
    OffGridTime(f64),

    #[error("empty spacelike region for margin {0}")]
    EmptySpacelikeRegion(f64),

    #[error("integrator instability: {0}")]
    IntegratorUnstable(String),

    #[error("commutator probed at a collision configuration (particles {0} and {1})")]
    CollisionProbe(usize, usize),

    #[error("sector has fewer than two y particles (N = {0})")]
    NotEnoughY(usize),

    #[error("path leaves the spacelike set: particles {p} and {q} admit no spacelike sites at the reached times")]
    PathNotSpacelike { p: usize, q: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
