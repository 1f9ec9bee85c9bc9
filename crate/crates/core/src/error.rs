use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("precision must be at least 64 mantissa bits, got {0}")]
    PrecisionTooLow(u32),

    #[error("dilogarithm argument {re} + {im}i lies on the branch cut (1, +inf)")]
    DilogBranchCut { re: f64, im: f64 },

    #[error("invalid level r={r}, s={s}: {reason}")]
    InvalidLevel {
        r: u32,
        s: u32,
        reason: &'static str,
    },

    #[error("color {color} is outside I_{r} (maximum (r-2)/2)")]
    ColorOutOfRange { color: String, r: u32 },

    #[error("triple ({0}) is not admissible")]
    Inadmissible(String),

    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(u32),

    #[error("brute-force enumeration of {size} colorings exceeds the limit of {limit}")]
    EnumerationTooLarge { size: u128, limit: u128 },

    #[error("dihedral angle {0} is outside [0, pi]")]
    AngleOutOfRange(f64),

    #[error("degenerate tetrahedron: {0}")]
    DegenerateTetrahedron(&'static str),

    #[error("Turaev-Viro invariant vanishes, its logarithm is undefined")]
    ZeroInvariant,

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("least-squares design matrix is rank deficient")]
    RankDeficient,

    #[error("not enough data: {0}")]
    NotEnoughData(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 3,
            Error::Io(_) => 1,
            _ => 2,
        }
    }
}
