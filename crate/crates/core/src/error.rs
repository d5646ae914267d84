use std::path::PathBuf;

/// Errors raised anywhere in the toolkit.
///
/// Each variant maps onto one of the stable process exit codes used by the
/// command-line front end (see [`Error::exit_code`]).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("singularity: {0}")]
    Singularity(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("frequency {f_ghz} GHz outside model validity window [{min_ghz}, {max_ghz}] GHz")]
    ModelRange { f_ghz: f64, min_ghz: f64, max_ghz: f64 },

    #[error("degenerate pattern: {0}")]
    DegeneratePattern(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("instance of size {n} exceeds brute-force limit {max}")]
    SizeGuard { n: usize, max: usize },

    #[error("{field}: {message}")]
    Validation { field: String, message: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("verification failed: plan length {plan_m:.9} m exceeds optimum {optimum_m:.9} m")]
    Verification { plan_m: f64, optimum_m: f64 },
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 1 validation/parse, 2 model range, 3 I/O, 4 failed `--verify`.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ModelRange { .. } => 2,
            Error::Io { .. } => 3,
            Error::Verification { .. } => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
