use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{op}: domain error: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("{op}: divergent: {detail}")]
    Divergence { op: &'static str, detail: String },

    #[error("{op}: tolerance not reached (best {best:e}, estimated error {est_error:e})")]
    Accuracy {
        op: &'static str,
        best: f64,
        est_error: f64,
    },

    #[error("{op}: resource guard: {detail}")]
    Resource { op: &'static str, detail: String },

    #[error("{op}: solver failed: {detail}")]
    Solver { op: &'static str, detail: String },

    #[error("{op}: no sign change: {detail}")]
    Bracket { op: &'static str, detail: String },

    #[error("{op}: degenerate configuration: {detail}")]
    Degenerate { op: &'static str, detail: String },

    #[error("{op}: pole at {at}")]
    Pole { op: &'static str, at: f64 },

    #[error("{op}: singular configuration: {detail}")]
    Singular { op: &'static str, detail: String },

    #[error("{op}: complex roots: {detail}")]
    Complexity { op: &'static str, detail: String },

    #[error("{op}: calibration failed: {detail}")]
    Calibration { op: &'static str, detail: String },

    #[error("{op}: integration failed at V = {at}: {detail}")]
    Integration {
        op: &'static str,
        at: f64,
        detail: String,
    },

    #[error("config: {field}: {detail}")]
    Config { field: String, detail: String },
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub(crate) fn config(field: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            detail: detail.into(),
        }
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config { .. } => 2,
            Error::Resource { .. } => 4,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
