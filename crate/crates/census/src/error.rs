use thiserror::Error;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid mask {0:?}: expected a hex value below 0x8000")]
    Mask(String),
    #[error("unknown table {0:?}; expected one of T1, T2, T3, T4_orders, T5, T8, T9, T10, census")]
    UnknownTable(String),
    #[error("unknown format {0:?}; expected text, csv or json")]
    UnknownFormat(String),
    #[error("bad product notation {0:?}")]
    Notation(String),
    #[error(transparent)]
    Core(#[from] sigpet::Error),
}

pub type Result<T> = std::result::Result<T, CensusError>;
