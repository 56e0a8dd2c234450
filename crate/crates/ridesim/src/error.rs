use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by ingestion, configuration, and the simulation core.
#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error in {file} line {line}: {msg}")]
    Parse {
        file: String,
        line: u64,
        msg: String,
    },

    #[error("unknown node {0}")]
    UnknownNode(u64),

    #[error("no route from {origin} to {destination}")]
    NoRoute { origin: u64, destination: u64 },

    #[error("empty graph: no nodes after ingestion")]
    EmptyGraph,

    #[error("config error: {0}")]
    Config(String),

    #[error("route cache error: {0}")]
    Cache(String),

    #[error("theory model error: {0}")]
    Theory(String),

    #[error("rl error: {0}")]
    Rl(String),

    #[error("simulation aborted at tick {tick}: {msg}")]
    Engine { tick: u64, msg: String },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn parse(file: impl Into<String>, line: u64, msg: impl Into<String>) -> Self {
        Error::Parse {
            file: file.into(),
            line,
            msg: msg.into(),
        }
    }
}
