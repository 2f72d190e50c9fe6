//! Topological classification of DNA site-specific recombination products.
//!
//! The central object is a four-parameter family of links carrying at most
//! four rows of signed crossings. The library classifies family members,
//! computes minimal crossing numbers through a case table, predicts
//! recombination products for substrate/recombinase pairs, enumerates the
//! family by crossing number, and checks every symbolic claim against an
//! independent planar-diagram / Jones-polynomial oracle.

pub mod construct;
pub mod diagram;
pub mod enumerate;
pub mod family;
pub mod fingerprint;
pub mod laurent;
pub mod mcn;
pub mod recombination;
pub(crate) mod tangle;

/// CLI entry point; returns the process exit code.
pub fn run() -> i32 {
    eprintln!("CLI not wired up yet");
    2
}

use std::sync::OnceLock;

/// Environment variable limiting the oracle's worker threads.
pub const THREADS_ENV: &str = "RECOMB_KNOTS_THREADS";

static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();

/// Shared worker pool for bracket state sums and sweeps. Thread count is
/// taken from `RECOMB_KNOTS_THREADS` when set, otherwise rayon's default.
pub fn thread_pool() -> &'static rayon::ThreadPool {
    POOL.get_or_init(|| {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            b = b.num_threads(n);
        }
        b.build().expect("worker pool")
    })
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("model violation: {0}")]
    ModelViolation(String),
    #[error("{what} exceeds limit {limit} (got {actual})")]
    SizeLimit { what: String, limit: u64, actual: u64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 usage/parse, 3 model violation,
    /// 4 size limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::InvalidDiagram(_) | Error::Io(_) => 2,
            Error::ModelViolation(_) => 3,
            Error::SizeLimit { .. } => 4,
        }
    }
}
