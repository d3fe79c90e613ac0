use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("copy counts must be at least 1 (got {0})")]
    ZeroCopies(&'static str),

    #[error("total copy count {total} exceeds the supported limit {limit}")]
    TooManyCopies { total: u64, limit: u64 },

    #[error("purity must lie in [0, 1], got {0}")]
    InvalidPurity(f64),

    #[error("oracle dimension cap exceeded: {qubits} qubits (limit {limit})")]
    DimensionCap { qubits: u32, limit: u32 },

    #[error("unambiguous feasibility condition violated at 2J = {twice_j}: c^2 = {overlap_sq}, pi1 = {prior}")]
    Feasibility {
        twice_j: u32,
        overlap_sq: f64,
        prior: f64,
    },

    #[error("closed form and block sum disagree: {closed} vs {block_sum}")]
    SelfCheck { closed: f64, block_sum: f64 },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_purity(r: f64) -> Result<()> {
    if (0.0..=1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::InvalidPurity(r))
    }
}
