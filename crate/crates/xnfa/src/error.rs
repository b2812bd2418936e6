use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} index {index} out of range for {state_count} states")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        state_count: usize,
    },

    #[error("state {state} has out-degree {out_degree}, deterministic mode requires exactly one successor")]
    NondeterministicUnderDfaMode { state: usize, out_degree: usize },

    /// The language has no word of positive length, so there is nothing for
    /// the single-final-state form to represent; callers fall back to a
    /// tail-only normal form.
    #[error("no accepting path of positive length remains after trimming")]
    EmptyLanguageAfterTrim,

    #[error("more than {0} distinct count vectors explored")]
    VectorSpaceExceeded(usize),

    #[error("more than {0} strongly-connected-component sequences")]
    SuperpathBudgetExceeded(usize),

    #[error("cycle lcm exceeds the state budget of {0}")]
    LcmOverflow(usize),

    #[error("coin list must be sorted, distinct, positive, and bounded by n")]
    UnsortedOrOutOfRange,

    #[error("n must be at least 2 to fit the smallest prime")]
    BelowSmallestPrime,

    #[error("prime list must be nonempty distinct primes, each at least 2")]
    InvalidPrimes,

    #[error("cycle lengths must all be at least 2")]
    InvalidCycleLengths,
}

pub type Result<T> = std::result::Result<T, Error>;
