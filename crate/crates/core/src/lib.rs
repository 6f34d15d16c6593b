//! Exact degree-extensions and min/max chromatic sums of small graphs.
//!
//! A *complete degree-extension* of an even-order graph adds a perfect
//! matching of its complement, raising every degree by one. The crate
//! enumerates such extensions, computes the minimum and maximum color sum
//! over all colorings that use exactly χ(G) colors, and checks a family of
//! closed-form predictions against those exact values. Everything here is
//! exponential and meant for graphs of a few dozen vertices at most.
//!
//! Every search entry point checks the graph order against
//! [`size_limit`], which defaults to [`DEFAULT_SIZE_LIMIT`] and can be
//! overridden through the `GCSUM_SIZE_LIMIT` environment variable.

pub mod chromatic;
pub mod error;
pub mod extension;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod patterns;
pub mod report;

pub use chromatic::{chi_sums, chromatic_number, Coloring, SumReport};
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph};
pub use matching::Matching;

/// Default cap on the order of graphs handed to exponential searches.
pub const DEFAULT_SIZE_LIMIT: usize = 24;

/// Name of the environment variable that overrides [`DEFAULT_SIZE_LIMIT`].
pub const SIZE_LIMIT_ENV: &str = "GCSUM_SIZE_LIMIT";

/// Current vertex cap for exponential searches.
pub fn size_limit() -> usize {
    std::env::var(SIZE_LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.min(graph::MAX_VERTICES))
        .unwrap_or(DEFAULT_SIZE_LIMIT)
}

pub(crate) fn check_size(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeLimitExceeded { n, limit })
    } else {
        Ok(())
    }
}
