//! Size guards shared by every operation that materialises large objects.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on the number of vertices of a materialised power or self-map digraph.
pub const DEFAULT_SIZE_BOUND: usize = 1_000_000;

/// Default cap on the number of source vertices accepted by the homomorphism solvers.
pub const DEFAULT_SOURCE_BOUND: usize = 24;

/// Environment variable overriding [`DEFAULT_SIZE_BOUND`].
pub const SIZE_BOUND_ENV: &str = "SURJHOM_SIZE_BOUND";

/// Largest template the bitset-based solvers accept.
pub const MAX_TARGET_VERTICES: usize = 64;

/// The global materialisation bound, read once from the environment.
pub fn size_bound() -> usize {
    static BOUND: OnceLock<usize> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(SIZE_BOUND_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_SIZE_BOUND)
    })
}

pub(crate) fn check(what: &'static str, size: u128, bound: usize) -> Result<()> {
    if size > bound as u128 {
        Err(Error::SizeBound {
            what,
            size,
            bound: bound as u128,
        })
    } else {
        Ok(())
    }
}

/// `base^exp` without overflow (saturating at `u128::MAX`).
pub(crate) fn pow_saturating(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
