//! The bound on brute-force search spaces.

use std::sync::atomic::{AtomicU64, Ordering};

/// Default number of candidates a search may visit.
pub const DEFAULT_GUARD: u128 = 1 << 24;

static OVERRIDE: AtomicU64 = AtomicU64::new(0);

/// Current guard: an explicit [`set_limit`] wins, then the `SPEC_GUARD`
/// environment variable, then [`DEFAULT_GUARD`].
pub fn limit() -> u128 {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => std::env::var("SPEC_GUARD")
            .ok()
            .and_then(|s| s.trim().parse::<u128>().ok())
            .filter(|&g| g > 0)
            .unwrap_or(DEFAULT_GUARD),
        g => g as u128,
    }
}

/// Overrides the guard for the whole process; zero restores the default.
pub fn set_limit(limit: u64) {
    OVERRIDE.store(limit, Ordering::Relaxed);
}
