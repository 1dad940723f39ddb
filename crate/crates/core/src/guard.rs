//! Resource ceilings for the exhaustive searches.
//!
//! Tuple enumeration and orbit traversal are exponential in the worst
//! case; every entry point that searches takes a [`ResourceGuard`] and
//! fails with [`Error::ResourceExceeded`](crate::Error::ResourceExceeded)
//! instead of running away. Exceeding a ceiling is always an explicit
//! error, never a silent truncation.

/// Ceilings on search work and stored state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceGuard {
    /// Maximum number of search-tree nodes an enumeration may visit.
    pub node_ceiling: u64,
    /// Maximum number of states an orbit traversal may keep in memory.
    pub state_ceiling: u64,
}

impl Default for ResourceGuard {
    fn default() -> Self {
        ResourceGuard {
            node_ceiling: 100_000_000,
            state_ceiling: 10_000_000,
        }
    }
}

impl ResourceGuard {
    /// Guard with both ceilings set to `limit`.
    pub fn with_limit(limit: u64) -> Self {
        ResourceGuard {
            node_ceiling: limit,
            state_ceiling: limit,
        }
    }

    /// Default ceilings, overridden by `HDL_NODE_CEILING` when set.
    ///
    /// The variable applies to both ceilings; a malformed value is
    /// ignored in favour of the defaults.
    pub fn from_env() -> Self {
        match std::env::var("HDL_NODE_CEILING") {
            Ok(v) => match v.trim().parse::<u64>() {
                Ok(n) => ResourceGuard::with_limit(n),
                Err(_) => ResourceGuard::default(),
            },
            Err(_) => ResourceGuard::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let g = ResourceGuard::default();
        assert_eq!(g.node_ceiling, 100_000_000);
        assert_eq!(g.state_ceiling, 10_000_000);
    }

    #[test]
    fn with_limit_sets_both() {
        let g = ResourceGuard::with_limit(42);
        assert_eq!(g.node_ceiling, 42);
        assert_eq!(g.state_ceiling, 42);
    }
}
