use crate::error::{Error, Result};

/// Default bound on brute-force search spaces, as a power of two.
pub const DEFAULT_MAX_LOG2: u32 = 26;

/// Upper bound on exhaustive search spaces.
///
/// Every enumerator checks the log2 size of its raw search space against this
/// bound before doing any work.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_log2: u32,
}

impl SizeGuard {
    pub const fn new(max_log2: u32) -> Self {
        SizeGuard { max_log2 }
    }

    /// A guard that never trips.
    pub const fn unlimited() -> Self {
        SizeGuard { max_log2: u32::MAX }
    }

    pub fn check(&self, log2: u32) -> Result<()> {
        if log2 > self.max_log2 {
            Err(Error::SizeGuard { log2, limit: self.max_log2 })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard::new(DEFAULT_MAX_LOG2)
    }
}
