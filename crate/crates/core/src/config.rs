//! Enumeration caps.
//!
//! Labeled connected DAG counts explode combinatorially, so the enumerators
//! refuse to run past a configurable vertex cap instead of hanging. Caps can
//! be raised per call site; the environment variables `LIEGRA_CAP_LABELED`
//! and `LIEGRA_CAP_ISO` override the defaults process-wide.

/// Default vertex cap for labeled enumeration.
pub const DEFAULT_CAP_LABELED: usize = 6;
/// Default vertex cap for iso-class enumeration.
pub const DEFAULT_CAP_ISO: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    pub labeled: usize,
    pub iso: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            labeled: env_cap("LIEGRA_CAP_LABELED", DEFAULT_CAP_LABELED),
            iso: env_cap("LIEGRA_CAP_ISO", DEFAULT_CAP_ISO),
        }
    }
}

impl EnumCaps {
    pub fn new(labeled: usize, iso: usize) -> Self {
        EnumCaps { labeled, iso }
    }

    /// A cap large enough for anything the representation supports; used by
    /// internal callers that have already bounded their input.
    pub fn unbounded() -> Self {
        EnumCaps {
            labeled: crate::graph::MAX_VERTICES,
            iso: crate::graph::MAX_VERTICES,
        }
    }
}

fn env_cap(var: &str, default: usize) -> usize {
    std::env::var(var)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}
