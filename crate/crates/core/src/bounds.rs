//! Size limits for the exponential enumerations.

use crate::error::{Error, Result};

/// Limits guarding every enumeration whose cost is exponential in the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Edge limit for spanning-subgraph enumeration (`2^edges` subsets).
    pub max_edges: usize,
    /// Vertex limit for the forest dynamic program.
    pub max_forest_vertices: usize,
    /// Vertex limit for general graphs (independence recursion, independent-set
    /// enumeration). Never more than 64.
    pub max_vertices: usize,
    /// Generator limit for inclusion-exclusion over monomial ideal generators.
    pub max_generators: usize,
}

pub const ENV_MAX_EDGES: &str = "NRR_MAX_EDGES";
pub const ENV_MAX_VERTICES: &str = "NRR_MAX_VERTICES";

/// Bitmask-based routes cannot address more vertices than this.
pub const HARD_VERTEX_LIMIT: usize = 64;

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_edges: 24,
            max_forest_vertices: 40,
            max_vertices: 25,
            max_generators: 20,
        }
    }
}

impl Bounds {
    /// Defaults overridden by `NRR_MAX_EDGES` and `NRR_MAX_VERTICES`.
    pub fn from_env() -> Result<Self> {
        let mut bounds = Self::default();
        if let Some(v) = read_env(ENV_MAX_EDGES)? {
            bounds.max_edges = v;
        }
        if let Some(v) = read_env(ENV_MAX_VERTICES)? {
            bounds.max_vertices = v.min(HARD_VERTEX_LIMIT);
        }
        Ok(bounds)
    }

    pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::BoundExceeded {
                what,
                actual,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

fn read_env(name: &'static str) -> Result<Option<usize>> {
    match std::env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidEnv { name, value: raw }),
        Err(_) => Ok(None),
    }
}
