//! Vertex labels of the form `base_copy`, e.g. `1_1`, `1_2`, `7_1`.
//!
//! A label is a pair of a base name and a positive copy index.  Copy indices
//! track the copies of a vertex created by wedge operations: wedging a complex
//! at vertex `v` replaces `v` by two copies, and every further wedge at a copy
//! of the same base adds one more copy with the next unused index.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A vertex label: a base name plus a positive copy index.
///
/// Labels are ordered by base name (numerically when the base parses as an
/// integer, lexicographically otherwise) and then by copy index, so vertex
/// lists have a canonical order independent of construction history.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    /// Base name shared by all copies of the same original vertex.
    pub base: String,
    /// Copy index, starting at 1.
    pub copy: u32,
}

impl VertexLabel {
    /// Creates a label from a base name and copy index.
    pub fn new(base: impl Into<String>, copy: u32) -> Self {
        VertexLabel {
            base: base.into(),
            copy,
        }
    }

    /// Creates the first copy of a base name.
    pub fn simple(base: impl Into<String>) -> Self {
        VertexLabel::new(base, 1)
    }

    /// Parses a display form: `"3"` means copy 1 of base `3`, `"3_2"` means
    /// copy 2 of base `3`.
    pub fn parse(s: &str) -> Option<Self> {
        if s.is_empty() {
            return None;
        }
        match s.rsplit_once('_') {
            Some((base, copy)) if !base.is_empty() => {
                let copy: u32 = copy.parse().ok()?;
                if copy == 0 {
                    return None;
                }
                Some(VertexLabel::new(base, copy))
            }
            _ => Some(VertexLabel::simple(s)),
        }
    }

    /// Sort key: numeric value of the base when it is one, then the base
    /// string, then the copy index.
    fn key(&self) -> (Option<u64>, &str, u32) {
        (self.base.parse().ok(), &self.base, self.copy)
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copy == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}_{}", self.base, self.copy)
        }
    }
}
