//! Marked triangulations: a loose triangulation plus a set of marked edge
//! classes, with cached skeleton data.

use crate::sign::{signature, Signature};
use crate::skeleton::Skeleton;
use crate::tri::{LooseTriangulation, TriError};
use std::collections::BTreeSet;
use std::sync::Arc;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MarkError {
    #[error(transparent)]
    Tri(#[from] TriError),
    #[error("marked id {0} is not an edge class")]
    BadMarkedId(usize),
}

/// A loose triangulation together with marked edge classes. Immutable;
/// the skeleton is computed once and shared.
#[derive(Clone, Debug)]
pub struct MarkedTriangulation {
    tri: LooseTriangulation,
    marked: BTreeSet<usize>,
    skeleton: Arc<Skeleton>,
}

impl PartialEq for MarkedTriangulation {
    fn eq(&self, other: &Self) -> bool {
        self.tri == other.tri && self.marked == other.marked
    }
}
impl Eq for MarkedTriangulation {}

impl MarkedTriangulation {
    pub fn new(tri: LooseTriangulation, marked: BTreeSet<usize>) -> Result<Self, MarkError> {
        let skeleton = Arc::new(Skeleton::compute(&tri)?);
        for id in &marked {
            if *id >= skeleton.edges.len() {
                return Err(MarkError::BadMarkedId(*id));
            }
        }
        Ok(MarkedTriangulation {
            tri,
            marked,
            skeleton,
        })
    }

    pub fn unmarked(tri: LooseTriangulation) -> Result<Self, MarkError> {
        Self::new(tri, BTreeSet::new())
    }

    /// Assembles a value from parts already known to be consistent.
    pub(crate) fn from_parts(
        tri: LooseTriangulation,
        marked: BTreeSet<usize>,
        skeleton: Skeleton,
    ) -> Self {
        MarkedTriangulation {
            tri,
            marked,
            skeleton: Arc::new(skeleton),
        }
    }

    pub fn tri(&self) -> &LooseTriangulation {
        &self.tri
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn n_tets(&self) -> usize {
        self.tri.n_tets()
    }

    pub fn signature(&self) -> Signature {
        signature(&self.tri, &self.skeleton, &self.marked)
    }

    pub fn is_marked(&self, edge_class: usize) -> bool {
        self.marked.contains(&edge_class)
    }
}
